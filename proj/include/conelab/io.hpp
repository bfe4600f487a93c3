#ifndef CONELAB_IO_HPP
#define CONELAB_IO_HPP

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "errors.hpp"
#include "metric_graph.hpp"

namespace conelab {

using json = nlohmann::json;

/// {"vertices": N, "edges": [[u, v, "p/q"], ...], "labels": {"0": "..."}}
/// Edges are emitted sorted by (u, v) so serialization is deterministic.
inline json graph_to_json(const MetricGraph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    std::vector<MetricGraph::Edge> es = g.edges();
    for (auto& e : es)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    j["edges"] = json::array();
    for (const auto& e : es)
        j["edges"].push_back({e.u, e.v, rat_to_string(e.length)});
    if (!g.labels().empty()) {
        json lab = json::object();
        for (const auto& [v, s] : g.labels()) lab[std::to_string(v)] = s;
        j["labels"] = lab;
    }
    return j;
}

inline MetricGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw SchemaError("graph JSON needs \"vertices\" and \"edges\"");
    int n = j.at("vertices").get<int>();
    std::vector<MetricGraph::Edge> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2)
            throw SchemaError("edge entries must be [u, v, length]");
        MetricGraph::Edge edge;
        edge.u = e[0].get<int>();
        edge.v = e[1].get<int>();
        if (e.size() >= 3) {
            if (e[2].is_string())
                edge.length = parse_rat(e[2].get<std::string>());
            else
                edge.length = Rat(e[2].get<long long>());
        } else {
            edge.length = 1;
        }
        es.push_back(edge);
    }
    std::map<int, std::string> labels;
    if (j.contains("labels"))
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
            labels[std::stoi(it.key())] = it.value().get<std::string>();
    try {
        return MetricGraph(n, es, labels);
    } catch (const std::invalid_argument& ex) {
        throw SchemaError(std::string("invalid graph: ") + ex.what());
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& ex) {
        throw SchemaError(std::string("JSON parse error in ") + path + ": " + ex.what());
    }
    return j;
}

}  // namespace conelab

#endif
