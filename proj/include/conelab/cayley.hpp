#ifndef CONELAB_CAYLEY_HPP
#define CONELAB_CAYLEY_HPP

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "metric_graph.hpp"
#include "words.hpp"

namespace conelab {

/// A metric ball in a Cayley (or Schreier coset) graph. Vertex 0 is always
/// the identity / trivial coset; `element[i]` is the canonical word.
struct GroupBall {
    MetricGraph graph;
    std::vector<Word> element;
    std::unordered_map<Word, int> id;
    std::vector<int> depth;
    int radius = 0;
};

namespace detail {

inline std::vector<char> signed_letters(const std::vector<char>& gens) {
    std::vector<char> out;
    for (char g : gens) {
        out.push_back(g);
        out.push_back(static_cast<char>(std::toupper(g)));
    }
    return out;
}

/// Shared BFS over canonical forms; `canon` maps a raw word to the vertex key.
/// Right multiplication for Cayley graphs; left multiplication for cosets
/// (the left G-action is the one that descends to left cosets wH).
template <class Canon>
GroupBall ball_bfs(const Canon& canon, const std::vector<char>& gens, int radius,
                   long long budget, bool left_action = false) {
    if (radius < 0) throw SchemaError("ball radius must be >= 0");
    GroupBall b;
    b.radius = radius;
    auto letters = signed_letters(gens);
    b.element.push_back(canon(Word()));
    b.id[b.element[0]] = 0;
    b.depth.push_back(0);
    std::vector<MetricGraph::Edge> edges;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (b.depth[u] == radius) continue;
        for (char c : letters) {
            Word w = canon(left_action ? Word(1, c) + b.element[u]
                                       : b.element[u] + Word(1, c));
            auto it = b.id.find(w);
            int v;
            if (it == b.id.end()) {
                v = static_cast<int>(b.element.size());
                if (v >= budget)
                    throw BudgetError("group ball exceeds the vertex budget");
                b.id[w] = v;
                b.element.push_back(w);
                b.depth.push_back(b.depth[u] + 1);
                queue.push_back(v);
            } else {
                v = it->second;
            }
            if (u < v) edges.push_back({u, v, Rat(1)});
        }
    }
    b.graph = MetricGraph(static_cast<int>(b.element.size()), edges);
    return b;
}

}  // namespace detail

/// Ball of the given radius in the Cayley graph on `gens` (right
/// multiplication by generators).
inline GroupBall cayley_ball(const GroupScenario& s, const std::vector<char>& gens,
                             int radius, long long budget = 300000) {
    return detail::ball_bfs(
        [&](const Word& w) { return s.normal_form(w); }, gens, radius, budget);
}

inline GroupBall cayley_ball(const GroupScenario& s, int radius,
                             long long budget = 300000) {
    return cayley_ball(s, s.generators(), radius, budget);
}

/// Ball in the graph on left cosets wH, with edges wH -- wsH. Vertices carry
/// the canonical (shortest) coset representatives.
inline GroupBall coset_graph_ball(const GroupScenario& s, const Subgroup& h,
                                  const std::vector<char>& gens, int radius,
                                  long long budget = 300000) {
    return detail::ball_bfs(
        [&](const Word& w) { return s.coset_canonical(h, w); }, gens, radius,
        budget, /*left_action=*/true);
}

/// True when BFS over the subgroup's own generators saturates within the
/// budget, i.e. the subgroup is finite (and then its size is returned).
inline std::optional<long long> subgroup_size(const GroupScenario& s,
                                              const Subgroup& h,
                                              long long budget = 5000) {
    auto gens = s.subgroup_generators(h);
    if (gens.empty()) return 1;
    auto letters = detail::signed_letters(gens);
    std::set<Word> seen{Word()};
    std::deque<Word> queue{Word()};
    while (!queue.empty()) {
        Word u = queue.front();
        queue.pop_front();
        for (char c : letters) {
            Word w = s.normal_form(u + Word(1, c));
            if (seen.insert(w).second) {
                if (static_cast<long long>(seen.size()) > budget)
                    return std::nullopt;  // still growing: treat as infinite
                queue.push_back(w);
            }
        }
    }
    return static_cast<long long>(seen.size());
}

/// Exact torsion test: in a free product, an element has finite order iff its
/// cyclic reduction lies in a single finite cyclic factor (semidirect factors
/// are torsion-free).
inline bool has_finite_order(const GroupScenario& s, const Word& w) {
    Word n = s.normal_form(w);
    while (true) {
        if (n.empty()) return true;
        std::vector<std::pair<int, Word>> syl;
        for (char c : n) {
            int f = s.factor_of(c);
            if (syl.empty() || syl.back().first != f) syl.emplace_back(f, Word());
            syl.back().second.push_back(c);
        }
        if (syl.size() == 1) {
            if (auto* c = std::get_if<CyclicFactor>(&s.factors()[syl[0].first]))
                return c->order > 0;
            return false;
        }
        if (syl.front().first != syl.back().first) return false;
        // conjugate by the last syllable; the syllable count strictly drops
        n = s.normal_form(syl.back().second +
                          n.substr(0, n.size() - syl.back().second.size()));
    }
}

struct HeightProbe {
    int height_lower_bound = 0;
    Word witness;                    // infinite-order element realizing it
    std::vector<Word> coset_reps;    // the distinct cosets conjugating it in
    bool subgroup_finite = false;
};

/// Lower bound on the height of H: the largest number of distinct cosets gH
/// whose conjugates gHg^{-1} share one infinite-order element of the ball.
/// Finite subgroups report height 0 directly.
inline HeightProbe height_probe(const GroupScenario& s, const Subgroup& h,
                                int radius, long long budget = 100000) {
    HeightProbe out;
    if (subgroup_size(s, h).has_value()) {
        out.subgroup_finite = true;
        return out;
    }
    auto ball = cayley_ball(s, radius, budget);
    std::vector<Word> reps;
    {
        std::set<Word> seen;
        for (const auto& g : ball.element)
            if (seen.insert(s.coset_canonical(h, g)).second)
                reps.push_back(s.coset_canonical(h, g));
    }
    for (const auto& w : ball.element) {
        if (w.empty() || has_finite_order(s, w)) continue;
        std::vector<Word> hits;
        for (const auto& r : reps)
            if (s.contains(h, s.multiply(s.multiply(s.inverse(r), w), r)))
                hits.push_back(r);
        if (static_cast<int>(hits.size()) > out.height_lower_bound) {
            out.height_lower_bound = static_cast<int>(hits.size());
            out.witness = w;
            out.coset_reps = hits;
        }
    }
    return out;
}

/// Exact word-length of `w` via a meet-in-the-middle ball of radius
/// ceil(bound/2); the result is exact whenever it is <= 2 * that radius.
struct AmbientLength {
    long long length = 0;
    bool exact = false;
};

inline std::optional<AmbientLength> ambient_length(const GroupScenario& s,
                                                   const std::vector<char>& gens,
                                                   const Word& w, int bound,
                                                   long long budget = 300000) {
    int r = (bound + 1) / 2;
    auto ball = cayley_ball(s, gens, r, budget);
    Word n = s.normal_form(w);
    auto direct = ball.id.find(n);
    if (direct != ball.id.end())
        return AmbientLength{ball.depth[direct->second], true};
    std::optional<long long> best;
    for (size_t i = 0; i < ball.element.size(); ++i) {
        Word rest = s.multiply(s.inverse(ball.element[i]), n);
        auto it = ball.id.find(rest);
        if (it == ball.id.end()) continue;
        long long d = ball.depth[i] + ball.depth[it->second];
        if (!best || d < *best) best = d;
    }
    if (!best) return std::nullopt;
    return AmbientLength{*best, *best <= 2LL * r};
}

struct DistortionRow {
    int k = 0;
    long long fiber_length = 0;       // reduced length of phi^k(seed) in the fiber
    long long ambient_upper = 0;      // via the conjugation witness t^k seed t^-k
    std::optional<long long> ambient; // exact ambient length when computed
    double ratio = 0;                 // fiber_length / best known ambient length
};

/// Fiber-vs-ambient growth of phi^k(seed) in a semidirect scenario.
inline std::vector<DistortionRow> distortion_profile(
    const GroupScenario& s, char seed, int k_max, int exact_up_to = 4,
    long long budget = 300000) {
    if (s.factors().size() != 1 ||
        !std::holds_alternative<SemidirectFactor>(s.factors()[0]))
        throw SchemaError("distortion profile needs a semidirect scenario");
    std::vector<DistortionRow> rows;
    Word w(1, seed);
    for (int k = 0; k <= k_max; ++k) {
        DistortionRow row;
        row.k = k;
        row.fiber_length = static_cast<long long>(free_reduce(w).size());
        row.ambient_upper = std::min<long long>(2LL * k + 1, row.fiber_length);
        if (k <= exact_up_to) {
            auto got = ambient_length(s, s.generators(), w,
                                      static_cast<int>(row.ambient_upper), budget);
            if (got && got->exact) row.ambient = got->length;
        }
        long long denom = row.ambient ? *row.ambient : row.ambient_upper;
        row.ratio = denom > 0 ? static_cast<double>(row.fiber_length) /
                                    static_cast<double>(denom)
                              : 1.0;
        rows.push_back(row);
        w = s.apply_phi(0, w, +1);
    }
    return rows;
}

}  // namespace conelab

#endif
