#ifndef CONELAB_WORDS_HPP
#define CONELAB_WORDS_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace conelab {

// Words are compact strings over single-character generators: a lowercase
// letter is the generator, the matching uppercase letter its inverse.
using Word = std::string;

inline char gen_of(char c) { return static_cast<char>(std::tolower(c)); }
inline bool is_inverse_letter(char c) { return std::isupper(c) != 0; }
inline char invert_letter(char c) {
    return is_inverse_letter(c) ? static_cast<char>(std::tolower(c))
                                : static_cast<char>(std::toupper(c));
}

inline Word invert_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(invert_letter(*it));
    return out;
}

/// Free reduction (cancel adjacent x x^{-1}).
inline Word free_reduce(const Word& w) {
    Word out;
    for (char c : w) {
        if (!out.empty() && out.back() == invert_letter(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

/// Cyclic factor: one generator of the given order (0 = infinite).
struct CyclicFactor {
    char gen;
    int order = 0;
};

/// Free-by-cyclic factor <x_1..x_r, t | t w t^-1 = phi(w)> with an explicit
/// automorphism phi of the fiber free group.
struct SemidirectFactor {
    std::vector<char> free_gens;
    char stable_letter = 't';
    std::map<char, Word> phi;                 // generator -> reduced word
    std::map<char, Word> phi_inv;             // found by ball inversion
    std::set<char> missing_inverses;          // generators phi_inv could not reach
    int inversion_radius = 6;
};

struct Subgroup {
    enum class Kind { FactorUnion, Fiber };
    Kind kind = Kind::FactorUnion;
    std::set<int> factor_indices;  // FactorUnion
    int fiber_factor = -1;         // Fiber
};

/// A presentation from one of the supported classes, realized uniformly as a
/// free product of factors (after generator identifications for amalgams).
/// Immutable after construction; all queries are pure.
class GroupScenario {
public:
    using Factor = std::variant<CyclicFactor, SemidirectFactor>;

    GroupScenario(std::string kind, std::vector<Factor> factors,
                  std::map<std::string, Subgroup> subgroups = {})
        : kind_(std::move(kind)),
          factors_(std::move(factors)),
          subgroups_(std::move(subgroups)) {
        for (int i = 0; i < static_cast<int>(factors_.size()); ++i) {
            if (auto* c = std::get_if<CyclicFactor>(&factors_[i])) {
                register_gen(c->gen, i);
                if (c->order < 0 || c->order == 1)
                    throw SchemaError("cyclic order must be 0 (infinite) or >= 2");
            } else {
                auto& s = std::get<SemidirectFactor>(factors_[i]);
                for (char g : s.free_gens) register_gen(g, i);
                register_gen(s.stable_letter, i);
                prepare_semidirect(s);
            }
        }
        for (const auto& [name, h] : subgroups_) validate_subgroup(h);
    }

    const std::string& kind() const { return kind_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const std::map<std::string, Subgroup>& subgroups() const { return subgroups_; }

    std::vector<char> generators() const {
        std::vector<char> out;
        for (const auto& f : factors_) {
            if (auto* c = std::get_if<CyclicFactor>(&f))
                out.push_back(c->gen);
            else {
                const auto& s = std::get<SemidirectFactor>(f);
                out.insert(out.end(), s.free_gens.begin(), s.free_gens.end());
                out.push_back(s.stable_letter);
            }
        }
        return out;
    }

    int factor_of(char gen) const {
        auto it = factor_of_.find(gen_of(gen));
        if (it == factor_of_.end())
            throw SchemaError(std::string("unknown generator symbol '") + gen + "'");
        return it->second;
    }

    bool knows(char gen) const { return factor_of_.count(gen_of(gen)) != 0; }

    const Subgroup& subgroup(const std::string& name) const {
        auto it = subgroups_.find(name);
        if (it == subgroups_.end()) throw SchemaError("unknown subgroup " + name);
        return it->second;
    }

    /// Canonical form: alternating factor syllables, each factor-reduced.
    Word normal_form(const Word& w) const {
        std::vector<std::pair<int, Word>> stack;  // (factor, canonical syllable)
        for (char c : w) {
            int f = factor_of(c);
            if (!stack.empty() && stack.back().first == f) {
                Word merged = syllable_nf(f, stack.back().second + Word(1, c));
                stack.pop_back();
                if (!merged.empty()) stack.emplace_back(f, merged);
            } else {
                Word s = syllable_nf(f, Word(1, c));
                if (!s.empty()) stack.emplace_back(f, s);
            }
            // a popped syllable can expose two equal-factor neighbours
            while (stack.size() >= 2 &&
                   stack[stack.size() - 1].first == stack[stack.size() - 2].first) {
                auto top = stack.back();
                stack.pop_back();
                Word merged =
                    syllable_nf(top.first, stack.back().second + top.second);
                stack.pop_back();
                if (!merged.empty()) stack.emplace_back(top.first, merged);
            }
        }
        Word out;
        for (auto& [f, s] : stack) out += s;
        return out;
    }

    Word multiply(const Word& a, const Word& b) const { return normal_form(a + b); }
    Word inverse(const Word& a) const { return normal_form(invert_word(a)); }
    bool is_identity(const Word& a) const { return normal_form(a).empty(); }

    /// Exact membership for the supported subgroup classes.
    bool contains(const Subgroup& h, const Word& w) const {
        Word n = normal_form(w);
        if (h.kind == Subgroup::Kind::Fiber) {
            for (char c : n) {
                if (factor_of(c) != h.fiber_factor) return false;
                if (gen_of(c) ==
                    std::get<SemidirectFactor>(factors_[h.fiber_factor]).stable_letter)
                    return false;
            }
            return true;
        }
        for (char c : n)
            if (!h.factor_indices.count(factor_of(c))) return false;
        return true;
    }

    bool contains(const std::string& name, const Word& w) const {
        return contains(subgroup(name), w);
    }

    /// Canonical representative of the left coset w * H: the unique shortest
    /// member, obtained by stripping the maximal H-suffix of the normal form.
    Word coset_canonical(const Subgroup& h, const Word& w) const {
        Word n = normal_form(w);
        if (h.kind == Subgroup::Kind::Fiber) {
            // coset of the fiber is determined by the t-exponent
            const auto& s = std::get<SemidirectFactor>(factors_[h.fiber_factor]);
            long long k = 0;
            for (char c : n) {
                if (factor_of(c) != h.fiber_factor)
                    throw SchemaError("fiber cosets need a pure semidirect scenario");
                if (gen_of(c) == s.stable_letter) k += is_inverse_letter(c) ? -1 : 1;
            }
            if (k >= 0) return Word(static_cast<size_t>(k), s.stable_letter);
            return Word(static_cast<size_t>(-k),
                        static_cast<char>(std::toupper(s.stable_letter)));
        }
        size_t end = n.size();
        while (end > 0 && h.factor_indices.count(factor_of(n[end - 1]))) {
            // drop the whole trailing syllable of that factor
            int f = factor_of(n[end - 1]);
            while (end > 0 && factor_of(n[end - 1]) == f) --end;
        }
        return n.substr(0, end);
    }

    /// Generator set of a FactorUnion subgroup.
    std::vector<char> subgroup_generators(const Subgroup& h) const {
        std::vector<char> out;
        if (h.kind == Subgroup::Kind::Fiber) {
            const auto& s = std::get<SemidirectFactor>(factors_[h.fiber_factor]);
            return s.free_gens;
        }
        for (int f : h.factor_indices) {
            if (auto* c = std::get_if<CyclicFactor>(&factors_[f]))
                out.push_back(c->gen);
            else {
                const auto& s = std::get<SemidirectFactor>(factors_[f]);
                out.insert(out.end(), s.free_gens.begin(), s.free_gens.end());
                out.push_back(s.stable_letter);
            }
        }
        return out;
    }

    /// Applies phi (k = 1) or phi^{-1} (k = -1) of the given semidirect factor
    /// to a fiber word, extending homomorphically.
    Word apply_phi(int factor, const Word& w, int direction) const {
        const auto& s = std::get<SemidirectFactor>(factors_[factor]);
        return apply_phi_impl(s, w, direction);
    }

private:
    static Word apply_phi_impl(const SemidirectFactor& s, const Word& w, int dir) {
        Word out;
        for (char c : w) {
            char g = gen_of(c);
            const std::map<char, Word>* table = dir > 0 ? &s.phi : &s.phi_inv;
            if (dir < 0 && s.missing_inverses.count(g))
                throw BudgetError(std::string("phi^-1(") + g +
                                  ") not found within the inversion radius");
            auto it = table->find(g);
            if (it == table->end())
                throw SchemaError(std::string("phi undefined on '") + g + "'");
            out += is_inverse_letter(c) ? invert_word(it->second) : it->second;
        }
        return free_reduce(out);
    }

    Word syllable_nf(int f, const Word& syl) const {
        if (auto* c = std::get_if<CyclicFactor>(&factors_[f])) {
            long long e = 0;
            for (char ch : syl) e += is_inverse_letter(ch) ? -1 : 1;
            if (c->order > 0) {
                e %= c->order;
                if (e < 0) e += c->order;
                return Word(static_cast<size_t>(e), c->gen);
            }
            if (e >= 0) return Word(static_cast<size_t>(e), c->gen);
            return Word(static_cast<size_t>(-e),
                        static_cast<char>(std::toupper(c->gen)));
        }
        const auto& s = std::get<SemidirectFactor>(factors_[f]);
        long long k = 0;
        Word u;
        for (char ch : syl) {
            if (gen_of(ch) == s.stable_letter) {
                if (is_inverse_letter(ch)) {
                    u = apply_phi_impl(s, u, +1);  // u t^-1 = t^-1 phi(u)
                    --k;
                } else {
                    u = apply_phi_impl(s, u, -1);  // u t = t phi^-1(u)
                    ++k;
                }
            } else {
                if (!u.empty() && u.back() == invert_letter(ch))
                    u.pop_back();
                else
                    u.push_back(ch);
            }
        }
        Word out;
        if (k >= 0)
            out = Word(static_cast<size_t>(k), s.stable_letter);
        else
            out = Word(static_cast<size_t>(-k),
                       static_cast<char>(std::toupper(s.stable_letter)));
        return out + u;
    }

    void register_gen(char g, int factor) {
        if (!std::islower(static_cast<unsigned char>(g)))
            throw SchemaError(std::string("generators must be lowercase ascii, got '") +
                              g + "'");
        if (factor_of_.count(g))
            throw SchemaError(std::string("duplicate generator '") + g + "'");
        factor_of_[g] = factor;
    }

    void validate_subgroup(const Subgroup& h) const {
        if (h.kind == Subgroup::Kind::Fiber) {
            if (h.fiber_factor < 0 ||
                h.fiber_factor >= static_cast<int>(factors_.size()) ||
                !std::holds_alternative<SemidirectFactor>(factors_[h.fiber_factor]))
                throw SchemaError("fiber subgroup needs a semidirect factor");
            return;
        }
        for (int f : h.factor_indices)
            if (f < 0 || f >= static_cast<int>(factors_.size()))
                throw SchemaError("subgroup references unknown factor");
    }

    /// Fills phi_inv by solving phi(w) = g over reduced fiber words in
    /// shortlex order, and checks injectivity of phi on the radius-3 ball.
    void prepare_semidirect(SemidirectFactor& s) {
        for (char g : s.free_gens) {
            auto it = s.phi.find(g);
            if (it == s.phi.end() || free_reduce(it->second).empty())
                throw SchemaError(std::string("phi must map '") + g +
                                  "' to a nonempty reduced word");
            it->second = free_reduce(it->second);
            for (char c : it->second)
                if (std::find(s.free_gens.begin(), s.free_gens.end(), gen_of(c)) ==
                    s.free_gens.end())
                    throw SchemaError("phi image uses a non-fiber symbol");
        }
        std::vector<char> letters;
        for (char g : s.free_gens) {
            letters.push_back(g);
            letters.push_back(static_cast<char>(std::toupper(g)));
        }
        // injectivity of phi on the radius-3 ball
        {
            std::set<Word> images;
            std::vector<Word> level{Word()};
            images.insert(Word());
            std::vector<Word> all{Word()};
            for (int r = 0; r < 3; ++r) {
                std::vector<Word> next;
                for (const auto& w : level)
                    for (char c : letters) {
                        if (!w.empty() && w.back() == invert_letter(c)) continue;
                        next.push_back(w + Word(1, c));
                    }
                for (const auto& w : next) all.push_back(w);
                level = std::move(next);
            }
            for (const auto& w : all) {
                Word img = apply_phi_impl(s, w, +1);
                if (!images.insert(img).second && !w.empty())
                    throw SchemaError("phi is not injective on the radius-3 ball");
            }
        }
        // invert generators by shortlex search
        std::set<char> todo(s.free_gens.begin(), s.free_gens.end());
        std::vector<Word> level{Word()};
        for (int r = 1; r <= s.inversion_radius && !todo.empty(); ++r) {
            std::vector<Word> next;
            for (const auto& w : level)
                for (char c : letters) {
                    if (!w.empty() && w.back() == invert_letter(c)) continue;
                    next.push_back(w + Word(1, c));
                }
            std::sort(next.begin(), next.end());
            for (const auto& w : next) {
                Word img = apply_phi_impl(s, w, +1);
                if (img.size() == 1 && !is_inverse_letter(img[0]) &&
                    todo.count(img[0])) {
                    s.phi_inv[img[0]] = w;
                    todo.erase(img[0]);
                }
            }
            level = std::move(next);
        }
        s.missing_inverses = todo;
    }

    std::string kind_;
    std::vector<Factor> factors_;
    std::map<std::string, Subgroup> subgroups_;
    std::map<char, int> factor_of_;
};

// Convenience constructors for the supported presentation classes.

inline GroupScenario free_group(int rank, const std::string& names = "xyzuvw") {
    if (rank < 1 || rank > static_cast<int>(names.size()))
        throw SchemaError("unsupported free group rank");
    std::vector<GroupScenario::Factor> fs;
    for (int i = 0; i < rank; ++i) fs.push_back(CyclicFactor{names[i], 0});
    return GroupScenario("FreeGroup", std::move(fs));
}

inline GroupScenario free_product_cyclic(const std::vector<int>& orders,
                                         const std::string& names = "abcdefgh") {
    if (orders.size() > names.size()) throw SchemaError("too many cyclic factors");
    std::vector<GroupScenario::Factor> fs;
    for (size_t i = 0; i < orders.size(); ++i)
        fs.push_back(CyclicFactor{names[i], orders[i]});
    return GroupScenario("FreeProductCyclic", std::move(fs));
}

inline GroupScenario semidirect_z_free(const std::vector<char>& free_gens,
                                       const std::map<char, Word>& phi,
                                       char stable_letter = 't') {
    SemidirectFactor s;
    s.free_gens = free_gens;
    s.stable_letter = stable_letter;
    s.phi = phi;
    std::map<std::string, Subgroup> subs;
    Subgroup fib;
    fib.kind = Subgroup::Kind::Fiber;
    fib.fiber_factor = 0;
    subs["fiber"] = fib;
    return GroupScenario("SemidirectZFree", {s}, std::move(subs));
}

/// Amalgam of two scenarios over identified generators: pairs (left symbol,
/// right symbol). The right symbols are substituted by their left partners,
/// giving one merged free product; factor-membership data survives as the
/// "left", "right" and "edge" subgroups.
struct AmalgamScenario {
    GroupScenario merged;
    std::map<char, char> substitution;  // right symbol -> left symbol
};

inline AmalgamScenario amalgam(const GroupScenario& left, const GroupScenario& right,
                               const std::vector<std::pair<char, char>>& identifications) {
    std::map<char, char> subst;
    std::set<char> edge_left;
    for (auto [l, r] : identifications) {
        if (!left.knows(l) || !right.knows(r))
            throw SchemaError("identification uses unknown generators");
        subst[r] = l;
        edge_left.insert(l);
    }
    std::vector<GroupScenario::Factor> fs;
    std::set<int> left_idx, right_idx, edge_idx;
    std::map<char, int> where;
    auto add_factor = [&](const GroupScenario::Factor& f) {
        fs.push_back(f);
        return static_cast<int>(fs.size()) - 1;
    };
    for (const auto& f : left.factors()) {
        int idx = add_factor(f);
        left_idx.insert(idx);
        if (auto* c = std::get_if<CyclicFactor>(&f)) {
            where[c->gen] = idx;
            if (edge_left.count(c->gen)) edge_idx.insert(idx);
        } else {
            for (char g : std::get<SemidirectFactor>(f).free_gens) where[g] = idx;
        }
    }
    for (const auto& f : right.factors()) {
        auto* c = std::get_if<CyclicFactor>(&f);
        if (c && subst.count(c->gen)) {
            char l = subst.at(c->gen);
            if (!where.count(l))
                throw SchemaError("identified generator must be a cyclic factor");
            int idx = where.at(l);
            auto* lc = std::get_if<CyclicFactor>(&fs[idx]);
            if (!lc || lc->order != c->order)
                throw SchemaError("identified generators must have equal orders");
            right_idx.insert(idx);
            continue;
        }
        if (!c) {
            // semidirect right factors supported only without identifications
            for (char g : std::get<SemidirectFactor>(f).free_gens)
                if (subst.count(g))
                    throw SchemaError("identification into a semidirect factor");
        }
        int idx = add_factor(f);
        right_idx.insert(idx);
    }
    std::map<std::string, Subgroup> subs;
    subs["left"] = Subgroup{Subgroup::Kind::FactorUnion, left_idx, -1};
    subs["right"] = Subgroup{Subgroup::Kind::FactorUnion, right_idx, -1};
    subs["edge"] = Subgroup{Subgroup::Kind::FactorUnion, edge_idx, -1};
    AmalgamScenario out{GroupScenario("Amalgam", std::move(fs), std::move(subs)),
                        subst};
    return out;
}

/// Rewrites a word over the pre-identification alphabet into the merged one.
inline Word substitute(const std::map<char, char>& subst, const Word& w) {
    Word out;
    for (char c : w) {
        auto it = subst.find(gen_of(c));
        if (it == subst.end())
            out.push_back(c);
        else
            out.push_back(is_inverse_letter(c)
                              ? static_cast<char>(std::toupper(it->second))
                              : it->second);
    }
    return out;
}

}  // namespace conelab

#endif
