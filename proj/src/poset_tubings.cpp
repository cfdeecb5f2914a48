#include "tubings/poset_tubings.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tubings {

namespace {

/// Precomputed pairwise data for the backtracking search. `admissible`
/// holds nested-or-disjoint as 64-bit row masks so the candidate set can be
/// narrowed with a few AND operations per recursion step.
struct TubeSystem {
    std::vector<ElementSet> tubes;
    std::vector<std::vector<std::uint64_t>> admissible;
    std::vector<std::vector<bool>> below;  // below[i][j]: disjoint and some x in i, y in j with x <= y

    explicit TubeSystem(const Poset& p) : tubes(proper_tubes(p)) {
        const int m = static_cast<int>(tubes.size());
        const int words = (m + 63) / 64;
        admissible.assign(m, std::vector<std::uint64_t>(words, 0));
        below.assign(m, std::vector<bool>(m, false));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                if (tubes[i].nested_with(tubes[j]))
                    admissible[i][j / 64] |= 1ull << (j % 64);
                if (tubes[i].disjoint_from(tubes[j])) {
                    admissible[i][j / 64] |= 1ull << (j % 64);
                    bool rel = false;
                    for (int x : tubes[i].labels()) {
                        for (int y : tubes[j].labels())
                            if (p.leq(x, y)) { rel = true; break; }
                        if (rel) break;
                    }
                    below[i][j] = rel;
                }
            }
    }

    /// Would adding `cand` close a directed cycle through the chosen tubes?
    bool closes_cycle(const std::vector<int>& chosen, int cand) const {
        std::vector<int> stack;
        std::vector<bool> seen(chosen.size(), false);
        for (std::size_t k = 0; k < chosen.size(); ++k)
            if (below[cand][chosen[k]]) { stack.push_back(static_cast<int>(k)); seen[k] = true; }
        while (!stack.empty()) {
            int k = stack.back();
            stack.pop_back();
            if (below[chosen[k]][cand]) return true;
            for (std::size_t j = 0; j < chosen.size(); ++j)
                if (!seen[j] && below[chosen[k]][chosen[j]]) { seen[j] = true; stack.push_back(static_cast<int>(j)); }
        }
        return false;
    }
};

void enumerate(const TubeSystem& sys, std::vector<int>& chosen,
               std::vector<std::uint64_t>& allowed, int from,
               std::vector<ElementSet>& scratch,
               const std::function<void(const std::vector<ElementSet>&)>& visit) {
    scratch.clear();
    for (int i : chosen) scratch.push_back(sys.tubes[i]);
    visit(scratch);

    const int m = static_cast<int>(sys.tubes.size());
    for (int i = from; i < m; ++i) {
        if (!(allowed[i / 64] >> (i % 64) & 1ull)) continue;
        if (sys.closes_cycle(chosen, i)) continue;
        chosen.push_back(i);
        std::vector<std::uint64_t> next(allowed.size());
        for (std::size_t w = 0; w < allowed.size(); ++w)
            next[w] = allowed[w] & sys.admissible[i][w];
        enumerate(sys, chosen, next, i + 1, scratch, visit);
        chosen.pop_back();
    }
}

void require_enumerable(const Poset& p) {
    if (p.size() < 2) throw std::invalid_argument("tubing enumeration requires |P| >= 2");
    if (!p.connected()) throw std::invalid_argument("tubing enumeration requires a connected poset");
}

}  // namespace

std::vector<ElementSet> proper_tubes(const Poset& p) {
    const int n = p.size();
    if (n < 2) throw std::invalid_argument("proper tubes require |P| >= 2");
    std::vector<ElementSet> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        ElementSet s;
        for (int v = 1; v <= n; ++v)
            if (bits >> (v - 1) & 1u) s.insert(v);
        if (s.size() < 2 || s.size() >= n) continue;
        if (is_tube(p, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), tube_order_less);
    return out;
}

bool is_valid_tubing(const Poset& p, const std::vector<ElementSet>& tubes) {
    for (const auto& t : tubes)
        if (!is_proper_tube(p, t))
            throw std::invalid_argument("tubing member is not a proper tube: " + to_string(t));
    const int m = static_cast<int>(tubes.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (tubes[i] == tubes[j]) return false;
            if (!tubes[i].nested_with(tubes[j]) && !tubes[i].disjoint_from(tubes[j]))
                return false;
        }
    // cycle detection over the strict-below relation between disjoint tubes
    std::vector<std::vector<int>> next(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || !tubes[i].disjoint_from(tubes[j])) continue;
            bool rel = false;
            for (int x : tubes[i].labels()) {
                for (int y : tubes[j].labels())
                    if (p.leq(x, y)) { rel = true; break; }
                if (rel) break;
            }
            if (rel) next[i].push_back(j);
        }
    std::vector<int> state(m, 0);  // 0 new, 1 on stack, 2 done
    auto dfs = [&](auto&& self, int v) -> bool {
        state[v] = 1;
        for (int u : next[v]) {
            if (state[u] == 1) return true;
            if (state[u] == 0 && self(self, u)) return true;
        }
        state[v] = 2;
        return false;
    };
    for (int v = 0; v < m; ++v)
        if (state[v] == 0 && dfs(dfs, v)) return false;
    return true;
}

void for_each_tubing(const Poset& p,
                     const std::function<void(const std::vector<ElementSet>&)>& visit) {
    require_enumerable(p);
    TubeSystem sys(p);
    const int words = std::max<int>(1, (static_cast<int>(sys.tubes.size()) + 63) / 64);
    std::vector<std::uint64_t> allowed(words, ~0ull);
    std::vector<int> chosen;
    std::vector<ElementSet> scratch;
    enumerate(sys, chosen, allowed, 0, scratch, visit);
}

FaceCount tubing_census(const Poset& p) {
    FaceCount census;
    for_each_tubing(p, [&](const std::vector<ElementSet>& t) {
        census.add(static_cast<int>(t.size()));
    });
    return census;
}

IntPoly f_polynomial(const FaceCount& census, int dim) {
    if (census.max_tubes() > dim)
        throw std::invalid_argument("census has more tubes than the dimension allows");
    IntPoly f;
    for (const auto& [k, c] : census.by_tube_count)
        if (c != 0) f += IntPoly::monomial(c, dim - k);
    return f;
}

IntPoly f_polynomial(const Poset& p) { return f_polynomial(tubing_census(p), p.size() - 2); }

IntPoly h_polynomial(const Poset& p) { return f_to_h(f_polynomial(p)); }

IntPoly gamma_polynomial(const IntPoly& h, int d) {
    if (d < 0) throw std::invalid_argument("negative dimension");
    if (!h.palindromic(d)) throw std::invalid_argument("h-polynomial is not palindromic");
    IntPoly remaining = h;
    std::vector<Int> gamma(d / 2 + 1, 0);
    const IntPoly one_plus_t(std::vector<Int>{1, 1});
    for (int i = 0; i <= d / 2; ++i) {
        Int g = remaining.coeff(i);
        gamma[i] = g;
        if (g == 0) continue;
        IntPoly term = IntPoly::monomial(g, i);
        for (int j = 0; j < d - 2 * i; ++j) term *= one_plus_t;
        remaining -= term;
    }
    if (!remaining.is_zero())
        throw std::logic_error("gamma expansion left a remainder");
    return IntPoly(std::move(gamma));
}

TubeClass classify_tube(const Poset& p, const ElementSet& block, const ElementSet& tube) {
    if (tube.disjoint_from(block) || tube.subset_of(block) || block.subset_of(tube))
        return TubeClass::Good;
    bool lower = false, upper = false;
    for (int x : (tube - block).labels())
        for (int y : (tube & block).labels()) {
            if (p.leq(x, y)) lower = true;
            if (p.leq(y, x)) upper = true;
        }
    if (lower && upper) return TubeClass::BadBoth;
    if (lower) return TubeClass::BadLower;
    if (upper) return TubeClass::BadUpper;
    throw std::logic_error("bad tube neither lower nor upper; input is not a tube");
}

namespace {

/// Bad tubes of one side, sorted into the nested order tau_1 < tau_2 < ...
std::vector<ElementSet> nested_chain(std::vector<ElementSet> tubes) {
    std::sort(tubes.begin(), tubes.end(),
              [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
    for (std::size_t i = 0; i + 1 < tubes.size(); ++i)
        if (!tubes[i].subset_of(tubes[i + 1]))
            throw std::invalid_argument("bad tubes of one side do not form a nested sequence");
    return tubes;
}

struct SideDecomposition {
    std::vector<MarkedSet> trace;
    std::vector<ElementSet> blocks;  // in star order
};

SideDecomposition decompose_side(const ElementSet& block, const std::vector<ElementSet>& side) {
    SideDecomposition out;
    ElementSet prev;
    for (const auto& tube : nested_chain(side)) {
        ElementSet grabbed = (tube - prev) & block;
        out.trace.push_back({tube - block, !grabbed.empty()});
        if (!grabbed.empty()) out.blocks.push_back(grabbed);
        prev = tube;
    }
    return out;
}

}  // namespace

BadTubeDecomposition decompose_bad(const Poset& p, const ElementSet& block,
                                   const std::vector<ElementSet>& tubing) {
    std::vector<ElementSet> lower, upper;
    ElementSet covered;
    for (const auto& tube : tubing) {
        switch (classify_tube(p, block, tube)) {
            case TubeClass::Good: break;
            case TubeClass::BadLower: lower.push_back(tube); covered |= tube; break;
            case TubeClass::BadUpper: upper.push_back(tube); covered |= tube; break;
            case TubeClass::BadBoth:
                throw std::invalid_argument("tube is both lower and upper; tubing is invalid");
        }
    }
    SideDecomposition l = decompose_side(block, lower);
    SideDecomposition u = decompose_side(block, upper);

    BadTubeDecomposition d;
    d.lower = std::move(l.trace);
    d.upper = std::move(u.trace);
    d.middle = std::move(l.blocks);
    ElementSet hat = block - covered;
    if (!hat.empty()) d.middle.push_back(hat);
    d.middle.insert(d.middle.end(), u.blocks.rbegin(), u.blocks.rend());
    return d;
}

std::vector<ElementSet> reconstruct_bad(const Poset& p, const ElementSet& block,
                                        const BadTubeDecomposition& d) {
    const auto stars = [](const std::vector<MarkedSet>& side) {
        int c = 0;
        for (const auto& ms : side) c += ms.starred ? 1 : 0;
        return c;
    };
    const int ls = stars(d.lower), us = stars(d.upper);
    const int m = static_cast<int>(d.middle.size());
    if (m != ls + us && m != ls + us + 1)
        throw std::invalid_argument("block count does not match star counts");
    for (const auto& b : d.middle) {
        if (b.empty() || !b.subset_of(block))
            throw std::invalid_argument("middle blocks must be nonempty subsets of the block");
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!d.middle[i].disjoint_from(d.middle[j]))
                throw std::invalid_argument("middle blocks must be pairwise disjoint");
    for (const auto& side : {d.lower, d.upper})
        for (const auto& ms : side)
            if (!ms.set.disjoint_from(block))
                throw std::invalid_argument("trace sets must avoid the block");

    std::vector<ElementSet> out;
    ElementSet acc;
    int next_star = 0;
    for (const auto& ms : d.lower) {
        if (ms.starred) acc |= d.middle[next_star++];
        out.push_back(ms.set | acc);
    }
    acc = ElementSet{};
    next_star = 0;
    for (const auto& ms : d.upper) {
        if (ms.starred) acc |= d.middle[m - 1 - next_star++];
        out.push_back(ms.set | acc);
    }
    for (const auto& tube : out)
        if (!is_proper_tube(p, tube))
            throw std::invalid_argument("reconstruction produced a non-tube: " + to_string(tube));
    std::sort(out.begin(), out.end(), tube_order_less);
    return out;
}

SplitCensus split_census(const Poset& p, const ElementSet& chain_block) {
    if (!is_autonomous(p, chain_block) || !is_chain_set(p, chain_block))
        throw std::invalid_argument("block must be an autonomous chain");
    SplitCensus out;
    for_each_tubing(p, [&](const std::vector<ElementSet>& t) {
        bool degradable = false;
        for (const auto& tube : t)
            if (tube.subset_of(chain_block)) { degradable = true; break; }
        (degradable ? out.degradable : out.nondegradable).add(static_cast<int>(t.size()));
    });
    return out;
}

namespace {
std::vector<int> chain_sorted(const Poset& p, const ElementSet& chain_block) {
    auto members = chain_block.labels();
    std::sort(members.begin(), members.end(), [&](int a, int b) { return p.less(a, b); });
    return members;
}
}  // namespace

std::vector<std::vector<ElementSet>> degrading_tubings(const Poset& p,
                                                       const ElementSet& chain_block) {
    if (!is_chain_set(p, chain_block))
        throw std::invalid_argument("degrading tubings require a chain block");
    auto members = chain_sorted(p, chain_block);
    const int s = static_cast<int>(members.size());
    std::vector<ElementSet> intervals;  // size >= 2, the whole block allowed
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            ElementSet t;
            for (int k = i; k <= j; ++k) t.insert(members[k]);
            intervals.push_back(t);
        }
    std::sort(intervals.begin(), intervals.end(), tube_order_less);

    std::vector<std::vector<ElementSet>> out;
    std::vector<ElementSet> chosen;
    auto rec = [&](auto&& self, int from) -> void {
        out.push_back(chosen);
        for (int i = from; i < static_cast<int>(intervals.size()); ++i) {
            bool ok = true;
            for (const auto& c : chosen)
                if (!c.nested_with(intervals[i]) && !c.disjoint_from(intervals[i])) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(intervals[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Composition degrading_composition(const Poset& p, const ElementSet& chain_block,
                                  const std::vector<ElementSet>& degrading) {
    auto members = chain_sorted(p, chain_block);
    for (const auto& tube : degrading)
        if (!tube.subset_of(chain_block))
            throw std::invalid_argument("degrading tube must lie inside the chain block");
    std::vector<int> parts;
    for (int i = static_cast<int>(members.size()) - 1; i >= 0;) {
        // the maximal tube topped at this position, if any
        ElementSet best;
        for (const auto& tube : degrading)
            if (tube.contains(members[i]) && tube.size() > best.size()) best = tube;
        if (best.empty()) {
            parts.push_back(1);
            --i;
        } else {
            parts.push_back(best.size());
            i -= best.size();
        }
    }
    return Composition(std::move(parts));
}

}  // namespace tubings
