#pragma once

#include <functional>
#include <vector>

#include "tubings/face_count.hpp"
#include "tubings/perm.hpp"
#include "tubings/poly.hpp"
#include "tubings/poset.hpp"

namespace tubings {

/// All proper tubes (connected convex subsets with 1 < |s| < |P|), in
/// canonical order: by size, then lexicographically. Requires |P| >= 2.
std::vector<ElementSet> proper_tubes(const Poset& p);

/// Pairwise nested-or-disjoint, and no directed cycle in the digraph whose
/// arcs run between disjoint tubes with some element of the source below
/// some element of the target. Throws if a member is not a proper tube.
bool is_valid_tubing(const Poset& p, const std::vector<ElementSet>& tubes);

/// Visits every tubing of a connected poset exactly once (including the
/// empty tubing), tubes within each tubing in canonical order.
void for_each_tubing(const Poset& p,
                     const std::function<void(const std::vector<ElementSet>&)>& visit);

/// Tubing counts grouped by number of tubes. Requires p connected, |P| >= 2.
FaceCount tubing_census(const Poset& p);

/// f(t) = sum census[k] t^{dim - k}.
IntPoly f_polynomial(const FaceCount& census, int dim);
/// f-polynomial of the poset associahedron; a k-tube tubing is a face of
/// dimension |P| - 2 - k.
IntPoly f_polynomial(const Poset& p);
IntPoly h_polynomial(const Poset& p);

/// Unique expansion h(t) = sum gamma_i t^i (1+t)^(d-2i); h must be
/// palindromic in the degree-d window.
IntPoly gamma_polynomial(const IntPoly& h, int d);

/// Relative to an autonomous block s: a tube is good when it avoids s,
/// sits inside s, or swallows s whole; otherwise it is bad, and a bad tube
/// is lower/upper according to whether the outside part reaches below or
/// above the part inside s. In a valid tubing a bad tube is never both.
enum class TubeClass { Good, BadLower, BadUpper, BadBoth };
TubeClass classify_tube(const Poset& p, const ElementSet& block, const ElementSet& tube);

struct MarkedSet {
    ElementSet set;
    bool starred = false;
    bool operator==(const MarkedSet&) const = default;
};

/// Decomposition of the bad tubes of a tubing: the nested traces of the
/// lower and upper tubes outside the block (starred where a tube picked up
/// new block elements) together with the ordered blocks those stars carved
/// out of the block, the untouched middle included.
struct BadTubeDecomposition {
    std::vector<MarkedSet> lower;
    std::vector<ElementSet> middle;
    std::vector<MarkedSet> upper;
    bool operator==(const BadTubeDecomposition&) const = default;
};

BadTubeDecomposition decompose_bad(const Poset& p, const ElementSet& block,
                                   const std::vector<ElementSet>& tubing);
/// Inverse of decompose_bad, returning the bad tubes in canonical order.
/// Rejects triples whose star counts do not match the block sequence.
std::vector<ElementSet> reconstruct_bad(const Poset& p, const ElementSet& block,
                                        const BadTubeDecomposition& d);

/// A tubing is degradable (relative to an autonomous chain) when it has a
/// tube entirely inside the chain.
struct SplitCensus {
    FaceCount nondegradable;
    FaceCount degradable;
};
SplitCensus split_census(const Poset& p, const ElementSet& chain_block);

/// All tubings of the chain block itself, with the whole block allowed as
/// a tube (tubes are intervals of size >= 2 of the chain).
std::vector<std::vector<ElementSet>> degrading_tubings(const Poset& p,
                                                       const ElementSet& chain_block);
/// Composition read off a degrading tubing: scan the chain top to bottom,
/// recording maximal tubes and lonely elements.
Composition degrading_composition(const Poset& p, const ElementSet& chain_block,
                                  const std::vector<ElementSet>& degrading);

}  // namespace tubings
