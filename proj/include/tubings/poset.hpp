#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tubings/label_set.hpp"

namespace tubings {

using ElementSet = LabelSet;

/// Finite poset on elements 1..n. Immutable after construction: the order
/// relation is the reflexive-transitive closure of the strict pairs passed
/// in, antisymmetry is checked, and the Hasse covers are derived once.
class Poset {
public:
    Poset(int n, const std::vector<std::pair<int, int>>& strict_relations);

    /// Total order 1 < 2 < ... < n.
    static Poset chain(int n);
    /// n pairwise-incomparable elements.
    static Poset antichain(int n);

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[(a - 1) * n_ + (b - 1)]; }
    bool less(int a, int b) const { return a != b && leq(a, b); }

    /// Hasse cover pairs (a, b) with a covered by b, sorted lexicographically.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    /// Hasse-diagram neighbours of each element (index 0 unused).
    const std::vector<ElementSet>& hasse_adjacency() const { return hasse_; }

    /// Whole poset connected as a Hasse graph.
    bool connected() const;

    bool operator==(const Poset& o) const { return n_ == o.n_ && leq_ == o.leq_; }

private:
    int n_;
    std::vector<bool> leq_;  // row-major n x n closure matrix
    std::vector<std::pair<int, int>> covers_;
    std::vector<ElementSet> hasse_;
};

/// Stacks `upper` on top of `lower`: disjoint union relabelled with the
/// lower block first, plus every lower element below every upper element.
Poset ordinal_sum(const Poset& lower, const Poset& upper);
/// Left-to-right ordinal sum of several blocks.
Poset ordinal_sum(const std::vector<Poset>& blocks);
/// One minimum below n incomparable elements.
Poset claw(int n);
/// Chain of n+1 elements with k incomparable elements on top.
Poset broom_poset(int n, int k);

/// Every element sandwiched between two members of s is itself in s.
bool is_convex(const Poset& p, const ElementSet& s);
/// Induced Hasse subgraph on s is connected; s must be nonempty.
bool is_connected(const Poset& p, const ElementSet& s);
bool is_tube(const Poset& p, const ElementSet& s);
bool is_proper_tube(const Poset& p, const ElementSet& s);
/// Every outside element relates identically to all members of s.
bool is_autonomous(const Poset& p, const ElementSet& s);
/// All members pairwise comparable.
bool is_chain_set(const Poset& p, const ElementSet& s);

/// Replaces the autonomous subposet s by `replacement`: the replacement
/// block takes over s's slot in the labelling (outside elements keep their
/// relative order, the block sits where min(s) was), keeps its internal
/// order, and inherits s's relations to the outside. Requires s autonomous
/// and proper.
Poset substitute(const Poset& p, const ElementSet& s, const Poset& replacement);
/// Labels the replacement block occupies in substitute(p, s, r).
ElementSet substituted_block(const Poset& p, const ElementSet& s, int replacement_size);

/// Brute-force bijection search; intended for test support at |P| <= 8.
bool isomorphic(const Poset& a, const Poset& b);

/// Text format: first line "n <count>", then one "a < b" strict relation
/// per line ('#' starts a comment; transitive closure is taken).
Poset parse_poset(const std::string& text);
/// Emits cover relations only, sorted lexicographically.
std::string write_poset(const Poset& p);

}  // namespace tubings
