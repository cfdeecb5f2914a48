#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tubings/poly.hpp"

namespace tubings {

/// Permutation of {1..n} in one-line notation: w(i) = one_line[i-1].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& one_line() const { return w_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

/// One-line rendering: digits for n <= 9 ("965347128"), comma-separated above.
std::string to_string(const Permutation& w);
Permutation parse_one_line(const std::string& text);

/// Cycles written from their smallest element, listed by ascending smallest
/// element; fixed points appear as 1-cycles.
std::vector<std::vector<int>> cycles(const Permutation& w);
std::string to_cycle_string(const Permutation& w);
Permutation parse_cycles(const std::string& text, int n);

Partition cycle_type(const Permutation& w);
int cycle_count(const Permutation& w);
int descents(const Permutation& w);

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

IntPoly descent_gf(const std::vector<Permutation>& ws);

/// Eulerian polynomial E_n: descent generating function of S_n.
IntPoly eulerian(int n);
/// E_{m,n}: descents over w in S_{m+n} with w_1 <= m and w_{m+n} >= m+1.
IntPoly eulerian_restricted(int m, int n);

/// West's deterministic one-pass stack sort.
Permutation stack_sort(const Permutation& w);
/// All w with stack_sort(w) == target, by exhaustive filter (desk scale).
std::vector<Permutation> stack_preimage(const Permutation& target);

/// N_{n,k}: descent generating function over the stack-sorting preimages of
/// the permutations of S_{n+k} that fix every position past k. Equals the
/// h-polynomial of the broom poset associahedron; N_{n,0} is the Narayana
/// polynomial.
IntPoly broom_narayana(int n, int k);

struct Composition {
    std::vector<int> parts;  // positive, order matters

    Composition() = default;
    explicit Composition(std::vector<int> p);
    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Composition&) const = default;
};

std::vector<Composition> compositions_of(int n);

/// Ordered sequence of disjoint nonempty blocks covering {1..m}.
struct OrderedSetPartition {
    std::vector<std::vector<int>> blocks;

    OrderedSetPartition() = default;
    explicit OrderedSetPartition(std::vector<std::vector<int>> b);
    int ground_size() const;
    int length() const { return static_cast<int>(blocks.size()); }
    bool operator==(const OrderedSetPartition&) const = default;
};

std::vector<OrderedSetPartition> ordered_set_partitions(int m);

/// Segment w by the composition, read each segment as a permutation of its
/// own value set, and take cycles: (w, alpha) maps to (omega, U) where U
/// records which canonically ordered cycles of omega each segment produced.
/// Inverse of cycles_to_composition; the number of parts equals the number
/// of blocks.
struct CycleSplit {
    Permutation omega;
    OrderedSetPartition blocks;
    bool operator==(const CycleSplit&) const = default;
};
CycleSplit composition_to_cycles(const Permutation& w, const Composition& alpha);

struct SegmentForm {
    Permutation w;
    Composition alpha;
    bool operator==(const SegmentForm&) const = default;
};
SegmentForm cycles_to_composition(const Permutation& omega, const OrderedSetPartition& blocks);

}  // namespace tubings
