#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tubings {

/// Small set of 1-based element labels, backed by a bitmask.
///
/// Used for subposets, tubes, and graph vertex sets. Labels run from 1 to
/// kMaxLabel; everything in this library is desk-scale, so 30 labels is
/// plenty of headroom.
class LabelSet {
public:
    static constexpr int kMaxLabel = 30;

    LabelSet() = default;

    static LabelSet of(std::initializer_list<int> labels);
    static LabelSet from_labels(const std::vector<int>& labels);
    /// The full set {1, ..., n}.
    static LabelSet full(int n);
    /// Contiguous run {lo, ..., hi}; empty when hi < lo.
    static LabelSet range(int lo, int hi);

    bool contains(int label) const { return label >= 1 && label <= kMaxLabel && (bits_ >> (label - 1) & 1u); }
    void insert(int label);
    void erase(int label);

    int size() const;
    bool empty() const { return bits_ == 0; }

    bool subset_of(const LabelSet& other) const { return (bits_ & ~other.bits_) == 0; }
    bool disjoint_from(const LabelSet& other) const { return (bits_ & other.bits_) == 0; }
    bool nested_with(const LabelSet& other) const { return subset_of(other) || other.subset_of(*this); }

    friend LabelSet operator|(LabelSet a, const LabelSet& b) { a.bits_ |= b.bits_; return a; }
    friend LabelSet operator&(LabelSet a, const LabelSet& b) { a.bits_ &= b.bits_; return a; }
    /// Set difference.
    friend LabelSet operator-(LabelSet a, const LabelSet& b) { a.bits_ &= ~b.bits_; return a; }

    LabelSet& operator|=(const LabelSet& b) { bits_ |= b.bits_; return *this; }
    LabelSet& operator&=(const LabelSet& b) { bits_ &= b.bits_; return *this; }
    LabelSet& operator-=(const LabelSet& b) { bits_ &= ~b.bits_; return *this; }

    /// Ascending member labels.
    std::vector<int> labels() const;
    int min_label() const;  // throws on empty set
    int max_label() const;

    std::uint32_t bits() const { return bits_; }

    bool operator==(const LabelSet&) const = default;
    auto operator<=>(const LabelSet& other) const { return bits_ <=> other.bits_; }

private:
    std::uint32_t bits_ = 0;
};

/// Canonical tube order: by size, then lexicographically by member labels.
bool tube_order_less(const LabelSet& a, const LabelSet& b);

/// Renders as "{1,2,5}"; the empty set as "{}".
std::string to_string(const LabelSet& s);

}  // namespace tubings
