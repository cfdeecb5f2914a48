#include "tubings/label_set.hpp"

#include <bit>
#include <stdexcept>

namespace tubings {

namespace {
void check_label(int label) {
    if (label < 1 || label > LabelSet::kMaxLabel)
        throw std::invalid_argument("label out of range: " + std::to_string(label));
}
}  // namespace

LabelSet LabelSet::of(std::initializer_list<int> labels) {
    LabelSet s;
    for (int l : labels) s.insert(l);
    return s;
}

LabelSet LabelSet::from_labels(const std::vector<int>& labels) {
    LabelSet s;
    for (int l : labels) s.insert(l);
    return s;
}

LabelSet LabelSet::full(int n) { return range(1, n); }

LabelSet LabelSet::range(int lo, int hi) {
    LabelSet s;
    for (int l = lo; l <= hi; ++l) s.insert(l);
    return s;
}

void LabelSet::insert(int label) {
    check_label(label);
    bits_ |= 1u << (label - 1);
}

void LabelSet::erase(int label) {
    check_label(label);
    bits_ &= ~(1u << (label - 1));
}

int LabelSet::size() const { return std::popcount(bits_); }

std::vector<int> LabelSet::labels() const {
    std::vector<int> out;
    for (int l = 1; l <= kMaxLabel; ++l)
        if (contains(l)) out.push_back(l);
    return out;
}

int LabelSet::min_label() const {
    if (empty()) throw std::logic_error("min_label of empty set");
    return std::countr_zero(bits_) + 1;
}

int LabelSet::max_label() const {
    if (empty()) throw std::logic_error("max_label of empty set");
    return 32 - std::countl_zero(bits_);
}

bool tube_order_less(const LabelSet& a, const LabelSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.labels() < b.labels();
}

std::string to_string(const LabelSet& s) {
    std::string out = "{";
    bool first = true;
    for (int l : s.labels()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(l);
    }
    return out + "}";
}

}  // namespace tubings
