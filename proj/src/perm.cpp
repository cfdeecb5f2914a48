#include "tubings/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tubings {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : w_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::string to_string(const Permutation& w) {
    std::string out;
    const bool digits = w.size() <= 9;
    for (int i = 0; i < w.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(w.one_line()[i]);
    }
    return out;
}

Permutation parse_one_line(const std::string& text) {
    std::vector<int> v;
    if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
        std::string num;
        for (char c : text) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                num += c;
            } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                if (!num.empty()) v.push_back(std::stoi(num));
                num.clear();
            } else {
                throw std::invalid_argument("bad permutation: " + text);
            }
        }
        if (!num.empty()) v.push_back(std::stoi(num));
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad permutation: " + text);
            v.push_back(c - '0');
        }
    }
    if (v.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(v));
}

std::vector<std::vector<int>> cycles(const Permutation& w) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(w.size() + 1, false);
    for (int start = 1; start <= w.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[cur] = true;
            cycle.push_back(cur);
            cur = w(cur);
        } while (cur != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string to_cycle_string(const Permutation& w) {
    std::string out;
    const bool digits = w.size() <= 9;
    for (const auto& cycle : cycles(w)) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (!digits && i > 0) out += ',';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

Permutation parse_cycles(const std::string& text, int n) {
    std::vector<int> image(n + 1, 0);
    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("bad cycle notation: " + text); };
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
        if (text[pos] != '(') fail();
        ++pos;
        std::vector<int> cycle;
        std::string num;
        for (; pos < text.size() && text[pos] != ')'; ++pos) {
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                num += c;
                if (n <= 9) {  // single-digit labels
                    cycle.push_back(std::stoi(num));
                    num.clear();
                }
            } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                if (!num.empty()) cycle.push_back(std::stoi(num));
                num.clear();
            } else {
                fail();
            }
        }
        if (pos >= text.size()) fail();
        ++pos;  // consume ')'
        if (!num.empty()) cycle.push_back(std::stoi(num));
        if (cycle.empty()) fail();
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (from < 1 || from > n || image[from] != 0) fail();
            image[from] = to;
        }
    }
    std::vector<int> one_line(n);
    for (int i = 1; i <= n; ++i) {
        if (image[i] == 0) fail();  // every element must appear in some cycle
        one_line[i - 1] = image[i];
    }
    return Permutation(std::move(one_line));
}

Partition cycle_type(const Permutation& w) {
    std::vector<int> lengths;
    for (const auto& c : cycles(w)) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

int cycle_count(const Permutation& w) { return static_cast<int>(cycles(w).size()); }

int descents(const Permutation& w) {
    int d = 0;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) ++d;
    return d;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

IntPoly descent_gf(const std::vector<Permutation>& ws) {
    std::vector<Int> coeffs;
    for (const auto& w : ws) {
        int d = descents(w);
        if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, 0);
        coeffs[d] += 1;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly eulerian(int n) {
    if (n < 0) throw std::invalid_argument("eulerian requires n >= 0");
    std::vector<Int> coeffs;
    for_each_permutation(n, [&](const Permutation& w) {
        int d = descents(w);
        if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, 0);
        coeffs[d] += 1;
    });
    return IntPoly(std::move(coeffs));
}

IntPoly eulerian_restricted(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("eulerian_restricted requires m, n >= 1");
    std::vector<Int> coeffs;
    for_each_permutation(m + n, [&](const Permutation& w) {
        if (w(1) > m || w(m + n) < m + 1) return;
        int d = descents(w);
        if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, 0);
        coeffs[d] += 1;
    });
    return IntPoly(std::move(coeffs));
}

Permutation stack_sort(const Permutation& w) {
    std::vector<int> stack, out;
    out.reserve(w.size());
    for (int v : w.one_line()) {
        while (!stack.empty() && v > stack.back()) {
            out.push_back(stack.back());
            stack.pop_back();
        }
        stack.push_back(v);
    }
    while (!stack.empty()) {
        out.push_back(stack.back());
        stack.pop_back();
    }
    return Permutation(std::move(out));
}

std::vector<Permutation> stack_preimage(const Permutation& target) {
    std::vector<Permutation> out;
    for_each_permutation(target.size(), [&](const Permutation& w) {
        if (stack_sort(w) == target) out.push_back(w);
    });
    return out;
}

IntPoly broom_narayana(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("broom_narayana requires n, k >= 0");
    std::vector<Int> coeffs;
    for_each_permutation(n + k, [&](const Permutation& w) {
        Permutation s = stack_sort(w);
        for (int i = k + 1; i <= n + k; ++i)
            if (s(i) != i) return;
        int d = descents(w);
        if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, 0);
        coeffs[d] += 1;
    });
    return IntPoly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Compositions and ordered set partitions

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions of a negative integer");
    std::vector<Composition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
    std::vector<int> all;
    for (auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty block in ordered set partition");
        std::sort(block.begin(), block.end());
        all.insert(all.end(), block.begin(), block.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("blocks must partition 1..m");
}

int OrderedSetPartition::ground_size() const {
    int s = 0;
    for (const auto& b : blocks) s += static_cast<int>(b.size());
    return s;
}

std::vector<OrderedSetPartition> ordered_set_partitions(int m) {
    std::vector<OrderedSetPartition> out;
    std::vector<std::vector<int>> current;
    std::vector<int> remaining(m);
    std::iota(remaining.begin(), remaining.end(), 1);
    auto rec = [&](auto&& self, std::vector<int> rest) -> void {
        if (rest.empty()) {
            out.emplace_back(current);
            return;
        }
        // choose the next block: any nonempty subset of the rest
        int r = static_cast<int>(rest.size());
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
            std::vector<int> block, next;
            for (int i = 0; i < r; ++i)
                ((mask >> i) & 1u ? block : next).push_back(rest[i]);
            current.push_back(std::move(block));
            self(self, std::move(next));
            current.pop_back();
        }
    };
    rec(rec, std::move(remaining));
    return out;
}

// ---------------------------------------------------------------------------
// Bijection between (w, composition) and (cycles, ordered set partition)

CycleSplit composition_to_cycles(const Permutation& w, const Composition& alpha) {
    const int n = w.size();
    if (alpha.sum() != n) throw std::invalid_argument("composition does not sum to |w|");

    std::vector<int> omega_line(n, 0);
    std::vector<int> segment_of(n + 1, 0);  // element -> segment index (1-based)
    int pos = 0;
    for (int i = 0; i < alpha.length(); ++i) {
        std::vector<int> segment(w.one_line().begin() + pos, w.one_line().begin() + pos + alpha.parts[i]);
        pos += alpha.parts[i];
        std::vector<int> values = segment;
        std::sort(values.begin(), values.end());
        // read the segment as a permutation of its own value set
        for (std::size_t j = 0; j < segment.size(); ++j) {
            omega_line[values[j] - 1] = segment[j];
            segment_of[values[j]] = i + 1;
        }
    }
    Permutation omega(std::move(omega_line));

    std::vector<std::vector<int>> blocks(alpha.length());
    auto omega_cycles = cycles(omega);
    for (std::size_t j = 0; j < omega_cycles.size(); ++j) {
        // a cycle's support lies inside exactly one segment's value set
        blocks[segment_of[omega_cycles[j][0]] - 1].push_back(static_cast<int>(j) + 1);
    }
    return CycleSplit{std::move(omega), OrderedSetPartition(std::move(blocks))};
}

SegmentForm cycles_to_composition(const Permutation& omega, const OrderedSetPartition& blocks) {
    auto omega_cycles = cycles(omega);
    const int ell = static_cast<int>(omega_cycles.size());
    if (blocks.ground_size() != ell)
        throw std::invalid_argument("set partition must cover one index per cycle");

    std::vector<int> w_line;
    std::vector<int> parts;
    for (const auto& block : blocks.blocks) {
        std::vector<int> support;
        for (int j : block) {
            if (j < 1 || j > ell) throw std::invalid_argument("cycle index out of range");
            const auto& cyc = omega_cycles[j - 1];
            support.insert(support.end(), cyc.begin(), cyc.end());
        }
        std::sort(support.begin(), support.end());
        for (int v : support) w_line.push_back(omega(v));
        parts.push_back(static_cast<int>(support.size()));
    }
    return SegmentForm{Permutation(std::move(w_line)), Composition(std::move(parts))};
}

}  // namespace tubings
