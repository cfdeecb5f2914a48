#include "tubings/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tubings {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& strict_relations) : n_(n) {
    if (n < 1) throw std::invalid_argument("poset must have at least one element");
    if (n > LabelSet::kMaxLabel) throw std::invalid_argument("poset too large");
    leq_.assign(n * n, false);
    for (int i = 0; i < n; ++i) leq_[i * n + i] = true;
    for (auto [a, b] : strict_relations) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("relation element out of range");
        if (a == b) throw std::invalid_argument("strict relation cannot be reflexive");
        leq_[(a - 1) * n + (b - 1)] = true;
    }
    // Warshall closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq_[i * n + k])
                for (int j = 0; j < n; ++j)
                    if (leq_[k * n + j]) leq_[i * n + j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq_[i * n + j] && leq_[j * n + i])
                throw std::invalid_argument("relation has a cycle: " + std::to_string(i + 1) +
                                            " and " + std::to_string(j + 1));
    // covers = transitive reduction
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool covered = true;
            for (int c = 1; c <= n && covered; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
            if (covered) covers_.emplace_back(a, b);
        }
    std::sort(covers_.begin(), covers_.end());
    hasse_.assign(n + 1, ElementSet{});
    for (auto [a, b] : covers_) {
        hasse_[a].insert(b);
        hasse_[b].insert(a);
    }
}

Poset Poset::chain(int n) {
    if (n < 1) throw std::invalid_argument("chain requires n >= 1");
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < n; ++i) rel.emplace_back(i, i + 1);
    return Poset(n, rel);
}

Poset Poset::antichain(int n) {
    if (n < 1) throw std::invalid_argument("antichain requires n >= 1");
    return Poset(n, {});
}

bool Poset::connected() const { return is_connected(*this, ElementSet::full(n_)); }

Poset ordinal_sum(const Poset& lower, const Poset& upper) {
    const int n1 = lower.size(), n2 = upper.size();
    std::vector<std::pair<int, int>> rel;
    for (int a = 1; a <= n1; ++a)
        for (int b = 1; b <= n1; ++b)
            if (lower.less(a, b)) rel.emplace_back(a, b);
    for (int a = 1; a <= n2; ++a)
        for (int b = 1; b <= n2; ++b)
            if (upper.less(a, b)) rel.emplace_back(n1 + a, n1 + b);
    for (int a = 1; a <= n1; ++a)
        for (int b = 1; b <= n2; ++b) rel.emplace_back(a, n1 + b);
    return Poset(n1 + n2, rel);
}

Poset ordinal_sum(const std::vector<Poset>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("ordinal sum of no blocks");
    Poset acc = blocks.front();
    for (std::size_t i = 1; i < blocks.size(); ++i) acc = ordinal_sum(acc, blocks[i]);
    return acc;
}

Poset claw(int n) { return ordinal_sum(Poset::antichain(1), Poset::antichain(n)); }

Poset broom_poset(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("broom_poset requires n, k >= 0");
    Poset handle = Poset::chain(n + 1);
    if (k == 0) return handle;
    return ordinal_sum(handle, Poset::antichain(k));
}

bool is_convex(const Poset& p, const ElementSet& s) {
    for (int y = 1; y <= p.size(); ++y) {
        if (s.contains(y)) continue;
        bool above_some = false, below_some = false;
        for (int x : s.labels()) {
            if (p.less(x, y)) above_some = true;
            if (p.less(y, x)) below_some = true;
        }
        if (above_some && below_some) return false;
    }
    return true;
}

bool is_connected(const Poset& p, const ElementSet& s) {
    if (s.empty()) throw std::invalid_argument("connectivity of the empty set");
    ElementSet visited;
    ElementSet frontier = ElementSet::of({s.min_label()});
    while (!frontier.empty()) {
        int v = frontier.min_label();
        frontier.erase(v);
        visited.insert(v);
        frontier |= (p.hasse_adjacency()[v] & s) - visited;
    }
    return visited == s;
}

bool is_tube(const Poset& p, const ElementSet& s) {
    if (s.empty()) return false;
    return is_connected(p, s) && is_convex(p, s);
}

bool is_proper_tube(const Poset& p, const ElementSet& s) {
    return s.size() > 1 && s.size() < p.size() && is_tube(p, s);
}

bool is_autonomous(const Poset& p, const ElementSet& s) {
    if (s.empty()) throw std::invalid_argument("autonomy of the empty set");
    auto members = s.labels();
    const int rep = members.front();
    for (int z = 1; z <= p.size(); ++z) {
        if (s.contains(z)) continue;
        for (int x : members) {
            if (p.leq(x, z) != p.leq(rep, z)) return false;
            if (p.leq(z, x) != p.leq(z, rep)) return false;
        }
    }
    return true;
}

bool is_chain_set(const Poset& p, const ElementSet& s) {
    auto members = s.labels();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!p.leq(members[i], members[j]) && !p.leq(members[j], members[i])) return false;
    return true;
}

Poset substitute(const Poset& p, const ElementSet& s, const Poset& replacement) {
    if (s.empty() || s.size() == p.size())
        throw std::invalid_argument("substituted set must be nonempty and proper");
    if (!is_autonomous(p, s))
        throw std::invalid_argument("substituted set must be autonomous");

    const int keep = p.size() - s.size();
    const int m = keep + replacement.size();
    // outside elements keep their relative order; the replacement block
    // starts where min(s) was
    std::vector<int> outside;  // old labels, ascending
    for (int v = 1; v <= p.size(); ++v)
        if (!s.contains(v)) outside.push_back(v);
    const int block_start =
        static_cast<int>(std::count_if(outside.begin(), outside.end(),
                                       [&](int v) { return v < s.min_label(); })) + 1;

    std::vector<int> new_label_of_outside(p.size() + 1, 0);
    int next = 1;
    for (int v : outside) {
        if (next == block_start) next += replacement.size();
        new_label_of_outside[v] = next++;
    }

    const int rep = s.min_label();
    std::vector<std::pair<int, int>> rel;
    for (int a : outside)
        for (int b : outside)
            if (p.less(a, b)) rel.emplace_back(new_label_of_outside[a], new_label_of_outside[b]);
    for (int a = 1; a <= replacement.size(); ++a)
        for (int b = 1; b <= replacement.size(); ++b)
            if (replacement.less(a, b))
                rel.emplace_back(block_start + a - 1, block_start + b - 1);
    for (int z : outside) {
        if (p.less(z, rep))
            for (int a = 0; a < replacement.size(); ++a)
                rel.emplace_back(new_label_of_outside[z], block_start + a);
        if (p.less(rep, z))
            for (int a = 0; a < replacement.size(); ++a)
                rel.emplace_back(block_start + a, new_label_of_outside[z]);
    }
    return Poset(m, rel);
}

ElementSet substituted_block(const Poset& p, const ElementSet& s, int replacement_size) {
    if (s.empty() || !s.subset_of(ElementSet::full(p.size())))
        throw std::invalid_argument("substituted set must be a nonempty subset of the poset");
    int below = 0;
    for (int v = 1; v < s.min_label(); ++v)
        if (!s.contains(v)) ++below;
    return ElementSet::range(below + 1, below + replacement_size);
}

bool isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j)
                if (a.leq(i, j) != b.leq(perm[i - 1], perm[j - 1])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Poset parse_poset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> rel;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag)) continue;  // blank before header
            if (tag != "n" || !(ls >> n) || n < 1)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected header \"n <count>\"");
            continue;
        }
        int a, b;
        std::string op;
        if (!(ls >> a)) continue;  // blank line
        if (!(ls >> op >> b) || op != "<")
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected \"a < b\"");
        rel.emplace_back(a, b);
    }
    if (n < 0) throw std::invalid_argument("missing \"n <count>\" header");
    return Poset(n, rel);
}

std::string write_poset(const Poset& p) {
    std::string out = "n " + std::to_string(p.size()) + "\n";
    for (auto [a, b] : p.covers())
        out += std::to_string(a) + " < " + std::to_string(b) + "\n";
    return out;
}

}  // namespace tubings
