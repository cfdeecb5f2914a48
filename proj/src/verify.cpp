#include "tubings/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tubings/perm.hpp"

#include "json.hpp"

namespace tubings {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string format_seconds(double s) {
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << s;
    return out.str();
}

void require_autonomous_chain(const Poset& p, const ElementSet& s) {
    if (s.empty()) throw std::invalid_argument("block is empty");
    if (s.size() == p.size()) throw std::invalid_argument("block must be a proper subposet");
    auto members = s.labels();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int x = members[i], y = members[j];
            if (!p.leq(x, y) && !p.leq(y, x))
                throw std::invalid_argument("block is not a chain: elements " + std::to_string(x) +
                                            " and " + std::to_string(y) + " are incomparable");
        }
    for (int z = 1; z <= p.size(); ++z) {
        if (s.contains(z)) continue;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                int x = members[i], y = members[j];
                if (p.leq(x, z) != p.leq(y, z) || p.leq(z, x) != p.leq(z, y))
                    throw std::invalid_argument(
                        "block is not autonomous: element " + std::to_string(z) +
                        " sees " + std::to_string(x) + " and " + std::to_string(y) +
                        " differently");
            }
    }
}

/// sum over cycle types of S_n of class_size * B_lambda * term(l(lambda))
IntPoly b_weighted_sum(int n, const std::function<IntPoly(int)>& term) {
    IntPoly sum;
    for (const Partition& lam : partitions_of(n))
        sum += conjugacy_class_size(n, lam) *
               (partition_product(PolyFamily::NarayanaB, lam) * term(lam.length()));
    return sum;
}

IntPoly b_weighted_double_sum(int n, int k, const std::function<IntPoly(int, int)>& term) {
    IntPoly sum;
    for (const Partition& lp : partitions_of(n))
        for (const Partition& ls : partitions_of(k))
            sum += conjugacy_class_size(n, lp) * conjugacy_class_size(k, ls) *
                   (partition_product(PolyFamily::NarayanaB, lp) *
                    partition_product(PolyFamily::NarayanaB, ls) *
                    term(lp.length(), ls.length()));
    return sum;
}

std::string poset_summary(const Poset& p) {
    std::string out = "n " + std::to_string(p.size());
    for (auto [a, b] : p.covers()) out += "; " + std::to_string(a) + " < " + std::to_string(b);
    return out;
}

std::string render_counts(const std::map<int, Int>& counts) {
    std::string out;
    for (const auto& [k, c] : counts) {
        if (c == 0) continue;
        if (!out.empty()) out += "; ";
        out += "k " + std::to_string(k) + " " + c.str();
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render_text(const VerificationReport& r) {
    std::string out = "identity: " + r.identity + "\n";
    for (const auto& [key, value] : r.parameters) out += key + ": " + value + "\n";
    out += "lhs: " + r.lhs + "\n";
    out += "rhs: " + r.rhs + "\n";
    out += "equal: " + std::string(r.equal ? "true" : "false") + "\n";
    out += "elapsed: " + format_seconds(r.seconds) + "s\n";
    return out;
}

std::string render_json(const VerificationReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : r.parameters) params[key] = value;
    j["parameters"] = params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["equal"] = r.equal;
    j["seconds"] = r.seconds;
    return j.dump(2);
}

VerificationReport verify_h_substitution(const Poset& p, const ElementSet& chain_block) {
    Timer timer;
    require_autonomous_chain(p, chain_block);
    const int n = chain_block.size();

    IntPoly lhs = h_polynomial(p);
    IntPoly rhs = b_weighted_sum(n, [&](int ell) {
                      return h_polynomial(substitute(p, chain_block, Poset::antichain(ell)));
                  }).divided_exact(factorial(n));

    VerificationReport r;
    r.identity = "h-substitution";
    r.parameters = {{"poset", poset_summary(p)}, {"block", to_string(chain_block)}};
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.equal = lhs == rhs;
    r.seconds = timer.elapsed();
    return r;
}

VerificationReport verify_nondegradable_counts(const Poset& p, const ElementSet& chain_block) {
    Timer timer;
    require_autonomous_chain(p, chain_block);
    const int n = chain_block.size();

    SplitCensus split = split_census(p, chain_block);
    std::map<int, Int> lhs, rhs;
    const Int nf = factorial(n);
    for (const auto& [k, c] : split.nondegradable.by_tube_count) lhs[k] = nf * c;
    for (int i = 1; i <= n; ++i) {
        FaceCount census = tubing_census(substitute(p, chain_block, Poset::antichain(i)));
        const Int weight = stirling_first(n, i);
        for (const auto& [k, c] : census.by_tube_count) rhs[k] += weight * c;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });

    VerificationReport r;
    r.identity = "nondegradable-counts";
    r.parameters = {{"poset", poset_summary(p)}, {"block", to_string(chain_block)}};
    r.lhs = render_counts(lhs);
    r.rhs = render_counts(rhs);
    r.equal = lhs == rhs;
    r.seconds = timer.elapsed();
    return r;
}

VerificationReport verify_eq(int n, const std::string& which) {
    Timer timer;
    BiPoly lhs, rhs;
    if (which == "eq2") {
        lhs = eq2_lhs(n);
        rhs = eq2_rhs(n);
    } else if (which == "eq3") {
        lhs = eq3_lhs(n);
        rhs = eq3_rhs(n);
    } else {
        throw std::invalid_argument("which must be eq2 or eq3");
    }
    VerificationReport r;
    r.identity = which;
    r.parameters = {{"n", std::to_string(n)}};
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.equal = lhs == rhs;
    r.seconds = timer.elapsed();
    return r;
}

const std::vector<std::string>& corollary_names() {
    static const std::vector<std::string> names{"5.1", "5.2", "5.3", "5.4",
                                                "5.5", "5.6", "5.7", "final-prop"};
    return names;
}

VerificationReport verify_corollary(const std::string& name, int n, int k) {
    Timer timer;
    VerificationReport r;
    r.identity = name;
    r.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};

    IntPoly lhs, rhs;
    const IntPoly one_plus_x(std::vector<Int>{1, 1});

    if (name == "5.1") {
        if (n < 1) throw std::invalid_argument("5.1 requires n >= 1");
        r.parameters = {{"n", std::to_string(n)}};
        lhs = narayana(n);
        rhs = b_weighted_sum(n, [](int ell) { return eulerian(ell); }).divided_exact(factorial(n));
    } else if (name == "5.2") {
        if (n < 1 || k < 1) throw std::invalid_argument("5.2 requires n, k >= 1");
        lhs = narayana(n + k);
        rhs = b_weighted_sum(k, [&](int ell) { return broom_narayana(n, ell); })
                  .divided_exact(factorial(k));
    } else if (name == "5.3") {
        if (n < 1 || k < 1) throw std::invalid_argument("5.3 requires n, k >= 1");
        lhs = broom_narayana(n, k);
        rhs = b_weighted_sum(n, [&](int ell) { return eulerian(ell + k); })
                  .divided_exact(factorial(n));
    } else if (name == "5.4") {
        if (n < 1 || k < 1) throw std::invalid_argument("5.4 requires n, k >= 1");
        lhs = narayana(n + k);
        rhs = b_weighted_double_sum(n, k, [](int lp, int ls) { return eulerian(lp + ls); })
                  .divided_exact(factorial(n) * factorial(k));
    } else if (name == "5.5") {
        if (n < 1 || k < 1) throw std::invalid_argument("5.5 requires n, k >= 1");
        lhs = b_weighted_sum(n + k, [](int ell) { return eulerian(ell); })
                  .divided_exact(factorial(n + k));
        rhs = b_weighted_double_sum(n, k, [](int lp, int ls) { return eulerian(lp + ls); })
                  .divided_exact(factorial(n) * factorial(k));
    } else if (name == "5.6") {
        if (n < 1 || k < 1) throw std::invalid_argument("5.6 requires n, k >= 1");
        lhs = broom_narayana(n - 1, k);
        rhs = b_weighted_sum(n, [&](int ell) { return eulerian_restricted(ell, k); })
                  .divided_exact(factorial(n));
    } else if (name == "5.7") {
        if (n < 1 || k < 1) throw std::invalid_argument("5.7 requires n, k >= 1");
        lhs = narayana(n + k - 1);
        rhs = b_weighted_double_sum(
                  n, k, [](int lp, int ls) { return eulerian_restricted(lp, ls); })
                  .divided_exact(factorial(n) * factorial(k));
    } else if (name == "final-prop") {
        if (n < 1 || k < 0 || (n == 1 && k == 0))
            throw std::invalid_argument("final-prop requires n >= 1, k >= 0, not both minimal");
        lhs = Int(2) * broom_narayana(n, k) - one_plus_x * broom_narayana(n - 1, k);

        std::vector<Poset> blocks{Poset::antichain(2)};
        if (n - 1 >= 1) blocks.push_back(Poset::chain(n - 1));
        if (k >= 1) blocks.push_back(Poset::antichain(k));
        rhs = h_polynomial(ordinal_sum(blocks));

        // third route: descents over the restricted stack-sorting preimages
        const int m = n + k + 1;
        std::vector<Int> coeffs;
        for_each_permutation(m, [&](const Permutation& w) {
            if (w(1) > n + k - 1 || w(m) < n + k) return;
            Permutation s = stack_sort(w);
            for (int i = k + 1; i <= m; ++i)
                if (s(i) != i) return;
            int d = descents(w);
            if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, 0);
            coeffs[d] += 1;
        });
        IntPoly preimage_gf(std::move(coeffs));
        r.parameters.emplace_back("preimage-descent-gf", to_string(preimage_gf));
        r.lhs = to_string(lhs);
        r.rhs = to_string(rhs);
        r.equal = lhs == rhs && lhs == preimage_gf;
        r.seconds = timer.elapsed();
        return r;
    } else {
        throw std::invalid_argument("unknown corollary: " + name);
    }

    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.equal = lhs == rhs;
    r.seconds = timer.elapsed();
    return r;
}

}  // namespace tubings
