#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tubings/poly.hpp"
#include "tubings/poset.hpp"
#include "tubings/poset_tubings.hpp"

namespace tubings {

struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    double seconds = 0.0;
};

/// Line-oriented "key: value" rendering.
std::string render_text(const VerificationReport& r);
std::string render_json(const VerificationReport& r);

/// The h-polynomial substitution identity: for a proper autonomous chain S
/// of size n in P, with P_i the poset obtained by replacing S by an
/// antichain of size i,
///     h_P = (1/n!) sum over w in S_n of B_w * h_{P_{l_w}}.
/// The left side is enumerated directly; the right side enumerates each
/// P_i and combines over cycle types with type B Narayana weights.
/// Throws std::invalid_argument naming the failing pair when S is not a
/// proper autonomous chain.
VerificationReport verify_h_substitution(const Poset& p, const ElementSet& chain_block);

/// The nondegradable-count identity behind the substitution theorem:
/// n! * t_k = sum over i of s(n,i) * t_{i,k}, where t_k counts
/// nondegradable tubings of P and t_{i,k} counts all tubings of the
/// antichain substitution P_i.
VerificationReport verify_nondegradable_counts(const Poset& p, const ElementSet& chain_block);

/// "eq2" or "eq3": the cycle-type polynomial identities compared exactly as
/// bivariate polynomials.
VerificationReport verify_eq(int n, const std::string& which);

/// Named corollary identities "5.1" ... "5.7" and "final-prop".
/// Parameters: n (and k where the identity uses one; pass 0 otherwise).
VerificationReport verify_corollary(const std::string& name, int n, int k);
const std::vector<std::string>& corollary_names();

namespace selftest {
/// Runs the full verification suite, printing one pass/fail line per
/// criterion. Returns true when every criterion passes.
bool run_all(std::ostream& out);
}  // namespace selftest

}  // namespace tubings
