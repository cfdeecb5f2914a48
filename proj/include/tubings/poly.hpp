#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace tubings {

/// All polynomial arithmetic is exact; coefficients are arbitrary-precision
/// integers. The occasional 1/n or 1/n! in an identity is handled by an
/// exact-division assert rather than rational arithmetic: a nonzero
/// remainder always signals a bug, never a rounding concern.
using Int = boost::multiprecision::cpp_int;

Int binomial(int n, int k);
Int factorial(int n);

/// Dense univariate polynomial in x. Canonical form: no trailing zero
/// coefficient; the zero polynomial stores an empty list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int degree);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int operator()(const Int& x) const;

    /// p(x + delta), composed exactly.
    IntPoly shifted_arg(int delta) const;
    /// Coefficient-wise division; throws std::domain_error on any remainder.
    IntPoly divided_exact(const Int& d) const;
    /// coeff(i) == coeff(window_degree - i) for all i.
    bool palindromic(int window_degree) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const Int& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(const Int& c, IntPoly p) { return p *= c; }
    friend IntPoly operator*(IntPoly p, const Int& c) { return p *= c; }

    bool operator==(const IntPoly&) const = default;

private:
    std::vector<Int> c_;
    void trim();
};

/// Ascending-power rendering, e.g. "1 + 3x + x^2"; the zero polynomial is "0".
std::string to_string(const IntPoly& p);
/// Parses the same grammar the renderer emits (signs, optional coefficient,
/// optional ^power). Throws std::invalid_argument on malformed input.
IntPoly parse_poly(const std::string& text);

/// Polynomial in t whose coefficients are IntPoly values in x. Canonical:
/// the top t-coefficient is nonzero. t-degrees stay small (at most the
/// cycle count of a permutation), so t is the primary index.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<IntPoly> t_coeffs);

    static BiPoly t_monomial(IntPoly x_part, int t_degree);

    int t_degree() const { return static_cast<int>(tc_.size()) - 1; }
    bool is_zero() const { return tc_.empty(); }
    const IntPoly& t_coeff(int j) const;

    /// Coefficient of t^j x^i.
    Int coeff(int j, int i) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Int& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(const Int& c, BiPoly p) { return p *= c; }

    BiPoly divided_exact(const Int& d) const;

    bool operator==(const BiPoly&) const = default;

private:
    std::vector<IntPoly> tc_;
    void trim();
};

/// One "t^k: ..." line per t-power, ascending.
std::vector<std::string> to_lines(const BiPoly& p);
std::string to_string(const BiPoly& p);

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition&) const = default;
};

std::vector<Partition> partitions_of(int n);
/// Number of permutations in S_n with the given cycle type:
/// n! / (prod of parts * prod of multiplicity factorials).
Int conjugacy_class_size(int n, const Partition& type);

/// Unsigned Stirling number of the first kind: permutations of S_n with k
/// cycles; coefficient of x^k in x(x+1)...(x+n-1).
Int stirling_first(int n, int k);

IntPoly narayana(int n);         // N_n = sum (1/n) C(n,k) C(n,k+1) x^k
IntPoly narayana_type_b(int n);  // B_n = sum C(n-1,k)^2 x^k
IntPoly assoc_f(int n);          // F_n = N_n(x+1); F_0 = 1
IntPoly cyclo_f(int n);          // G_n = B_n(x+1); G_0 = 1
IntPoly assoc_f_marked(int n);   // n * F_{n-1}

/// x^{n-1} p(1/x): reverses the coefficient list within a window of length
/// n. Requires deg(p) <= n-1.
IntPoly reverse_within(const IntPoly& p, int n);

enum class PolyFamily { Narayana, NarayanaB, AssocF, AssocFMarked, CycloF };
IntPoly family_poly(PolyFamily f, int n);
/// Product over parts; each factor reversed within its part when requested.
IntPoly partition_product(PolyFamily f, const Partition& lambda, bool reversed = false);

enum class RisingStep { XSteps, UnitSteps };
/// t(t+x)(t+2x)... or t(t+1)(t+2)..., with `len` factors.
BiPoly rising_factorial_t(int len, RisingStep mode);

/// The two sides of the cycle-type identities, summed over S_n by
/// conjugacy class:
///   eq2:  sum t^{l_w} G_w(x)      =  sum t(t+x)...(t+(l_w-1)x) Ftilde_w(x)
///   eq3:  sum t^{l_w} Grev_w(x)   =  sum t(t+1)...(t+l_w-1)    Ftilderev_w(x)
BiPoly eq2_lhs(int n);
BiPoly eq2_rhs(int n);
BiPoly eq3_lhs(int n);
BiPoly eq3_rhs(int n);

/// Divides by x^n then replaces t/x by t and x by 1/x; term t^j x^i maps to
/// t^j x^{n-j-i}. Carries each eq2 side onto the matching eq3 side. Throws
/// std::domain_error if any exponent would go negative.
BiPoly reciprocal_substitution(const BiPoly& q, int n);

IntPoly f_to_h(const IntPoly& f);  // h(t) = f(t-1)
IntPoly h_to_f(const IntPoly& h);  // f(t) = h(t+1)

}  // namespace tubings
