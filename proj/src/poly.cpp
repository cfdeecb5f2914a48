#include "tubings/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tubings {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(Int c, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Int> v(degree + 1, 0);
    v[degree] = std::move(c);
    return IntPoly(std::move(v));
}

Int IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Int IntPoly::operator()(const Int& x) const {
    Int r = 0;
    for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Int> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& c) {
    for (auto& v : c_) v *= c;
    trim();
    return *this;
}

IntPoly IntPoly::shifted_arg(int delta) const {
    // Horner: p(x+d) built from the top coefficient down.
    IntPoly result;
    const IntPoly shift(std::vector<Int>{Int(delta), Int(1)});
    for (int k = degree(); k >= 0; --k) {
        result *= shift;
        result += IntPoly::constant(c_[k]);
    }
    return result;
}

IntPoly IntPoly::divided_exact(const Int& d) const {
    if (d == 0) throw std::domain_error("division by zero");
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const auto& v : c_) {
        if (v % d != 0)
            throw std::domain_error("inexact polynomial division by " + d.str());
        out.push_back(v / d);
    }
    return IntPoly(std::move(out));
}

bool IntPoly::palindromic(int window_degree) const {
    if (degree() > window_degree) return false;
    for (int i = 0; i <= window_degree; ++i)
        if (coeff(i) != coeff(window_degree - i)) return false;
    return true;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Int c = p.coeff(k);
        if (c == 0) continue;
        bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str();
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPoly parse_poly(const std::string& text) {
    std::vector<Int> coeffs;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_uint = [&]() -> Int {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected number in polynomial: " + text);
        return Int(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos == text.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    int sign = 1;
    while (pos < text.size()) {
        skip_ws();
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
                throw std::invalid_argument("expected sign in polynomial: " + text);
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        }
        Int mag = 1;
        bool have_digits = pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
        if (have_digits) mag = parse_uint();
        int power = 0;
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                power = static_cast<int>(parse_uint());
            }
        } else if (!have_digits) {
            throw std::invalid_argument("expected term in polynomial: " + text);
        }
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, 0);
        coeffs[power] += sign * mag;
        first = false;
        skip_ws();
    }
    return IntPoly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(std::vector<IntPoly> t_coeffs) : tc_(std::move(t_coeffs)) { trim(); }

void BiPoly::trim() {
    while (!tc_.empty() && tc_.back().is_zero()) tc_.pop_back();
}

BiPoly BiPoly::t_monomial(IntPoly x_part, int t_degree) {
    if (t_degree < 0) throw std::invalid_argument("negative t degree");
    std::vector<IntPoly> v(t_degree + 1);
    v[t_degree] = std::move(x_part);
    return BiPoly(std::move(v));
}

const IntPoly& BiPoly::t_coeff(int j) const {
    static const IntPoly zero;
    if (j < 0 || j >= static_cast<int>(tc_.size())) return zero;
    return tc_[j];
}

Int BiPoly::coeff(int j, int i) const { return t_coeff(j).coeff(i); }

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.tc_.size() > tc_.size()) tc_.resize(o.tc_.size());
    for (std::size_t i = 0; i < o.tc_.size(); ++i) tc_[i] += o.tc_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    if (is_zero() || o.is_zero()) {
        tc_.clear();
        return *this;
    }
    std::vector<IntPoly> out(tc_.size() + o.tc_.size() - 1);
    for (std::size_t i = 0; i < tc_.size(); ++i)
        for (std::size_t j = 0; j < o.tc_.size(); ++j) out[i + j] += tc_[i] * o.tc_[j];
    tc_ = std::move(out);
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Int& c) {
    for (auto& p : tc_) p *= c;
    trim();
    return *this;
}

BiPoly BiPoly::divided_exact(const Int& d) const {
    std::vector<IntPoly> out;
    out.reserve(tc_.size());
    for (const auto& p : tc_) out.push_back(p.divided_exact(d));
    return BiPoly(std::move(out));
}

std::vector<std::string> to_lines(const BiPoly& p) {
    std::vector<std::string> lines;
    if (p.is_zero()) {
        lines.push_back("t^0: 0");
        return lines;
    }
    for (int j = 0; j <= p.t_degree(); ++j) {
        if (p.t_coeff(j).is_zero()) continue;
        lines.push_back("t^" + std::to_string(j) + ": " + to_string(p.t_coeff(j)));
    }
    return lines;
}

std::string to_string(const BiPoly& p) {
    std::string out;
    for (const auto& line : to_lines(p)) {
        if (!out.empty()) out += "; ";
        out += line;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Partitions and Stirling numbers

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(n, n == 0 ? 1 : n, current, out);
    return out;
}

Int conjugacy_class_size(int n, const Partition& type) {
    if (type.sum() != n) throw std::invalid_argument("cycle type does not sum to n");
    Int denom = 1;
    int run = 0;
    for (std::size_t i = 0; i < type.parts.size(); ++i) {
        denom *= type.parts[i];
        ++run;
        if (i + 1 == type.parts.size() || type.parts[i + 1] != type.parts[i]) {
            denom *= factorial(run);
            run = 0;
        }
    }
    Int num = factorial(n);
    if (num % denom != 0) throw std::logic_error("class size not integral");
    return num / denom;
}

Int stirling_first(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("stirling_first out of range");
    // s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k)
    std::vector<Int> row{1};  // row for n = 0
    for (int m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, 0);
        for (int j = 1; j <= m; ++j) {
            next[j] = (j <= m - 1 ? row[j] * (m - 1) : Int(0));
            if (j - 1 <= m - 1) next[j] += row[j - 1];
        }
        next[0] = 0;
        row = std::move(next);
    }
    return row[k];
}

// ---------------------------------------------------------------------------
// Named polynomial families

IntPoly narayana(int n) {
    if (n < 1) throw std::invalid_argument("narayana requires n >= 1");
    std::vector<Int> c(n, 0);
    for (int k = 0; k < n; ++k) {
        Int term = binomial(n, k) * binomial(n, k + 1);
        if (term % n != 0) throw std::logic_error("narayana term not divisible by n");
        c[k] = term / n;
    }
    return IntPoly(std::move(c));
}

IntPoly narayana_type_b(int n) {
    if (n < 1) throw std::invalid_argument("narayana_type_b requires n >= 1");
    std::vector<Int> c(n, 0);
    for (int k = 0; k < n; ++k) {
        Int b = binomial(n - 1, k);
        c[k] = b * b;
    }
    return IntPoly(std::move(c));
}

IntPoly assoc_f(int n) {
    if (n < 0) throw std::invalid_argument("assoc_f requires n >= 0");
    if (n == 0) return IntPoly::constant(1);
    return narayana(n).shifted_arg(1);
}

IntPoly cyclo_f(int n) {
    if (n < 0) throw std::invalid_argument("cyclo_f requires n >= 0");
    if (n == 0) return IntPoly::constant(1);
    return narayana_type_b(n).shifted_arg(1);
}

IntPoly assoc_f_marked(int n) {
    if (n < 1) throw std::invalid_argument("assoc_f_marked requires n >= 1");
    return Int(n) * assoc_f(n - 1);
}

IntPoly reverse_within(const IntPoly& p, int n) {
    if (n < 1) throw std::invalid_argument("reverse window must be positive");
    if (p.degree() > n - 1) throw std::invalid_argument("polynomial degree exceeds reverse window");
    std::vector<Int> out(n, 0);
    for (int i = 0; i < n; ++i) out[i] = p.coeff(n - 1 - i);
    return IntPoly(std::move(out));
}

IntPoly family_poly(PolyFamily f, int n) {
    switch (f) {
        case PolyFamily::Narayana: return narayana(n);
        case PolyFamily::NarayanaB: return narayana_type_b(n);
        case PolyFamily::AssocF: return assoc_f(n);
        case PolyFamily::AssocFMarked: return assoc_f_marked(n);
        case PolyFamily::CycloF: return cyclo_f(n);
    }
    throw std::logic_error("unknown polynomial family");
}

IntPoly partition_product(PolyFamily f, const Partition& lambda, bool reversed) {
    if (lambda.parts.empty()) throw std::invalid_argument("partition_product of empty partition");
    IntPoly prod = IntPoly::constant(1);
    for (int part : lambda.parts) {
        IntPoly factor = family_poly(f, part);
        if (reversed) factor = reverse_within(factor, part);
        prod *= factor;
    }
    return prod;
}

BiPoly rising_factorial_t(int len, RisingStep mode) {
    if (len < 1) throw std::invalid_argument("rising_factorial_t requires len >= 1");
    BiPoly prod = BiPoly::t_monomial(IntPoly::constant(1), 0);
    for (int j = 0; j < len; ++j) {
        IntPoly low = mode == RisingStep::XSteps ? IntPoly::monomial(j, 1) : IntPoly::constant(j);
        prod *= BiPoly(std::vector<IntPoly>{low, IntPoly::constant(1)});
    }
    return prod;
}

namespace {
// Sums class_size(lambda) * t-part(lambda) * x-part(lambda) over all cycle
// types of S_n; every P_w depends only on the conjugacy class of w, so the
// n! permutations collapse to the partitions of n.
template <typename TermFn>
BiPoly sum_over_cycle_types(int n, TermFn term) {
    BiPoly out;
    for (const Partition& lambda : partitions_of(n))
        out += conjugacy_class_size(n, lambda) * term(lambda);
    return out;
}
}  // namespace

BiPoly eq2_lhs(int n) {
    if (n < 1) throw std::invalid_argument("eq2_lhs requires n >= 1");
    return sum_over_cycle_types(n, [](const Partition& lambda) {
        return BiPoly::t_monomial(partition_product(PolyFamily::CycloF, lambda), lambda.length());
    });
}

BiPoly eq2_rhs(int n) {
    if (n < 1) throw std::invalid_argument("eq2_rhs requires n >= 1");
    return sum_over_cycle_types(n, [](const Partition& lambda) {
        return rising_factorial_t(lambda.length(), RisingStep::XSteps) *
               BiPoly::t_monomial(partition_product(PolyFamily::AssocFMarked, lambda), 0);
    });
}

BiPoly eq3_lhs(int n) {
    if (n < 1) throw std::invalid_argument("eq3_lhs requires n >= 1");
    return sum_over_cycle_types(n, [](const Partition& lambda) {
        return BiPoly::t_monomial(partition_product(PolyFamily::CycloF, lambda, true), lambda.length());
    });
}

BiPoly eq3_rhs(int n) {
    if (n < 1) throw std::invalid_argument("eq3_rhs requires n >= 1");
    return sum_over_cycle_types(n, [](const Partition& lambda) {
        return rising_factorial_t(lambda.length(), RisingStep::UnitSteps) *
               BiPoly::t_monomial(partition_product(PolyFamily::AssocFMarked, lambda, true), 0);
    });
}

BiPoly reciprocal_substitution(const BiPoly& q, int n) {
    std::vector<IntPoly> out;
    std::vector<std::vector<Int>> acc;
    for (int j = 0; j <= q.t_degree(); ++j) {
        const IntPoly& xj = q.t_coeff(j);
        for (int i = 0; i <= xj.degree(); ++i) {
            Int c = xj.coeff(i);
            if (c == 0) continue;
            int e = n - j - i;
            if (e < 0)
                throw std::domain_error("reciprocal_substitution: total degree exceeds n");
            if (static_cast<int>(acc.size()) <= j) acc.resize(j + 1);
            if (static_cast<int>(acc[j].size()) <= e) acc[j].resize(e + 1, 0);
            acc[j][e] += c;
        }
    }
    out.reserve(acc.size());
    for (auto& row : acc) out.emplace_back(std::move(row));
    return BiPoly(std::move(out));
}

IntPoly f_to_h(const IntPoly& f) { return f.shifted_arg(-1); }

IntPoly h_to_f(const IntPoly& h) { return h.shifted_arg(1); }

}  // namespace tubings
