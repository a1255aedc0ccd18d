#pragma once

// Hand-derived formulas for R(X) of the parametrized families, the
// inequalities behind them, and the bounds that drive their limits. These are
// evaluated independently of the engine: integrands are assembled from
// binomial expansions of each power factor and multiplied by plain
// convolution.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "grlb/engine.hpp"
#include "grlb/error.hpp"
#include "grlb/polynomial.hpp"
#include "grlb/rational.hpp"

namespace grlb::closed_forms {

enum class Relation {
    lower_bound, ///< lhs > rhs (strict) or lhs >= rhs
    upper_bound, ///< lhs < rhs (strict) or lhs <= rhs
    sign,        ///< sign(lhs) == rhs, rhs in {-1, 0, 1}
    equality,    ///< lhs == rhs
};

constexpr std::string_view to_string(Relation r) noexcept {
    switch (r) {
    case Relation::lower_bound: return "lower-bound";
    case Relation::upper_bound: return "upper-bound";
    case Relation::sign: return "sign";
    case Relation::equality: return "equality";
    }
    return "?";
}

struct BoundCheck {
    std::string name;
    std::map<std::string, int> params;
    Relation relation = Relation::equality;
    bool strict = false;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    /// rhs - lhs for upper bounds, lhs - rhs for lower bounds, as decimal
    /// text; filled by the floating comparisons.
    std::string margin;
};

inline bool evaluate_relation(Relation relation, bool strict, const Rational& lhs, const Rational& rhs) {
    switch (relation) {
    case Relation::lower_bound: return strict ? lhs > rhs : lhs >= rhs;
    case Relation::upper_bound: return strict ? lhs < rhs : lhs <= rhs;
    case Relation::sign: return sgn(lhs) == sgn(rhs);
    case Relation::equality: return lhs == rhs;
    }
    return false;
}

inline BoundCheck make_check(std::string name, std::map<std::string, int> params, Relation relation,
                             bool strict, Rational lhs, Rational rhs) {
    BoundCheck check{std::move(name), std::move(params), relation, strict, std::move(lhs), std::move(rhs), false, {}};
    check.holds = evaluate_relation(check.relation, check.strict, check.lhs, check.rhs);
    return check;
}

namespace detail {

/// (shift + slope t)^exponent by the binomial theorem.
inline std::vector<Integer> binomial_power(long shift, long slope, unsigned long exponent) {
    std::vector<Integer> out(exponent + 1);
    Integer binom(1);
    Integer slope_power(1);
    const Integer s(shift);
    for (unsigned long k = 0; k <= exponent; ++k) {
        Integer shift_power;
        mpz_pow_ui(shift_power.get_mpz_t(), s.get_mpz_t(), exponent - k);
        out[k] = binom * slope_power * shift_power;
        binom *= exponent - k;
        binom /= k + 1;
        slope_power *= slope;
    }
    return out;
}

inline std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

struct PowerFactor {
    long shift;
    long slope;
    unsigned long exponent;
};

/// prod (shift + slope t)^exponent as an exact polynomial.
inline Polynomial expand(const std::vector<PowerFactor>& factors) {
    std::vector<Integer> acc{Integer(1)};
    for (const auto& f : factors) {
        acc = convolve(acc, binomial_power(f.shift, f.slope, f.exponent));
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(acc.size());
    for (auto& c : acc) {
        coeffs.emplace_back(c);
    }
    return Polynomial(std::move(coeffs));
}

inline void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Error(ErrorCode::invalid_parameter, what);
    }
}

// (2 - t)(n + t)^(n-1)(t + 2n + 2)^(n(n-1)/2), the X1 density up to a constant.
inline Polynomial x1_base(int n) {
    return expand({{2, -1, 1},
                   {n, 1, static_cast<unsigned long>(n - 1)},
                   {2L * n + 2, 1, static_cast<unsigned long>(n) * (n - 1) / 2}});
}

// (k + t)^(k-1)(2n-2k+2 - t)^(2n-2k+1)(4n-3k+4 - t)^(k-1), the X3 density up to a constant.
inline Polynomial x3_base(int n, int k) {
    return expand({{k, 1, static_cast<unsigned long>(k - 1)},
                   {2L * n - 2L * k + 2, -1, static_cast<unsigned long>(2 * n - 2 * k + 1)},
                   {4L * n - 3L * k + 4, -1, static_cast<unsigned long>(k - 1)}});
}

} // namespace detail

/// n int (2-t)(n+t)^(n-1)(t+2n+2)^(n(n-1)/2) dt / int (2-t)(n+t)^n(t+2n+2)^(n(n-1)/2) dt
/// over [-n, 2].
inline Rational r_x1_formula(int n) {
    detail::require(n >= 3, "R(X1(n)) requires n >= 3");
    const Polynomial base = detail::x1_base(n);
    const Polynomial shifted = base * Polynomial::linear(n, 1);
    return Rational(n) * integrate(base, -n, 2) / integrate(shifted, -n, 2);
}

/// (2n-2k+2) int base dt / int (2n-2k+2-t) base dt over [-k, 2n-2k+2],
/// base = (k+t)^(k-1)(2n-2k+2-t)^(2n-2k+1)(4n-3k+4-t)^(k-1).
inline Rational r_x3_formula(int n, int k) {
    detail::require(k >= 2 && n >= k, "R(X3(n,k)) requires n >= k >= 2");
    const long b = 2L * n - 2L * k + 2;
    const Polynomial base = detail::x3_base(n, k);
    const Polynomial shifted = base * Polynomial::linear(b, -1);
    return Rational(b) * integrate(base, -k, b) / integrate(shifted, -k, b);
}

/// 2 (2n+1)! / ((n+2) (2^n n!)^2)
inline Rational r_x3nn_closed(int n) {
    detail::require(n >= 2, "R(X3(n,n)) requires n >= 2");
    Integer two_n_fact = factorial(static_cast<unsigned long>(n));
    two_n_fact <<= static_cast<mp_bitcnt_t>(n);
    return make_rational(2 * factorial(2UL * n + 1), Integer((n + 2) * two_n_fact * two_n_fact));
}

/// a_n = (n+2) int_0^1 (1-t^2)^n dt = (n+2) (2^n n!)^2 / (2n+1)!
inline Rational a_sequence(int n) {
    detail::require(n >= 0, "a_n requires n >= 0");
    Integer two_n_fact = factorial(static_cast<unsigned long>(n));
    two_n_fact <<= static_cast<mp_bitcnt_t>(n);
    return make_rational(Integer((n + 2) * two_n_fact * two_n_fact), factorial(2UL * n + 1));
}

/// a_{n+1} from a_n: ((n+3)/(n+2)) ((2n+2)/(2n+3)) a_n.
inline Rational a_sequence_step(int n, const Rational& a_n) {
    return a_n * make_rational(static_cast<long>(n + 3) * (2 * n + 2), static_cast<long>(n + 2) * (2 * n + 3));
}

/// a_n by direct integration of (1 - t^2)^n.
inline Rational a_sequence_by_integration(int n) {
    detail::require(n >= 0, "a_n requires n >= 0");
    std::vector<Rational> coeffs(2 * static_cast<std::size_t>(n) + 1);
    Integer binom(1);
    for (int k = 0; k <= n; ++k) {
        coeffs[2 * static_cast<std::size_t>(k)] = (k % 2 == 0) ? Rational(binom) : Rational(-binom);
        binom *= n - k;
        binom /= k + 1;
    }
    return Rational(n + 2) * integrate(Polynomial(std::move(coeffs)), 0, 1);
}

/// int_{-n}^{2} t (2-t)(n+t)^(n-1)(t+2n+2)^(n(n-1)/2) dt > 0
inline BoundCheck lemma_x1_sign(int n) {
    detail::require(n >= 3, "the X1 inequality requires n >= 3");
    const Rational lhs = integrate(detail::x1_base(n).times_t(), -n, 2);
    return make_check("x1-first-moment-positive", {{"n", n}}, Relation::sign, true, lhs, 1);
}

/// The comparison integral (2n+2)^(n(n-1)/2) int_{-n}^{2} t (2-t)(n+t)^(n-1) dt
/// vanishes exactly.
inline BoundCheck lemma_x1_zero_identity(int n) {
    detail::require(n >= 3, "the X1 comparison integral requires n >= 3");
    Integer weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), 2UL * static_cast<unsigned long>(n) + 2,
                  static_cast<unsigned long>(n) * (n - 1) / 2);
    const Polynomial integrand =
        detail::expand({{0, 1, 1}, {2, -1, 1}, {n, 1, static_cast<unsigned long>(n - 1)}}) * Rational(weight);
    return make_check("x1-comparison-integral-zero", {{"n", n}}, Relation::equality, false,
                      integrate(integrand, -n, 2), 0);
}

/// I(n, k) = int_{-k}^{2n-2k+2} t (k+t)^(k-1)(2n-2k+2-t)^(2n-2k+1)(4n-3k+4-t)^(k-1) dt
inline Rational x3_first_moment(int n, int k) {
    detail::require(k >= 2 && n >= k, "I(n,k) requires n >= k >= 2");
    return integrate(detail::x3_base(n, k).times_t(), -k, 2L * n - 2L * k + 2);
}

/// int (k+t)^k (...) dt / int (k+t)^(k-1) (...) dt < k for n > k >= 2.
inline BoundCheck lemma_x3nk_sign(int n, int k) {
    detail::require(k >= 2 && n > k, "the X3 inequality requires n > k >= 2");
    const long b = 2L * n - 2L * k + 2;
    const Polynomial base = detail::x3_base(n, k);
    const Rational ratio = integrate(base * Polynomial::linear(k, 1), -k, b) / integrate(base, -k, b);
    return make_check("x3-weighted-ratio-below-k", {{"n", n}, {"k", k}}, Relation::upper_bound, true, ratio, k);
}

/// a_n > 2 for n >= 2.
inline BoundCheck lemma_x3n(int n) {
    detail::require(n >= 2, "a_n > 2 is claimed for n >= 2");
    return make_check("a-sequence-above-two", {{"n", n}}, Relation::lower_bound, true, a_sequence(n), 2);
}

using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

inline HighPrecision to_high_precision(const Rational& r) {
    return HighPrecision(r.get_num().get_str()) / HighPrecision(r.get_den().get_str());
}

/// (2 sqrt(2n+1) / (pi (n+2))) (1 + 1/(2n))^(2n+1), at 60 significant digits.
inline HighPrecision stirling_upper_bound(int n) {
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    const HighPrecision nn(n);
    const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
    return 2 * sqrt(2 * nn + 1) / (pi * (nn + 2)) * pow(1 + 1 / (2 * nn), 2 * n + 1);
}

/// The bound behind each limit:
///   X1(n):            R > n / (n+2)
///   X3(n,k), k < n:   R > (2n-2k+2) / (2n-k+2)
///   X3(n,n):          R <= Stirling upper bound (checked at 60 digits)
inline BoundCheck asymptotic_bounds(Family family, int n, int k = 0) {
    switch (family) {
    case Family::X1: {
        detail::require(n >= 3, "X1(n) requires n >= 3");
        return make_check("x1-lower-bound", {{"n", n}}, Relation::lower_bound, true, r_x1_formula(n),
                          make_rational(n, n + 2));
    }
    case Family::X3: {
        detail::require(k >= 2 && n >= k, "X3(n,k) requires n >= k >= 2");
        if (k < n) {
            return make_check("x3-lower-bound", {{"n", n}, {"k", k}}, Relation::lower_bound, true,
                              r_x3_formula(n, k), make_rational(2L * n - 2L * k + 2, 2L * n - k + 2));
        }
        const Rational exact = r_x3nn_closed(n);
        const HighPrecision bound = stirling_upper_bound(n);
        const HighPrecision margin = bound - to_high_precision(exact);
        BoundCheck check{"x3nn-stirling-upper-bound", {{"n", n}, {"k", k}}, Relation::upper_bound, false,
                         exact, parse_rational(bound.str(50, std::ios_base::fixed)), margin > 0, {}};
        check.margin = margin.str(20, std::ios_base::scientific);
        return check;
    }
    default:
        throw Error(ErrorCode::invalid_parameter, "asymptotic bounds exist for X1 and X3 only");
    }
}

} // namespace grlb::closed_forms
