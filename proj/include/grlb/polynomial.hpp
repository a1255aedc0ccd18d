#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grlb/detail/integer_poly.hpp"
#include "grlb/error.hpp"
#include "grlb/rational.hpp"

namespace grlb {

namespace detail {

struct IntegerForm {
    IntegerCoefficients numerators;
    mpz_class denominator;
};

// coeffs = numerators / denominator, the denominator being the lcm of all
// coefficient denominators.
inline IntegerForm integer_form(std::span<const mpq_class> coeffs) {
    IntegerForm form{{}, mpz_class(1)};
    for (const auto& c : coeffs) {
        mpz_lcm(form.denominator.get_mpz_t(), form.denominator.get_mpz_t(), c.get_den_mpz_t());
    }
    form.numerators.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        mpz_class scaled;
        mpz_divexact(scaled.get_mpz_t(), form.denominator.get_mpz_t(), c.get_den_mpz_t());
        scaled *= c.get_num();
        form.numerators.push_back(std::move(scaled));
    }
    return form;
}

} // namespace detail

/// Dense univariate polynomial in t with exact rational coefficients.
/// coefficients()[k] is the coefficient of t^k; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
        trim();
    }

    Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    /// constant_term + slope * t
    static Polynomial linear(const Rational& constant_term, const Rational& slope) {
        return Polynomial(std::vector<Rational>{constant_term, slope});
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    Rational coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// this * t^shift
    Polynomial times_t(std::size_t shift = 1) const {
        if (is_zero()) {
            return {};
        }
        std::vector<Rational> out(shift, Rational(0));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(out));
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coeffs_) {
            c = -c;
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
            coeffs_[k] += rhs.coeffs_[k];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) { return *this += -rhs; }

    Polynomial& operator*=(const Rational& scalar) {
        if (scalar == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) {
            c *= scalar;
        }
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = multiply(*this, rhs);
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) { return multiply(lhs, rhs); }
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    std::string to_string(std::string_view variable = "t") const {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c == 0) {
                continue;
            }
            if (!out.empty()) {
                out += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                out += "-";
            }
            const Rational mag = abs(c);
            if (mag != 1 || k == 0) {
                out += mag.get_str();
            }
            if (k > 0) {
                out += (mag != 1 ? "*" : "") + std::string(variable);
                if (k > 1) {
                    out += "^" + std::to_string(k);
                }
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    static Polynomial multiply(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) {
            return {};
        }
        const detail::IntegerForm a = detail::integer_form(lhs.coeffs_);
        const detail::IntegerForm b = detail::integer_form(rhs.coeffs_);
        const detail::IntegerCoefficients product = detail::multiply_integer(a.numerators, b.numerators);
        const Integer denominator = a.denominator * b.denominator;
        std::vector<Rational> out;
        out.reserve(product.size());
        for (const auto& c : product) {
            out.push_back(make_rational(c, denominator));
        }
        return Polynomial(std::move(out));
    }

    std::vector<Rational> coeffs_;
};

/// base^exponent by repeated squaring.
inline Polynomial pow(Polynomial base, unsigned long exponent) {
    Polynomial result = Polynomial::constant(1);
    while (exponent > 0) {
        if (exponent & 1UL) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

namespace detail {

inline Polynomial product_tree(std::span<const Polynomial> factors) {
    if (factors.size() == 1) {
        return factors.front();
    }
    const std::size_t mid = factors.size() / 2;
    return product_tree(factors.first(mid)) * product_tree(factors.subspan(mid));
}

} // namespace detail

/// Product of all factors, multiplied pairwise along a balanced binary tree.
/// The empty product is 1.
inline Polynomial poly_product(std::span<const Polynomial> factors) {
    if (factors.empty()) {
        return Polynomial::constant(1);
    }
    return detail::product_tree(factors);
}

/// Exact definite integral of p over [lo, hi].
inline Rational integrate(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (lo > hi) {
        throw Error(ErrorCode::invalid_interval,
                    "integration bounds out of order: [" + lo.get_str() + ", " + hi.get_str() + "]");
    }
    if (p.is_zero() || lo == hi) {
        return 0;
    }
    // Bring both bounds over a common denominator q: lo = low/q, hi = high/q.
    // With N = deg + 1 terms and L = lcm(1..N),
    //   integral = (1 / (D L q^N)) * sum_k C_k (L/(k+1)) (high^(k+1) - low^(k+1)) q^(N-1-k)
    // where p = C / D in integer form. The sum is accumulated by Horner in q.
    const auto form = detail::integer_form(p.coefficients());
    const std::size_t terms = form.numerators.size();

    Integer q;
    mpz_lcm(q.get_mpz_t(), lo.get_den_mpz_t(), hi.get_den_mpz_t());
    const Integer high = hi.get_num() * (q / hi.get_den());
    const Integer low = lo.get_num() * (q / lo.get_den());

    Integer lcm_all(1);
    for (std::size_t k = 1; k <= terms; ++k) {
        mpz_lcm_ui(lcm_all.get_mpz_t(), lcm_all.get_mpz_t(), k);
    }

    Integer acc(0);
    Integer high_power = high;
    Integer low_power = low;
    Integer term;
    for (std::size_t k = 0; k < terms; ++k) {
        if (q != 1) {
            acc *= q;
        }
        const Integer& c = form.numerators[k];
        if (c != 0) {
            mpz_divexact_ui(term.get_mpz_t(), lcm_all.get_mpz_t(), k + 1);
            term *= c;
            term *= Integer(high_power - low_power);
            acc += term;
        }
        high_power *= high;
        low_power *= low;
    }

    Integer q_power;
    mpz_pow_ui(q_power.get_mpz_t(), q.get_mpz_t(), terms);
    return make_rational(acc, form.denominator * lcm_all * q_power);
}

} // namespace grlb
