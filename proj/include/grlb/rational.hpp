#pragma once

// Exact scalars. Rational and Integer are GMP's C++ classes; mpq_class keeps
// every value canonical (lowest terms, positive denominator) after each
// arithmetic operation.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "grlb/error.hpp"

namespace grlb {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(ErrorCode::invalid_parameter, "rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Canonical "p/q" text, the denominator always present ("4/1", "-3/20").
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q", "p", or a plain decimal such as "-0.8358".
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        return Error(ErrorCode::invalid_format, "not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) {
        throw fail();
    }
    const auto is_integer_text = [](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size()) {
            return false;
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const auto to_integer = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') {
            s.remove_prefix(1);
        }
        return Integer(std::string(s), 10);
    };

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
            throw fail();
        }
        const Integer d = to_integer(den);
        if (d == 0) {
            throw fail();
        }
        return make_rational(to_integer(num), d);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.empty() || !is_integer_text(frac) || frac[0] == '-' || frac[0] == '+') {
            throw fail();
        }
        const bool negative = !whole.empty() && whole[0] == '-';
        std::string_view magnitude = whole;
        if (!magnitude.empty() && (magnitude[0] == '-' || magnitude[0] == '+')) {
            magnitude.remove_prefix(1);
        }
        if (!magnitude.empty() && !is_integer_text(magnitude)) {
            throw fail();
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer digits = to_integer(std::string(magnitude.empty() ? "0" : magnitude) + std::string(frac));
        if (negative) {
            digits = -digits;
        }
        return make_rational(digits, scale);
    }
    if (!is_integer_text(text)) {
        throw fail();
    }
    return Rational(to_integer(text));
}

inline Integer factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

inline Integer power_of_ten(std::size_t exponent) {
    Integer result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

/// Fixed-point rendering with exactly `digits` fractional digits, rounding
/// half to even.
inline std::string to_decimal(const Rational& r, std::size_t digits) {
    if (digits == 0) {
        throw Error(ErrorCode::invalid_parameter, "to_decimal needs at least one fractional digit");
    }
    const Integer scale = power_of_ten(digits);
    const Integer magnitude = abs(r.get_num()) * scale;
    Integer quotient;
    Integer remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), magnitude.get_mpz_t(),
                r.get_den().get_mpz_t());
    const int cmp_half = cmp(Integer(2 * remainder), r.get_den());
    if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quotient.get_mpz_t()))) {
        ++quotient;
    }

    std::string body = quotient.get_str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, 1, '.');
    if (r < 0 && quotient != 0) {
        body.insert(0, 1, '-');
    }
    return body;
}

/// Number of fractional digits needed to write r exactly, if the expansion
/// terminates within `max_digits`.
inline std::optional<std::size_t> terminating_digits(const Rational& r, std::size_t max_digits) {
    for (std::size_t d = 0; d <= max_digits; ++d) {
        if (mpz_divisible_p(power_of_ten(d).get_mpz_t(), r.get_den().get_mpz_t())) {
            return d;
        }
    }
    return std::nullopt;
}

} // namespace grlb
