#include <catch_amalgamated.hpp>

#include <random>

#include "grlb/polynomial.hpp"
#include "grlb/rational.hpp"

using namespace grlb;

namespace {

Polynomial random_polynomial(std::mt19937_64& rng, int degree, int bits) {
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) {
        Integer v(0);
        for (int b = 0; b < bits; b += 32) {
            v <<= 32;
            v += static_cast<unsigned long>(rng() & 0xffffffffU);
        }
        Integer den(static_cast<unsigned long>(rng() % 97 + 1));
        c.push_back(make_rational(sign(rng) ? v : Integer(-v), den));
    }
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("rational construction normalizes and rejects zero denominators") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(to_fraction_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_fraction_string(Rational(5)) == "5/1");
    CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
    CHECK(parse_rational("56/67") == make_rational(56, 67));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK(parse_rational("0.8358") == make_rational(4179, 5000));
    CHECK(parse_rational("-1.5") == make_rational(-3, 2));
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("to_decimal rounds half to even with a fixed digit count") {
    CHECK(to_decimal(make_rational(56, 67), 4) == "0.8358");
    CHECK(to_decimal(make_rational(715, 1024), 3) == "0.698");
    CHECK(to_decimal(make_rational(1, 8), 2) == "0.12");
    CHECK(to_decimal(make_rational(3, 8), 2) == "0.38");
    CHECK(to_decimal(Rational(2), 3) == "2.000");
    CHECK(to_decimal(make_rational(-1, 1000), 2) == "0.00");
    CHECK(to_decimal(make_rational(-56, 67), 4) == "-0.8358");
    CHECK_THROWS_AS(to_decimal(Rational(1), 0), Error);
}

TEST_CASE("to_decimal error is at most half a unit in the last place") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational r = make_rational(static_cast<long>(rng() % 2000001) - 1000000,
                                         static_cast<long>(rng() % 99999) + 1);
        const std::size_t digits = 1 + rng() % 12;
        const Rational shown = parse_rational(to_decimal(r, digits));
        const Rational ulp = make_rational(1, 1) / Rational(power_of_ten(digits));
        const Rational error = abs(shown - r);
        CHECK(error <= ulp / 2);
    }
}

TEST_CASE("terminating_digits") {
    CHECK(terminating_digits(make_rational(15, 16), 6) == 4U);
    CHECK(terminating_digits(Rational(3), 6) == 0U);
    CHECK_FALSE(terminating_digits(make_rational(105, 128), 6).has_value());
    CHECK_FALSE(terminating_digits(make_rational(1, 3), 20).has_value());
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(13) == Integer("6227020800"));
    for (unsigned long n = 1; n <= 60; ++n) {
        CHECK(factorial(n) == factorial(n - 1) * n);
    }
}

TEST_CASE("polynomial basics") {
    const Polynomial p{1, -2, 1};
    CHECK(p.degree() == 2);
    CHECK(p(Rational(1)) == 0);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p == pow(Polynomial::linear(-1, 1), 2));
    CHECK(p.times_t() == Polynomial{0, 1, -2, 1});
    CHECK(p * Rational(0) == Polynomial());
    CHECK(poly_product(std::vector<Polynomial>{}) == Polynomial::constant(1));
}

TEST_CASE("integrate matches known antiderivatives") {
    CHECK(integrate(Polynomial::constant(1), 0, 1) == 1);
    CHECK(integrate(Polynomial{1, 0, -2, 0, 1}, 0, 1) == make_rational(8, 15));
    // t (2 - t)(3 + t)^2 (t + 8)^3 on [-3, 2]
    const Polynomial f = Polynomial{0, 1} * Polynomial{2, -1} * pow(Polynomial{3, 1}, 2) * pow(Polynomial{8, 1}, 3);
    CHECK(integrate(f, -3, 2) == make_rational(78125, 8));
    CHECK(integrate(f, 1, 1) == 0);
    CHECK_THROWS_AS(integrate(f, 2, -3), Error);
}

TEST_CASE("integrate is additive over adjacent intervals") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = random_polynomial(rng, static_cast<int>(rng() % 30), 64);
        const Rational lo = make_rational(-static_cast<long>(rng() % 50), static_cast<long>(rng() % 7 + 1));
        const Rational mid = lo + make_rational(static_cast<long>(rng() % 40), 3);
        const Rational hi = mid + make_rational(static_cast<long>(rng() % 40), 5);
        CHECK(integrate(p, lo, hi) == integrate(p, lo, mid) + integrate(p, mid, hi));
    }
}

TEST_CASE("Kronecker multiplication agrees with schoolbook") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto len_a = static_cast<std::size_t>(1 + rng() % 120);
        const auto len_b = static_cast<std::size_t>(1 + rng() % 120);
        const int bits = 32 * static_cast<int>(1 + rng() % 8);
        detail::IntegerCoefficients a(len_a), b(len_b);
        for (auto* v : {&a, &b}) {
            for (auto& c : *v) {
                for (int k = 0; k < bits; k += 32) {
                    c <<= 32;
                    c += static_cast<unsigned long>(rng() & 0xffffffffU);
                }
                if (rng() & 1) {
                    c = -c;
                }
                if (rng() % 5 == 0) {
                    c = 0;
                }
            }
        }
        CHECK(detail::multiply_kronecker(a, b) == detail::multiply_schoolbook(a, b));
    }
}

TEST_CASE("polynomial product is associative and matches pow") {
    std::mt19937_64 rng(5);
    const Polynomial a = random_polynomial(rng, 40, 96);
    const Polynomial b = random_polynomial(rng, 33, 64);
    const Polynomial c = random_polynomial(rng, 25, 128);
    CHECK((a * b) * c == a * (b * c));
    CHECK(poly_product(std::vector<Polynomial>{a, b, c}) == a * b * c);
    CHECK(pow(b, 5) == b * b * b * b * b);
}
