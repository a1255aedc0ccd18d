#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "grlb/quadrature.hpp"

using namespace grlb;
using namespace grlb::oracle;

namespace {

std::vector<double> to_doubles(const Polynomial& p) {
    std::vector<double> out;
    for (const auto& c : p.coefficients()) {
        out.push_back(c.get_d());
    }
    return out;
}

double horner(const std::vector<double>& c, double t) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        v = v * t + *it;
    }
    return v;
}

} // namespace

TEST_CASE("quadrature of simple integrands") {
    CHECK(quad([](double) { return 1.0; }, 0.0, 1.0, 1e-12).estimate == Catch::Approx(1.0).epsilon(1e-14));
    const auto r = quad([](double t) { return (1 - t * t) * (1 - t * t); }, 0.0, 1.0, 1e-9);
    CHECK(std::abs(r.estimate - 8.0 / 15.0) <= 1e-9 * 8.0 / 15.0);
    CHECK(r.error_estimate >= 0.0);
    CHECK(r.refinement_levels >= 1);
}

TEST_CASE("quadrature errors") {
    CHECK_THROWS_AS(quad([](double) { return 1.0; }, 1.0, 1.0, 1e-9), Error);
    CHECK_THROWS_AS(quad([](double) { return 1.0; }, 0.0, 1.0, 0.0), Error);
    try {
        quad([](double t) { return t > 0.5 ? NAN : 1.0; }, 0.0, 1.0, 1e-9);
        FAIL("expected evaluation failure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::evaluation_failure);
    }
    try {
        quad([](double t) { return std::sin(1.0 / (t + 1e-3)); }, 0.0, 1.0, 1e-14, 2);
        FAIL("expected no convergence");
    } catch (const NoConvergence& e) {
        CHECK(e.code() == ErrorCode::no_convergence);
        CHECK(e.best().refinement_levels == 2);
        CHECK(std::isfinite(e.best().estimate));
    }
}

TEST_CASE("quadrature matches exact integration for polynomials up to degree 60") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    for (int degree = 0; degree <= 60; degree += 3) {
        std::vector<Rational> c;
        for (int i = 0; i <= degree; ++i) {
            c.push_back(make_rational(std::abs(num(rng)), den(rng)));
        }
        const Polynomial p(std::move(c));
        const auto coeffs = to_doubles(p);
        const double exact = integrate(p, 0, 2).get_d();
        const auto r = quad([&](double t) { return horner(coeffs, t); }, 0.0, 2.0, 1e-9);
        INFO("degree " << degree);
        CHECK(std::abs(r.estimate - exact) <= 1e-9 * std::abs(exact));

        std::vector<Rational> mixed;
        for (int i = 0; i <= degree; ++i) {
            mixed.push_back(make_rational(num(rng), den(rng)));
        }
        const Polynomial q(std::move(mixed));
        const auto qc = to_doubles(q);
        const double q_exact = integrate(q, -1, 1).get_d();
        const auto rq = quad([&](double t) { return horner(qc, t); }, -1.0, 1.0, 1e-10);
        const auto l1 = quad([&](double t) { return std::abs(horner(qc, t)); }, -1.0, 1.0, 1e-6);
        CHECK(std::abs(rq.estimate - q_exact) <= 1e-9 * l1.estimate);
    }
}

TEST_CASE("factored density matches the expanded polynomial") {
    for (const auto& d : {HorosphericalDatum::x2(), HorosphericalDatum::x5(), HorosphericalDatum::x3(6, 3)}) {
        const Resolution r = resolve(d);
        const MomentSegment seg = moment_segment(d);
        const FactoredDensity f(dh_factors(r.root_system, seg), seg);
        const Polynomial p = dh_polynomial(d);
        CHECK_FALSE(f.log_domain());
        for (double t : {seg.lower().get_d() + 0.5, 0.0, seg.upper().get_d() - 0.5}) {
            const double expected = p(Rational(t)).get_d();
            CHECK(f(t) == Catch::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("X5 barycenter by quadrature") {
    const auto c = crosscheck(HorosphericalDatum::x5());
    CHECK(std::abs(c.barycenter_t_quad + 11.0 / 28.0) <= 1e-9 * 11.0 / 28.0);
    CHECK(c.agrees);
}

TEST_CASE("cross-checks against the exact engine") {
    for (const auto& d : {HorosphericalDatum::x2(), HorosphericalDatum::x4(), HorosphericalDatum::x3(6, 3)}) {
        const auto c = crosscheck(d);
        INFO(c.datum << ": " << c.R_rel_error);
        CHECK(c.agrees);
        CHECK(c.R_rel_error <= 1e-9);
    }
    CHECK(std::abs(crosscheck(HorosphericalDatum::x2()).R_quad - 20.0 / 21.0) <= 1e-9 * 20.0 / 21.0);
}

TEST_CASE("log-domain evaluation for large unipotent radicals") {
    const auto c = crosscheck(HorosphericalDatum::x1(20));
    CHECK(c.log_domain);
    CHECK(c.agrees);
    CHECK_THROWS_AS(crosscheck(HorosphericalDatum::x1(21)), Error);
}
