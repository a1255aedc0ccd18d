#pragma once

// Floating-point cross-check of the exact pipeline. Integrals are estimated by
// composite 5-point Gauss-Legendre with interval halving, and the
// Duistermaat-Heckman density is evaluated in factored form, so nothing here
// goes through polynomial expansion or antiderivatives.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grlb/engine.hpp"
#include "grlb/error.hpp"

namespace grlb::oracle {

struct QuadratureResult {
    double estimate = 0.0;
    double error_estimate = 0.0;
    int refinement_levels = 0;
};

/// Raised when the level cap is hit; carries the last estimate.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, QuadratureResult best)
        : Error(ErrorCode::no_convergence, what), best_(best) {}

    const QuadratureResult& best() const noexcept { return best_; }

private:
    QuadratureResult best_;
};

namespace detail {

constexpr std::array<double, 5> gl_nodes{-0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
                                         0.5384693101056830910363144, 0.9061798459386639927976269};
constexpr std::array<double, 5> gl_weights{0.2369268850561890875142640, 0.4786286704993664680412915,
                                           0.5688888888888888888888889, 0.4786286704993664680412915,
                                           0.2369268850561890875142640};

struct PanelSum {
    double signed_sum = 0.0;
    double absolute_sum = 0.0;
};

template <class F>
PanelSum composite_gauss(F& f, double lo, double hi, std::size_t panels) {
    const double width = (hi - lo) / static_cast<double>(panels);
    PanelSum out;
    for (std::size_t p = 0; p < panels; ++p) {
        const double left = lo + width * static_cast<double>(p);
        const double mid = left + width / 2;
        for (std::size_t q = 0; q < gl_nodes.size(); ++q) {
            const double x = mid + width / 2 * gl_nodes[q];
            const double y = f(x);
            if (!std::isfinite(y)) {
                throw Error(ErrorCode::evaluation_failure, "integrand is not finite at t = " + std::to_string(x));
            }
            out.signed_sum += gl_weights[q] * y;
            out.absolute_sum += gl_weights[q] * std::abs(y);
        }
    }
    out.signed_sum *= width / 2;
    out.absolute_sum *= width / 2;
    return out;
}

} // namespace detail

/// Integral of f over [lo, hi]. Panels are halved until two successive
/// estimates agree to rel_tol relative to the integral of |f|, or
/// `max_levels` halvings have been made.
template <class F>
QuadratureResult quad(F&& f, double lo, double hi, double rel_tol, int max_levels = 30) {
    if (!(lo < hi)) {
        throw Error(ErrorCode::invalid_interval, "quadrature needs lo < hi");
    }
    if (!(rel_tol > 0)) {
        throw Error(ErrorCode::invalid_parameter, "quadrature needs a positive tolerance");
    }
    auto previous = detail::composite_gauss(f, lo, hi, 1);
    QuadratureResult result{previous.signed_sum, std::abs(previous.signed_sum), 0};
    for (int level = 1; level <= max_levels; ++level) {
        const auto current = detail::composite_gauss(f, lo, hi, std::size_t{1} << level);
        result = {current.signed_sum, std::abs(current.signed_sum - previous.signed_sum), level};
        if (result.error_estimate <= rel_tol * current.absolute_sum) {
            return result;
        }
        previous = current;
    }
    throw NoConvergence("quadrature did not converge in " + std::to_string(max_levels) + " halvings", result);
}

/// The density prod (w_i (a + t) + w_j (b - t))^m in floating point. Beyond
/// 40 linear factors the product is accumulated in the log domain and
/// rescaled by its value at t = 0; the constant cancels in every ratio taken
/// from it.
class FactoredDensity {
public:
    FactoredDensity(const std::vector<DhFactor>& factors, const MomentSegment& seg)
        : a_(seg.a.get_d()), b_(seg.b.get_d()) {
        unsigned long total = 0;
        for (const auto& f : factors) {
            factors_.push_back({f.weight_i.get_d(), f.weight_j.get_d(), static_cast<double>(f.multiplicity)});
            total += f.multiplicity;
        }
        log_domain_ = total > 40;
        if (log_domain_) {
            log_shift_ = log_value(0.0);
        }
    }

    bool log_domain() const noexcept { return log_domain_; }

    double operator()(double t) const {
        if (log_domain_) {
            const double lv = log_value(t);
            return std::isinf(lv) && lv < 0 ? 0.0 : std::exp(lv - log_shift_);
        }
        double value = 1.0;
        for (const auto& f : factors_) {
            value *= std::pow(linear(f, t), f.multiplicity);
        }
        return value;
    }

private:
    struct Factor {
        double weight_i;
        double weight_j;
        double multiplicity;
    };

    double linear(const Factor& f, double t) const { return f.weight_i * (a_ + t) + f.weight_j * (b_ - t); }

    double log_value(double t) const {
        double sum = 0.0;
        for (const auto& f : factors_) {
            const double v = linear(f, t);
            if (v <= 0.0) {
                return -INFINITY;
            }
            sum += f.multiplicity * std::log(v);
        }
        return sum;
    }

    double a_;
    double b_;
    std::vector<Factor> factors_;
    bool log_domain_ = false;
    double log_shift_ = 0.0;
};

struct CrossCheckReport {
    std::string datum;
    double barycenter_t_quad = 0.0;
    Rational barycenter_t_exact;
    double R_quad = 0.0;
    Rational R_exact;
    double barycenter_t_rel_error = 0.0;
    double R_rel_error = 0.0;
    bool log_domain = false;
    bool agrees = false;
};

/// Largest n accepted by crosscheck.
inline constexpr int crosscheck_max_n = 20;

/// Recomputes t_bar and R by quadrature and compares with the exact engine.
inline CrossCheckReport crosscheck(const HorosphericalDatum& datum, double rel_tol = 1e-9) {
    if (datum.n() && *datum.n() > crosscheck_max_n) {
        throw Error(ErrorCode::invalid_parameter,
                    "quadrature cross-check is limited to n <= " + std::to_string(crosscheck_max_n));
    }
    const Resolution r = resolve(datum);
    const auto [i, j] = segment_orientation(datum);
    const MomentSegment seg = moment_segment(r.root_system, i, j);
    const FactoredDensity density(dh_factors(r.root_system, seg), seg);

    const double lo = seg.lower().get_d();
    const double hi = seg.upper().get_d();
    const double quad_tol = std::max(rel_tol * 1e-3, 1e-13);
    const auto volume = quad(density, lo, hi, quad_tol);
    const auto moment = quad([&](double t) { return t * density(t); }, lo, hi, quad_tol);

    CrossCheckReport out;
    out.datum = datum.label();
    out.log_domain = density.log_domain();
    out.barycenter_t_quad = moment.estimate / volume.estimate;
    const double a = seg.a.get_d();
    const double b = seg.b.get_d();
    const double t = out.barycenter_t_quad;
    out.R_quad = t > 0 ? a / (a + t) : (t < 0 ? b / (b - t) : 1.0);

    const ComputationReport exact = report(datum);
    out.barycenter_t_exact = exact.barycenter_t;
    out.R_exact = exact.R;
    const double t_exact = exact.barycenter_t.get_d();
    out.barycenter_t_rel_error =
        t_exact == 0.0 ? std::abs(t) : std::abs(t - t_exact) / std::abs(t_exact);
    out.R_rel_error = std::abs(out.R_quad - exact.R.get_d()) / exact.R.get_d();
    out.agrees = out.barycenter_t_rel_error <= rel_tol && out.R_rel_error <= rel_tol;
    return out;
}

} // namespace grlb::oracle
