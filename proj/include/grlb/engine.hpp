#pragma once

// Greatest Ricci lower bound of the nonhomogeneous projective horospherical
// manifolds of Picard number one, computed from the classification datum in
// exact arithmetic.
//
// For a datum of type (G, alpha_i, alpha_j) the anticanonical moment polytope
// is the segment
//
//   gamma(t) = 2 rho_P + t (varpi_i - varpi_j) = (a + t) varpi_i + (b - t) varpi_j,
//   -a <= t <= b,   a = <alpha_i^vee, 2 rho_P>,  b = <alpha_j^vee, 2 rho_P>,
//
// where 2 rho_P is the sum of the roots of the unipotent radical of
// P = P^{alpha_i} cap P^{alpha_j}. The Duistermaat-Heckman density along it
// is prod_{alpha in Phi_{P^u}} (alpha, gamma(t)), a polynomial in t. With t_bar
// its barycenter parameter, the half-line from the barycenter through
// 2 rho_P (t = 0) leaves the segment at Q, and R = |A Q| / |B Q|.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grlb/error.hpp"
#include "grlb/polynomial.hpp"
#include "grlb/rational.hpp"
#include "grlb/root_system.hpp"

namespace grlb {

enum class Family { X1, X2, X3, X4, X5 };

constexpr std::string_view to_string(Family family) noexcept {
    switch (family) {
    case Family::X1: return "X1";
    case Family::X2: return "X2";
    case Family::X3: return "X3";
    case Family::X4: return "X4";
    case Family::X5: return "X5";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view text) {
    if (text.size() != 2 || (text[0] != 'X' && text[0] != 'x')) {
        return std::nullopt;
    }
    switch (text[1]) {
    case '1': return Family::X1;
    case '2': return Family::X2;
    case '3': return Family::X3;
    case '4': return Family::X4;
    case '5': return Family::X5;
    default: return std::nullopt;
    }
}

/// One of X1(n) = (B_n, alpha_{n-1}, alpha_n), n >= 3; X2 = (B_3, alpha_1, alpha_3);
/// X3(n, k) = (C_n, alpha_k, alpha_{k-1}), n >= k >= 2; X4 = (F4, alpha_2, alpha_3);
/// X5 = (G2, alpha_2, alpha_1).
class HorosphericalDatum {
public:
    static HorosphericalDatum make(Family family, std::optional<int> n = std::nullopt,
                                   std::optional<int> k = std::nullopt) {
        const auto reject = [&](const std::string& why) {
            return Error(ErrorCode::invalid_datum, why);
        };
        switch (family) {
        case Family::X1:
            if (!n) {
                throw reject("X1(n) requires the parameter n");
            }
            if (k) {
                throw reject("X1(n) takes no parameter k");
            }
            if (*n < 3) {
                throw reject("X1(n) requires n >= 3 (got n = " + std::to_string(*n) + ")");
            }
            break;
        case Family::X3:
            if (!n || !k) {
                throw reject("X3(n,k) requires both parameters n and k");
            }
            if (*k < 2 || *n < *k) {
                throw reject("X3(n,k) requires n >= k >= 2 (got n = " + std::to_string(*n) +
                             ", k = " + std::to_string(*k) + ")");
            }
            break;
        case Family::X2:
        case Family::X4:
        case Family::X5:
            if (n || k) {
                throw reject(std::string(to_string(family)) + " takes no parameters");
            }
            break;
        }
        return HorosphericalDatum(family, n, k);
    }

    static HorosphericalDatum x1(int n) { return make(Family::X1, n); }
    static HorosphericalDatum x2() { return make(Family::X2); }
    static HorosphericalDatum x3(int n, int k) { return make(Family::X3, n, k); }
    static HorosphericalDatum x4() { return make(Family::X4); }
    static HorosphericalDatum x5() { return make(Family::X5); }

    Family family() const noexcept { return family_; }
    std::optional<int> n() const noexcept { return n_; }
    std::optional<int> k() const noexcept { return k_; }

    /// "X1(5)", "X3(7,4)", "X4"
    std::string label() const {
        std::string out(to_string(family_));
        if (n_ && k_) {
            out += "(" + std::to_string(*n_) + "," + std::to_string(*k_) + ")";
        } else if (n_) {
            out += "(" + std::to_string(*n_) + ")";
        }
        return out;
    }

    friend bool operator==(const HorosphericalDatum&, const HorosphericalDatum&) = default;

private:
    HorosphericalDatum(Family family, std::optional<int> n, std::optional<int> k)
        : family_(family), n_(n), k_(k) {}

    Family family_;
    std::optional<int> n_;
    std::optional<int> k_;
};

/// The classification triple (G, alpha_first, alpha_second).
struct Resolution {
    RootSystem root_system;
    int first = 0;
    int second = 0;
};

inline Resolution resolve(const HorosphericalDatum& datum) {
    switch (datum.family()) {
    case Family::X1: {
        const int n = *datum.n();
        return {build_root_system(RootType::B, n), n - 1, n};
    }
    case Family::X2: return {build_root_system(RootType::B, 3), 1, 3};
    case Family::X3: {
        const int k = *datum.k();
        return {build_root_system(RootType::C, *datum.n()), k, k - 1};
    }
    case Family::X4: return {build_root_system(RootType::F4, 4), 2, 3};
    case Family::X5: return {build_root_system(RootType::G2, 2), 2, 1};
    }
    throw Error(ErrorCode::invalid_datum, "unknown family");
}

/// The marked pair (i, j) oriented so that gamma(t) carries a + t on varpi_i.
/// X3 and X5 reverse the classification order; the others keep it.
inline std::pair<int, int> segment_orientation(const HorosphericalDatum& datum) {
    const Resolution r = resolve(datum);
    switch (datum.family()) {
    case Family::X3:
    case Family::X5: return {r.second, r.first};
    default: return {r.first, r.second};
    }
}

/// Positive roots with a nonzero coefficient on alpha_i or alpha_j.
inline std::vector<RootVector> phi_pu(const RootSystem& rs, int i, int j) {
    rs.check_index(i);
    rs.check_index(j);
    if (i == j) {
        throw Error(ErrorCode::invalid_parameter, "marked simple roots must be distinct");
    }
    std::vector<RootVector> out;
    for (const auto& root : rs.positive_roots) {
        if (root[static_cast<std::size_t>(i - 1)] > 0 || root[static_cast<std::size_t>(j - 1)] > 0) {
            out.push_back(root);
        }
    }
    return out;
}

/// Positive roots of the Levi factor: zero coefficient on both alpha_i and alpha_j.
inline std::vector<RootVector> levi_positive_roots(const RootSystem& rs, int i, int j) {
    rs.check_index(i);
    rs.check_index(j);
    std::vector<RootVector> out;
    for (const auto& root : rs.positive_roots) {
        if (root[static_cast<std::size_t>(i - 1)] == 0 && root[static_cast<std::size_t>(j - 1)] == 0) {
            out.push_back(root);
        }
    }
    return out;
}

inline WeightExpr two_rho_P(const RootSystem& rs, int i, int j) { return root_sum(rs, phi_pu(rs, i, j)); }

inline WeightExpr two_rho_L(const RootSystem& rs, int i, int j) {
    return root_sum(rs, levi_positive_roots(rs, i, j));
}

struct MomentSegment {
    WeightExpr two_rho_P;
    int i = 0;
    int j = 0;
    Rational a;
    Rational b;

    Rational lower() const { return -a; }
    Rational upper() const { return b; }

    /// gamma(t) = (a + t) varpi_i + (b - t) varpi_j
    WeightExpr point(const Rational& t) const {
        return WeightExpr::fundamental(i, a + t) + WeightExpr::fundamental(j, b - t);
    }

    /// The same segment traversed with t -> -t.
    MomentSegment flipped() const { return {two_rho_P, j, i, b, a}; }
};

inline MomentSegment moment_segment(const RootSystem& rs, int i, int j) {
    MomentSegment seg{two_rho_P(rs, i, j), i, j, 0, 0};
    seg.a = coroot_pairing(rs, i, seg.two_rho_P);
    seg.b = coroot_pairing(rs, j, seg.two_rho_P);
    if (seg.a <= 0 || seg.b <= 0) {
        throw Error(ErrorCode::invalid_datum, "2 rho_P must pair positively with both marked coroots");
    }
    for (const auto& [m, c] : seg.two_rho_P.terms()) {
        if (m != i && m != j) {
            throw Error(ErrorCode::invalid_datum, "2 rho_P is not supported on the marked weights");
        }
    }
    return seg;
}

/// Linear factor (alpha, gamma(t)) = weight_i (a + t) + weight_j (b - t),
/// where weight_m = c_m(alpha) d_m, repeated `multiplicity` times.
struct DhFactor {
    int coeff_i = 0;
    int coeff_j = 0;
    Rational weight_i;
    Rational weight_j;
    unsigned long multiplicity = 0;

    Polynomial linear(const MomentSegment& seg) const {
        return Polynomial::linear(weight_i * seg.a + weight_j * seg.b, weight_i - weight_j);
    }

    bool is_constant() const { return weight_i == weight_j; }
};

/// Phi_{P^u} grouped by the coefficient pair (c_i, c_j); each group is one
/// distinct linear form of the density.
inline std::vector<DhFactor> dh_factors(const RootSystem& rs, const MomentSegment& seg) {
    std::map<std::pair<int, int>, unsigned long> counts;
    for (const auto& root : phi_pu(rs, seg.i, seg.j)) {
        ++counts[{root[static_cast<std::size_t>(seg.i - 1)], root[static_cast<std::size_t>(seg.j - 1)]}];
    }
    std::vector<DhFactor> factors;
    for (const auto& [pair, count] : counts) {
        factors.push_back({pair.first, pair.second, pair.first * rs.half_length(seg.i),
                           pair.second * rs.half_length(seg.j), count});
    }
    return factors;
}

/// prod over Phi_{P^u} of the linear factors; each distinct form is raised to
/// its multiplicity by squaring and the few powers are multiplied as a tree.
inline Polynomial dh_polynomial(const RootSystem& rs, const MomentSegment& seg) {
    Rational scalar = 1;
    std::vector<Polynomial> powers;
    for (const auto& f : dh_factors(rs, seg)) {
        if (f.is_constant()) {
            Rational value = f.weight_i * (seg.a + seg.b);
            Rational power;
            mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), f.multiplicity);
            mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), f.multiplicity);
            scalar *= power;
            continue;
        }
        powers.push_back(pow(f.linear(seg), f.multiplicity));
    }
    return poly_product(powers) * scalar;
}

/// t_bar = int t P dt / int P dt over [-a, b].
inline Rational barycenter_t(const Polynomial& density, const MomentSegment& seg) {
    const Rational volume = integrate(density, seg.lower(), seg.upper());
    if (volume == 0) {
        throw Error(ErrorCode::degenerate_measure, "Duistermaat-Heckman measure has zero volume");
    }
    return integrate(density.times_t(), seg.lower(), seg.upper()) / volume;
}

/// R = |AQ| / |BQ| with A at t = 0 and B at t_bar. Q is the endpoint t = -a
/// when t_bar > 0 and t = b when t_bar < 0; t_bar = 0 gives 1.
inline Rational ricci_bound(const MomentSegment& seg, const Rational& t_bar) {
    if (t_bar > 0) {
        return seg.a / (seg.a + t_bar);
    }
    if (t_bar < 0) {
        return seg.b / (seg.b - t_bar);
    }
    return 1;
}

struct ComputationReport {
    HorosphericalDatum datum;
    int dimension = 0;
    MomentSegment segment;
    int dh_degree = 0;
    Rational volume;
    Rational barycenter_t;
    WeightExpr barycenter_point;
    Rational R;
};

inline MomentSegment moment_segment(const HorosphericalDatum& datum) {
    const auto [i, j] = segment_orientation(datum);
    return moment_segment(resolve(datum).root_system, i, j);
}

inline Polynomial dh_polynomial(const HorosphericalDatum& datum) {
    const Resolution r = resolve(datum);
    const auto [i, j] = segment_orientation(datum);
    return dh_polynomial(r.root_system, moment_segment(r.root_system, i, j));
}

inline Rational barycenter_t(const HorosphericalDatum& datum) {
    const Resolution r = resolve(datum);
    const auto [i, j] = segment_orientation(datum);
    const MomentSegment seg = moment_segment(r.root_system, i, j);
    return barycenter_t(dh_polynomial(r.root_system, seg), seg);
}

inline Rational greatest_ricci_lower_bound(const HorosphericalDatum& datum) {
    const MomentSegment seg = moment_segment(datum);
    return ricci_bound(seg, barycenter_t(datum));
}

/// |Phi_{P^u}| + 1: the open orbit is a C^*-bundle over G/P.
inline int dimension(const HorosphericalDatum& datum) {
    const Resolution r = resolve(datum);
    return static_cast<int>(phi_pu(r.root_system, r.first, r.second).size()) + 1;
}

inline ComputationReport report(const HorosphericalDatum& datum) {
    const Resolution r = resolve(datum);
    const auto [i, j] = segment_orientation(datum);
    const MomentSegment seg = moment_segment(r.root_system, i, j);
    const Polynomial density = dh_polynomial(r.root_system, seg);

    ComputationReport out{datum, 0, seg, density.degree(), 0, 0, {}, 0};
    out.dimension = static_cast<int>(phi_pu(r.root_system, i, j).size()) + 1;
    out.volume = integrate(density, seg.lower(), seg.upper());
    if (out.volume == 0) {
        throw Error(ErrorCode::degenerate_measure, "Duistermaat-Heckman measure has zero volume");
    }
    out.barycenter_t = integrate(density.times_t(), seg.lower(), seg.upper()) / out.volume;
    out.barycenter_point = seg.point(out.barycenter_t);
    out.R = ricci_bound(seg, out.barycenter_t);
    return out;
}

} // namespace grlb
