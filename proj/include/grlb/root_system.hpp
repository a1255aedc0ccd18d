#pragma once

// Positive roots of the root systems B_n, C_n, F4 and G2 in the simple-root
// basis, with Bourbaki (= Humphreys) numbering of the simple roots:
//
//   B_n  alpha_m = L_m - L_{m+1} (m < n), alpha_n = L_n        alpha_n short
//   C_n  alpha_m = L_m - L_{m+1} (m < n), alpha_n = 2 L_n      alpha_n long
//   F4   alpha_1, alpha_2 long; alpha_3, alpha_4 short; alpha_2 - alpha_3 the double bond
//   G2   alpha_1 short, alpha_2 long
//
// Simple-root and fundamental-weight indices are 1-based throughout, as in
// alpha_1..alpha_n and varpi_1..varpi_n.
//
// The invariant form is normalized per type so that the half squared
// lengths d_m = (alpha_m, alpha_m) / 2 are
//
//   B_n  d_m = 1 (m < n), d_n = 1/2
//   C_n  d_m = 1 (m < n), d_n = 2
//   F4   d_1 = d_2 = 1,   d_3 = d_4 = 1/2
//   G2   d_1 = 1/2,       d_2 = 3/2
//
// and (alpha, varpi_m) = c_m(alpha) * d_m for alpha = sum c_m alpha_m.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grlb/error.hpp"
#include "grlb/rational.hpp"

namespace grlb {

enum class RootType { B, C, F4, G2 };

constexpr std::string_view to_string(RootType type) noexcept {
    switch (type) {
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::F4: return "F4";
    case RootType::G2: return "G2";
    }
    return "?";
}

/// Coefficients of a root on alpha_1..alpha_n (0-based storage).
using RootVector = std::vector<int>;

/// Coefficients on the orthonormal basis L_1..L_n of the classical models.
using OrthoVector = std::vector<int>;

/// A weight written in the fundamental-weight basis, sum_m x_m varpi_m.
/// Only nonzero coefficients are stored.
class WeightExpr {
public:
    WeightExpr() = default;

    static WeightExpr fundamental(int m, const Rational& coefficient = 1) {
        WeightExpr w;
        w.add(m, coefficient);
        return w;
    }

    Rational coefficient(int m) const {
        const auto it = coords_.find(m);
        return it == coords_.end() ? Rational(0) : it->second;
    }

    void add(int m, const Rational& value) {
        if (value == 0) {
            return;
        }
        auto [it, inserted] = coords_.try_emplace(m, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) {
                coords_.erase(it);
            }
        }
    }

    const std::map<int, Rational>& terms() const noexcept { return coords_; }
    bool is_zero() const noexcept { return coords_.empty(); }

    WeightExpr& operator+=(const WeightExpr& rhs) {
        for (const auto& [m, c] : rhs.coords_) {
            add(m, c);
        }
        return *this;
    }

    WeightExpr& operator-=(const WeightExpr& rhs) {
        for (const auto& [m, c] : rhs.coords_) {
            add(m, -c);
        }
        return *this;
    }

    WeightExpr& operator*=(const Rational& scalar) {
        if (scalar == 0) {
            coords_.clear();
        }
        for (auto& [m, c] : coords_) {
            c *= scalar;
        }
        return *this;
    }

    friend WeightExpr operator+(WeightExpr lhs, const WeightExpr& rhs) { return lhs += rhs; }
    friend WeightExpr operator-(WeightExpr lhs, const WeightExpr& rhs) { return lhs -= rhs; }
    friend WeightExpr operator*(const Rational& scalar, WeightExpr w) { return w *= scalar; }
    friend WeightExpr operator*(WeightExpr w, const Rational& scalar) { return w *= scalar; }
    friend bool operator==(const WeightExpr& lhs, const WeightExpr& rhs) { return lhs.coords_ == rhs.coords_; }

    /// e.g. "45/28 ϖ1 + 67/28 ϖ2"
    std::string to_string() const {
        if (coords_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [m, c] : coords_) {
            if (!out.empty()) {
                out += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                out += "-";
            }
            const Rational mag = abs(c);
            if (mag != 1) {
                out += mag.get_str() + " ";
            }
            out += "ϖ" + std::to_string(m);
        }
        return out;
    }

private:
    std::map<int, Rational> coords_;
};

struct RootSystem {
    RootType type = RootType::B;
    int rank = 0;
    std::vector<RootVector> positive_roots;
    /// d_m = (alpha_m, alpha_m) / 2, stored at m - 1.
    std::vector<Rational> half_lengths;
    /// (alpha_l, alpha_m), stored at [l - 1][m - 1].
    std::vector<std::vector<Rational>> gram;

    void check_index(int m) const {
        if (m < 1 || m > rank) {
            throw Error(ErrorCode::index_out_of_range,
                        "simple root index " + std::to_string(m) + " outside 1.." + std::to_string(rank));
        }
    }

    const Rational& half_length(int m) const {
        check_index(m);
        return half_lengths[static_cast<std::size_t>(m - 1)];
    }

    /// <alpha_m^vee, alpha_l>, the varpi_m coefficient of alpha_l.
    Rational cartan(int l, int m) const {
        check_index(l);
        check_index(m);
        return gram[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(m - 1)] / half_length(m);
    }
};

namespace detail {

inline int root_height(const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); }

// Height ascending; within a height, larger coefficients on earlier simple
// roots first, so alpha_1..alpha_n lead the list in order.
inline void sort_roots(std::vector<RootVector>& roots) {
    std::sort(roots.begin(), roots.end(), [](const RootVector& x, const RootVector& y) {
        const int hx = root_height(x);
        const int hy = root_height(y);
        return hx != hy ? hx < hy : x > y;
    });
}

inline std::vector<std::vector<Rational>> gram_from_table(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> gram;
    for (const auto& row : rows) {
        gram.emplace_back(row);
    }
    return gram;
}

} // namespace detail

/// Positive roots of B_n (L_i - L_j, L_i + L_j, L_i) or C_n (L_i - L_j,
/// L_i + L_j, 2 L_i), i < j, in the orthonormal basis.
inline std::vector<OrthoVector> orthonormal_positive_roots(RootType type, int n) {
    if ((type != RootType::B && type != RootType::C) || n < 2) {
        throw Error(ErrorCode::unsupported_root_system, "orthonormal model exists for B_n and C_n, n >= 2");
    }
    const auto size = static_cast<std::size_t>(n);
    std::vector<OrthoVector> roots;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            OrthoVector minus(size, 0);
            minus[i] = 1;
            minus[j] = -1;
            roots.push_back(minus);
            OrthoVector plus(size, 0);
            plus[i] = 1;
            plus[j] = 1;
            roots.push_back(plus);
        }
        OrthoVector single(size, 0);
        single[i] = type == RootType::B ? 1 : 2;
        roots.push_back(single);
    }
    return roots;
}

/// sum_l v_l L_l rewritten on the simple roots of B_n or C_n.
inline RootVector orthonormal_to_simple(RootType type, int n, const OrthoVector& v) {
    const auto size = static_cast<std::size_t>(n);
    if (v.size() != size) {
        throw Error(ErrorCode::index_out_of_range, "orthonormal vector has the wrong length");
    }
    RootVector c(size, 0);
    int partial = 0;
    for (std::size_t m = 0; m < size; ++m) {
        partial += v[m];
        c[m] = partial;
    }
    if (type == RootType::C) {
        if (c[size - 1] % 2 != 0) {
            throw Error(ErrorCode::invalid_parameter, "vector is not in the root lattice of C_n");
        }
        c[size - 1] /= 2;
    }
    return c;
}

/// sum_m c_m alpha_m rewritten on L_1..L_n for B_n or C_n.
inline OrthoVector simple_to_orthonormal(RootType type, int n, const RootVector& c) {
    const auto size = static_cast<std::size_t>(n);
    if (c.size() != size) {
        throw Error(ErrorCode::index_out_of_range, "root vector has the wrong length");
    }
    OrthoVector v(size, 0);
    for (std::size_t l = 0; l < size; ++l) {
        v[l] = c[l] - (l > 0 ? c[l - 1] : 0);
    }
    if (type == RootType::C) {
        v[size - 1] = 2 * c[size - 1] - (size > 1 ? c[size - 2] : 0);
    }
    return v;
}

inline RootSystem build_root_system(RootType type, int rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;

    switch (type) {
    case RootType::B:
    case RootType::C: {
        if (rank < 2) {
            throw Error(ErrorCode::unsupported_root_system,
                        std::string(to_string(type)) + "_" + std::to_string(rank) + " is not supported (rank >= 2)");
        }
        for (const auto& v : orthonormal_positive_roots(type, rank)) {
            rs.positive_roots.push_back(orthonormal_to_simple(type, rank, v));
        }
        const auto size = static_cast<std::size_t>(rank);
        std::vector<OrthoVector> simple(size);
        for (std::size_t m = 0; m < size; ++m) {
            RootVector unit(size, 0);
            unit[m] = 1;
            simple[m] = simple_to_orthonormal(type, rank, unit);
        }
        rs.gram.assign(size, std::vector<Rational>(size));
        for (std::size_t l = 0; l < size; ++l) {
            for (std::size_t m = 0; m < size; ++m) {
                rs.gram[l][m] = std::inner_product(simple[l].begin(), simple[l].end(), simple[m].begin(), 0);
            }
        }
        break;
    }
    case RootType::F4:
        if (rank != 4) {
            throw Error(ErrorCode::unsupported_root_system, "F4 has rank 4");
        }
        rs.positive_roots = {
            {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
            {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1},
            {1, 1, 1, 0}, {0, 1, 2, 0}, {0, 1, 1, 1},
            {1, 1, 2, 0}, {1, 1, 1, 1}, {0, 1, 2, 1},
            {1, 2, 2, 0}, {1, 1, 2, 1}, {0, 1, 2, 2},
            {1, 2, 2, 1}, {1, 1, 2, 2},
            {1, 2, 3, 1}, {1, 2, 2, 2},
            {1, 2, 3, 2},
            {1, 2, 4, 2},
            {1, 3, 4, 2},
            {2, 3, 4, 2},
        };
        rs.gram = detail::gram_from_table({
            {2, -1, 0, 0},
            {-1, 2, -1, 0},
            {0, -1, 1, Rational(-1, 2)},
            {0, 0, Rational(-1, 2), 1},
        });
        break;
    case RootType::G2:
        if (rank != 2) {
            throw Error(ErrorCode::unsupported_root_system, "G2 has rank 2");
        }
        rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
        rs.gram = detail::gram_from_table({
            {1, Rational(-3, 2)},
            {Rational(-3, 2), 3},
        });
        break;
    }

    detail::sort_roots(rs.positive_roots);
    for (int m = 0; m < rank; ++m) {
        rs.half_lengths.push_back(rs.gram[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)] / 2);
    }
    return rs;
}

/// The same root system with the invariant form multiplied by lambda > 0.
inline RootSystem rescaled(RootSystem rs, const Rational& lambda) {
    if (lambda <= 0) {
        throw Error(ErrorCode::invalid_parameter, "rescaling factor must be positive");
    }
    for (auto& d : rs.half_lengths) {
        d *= lambda;
    }
    for (auto& row : rs.gram) {
        for (auto& entry : row) {
            entry *= lambda;
        }
    }
    return rs;
}

/// sum_l c_l alpha_l in the fundamental-weight basis.
inline WeightExpr to_weight(const RootSystem& rs, const RootVector& root) {
    WeightExpr w;
    for (int l = 1; l <= rs.rank; ++l) {
        const int c = root[static_cast<std::size_t>(l - 1)];
        if (c == 0) {
            continue;
        }
        for (int m = 1; m <= rs.rank; ++m) {
            w.add(m, c * rs.cartan(l, m));
        }
    }
    return w;
}

/// Sum of a set of roots in the fundamental-weight basis.
inline WeightExpr root_sum(const RootSystem& rs, const std::vector<RootVector>& roots) {
    RootVector total(static_cast<std::size_t>(rs.rank), 0);
    for (const auto& r : roots) {
        for (std::size_t m = 0; m < total.size(); ++m) {
            total[m] += r[m];
        }
    }
    return to_weight(rs, total);
}

/// Half the sum of the positive roots: the sum of all fundamental weights.
inline WeightExpr rho_G(const RootSystem& rs) {
    WeightExpr rho;
    for (int m = 1; m <= rs.rank; ++m) {
        rho.add(m, 1);
    }
    return rho;
}

/// <alpha_m^vee, w>, the varpi_m coefficient of w.
inline Rational coroot_pairing(const RootSystem& rs, int m, const WeightExpr& w) {
    rs.check_index(m);
    return w.coefficient(m);
}

} // namespace grlb
