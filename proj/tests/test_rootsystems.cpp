#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "grlb/root_system.hpp"

using namespace grlb;

namespace {

RootVector highest_root(const RootSystem& rs) { return rs.positive_roots.back(); }

std::vector<std::vector<int>> cartan_matrix(const RootSystem& rs) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rs.rank));
    for (int l = 1; l <= rs.rank; ++l) {
        for (int m = 1; m <= rs.rank; ++m) {
            const Rational c = rs.cartan(l, m);
            REQUIRE(c.get_den() == 1);
            out[static_cast<std::size_t>(l - 1)].push_back(static_cast<int>(c.get_num().get_si()));
        }
    }
    return out;
}

} // namespace

TEST_CASE("positive root counts") {
    for (int n = 2; n <= 12; ++n) {
        CHECK(build_root_system(RootType::B, n).positive_roots.size() == static_cast<std::size_t>(n * n));
        CHECK(build_root_system(RootType::C, n).positive_roots.size() == static_cast<std::size_t>(n * n));
    }
    CHECK(build_root_system(RootType::F4, 4).positive_roots.size() == 24);
    CHECK(build_root_system(RootType::G2, 2).positive_roots.size() == 6);
}

TEST_CASE("unsupported ranks") {
    CHECK_THROWS_AS(build_root_system(RootType::B, 1), Error);
    CHECK_THROWS_AS(build_root_system(RootType::F4, 3), Error);
    CHECK_THROWS_AS(build_root_system(RootType::G2, 3), Error);
    CHECK_THROWS_AS(build_root_system(RootType::C, 3).half_length(4), Error);
}

TEST_CASE("Cartan matrices in Bourbaki numbering") {
    // Entry [l][m] is <alpha_m^vee, alpha_l>.
    CHECK(cartan_matrix(build_root_system(RootType::B, 3)) ==
          std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
    CHECK(cartan_matrix(build_root_system(RootType::C, 3)) ==
          std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    CHECK(cartan_matrix(build_root_system(RootType::F4, 4)) ==
          std::vector<std::vector<int>>{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    CHECK(cartan_matrix(build_root_system(RootType::G2, 2)) == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
}

TEST_CASE("half lengths") {
    const auto b4 = build_root_system(RootType::B, 4);
    CHECK(b4.half_lengths == std::vector<Rational>{1, 1, 1, make_rational(1, 2)});
    const auto c4 = build_root_system(RootType::C, 4);
    CHECK(c4.half_lengths == std::vector<Rational>{1, 1, 1, 2});
    CHECK(build_root_system(RootType::F4, 4).half_lengths ==
          std::vector<Rational>{1, 1, make_rational(1, 2), make_rational(1, 2)});
    CHECK(build_root_system(RootType::G2, 2).half_lengths == std::vector<Rational>{make_rational(1, 2), make_rational(3, 2)});
}

TEST_CASE("highest roots") {
    CHECK(highest_root(build_root_system(RootType::B, 4)) == RootVector{1, 2, 2, 2});
    CHECK(highest_root(build_root_system(RootType::C, 4)) == RootVector{2, 2, 2, 1});
    CHECK(highest_root(build_root_system(RootType::F4, 4)) == RootVector{2, 3, 4, 2});
    CHECK(highest_root(build_root_system(RootType::G2, 2)) == RootVector{3, 2});
}

TEST_CASE("sum of positive roots is 2 rho_G") {
    std::vector<RootSystem> systems{build_root_system(RootType::F4, 4), build_root_system(RootType::G2, 2)};
    for (int n = 2; n <= 12; ++n) {
        systems.push_back(build_root_system(RootType::B, n));
        systems.push_back(build_root_system(RootType::C, n));
    }
    for (const auto& rs : systems) {
        INFO(to_string(rs.type) << rs.rank);
        CHECK(root_sum(rs, rs.positive_roots) == rho_G(rs) * Rational(2));
    }
}

TEST_CASE("positive roots are closed under simple reflections") {
    std::vector<RootSystem> systems{build_root_system(RootType::F4, 4), build_root_system(RootType::G2, 2)};
    for (int n = 2; n <= 7; ++n) {
        systems.push_back(build_root_system(RootType::B, n));
        systems.push_back(build_root_system(RootType::C, n));
    }
    for (const auto& rs : systems) {
        INFO(to_string(rs.type) << rs.rank);
        const std::set<RootVector> roots(rs.positive_roots.begin(), rs.positive_roots.end());
        for (const auto& root : rs.positive_roots) {
            const WeightExpr w = to_weight(rs, root);
            for (int m = 1; m <= rs.rank; ++m) {
                RootVector image = root;
                const Rational pairing = coroot_pairing(rs, m, w);
                REQUIRE(pairing.get_den() == 1);
                image[static_cast<std::size_t>(m - 1)] -= static_cast<int>(pairing.get_num().get_si());
                const bool simple = std::count(root.begin(), root.end(), 0) == rs.rank - 1 &&
                                    root[static_cast<std::size_t>(m - 1)] == 1;
                CHECK((simple || roots.count(image) == 1));
            }
        }
    }
}

TEST_CASE("orthonormal model round trip") {
    for (auto type : {RootType::B, RootType::C}) {
        for (int n = 2; n <= 8; ++n) {
            for (const auto& v : orthonormal_positive_roots(type, n)) {
                CHECK(simple_to_orthonormal(type, n, orthonormal_to_simple(type, n, v)) == v);
            }
        }
    }
}

TEST_CASE("roots are ordered by height") {
    const auto rs = build_root_system(RootType::C, 6);
    for (std::size_t r = 1; r < rs.positive_roots.size(); ++r) {
        CHECK(detail::root_height(rs.positive_roots[r - 1]) <= detail::root_height(rs.positive_roots[r]));
    }
}

TEST_CASE("rescaling leaves Cartan integers unchanged") {
    const auto f4 = build_root_system(RootType::F4, 4);
    for (const Rational& lambda : {Rational(2), make_rational(1, 3)}) {
        const auto scaled = rescaled(f4, lambda);
        CHECK(cartan_matrix(scaled) == cartan_matrix(f4));
        CHECK(scaled.half_length(3) == f4.half_length(3) * lambda);
    }
    CHECK_THROWS_AS(rescaled(f4, 0), Error);
}

TEST_CASE("weight expressions") {
    WeightExpr w = WeightExpr::fundamental(1, make_rational(45, 28)) + WeightExpr::fundamental(2, make_rational(67, 28));
    CHECK(w.to_string() == "45/28 ϖ1 + 67/28 ϖ2");
    w -= WeightExpr::fundamental(1, make_rational(45, 28));
    CHECK(w.coefficient(1) == 0);
    CHECK(w.terms().size() == 1);
    CHECK(WeightExpr().is_zero());
    CHECK_THROWS_AS(coroot_pairing(build_root_system(RootType::G2, 2), 3, w), Error);
}
