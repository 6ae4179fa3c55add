#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ghost/root_system.hpp"

using namespace ghost;

namespace {

Root root3(int x, int y, int z) {
    Root r;
    r.coords = {x, y, z};
    return r;
}

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("rank and type selection") {
    CHECK(rank_for(3) == 2);
    CHECK(type_for(3) == LieType::B);
    CHECK(rank_for(4) == 3);
    CHECK(type_for(4) == LieType::D);
    CHECK(rank_for(5) == 3);
    CHECK(type_for(5) == LieType::B);
    CHECK(rank_for(6) == 4);
    CHECK(type_for(6) == LieType::D);
    CHECK_THROWS_AS(build_root_system(2), std::invalid_argument);
    CHECK_THROWS_AS(rank_for(0), std::invalid_argument);
}

TEST_CASE("n=5 positive roots against an explicit list") {
    const RootSystem rs = build_root_system(5);
    // Independently written out: all e_i - e_j, e_i + e_j (i < j) and e_i.
    const std::set<Root> expected = {
        root3(1, -1, 0), root3(1, 0, -1), root3(0, 1, -1), root3(1, 1, 0), root3(1, 0, 1),
        root3(0, 1, 1),  root3(1, 0, 0),  root3(0, 1, 0),  root3(0, 0, 1)};
    CHECK(rs.positive_roots.size() == 9);
    CHECK(as_set(rs.positive_roots) == expected);

    std::vector<Rational> half(3, Rational(0));
    for (const Root& r : expected)
        for (int i = 0; i < 3; ++i) half[i] += Rational(r.coords[i], 2);
    CHECK(rs.rho == half);
    CHECK(rs.rho == std::vector<Rational>{Rational(5, 2), Rational(3, 2), Rational(1, 2)});

    CHECK(rs.simple_roots ==
          std::vector<Root>{root3(1, -1, 0), root3(0, 1, -1), root3(0, 0, 1)});
}

TEST_CASE("n=4 positive roots against an explicit list") {
    const RootSystem rs = build_root_system(4);
    const std::set<Root> expected = {root3(1, -1, 0), root3(1, 0, -1), root3(0, 1, -1),
                                     root3(1, 1, 0),  root3(1, 0, 1),  root3(0, 1, 1)};
    CHECK(rs.positive_roots.size() == 6);
    CHECK(as_set(rs.positive_roots) == expected);
    CHECK(rs.rho == std::vector<Rational>{Rational(2), Rational(1), Rational(0)});
    CHECK(rs.simple_roots ==
          std::vector<Root>{root3(1, -1, 0), root3(0, 1, -1), root3(0, 1, 1)});
}

TEST_CASE("positive root counts for a range of n") {
    for (int n = 3; n <= 9; ++n) {
        const RootSystem rs = build_root_system(n);
        const std::size_t l = static_cast<std::size_t>(rs.rank);
        const std::size_t expected = rs.type == LieType::B ? l * l : l * (l - 1);
        CHECK(rs.positive_roots.size() == expected);
    }
}

TEST_CASE("unipotent radicals by first support") {
    const RootSystem rs = build_root_system(5);
    const auto d0 = unipotent_radical_roots(rs, ParabolicId::P0);
    const auto d1 = unipotent_radical_roots(rs, ParabolicId::P1);
    const auto d2 = unipotent_radical_roots(rs, ParabolicId::P2);
    CHECK(as_set(d0) == std::set<Root>{root3(1, -1, 0), root3(1, 0, -1), root3(1, 1, 0),
                                       root3(1, 0, 1), root3(1, 0, 0), root3(0, 1, -1),
                                       root3(0, 1, 1), root3(0, 1, 0)});
    CHECK(as_set(d1) == std::set<Root>{root3(1, -1, 0), root3(1, 0, -1), root3(1, 1, 0),
                                       root3(1, 0, 1), root3(1, 0, 0)});
    std::set<Root> d2_expected = as_set(d0);
    d2_expected.erase(root3(1, -1, 0));
    CHECK(as_set(d2) == d2_expected);

    const ParabolicData p1 = parabolic_datum(rs, ParabolicId::P1);
    CHECK(p1.delta == d1);
    for (int n = 3; n <= 8; ++n) {
        const RootSystem s = build_root_system(n);
        const int l = s.rank;
        const std::size_t big = unipotent_radical_roots(s, ParabolicId::P0).size();
        CHECK(big == static_cast<std::size_t>(s.type == LieType::B ? 4 * l - 4 : 4 * l - 6));
        CHECK(unipotent_radical_roots(s, ParabolicId::P2).size() == big - 1);
    }
}

TEST_CASE("coroot pairing normalizes short roots") {
    const RootSystem rs = build_root_system(5);
    // <rho, alpha^vee> = 1 for every simple root, including the short one.
    for (const Root& s : rs.simple_roots) CHECK(coroot_pairing(rs.rho, s) == Rational(1));
    CHECK(coroot_pairing({Rational(3), Rational(0), Rational(0)}, root3(1, 0, 0)) ==
          Rational(6));
    CHECK(coroot_pairing({Rational(3), Rational(1), Rational(0)}, root3(1, -1, 0)) ==
          Rational(2));
}

TEST_CASE("root text") {
    CHECK(root_text(root3(1, -1, 0)) == "e1-e2");
    CHECK(root_text(root3(0, 1, 1)) == "e2+e3");
    CHECK(root_text(root3(0, 0, 1)) == "e3");
}

TEST_CASE("highest weight validation") {
    const RootSystem b = build_root_system(5);
    CHECK(validate_highest_weight(b, {2, 1, 0}, 1).valid);
    CHECK(validate_highest_weight(b, {0, 0, 0}, 0).valid);
    CHECK_FALSE(validate_highest_weight(b, {2, 1, 0}, 0).valid);  // parity
    CHECK_FALSE(validate_highest_weight(b, {0, 1, 0}, 1).valid);  // chain
    CHECK_FALSE(validate_highest_weight(b, {1, 1, -1}, 1).valid);  // sign
    CHECK_FALSE(validate_highest_weight(b, {1, 1}, 0).valid);      // arity

    const RootSystem d = build_root_system(4);
    CHECK(validate_highest_weight(d, {2, 1, -1}, 0).valid);
    CHECK(validate_highest_weight(d, {2, 1, 1}, 0).valid);
    CHECK_FALSE(validate_highest_weight(d, {1, 1, -2}, 0).valid);  // |a3| too big
    CHECK_FALSE(validate_highest_weight(d, {1, -1, 0}, 0).valid);

    const WeightVerdict v = validate_highest_weight(b, {0, 1, 0}, 0);
    REQUIRE_FALSE(v.valid);
    REQUIRE_FALSE(v.problems.empty());
    CHECK(v.problems.front().find("a1") != std::string::npos);
}

TEST_CASE("generic and concrete weights") {
    const RootSystem rs = build_root_system(5);
    const SymbolicWeight gen = generic_highest_weight(rs);
    REQUIRE(gen.eps.size() == 3);
    CHECK(gen.eps[0] == AffineForm::variable(3, 0));
    CHECK(gen.kappa == AffineForm::central(3));
    const SymbolicWeight con = concrete_highest_weight(rs, {3, 2, 1}, 1);
    CHECK(con.eps[2] == AffineForm::constant(3, Rational(1)));
    CHECK(con.kappa == AffineForm::constant(3, Rational(1)));
    CHECK(con.eps[0].is_constant());
}
