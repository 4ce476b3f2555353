#include "doctest.h"

#include "cdsw/rep_theory.hpp"

using namespace cdsw;

namespace {

RootSystem rs_of(const char* t) { return build_root_system(parse_cartan_type(t)); }
Weight w(std::vector<int> c) { return Weight{std::move(c)}; }

// Closed forms, written out independently of the root system code.
long g2_dim(long a, long b) { return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) * (a + 3 * b + 4) * (2 * a + 3 * b + 5) / 120; }
long a2_dim(long a, long b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; }

}  // namespace

TEST_CASE("Weyl dimension against closed forms") {
    RootSystem g2 = rs_of("G2"), a2 = rs_of("A2");
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            CHECK(weyl_dimension(g2, w({a, b})) == g2_dim(a, b));
            CHECK(weyl_dimension(a2, w({a, b})) == a2_dim(a, b));
        }
    CHECK(weyl_dimension(g2, w({1, 2})) == 286);
    CHECK(weyl_dimension(g2, w({4, 0})) == 182);
    CHECK_THROWS_AS(weyl_dimension(g2, w({-1, 0})), std::invalid_argument);
}

TEST_CASE("Freudenthal weight diagrams") {
    RootSystem g2 = rs_of("G2"), a2 = rs_of("A2");
    Character seven = freudenthal_multiplicities(g2, w({1, 0}));
    CHECK(seven.dimension() == 7);
    CHECK(seven.mults.at(w({0, 0})) == 1);
    Character adj = freudenthal_multiplicities(g2, w({0, 1}));
    CHECK(adj.mults.at(w({0, 0})) == 2);
    CHECK(freudenthal_multiplicities(a2, w({1, 1})).mults.at(w({0, 0})) == 2);
    // 27 of G2: zero weight multiplicity 3
    CHECK(freudenthal_multiplicities(g2, w({2, 0})).mults.at(w({0, 0})) == 3);
}

TEST_CASE("Casimir eigenvalues") {
    RootSystem g2 = rs_of("G2"), a2 = rs_of("A2");
    CHECK(casimir_eigenvalue(g2, w({0, 1})) == 1);
    CHECK(casimir_eigenvalue(g2, w({3, 0})) == 2);
    CHECK(casimir_eigenvalue(g2, w({4, 0})) == 3);
    CHECK(casimir_eigenvalue(g2, w({1, 2})) == make_rational(7, 2));
    CHECK(casimir_eigenvalue(a2, w({3, 0})) == 2);
    CHECK(casimir_eigenvalue(a2, w({0, 0})) == 0);
}

TEST_CASE("exterior powers of the adjoint") {
    LieAlgebra a2 = chevalley_basis(RootSystem(parse_cartan_type("A2")));
    auto d2 = decompose(a2.root_system(), character_of_exterior_power(a2, 2));
    std::vector<Isotypic> expect = {{w({0, 3}), 1}, {w({1, 1}), 1}, {w({3, 0}), 1}};
    std::sort(d2.begin(), d2.end(), [](auto& a, auto& b) { return a.highest_weight < b.highest_weight; });
    CHECK(d2 == expect);

    LieAlgebra g2 = chevalley_basis(RootSystem(parse_cartan_type("G2")));
    long dim = 0;
    for (const auto& iso : decompose(g2.root_system(), character_of_exterior_power(g2, 2)))
        dim += iso.multiplicity * weyl_dimension(g2.root_system(), iso.highest_weight);
    CHECK(dim == 91);
    CHECK(character_of_exterior_power(g2, 14).dimension() == 1);
    CHECK(character_of_exterior_power(g2, 0) == trivial_character(2));
}

TEST_CASE("decompose rejects non-characters") {
    RootSystem a2 = rs_of("A2");
    Character lone;
    lone.add(w({1, 0}), 1);
    CHECK_THROWS_AS(decompose(a2, lone), std::invalid_argument);
    Character neg = freudenthal_multiplicities(a2, w({1, 0}));
    neg.add(w({1, 0}), -2);
    CHECK_THROWS_AS(decompose(a2, neg), std::invalid_argument);
}

TEST_CASE("Weyl orbits and duals") {
    RootSystem g2 = rs_of("G2"), a2 = rs_of("A2"), a3 = rs_of("A3"), d4 = rs_of("D4");
    CHECK(weyl_orbit(g2, w({1, 0})).size() == 6);
    CHECK(weyl_orbit(g2, w({1, 1})).size() == 12);
    CHECK(weyl_orbit(a2, w({2, 1})).size() == 6);
    CHECK(weyl_orbit(d4, w({0, 0, 0, 0})).size() == 1);
    CHECK(dual_weight(a2, w({1, 0})) == w({0, 1}));
    CHECK(dual_weight(a3, w({2, 1, 0})) == w({0, 1, 2}));
    CHECK(dual_weight(g2, w({1, 2})) == w({1, 2}));
    CHECK(dual_weight(d4, w({1, 0, 0, 0})) == w({1, 0, 0, 0}));
    CHECK(dominant_representative(g2, w({-1, 1})).is_dominant());
}

TEST_CASE("invariant dimensions") {
    RootSystem a2 = rs_of("A2");
    Character v = freudenthal_multiplicities(a2, w({1, 0}));
    Character vd = freudenthal_multiplicities(a2, w({0, 1}));
    CHECK(invariant_dimension(a2, v, vd) == 1);
    CHECK(invariant_dimension(a2, v, v) == 0);
    Character adj = freudenthal_multiplicities(a2, w({1, 1}));
    // 8 (x) 8 contains two copies of 8 and one trivial
    CHECK(invariant_dimension(a2, tensor_product(adj, adj), adj) == 2);
    CHECK(invariant_dimension(a2, tensor_product(adj, adj), trivial_character(2)) == 1);
}
