#include "doctest.h"

#include "cdsw/kostant_b.hpp"

using namespace cdsw;

namespace {

LieAlgebra build(const char* t) { return chevalley_basis(RootSystem(parse_cartan_type(t))); }

}  // namespace

TEST_CASE("abelian ideal predicate") {
    RootSystem a2 = build_root_system(parse_cartan_type("A2"));
    const int theta = a2.highest_root_index();
    CHECK(is_abelian_ideal(a2, {}));
    CHECK(is_abelian_ideal(a2, {theta}));
    CHECK_FALSE(is_abelian_ideal(a2, {0}));         // not upward closed
    CHECK_FALSE(is_abelian_ideal(a2, {0, 1, theta}));  // a1 + a2 is a root
}

TEST_CASE("census") {
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2"}) {
        CAPTURE(t);
        RootSystem rs = build_root_system(parse_cartan_type(t));
        auto ideals = enumerate_abelian_ideals(rs);
        CHECK(ideals.size() == (std::size_t{1} << rs.rank()));
        CHECK(std::is_sorted(ideals.begin(), ideals.end(), [](auto& a, auto& b) { return a.size() < b.size(); }));
        for (const auto& a : ideals) CHECK(module_of_ideal(rs, a).casimir_eigenvalue == a.size());
    }
}

TEST_CASE("B components of G2") {
    LieAlgebra L = build("G2");
    ExteriorIndex idx(L);
    const std::vector<long> dims = {1, 14, 77, 182, 0, 0};
    for (int d = 0; d < static_cast<int>(dims.size()); ++d) {
        BComponent b(L, idx, d);
        CHECK(static_cast<long>(b.dimension()) == dims[d]);
        for (const auto& e : b.eigenvalues()) CHECK(e <= d);
    }
    BComponent b2(L, idx, 2);
    CHECK(b2.eigenvalues() == std::vector<Rational>{1, 2});
}

TEST_CASE("projection onto B") {
    LieAlgebra L = build("B2");
    ExteriorIndex idx(L);
    BComponent b(L, idx, 2);
    for (const auto& [w, blk] : b.blocks()) {
        // Projecting an element of B returns its own coordinates.
        for (std::size_t r = 0; r < blk.basis.rank(); ++r) {
            RatVector e{{static_cast<std::uint32_t>(r), make_rational(3, 2)}};
            Multivector v = BComponent::element(blk, e);
            RatVector acc;
            for (const auto& [k, c] : v.terms())
                for (const auto& [i, a] : b.project(k.x)) acc.emplace_back(i, a * c);
            CHECK(normalize(acc) == e);
        }
    }
    // v_a lies in B and the projection of v_theta is its own coordinate.
    const auto ideals = enumerate_abelian_ideals(L.root_system());
    for (const auto& a : ideals) {
        if (a.size() != 2) continue;
        Multivector va = ideal_vector(L, a);
        const auto& key = va.terms().begin()->first;
        const auto* blk = b.block(idx.weight_of_mask(key.x));
        REQUIRE(blk != nullptr);
        RatVector m{{static_cast<std::uint32_t>(blk->monomials.index(key)), 1}};
        CHECK(member(m, blk->basis));
    }
}

TEST_CASE("kernel map") {
    LieAlgebra L = build("A1");
    // d = 0: wedge^1 -> 0, kernel everything
    CHECK(nullspace(kernel_map(L, 0)).rank() == 3);
    // d = 1: x ^ y -> [x, y], injective on sl2
    OperatorSlice k1 = kernel_map(L, 1);
    CHECK(nullspace(k1).rank() == 0);
    CHECK(nullspace(kernel_map(L, 2)).rank() == 0);
    CHECK_THROWS_AS(kernel_map(L, 3), std::invalid_argument);
    for (const char* t : {"A2", "B2", "G2"}) {
        CAPTURE(t);
        LieAlgebra M = build(t);
        ExteriorIndex idx(M);
        for (int d = 0; d <= 3; ++d) CHECK(nullspace(kernel_map(M, d)).rows() == BComponent(M, idx, d + 1).subspace(idx).rows());
    }
}

TEST_CASE("Casimir on exterior powers") {
    LieAlgebra L = build("A2");
    OperatorSlice c1 = casimir_on_exterior(L, 1);
    for (std::size_t i = 0; i < c1.source.size(); ++i) {
        std::vector<Rational> e(c1.source.size(), 0);
        e[i] = 1;
        CHECK(c1.apply(e) == e);
    }
    CHECK_THROWS_AS(casimir_on_exterior(L, 9), std::invalid_argument);
    // top exterior power is trivial
    OperatorSlice top = casimir_on_exterior(L, 8);
    CHECK(top.is_zero());
}
