#include "doctest.h"

#include "cdsw/grassmann.hpp"

using namespace cdsw;

namespace {

LieAlgebra build(const char* t) { return chevalley_basis(RootSystem(parse_cartan_type(t))); }

Multivector x(int i) { return Multivector::generator(Copy::X, i); }
Multivector y(int i) { return Multivector::generator(Copy::Y, i); }

}  // namespace

TEST_CASE("monomial signs") {
    CHECK(wedge_sign({0b01, 0}, {0b10, 0}) == 1);
    CHECK(wedge_sign({0b10, 0}, {0b01, 0}) == -1);
    CHECK(wedge_sign({0b01, 0}, {0b01, 0}) == 0);
    CHECK(wedge_sign({0, 0b1}, {0b1, 0}) == -1);   // y_0 x_0 = -x_0 y_0
    CHECK(wedge_sign({0b11, 0}, {0b100, 0}) == 1);
    CHECK(wedge_sign({0b100, 0}, {0b11, 0}) == 1);  // moving past two factors
    CHECK(wedge_sign({0, 0b1}, {0b11, 0}) == 1);
    CHECK(wedge(x(0), x(0)).is_zero());
    CHECK(wedge(x(2), x(1)) == Multivector::monomial({0b110, 0}, -1));
}

TEST_CASE("algebra structure") {
    Multivector a = x(0) + y(1) * make_rational(1, 2);
    Multivector b = wedge(x(1), y(0)) - x(2) * Rational(3);
    CHECK(wedge(Multivector::one(), a) == a);
    CHECK(wedge(a, a).is_zero());  // odd
    CHECK(power(a, 0) == Multivector::one());
    CHECK(power(a, 2).is_zero());
    Multivector mixed = a + b;
    CHECK(component(mixed, 1, 0) == x(0) - x(2) * Rational(3));
    CHECK(component(mixed, 1, 1) == wedge(x(1), y(0)));
    CHECK(component(mixed, 0, 1).is_homogeneous(0, 1));
    CHECK(mixed.total_degree() == -1);
    CHECK(b.is_homogeneous(1, 1) == false);
}

TEST_CASE("contraction") {
    std::vector<Rational> xi(3, 0);
    xi[1] = 1;
    CHECK(contraction(xi, Copy::X, x(1)) == Multivector::one());
    CHECK(contraction(xi, Copy::Y, x(1)).is_zero());
    // I(x0 x1) = -x0
    CHECK(contraction(xi, Copy::X, wedge(x(0), x(1))) == x(0) * Rational(-1));
    // through the form: (e, f) = 1 in sl2
    LieAlgebra L = build("A1");
    Multivector f = Multivector::generator(Copy::Y, L.f_index(0));
    CHECK(contraction_by_form(L, L.basis_vector(L.e_index(0)), Copy::Y, f) == Multivector::one());
}

TEST_CASE("S element") {
    for (const char* t : {"A1", "A2", "G2"}) {
        CAPTURE(t);
        LieAlgebra L = build(t);
        Multivector s = s_element(L);
        CHECK(s.is_homogeneous(1, 1));
        for (int i = 0; i < L.dim(); ++i) CHECK(lie_derivative(L, L.basis_vector(i), Action::Diagonal, s).is_zero());
        Multivector top = power(s, L.dim());
        CHECK(top.size() == 1);
        CHECK(power(s, L.dim() + 1).is_zero());
        // not invariant for one copy alone
        CHECK_FALSE(lie_derivative(L, L.basis_vector(L.e_index(0)), Action::X, s).is_zero());
    }
}

TEST_CASE("ideal generators") {
    LieAlgebra L = build("A2");
    IdealGenerators g = ideal_generators(L);
    REQUIRE(g.mu20.size() == 8);
    REQUIRE(g.mu11.size() == 8);
    REQUIRE(g.mu02.size() == 8);
    ExteriorIndex idx(L);
    for (int k = 0; k < L.dim(); ++k) {
        CHECK(g.mu20[k].is_homogeneous(2, 0));
        CHECK(g.mu11[k].is_homogeneous(1, 1));
        CHECK(g.mu02[k].is_homogeneous(0, 2));
        // each generator has the weight of b_k
        for (const auto& [key, c] : g.mu11[k].terms()) CHECK(idx.weight_of_mask(key.x) + idx.weight_of_mask(key.y) == idx.basis_weight(k));
    }
    // mu02 is the image of mu20 under the swap of copies
    for (int k = 0; k < L.dim(); ++k) {
        Multivector swapped;
        for (const auto& [key, c] : g.mu20[k].terms()) swapped.add_term({key.y, key.x}, c);
        CHECK(swapped == g.mu02[k]);
    }
}

TEST_CASE("weight index") {
    LieAlgebra L = build("G2");
    ExteriorIndex idx(L);
    std::size_t total = 0;
    for (const auto& w : idx.weights(3)) total += idx.subsets(3, w).size();
    CHECK(total == 364);
    std::size_t mixed = 0;
    for (const auto& w : idx.bidegree_weights(1, 2)) mixed += idx.monomials(1, 2, w).size();
    CHECK(mixed == 14 * 91);
    CHECK(idx.subsets(14, idx.weight_of_mask((std::uint64_t{1} << 14) - 1)).size() == 1);
    CHECK(idx.weight_of_mask((std::uint64_t{1} << 14) - 1).is_zero());
}

TEST_CASE("operator slice") {
    LieAlgebra L = build("A1");
    MonomialBasis one_forms({{1, 0}, {2, 0}, {4, 0}});
    OperatorSlice ad_e = make_operator_slice(one_forms, one_forms, [&](const MonomialKey& k) {
        return lie_derivative(L, L.basis_vector(L.e_index(0)), Action::X, Multivector::monomial(k));
    });
    CHECK_FALSE(ad_e.is_zero());
    // ad(e)^3 = 0 on sl2
    std::vector<Rational> v = {1, 1, 1};
    for (int i = 0; i < 3; ++i) v = ad_e.apply(v);
    CHECK(std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; }));
    MonomialBasis small({{1, 0}});
    CHECK_THROWS(make_operator_slice(small, small, [&](const MonomialKey&) { return x(2); }));
}
