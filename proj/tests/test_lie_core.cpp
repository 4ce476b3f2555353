#include "doctest.h"

#include "cdsw/lie_algebra.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cdsw;

namespace {

LieAlgebra build(const char* t) { return chevalley_basis(RootSystem(parse_cartan_type(t))); }

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

Rational trace(const RationalMatrix& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

TEST_CASE("cartan type parsing") {
    CHECK(parse_cartan_type("G2").name() == "G2");
    CHECK(parse_cartan_type("b3").name() == "B3");
    for (const char* bad : {"", "A", "A0", "B1", "C1", "D2", "G3", "E6", "A5", "X2", "A-1"}) CHECK_THROWS_AS(parse_cartan_type(bad), std::invalid_argument);
}

TEST_CASE("root counts and dual Coxeter numbers") {
    // |Phi+| = n(n+1)/2 for A_n, n^2 for B_n and C_n, n(n-1) for D_n, 6 for G2.
    struct Row {
        const char* t;
        int positive, h;
    };
    for (const Row& r : {Row{"A1", 1, 2}, Row{"A2", 3, 3}, Row{"A3", 6, 4}, Row{"A4", 10, 5}, Row{"B2", 4, 3}, Row{"B3", 9, 5},
                         Row{"B4", 16, 7}, Row{"C3", 9, 4}, Row{"C4", 16, 5}, Row{"D4", 12, 6}, Row{"G2", 6, 4}}) {
        CAPTURE(r.t);
        RootSystem rs = build_root_system(parse_cartan_type(r.t));
        CHECK(rs.num_positive() == r.positive);
        CHECK(dual_coxeter_number(rs) == r.h);
        CHECK(rs.inner(rs.highest_root(), rs.highest_root()) == 2);
    }
}

TEST_CASE("G2 conventions: alpha1 short") {
    RootSystem rs = build_root_system(parse_cartan_type("G2"));
    CHECK(rs.cartan(0, 1) == -1);
    CHECK(rs.cartan(1, 0) == -3);
    CHECK(rs.highest_root() == RootCoords{3, 2});
    CHECK(rs.inner(RootCoords{1, 0}, RootCoords{1, 0}) * 3 == rs.inner(RootCoords{0, 1}, RootCoords{0, 1}));
    const std::vector<RootCoords> expected = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    auto pos = rs.positive_roots();
    std::sort(pos.begin(), pos.end());
    auto e = expected;
    std::sort(e.begin(), e.end());
    CHECK(pos == e);
}

TEST_CASE("adjoint representation and Killing form") {
    for (const char* t : {"A1", "A2", "B2", "G2", "A3"}) {
        CAPTURE(t);
        LieAlgebra L = build(t);
        const int n = L.dim();
        std::vector<RationalMatrix> ad;
        for (int i = 0; i < n; ++i) ad.push_back(L.adjoint_matrix(i));
        // ad is a homomorphism
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RationalMatrix rhs(n, n);
                for (const auto& b : L.bracket(i, j)) rhs += ad[b.index] * Rational(b.coeff);
                REQUIRE(commutator(ad[i], ad[j]) == rhs);
            }
        // Killing form = 2 h^vee times the normalized form
        const int h = dual_coxeter_number(L.root_system());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) REQUIRE(trace(ad[i] * ad[j]) == L.gram(i, j) * (2 * h));
        CHECK(adjoint_casimir_scalar(L) == 2 * h);
    }
}

TEST_CASE("Chevalley relations") {
    LieAlgebra L = build("G2");
    const RootSystem& rs = L.root_system();
    for (int a = 0; a < rs.num_positive(); ++a) {
        // [e_a, f_a] is the coroot, [h_i, e_a] = <a, alpha_i^vee> e_a
        auto co = rs.coroot_coordinates(rs.positive_roots()[a]);
        std::vector<BasisTerm> expect;
        for (int i = 0; i < rs.rank(); ++i)
            if (co[i] != 0) expect.push_back({L.h_index(i), co[i]});
        CHECK(L.bracket(L.e_index(a), L.f_index(a)) == expect);
        for (int i = 0; i < rs.rank(); ++i) {
            const int c = rs.pairing_with_coroot(rs.positive_roots()[a], i);
            std::vector<BasisTerm> he;
            if (c != 0) he.push_back({L.e_index(a), c});
            CHECK(L.bracket(L.h_index(i), L.e_index(a)) == he);
        }
    }
    // N_{a,b} = +-(p+1): [e_1, e_2] = +-e_{a1+a2}
    auto b = L.bracket(L.e_index(0), L.e_index(1));
    REQUIRE(b.size() == 1);
    CHECK(std::abs(b[0].coeff) == 1);
}

TEST_CASE("structure-constant cache") {
    LieAlgebra L = build("B2");
    std::stringstream s;
    write_structure_constants(s, L);
    LieAlgebra back = read_structure_constants(s);
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) CHECK(back.bracket(i, j) == L.bracket(i, j));

    std::stringstream bad("not a cache file\n");
    CHECK_THROWS(read_structure_constants(bad));

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cdsw_cache_test";
    fs::remove_all(dir);
    setenv("CDSW_CACHE_DIR", dir.c_str(), 1);
    LieAlgebra first = load_or_build_algebra(parse_cartan_type("A2"));
    CHECK(fs::exists(dir / "A2.sc"));
    LieAlgebra second = load_or_build_algebra(parse_cartan_type("A2"));
    for (int i = 0; i < first.dim(); ++i)
        for (int j = 0; j < first.dim(); ++j) CHECK(first.bracket(i, j) == second.bracket(i, j));
    unsetenv("CDSW_CACHE_DIR");
    fs::remove_all(dir);
}

TEST_CASE("casimir_operator rejects a non-representation") {
    LieAlgebra L = build("A1");
    std::vector<RationalMatrix> zero(L.dim(), RationalMatrix(2, 2));
    zero[L.e_index(0)](0, 1) = 1;
    CHECK_THROWS_AS(casimir_operator(L, zero), std::invalid_argument);
    CHECK_THROWS_AS(casimir_operator(L, {}), std::invalid_argument);
}
