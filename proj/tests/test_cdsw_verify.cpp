#include "doctest.h"

#include "cdsw/cdsw_verify.hpp"

#include "json.hpp"

using namespace cdsw;

namespace {

LieAlgebra build(const char* t) { return chevalley_basis(RootSystem(parse_cartan_type(t))); }

}  // namespace

TEST_CASE("pathway names") {
    CHECK(parse_pathway("direct") == Pathway::Direct);
    CHECK(parse_pathway("b-tensor-b") == Pathway::BTensorB);
    CHECK(parse_pathway("b_tensor_b") == Pathway::BTensorB);
    CHECK_THROWS_AS(parse_pathway("btb"), std::invalid_argument);
    CHECK(to_string(Pathway::BTensorB) == "b_tensor_b");
}

TEST_CASE("size estimates and the guard") {
    LieAlgebra a1 = build("A1");
    // 3*3 monomials, plus 3 copies of the (1,1) generators times C(3,0)C(3,0)
    CHECK(direct_slice_size(a1, 1, 1) == 12);
    CHECK(direct_slice_size(a1, 0, 0) == 1);
    Options opt;
    opt.size_guard = 5;
    Verifier v(a1, Pathway::Direct, opt);
    CHECK_THROWS_AS(v.cell(1, 1), SizeGuardError);
    opt.force = true;
    Verifier forced(a1, Pathway::Direct, opt);
    CHECK(forced.cell(1, 1).quotient_invariants() == 1);

    Verifier g2(build("G2"), Pathway::Direct);
    try {
        g2.cell(4, 4);
        FAIL("expected the size guard");
    } catch (const SizeGuardError& e) {
        CHECK(e.p == 4);
        CHECK(e.estimate > kDefaultSizeGuard);
        CHECK(std::string(e.what()).find("too large for direct pathway") != std::string::npos);
    }
}

TEST_CASE("cells of sl2 by hand") {
    // R_{1,1} = g (x) g, I_{1,1} = g (the image of the bracket), invariant S
    Verifier v(build("A1"), Pathway::Direct);
    auto c = v.cell(1, 1);
    CHECK(c.dim_ambient == 9);
    CHECK(c.dim_ideal == 3);
    CHECK(c.dim_invariants == 1);
    CHECK(c.dim_invariants_in_ideal == 0);
    auto c20 = v.cell(2, 0);
    CHECK(c20.dim_ideal == 3);  // all of wedge^2 g
    CHECK(v.cell_weight_zero(1, 2).dim_invariants == 1);
    CHECK(v.s_power_nonzero(1));
    CHECK_FALSE(v.s_power_nonzero(2));
}

TEST_CASE("pathways agree on quotients") {
    for (const char* t : {"A1", "A2"}) {
        CAPTURE(t);
        Verifier d(build(t), Pathway::Direct), b(build(t), Pathway::BTensorB);
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) {
                CAPTURE(p);
                CAPTURE(q);
                auto cd = d.cell(p, q), cb = b.cell(p, q);
                CHECK(cd.dim_ambient - cd.dim_ideal == cb.dim_ambient - cb.dim_ideal);
                CHECK(cd.quotient_invariants() == cb.quotient_invariants());
            }
        for (int k = 0; k <= 3; ++k) CHECK(d.s_power_nonzero(k) == b.s_power_nonzero(k));
    }
}

TEST_CASE("one invariant of B (x) B per abelian ideal") {
    // A2 has ideals of sizes 0, 1, 2, 2
    Verifier b(build("A2"), Pathway::BTensorB);
    const long expect[] = {1, 1, 2, 0};
    for (int d = 0; d <= 3; ++d) {
        auto c = b.cell_weight_zero(d, d);
        CHECK(c.dim_invariants == expect[d]);
        CHECK(c.quotient_invariants() <= c.dim_invariants);
    }
    CHECK(b.cell_weight_zero(2, 2).quotient_invariants() == 1);
}

TEST_CASE("ideal slices") {
    LieAlgebra a2 = build("A2");
    SubspaceBasis s = ideal_slice(a2, 1, 1, Pathway::Direct);
    CHECK(s.rank() == 8);
    CHECK(s.ambient_dim() == 64);
    CHECK(ideal_slice(a2, 0, 2, Pathway::BTensorB).rank() == 0);
    CHECK(s_power_status(a2, 2, Pathway::Direct));
    CHECK_FALSE(s_power_status(a2, 3, Pathway::BTensorB));
}

TEST_CASE("invariants_in") {
    LieAlgebra a1 = build("A1");
    MonomialBasis ones({{1, 0}, {2, 0}, {4, 0}});
    SubspaceBasis all(3, {{{0, 1}}, {{1, 1}}, {{2, 1}}});
    CHECK(invariants_in(a1, ones, all).rank() == 0);
    SubspaceBasis line(3, {{{a1.e_index(0) == 1 ? 1u : 0u, 1}}});
    CHECK_THROWS_AS(invariants_in(a1, ones, line), std::invalid_argument);
}

TEST_CASE("C_w") {
    for (const char* t : {"A2", "B2", "G2"}) {
        CAPTURE(t);
        LieAlgebra L = build(t);
        for (int d = 0; d <= 2; ++d) {
            OperatorSlice a = c_w_operator(L, d, CwForm::Bracket);
            OperatorSlice b = c_w_operator(L, d, CwForm::StructureConstants);
            CHECK(a.rows == b.rows);
            LemmaCheck l = lemma_check(L, d);
            CHECK(l.holds());
            CHECK(l.kernel_equals_b);
        }
        CHECK(c_w_operator(L, 0).is_zero());
        // C_w is not zero on all of wedge^2
        CHECK_FALSE(c_w_operator(L, 1).is_zero());
    }
}

TEST_CASE("hom diagnostic against a triple tensor product") {
    for (const char* t : {"A2", "B2", "G2"}) {
        CAPTURE(t);
        LieAlgebra L = build(t);
        const RootSystem& rs = L.root_system();
        for (const auto& a : enumerate_abelian_ideals(rs)) {
            ModuleDescriptor m = module_of_ideal(rs, a);
            Character v = freudenthal_multiplicities(rs, m.highest_weight);
            Character vd = freudenthal_multiplicities(rs, dual_weight(rs, m.highest_weight));
            const long oracle = invariant_dimension(rs, tensor_product(adjoint_character(L), v), vd);
            CHECK(hom_multiplicity_diagnostic(rs, a) == oracle);
        }
    }
}

TEST_CASE("report") {
    VerificationReport r = verify_conjecture(parse_cartan_type("A2"), Pathway::Direct);
    CHECK(r.all_pass());
    CHECK(r.dual_coxeter == 3);
    CHECK(r.b_dimensions == std::vector<long>{1, 8, 20});
    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["schema_version"] == 1);
    CHECK(j["type"] == "A2");
    CHECK(j["pathway"] == "direct");
    CHECK(j["tables"].size() == 16);
    CHECK(j["s_powers"].size() == 4);
    CHECK(j["verdicts"]["generation"] == true);
    CHECK_FALSE(j.contains("timings_seconds"));
    CHECK(nlohmann::json::parse(r.to_json(true)).contains("timings_seconds"));
    VerificationReport again = verify_conjecture(parse_cartan_type("A2"), Pathway::Direct);
    CHECK(again.to_json() == r.to_json());

    Options small;
    small.max_bidegree = 1;
    VerificationReport a1 = verify_conjecture(parse_cartan_type("A1"), Pathway::BTensorB, small);
    CHECK(a1.tables.size() == 4);
    CHECK(a1.all_pass());
}
