// Acceptance checks, one line per criterion.
//   acceptance          run all
//   acceptance N [M..]  run the listed criteria
// Exit status is nonzero when any selected criterion fails.

#include "cdsw/cdsw_verify.hpp"
#include "cdsw/selftest.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cdsw;

namespace {

// Pinned limits (seconds).
constexpr double kCensusLimit = 1.0;
constexpr double kSl2Limit = 1.0;
constexpr double kA2Limit = 300.0;
constexpr double kG2Limit = 1800.0;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[fail: " << what << "] ";
        }
    }
};

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LieAlgebra algebra(const std::string& t) { return load_or_build_algebra(parse_cartan_type(t)); }

Weight w(std::vector<int> c) { return Weight{std::move(c)}; }

void census(Outcome& o) {
    for (const std::string t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
        auto t0 = std::chrono::steady_clock::now();
        RootSystem rs = build_root_system(parse_cartan_type(t));
        auto ideals = enumerate_abelian_ideals(rs);
        const double s = since(t0);
        o.check(ideals.size() == (std::size_t{1} << rs.rank()), t + " count");
        o.check(s < kCensusLimit, t + " took " + std::to_string(s) + " s");
        o.detail << t << ":" << ideals.size() << " ";
    }
    // G2: {}, {theta}, {3a1+a2, theta}, {2a1+a2, 3a1+a2, theta}
    RootSystem g2 = build_root_system(parse_cartan_type("G2"));
    const std::vector<std::vector<RootCoords>> expected = {
        {}, {{3, 2}}, {{3, 1}, {3, 2}}, {{2, 1}, {3, 1}, {3, 2}}};
    auto ideals = enumerate_abelian_ideals(g2);
    bool same = ideals.size() == expected.size();
    for (std::size_t i = 0; same && i < ideals.size(); ++i) {
        std::vector<RootCoords> roots;
        for (int r : ideals[i].roots) roots.push_back(g2.positive_roots()[r]);
        std::sort(roots.begin(), roots.end());
        auto e = expected[i];
        std::sort(e.begin(), e.end());
        same = roots == e;
    }
    o.check(same, "G2 ideal list");
}

void kostant_modules(Outcome& o) {
    long checked = 0;
    for (const std::string t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
        LieAlgebra L = algebra(t);
        for (const auto& a : enumerate_abelian_ideals(L.root_system())) {
            Multivector va = ideal_vector(L, a);
            Multivector cv;
            for (const auto& [k, c] : va.terms()) cv += casimir_image(L, k) * c;
            o.check(cv == va * Rational(a.size()), t + " Casimir on v_a");
            ++checked;
        }
    }
    o.detail << checked << " ideals with C v_a = |a| v_a; ";
    RootSystem g2 = build_root_system(parse_cartan_type("G2"));
    const std::vector<Weight> expected = {w({0, 0}), w({0, 1}), w({3, 0}), w({1, 2})};
    auto ideals = enumerate_abelian_ideals(g2);
    o.detail << "G2 highest weights:";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ModuleDescriptor m = module_of_ideal(g2, ideals[i]);
        o.detail << " " << m.highest_weight.to_string();
        o.check(m.highest_weight == expected[i], "G2 degree " + std::to_string(i) + " is " + m.highest_weight.to_string() +
                                                     ", expected " + expected[i].to_string());
    }
    o.detail << " ";
}

void sl2_brute_force(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    Verifier v(algebra("A1"), Pathway::Direct);
    Integer total = 0;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            auto c = v.cell(p, q);
            total += c.dim_ambient;
            if (p <= 2 && q <= 2) {
                const long expect = (p == q && p <= 1) ? 1 : 0;
                o.check(c.quotient_invariants() == expect, "A^g at (" + std::to_string(p) + "," + std::to_string(q) + ")");
            }
        }
    o.check(total == 64, "ambient total " + to_string(total));
    o.check(v.s_power_nonzero(1) && !v.s_power_nonzero(2), "S, S^2");
    const double s = since(t0);
    o.check(s < kSl2Limit, "runtime " + std::to_string(s) + " s");
    o.detail << "64 monomials, S != 0, S^2 = 0, " << s << " s ";
}

void a2_direct(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    Verifier v(algebra("A2"), Pathway::Direct);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            auto c = v.cell_weight_zero(p, q);
            const long expect = (p == q && p <= 2) ? 1 : 0;
            o.check(c.quotient_invariants() == expect, "A^g at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    o.check(v.s_power_nonzero(2) && !v.s_power_nonzero(3), "S^2 != 0, S^3 = 0");
    const double s = since(t0);
    o.check(s < kA2Limit, "runtime " + std::to_string(s) + " s");
    o.detail << "diagonal 1,1,1,0, off-diagonal 0, S^3 = 0, " << s << " s ";
}

void b2_agreement(Outcome& o) {
    Verifier d(algebra("B2"), Pathway::Direct);
    Verifier b(algebra("B2"), Pathway::BTensorB);
    int cells = 0;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            auto cd = d.cell(p, q), cb = b.cell(p, q);
            const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            o.check(cd.dim_ambient - cd.dim_ideal == cb.dim_ambient - cb.dim_ideal, "quotient dim at " + at);
            o.check(cd.quotient_invariants() == cb.quotient_invariants(), "A^g at " + at);
            ++cells;
        }
    for (int k = 0; k <= 3; ++k) o.check(d.s_power_nonzero(k) == b.s_power_nonzero(k), "S^" + std::to_string(k) + " status");
    o.check(!d.s_power_nonzero(3), "S^3 = 0");
    auto c33 = b.cell_weight_zero(3, 3);
    o.check(c33.dim_invariants_in_ideal >= 1, "(3,3) invariant in L");
    o.detail << cells << " cells agree, S^3 = 0, (3,3): " << c33.dim_invariants << " invariant(s), " << c33.dim_invariants_in_ideal
             << " in L ";
}

void g2_btb(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    LieAlgebra L = algebra("G2");
    for (int d = 1; d <= 2; ++d) {
        LemmaCheck l = lemma_check(L, d);
        o.check(l.holds(), "lemma d=" + std::to_string(d));
    }
    Verifier v(L, Pathway::BTensorB);
    for (int d : {2, 3}) {
        auto c = v.cell_weight_zero(d, d);
        o.check(c.dim_invariants == 1 && c.dim_invariants_in_ideal == 0, "invariants in L at (" + std::to_string(d) + "," + std::to_string(d) + ")");
    }
    o.check(v.s_power_nonzero(3), "S^3 != 0");
    o.check(!v.s_power_nonzero(4), "S^4 = 0");
    for (int k = 0; k <= 3; ++k) o.check(v.s_projection_nonzero(k), "projection of S^" + std::to_string(k));
    const double s = since(t0);
    o.check(s < kG2Limit, "runtime " + std::to_string(s) + " s");
    o.detail << "lemma d=1,2, no invariants in L at (2,2),(3,3), S^3 != 0, S^4 = 0, projections nonzero, " << s << " s ";
}

void oracle_equivalence(Outcome& o) {
    int cases = 0;
    for (const std::string t : {"A1", "A2", "B2"}) {
        LieAlgebra L = algebra(t);
        Verifier v(L, Pathway::Direct);
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) {
                const long ch = invariant_dimension(L.root_system(), character_of_exterior_power(L, p), character_of_exterior_power(L, q));
                const long ns = v.cell_weight_zero(p, q).dim_invariants;
                o.check(ch == ns, t + " (" + std::to_string(p) + "," + std::to_string(q) + "): " + std::to_string(ch) + " vs " + std::to_string(ns));
                ++cases;
            }
    }
    o.detail << cases << " cases equal ";
}

void property_suites(Outcome& o) {
    for (const auto& r : run_selftest(SelftestOptions{})) {
        o.check(r.pass, r.name + ": " + r.detail);
        o.detail << r.name << " ";
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"abelian ideal census", census},
        {"Kostant module identification", kostant_modules},
        {"sl2 brute force", sl2_brute_force},
        {"A2 direct pathway", a2_direct},
        {"B2 pathway agreement", b2_agreement},
        {"G2 via B (x) B", g2_btb},
        {"oracle equivalence", oracle_equivalence},
        {"property suites", property_suites},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    if (selected.empty())
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

    bool all = true;
    for (int n : selected) {
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::cerr << "no criterion " << n << "\n";
            return 2;
        }
        Outcome o;
        try {
            criteria[n - 1].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "[exception: " << e.what() << "]";
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << n << "  " << criteria[n - 1].first << "  " << o.detail.str()
                  << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
