// Command-line front end: verify, abelian-ideals, hilbert, selftest.
#include "cdsw/cdsw_verify.hpp"
#include "cdsw/selftest.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cdsw;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitGuard = 3;

std::string roots_of(const RootSystem& rs, const AbelianIdeal& a) {
    std::ostringstream s;
    s << "{";
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        const auto& r = rs.positive_roots()[a.roots[i]];
        s << (i ? ", " : "") << "(";
        for (std::size_t j = 0; j < r.size(); ++j) s << (j ? "," : "") << r[j];
        s << ")";
    }
    return s.str() + "}";
}

// G2 defaults to the B (x) B reduction; everything else to the direct quotient.
Pathway choose_pathway(const CartanType& t, const std::string& flag) {
    if (!flag.empty()) return parse_pathway(flag);
    return t.series == Series::G ? Pathway::BTensorB : Pathway::Direct;
}

int run_verify(const std::string& type, const std::string& pathway, int max_bidegree, const std::string& out, bool force, bool timings,
               bool verbose) {
    Options opt;
    opt.max_bidegree = max_bidegree;
    opt.force = force;
    if (verbose) opt.log = &std::cerr;
    VerificationReport r = verify_conjecture(parse_cartan_type(type), choose_pathway(parse_cartan_type(type), pathway), opt);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << r.to_json(timings);
    }
    r.print(std::cout);
    return r.all_pass() ? 0 : kExitFail;
}

int run_ideals(const std::string& type) {
    const RootSystem rs = build_root_system(parse_cartan_type(type));
    const auto ideals = enumerate_abelian_ideals(rs);
    std::cout << ideals.size() << " abelian ideals of the Borel subalgebra of " << rs.type().name()
              << " (roots in simple-root coordinates)\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        ModuleDescriptor m = module_of_ideal(rs, ideals[i]);
        std::cout << "  a" << i << "  dim " << m.degree << "  " << roots_of(rs, ideals[i]) << "  highest weight "
                  << m.highest_weight.to_string() << "  dim V_a " << m.dimension << "\n";
    }
    return 0;
}

int run_hilbert(const std::string& type, const std::string& pq, const std::string& pathway, bool force) {
    int p = 0, q = 0;
    char comma = 0;
    std::istringstream in(pq);
    if (!(in >> p >> comma >> q) || comma != ',' || p < 0 || q < 0) throw CLI::ValidationError("--pq", "expected P,Q");
    Options opt;
    opt.force = force;
    Verifier v(load_or_build_algebra(parse_cartan_type(type)), choose_pathway(parse_cartan_type(type), pathway), opt);
    Verifier::Cell c = v.cell(p, q);
    std::cout << "bidegree (" << p << "," << q << ") of " << type << ", pathway " << to_string(v.pathway()) << "\n"
              << "  ambient              " << c.dim_ambient.get_str() << "\n"
              << "  ideal                " << c.dim_ideal.get_str() << "\n"
              << "  quotient             " << Integer(c.dim_ambient - c.dim_ideal).get_str() << "\n"
              << "  invariants           " << c.dim_invariants << "\n"
              << "  invariants in ideal  " << c.dim_invariants_in_ideal << "\n"
              << "  quotient invariants  " << c.quotient_invariants() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the CDSW conjecture for small simple Lie algebras"};
    app.require_subcommand(1);

    std::string type, pathway, out, pq;
    int max_bidegree = -1;
    bool force = false, timings = false, verbose = false, full = false;

    auto* verify = app.add_subcommand("verify", "run the full verification and print the report");
    verify->add_option("--type", type, "Cartan type, e.g. A2, B2, G2")->required();
    verify->add_option("--pathway", pathway, "direct or b-tensor-b (default: b-tensor-b for G2, direct otherwise)")->check(CLI::IsMember({"direct", "b-tensor-b", "b_tensor_b"}));
    verify->add_option("--max-bidegree", max_bidegree, "largest p and q in the table (default: dual Coxeter number)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--out", out, "write the JSON report here");
    verify->add_flag("--force", force, "ignore the slice size guard");
    verify->add_flag("--timings", timings, "include timings in the JSON report");
    verify->add_flag("-v,--verbose", verbose, "progress on stderr");

    auto* ideals = app.add_subcommand("abelian-ideals", "list the abelian ideals of the Borel subalgebra");
    ideals->add_option("--type", type, "Cartan type")->required();

    auto* hilbert = app.add_subcommand("hilbert", "dimensions of a single bidegree slice");
    hilbert->add_option("--type", type, "Cartan type")->required();
    hilbert->add_option("--pq", pq, "bidegree as P,Q")->required();
    hilbert->add_option("--pathway", pathway, "direct or b-tensor-b (default: b-tensor-b for G2, direct otherwise)")->check(CLI::IsMember({"direct", "b-tensor-b", "b_tensor_b"}));
    hilbert->add_flag("--force", force, "ignore the slice size guard");

    auto* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_flag("--full", full, "also sweep the rank 3 and 4 types more heavily");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*verify) return run_verify(type, pathway, max_bidegree, out, force, timings, verbose);
        if (*ideals) return run_ideals(type);
        if (*hilbert) return run_hilbert(type, pq, pathway, force);
        if (*selftest) {
            SelftestOptions so;
            so.full = full;
            bool ok = true;
            for (const auto& r : run_selftest(so, &std::cout)) ok = ok && r.pass;
            return ok ? 0 : kExitFail;
        }
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
