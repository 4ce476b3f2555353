#pragma once

#include "cdsw/kostant_b.hpp"

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdsw {

enum class Pathway { Direct, BTensorB };

std::string to_string(Pathway p);
/// Accepts "direct", "b-tensor-b" and "b_tensor_b".
Pathway parse_pathway(const std::string& s);

constexpr long kDefaultSizeGuard = 2'000'000;

struct SizeGuardError : std::runtime_error {
    SizeGuardError(Pathway pathway, int p, int q, Integer estimate, Integer limit);
    int p, q;
    Integer estimate, limit;
};

/// Direct-pathway size of bidegree (p, q): monomials of the slice plus the
/// spanning vectors of the ideal slice.
Integer direct_slice_size(const LieAlgebra& L, int p, int q);
/// Same for the B (x) B pathway.
Integer btb_slice_size(const LieAlgebra& L, const std::vector<long>& b_dims, int p, int q);

// ---------------------------------------------------------------------------
// Generic subspace operations.

/// Joint kernel of the diagonal action of e_i, f_i on a subspace spanned by
/// the rows of `space` over the monomials `ambient`. Throws
/// std::invalid_argument naming the generator when the space is not stable.
SubspaceBasis invariants_in(const LieAlgebra& L, const MonomialBasis& ambient, const SubspaceBasis& space);

/// C_w for w the action map, as an endomorphism of wedge^{d+1} g.
enum class CwForm { Bracket, StructureConstants };
OperatorSlice c_w_operator(const LieAlgebra& L, int d, CwForm form = CwForm::Bracket);

/// Multiplicity of g in V_a (x) V_a^*, from characters.
long hom_multiplicity_diagnostic(const RootSystem& rs, const AbelianIdeal& a);

// ---------------------------------------------------------------------------

struct Options {
    int max_bidegree = -1;  // -1: the dual Coxeter number
    bool force = false;
    long size_guard = kDefaultSizeGuard;
    std::ostream* log = nullptr;
};

/// Shared state for one algebra: weight index, integer ideal generators,
/// B components and per-cell elimination results.
class Verifier {
public:
    Verifier(LieAlgebra L, Pathway pathway, Options opt = {});
    ~Verifier();

    const LieAlgebra& algebra() const;
    const ExteriorIndex& index() const;
    Pathway pathway() const;

    struct Cell {
        int p = 0, q = 0;
        Integer dim_ambient, dim_ideal;
        long dim_invariants = 0;
        long dim_invariants_in_ideal = 0;
        long quotient_invariants() const { return dim_invariants - dim_invariants_in_ideal; }
    };
    /// Full dimensions of bidegree (p, q). Throws SizeGuardError.
    Cell cell(int p, int q);
    /// Weight-zero dimensions only (dim_ambient / dim_ideal left 0).
    Cell cell_weight_zero(int p, int q);

    /// S^k is nonzero in A.
    bool s_power_nonzero(int k);
    /// B (x) B pathway: the projection of S^k to B (x) B is nonzero.
    bool s_projection_nonzero(int k);

    /// The ideal slice as a subspace: over all monomials of R_{p,q} (direct)
    /// or over B[p] (x) B[q] in its block coordinates (b_tensor_b).
    SubspaceBasis ideal_slice(int p, int q);

    const BComponent& b(int d);
    std::vector<long> b_dimensions();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

SubspaceBasis ideal_slice(const LieAlgebra& L, int p, int q, Pathway pathway, const Options& opt = {});
bool s_power_status(const LieAlgebra& L, int k, Pathway pathway, const Options& opt = {});

struct LemmaCheck {
    int d = 0;
    long b_dimension = 0;
    bool c_w_vanishes = false;
    bool kernel_contains_b = false;
    bool kernel_equals_b = false;  // reported, not required
    bool holds() const { return c_w_vanishes && kernel_contains_b; }
};
LemmaCheck lemma_check(const LieAlgebra& L, int d);

struct VerificationReport {
    CartanType type;
    Pathway pathway = Pathway::Direct;
    int dual_coxeter = 0;
    int max_bidegree = 0;
    std::vector<ModuleDescriptor> modules;
    std::vector<long> b_dimensions;
    std::vector<Verifier::Cell> tables;
    struct SPower {
        int k;
        bool nonzero;
        std::optional<bool> projection_nonzero;
    };
    std::vector<SPower> s_powers;
    std::vector<LemmaCheck> lemma;
    struct HomDiagnostic {
        int ideal;
        int degree;
        long multiplicity;
    };
    std::vector<HomDiagnostic> hom_diagnostics;
    struct Verdicts {
        bool generation = false;
        bool s_power_vanishing = false;
        bool s_power_nonvanishing = false;
        bool diagonal_concentration = false;
        bool lemma = false;
    } verdicts;
    std::vector<std::pair<std::string, double>> timings;

    bool all_pass() const;
    /// Deterministic JSON; timings only when asked.
    std::string to_json(bool include_timings = false) const;
    void print(std::ostream& out) const;
};

VerificationReport verify_conjecture(CartanType type, Pathway pathway, const Options& opt = {});

}  // namespace cdsw
