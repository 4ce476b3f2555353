#pragma once

#include "cdsw/dense_matrix.hpp"
#include "cdsw/rational.hpp"
#include "cdsw/root_system.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cdsw {

/// One term c * b_index of an integer combination of basis vectors.
struct BasisTerm {
    int index;
    long coeff;
    friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// Rational combination of basis vectors, dense of length dim().
using AlgebraElement = std::vector<Rational>;

/// Simple Lie algebra in a Chevalley basis.
///
/// Basis order: h_1..h_r, then e_alpha in the root order of RootSystem, then
/// f_alpha in the same order. Brackets are stored as sparse integer
/// combinations; the invariant form is the one with (theta, theta) = 2.
class LieAlgebra {
public:
    using BracketTable = std::vector<std::vector<std::vector<BasisTerm>>>;

    LieAlgebra(RootSystem rs, BracketTable brackets);

    const RootSystem& root_system() const { return rs_; }
    int dim() const { return dim_; }
    int rank() const { return rs_.rank(); }
    int num_positive() const { return rs_.num_positive(); }

    int h_index(int i) const { return i; }
    int e_index(int a) const { return rank() + a; }
    int f_index(int a) const { return rank() + num_positive() + a; }

    const std::string& label(int i) const { return labels_[i]; }
    /// Weight of the basis vector (root or zero) in simple-root coordinates.
    const RootCoords& weight(int i) const { return weights_[i]; }

    const std::vector<BasisTerm>& bracket(int i, int j) const { return brackets_[i][j]; }
    long structure_constant(int i, int j, int k) const;
    AlgebraElement bracket(const AlgebraElement& u, const AlgebraElement& v) const;
    AlgebraElement basis_vector(int i) const;

    const Rational& gram(int i, int j) const { return gram_(i, j); }
    const Rational& gram_inverse(int i, int j) const { return gram_inv_(i, j); }
    const RationalMatrix& gram_matrix() const { return gram_; }
    const RationalMatrix& gram_inverse_matrix() const { return gram_inv_; }
    /// Nonzero entries (j, gram_inverse(i, j)) of row i: b^i = sum_j gram_inverse(i, j) b_j.
    const std::vector<std::pair<int, Rational>>& dual_basis(int i) const { return dual_[i]; }
    Rational form(const AlgebraElement& u, const AlgebraElement& v) const;
    /// Form-contracted structure constants ([b_i, b_j], b_k).
    Rational contracted_structure_constant(int i, int j, int k) const;

    /// Matrix of ad(b_i) on the basis (column j = [b_i, b_j]).
    RationalMatrix adjoint_matrix(int i) const;
    /// Indices of the Chevalley generators e_1..e_r followed by f_1..f_r.
    std::vector<int> chevalley_generators() const;

private:
    RootSystem rs_;
    int dim_;
    BracketTable brackets_;
    std::vector<std::string> labels_;
    std::vector<RootCoords> weights_;
    RationalMatrix gram_;
    RationalMatrix gram_inv_;
    std::vector<std::vector<std::pair<int, Rational>>> dual_;
};

/// Builds the Chevalley basis. Extraspecial pairs get positive structure
/// constants N = p + 1; all other constants follow from the Chevalley relations.
LieAlgebra chevalley_basis(const RootSystem& rs);

/// Returns the algebra from the structure-constant cache when the
/// CDSW_CACHE_DIR environment variable names a directory, building and
/// storing it on a miss; otherwise builds it directly.
LieAlgebra load_or_build_algebra(CartanType type);

/// Versioned text format: one line "i j k c" per nonzero c^k_{ij}.
void write_structure_constants(std::ostream& out, const LieAlgebra& L);
LieAlgebra read_structure_constants(std::istream& in);

/// Sum over cyclic permutations of [[b_i, b_j], b_k]; zero for a Lie algebra.
AlgebraElement jacobi_sum(const LieAlgebra& L, int i, int j, int k);
/// ([b_i, b_j], b_k) + (b_j, [b_i, b_k]); zero for an invariant form.
Rational form_invariance_defect(const LieAlgebra& L, int i, int j, int k);

/// Quadratic Casimir of a representation given by one matrix per basis
/// vector, normalized to act as the identity on the adjoint representation.
/// Throws std::invalid_argument when `action` fails the homomorphism check
/// on the Chevalley generators.
RationalMatrix casimir_operator(const LieAlgebra& L, const std::vector<RationalMatrix>& action);

/// Scalar by which sum_{ij} gram^{-1}_{ij} ad(b_i) ad(b_j) acts on g.
Rational adjoint_casimir_scalar(const LieAlgebra& L);

}  // namespace cdsw
