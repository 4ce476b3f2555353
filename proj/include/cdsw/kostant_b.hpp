#pragma once

#include "cdsw/exact_linalg.hpp"
#include "cdsw/grassmann.hpp"
#include "cdsw/rep_theory.hpp"

#include <map>
#include <vector>

namespace cdsw {

/// Abelian ideal of the Borel subalgebra: ascending indices into the
/// positive roots of the root system.
struct AbelianIdeal {
    std::vector<int> roots;

    int size() const { return static_cast<int>(roots.size()); }
    auto operator<=>(const AbelianIdeal&) const = default;
};

bool is_abelian_ideal(const RootSystem& rs, const std::vector<int>& roots);

/// All abelian ideals, ordered by size and then by root indices. Throws
/// std::logic_error if the count differs from 2^rank.
std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs);

struct ModuleDescriptor {
    AbelianIdeal ideal;
    Weight highest_weight;
    long dimension = 0;
    int degree = 0;
    Rational casimir_eigenvalue;
};

/// Throws std::logic_error if the Casimir value of the highest weight is not |a|.
ModuleDescriptor module_of_ideal(const RootSystem& rs, const AbelianIdeal& a);

/// v_a: the wedge of e_alpha over alpha in a, taken in the basis order.
Multivector ideal_vector(const LieAlgebra& L, const AbelianIdeal& a);

/// Normalized Casimir (identity on g) applied to a monomial, acting
/// diagonally on both copies.
Multivector casimir_image(const LieAlgebra& L, const MonomialKey& m);

/// All monomials of wedge^d g (first copy), ascending.
MonomialBasis exterior_basis(const ExteriorIndex& idx, int d);

/// The normalized Casimir on wedge^d g as a sparse matrix over exterior_basis(d).
OperatorSlice casimir_on_exterior(const LieAlgebra& L, int d);

/// y = p_1 ^ ... ^ p_{d+1}  ->  sum_{r<s} (-1)^{r+s} [p_s, p_r] (x) (y without p_r, p_s).
/// Target keys carry the g factor in `x` (one bit) and the rest in `y`.
OperatorSlice kernel_map(const LieAlgebra& L, int d);

/// B[d] realized inside wedge^d g as the Casimir eigenspace of eigenvalue d,
/// split into weight blocks. Also carries the projection of wedge^d g onto
/// B[d] along the other eigenspaces.
class BComponent {
public:
    struct Block {
        WeightKey weight;
        MonomialBasis monomials;  // first-copy monomials of this weight
        SubspaceBasis basis;      // B[d] in this weight, RREF over `monomials`
        RationalMatrix casimir;   // normalized Casimir on the block
    };

    BComponent(const LieAlgebra& L, const ExteriorIndex& idx, int d);

    int degree() const { return d_; }
    std::size_t dimension() const { return dim_; }
    /// Distinct Casimir eigenvalues on wedge^d g, ascending.
    const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }
    const std::map<WeightKey, Block>& blocks() const { return blocks_; }
    /// Nullptr when B[d] has no vector of that weight.
    const Block* block(const WeightKey& w) const;

    /// Coordinates, in the basis of block(weight of mask), of the projection
    /// of the monomial to B[d]. Computed lazily and cached.
    const RatVector& project(std::uint64_t mask) const;
    /// Coordinates of an element of B[d] given in block monomial coordinates.
    static RatVector coordinates(const Block& b, const RatVector& v);
    /// The element of wedge^d g with the given block coordinates.
    static Multivector element(const Block& b, const RatVector& coords);

    /// The whole B[d] over exterior_basis(d).
    SubspaceBasis subspace(const ExteriorIndex& idx) const;

private:
    const LieAlgebra* L_;
    int d_;
    std::size_t dim_ = 0;
    std::vector<Rational> eigenvalues_;
    std::map<WeightKey, Block> blocks_;
    std::map<WeightKey, std::size_t> mono_block_sizes_;
    mutable std::map<std::uint64_t, RatVector> projection_cache_;
    mutable std::map<WeightKey, RationalMatrix> projector_rows_;
};

/// B[d] over exterior_basis(d). Throws std::logic_error when its dimension
/// disagrees with the modules of the abelian ideals of size d.
SubspaceBasis b_component(const LieAlgebra& L, int d);

}  // namespace cdsw
