#pragma once

#include "cdsw/cartan_type.hpp"
#include "cdsw/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cdsw {

/// Integer coordinates of a root (or of any element of the root lattice) in
/// the basis of simple roots.
using RootCoords = std::vector<int>;

/// Root system of a simple Lie algebra with the invariant form normalized by
/// (theta, theta) = 2.
///
/// Positive roots are ordered by height, then lexicographically descending in
/// simple-root coordinates, so the simple roots come first as alpha_1..alpha_r.
class RootSystem {
public:
    explicit RootSystem(CartanType type);

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }

    const std::vector<RootCoords>& positive_roots() const { return positive_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    /// Index into positive_roots(), or nullopt when `r` is not a positive root.
    std::optional<int> positive_index(const RootCoords& r) const;
    bool is_root(const RootCoords& r) const;

    /// cartan(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

    const Rational& simple_inner(int i, int j) const { return gram_[i][j]; }
    Rational inner(const RootCoords& a, const RootCoords& b) const;
    /// <beta, alpha_i^vee> for beta in simple-root coordinates.
    int pairing_with_coroot(const RootCoords& beta, int i) const;

    const RootCoords& highest_root() const { return positive_[highest_]; }
    int highest_root_index() const { return highest_; }
    static int height(const RootCoords& r);

    /// Coordinates of beta^vee = 2 beta / (beta, beta) in the simple coroot basis.
    RootCoords coroot_coordinates(const RootCoords& beta) const;

    /// Simple-root coordinates (rational) of the fundamental weights omega_i.
    const std::vector<std::vector<Rational>>& fundamental_weights() const { return fundamental_; }
    /// Simple-root coordinates of rho = sum of fundamental weights.
    const std::vector<Rational>& weyl_vector() const { return rho_; }

    /// Fundamental-weight coordinates of a root-lattice element.
    std::vector<int> to_weight_coords(const RootCoords& r) const;
    /// Simple-root coordinates (rational) of a weight given in omega coordinates.
    std::vector<Rational> to_root_coords(const std::vector<int>& weight) const;
    /// Gram matrix of the form in the fundamental-weight basis.
    const std::vector<std::vector<Rational>>& weight_gram() const { return weight_gram_; }

private:
    CartanType type_;
    std::vector<std::vector<Rational>> gram_;
    std::vector<std::vector<int>> cartan_;
    std::vector<RootCoords> positive_;
    std::map<RootCoords, int> index_;
    int highest_ = 0;
    std::vector<std::vector<Rational>> fundamental_;
    std::vector<Rational> rho_;
    std::vector<std::vector<Rational>> weight_gram_;
};

RootSystem build_root_system(CartanType type);

/// 1 + sum of the coefficients of theta^vee in the simple coroots.
int dual_coxeter_number(const RootSystem& rs);

}  // namespace cdsw
