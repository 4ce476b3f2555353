#pragma once

#include "cdsw/lie_algebra.hpp"
#include "cdsw/root_system.hpp"

#include <compare>
#include <map>
#include <vector>

namespace cdsw {

/// Integral weight in fundamental-weight coordinates.
struct Weight {
    std::vector<int> coords;

    auto operator<=>(const Weight&) const = default;

    bool is_dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    std::string to_string() const;
};

Weight weight_of_root(const RootSystem& rs, const RootCoords& r);
Weight fundamental_weight(const RootSystem& rs, int i);

/// Formal character: weight -> multiplicity, zero multiplicities not stored.
struct Character {
    std::map<Weight, long> mults;

    long dimension() const;
    void add(const Weight& w, long m);
    Character& operator+=(const Character& o);
    Character scaled(long m) const;
    friend bool operator==(const Character&, const Character&) = default;
};

Character trivial_character(int rank);
Character tensor_product(const Character& a, const Character& b);

std::vector<Rational> simple_root_coordinates(const RootSystem& rs, const Weight& w);
/// Sum of the simple-root coordinates.
Rational weight_height(const RootSystem& rs, const Weight& w);
Rational weight_inner(const RootSystem& rs, const Weight& a, const Weight& b);
Weight simple_reflection(const RootSystem& rs, const Weight& w, int i);
Weight dominant_representative(const RootSystem& rs, const Weight& w);
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);
/// Normalized Casimir value (lambda, lambda + 2 rho) / (theta, theta + 2 rho).
Rational casimir_eigenvalue(const RootSystem& rs, const Weight& lambda);

/// Weyl dimension formula. Throws std::invalid_argument for non-dominant input.
long weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Full weight diagram of V(lambda) by Freudenthal's recursion on dominant
/// weights, expanded over Weyl orbits.
Character freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda);

/// Character of the d-th exterior power of the adjoint representation.
Character character_of_exterior_power(const LieAlgebra& L, int d);
Character adjoint_character(const LieAlgebra& L);

struct Isotypic {
    Weight highest_weight;
    long multiplicity;
    friend bool operator==(const Isotypic&, const Isotypic&) = default;
};

/// Highest-weight stripping. Throws std::invalid_argument if the input is not
/// Weyl-symmetric or is not a nonnegative combination of irreducibles.
std::vector<Isotypic> decompose(const RootSystem& rs, const Character& ch);

/// dim (V tensor W)^g from the two decompositions.
long invariant_dimension(const RootSystem& rs, const Character& v, const Character& w);

/// -w0(lambda).
Weight dual_weight(const RootSystem& rs, const Weight& lambda);

}  // namespace cdsw
