#pragma once

#include "cdsw/lie_algebra.hpp"
#include "cdsw/rational.hpp"

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

namespace cdsw {

/// Monomial x_P y_Q of R = wedge(g + g): bit i of `x` (resp. `y`) selects the
/// basis vector b_i in the first (resp. second) copy. Factors are ordered by
/// basis index inside each copy and every X factor precedes every Y factor.
struct MonomialKey {
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    auto operator<=>(const MonomialKey&) const = default;
    int degree_x() const { return std::popcount(x); }
    int degree_y() const { return std::popcount(y); }
    int degree() const { return degree_x() + degree_y(); }
};

struct MonomialKeyHash {
    std::size_t operator()(const MonomialKey& k) const noexcept {
        return std::hash<std::uint64_t>()(k.x * 0x9E3779B97F4A7C15ULL ^ (k.y + 0x632BE59BD9B4E019ULL));
    }
};

/// Sign of x_a y_a' wedge x_b y_b' relative to the canonical monomial of the
/// union; 0 when the factors overlap.
int wedge_sign(const MonomialKey& a, const MonomialKey& b);

enum class Copy { X, Y };
enum class Action { X, Y, Diagonal };

/// Sparse element of R with exact rational coefficients.
class Multivector {
public:
    using Terms = std::map<MonomialKey, Rational>;

    Multivector() = default;
    static Multivector one();
    static Multivector monomial(MonomialKey key, Rational c = 1);
    /// The vector v of g placed in the given copy (degree 1).
    static Multivector vector(Copy copy, const AlgebraElement& v);
    static Multivector generator(Copy copy, int i);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const MonomialKey& k) const;

    void add_term(const MonomialKey& k, const Rational& c);
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const Rational& s);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
    friend bool operator==(const Multivector&, const Multivector&) = default;

    /// True when every term has bidegree (p, q).
    bool is_homogeneous(int p, int q) const;
    /// Total degree if all terms share it, otherwise -1.
    int total_degree() const;

private:
    Terms terms_;
};

Multivector wedge(const Multivector& u, const Multivector& v);
Multivector power(const Multivector& u, int k);
/// Exact bidegree-(p, q) part.
Multivector component(const Multivector& u, int p, int q);

/// Odd derivation of degree -1 in the chosen copy for the covector with
/// coordinates `xi` in the dual basis: I(b_j) = xi[j].
Multivector contraction(const std::vector<Rational>& xi, Copy copy, const Multivector& u);
/// Contraction by v through the invariant form: xi = (v, .).
Multivector contraction_by_form(const LieAlgebra& L, const AlgebraElement& v, Copy copy, const Multivector& u);
/// Even derivation extending ad(a) on the selected copies.
Multivector lie_derivative(const LieAlgebra& L, const AlgebraElement& a, Action action, const Multivector& u);

/// Integer-coefficient action of ad(b_i) on one monomial; emits (key, coeff).
template <class Emit>
void lie_derivative_terms(const LieAlgebra& L, int i, Action action, const MonomialKey& key, Emit&& emit);

/// Generators of the ideal I: the images of z -> sum_i b^i (.) [z, b_i] for
/// z = b_k in bidegrees (2,0), (1,1) and (0,2).
struct IdealGenerators {
    std::vector<Multivector> mu20, mu11, mu02;
};
IdealGenerators ideal_generators(const LieAlgebra& L);

/// S = sum_{ij} gram^{-1}_{ij} x_i y_j.
Multivector s_element(const LieAlgebra& L);

// ---------------------------------------------------------------------------
// Weight-graded monomial bases.

/// Weight in simple-root coordinates, packed for hashing.
struct WeightKey {
    std::array<std::int16_t, 4> c{};
    auto operator<=>(const WeightKey&) const = default;
    WeightKey operator+(const WeightKey& o) const {
        WeightKey r;
        for (int i = 0; i < 4; ++i) r.c[i] = static_cast<std::int16_t>(c[i] + o.c[i]);
        return r;
    }
    WeightKey operator-(const WeightKey& o) const {
        WeightKey r;
        for (int i = 0; i < 4; ++i) r.c[i] = static_cast<std::int16_t>(c[i] - o.c[i]);
        return r;
    }
    bool is_zero() const { return c == std::array<std::int16_t, 4>{}; }
};
WeightKey weight_key(const RootCoords& r);
RootCoords root_coords(const WeightKey& w, int rank);

/// Subsets of the basis of g, grouped by size and by total weight.
class ExteriorIndex {
public:
    explicit ExteriorIndex(const LieAlgebra& L);

    int dim() const { return n_; }
    WeightKey weight_of_mask(std::uint64_t mask) const;
    WeightKey basis_weight(int i) const { return basis_weights_[i]; }
    /// All size-d subsets of the given weight, ascending.
    const std::vector<std::uint64_t>& subsets(int d, const WeightKey& w) const;
    /// Weights occurring among size-d subsets, ascending.
    std::vector<WeightKey> weights(int d) const;
    /// Monomials of bidegree (p, q) and total weight w, ascending.
    std::vector<MonomialKey> monomials(int p, int q, const WeightKey& w) const;
    /// Weights occurring in bidegree (p, q).
    std::vector<WeightKey> bidegree_weights(int p, int q) const;

private:
    const std::map<WeightKey, std::vector<std::uint64_t>>& by_size(int d) const;

    int n_;
    std::vector<WeightKey> basis_weights_;
    mutable std::map<int, std::map<WeightKey, std::vector<std::uint64_t>>> cache_;
};

/// Ordered list of monomials spanning one (weight-)component.
class MonomialBasis {
public:
    MonomialBasis() = default;
    explicit MonomialBasis(std::vector<MonomialKey> keys);

    std::size_t size() const { return keys_.size(); }
    const MonomialKey& key(std::size_t i) const { return keys_[i]; }
    const std::vector<MonomialKey>& keys() const { return keys_; }
    /// Index of `k`, or -1 if absent.
    long index(const MonomialKey& k) const;

private:
    std::vector<MonomialKey> keys_;
    std::unordered_map<MonomialKey, std::size_t, MonomialKeyHash> index_;
};

/// Sparse exact matrix between two monomial bases; rows index the target.
struct OperatorSlice {
    MonomialBasis source;
    MonomialBasis target;
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;

    bool is_zero() const;
    /// Image of a source-coordinate vector, as target coordinates.
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
};

/// Assembles an OperatorSlice from a per-monomial linear map.
OperatorSlice make_operator_slice(MonomialBasis source, MonomialBasis target,
                                  const std::function<Multivector(const MonomialKey&)>& op);

// ---------------------------------------------------------------------------

namespace detail {
inline int bits_below(std::uint64_t mask, int i) { return std::popcount(mask & ((std::uint64_t{1} << i) - 1)); }
}  // namespace detail

template <class Emit>
void lie_derivative_terms(const LieAlgebra& L, int i, Action action, const MonomialKey& key, Emit&& emit) {
    auto act = [&](std::uint64_t mask, bool is_x) {
        for (std::uint64_t rest = mask; rest;) {
            const int j = std::countr_zero(rest);
            rest &= rest - 1;
            // Move b_j to the front, replace by [b_i, b_j], move back into place.
            const std::uint64_t without = mask & ~(std::uint64_t{1} << j);
            const int s1 = detail::bits_below(mask, j);
            for (const auto& t : L.bracket(i, j)) {
                const std::uint64_t bit = std::uint64_t{1} << t.index;
                if (without & bit) continue;
                const int s2 = detail::bits_below(without, t.index);
                const long sign = ((s1 + s2) & 1) ? -1 : 1;
                MonomialKey out = key;
                (is_x ? out.x : out.y) = without | bit;
                emit(out, sign * t.coeff);
            }
        }
    };
    if (action != Action::Y) act(key.x, true);
    if (action != Action::X) act(key.y, false);
}

}  // namespace cdsw
