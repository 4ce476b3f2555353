#pragma once

#include "cdsw/grassmann.hpp"
#include "cdsw/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cdsw {

/// Sparse vectors: entries sorted by column, no stored zeros.
using IntVector = std::vector<std::pair<std::uint32_t, Integer>>;
using RatVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// Sorts, merges duplicate columns and drops zeros.
RatVector normalize(RatVector v);
/// Clears denominators and divides by the content; leading entry positive.
IntVector to_primitive(const RatVector& v);
RatVector to_rational(const IntVector& v);

/// Span of vectors in reduced row echelon form with unit pivots.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(std::size_t ambient, std::vector<RatVector> rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<RatVector>& rows() const { return rows_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }

    /// Coordinates of v in the row basis when v lies in the span.
    std::optional<std::vector<Rational>> coordinates(const RatVector& v) const;
    /// Residual of v after reduction against the rows (zero iff v is a member).
    RatVector reduce(const RatVector& v) const;

private:
    std::size_t ambient_ = 0;
    std::vector<RatVector> rows_;
    std::vector<std::uint32_t> pivots_;
};

/// Fraction-free sparse elimination over Z. Rows are kept primitive; the
/// leading column of every row is its pivot (semi-echelon form).
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds v; returns true when the rank grows.
    bool insert(IntVector v);
    bool insert(const RatVector& v) { return insert(to_primitive(v)); }
    /// Bulk insertion, eliminating column by column from the left and
    /// choosing among rows that lead in the same column the one with the
    /// smallest leading bit-length (then the fewest entries).
    void insert_all(std::vector<IntVector> vectors);

    /// Reduced residual of v (empty iff v lies in the span).
    IntVector reduce(IntVector v) const;
    bool contains(IntVector v) const { return reduce(std::move(v)).empty(); }

    /// Reduced row echelon form of the span.
    SubspaceBasis basis() const;

private:
    void check(const IntVector& v) const;
    void add_row(IntVector v);

    std::size_t ambient_;
    std::vector<IntVector> rows_;
    std::vector<std::int64_t> pivot_row_;  // column -> row index or -1, grown lazily
};

/// Weight-preserving exact echelon of a list of vectors sharing one ambient
/// space. Deterministic given the input order.
SubspaceBasis echelonize(std::size_t ambient, const std::vector<RatVector>& vectors);

/// Kernel of the matrix with the given rows (each a sparse vector over `cols`).
SubspaceBasis nullspace(std::size_t cols, const std::vector<RatVector>& rows);
SubspaceBasis nullspace(const OperatorSlice& op);

bool member(const RatVector& v, const SubspaceBasis& b);

/// Exact intersection, computed from the kernel of [B1 | -B2].
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace cdsw
