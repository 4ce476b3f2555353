#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace cdsw {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

/// Cartan type of a simple Lie algebra, e.g. G2 or B3.
struct CartanType {
    Series series = Series::A;
    int rank = 1;

    auto operator<=>(const CartanType&) const = default;

    std::string name() const;
    /// Throws std::invalid_argument for combinations that are not simple types
    /// (B1, C1, D1, D2, Gn with n != 2) or that exceed the supported rank.
    void validate() const;
};

/// Parses "A1", "g2", "B3", ...; validates the result.
CartanType parse_cartan_type(std::string_view text);

inline constexpr int kMaxRank = 4;

}  // namespace cdsw
