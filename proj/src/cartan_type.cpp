#include "cdsw/cartan_type.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace cdsw {

std::string CartanType::name() const {
    return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

void CartanType::validate() const {
    if (rank < 1) throw std::invalid_argument("Cartan type rank must be positive");
    if (rank > kMaxRank)
        throw std::invalid_argument("Cartan type " + name() + ": rank above " +
                                    std::to_string(kMaxRank) + " is not supported");
    switch (series) {
        case Series::A:
            return;
        case Series::B:
        case Series::C:
            if (rank < 2) throw std::invalid_argument(name() + " is not a simple type (rank >= 2 required)");
            return;
        case Series::D:
            if (rank < 3) throw std::invalid_argument(name() + " is not a simple type (rank >= 3 required)");
            return;
        case Series::G:
            if (rank != 2) throw std::invalid_argument(name() + " is not a simple type (only G2 exists)");
            return;
    }
    throw std::invalid_argument("unknown Cartan series");
}

CartanType parse_cartan_type(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
    CartanType t;
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'A': t.series = Series::A; break;
        case 'B': t.series = Series::B; break;
        case 'C': t.series = Series::C; break;
        case 'D': t.series = Series::D; break;
        case 'G': t.series = Series::G; break;
        default:
            throw std::invalid_argument("bad Cartan series in '" + std::string(text) + "'");
    }
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw std::invalid_argument("bad Cartan rank in '" + std::string(text) + "'");
    t.validate();
    return t;
}

}  // namespace cdsw
