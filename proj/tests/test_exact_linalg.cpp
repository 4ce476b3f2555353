#include "doctest.h"

#include "cdsw/exact_linalg.hpp"

#include <random>

using namespace cdsw;

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Plain dense Gauss-Jordan, kept separate from the library.
std::size_t dense_rank(Dense m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

RatVector sparse(const std::vector<Rational>& d) {
    RatVector v;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) v.emplace_back(static_cast<std::uint32_t>(i), d[i]);
    return v;
}

Dense random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
    std::uniform_int_distribution<int> pick(0, density), val(-6, 6);
    Dense m(rows, std::vector<Rational>(cols, 0));
    for (auto& row : m)
        for (auto& e : row)
            if (pick(rng) == 0) e = make_rational(val(rng), 1 + pick(rng) % 3);
    return m;
}

}  // namespace

TEST_CASE("normalize and primitive form") {
    RatVector v = {{3, make_rational(1, 2)}, {1, 2}, {3, make_rational(1, 2)}, {2, 0}};
    RatVector n = normalize(v);
    REQUIRE(n.size() == 2);
    CHECK(n[0] == std::pair<std::uint32_t, Rational>{1, 2});
    CHECK(n[1].second == 1);
    IntVector p = to_primitive({{0, make_rational(-2, 3)}, {4, make_rational(4, 9)}});
    CHECK(p == IntVector{{0, 3}, {4, -2}});
    CHECK(to_primitive({}).empty());
}

TEST_CASE("rank matches a dense oracle") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 80; ++t) {
        const std::size_t rows = 1 + rng() % 14, cols = 1 + rng() % 14;
        Dense m = random_matrix(rng, rows, cols, 1 + static_cast<int>(rng() % 4));
        std::vector<RatVector> vs;
        for (const auto& r : m) vs.push_back(sparse(r));
        SubspaceBasis b = echelonize(cols, vs);
        CHECK(b.rank() == dense_rank(m));
        EchelonBuilder e(cols);
        for (const auto& v : vs) e.insert(v);
        CHECK(e.rank() == b.rank());
        CHECK(e.basis().rows() == b.rows());
        SubspaceBasis k = nullspace(cols, vs);
        CHECK(k.rank() + b.rank() == cols);
    }
}

TEST_CASE("reduced echelon form of a known matrix") {
    // [1 2 3; 2 4 6; 1 0 1] -> [1 0 1; 0 1 1]
    std::vector<RatVector> m = {{{0, 1}, {1, 2}, {2, 3}}, {{0, 2}, {1, 4}, {2, 6}}, {{0, 1}, {2, 1}}};
    SubspaceBasis b = echelonize(3, m);
    REQUIRE(b.rank() == 2);
    CHECK(b.rows()[0] == RatVector{{0, 1}, {2, 1}});
    CHECK(b.rows()[1] == RatVector{{1, 1}, {2, 1}});
    CHECK(b.pivots() == std::vector<std::uint32_t>{0, 1});
    auto c = b.coordinates({{0, 2}, {1, 3}, {2, 5}});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<Rational>{2, 3});
    CHECK_FALSE(b.coordinates({{2, 1}}).has_value());
    CHECK(b.reduce({{2, 1}}) == RatVector{{2, 1}});

    SubspaceBasis k = nullspace(3, m);
    REQUIRE(k.rank() == 1);
    CHECK(k.rows()[0] == RatVector{{0, 1}, {1, 1}, {2, -1}});
}

TEST_CASE("intersection") {
    SubspaceBasis xy(3, {{{0, 1}}, {{1, 1}}});
    SubspaceBasis yz(3, {{{1, 1}}, {{2, 1}}});
    SubspaceBasis i = intersect(xy, yz);
    REQUIRE(i.rank() == 1);
    CHECK(i.rows()[0] == RatVector{{1, 1}});
    SubspaceBasis z(3, {{{2, 1}}});
    CHECK(intersect(xy, z).rank() == 0);
    CHECK(member({{0, 5}, {1, -1}}, xy));
    CHECK_FALSE(member({{2, 1}}, xy));
}

TEST_CASE("large entries stay exact") {
    // Hilbert matrix of order 8 is nonsingular.
    const int n = 8;
    std::vector<RatVector> h;
    for (int i = 0; i < n; ++i) {
        RatVector r;
        for (int j = 0; j < n; ++j) r.emplace_back(j, make_rational(1, i + j + 1));
        h.push_back(r);
    }
    CHECK(echelonize(n, h).rank() == n);
    CHECK(nullspace(n, h).rank() == 0);
    h.push_back(h[0]);
    for (auto& [j, v] : h.back()) v += h[3][j].second * make_rational(-5, 7);
    CHECK(echelonize(n, h).rank() == n);
}

TEST_CASE("bad input") {
    EchelonBuilder e(3);
    CHECK_THROWS_AS(e.insert(IntVector{{5, 1}}), std::invalid_argument);
    CHECK_FALSE(e.insert(IntVector{}));
    CHECK(e.insert(IntVector{{1, 4}}));
    CHECK(e.contains(IntVector{{1, -2}}));
}
