#include "cdsw/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace cdsw {
namespace {

// Gram matrix of the simple roots with long roots of squared length 2.
std::vector<std::vector<Rational>> simple_root_gram(const CartanType& t) {
    const int n = t.rank;
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
    auto link = [&](int i, int j, Rational v) { g[i][j] = v; g[j][i] = v; };
    switch (t.series) {
        case Series::A:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Series::B:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            g[n - 1][n - 1] = 1;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Series::C:
            for (int i = 0; i < n; ++i) g[i][i] = 1;
            g[n - 1][n - 1] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, make_rational(-1, 2));
            link(n - 2, n - 1, -1);
            break;
        case Series::D:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case Series::G:
            g[0][0] = make_rational(2, 3);
            g[1][1] = 2;
            link(0, 1, -1);
            break;
    }
    return g;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational s = 1 / a[c][c];
        for (int j = 0; j < n; ++j) { a[c][j] *= s; inv[c][j] *= s; }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int j = 0; j < n; ++j) { a[r][j] -= f * a[c][j]; inv[r][j] -= f * inv[c][j]; }
        }
    }
    return inv;
}

bool lex_greater(const RootCoords& a, const RootCoords& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(type) {
    type_.validate();
    const int n = type_.rank;
    gram_ = simple_root_gram(type_);

    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational a = 2 * gram_[i][j] / gram_[j][j];
            if (!is_integer(a)) throw std::logic_error("non-integral Cartan entry");
            cartan_[i][j] = static_cast<int>(a.get_num().get_si());
        }

    // Close the simple roots under the simple reflections.
    std::set<RootCoords> all;
    std::deque<RootCoords> queue;
    for (int i = 0; i < n; ++i) {
        RootCoords e(n, 0);
        e[i] = 1;
        all.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        RootCoords b = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            RootCoords r = b;
            r[i] -= pairing_with_coroot(b, i);
            if (all.insert(r).second) queue.push_back(r);
        }
    }
    for (const auto& r : all) {
        bool nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
        bool nonpos = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
        if (!nonneg && !nonpos) throw std::logic_error("root with mixed-sign coordinates");
        if (nonneg) positive_.push_back(r);
    }
    std::sort(positive_.begin(), positive_.end(), [](const RootCoords& a, const RootCoords& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return lex_greater(a, b);
    });
    for (int i = 0; i < static_cast<int>(positive_.size()); ++i) index_[positive_[i]] = i;
    highest_ = static_cast<int>(positive_.size()) - 1;
    if (positive_.size() >= 2 && height(positive_[highest_]) == height(positive_[highest_ - 1]))
        throw std::logic_error("highest root is not unique");

    Rational tt = inner(highest_root(), highest_root());
    if (tt != 2) {
        Rational scale = 2 / tt;
        for (auto& row : gram_)
            for (auto& v : row) v *= scale;
    }
    for (const auto& r : positive_) {
        const auto& th = highest_root();
        for (int i = 0; i < n; ++i)
            if (th[i] < r[i]) throw std::logic_error("highest root does not dominate");
    }

    // alpha_i = sum_j cartan(i, j) omega_j, hence omega = A^{-1} alpha.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
    fundamental_ = invert(a);
    rho_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rho_[j] += fundamental_[i][j];

    weight_gram_.assign(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    weight_gram_[i][j] += fundamental_[i][k] * gram_[k][l] * fundamental_[j][l];
}

std::optional<int> RootSystem::positive_index(const RootCoords& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::is_root(const RootCoords& r) const {
    if (positive_index(r)) return true;
    RootCoords neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    return positive_index(neg).has_value();
}

Rational RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank(); ++j)
            if (b[j] != 0) s += gram_[i][j] * (a[i] * b[j]);
    }
    return s;
}

int RootSystem::pairing_with_coroot(const RootCoords& beta, int i) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += beta[j] * cartan_[j][i];
    return s;
}

int RootSystem::height(const RootCoords& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
}

RootCoords RootSystem::coroot_coordinates(const RootCoords& beta) const {
    Rational bb = inner(beta, beta);
    RootCoords out(rank());
    for (int i = 0; i < rank(); ++i) {
        Rational c = beta[i] * gram_[i][i] / bb;
        if (!is_integer(c)) throw std::logic_error("non-integral coroot coordinate");
        out[i] = static_cast<int>(c.get_num().get_si());
    }
    return out;
}

std::vector<int> RootSystem::to_weight_coords(const RootCoords& r) const {
    std::vector<int> w(rank(), 0);
    for (int j = 0; j < rank(); ++j) w[j] = pairing_with_coroot(r, j);
    return w;
}

std::vector<Rational> RootSystem::to_root_coords(const std::vector<int>& weight) const {
    std::vector<Rational> out(rank(), 0);
    for (int i = 0; i < rank(); ++i)
        if (weight[i] != 0)
            for (int j = 0; j < rank(); ++j) out[j] += weight[i] * fundamental_[i][j];
    return out;
}

RootSystem build_root_system(CartanType type) { return RootSystem(type); }

int dual_coxeter_number(const RootSystem& rs) {
    int h = 1;
    for (int c : rs.coroot_coordinates(rs.highest_root())) h += c;
    return h;
}

}  // namespace cdsw
