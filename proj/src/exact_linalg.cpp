#include "cdsw/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cdsw {
namespace {

void make_primitive(IntVector& v) {
    if (v.empty()) return;
    Integer g = 0;
    for (const auto& [c, a] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, a] : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

// v <- (a/g) v - (b/g) row, where v[pos] and row[0] share the pivot column.
void eliminate(IntVector& v, std::size_t pos, const IntVector& row) {
    Integer a = row.front().second, b = v[pos].second, g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    }
    const bool unit = a == 1;
    IntVector out;
    out.reserve(v.size() + row.size());
    for (std::size_t i = 0; i < pos; ++i) {
        out.push_back(std::move(v[i]));
        if (!unit) out.back().second *= a;
    }
    std::size_t i = pos + 1, j = 1;
    Integer t;
    while (i < v.size() || j < row.size()) {
        if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
            out.push_back(std::move(v[i]));
            if (!unit) out.back().second *= a;
            ++i;
        } else if (i == v.size() || row[j].first < v[i].first) {
            out.emplace_back(row[j].first, 0);
            mpz_mul(out.back().second.get_mpz_t(), b.get_mpz_t(), row[j].second.get_mpz_t());
            mpz_neg(out.back().second.get_mpz_t(), out.back().second.get_mpz_t());
            ++j;
        } else {
            if (unit) t = v[i].second;
            else mpz_mul(t.get_mpz_t(), a.get_mpz_t(), v[i].second.get_mpz_t());
            mpz_submul(t.get_mpz_t(), b.get_mpz_t(), row[j].second.get_mpz_t());
            if (t != 0) out.emplace_back(v[i].first, t);
            ++i;
            ++j;
        }
    }
    v = std::move(out);
}

}  // namespace

RatVector normalize(RatVector v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    RatVector out;
    for (auto& [c, a] : v) {
        if (!out.empty() && out.back().first == c) out.back().second += a;
        else out.emplace_back(c, std::move(a));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
    return out;
}

IntVector to_primitive(const RatVector& v) {
    Integer den = 1;
    for (const auto& [c, a] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const auto& [c, a] : v) {
        if (a == 0) continue;
        Integer z = den / a.get_den();
        z *= a.get_num();
        out.emplace_back(c, std::move(z));
    }
    make_primitive(out);
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& [c, a] : v) out.emplace_back(c, Rational(a));
    return out;
}

// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(std::size_t ambient, std::vector<RatVector> rows) : ambient_(ambient), rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty() || rows_[i].front().second != 1)
            throw std::invalid_argument("SubspaceBasis: rows must have unit leading entries");
        pivots_.push_back(rows_[i].front().first);
        if (i > 0 && pivots_[i] <= pivots_[i - 1]) throw std::invalid_argument("SubspaceBasis: pivots must increase");
    }
}

RatVector SubspaceBasis::reduce(const RatVector& v) const {
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [c, a] : v) {
        if (c >= ambient_) throw std::invalid_argument("SubspaceBasis: vector outside the ambient space");
        acc[c] += a;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = acc.find(pivots_[r]);
        if (it == acc.end() || it->second == 0) continue;
        Rational f = it->second;
        for (const auto& [c, a] : rows_[r]) acc[c] -= f * a;
    }
    RatVector out;
    for (auto& [c, a] : acc)
        if (a != 0) out.emplace_back(c, a);
    return out;
}

std::optional<std::vector<Rational>> SubspaceBasis::coordinates(const RatVector& v) const {
    if (!reduce(v).empty()) return std::nullopt;
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [c, a] : v) acc[c] += a;
    std::vector<Rational> coords(rows_.size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (auto it = acc.find(pivots_[r]); it != acc.end()) coords[r] = it->second;
    return coords;
}

// ---------------------------------------------------------------------------

void EchelonBuilder::check(const IntVector& v) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].first >= ambient_) throw std::invalid_argument("EchelonBuilder: dimension mismatch");
        if (i > 0 && v[i].first <= v[i - 1].first) throw std::invalid_argument("EchelonBuilder: unsorted vector");
    }
}

IntVector EchelonBuilder::reduce(IntVector v) const {
    check(v);
    std::size_t pos = 0;
    while (pos < v.size()) {
        const auto c = v[pos].first;
        const std::int64_t r = c < pivot_row_.size() ? pivot_row_[c] : -1;
        if (r < 0) {
            ++pos;
            continue;
        }
        eliminate(v, pos, rows_[r]);
        make_primitive(v);
    }
    make_primitive(v);
    return v;
}

void EchelonBuilder::add_row(IntVector v) {
    const auto c = v.front().first;
    if (pivot_row_.size() <= c) pivot_row_.resize(std::max<std::size_t>(c + 1, pivot_row_.size() * 2), -1);
    pivot_row_[c] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(v));
}

bool EchelonBuilder::insert(IntVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    add_row(std::move(v));
    return true;
}

void EchelonBuilder::insert_all(std::vector<IntVector> vectors) {
    std::map<std::uint32_t, std::vector<IntVector>> buckets;
    for (auto& v : vectors) {
        v = reduce(std::move(v));
        if (!v.empty()) buckets[v.front().first].push_back(std::move(v));
    }
    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        auto& rows = node.mapped();
        std::size_t best = 0;
        auto cost = [](const IntVector& r) { return std::make_pair(mpz_sizeinbase(r.front().second.get_mpz_t(), 2), r.size()); };
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (cost(rows[i]) < cost(rows[best])) best = i;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == best) continue;
            eliminate(rows[i], 0, rows[best]);
            make_primitive(rows[i]);
            if (!rows[i].empty()) buckets[rows[i].front().first].push_back(std::move(rows[i]));
        }
        add_row(std::move(rows[best]));
    }
}

SubspaceBasis EchelonBuilder::basis() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });

    std::vector<RatVector> reduced(order.size());
    std::map<std::uint32_t, std::size_t> pivot_pos;
    for (std::size_t i = 0; i < order.size(); ++i) pivot_pos[rows_[order[i]].front().first] = i;
    for (std::size_t i = order.size(); i-- > 0;) {
        const IntVector& row = rows_[order[i]];
        Rational lead(row.front().second);
        std::map<std::uint32_t, Rational> acc;
        for (const auto& [c, a] : row) acc[c] += Rational(a) / lead;
        for (const auto& [c, a] : row) {
            if (c == row.front().first) continue;
            auto p = pivot_pos.find(c);
            if (p == pivot_pos.end()) continue;
            Rational f = Rational(a) / lead;
            for (const auto& [c2, a2] : reduced[p->second]) acc[c2] -= f * a2;
        }
        RatVector out;
        for (auto& [c, a] : acc)
            if (a != 0) out.emplace_back(c, a);
        reduced[i] = std::move(out);
    }
    return SubspaceBasis(ambient_, std::move(reduced));
}

// ---------------------------------------------------------------------------

SubspaceBasis echelonize(std::size_t ambient, const std::vector<RatVector>& vectors) {
    EchelonBuilder b(ambient);
    std::vector<IntVector> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) rows.push_back(to_primitive(normalize(v)));
    b.insert_all(std::move(rows));
    return b.basis();
}

SubspaceBasis nullspace(std::size_t cols, const std::vector<RatVector>& rows) {
    SubspaceBasis r = echelonize(cols, rows);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots()) is_pivot[p] = true;
    std::map<std::uint32_t, RatVector> kernel;
    for (std::uint32_t f = 0; f < cols; ++f)
        if (!is_pivot[f]) kernel[f].emplace_back(f, 1);
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (const auto& [c, a] : r.rows()[i])
            if (!is_pivot[c]) kernel[c].emplace_back(r.pivots()[i], -a);
    std::vector<RatVector> vecs;
    for (auto& [f, v] : kernel) vecs.push_back(normalize(std::move(v)));
    return echelonize(cols, vecs);
}

SubspaceBasis nullspace(const OperatorSlice& op) { return nullspace(op.source.size(), op.rows); }

bool member(const RatVector& v, const SubspaceBasis& b) { return b.reduce(v).empty(); }

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    const std::size_t n = a.ambient_dim(), ka = a.rank(), kb = b.rank();
    // Columns: a's rows then b's rows; one equation per ambient coordinate.
    std::vector<RatVector> eq(n);
    for (std::size_t i = 0; i < ka; ++i)
        for (const auto& [c, v] : a.rows()[i]) eq[c].emplace_back(static_cast<std::uint32_t>(i), v);
    for (std::size_t j = 0; j < kb; ++j)
        for (const auto& [c, v] : b.rows()[j]) eq[c].emplace_back(static_cast<std::uint32_t>(ka + j), -v);
    SubspaceBasis ker = nullspace(ka + kb, eq);
    std::vector<RatVector> out;
    for (const auto& kv : ker.rows()) {
        RatVector w;
        for (const auto& [i, coef] : kv) {
            if (i >= ka) continue;
            for (const auto& [c, v] : a.rows()[i]) w.emplace_back(c, coef * v);
        }
        out.push_back(normalize(std::move(w)));
    }
    return echelonize(n, out);
}

}  // namespace cdsw
