#include "cdsw/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdsw {
namespace {

// Number of pairs (i in a, j in b) with i > j.
int inversions(std::uint64_t a, std::uint64_t b) {
    int n = 0;
    for (std::uint64_t rest = b; rest;) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        n += std::popcount(a >> j >> 1);
    }
    return n;
}

void check_dim(const LieAlgebra& L) {
    if (L.dim() > 64) throw std::invalid_argument("exterior algebra supports dim g <= 64");
}

}  // namespace

int wedge_sign(const MonomialKey& a, const MonomialKey& b) {
    if ((a.x & b.x) || (a.y & b.y)) return 0;
    int s = std::popcount(a.y) * std::popcount(b.x) + inversions(a.x, b.x) + inversions(a.y, b.y);
    return (s & 1) ? -1 : 1;
}

Multivector Multivector::one() { return monomial(MonomialKey{}, 1); }

Multivector Multivector::monomial(MonomialKey key, Rational c) {
    Multivector m;
    m.add_term(key, c);
    return m;
}

Multivector Multivector::vector(Copy copy, const AlgebraElement& v) {
    Multivector m;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        MonomialKey k;
        (copy == Copy::X ? k.x : k.y) = std::uint64_t{1} << i;
        m.add_term(k, v[i]);
    }
    return m;
}

Multivector Multivector::generator(Copy copy, int i) {
    MonomialKey k;
    (copy == Copy::X ? k.x : k.y) = std::uint64_t{1} << i;
    return monomial(k, 1);
}

Rational Multivector::coefficient(const MonomialKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(const MonomialKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Multivector& Multivector::operator+=(const Multivector& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

bool Multivector::is_homogeneous(int p, int q) const {
    for (const auto& [k, c] : terms_)
        if (k.degree_x() != p || k.degree_y() != q) return false;
    return true;
}

int Multivector::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        if (d == -1) d = k.degree();
        else if (d != k.degree()) return -1;
    }
    return d;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
    Multivector out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            int s = wedge_sign(a, b);
            if (s == 0) continue;
            out.add_term(MonomialKey{a.x | b.x, a.y | b.y}, s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
        }
    return out;
}

Multivector power(const Multivector& u, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    Multivector r = Multivector::one();
    for (int i = 0; i < k; ++i) r = wedge(r, u);
    return r;
}

Multivector component(const Multivector& u, int p, int q) {
    Multivector out;
    for (const auto& [k, c] : u.terms())
        if (k.degree_x() == p && k.degree_y() == q) out.add_term(k, c);
    return out;
}

Multivector contraction(const std::vector<Rational>& xi, Copy copy, const Multivector& u) {
    Multivector out;
    for (const auto& [k, c] : u.terms()) {
        const std::uint64_t mask = copy == Copy::X ? k.x : k.y;
        const int offset = copy == Copy::X ? 0 : k.degree_x();
        for (std::uint64_t rest = mask; rest;) {
            const int j = std::countr_zero(rest);
            rest &= rest - 1;
            if (static_cast<std::size_t>(j) >= xi.size() || xi[j] == 0) continue;
            MonomialKey r = k;
            (copy == Copy::X ? r.x : r.y) &= ~(std::uint64_t{1} << j);
            const int sign = ((offset + detail::bits_below(mask, j)) & 1) ? -1 : 1;
            out.add_term(r, sign * c * xi[j]);
        }
    }
    return out;
}

Multivector contraction_by_form(const LieAlgebra& L, const AlgebraElement& v, Copy copy, const Multivector& u) {
    std::vector<Rational> xi(L.dim(), 0);
    for (int j = 0; j < L.dim(); ++j)
        for (int i = 0; i < L.dim(); ++i)
            if (v[i] != 0) xi[j] += v[i] * L.gram(i, j);
    return contraction(xi, copy, u);
}

Multivector lie_derivative(const LieAlgebra& L, const AlgebraElement& a, Action action, const Multivector& u) {
    check_dim(L);
    Multivector out;
    for (int i = 0; i < L.dim(); ++i) {
        if (a[i] == 0) continue;
        for (const auto& [k, c] : u.terms()) {
            Rational s = a[i] * c;
            lie_derivative_terms(L, i, action, k, [&](const MonomialKey& t, long coeff) { out.add_term(t, s * coeff); });
        }
    }
    return out;
}

IdealGenerators ideal_generators(const LieAlgebra& L) {
    check_dim(L);
    IdealGenerators gens;
    if (L.gram_inverse_matrix().rows() != static_cast<std::size_t>(L.dim()))
        throw std::invalid_argument("ideal_generators: degenerate form");
    for (int k = 0; k < L.dim(); ++k) {
        Multivector m20, m11, m02;
        for (int i = 0; i < L.dim(); ++i) {
            // b^i (.) [b_k, b_i]
            AlgebraElement dual(L.dim(), 0);
            for (const auto& [j, g] : L.dual_basis(i)) dual[j] = g;
            AlgebraElement br(L.dim(), 0);
            for (const auto& t : L.bracket(k, i)) br[t.index] += t.coeff;
            bool any = false;
            for (const auto& v : br) any = any || v != 0;
            if (!any) continue;
            m20 += wedge(Multivector::vector(Copy::X, dual), Multivector::vector(Copy::X, br));
            m11 += wedge(Multivector::vector(Copy::X, dual), Multivector::vector(Copy::Y, br));
            m02 += wedge(Multivector::vector(Copy::Y, dual), Multivector::vector(Copy::Y, br));
        }
        gens.mu20.push_back(std::move(m20));
        gens.mu11.push_back(std::move(m11));
        gens.mu02.push_back(std::move(m02));
    }
    return gens;
}

Multivector s_element(const LieAlgebra& L) {
    check_dim(L);
    Multivector s;
    for (int i = 0; i < L.dim(); ++i)
        for (const auto& [j, g] : L.dual_basis(i))
            s.add_term(MonomialKey{std::uint64_t{1} << i, std::uint64_t{1} << j}, g);
    return s;
}

// ---------------------------------------------------------------------------

WeightKey weight_key(const RootCoords& r) {
    if (r.size() > 4) throw std::invalid_argument("weight_key: rank above 4");
    WeightKey w;
    for (std::size_t i = 0; i < r.size(); ++i) w.c[i] = static_cast<std::int16_t>(r[i]);
    return w;
}

RootCoords root_coords(const WeightKey& w, int rank) {
    RootCoords r(rank);
    for (int i = 0; i < rank; ++i) r[i] = w.c[i];
    return r;
}

ExteriorIndex::ExteriorIndex(const LieAlgebra& L) : n_(L.dim()) {
    check_dim(L);
    for (int i = 0; i < n_; ++i) basis_weights_.push_back(weight_key(L.weight(i)));
}

WeightKey ExteriorIndex::weight_of_mask(std::uint64_t mask) const {
    WeightKey w;
    for (std::uint64_t rest = mask; rest;) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        w = w + basis_weights_[j];
    }
    return w;
}

const std::map<WeightKey, std::vector<std::uint64_t>>& ExteriorIndex::by_size(int d) const {
    if (auto it = cache_.find(d); it != cache_.end()) return it->second;
    auto& table = cache_[d];
    if (d < 0 || d > n_) return table;
    // Enumerate size-d subsets in increasing numeric order (Gosper's hack).
    if (d == 0) {
        table[WeightKey{}].push_back(0);
        return table;
    }
    const std::uint64_t limit = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_);
    std::uint64_t m = (d == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    while (true) {
        table[weight_of_mask(m)].push_back(m);
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        if (r == 0 || (n_ < 64 && r >= limit)) break;
        m = (((r ^ m) >> 2) / c) | r;
        if (n_ < 64 && m >= limit) break;
    }
    return table;
}

const std::vector<std::uint64_t>& ExteriorIndex::subsets(int d, const WeightKey& w) const {
    static const std::vector<std::uint64_t> empty;
    const auto& t = by_size(d);
    auto it = t.find(w);
    return it == t.end() ? empty : it->second;
}

std::vector<WeightKey> ExteriorIndex::weights(int d) const {
    std::vector<WeightKey> out;
    for (const auto& [w, v] : by_size(d)) out.push_back(w);
    return out;
}

std::vector<MonomialKey> ExteriorIndex::monomials(int p, int q, const WeightKey& w) const {
    std::vector<MonomialKey> out;
    for (const auto& [wx, xs] : by_size(p)) {
        const auto& ys = subsets(q, w - wx);
        for (auto x : xs)
            for (auto y : ys) out.push_back(MonomialKey{x, y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeightKey> ExteriorIndex::bidegree_weights(int p, int q) const {
    std::vector<WeightKey> out;
    for (const auto& [wx, xs] : by_size(p))
        for (const auto& [wy, ys] : by_size(q)) out.push_back(wx + wy);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MonomialBasis::MonomialBasis(std::vector<MonomialKey> keys) : keys_(std::move(keys)) {
    index_.reserve(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
}

long MonomialBasis::index(const MonomialKey& k) const {
    auto it = index_.find(k);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

bool OperatorSlice::is_zero() const {
    for (const auto& r : rows)
        if (!r.empty()) return false;
    return true;
}

std::vector<Rational> OperatorSlice::apply(const std::vector<Rational>& v) const {
    if (v.size() != source.size()) throw std::invalid_argument("OperatorSlice::apply: dimension mismatch");
    std::vector<Rational> out(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, a] : rows[r])
            if (v[c] != 0) out[r] += a * v[c];
    return out;
}

OperatorSlice make_operator_slice(MonomialBasis source, MonomialBasis target,
                                  const std::function<Multivector(const MonomialKey&)>& op) {
    OperatorSlice s{std::move(source), std::move(target), {}};
    s.rows.resize(s.target.size());
    for (std::size_t c = 0; c < s.source.size(); ++c) {
        const Multivector image = op(s.source.key(c));
        for (const auto& [k, a] : image.terms()) {
            long r = s.target.index(k);
            if (r < 0) throw std::logic_error("operator image leaves the declared target component");
            s.rows[r].emplace_back(static_cast<std::uint32_t>(c), a);
        }
    }
    return s;
}

}  // namespace cdsw
