#include "cdsw/kostant_b.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cdsw {

bool is_abelian_ideal(const RootSystem& rs, const std::vector<int>& roots) {
    std::set<int> in(roots.begin(), roots.end());
    const auto& pos = rs.positive_roots();
    auto sum = [&](int a, int b) {
        RootCoords s(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) s[i] = pos[a][i] + pos[b][i];
        return s;
    };
    for (int a : in) {
        for (int b = 0; b < rs.num_positive(); ++b) {
            auto idx = rs.positive_index(sum(a, b));
            if (!idx) continue;
            if (!in.count(*idx)) return false;  // not an ideal
            if (in.count(b)) return false;      // not abelian
        }
    }
    return true;
}

std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs) {
    // Every ideal is reached from a smaller one by adjoining a root.
    std::set<std::vector<int>> seen{{}};
    std::vector<std::vector<int>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& a : frontier) {
            for (int r = 0; r < rs.num_positive(); ++r) {
                if (std::binary_search(a.begin(), a.end(), r)) continue;
                auto b = a;
                b.insert(std::upper_bound(b.begin(), b.end(), r), r);
                if (seen.count(b) || !is_abelian_ideal(rs, b)) continue;
                seen.insert(b);
                next.push_back(std::move(b));
            }
        }
        frontier = std::move(next);
    }
    std::vector<AbelianIdeal> out;
    for (const auto& s : seen) out.push_back(AbelianIdeal{s});
    std::sort(out.begin(), out.end(), [](const AbelianIdeal& a, const AbelianIdeal& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.roots < b.roots;
    });
    if (out.size() != (std::size_t{1} << rs.rank()))
        throw std::logic_error("abelian ideal count " + std::to_string(out.size()) + " differs from 2^rank");
    return out;
}

ModuleDescriptor module_of_ideal(const RootSystem& rs, const AbelianIdeal& a) {
    if (!is_abelian_ideal(rs, a.roots)) throw std::invalid_argument("module_of_ideal: not an abelian ideal");
    RootCoords sum(rs.rank(), 0);
    for (int r : a.roots)
        for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.positive_roots()[r][i];
    ModuleDescriptor m;
    m.ideal = a;
    m.highest_weight = weight_of_root(rs, sum);
    m.degree = a.size();
    m.dimension = weyl_dimension(rs, m.highest_weight);
    m.casimir_eigenvalue = casimir_eigenvalue(rs, m.highest_weight);
    if (m.casimir_eigenvalue != m.degree)
        throw std::logic_error("Casimir eigenvalue " + to_string(m.casimir_eigenvalue) + " of V_a differs from |a|");
    return m;
}

Multivector ideal_vector(const LieAlgebra& L, const AbelianIdeal& a) {
    MonomialKey k;
    for (int r : a.roots) k.x |= std::uint64_t{1} << L.e_index(r);
    return Multivector::monomial(k);
}

namespace {

Multivector casimir_image_scaled(const LieAlgebra& L, const MonomialKey& m, const Rational& scale) {
    std::map<MonomialKey, Rational> acc;
    for (int j = 0; j < L.dim(); ++j) {
        std::map<MonomialKey, long> first;
        lie_derivative_terms(L, j, Action::Diagonal, m, [&](const MonomialKey& k, long c) { first[k] += c; });
        for (const auto& [i, g] : L.dual_basis(j)) {
            for (const auto& [k1, c1] : first) {
                if (c1 == 0) continue;
                lie_derivative_terms(L, i, Action::Diagonal, k1, [&](const MonomialKey& k2, long c2) { acc[k2] += g * (c1 * c2); });
            }
        }
    }
    Multivector out;
    for (const auto& [k, c] : acc)
        if (c != 0) out.add_term(k, c * scale);
    return out;
}

}  // namespace

Multivector casimir_image(const LieAlgebra& L, const MonomialKey& m) {
    return casimir_image_scaled(L, m, 1 / adjoint_casimir_scalar(L));
}

MonomialBasis exterior_basis(const ExteriorIndex& idx, int d) {
    std::vector<MonomialKey> keys;
    for (const auto& w : idx.weights(d))
        for (auto m : idx.subsets(d, w)) keys.push_back(MonomialKey{m, 0});
    std::sort(keys.begin(), keys.end());
    return MonomialBasis(std::move(keys));
}

OperatorSlice casimir_on_exterior(const LieAlgebra& L, int d) {
    if (d < 0 || d > L.dim()) throw std::invalid_argument("casimir_on_exterior: degree out of range");
    ExteriorIndex idx(L);
    MonomialBasis basis = exterior_basis(idx, d);
    const Rational scale = 1 / adjoint_casimir_scalar(L);
    return make_operator_slice(basis, basis, [&](const MonomialKey& k) { return casimir_image_scaled(L, k, scale); });
}

OperatorSlice kernel_map(const LieAlgebra& L, int d) {
    if (d + 1 < 1 || d + 1 > L.dim()) throw std::invalid_argument("kernel_map: degree out of range");
    ExteriorIndex idx(L);
    MonomialBasis source = exterior_basis(idx, d + 1);
    std::vector<MonomialKey> tkeys;
    if (d >= 1) {
        MonomialBasis rest = exterior_basis(idx, d - 1);
        for (int k = 0; k < L.dim(); ++k)
            for (const auto& r : rest.keys()) tkeys.push_back(MonomialKey{std::uint64_t{1} << k, r.x});
        std::sort(tkeys.begin(), tkeys.end());
    }
    MonomialBasis target(std::move(tkeys));
    return make_operator_slice(source, target, [&](const MonomialKey& key) {
        Multivector out;
        std::vector<int> p;
        for (std::uint64_t m = key.x; m; m &= m - 1) p.push_back(std::countr_zero(m));
        for (std::size_t r = 0; r < p.size(); ++r)
            for (std::size_t s = r + 1; s < p.size(); ++s) {
                // positions are 1-based in the sign
                const long sign = ((r + s) % 2 == 0) ? 1 : -1;
                const std::uint64_t rest = key.x & ~(std::uint64_t{1} << p[r]) & ~(std::uint64_t{1} << p[s]);
                for (const auto& t : L.bracket(p[s], p[r]))
                    out.add_term(MonomialKey{std::uint64_t{1} << t.index, rest}, Rational(sign * t.coeff));
            }
        return out;
    });
}

// ---------------------------------------------------------------------------

BComponent::BComponent(const LieAlgebra& L, const ExteriorIndex& idx, int d) : L_(&L), d_(d) {
    if (d < 0 || d > L.dim()) throw std::invalid_argument("BComponent: degree out of range");
    const RootSystem& rs = L.root_system();
    std::set<Rational> eig;
    for (const auto& iso : decompose(rs, character_of_exterior_power(L, d))) {
        Rational c = casimir_eigenvalue(rs, iso.highest_weight);
        if (c > d) throw std::logic_error("Casimir eigenvalue above the degree on an exterior power");
        eig.insert(c);
    }
    eigenvalues_.assign(eig.begin(), eig.end());

    long expected = 0;
    for (const auto& a : enumerate_abelian_ideals(rs))
        if (a.size() == d) expected += module_of_ideal(rs, a).dimension;

    const Rational scale = 1 / adjoint_casimir_scalar(L);
    for (const auto& w : idx.weights(d)) {
        std::vector<MonomialKey> keys;
        for (auto m : idx.subsets(d, w)) keys.push_back(MonomialKey{m, 0});
        const std::size_t k = keys.size();
        mono_block_sizes_[w] = k;
        MonomialBasis mb(std::move(keys));
        RationalMatrix c(k, k);
        for (std::size_t j = 0; j < k; ++j) {
            const Multivector image = casimir_image_scaled(L, mb.key(j), scale);
            for (const auto& [key, v] : image.terms()) {
                long i = mb.index(key);
                if (i < 0) throw std::logic_error("Casimir left a weight space");
                c(i, j) = v;
            }
        }
        std::vector<RatVector> rows(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Rational v = c(i, j) - (i == j ? Rational(d) : Rational(0));
                if (v != 0) rows[i].emplace_back(static_cast<std::uint32_t>(j), v);
            }
        SubspaceBasis b = nullspace(k, rows);
        if (b.rank() == 0) continue;
        dim_ += b.rank();
        blocks_.emplace(w, Block{w, std::move(mb), std::move(b), std::move(c)});
    }
    if (static_cast<long>(dim_) != expected)
        throw std::logic_error("B[" + std::to_string(d) + "] has dimension " + std::to_string(dim_) + ", modules predict " +
                               std::to_string(expected));
}

const BComponent::Block* BComponent::block(const WeightKey& w) const {
    auto it = blocks_.find(w);
    return it == blocks_.end() ? nullptr : &it->second;
}

const RatVector& BComponent::project(std::uint64_t mask) const {
    if (auto it = projection_cache_.find(mask); it != projection_cache_.end()) return it->second;
    RatVector& out = projection_cache_[mask];
    WeightKey w;
    for (std::uint64_t m = mask; m; m &= m - 1) w = w + weight_key(L_->weight(std::countr_zero(m)));
    const Block* b = block(w);
    if (!b) return out;
    auto pr = projector_rows_.find(w);
    if (pr == projector_rows_.end()) {
        // Rows of prod_{l != d} (C - l)/(d - l) at the pivot indices.
        const std::size_t k = b->monomials.size(), r = b->basis.rank();
        RationalMatrix rows(r, k);
        for (std::size_t i = 0; i < r; ++i) rows(i, b->basis.pivots()[i]) = 1;
        for (const auto& lam : eigenvalues_) {
            if (lam == d_) continue;
            RationalMatrix shifted = b->casimir;
            for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= lam;
            rows = rows * shifted;
            rows *= 1 / (Rational(d_) - lam);
        }
        pr = projector_rows_.emplace(w, std::move(rows)).first;
    }
    long j = b->monomials.index(MonomialKey{mask, 0});
    for (std::size_t i = 0; i < pr->second.rows(); ++i)
        if (pr->second(i, j) != 0) out.emplace_back(static_cast<std::uint32_t>(i), pr->second(i, j));
    return out;
}

RatVector BComponent::coordinates(const Block& b, const RatVector& v) {
    auto c = b.basis.coordinates(v);
    if (!c) throw std::invalid_argument("BComponent::coordinates: vector outside B");
    RatVector out;
    for (std::size_t i = 0; i < c->size(); ++i)
        if ((*c)[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), (*c)[i]);
    return out;
}

Multivector BComponent::element(const Block& b, const RatVector& coords) {
    Multivector out;
    for (const auto& [i, a] : coords)
        for (const auto& [col, v] : b.basis.rows()[i]) out.add_term(b.monomials.key(col), a * v);
    return out;
}

SubspaceBasis BComponent::subspace(const ExteriorIndex& idx) const {
    MonomialBasis all = exterior_basis(idx, d_);
    std::vector<RatVector> rows;
    for (const auto& [w, b] : blocks_)
        for (const auto& row : b.basis.rows()) {
            RatVector g;
            for (const auto& [c, v] : row) g.emplace_back(static_cast<std::uint32_t>(all.index(b.monomials.key(c))), v);
            rows.push_back(std::move(g));
        }
    std::sort(rows.begin(), rows.end(), [](const RatVector& a, const RatVector& b) { return a.front().first < b.front().first; });
    return SubspaceBasis(all.size(), std::move(rows));
}

SubspaceBasis b_component(const LieAlgebra& L, int d) {
    ExteriorIndex idx(L);
    return BComponent(L, idx, d).subspace(idx);
}

}  // namespace cdsw
