#include "cdsw/rep_theory.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace cdsw {
namespace {

// Form on weights scaled to integers.
struct ScaledForm {
    std::vector<std::vector<long>> gram;

    explicit ScaledForm(const RootSystem& rs) {
        const auto& f = rs.weight_gram();
        std::vector<Rational> all;
        for (const auto& row : f) all.insert(all.end(), row.begin(), row.end());
        Integer den = common_denominator(all);
        gram.assign(f.size(), std::vector<long>(f.size()));
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = 0; j < f.size(); ++j) {
                Rational v = f[i][j] * den;
                gram[i][j] = v.get_num().get_si();
            }
    }
    long operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long s = 0;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) s += a[i] * gram[i][j] * b[j];
        return s;
    }
};

Weight rho_weight(int rank) { return Weight{std::vector<int>(rank, 1)}; }

}  // namespace

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}
Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}
Weight Weight::operator-() const {
    Weight r = *this;
    for (int& c : r.coords) c = -c;
    return r;
}
std::string Weight::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")";
}

Weight weight_of_root(const RootSystem& rs, const RootCoords& r) { return Weight{rs.to_weight_coords(r)}; }

Weight fundamental_weight(const RootSystem& rs, int i) {
    Weight w{std::vector<int>(rs.rank(), 0)};
    w.coords[i] = 1;
    return w;
}

long Character::dimension() const {
    long s = 0;
    for (const auto& [w, m] : mults) s += m;
    return s;
}

void Character::add(const Weight& w, long m) {
    if (m == 0) return;
    auto [it, inserted] = mults.try_emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) mults.erase(it);
    }
}

Character& Character::operator+=(const Character& o) {
    for (const auto& [w, m] : o.mults) add(w, m);
    return *this;
}

Character Character::scaled(long m) const {
    Character c;
    if (m == 0) return c;
    for (const auto& [w, k] : mults) c.mults.emplace(w, k * m);
    return c;
}

Character trivial_character(int rank) {
    Character c;
    c.add(Weight{std::vector<int>(rank, 0)}, 1);
    return c;
}

Character tensor_product(const Character& a, const Character& b) {
    Character c;
    for (const auto& [wa, ma] : a.mults)
        for (const auto& [wb, mb] : b.mults) c.add(wa + wb, ma * mb);
    return c;
}

std::vector<Rational> simple_root_coordinates(const RootSystem& rs, const Weight& w) {
    return rs.to_root_coords(w.coords);
}

Rational weight_height(const RootSystem& rs, const Weight& w) {
    Rational h = 0;
    for (const auto& c : simple_root_coordinates(rs, w)) h += c;
    return h;
}

Rational weight_inner(const RootSystem& rs, const Weight& a, const Weight& b) {
    const auto& f = rs.weight_gram();
    Rational s = 0;
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
            if (a.coords[i] && b.coords[j]) s += f[i][j] * (a.coords[i] * b.coords[j]);
    return s;
}

Weight simple_reflection(const RootSystem& rs, const Weight& w, int i) {
    Weight r = w;
    const int m = w.coords[i];
    for (int j = 0; j < rs.rank(); ++j) r.coords[j] -= m * rs.cartan(i, j);
    return r;
}

Weight dominant_representative(const RootSystem& rs, const Weight& w) {
    Weight r = w;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rs.rank(); ++i)
            if (r.coords[i] < 0) {
                r = simple_reflection(rs, r, i);
                changed = true;
            }
    }
    return r;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight x = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            if (x.coords[i] == 0) continue;
            Weight y = simple_reflection(rs, x, i);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

Rational casimir_eigenvalue(const RootSystem& rs, const Weight& lambda) {
    Weight theta = weight_of_root(rs, rs.highest_root());
    Weight two_rho{std::vector<int>(rs.rank(), 2)};
    return weight_inner(rs, lambda, lambda + two_rho) / weight_inner(rs, theta, theta + two_rho);
}

long weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dimension: weight " + lambda.to_string() + " is not dominant");
    Rational d = 1;
    for (const auto& alpha : rs.positive_roots()) {
        RootCoords c = rs.coroot_coordinates(alpha);
        long num = 0, den = 0;
        for (int i = 0; i < rs.rank(); ++i) {
            num += (lambda.coords[i] + 1) * c[i];
            den += c[i];
        }
        d *= Rational(num, den);
    }
    d.canonicalize();
    if (!is_integer(d)) throw std::logic_error("weyl_dimension: non-integral result");
    return d.get_num().get_si();
}

Character freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("freudenthal_multiplicities: weight is not dominant");
    const ScaledForm form(rs);
    std::vector<Weight> pos;
    for (const auto& a : rs.positive_roots()) pos.push_back(weight_of_root(rs, a));

    // Dominant weights below lambda, reached by subtracting positive roots.
    std::set<Weight> dominant{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight mu = queue.front();
        queue.pop_front();
        for (const auto& alpha : pos) {
            Weight nu = mu - alpha;
            if (nu.is_dominant() && dominant.insert(nu).second) queue.push_back(nu);
        }
    }
    std::vector<std::pair<Rational, Weight>> order;
    const Rational top = weight_height(rs, lambda);
    for (const auto& mu : dominant) order.emplace_back(top - weight_height(rs, mu), mu);
    std::sort(order.begin(), order.end());

    const Weight rho = rho_weight(rs.rank());
    const long lr = form((lambda + rho).coords, (lambda + rho).coords);
    std::map<Weight, long> dom{{lambda, 1}};
    auto lookup = [&](const Weight& w) -> long {
        auto it = dom.find(dominant_representative(rs, w));
        return it == dom.end() ? 0 : it->second;
    };
    for (const auto& [dep, mu] : order) {
        if (mu == lambda) continue;
        long sum = 0;
        for (const auto& alpha : pos) {
            for (int k = 1;; ++k) {
                Weight nu = mu;
                for (int i = 0; i < rs.rank(); ++i) nu.coords[i] += k * alpha.coords[i];
                long m = lookup(nu);
                if (m == 0) break;
                sum += m * form(nu.coords, alpha.coords);
            }
        }
        const long denom = lr - form((mu + rho).coords, (mu + rho).coords);
        if (denom <= 0 || (2 * sum) % denom != 0) throw std::logic_error("Freudenthal recursion failed");
        dom[mu] = 2 * sum / denom;
    }
    Character ch;
    for (const auto& [mu, m] : dom) {
        if (m == 0) continue;
        for (const auto& w : weyl_orbit(rs, mu)) ch.add(w, m);
    }
    return ch;
}

Character adjoint_character(const LieAlgebra& L) { return character_of_exterior_power(L, 1); }

Character character_of_exterior_power(const LieAlgebra& L, int d) {
    if (d < 0 || d > L.dim()) throw std::invalid_argument("character_of_exterior_power: degree out of range");
    const RootSystem& rs = L.root_system();
    // Coefficient of t^k in prod_i (1 + t e^{w_i}), truncated at t^d.
    std::vector<Character> poly(d + 1);
    poly[0] = trivial_character(rs.rank());
    for (int i = 0; i < L.dim(); ++i) {
        Weight w = weight_of_root(rs, L.weight(i));
        for (int k = d; k >= 1; --k) {
            for (const auto& [u, m] : poly[k - 1].mults) poly[k].add(u + w, m);
        }
    }
    return poly[d];
}

std::vector<Isotypic> decompose(const RootSystem& rs, const Character& ch) {
    for (const auto& [w, m] : ch.mults) {
        if (m < 0) throw std::invalid_argument("decompose: negative multiplicity in input");
        auto it = ch.mults.find(dominant_representative(rs, w));
        if (it == ch.mults.end() || it->second != m)
            throw std::invalid_argument("decompose: input is not Weyl-symmetric at " + w.to_string());
        if (w.is_dominant())
            for (const auto& u : weyl_orbit(rs, w)) {
                auto jt = ch.mults.find(u);
                if (jt == ch.mults.end() || jt->second != m)
                    throw std::invalid_argument("decompose: input is not Weyl-symmetric at " + u.to_string());
            }
    }
    // Work on dominant multiplicities only.
    std::map<Weight, long> rest;
    for (const auto& [w, m] : ch.mults)
        if (w.is_dominant()) rest[w] = m;

    std::vector<Isotypic> out;
    while (!rest.empty()) {
        // Maximal by height, then lexicographically; maximal height implies
        // maximal in the dominance order.
        auto best = rest.begin();
        Rational best_h = weight_height(rs, best->first);
        for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
            Rational h = weight_height(rs, it->first);
            if (h > best_h || (h == best_h && it->first > best->first)) {
                best = it;
                best_h = h;
            }
        }
        const Weight lambda = best->first;
        const long m = best->second;
        if (m < 0) throw std::invalid_argument("decompose: negative multiplicity at " + lambda.to_string() + "; not a character");
        out.push_back({lambda, m});
        for (const auto& [w, k] : freudenthal_multiplicities(rs, lambda).mults) {
            if (!w.is_dominant()) continue;
            long& v = rest[w];
            v -= m * k;
            if (v == 0) rest.erase(w);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Isotypic& a, const Isotypic& b) {
        Rational ha = weight_height(rs, a.highest_weight), hb = weight_height(rs, b.highest_weight);
        if (ha != hb) return ha > hb;
        return a.highest_weight > b.highest_weight;
    });

    // Reconstruction check on dimensions.
    long total = 0;
    for (const auto& iso : out) total += iso.multiplicity * weyl_dimension(rs, iso.highest_weight);
    if (total != ch.dimension()) throw std::invalid_argument("decompose: reconstruction mismatch; not a character");
    return out;
}

long invariant_dimension(const RootSystem& rs, const Character& v, const Character& w) {
    auto dv = decompose(rs, v);
    auto dw = decompose(rs, w);
    std::map<Weight, long> mw;
    for (const auto& iso : dw) mw[iso.highest_weight] += iso.multiplicity;
    long total = 0;
    for (const auto& iso : dv) {
        auto it = mw.find(dual_weight(rs, iso.highest_weight));
        if (it != mw.end()) total += iso.multiplicity * it->second;
    }
    return total;
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("dual_weight: weight is not dominant");
    return dominant_representative(rs, -lambda);
}

}  // namespace cdsw
