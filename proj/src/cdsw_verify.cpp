#include "cdsw/cdsw_verify.hpp"

#include <algorithm>
#include <functional>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cdsw {

std::string to_string(Pathway p) { return p == Pathway::Direct ? "direct" : "b_tensor_b"; }

Pathway parse_pathway(const std::string& s) {
    if (s == "direct") return Pathway::Direct;
    if (s == "b-tensor-b" || s == "b_tensor_b") return Pathway::BTensorB;
    throw std::invalid_argument("unknown pathway '" + s + "' (expected direct or b-tensor-b)");
}

SizeGuardError::SizeGuardError(Pathway pathway, int p_, int q_, Integer e, Integer l)
    : std::runtime_error("bidegree (" + std::to_string(p_) + "," + std::to_string(q_) + ") needs about " + e.get_str() +
                         " monomials and spanning vectors, above the limit " + l.get_str() + ": too large for " +
                         to_string(pathway) + " pathway (use --force to run anyway)"),
      p(p_),
      q(q_),
      estimate(std::move(e)),
      limit(std::move(l)) {}

namespace {

Integer binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

bool flip(int n) { return n & 1; }

struct GenTerm {
    MonomialKey key;
    Integer c;
};
using IntGenerator = std::vector<GenTerm>;

IntGenerator integral(const Multivector& m) {
    std::vector<Rational> cs;
    for (const auto& [k, c] : m.terms()) cs.push_back(c);
    Integer den = common_denominator(cs);
    IntGenerator out;
    for (const auto& [k, c] : m.terms()) {
        Rational s = c * den;
        out.push_back({k, s.get_num()});
    }
    return out;
}

Weight weight_of_key(const RootSystem& rs, const WeightKey& w) { return weight_of_root(rs, root_coords(w, rs.rank())); }

std::string root_label(const RootCoords& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (r[i] != 1) s += std::to_string(r[i]);
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::string weight_label(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
        if (w.coords[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (w.coords[i] != 1) s += std::to_string(w.coords[i]);
        s += "w" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

/// Rows grouped by target index, accumulated per source column.
class RowCollector {
public:
    explicit RowCollector(std::size_t rows) : acc_(rows) {}
    void add(std::size_t row, std::uint32_t col, const Rational& v) { acc_[row][col] += v; }
    void append_to(std::vector<RatVector>& out) const {
        for (const auto& r : acc_) {
            RatVector v;
            for (const auto& [c, a] : r)
                if (a != 0) v.emplace_back(c, a);
            if (!v.empty()) out.push_back(std::move(v));
        }
    }

private:
    std::vector<std::map<std::uint32_t, Rational>> acc_;
};

}  // namespace

Integer direct_slice_size(const LieAlgebra& L, int p, int q) {
    const int n = L.dim();
    Integer total = binom(n, p) * binom(n, q);
    total += n * (binom(n, p - 2) * binom(n, q) + binom(n, p - 1) * binom(n, q - 1) + binom(n, p) * binom(n, q - 2));
    return total;
}

Integer btb_slice_size(const LieAlgebra& L, const std::vector<long>& b_dims, int p, int q) {
    auto bd = [&](int d) -> long { return d >= 0 && d < static_cast<int>(b_dims.size()) ? b_dims[d] : 0; };
    Integer total = Integer(bd(p)) * Integer(bd(q));
    total += L.dim() * binom(L.dim(), p - 1) * binom(L.dim(), q - 1);
    return total;
}

// ---------------------------------------------------------------------------

SubspaceBasis invariants_in(const LieAlgebra& L, const MonomialBasis& ambient, const SubspaceBasis& space) {
    if (space.ambient_dim() != ambient.size()) throw std::invalid_argument("invariants_in: ambient mismatch");
    const std::size_t r = space.rank();
    std::vector<RatVector> equations;
    for (int g : L.chevalley_generators()) {
        std::map<MonomialKey, std::map<std::uint32_t, Rational>> image;
        for (std::size_t i = 0; i < r; ++i)
            for (const auto& [c, a] : space.rows()[i])
                lie_derivative_terms(L, g, Action::Diagonal, ambient.key(c),
                                     [&](const MonomialKey& k, long v) { image[k][static_cast<std::uint32_t>(i)] += a * v; });
        // Stability: the image of every row must stay in the span.
        std::vector<RatVector> per_row(r);
        for (const auto& [k, cols] : image) {
            long t = ambient.index(k);
            for (const auto& [i, v] : cols) {
                if (v == 0) continue;
                if (t < 0) throw std::invalid_argument("invariants_in: space is not stable under " + L.label(g));
                per_row[i].emplace_back(static_cast<std::uint32_t>(t), v);
            }
        }
        for (auto& v : per_row)
            if (!member(normalize(v), space)) throw std::invalid_argument("invariants_in: space is not stable under " + L.label(g));
        for (const auto& [k, cols] : image) {
            RatVector e;
            for (const auto& [i, v] : cols)
                if (v != 0) e.emplace_back(i, v);
            if (!e.empty()) equations.push_back(std::move(e));
        }
    }
    SubspaceBasis ker = nullspace(r, equations);
    std::vector<RatVector> out;
    for (const auto& kv : ker.rows()) {
        RatVector v;
        for (const auto& [i, a] : kv)
            for (const auto& [c, b] : space.rows()[i]) v.emplace_back(c, a * b);
        out.push_back(normalize(std::move(v)));
    }
    return echelonize(ambient.size(), out);
}

OperatorSlice c_w_operator(const LieAlgebra& L, int d, CwForm form) {
    if (d + 1 < 1 || d + 1 > L.dim()) throw std::invalid_argument("c_w_operator: degree out of range");
    ExteriorIndex idx(L);
    MonomialBasis basis = exterior_basis(idx, d + 1);
    const int n = L.dim();
    // b^i (x) L_a: wedge on the left with the dual basis vector.
    auto wedge_dual = [&](int i, const MonomialKey& k, const Rational& c, std::map<std::uint64_t, Rational>& out) {
        for (const auto& [l, g] : L.dual_basis(i)) {
            if (k.x & bit(l)) continue;
            Rational v = c * g;
            if (flip(detail::bits_below(k.x, l))) v = -v;
            out[k.x | bit(l)] += v;
        }
    };
    return make_operator_slice(basis, basis, [&](const MonomialKey& key) {
        std::map<std::uint64_t, Rational> acc;
        for (int j = 0; j < n; ++j) {
            if (!(key.x & bit(j))) continue;
            const long sc = flip(detail::bits_below(key.x, j)) ? -1 : 1;
            const MonomialKey rest{key.x & ~bit(j), 0};
            for (int i = 0; i < n; ++i) {
                // the derivation L_a, with a = [b_i, b_j] or sum_k c_ijk b^k
                std::vector<std::pair<int, Rational>> a;
                if (form == CwForm::Bracket) {
                    for (const auto& t : L.bracket(i, j)) a.emplace_back(t.index, Rational(t.coeff));
                } else {
                    for (int k = 0; k < n; ++k) {
                        Rational c = L.contracted_structure_constant(i, j, k);
                        if (c == 0) continue;
                        for (const auto& [l, g] : L.dual_basis(k)) a.emplace_back(l, c * g);
                    }
                }
                for (const auto& [t, c] : a)
                    lie_derivative_terms(L, t, Action::X, rest, [&](const MonomialKey& k2, long c2) {
                        wedge_dual(i, k2, c * (sc * c2), acc);
                    });
            }
        }
        Multivector out;
        for (const auto& [m, c] : acc)
            if (c != 0) out.add_term(MonomialKey{m, 0}, c);
        return out;
    });
}

long hom_multiplicity_diagnostic(const RootSystem& rs, const AbelianIdeal& a) {
    ModuleDescriptor m = module_of_ideal(rs, a);
    Character chi = freudenthal_multiplicities(rs, m.highest_weight);
    Character adj = freudenthal_multiplicities(rs, weight_of_root(rs, rs.highest_root()));
    Character dual;
    for (const auto& [w, k] : chi.mults) dual.add(-w, k);
    return invariant_dimension(rs, tensor_product(adj, chi), dual);
}

// ---------------------------------------------------------------------------

struct Verifier::Impl {
    LieAlgebra L;
    Pathway pathway;
    Options opt;
    ExteriorIndex idx;
    std::vector<IntGenerator> mu20, mu11, mu02;
    std::vector<WeightKey> gen_weight;
    int max_ideal = 0;
    std::map<int, std::unique_ptr<BComponent>> bcomp;
    std::map<std::pair<int, int>, Cell> cells;

    // weight-zero data of one bidegree
    struct Zero {
        MonomialBasis basis;  // direct pathway
        std::size_t ambient = 0;
        std::unique_ptr<EchelonBuilder> ideal;
        SubspaceBasis invariants;
        long inv_in_ideal = 0;
    };
    std::map<std::pair<int, int>, Zero> zeros;
    std::vector<Multivector> s_powers;

    // B (x) B block layout at one weight: segments (nu1, nu2 = mu - nu1)
    struct Segment {
        const BComponent::Block* b1;
        const BComponent::Block* b2;
        std::size_t offset;
    };
    struct Layout {
        std::map<WeightKey, Segment> segments;  // keyed by nu1
        std::size_t size = 0;
    };
    std::map<std::tuple<int, int, WeightKey>, Layout> layouts;
    // generator action in B coordinates: (degree, generator, source weight) -> image coords per source row
    std::map<std::tuple<int, int, WeightKey>, std::vector<RatVector>> b_actions;

    Impl(LieAlgebra L_, Pathway p, Options o) : L(std::move(L_)), pathway(p), opt(o), idx(L) {
        IdealGenerators gens = ideal_generators(L);
        for (int k = 0; k < L.dim(); ++k) {
            mu20.push_back(integral(gens.mu20[k]));
            mu11.push_back(integral(gens.mu11[k]));
            mu02.push_back(integral(gens.mu02[k]));
            gen_weight.push_back(weight_key(L.weight(k)));
        }
        for (const auto& a : enumerate_abelian_ideals(L.root_system())) max_ideal = std::max(max_ideal, a.size());
    }

    void log(const std::string& s) const {
        if (opt.log) *opt.log << s << std::endl;
    }

    const BComponent& b(int d) {
        auto it = bcomp.find(d);
        if (it == bcomp.end()) it = bcomp.emplace(d, std::make_unique<BComponent>(L, idx, d)).first;
        return *it->second;
    }

    long b_dim(int d) { return d < 0 || d > max_ideal ? 0 : static_cast<long>(b(d).dimension()); }

    std::vector<long> b_dims() {
        std::vector<long> out;
        for (int d = 0; d <= max_ideal; ++d) out.push_back(b_dim(d));
        return out;
    }

    void guard(int p, int q) {
        if (opt.force) return;
        Integer size = pathway == Pathway::Direct ? direct_slice_size(L, p, q) : btb_slice_size(L, b_dims(), p, q);
        if (size > opt.size_guard) throw SizeGuardError(pathway, p, q, size, opt.size_guard);
    }

    std::vector<WeightKey> dominant_weights(const std::vector<WeightKey>& ws) const {
        std::vector<WeightKey> out;
        for (const auto& w : ws)
            if (weight_of_key(L.root_system(), w).is_dominant()) out.push_back(w);
        return out;
    }

    long orbit_size(const WeightKey& w) const { return static_cast<long>(weyl_orbit(L.root_system(), weight_of_key(L.root_system(), w)).size()); }

    // ---- direct pathway ---------------------------------------------------

    template <class Fn>
    void for_each_ideal_vector(int p, int q, const WeightKey& w, const MonomialBasis& mb, Fn&& fn) const {
        struct Family {
            const std::vector<IntGenerator>* gens;
            int dp, dq;
        };
        const Family fams[] = {{&mu20, 2, 0}, {&mu11, 1, 1}, {&mu02, 0, 2}};
        for (const auto& f : fams) {
            if (p < f.dp || q < f.dq) continue;
            for (int k = 0; k < L.dim(); ++k) {
                for (const auto& m : idx.monomials(p - f.dp, q - f.dq, w - gen_weight[k])) {
                    IntVector v;
                    for (const auto& t : (*f.gens)[k]) {
                        const int s = wedge_sign(t.key, m);
                        if (s == 0) continue;
                        long i = mb.index(MonomialKey{t.key.x | m.x, t.key.y | m.y});
                        v.emplace_back(static_cast<std::uint32_t>(i), s > 0 ? t.c : Integer(-t.c));
                    }
                    if (v.empty()) continue;
                    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                    fn(std::move(v));
                }
            }
        }
    }

    static void fill(EchelonBuilder& eb, const std::function<void(const std::function<void(IntVector)>&)>& produce) {
        // Batched insertion; stops once the block is saturated.
        const std::size_t batch = std::max<std::size_t>(256, 2 * eb.ambient_dim());
        std::vector<IntVector> pending;
        bool full = eb.rank() == eb.ambient_dim();
        struct Stop {};
        try {
            produce([&](IntVector v) {
                if (full) throw Stop{};
                pending.push_back(std::move(v));
                if (pending.size() >= batch) {
                    eb.insert_all(std::move(pending));
                    pending.clear();
                    full = eb.rank() == eb.ambient_dim();
                }
            });
        } catch (const Stop&) {
        }
        if (!pending.empty() && !full) eb.insert_all(std::move(pending));
    }

    std::unique_ptr<EchelonBuilder> direct_ideal_block(int p, int q, const WeightKey& w, const MonomialBasis& mb) const {
        auto eb = std::make_unique<EchelonBuilder>(mb.size());
        fill(*eb, [&](const std::function<void(IntVector)>& sink) { for_each_ideal_vector(p, q, w, mb, sink); });
        return eb;
    }

    SubspaceBasis direct_invariants(int p, int q, const MonomialBasis& mb0) const {
        std::vector<RatVector> rows;
        for (int g : L.chevalley_generators()) {
            MonomialBasis target(idx.monomials(p, q, gen_weight[g]));
            RowCollector rc(target.size());
            for (std::size_t c = 0; c < mb0.size(); ++c)
                lie_derivative_terms(L, g, Action::Diagonal, mb0.key(c), [&](const MonomialKey& k, long v) {
                    rc.add(static_cast<std::size_t>(target.index(k)), static_cast<std::uint32_t>(c), Rational(v));
                });
            rc.append_to(rows);
        }
        return nullspace(mb0.size(), rows);
    }

    // ---- B (x) B pathway ----------------------------------------------------

    const Layout& layout(int p, int q, const WeightKey& mu) {
        auto key = std::make_tuple(p, q, mu);
        if (auto it = layouts.find(key); it != layouts.end()) return it->second;
        Layout lay;
        if (p <= max_ideal && q <= max_ideal) {
            const BComponent& bp = b(p);
            const BComponent& bq = b(q);
            for (const auto& [nu1, blk1] : bp.blocks()) {
                const BComponent::Block* blk2 = bq.block(mu - nu1);
                if (!blk2) continue;
                lay.segments.emplace(nu1, Segment{&blk1, blk2, lay.size});
                lay.size += blk1.basis.rank() * blk2->basis.rank();
            }
        }
        return layouts.emplace(key, std::move(lay)).first->second;
    }

    /// pi_p (x) pi_q of x_P y_Q, accumulated into `acc` at the layout of weight mu.
    void project_term(int p, int q, const Layout& lay, const MonomialKey& key, const Rational& c, std::map<std::uint32_t, Rational>& acc) {
        const RatVector& u = b(p).project(key.x);
        if (u.empty()) return;
        const RatVector& v = b(q).project(key.y);
        if (v.empty()) return;
        auto seg = lay.segments.find(idx.weight_of_mask(key.x));
        if (seg == lay.segments.end()) throw std::logic_error("projection outside the B (x) B layout");
        const std::size_t r2 = seg->second.b2->basis.rank();
        for (const auto& [i, a] : u) {
            Rational ca = c * a;
            for (const auto& [j, bb] : v) acc[static_cast<std::uint32_t>(seg->second.offset + i * r2 + j)] += ca * bb;
        }
    }

    static RatVector collect(const std::map<std::uint32_t, Rational>& acc) {
        RatVector v;
        for (const auto& [i, a] : acc)
            if (a != 0) v.emplace_back(i, a);
        return v;
    }

    std::unique_ptr<EchelonBuilder> btb_ideal_block(int p, int q, const WeightKey& mu) {
        const Layout& lay = layout(p, q, mu);
        auto eb = std::make_unique<EchelonBuilder>(lay.size);
        if (p < 1 || q < 1 || lay.size == 0) return eb;
        fill(*eb, [&](const std::function<void(IntVector)>& sink) {
            for (int k = 0; k < L.dim(); ++k)
                for (const auto& m : idx.monomials(p - 1, q - 1, mu - gen_weight[k])) {
                    std::map<std::uint32_t, Rational> acc;
                    for (const auto& t : mu11[k]) {
                        const int s = wedge_sign(t.key, m);
                        if (s == 0) continue;
                        project_term(p, q, lay, MonomialKey{t.key.x | m.x, t.key.y | m.y}, Rational(s > 0 ? t.c : Integer(-t.c)), acc);
                    }
                    RatVector v = collect(acc);
                    if (!v.empty()) sink(to_primitive(v));
                }
        });
        return eb;
    }

    /// Images of the B[d] basis vectors of weight nu under generator g, in B coordinates.
    const std::vector<RatVector>& b_action(int d, int g, const WeightKey& nu) {
        auto key = std::make_tuple(d, g, nu);
        if (auto it = b_actions.find(key); it != b_actions.end()) return it->second;
        const BComponent& bd = b(d);
        const BComponent::Block* src = bd.block(nu);
        const BComponent::Block* dst = bd.block(nu + gen_weight[g]);
        std::vector<RatVector> out;
        for (std::size_t i = 0; src && i < src->basis.rank(); ++i) {
            std::map<MonomialKey, Rational> img;
            for (const auto& [c, a] : src->basis.rows()[i])
                lie_derivative_terms(L, g, Action::X, src->monomials.key(c), [&](const MonomialKey& k, long v) { img[k] += a * v; });
            RatVector local;
            for (const auto& [k, v] : img) {
                if (v == 0) continue;
                if (!dst) throw std::logic_error("B component is not stable under " + L.label(g));
                local.emplace_back(static_cast<std::uint32_t>(dst->monomials.index(k)), v);
            }
            out.push_back(local.empty() ? RatVector{} : BComponent::coordinates(*dst, normalize(local)));
        }
        return b_actions.emplace(key, std::move(out)).first->second;
    }

    SubspaceBasis btb_invariants(int p, int q) {
        const Layout& src = layout(p, q, WeightKey{});
        std::vector<RatVector> rows;
        for (int g : L.chevalley_generators()) {
            const Layout& dst = layout(p, q, gen_weight[g]);
            RowCollector rc(dst.size);
            for (const auto& [nu1, seg] : src.segments) {
                const WeightKey nu2 = WeightKey{} - nu1;
                const std::size_t r1 = seg.b1->basis.rank(), r2 = seg.b2->basis.rank();
                const auto& a1 = b_action(p, g, nu1);
                const auto& a2 = b_action(q, g, nu2);
                auto t1 = dst.segments.find(nu1 + gen_weight[g]);  // g acts on the first factor
                auto t2 = dst.segments.find(nu1);                  // g acts on the second factor
                for (std::size_t i = 0; i < r1; ++i)
                    for (std::size_t j = 0; j < r2; ++j) {
                        const auto col = static_cast<std::uint32_t>(seg.offset + i * r2 + j);
                        for (const auto& [i2, a] : a1[i]) {
                            if (t1 == dst.segments.end()) throw std::logic_error("B (x) B layout mismatch");
                            rc.add(t1->second.offset + i2 * t1->second.b2->basis.rank() + j, col, a);
                        }
                        for (const auto& [j2, a] : a2[j]) {
                            if (t2 == dst.segments.end()) throw std::logic_error("B (x) B layout mismatch");
                            rc.add(t2->second.offset + i * t2->second.b2->basis.rank() + j2, col, a);
                        }
                    }
            }
            rc.append_to(rows);
        }
        return nullspace(src.size, rows);
    }

    // ---- cells ----------------------------------------------------------------

    Zero& zero(int p, int q) {
        auto key = std::make_pair(p, q);
        if (auto it = zeros.find(key); it != zeros.end()) return it->second;
        guard(p, q);
        Zero z;
        if (pathway == Pathway::Direct) {
            z.basis = MonomialBasis(idx.monomials(p, q, WeightKey{}));
            z.ambient = z.basis.size();
            z.ideal = direct_ideal_block(p, q, WeightKey{}, z.basis);
            z.invariants = direct_invariants(p, q, z.basis);
        } else {
            z.ambient = layout(p, q, WeightKey{}).size;
            z.ideal = btb_ideal_block(p, q, WeightKey{});
            z.invariants = z.ambient ? btb_invariants(p, q) : SubspaceBasis();
        }
        EchelonBuilder joined = *z.ideal;
        long growth = 0;
        for (const auto& row : z.invariants.rows())
            if (joined.insert(to_primitive(row))) ++growth;
        z.inv_in_ideal = static_cast<long>(z.invariants.rank()) - growth;
        return zeros.emplace(key, std::move(z)).first->second;
    }

    Cell weight_zero_cell(int p, int q) {
        Zero& z = zero(p, q);
        Cell c;
        c.p = p;
        c.q = q;
        c.dim_invariants = static_cast<long>(z.invariants.rank());
        c.dim_invariants_in_ideal = z.inv_in_ideal;
        return c;
    }

    Cell full_cell(int p, int q) {
        auto key = std::make_pair(p, q);
        if (auto it = cells.find(key); it != cells.end()) return it->second;
        guard(p, q);
        Cell c = weight_zero_cell(p, q);
        Zero& z = zero(p, q);
        if (pathway == Pathway::Direct) {
            c.dim_ambient = binom(L.dim(), p) * binom(L.dim(), q);
            for (const auto& w : dominant_weights(idx.bidegree_weights(p, q))) {
                long rank;
                if (w.is_zero()) {
                    rank = static_cast<long>(z.ideal->rank());
                } else {
                    MonomialBasis mb(idx.monomials(p, q, w));
                    rank = static_cast<long>(direct_ideal_block(p, q, w, mb)->rank());
                }
                c.dim_ideal += Integer(orbit_size(w)) * rank;
            }
        } else {
            c.dim_ambient = Integer(b_dim(p)) * Integer(b_dim(q));
            std::set<WeightKey> ws;
            if (p <= max_ideal && q <= max_ideal)
                for (const auto& [n1, b1] : b(p).blocks())
                    for (const auto& [n2, b2] : b(q).blocks()) ws.insert(n1 + n2);
            for (const auto& w : dominant_weights({ws.begin(), ws.end()})) {
                long rank = w.is_zero() ? static_cast<long>(z.ideal->rank()) : static_cast<long>(btb_ideal_block(p, q, w)->rank());
                c.dim_ideal += Integer(orbit_size(w)) * rank;
            }
        }
        cells.emplace(key, c);
        return c;
    }

    const Multivector& s_power(int k) {
        if (s_powers.empty()) s_powers.push_back(Multivector::one());
        while (static_cast<int>(s_powers.size()) <= k) s_powers.push_back(wedge(s_powers.back(), s_element(L)));
        return s_powers[k];
    }

    RatVector s_power_vector(int k) {
        const Multivector& s = s_power(k);
        if (pathway == Pathway::Direct) {
            Zero& z = zero(k, k);
            RatVector v;
            for (const auto& [key, c] : s.terms()) v.emplace_back(static_cast<std::uint32_t>(z.basis.index(key)), c);
            return normalize(std::move(v));
        }
        const Layout& lay = layout(k, k, WeightKey{});
        std::map<std::uint32_t, Rational> acc;
        if (lay.size == 0) return {};
        for (const auto& [key, c] : s.terms()) project_term(k, k, lay, key, c, acc);
        return collect(acc);
    }

    bool s_nonzero(int k) {
        RatVector v = s_power_vector(k);
        if (v.empty()) return false;
        return !zero(k, k).ideal->reduce(to_primitive(v)).empty();
    }

    SubspaceBasis full_ideal_slice(int p, int q) {
        guard(p, q);
        std::vector<RatVector> rows;
        std::size_t ambient = 0;
        if (pathway == Pathway::Direct) {
            std::vector<MonomialKey> all;
            for (const auto& w : idx.bidegree_weights(p, q))
                for (const auto& m : idx.monomials(p, q, w)) all.push_back(m);
            std::sort(all.begin(), all.end());
            MonomialBasis global(all);
            ambient = global.size();
            for (const auto& w : idx.bidegree_weights(p, q)) {
                MonomialBasis mb(idx.monomials(p, q, w));
                const SubspaceBasis block = direct_ideal_block(p, q, w, mb)->basis();
                for (const auto& row : block.rows()) {
                    RatVector g;
                    for (const auto& [c, a] : row) g.emplace_back(static_cast<std::uint32_t>(global.index(mb.key(c))), a);
                    rows.push_back(std::move(g));
                }
            }
        } else {
            if (p > max_ideal || q > max_ideal) return SubspaceBasis(0, {});
            // global coordinates: (offset of block in B[p] + i) * dim B[q] + (offset in B[q] + j)
            auto offsets = [&](int d) {
                std::map<WeightKey, std::size_t> off;
                std::size_t s = 0;
                for (const auto& [w, blk] : b(d).blocks()) {
                    off[w] = s;
                    s += blk.basis.rank();
                }
                return off;
            };
            auto op = offsets(p), oq = offsets(q);
            const std::size_t dq = b(q).dimension();
            ambient = b(p).dimension() * dq;
            std::set<WeightKey> ws;
            for (const auto& [n1, b1] : b(p).blocks())
                for (const auto& [n2, b2] : b(q).blocks()) ws.insert(n1 + n2);
            for (const auto& w : ws) {
                const Layout& lay = layout(p, q, w);
                std::vector<std::pair<std::size_t, WeightKey>> starts;
                for (const auto& [n1, seg] : lay.segments) starts.emplace_back(seg.offset, n1);
                const SubspaceBasis block = btb_ideal_block(p, q, w)->basis();
                for (const auto& row : block.rows()) {
                    RatVector g;
                    for (const auto& [c, a] : row) {
                        auto it = std::upper_bound(starts.begin(), starts.end(), std::make_pair(std::size_t{c}, WeightKey{}),
                                                   [](const auto& x, const auto& y) { return x.first < y.first; });
                        --it;
                        const auto& seg = lay.segments.at(it->second);
                        const std::size_t local = c - seg.offset, r2 = seg.b2->basis.rank();
                        const std::size_t gi = op.at(it->second) + local / r2, gj = oq.at(w - it->second) + local % r2;
                        g.emplace_back(static_cast<std::uint32_t>(gi * dq + gj), a);
                    }
                    rows.push_back(std::move(g));
                }
            }
        }
        std::sort(rows.begin(), rows.end(), [](const RatVector& a, const RatVector& b) { return a.front().first < b.front().first; });
        return SubspaceBasis(ambient, std::move(rows));
    }
};

Verifier::Verifier(LieAlgebra L, Pathway pathway, Options opt) : impl_(std::make_unique<Impl>(std::move(L), pathway, opt)) {}
Verifier::~Verifier() = default;
const LieAlgebra& Verifier::algebra() const { return impl_->L; }
const ExteriorIndex& Verifier::index() const { return impl_->idx; }
Pathway Verifier::pathway() const { return impl_->pathway; }
Verifier::Cell Verifier::cell(int p, int q) { return impl_->full_cell(p, q); }
Verifier::Cell Verifier::cell_weight_zero(int p, int q) { return impl_->weight_zero_cell(p, q); }
bool Verifier::s_power_nonzero(int k) { return impl_->s_nonzero(k); }
bool Verifier::s_projection_nonzero(int k) {
    if (impl_->pathway != Pathway::BTensorB) throw std::logic_error("s_projection_nonzero: b_tensor_b pathway only");
    return !impl_->s_power_vector(k).empty();
}
SubspaceBasis Verifier::ideal_slice(int p, int q) { return impl_->full_ideal_slice(p, q); }
const BComponent& Verifier::b(int d) { return impl_->b(d); }
std::vector<long> Verifier::b_dimensions() { return impl_->b_dims(); }

SubspaceBasis ideal_slice(const LieAlgebra& L, int p, int q, Pathway pathway, const Options& opt) {
    return Verifier(L, pathway, opt).ideal_slice(p, q);
}

bool s_power_status(const LieAlgebra& L, int k, Pathway pathway, const Options& opt) {
    if (k < 0) throw std::invalid_argument("s_power_status: negative power");
    return Verifier(L, pathway, opt).s_power_nonzero(k);
}

LemmaCheck lemma_check(const LieAlgebra& L, int d) {
    LemmaCheck r;
    r.d = d;
    SubspaceBasis b = b_component(L, d + 1);
    r.b_dimension = static_cast<long>(b.rank());
    const SubspaceBasis ker = nullspace(kernel_map(L, d));
    r.kernel_contains_b = std::all_of(b.rows().begin(), b.rows().end(), [&](const RatVector& v) { return member(v, ker); });
    r.kernel_equals_b = ker.rows() == b.rows();
    OperatorSlice cw = c_w_operator(L, d);
    r.c_w_vanishes = true;
    for (const auto& row : b.rows()) {
        std::vector<Rational> v(cw.source.size(), 0);
        for (const auto& [c, a] : row) v[c] = a;
        for (const auto& x : cw.apply(v))
            if (x != 0) r.c_w_vanishes = false;
        if (!r.c_w_vanishes) break;
    }
    return r;
}

// ---------------------------------------------------------------------------

bool VerificationReport::all_pass() const {
    return verdicts.generation && verdicts.s_power_vanishing && verdicts.s_power_nonvanishing && verdicts.diagonal_concentration && verdicts.lemma;
}

std::string VerificationReport::to_json(bool include_timings) const {
    using nlohmann::ordered_json;
    const RootSystem rs = build_root_system(type);
    ordered_json j;
    j["schema_version"] = 1;
    j["type"] = type.name();
    j["pathway"] = to_string(pathway);
    j["dual_coxeter_number"] = std::to_string(dual_coxeter);
    j["max_bidegree"] = max_bidegree;
    ordered_json mods = ordered_json::array();
    for (const auto& m : modules) {
        ordered_json roots = ordered_json::array();
        for (int r : m.ideal.roots) roots.push_back(root_label(rs.positive_roots()[r]));
        mods.push_back({{"ideal", roots},
                        {"highest_weight", weight_label(m.highest_weight)},
                        {"dimension", std::to_string(m.dimension)},
                        {"degree", m.degree},
                        {"casimir_eigenvalue", to_string(m.casimir_eigenvalue)}});
    }
    j["modules"] = mods;
    ordered_json bd = ordered_json::array();
    for (long d : b_dimensions) bd.push_back(std::to_string(d));
    j["b_dimensions"] = bd;
    ordered_json t = ordered_json::array();
    for (const auto& c : tables)
        t.push_back({{"p", c.p},
                     {"q", c.q},
                     {"dim_ambient", c.dim_ambient.get_str()},
                     {"dim_ideal", c.dim_ideal.get_str()},
                     {"dim_invariants", std::to_string(c.dim_invariants)},
                     {"dim_invariants_in_ideal", std::to_string(c.dim_invariants_in_ideal)}});
    j["tables"] = t;
    ordered_json sp = ordered_json::array();
    for (const auto& s : s_powers) {
        ordered_json e{{"k", s.k}, {"nonzero", s.nonzero}};
        if (s.projection_nonzero) e["projection_nonzero"] = *s.projection_nonzero;
        sp.push_back(e);
    }
    j["s_powers"] = sp;
    ordered_json lm = ordered_json::array();
    for (const auto& l : lemma)
        lm.push_back({{"d", l.d},
                      {"holds", l.holds()},
                      {"c_w_vanishes", l.c_w_vanishes},
                      {"kernel_contains_b", l.kernel_contains_b},
                      {"kernel_equals_b", l.kernel_equals_b},
                      {"b_dimension", std::to_string(l.b_dimension)}});
    j["lemma"] = lm;
    ordered_json hd = ordered_json::array();
    for (const auto& h : hom_diagnostics)
        hd.push_back({{"ideal", h.ideal}, {"degree", h.degree}, {"adjoint_multiplicity", std::to_string(h.multiplicity)}});
    j["hom_diagnostics"] = hd;
    j["verdicts"] = {{"generation", verdicts.generation},
                     {"s_power_vanishing", verdicts.s_power_vanishing},
                     {"s_power_nonvanishing", verdicts.s_power_nonvanishing},
                     {"diagonal_concentration", verdicts.diagonal_concentration},
                     {"lemma", verdicts.lemma}};
    if (include_timings) {
        ordered_json tm;
        for (const auto& [k, v] : timings) tm[k] = v;
        j["timings_seconds"] = tm;
    }
    return j.dump(2) + "\n";
}

void VerificationReport::print(std::ostream& out) const {
    const RootSystem rs = build_root_system(type);
    auto yes = [](bool b) { return b ? "pass" : "FAIL"; };
    out << "type " << type.name() << ", pathway " << to_string(pathway) << ", dual Coxeter number " << dual_coxeter << "\n\n";
    out << "abelian ideals and modules of B\n";
    for (std::size_t i = 0; i < modules.size(); ++i) {
        const auto& m = modules[i];
        std::string roots;
        for (int r : m.ideal.roots) roots += (roots.empty() ? "" : ", ") + root_label(rs.positive_roots()[r]);
        out << "  a" << i << "  {" << roots << "}  V(" << weight_label(m.highest_weight) << ")  dim " << m.dimension << "  degree "
            << m.degree << "\n";
    }
    out << "\n   p  q  " << std::setw(12) << "ambient" << std::setw(12) << "ideal" << std::setw(6) << "inv" << std::setw(10) << "in ideal"
        << std::setw(6) << "A^g" << "\n";
    for (const auto& c : tables)
        out << "  " << std::setw(2) << c.p << " " << std::setw(2) << c.q << "  " << std::setw(12) << c.dim_ambient.get_str() << std::setw(12)
            << c.dim_ideal.get_str() << std::setw(6) << c.dim_invariants << std::setw(10) << c.dim_invariants_in_ideal << std::setw(6)
            << c.quotient_invariants() << "\n";
    out << "\npowers of S in A:";
    for (const auto& s : s_powers) {
        out << "  S^" << s.k << (s.nonzero ? " != 0" : " = 0");
        if (s.projection_nonzero) out << (*s.projection_nonzero ? " (projection != 0)" : " (projection = 0)");
    }
    out << "\nlemma (C_w vanishes on B[d+1], B[d+1] inside ker K):";
    for (const auto& l : lemma) out << "  d=" << l.d << " " << yes(l.holds()) << (l.kernel_equals_b ? " (ker K = B)" : " (ker K > B)");
    out << "\nadjoint multiplicity in End(V_a):";
    for (const auto& h : hom_diagnostics) out << "  a" << h.ideal << ":" << h.multiplicity;
    out << "\n\nverdicts\n";
    out << "  generation by S              " << yes(verdicts.generation) << "\n";
    out << "  S^g = 0                      " << yes(verdicts.s_power_vanishing) << "\n";
    out << "  S^(g-1) != 0                 " << yes(verdicts.s_power_nonvanishing) << "\n";
    out << "  invariants only in (d,d)     " << yes(verdicts.diagonal_concentration) << "\n";
    out << "  lemma                        " << yes(verdicts.lemma) << "\n";
    if (!timings.empty()) {
        out << "\ntimings (s):";
        for (const auto& [k, v] : timings) out << "  " << k << " " << std::fixed << std::setprecision(2) << v;
        out << "\n";
        out.unsetf(std::ios::fixed);
    }
}

VerificationReport verify_conjecture(CartanType type, Pathway pathway, const Options& opt) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto lap = [&](VerificationReport& r, const std::string& name) {
        auto now = clock::now();
        r.timings.emplace_back(name, std::chrono::duration<double>(now - t0).count());
        t0 = now;
    };

    type.validate();
    VerificationReport r;
    r.type = type;
    r.pathway = pathway;
    Verifier v(load_or_build_algebra(type), pathway, opt);
    const LieAlgebra& L = v.algebra();
    const RootSystem& rs = L.root_system();
    const int g = dual_coxeter_number(rs);
    r.dual_coxeter = g;
    r.max_bidegree = opt.max_bidegree < 0 ? g : opt.max_bidegree;
    const int N = r.max_bidegree;

    const auto ideals = enumerate_abelian_ideals(rs);
    for (const auto& a : ideals) r.modules.push_back(module_of_ideal(rs, a));
    lap(r, "setup");

    if (!opt.force) {
        std::vector<long> bd = pathway == Pathway::BTensorB ? v.b_dimensions() : std::vector<long>{};
        for (int p = 0; p <= std::max(N, g); ++p)
            for (int q = 0; q <= std::max(N, g); ++q) {
                if ((p > N || q > N) && p != q) continue;
                Integer s = pathway == Pathway::Direct ? direct_slice_size(L, p, q) : btb_slice_size(L, bd, p, q);
                if (s > opt.size_guard) throw SizeGuardError(pathway, p, q, s, opt.size_guard);
            }
    }
    r.b_dimensions = v.b_dimensions();
    lap(r, "b_components");

    std::vector<Character> ext;
    for (int d = 0; d <= N; ++d) ext.push_back(character_of_exterior_power(L, d));
    std::vector<Character> bchar(N + 1);
    for (int d = 0; d <= N; ++d)
        for (const auto& m : r.modules)
            if (m.degree == d) bchar[d] += freudenthal_multiplicities(rs, m.highest_weight);

    for (int p = 0; p <= N; ++p)
        for (int q = 0; q <= N; ++q) {
            if (opt.log) *opt.log << "cell (" << p << "," << q << ")" << std::endl;
            Verifier::Cell c = v.cell(p, q);
            // character oracle for the invariants of the ambient slice
            long oracle;
            if (pathway == Pathway::Direct) {
                oracle = invariant_dimension(rs, ext[p], ext[q]);
            } else {
                oracle = bchar[p].mults.empty() || bchar[q].mults.empty() ? 0 : invariant_dimension(rs, bchar[p], bchar[q]);
            }
            if (oracle != c.dim_invariants)
                throw std::logic_error("invariant dimension at (" + std::to_string(p) + "," + std::to_string(q) + ") is " +
                                       std::to_string(c.dim_invariants) + ", characters give " + std::to_string(oracle));
            r.tables.push_back(c);
        }
    lap(r, "tables");

    for (int k = 0; k <= g; ++k) {
        VerificationReport::SPower s{k, v.s_power_nonzero(k), std::nullopt};
        if (pathway == Pathway::BTensorB) s.projection_nonzero = v.s_projection_nonzero(k);
        r.s_powers.push_back(s);
    }
    lap(r, "s_powers");

    int max_ideal = 0;
    for (const auto& a : ideals) max_ideal = std::max(max_ideal, a.size());
    for (int d = 0; d + 1 <= max_ideal; ++d) r.lemma.push_back(lemma_check(L, d));
    for (std::size_t i = 0; i < ideals.size(); ++i)
        r.hom_diagnostics.push_back({static_cast<int>(i), ideals[i].size(), hom_multiplicity_diagnostic(rs, ideals[i])});
    lap(r, "lemma");

    auto& vd = r.verdicts;
    vd.diagonal_concentration = true;
    vd.generation = true;
    for (const auto& c : r.tables) {
        if (c.p != c.q) {
            if (c.quotient_invariants() != 0) vd.diagonal_concentration = false;
        } else if (c.quotient_invariants() != (c.p < g ? 1 : 0)) {
            vd.generation = false;
        }
    }
    for (const auto& s : r.s_powers)
        if (s.k < g && s.k <= N && !s.nonzero) vd.generation = false;
    vd.s_power_vanishing = !r.s_powers[g].nonzero;
    vd.s_power_nonvanishing = r.s_powers[g - 1].nonzero;
    vd.lemma = std::all_of(r.lemma.begin(), r.lemma.end(), [](const LemmaCheck& l) { return l.holds(); });
    return r;
}

}  // namespace cdsw
