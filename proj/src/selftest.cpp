#include "cdsw/selftest.hpp"

#include "cdsw/cdsw_verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

namespace cdsw {
namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

const std::vector<std::string> kSmall = {"A1", "A2", "B2", "G2"};

LieAlgebra algebra(const std::string& t) { return load_or_build_algebra(parse_cartan_type(t)); }

class Random {
public:
    explicit Random(unsigned long seed) : rng_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Rational coefficient() {
        int n = 0;
        while (n == 0) n = uniform(-4, 4);
        return make_rational(n, uniform(1, 3));
    }
    std::uint64_t subset(int n, int k) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng_);
        std::uint64_t m = 0;
        for (int i = 0; i < k; ++i) m |= std::uint64_t{1} << idx[i];
        return m;
    }
    Multivector homogeneous(int n, int p, int q, int terms) {
        Multivector u;
        for (int t = 0; t < terms; ++t) u.add_term(MonomialKey{subset(n, p), subset(n, q)}, coefficient());
        return u;
    }
    std::vector<Rational> vector(int n) {
        std::vector<Rational> v(n, 0);
        for (int t = 0; t < 3; ++t) v[uniform(0, n - 1)] = coefficient();
        return v;
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// ---- suites -------------------------------------------------------------------

std::string suite_jacobi(const SelftestOptions& opt, Random& rnd) {
    std::ostringstream note;
    const std::vector<std::string> big = {"A3", "B3", "C3", "A4", "B4", "C4", "D4"};
    auto check = [&](const LieAlgebra& L, int i, int j, int k) {
        for (const auto& c : jacobi_sum(L, i, j, k)) require(c == 0, "Jacobi identity fails for " + L.root_system().type().name());
        require(form_invariance_defect(L, i, j, k) == 0, "form not invariant for " + L.root_system().type().name());
    };
    for (const auto& t : kSmall) {
        LieAlgebra L = algebra(t);
        const int n = L.dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                AlgebraElement a(n, 0), b(n, 0);
                for (const auto& x : L.bracket(i, j)) a[x.index] += x.coeff;
                for (const auto& x : L.bracket(j, i)) b[x.index] -= x.coeff;
                require(a == b, "bracket not antisymmetric for " + t);
                for (int k = 0; k < n; ++k) check(L, i, j, k);
            }
        require(L.gram_matrix() * L.gram_inverse_matrix() == RationalMatrix::identity(n), "gram matrix inverse wrong for " + t);
        note << t << " exhaustive; ";
    }
    const int samples = opt.full ? 100000 : 10000;
    for (const auto& t : big) {
        LieAlgebra L = algebra(t);
        const int n = L.dim();
        for (int s = 0; s < samples; ++s) check(L, rnd.uniform(0, n - 1), rnd.uniform(0, n - 1), rnd.uniform(0, n - 1));
        note << t << " " << samples << " triples; ";
    }
    return note.str();
}

std::string suite_casimir(const SelftestOptions&, Random&) {
    const std::map<std::string, int> table = {{"A1", 2}, {"A2", 3}, {"A3", 4}, {"A4", 5}, {"B2", 3}, {"B3", 5},
                                              {"B4", 7}, {"C3", 4}, {"C4", 5}, {"D4", 6}, {"G2", 4}};
    for (const auto& [t, h] : table) require(dual_coxeter_number(build_root_system(parse_cartan_type(t))) == h, "dual Coxeter number of " + t);
    for (const auto& t : kSmall) {
        LieAlgebra L = algebra(t);
        std::vector<RationalMatrix> ad;
        for (int i = 0; i < L.dim(); ++i) ad.push_back(L.adjoint_matrix(i));
        RationalMatrix c = casimir_operator(L, ad);
        require(c == RationalMatrix::identity(L.dim()), "adjoint Casimir is not the identity for " + t);
        // On wedge^2 the Casimir commutes with every generator.
        OperatorSlice c2 = casimir_on_exterior(L, 2);
        MonomialBasis basis = c2.source;
        for (int g : L.chevalley_generators()) {
            OperatorSlice lg = make_operator_slice(basis, basis, [&](const MonomialKey& k) {
                return lie_derivative(L, L.basis_vector(g), Action::X, Multivector::monomial(k));
            });
            for (std::size_t col = 0; col < basis.size(); ++col) {
                std::vector<Rational> e(basis.size(), 0);
                e[col] = 1;
                require(c2.apply(lg.apply(e)) == lg.apply(c2.apply(e)), "Casimir does not commute with " + L.label(g) + " for " + t);
            }
        }
    }
    return "dual Coxeter table, adjoint Casimir = 1, [C, L_a] = 0 on wedge^2";
}

std::string suite_derivations(const SelftestOptions& opt, Random& rnd) {
    const int cases = opt.full ? 3000 : 1000;
    for (const auto& t : kSmall) {
        LieAlgebra L = algebra(t);
        const int n = L.dim();
        for (int c = 0; c < cases; ++c) {
            const int p1 = rnd.uniform(0, 2), q1 = rnd.uniform(0, 2), p2 = rnd.uniform(0, 2), q2 = rnd.uniform(0, 2);
            Multivector u = rnd.homogeneous(n, p1, q1, rnd.uniform(1, 3));
            Multivector v = rnd.homogeneous(n, p2, q2, rnd.uniform(1, 3));
            Multivector w = rnd.homogeneous(n, rnd.uniform(0, 1), rnd.uniform(0, 1), 2);
            const AlgebraElement a = rnd.vector(n);
            const AlgebraElement b = rnd.vector(n);
            const std::vector<Rational> xi = rnd.vector(n);
            const Action act = static_cast<Action>(rnd.uniform(0, 2));
            const Copy copy = rnd.uniform(0, 1) ? Copy::X : Copy::Y;

            require(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)), "wedge not associative");
            if (c % 4 == 0) {
                const int du = p1 + q1, dv = p2 + q2;
                Multivector sw = wedge(v, u);
                if ((du * dv) % 2) sw *= -1;
                require(wedge(u, v) == sw, "graded commutativity fails");
            }
            Multivector uv = wedge(u, v);
            require(lie_derivative(L, a, act, uv) == wedge(lie_derivative(L, a, act, u), v) + wedge(u, lie_derivative(L, a, act, v)),
                    "Lie derivative is not a derivation for " + t);
            Multivector iu = wedge(contraction(xi, copy, u), v);
            Multivector iv = wedge(u, contraction(xi, copy, v));
            if ((p1 + q1) % 2) iv *= -1;
            require(contraction(xi, copy, uv) == iu + iv, "contraction is not an odd derivation for " + t);
            require(contraction(xi, copy, contraction(xi, copy, uv)).is_zero(), "contraction does not square to zero");
            // I_xi W_v + W_v I_xi = xi(v)
            Multivector vec = Multivector::vector(copy, b);
            Rational pairing = 0;
            for (int i = 0; i < n; ++i) pairing += xi[i] * b[i];
            require(contraction(xi, copy, wedge(vec, u)) + wedge(vec, contraction(xi, copy, u)) == u * pairing, "I W + W I != xi(v)");
            // L_[a,b] = [L_a, L_b]
            Multivector lhs = lie_derivative(L, L.bracket(a, b), act, u);
            Multivector rhs = lie_derivative(L, a, act, lie_derivative(L, b, act, u)) - lie_derivative(L, b, act, lie_derivative(L, a, act, u));
            require(lhs == rhs, "L is not a representation for " + t);
        }
    }
    return std::to_string(cases) + " random cases per type";
}

std::string suite_signs(const SelftestOptions&, Random& rnd) {
    // Independent oracle: concatenate the factor lists and count inversions in
    // the order (copy, index).
    auto oracle = [](const MonomialKey& a, const MonomialKey& b) {
        if ((a.x & b.x) || (a.y & b.y)) return 0;
        std::vector<std::pair<int, int>> seq;
        for (const auto* k : {&a, &b}) {
            for (int i = 0; i < 64; ++i)
                if (k->x >> i & 1) seq.emplace_back(0, i);
            for (int i = 0; i < 64; ++i)
                if (k->y >> i & 1) seq.emplace_back(1, i);
        }
        int inv = 0;
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j)
                if (seq[j] < seq[i]) ++inv;
        return inv % 2 ? -1 : 1;
    };
    for (int c = 0; c < 5000; ++c) {
        const int n = rnd.uniform(2, 20);
        MonomialKey a{rnd.subset(n, rnd.uniform(0, n / 2)), rnd.subset(n, rnd.uniform(0, n / 2))};
        MonomialKey b{rnd.subset(n, rnd.uniform(0, n / 2)), rnd.subset(n, rnd.uniform(0, n / 2))};
        require(wedge_sign(a, b) == oracle(a, b), "wedge_sign disagrees with the permutation oracle");
    }
    require(wedge(Multivector::generator(Copy::X, 1), Multivector::generator(Copy::Y, 1)) == Multivector::monomial(MonomialKey{2, 2}),
            "x_1 y_1 is not the canonical monomial");
    return "5000 random monomial pairs";
}

std::string suite_characters(const SelftestOptions& opt, Random&) {
    std::vector<std::pair<std::string, int>> plan = {{"A1", -1}, {"A2", -1}, {"B2", -1}, {"G2", -1}, {"A3", 4}, {"B3", 3}, {"C3", 3}};
    if (opt.full) plan.insert(plan.end(), {{"A4", 3}, {"D4", 3}});
    for (const auto& [t, cap] : plan) {
        LieAlgebra L = algebra(t);
        const RootSystem& rs = L.root_system();
        const int top = cap < 0 ? L.dim() : cap;
        for (int d = 0; d <= top; ++d) {
            Character ch = character_of_exterior_power(L, d);
            Character rebuilt;
            long mass = 0;
            for (const auto& iso : decompose(rs, ch)) {
                Character irr = freudenthal_multiplicities(rs, iso.highest_weight);
                require(irr.dimension() == weyl_dimension(rs, iso.highest_weight), "Weyl dimension differs from Freudenthal mass for " + t);
                rebuilt += irr.scaled(iso.multiplicity);
                mass += iso.multiplicity * irr.dimension();
            }
            require(rebuilt == ch, "decomposition does not reconstruct wedge^" + std::to_string(d) + " of " + t);
            require(mass == ch.dimension(), "decomposition mass mismatch");
        }
        Character adj = adjoint_character(L);
        require(invariant_dimension(rs, adj, adj) == 1, "adjoint has more than one invariant pairing for " + t);
        Character e2 = character_of_exterior_power(L, 2);
        require(invariant_dimension(rs, adj, e2) == invariant_dimension(rs, e2, adj), "invariant_dimension not symmetric for " + t);
    }
    return "wedge^d decompositions rebuilt exactly";
}

std::string suite_echelon(const SelftestOptions&, Random& rnd) {
    for (int c = 0; c < 60; ++c) {
        const int rows = rnd.uniform(1, 25), cols = rnd.uniform(1, 30);
        std::vector<RatVector> m;
        for (int r = 0; r < rows; ++r) {
            RatVector v;
            for (int j = 0; j < cols; ++j)
                if (rnd.uniform(0, 3) == 0) v.emplace_back(j, rnd.coefficient());
            m.push_back(v);
        }
        // Duplicate some rows as combinations to force dependencies.
        if (rows > 2)
            for (int k = 0; k < 3; ++k) {
                RatVector v = m[rnd.uniform(0, rows - 1)];
                for (const auto& e : m[rnd.uniform(0, rows - 1)]) v.push_back(e);
                m.push_back(normalize(v));
            }
        SubspaceBasis b = echelonize(cols, m);
        auto shuffled = m;
        std::shuffle(shuffled.begin(), shuffled.end(), rnd.engine());
        for (auto& v : shuffled)
            for (auto& [j, a] : v) a *= make_rational(-7, 3);
        SubspaceBasis b2 = echelonize(cols, shuffled);
        require(b.rows() == b2.rows() && b.pivots() == b2.pivots(), "echelon form depends on row order or scaling");
        require(echelonize(cols, m).rows() == b.rows(), "echelonize is not deterministic");
        for (std::size_t i = 1; i < b.pivots().size(); ++i) require(b.pivots()[i - 1] < b.pivots()[i], "pivots not increasing");
        SubspaceBasis ker = nullspace(cols, m);
        require(ker.rank() + b.rank() == static_cast<std::size_t>(cols), "rank + nullity != columns");
        for (const auto& k : ker.rows()) {
            for (const auto& row : m) {
                Rational dot = 0;
                std::size_t a = 0, z = 0;
                while (a < row.size() && z < k.size()) {
                    if (row[a].first < k[z].first) ++a;
                    else if (k[z].first < row[a].first) ++z;
                    else dot += row[a++].second * k[z++].second;
                }
                require(dot == 0, "nullspace vector not annihilated");
            }
        }
        SubspaceBasis i = intersect(b, ker);
        require(static_cast<long>(i.rank()) >= static_cast<long>(b.rank() + ker.rank()) - cols, "intersection below the dimension bound");
        for (const auto& v : i.rows()) require(member(v, b) && member(v, ker), "intersection leaves an operand");
        require(intersect(b, b).rows() == b.rows(), "B cap B != B");
    }
    return "60 random sparse systems";
}

std::string suite_generators(const SelftestOptions&, Random&) {
    for (const auto& t : kSmall) {
        LieAlgebra L = algebra(t);
        ExteriorIndex idx(L);
        IdealGenerators gens = ideal_generators(L);
        const std::pair<const std::vector<Multivector>*, std::pair<int, int>> fams[] = {
            {&gens.mu20, {2, 0}}, {&gens.mu11, {1, 1}}, {&gens.mu02, {0, 2}}};
        Multivector s = s_element(L);
        require(s.is_homogeneous(1, 1), "S is not of bidegree (1,1)");
        for (const auto& [fam, pq] : fams) {
            std::vector<MonomialKey> keys;
            for (const auto& w : idx.bidegree_weights(pq.first, pq.second))
                for (const auto& k : idx.monomials(pq.first, pq.second, w)) keys.push_back(k);
            std::sort(keys.begin(), keys.end());
            MonomialBasis mb(keys);
            auto coords = [&](const Multivector& m) {
                RatVector v;
                for (const auto& [k, c] : m.terms()) v.emplace_back(static_cast<std::uint32_t>(mb.index(k)), c);
                return normalize(v);
            };
            std::vector<RatVector> span;
            for (const auto& m : *fam) span.push_back(coords(m));
            SubspaceBasis sb = echelonize(mb.size(), span);
            require(sb.rank() == static_cast<std::size_t>(L.dim()), "generator family is not a copy of g for " + t);
            for (int g : L.chevalley_generators())
                for (const auto& m : *fam)
                    require(member(coords(lie_derivative(L, L.basis_vector(g), Action::Diagonal, m)), sb), "generators not closed under L for " + t);
        }
        for (int g : L.chevalley_generators())
            require(lie_derivative(L, L.basis_vector(g), Action::Diagonal, s).is_zero(), "S is not invariant for " + t);
    }
    return "three copies of g closed under the diagonal action; S invariant";
}

std::string suite_kostant(const SelftestOptions&, Random&) {
    for (const std::string t : {"A1", "A2", "B2", "G2", "A3"}) {
        LieAlgebra L = algebra(t);
        const RootSystem& rs = L.root_system();
        ExteriorIndex idx(L);
        const auto ideals = enumerate_abelian_ideals(rs);
        int top = 0;
        long total = 0;
        for (const auto& a : ideals) {
            ModuleDescriptor m = module_of_ideal(rs, a);
            total += m.dimension;
            top = std::max(top, a.size());
            Multivector va = ideal_vector(L, a);
            Multivector cv;
            for (const auto& [k, c] : va.terms()) cv += casimir_image(L, k) * c;
            require(cv == va * Rational(a.size()), "(C - |a|) v_a != 0 for " + t);
        }
        long sum = 0;
        for (int d = 0; d <= top + 1; ++d) {
            BComponent b(L, idx, d);
            sum += static_cast<long>(b.dimension());
            for (const auto& [w, blk] : b.blocks())
                for (int g : L.chevalley_generators()) {
                    const BComponent::Block* dst = b.block(w + idx.basis_weight(g));
                    for (const auto& row : blk.basis.rows()) {
                        Multivector img = lie_derivative(L, L.basis_vector(g), Action::X, BComponent::element(blk, [&] {
                            RatVector e;
                            e.emplace_back(static_cast<std::uint32_t>(&row - blk.basis.rows().data()), 1);
                            return e;
                        }()));
                        if (img.is_zero()) continue;
                        require(dst != nullptr, "B[d] not stable for " + t);
                        RatVector v;
                        for (const auto& [k, c] : img.terms()) v.emplace_back(static_cast<std::uint32_t>(dst->monomials.index(k)), c);
                        require(member(normalize(v), dst->basis), "B[d] not stable for " + t);
                    }
                }
            if (d >= 1 && d <= top + 1) require(nullspace(kernel_map(L, d - 1)).rows() == b.subspace(idx).rows(), "kernel map does not cut out B[d] for " + t);
        }
        require(sum == total, "sum of dim B[d] differs from the sum of the modules for " + t);
    }
    return "Casimir on v_a, stability of B[d], kernel map, total dimension";
}

}  // namespace

std::vector<SelftestResult> run_selftest(const SelftestOptions& opt, std::ostream* log) {
    using Suite = std::function<std::string(const SelftestOptions&, Random&)>;
    const std::vector<std::pair<std::string, Suite>> suites = {
        {"jacobi_form_sweep", suite_jacobi},       {"casimir", suite_casimir},     {"derivation_laws", suite_derivations},
        {"monomial_signs", suite_signs},           {"decompose_reconstruct", suite_characters},
        {"echelon_determinism", suite_echelon},    {"ideal_generators", suite_generators},
        {"kostant_b", suite_kostant}};
    std::vector<SelftestResult> out;
    for (const auto& [name, fn] : suites) {
        Random rnd(opt.seed);
        SelftestResult r;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = fn(opt, rnd);
            r.pass = true;
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (log) *log << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")" << std::endl;
        out.push_back(r);
    }
    return out;
}

}  // namespace cdsw
