#include "cdsw/lie_algebra.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cdsw {
namespace {

constexpr const char* kFormatHeader = "cdsw-structure-constants 1";

std::string coords_label(const RootCoords& r) {
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s;
}

// Structure constants N_{r,s} over the full root list: index a < N is the
// positive root a, index N + a is its negative.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs) : rs_(rs), np_(rs.num_positive()) {}

    RootCoords coords(int idx) const {
        if (idx < np_) return rs_.positive_roots()[idx];
        RootCoords r = rs_.positive_roots()[idx - np_];
        for (int& c : r) c = -c;
        return r;
    }
    std::optional<int> index_of(const RootCoords& r) const {
        if (auto p = rs_.positive_index(r)) return *p;
        RootCoords neg = r;
        for (int& c : neg) c = -c;
        if (auto p = rs_.positive_index(neg)) return *p + np_;
        return std::nullopt;
    }
    int negate(int idx) const { return idx < np_ ? idx + np_ : idx - np_; }
    bool positive(int idx) const { return idx < np_; }

    std::optional<int> sum(int r, int s) const {
        RootCoords a = coords(r), b = coords(s);
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return index_of(a);
    }

    int string_length(int r, int s) const {
        // Largest p with s - p r a root.
        RootCoords a = coords(r), b = coords(s);
        int p = 0;
        while (true) {
            RootCoords c = b;
            for (size_t i = 0; i < c.size(); ++i) c[i] -= (p + 1) * a[i];
            if (!index_of(c)) return p;
            ++p;
        }
    }

    Rational norm(int r) const {
        RootCoords c = coords(r);
        return rs_.inner(c, c);
    }

    std::pair<int, int> extraspecial(int gamma) const {
        for (int a = 0; a < np_; ++a) {
            if (auto b = sum(gamma, negate(a)); b && positive(*b)) return {a, *b};
        }
        throw std::logic_error("no extraspecial pair for a simple root");
    }

    long N(int r, int s) {
        auto key = std::make_pair(r, s);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        long v = compute(r, s);
        memo_[key] = v;
        return v;
    }

private:
    long compute(int r, int s) {
        auto gamma = sum(r, s);
        if (!gamma) throw std::logic_error("N requested for a non-root sum");
        if (positive(r) && positive(s)) {
            auto [a, b] = extraspecial(*gamma);
            if (r == a && s == b) return string_length(a, b) + 1;
            if (r == b && s == a) return -(string_length(a, b) + 1);
            // Four-root relation with t = -a, u = -b and r + s + t + u = 0.
            const int t = negate(a), u = negate(b);
            Rational acc = 0;
            if (auto st = sum(s, t)) acc += Rational(N(s, t) * N(r, u)) / norm(*st);
            if (auto tr = sum(t, r)) acc += Rational(N(t, r) * N(s, u)) / norm(*tr);
            const long ntu = -(string_length(a, b) + 1);
            Rational v = -acc * norm(*gamma) / ntu;
            if (!is_integer(v)) throw std::logic_error("non-integral structure constant");
            return v.get_num().get_si();
        }
        if (!positive(r) && !positive(s)) return -N(negate(r), negate(s));
        // Mixed signs: rotate r + s + t = 0 to a same-sign pair.
        const int t = negate(*gamma);
        Rational v;
        if (positive(s) == positive(t))
            v = norm(t) / norm(r) * N(s, t);
        else
            v = norm(t) / norm(s) * N(t, r);
        if (!is_integer(v)) throw std::logic_error("non-integral structure constant");
        return v.get_num().get_si();
    }

    const RootSystem& rs_;
    int np_;
    std::map<std::pair<int, int>, long> memo_;
};

}  // namespace

LieAlgebra::LieAlgebra(RootSystem rs, BracketTable brackets)
    : rs_(std::move(rs)), dim_(rs_.rank() + 2 * rs_.num_positive()), brackets_(std::move(brackets)) {
    if (static_cast<int>(brackets_.size()) != dim_) throw std::invalid_argument("bracket table has wrong size");
    for (const auto& row : brackets_)
        if (static_cast<int>(row.size()) != dim_) throw std::invalid_argument("bracket table has wrong size");

    const int r = rank(), np = num_positive();
    labels_.resize(dim_);
    weights_.assign(dim_, RootCoords(r, 0));
    for (int i = 0; i < r; ++i) labels_[i] = "h" + std::to_string(i + 1);
    for (int a = 0; a < np; ++a) {
        const auto& root = rs_.positive_roots()[a];
        labels_[e_index(a)] = "e[" + coords_label(root) + "]";
        labels_[f_index(a)] = "f[" + coords_label(root) + "]";
        weights_[e_index(a)] = root;
        for (int k = 0; k < r; ++k) weights_[f_index(a)][k] = -root[k];
    }

    // (h_i, h_j) = (alpha_i^vee, alpha_j^vee), (e_a, f_a) = 2 / (a, a).
    gram_ = RationalMatrix(dim_, dim_);
    gram_inv_ = RationalMatrix(dim_, dim_);
    RationalMatrix h(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            h(i, j) = 4 * rs_.simple_inner(i, j) / (rs_.simple_inner(i, i) * rs_.simple_inner(j, j));
    // Invert the Cartan block by Gauss-Jordan.
    RationalMatrix work = h, inv = RationalMatrix::identity(r);
    for (int c = 0; c < r; ++c) {
        int p = c;
        while (work(p, c) == 0) ++p;
        for (int j = 0; j < r; ++j) {
            std::swap(work(p, j), work(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        Rational s = 1 / work(c, c);
        for (int j = 0; j < r; ++j) { work(c, j) *= s; inv(c, j) *= s; }
        for (int q = 0; q < r; ++q) {
            if (q == c || work(q, c) == 0) continue;
            Rational f = work(q, c);
            for (int j = 0; j < r; ++j) { work(q, j) -= f * work(c, j); inv(q, j) -= f * inv(c, j); }
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            gram_(i, j) = h(i, j);
            gram_inv_(i, j) = inv(i, j);
        }
    for (int a = 0; a < np; ++a) {
        const auto& root = rs_.positive_roots()[a];
        Rational nn = rs_.inner(root, root);
        gram_(e_index(a), f_index(a)) = gram_(f_index(a), e_index(a)) = 2 / nn;
        gram_inv_(e_index(a), f_index(a)) = gram_inv_(f_index(a), e_index(a)) = nn / 2;
    }
    dual_.resize(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (gram_inv_(i, j) != 0) dual_[i].emplace_back(j, gram_inv_(i, j));
}

long LieAlgebra::structure_constant(int i, int j, int k) const {
    for (const auto& t : brackets_[i][j])
        if (t.index == k) return t.coeff;
    return 0;
}

AlgebraElement LieAlgebra::basis_vector(int i) const {
    AlgebraElement v(dim_, 0);
    v[i] = 1;
    return v;
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& u, const AlgebraElement& v) const {
    AlgebraElement out(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            Rational c = u[i] * v[j];
            for (const auto& t : brackets_[i][j]) out[t.index] += c * t.coeff;
        }
    }
    return out;
}

Rational LieAlgebra::form(const AlgebraElement& u, const AlgebraElement& v) const {
    Rational s = 0;
    for (int i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (v[j] != 0 && gram_(i, j) != 0) s += u[i] * v[j] * gram_(i, j);
    }
    return s;
}

Rational LieAlgebra::contracted_structure_constant(int i, int j, int k) const {
    Rational s = 0;
    for (const auto& t : brackets_[i][j]) s += gram_(t.index, k) * t.coeff;
    return s;
}

RationalMatrix LieAlgebra::adjoint_matrix(int i) const {
    RationalMatrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (const auto& t : brackets_[i][j]) m(t.index, j) += t.coeff;
    return m;
}

std::vector<int> LieAlgebra::chevalley_generators() const {
    std::vector<int> g;
    for (int i = 0; i < rank(); ++i) g.push_back(e_index(i));
    for (int i = 0; i < rank(); ++i) g.push_back(f_index(i));
    return g;
}

LieAlgebra chevalley_basis(const RootSystem& rs) {
    const int r = rs.rank(), np = rs.num_positive(), n = r + 2 * np;
    StructureConstants sc(rs);
    auto basis_of_root = [&](int idx) { return idx < np ? r + idx : r + np + (idx - np); };
    auto root_of_basis = [&](int b) { return b < r + np ? b - r : np + (b - r - np); };

    LieAlgebra::BracketTable table(n, std::vector<std::vector<BasisTerm>>(n));
    for (int i = 0; i < r; ++i)
        for (int b = r; b < n; ++b) {
            int ri = root_of_basis(b);
            long c = rs.pairing_with_coroot(sc.coords(ri), i);
            if (c != 0) {
                table[i][b].push_back({b, c});
                table[b][i].push_back({b, -c});
            }
        }
    for (int b1 = r; b1 < n; ++b1)
        for (int b2 = r; b2 < n; ++b2) {
            int r1 = root_of_basis(b1), r2 = root_of_basis(b2);
            if (r2 == sc.negate(r1)) {
                // [e_a, e_{-a}] = h_a with h_a the coroot of a.
                RootCoords a = sc.coords(r1);
                RootCoords cor = rs.coroot_coordinates(a);
                for (int k = 0; k < r; ++k)
                    if (cor[k] != 0) table[b1][b2].push_back({k, cor[k]});
                continue;
            }
            if (auto s = sc.sum(r1, r2)) table[b1][b2].push_back({basis_of_root(*s), sc.N(r1, r2)});
        }
    return LieAlgebra(rs, std::move(table));
}

void write_structure_constants(std::ostream& out, const LieAlgebra& L) {
    out << kFormatHeader << "\n";
    out << "type " << L.root_system().type().name() << "\n";
    out << "dim " << L.dim() << "\n";
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            for (const auto& t : L.bracket(i, j)) out << i << ' ' << j << ' ' << t.index << ' ' << t.coeff << "\n";
}

LieAlgebra read_structure_constants(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kFormatHeader)
        throw std::runtime_error("structure-constant file: missing or unsupported header");
    std::string key, name;
    if (!(in >> key >> name) || key != "type") throw std::runtime_error("structure-constant file: missing type");
    int dim = 0;
    if (!(in >> key >> dim) || key != "dim") throw std::runtime_error("structure-constant file: missing dim");
    RootSystem rs(parse_cartan_type(name));
    if (dim != rs.rank() + 2 * rs.num_positive())
        throw std::runtime_error("structure-constant file: dim does not match type " + name);
    LieAlgebra::BracketTable table(dim, std::vector<std::vector<BasisTerm>>(dim));
    int i, j, k;
    long c;
    while (in >> i >> j >> k >> c) {
        if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim || c == 0)
            throw std::runtime_error("structure-constant file: bad entry");
        table[i][j].push_back({k, c});
    }
    if (!in.eof()) throw std::runtime_error("structure-constant file: trailing garbage");
    return LieAlgebra(std::move(rs), std::move(table));
}

LieAlgebra load_or_build_algebra(CartanType type) {
    const char* dir = std::getenv("CDSW_CACHE_DIR");
    if (!dir || !*dir) return chevalley_basis(RootSystem(type));
    namespace fs = std::filesystem;
    fs::path path = fs::path(dir) / (type.name() + ".sc");
    if (std::ifstream in(path); in) {
        LieAlgebra L = read_structure_constants(in);
        if (L.root_system().type() != type) throw std::runtime_error("cache file " + path.string() + " has wrong type");
        return L;
    }
    LieAlgebra L = chevalley_basis(RootSystem(type));
    std::error_code ec;
    fs::create_directories(dir, ec);
    // Write to a temporary and rename so concurrent readers never see a partial file.
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (out) write_structure_constants(out, L);
    }
    fs::rename(tmp, path, ec);
    return L;
}

AlgebraElement jacobi_sum(const LieAlgebra& L, int i, int j, int k) {
    auto bi = L.basis_vector(i), bj = L.basis_vector(j), bk = L.basis_vector(k);
    AlgebraElement s = L.bracket(L.bracket(bi, bj), bk);
    auto t2 = L.bracket(L.bracket(bj, bk), bi);
    auto t3 = L.bracket(L.bracket(bk, bi), bj);
    for (int m = 0; m < L.dim(); ++m) s[m] += t2[m] + t3[m];
    return s;
}

Rational form_invariance_defect(const LieAlgebra& L, int i, int j, int k) {
    auto bi = L.basis_vector(i), bj = L.basis_vector(j), bk = L.basis_vector(k);
    return L.form(L.bracket(bi, bj), bk) + L.form(bj, L.bracket(bi, bk));
}

Rational adjoint_casimir_scalar(const LieAlgebra& L) {
    // Apply the unnormalized Casimir to h_1 and read off the coefficient.
    AlgebraElement x = L.basis_vector(0), acc(L.dim(), 0);
    for (int i = 0; i < L.dim(); ++i)
        for (const auto& [j, g] : L.dual_basis(i)) {
            auto y = L.bracket(L.basis_vector(i), L.bracket(L.basis_vector(j), x));
            for (int m = 0; m < L.dim(); ++m) acc[m] += g * y[m];
        }
    return acc[0];
}

RationalMatrix casimir_operator(const LieAlgebra& L, const std::vector<RationalMatrix>& action) {
    if (static_cast<int>(action.size()) != L.dim())
        throw std::invalid_argument("casimir_operator: need one matrix per basis vector");
    const std::size_t m = action.front().rows();
    for (const auto& a : action)
        if (a.rows() != m || a.cols() != m) throw std::invalid_argument("casimir_operator: matrices must be square of one size");
    for (int g : L.chevalley_generators())
        for (int j = 0; j < L.dim(); ++j) {
            RationalMatrix expected(m, m);
            for (const auto& t : L.bracket(g, j)) expected += action[t.index] * Rational(t.coeff);
            if (!(action[g].commutator(action[j]) == expected))
                throw std::invalid_argument("casimir_operator: action is not a representation at [" + L.label(g) +
                                            ", " + L.label(j) + "]");
        }
    RationalMatrix c(m, m);
    for (int i = 0; i < L.dim(); ++i)
        for (const auto& [j, g] : L.dual_basis(i)) c += (action[i] * action[j]) * g;
    c *= 1 / adjoint_casimir_scalar(L);
    return c;
}

}  // namespace cdsw
