#include "qsym/lie.hpp"

#include <algorithm>

namespace qsym {

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    if (names.size() != n) throw DimensionError("basis name count mismatch");
    return names;
}

}  // namespace

void LieAlgebra::set_from_terms(const std::vector<BracketTerm>& brackets) {
    c_.assign(n_ * n_ * n_, Scalar(0));
    for (const auto& t : brackets) {
        if (t.i >= n_ || t.j >= n_) throw DimensionError("bracket index out of range");
        if (t.i == t.j) {
            for (auto& kc : t.coeffs)
                if (sgn(kc.second) != 0) throw std::invalid_argument("[x,x] must vanish");
            continue;
        }
        for (auto& [k, v] : t.coeffs) {
            if (k >= n_) throw DimensionError("bracket coefficient index out of range");
            c_[(t.i * n_ + t.j) * n_ + k] += v;
            c_[(t.j * n_ + t.i) * n_ + k] -= v;
        }
    }
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> names, const std::vector<BracketTerm>& brackets)
    : n_(dim), names_(default_names(dim, std::move(names))) {
    set_from_terms(brackets);
    auto rep = jacobi_defect(*this);
    if (!rep.ok) {
        const auto& t = rep.first_violation;
        throw JacobiError("Jacobi identity fails at (" + names_[t[0]] + "," + names_[t[1]] + "," + names_[t[2]] + ")",
                          t);
    }
}

LieAlgebra LieAlgebra::unchecked(std::size_t dim, std::vector<std::string> names,
                                 const std::vector<BracketTerm>& brackets) {
    LieAlgebra g;
    g.n_ = dim;
    g.names_ = default_names(dim, std::move(names));
    g.set_from_terms(brackets);
    return g;
}

LieAlgebra LieAlgebra::from_constants(std::size_t dim, std::vector<std::string> names, Vec c) {
    if (c.size() != dim * dim * dim) throw DimensionError("structure constant count");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (c[(i * dim + j) * dim + k] != -c[(j * dim + i) * dim + k])
                    throw std::invalid_argument("structure constants not antisymmetric");
    std::vector<BracketTerm> terms;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            BracketTerm t{i, j, {}};
            for (std::size_t k = 0; k < dim; ++k)
                if (sgn(c[(i * dim + j) * dim + k]) != 0) t.coeffs.emplace_back(k, c[(i * dim + j) * dim + k]);
            if (!t.coeffs.empty()) terms.push_back(t);
        }
    return LieAlgebra(dim, std::move(names), terms);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::vector<std::string> names) {
    return LieAlgebra(dim, std::move(names), {});
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
    return v;
}

std::vector<BracketTerm> LieAlgebra::bracket_table() const {
    std::vector<BracketTerm> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            BracketTerm t{i, j, {}};
            for (std::size_t k = 0; k < n_; ++k)
                if (sgn(c(i, j, k)) != 0) t.coeffs.emplace_back(k, c(i, j, k));
            if (!t.coeffs.empty()) out.push_back(std::move(t));
        }
    return out;
}

bool LieAlgebra::is_abelian() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
    const std::size_t n = g.dim();
    if (x.size() != n || y.size() != n) throw DimensionError("bracket vector size");
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || sgn(y[j]) == 0) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(g.c(i, j, k)) != 0) out[k] += xy * g.c(i, j, k);
        }
    }
    return out;
}

JacobiReport jacobi_defect(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    JacobiReport rep;
    rep.defect = 0;
    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], i<j<k
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec s(n);
                const std::array<std::array<std::size_t, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
                for (auto& t : cyc)
                    for (std::size_t m = 0; m < n; ++m) {
                        const Scalar& a = g.c(t[0], t[1], m);
                        if (sgn(a) == 0) continue;
                        for (std::size_t r = 0; r < n; ++r)
                            if (sgn(g.c(m, t[2], r)) != 0) s[r] += a * g.c(m, t[2], r);
                    }
                for (auto& x : s) {
                    Scalar ab = abs(x);
                    if (ab > rep.defect) rep.defect = ab;
                    if (sgn(x) != 0 && rep.ok) {
                        rep.ok = false;
                        rep.first_violation = {i, j, k};
                    }
                }
            }
    return rep;
}

Matrix ad_basis(const LieAlgebra& g, std::size_t i) {
    const std::size_t n = g.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) = g.c(i, j, k);
    return m;
}

Matrix ad(const LieAlgebra& g, const Vec& x) {
    const std::size_t n = g.dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(x[i]) != 0) m += ad_basis(g, i) * x[i];
    return m;
}

Matrix killing_form(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(g, i));
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            k(i, j) = trace_product(ads[i], ads[j]);
            k(j, i) = k(i, j);
        }
    return k;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
    std::vector<Vec> vs;
    auto ub = u.vectors();
    auto vb = v.vectors();
    for (auto& x : ub)
        for (auto& y : vb) vs.push_back(bracket(g, x, y));
    return Subspace::span(g.dim(), vs);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) vs.push_back(g.bracket_basis(i, j));
    return Subspace::span(g.dim(), vs);
}

Subspace center(const LieAlgebra& g) {
    // x central iff [x, e_j] = 0 for all j: stack the ad(e_j)-images of x
    const std::size_t n = g.dim();
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = g.c(i, j, k);
    return kernel(m);
}

Subspace radical(const LieAlgebra& g) { return orthogonal(killing_form(g), derived_subalgebra(g)); }

bool is_subalgebra(const LieAlgebra& g, const Subspace& u) { return u.contains(bracket_span(g, u, u)); }

bool is_ideal(const LieAlgebra& g, const Subspace& u) {
    if (u.ambient_dim() != g.dim()) throw DimensionError("is_ideal ambient mismatch");
    return u.contains(bracket_span(g, Subspace::full(g.dim()), u));
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
    std::vector<Subspace> out{Subspace::full(g.dim())};
    while (true) {
        Subspace next = bracket_span(g, out.back(), out.back());
        if (next == out.back()) break;
        out.push_back(next);
    }
    return out;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    std::vector<Subspace> out{Subspace::full(g.dim())};
    while (true) {
        Subspace next = bracket_span(g, out.front(), out.back());
        if (next == out.back()) break;
        out.push_back(next);
    }
    return out;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
    if (!is_ideal(g, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
    const std::size_t n = g.dim();
    Subspace w = complement_in(ideal, Subspace::full(n));
    const std::size_t m = w.dim();
    // coordinates with respect to [W | I]
    Matrix full = w.basis().hcat(ideal.basis());
    Matrix inv = *inverse(full);
    Matrix proj = inv.block(0, 0, m, n);
    std::vector<BracketTerm> terms;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Vec br = proj * bracket(g, w.basis().col(a), w.basis().col(b));
            BracketTerm t{a, b, {}};
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(br[k]) != 0) t.coeffs.emplace_back(k, br[k]);
            if (!t.coeffs.empty()) terms.push_back(t);
        }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a) names.push_back(g.names()[w.pivots()[a]]);
    return Quotient{LieAlgebra(m, names, terms), proj, w.basis()};
}

LieAlgebra restrict_to_subalgebra(const LieAlgebra& g, const Subspace& u) {
    if (!is_subalgebra(g, u)) throw std::invalid_argument("not a subalgebra");
    const std::size_t m = u.dim();
    std::vector<BracketTerm> terms;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Vec br = *u.coords(bracket(g, u.basis().col(a), u.basis().col(b)));
            BracketTerm t{a, b, {}};
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(br[k]) != 0) t.coeffs.emplace_back(k, br[k]);
            if (!t.coeffs.empty()) terms.push_back(t);
        }
    return LieAlgebra(m, {}, terms);
}

bool is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& f) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) throw DimensionError("homomorphism shape");
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = i + 1; j < src.dim(); ++j)
            if (f * src.bracket_basis(i, j) != bracket(dst, f.col(i), f.col(j))) return false;
    return true;
}

LieAlgebra lie_direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    std::vector<BracketTerm> terms = a.bracket_table();
    for (auto t : b.bracket_table()) {
        t.i += a.dim();
        t.j += a.dim();
        for (auto& kc : t.coeffs) kc.first += a.dim();
        terms.push_back(t);
    }
    std::vector<std::string> names = a.names();
    for (auto& s : b.names()) names.push_back(s);
    std::sort(names.begin(), names.end());
    bool clash = std::adjacent_find(names.begin(), names.end()) != names.end();
    names = a.names();
    for (auto& s : b.names()) names.push_back(clash ? s + "'" : s);
    return LieAlgebra(a.dim() + b.dim(), names, terms);
}

}  // namespace qsym
