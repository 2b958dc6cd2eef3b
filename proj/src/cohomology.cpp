#include "qsym/cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qsym {

const std::vector<std::vector<std::size_t>>& increasing_tuples(std::size_t n, std::size_t p) {
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == p) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    if (p <= n) rec(rec, 0);
    return cache.emplace(key, std::move(out)).first->second;
}

Cochain::Cochain(std::size_t n, std::size_t p, std::size_t m)
    : n_(n), p_(p), m_(m), vals_(increasing_tuples(n, p).size(), Vec(m)) {}

namespace {

/* sorts idx in place; returns sign, 0 on a repeated index */
int sort_sign(std::vector<std::size_t>& idx) {
    int s = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                s = -s;
            }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return 0;
    return s;
}

std::size_t tuple_index(std::size_t n, const std::vector<std::size_t>& sorted) {
    const auto& t = increasing_tuples(n, sorted.size());
    auto it = std::lower_bound(t.begin(), t.end(), sorted);
    return static_cast<std::size_t>(it - t.begin());
}

void check_same(const Cochain& a, const Cochain& b) {
    if (a.n() != b.n() || a.degree() != b.degree() || a.value_dim() != b.value_dim())
        throw DimensionError("cochain shape mismatch");
}

}  // namespace

Vec Cochain::at(const std::vector<std::size_t>& idx) const {
    if (idx.size() != p_) throw DimensionError("cochain evaluated with wrong arity");
    auto s = idx;
    int sg = sort_sign(s);
    if (sg == 0) return Vec(m_);
    for (auto i : s)
        if (i >= n_) throw DimensionError("cochain index out of range");
    const Vec& v = vals_[tuple_index(n_, s)];
    return sg > 0 ? v : vec_scale(v, -1);
}

void Cochain::set(std::vector<std::size_t> idx, const Vec& v) {
    if (idx.size() != p_ || v.size() != m_) throw DimensionError("cochain set shape");
    int sg = sort_sign(idx);
    if (sg == 0) throw std::invalid_argument("alternating cochain: repeated index");
    vals_[tuple_index(n_, idx)] = sg > 0 ? v : vec_scale(v, -1);
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
    if (args.size() != p_) throw DimensionError("cochain evaluated with wrong arity");
    Vec out(m_);
    const auto& tuples = increasing_tuples(n_, p_);
    for (std::size_t k = 0; k < tuples.size(); ++k) {
        if (vec_is_zero(vals_[k])) continue;
        Matrix minor(p_, p_);
        for (std::size_t r = 0; r < p_; ++r)
            for (std::size_t c = 0; c < p_; ++c) minor(r, c) = args[r][tuples[k][c]];
        Scalar det = p_ == 0 ? Scalar(1) : determinant(minor);
        if (sgn(det) == 0) continue;
        for (std::size_t i = 0; i < m_; ++i) out[i] += det * vals_[k][i];
    }
    return out;
}

bool Cochain::is_zero() const {
    return std::all_of(vals_.begin(), vals_.end(), [](const Vec& v) { return vec_is_zero(v); });
}

Cochain Cochain::operator+(const Cochain& o) const {
    check_same(*this, o);
    Cochain r = *this;
    for (std::size_t k = 0; k < vals_.size(); ++k) r.vals_[k] = vec_add(vals_[k], o.vals_[k]);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    check_same(*this, o);
    Cochain r = *this;
    for (std::size_t k = 0; k < vals_.size(); ++k) r.vals_[k] = vec_sub(vals_[k], o.vals_[k]);
    return r;
}

Cochain Cochain::operator*(const Scalar& s) const {
    Cochain r = *this;
    for (auto& v : r.vals_) v = vec_scale(v, s);
    return r;
}

Cochain d_cochain(const LieAlgebra& l, const std::vector<Matrix>& rho, const Cochain& c) {
    const std::size_t n = l.dim(), p = c.degree(), m = c.value_dim();
    if (c.n() != n) throw DimensionError("cochain over a different algebra");
    Cochain out(n, p + 1, m);
    const auto& tuples = increasing_tuples(n, p + 1);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& J = tuples[t];
        Vec acc(m);
        if (!rho.empty())
            for (std::size_t k = 0; k <= p; ++k) {
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i <= p; ++i)
                    if (i != k) rest.push_back(J[i]);
                Vec v = rho[J[k]] * c.at(rest);
                acc = (k % 2 == 0) ? vec_add(acc, v) : vec_sub(acc, v);
            }
        for (std::size_t k = 0; k <= p; ++k)
            for (std::size_t q = k + 1; q <= p; ++q) {
                Vec br = l.bracket_basis(J[k], J[q]);
                std::vector<std::size_t> args{0};
                for (std::size_t i = 0; i <= p; ++i)
                    if (i != k && i != q) args.push_back(J[i]);
                Vec v(m);
                for (std::size_t e = 0; e < n; ++e) {
                    if (sgn(br[e]) == 0) continue;
                    args[0] = e;
                    v = vec_add(v, vec_scale(c.at(args), br[e]));
                }
                acc = ((k + q) % 2 == 0) ? vec_add(acc, v) : vec_sub(acc, v);
            }
        out.value(t) = acc;
    }
    return out;
}

Cochain d_scalar(const LieAlgebra& l, const Cochain& c) { return d_cochain(l, {}, c); }
Cochain d_module(const OrthogonalModule& m, const Cochain& c) { return d_cochain(m.l.alg, m.rho, c); }

Cochain wedge_pair(const Cochain& alpha, const Cochain& tau, const Matrix& form) {
    if (alpha.n() != tau.n() || alpha.value_dim() != tau.value_dim() || form.rows() != alpha.value_dim())
        throw DimensionError("wedge_pair shape mismatch");
    const std::size_t n = alpha.n(), p = alpha.degree(), q = tau.degree();
    Cochain out(n, p + q, 1);
    const auto& tuples = increasing_tuples(n, p + q);
    const auto& shuffles = increasing_tuples(p + q, p);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& J = tuples[t];
        Scalar acc = 0;
        for (const auto& S : shuffles) {
            std::vector<std::size_t> a, b;
            std::size_t inv = 0, si = 0;
            for (std::size_t i = 0; i < p + q; ++i) {
                if (si < p && S[si] == i) {
                    a.push_back(J[i]);
                    inv += i - si;
                    ++si;
                } else {
                    b.push_back(J[i]);
                }
            }
            Scalar v = bilinear(form, alpha.at(a), tau.at(b));
            if (inv % 2 == 0)
                acc += v;
            else
                acc -= v;
        }
        out.value(t) = Vec{acc};
    }
    return out;
}

Cochain pullback(const Cochain& c, const Matrix& S, const Matrix& U) {
    const std::size_t n = c.n(), p = c.degree();
    Cochain out(n, p, c.value_dim());
    const auto& tuples = increasing_tuples(n, p);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        std::vector<Vec> args;
        for (auto i : tuples[t]) args.push_back(S.col(i));
        out.value(t) = U * c.eval(args);
    }
    return out;
}

Vec flatten(const Cochain& c) {
    Vec out;
    out.reserve(c.size() * c.value_dim());
    for (std::size_t k = 0; k < c.size(); ++k) out.insert(out.end(), c.value(k).begin(), c.value(k).end());
    return out;
}

Cochain unflatten(std::size_t n, std::size_t p, std::size_t m, const Vec& v) {
    Cochain c(n, p, m);
    if (v.size() != c.size() * m) throw DimensionError("unflatten: wrong length");
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) c.value(k)[i] = v[k * m + i];
    return c;
}

namespace {

template <class F>
Matrix matrix_of(std::size_t n, std::size_t p, std::size_t m, F&& f) {
    const std::size_t N = increasing_tuples(n, p).size() * m;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < N; ++j) cols.push_back(flatten(f(unflatten(n, p, m, unit_vector(N, j)))));
    return Matrix::from_columns(cols, N == 0 ? 0 : cols[0].size());
}

Matrix stacked(const Matrix& a, const Matrix& b) { return a.vcat(b); }

}  // namespace

Matrix d_matrix(const LieAlgebra& l, const std::vector<Matrix>& rho, std::size_t p, std::size_t m) {
    return matrix_of(l.dim(), p, m, [&](const Cochain& c) { return d_cochain(l, rho, c); });
}

Matrix pullback_matrix(std::size_t n, std::size_t p, const Matrix& S, const Matrix& U) {
    return matrix_of(n, p, U.rows(), [&](const Cochain& c) { return pullback(c, S, U); });
}

namespace {

std::vector<Cochain> closed_basis(const OrthogonalModule& m, std::size_t p, std::size_t vd, bool theta_fixed) {
    const std::size_t n = m.l.dim();
    const std::vector<Matrix> none;
    Matrix U = vd == 1 && p == 3 ? Matrix::identity(1) : m.theta;
    Matrix A = d_matrix(m.l.alg, p == 3 ? none : m.rho, p, vd);
    if (theta_fixed) {
        Matrix P = pullback_matrix(n, p, m.l.theta, U);
        A = stacked(A, P - Matrix::identity(P.rows()));
    }
    std::vector<Cochain> out;
    for (auto& v : kernel(A).vectors()) out.push_back(unflatten(n, p, vd, v));
    return out;
}

}  // namespace

std::vector<Cochain> alpha_cocycle_basis(const OrthogonalModule& m, bool theta_fixed) {
    return closed_basis(m, 2, m.dim(), theta_fixed);
}

std::vector<Cochain> gamma_cocycle_basis(const OrthogonalModule& m, bool theta_fixed) {
    return closed_basis(m, 3, 1, theta_fixed);
}

std::optional<Cochain> solve_gamma(const OrthogonalModule& m, const Cochain& alpha, bool theta_fixed) {
    const std::size_t n = m.l.dim();
    Matrix A = d_matrix(m.l.alg, {}, 3, 1);
    Vec rhs = flatten(wedge_pair(alpha, alpha, m.form) * Scalar(1, 2));
    if (theta_fixed) {
        Matrix P = pullback_matrix(n, 3, m.l.theta, Matrix::identity(1));
        A = stacked(A, P - Matrix::identity(P.rows()));
        rhs.resize(A.rows());
    }
    if (A.cols() == 0) return Cochain(n, 3, 1);
    auto sol = solve_linear(A, Matrix::column(rhs));
    if (!sol.x) return std::nullopt;
    return unflatten(n, 3, 1, sol.x->col(0));
}

Cochain zero_alpha(const OrthogonalModule& m) { return Cochain(m.l.dim(), 2, m.dim()); }
Cochain zero_gamma(const OrthogonalModule& m) { return Cochain(m.l.dim(), 3, 1); }
QuadraticCochain qc_identity(const OrthogonalModule& m) {
    return {Cochain(m.l.dim(), 1, m.dim()), Cochain(m.l.dim(), 2, 1)};
}
QuadraticCocycle zero_cocycle(const OrthogonalModule& m) { return {zero_alpha(m), zero_gamma(m)}; }

bool is_quadratic_cocycle(const OrthogonalModule& m, const QuadraticCocycle& z) {
    if (z.alpha.degree() != 2 || z.gamma.degree() != 3 || z.alpha.value_dim() != m.dim() ||
        z.gamma.value_dim() != 1 || z.alpha.n() != m.l.dim() || z.gamma.n() != m.l.dim())
        return false;
    if (!d_module(m, z.alpha).is_zero()) return false;
    return d_scalar(m.l.alg, z.gamma) == wedge_pair(z.alpha, z.alpha, m.form) * Scalar(1, 2);
}

QuadraticCocycle make_cocycle(const OrthogonalModule& m, Cochain alpha, Cochain gamma) {
    QuadraticCocycle z{std::move(alpha), std::move(gamma)};
    if (!is_quadratic_cocycle(m, z)) throw std::invalid_argument("not a quadratic cocycle");
    return z;
}

QuadraticCochain qc_compose(const OrthogonalModule& m, const QuadraticCochain& a, const QuadraticCochain& b) {
    return {a.tau + b.tau, a.sigma + b.sigma + wedge_pair(a.tau, b.tau, m.form) * Scalar(1, 2)};
}

QuadraticCochain qc_inverse(const OrthogonalModule& m, const QuadraticCochain& c) {
    return {-c.tau, -c.sigma + wedge_pair(c.tau, c.tau, m.form) * Scalar(1, 2)};
}

QuadraticCocycle qc_act(const OrthogonalModule& m, const QuadraticCocycle& z, const QuadraticCochain& c) {
    Cochain dt = d_module(m, c.tau);
    QuadraticCocycle r{z.alpha + dt,
                       z.gamma + d_scalar(m.l.alg, c.sigma) + wedge_pair(z.alpha + dt * Scalar(1, 2), c.tau, m.form)};
    if (!is_quadratic_cocycle(m, r)) throw std::logic_error("qc_act produced a non-cocycle");
    return r;
}

Cochain theta_pullback(const OrthogonalModule& m, const Cochain& c, bool a_valued) {
    if (a_valued) return pullback(c, m.l.theta, m.theta);
    if (c.value_dim() != 1) throw DimensionError("scalar cochain expected");
    return pullback(c, m.l.theta, Matrix::identity(1));
}

QuadraticCochain theta_pullback(const OrthogonalModule& m, const QuadraticCochain& c) {
    return {pullback(c.tau, m.l.theta, m.theta), pullback(c.sigma, m.l.theta, Matrix::identity(1))};
}

QuadraticCocycle theta_pullback(const OrthogonalModule& m, const QuadraticCocycle& z) {
    return {pullback(z.alpha, m.l.theta, m.theta), pullback(z.gamma, m.l.theta, Matrix::identity(1))};
}

std::pair<Cochain, Cochain> theta_split(const OrthogonalModule& m, const Cochain& c, bool a_valued) {
    Cochain t = theta_pullback(m, c, a_valued);
    return {(c + t) * Scalar(1, 2), (c - t) * Scalar(1, 2)};
}

QuadraticCochain qc_plus_part(const OrthogonalModule& m, const QuadraticCochain& c) {
    return {theta_split(m, c.tau, true).first, theta_split(m, c.sigma, false).first};
}

QuadraticCochain qc_minus_part(const OrthogonalModule& m, const QuadraticCochain& c) {
    return {theta_split(m, c.tau, true).second, theta_split(m, c.sigma, false).second};
}

bool is_theta_fixed(const OrthogonalModule& m, const QuadraticCocycle& z) { return theta_pullback(m, z) == z; }
bool is_theta_fixed(const OrthogonalModule& m, const QuadraticCochain& c) { return theta_pullback(m, c) == c; }

namespace {

Cochain plus_part(const Cochain& c, const Matrix& S, const Matrix& U) { return (c + pullback(c, S, U)) * Scalar(1, 2); }
Cochain minus_part(const Cochain& c, const Matrix& S, const Matrix& U) {
    return (c - pullback(c, S, U)) * Scalar(1, 2);
}

}  // namespace

Invariantized invariantize(const OrthogonalModule& m, const QuadraticCocycle& z, const QuadraticCochain& c) {
    if (theta_pullback(m, z) != qc_act(m, z, c)) throw std::invalid_argument("invariantize: witness identity fails");
    const Matrix& S = m.l.theta;
    Matrix I1 = Matrix::identity(1);
    Cochain tau = c.tau * Scalar(1, 2), sigma = c.sigma * Scalar(1, 2);
    Cochain tm = minus_part(tau, S, m.theta), sm = minus_part(sigma, S, I1);
    Cochain ap = plus_part(z.alpha, S, m.theta), gp = plus_part(z.gamma, S, I1);
    Invariantized r{{ap, gp - wedge_pair(d_module(m, tm), tm, m.form) * Scalar(1, 2)}, {-tm, -sm}};
    if (!is_theta_fixed(m, r.z_plus) || !is_quadratic_cocycle(m, r.z_plus) || qc_act(m, r.z_plus, r.witness) != z)
        throw std::logic_error("invariantize: constructed cocycle fails verification");
    return r;
}

bool equivalence_witness_verify(const OrthogonalModule& m, const QuadraticCocycle& z1, const QuadraticCocycle& z2,
                                const QuadraticCochain& c, bool require_plus) {
    if (!is_quadratic_cocycle(m, z1) || !is_quadratic_cocycle(m, z2)) return false;
    if (require_plus && !is_theta_fixed(m, c)) return false;
    return qc_act(m, z1, c) == z2;
}

std::optional<QuadraticCochain> plus_witness(const OrthogonalModule& m, const QuadraticCocycle& z1,
                                             const QuadraticCocycle& z2, const QuadraticCochain& c) {
    if (!is_theta_fixed(m, z1) || !is_theta_fixed(m, z2) || qc_act(m, z1, c) != z2) return std::nullopt;
    Matrix I1 = Matrix::identity(1);
    QuadraticCochain p{plus_part(c.tau, m.l.theta, m.theta), plus_part(c.sigma, m.l.theta, I1)};
    if (qc_act(m, z1, p) != z2) return std::nullopt;
    return p;
}

std::optional<QuadraticCochain> find_plus_witness(const OrthogonalModule& m, const QuadraticCocycle& z1,
                                                  const QuadraticCocycle& z2) {
    if (!is_theta_fixed(m, z1) || !is_theta_fixed(m, z2)) return std::nullopt;
    const std::size_t n = m.l.dim(), a = m.dim();
    Matrix I1 = Matrix::identity(1);
    // plus cochains in flattened coordinates
    Matrix Pt = pullback_matrix(n, 1, m.l.theta, m.theta), Ps = pullback_matrix(n, 2, m.l.theta, I1);
    Matrix Bt = kernel(Pt - Matrix::identity(Pt.rows())).basis();
    Matrix Bs = kernel(Ps - Matrix::identity(Ps.rows())).basis();
    Cochain half = (z1.alpha + z2.alpha) * Scalar(1, 2);
    Matrix W = matrix_of(n, 1, a, [&](const Cochain& t) { return wedge_pair(half, t, m.form); });
    Matrix Dt = d_matrix(m.l.alg, m.rho, 1, a) * Bt;
    Matrix Ds = d_matrix(m.l.alg, {}, 2, 1) * Bs;
    Matrix Wt = W * Bt;
    const std::size_t na = Dt.rows(), ng = Ds.rows(), kt = Bt.cols(), ks = Bs.cols();
    Matrix A(na + ng, kt + ks);
    A.set_block(0, 0, Dt);
    A.set_block(na, 0, Wt);
    A.set_block(na, kt, Ds);
    Vec rhs = flatten(z2.alpha - z1.alpha);
    Vec rg = flatten(z2.gamma - z1.gamma);
    rhs.insert(rhs.end(), rg.begin(), rg.end());
    Vec x(kt + ks);
    if (A.rows() > 0 && A.cols() > 0) {
        auto sol = solve_linear(A, Matrix::column(rhs));
        if (!sol.x) return std::nullopt;
        x = sol.x->col(0);
    } else if (!vec_is_zero(rhs)) {
        return std::nullopt;
    }
    Vec xt(x.begin(), x.begin() + kt), xs(x.begin() + kt, x.end());
    QuadraticCochain c{unflatten(n, 1, a, kt ? Bt * xt : Vec(Bt.rows())), unflatten(n, 2, 1, ks ? Bs * xs : Vec(Bs.rows()))};
    if (qc_act(m, z1, c) != z2) throw std::logic_error("find_plus_witness: solution fails verification");
    return c;
}

}  // namespace qsym
