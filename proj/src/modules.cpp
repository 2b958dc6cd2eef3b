#include "qsym/modules.hpp"

#include <algorithm>
#include <map>

namespace qsym {

Matrix OrthogonalModule::rho_of(const Vec& x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) m += rho[i] * x[i];
    return m;
}

ModuleReport check_orthogonal_module(const OrthogonalModule& m) {
    ModuleReport r;
    const auto& g = m.l.alg;
    const std::size_t n = m.dim();
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (r.first_violation.empty()) r.first_violation = what;
    };
    if (m.rho.size() != g.dim() || m.form.cols() != n || m.theta.rows() != n || m.theta.cols() != n) {
        fail(r.homomorphism, "shape mismatch");
        return r;
    }
    for (auto& x : m.rho)
        if (x.rows() != n || x.cols() != n) {
            fail(r.homomorphism, "shape mismatch");
            return r;
        }
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            if (m.rho[i] * m.rho[j] - m.rho[j] * m.rho[i] != m.rho_of(g.bracket_basis(i, j)))
                fail(r.homomorphism, "rho not a homomorphism at (" + g.names()[i] + "," + g.names()[j] + ")");
    if (!m.form.is_symmetric() || form_signature(m.form).n_zero != 0)
        fail(r.skew, "form not symmetric nondegenerate");
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!(m.rho[i].transpose() * m.form + m.form * m.rho[i]).is_zero())
            fail(r.skew, "rho(" + g.names()[i] + ") not skew");
    if (m.theta * m.theta != Matrix::identity(n)) fail(r.theta_isometric_involution, "theta_a^2 != Id");
    if (m.theta.transpose() * m.form * m.theta != m.form)
        fail(r.theta_isometric_involution, "theta_a not an isometry");
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (m.theta * m.rho_of(m.l.theta.col(i)) * m.theta != m.rho[i])
            fail(r.compatible, "theta_a rho(theta_l " + g.names()[i] + ") theta_a != rho(" + g.names()[i] + ")");
    return r;
}

OrthogonalModule trivial_module(const InvolutiveLie& l, const Matrix& form, const Matrix& theta) {
    return OrthogonalModule{l, std::vector<Matrix>(l.dim(), Matrix(form.rows(), form.rows())), form, theta};
}

OrthogonalModule module_direct_sum(const OrthogonalModule& a, const OrthogonalModule& b) {
    OrthogonalModule m{a.l, {}, direct_sum(a.form, b.form), direct_sum(a.theta, b.theta)};
    for (std::size_t i = 0; i < a.l.dim(); ++i) m.rho.push_back(direct_sum(a.rho[i], b.rho[i]));
    return m;
}

namespace {

/* Incremental echelon basis: row k vanishes at the pivots of rows < k. */
struct Echelon {
    std::vector<Vec> rows;
    std::vector<std::size_t> piv;

    bool reduce(Vec& v) const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Scalar& f = v[piv[k]];
            if (sgn(f) == 0) continue;
            Scalar c = f;
            const Vec& r = rows[k];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (sgn(r[j]) != 0) v[j] -= c * r[j];
        }
        return !vec_is_zero(v);
    }
    bool add(Vec v) {
        if (!reduce(v)) return false;
        std::size_t p = 0;
        while (sgn(v[p]) == 0) ++p;
        Scalar inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        piv.push_back(p);
        return true;
    }
};

}  // namespace

std::vector<Matrix> enveloping_algebra(const std::vector<Matrix>& gens, std::size_t n) {
    std::vector<Matrix> nz;
    for (auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    std::vector<Matrix> basis{Matrix::identity(n)};
    Echelon ech;
    ech.add(basis[0].data());
    for (std::size_t idx = 0; idx < basis.size(); ++idx)
        for (auto& g : nz) {
            Matrix p = g * basis[idx];
            if (ech.add(p.data())) basis.push_back(std::move(p));
        }
    return basis;
}

std::vector<Matrix> trace_radical(const std::vector<Matrix>& alg) {
    const std::size_t d = alg.size();
    Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) gram(i, j) = gram(j, i) = trace_product(alg[i], alg[j]);
    std::vector<Matrix> out;
    for (auto& c : kernel(gram).vectors()) {
        Matrix x(alg[0].rows(), alg[0].cols());
        for (std::size_t i = 0; i < d; ++i)
            if (sgn(c[i]) != 0) x += alg[i] * c[i];
        out.push_back(x);
    }
    return out;
}

Subspace module_radical(const std::vector<Matrix>& gens, std::size_t n) {
    if (n == 0) return Subspace(0);
    std::vector<Vec> cols;
    for (auto& x : trace_radical(enveloping_algebra(gens, n)))
        for (auto& c : x.columns()) cols.push_back(c);
    return Subspace::span(n, cols);
}

Subspace module_socle(const std::vector<Matrix>& gens, std::size_t n) {
    if (n == 0) return Subspace(0);
    auto J = trace_radical(enveloping_algebra(gens, n));
    if (J.empty()) return Subspace::full(n);
    Matrix stacked = J[0];
    for (std::size_t i = 1; i < J.size(); ++i) stacked = stacked.vcat(J[i]);
    return kernel(stacked);
}

bool is_semisimple_action(const std::vector<Matrix>& gens, std::size_t n) {
    if (n == 0) return true;
    return trace_radical(enveloping_algebra(gens, n)).empty();
}

bool is_semisimple(const OrthogonalModule& m) { return is_semisimple_action(m.rho, m.dim()); }

std::vector<Matrix> restrict_action(const std::vector<Matrix>& gens, const Subspace& u) {
    std::vector<Matrix> out;
    for (auto& g : gens) {
        Matrix r(u.dim(), u.dim());
        for (std::size_t j = 0; j < u.dim(); ++j) {
            auto c = u.coords(g * u.basis().col(j));
            if (!c) throw std::invalid_argument("restrict_action: subspace not invariant");
            r.set_col(j, *c);
        }
        out.push_back(r);
    }
    return out;
}

std::vector<Matrix> quotient_action(const std::vector<Matrix>& gens, const Subspace& u) {
    const std::size_t n = u.ambient_dim();
    Subspace c = complement_in(u, Subspace::full(n));
    Matrix full = u.basis().hcat(c.basis());
    Matrix inv = *inverse(full);
    Matrix proj = inv.block(u.dim(), 0, c.dim(), n);
    std::vector<Matrix> out;
    for (auto& g : gens) {
        if (!u.is_zero() && !u.contains(map_subspace(g, u)))
            throw std::invalid_argument("quotient_action: subspace not invariant");
        out.push_back(proj * g * c.basis());
    }
    return out;
}

InvariantsSplit invariants_split(const OrthogonalModule& m) {
    if (!is_semisimple(m)) throw std::invalid_argument("invariants_split: module not semisimple");
    const std::size_t n = m.dim();
    Matrix stacked(0, n);
    std::vector<Vec> cols;
    for (auto& r : m.rho) {
        stacked = stacked.vcat(r);
        for (auto& c : r.columns()) cols.push_back(c);
    }
    InvariantsSplit s{kernel(stacked), Subspace::span(n, cols)};
    if (s.a_l.dim() + s.rho_la.dim() != n || !intersect(s.a_l, s.rho_la).is_zero())
        throw std::logic_error("invariants_split: not a direct sum");
    return s;
}

// ---------------------------------------------------------------- polynomials

Vec characteristic_polynomial(const Matrix& a) {
    // Faddeev-LeVerrier; coefficients low to high, monic
    const std::size_t n = a.rows();
    Vec c(n + 1);
    c[n] = 1;
    Matrix M(n, n);
    Matrix I = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = a * (M + I * c[n - k + 1]);
        c[n - k] = -M.trace() / Scalar(static_cast<long>(k));
    }
    return c;
}

namespace {

void trim(Vec& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

/* p = q*d + r; returns (q, r) */
std::pair<Vec, Vec> poly_divmod(Vec p, const Vec& d) {
    trim(p);
    const std::size_t dd = d.size() - 1;
    if (p.size() < d.size()) return {{}, p};
    Vec q(p.size() - dd);
    for (std::size_t i = p.size(); i-- > dd;) {
        Scalar f = p[i] / d[dd];
        q[i - dd] = f;
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= f * d[j];
    }
    p.resize(dd);
    trim(p);
    return {q, p};
}

Scalar poly_eval(const Vec& p, const Scalar& x) {
    Scalar r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    if (n > mpz_class("1000000000000")) throw UnsupportedError("polynomial coefficients too large for root search");
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/* integer polynomial proportional to p */
std::vector<mpz_class> integerize(const Vec& p) {
    mpz_class l = 1;
    for (auto& x : p) l = lcm(l, mpz_class(x.get_den()));
    std::vector<mpz_class> z;
    mpz_class g = 0;
    for (auto& x : p) {
        Scalar y = x * l;
        z.push_back(y.get_num());
        g = gcd(g, y.get_num());
    }
    if (g != 0)
        for (auto& x : z) x /= g;
    return z;
}

bool is_square(const mpz_class& n, mpz_class& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

}  // namespace

PolyRoots gaussian_rational_roots(const Vec& coeffs) {
    PolyRoots out;
    Vec p = coeffs;
    trim(p);
    if (p.empty()) throw std::invalid_argument("zero polynomial");
    while (p.size() > 1 && sgn(p[0]) == 0) {
        out.real.push_back(0);
        p.erase(p.begin());
    }
    bool progress = true;
    while (p.size() > 1 && progress) {
        progress = false;
        auto z = integerize(p);
        for (auto& q : divisors(z.back())) {
            for (auto& num : divisors(z[0])) {
                for (int s : {1, -1}) {
                    Scalar r(num * s, q);
                    r.canonicalize();
                    if (sgn(poly_eval(p, r)) == 0) {
                        out.real.push_back(r);
                        p = poly_divmod(p, {-r, 1}).first;
                        progress = true;
                        break;
                    }
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    progress = true;
    while (p.size() > 2 && progress) {
        progress = false;
        auto z = integerize(p);
        for (auto& m : divisors(z.back())) {
            for (auto& t : divisors(z[0])) {
                mpz_class bound = sqrt(mpz_class(4 * m * t));
                for (mpz_class s = -bound; s <= bound; ++s) {
                    mpz_class disc = 4 * m * t - s * s;
                    mpz_class root;
                    if (disc <= 0 || !is_square(disc, root)) continue;
                    Vec d{Scalar(t), Scalar(-s), Scalar(m)};
                    auto qr = poly_divmod(p, d);
                    if (!qr.second.empty()) continue;
                    Scalar a(s, 2 * m), b(root, 2 * m);
                    a.canonicalize();
                    b.canonicalize();
                    out.complex.push_back({a, b});
                    p = qr.first;
                    progress = true;
                    break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    out.complete = p.size() == 1;
    std::sort(out.real.begin(), out.real.end());
    std::sort(out.complex.begin(), out.complex.end());
    return out;
}

// ---------------------------------------------------------------- weights

namespace {

struct Piece {
    Subspace E;
    Vec re, im;
    std::optional<Matrix> J;
};

Subspace lift(const Subspace& E, const Subspace& local) {
    std::vector<Vec> cols;
    for (auto& v : local.vectors()) cols.push_back(E.basis() * v);
    return Subspace::span(E.ambient_dim(), cols);
}

}  // namespace

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<WeightSpace> weight_spaces(const std::vector<Matrix>& ops, std::size_t n) {
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (ops[i] * ops[j] != ops[j] * ops[i]) throw UnsupportedError("weight_spaces: operators do not commute");
    const std::size_t m = ops.size();
    std::vector<Piece> pieces{{Subspace::full(n), Vec(m), Vec(m), std::nullopt}};
    if (n == 0) pieces.clear();
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Piece> next;
        for (auto& pc : pieces) {
            const std::size_t d = pc.E.dim();
            Matrix T = restrict_action({ops[i]}, pc.E)[0];
            Matrix I = Matrix::identity(d);
            auto roots = gaussian_rational_roots(characteristic_polynomial(T));
            if (!roots.complete) throw UnsupportedError("weight_spaces: eigenvalues outside Q(i)");
            std::size_t total = 0;
            auto push = [&](const Subspace& local, const Scalar& a, const Scalar& b, std::optional<Matrix> J) {
                if (local.is_zero()) return;
                Piece q{lift(pc.E, local), pc.re, pc.im, std::move(J)};
                q.re[i] = a;
                q.im[i] = b;
                total += local.dim();
                next.push_back(std::move(q));
            };
            std::vector<Scalar> reals = roots.real;
            reals.erase(std::unique(reals.begin(), reals.end()), reals.end());
            auto cplx = roots.complex;
            cplx.erase(std::unique(cplx.begin(), cplx.end()), cplx.end());
            for (auto& a : reals) push(kernel(T - I * a), a, 0, pc.J);
            if (!pc.J) {
                for (auto& [a, b] : cplx) {
                    Matrix S = T - I * a;
                    Subspace K = kernel(S * S + I * (b * b));
                    Matrix J = (ops[i] - Matrix::identity(n) * a) * (1 / b);
                    push(K, a, b, J);
                }
            } else {
                Matrix Jl = restrict_action({*pc.J}, pc.E)[0];
                if (Jl * T != T * Jl) throw UnsupportedError("weight_spaces: operator not complex-linear");
                for (auto& [a, b] : cplx) {
                    push(kernel(T - I * a - Jl * b), a, b, pc.J);
                    push(kernel(T - I * a + Jl * b), a, -b, pc.J);
                }
            }
            if (total != d) throw UnsupportedError("weight_spaces: action not semisimple");
        }
        pieces = std::move(next);
    }
    std::vector<WeightSpace> out;
    for (auto& pc : pieces) {
        WeightSpace w{pc.re, pc.im, pc.E, pc.J};
        if (w.J) {
            auto it = std::find_if(w.im.begin(), w.im.end(), [](const Scalar& x) { return sgn(x) != 0; });
            if (it == w.im.end()) {
                w.J.reset();
            } else if (*it < 0) {
                for (auto& x : w.im) x = -x;
                w.J = -*w.J;
            }
        }
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), [](const WeightSpace& a, const WeightSpace& b) {
        if (a.re != b.re) return lex_less(a.re, b.re);
        return lex_less(a.im, b.im);
    });
    return out;
}

std::vector<WeightSpace> weight_spaces(const OrthogonalModule& m) { return weight_spaces(m.rho, m.dim()); }

// ---------------------------------------------------------------- blocks

std::string block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::rho_plus: return "rho_plus";
        case BlockKind::rho_minus: return "rho_minus";
        case BlockKind::rho_tilde_plus: return "rho_tilde_plus";
        case BlockKind::rho_tilde_minus: return "rho_tilde_minus";
        case BlockKind::rho_double_prime: return "rho_double_prime";
        case BlockKind::rho_zero: return "rho_zero";
        case BlockKind::su2_rho_k_plus: return "su2_rho_k_plus";
        case BlockKind::su2_rho_k_minus: return "su2_rho_k_minus";
        case BlockKind::su2_rho_prime_k: return "su2_rho_prime_k";
        case BlockKind::sl2_rho_k_plus: return "sl2_rho_k_plus";
        case BlockKind::sl2_rho_k_minus: return "sl2_rho_k_minus";
        case BlockKind::sl2_rho_prime_k: return "sl2_rho_prime_k";
        case BlockKind::sl2_adjoint: return "sl2_adjoint";
    }
    return "";
}

std::optional<BlockKind> block_kind_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(BlockKind::sl2_adjoint); ++i)
        if (block_kind_name(static_cast<BlockKind>(i)) == s) return static_cast<BlockKind>(i);
    return std::nullopt;
}

BlockSpec BlockSpec::zero(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return BlockSpec{BlockKind::rho_zero, {}, 0, {p, q, r, s}};
}
BlockSpec BlockSpec::weighted(BlockKind kind, Vec lambda) { return BlockSpec{kind, {std::move(lambda)}, 0, {}}; }
BlockSpec BlockSpec::double_prime(Vec mu, Vec nu) {
    return BlockSpec{BlockKind::rho_double_prime, {std::move(mu), std::move(nu)}, 0, {}};
}
BlockSpec BlockSpec::indexed(BlockKind kind, int k) { return BlockSpec{kind, {}, k, {}}; }

std::pair<Matrix, Matrix> standard_space(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    Vec f, t;
    for (std::size_t i = 0; i < p; ++i) f.push_back(-1), t.push_back(1);
    for (std::size_t i = 0; i < q; ++i) f.push_back(1), t.push_back(1);
    for (std::size_t i = 0; i < r; ++i) f.push_back(-1), t.push_back(-1);
    for (std::size_t i = 0; i < s; ++i) f.push_back(1), t.push_back(-1);
    return {Matrix::diagonal(f), Matrix::diagonal(t)};
}

std::vector<Matrix> invariant_bilinear_forms(const std::vector<Matrix>& rho, std::size_t n, bool symmetric) {
    std::vector<std::pair<std::size_t, std::size_t>> unk;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = symmetric ? i : i + 1; j < n; ++j) unk.push_back({i, j});
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t u = 0; u < unk.size(); ++u) index[unk[u]] = u;
    // G(i,j) as (unknown, sign)
    auto entry = [&](std::size_t i, std::size_t j) -> std::pair<long, int> {
        if (i == j) return symmetric ? std::pair<long, int>{static_cast<long>(index[{i, i}]), 1}
                                     : std::pair<long, int>{-1, 0};
        if (i < j) return {static_cast<long>(index[{i, j}]), 1};
        return {static_cast<long>(index[{j, i}]), symmetric ? 1 : -1};
    };
    std::vector<Vec> rows;
    for (auto& r : rho)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Vec row(unk.size());
                // (r^T G + G r)_{ab} = sum_c r(c,a) G(c,b) + G(a,c) r(c,b)
                for (std::size_t c = 0; c < n; ++c) {
                    if (sgn(r(c, a)) != 0) {
                        auto [u, s] = entry(c, b);
                        if (u >= 0) row[u] += r(c, a) * s;
                    }
                    if (sgn(r(c, b)) != 0) {
                        auto [u, s] = entry(a, c);
                        if (u >= 0) row[u] += r(c, b) * s;
                    }
                }
                if (!vec_is_zero(row)) rows.push_back(row);
            }
    Subspace sol = rows.empty() ? Subspace::full(unk.size()) : kernel(Matrix::from_rows(rows, unk.size()));
    std::vector<Matrix> out;
    for (auto& v : sol.vectors()) {
        Matrix G(n, n);
        for (std::size_t u = 0; u < unk.size(); ++u) {
            auto [i, j] = unk[u];
            G(i, j) = v[u];
            G(j, i) = symmetric ? v[u] : Scalar(-v[u]);
        }
        out.push_back(G);
    }
    return out;
}

namespace {

/* Degree-n homogeneous polynomials in two variables acted on by derivations; basis e1^a e2^(n-a), a = n..0. */
template <class C>
std::vector<std::vector<C>> sym_action(const std::array<C, 4>& M, int n) {
    // M = {M11, M12, M21, M22}; M e1 = M11 e1 + M21 e2, M e2 = M12 e1 + M22 e2
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<C>> out(d, std::vector<C>(d));
    for (std::size_t j = 0; j < d; ++j) {
        int a = n - static_cast<int>(j), b = static_cast<int>(j);
        out[j][j] = out[j][j] + M[0] * a + M[3] * b;
        if (a > 0) out[j + 1][j] = out[j + 1][j] + M[2] * a;  // e1^{a-1} e2^{b+1}
        if (b > 0) out[j - 1][j] = out[j - 1][j] + M[1] * b;  // e1^{a+1} e2^{b-1}
    }
    return out;
}

struct Cx {
    Scalar re, im;
    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator*(int k) const { return {re * k, im * k}; }
};

Matrix realify(const std::vector<std::vector<Cx>>& c) {
    const std::size_t d = c.size();
    Matrix m(2 * d, 2 * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) {
            m(2 * r, 2 * s) = c[r][s].re;
            m(2 * r, 2 * s + 1) = -c[r][s].im;
            m(2 * r + 1, 2 * s) = c[r][s].im;
            m(2 * r + 1, 2 * s + 1) = c[r][s].re;
        }
    return m;
}

Matrix to_matrix(const std::vector<std::vector<Scalar>>& c) {
    Matrix m(c.size(), c.size());
    for (std::size_t r = 0; r < c.size(); ++r)
        for (std::size_t s = 0; s < c.size(); ++s) m(r, s) = c[r][s];
    return m;
}

std::vector<Matrix> sl2_sym(int n) {
    // H = diag(1,-1), X = E12, Y = E21
    std::array<Scalar, 4> H{1, 0, 0, -1}, X{0, 1, 0, 0}, Y{0, 0, 1, 0};
    return {to_matrix(sym_action(H, n)), to_matrix(sym_action(X, n)), to_matrix(sym_action(Y, n))};
}

/* action of g = [[0,1],[-1,0]] on Sym^n: e1 -> -e2, e2 -> e1 */
Matrix sl2_sym_g(int n) {
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        int a = n - static_cast<int>(j);
        // e1^a e2^b -> (-1)^a e1^b e2^a, index of e1^b e2^a is a
        m(static_cast<std::size_t>(a), j) = (a % 2 == 0) ? 1 : -1;
    }
    return m;
}

Matrix sign_for_definite(const Matrix& G, const Subspace& on, bool positive) {
    Signature s = form_signature(restrict_form(G, on));
    if (s.n_zero != 0 || (s.n_plus != 0 && s.n_minus != 0))
        throw std::logic_error("invariant form not definite on the required subspace");
    bool pos = s.n_minus == 0;
    return pos == positive ? G : Matrix(-G);
}

Matrix unique_form(const std::vector<Matrix>& rho, std::size_t n, bool symmetric) {
    auto forms = invariant_bilinear_forms(rho, n, symmetric);
    if (forms.size() != 1) throw std::logic_error("invariant form not unique");
    return forms[0];
}

/* harmonic polynomials of degree k in x1,x2,x3 with the rotation fields */
struct Harmonic {
    Subspace H;
    std::vector<Matrix> E;  // E1, E2, E3 on the full P_k
    Matrix T;               // f -> f(-x1,-x2,x3)
};

Harmonic harmonic(int k) {
    std::vector<std::array<int, 3>> mono, low;
    for (int a = k; a >= 0; --a)
        for (int b = k - a; b >= 0; --b) mono.push_back({a, b, k - a - b});
    for (int a = k - 2; a >= 0; --a)
        for (int b = k - 2 - a; b >= 0; --b) low.push_back({a, b, k - 2 - a - b});
    auto idx = [](const std::vector<std::array<int, 3>>& v, std::array<int, 3> e) {
        return static_cast<std::size_t>(std::find(v.begin(), v.end(), e) - v.begin());
    };
    const std::size_t N = mono.size();
    Matrix lap(low.size(), N);
    for (std::size_t j = 0; j < N; ++j)
        for (int v = 0; v < 3; ++v) {
            auto e = mono[j];
            if (e[v] < 2) continue;
            Scalar c = e[v] * (e[v] - 1);
            e[v] -= 2;
            lap(idx(low, e), j) += c;
        }
    Harmonic h;
    h.H = low.empty() ? Subspace::full(N) : kernel(lap);
    // E_a = x_p d_q - x_q d_p with (a,p,q) cyclic: (1,2,3), (2,3,1), (3,1,2)
    const int cyc[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (auto& pq : cyc) {
        Matrix E(N, N);
        int p = pq[0], q = pq[1];
        for (std::size_t j = 0; j < N; ++j) {
            auto e = mono[j];
            if (e[q] > 0) {
                auto f = e;
                f[q] -= 1;
                f[p] += 1;
                E(idx(mono, f), j) += e[q];
            }
            if (e[p] > 0) {
                auto f = e;
                f[p] -= 1;
                f[q] += 1;
                E(idx(mono, f), j) -= e[p];
            }
        }
        h.E.push_back(E);
    }
    h.T = Matrix(N, N);
    for (std::size_t j = 0; j < N; ++j) h.T(j, j) = ((mono[j][0] + mono[j][1]) % 2 == 0) ? 1 : -1;
    return h;
}

bool same_involutive(const InvolutiveLie& a, const InvolutiveLie& b) {
    return a.alg.dim() == b.alg.dim() && a.alg.constants() == b.alg.constants() && a.theta == b.theta;
}

OrthogonalModule su2_rho_k(const InvolutiveLie& l, int k, int sign) {
    Harmonic h = harmonic(k);
    auto E = restrict_action(h.E, h.H);
    std::size_t d = h.H.dim();
    Matrix comm = E[0] * E[1] - E[1] * E[0];
    if (comm == -E[2])
        for (auto& e : E) e = -e;
    else if (comm != E[2])
        throw std::logic_error("rotation fields have unexpected brackets");
    std::vector<Matrix> rho{E[2] * 2, E[0] * 2, E[1] * 2};
    Matrix T = restrict_action({h.T}, h.H)[0];
    Matrix theta = T * Scalar((k % 2 == 0 ? 1 : -1) * sign);
    Matrix G = sign_for_definite(unique_form(rho, d, true), Subspace::full(d), true);
    return OrthogonalModule{l, rho, G, theta};
}

OrthogonalModule su2_rho_prime(const InvolutiveLie& l, int k) {
    int n = 2 * k - 1;
    // H = [[i,0],[0,-i]], X = [[0,1],[-1,0]], Y = [[0,i],[i,0]]
    std::array<Cx, 4> H{Cx{0, 1}, Cx{0, 0}, Cx{0, 0}, Cx{0, -1}};
    std::array<Cx, 4> X{Cx{0, 0}, Cx{1, 0}, Cx{-1, 0}, Cx{0, 0}};
    std::array<Cx, 4> Y{Cx{0, 0}, Cx{0, 1}, Cx{0, 1}, Cx{0, 0}};
    std::vector<Matrix> rho{realify(sym_action(H, n)), realify(sym_action(X, n)), realify(sym_action(Y, n))};
    std::size_t d = rho[0].rows();
    Vec t;
    for (int j = 0; j <= n; ++j) {
        int s = (j % 2 == 0) ? 1 : -1;  // (-1)^b with b = j
        t.push_back(s);
        t.push_back(s);
    }
    Matrix G = sign_for_definite(unique_form(rho, d, true), Subspace::full(d), true);
    return OrthogonalModule{l, rho, G, Matrix::diagonal(t)};
}

OrthogonalModule sl2_rho_k(const InvolutiveLie& l, int k, int sign) {
    auto rho = sl2_sym(2 * k);
    std::size_t d = rho[0].rows();
    Matrix S = sl2_sym_g(2 * k);
    Subspace fixed = kernel(rho[1] - rho[2]);
    if (fixed.dim() != 1) throw std::logic_error("so(2)-invariants not one-dimensional");
    Vec v = fixed.vectors()[0];
    Vec Sv = S * v;
    Scalar s = Sv == v ? 1 : -1;
    Matrix theta = S * (s * sign * (k % 2 == 0 ? 1 : -1));
    Subspace minus = kernel(theta + Matrix::identity(d));
    Matrix G = unique_form(rho, d, true);
    if (!minus.is_zero()) G = sign_for_definite(G, minus, true);
    return OrthogonalModule{l, rho, G, theta};
}

OrthogonalModule sl2_rho_prime(const InvolutiveLie& l, int k) {
    auto rv = sl2_sym(2 * k - 1);
    std::size_t d = rv[0].rows();
    Matrix S = sl2_sym_g(2 * k - 1);
    Matrix Om = unique_form(rv, d, false);
    Matrix Si = *inverse(S), Oi = *inverse(Om);
    std::vector<Matrix> rho;
    for (auto& r : rv) rho.push_back(direct_sum(r, -r.transpose()));
    Matrix G(2 * d, 2 * d);
    G.set_block(0, d, Matrix::identity(d));
    G.set_block(d, 0, Matrix::identity(d));
    for (const Matrix& P0 : {Si * Oi, Oi * Si, S * Oi, Oi * S})
        for (int c : {1, -1}) {
            Matrix P = P0 * Scalar(c);
            if (!P.is_symmetric()) continue;
            Matrix theta(2 * d, 2 * d);
            theta.set_block(0, d, P);
            theta.set_block(d, 0, *inverse(P));
            OrthogonalModule m{l, rho, G, theta};
            if (!check_orthogonal_module(m).ok()) continue;
            Subspace minus = kernel(theta + Matrix::identity(2 * d));
            Signature sg = form_signature(restrict_form(G, minus));
            if (sg.n_minus == 0 && sg.n_zero == 0) return m;
        }
    throw std::logic_error("no admissible involution for sl(2) rho'_k");
}

/* functional values on the basis of l, pulled back from l0 = l/l' */
Vec pull_back_weight(const InvolutiveLie& l, const Vec& lambda) {
    Subspace der = derived_subalgebra(l.alg);
    Quotient q = quotient(l.alg, der);
    if (lambda.size() != q.algebra.dim()) throw std::invalid_argument("weight has wrong length for l/l'");
    if (q.projection * l.theta * q.lift != -Matrix::identity(q.algebra.dim()))
        throw std::invalid_argument("abelian block kinds need theta_l = -Id on l/l'");
    Vec out(l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t a = 0; a < lambda.size(); ++a) out[i] += lambda[a] * q.projection(a, i);
    return out;
}

}  // namespace

OrthogonalModule build_block(const InvolutiveLie& l, const BlockSpec& spec) {
    const std::size_t nl = l.dim();
    auto weighted = [&](const Matrix& unit, std::array<std::size_t, 4> sig) {
        if (spec.weights.size() != 1 || vec_is_zero(spec.weights[0]))
            throw std::invalid_argument(block_kind_name(spec.kind) + " needs one nonzero weight");
        Vec lam = pull_back_weight(l, spec.weights[0]);
        auto [G, th] = standard_space(sig[0], sig[1], sig[2], sig[3]);
        OrthogonalModule m{l, {}, G, th};
        for (std::size_t i = 0; i < nl; ++i) m.rho.push_back(unit * lam[i]);
        return m;
    };
    auto need_k = [&] {
        if (spec.k < 1) throw std::invalid_argument(block_kind_name(spec.kind) + " needs k >= 1");
    };
    OrthogonalModule m;
    switch (spec.kind) {
        case BlockKind::rho_plus: m = weighted(Matrix::from_rows({{0, -1}, {1, 0}}), {0, 1, 0, 1}); break;
        case BlockKind::rho_minus: m = weighted(Matrix::from_rows({{0, -1}, {1, 0}}), {1, 0, 1, 0}); break;
        case BlockKind::rho_tilde_plus: m = weighted(Matrix::from_rows({{0, 1}, {1, 0}}), {1, 0, 0, 1}); break;
        case BlockKind::rho_tilde_minus: m = weighted(Matrix::from_rows({{0, 1}, {1, 0}}), {0, 1, 1, 0}); break;
        case BlockKind::rho_double_prime: {
            if (spec.weights.size() != 2 || vec_is_zero(spec.weights[0]) || vec_is_zero(spec.weights[1]))
                throw std::invalid_argument("rho_double_prime needs nonzero weights (mu, nu)");
            Vec mu = pull_back_weight(l, spec.weights[0]), nu = pull_back_weight(l, spec.weights[1]);
            auto [G, th] = standard_space(1, 1, 1, 1);
            m = OrthogonalModule{l, {}, G, th};
            for (std::size_t i = 0; i < nl; ++i) {
                const Scalar &u = mu[i], &v = nu[i];
                m.rho.push_back(Matrix::from_rows({{0, 0, -v, u}, {0, 0, u, v}, {v, u, 0, 0}, {u, -v, 0, 0}}));
            }
            break;
        }
        case BlockKind::rho_zero: {
            auto [G, th] = standard_space(spec.signature[0], spec.signature[1], spec.signature[2], spec.signature[3]);
            m = trivial_module(l, G, th);
            break;
        }
        case BlockKind::su2_rho_k_plus:
        case BlockKind::su2_rho_k_minus:
        case BlockKind::su2_rho_prime_k:
            need_k();
            if (!same_involutive(l, case_su2())) throw std::invalid_argument("su(2) block on a different algebra");
            if (spec.kind == BlockKind::su2_rho_prime_k)
                m = su2_rho_prime(l, spec.k);
            else
                m = su2_rho_k(l, spec.k, spec.kind == BlockKind::su2_rho_k_plus ? 1 : -1);
            break;
        case BlockKind::sl2_rho_k_plus:
        case BlockKind::sl2_rho_k_minus:
        case BlockKind::sl2_rho_prime_k:
            need_k();
            if (!same_involutive(l, case_sl2_compact()))
                throw std::invalid_argument("sl(2) block needs the compact involution");
            if (spec.kind == BlockKind::sl2_rho_prime_k)
                m = sl2_rho_prime(l, spec.k);
            else
                m = sl2_rho_k(l, spec.k, spec.kind == BlockKind::sl2_rho_k_plus ? 1 : -1);
            break;
        case BlockKind::sl2_adjoint: {
            if (!same_involutive(l, case_sl2_split())) throw std::invalid_argument("sl2_adjoint needs split sl(2)");
            m = OrthogonalModule{l, {}, killing_form(l.alg), -l.theta};
            for (std::size_t i = 0; i < nl; ++i) m.rho.push_back(ad_basis(l.alg, i));
            break;
        }
    }
    auto rep = check_orthogonal_module(m);
    if (!rep.ok()) throw std::logic_error("built block fails module check: " + rep.first_violation);
    return m;
}

OrthogonalModule build_sum(const InvolutiveLie& l, const std::vector<BlockSpec>& specs,
                           std::array<std::size_t, 4> padding) {
    OrthogonalModule m = build_block(l, BlockSpec::zero(padding[0], padding[1], padding[2], padding[3]));
    for (auto& s : specs) m = module_direct_sum(m, build_block(l, s));
    return m;
}

Vec sign_normalize(const Vec& v) {
    auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) != 0; });
    if (it == v.end()) throw std::invalid_argument("zero weight");
    return *it < 0 ? vec_scale(v, -1) : v;
}

std::vector<Vec> canonicalize_weights(const std::vector<Vec>& weights) {
    std::vector<Vec> out;
    for (auto& w : weights) out.push_back(sign_normalize(w));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<std::pair<Vec, Vec>> canonicalize_weight_pairs(const std::vector<std::pair<Vec, Vec>>& pairs) {
    std::vector<std::pair<Vec, Vec>> out;
    for (auto& [m, n] : pairs) out.push_back({sign_normalize(m), sign_normalize(n)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return lex_less(a.second, b.second);
    });
    return out;
}

std::pair<Signature, Signature> module_signatures(const OrthogonalModule& m) {
    auto sp = m.split();
    return {form_signature(restrict_form(m.form, sp.plus)), form_signature(restrict_form(m.form, sp.minus))};
}

}  // namespace qsym
