#include "qsym/admissibility.hpp"

#include "qsym/extension.hpp"

#include <algorithm>

namespace qsym {

std::string method_name(AdmissibilityMethod m) {
    switch (m) {
        case AdmissibilityMethod::generic: return "generic";
        case AdmissibilityMethod::case_n2: return "case_n2";
        case AdmissibilityMethod::case_r3m1: return "case_r3m1";
        case AdmissibilityMethod::case_h1: return "case_h1";
        case AdmissibilityMethod::case_abelian: return "case_abelian";
        case AdmissibilityMethod::case_semisimple: return "case_semisimple";
    }
    return "";
}

namespace {

Vec ev2(const Cochain& c, const Vec& x, const Vec& y) { return c.eval({x, y}); }
Scalar ev3(const Cochain& c, const Vec& x, const Vec& y, const Vec& w) { return c.eval({x, y, w})[0]; }

bool nondegenerate(const Matrix& G, const Subspace& s) {
    return s.dim() == 0 || determinant(restrict_form(G, s)) != 0;
}

bool is_semisimple_tag(CaseTag t) {
    return t == CaseTag::su2 || t == CaseTag::sl2_split || t == CaseTag::sl2_compact;
}

/* common kernel of rho in l */
Subspace rho_kernel(const OrthogonalModule& m) {
    const std::size_t n = m.l.dim(), a = m.dim();
    Matrix A(a * a, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < a; ++r)
            for (std::size_t c = 0; c < a; ++c) A(r * a + c, i) = m.rho[i](r, c);
    return kernel(A);
}

Subspace span_of(std::size_t n, const std::vector<Vec>& v) { return Subspace::span(n, v); }

/* matrix of a linear map on flattened cochains */
template <class F>
Matrix cochain_map(std::size_t n, std::size_t p, std::size_t vd, F&& f) {
    const std::size_t N = increasing_tuples(n, p).size() * vd;
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < N; ++j) cols.push_back(f(unflatten(n, p, vd, unit_vector(N, j))));
    std::size_t rows = cols.empty() ? 0 : cols[0].size();
    return Matrix::from_columns(cols, rows);
}

struct Chains {
    CanonicalChains c;
    std::size_t length;  // m with R_{m+1} = 0
};

Chains chains_of(const LieAlgebra& l) {
    Chains out{canonical_chains(l), 0};
    out.length = out.c.R.size() >= 2 ? out.c.R.size() - 2 : 0;
    return out;
}

/* Lambda(L_i) on a weight piece: action on (b_0) or (b_0, J b_0) */
Matrix piece_action(const WeightSpace& w, std::size_t i) {
    if (w.is_real()) return Matrix(1, 1, {w.re[i]});
    return Matrix(2, 2, {w.re[i], -w.im[i], w.im[i], w.re[i]});
}

/* x with rhs x in the column space of M, inside piece coordinates */
Subspace solvable_directions(const Matrix& M, const Matrix& R) {
    Subspace left = kernel(M.transpose());
    if (left.dim() == 0) return Subspace::full(R.cols());
    return kernel(left.basis().transpose() * R);
}

struct RkData {
    Subspace Rk;
    std::size_t r;
    std::vector<std::vector<Vec>> br;     // coords of [L_i, R_c] in R_k
    std::vector<std::vector<Vec>> alpha;  // alpha(L_i, R_c)
};

RkData rk_data(const OrthogonalModule& m, const Cochain& alpha, const Subspace& Rk) {
    const std::size_t n = m.l.dim();
    RkData d{Rk, Rk.dim(), {}, {}};
    auto rv = Rk.vectors();
    d.br.assign(n, {});
    d.alpha.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < d.r; ++c) {
            Vec e = unit_vector(n, i);
            auto co = Rk.coords(bracket(m.l.alg, e, rv[c]));
            if (!co) throw std::logic_error("R_k is not an ideal");
            d.br[i].push_back(*co);
            d.alpha[i].push_back(ev2(alpha, e, rv[c]));
        }
    return d;
}

Subspace rk_of(const Chains& ch, std::size_t k, std::size_t n) {
    return k < ch.c.R.size() ? ch.c.R[k] : Subspace(n);
}

bool ak_from_chains(const OrthogonalModule& m, const QuadraticCocycle& z, const Chains& ch, std::size_t k) {
    const std::size_t n = m.l.dim(), a = m.dim();
    Subspace Rk = rk_of(ch, k, n);
    if (Rk.is_zero()) return true;
    const Subspace& S1 = ch.c.S.size() > 1 ? ch.c.S[1] : ch.c.S.back();
    Subspace U = intersect(S1, Rk);
    if (U.is_zero()) return true;
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(m.l.alg, i));
    auto ws = weight_spaces(restrict_action(ads, U), U.dim());
    RkData d = rk_data(m, z.alpha, Rk);
    const std::size_t r = d.r;
    auto rv = Rk.vectors();
    for (const auto& w : ws) {
        const std::size_t s = w.is_real() ? 1 : 2;
        const std::size_t rows_i = n * s * a, rows = rows_i + n * s * r;
        Matrix M(rows, s * a + s * r);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix Lam = piece_action(w, i);
            Vec e = unit_vector(n, i);
            for (std::size_t j = 0; j < s; ++j) {
                for (std::size_t cc = 0; cc < a; ++cc) {
                    std::size_t row = (i * s + j) * a + cc;
                    for (std::size_t dd = 0; dd < a; ++dd) M(row, j * a + dd) += m.rho[i](cc, dd);
                    for (std::size_t t = 0; t < s; ++t) M(row, t * a + cc) -= Lam(t, j);
                }
                for (std::size_t c = 0; c < r; ++c) {
                    std::size_t row = rows_i + (i * s + j) * r + c;
                    Vec ga = m.form * d.alpha[i][c];
                    for (std::size_t dd = 0; dd < a; ++dd) M(row, j * a + dd) -= ga[dd];
                    for (std::size_t ee = 0; ee < r; ++ee) M(row, s * a + j * r + ee) += d.br[i][c][ee];
                    for (std::size_t t = 0; t < s; ++t) M(row, s * a + t * r + c) += Lam(t, j);
                }
            }
        }
        auto pv = w.space.vectors();
        Matrix R(rows, pv.size());
        for (std::size_t q = 0; q < pv.size(); ++q) {
            std::vector<Vec> b{U.basis() * pv[q]};
            if (s == 2) b.push_back(U.basis() * (*w.J * pv[q]));
            for (std::size_t i = 0; i < n; ++i) {
                Vec e = unit_vector(n, i);
                for (std::size_t j = 0; j < s; ++j) {
                    Vec al = ev2(z.alpha, e, b[j]);
                    for (std::size_t cc = 0; cc < a; ++cc) R((i * s + j) * a + cc, q) = al[cc];
                    for (std::size_t c = 0; c < r; ++c) R(rows_i + (i * s + j) * r + c, q) = ev3(z.gamma, e, b[j], rv[c]);
                }
            }
        }
        if (!solvable_directions(M, R).is_zero()) return false;
    }
    return true;
}

Subspace bk_from_chains(const OrthogonalModule& m, const QuadraticCocycle& z, const Chains& ch, std::size_t k) {
    const std::size_t n = m.l.dim(), a = m.dim();
    Subspace Rk = rk_of(ch, k, n);
    if (Rk.is_zero()) return Subspace::full(a);
    RkData d = rk_data(m, z.alpha, Rk);
    const std::size_t r = d.r;
    Subspace out(a);
    for (const auto& w : weight_spaces(m)) {
        const std::size_t s = w.is_real() ? 1 : 2;
        const std::size_t rows = n * s * r;
        Matrix M(rows, s * r);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix Lam = piece_action(w, i);
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t c = 0; c < r; ++c) {
                    std::size_t row = (i * s + j) * r + c;
                    for (std::size_t t = 0; t < s; ++t) M(row, t * r + c) -= Lam(t, j);
                    for (std::size_t ee = 0; ee < r; ++ee) M(row, j * r + ee) -= d.br[i][c][ee];
                }
        }
        auto pv = w.space.vectors();
        Matrix R(rows, pv.size());
        for (std::size_t q = 0; q < pv.size(); ++q) {
            std::vector<Vec> b{pv[q]};
            if (s == 2) b.push_back(*w.J * pv[q]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < s; ++j)
                    for (std::size_t c = 0; c < r; ++c)
                        R((i * s + j) * r + c, q) = bilinear(m.form, d.alpha[i][c], b[j]);
        }
        Subspace good = solvable_directions(M, R);
        if (!good.is_zero()) out = sum(out, Subspace::span_columns(w.space.basis() * good.basis()));
    }
    return out;
}

void require_cocycle(const OrthogonalModule& m, const QuadraticCocycle& z) {
    if (!is_quadratic_cocycle(m, z)) throw std::invalid_argument("not a quadratic cocycle");
    if (!is_theta_fixed(m, z)) throw std::invalid_argument("cocycle not Theta-fixed");
}

Subspace a_l_plus(const OrthogonalModule& m) {
    return intersect(invariants_split(m).a_l, m.split().plus);
}

}  // namespace

bool check_T1(const InvolutiveLie& l) {
    auto sp = l.split();
    return bracket_span(l.alg, sp.minus, sp.minus) == sp.plus;
}

Matrix alpha0_projection(const OrthogonalModule& m) {
    auto inv = invariants_split(m);
    const std::size_t a = m.dim(), k = inv.a_l.dim();
    Matrix B = inv.a_l.basis().hcat(inv.rho_la.basis());
    auto Bi = B.is_square() ? inverse(B) : std::nullopt;
    if (!Bi) throw std::invalid_argument("module is not semisimple: a^l + rho(l)a is not direct");
    Vec d(a);
    for (std::size_t i = 0; i < k; ++i) d[i] = 1;
    return B * Matrix::diagonal(d) * *Bi;
}

Subspace alpha0_kernel_image(const OrthogonalModule& m, const Cochain& alpha, bool minus_only) {
    const std::size_t n = m.l.dim();
    Subspace V = minus_only ? m.l.split().minus : Subspace::full(n);
    auto u = V.vectors();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) pairs.push_back({i, j});
    Subspace out(m.dim());
    if (pairs.empty()) return out;
    Matrix Br(n, pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) Br.set_col(p, bracket(m.l.alg, u[pairs[p].first], u[pairs[p].second]));
    Matrix P0 = alpha0_projection(m);
    std::vector<Vec> img;
    for (auto& c : kernel(Br).vectors()) {
        Vec v(m.dim());
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (sgn(c[p]) != 0) v = vec_add(v, vec_scale(ev2(alpha, u[pairs[p].first], u[pairs[p].second]), c[p]));
        img.push_back(P0 * v);
    }
    return span_of(m.dim(), img);
}

bool check_T2(const OrthogonalModule& m, const QuadraticCocycle& z) {
    return a_l_plus(m) == alpha0_kernel_image(m, z.alpha, true);
}

bool check_B0(const OrthogonalModule& m, const QuadraticCocycle& z) {
    return nondegenerate(m.form, alpha0_kernel_image(m, z.alpha, false));
}

bool check_A0(const OrthogonalModule& m, const QuadraticCocycle& z) {
    const std::size_t n = m.l.dim(), a = m.dim();
    alpha0_projection(m);
    Subspace W = intersect(center(m.l.alg), rho_kernel(m));
    const std::size_t w = W.dim();
    if (w == 0) return true;
    auto wv = W.vectors();
    const std::size_t cols = w + a + n;
    Matrix M(n * (a + n), cols);
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = unit_vector(n, i);
        for (std::size_t t = 0; t < w; ++t) {
            Vec al = ev2(z.alpha, e, wv[t]);
            for (std::size_t cc = 0; cc < a; ++cc) M(i * (a + n) + cc, t) = al[cc];
        }
        for (std::size_t cc = 0; cc < a; ++cc)
            for (std::size_t dd = 0; dd < a; ++dd) M(i * (a + n) + cc, w + dd) = -m.rho[i](cc, dd);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t row = i * (a + n) + a + c;
            Vec ec = unit_vector(n, c);
            for (std::size_t t = 0; t < w; ++t) M(row, t) = ev3(z.gamma, e, wv[t], ec);
            Vec ga = m.form * ev2(z.alpha, e, ec);
            for (std::size_t dd = 0; dd < a; ++dd) M(row, w + dd) = ga[dd];
            Vec br = bracket(m.l.alg, e, ec);
            for (std::size_t dd = 0; dd < n; ++dd) M(row, w + a + dd) = -br[dd];
        }
    }
    for (auto& v : kernel(M).vectors())
        for (std::size_t t = 0; t < w; ++t)
            if (sgn(v[t]) != 0) return false;
    return true;
}

std::size_t radical_length(const LieAlgebra& l) { return chains_of(l).length; }

bool check_Ak(const OrthogonalModule& m, const QuadraticCocycle& z, std::size_t k) {
    if (k == 0) throw std::invalid_argument("check_Ak: k >= 1");
    alpha0_projection(m);
    return ak_from_chains(m, z, chains_of(m.l.alg), k);
}

Subspace bk_submodule(const OrthogonalModule& m, const QuadraticCocycle& z, std::size_t k) {
    if (k == 0) throw std::invalid_argument("bk_submodule: k >= 1");
    alpha0_projection(m);
    return bk_from_chains(m, z, chains_of(m.l.alg), k);
}

bool check_Bk(const OrthogonalModule& m, const QuadraticCocycle& z, std::size_t k) {
    return nondegenerate(m.form, bk_submodule(m, z, k));
}

std::optional<CaseTag> standard_case(const InvolutiveLie& l) {
    auto t = recognize_case(l);
    if (!t) return std::nullopt;
    if (is_semisimple_tag(*t)) return t;
    if (*t == CaseTag::abelian) return l.theta == Matrix::identity(l.dim()) * Scalar(-1) ? t : std::nullopt;
    InvolutiveLie ref = make_case(*t);
    if (ref.alg.constants() == l.alg.constants() && ref.theta == l.theta) return t;
    return std::nullopt;
}

std::vector<Cochain> case_alpha_space(CaseTag t, const OrthogonalModule& m) {
    const std::size_t n = m.l.dim(), a = m.dim();
    if (is_semisimple_tag(t)) return {};
    Matrix P = pullback_matrix(n, 2, m.l.theta, m.theta);
    Matrix A = P - Matrix::identity(P.rows());
    auto in_al = [&](const Vec& v, Vec& out) {
        for (const auto& r : m.rho) {
            Vec x = r * v;
            out.insert(out.end(), x.begin(), x.end());
        }
    };
    Matrix C = cochain_map(n, 2, a, [&](const Cochain& c) {
        Vec out;
        Vec X = unit_vector(n, 0);
        switch (t) {
            case CaseTag::n2:
            case CaseTag::r3m1: {
                in_al(c.at({1, 2}), out);
                for (std::size_t v = 1; v < 3; ++v) {
                    Vec ev = unit_vector(n, v);
                    Vec r = vec_sub(ev2(c, X, bracket(m.l.alg, X, ev)), m.rho[0] * ev2(c, X, ev));
                    out.insert(out.end(), r.begin(), r.end());
                }
                break;
            }
            case CaseTag::h1: {
                Vec xy = c.at({0, 1});
                out.insert(out.end(), xy.begin(), xy.end());
                in_al(c.at({0, 2}), out);
                in_al(c.at({1, 2}), out);
                break;
            }
            default:
                for (const auto& tp : increasing_tuples(n, 2)) in_al(c.at(tp), out);
        }
        return out;
    });
    if (C.rows() > 0) A = A.vcat(C);
    std::vector<Cochain> out;
    for (auto& v : kernel(A).vectors()) out.push_back(unflatten(n, 2, a, v));
    return out;
}

CaseNormalForm case_normal_form(const OrthogonalModule& m, const QuadraticCocycle& z) {
    require_cocycle(m, z);
    auto t = standard_case(m.l);
    if (!t) throw UnsupportedError("case_normal_form: l is not a standard case");
    const std::size_t n = m.l.dim(), a = m.dim();
    if (*t == CaseTag::abelian && n > 2) throw UnsupportedError("case_normal_form: R^k only for k <= 2");
    auto Z = case_alpha_space(*t, m);
    Matrix Pt = pullback_matrix(n, 1, m.l.theta, m.theta);
    Matrix Bt = kernel(Pt - Matrix::identity(Pt.rows())).basis();
    Matrix D = d_matrix(m.l.alg, m.rho, 1, a) * Bt;
    const std::size_t N = increasing_tuples(n, 2).size() * a;
    Matrix Zm(N, Z.size());
    for (std::size_t i = 0; i < Z.size(); ++i) Zm.set_col(i, flatten(Z[i]));
    Matrix A = Zm.hcat(D);
    Vec target = flatten(z.alpha);
    Vec x(A.cols());
    if (A.cols() > 0 && N > 0) {
        auto sol = solve_linear(A, Matrix::column(target));
        if (!sol.x) throw std::logic_error("case_normal_form: alpha not in Z_l + dC^1_+");
        x = sol.x->col(0);
    } else if (!vec_is_zero(target)) {
        throw std::logic_error("case_normal_form: alpha not in Z_l + dC^1_+");
    }
    Cochain ap = zero_alpha(m);
    for (std::size_t i = 0; i < Z.size(); ++i) ap = ap + Z[i] * x[i];
    CaseNormalForm out{*t, !ap.is_zero(), {}, {}};
    if (out.alpha_class) {
        QuadraticCocycle nf{ap, zero_gamma(m)};
        auto w = find_plus_witness(m, z, nf);
        if (!w) throw std::logic_error("case_normal_form: class has no [alpha', 0] representative");
        out.z = nf;
        out.witness = *w;
    } else {
        Vec xt(x.begin() + Z.size(), x.end());
        Cochain tau = unflatten(n, 1, a, Bt.cols() ? Bt * xt : Vec(Bt.rows()));
        QuadraticCochain c{-tau, Cochain(n, 2, 1)};
        out.z = qc_act(m, z, c);
        out.witness = c;
        if (!out.z.alpha.is_zero()) throw std::logic_error("case_normal_form: alpha not killed");
    }
    return out;
}

AdmissibilityReport admissible_class_check(const OrthogonalModule& m, const QuadraticCocycle& z) {
    require_cocycle(m, z);
    AdmissibilityReport rep;
    rep.T1 = check_T1(m.l);
    rep.semisimple = is_semisimple(m);
    auto tag = standard_case(m.l);
    if (tag) {
        switch (*tag) {
            case CaseTag::n2: rep.method = AdmissibilityMethod::case_n2; break;
            case CaseTag::r3m1: rep.method = AdmissibilityMethod::case_r3m1; break;
            case CaseTag::h1: rep.method = AdmissibilityMethod::case_h1; break;
            case CaseTag::abelian: rep.method = AdmissibilityMethod::case_abelian; break;
            default: rep.method = AdmissibilityMethod::case_semisimple;
        }
        if (*tag == CaseTag::abelian && m.l.dim() > 2) {
            tag.reset();
            rep.method = AdmissibilityMethod::generic;
        }
    }
    if (!rep.semisimple) return rep;

    Chains ch = chains_of(m.l.alg);
    rep.T2 = check_T2(m, z);
    rep.A0 = check_A0(m, z);
    rep.B0 = check_B0(m, z);
    std::optional<std::string> unsupported;
    for (std::size_t k = 1; k <= ch.length; ++k) {
        try {
            bool ak = ak_from_chains(m, z, ch, k);
            bool bk = nondegenerate(m.form, bk_from_chains(m, z, ch, k));
            rep.Ak.push_back({k, ak});
            rep.Bk.push_back({k, bk});
        } catch (const UnsupportedError& e) {
            unsupported = e.what();
            break;
        }
    }

    if (tag) {
        CaseNormalForm nf = case_normal_form(m, z);
        const Cochain& ap = nf.z.alpha;
        Subspace alp = a_l_plus(m);
        const std::size_t n = m.l.dim(), a = m.dim();
        auto e = [&](std::size_t i) { return unit_vector(n, i); };
        std::optional<bool> T2, A0, B0, A1, B1;
        switch (nf.tag) {
            case CaseTag::n2:
            case CaseTag::r3m1:
                T2 = alp.is_zero();
                A0 = true;
                B0 = nondegenerate(m.form, span_of(a, {ev2(ap, e(1), e(2))}));
                A1 = nf.alpha_class || !nf.z.gamma.is_zero();
                if (!nf.alpha_class) B1 = true;
                break;
            case CaseTag::h1: {
                T2 = alp.is_zero();
                A0 = A1 = nf.alpha_class;
                bool nd = nondegenerate(m.form, span_of(a, {ev2(ap, e(2), e(0)), ev2(ap, e(2), e(1))}));
                B0 = B1 = nd;
                break;
            }
            case CaseTag::abelian: {
                std::vector<Vec> vals;
                for (const auto& tp : increasing_tuples(n, 2)) vals.push_back(ap.at(tp));
                Subspace img = span_of(a, vals);
                T2 = img == alp;
                B0 = nondegenerate(m.form, img);
                Subspace K = rho_kernel(m);
                // L0 in ker rho with alpha'(L0, .) = 0
                Matrix E(n * a, K.dim());
                auto kv = K.vectors();
                for (std::size_t t = 0; t < kv.size(); ++t)
                    for (std::size_t i = 0; i < n; ++i) {
                        Vec v = ev2(ap, kv[t], e(i));
                        for (std::size_t cc = 0; cc < a; ++cc) E(i * a + cc, t) = v[cc];
                    }
                A0 = K.dim() == 0 || kernel(E).is_zero();
                break;
            }
            default:
                T2 = alp.is_zero();
                A0 = B0 = true;
        }
        auto cross = [](const char* what, bool& slot, std::optional<bool> closed, bool have_generic) {
            if (!closed) return;
            if (have_generic && slot != *closed)
                throw std::logic_error(std::string("closed form disagrees with generic check: ") + what);
            slot = *closed;
        };
        cross("T2", rep.T2, T2, true);
        cross("A0", rep.A0, A0, true);
        cross("B0", rep.B0, B0, true);
        if (ch.length >= 1) {
            if (rep.Ak.empty()) rep.Ak.push_back({1, false}), rep.Bk.push_back({1, false});
            cross("A1", rep.Ak[0].second, A1, !unsupported);
            cross("B1", rep.Bk[0].second, B1, !unsupported);
            if (unsupported && (!A1 || !B1 || ch.length > 1)) throw UnsupportedError(*unsupported);
        }
    } else if (unsupported) {
        throw UnsupportedError(*unsupported);
    }

    rep.admissible = rep.T1 && rep.semisimple && rep.T2 && rep.A0 && rep.B0;
    for (auto& [k, v] : rep.Ak) rep.admissible = rep.admissible && v;
    for (auto& [k, v] : rep.Bk) rep.admissible = rep.admissible && v;
    return rep;
}

bool abelian_triple_indecomposable(const OrthogonalModule& m) {
    const std::size_t n = m.l.dim();
    if (!m.l.alg.is_abelian()) throw std::invalid_argument("abelian_triple_indecomposable: l not abelian");
    if (!invariants_split(m).a_l.is_zero()) throw std::invalid_argument("abelian_triple_indecomposable: a^l != 0");
    if (n == 1) return true;
    if (n != 2) throw UnsupportedError("abelian_triple_indecomposable: only dim l <= 2");
    std::vector<Subspace> lines;
    for (const auto& w : weight_spaces(m)) {
        Subspace s = span_of(2, {w.re, w.im});
        if (s.dim() == 2) return true;
        if (std::find(lines.begin(), lines.end(), s) == lines.end()) lines.push_back(s);
    }
    return lines.size() >= 3;
}

bool indecomposable_class_check(const OrthogonalModule& m, const QuadraticCocycle& z) {
    auto tag = standard_case(m.l);
    if (!tag) throw UnsupportedError("indecomposable_class_check: l is not a standard case");
    if (!admissible_class_check(m, z).admissible) return false;
    CaseNormalForm nf = case_normal_form(m, z);
    const std::size_t n = m.l.dim(), a = m.dim();
    const Cochain& ap = nf.z.alpha;
    Subspace al = invariants_split(m).a_l;
    auto e = [&](std::size_t i) { return unit_vector(n, i); };
    switch (*tag) {
        case CaseTag::n2:
        case CaseTag::r3m1:
            if (!nf.alpha_class) return al.is_zero() && !nf.z.gamma.is_zero();
            return al == span_of(a, {ev2(ap, e(1), e(2))}) &&
                   nondegenerate(m.form, span_of(a, {ev2(ap, e(0), e(1)), ev2(ap, e(0), e(2))}));
        case CaseTag::h1:
            return nf.alpha_class && span_of(a, {ev2(ap, e(2), e(0)), ev2(ap, e(2), e(1))}) == al;
        case CaseTag::abelian: {
            Subspace alp = intersect(al, m.split().plus), alm = intersect(al, m.split().minus);
            if (alp.dim() == 1 && alm.dim() == 0) return nf.alpha_class;
            if (al.is_zero()) return !nf.alpha_class && abelian_triple_indecomposable(m);
            return false;
        }
        default:
            return al.is_zero();
    }
}

std::string triple_morphism_violation(const OrthogonalModule& m, const TripleMorphism& f) {
    const auto& t = f.target;
    const std::size_t n = m.l.dim();
    if (f.q.rows() != t.l.dim() || f.q.cols() != n) return "q has the wrong shape";
    if (f.j.rows() != m.dim() || f.j.cols() != t.dim()) return "j has the wrong shape";
    if (!is_homomorphism(m.l.alg, t.l.alg, f.q)) return "q is not a Lie homomorphism";
    if (f.q * m.l.theta != t.l.theta * f.q) return "q does not intertwine the involutions";
    if (f.j.transpose() * m.form * f.j != t.form) return "j is not isometric";
    if (m.theta * f.j != f.j * t.theta) return "j does not intertwine the involutions";
    for (std::size_t i = 0; i < n; ++i)
        if (m.rho[i] * f.j != f.j * t.rho_of(f.q.col(i))) return "j is not equivariant";
    return "";
}

QuadraticCocycle morphism_pullback(const OrthogonalModule& m, const TripleMorphism& f, const QuadraticCocycle& zi) {
    const std::size_t n = m.l.dim();
    QuadraticCocycle out = zero_cocycle(m);
    const auto& t2 = increasing_tuples(n, 2);
    for (std::size_t k = 0; k < t2.size(); ++k)
        out.alpha.value(k) = f.j * zi.alpha.eval({f.q.col(t2[k][0]), f.q.col(t2[k][1])});
    const auto& t3 = increasing_tuples(n, 3);
    for (std::size_t k = 0; k < t3.size(); ++k)
        out.gamma.value(k) = zi.gamma.eval({f.q.col(t3[k][0]), f.q.col(t3[k][1]), f.q.col(t3[k][2])});
    return out;
}

bool decomposition_witness_verify(const OrthogonalModule& m, const TripleMorphism& f1, const TripleMorphism& f2,
                                  const QuadraticCocycle& z1, const QuadraticCocycle& z2, const QuadraticCocycle& z) {
    if (!triple_morphism_violation(m, f1).empty() || !triple_morphism_violation(m, f2).empty()) return false;
    if ((f1.q.is_zero() && f1.j.is_zero()) || (f2.q.is_zero() && f2.j.is_zero())) return false;
    Matrix Q = f1.q.vcat(f2.q), J = f1.j.hcat(f2.j);
    if (!Q.is_square() || !J.is_square()) return false;
    if ((Q.rows() > 0 && !inverse(Q)) || (J.rows() > 0 && !inverse(J))) return false;
    if (!is_quadratic_cocycle(f1.target, z1) || !is_quadratic_cocycle(f2.target, z2)) return false;
    if (!is_theta_fixed(f1.target, z1) || !is_theta_fixed(f2.target, z2)) return false;
    if (!is_quadratic_cocycle(m, z) || !is_theta_fixed(m, z)) return false;
    QuadraticCocycle p1 = morphism_pullback(m, f1, z1), p2 = morphism_pullback(m, f2, z2);
    QuadraticCocycle s{p1.alpha + p2.alpha, p1.gamma + p2.gamma};
    if (!is_quadratic_cocycle(m, s)) return false;
    return s == z || find_plus_witness(m, s, z).has_value();
}

}  // namespace qsym
