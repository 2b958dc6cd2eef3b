#include "qsym/extension.hpp"

namespace qsym {

namespace {

std::vector<std::size_t> range_idx(std::size_t from, std::size_t count) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(from + i);
    return v;
}

Matrix embedding(std::size_t N, std::size_t from, std::size_t count) {
    Matrix e(N, count);
    for (std::size_t i = 0; i < count; ++i) e(from + i, i) = 1;
    return e;
}

/* coordinates of the columns of X in the basis B (columns); throws if not in the span */
Matrix coords_in(const Matrix& B, const Matrix& X) {
    auto sol = solve_linear(B, X);
    if (!sol.x) throw std::invalid_argument("vector outside the expected subspace");
    return *sol.x;
}

}  // namespace

Subspace StandardModel::l_star() const { return Subspace::coordinate(g.dim(), range_idx(l_star_offset(), n())); }
Subspace StandardModel::a_slot() const { return Subspace::coordinate(g.dim(), range_idx(a_offset(), m())); }
Subspace StandardModel::l_slot() const { return Subspace::coordinate(g.dim(), range_idx(l_offset(), n())); }
Matrix StandardModel::embed_a() const { return embedding(g.dim(), a_offset(), m()); }
Matrix StandardModel::embed_l() const { return embedding(g.dim(), l_offset(), n()); }
Matrix StandardModel::embed_l_star() const { return embedding(g.dim(), l_star_offset(), n()); }
Matrix StandardModel::project_l() const { return embed_l().transpose(); }

namespace {

std::vector<BracketTerm> standard_terms(const OrthogonalModule& a, const QuadraticCocycle& z) {
    const auto& l = a.l.alg;
    const std::size_t n = l.dim(), m = a.dim(), N = 2 * n + m;
    auto zs = [](std::size_t k) { return k; };
    auto as = [n](std::size_t b) { return n + b; };
    auto ls = [n, m](std::size_t i) { return n + m + i; };
    std::vector<std::vector<Vec>> T(N, std::vector<Vec>(N, Vec(N)));
    auto put = [&](std::size_t p, std::size_t q, const Vec& v) {
        T[p][q] = v;
        T[q][p] = vec_scale(v, -1);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v(N);
            for (std::size_t k = 0; k < n; ++k) {
                v[zs(k)] = z.gamma.scalar_at({i, j, k});
                v[ls(k)] = l.c(i, j, k);
            }
            Vec al = z.alpha.at({i, j});
            for (std::size_t b = 0; b < m; ++b) v[as(b)] = al[b];
            put(ls(i), ls(j), v);
        }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < m; ++b) {
            Vec v(N);
            for (std::size_t c = 0; c < m; ++c) v[as(c)] = a.rho[i](c, b);
            for (std::size_t k = 0; k < n; ++k) v[zs(k)] = -(a.form * z.alpha.at({i, k}))[b];
            put(ls(i), as(b), v);
        }
        for (std::size_t j = 0; j < n; ++j) {
            Vec v(N);
            for (std::size_t k = 0; k < n; ++k) v[zs(k)] = -l.c(i, k, j);
            put(ls(i), zs(j), v);
        }
    }
    for (std::size_t b1 = 0; b1 < m; ++b1)
        for (std::size_t b2 = b1 + 1; b2 < m; ++b2) {
            Vec v(N);
            for (std::size_t k = 0; k < n; ++k) v[zs(k)] = (a.form * a.rho[k])(b2, b1);
            put(as(b1), as(b2), v);
        }
    std::vector<BracketTerm> terms;
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = p + 1; q < N; ++q) {
            BracketTerm t{p, q, {}};
            for (std::size_t k = 0; k < N; ++k)
                if (sgn(T[p][q][k]) != 0) t.coeffs.push_back({k, T[p][q][k]});
            if (!t.coeffs.empty()) terms.push_back(std::move(t));
        }
    return terms;
}

std::vector<std::string> standard_names(const OrthogonalModule& a) {
    std::vector<std::string> names;
    for (auto& s : a.l.alg.names()) names.push_back(s + "*");
    for (std::size_t b = 0; b < a.dim(); ++b) names.push_back("A" + std::to_string(b + 1));
    for (auto& s : a.l.alg.names()) names.push_back(s);
    return names;
}

}  // namespace

LieAlgebra standard_bracket(const OrthogonalModule& a, const QuadraticCocycle& z) {
    return LieAlgebra::unchecked(2 * a.l.dim() + a.dim(), standard_names(a), standard_terms(a, z));
}

Matrix standard_form(const OrthogonalModule& a) {
    const std::size_t n = a.l.dim(), m = a.dim(), N = 2 * n + m;
    Matrix G(N, N);
    for (std::size_t k = 0; k < n; ++k) G(k, n + m + k) = G(n + m + k, k) = 1;
    G.set_block(n, n, a.form);
    return G;
}

Matrix standard_theta(const OrthogonalModule& a) {
    return direct_sum(direct_sum(a.l.theta.transpose(), a.theta), a.l.theta);
}

StandardModel build_standard_model(const OrthogonalModule& a, const QuadraticCocycle& z, bool require_fixed) {
    if (!is_quadratic_cocycle(a, z)) throw std::invalid_argument("build_standard_model: not a quadratic cocycle");
    if (require_fixed && !is_theta_fixed(a, z))
        throw std::invalid_argument("build_standard_model: cocycle not Theta-fixed");
    LieAlgebra g;
    try {
        g = LieAlgebra(2 * a.l.dim() + a.dim(), standard_names(a), standard_terms(a, z));
    } catch (const JacobiError& e) {
        throw std::logic_error(std::string("standard model violates Jacobi: ") + e.what());
    }
    const Matrix th = standard_theta(a);
    std::string v = metric_axiom_violation(g, standard_form(a), th);
    if (!v.empty() && require_fixed) throw std::logic_error("standard model fails metric axioms: " + v);
    if (!v.empty()) {
        // theta is only an automorphism for Theta-fixed cocycles
        if (!metric_axiom_violation(g, standard_form(a), Matrix::identity(g.dim())).empty())
            throw std::logic_error("standard model fails metric axioms: " + v);
        throw std::invalid_argument("standard model: theta is not an automorphism for this cocycle");
    }
    return StandardModel{MetricLieAlgebraWithInvolution(std::move(g), standard_form(a), th), a, z};
}

Signature model_signature(const Signature& a_minus, std::size_t dim_l_minus) {
    Signature s;
    s.n_minus = a_minus.n_minus + dim_l_minus;
    s.n_plus = a_minus.n_plus + dim_l_minus;
    s.n_zero = a_minus.n_zero;
    return s;
}

std::string extension_violation(const QuadraticExtension& ext) {
    const auto& g = ext.g.g();
    const auto& G = ext.g.form();
    const auto& th = ext.g.theta();
    const std::size_t N = g.dim(), m = ext.a.dim(), n = ext.a.l.dim();
    const Subspace& i = ext.ideal_i;
    if (i.ambient_dim() != N || ext.i_map.rows() != N || ext.i_map.cols() != m || ext.p_map.rows() != n ||
        ext.p_map.cols() != N)
        return "shape mismatch";
    if (!is_ideal(g, i)) return "i is not an ideal";
    if (!i.contains(map_subspace(th, i))) return "i is not theta-invariant";
    if (!restrict_form(G, i).is_zero()) return "i is not isotropic";
    Subspace ip = orthogonal(G, i);
    if (!i.contains(bracket_span(g, ip, ip))) return "i^perp / i is not abelian";
    for (std::size_t b = 0; b < m; ++b)
        if (!ip.contains(ext.i_map.col(b))) return "i_map leaves i^perp";
    Subspace img = sum(i, Subspace::span_columns(ext.i_map));
    if (img != ip || img.dim() != i.dim() + m) return "i_map is not an isomorphism onto i^perp / i";
    if (ext.i_map.transpose() * G * ext.i_map != ext.a.form) return "i_map is not isometric";
    Matrix dth = th * ext.i_map - ext.i_map * ext.a.theta;
    for (std::size_t b = 0; b < m; ++b)
        if (!i.contains(dth.col(b))) return "i_map does not intertwine the involutions";
    if (kernel(ext.p_map) != ip) return "kernel of p is not i^perp";
    if (ext.p_map * th != ext.a.l.theta * ext.p_map) return "p does not intertwine the involutions";
    for (std::size_t x = 0; x < N; ++x) {
        Vec px = ext.p_map.col(x);
        Matrix r = ext.a.rho_of(px);
        for (std::size_t b = 0; b < m; ++b) {
            Vec d = vec_sub(bracket(g, unit_vector(N, x), ext.i_map.col(b)), ext.i_map * (r * unit_vector(m, b)));
            if (!i.contains(d)) return "i_map is not equivariant";
        }
        for (std::size_t y = x + 1; y < N; ++y)
            if (ext.p_map * g.bracket_basis(x, y) != bracket(ext.a.l.alg, px, ext.p_map.col(y)))
                return "p is not a homomorphism";
    }
    return "";
}

QuadraticExtension canonical_extension(const StandardModel& d) {
    return {d.g, d.l_star(), d.a, d.embed_a(), d.project_l()};
}

Matrix extract_section(const QuadraticExtension& ext) {
    const auto& G = ext.g.form();
    const std::size_t N = ext.g.dim(), n = ext.a.l.dim();
    auto sp = eigensplit(ext.g.theta());
    Subspace ip = orthogonal(G, ext.ideal_i);
    std::vector<Vec> cols;
    for (const Subspace* ge : {&sp.plus, &sp.minus}) {
        Subspace ie = intersect(ext.ideal_i, *ge);
        Subspace W0 = complement_in(intersect(ip, *ge), *ge);
        const std::size_t k = W0.dim();
        if (k != ie.dim()) throw std::logic_error("extract_section: complement has the wrong dimension");
        if (k == 0) continue;
        const Matrix& W = W0.basis();
        const Matrix& U = ie.basis();
        Matrix B = W.transpose() * G * W;
        Matrix P = W.transpose() * G * U;
        auto Pi = inverse(P.transpose());
        if (!Pi) throw std::logic_error("extract_section: i does not pair with the complement");
        Matrix X = B * *Pi * Scalar(-1, 2);
        Matrix V = W + U * X.transpose();
        for (auto& c : V.columns()) cols.push_back(c);
    }
    Matrix V = Matrix::from_columns(cols, N);
    auto inv = inverse(ext.p_map * V);
    if (!inv || V.cols() != n) throw std::logic_error("extract_section: p is not invertible on the complement");
    Matrix s = V * *inv;
    if (!(s.transpose() * G * s).is_zero() || s * ext.a.l.theta != ext.g.theta() * s)
        throw std::logic_error("extract_section: section fails verification");
    return s;
}

bool is_model_isomorphism(const MetricLieAlgebraWithInvolution& src, const MetricLieAlgebraWithInvolution& dst,
                          const Matrix& psi) {
    const std::size_t N = src.dim();
    if (dst.dim() != N || psi.rows() != N || psi.cols() != N || !inverse(psi)) return false;
    if (psi.transpose() * dst.form() * psi != src.form()) return false;
    if (psi * src.theta() != dst.theta() * psi) return false;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (psi * src.g().bracket_basis(i, j) != bracket(dst.g(), psi.col(i), psi.col(j))) return false;
    return true;
}

Extraction extract_cocycle(const QuadraticExtension& ext, const Matrix& s) {
    const auto& g = ext.g.g();
    const auto& G = ext.g.form();
    const auto& l = ext.a.l.alg;
    const std::size_t n = l.dim(), m = ext.a.dim();
    Matrix M = ext.i_map.hcat(ext.ideal_i.basis());
    QuadraticCocycle z{Cochain(n, 2, m), Cochain(n, 3, 1)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec br = bracket(g, s.col(i), s.col(j));
            Vec x = vec_sub(br, s * l.bracket_basis(i, j));
            Vec c = coords_in(M, Matrix::column(x)).col(0);
            z.alpha.set({i, j}, Vec(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m)));
            for (std::size_t k = j + 1; k < n; ++k) z.gamma.set({i, j, k}, {bilinear(G, br, s.col(k))});
        }
    if (!is_quadratic_cocycle(ext.a, z) || !is_theta_fixed(ext.a, z))
        throw std::logic_error("extract_cocycle: extracted pair is not a Theta-fixed cocycle");
    auto Gi = inverse(G);
    Matrix pstar = *Gi * ext.p_map.transpose();  // columns p*(e^k)
    Matrix t = ext.i_map - pstar * (s.transpose() * G * ext.i_map);
    Matrix psi = pstar.hcat(t).hcat(s);
    StandardModel d = build_standard_model(ext.a, z, true);
    if (!is_model_isomorphism(d.g, ext.g, psi)) throw std::logic_error("extract_cocycle: Psi fails verification");
    return {z, psi};
}

Matrix build_psi(const OrthogonalModule& a, const QuadraticCochain& c) {
    const std::size_t n = a.l.dim(), m = a.dim(), N = 2 * n + m;
    Matrix T(m, n), S(n, n);
    for (std::size_t k = 0; k < n; ++k) T.set_col(k, c.tau.at({k}));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) S(i, j) = c.sigma.scalar_at({i, j});
    Matrix tstar = T.transpose() * a.form;
    Matrix psi = Matrix::identity(N);
    psi.set_block(0, n, -tstar);
    psi.set_block(0, n + m, S.transpose() - tstar * T * Scalar(1, 2));
    psi.set_block(n, n + m, T);
    return psi;
}

std::optional<QuadraticCochain> psi_to_cochain(const OrthogonalModule& a, const Matrix& psi) {
    const std::size_t n = a.l.dim(), m = a.dim(), N = 2 * n + m;
    if (psi.rows() != N || psi.cols() != N) return std::nullopt;
    Matrix T = psi.block(n, n + m, m, n);
    Matrix tstar = T.transpose() * a.form;
    Matrix S = (psi.block(0, n + m, n, n) + tstar * T * Scalar(1, 2)).transpose();
    if (S.transpose() != -S) return std::nullopt;
    QuadraticCochain c{Cochain(n, 1, m), Cochain(n, 2, 1)};
    for (std::size_t k = 0; k < n; ++k) c.tau.set({k}, T.col(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c.sigma.set({i, j}, {S(i, j)});
    if (build_psi(a, c) != psi) return std::nullopt;
    return c;
}

CanonicalChains canonical_chains(const LieAlgebra& g) {
    const std::size_t N = g.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < N; ++i) ads.push_back(ad_basis(g, i));
    CanonicalChains out;
    Subspace full = Subspace::full(N);
    Subspace cur = full;
    out.R.push_back(cur);
    while (!cur.is_zero()) {
        Subspace rad = module_radical(restrict_action(ads, cur), cur.dim());
        Subspace next = rad.is_zero() ? Subspace(N) : Subspace::span_columns(cur.basis() * rad.basis());
        if (next == cur) throw std::logic_error("canonical_chains: radical chain stalls");
        out.R.push_back(next);
        cur = next;
    }
    cur = Subspace(N);
    out.S.push_back(cur);
    while (cur != full) {
        Subspace soc = module_socle(quotient_action(ads, cur), N - cur.dim());
        Subspace W = complement_in(cur, full);
        Subspace next = sum(cur, Subspace::span_columns(W.basis() * soc.basis()));
        if (next == cur) throw std::logic_error("canonical_chains: socle chain stalls");
        out.S.push_back(next);
        cur = next;
    }
    return out;
}

Subspace canonical_ideal(const CanonicalChains& c, std::size_t n) {
    Subspace out(n);
    const std::size_t lm = c.R.size() - 1;
    for (std::size_t k = 1; k + 1 <= lm; ++k) {
        const Subspace& Sk = k < c.S.size() ? c.S[k] : c.S.back();
        out = sum(out, intersect(Sk, c.R[k]));
    }
    return out;
}

Subspace canonical_ideal(const LieAlgebra& g) { return canonical_ideal(canonical_chains(g), g.dim()); }

bool balanced_check(const QuadraticExtension& ext) { return ext.ideal_i == canonical_ideal(ext.g.g()); }

QuadraticExtension canonical_quotients(const MetricLieAlgebraWithInvolution& gm, const Subspace& i) {
    const auto& g = gm.g();
    const auto& G = gm.form();
    const auto& th = gm.theta();
    const std::size_t N = g.dim();
    if (i.ambient_dim() != N) throw DimensionError("canonical_quotients: ideal in a different space");
    if (!is_ideal(g, i)) throw std::invalid_argument("canonical_quotients: not an ideal");
    if (!i.contains(map_subspace(th, i))) throw std::invalid_argument("canonical_quotients: ideal not theta-invariant");
    if (!restrict_form(G, i).is_zero()) throw std::invalid_argument("canonical_quotients: ideal not isotropic");
    Subspace ip = orthogonal(G, i);
    if (!i.contains(bracket_span(g, ip, ip)))
        throw std::invalid_argument("canonical_quotients: i^perp / i is not abelian");
    Quotient q = quotient(g, ip);
    const std::size_t n = q.algebra.dim();
    InvolutiveLie l(q.algebra, q.projection * th * q.lift);
    Matrix W = complement_in(i, ip).basis();
    const std::size_t m = W.cols();
    Matrix M = W.hcat(i.basis());
    auto a_part = [&](const Matrix& X) { return coords_in(M, X).block(0, 0, m, X.cols()); };
    OrthogonalModule a;
    a.l = l;
    a.form = W.transpose() * G * W;
    a.theta = m ? a_part(th * W) : Matrix(0, 0);
    for (std::size_t j = 0; j < n; ++j) a.rho.push_back(m ? a_part(ad(g, q.lift.col(j)) * W) : Matrix(0, 0));
    auto rep = check_orthogonal_module(a);
    if (!rep.ok()) throw std::logic_error("canonical_quotients: induced module invalid: " + rep.first_violation);
    QuadraticExtension ext{gm, i, a, W, q.projection};
    std::string v = extension_violation(ext);
    if (!v.empty()) throw std::logic_error("canonical_quotients: " + v);
    return ext;
}

}  // namespace qsym
