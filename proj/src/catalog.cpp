#include "qsym/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qsym {

namespace {

struct FamilyInfo {
    Family f;
    const char* name;
    CaseTag tag;
};

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> t{
        {Family::f1a, "1a", CaseTag::abelian}, {Family::f1b, "1b", CaseTag::abelian},
        {Family::f1c, "1c", CaseTag::abelian}, {Family::f2a, "2a", CaseTag::abelian},
        {Family::f2b, "2b", CaseTag::abelian}, {Family::f2c, "2c", CaseTag::abelian},
        {Family::f3a, "3a", CaseTag::n2},      {Family::f3b, "3b", CaseTag::n2},
        {Family::f3c, "3c", CaseTag::n2},      {Family::f3d, "3d", CaseTag::n2},
        {Family::f4a, "4a", CaseTag::r3m1},    {Family::f4b, "4b", CaseTag::r3m1},
        {Family::f4c, "4c", CaseTag::r3m1},    {Family::f4d, "4d", CaseTag::r3m1},
        {Family::f5a, "5a", CaseTag::h1},      {Family::f5b, "5b", CaseTag::h1},
        {Family::f6, "6", CaseTag::su2},       {Family::f7, "7", CaseTag::sl2_split},
        {Family::f8, "8", CaseTag::sl2_compact}};
    return t;
}

bool is_line_family(Family f) {
    switch (f) {
        case Family::f1a: case Family::f1b: case Family::f1c:
        case Family::f3a: case Family::f3b: case Family::f3c: case Family::f3d:
        case Family::f4a: case Family::f4b: case Family::f4c: case Family::f4d:
            return true;
        default:
            return false;
    }
}

bool is_plane_family(Family f) {
    return f == Family::f2a || f == Family::f2b || f == Family::f2c || f == Family::f5a || f == Family::f5b;
}

bool is_index_family(Family f) { return f == Family::f6 || f == Family::f8; }

std::size_t l0_dim(Family f) {
    if (is_line_family(f)) return 1;
    if (is_plane_family(f)) return 2;
    return 0;
}

InvolutiveLie family_algebra(Family f) {
    if (f == Family::f1a || f == Family::f1b || f == Family::f1c) return case_abelian(1);
    return make_case(family_case(f), 2);
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_scalar(v[i]);
    return s + ")";
}

template <class T>
std::string list_str(const std::vector<T>& v, std::string (*f)(const T&)) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f(v[i]);
    return s + "]";
}

std::string int_str(const int& i) { return std::to_string(i); }

bool sorted_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 1 || (i && v[i - 1] > v[i])) return false;
    return true;
}

/* distinct lines through the origin spanned by nonzero plane vectors */
std::size_t distinct_lines(const std::vector<Vec>& rows) {
    std::set<Vec> lines;
    for (const auto& r : rows) {
        Scalar piv = sgn(r[0]) != 0 ? r[0] : r[1];
        lines.insert(vec_scale(r, Scalar(1) / piv));
    }
    return lines.size();
}

// ---------- plane-family normal forms under the continuous part of the equivalence ----------

using Rows = std::vector<Vec>;  // n rows of length 2: the weights on l0

Vec column_of(const Rows& m, std::size_t j) {
    Vec v(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i][j];
    return v;
}

Rows from_columns(const Vec& x, const Vec& y) {
    Rows out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = {x[i], y[i]};
    return out;
}

std::size_t rows_rank(const Rows& m) {
    if (m.empty()) return 0;
    return rank(Matrix::from_rows(m, 2));
}

/* RREF basis of the column space, as columns */
std::vector<Vec> column_space_basis(const Rows& m) {
    return Subspace::span(m.size(), {column_of(m, 0), column_of(m, 1)}).vectors();
}

/* Subspace span{y, z}, scaled by |y ^ z| when requested */
Rows normal_span(const Rows& m, bool keep_wedge) {
    const std::size_t n = m.size();
    std::size_t rk = rows_rank(m);
    if (rk == 0) return m;
    auto b = column_space_basis(m);
    if (rk == 1) return from_columns(b[0], Vec(n));
    if (!keep_wedge) return from_columns(b[0], b[1]);
    Subspace s = Subspace::span(n, b);
    Vec cy = *s.coords(column_of(m, 0)), cz = *s.coords(column_of(m, 1));
    Scalar det = cy[0] * cz[1] - cy[1] * cz[0];
    return from_columns(b[0], vec_scale(b[1], abs(det)));
}

/* (x ^ y, y) ~ (r x ^ y, r^2 y) */
Rows normal_h1_a(const Rows& m) {
    const std::size_t n = m.size();
    std::size_t rk = rows_rank(m);
    if (rk == 0) return m;
    Vec x = column_of(m, 0), y = column_of(m, 1);
    if (rk == 1) {
        Vec b = column_space_basis(m)[0];
        return vec_is_zero(y) ? from_columns(b, Vec(n)) : from_columns(Vec(n), b);
    }
    std::size_t j = 0;
    while (sgn(y[j]) == 0) ++j;
    Vec xh = vec_sub(x, vec_scale(y, x[j] / y[j]));
    Scalar wf = 0;
    for (std::size_t i = 0; i < n && sgn(wf) == 0; ++i)
        for (std::size_t k = i + 1; k < n && sgn(wf) == 0; ++k) wf = xh[i] * y[k] - xh[k] * y[i];
    return from_columns(vec_scale(xh, wf), vec_scale(y, Scalar(1) / (wf * wf)));
}

bool is_square_integer(const mpz_class& v, mpz_class& root) {
    if (v < 0) return false;
    root = sqrt(v);
    return root * root == v;
}

/* canonical rational point (A, B)/w with A >= B >= 0 on x^2 + y^2 = N */
Vec circle_point(const Scalar& N) {
    for (long w = 1;; ++w) {
        Scalar t = N * Scalar(w * w);
        if (t.get_den() != 1) continue;
        mpz_class T = t.get_num(), A = sqrt(T), B;
        for (; 2 * A * A >= T; --A)
            if (is_square_integer(T - A * A, B)) return {Scalar(A) / Scalar(w), Scalar(B) / Scalar(w)};
    }
}

/* orbit of M under O(2) acting on the right */
Rows normal_gram(const Rows& m) {
    std::size_t i0 = 0;
    while (i0 < m.size() && vec_is_zero(m[i0])) ++i0;
    if (i0 == m.size()) return m;
    const Vec& r = m[i0];
    Scalar N = r[0] * r[0] + r[1] * r[1];
    Vec t = circle_point(N);
    Scalar c = (r[0] * t[0] + r[1] * t[1]) / N, s = (r[0] * t[1] - r[1] * t[0]) / N;
    Matrix R = Matrix::from_rows({{c, s}, {-s, c}});
    Rows out;
    for (const auto& row : m) {
        Matrix v = Matrix::from_rows({row}, 2) * R;
        out.push_back(v.row(0));
    }
    for (std::size_t i = i0 + 1; i < out.size(); ++i) {
        Scalar cross = t[0] * out[i][1] - t[1] * out[i][0];
        if (sgn(cross) == 0) continue;
        if (cross < 0) {
            Matrix F = Matrix::from_rows({{t[0] * t[0] * 2 / N - 1, t[0] * t[1] * 2 / N},
                                          {t[0] * t[1] * 2 / N, t[1] * t[1] * 2 / N - 1}});
            for (auto& row : out) row = (Matrix::from_rows({row}, 2) * F).row(0);
        }
        break;
    }
    return out;
}

Rows plane_normal(Family f, const Rows& m) {
    switch (f) {
        case Family::f2a: return normal_span(m, false);
        case Family::f2b:
        case Family::f2c: return normal_span(m, true);
        case Family::f5a: return normal_h1_a(m);
        case Family::f5b: return normal_gram(m);
        default: throw std::logic_error("plane_normal on a non-plane family");
    }
}

Vec flat(const Rows& m) {
    Vec v;
    for (auto& r : m) v.insert(v.end(), r.begin(), r.end());
    return v;
}

/* lex-min normal form over the signed permutations acting within the lambda and mu blocks */
Rows plane_canonical(Family f, const Rows& lam, const Rows& mu) {
    const std::size_t p = lam.size(), q = mu.size(), n = p + q;
    std::vector<std::size_t> pp(p), pq(q);
    std::iota(pp.begin(), pp.end(), 0);
    std::iota(pq.begin(), pq.end(), 0);
    std::optional<Rows> best;
    Vec best_key;
    do {
        do {
            for (std::size_t signs = 0; signs < (std::size_t(1) << n); ++signs) {
                Rows m;
                for (std::size_t i = 0; i < p; ++i) m.push_back(lam[pp[i]]);
                for (std::size_t i = 0; i < q; ++i) m.push_back(mu[pq[i]]);
                for (std::size_t i = 0; i < n; ++i)
                    if (signs >> i & 1) m[i] = vec_scale(m[i], -1);
                Rows nf = plane_normal(f, m);
                Vec key = flat(nf);
                if (!best || std::lexicographical_compare(key.begin(), key.end(), best_key.begin(), best_key.end())) {
                    best = nf;
                    best_key = key;
                }
            }
        } while (std::next_permutation(pq.begin(), pq.end()));
    } while (std::next_permutation(pp.begin(), pp.end()));
    return *best;
}

std::vector<Vec> line_canonical(const std::vector<Vec>& w) {
    std::vector<Vec> out;
    for (const auto& x : w) {
        if (x.size() != 1) throw std::invalid_argument("weights on l0 = R need one entry");
        if (sgn(x[0]) == 0) throw std::invalid_argument("zero weight");
        out.push_back({abs(x[0])});
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// ---------- Hermitian witnesses ----------

struct LinearFa {
    std::optional<Vec> particular;
    std::vector<Vec> homogeneous;
};

/* F_a rho(L) = rho(F_l L) F_a, F_a = Id on a+, F_a alpha(L, L') = alpha(F_l L, F_l L'); F_a row-major */
LinearFa fa_system(const OrthogonalModule& m, const Cochain& alpha, const Matrix& Fl) {
    const std::size_t d = m.dim(), n = m.l.dim(), u = d * d;
    std::vector<Vec> rows;
    Vec rhs;
    auto unknown = [&](std::size_t i, std::size_t j) { return i * d + j; };
    for (std::size_t t = 0; t < n; ++t) {
        const Matrix& A = m.rho[t];
        Matrix B = m.rho_of(Fl.col(t));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                Vec row(u);
                for (std::size_t j = 0; j < d; ++j) row[unknown(r, j)] += A(j, c);
                for (std::size_t i = 0; i < d; ++i) row[unknown(i, c)] -= B(r, i);
                rows.push_back(row);
                rhs.push_back(0);
            }
    }
    for (const Vec& v : m.split().plus.vectors())
        for (std::size_t r = 0; r < d; ++r) {
            Vec row(u);
            for (std::size_t j = 0; j < d; ++j) row[unknown(r, j)] = v[j];
            rows.push_back(row);
            rhs.push_back(v[r]);
        }
    const auto& t2 = increasing_tuples(n, 2);
    for (const auto& ij : t2) {
        Vec a = alpha.at(ij), b = alpha.eval({Fl.col(ij[0]), Fl.col(ij[1])});
        for (std::size_t r = 0; r < d; ++r) {
            Vec row(u);
            for (std::size_t j = 0; j < d; ++j) row[unknown(r, j)] = a[j];
            rows.push_back(row);
            rhs.push_back(b[r]);
        }
    }
    LinearFa out;
    if (rows.empty()) {
        out.particular = Vec(u);
        out.homogeneous = Subspace::full(u).vectors();
        return out;
    }
    auto sol = solve_linear(Matrix::from_rows(rows, u), Matrix::column(rhs));
    if (sol.x) out.particular = sol.x->col(0);
    out.homogeneous = sol.kernel.vectors();
    return out;
}

Matrix unflat_square(const Vec& v, std::size_t d) { return Matrix(d, d, v); }

std::optional<Matrix> fa_candidate(const OrthogonalModule& m, const QuadraticCocycle& z, const Matrix& Fl) {
    const std::size_t d = m.dim();
    LinearFa sys = fa_system(m, z.alpha, Fl);
    if (!sys.particular) return std::nullopt;
    const std::size_t K = sys.homogeneous.size();
    auto try_vec = [&](const Vec& v) -> std::optional<Matrix> {
        HermitianWitness w{Fl, unflat_square(v, d)};
        if (hermitian_violation(m, z, w).empty()) return w.F_a;
        return std::nullopt;
    };
    if (K <= 6) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < K; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            Vec v = *sys.particular;
            std::size_t c = code;
            for (std::size_t i = 0; i < K; ++i, c /= 3) {
                int coef = static_cast<int>(c % 3) - 1;
                if (coef) v = vec_add(v, vec_scale(sys.homogeneous[i], coef));
            }
            if (auto f = try_vec(v)) return f;
        }
        return std::nullopt;
    }
    if (auto f = try_vec(*sys.particular)) return f;
    for (const auto& h : sys.homogeneous)
        for (int coef : {1, -1})
            if (auto f = try_vec(vec_add(*sys.particular, vec_scale(h, coef)))) return f;
    return std::nullopt;
}

Matrix standard_fl(CaseTag t) {
    switch (t) {
        case CaseTag::abelian: return Matrix::from_rows({{0, -1}, {1, 0}});
        case CaseTag::h1: return Matrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
        case CaseTag::su2: return Matrix::from_rows({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
        case CaseTag::sl2_compact: {
            Scalar h(1, 2);
            // H -> -(X+Y), X -> (H+X-Y)/2, Y -> (H-X+Y)/2
            return Matrix::from_rows({{0, h, h}, {-1, h, -h}, {-1, -h, h}});
        }
        default: throw std::invalid_argument("no standard complex structure for " + case_name(t));
    }
}

OrthogonalModule restrict_block(const OrthogonalModule& m, std::size_t off, std::size_t d) {
    OrthogonalModule b{m.l, {}, m.form.block(off, off, d, d), m.theta.block(off, off, d, d)};
    for (const auto& r : m.rho) b.rho.push_back(r.block(off, off, d, d));
    return b;
}

Cochain restrict_values(const Cochain& c, std::size_t off, std::size_t d) {
    Cochain out(c.n(), c.degree(), d);
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t i = 0; i < d; ++i) out.value(k)[i] = c.value(k)[off + i];
    return out;
}

// ---------- desk enumeration helpers ----------

void multisets(const std::vector<Scalar>& vals, std::size_t size, std::size_t start, std::vector<Vec>& cur,
               std::vector<std::vector<Vec>>& out) {
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < vals.size(); ++i) {
        cur.push_back({vals[i]});
        multisets(vals, size, i, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Vec>> line_choices(const std::vector<Scalar>& w, std::size_t max_n) {
    std::vector<Scalar> vals = w;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<std::vector<Vec>> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::vector<Vec> cur;
        multisets(vals, n, 0, cur, out);
    }
    return out;
}

std::vector<std::vector<Vec>> plane_multisets(const std::vector<Vec>& pool, std::size_t n) {
    std::vector<std::vector<Vec>> out;
    std::vector<std::size_t> idx(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == n) {
            std::vector<Vec> v;
            for (auto i : idx) v.push_back(pool[i]);
            out.push_back(v);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            idx[pos] = i;
            rec(pos + 1, i);
        }
    };
    rec(0, 0);
    return out;
}

/* nondecreasing vectors of positive integers with sum <= budget */
void int_multisets(int budget, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int v = start; v <= budget; ++v) {
        cur.push_back(v);
        int_multisets(budget - v, v, cur, out);
        cur.pop_back();
    }
}

int isum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string sig_str(const Signature& s) {
    return std::to_string(s.n_minus) + "/" + std::to_string(s.n_plus) + "/" + std::to_string(s.n_zero);
}

std::string poly_str(const Vec& c) { return vec_str(c); }

}  // namespace

std::string family_name(Family f) {
    for (const auto& i : family_table())
        if (i.f == f) return i.name;
    throw std::logic_error("unknown family");
}

std::optional<Family> family_from_name(const std::string& s) {
    for (const auto& i : family_table())
        if (s == i.name) return i.f;
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> v = [] {
        std::vector<Family> out;
        for (const auto& i : family_table()) out.push_back(i.f);
        return out;
    }();
    return v;
}

CaseTag family_case(Family f) {
    for (const auto& i : family_table())
        if (i.f == f) return i.tag;
    throw std::logic_error("unknown family");
}

std::string entry_label(const CatalogEntry& e) {
    const auto& p = e.params;
    std::string s = family_name(e.family);
    if (!p.lambda.empty()) s += " lambda=" + list_str(p.lambda, &vec_str);
    if (!p.mu.empty()) s += " mu=" + list_str(p.mu, &vec_str);
    if (e.family == Family::f1c) s += " nu=" + format_scalar(p.nu);
    if (e.family == Family::f3a || e.family == Family::f4a) s += " kappa=" + std::to_string(p.kappa);
    if (e.family == Family::f3d || e.family == Family::f4d) s += " r=" + format_scalar(p.r);
    if (is_index_family(e.family)) {
        s += " k=" + list_str(p.k, &int_str) + " l=" + list_str(p.l, &int_str) + " m=" + list_str(p.m, &int_str);
    }
    if (e.family == Family::f7) s += " p=" + std::to_string(p.p);
    if (is_index_family(e.family) || e.family == Family::f7) s += " c=" + format_scalar(p.c);
    return s;
}

Validation validate_params(const CatalogEntry& e) {
    Validation v;
    auto fail = [&](const std::string& s) {
        v.ok = false;
        v.diagnostics.push_back(s);
    };
    const auto& p = e.params;
    const Family f = e.family;
    const std::size_t l0 = l0_dim(f);
    if (l0 == 0 && (!p.lambda.empty() || !p.mu.empty())) fail("family takes no weights");
    for (const auto* w : {&p.lambda, &p.mu})
        for (const auto& x : *w) {
            if (x.size() != l0) fail("weight " + vec_str(x) + " has length " + std::to_string(x.size()));
            else if (vec_is_zero(x)) fail("zero weight");
        }
    if (!v.ok) return v;
    if (is_line_family(f)) {
        for (const auto* w : {&p.lambda, &p.mu})
            for (std::size_t i = 0; i < w->size(); ++i) {
                if ((*w)[i][0] <= 0) fail("weights must be positive");
                if (i && (*w)[i - 1][0] > (*w)[i][0]) fail("weights must be nondecreasing");
            }
    }
    if (f == Family::f2a) {
        if (p.lambda.size() + p.mu.size() < 3) fail("2a needs p + q >= 3");
        std::vector<Vec> all = p.lambda;
        all.insert(all.end(), p.mu.begin(), p.mu.end());
        if (!all.empty() && distinct_lines(all) <= 2) fail("2a weights lie on the union of two lines");
    }
    if (f == Family::f1c) {
        if (sgn(p.nu) == 0) fail("nu must be nonzero");
    } else if (sgn(p.nu) != 0) {
        fail("nu is only used by 1c");
    }
    if (f == Family::f3a || f == Family::f4a) {
        if (p.kappa != 1 && p.kappa != -1) fail("kappa must be 1 or -1");
    } else if (p.kappa != 1) {
        fail("kappa is only used by 3a, 4a");
    }
    if (f == Family::f3d || f == Family::f4d) {
        if (p.r <= 0) fail("r must be positive");
    } else if (p.r != 1) {
        fail("r is only used by 3d, 4d");
    }
    if (!(is_index_family(f) || f == Family::f7) && sgn(p.c) != 0) fail("c is only used by 6, 7, 8");
    if (is_index_family(f)) {
        if (!sorted_positive(p.k) || !sorted_positive(p.l) || !sorted_positive(p.m))
            fail("k, l, m must be nondecreasing positive integers");
    } else if (!p.k.empty() || !p.l.empty() || !p.m.empty()) {
        fail("k, l, m are only used by 6, 8");
    }
    if (f != Family::f7 && p.p != 0) fail("p is only used by 7");
    return v;
}

CatalogEntry canonicalize_params(Family f, const CatalogParams& raw) {
    CatalogEntry e{f, raw};
    auto& p = e.params;
    if (is_line_family(f)) {
        p.lambda = line_canonical(p.lambda);
        p.mu = line_canonical(p.mu);
        if (f == Family::f1c) p.nu = abs(p.nu);
    } else if (is_plane_family(f)) {
        for (const auto* w : {&p.lambda, &p.mu})
            for (const auto& x : *w)
                if (x.size() != 2 || vec_is_zero(x)) throw std::invalid_argument("plane weights must be nonzero pairs");
        Rows nf = plane_canonical(f, p.lambda, p.mu);
        std::size_t np = p.lambda.size();
        p.lambda.assign(nf.begin(), nf.begin() + static_cast<long>(np));
        p.mu.assign(nf.begin() + static_cast<long>(np), nf.end());
    } else if (is_index_family(f)) {
        std::sort(p.k.begin(), p.k.end());
        std::sort(p.l.begin(), p.l.end());
        std::sort(p.m.begin(), p.m.end());
    }
    Validation v = validate_params(e);
    if (!v.ok) throw std::invalid_argument("invalid " + family_name(f) + " parameters: " + v.diagnostics.front());
    return e;
}

EntryData entry_data(const CatalogEntry& e) {
    Validation v = validate_params(e);
    if (!v.ok) throw std::invalid_argument("invalid entry " + entry_label(e) + ": " + v.diagnostics.front());
    const auto& p = e.params;
    const Family f = e.family;
    EntryData d;
    d.l = family_algebra(f);
    auto& B = d.blocks;
    const Vec one{1};
    switch (f) {
        case Family::f1a: B.push_back(BlockSpec::weighted(BlockKind::rho_tilde_minus, one)); break;
        case Family::f1b: B.push_back(BlockSpec::weighted(BlockKind::rho_minus, one)); break;
        case Family::f1c: B.push_back(BlockSpec::double_prime(one, {p.nu})); break;
        default: break;
    }
    switch (f) {
        case Family::f2b: d.padding = {0, 1, 0, 0}; break;
        case Family::f2c: d.padding = {1, 0, 0, 0}; break;
        case Family::f3b: case Family::f4b: case Family::f5a: d.padding = {0, 0, 0, 1}; break;
        case Family::f3d: case Family::f4d: d.padding = {0, 0, 0, 1}; break;
        case Family::f5b: d.padding = {0, 0, 0, 2}; break;
        default: break;
    }
    if (f == Family::f3c || f == Family::f3d) B.push_back(BlockSpec::weighted(BlockKind::rho_plus, one));
    if (f == Family::f4c || f == Family::f4d) B.push_back(BlockSpec::weighted(BlockKind::rho_tilde_plus, one));
    for (const auto& w : p.lambda) B.push_back(BlockSpec::weighted(BlockKind::rho_tilde_plus, w));
    for (const auto& w : p.mu) B.push_back(BlockSpec::weighted(BlockKind::rho_plus, w));
    const bool su = f == Family::f6;
    if (is_index_family(f)) {
        for (int k : p.k) B.push_back(BlockSpec::indexed(su ? BlockKind::su2_rho_k_plus : BlockKind::sl2_rho_k_plus, k));
        for (int k : p.l) B.push_back(BlockSpec::indexed(su ? BlockKind::su2_rho_k_minus : BlockKind::sl2_rho_k_minus, k));
        for (int k : p.m) B.push_back(BlockSpec::indexed(su ? BlockKind::su2_rho_prime_k : BlockKind::sl2_rho_prime_k, k));
    }
    if (f == Family::f7)
        for (std::size_t i = 0; i < p.p; ++i) B.push_back(BlockSpec::adjoint());
    d.a = build_sum(d.l, B, d.padding);

    const std::size_t na = d.a.dim();
    Cochain alpha = zero_alpha(d.a), gamma = zero_gamma(d.a);
    auto A = [&](std::size_t i) { return unit_vector(na, i); };
    const std::size_t X = 0, Y = 1, Z = 2;
    switch (f) {
        case Family::f2b: case Family::f2c: alpha.set({0, 1}, A(0)); break;
        case Family::f3b: case Family::f4b: alpha.set({Y, Z}, A(0)); break;
        case Family::f3c:
            alpha.set({X, Y}, A(0));
            alpha.set({X, Z}, A(1));
            break;
        case Family::f3d:
            alpha.set({X, Y}, vec_scale(A(1), p.r));
            alpha.set({X, Z}, vec_scale(A(2), p.r));
            alpha.set({Y, Z}, A(0));
            break;
        case Family::f4c:
        case Family::f4d: {
            // alpha(X, Y - Z) = s A1, alpha(X, Y + Z) = s A2
            std::size_t o = f == Family::f4d ? 1 : 0;
            Scalar s = f == Family::f4d ? p.r : Scalar(1);
            alpha.set({X, Y}, vec_scale(vec_add(A(o), A(o + 1)), s / 2));
            alpha.set({X, Z}, vec_scale(vec_sub(A(o + 1), A(o)), s / 2));
            if (f == Family::f4d) alpha.set({Y, Z}, A(0));
            break;
        }
        case Family::f5a: alpha.set({X, Z}, A(0)); break;
        case Family::f5b:
            alpha.set({X, Z}, A(0));
            alpha.set({Y, Z}, A(1));
            break;
        default: break;
    }
    if (f == Family::f3a || f == Family::f4a) gamma.set({0, 1, 2}, {Scalar(p.kappa)});
    if (is_index_family(f) || f == Family::f7) gamma.set({0, 1, 2}, {p.c});
    d.z = make_cocycle(d.a, alpha, gamma);
    return d;
}

std::string instance_violation(const Instance& inst) {
    const auto& g = inst.model.g;
    auto st = check_symmetric_triple(g);
    if (!st.S1) return "S1 fails";
    if (!st.S2) return "S2 fails";
    if (!st.S3) return "S3 fails";
    if (index_on_minus(g) != 2) return "index on g- is " + std::to_string(index_on_minus(g));
    if (inst.ideal != inst.model.l_star()) return "i(g) differs from l*";
    if (!inst.admissibility.admissible) return "class not admissible";
    if (!indecomposable_class_check(inst.data.a, inst.data.z)) return "class not indecomposable";
    return "";
}

Instance instantiate(const CatalogEntry& e) {
    Instance inst;
    inst.entry = e;
    inst.data = entry_data(e);
    inst.model = build_standard_model(inst.data.a, inst.data.z);
    inst.ideal = canonical_ideal(inst.model.g.g());
    inst.admissibility = admissible_class_check(inst.data.a, inst.data.z);
    std::string v = instance_violation(inst);
    if (!v.empty()) throw CatalogError(entry_label(e) + ": " + v);
    return inst;
}

std::string hermitian_violation(const OrthogonalModule& m, const QuadraticCocycle& z, const HermitianWitness& w) {
    const std::size_t n = m.l.dim(), d = m.dim();
    if (w.F_l.rows() != n || w.F_l.cols() != n || w.F_a.rows() != d || w.F_a.cols() != d) return "witness has the wrong shape";
    if (w.F_l * w.F_l != m.l.theta) return "F_l^2 != theta_l";
    for (const Vec& v : m.l.split().plus.vectors())
        if (w.F_l * v != v) return "F_l is not the identity on l+";
    if (w.F_a * w.F_a != m.theta) return "F_a^2 != theta_a";
    for (const Vec& v : m.split().plus.vectors())
        if (w.F_a * v != v) return "F_a is not the identity on a+";
    auto inv = inverse(w.F_a);
    if (!inv) return "F_a is not invertible";
    TripleMorphism f{m, w.F_l, *inv};
    std::string mv = triple_morphism_violation(m, f);
    if (!mv.empty()) return "(F_l, F_a^-1): " + mv;
    if (morphism_pullback(m, f, z) != z) return "pullback does not fix (alpha, gamma)";
    return "";
}

bool hermitian_verify(const OrthogonalModule& m, const QuadraticCocycle& z, const HermitianWitness& w) {
    return hermitian_violation(m, z, w).empty();
}

bool hermitian_verify(const CatalogEntry& e, const HermitianWitness& w) {
    EntryData d = entry_data(e);
    return hermitian_verify(d.a, d.z, w);
}

bool in_hermitian_list(const CatalogEntry& e) {
    if (!validate_params(e).ok) return false;
    const auto& p = e.params;
    switch (e.family) {
        case Family::f2b: case Family::f2c: case Family::f5b: return p.lambda.empty() && p.mu.empty();
        case Family::f6: case Family::f8: {
            auto ones = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; }); };
            return p.k.empty() && ones(p.l) && ones(p.m);
        }
        default: return false;
    }
}

HermitianWitness hermitian_witness_for(const CatalogEntry& e) {
    if (!in_hermitian_list(e)) throw std::invalid_argument(entry_label(e) + " is not in the Hermitian sublist");
    EntryData d = entry_data(e);
    Matrix Fl = standard_fl(family_case(e.family));
    const std::size_t na = d.a.dim();
    Matrix Fa(na, na);
    std::size_t off = 0;
    std::vector<std::size_t> dims;
    std::size_t pad = d.padding[0] + d.padding[1] + d.padding[2] + d.padding[3];
    if (pad) dims.push_back(pad);
    for (const auto& b : d.blocks) dims.push_back(build_block(d.l, b).dim());
    for (std::size_t bd : dims) {
        OrthogonalModule mb = restrict_block(d.a, off, bd);
        QuadraticCocycle zb{restrict_values(d.z.alpha, off, bd), d.z.gamma};
        auto f = fa_candidate(mb, zb, Fl);
        if (!f) throw std::logic_error("no block witness for " + entry_label(e));
        Fa.set_block(off, off, *f);
        off += bd;
    }
    HermitianWitness w{Fl, Fa};
    std::string v = hermitian_violation(d.a, d.z, w);
    if (!v.empty()) throw std::logic_error("constructed witness fails: " + v);
    return w;
}

std::optional<HermitianWitness> hermitian_witness_search(const OrthogonalModule& m, const QuadraticCocycle& z,
                                                         int bound) {
    const std::size_t n = m.l.dim();
    auto sp = m.l.split();
    const std::size_t k = sp.minus.dim();
    if (k % 2 != 0) return std::nullopt;
    Matrix Bm = sp.minus.basis(), Bp = sp.plus.basis();
    Matrix basis = Bp.hcat(Bm);
    Matrix binv = *inverse(basis);
    const std::size_t cells = k * k;
    const int span = 2 * bound + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= static_cast<std::size_t>(span);
    for (std::size_t code = 0; code < total; ++code) {
        Matrix J(k, k);
        std::size_t c = code;
        for (std::size_t i = 0; i < cells; ++i, c /= static_cast<std::size_t>(span))
            J(i / k, i % k) = static_cast<int>(c % static_cast<std::size_t>(span)) - bound;
        if (J * J != -Matrix::identity(k)) continue;
        Matrix inner = direct_sum(Matrix::identity(sp.plus.dim()), J);
        Matrix Fl = basis * inner * binv;
        if (Fl.rows() != n || !is_automorphism(m.l.alg, Fl)) continue;
        bool gamma_fixed = true;
        const auto& t3 = increasing_tuples(n, 3);
        for (const auto& t : t3)
            if (z.gamma.eval({Fl.col(t[0]), Fl.col(t[1]), Fl.col(t[2])}) != z.gamma.at(t)) gamma_fixed = false;
        if (!gamma_fixed) continue;
        if (auto fa = fa_candidate(m, z, Fl)) return HermitianWitness{Fl, *fa};
    }
    return std::nullopt;
}

std::size_t model_dimension(const EntryData& d) { return 2 * d.l.dim() + d.a.dim(); }

std::vector<CatalogEntry> desk_suite(const DeskLimits& lim) {
    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    auto add = [&](Family f, const CatalogParams& raw) {
        CatalogEntry e;
        try {
            e = canonicalize_params(f, raw);
        } catch (const std::invalid_argument&) {
            return;
        }
        std::string key = entry_label(e);
        if (!seen.insert(key).second) return;
        if (lim.max_dim) {
            std::size_t nl = family_algebra(f).dim();
            EntryData d = entry_data(e);
            if (2 * nl + d.a.dim() > lim.max_dim) return;
        }
        out.push_back(e);
    };
    auto lines = line_choices(lim.weights, lim.max_pq);
    const std::vector<Vec> pool{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}};
    for (Family f : all_families()) {
        if (is_line_family(f)) {
            for (const auto& lam : lines)
                for (const auto& mu : lines) {
                    CatalogParams p;
                    p.lambda = lam;
                    p.mu = mu;
                    if (f == Family::f1c) {
                        for (const auto& w : lim.weights) {
                            p.nu = w;
                            add(f, p);
                        }
                    } else if (f == Family::f3a || f == Family::f4a) {
                        for (int kap : {1, -1}) {
                            p.kappa = kap;
                            add(f, p);
                        }
                    } else if (f == Family::f3d || f == Family::f4d) {
                        for (const auto& r : lim.r_values) {
                            p.r = r;
                            add(f, p);
                        }
                    } else {
                        add(f, p);
                    }
                }
        } else if (is_plane_family(f)) {
            std::size_t lo = f == Family::f2a ? 3 : 0, hi = f == Family::f2a ? 3 : lim.max_pq_plane;
            for (std::size_t n = lo; n <= hi; ++n)
                for (std::size_t np = 0; np <= n; ++np)
                    for (const auto& lam : plane_multisets(pool, np))
                        for (const auto& mu : plane_multisets(pool, n - np)) {
                            CatalogParams p;
                            p.lambda = lam;
                            p.mu = mu;
                            add(f, p);
                        }
        } else if (is_index_family(f)) {
            std::vector<std::vector<int>> ks;
            std::vector<int> cur;
            int_multisets(static_cast<int>(lim.max_index_sum), 1, cur, ks);
            for (const auto& k : ks)
                for (const auto& l : ks)
                    for (const auto& m : ks) {
                        if (static_cast<std::size_t>(isum(k) + isum(l) + 2 * isum(m)) > lim.max_index_sum) continue;
                        for (const auto& c : lim.c_values) {
                            CatalogParams p;
                            p.k = k;
                            p.l = l;
                            p.m = m;
                            p.c = c;
                            add(f, p);
                        }
                    }
        } else {
            for (std::size_t n = 0; n <= lim.max_p7; ++n)
                for (const auto& c : lim.c_values) {
                    CatalogParams p;
                    p.p = n;
                    p.c = c;
                    add(f, p);
                }
        }
    }
    return out;
}

std::string InvariantVector::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < numbers.size(); ++i) s += (i ? "," : "") + std::to_string(numbers[i]);
    s += "] {";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? " " : "") + weights[i];
    return s + "} " + class_datum;
}

InvariantVector invariant_vector(const Instance& inst) {
    InvariantVector iv;
    const auto& g = inst.model.g;
    const auto& a = inst.data.a;
    auto push = [&](std::size_t x) { iv.numbers.push_back(static_cast<long>(x)); };
    auto tag_of_quotient = recognize_case(canonical_quotients(g, inst.ideal).a.l);
    iv.numbers.push_back(tag_of_quotient ? static_cast<long>(*tag_of_quotient) : -2);
    push(g.dim());
    Signature sg = form_signature(g.form()), sm = minus_signature(g);
    push(sg.n_minus);
    push(sg.n_plus);
    push(sm.n_minus);
    push(sm.n_plus);
    iv.numbers.push_back(-1);
    for (const auto& s : derived_series(g.g())) push(s.dim());
    iv.numbers.push_back(-1);
    for (const auto& s : lower_central_series(g.g())) push(s.dim());
    iv.numbers.push_back(-1);
    Subspace al = invariants_split(a).a_l;
    auto sp = a.split();
    push(intersect(al, sp.plus).dim());
    push(intersect(al, sp.minus).dim());
    push(a.dim());

    CaseTag tag = family_case(inst.entry.family);
    if (tag == CaseTag::su2 || tag == CaseTag::sl2_split || tag == CaseTag::sl2_compact) {
        Vec T = a.l.split().plus.vectors()[0];
        Matrix rt = a.rho_of(T);
        for (const auto* s : {&sp.plus, &sp.minus}) {
            if (s->is_zero()) {
                iv.weights.push_back("()");
                continue;
            }
            Matrix r = restrict_action({rt}, *s)[0];
            iv.weights.push_back(poly_str(characteristic_polynomial(r)));
        }
    } else {
        std::vector<std::string> ws;
        auto spaces = weight_spaces(a);
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            const auto& w = spaces[i];
            if (w.is_real() && !vec_is_zero(w.re) && sign_normalize(w.re) != w.re) continue;
            Subspace s = w.space;
            if (w.is_real() && !vec_is_zero(w.re)) {
                Vec neg = vec_scale(w.re, -1);
                for (const auto& u : spaces)
                    if (u.is_real() && u.re == neg) s = sum(s, u.space);
            }
            ws.push_back("re" + vec_str(w.re) + "im" + vec_str(w.im) + "d" + std::to_string(s.dim()) + "s" +
                         sig_str(form_signature(restrict_form(a.form, s))) + "+" +
                         std::to_string(intersect(s, sp.plus).dim()));
        }
        std::sort(ws.begin(), ws.end());
        iv.weights = ws;
    }
    CaseNormalForm nf = case_normal_form(a, inst.data.z);
    std::string cd;
    if (nf.alpha_class) {
        cd = "alpha";
        const auto& t2 = increasing_tuples(a.l.dim(), 2);
        for (std::size_t k = 0; k < t2.size(); ++k) cd += vec_str(nf.z.alpha.value(k));
    } else if (!nf.z.gamma.is_zero()) {
        cd = "gamma";
        for (std::size_t k = 0; k < nf.z.gamma.size(); ++k) cd += vec_str(nf.z.gamma.value(k));
    } else {
        cd = "zero";
    }
    iv.class_datum = cd;
    return iv;
}

std::vector<Collision> invariant_collisions(const std::vector<Instance>& insts) {
    std::vector<Collision> out;
    std::map<std::string, std::size_t> first;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        std::string key = invariant_vector(insts[i]).str();
        auto [it, fresh] = first.emplace(key, i);
        if (!fresh) out.push_back({insts[it->second].entry, insts[i].entry});
    }
    return out;
}

}  // namespace qsym
