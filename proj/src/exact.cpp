#include "qsym/exact.hpp"

#include <algorithm>

namespace qsym {

Scalar parse_scalar(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ') t.push_back(ch);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    Scalar x;
    if (t.empty() || x.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    x.canonicalize();
    return x;
}

std::string format_scalar(const Scalar& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, Vec entries)
    : r_(rows), c_(cols), a_(std::move(entries)) {
    if (a_.size() != r_ * c_) throw DimensionError("matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows[0].size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    if (!cols.empty()) rows = cols[0].size();
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionError("ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::column(const Vec& v) { return from_columns({v}); }

Matrix Matrix::diagonal(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * c_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
}

std::vector<Vec> Matrix::columns() const {
    std::vector<Vec> out;
    out.reserve(c_);
    for (std::size_t j = 0; j < c_; ++j) out.push_back(col(j));
    return out;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
    if (v.size() != r_) throw DimensionError("set_col size");
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > r_ || c0 + nc > c_) throw DimensionError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw DimensionError("set_block out of range");
    for (std::size_t i = 0; i < b.r_; ++i)
        for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hcat(const Matrix& rhs) const {
    if (r_ != rhs.r_) throw DimensionError("hcat rows");
    Matrix m(r_, c_ + rhs.c_);
    m.set_block(0, 0, *this);
    m.set_block(0, c_, rhs);
    return m;
}

Matrix Matrix::vcat(const Matrix& rhs) const {
    if (c_ != rhs.c_) throw DimensionError("vcat cols");
    Matrix m(r_ + rhs.r_, c_);
    m.set_block(0, 0, *this);
    m.set_block(r_, 0, rhs);
    return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(r_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < r_; ++i) m(i, j) = (*this)(i, idx[j]);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Matrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Scalar Matrix::trace() const {
    if (r_ != c_) throw DimensionError("trace of non-square matrix");
    Scalar t = 0;
    for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::operator+(const Matrix& b) const {
    Matrix m = *this;
    m += b;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& b) {
    if (r_ != b.r_ || c_ != b.c_) throw DimensionError("matrix sum shape");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
    return *this;
}

Matrix Matrix::operator-(const Matrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw DimensionError("matrix difference shape");
    Matrix m = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= b.a_[k];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
    if (c_ != b.r_) throw DimensionError("matrix product shape");
    Matrix m(r_, b.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.c_; ++j) {
                const Scalar& y = b(k, j);
                if (sgn(y) != 0) m(i, j) += x * y;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

Vec Matrix::operator*(const Vec& v) const {
    if (c_ != v.size()) throw DimensionError("matrix-vector shape");
    Vec out(r_);
    for (std::size_t j = 0; j < c_; ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < r_; ++i) {
            const Scalar& x = (*this)(i, j);
            if (sgn(x) != 0) out[i] += x * v[j];
        }
    }
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Scalar trace_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionError("trace_product shape");
    Scalar t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a(i, j);
            if (sgn(x) == 0) continue;
            const Scalar& y = b(j, i);
            if (sgn(y) != 0) t += x * y;
        }
    return t;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vec_add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vec_sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Scalar& s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Scalar bilinear(const Matrix& G, const Vec& v, const Vec& w) {
    if (G.rows() != v.size() || G.cols() != w.size()) throw DimensionError("bilinear shape");
    Scalar s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Scalar t = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (sgn(w[j]) != 0 && sgn(G(i, j)) != 0) t += G(i, j) * w[j];
        s += v[i] * t;
    }
    return s;
}

std::vector<std::size_t> rref_inplace(Matrix& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && sgn(m(p, c)) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = c; j < C; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < C; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(Matrix m) { return rref_inplace(m).size(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Matrix(0, 0);
    Matrix aug = m.hcat(Matrix::identity(n));
    auto piv = rref_inplace(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    return aug.block(0, n, n, n);
}

Scalar determinant(Matrix m) {
    if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Subspace::Subspace(std::size_t ambient) : n_(ambient), basis_(ambient, 0) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Matrix rows(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw DimensionError("span vector size");
        for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = vectors[i][j];
    }
    auto piv = rref_inplace(rows);
    Subspace s;
    s.n_ = ambient;
    s.piv_ = piv;
    s.basis_ = Matrix(ambient, piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t j = 0; j < ambient; ++j) s.basis_(j, k) = rows(k, j);
    return s;
}

Subspace Subspace::span_columns(const Matrix& m) { return span(m.rows(), m.columns()); }

Subspace Subspace::full(std::size_t ambient) { return span_columns(Matrix::identity(ambient)); }

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& idx) {
    std::vector<Vec> vs;
    for (auto i : idx) vs.push_back(unit_vector(ambient, i));
    return span(ambient, vs);
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
    if (v.size() != n_) throw DimensionError("coords vector size");
    // reduced echelon: coefficient k is the entry at pivot k
    Vec c(dim());
    Vec r = v;
    for (std::size_t k = 0; k < dim(); ++k) {
        c[k] = v[piv_[k]];
        if (sgn(c[k]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (sgn(basis_(j, k)) != 0) r[j] -= c[k] * basis_(j, k);
    }
    if (!vec_is_zero(r)) return std::nullopt;
    return c;
}

bool Subspace::contains(const Vec& v) const { return coords(v).has_value(); }

bool Subspace::contains(const Subspace& u) const {
    if (u.n_ != n_) throw DimensionError("subspace ambient mismatch");
    for (std::size_t k = 0; k < u.dim(); ++k)
        if (!contains(u.basis_.col(k))) return false;
    return true;
}

LinearSolution solve_linear(const Matrix& A, const Matrix& b) {
    if (A.rows() != b.rows()) throw DimensionError("solve_linear: A.rows != b.rows");
    const std::size_t n = A.cols(), k = b.cols();
    Matrix aug = A.hcat(b);
    auto piv = rref_inplace(aug);
    LinearSolution out;
    out.kernel = kernel(A);
    for (auto p : piv)
        if (p >= n) return out;
    Matrix x(n, k);
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t j = 0; j < k; ++j) x(piv[r], j) = aug(r, n + j);
    out.x = x;
    return out;
}

Subspace kernel(const Matrix& A) {
    Matrix m = A;
    auto piv = rref_inplace(m);
    const std::size_t n = A.cols();
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec> vs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
        vs.push_back(std::move(v));
    }
    return Subspace::span(n, vs);
}

Subspace image(const Matrix& A) { return Subspace::span_columns(A); }

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("sum ambient mismatch");
    auto vs = u.vectors();
    for (auto& w : v.vectors()) vs.push_back(w);
    return Subspace::span(u.ambient_dim(), vs);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("intersect ambient mismatch");
    const std::size_t n = u.ambient_dim();
    if (u.dim() == 0 || v.dim() == 0) return Subspace(n);
    Matrix m = u.basis().hcat(-v.basis());
    Subspace k = kernel(m);
    std::vector<Vec> vs;
    for (auto& w : k.vectors()) {
        Vec x(u.dim());
        for (std::size_t i = 0; i < u.dim(); ++i) x[i] = w[i];
        vs.push_back(u.basis() * x);
    }
    return Subspace::span(n, vs);
}

Subspace complement_in(const Subspace& u, const Subspace& v) {
    if (!v.contains(u)) throw std::invalid_argument("complement_in: U is not contained in V");
    const std::size_t n = v.ambient_dim();
    std::vector<Vec> acc = u.vectors();
    std::vector<Vec> chosen;
    std::size_t r = u.dim();
    for (auto& b : v.vectors()) {
        if (r == v.dim()) break;
        acc.push_back(b);
        if (rank(Matrix::from_columns(acc, n)) > r) {
            ++r;
            chosen.push_back(b);
        } else {
            acc.pop_back();
        }
    }
    return Subspace::span(n, chosen);
}

Subspace map_subspace(const Matrix& f, const Subspace& u) {
    if (f.cols() != u.ambient_dim()) throw DimensionError("map_subspace shape");
    return Subspace::span_columns(f * u.basis());
}

Subspace orthogonal(const Matrix& G, const Subspace& u) {
    if (u.dim() == 0) return Subspace::full(G.rows());
    return kernel(u.basis().transpose() * G);
}

Matrix restrict_form(const Matrix& G, const Subspace& u) {
    return u.basis().transpose() * G * u.basis();
}

Signature form_signature(const Matrix& G) {
    if (!G.is_symmetric()) throw std::invalid_argument("form_signature: matrix is not symmetric");
    Matrix m = G;
    const std::size_t n = m.rows();
    Signature s;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && sgn(m(i, i)) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // all remaining diagonal entries vanish: use a hyperbolic pair
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && sgn(m(i, j)) != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) break;
            // e_a <- e_a + e_b gives diagonal 2 m(a,b)
            for (std::size_t k = 0; k < n; ++k) m(a, k) += m(b, k);
            for (std::size_t k = 0; k < n; ++k) m(k, a) += m(k, b);
            p = a;
        }
        done[p] = true;
        const Scalar d = m(p, p);
        if (sgn(d) > 0)
            ++s.n_plus;
        else
            ++s.n_minus;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || sgn(m(i, p)) == 0) continue;
            Scalar f = m(i, p) / d;
            for (std::size_t k = 0; k < n; ++k) m(i, k) -= f * m(p, k);
            for (std::size_t k = 0; k < n; ++k) m(k, i) -= f * m(k, p);
        }
    }
    s.n_zero = n - s.n_minus - s.n_plus;
    return s;
}

}  // namespace qsym
