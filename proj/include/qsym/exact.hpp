#ifndef QSYM_EXACT_HPP
#define QSYM_EXACT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsym {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/* "p/q" or "p"; accepts decimal integers and fractions, always canonical. */
Scalar parse_scalar(const std::string& s);
std::string format_scalar(const Scalar& x);

/* Dense row-major matrix of rationals. */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, Vec entries);
    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols = 0);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows = 0);
    static Matrix column(const Vec& v);
    static Matrix diagonal(const Vec& d);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const Vec& data() const { return a_; }

    Vec col(std::size_t j) const;
    Vec row(std::size_t i) const;
    std::vector<Vec> columns() const;
    void set_col(std::size_t j, const Vec& v);

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix hcat(const Matrix& rhs) const;
    Matrix vcat(const Matrix& rhs) const;
    Matrix select_columns(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;
    bool is_square() const { return r_ == c_; }
    bool is_symmetric() const;
    Scalar trace() const;

    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& b) const;
    Matrix operator*(const Scalar& s) const;
    Vec operator*(const Vec& v) const;
    Matrix& operator+=(const Matrix& b);
    bool operator==(const Matrix& b) const { return r_ == b.r_ && c_ == b.c_ && a_ == b.a_; }
    bool operator!=(const Matrix& b) const { return !(*this == b); }

private:
    std::size_t r_ = 0, c_ = 0;
    Vec a_;
};

Matrix direct_sum(const Matrix& a, const Matrix& b);
/* trace(a*b) without forming the product */
Scalar trace_product(const Matrix& a, const Matrix& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& s);
Vec unit_vector(std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
/* v^T G w */
Scalar bilinear(const Matrix& G, const Vec& v, const Vec& w);

/* Reduced row echelon form in place; returns pivot columns. */
std::vector<std::size_t> rref_inplace(Matrix& m);
std::size_t rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

/*
 * Subspace of Q^n. The basis columns are the nonzero rows of the RREF of any
 * spanning set, so equal subspaces have identical representations.
 */
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace span_columns(const Matrix& m);
    static Subspace full(std::size_t ambient);
    static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& idx);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vec> vectors() const { return basis_.columns(); }
    /* pivot row of each basis column */
    const std::vector<std::size_t>& pivots() const { return piv_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& u) const;
    /* coordinates of v in the basis; empty if v is not in the subspace */
    std::optional<Vec> coords(const Vec& v) const;
    bool is_zero() const { return dim() == 0; }
    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t n_ = 0;
    Matrix basis_;
    std::vector<std::size_t> piv_;
};

struct LinearSolution {
    std::optional<Matrix> x;
    Subspace kernel;
};

LinearSolution solve_linear(const Matrix& A, const Matrix& b);
Subspace kernel(const Matrix& A);
Subspace image(const Matrix& A);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/* W with U (+) W = V, spanned by basis vectors of V chosen greedily in echelon order */
Subspace complement_in(const Subspace& u, const Subspace& v);
/* image of a subspace under a linear map */
Subspace map_subspace(const Matrix& f, const Subspace& u);
/* {v in ambient : <v,u> = 0 for all u in U} w.r.t. the Gram matrix G */
Subspace orthogonal(const Matrix& G, const Subspace& u);
/* Gram matrix of G restricted to the basis of U */
Matrix restrict_form(const Matrix& G, const Subspace& u);

struct Signature {
    std::size_t n_minus = 0, n_plus = 0, n_zero = 0;
    bool operator==(const Signature& o) const {
        return n_minus == o.n_minus && n_plus == o.n_plus && n_zero == o.n_zero;
    }
};

Signature form_signature(const Matrix& G);

}  // namespace qsym

#endif
