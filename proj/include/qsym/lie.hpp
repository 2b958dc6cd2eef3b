#ifndef QSYM_LIE_HPP
#define QSYM_LIE_HPP

#include "qsym/exact.hpp"

#include <array>
#include <string>
#include <vector>

namespace qsym {

class JacobiError : public std::invalid_argument {
public:
    JacobiError(const std::string& msg, std::array<std::size_t, 3> t)
        : std::invalid_argument(msg), triple(t) {}
    std::array<std::size_t, 3> triple;
};

struct BracketTerm {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, Scalar>> coeffs;
};

struct JacobiReport {
    Scalar defect;  // max |J(e_i,e_j,e_k)_m|
    bool ok = true;
    std::array<std::size_t, 3> first_violation{0, 0, 0};
};

/* Finite-dimensional Lie algebra given by structure constants c^k_{ij}. */
class LieAlgebra {
public:
    LieAlgebra() = default;
    /* brackets for i<j only; the rest follows by antisymmetry. Throws JacobiError. */
    LieAlgebra(std::size_t dim, std::vector<std::string> names, const std::vector<BracketTerm>& brackets);
    /* raw structure constants c[(i*n+j)*n+k]; validated */
    static LieAlgebra from_constants(std::size_t dim, std::vector<std::string> names, Vec c);
    static LieAlgebra abelian(std::size_t dim, std::vector<std::string> names = {});
    /* no validation; for tests that exercise the defect report */
    static LieAlgebra unchecked(std::size_t dim, std::vector<std::string> names,
                                const std::vector<BracketTerm>& brackets);

    std::size_t dim() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    const Vec& constants() const { return c_; }
    /* [e_i, e_j] */
    Vec bracket_basis(std::size_t i, std::size_t j) const;
    /* nonzero brackets with i<j */
    std::vector<BracketTerm> bracket_table() const;
    bool is_abelian() const;

private:
    std::size_t n_ = 0;
    std::vector<std::string> names_;
    Vec c_;
    void set_from_terms(const std::vector<BracketTerm>& brackets);
};

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);
JacobiReport jacobi_defect(const LieAlgebra& g);
/* matrix of ad x */
Matrix ad(const LieAlgebra& g, const Vec& x);
Matrix ad_basis(const LieAlgebra& g, std::size_t i);
Matrix killing_form(const LieAlgebra& g);
Subspace derived_subalgebra(const LieAlgebra& g);
/* [U, V] as a subspace */
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v);
Subspace center(const LieAlgebra& g);
Subspace radical(const LieAlgebra& g);
bool is_subalgebra(const LieAlgebra& g, const Subspace& u);
bool is_ideal(const LieAlgebra& g, const Subspace& u);
bool is_solvable(const LieAlgebra& g);
std::vector<Subspace> derived_series(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

struct Quotient {
    LieAlgebra algebra;
    Matrix projection;  // dim(g/I) x dim g, kills I
    Matrix lift;        // dim g x dim(g/I), columns span the chosen complement
};

Quotient quotient(const LieAlgebra& g, const Subspace& ideal);
/* Lie algebra structure on a subalgebra in its canonical basis */
LieAlgebra restrict_to_subalgebra(const LieAlgebra& g, const Subspace& u);

bool is_homomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& f);
/* direct sum with block structure constants */
LieAlgebra lie_direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace qsym

#endif
