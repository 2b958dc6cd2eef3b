#ifndef QSYM_COHOMOLOGY_HPP
#define QSYM_COHOMOLOGY_HPP

#include "qsym/modules.hpp"

namespace qsym {

/*
 * Alternating p-linear map l^p -> V (dim V = m; scalar cochains use m = 1),
 * stored on strictly increasing index tuples in lexicographic order.
 */
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t n, std::size_t p, std::size_t m);

    std::size_t n() const { return n_; }
    std::size_t degree() const { return p_; }
    std::size_t value_dim() const { return m_; }
    std::size_t size() const { return vals_.size(); }

    /* value on e_{i1} ^ ... ^ e_{ip} for any index order; zero on repeats */
    Vec at(const std::vector<std::size_t>& idx) const;
    void set(std::vector<std::size_t> idx, const Vec& v);
    /* value of the k-th increasing tuple */
    const Vec& value(std::size_t k) const { return vals_[k]; }
    Vec& value(std::size_t k) { return vals_[k]; }
    /* multilinear evaluation on arbitrary vectors */
    Vec eval(const std::vector<Vec>& args) const;
    /* scalar shortcut: component 0 */
    Scalar scalar_at(const std::vector<std::size_t>& idx) const { return at(idx)[0]; }

    bool is_zero() const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator*(const Scalar& s) const;
    Cochain operator-() const { return *this * Scalar(-1); }
    bool operator==(const Cochain& o) const {
        return n_ == o.n_ && p_ == o.p_ && m_ == o.m_ && vals_ == o.vals_;
    }
    bool operator!=(const Cochain& o) const { return !(*this == o); }

private:
    std::size_t n_ = 0, p_ = 0, m_ = 1;
    std::vector<Vec> vals_;
};

const std::vector<std::vector<std::size_t>>& increasing_tuples(std::size_t n, std::size_t p);

/* Chevalley-Eilenberg differential; rho empty means the trivial module. */
Cochain d_cochain(const LieAlgebra& l, const std::vector<Matrix>& rho, const Cochain& c);
Cochain d_scalar(const LieAlgebra& l, const Cochain& c);
Cochain d_module(const OrthogonalModule& m, const Cochain& c);

/* <alpha ^ tau>: sum over (p,q)-shuffles of sgn * <alpha(..), tau(..)> */
Cochain wedge_pair(const Cochain& alpha, const Cochain& tau, const Matrix& form);

/* (U alpha)(S x1, ..., S xp) */
Cochain pullback(const Cochain& c, const Matrix& S, const Matrix& U);

/* coordinates: tuple-major, value components inner */
Vec flatten(const Cochain& c);
Cochain unflatten(std::size_t n, std::size_t p, std::size_t m, const Vec& v);
/* matrix of d : C^p(l,V) -> C^{p+1}(l,V) in flattened coordinates */
Matrix d_matrix(const LieAlgebra& l, const std::vector<Matrix>& rho, std::size_t p, std::size_t m);
/* matrix of (S, U)^* on C^p */
Matrix pullback_matrix(std::size_t n, std::size_t p, const Matrix& S, const Matrix& U);

struct QuadraticCochain {
    Cochain tau;    // C^1(l,a)
    Cochain sigma;  // C^2(l)
    bool operator==(const QuadraticCochain& o) const { return tau == o.tau && sigma == o.sigma; }
};

struct QuadraticCocycle {
    Cochain alpha;  // C^2(l,a)
    Cochain gamma;  // C^3(l)
    bool operator==(const QuadraticCocycle& o) const { return alpha == o.alpha && gamma == o.gamma; }
    bool operator!=(const QuadraticCocycle& o) const { return !(*this == o); }
};

QuadraticCochain qc_identity(const OrthogonalModule& m);
QuadraticCocycle zero_cocycle(const OrthogonalModule& m);
Cochain zero_alpha(const OrthogonalModule& m);
Cochain zero_gamma(const OrthogonalModule& m);

/* d alpha = 0 and d gamma = 1/2 <alpha ^ alpha> */
bool is_quadratic_cocycle(const OrthogonalModule& m, const QuadraticCocycle& z);
/* Throws std::invalid_argument unless z is a quadratic cocycle. */
QuadraticCocycle make_cocycle(const OrthogonalModule& m, Cochain alpha, Cochain gamma);

QuadraticCochain qc_compose(const OrthogonalModule& m, const QuadraticCochain& a, const QuadraticCochain& b);
QuadraticCochain qc_inverse(const OrthogonalModule& m, const QuadraticCochain& c);
/* (alpha + d tau, gamma + d sigma + <(alpha + 1/2 d tau) ^ tau>) */
QuadraticCocycle qc_act(const OrthogonalModule& m, const QuadraticCocycle& z, const QuadraticCochain& c);

/* Theta = (theta_l, theta_a)^* */
/* a_valued selects theta_a on values; otherwise scalar cochains */
Cochain theta_pullback(const OrthogonalModule& m, const Cochain& c, bool a_valued);
QuadraticCochain theta_pullback(const OrthogonalModule& m, const QuadraticCochain& c);
QuadraticCocycle theta_pullback(const OrthogonalModule& m, const QuadraticCocycle& z);
std::pair<Cochain, Cochain> theta_split(const OrthogonalModule& m, const Cochain& c, bool a_valued);
QuadraticCochain qc_plus_part(const OrthogonalModule& m, const QuadraticCochain& c);
QuadraticCochain qc_minus_part(const OrthogonalModule& m, const QuadraticCochain& c);

bool is_theta_fixed(const OrthogonalModule& m, const QuadraticCocycle& z);
bool is_theta_fixed(const OrthogonalModule& m, const QuadraticCochain& c);

/* Basis of Z^2(l,a), optionally restricted to Theta-fixed cochains. */
std::vector<Cochain> alpha_cocycle_basis(const OrthogonalModule& m, bool theta_fixed);
/* Some gamma with d gamma = 1/2 <alpha ^ alpha> (Theta-fixed if requested); nullopt when obstructed. */
std::optional<Cochain> solve_gamma(const OrthogonalModule& m, const Cochain& alpha, bool theta_fixed);
/* Basis of closed scalar 3-cochains, optionally Theta-fixed. */
std::vector<Cochain> gamma_cocycle_basis(const OrthogonalModule& m, bool theta_fixed);

struct Invariantized {
    QuadraticCocycle z_plus;
    QuadraticCochain witness;  // z_plus . witness = z
};

/* c must satisfy Theta z = z . c, i.e. c = (2 tau, 2 sigma). Throws if it does not. */
Invariantized invariantize(const OrthogonalModule& m, const QuadraticCocycle& z, const QuadraticCochain& c);

bool equivalence_witness_verify(const OrthogonalModule& m, const QuadraticCocycle& z1, const QuadraticCocycle& z2,
                                const QuadraticCochain& c, bool require_plus);
/* For Theta-fixed z1, z2 with z1 . c = z2: the plus part (tau+, sigma+) of c, verified. */
std::optional<QuadraticCochain> plus_witness(const OrthogonalModule& m, const QuadraticCocycle& z1,
                                             const QuadraticCocycle& z2, const QuadraticCochain& c);

/* Decides [z1] = [z2] for Theta-fixed cocycles (linear in (tau, sigma) once d tau is fixed); verified witness. */
std::optional<QuadraticCochain> find_plus_witness(const OrthogonalModule& m, const QuadraticCocycle& z1,
                                                  const QuadraticCocycle& z2);

}  // namespace qsym

#endif
