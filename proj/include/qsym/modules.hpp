#ifndef QSYM_MODULES_HPP
#define QSYM_MODULES_HPP

#include "qsym/cases.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsym {

/* Orthogonal (l, theta_l)-module (a, <,>_a, theta_a) with rho given on the basis of l. */
struct OrthogonalModule {
    InvolutiveLie l;
    std::vector<Matrix> rho;
    Matrix form;
    Matrix theta;

    std::size_t dim() const { return form.rows(); }
    Matrix rho_of(const Vec& x) const;
    EigenSplit split() const { return eigensplit(theta); }
};

struct ModuleReport {
    bool homomorphism = true;
    bool skew = true;
    bool theta_isometric_involution = true;
    bool compatible = true;
    std::string first_violation;
    bool ok() const { return homomorphism && skew && theta_isometric_involution && compatible; }
};

ModuleReport check_orthogonal_module(const OrthogonalModule& m);
OrthogonalModule trivial_module(const InvolutiveLie& l, const Matrix& form, const Matrix& theta);
OrthogonalModule module_direct_sum(const OrthogonalModule& a, const OrthogonalModule& b);

/* Unital associative algebra generated by a family of n x n matrices. */
std::vector<Matrix> enveloping_algebra(const std::vector<Matrix>& gens, std::size_t n);
/* Trace-form radical of that algebra; basis of the ideal J. */
std::vector<Matrix> trace_radical(const std::vector<Matrix>& algebra);

/* Radical J.M and socle ann(J) of the module given by the generators. */
Subspace module_radical(const std::vector<Matrix>& gens, std::size_t n);
Subspace module_socle(const std::vector<Matrix>& gens, std::size_t n);
bool is_semisimple_action(const std::vector<Matrix>& gens, std::size_t n);
bool is_semisimple(const OrthogonalModule& m);

/* Action of the generators on an invariant subspace, in its basis. */
std::vector<Matrix> restrict_action(const std::vector<Matrix>& gens, const Subspace& u);
/* Induced action on ambient / u, in the coordinates of complement_in(u, ambient). */
std::vector<Matrix> quotient_action(const std::vector<Matrix>& gens, const Subspace& u);

struct InvariantsSplit {
    Subspace a_l;     // common kernel
    Subspace rho_la;  // sum of images
};
InvariantsSplit invariants_split(const OrthogonalModule& m);

/*
 * Joint weight space of commuting semisimple operators. A weight is re + i*im with re, im
 * functionals on l (values on the basis). For im != 0 the real space carries the pair of
 * conjugate weights and J is a complex structure on it with rho(L) = re(L) + im(L) J there.
 */
struct WeightSpace {
    Vec re;
    Vec im;
    Subspace space;
    std::optional<Matrix> J;
    bool is_real() const { return !J.has_value(); }
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* im normalized so its first nonzero entry is positive; sorted by (re, im). Throws UnsupportedError. */
std::vector<WeightSpace> weight_spaces(const std::vector<Matrix>& ops, std::size_t n);
std::vector<WeightSpace> weight_spaces(const OrthogonalModule& m);

/* Rational roots and conjugate pairs a +- bi (b > 0) of a rational polynomial; coefficients low to high. */
struct PolyRoots {
    std::vector<Scalar> real;
    std::vector<std::pair<Scalar, Scalar>> complex;
    bool complete = false;  // all roots found in Q(i)
};
PolyRoots gaussian_rational_roots(const Vec& coeffs);
Vec characteristic_polynomial(const Matrix& a);

enum class BlockKind {
    rho_plus,
    rho_minus,
    rho_tilde_plus,
    rho_tilde_minus,
    rho_double_prime,
    rho_zero,
    su2_rho_k_plus,
    su2_rho_k_minus,
    su2_rho_prime_k,
    sl2_rho_k_plus,
    sl2_rho_k_minus,
    sl2_rho_prime_k,
    sl2_adjoint
};

std::string block_kind_name(BlockKind k);
std::optional<BlockKind> block_kind_from_name(const std::string& s);

/*
 * weights: one functional on l0 = l/l' (rho_plus .. rho_tilde_minus) or two (mu, nu) for
 * rho_double_prime, given by values on the basis of l0 = quotient(l, l').
 * k: index for the su(2)/sl(2) kinds. signature: (p, q, r, s) for rho_zero.
 */
struct BlockSpec {
    BlockKind kind = BlockKind::rho_zero;
    std::vector<Vec> weights;
    int k = 0;
    std::array<std::size_t, 4> signature{0, 0, 0, 0};

    static BlockSpec zero(std::size_t p, std::size_t q, std::size_t r, std::size_t s);
    static BlockSpec weighted(BlockKind kind, Vec lambda);
    static BlockSpec double_prime(Vec mu, Vec nu);
    static BlockSpec indexed(BlockKind kind, int k);
    static BlockSpec adjoint() { return BlockSpec{BlockKind::sl2_adjoint, {}, 0, {0, 0, 0, 0}}; }
};

/* Standard pseudo-Euclidean space a+^{p,q} (+) a-^{r,s}: form diag(-1^p, 1^q, -1^r, 1^s), theta diag(1^{p+q}, -1^{r+s}) */
std::pair<Matrix, Matrix> standard_space(std::size_t p, std::size_t q, std::size_t r, std::size_t s);

OrthogonalModule build_block(const InvolutiveLie& l, const BlockSpec& spec);
/* Padding trivial block first, then the blocks in order. */
OrthogonalModule build_sum(const InvolutiveLie& l, const std::vector<BlockSpec>& specs,
                           std::array<std::size_t, 4> padding = {0, 0, 0, 0});

/* Solutions of rho(L)^T G + G rho(L) = 0 with G symmetric (or antisymmetric). */
std::vector<Matrix> invariant_bilinear_forms(const std::vector<Matrix>& rho, std::size_t n, bool symmetric);

/* Sign-normalize each functional (first nonzero entry positive) and sort lexicographically. */
std::vector<Vec> canonicalize_weights(const std::vector<Vec>& weights);
/* Lambda'': normalize mu and nu independently, then sort the pairs. */
std::vector<std::pair<Vec, Vec>> canonicalize_weight_pairs(const std::vector<std::pair<Vec, Vec>>& pairs);
Vec sign_normalize(const Vec& v);
bool lex_less(const Vec& a, const Vec& b);

/* Signature of the form on a+ and on a-. */
std::pair<Signature, Signature> module_signatures(const OrthogonalModule& m);

}  // namespace qsym

#endif
