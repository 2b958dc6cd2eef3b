#ifndef QSYM_ADMISSIBILITY_HPP
#define QSYM_ADMISSIBILITY_HPP

#include "qsym/cohomology.hpp"

namespace qsym {

enum class AdmissibilityMethod { generic, case_n2, case_r3m1, case_h1, case_abelian, case_semisimple };
std::string method_name(AdmissibilityMethod m);

struct AdmissibilityReport {
    bool T1 = false, semisimple = false, T2 = false, A0 = false, B0 = false;
    std::vector<std::pair<std::size_t, bool>> Ak, Bk;
    bool admissible = false;
    AdmissibilityMethod method = AdmissibilityMethod::generic;
};

bool check_T1(const InvolutiveLie& l);

/* Projection a -> a^l along rho(l)a. Throws std::invalid_argument for a non-semisimple module. */
Matrix alpha0_projection(const OrthogonalModule& m);
/* alpha_0(ker [,]_V) for V = l_- (minus_only) or V = l */
Subspace alpha0_kernel_image(const OrthogonalModule& m, const Cochain& alpha, bool minus_only);

bool check_T2(const OrthogonalModule& m, const QuadraticCocycle& z);
bool check_A0(const OrthogonalModule& m, const QuadraticCocycle& z);
bool check_B0(const OrthogonalModule& m, const QuadraticCocycle& z);
/* k >= 1; R_k(l) = 0 gives true. Throws UnsupportedError when weights leave Q(i) or the action does not commute. */
bool check_Ak(const OrthogonalModule& m, const QuadraticCocycle& z, std::size_t k);
bool check_Bk(const OrthogonalModule& m, const QuadraticCocycle& z, std::size_t k);
/* maximal submodule b_k of (B_k) */
Subspace bk_submodule(const OrthogonalModule& m, const QuadraticCocycle& z, std::size_t k);
/* m with R_{m+1}(l) = 0 */
std::size_t radical_length(const LieAlgebra& l);

/* z must be a Theta-fixed quadratic cocycle. */
AdmissibilityReport admissible_class_check(const OrthogonalModule& m, const QuadraticCocycle& z);

/* tag if l is literally make_case(tag) (any k for abelian) */
std::optional<CaseTag> standard_case(const InvolutiveLie& l);

/*
 * Normal form of a class: [alpha', 0] with alpha' in Z_l nonzero, or [0, gamma'].
 * Z_l is the Theta-fixed part of {alpha(l',l') in a^l, alpha(X, ad_X v) = rho(X) alpha(X, v)} for n(2), r(3,-1),
 * {alpha(X,Y) = 0, alpha(Z,l) in a^l} for h(1), C^2(l, a^l) for R^1, R^2, and 0 for su(2), sl(2).
 */
struct CaseNormalForm {
    CaseTag tag;
    bool alpha_class = false;
    QuadraticCocycle z;
    QuadraticCochain witness;  // input . witness = z, plus part
};
std::vector<Cochain> case_alpha_space(CaseTag t, const OrthogonalModule& m);
/* Throws UnsupportedError if l is not one of the cases in its standard basis (semisimple: any basis). */
CaseNormalForm case_normal_form(const OrthogonalModule& m, const QuadraticCocycle& z);

/* (R^k, -Id, a) with a^l = 0: no split of l and a into two factors */
bool abelian_triple_indecomposable(const OrthogonalModule& m);

/* false unless admissible; dispatch on the case tag. Throws UnsupportedError outside the seven cases. */
bool indecomposable_class_check(const OrthogonalModule& m, const QuadraticCocycle& z);

/* (q, j): (l, theta, a) -> (l_i, theta_i, a_i), q : l -> l_i, j : a_i -> a */
struct TripleMorphism {
    OrthogonalModule target;
    Matrix q;
    Matrix j;
};
std::string triple_morphism_violation(const OrthogonalModule& m, const TripleMorphism& f);
/* (q, j)^* z_i = (j alpha_i(q., q.), gamma_i(q., q., q.)) as cochains on l */
QuadraticCocycle morphism_pullback(const OrthogonalModule& m, const TripleMorphism& f, const QuadraticCocycle& zi);
/* both nonzero morphisms, sum an isomorphism, and z equivalent to the pullback sum via plus-part cochains */
bool decomposition_witness_verify(const OrthogonalModule& m, const TripleMorphism& f1, const TripleMorphism& f2,
                                  const QuadraticCocycle& z1, const QuadraticCocycle& z2, const QuadraticCocycle& z);

}  // namespace qsym

#endif
