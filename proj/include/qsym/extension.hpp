#ifndef QSYM_EXTENSION_HPP
#define QSYM_EXTENSION_HPP

#include "qsym/cohomology.hpp"

namespace qsym {

/*
 * d = l* (+) a (+) l with basis e^1..e^n, A_1..A_m, L_1..L_n in that order.
 * e^k is the dual basis of l.
 */
struct StandardModel {
    MetricLieAlgebraWithInvolution g;
    OrthogonalModule a;  // carries (l, theta_l) as a.l
    QuadraticCocycle z;

    std::size_t n() const { return a.l.dim(); }
    std::size_t m() const { return a.dim(); }
    std::size_t l_star_offset() const { return 0; }
    std::size_t a_offset() const { return n(); }
    std::size_t l_offset() const { return n() + m(); }
    Subspace l_star() const;
    Subspace a_slot() const;
    Subspace l_slot() const;
    /* a -> d and d -> l for the markers */
    Matrix embed_a() const;
    Matrix embed_l() const;
    Matrix embed_l_star() const;
    Matrix project_l() const;
};

/* Shape check only: bracket table and form; no cocycle or Theta condition. */
LieAlgebra standard_bracket(const OrthogonalModule& a, const QuadraticCocycle& z);
Matrix standard_form(const OrthogonalModule& a);
Matrix standard_theta(const OrthogonalModule& a);

/* Throws std::invalid_argument if z is not a cocycle or (require_fixed) not Theta-fixed. */
StandardModel build_standard_model(const OrthogonalModule& a, const QuadraticCocycle& z, bool require_fixed = true);

/* Signature on g_- from the signature on a_- and dim l_- */
Signature model_signature(const Signature& a_minus, std::size_t dim_l_minus);

/*
 * (g, theta, i, i_map, p_map). Classes in g/i are represented by vectors of g:
 * i_map is dim g x dim a with columns in i^perp, p_map is dim l x dim g and vanishes on i^perp.
 */
struct QuadraticExtension {
    MetricLieAlgebraWithInvolution g;
    Subspace ideal_i;
    OrthogonalModule a;
    Matrix i_map;
    Matrix p_map;
};

/* Empty string when all extension conditions hold. */
std::string extension_violation(const QuadraticExtension& ext);
QuadraticExtension canonical_extension(const StandardModel& d);

/* s : l -> g with p s = Id, s theta_l = theta s, s(l) isotropic; dim g x dim l */
Matrix extract_section(const QuadraticExtension& ext);

struct Extraction {
    QuadraticCocycle z;  // Theta-fixed
    Matrix psi;          // d_z -> g, verified isomorphism of metric Lie algebras with involution
};
Extraction extract_cocycle(const QuadraticExtension& ext, const Matrix& s);

/* Block matrix of Psi(c) on l* (+) a (+) l; an isomorphism d_{z.c} -> d_z */
Matrix build_psi(const OrthogonalModule& a, const QuadraticCochain& c);
/* Inverse of build_psi for block unitriangular Psi; nullopt if not of that shape */
std::optional<QuadraticCochain> psi_to_cochain(const OrthogonalModule& a, const Matrix& psi);
/* psi is a Lie isomorphism src -> dst, isometric and theta-equivariant */
bool is_model_isomorphism(const MetricLieAlgebraWithInvolution& src, const MetricLieAlgebraWithInvolution& dst,
                          const Matrix& psi);

struct CanonicalChains {
    std::vector<Subspace> S;  // S_0 = 0 ascending to g
    std::vector<Subspace> R;  // R_0 = g descending to 0
};
CanonicalChains canonical_chains(const LieAlgebra& g);
/* sum over 1 <= k <= l_- - 1 of S_k cap R_k, with R_{l_-} = 0 */
Subspace canonical_ideal(const LieAlgebra& g);
Subspace canonical_ideal(const CanonicalChains& c, std::size_t n);

bool balanced_check(const QuadraticExtension& ext);

/* Canonical extension of (g, theta, i); i theta-invariant isotropic ideal with i^perp / i abelian. */
QuadraticExtension canonical_quotients(const MetricLieAlgebraWithInvolution& g, const Subspace& i);

}  // namespace qsym

#endif
