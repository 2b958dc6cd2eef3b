#ifndef QSYM_TEST_SUPPORT_HPP
#define QSYM_TEST_SUPPORT_HPP

#include <random>

#include "qsym/cases.hpp"
#include "qsym/cohomology.hpp"

namespace qsym::testing {

using Rng = std::mt19937_64;

inline Scalar rnd_scalar(Rng& rng, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    return Scalar(d(rng));
}

inline Scalar rnd_fraction(Rng& rng, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range), q(1, 3);
    Scalar s(d(rng), q(rng));
    s.canonicalize();
    return s;
}

inline Vec rnd_vec(Rng& rng, std::size_t n, int range = 3) {
    Vec v(n);
    for (auto& x : v) x = rnd_scalar(rng, range);
    return v;
}

inline Vec rnd_nonzero_vec(Rng& rng, std::size_t n, int range = 2) {
    for (;;) {
        Vec v = rnd_vec(rng, n, range);
        if (!vec_is_zero(v)) return v;
    }
}

inline Matrix rnd_matrix(Rng& rng, std::size_t r, std::size_t c, int range = 3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rnd_scalar(rng, range);
    return m;
}

inline std::size_t rnd_index(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    return d(rng);
}

inline Cochain rnd_cochain(Rng& rng, std::size_t n, std::size_t p, std::size_t m, int range = 2) {
    Cochain c(n, p, m);
    for (std::size_t k = 0; k < c.size(); ++k) c.value(k) = rnd_vec(rng, m, range);
    return c;
}

inline QuadraticCochain rnd_qcochain(Rng& rng, const OrthogonalModule& m, int range = 2) {
    return {rnd_cochain(rng, m.l.dim(), 1, m.dim(), range), rnd_cochain(rng, m.l.dim(), 2, 1, range)};
}

inline const std::vector<CaseTag>& all_cases() {
    static const std::vector<CaseTag> v{CaseTag::abelian, CaseTag::n2,       CaseTag::r3m1,       CaseTag::h1,
                                        CaseTag::su2,     CaseTag::sl2_split, CaseTag::sl2_compact};
    return v;
}

inline InvolutiveLie rnd_case_algebra(Rng& rng, CaseTag t) {
    if (t == CaseTag::abelian) return case_abelian(1 + rnd_index(rng, 2));
    return make_case(t);
}

/* random block sum of total dimension in [1, max_dim] */
inline OrthogonalModule rnd_module(Rng& rng, const InvolutiveLie& l, CaseTag t, std::size_t max_dim) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<BlockSpec> specs;
        std::array<std::size_t, 4> pad{0, 0, 0, 0};
        std::size_t nblocks = rnd_index(rng, 3);
        bool abelian_kinds = t == CaseTag::abelian || t == CaseTag::n2 || t == CaseTag::r3m1 || t == CaseTag::h1;
        std::size_t k0 = abelian_kinds ? quotient(l.alg, derived_subalgebra(l.alg)).algebra.dim() : 0;
        for (std::size_t b = 0; b < nblocks; ++b) {
            if (abelian_kinds) {
                std::size_t r = rnd_index(rng, 5);
                if (r < 4) {
                    BlockKind k = std::array{BlockKind::rho_plus, BlockKind::rho_minus, BlockKind::rho_tilde_plus,
                                             BlockKind::rho_tilde_minus}[r];
                    specs.push_back(BlockSpec::weighted(k, rnd_nonzero_vec(rng, k0)));
                } else {
                    specs.push_back(BlockSpec::double_prime(rnd_nonzero_vec(rng, k0), rnd_nonzero_vec(rng, k0)));
                }
            } else if (t == CaseTag::su2) {
                std::size_t r = rnd_index(rng, 3);
                BlockKind k = std::array{BlockKind::su2_rho_k_plus, BlockKind::su2_rho_k_minus,
                                         BlockKind::su2_rho_prime_k}[r];
                specs.push_back(BlockSpec::indexed(k, 1));
            } else if (t == CaseTag::sl2_compact) {
                std::size_t r = rnd_index(rng, 3);
                BlockKind k = std::array{BlockKind::sl2_rho_k_plus, BlockKind::sl2_rho_k_minus,
                                         BlockKind::sl2_rho_prime_k}[r];
                specs.push_back(BlockSpec::indexed(k, 1));
            } else {
                specs.push_back(BlockSpec::adjoint());
            }
        }
        for (auto& p : pad) p = rnd_index(rng, 2);
        OrthogonalModule m;
        try {
            m = build_sum(l, specs, pad);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (m.dim() >= 1 && m.dim() <= max_dim) return m;
    }
    return build_sum(l, {}, {0, 1, 0, 0});
}

/* Theta-fixed quadratic cocycle built from Z^2 and a gamma solving the cocycle equation */
inline QuadraticCocycle rnd_fixed_cocycle(Rng& rng, const OrthogonalModule& m) {
    auto za = alpha_cocycle_basis(m, true);
    auto zg = gamma_cocycle_basis(m, true);
    for (int attempt = 0; attempt < 20; ++attempt) {
        Cochain alpha = zero_alpha(m);
        for (auto& b : za) alpha = alpha + b * rnd_scalar(rng, 2);
        auto g = solve_gamma(m, alpha, true);
        if (!g) continue;
        Cochain gamma = *g;
        for (auto& b : zg) gamma = gamma + b * rnd_scalar(rng, 2);
        return make_cocycle(m, alpha, gamma);
    }
    Cochain gamma = zero_gamma(m);
    for (auto& b : zg) gamma = gamma + b * rnd_scalar(rng, 2);
    return make_cocycle(m, zero_alpha(m), gamma);
}

/* arbitrary quadratic cocycle: a Theta-fixed one moved by a random cochain */
inline QuadraticCocycle rnd_cocycle(Rng& rng, const OrthogonalModule& m) {
    return qc_act(m, rnd_fixed_cocycle(rng, m), rnd_qcochain(rng, m));
}

}  // namespace qsym::testing

#endif
