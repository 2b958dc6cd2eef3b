#ifndef QSYM_METRIC_HPP
#define QSYM_METRIC_HPP

#include "qsym/lie.hpp"

namespace qsym {

class AxiomError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EigenSplit {
    Subspace plus;
    Subspace minus;
};

/* theta^2 = Id required */
EigenSplit eigensplit(const Matrix& theta);

/* Lie algebra with involutive automorphism theta. */
struct InvolutiveLie {
    LieAlgebra alg;
    Matrix theta;

    InvolutiveLie() = default;
    InvolutiveLie(LieAlgebra g, Matrix th);  // validates
    std::size_t dim() const { return alg.dim(); }
    EigenSplit split() const { return eigensplit(theta); }
};

/* (g, theta, <,>): invariant nondegenerate form, isometric involutive automorphism. */
class MetricLieAlgebraWithInvolution {
public:
    MetricLieAlgebraWithInvolution() = default;
    MetricLieAlgebraWithInvolution(LieAlgebra g, Matrix form, Matrix theta);  // throws AxiomError

    const LieAlgebra& g() const { return g_; }
    const Matrix& form() const { return form_; }
    const Matrix& theta() const { return theta_; }
    std::size_t dim() const { return g_.dim(); }
    InvolutiveLie involutive() const { return InvolutiveLie(g_, theta_); }

private:
    LieAlgebra g_;
    Matrix form_;
    Matrix theta_;
};

/* Empty string when all axioms hold, else a description of the first failure. */
std::string metric_axiom_violation(const LieAlgebra& g, const Matrix& form, const Matrix& theta);
bool is_automorphism(const LieAlgebra& g, const Matrix& f);
bool is_invariant_form(const LieAlgebra& g, const Matrix& form);

struct SymmetricTripleReport {
    bool S1 = false, S2 = false, S3 = false;
    bool two_of_three_consistent = true;
};

EigenSplit eigensplit(const MetricLieAlgebraWithInvolution& m);
SymmetricTripleReport check_symmetric_triple(const MetricLieAlgebraWithInvolution& m);
Signature minus_signature(const MetricLieAlgebraWithInvolution& m);
std::size_t index_on_minus(const MetricLieAlgebraWithInvolution& m);
MetricLieAlgebraWithInvolution direct_sum(const MetricLieAlgebraWithInvolution& a,
                                          const MetricLieAlgebraWithInvolution& b);

}  // namespace qsym

#endif
