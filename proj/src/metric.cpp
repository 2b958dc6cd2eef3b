#include "qsym/metric.hpp"

namespace qsym {

EigenSplit eigensplit(const Matrix& theta) {
    const std::size_t n = theta.rows();
    if (!theta.is_square() || theta * theta != Matrix::identity(n))
        throw AxiomError("eigensplit: theta is not an involution");
    return {kernel(theta - Matrix::identity(n)), kernel(theta + Matrix::identity(n))};
}

bool is_automorphism(const LieAlgebra& g, const Matrix& f) { return is_homomorphism(g, g, f); }

bool is_invariant_form(const LieAlgebra& g, const Matrix& form) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Matrix a = ad_basis(g, i);
        if (!(a.transpose() * form + form * a).is_zero()) return false;
    }
    return true;
}

InvolutiveLie::InvolutiveLie(LieAlgebra g, Matrix th) : alg(std::move(g)), theta(std::move(th)) {
    const std::size_t n = alg.dim();
    if (theta.rows() != n || theta.cols() != n) throw AxiomError("involution has wrong shape");
    if (theta * theta != Matrix::identity(n)) throw AxiomError("theta^2 != Id");
    if (!is_automorphism(alg, theta)) throw AxiomError("theta is not a Lie automorphism");
}

std::string metric_axiom_violation(const LieAlgebra& g, const Matrix& form, const Matrix& theta) {
    const std::size_t n = g.dim();
    if (form.rows() != n || form.cols() != n || theta.rows() != n || theta.cols() != n)
        return "shape mismatch";
    if (!form.is_symmetric()) return "form not symmetric";
    if (form_signature(form).n_zero != 0) return "form degenerate";
    for (std::size_t i = 0; i < n; ++i) {
        Matrix a = ad_basis(g, i);
        if (!(a.transpose() * form + form * a).is_zero()) return "form not invariant under ad " + g.names()[i];
    }
    if (theta * theta != Matrix::identity(n)) return "theta^2 != Id";
    if (theta.transpose() * form * theta != form) return "theta not an isometry";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (theta * g.bracket_basis(i, j) != bracket(g, theta.col(i), theta.col(j)))
                return "theta not an automorphism at (" + g.names()[i] + "," + g.names()[j] + ")";
    return "";
}

MetricLieAlgebraWithInvolution::MetricLieAlgebraWithInvolution(LieAlgebra g, Matrix form, Matrix theta)
    : g_(std::move(g)), form_(std::move(form)), theta_(std::move(theta)) {
    auto v = metric_axiom_violation(g_, form_, theta_);
    if (!v.empty()) throw AxiomError(v);
}

EigenSplit eigensplit(const MetricLieAlgebraWithInvolution& m) { return eigensplit(m.theta()); }

SymmetricTripleReport check_symmetric_triple(const MetricLieAlgebraWithInvolution& m) {
    const auto& g = m.g();
    auto sp = eigensplit(m);
    SymmetricTripleReport r;
    r.S1 = bracket_span(g, sp.minus, sp.minus) == sp.plus;
    // S2: x in g_+ with [x, g_-] = 0 forces x = 0
    const std::size_t kp = sp.plus.dim();
    std::vector<Vec> cols;
    for (std::size_t a = 0; a < kp; ++a) {
        Vec col;
        for (auto& y : sp.minus.vectors()) {
            Vec b = bracket(g, sp.plus.basis().col(a), y);
            col.insert(col.end(), b.begin(), b.end());
        }
        cols.push_back(col);
    }
    if (kp == 0)
        r.S2 = true;
    else if (sp.minus.dim() == 0)
        r.S2 = false;
    else
        r.S2 = kernel(Matrix::from_columns(cols)).is_zero();
    r.S3 = metric_axiom_violation(g, m.form(), m.theta()).empty();
    if (r.S3) r.two_of_three_consistent = (r.S1 == r.S2);
    return r;
}

Signature minus_signature(const MetricLieAlgebraWithInvolution& m) {
    return form_signature(restrict_form(m.form(), eigensplit(m).minus));
}

std::size_t index_on_minus(const MetricLieAlgebraWithInvolution& m) {
    Signature s = minus_signature(m);
    if (s.n_zero != 0) throw AxiomError("form degenerate on g_-");
    return s.n_minus;
}

MetricLieAlgebraWithInvolution direct_sum(const MetricLieAlgebraWithInvolution& a,
                                          const MetricLieAlgebraWithInvolution& b) {
    return MetricLieAlgebraWithInvolution(lie_direct_sum(a.g(), b.g()), direct_sum(a.form(), b.form()),
                                          direct_sum(a.theta(), b.theta()));
}

}  // namespace qsym
