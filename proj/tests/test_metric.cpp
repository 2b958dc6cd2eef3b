#include "doctest.h"
#include "qsym/metric.hpp"

using namespace qsym;

static LieAlgebra r3m1() { return LieAlgebra(3, {"X", "Y", "Z"}, {{0, 1, {{1, 1}}}, {0, 2, {{2, -1}}}}); }

TEST_CASE("eigensplit") {
    Matrix th = Matrix::from_rows({{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    auto sp = eigensplit(th);
    CHECK(sp.plus == Subspace::span(3, {{0, 1, 1}}));
    CHECK(sp.minus == Subspace::span(3, {{1, 0, 0}, {0, 1, -1}}));
    CHECK(is_automorphism(r3m1(), th));
    auto id = eigensplit(Matrix::identity(2));
    CHECK(id.plus == Subspace::full(2));
    CHECK(id.minus.is_zero());
    auto neg = eigensplit(-Matrix::identity(2));
    CHECK(neg.plus.is_zero());
    CHECK_THROWS_AS(eigensplit(Matrix::from_rows({{1, 1}, {0, 1}})), AxiomError);
}

TEST_CASE("metric axioms") {
    MetricLieAlgebraWithInvolution m(LieAlgebra::abelian(2), Matrix::diagonal({-1, 1}), -Matrix::identity(2));
    auto r = check_symmetric_triple(m);
    CHECK(r.S1);
    CHECK(r.S2);
    CHECK(r.S3);
    CHECK(index_on_minus(m) == 1);
    CHECK_THROWS_AS(MetricLieAlgebraWithInvolution(LieAlgebra::abelian(2), Matrix::diagonal({0, 1}),
                                                   Matrix::identity(2)),
                    AxiomError);
    // su(2) with Killing form: not an isometry for a non-involution
    LieAlgebra su2(3, {"H", "X", "Y"}, {{0, 1, {{2, 2}}}, {0, 2, {{1, -2}}}, {1, 2, {{0, 2}}}});
    CHECK_THROWS(MetricLieAlgebraWithInvolution(su2, killing_form(su2), Matrix::diagonal({1, 1, 2})));
    MetricLieAlgebraWithInvolution s(su2, killing_form(su2), Matrix::diagonal({1, -1, -1}));
    CHECK(check_symmetric_triple(s).S1);
    CHECK(check_symmetric_triple(s).S2);
    CHECK(index_on_minus(s) == 2);
}

TEST_CASE("direct sum") {
    MetricLieAlgebraWithInvolution a(LieAlgebra::abelian(2), Matrix::diagonal({-1, 1}), -Matrix::identity(2));
    MetricLieAlgebraWithInvolution b(LieAlgebra::abelian(1), Matrix::diagonal({-1}), -Matrix::identity(1));
    auto s = direct_sum(a, b);
    CHECK(index_on_minus(s) == index_on_minus(a) + index_on_minus(b));
    CHECK(eigensplit(s).minus.dim() == 3);
    MetricLieAlgebraWithInvolution zero(LieAlgebra::abelian(0), Matrix(0, 0), Matrix(0, 0));
    auto t = direct_sum(a, zero);
    CHECK(t.form() == a.form());
}
