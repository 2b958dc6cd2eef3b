#include "qsym/cases.hpp"

namespace qsym {

std::string case_name(CaseTag t) {
    switch (t) {
        case CaseTag::abelian: return "abelian";
        case CaseTag::n2: return "n2";
        case CaseTag::r3m1: return "r3m1";
        case CaseTag::h1: return "h1";
        case CaseTag::su2: return "su2";
        case CaseTag::sl2_split: return "sl2_split";
        case CaseTag::sl2_compact: return "sl2_compact";
    }
    return "";
}

std::optional<CaseTag> case_from_name(const std::string& s) {
    for (auto t : {CaseTag::abelian, CaseTag::n2, CaseTag::r3m1, CaseTag::h1, CaseTag::su2, CaseTag::sl2_split,
                   CaseTag::sl2_compact})
        if (case_name(t) == s) return t;
    return std::nullopt;
}

InvolutiveLie case_abelian(std::size_t k) {
    std::vector<std::string> names;
    if (k == 1)
        names = {"X"};
    else if (k == 2)
        names = {"Y", "Z"};
    return InvolutiveLie(LieAlgebra::abelian(k, names), -Matrix::identity(k));
}

InvolutiveLie case_n2() {
    LieAlgebra g(3, {"X", "Y", "Z"}, {{0, 1, {{2, 1}}}, {0, 2, {{1, -1}}}});
    return InvolutiveLie(g, Matrix::diagonal({-1, -1, 1}));
}

InvolutiveLie case_r3m1() {
    LieAlgebra g(3, {"X", "Y", "Z"}, {{0, 1, {{1, 1}}}, {0, 2, {{2, -1}}}});
    return InvolutiveLie(g, Matrix::from_rows({{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
}

InvolutiveLie case_h1() {
    LieAlgebra g(3, {"X", "Y", "Z"}, {{0, 1, {{2, 1}}}});
    return InvolutiveLie(g, Matrix::diagonal({-1, -1, 1}));
}

InvolutiveLie case_su2() {
    LieAlgebra g(3, {"H", "X", "Y"}, {{0, 1, {{2, 2}}}, {0, 2, {{1, -2}}}, {1, 2, {{0, 2}}}});
    return InvolutiveLie(g, Matrix::diagonal({1, -1, -1}));
}

static LieAlgebra sl2() {
    return LieAlgebra(3, {"H", "X", "Y"}, {{0, 1, {{1, 2}}}, {0, 2, {{2, -2}}}, {1, 2, {{0, 1}}}});
}

InvolutiveLie case_sl2_split() { return InvolutiveLie(sl2(), Matrix::diagonal({1, -1, -1})); }

InvolutiveLie case_sl2_compact() {
    return InvolutiveLie(sl2(), Matrix::from_rows({{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}));
}

InvolutiveLie make_case(CaseTag t, std::size_t k) {
    switch (t) {
        case CaseTag::abelian: return case_abelian(k);
        case CaseTag::n2: return case_n2();
        case CaseTag::r3m1: return case_r3m1();
        case CaseTag::h1: return case_h1();
        case CaseTag::su2: return case_su2();
        case CaseTag::sl2_split: return case_sl2_split();
        case CaseTag::sl2_compact: return case_sl2_compact();
    }
    throw std::invalid_argument("unknown case");
}

std::optional<CaseTag> recognize_case(const InvolutiveLie& l) {
    const auto& g = l.alg;
    const std::size_t n = g.dim();
    auto sp = l.split();
    if (g.is_abelian()) {
        if (n > 0 && sp.plus.is_zero()) return CaseTag::abelian;
        return std::nullopt;
    }
    if (n != 3 || sp.plus.dim() != 1) return std::nullopt;
    Subspace der = derived_subalgebra(g);
    Matrix K = killing_form(g);
    Vec lp = sp.plus.vectors()[0];
    if (der.dim() == 3) {
        Signature s = form_signature(K);
        Scalar kp = bilinear(K, lp, lp);
        if (s.n_minus == 3) return CaseTag::su2;
        if (s.n_minus == 1 && s.n_plus == 2) {
            if (kp > 0) return CaseTag::sl2_split;
            if (kp < 0) return CaseTag::sl2_compact;
        }
        return std::nullopt;
    }
    if (der.dim() == 1) {
        // Heisenberg: derived = center, l+ = center
        if (center(g) == der && sp.plus == der) return CaseTag::h1;
        return std::nullopt;
    }
    if (der.dim() == 2) {
        if (!restrict_to_subalgebra(g, der).is_abelian() || !der.contains(sp.plus)) return std::nullopt;
        // l- contains an element outside l'; its ad on l' decides the type
        Subspace out = complement_in(der, Subspace::full(3));
        Vec x = out.vectors()[0];
        Scalar kx = bilinear(K, x, x);
        Scalar tr = ad(g, x).trace();
        if (tr != 0) return std::nullopt;
        if (kx < 0) return CaseTag::n2;
        if (kx > 0) return CaseTag::r3m1;
    }
    return std::nullopt;
}

}  // namespace qsym
