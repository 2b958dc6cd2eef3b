#ifndef QSYM_CASES_HPP
#define QSYM_CASES_HPP

#include "qsym/metric.hpp"

#include <optional>
#include <string>

namespace qsym {

/* The seven Lie algebras with involution that occur in the index-2 classification. */
enum class CaseTag { abelian, n2, r3m1, h1, su2, sl2_split, sl2_compact };

std::string case_name(CaseTag t);
std::optional<CaseTag> case_from_name(const std::string& s);

/* R^k with theta = -Id */
InvolutiveLie case_abelian(std::size_t k);
/* [X,Y]=Z, [X,Z]=-Y; l+ = RZ */
InvolutiveLie case_n2();
/* [X,Y]=Y, [X,Z]=-Z; theta X=-X, Y<->Z */
InvolutiveLie case_r3m1();
/* [X,Y]=Z; l+ = RZ */
InvolutiveLie case_h1();
/* basis H,X,Y: [H,X]=2Y, [H,Y]=-2X, [X,Y]=2H; l+ = RH */
InvolutiveLie case_su2();
/* basis H,X,Y: [H,X]=2X, [H,Y]=-2Y, [X,Y]=H; l+ = RH */
InvolutiveLie case_sl2_split();
/* same sl(2) basis; theta H=-H, X<->-Y, l+ = R(X-Y) */
InvolutiveLie case_sl2_compact();
InvolutiveLie make_case(CaseTag t, std::size_t k = 2);

/* Structural recognizer; nullopt when (l, theta) is none of the seven. */
std::optional<CaseTag> recognize_case(const InvolutiveLie& l);

}  // namespace qsym

#endif
