#pragma once

#include <array>
#include <string>

#include "algser/denef_lipshitz.hpp"
#include "algser/multipoly.hpp"
#include "algser/series.hpp"

namespace algser {

// Two-polynomial code (P1(x,y1,y2), P2(x,y2)) pinning down an algebraic
// series: P(x,f,h) = 0 with the Jacobian in (y1,y2) invertible at the origin.
struct AMCode {
    enum class Branch { simple, representation };

    MultiPoly p1;
    MultiPoly p2;  // never involves y1
    std::array<std::array<Rational, 2>, 2> jacobian_at_origin;
    Branch branch = Branch::simple;
    std::string y1;
    std::string y2;

    Rational jacobian_det() const {
        return jacobian_at_origin[0][0] * jacobian_at_origin[1][1] -
               jacobian_at_origin[0][1] * jacobian_at_origin[1][0];
    }
};

// Branch for annihilators Q(x,y1) with Q(0,0) = 0 and a nonvanishing y1
// derivative at the origin: the code is (Q, y2). Throws
// UseRepresentationBranch when the derivative vanishes.
AMCode am_code_simple(const MultiPoly& q, const std::string& y1, const std::string& y2);

// Branch for degenerate annihilators: given f = T1(x,h)/T2(x,h) with h
// etale-algebraic annihilated by S(x,y2), the code is
// (y1 T2(x,y2) - T1(x,y2), S(x,y2)).
AMCode am_code_from_representation(const WRepresentation& rep, const MultiPoly& s,
                                   const std::string& y1, const std::string& y2);

struct AMVerification {
    int order = 0;
    bool first_vanishes = false;
    bool second_vanishes = false;
    bool jacobian_invertible = false;
    bool pass = false;
};

// Substitutes (y1, y2) <- (f, h) into both components and checks they vanish
// through `order`, plus the Jacobian determinant.
AMVerification am_verify(const AMCode& code, const TruncSeries& f, const TruncSeries& h,
                         int order);

}  // namespace algser
