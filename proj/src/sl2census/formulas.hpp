// Closed counting forms as exact polynomial objects: the total orbit count,
// per-stratum sizes and orbit counts, the E-polynomials of the free and free
// Abelian character varieties, Euler characteristics, and the Poincare
// polynomials with their reciprocity to the Abelian E-polynomial.

#ifndef SL2CENSUS_FORMULAS_HPP
#define SL2CENSUS_FORMULAS_HPP

#include <array>

#include "poly.hpp"
#include "strata.hpp"

namespace sl2 {

// C_r(q) = (q-3)(q-1)^(r-1)/2 + (q-1)(q+1)^(r-1)/2 + 2^(r+1) q^(r-1)
//        + 2 (q^3-q)^(r-1); integer-valued at odd prime powers.
// Throws RankTooSmallError for r < 2.
CountPoly total_orbits_poly(int r);

struct StratumPolys {
    CountPoly size;
    CountPoly orbits;
};

// The six (size, orbit-count) pairs, indexed by StratumLabel.  AI is the
// complement of the others inside (q^3-q)^r; every orbit polynomial is the
// exact quotient m * size / |G| (exactness asserted).
std::array<StratumPolys, 6> stratum_polys(int r);

enum class EFamily { Free, Abelian };

// Free: (q-1)^(r-1) ((q+1)^(r-1) - 1) q^(r-1) + q((q-1)^(r-1)+(q+1)^(r-1))/2.
// Abelian: ((q-1)^r + (q+1)^r)/2.  Defined for r >= 1 (free r = 1 gives q).
CountPoly e_poly(EFamily family, int r);

struct EulerTable {
    Int chi;             //  2^(r-2)
    Int chi_smooth;      // -2^(r-2)
    Int chi_sing;        //  2^(r-1)
    Int chi_sing_smooth; // -2^(r-1)
    Int chi_sing_sing;   //  2^r
};

// The five Euler characteristics; the first three are recomputed as
// E-polynomial evaluations at q = 1 and must agree.  r >= 2.
EulerTable euler_table(int r);

// Free family: exact formal power-series expansion of
//   -t(t^3+1)^r/(1-t^4) + t^3((t+1)^r/(1-t^2) - (1-t)^r/(t^2+1))/2 + t + 1
// to degree `guard` (default 8r, must be >= 4r); every coefficient in
// [guard/2, guard] is asserted zero (SeriesNotPolynomialError otherwise) and
// the result is truncated to the last nonzero coefficient.
// Abelian family: ((1+t)^r + (1-t)^r)/2.  r >= 2.
CountPoly poincare_poly(EFamily family, int r, int guard = 0);

// q^r E_Z(1/q) = P_Z(q) and q^r P_Z(1/q) = E_Z(q) as exact coefficient
// identities.  r >= 2.
bool reciprocity_check(int r);

}  // namespace sl2

#endif
