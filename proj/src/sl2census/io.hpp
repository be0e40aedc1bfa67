// Wire formats: field descriptors, elements as coefficient arrays, matrices
// as {"a": [...], "b": [...], "c": [...], "d": [...]}, census reports as JSON
// / CSV / text.  Key order is fixed so equal runs serialize byte-identically.

#ifndef SL2CENSUS_IO_HPP
#define SL2CENSUS_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "formulas.hpp"
#include "orbits.hpp"
#include "verify.hpp"

namespace sl2 {

using Json = nlohmann::ordered_json;

Json field_descriptor(const FieldCtx& F);  // {p, k, modulus}
Json elem_to_json(const FieldElem& e);     // [c_0, ..., c_{k-1}]
Json ext_to_json(const ExtElem& e);        // {re, im}
Json mat_to_json(const Mat2& m);
Json ext_mat_to_json(const ExtMat2& m);
Json rep_to_json(const Rep& rho);  // list of matrix objects

FieldElem elem_from_json(const FieldCtx& F, const Json& j);
Mat2 mat_from_json(const FieldCtx& F, const Json& j);
Rep rep_from_json(const FieldCtx& F, const Json& j);

// Formula-side values of a census at a concrete (q, r).
struct CensusFormulaSide {
    std::array<Int, 6> size;
    std::array<Int, 6> orbits;
    Int total_orbits;
};
CensusFormulaSide census_formula_side(const FieldCtx& F, int r);

enum class CensusMode { Brute, Formula, Both };

// Whether every brute-force cell agrees with the closed forms (and the total
// with the orbit-total polynomial).
bool census_matches(const StrataCensus& c, const CensusFormulaSide& f);

Json census_to_json(const StrataCensus& c, CensusMode mode, const CensusFormulaSide* formula);
// Fixed columns: stratum,size,orbits,stab,size_formula,orbits_formula,match.
std::string census_to_csv(const StrataCensus& c, CensusMode mode,
                          const CensusFormulaSide* formula);
std::string census_to_text(const StrataCensus& c, CensusMode mode,
                           const CensusFormulaSide* formula);

Json suite_to_json(const SuiteReport& r);
std::string suite_to_text(const SuiteReport& r);

// Coefficients low-to-high; requires an integral polynomial.
Json poly_to_json(const CountPoly& p);

}  // namespace sl2

#endif
