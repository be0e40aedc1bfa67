// Brute-force verification suites over a full field: uniform stabilizers,
// the no-mixing laws for reducible tuples, the Galois pairing on orbits,
// the Borel intersection count, and the partition / conjugation-invariance
// of the classification.  Failure is data, not an error: each suite returns
// a report with the first counterexample.

#ifndef SL2CENSUS_VERIFY_HPP
#define SL2CENSUS_VERIFY_HPP

#include <optional>
#include <string>

#include "orbits.hpp"

namespace sl2 {

struct SuiteReport {
    std::string suite;
    bool pass = false;
    std::string detail;
    std::optional<Rep> counterexample;
};

// Every tuple's stabilizer order equals its stratum's m-value.
SuiteReport verify_uniform(const FieldCtx& F, int r, const CensusOptions& opt = {});

// (1) no reducible tuple mixes a non-central component with rational
// eigenvalues != +-1 and a component with irrational eigenvalues;
// (2) every reducible tuple with an irrational component eigenvalue is Dbar;
// (3) every NR tuple has all eigenvalues in the base field and a base-field
// determinant-1 upper-triangularizing conjugator, exhibited and checked.
SuiteReport verify_nomixing(const FieldCtx& F, int r, const CensusOptions& opt = {});

// The involution preserves the classification, fixes every Z/D/Dbar orbit
// setwise, and pairs the AI orbits freely.
SuiteReport verify_galois(const FieldCtx& F, int r, const CensusOptions& opt = {});

// |s_D intersected with the upper-triangular tuples| = q((q-1)^r - 2^r),
// together with the diagonal-compatibility characterization of that
// intersection (equal b/(a - 1/a) across non-central non-diagonal
// components).
SuiteReport verify_borel(const FieldCtx& F, int r, const CensusOptions& opt = {});

// Sizes of the six strata partition |G|^r, and the classification is
// conjugation-invariant (exhaustively when small, else on `samples` seeded
// random (tuple, g) pairs).
SuiteReport verify_partition(const FieldCtx& F, int r, uint64_t seed = 0,
                             uint64_t samples = 100000, const CensusOptions& opt = {});

}  // namespace sl2

#endif
