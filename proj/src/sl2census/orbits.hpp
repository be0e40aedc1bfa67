// Brute-force conjugation-orbit machinery: single-orbit enumeration, the
// exhaustive stratified census, the Galois involution and closed-orbit
// point counts.
//
// Census strategy: sweep all |G|^r tuples in lexicographic order.  A tuple
// spawns an orbit iff it equals the lexicographic minimum of its orbit,
// decided by an early-exit scan over the precomputed conjugation table, so
// no visited set is needed.  Tuples are grouped into trace-invariant buckets
// (component traces plus pairwise product traces, all conjugation-invariant)
// which parallelize independently; the merge is a deterministic fold in
// bucket-key order, so results are identical for any thread count.

#ifndef SL2CENSUS_ORBITS_HPP
#define SL2CENSUS_ORBITS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tables.hpp"

namespace sl2 {

struct OrbitRecord {
    Rep canonical;  // lexicographic minimum over the orbit
    uint64_t orbit_size = 0;
    uint64_t stabilizer_order = 0;
    StratumLabel label = StratumLabel::Z;
};

// Enumerates {g rho g^-1 : g in SL2(F_q)} directly.  Intended for small q;
// throws CapExceededError when the orbit enumeration would be too large.
OrbitRecord orbit_of(const Rep& rho);

struct StratumCell {
    uint64_t size = 0;
    uint64_t orbits = 0;
    uint64_t stab = 0;  // the uniform stabilizer order m
};

struct StrataCensus {
    int p = 0;
    int k = 0;
    long q = 0;
    int r = 0;
    std::array<StratumCell, 6> strata;  // indexed by StratumLabel
    uint64_t total_size = 0;
    uint64_t total_orbits = 0;

    const StratumCell& cell(StratumLabel s) const { return strata[(size_t)s]; }
    StratumCell& cell(StratumLabel s) { return strata[(size_t)s]; }
};

struct CensusOptions {
    int threads = 1;
    // A-priori work gate, in matrix multiplications: 2 * r * |G|^(r+1).
    uint64_t work_budget = 2'000'000'000ull;
    bool keep_canonicals = false;
};

struct PackedOrbit {
    std::vector<uint32_t> rep;  // component indices into the SL2 list
    StratumLabel label;
    uint64_t stabilizer_order;
};

struct CensusResult {
    StrataCensus census;
    // Canonical representative of every orbit in bucket-key order, when
    // keep_canonicals is set.
    std::vector<PackedOrbit> canonicals;
};

// The uniform stabilizer order of each stratum:
// {Z: |G|, D: q-1, Dbar: q+1, U: 2q, NR: 2, AI: 2}.
uint64_t stratum_stabilizer_order(const FieldCtx& F, StratumLabel s);

CensusResult run_census(const Sl2Tables& T, int r, const CensusOptions& opt);
StrataCensus census(const FieldCtx& F, int r, const CensusOptions& opt = {});

// Conjugation by diag(s, 1/s) with s^2 the inverse of the distinguished
// non-residue, computed over GF(q^2); the result is asserted to lie in the
// base field (EntryLeftBaseFieldError flags an implementation bug).
Rep galois_involution(const Rep& rho);

// |s_Z/G| + |s_D/G| + |s_Dbar/G| + |s_AI/G|/2; the halving realizes the
// 2-to-1 identification on irreducible orbits.  Asserts |s_AI/G| is even.
uint64_t closed_points(const FieldCtx& F, int r, const CensusOptions& opt = {});
uint64_t closed_points_from(const StrataCensus& c);

// Lexicographic minimum of the orbit of a packed tuple, plus the stabilizer
// order; shared by the census and the verification suites.
std::vector<uint32_t> canonical_tuple(const Sl2Tables& T, const std::vector<uint32_t>& rep,
                                      uint64_t* stabilizer_order = nullptr);

}  // namespace sl2

#endif
