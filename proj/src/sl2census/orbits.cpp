#include "orbits.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace sl2 {

namespace {

// Deterministic slot-parallel loop: workers grab slot indices from an atomic
// counter; results must be written into per-slot storage only.
template <class Fn>
void parallel_slots(uint64_t nslots, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || nslots <= 1) {
        for (uint64_t s = 0; s < nslots; ++s) fn(s);
        return;
    }
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            uint64_t s = next.fetch_add(1);
            if (s >= nslots) return;
            fn(s);
        }
    };
    std::vector<std::thread> pool;
    int nt = (int)std::min<uint64_t>((uint64_t)threads, nslots);
    pool.reserve((size_t)nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

uint64_t checked_pow(uint64_t base, int e, uint64_t limit) {
    uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > limit / base) return limit + 1;
        v *= base;
    }
    return v;
}

// a-priori gate: canonicality sweeps cost at most |G|^r * |G| tuple
// conjugations of r components, two multiplications each
void check_census_budget(uint64_t n, long q, int r, uint64_t budget) {
    if (r < 1) throw Error("rank must be >= 1");
    uint64_t sweep = checked_pow(n, r + 1, UINT64_MAX / (2 * (uint64_t)r));
    uint64_t work =
        (sweep > UINT64_MAX / (2 * (uint64_t)r)) ? UINT64_MAX : 2 * (uint64_t)r * sweep;
    if (work > budget)
        throw WorkBudgetExceededError(
            "census at q = " + std::to_string(q) + ", r = " + std::to_string(r) +
            " needs about " + std::to_string(work) +
            " matrix multiplications, over the budget " + std::to_string(budget));
}

}  // namespace

uint64_t stratum_stabilizer_order(const FieldCtx& F, StratumLabel s) {
    const uint64_t q = (uint64_t)F.q();
    switch (s) {
        case StratumLabel::Z: return q * q * q - q;
        case StratumLabel::D: return q - 1;
        case StratumLabel::Dbar: return q + 1;
        case StratumLabel::U: return 2 * q;
        case StratumLabel::NR: return 2;
        case StratumLabel::AI: return 2;
    }
    return 0;
}

OrbitRecord orbit_of(const Rep& rho) {
    const FieldCtx& F = rho.field();
    const long q = F.q();
    const uint64_t n = (uint64_t)q * q * q - q;
    const int r = rho.rank();
    if (n * (uint64_t)r > (1ull << 23))
        throw CapExceededError("orbit enumeration over |G| = " + std::to_string(n) +
                               " is beyond the brute-force cap");
    std::vector<Mat2> group = enumerate_sl2(F);

    std::vector<std::vector<uint32_t>> conjugates;
    conjugates.reserve((size_t)n);
    uint64_t stab = 0;
    for (const Mat2& g : group) {
        Mat2 gi = g.inverse();
        std::vector<uint32_t> codes;
        codes.reserve((size_t)r * 4);
        bool fixed = true;
        for (int i = 0; i < r; ++i) {
            Mat2 c = g * rho[i] * gi;
            for (int e = 0; e < 4; ++e) codes.push_back(c.code(e));
            if (c != rho[i]) fixed = false;
        }
        if (fixed) ++stab;
        conjugates.push_back(std::move(codes));
    }
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());

    std::vector<Mat2> comps;
    comps.reserve((size_t)r);
    for (int i = 0; i < r; ++i) {
        const uint32_t* e = &conjugates.front()[(size_t)i * 4];
        comps.push_back(Mat2(F, e[0], e[1], e[2], e[3]));
    }
    OrbitRecord rec{Rep(std::move(comps)), conjugates.size(), stab, StratumLabel::Z};
    rec.label = classify(rec.canonical);
    if (rec.orbit_size * rec.stabilizer_order != n)
        throw Error("orbit-stabilizer identity violated");
    return rec;
}

std::vector<uint32_t> canonical_tuple(const Sl2Tables& T, const std::vector<uint32_t>& rep,
                                      uint64_t* stabilizer_order) {
    const uint32_t n = T.size();
    const int r = (int)rep.size();
    std::vector<uint32_t> best = rep;
    std::vector<uint32_t> cur((size_t)r);
    uint64_t stab = 0;
    for (uint32_t g = 0; g < n; ++g) {
        bool equal = true;
        bool smaller = false;
        for (int i = 0; i < r; ++i) {
            cur[(size_t)i] = T.conj_of(g, rep[(size_t)i]);
            if (cur[(size_t)i] != rep[(size_t)i]) {
                equal = false;
                // keep filling; full tuple needed for comparison with best
            }
        }
        if (equal) {
            ++stab;
            continue;
        }
        smaller = std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end());
        if (smaller) best = cur;
    }
    if (stabilizer_order) *stabilizer_order = stab;
    return best;
}

namespace {

using BucketKey = std::vector<uint32_t>;
using BucketMap = std::map<BucketKey, std::vector<uint32_t>>;  // flat tuples, stride r

BucketKey bucket_key(const Sl2Tables& T, const uint32_t* rep, int r) {
    BucketKey key;
    key.reserve((size_t)r + (size_t)r * (r - 1) / 2);
    for (int i = 0; i < r; ++i) key.push_back(T.trace_code(rep[i]));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) key.push_back(T.product_trace(rep[i], rep[j]));
    return key;
}

struct ChunkOut {
    std::array<uint64_t, 6> sizes{};
    BucketMap buckets;
};

struct BucketOut {
    std::array<uint64_t, 6> orbits{};
    std::vector<PackedOrbit> canonicals;
};

// Is `rep` the lexicographic minimum of its orbit?  Early-exits as soon as a
// smaller conjugate is seen; counts the stabilizer when the sweep completes.
bool is_canonical(const Sl2Tables& T, const uint32_t* rep, int r, uint64_t& stab) {
    const uint32_t n = T.size();
    stab = 0;
    for (uint32_t g = 0; g < n; ++g) {
        int i = 0;
        for (; i < r; ++i) {
            uint32_t c = T.conj_of(g, rep[i]);
            if (c != rep[i]) {
                if (c < rep[i]) return false;
                break;  // conjugate is lex-larger; next g
            }
        }
        if (i == r) ++stab;
    }
    return true;
}

}  // namespace

CensusResult run_census(const Sl2Tables& T, int r, const CensusOptions& opt) {
    const FieldCtx& F = T.field();
    const uint64_t n = T.size();
    check_census_budget(n, F.q(), r, opt.work_budget);

    const uint64_t total = checked_pow(n, r, UINT64_MAX);
    const uint64_t slice = total / n;  // tuples per first-component chunk

    // Phase 1: classify every tuple and group it into trace-invariant
    // buckets.  Chunks are contiguous lex ranges (fixed by the first
    // component), so appending chunk results in chunk order keeps each
    // bucket's tuple list lex-sorted.
    std::vector<ChunkOut> chunks((size_t)n);
    parallel_slots(n, opt.threads, [&](uint64_t c0) {
        ChunkOut& out = chunks[(size_t)c0];
        std::vector<uint32_t> digits((size_t)r, 0);
        digits[0] = (uint32_t)c0;
        auto cls_at = [&](int i) -> const MatClass& { return T.cls(digits[(size_t)i]); };
        auto commutes_at = [&](int i, int j) {
            return T.commutes(digits[(size_t)i], digits[(size_t)j]);
        };
        for (uint64_t step = 0; step < slice; ++step) {
            StratumLabel label = classify_cascade(r, cls_at, commutes_at);
            out.sizes[(size_t)label]++;
            auto& bucket = out.buckets[bucket_key(T, digits.data(), r)];
            bucket.insert(bucket.end(), digits.begin(), digits.end());
            // odometer over components 2..r
            for (int i = r - 1; i >= 1; --i) {
                if (++digits[(size_t)i] < n) break;
                digits[(size_t)i] = 0;
            }
        }
    });

    StrataCensus census;
    census.p = F.p();
    census.k = F.k();
    census.q = F.q();
    census.r = r;
    for (StratumLabel s : kAllLabels)
        census.cell(s).stab = stratum_stabilizer_order(F, s);

    BucketMap buckets;
    for (auto& chunk : chunks) {
        for (StratumLabel s : kAllLabels)
            census.cell(s).size += chunk.sizes[(size_t)s];
        for (auto& [key, tuples] : chunk.buckets) {
            auto& dst = buckets[key];
            dst.insert(dst.end(), tuples.begin(), tuples.end());
        }
        chunk.buckets.clear();
    }
    chunks.clear();
    chunks.shrink_to_fit();

    // Phase 2: orbit discovery per bucket.
    std::vector<const std::vector<uint32_t>*> bucket_tuples;
    bucket_tuples.reserve(buckets.size());
    for (auto& [key, tuples] : buckets) bucket_tuples.push_back(&tuples);
    std::vector<BucketOut> bucket_out(buckets.size());

    parallel_slots(bucket_tuples.size(), opt.threads, [&](uint64_t bi) {
        const std::vector<uint32_t>& tuples = *bucket_tuples[(size_t)bi];
        BucketOut& out = bucket_out[(size_t)bi];
        for (size_t off = 0; off < tuples.size(); off += (size_t)r) {
            const uint32_t* rep = tuples.data() + off;
            uint64_t stab = 0;
            if (!is_canonical(T, rep, r, stab)) continue;
            StratumLabel label = classify_cascade(
                r, [&](int i) -> const MatClass& { return T.cls(rep[i]); },
                [&](int i, int j) { return T.commutes(rep[i], rep[j]); });
            out.orbits[(size_t)label]++;
            // Orbit-Stabilizer and uniform-action runtime assertions.
            if (stab == 0 || n % stab != 0)
                throw Error("orbit-stabilizer identity violated");
            if (stab != stratum_stabilizer_order(F, label))
                throw Error("uniform-action assertion failed: stratum " +
                            std::string(label_name(label)) + " has a stabilizer of order " +
                            std::to_string(stab));
            PackedOrbit po;
            po.rep.assign(rep, rep + r);
            po.label = label;
            po.stabilizer_order = stab;
            out.canonicals.push_back(std::move(po));
        }
    });

    CensusResult result;
    std::set<std::vector<uint32_t>> canonical_seen;
    uint64_t orbit_total = 0;
    for (size_t bi = 0; bi < bucket_out.size(); ++bi) {
        for (StratumLabel s : kAllLabels)
            census.cell(s).orbits += bucket_out[bi].orbits[(size_t)s];
        for (auto& po : bucket_out[bi].canonicals) {
            ++orbit_total;
            // bucket-soundness assertion: canonical representatives are
            // globally distinct
            if (!canonical_seen.insert(po.rep).second)
                throw Error("canonical representative collision across buckets");
            if (opt.keep_canonicals) result.canonicals.push_back(std::move(po));
        }
    }

    for (StratumLabel s : kAllLabels) {
        census.total_size += census.cell(s).size;
        census.total_orbits += census.cell(s).orbits;
    }
    if (census.total_size != total) throw Error("census size total mismatch");
    if (census.total_orbits != orbit_total) throw Error("census orbit total mismatch");
    // Uniform action (Burnside form): orbits * |G| = m * size per stratum.
    for (StratumLabel s : kAllLabels) {
        const StratumCell& cell = census.cell(s);
        if (cell.orbits * n != cell.stab * cell.size)
            throw Error("per-stratum orbit count violates the uniform-action identity");
    }

    result.census = census;
    return result;
}

StrataCensus census(const FieldCtx& F, int r, const CensusOptions& opt) {
    const uint64_t n = (uint64_t)F.q() * F.q() * F.q() - F.q();
    check_census_budget(n, F.q(), r, opt.work_budget);
    Sl2Tables T(F);
    return run_census(T, r, opt).census;
}

Rep galois_involution(const Rep& rho) {
    const FieldCtx& F = rho.field();
    FieldElem n = smallest_nonresidue(F);
    // s = sqrt(1/n) in GF(q^2): s = (1/n) * sqrt(n), since (1/n)^2 * n = 1/n.
    ExtElem s(F.elem(0), n.inverse());
    ExtElem zero(F.elem(0));
    ExtMat2 sigma(s, zero, zero, s.inverse());
    std::vector<Mat2> out;
    out.reserve((size_t)rho.rank());
    for (int i = 0; i < rho.rank(); ++i) {
        ExtMat2 c = conjugate(sigma, ExtMat2(rho[i]));
        if (!c.is_base())
            throw EntryLeftBaseFieldError("Galois involution left the base field");
        out.push_back(Mat2::sl2(F, c.a().re().code(), c.b().re().code(), c.c().re().code(),
                                c.d().re().code()));
    }
    return Rep(std::move(out));
}

uint64_t closed_points_from(const StrataCensus& c) {
    uint64_t ai = c.cell(StratumLabel::AI).orbits;
    if (ai % 2 != 0)
        throw OddIrreducibleOrbitCountError("odd number of absolutely irreducible orbits");
    return c.cell(StratumLabel::Z).orbits + c.cell(StratumLabel::D).orbits +
           c.cell(StratumLabel::Dbar).orbits + ai / 2;
}

uint64_t closed_points(const FieldCtx& F, int r, const CensusOptions& opt) {
    return closed_points_from(census(F, r, opt));
}

}  // namespace sl2
