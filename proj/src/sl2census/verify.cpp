#include "verify.hpp"

#include <map>
#include <random>
#include <sstream>

namespace sl2 {

namespace {

Rep rep_from_indices(const Sl2Tables& T, const std::vector<uint32_t>& idx) {
    std::vector<Mat2> comps;
    comps.reserve(idx.size());
    for (uint32_t i : idx) comps.push_back(T.mat(i));
    return Rep(std::move(comps));
}

// Odometer over [0, n)^r in lexicographic order; returns false after the
// last tuple.
bool advance(std::vector<uint32_t>& digits, uint32_t n) {
    for (int i = (int)digits.size() - 1; i >= 0; --i) {
        if (++digits[(size_t)i] < n) return true;
        digits[(size_t)i] = 0;
    }
    return false;
}

uint64_t pow_u64(uint64_t b, int e) {
    uint64_t v = 1;
    while (e-- > 0) v *= b;
    return v;
}

void check_budget(const Sl2Tables& T, int r, const CensusOptions& opt, int extra_pow) {
    uint64_t n = T.size();
    uint64_t work = 2 * (uint64_t)r;
    for (int i = 0; i < r + extra_pow; ++i) {
        if (work > opt.work_budget) break;
        work *= n;
    }
    if (work > opt.work_budget)
        throw WorkBudgetExceededError("verification sweep exceeds the work budget");
}

StratumLabel classify_indices(const Sl2Tables& T, const std::vector<uint32_t>& d) {
    return classify_cascade(
        (int)d.size(), [&](int i) -> const MatClass& { return T.cls(d[(size_t)i]); },
        [&](int i, int j) { return T.commutes(d[(size_t)i], d[(size_t)j]); });
}

}  // namespace

SuiteReport verify_uniform(const FieldCtx& F, int r, const CensusOptions& opt) {
    SuiteReport rep{"uniform", true, "", std::nullopt};
    Sl2Tables T(F);
    check_budget(T, r, opt, 1);
    const uint32_t n = T.size();
    std::vector<uint32_t> d((size_t)r, 0);
    std::map<StratumLabel, uint64_t> observed;
    do {
        StratumLabel label = classify_indices(T, d);
        uint64_t stab = 0;
        for (uint32_t g = 0; g < n; ++g) {
            bool fixed = true;
            for (int i = 0; i < r && fixed; ++i)
                fixed = T.conj_of(g, d[(size_t)i]) == d[(size_t)i];
            if (fixed) ++stab;
        }
        uint64_t want = stratum_stabilizer_order(F, label);
        if (stab != want) {
            rep.pass = false;
            rep.detail = "stratum " + std::string(label_name(label)) + " tuple has stabilizer " +
                         std::to_string(stab) + ", expected " + std::to_string(want);
            rep.counterexample = rep_from_indices(T, d);
            return rep;
        }
        observed.emplace(label, stab);
    } while (advance(d, n));

    std::ostringstream out;
    out << "m-table {";
    bool first = true;
    for (StratumLabel s : kAllLabels) {
        out << (first ? "" : ", ") << label_name(s) << ": ";
        auto it = observed.find(s);
        if (it == observed.end())
            out << "-";
        else
            out << it->second;
        first = false;
    }
    out << "}";
    rep.detail = out.str();
    return rep;
}

SuiteReport verify_nomixing(const FieldCtx& F, int r, const CensusOptions& opt) {
    SuiteReport rep{"nomixing", true, "", std::nullopt};
    Sl2Tables T(F);
    check_budget(T, r, opt, 0);
    const uint32_t n = T.size();
    std::vector<uint32_t> d((size_t)r, 0);
    uint64_t reducible = 0, nr_witnessed = 0;
    do {
        StratumLabel label = classify_indices(T, d);
        if (label == StratumLabel::AI) continue;
        ++reducible;
        bool has_rational_noncentral = false, has_irrational = false;
        for (int i = 0; i < r; ++i) {
            const MatClass& m = T.cls(d[(size_t)i]);
            if (m.legendre_disc > 0) has_rational_noncentral = true;
            if (m.legendre_disc < 0) has_irrational = true;
        }
        const char* broken = nullptr;
        if (has_rational_noncentral && has_irrational)
            broken = "a reducible tuple mixes rational and irrational eigenvalues";
        else if (has_irrational && label != StratumLabel::Dbar)
            broken = "a reducible tuple with irrational eigenvalues is not Dbar";
        else if (label == StratumLabel::NR) {
            if (has_irrational)
                broken = "an NR tuple has an irrational eigenvalue";
            else {
                try {
                    Rep rho = rep_from_indices(T, d);
                    auto g = normal_form_witness(rho, StratumLabel::NR);
                    if (!g) broken = "no NR witness produced";
                    ++nr_witnessed;
                } catch (const Error& e) {
                    broken = "NR upper-triangularization failed";
                }
            }
        }
        if (broken) {
            rep.pass = false;
            rep.detail = broken;
            rep.counterexample = rep_from_indices(T, d);
            return rep;
        }
    } while (advance(d, n));
    rep.detail = std::to_string(reducible) + " reducible tuples checked, " +
                 std::to_string(nr_witnessed) + " NR conjugators exhibited";
    return rep;
}

SuiteReport verify_galois(const FieldCtx& F, int r, const CensusOptions& opt) {
    SuiteReport rep{"galois", true, "", std::nullopt};
    Sl2Tables T(F);
    CensusOptions o = opt;
    o.keep_canonicals = true;
    CensusResult res = run_census(T, r, o);

    uint64_t ai_orbits = 0, pairs = 0, fixed_ai = 0;
    std::map<std::vector<uint32_t>, std::vector<uint32_t>> ai_partner;
    for (const PackedOrbit& po : res.canonicals) {
        std::vector<uint32_t> img(po.rep.size());
        for (size_t i = 0; i < po.rep.size(); ++i) img[i] = T.galois_index(po.rep[i]);
        StratumLabel img_label = classify_indices(T, img);
        if (img_label != po.label) {
            rep.pass = false;
            rep.detail = "the involution changed the classification";
            rep.counterexample = rep_from_indices(T, po.rep);
            return rep;
        }
        std::vector<uint32_t> img_canon = canonical_tuple(T, img);
        switch (po.label) {
            case StratumLabel::Z:
            case StratumLabel::D:
            case StratumLabel::Dbar:
                if (img_canon != po.rep) {
                    rep.pass = false;
                    rep.detail = std::string("a ") + label_name(po.label) +
                                 " orbit is not fixed by the involution";
                    rep.counterexample = rep_from_indices(T, po.rep);
                    return rep;
                }
                break;
            case StratumLabel::AI: {
                ++ai_orbits;
                if (img_canon == po.rep) {
                    ++fixed_ai;
                    rep.pass = false;
                    rep.detail = "an AI orbit is fixed by the involution";
                    rep.counterexample = rep_from_indices(T, po.rep);
                    return rep;
                }
                ai_partner[po.rep] = img_canon;
                break;
            }
            default:
                break;  // U and NR orbits are unconstrained
        }
    }
    // the partner map must be a fixed-point-free involution
    for (const auto& [rep_idx, img] : ai_partner) {
        auto it = ai_partner.find(img);
        if (it == ai_partner.end() || it->second != rep_idx) {
            rep.pass = false;
            rep.detail = "AI orbit pairing is not an involution";
            rep.counterexample = rep_from_indices(T, rep_idx);
            return rep;
        }
    }
    pairs = ai_orbits / 2;
    if (ai_orbits % 2 != 0) {
        rep.pass = false;
        rep.detail = "odd number of AI orbits";
        return rep;
    }
    rep.detail = std::to_string(ai_orbits) + " AI orbits, " + std::to_string(pairs) +
                 " Galois pairs, " + std::to_string(fixed_ai) + " fixed";
    return rep;
}

SuiteReport verify_borel(const FieldCtx& F, int r, const CensusOptions& opt) {
    SuiteReport rep{"borel", true, "", std::nullopt};
    Sl2Tables T(F);
    (void)opt;
    const long q = F.q();

    // upper-triangular subgroup, in lex order
    std::vector<uint32_t> tri;
    for (uint32_t i = 0; i < T.size(); ++i)
        if (T.mat(i).c().is_zero()) tri.push_back(i);
    if ((long)tri.size() != q * (q - 1)) throw Error("Borel subgroup size mismatch");

    const uint32_t one = F.one();
    const uint32_t minus_one = F.neg(F.one());
    auto ratio = [&](const Mat2& m) {
        // b / (a - 1/a) for a != +-1
        return F.div(m.code(1), F.sub(m.code(0), F.inv(m.code(0))));
    };

    uint64_t counted_d = 0, checked = 0;
    std::vector<uint32_t> pos((size_t)r, 0);
    bool more = true;
    while (more) {
        std::vector<uint32_t> d((size_t)r);
        for (int i = 0; i < r; ++i) d[(size_t)i] = tri[pos[(size_t)i]];
        StratumLabel label = classify_indices(T, d);
        bool in_d = label == StratumLabel::D;
        if (in_d) ++counted_d;

        // the characterization: diagonal tuples that are not all central, or
        // tuples from (T* union Z)^r - Z^r with all T* components diagonally
        // compatible
        bool all_diag = true, all_central = true, td_shape = true, compatible = true;
        bool have_ratio = false;
        uint32_t common = 0;
        for (int i = 0; i < r; ++i) {
            const Mat2& m = T.mat(d[(size_t)i]);
            bool central = m.is_central();
            bool diag = m.b().is_zero();
            bool unit_diag = m.code(0) == one || m.code(0) == minus_one;
            all_diag = all_diag && diag;
            all_central = all_central && central;
            if (!central) {
                if (diag || unit_diag)
                    td_shape = false;  // not in T* union Z
                else {
                    uint32_t rho = ratio(m);
                    if (!have_ratio) {
                        common = rho;
                        have_ratio = true;
                    } else if (rho != common)
                        compatible = false;
                }
            }
        }
        bool rhs = (all_diag && !all_central) ||
                   (td_shape && !all_central && compatible && have_ratio);
        if (in_d != rhs) {
            rep.pass = false;
            rep.detail = "diagonal-compatibility characterization failed";
            rep.counterexample = rep_from_indices(T, d);
            return rep;
        }
        ++checked;
        more = advance(pos, (uint32_t)tri.size());
    }

    uint64_t qm1_r = pow_u64((uint64_t)(q - 1), r);
    uint64_t two_r = pow_u64(2, r);
    uint64_t expected = (uint64_t)q * (qm1_r - two_r);
    if (counted_d != expected) {
        rep.pass = false;
        rep.detail = "|s_D| within the Borel tuples is " + std::to_string(counted_d) +
                     ", expected " + std::to_string(expected);
        return rep;
    }
    rep.detail = std::to_string(checked) + " upper-triangular tuples checked, " +
                 std::to_string(counted_d) + " in s_D as predicted";
    return rep;
}

SuiteReport verify_partition(const FieldCtx& F, int r, uint64_t seed, uint64_t samples,
                             const CensusOptions& opt) {
    SuiteReport rep{"partition", true, "", std::nullopt};
    Sl2Tables T(F);
    StrataCensus c = run_census(T, r, opt).census;
    const uint32_t n = T.size();

    uint64_t expect = pow_u64(n, r);
    if (c.total_size != expect) {
        rep.pass = false;
        rep.detail = "stratum sizes sum to " + std::to_string(c.total_size) + ", expected " +
                     std::to_string(expect);
        return rep;
    }

    // conjugation invariance
    uint64_t exhaustive_work = pow_u64(n, r + 1);
    uint64_t checked = 0;
    auto mismatch = [&](const std::vector<uint32_t>& d, uint32_t g) {
        std::vector<uint32_t> conj((size_t)r);
        for (int i = 0; i < r; ++i) conj[(size_t)i] = T.conj_of(g, d[(size_t)i]);
        if (classify_indices(T, conj) == classify_indices(T, d)) return false;
        rep.pass = false;
        rep.detail = "classification is not conjugation-invariant";
        rep.counterexample = rep_from_indices(T, d);
        return true;
    };
    if (exhaustive_work <= 20'000'000ull) {
        std::vector<uint32_t> d((size_t)r, 0);
        do {
            for (uint32_t g = 0; g < n; ++g)
                if (mismatch(d, g)) return rep;
            checked += n;
        } while (advance(d, n));
        rep.detail = "partition exact; conjugation invariance exhaustive over " +
                     std::to_string(checked) + " pairs";
    } else {
        std::mt19937_64 rng(seed);
        std::vector<uint32_t> d((size_t)r);
        for (uint64_t s = 0; s < samples; ++s) {
            for (int i = 0; i < r; ++i) d[(size_t)i] = (uint32_t)(rng() % n);
            uint32_t g = (uint32_t)(rng() % n);
            if (mismatch(d, g)) return rep;
        }
        rep.detail = "partition exact; conjugation invariance on " + std::to_string(samples) +
                     " seeded random pairs";
    }
    return rep;
}

}  // namespace sl2
