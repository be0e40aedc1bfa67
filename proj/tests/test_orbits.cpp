#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "sl2census/io.hpp"

using namespace sl2;

namespace {

Mat2 m2(const FieldCtx& F, long a, long b, long c, long d) {
    return Mat2::sl2(F, F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d));
}

}  // namespace

TEST_CASE("orbit_of: central tuple") {
    FieldCtx F = FieldCtx::make(3, 1);
    Rep rho({Mat2::identity(F), Mat2::minus_identity(F)});
    OrbitRecord rec = orbit_of(rho);
    CHECK(rec.orbit_size == 1);
    CHECK(rec.stabilizer_order == 24);
    CHECK(rec.label == StratumLabel::Z);
    CHECK(rec.canonical == rho);
}

TEST_CASE("orbit_of: diagonal pair over GF(5) has stabilizer q-1") {
    FieldCtx F = FieldCtx::make(5, 1);
    Mat2 d = m2(F, 2, 0, 0, 3);
    OrbitRecord rec = orbit_of(Rep({d, d}));
    // oracle: count the stabilizer directly
    long stab = 0;
    for (const Mat2& g : enumerate_sl2(F))
        if (conjugate(g, d) == d) ++stab;
    CHECK(stab == 4);
    CHECK(rec.stabilizer_order == 4);
    CHECK(rec.label == StratumLabel::D);
    CHECK(rec.orbit_size * rec.stabilizer_order == 120);
}

TEST_CASE("orbit_of: unipotent with identity over GF(3) has stabilizer 2q") {
    FieldCtx F = FieldCtx::make(3, 1);
    Mat2 u = m2(F, 1, 1, 0, 1);
    Rep rho({u, Mat2::identity(F)});
    // oracle: direct count
    long stab = 0;
    for (const Mat2& g : enumerate_sl2(F))
        if (conjugate(g, u) == u) ++stab;
    CHECK(stab == 6);
    OrbitRecord rec = orbit_of(rho);
    CHECK(rec.stabilizer_order == 6);
    CHECK(rec.label == StratumLabel::U);
}

TEST_CASE("census at (3,2): the full table") {
    FieldCtx F = FieldCtx::make(3, 1);
    StrataCensus c = census(F, 2);
    CHECK(c.total_size == 576);
    CHECK(c.cell(StratumLabel::Z).size == 4);
    CHECK(c.cell(StratumLabel::D).size == 0);
    CHECK(c.cell(StratumLabel::Dbar).size == 36);
    CHECK(c.cell(StratumLabel::U).size == 128);
    CHECK(c.cell(StratumLabel::NR).size == 0);
    CHECK(c.cell(StratumLabel::AI).size == 408);
    CHECK(c.cell(StratumLabel::Z).orbits == 4);
    CHECK(c.cell(StratumLabel::D).orbits == 0);
    CHECK(c.cell(StratumLabel::Dbar).orbits == 6);
    CHECK(c.cell(StratumLabel::U).orbits == 32);
    CHECK(c.cell(StratumLabel::NR).orbits == 0);
    CHECK(c.cell(StratumLabel::AI).orbits == 34);
    CHECK(c.total_orbits == 76);
    CHECK(c.cell(StratumLabel::Z).stab == 24);
    CHECK(c.cell(StratumLabel::D).stab == 2);
    CHECK(c.cell(StratumLabel::Dbar).stab == 4);
    CHECK(c.cell(StratumLabel::U).stab == 6);
    CHECK(c.cell(StratumLabel::NR).stab == 2);
    CHECK(c.cell(StratumLabel::AI).stab == 2);
}

TEST_CASE("census orbit counts agree with a bucket-free sweep at (3,2)") {
    // independent route: canonical representatives collected via orbit_of
    FieldCtx F = FieldCtx::make(3, 1);
    std::vector<Mat2> g = enumerate_sl2(F);
    std::set<std::vector<uint32_t>> canonicals;
    for (const Mat2& a : g)
        for (const Mat2& b : g) {
            OrbitRecord rec = orbit_of(Rep({a, b}));
            std::vector<uint32_t> enc;
            for (const Mat2& m : rec.canonical.components())
                for (int e = 0; e < 4; ++e) enc.push_back(m.code(e));
            canonicals.insert(enc);
            CHECK(rec.orbit_size * rec.stabilizer_order == 24);
        }
    CHECK(canonicals.size() == 76);
}

TEST_CASE("orbit-stabilizer identity, exhaustive at (5,2) and (3,3)") {
    FieldCtx F5 = FieldCtx::make(5, 1);
    std::vector<Mat2> g5 = enumerate_sl2(F5);
    for (const Mat2& a : g5)
        for (const Mat2& b : g5) {
            OrbitRecord rec = orbit_of(Rep({a, b}));
            REQUIRE(rec.orbit_size * rec.stabilizer_order == 120);
        }

    FieldCtx F3 = FieldCtx::make(3, 1);
    std::vector<Mat2> g3 = enumerate_sl2(F3);
    for (const Mat2& a : g3)
        for (const Mat2& b : g3)
            for (const Mat2& c : g3) {
                OrbitRecord rec = orbit_of(Rep({a, b, c}));
                REQUIRE(rec.orbit_size * rec.stabilizer_order == 24);
            }
}

TEST_CASE("census totals at (5,2) and (3,3)") {
    FieldCtx F5 = FieldCtx::make(5, 1);
    StrataCensus c52 = census(F5, 2);
    CHECK(c52.total_orbits == 296);
    CHECK(c52.total_size == 14400);

    FieldCtx F3 = FieldCtx::make(3, 1);
    StrataCensus c33 = census(F3, 3);
    CHECK(c33.total_orbits == 1312);
    CHECK(c33.total_size == 13824);
    // at q = 3 the D and NR strata are empty for every rank
    CHECK(c33.cell(StratumLabel::D).size == 0);
    CHECK(c33.cell(StratumLabel::NR).size == 0);
}

TEST_CASE("census per-stratum counts match the closed forms at (5,2)") {
    FieldCtx F = FieldCtx::make(5, 1);
    StrataCensus c = census(F, 2);
    CensusFormulaSide f = census_formula_side(F, 2);
    CHECK(census_matches(c, f));
    CHECK(f.orbits[(size_t)StratumLabel::D] == 6);
    CHECK(f.orbits[(size_t)StratumLabel::Dbar] == 16);
    CHECK(f.orbits[(size_t)StratumLabel::U] == 48);
    CHECK(f.orbits[(size_t)StratumLabel::NR] == 24);
    CHECK(f.orbits[(size_t)StratumLabel::AI] == 198);
}

TEST_CASE("census is byte-identical across thread counts") {
    FieldCtx F = FieldCtx::make(5, 1);
    std::string dumps[3];
    int idx = 0;
    for (int threads : {1, 2, 8}) {
        CensusOptions opt;
        opt.threads = threads;
        StrataCensus c = census(F, 2, opt);
        CensusFormulaSide f = census_formula_side(F, 2);
        dumps[idx++] = census_to_json(c, CensusMode::Both, &f).dump();
    }
    CHECK(dumps[0] == dumps[1]);
    CHECK(dumps[0] == dumps[2]);
}

TEST_CASE("work budget gate") {
    FieldCtx F = FieldCtx::make(11, 1);
    CHECK_THROWS_AS(census(F, 2), WorkBudgetExceededError);  // 2*2*1320^3 > 2e9
    FieldCtx F3 = FieldCtx::make(3, 1);
    CensusOptions tiny;
    tiny.work_budget = 10;
    CHECK_THROWS_AS(census(F3, 2, tiny), WorkBudgetExceededError);
}

TEST_CASE("conjugation-table cap") {
    FieldCtx F = FieldCtx::make(23, 1);  // |G| = 12144 > 8192
    CHECK_THROWS_AS(Sl2Tables{F}, CapExceededError);
}

TEST_CASE("galois involution") {
    FieldCtx F = FieldCtx::make(5, 1);
    FieldElem n = smallest_nonresidue(F);
    CHECK(n == F.elem_from_int(2));  // squares mod 5 are {1, 4}

    // diagonal tuples are unchanged
    Mat2 d = m2(F, 2, 0, 0, 3);
    Rep diag_rep({d, d.inverse()});
    CHECK(galois_involution(diag_rep) == diag_rep);

    // single component maps (a b; c d) to (a b/n; c*n d)
    Mat2 m = m2(F, 1, 1, 2, 3);
    Rep img = galois_involution(Rep({m}));
    CHECK(img[0].a() == m.a());
    CHECK(img[0].b() == m.b() / n);
    CHECK(img[0].c() == m.c() * n);
    CHECK(img[0].d() == m.d());

    // applying twice lands in the same orbit (conjugation by diag(n, 1/n))
    Rep twice = galois_involution(galois_involution(Rep({m})));
    Mat2 sigma2 = m2(F, 2, 0, 0, 3);  // diag(n, 1/n) with n = 2
    CHECK(twice[0] == conjugate(sigma2.inverse(), m));
    CHECK(orbit_of(twice).canonical == orbit_of(Rep({m})).canonical);
}

TEST_CASE("galois suite: pairing at (3,2) and (5,2)") {
    FieldCtx F3 = FieldCtx::make(3, 1);
    SuiteReport r3 = verify_galois(F3, 2);
    CHECK_MESSAGE(r3.pass, r3.detail);
    CHECK(r3.detail == "34 AI orbits, 17 Galois pairs, 0 fixed");

    FieldCtx F5 = FieldCtx::make(5, 1);
    SuiteReport r5 = verify_galois(F5, 2);
    CHECK_MESSAGE(r5.pass, r5.detail);
    CHECK(r5.detail == "198 AI orbits, 99 Galois pairs, 0 fixed");
}

TEST_CASE("closed points") {
    FieldCtx F3 = FieldCtx::make(3, 1);
    CHECK(closed_points(F3, 2) == 27);  // 4 + 0 + 6 + 17 = 3^3
    FieldCtx F5 = FieldCtx::make(5, 1);
    CHECK(closed_points(F5, 2) == 125);
    CHECK(closed_points(F3, 3) == 570);  // E_3(3)
}

TEST_CASE("uniform suite") {
    FieldCtx F3 = FieldCtx::make(3, 1);
    SuiteReport r32 = verify_uniform(F3, 2);
    CHECK_MESSAGE(r32.pass, r32.detail);
    CHECK(r32.detail == "m-table {Z: 24, D: -, Dbar: 4, U: 6, NR: -, AI: 2}");

    SuiteReport r33 = verify_uniform(F3, 3);
    CHECK_MESSAGE(r33.pass, r33.detail);

    FieldCtx F5 = FieldCtx::make(5, 1);
    SuiteReport r52 = verify_uniform(F5, 2);
    CHECK_MESSAGE(r52.pass, r52.detail);
    CHECK(r52.detail == "m-table {Z: 120, D: 4, Dbar: 6, U: 10, NR: 2, AI: 2}");
}

TEST_CASE("borel suite") {
    FieldCtx F3 = FieldCtx::make(3, 1);
    SuiteReport r3 = verify_borel(F3, 2);
    CHECK_MESSAGE(r3.pass, r3.detail);
    CHECK(r3.detail.find(" 0 in s_D") != std::string::npos);

    FieldCtx F5 = FieldCtx::make(5, 1);
    SuiteReport r5 = verify_borel(F5, 2);
    CHECK_MESSAGE(r5.pass, r5.detail);
    CHECK(r5.detail.find(" 60 in s_D") != std::string::npos);

    SuiteReport r33 = verify_borel(F3, 3);
    CHECK_MESSAGE(r33.pass, r33.detail);
}

TEST_CASE("census rejects r = 0") {
    FieldCtx F = FieldCtx::make(3, 1);
    CHECK_THROWS_AS(census(F, 0), Error);
}

TEST_CASE("census handles r = 1 (conjugacy classes of SL2)") {
    FieldCtx F = FieldCtx::make(3, 1);
    StrataCensus c = census(F, 1);
    CHECK(c.total_size == 24);
    // SL2(F_3) has 7 conjugacy classes
    CHECK(c.total_orbits == 7);
}
