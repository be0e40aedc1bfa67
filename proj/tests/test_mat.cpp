#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl2census/mat.hpp"

using namespace sl2;

namespace {

// quadruple-loop oracle: all (a,b,c,d) in code order with ad - bc = 1
std::vector<std::array<uint32_t, 4>> sl2_oracle(const FieldCtx& F) {
    std::vector<std::array<uint32_t, 4>> out;
    const long q = F.q();
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
            for (long c = 0; c < q; ++c)
                for (long d = 0; d < q; ++d) {
                    uint32_t det = F.sub(F.mul((uint32_t)a, (uint32_t)d),
                                         F.mul((uint32_t)b, (uint32_t)c));
                    if (det == F.one())
                        out.push_back({(uint32_t)a, (uint32_t)b, (uint32_t)c, (uint32_t)d});
                }
    return out;
}

Mat2 pick(const std::vector<Mat2>& v, std::mt19937_64& rng) {
    return v[(size_t)(rng() % v.size())];
}

}  // namespace

TEST_CASE("matrix operations") {
    FieldCtx F = FieldCtx::make(5, 1);
    Mat2 I = Mat2::identity(F);
    Mat2 M = Mat2::sl2(F, F.from_int(2), F.from_int(1), F.from_int(3), F.from_int(2));
    CHECK(conjugate(I, M) == M);
    CHECK(M * M.inverse() == I);
    // inverse of (a b; c d) is (d -b; -c a)
    Mat2 inv = M.inverse();
    CHECK(inv.a() == M.d());
    CHECK(inv.b() == -M.b());
    CHECK(inv.c() == -M.c());
    CHECK(inv.d() == M.a());
    CHECK(M.det() == F.elem(F.one()));
    CHECK_THROWS_AS(Mat2::sl2(F, F.from_int(2), 0, 0, F.from_int(2)), Error);

    FieldCtx F7 = FieldCtx::make(7, 1);
    CHECK_THROWS_AS((void)(M * Mat2::identity(F7)), MixedFieldsError);
}

TEST_CASE("trace is conjugation-invariant on random pairs") {
    FieldCtx F = FieldCtx::make(7, 1);
    std::vector<Mat2> group = enumerate_sl2(F);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        Mat2 m = pick(group, rng), g = pick(group, rng);
        CHECK(conjugate(g, m).trace() == m.trace());
    }
}

TEST_CASE("enumerate_sl2 matches the quadruple-loop oracle") {
    for (long q : {3L, 5L, 9L}) {
        int p = q == 9 ? 3 : (int)q;
        int k = q == 9 ? 2 : 1;
        FieldCtx F = FieldCtx::make(p, k);
        auto oracle = sl2_oracle(F);
        auto got = enumerate_sl2(F);
        REQUIRE(got.size() == oracle.size());
        CHECK(got.size() == (size_t)(q * q * q - q));
        bool same = true;
        for (size_t i = 0; i < got.size(); ++i) {
            for (int e = 0; e < 4; ++e)
                if (got[i].code(e) != oracle[i][(size_t)e]) same = false;
        }
        CHECK_MESSAGE(same, "oracle order mismatch at q = ", q);
    }
}

TEST_CASE("|SL2| equals the group-order polynomial") {
    for (long q : {3L, 5L, 7L, 11L, 13L, 25L}) {
        int p = q == 25 ? 5 : (int)q;
        int k = q == 25 ? 2 : 1;
        FieldCtx F = FieldCtx::make(p, k);
        CHECK(Int(enumerate_sl2(F).size()) == group_order_at(MatrixFamily::SL, 2, Int(q)));
    }
}

TEST_CASE("group orders against independent enumeration") {
    // GL2 over GF(3): count invertible 2x2 matrices directly
    long count_gl2 = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if ((a * d - b * c) % 3 != 0) ++count_gl2;
    CHECK(count_gl2 == 48);
    CHECK(group_order_at(MatrixFamily::GL, 2, Int(3)) == 48);

    // SL3 over GF(2): count 3x3 binary matrices with det = 1 mod 2
    long count_sl3 = 0;
    for (int bits = 0; bits < 512; ++bits) {
        int m[3][3];
        for (int i = 0; i < 9; ++i) m[i / 3][i % 3] = (bits >> i) & 1;
        int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (((det % 2) + 2) % 2 == 1) ++count_sl3;
    }
    CHECK(count_sl3 == 168);
    CHECK(group_order_at(MatrixFamily::SL, 3, Int(2)) == 168);

    // |SL2| as a polynomial is q^3 - q
    CountPoly sl2 = group_order_poly(MatrixFamily::SL, 2);
    CHECK(sl2 == CountPoly::from_coeffs(Var::Q, {Rat(0), Rat(-1), Rat(0), Rat(1)}));
}

TEST_CASE("hom counts") {
    CHECK(hom_count_at(MatrixFamily::SL, 2, 2, Int(3)) == 576);
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            CHECK(hom_count_at(MatrixFamily::SL, n, r, Int(1)) == 0);
    CountPoly gl1_cubed = hom_count_poly(MatrixFamily::GL, 1, 3);
    CountPoly qm1 = CountPoly::variable(Var::Q) - CountPoly::constant(Var::Q, 1);
    CHECK(gl1_cubed == qm1.pow(3));
}

TEST_CASE("eigen: identity") {
    FieldCtx F = FieldCtx::make(5, 1);
    EigData e = eigen(Mat2::identity(F));
    CHECK(e.all_lines);
    CHECK(e.rational);
    CHECK(e.diagonalizable);
    CHECK(e.eigenvalues.first == ExtElem(F.elem(F.one())));
    CHECK(e.eigenvalues.second == ExtElem(F.elem(F.one())));
}

TEST_CASE("eigen: rotation over GF(3) has irrational eigenvalues") {
    FieldCtx F = FieldCtx::make(3, 1);
    // oracle: x^2 + 1 has no root mod 3
    for (int x = 0; x < 3; ++x) CHECK((x * x + 1) % 3 != 0);
    Mat2 rot = Mat2::sl2(F, 0, F.from_int(1), F.from_int(-1), 0);
    EigData e = eigen(rot);
    CHECK(e.trace.is_zero());
    CHECK(!e.rational);
    CHECK(e.diagonalizable);
    CHECK(!e.eigenvalues.first.is_base());
    CHECK(!e.eigenvalues.second.is_base());
    REQUIRE(e.lines.size() == 2);
}

TEST_CASE("eigen: Jordan block") {
    FieldCtx F = FieldCtx::make(5, 1);
    Mat2 u = Mat2::sl2(F, F.one(), F.one(), 0, F.one());
    EigData e = eigen(u);
    CHECK(e.trace == F.elem_from_int(2));
    CHECK(e.rational);
    CHECK(!e.diagonalizable);
    CHECK(e.eigenvalues.first == ExtElem(F.elem(F.one())));
    REQUIRE(e.lines.size() == 1);
    // single eigenspace spanned by (1, 0)
    CHECK(e.lines[0].x == ExtElem(F.elem(F.one())));
    CHECK(e.lines[0].y.is_zero());
}

TEST_CASE("eigen invariants over whole groups") {
    for (long q : {3L, 5L, 7L, 9L}) {
        int p = q == 9 ? 3 : (int)q;
        int k = q == 9 ? 2 : 1;
        FieldCtx F = FieldCtx::make(p, k);
        ExtElem one(F.elem(F.one()));
        for (const Mat2& m : enumerate_sl2(F)) {
            EigData e = eigen(m);
            CHECK(e.eigenvalues.first * e.eigenvalues.second == one);
            CHECK(e.eigenvalues.first + e.eigenvalues.second == ExtElem(e.trace));
            if (!e.rational) {
                CHECK(!e.eigenvalues.first.is_base());
                CHECK(!e.eigenvalues.second.is_base());
                for (const ProjLine& l : e.lines) CHECK(!l.is_base());
            }
        }
    }
}

TEST_CASE("conjugation preserves trace and rationality") {
    FieldCtx F3 = FieldCtx::make(3, 1);
    std::vector<Mat2> g3 = enumerate_sl2(F3);
    for (const Mat2& m : g3)
        for (const Mat2& g : g3) {
            Mat2 c = conjugate(g, m);
            CHECK(c.trace() == m.trace());
            CHECK(eigen(c).rational == eigen(m).rational);
        }

    FieldCtx F25 = FieldCtx::make(5, 2);
    std::vector<Mat2> g25 = enumerate_sl2(F25);
    std::mt19937_64 rng(25);
    for (int i = 0; i < 10000; ++i) {
        Mat2 m = pick(g25, rng), g = pick(g25, rng);
        Mat2 c = conjugate(g, m);
        REQUIRE(c.trace() == m.trace());
        REQUIRE(eigen(c).rational == eigen(m).rational);
    }
}
