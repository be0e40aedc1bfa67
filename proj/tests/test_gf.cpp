#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "sl2census/gf.hpp"

using namespace sl2;

namespace {

const std::vector<long> kOddPrimePowersTo49 = {3,  5,  7,  9,  11, 13, 17, 19, 23,
                                               25, 27, 29, 31, 37, 41, 43, 47, 49};
const std::vector<long> kOddPrimePowersTo81 = {3,  5,  7,  9,  11, 13, 17, 19, 23, 25, 27, 29, 31,
                                               37, 41, 43, 47, 49, 53, 59, 61, 67, 71, 73, 79, 81};

std::pair<int, int> split_prime_power(long q) {
    for (int p = 3;; p += 2) {
        if (q % p == 0) {
            int k = 0;
            long v = q;
            while (v > 1) {
                v /= p;
                ++k;
            }
            return {p, k};
        }
    }
}

// independent oracle: squares of GF(p) for prime p, by exhaustive squaring
std::set<int> prime_field_squares(int p) {
    std::set<int> squares;
    for (int x = 1; x < p; ++x) squares.insert(x * x % p);
    return squares;
}

}  // namespace

TEST_CASE("prime field construction") {
    FieldCtx F = FieldCtx::make(3, 1);
    CHECK(F.q() == 3);
    CHECK(F.modulus() == std::vector<int>{0, 1});  // modulus x
    CHECK(F.elem_from_int(2).coeffs() == std::vector<int>{2});
}

TEST_CASE("GF(9) modulus is the lex-smallest root-free monic quadratic") {
    // oracle: enumerate all 9 monic quadratics over GF(3), keep the
    // root-free ones, take the lexicographic minimum (constant term most
    // significant)
    std::vector<std::vector<int>> root_free;
    for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = 0; c1 < 3; ++c1) {
            bool has_root = false;
            for (int x = 0; x < 3; ++x)
                if ((c0 + c1 * x + x * x) % 3 == 0) has_root = true;
            if (!has_root) root_free.push_back({c0, c1, 1});
        }
    REQUIRE(!root_free.empty());
    std::vector<int> expect = *std::min_element(root_free.begin(), root_free.end());
    CHECK(expect == std::vector<int>{1, 0, 1});  // frozen: x^2 + 1

    FieldCtx F = FieldCtx::make(3, 2);
    CHECK(F.q() == 9);
    CHECK(F.modulus() == expect);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(FieldCtx::make(2, 1), EvenCharacteristicError);
    CHECK_THROWS_AS(FieldCtx::make(9, 1), NonPrimeError);
    CHECK_THROWS_AS(FieldCtx::make(15, 1), NonPrimeError);
    CHECK_THROWS_AS(FieldCtx::make(3, 8), CapExceededError);
    CHECK_THROWS_AS(FieldCtx::make(3, 2, 5), CapExceededError);
}

TEST_CASE("basic arithmetic") {
    FieldCtx F3 = FieldCtx::make(3, 1);
    CHECK(F3.elem_from_int(2) + F3.elem_from_int(2) == F3.elem_from_int(1));

    FieldCtx F7 = FieldCtx::make(7, 1);
    CHECK(F7.elem_from_int(3) * F7.elem_from_int(5) == F7.elem_from_int(1));
    CHECK_THROWS_AS(F7.elem_from_int(1) / F7.elem_from_int(0), DivisionByZeroError);
    CHECK_THROWS_AS(F7.elem_from_int(0).pow(-1), DivisionByZeroError);
    CHECK(F7.elem_from_int(3).pow(-1) == F7.elem_from_int(5));

    FieldCtx F3b = FieldCtx::make(3, 1);
    FieldCtx F5 = FieldCtx::make(5, 1);
    CHECK(F3.elem_from_int(1) + F3b.elem_from_int(1) == F3.elem_from_int(2));  // structural match
    CHECK_THROWS_AS(F3.elem_from_int(1) + F5.elem_from_int(1), MixedFieldsError);
}

TEST_CASE("GF(9): x*x reduces by the constructed modulus") {
    FieldCtx F = FieldCtx::make(3, 2);
    FieldElem x = F.elem(F.from_coeffs({0, 1}));
    // oracle: x^2 mod (x^2 + 1) = -1 = 2
    CHECK((x * x).coeffs() == std::vector<int>{2, 0});
}

TEST_CASE("field axioms, exhaustive for q <= 49") {
    for (long q : kOddPrimePowersTo49) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        for (long a = 0; a < q; ++a) {
            FieldElem ea = F.elem((uint32_t)a);
            CHECK(ea + F.elem(0) == ea);
            CHECK(ea * F.elem(F.one()) == ea);
            CHECK((ea + (-ea)).is_zero());
            if (a != 0) CHECK(ea * ea.inverse() == F.elem(F.one()));
        }
        for (long a = 0; a < q; ++a)
            for (long b = 0; b < q; ++b) {
                FieldElem ea = F.elem((uint32_t)a), eb = F.elem((uint32_t)b);
                CHECK(ea + eb == eb + ea);
                CHECK(ea * eb == eb * ea);
            }
        bool ok = true;
        for (long a = 0; a < q && ok; ++a)
            for (long b = 0; b < q && ok; ++b)
                for (long c = 0; c < q && ok; ++c) {
                    FieldElem ea = F.elem((uint32_t)a), eb = F.elem((uint32_t)b),
                              ec = F.elem((uint32_t)c);
                    ok = (ea + eb) + ec == ea + (eb + ec) && (ea * eb) * ec == ea * (eb * ec) &&
                         ea * (eb + ec) == ea * eb + ea * ec;
                }
        CHECK_MESSAGE(ok, "associativity/distributivity failed at q = ", q);
    }
}

TEST_CASE("field axioms, randomized for larger fields") {
    std::mt19937_64 rng(20240817);
    for (long q : {625L, 729L, 2039L}) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        bool ok = true;
        for (int trial = 0; trial < 10000 && ok; ++trial) {
            FieldElem a = F.elem((uint32_t)(rng() % q));
            FieldElem b = F.elem((uint32_t)(rng() % q));
            FieldElem c = F.elem((uint32_t)(rng() % q));
            ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                 a * (b + c) == a * b + a * c && a + b == b + a && a * b == b * a;
            if (!a.is_zero()) ok = ok && a * a.inverse() == F.elem(F.one());
        }
        CHECK_MESSAGE(ok, "axioms failed at q = ", q);
    }
}

TEST_CASE("Frobenius is additive and multiplicative, exhaustive for q <= 81") {
    for (long q : kOddPrimePowersTo81) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        bool ok = true;
        for (long a = 0; a < q && ok; ++a)
            for (long b = 0; b < q && ok; ++b) {
                FieldElem ea = F.elem((uint32_t)a), eb = F.elem((uint32_t)b);
                ok = (ea + eb).pow(p) == ea.pow(p) + eb.pow(p) &&
                     (ea * eb).pow(p) == ea.pow(p) * eb.pow(p);
            }
        CHECK_MESSAGE(ok, "Frobenius failed at q = ", q);
    }
}

TEST_CASE("legendre symbol on GF(7) against the exhaustive-squares oracle") {
    std::set<int> squares = prime_field_squares(7);
    CHECK(squares == std::set<int>{1, 2, 4});
    FieldCtx F = FieldCtx::make(7, 1);
    CHECK(legendre(F.elem_from_int(2)) == 1);
    CHECK(legendre(F.elem_from_int(3)) == -1);
    CHECK(legendre(F.elem_from_int(0)) == 0);
    for (int a = 1; a < 7; ++a)
        CHECK(legendre(F.elem_from_int(a)) == (squares.count(a) ? 1 : -1));
}

TEST_CASE("legendre(1) = 1 and multiplicativity, exhaustive for q <= 49") {
    for (long q : kOddPrimePowersTo49) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        CHECK(legendre(F.elem(F.one())) == 1);
        bool ok = true;
        for (long a = 1; a < q && ok; ++a)
            for (long b = 1; b < q && ok; ++b) {
                FieldElem ea = F.elem((uint32_t)a), eb = F.elem((uint32_t)b);
                ok = legendre(ea) * legendre(eb) == legendre(ea * eb);
            }
        CHECK_MESSAGE(ok, "multiplicativity failed at q = ", q);
    }
}

TEST_CASE("exactly (q-1)/2 nonzero squares, exhaustive for q <= 81") {
    for (long q : kOddPrimePowersTo81) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        long squares = 0;
        for (long a = 1; a < q; ++a)
            if (legendre(F.elem((uint32_t)a)) == 1) ++squares;
        CHECK(squares == (q - 1) / 2);
    }
}

TEST_CASE("square roots") {
    FieldCtx F = FieldCtx::make(7, 1);
    auto r2 = sqrt_pair(F.elem_from_int(2));
    REQUIRE(r2.has_value());
    CHECK(r2->first == F.elem_from_int(3));
    CHECK(r2->second == F.elem_from_int(4));
    CHECK(!sqrt_pair(F.elem_from_int(3)).has_value());
    auto r0 = sqrt_pair(F.elem_from_int(0));
    REQUIRE(r0.has_value());
    CHECK(r0->first == F.elem_from_int(0));
    CHECK(r0->second == F.elem_from_int(0));

    for (long q : kOddPrimePowersTo49) {
        auto [p, k] = split_prime_power(q);
        FieldCtx Fq = FieldCtx::make(p, k);
        for (long a = 0; a < q; ++a) {
            FieldElem ea = Fq.elem((uint32_t)a);
            auto roots = sqrt_pair(ea);
            if (legendre(ea) < 0) {
                CHECK(!roots.has_value());
            } else {
                REQUIRE(roots.has_value());
                CHECK(roots->first * roots->first == ea);
                CHECK(roots->second * roots->second == ea);
                CHECK(!(roots->second < roots->first));
            }
        }
    }
}

TEST_CASE("smallest non-residue") {
    // oracles: squares in GF(3) are {1}; squares in GF(7) are {1,2,4}
    CHECK(prime_field_squares(3) == std::set<int>{1});
    FieldCtx F3 = FieldCtx::make(3, 1);
    CHECK(smallest_nonresidue(F3) == F3.elem_from_int(2));
    FieldCtx F7 = FieldCtx::make(7, 1);
    CHECK(smallest_nonresidue(F7) == F7.elem_from_int(3));
}

TEST_CASE("ratio of two non-residues is a residue, exhaustive for q <= 49") {
    for (long q : kOddPrimePowersTo49) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        std::vector<FieldElem> nonres;
        for (long a = 1; a < q; ++a)
            if (legendre(F.elem((uint32_t)a)) == -1) nonres.push_back(F.elem((uint32_t)a));
        bool ok = true;
        for (const FieldElem& a : nonres)
            for (const FieldElem& b : nonres)
                if (legendre(a / b) != 1) ok = false;
        CHECK_MESSAGE(ok, "non-residue ratio failed at q = ", q);
    }
}

TEST_CASE("extension arithmetic restricted to the base field agrees") {
    for (long q : {9L, 25L, 27L}) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        bool ok = true;
        for (long a = 0; a < q && ok; ++a)
            for (long b = 0; b < q && ok; ++b) {
                FieldElem ea = F.elem((uint32_t)a), eb = F.elem((uint32_t)b);
                ExtElem xa(ea), xb(eb);
                ok = (xa + xb) == ExtElem(ea + eb) && (xa * xb) == ExtElem(ea * eb);
                if (b != 0) ok = ok && (xa / xb) == ExtElem(ea / eb);
                ok = ok && xa.pow(3) == xa * xa * xa;
                if (a != 0) ok = ok && xa.pow(-1) == xa.inverse();
            }
        CHECK_MESSAGE(ok, "embedding mismatch at q = ", q);
    }
}

TEST_CASE("ext_sqrt_roots") {
    FieldCtx F3 = FieldCtx::make(3, 1);

    // t = 2: double root 1
    auto [r1, r2] = ext_sqrt_roots(F3.elem_from_int(2));
    CHECK(r1 == ExtElem(F3.elem(F3.one())));
    CHECK(r2 == r1);

    // t = 0 over GF(3): x^2 + 1 has no root mod 3 (oracle: 0,1,2 squared)
    for (int x = 0; x < 3; ++x) CHECK((x * x + 1) % 3 != 0);
    auto [s1, s2] = ext_sqrt_roots(F3.elem_from_int(0));
    CHECK(!s1.is_base());
    CHECK(!s2.is_base());
    CHECK(s1 * s1 == -ExtElem(F3.elem(F3.one())));

    // Vieta: product 1, sum t, for every trace over fields up to 49
    for (long q : kOddPrimePowersTo49) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        ExtElem one(F.elem(F.one()));
        bool ok = true;
        for (long t = 0; t < q && ok; ++t) {
            FieldElem tr = F.elem((uint32_t)t);
            auto [a, b] = ext_sqrt_roots(tr);
            ok = (a * b == one) && (a + b == ExtElem(tr));
        }
        CHECK_MESSAGE(ok, "Vieta failed at q = ", q);
    }
}

TEST_CASE("multiplicative order is q - 1 (generator existence spot check)") {
    for (long q : {9L, 27L, 49L}) {
        auto [p, k] = split_prime_power(q);
        FieldCtx F = FieldCtx::make(p, k);
        // some element of full order q-1 exists
        bool found = false;
        for (long a = 1; a < q && !found; ++a) {
            long ord = 1;
            FieldElem x = F.elem((uint32_t)a);
            FieldElem acc = x;
            while (!(acc == F.elem(F.one()))) {
                acc = acc * x;
                ++ord;
            }
            found = ord == q - 1;
        }
        CHECK(found);
    }
}
