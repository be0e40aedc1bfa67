#include "formulas.hpp"

namespace sl2 {

namespace {

void require_rank(int r, int least) {
    if (r < least)
        throw RankTooSmallError("rank r = " + std::to_string(r) + " must be >= " +
                                std::to_string(least));
}

CountPoly qv() { return CountPoly::variable(Var::Q); }
CountPoly qc(long v) { return CountPoly::constant(Var::Q, Rat(v)); }

Rat pow2(int e) {
    Rat x(1);
    for (int i = 0; i < e; ++i) x *= 2;
    return x;
}

CountPoly half(const CountPoly& p) { return p.scaled(Rat(1, 2)); }

}  // namespace

CountPoly total_orbits_poly(int r) {
    require_rank(r, 2);
    CountPoly q = qv();
    CountPoly qm1 = q - qc(1), qp1 = q + qc(1);
    CountPoly g = q.pow(3) - q;  // |SL2| = q^3 - q
    CountPoly out = half((q - qc(3)) * qm1.pow((unsigned)(r - 1)));
    out = out + half(qm1 * qp1.pow((unsigned)(r - 1)));
    out = out + q.pow((unsigned)(r - 1)).scaled(pow2(r + 1));
    out = out + g.pow((unsigned)(r - 1)).scaled(2);
    if (!out.is_integral()) throw Error("orbit total polynomial must be integral");
    return out;
}

std::array<StratumPolys, 6> stratum_polys(int r) {
    require_rank(r, 2);
    CountPoly q = qv();
    CountPoly qm1 = q - qc(1), qp1 = q + qc(1);
    CountPoly two_r = CountPoly::constant(Var::Q, pow2(r));
    CountPoly g = q.pow(3) - q;

    std::array<StratumPolys, 6> out;
    auto& Z = out[(size_t)StratumLabel::Z];
    auto& D = out[(size_t)StratumLabel::D];
    auto& Db = out[(size_t)StratumLabel::Dbar];
    auto& U = out[(size_t)StratumLabel::U];
    auto& NR = out[(size_t)StratumLabel::NR];
    auto& AI = out[(size_t)StratumLabel::AI];

    Z.size = two_r;
    D.size = half(qm1.pow((unsigned)r) - two_r) * q * qp1;
    Db.size = half(qp1.pow((unsigned)r) - two_r) * q * qm1;
    U.size = qp1 * (q.scaled(2).pow((unsigned)r) - two_r);
    NR.size = qp1 * (qm1.pow((unsigned)r) * q.pow((unsigned)r) -
                     q.scaled(2).pow((unsigned)r) - q * (qm1.pow((unsigned)r) - two_r));
    AI.size = g.pow((unsigned)r) - Z.size - D.size - Db.size - U.size - NR.size;

    // orbits = m * size / |G|, exact by the uniform-action identity
    const CountPoly m[6] = {g, qm1, qp1, q.scaled(2), qc(2), qc(2)};
    for (size_t s = 0; s < 6; ++s)
        out[s].orbits = (m[s] * out[s].size).divide_exact(g);
    return out;
}

CountPoly e_poly(EFamily family, int r) {
    require_rank(r, 1);
    CountPoly q = qv();
    CountPoly qm1 = q - qc(1), qp1 = q + qc(1);
    if (family == EFamily::Abelian)
        return half(qm1.pow((unsigned)r) + qp1.pow((unsigned)r));
    CountPoly out = qm1.pow((unsigned)(r - 1)) *
                    (qp1.pow((unsigned)(r - 1)) - qc(1)) * q.pow((unsigned)(r - 1));
    out = out + half(q * (qm1.pow((unsigned)(r - 1)) + qp1.pow((unsigned)(r - 1))));
    return out;
}

EulerTable euler_table(int r) {
    require_rank(r, 2);
    Int p2 = 1;
    for (int i = 0; i < r - 2; ++i) p2 *= 2;
    EulerTable t{p2, -p2, 2 * p2, -2 * p2, 4 * p2};
    // recompute the first three from the E-polynomials at q = 1
    Rat ef = e_poly(EFamily::Free, r).eval(1);
    Rat ea = e_poly(EFamily::Abelian, r).eval(1);
    if (ef != Rat(t.chi) || ea != Rat(t.chi_sing) || ef - ea != Rat(t.chi_smooth))
        throw Error("Euler characteristics disagree with E-polynomial evaluations");
    return t;
}

namespace {

// Truncated formal power series, coefficients 0..guard.
using Series = std::vector<Rat>;

Series series_from_poly(const CountPoly& p, int guard) {
    Series s((size_t)guard + 1, Rat(0));
    for (size_t i = 0; i < p.coeffs().size() && i <= (size_t)guard; ++i)
        s[i] = p.coeffs()[i];
    return s;
}

Series series_mul(const Series& a, const Series& b, int guard) {
    Series out((size_t)guard + 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j + i <= (size_t)guard && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// 1 / (1 - c * t^step)
Series geometric(const Rat& c, int step, int guard) {
    Series s((size_t)guard + 1, Rat(0));
    Rat acc(1);
    for (int d = 0; d <= guard; d += step) {
        s[(size_t)d] = acc;
        acc *= c;
    }
    return s;
}

}  // namespace

CountPoly poincare_poly(EFamily family, int r, int guard) {
    require_rank(r, 2);
    CountPoly t = CountPoly::variable(Var::T);
    CountPoly one = CountPoly::constant(Var::T, 1);
    if (family == EFamily::Abelian)
        return half((one + t).pow((unsigned)r) + (one - t).pow((unsigned)r));

    if (guard == 0) guard = 8 * r;
    if (guard < 4 * r) throw Error("guard degree must be >= 4r");

    // -t (t^3+1)^r / (1-t^4)
    Series a = series_from_poly((t.pow(3) + one).pow((unsigned)r) * t, guard);
    a = series_mul(a, geometric(Rat(1), 4, guard), guard);
    for (Rat& c : a) c = -c;
    // t^3 (t+1)^r / (1-t^2) / 2
    Series b1 = series_from_poly((t + one).pow((unsigned)r) * t.pow(3), guard);
    b1 = series_mul(b1, geometric(Rat(1), 2, guard), guard);
    // t^3 (1-t)^r / (1+t^2), subtracted below
    Series b2 = series_from_poly((one - t).pow((unsigned)r) * t.pow(3), guard);
    b2 = series_mul(b2, geometric(Rat(-1), 2, guard), guard);

    Series total((size_t)guard + 1, Rat(0));
    for (int i = 0; i <= guard; ++i)
        total[(size_t)i] = a[(size_t)i] + (b1[(size_t)i] - b2[(size_t)i]) / 2;
    total[1] += 1;  // + t
    total[0] += 1;  // + 1

    for (int i = guard / 2; i <= guard; ++i)
        if (total[(size_t)i] != 0)
            throw SeriesNotPolynomialError(
                "nonzero coefficient at degree " + std::to_string(i) +
                " inside the guard window; the expansion is not a polynomial");
    while (!total.empty() && total.back() == 0) total.pop_back();
    return CountPoly::from_coeffs(Var::T, std::move(total));
}

bool reciprocity_check(int r) {
    require_rank(r, 2);
    CountPoly e = e_poly(EFamily::Abelian, r);
    CountPoly p = poincare_poly(EFamily::Abelian, r);
    // compare across variable tags coefficient-wise
    CountPoly p_in_q = CountPoly::from_coeffs(Var::Q, p.coeffs());
    CountPoly e_in_t = CountPoly::from_coeffs(Var::T, e.coeffs());
    return e.reciprocal(r) == p_in_q && p.reciprocal(r) == e_in_t;
}

}  // namespace sl2
