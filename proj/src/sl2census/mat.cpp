#include "mat.hpp"

namespace sl2 {

namespace {
void check_same_field(const Mat2& m, const Mat2& n) {
    if (&m.field() == &n.field()) return;
    if (!m.field().same_as(n.field()))
        throw MixedFieldsError("matrices belong to different fields");
}
}  // namespace

Mat2 Mat2::from_elems(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                      const FieldElem& d) {
    (void)(a + b);  // same-field checks
    (void)(c + d);
    (void)(a + c);
    return Mat2(a.field(), a.code(), b.code(), c.code(), d.code());
}

Mat2 Mat2::sl2(const FieldCtx& f, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    Mat2 m(f, a, b, c, d);
    if (!m.is_unimodular()) throw Error("matrix is not in SL2: det != 1");
    return m;
}

Mat2 Mat2::identity(const FieldCtx& f) { return Mat2(f, f.one(), 0, 0, f.one()); }

Mat2 Mat2::minus_identity(const FieldCtx& f) {
    uint32_t m1 = f.neg(f.one());
    return Mat2(f, m1, 0, 0, m1);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    check_same_field(*this, o);
    const FieldCtx& F = *f_;
    return Mat2(F,
                F.add(F.mul(e_[0], o.e_[0]), F.mul(e_[1], o.e_[2])),
                F.add(F.mul(e_[0], o.e_[1]), F.mul(e_[1], o.e_[3])),
                F.add(F.mul(e_[2], o.e_[0]), F.mul(e_[3], o.e_[2])),
                F.add(F.mul(e_[2], o.e_[1]), F.mul(e_[3], o.e_[3])));
}

Mat2 Mat2::inverse() const {
    const FieldCtx& F = *f_;
    return Mat2(F, e_[3], F.neg(e_[1]), F.neg(e_[2]), e_[0]);
}

FieldElem Mat2::det() const {
    const FieldCtx& F = *f_;
    return FieldElem(F, F.sub(F.mul(e_[0], e_[3]), F.mul(e_[1], e_[2])));
}

bool Mat2::is_unimodular() const { return det().code() == f_->one(); }

bool Mat2::is_identity() const {
    return e_[0] == f_->one() && e_[1] == 0 && e_[2] == 0 && e_[3] == f_->one();
}

bool Mat2::is_minus_identity() const {
    uint32_t m1 = f_->neg(f_->one());
    return e_[0] == m1 && e_[1] == 0 && e_[2] == 0 && e_[3] == m1;
}

bool Mat2::operator==(const Mat2& o) const {
    check_same_field(*this, o);
    return e_[0] == o.e_[0] && e_[1] == o.e_[1] && e_[2] == o.e_[2] && e_[3] == o.e_[3];
}

bool Mat2::operator<(const Mat2& o) const {
    check_same_field(*this, o);
    for (int i = 0; i < 4; ++i)
        if (e_[i] != o.e_[i]) return e_[i] < o.e_[i];
    return false;
}

Mat2 conjugate(const Mat2& g, const Mat2& m) { return g * m * g.inverse(); }

bool commute(const Mat2& m, const Mat2& n) { return m * n == n * m; }

ExtMat2 ExtMat2::identity(const FieldCtx& f) {
    ExtElem one(f.elem(f.one()));
    ExtElem zero(f.elem(0));
    return ExtMat2(one, zero, zero, one);
}

ExtMat2 ExtMat2::operator*(const ExtMat2& o) const {
    return ExtMat2(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                   c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

ExtMat2 ExtMat2::inverse() const {
    ExtElem dt = det();
    if (dt.is_zero()) throw DivisionByZeroError("singular matrix");
    return ExtMat2(d_ / dt, -(b_ / dt), -(c_ / dt), a_ / dt);
}

bool ExtMat2::is_base() const {
    return a_.is_base() && b_.is_base() && c_.is_base() && d_.is_base();
}

bool ExtMat2::operator==(const ExtMat2& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

ExtMat2 conjugate(const ExtMat2& g, const ExtMat2& m) { return g * m * g.inverse(); }

std::vector<Mat2> enumerate_sl2(const FieldCtx& F) {
    const long q = F.q();
    if (q > 256)
        throw CapExceededError("SL2 enumeration over GF(" + std::to_string(q) +
                               ") would hold " + std::to_string(q * q * q - q) + " matrices");
    std::vector<Mat2> out;
    out.reserve((size_t)(q * q * q - q));
    for (long a = 0; a < q; ++a) {
        if (a == 0) {
            // bc = -1, d free
            for (long b = 1; b < q; ++b) {
                uint32_t c = F.neg(F.inv((uint32_t)b));
                for (long d = 0; d < q; ++d)
                    out.emplace_back(F, 0, (uint32_t)b, c, (uint32_t)d);
            }
        } else {
            uint32_t ai = F.inv((uint32_t)a);
            for (long b = 0; b < q; ++b)
                for (long c = 0; c < q; ++c) {
                    // d = (1 + bc) / a
                    uint32_t d = F.mul(F.add(F.one(), F.mul((uint32_t)b, (uint32_t)c)), ai);
                    out.emplace_back(F, (uint32_t)a, (uint32_t)b, (uint32_t)c, d);
                }
        }
    }
    if ((long)out.size() != q * q * q - q) throw Error("SL2 enumeration size mismatch");
    return out;
}

uint64_t ProjLine::id() const {
    const FieldCtx& F = x.field();
    if (!x.is_zero()) return y.code();
    return (uint64_t)F.q() * F.q();
}

ProjLine make_line(const ExtElem& x, const ExtElem& y) {
    if (!x.is_zero()) {
        ExtElem one(x.field().elem(x.field().one()));
        return ProjLine{one, y / x};
    }
    if (y.is_zero()) throw Error("projective point needs a nonzero vector");
    ExtElem one(y.field().elem(y.field().one()));
    ExtElem zero(y.field().elem(0));
    return ProjLine{zero, one};
}

EigData eigen(const Mat2& M) {
    if (!M.is_unimodular()) throw Error("eigen data requires det = 1");
    const FieldCtx& F = M.field();
    EigData out;
    out.trace = M.trace();
    out.eigenvalues = ext_sqrt_roots(out.trace);
    FieldElem delta = out.trace * out.trace - F.elem_from_int(4);
    out.rational = legendre(delta) >= 0;
    bool repeated = delta.is_zero();
    out.diagonalizable = !repeated || M.is_central();
    out.all_lines = M.is_central();
    if (out.all_lines) return out;

    auto line_for = [&](const ExtElem& lambda) {
        ExtElem a(M.a()), b(M.b()), c(M.c()), d(M.d());
        // kernel of M - lambda*I from any nonzero row
        ExtElem r1x = a - lambda, r1y = b;
        if (!r1x.is_zero() || !r1y.is_zero()) return make_line(r1y, lambda - a);
        return make_line(d - lambda, -c);
    };
    out.lines.push_back(line_for(out.eigenvalues.first));
    if (!repeated) out.lines.push_back(line_for(out.eigenvalues.second));
    return out;
}

CountPoly group_order_poly(MatrixFamily family, int n) {
    if (n < 1) throw Error("matrix size must be >= 1");
    CountPoly q = CountPoly::variable(Var::Q);
    CountPoly one = CountPoly::constant(Var::Q, 1);
    CountPoly out = q.pow((unsigned)(n * (n - 1) / 2));
    int k0 = family == MatrixFamily::GL ? 1 : 2;
    for (int k = k0; k <= n; ++k) out = out * (q.pow((unsigned)k) - one);
    if (!out.is_integral()) throw Error("group order polynomial must be integral");
    return out;
}

Int group_order_at(MatrixFamily family, int n, const Int& q) {
    return group_order_poly(family, n).eval_int(q);
}

CountPoly hom_count_poly(MatrixFamily family, int n, int r) {
    if (r < 1) throw Error("rank must be >= 1");
    return group_order_poly(family, n).pow((unsigned)r);
}

Int hom_count_at(MatrixFamily family, int n, int r, const Int& q) {
    return hom_count_poly(family, n, r).eval_int(q);
}

}  // namespace sl2
