// 2x2 matrix algebra over a FieldCtx and its quadratic extension, SL2
// enumeration in canonical order, eigen-theory, and the GL_n / SL_n order
// formulas.

#ifndef SL2CENSUS_MAT_HPP
#define SL2CENSUS_MAT_HPP

#include <cstdint>
#include <vector>

#include "gf.hpp"
#include "poly.hpp"

namespace sl2 {

// Row-major entries (a b; c d) held as element codes.
class Mat2 {
public:
    Mat2() : f_(nullptr), e_{0, 0, 0, 0} {}
    Mat2(const FieldCtx& f, uint32_t a, uint32_t b, uint32_t c, uint32_t d)
        : f_(&f), e_{a, b, c, d} {}
    static Mat2 from_elems(const FieldElem& a, const FieldElem& b, const FieldElem& c,
                           const FieldElem& d);
    // Determinant-checked constructor for SL2 contexts.
    static Mat2 sl2(const FieldCtx& f, uint32_t a, uint32_t b, uint32_t c, uint32_t d);
    static Mat2 identity(const FieldCtx& f);
    static Mat2 minus_identity(const FieldCtx& f);

    const FieldCtx& field() const { return *f_; }
    FieldElem a() const { return FieldElem(*f_, e_[0]); }
    FieldElem b() const { return FieldElem(*f_, e_[1]); }
    FieldElem c() const { return FieldElem(*f_, e_[2]); }
    FieldElem d() const { return FieldElem(*f_, e_[3]); }
    uint32_t code(int i) const { return e_[i]; }

    Mat2 operator*(const Mat2& o) const;
    // Adjugate; valid since det = 1.
    Mat2 inverse() const;
    FieldElem trace() const { return FieldElem(*f_, f_->add(e_[0], e_[3])); }
    FieldElem det() const;
    bool is_unimodular() const;
    bool is_identity() const;
    bool is_minus_identity() const;
    bool is_central() const { return is_identity() || is_minus_identity(); }

    bool operator==(const Mat2& o) const;
    bool operator!=(const Mat2& o) const { return !(*this == o); }
    // Lexicographic on (a, b, c, d) under element order.
    bool operator<(const Mat2& o) const;

private:
    const FieldCtx* f_;
    uint32_t e_[4];
};

Mat2 conjugate(const Mat2& g, const Mat2& m);  // g m g^{-1}
bool commute(const Mat2& m, const Mat2& n);

// 2x2 matrix over GF(q^2); used for normal-form witnesses and the Galois
// involution, where eigenbases live in the extension.
class ExtMat2 {
public:
    ExtMat2() = default;
    ExtMat2(const ExtElem& a, const ExtElem& b, const ExtElem& c, const ExtElem& d)
        : a_(a), b_(b), c_(c), d_(d) {}
    explicit ExtMat2(const Mat2& m)
        : a_(m.a()), b_(m.b()), c_(m.c()), d_(m.d()) {}
    static ExtMat2 identity(const FieldCtx& f);

    const ExtElem& a() const { return a_; }
    const ExtElem& b() const { return b_; }
    const ExtElem& c() const { return c_; }
    const ExtElem& d() const { return d_; }

    ExtMat2 operator*(const ExtMat2& o) const;
    ExtElem det() const { return a_ * d_ - b_ * c_; }
    ExtMat2 inverse() const;  // general inverse, divides by det
    bool is_base() const;
    bool operator==(const ExtMat2& o) const;

private:
    ExtElem a_, b_, c_, d_;
};

ExtMat2 conjugate(const ExtMat2& g, const ExtMat2& m);

// All determinant-1 matrices in lexicographic order on (a, b, c, d);
// length q(q^2-1).  Throws CapExceededError when the list would be
// unreasonably large.
std::vector<Mat2> enumerate_sl2(const FieldCtx& F);

// A point of P^1(GF(q^2)) with the first nonzero coordinate scaled to 1.
struct ProjLine {
    ExtElem x, y;

    // (1, w) -> code(w) in [0, q^2); (0, 1) -> q^2.  Integer order on ids is
    // the canonical candidate order.
    uint64_t id() const;
    bool is_base() const { return x.is_base() && y.is_base(); }
    bool operator==(const ProjLine& o) const { return x == o.x && y == o.y; }
};

// Canonical projective point spanned by (x, y) != (0, 0).
ProjLine make_line(const ExtElem& x, const ExtElem& y);

struct EigData {
    FieldElem trace;
    std::pair<ExtElem, ExtElem> eigenvalues;  // roots of x^2 - t x + 1, ordered
    bool rational;        // eigenvalues lie in the base field
    bool diagonalizable;  // false exactly when trace = +-2 and M != +-I
    bool all_lines;       // M = +-I: every line is an eigenline
    std::vector<ProjLine> lines;  // 1 or 2 canonical eigenlines otherwise
};

// Requires det(M) = 1.
EigData eigen(const Mat2& M);

enum class MatrixFamily { SL, GL };

// |GL_n| = q^(n(n-1)/2) prod_{k=1..n} (q^k - 1); |SL_n| drops the k=1 factor.
CountPoly group_order_poly(MatrixFamily family, int n);
Int group_order_at(MatrixFamily family, int n, const Int& q);
// |Hom(F_r, .)| = |.|^r.
CountPoly hom_count_poly(MatrixFamily family, int n, int r);
Int hom_count_at(MatrixFamily family, int n, int r, const Int& q);

}  // namespace sl2

#endif
