// Exact arithmetic for GF(p^k), p an odd prime, plus the distinguished
// quadratic extension GF(q^2) and quadratic-residue machinery.
//
// Elements are canonically encoded as integer codes in [0, q): an element with
// coefficient vector (c_0, ..., c_{k-1}) (low-degree first, each in [0, p))
// has code sum c_i * p^(k-1-i).  Integer order on codes is therefore the
// lexicographic order on coefficient vectors with the low-degree coefficient
// most significant; that order is used everywhere a canonical choice is
// needed (moduli, square roots, orbit representatives).

#ifndef SL2CENSUS_GF_HPP
#define SL2CENSUS_GF_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sl2 {

class FieldElem;
class ExtElem;

// Immutable and address-stable: elements and matrices hold a pointer to
// their context, so a FieldCtx must outlive everything built over it.
class FieldCtx {
public:
    static constexpr long kDefaultCap = 2048;

    // Builds GF(p^k) with the lexicographically smallest monic irreducible
    // modulus of degree k over GF(p).  Throws NonPrimeError,
    // EvenCharacteristicError or CapExceededError.
    static FieldCtx make(int p, int k, long cap = kDefaultCap);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) = delete;
    FieldCtx& operator=(FieldCtx&&) = delete;

    int p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }
    // Monic modulus, coefficients low-to-high, length k+1.
    const std::vector<int>& modulus() const { return modulus_; }

    // Code-level arithmetic (the hot path; all table lookups).
    uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add_[a * q_ + neg_[b]]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, long long e) const;
    int legendre(uint32_t a) const { return legendre_[a]; }
    // Smallest square root of a under element order, or nullopt.
    std::optional<uint32_t> sqrt_min(uint32_t a) const;
    // The element-order-smallest quadratic non-residue.
    uint32_t nonresidue() const { return nonresidue_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return one_; }
    uint32_t from_int(long long v) const;
    uint32_t from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<int> coeffs_of(uint32_t code) const;

    FieldElem elem(uint32_t code) const;
    FieldElem elem_from_int(long long v) const;

    // Structural equality; two contexts with equal (p, k, modulus) carry
    // identical arithmetic.
    bool same_as(const FieldCtx& other) const;

private:
    FieldCtx(int p, int k, long cap);

    int p_ = 0;
    int k_ = 0;
    long q_ = 0;
    uint32_t one_ = 0;
    uint32_t nonresidue_ = 0;
    std::vector<int> modulus_;
    std::vector<uint16_t> add_;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> neg_;
    std::vector<uint16_t> inv_;
    std::vector<int8_t> legendre_;
    std::vector<int32_t> sqrt_min_;  // -1 when no root exists
};

// One element of a FieldCtx.  Value type; mixing elements of structurally
// different contexts throws MixedFieldsError.
class FieldElem {
public:
    FieldElem() : f_(nullptr), code_(0) {}
    FieldElem(const FieldCtx& f, uint32_t code) : f_(&f), code_(code) {}

    const FieldCtx& field() const { return *f_; }
    uint32_t code() const { return code_; }
    std::vector<int> coeffs() const { return f_->coeffs_of(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const { return FieldElem(*f_, f_->neg(code_)); }
    FieldElem pow(long long e) const { return FieldElem(*f_, f_->pow(code_, e)); }
    FieldElem inverse() const { return FieldElem(*f_, f_->inv(code_)); }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // Element order: integer order on codes.
    bool operator<(const FieldElem& o) const;

private:
    friend class ExtElem;
    const FieldCtx* f_;
    uint32_t code_;
};

// One element of GF(q^2) = F[x]/(x^2 - n), n the distinguished non-residue:
// re + im * sqrt(n).  Elements with im = 0 embed the base field.
class ExtElem {
public:
    ExtElem() = default;
    explicit ExtElem(const FieldElem& re) : re_(re), im_(re.field(), 0) {}
    ExtElem(const FieldElem& re, const FieldElem& im);

    const FieldCtx& field() const { return re_.field(); }
    const FieldElem& re() const { return re_; }
    const FieldElem& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_base() const { return im_.is_zero(); }

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator/(const ExtElem& o) const;
    ExtElem operator-() const;
    ExtElem inverse() const;
    ExtElem pow(long long e) const;
    // Galois conjugate re - im*sqrt(n); the norm is conj(x)*x.
    ExtElem conj() const { return ExtElem(re_, -im_); }

    bool operator==(const ExtElem& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const ExtElem& o) const { return !(*this == o); }
    // Lexicographic on (re, im), re most significant.
    bool operator<(const ExtElem& o) const;

    // Packs into [0, q^2): re*q + im.  Integer order on packed codes equals
    // operator<.
    uint64_t code() const;

private:
    FieldElem re_;
    FieldElem im_;
};

// Legendre symbol: 0 for 0, else +1 for nonzero squares, -1 otherwise.
int legendre(const FieldElem& a);

// Both square roots {s, -s} ordered by element order, collapsed to (0, 0) for
// a = 0; nullopt when a is a non-residue.
std::optional<std::pair<FieldElem, FieldElem>> sqrt_pair(const FieldElem& a);

FieldElem smallest_nonresidue(const FieldCtx& F);

// Both roots of x^2 - t*x + 1 in GF(q^2) (the polynomial always splits
// there), ordered by ExtElem order.
std::pair<ExtElem, ExtElem> ext_sqrt_roots(const FieldElem& trace);

}  // namespace sl2

#endif
