#include "gf.hpp"

#include <algorithm>

namespace sl2 {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), coefficients low-to-high.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, int p) {
    std::vector<int> prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic f of degree k: x^k = -(f_0 + ... + f_{k-1} x^{k-1})
    const size_t k = f.size() - 1;
    for (size_t d = prod.size(); d-- > k;) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (size_t j = 0; j < k; ++j)
            prod[d - k + j] = ((prod[d - k + j] - c * f[j]) % p + p) % p;
    }
    prod.resize(k);
    return prod;
}

Poly poly_mod(Poly a, const Poly& f, int p) {
    const size_t k = f.size() - 1;
    for (size_t d = a.size(); d-- > k;) {
        int c = a[d];
        if (c == 0) continue;
        a[d] = 0;
        for (size_t j = 0; j < k; ++j)
            a[d - k + j] = ((a[d - k + j] - c * f[j]) % p + p) % p;
    }
    a.resize(std::min(a.size(), k));
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        int lead_inv = 1;
        for (int x = 1; x < p; ++x)
            if (x * b.back() % p == 1) { lead_inv = x; break; }
        Poly bm(b.size());
        for (size_t i = 0; i < b.size(); ++i) bm[i] = b[i] * lead_inv % p;
        Poly r = a;
        trim(r);
        while (r.size() >= bm.size() && !r.empty()) {
            int c = r.back();
            size_t shift = r.size() - bm.size();
            for (size_t i = 0; i < bm.size(); ++i)
                r[shift + i] = ((r[shift + i] - c * bm[i]) % p + p) % p;
            trim(r);
        }
        a = b;
        b = r;
    }
    return a;
}

// x^(p^d) mod f by raising to the p-th power d times.
Poly frobenius_power(const Poly& f, int p, int d) {
    Poly x = {0, 1};
    Poly acc = poly_mod(x, f, p);
    for (int step = 0; step < d; ++step) {
        // acc^p via square-and-multiply on the exponent p
        Poly result = {1};
        Poly base = acc;
        int e = p;
        while (e > 0) {
            if (e & 1) result = poly_mul_mod(result, base, f, p);
            base = poly_mul_mod(base, base, f, p);
            e >>= 1;
        }
        trim(result);
        acc = result;
    }
    return acc;
}

bool is_irreducible(const Poly& f, int p) {
    const int k = (int)f.size() - 1;
    if (k == 1) return true;
    if (k == 2 || k == 3) {
        // reducible iff it has a root
        for (int x = 0; x < p; ++x) {
            long v = 0, xp = 1;
            for (int c : f) {
                v = (v + c * xp) % p;
                xp = xp * x % p;
            }
            if (v % p == 0) return false;
        }
        return true;
    }
    // factor-free test: any factor of degree d <= k/2 divides x^(p^d) - x
    for (int d = 1; 2 * d <= k; ++d) {
        Poly g = frobenius_power(f, p, d);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        trim(g);
        Poly gc = poly_gcd(f, g, p);
        if (gc.size() > 1) return false;
    }
    return true;
}

}  // namespace

FieldCtx FieldCtx::make(int p, int k, long cap) {
    if (p == 2) throw EvenCharacteristicError("characteristic 2 is not supported");
    if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error("extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > cap)
            throw CapExceededError("p^k = " + std::to_string(p) + "^" + std::to_string(k) +
                                   " exceeds the field size cap " + std::to_string(cap));
    }
    return FieldCtx(p, k, cap);
}

FieldCtx::FieldCtx(int p, int k, long cap) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    (void)cap;

    // Lexicographically smallest monic irreducible of degree k.  Candidate
    // lower-coefficient vectors are enumerated in the same order as element
    // codes (c_0 most significant), so the first hit is the lex minimum.
    // Code digits base p, least significant last, are exactly (c_0, ..., c_{k-1}).
    auto digits = [&](long n) {
        std::vector<int> c(k);
        for (int i = k - 1; i >= 0; --i) {
            c[i] = (int)(n % p);
            n /= p;
        }
        return c;
    };
    for (long n = 0; n < q_; ++n) {
        Poly f = digits(n);
        f.push_back(1);
        if (is_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }
    if (modulus_.empty()) throw Error("no irreducible modulus found");  // unreachable

    std::vector<std::vector<int>> cf((size_t)q_);
    for (long n = 0; n < q_; ++n) cf[n] = digits(n);

    one_ = from_int(1);

    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize((size_t)q_);
    for (long a = 0; a < q_; ++a) {
        // negation digitwise
        long code = 0;
        for (int i = 0; i < k; ++i) code = code * p + (p - cf[a][i]) % p;
        neg_[a] = (uint16_t)code;
    }
    for (long a = 0; a < q_; ++a) {
        for (long b = 0; b < q_; ++b) {
            long code = 0;
            for (int i = 0; i < k; ++i) code = code * p + (cf[a][i] + cf[b][i]) % p;
            add_[(size_t)a * q_ + b] = (uint16_t)code;
        }
    }
    if (k == 1) {
        for (long a = 0; a < q_; ++a)
            for (long b = 0; b < q_; ++b)
                mul_[(size_t)a * q_ + b] = (uint16_t)(a * b % p);
    } else {
        for (long a = 0; a < q_; ++a) {
            for (long b = a; b < q_; ++b) {
                Poly prod = poly_mul_mod(cf[a], cf[b], modulus_, p);
                long code = 0;
                for (int i = 0; i < k; ++i) code = code * p + prod[i];
                mul_[(size_t)a * q_ + b] = (uint16_t)code;
                mul_[(size_t)b * q_ + a] = (uint16_t)code;
            }
        }
    }

    inv_.assign((size_t)q_, 0);
    for (long a = 1; a < q_; ++a) inv_[a] = (uint16_t)pow((uint32_t)a, q_ - 2);

    legendre_.assign((size_t)q_, -1);
    legendre_[0] = 0;
    sqrt_min_.assign((size_t)q_, -1);
    sqrt_min_[0] = 0;
    for (long x = 1; x < q_; ++x) {
        uint32_t s = mul((uint32_t)x, (uint32_t)x);
        legendre_[s] = 1;
        if (sqrt_min_[s] < 0) sqrt_min_[s] = (int32_t)x;
    }
    nonresidue_ = 0;
    for (long a = 1; a < q_; ++a)
        if (legendre_[a] < 0) { nonresidue_ = (uint32_t)a; break; }

    // Multiplicative group order check: a^(q-1) = 1 for every nonzero a.
    for (long a = 1; a < q_; ++a)
        if (pow((uint32_t)a, q_ - 1) != one_)
            throw Error("multiplicative group order check failed");
}

uint32_t FieldCtx::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    return inv_[a];
}

uint32_t FieldCtx::div(uint32_t a, uint32_t b) const {
    if (b == 0) throw DivisionByZeroError("division by zero");
    return mul(a, inv_[b]);
}

uint32_t FieldCtx::pow(uint32_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw DivisionByZeroError("negative power of zero");
        return e == 0 ? one_ : 0;
    }
    long long m = q_ - 1;
    long long r = e % m;
    if (r < 0) r += m;
    uint32_t result = one_;
    uint32_t base = a;
    while (r > 0) {
        if (r & 1) result = mul(result, base);
        base = mul(base, base);
        r >>= 1;
    }
    return result;
}

std::optional<uint32_t> FieldCtx::sqrt_min(uint32_t a) const {
    if (sqrt_min_[a] < 0) return std::nullopt;
    return (uint32_t)sqrt_min_[a];
}

uint32_t FieldCtx::from_int(long long v) const {
    long long c = v % p_;
    if (c < 0) c += p_;
    uint32_t code = (uint32_t)c;
    for (int i = 1; i < k_; ++i) code *= p_;  // constant term sits in the top place
    return code;
}

uint32_t FieldCtx::from_coeffs(const std::vector<int>& coeffs) const {
    if ((int)coeffs.size() != k_) throw Error("coefficient vector must have k entries");
    long code = 0;
    for (int i = 0; i < k_; ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= p_) throw Error("coefficient out of range [0, p)");
        code = code * p_ + coeffs[i];
    }
    return (uint32_t)code;
}

std::vector<int> FieldCtx::coeffs_of(uint32_t code) const {
    std::vector<int> c(k_);
    long rem = code;
    for (int i = k_ - 1; i >= 0; --i) {
        c[i] = (int)(rem % p_);
        rem /= p_;
    }
    return c;
}

FieldElem FieldCtx::elem(uint32_t code) const { return FieldElem(*this, code); }
FieldElem FieldCtx::elem_from_int(long long v) const { return FieldElem(*this, from_int(v)); }

bool FieldCtx::same_as(const FieldCtx& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

namespace {
void check_same_field(const FieldElem& a, const FieldElem& b) {
    if (&a.field() == &b.field()) return;
    if (!a.field().same_as(b.field()))
        throw MixedFieldsError("elements belong to different fields");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(*f_, f_->add(code_, o.code_));
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(*f_, f_->sub(code_, o.code_));
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(*f_, f_->mul(code_, o.code_));
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(*f_, f_->div(code_, o.code_));
}
bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(*this, o);
    return code_ == o.code_;
}
bool FieldElem::operator<(const FieldElem& o) const {
    check_same_field(*this, o);
    return code_ < o.code_;
}

ExtElem::ExtElem(const FieldElem& re, const FieldElem& im) : re_(re), im_(im) {
    check_same_field(re, im);
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    return ExtElem(re_ + o.re_, im_ + o.im_);
}
ExtElem ExtElem::operator-(const ExtElem& o) const {
    return ExtElem(re_ - o.re_, im_ - o.im_);
}
ExtElem ExtElem::operator*(const ExtElem& o) const {
    const FieldCtx& F = field();
    FieldElem n = F.elem(F.nonresidue());
    return ExtElem(re_ * o.re_ + im_ * o.im_ * n, re_ * o.im_ + im_ * o.re_);
}
ExtElem ExtElem::operator-() const { return ExtElem(-re_, -im_); }

ExtElem ExtElem::inverse() const {
    const FieldCtx& F = field();
    FieldElem n = F.elem(F.nonresidue());
    FieldElem norm = re_ * re_ - im_ * im_ * n;
    if (norm.is_zero()) throw DivisionByZeroError("inverse of zero in GF(q^2)");
    return ExtElem(re_ / norm, -(im_ / norm));
}

ExtElem ExtElem::operator/(const ExtElem& o) const { return *this * o.inverse(); }

ExtElem ExtElem::pow(long long e) const {
    ExtElem base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    ExtElem result(field().elem(field().one()));
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool ExtElem::operator<(const ExtElem& o) const {
    if (re_ < o.re_) return true;
    if (o.re_ < re_) return false;
    return im_ < o.im_;
}

uint64_t ExtElem::code() const { return (uint64_t)re_.code() * field().q() + im_.code(); }

int legendre(const FieldElem& a) { return a.field().legendre(a.code()); }

std::optional<std::pair<FieldElem, FieldElem>> sqrt_pair(const FieldElem& a) {
    const FieldCtx& F = a.field();
    auto s = F.sqrt_min(a.code());
    if (!s) return std::nullopt;
    FieldElem lo = F.elem(*s);
    FieldElem hi = a.is_zero() ? lo : -lo;
    return std::make_pair(lo, hi);
}

FieldElem smallest_nonresidue(const FieldCtx& F) { return F.elem(F.nonresidue()); }

std::pair<ExtElem, ExtElem> ext_sqrt_roots(const FieldElem& trace) {
    const FieldCtx& F = trace.field();
    FieldElem two = F.elem_from_int(2);
    FieldElem four = F.elem_from_int(4);
    FieldElem delta = trace * trace - four;
    int l = legendre(delta);
    ExtElem r1, r2;
    if (l >= 0) {
        FieldElem s = F.elem(*F.sqrt_min(delta.code()));
        r1 = ExtElem((trace - s) / two);
        r2 = ExtElem((trace + s) / two);
    } else {
        // delta = n * (delta/n) with delta/n a residue, so
        // sqrt(delta) = w*sqrt(n) for base-field w.
        FieldElem n = smallest_nonresidue(F);
        FieldElem w = F.elem(*F.sqrt_min((delta / n).code()));
        FieldElem half_t = trace / two;
        FieldElem half_w = w / two;
        r1 = ExtElem(half_t, half_w);
        r2 = ExtElem(half_t, -half_w);
    }
    if (r2 < r1) std::swap(r1, r2);
    return {r1, r2};
}

}  // namespace sl2
