#include "tables.hpp"

namespace sl2 {

namespace {
uint64_t pack(const Mat2& m) {
    return ((uint64_t)m.code(0) << 33) | ((uint64_t)m.code(1) << 22) |
           ((uint64_t)m.code(2) << 11) | (uint64_t)m.code(3);
}
}  // namespace

Sl2Tables::Sl2Tables(const FieldCtx& F) : F_(&F) {
    const long q = F.q();
    const long n = q * q * q - q;
    if (n > 8192)
        throw CapExceededError("|SL2(F_" + std::to_string(q) + ")| = " + std::to_string(n) +
                               " exceeds the conjugation-table limit 8192");
    mats_ = enumerate_sl2(F);
    n_ = (uint32_t)n;

    index_.reserve((size_t)n * 2);
    for (uint32_t i = 0; i < n_; ++i) index_.emplace(pack(mats_[i]), i);
    id_ = index_of(Mat2::identity(F));

    inv_.resize(n_);
    trace_.resize(n_);
    cls_.resize(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        inv_[i] = index_of(mats_[i].inverse());
        trace_[i] = mats_[i].trace().code();
        cls_[i] = mat_class(mats_[i]);
    }

    conj_.resize((size_t)n_ * n_);
    for (uint32_t g = 0; g < n_; ++g) {
        Mat2 gi = mats_[g].inverse();
        for (uint32_t m = 0; m < n_; ++m)
            conj_[(size_t)g * n_ + m] = index_of(mats_[g] * mats_[m] * gi);
    }

    // entrywise (a, b/n, c*n, d) for the distinguished non-residue n; this is
    // conjugation by diag(s, 1/s) with s^2 = 1/n, and it stays in SL2(F_q)
    galois_.resize(n_);
    uint32_t nr = F.nonresidue();
    uint32_t nr_inv = F.inv(nr);
    for (uint32_t i = 0; i < n_; ++i) {
        const Mat2& m = mats_[i];
        Mat2 img(F, m.code(0), F.mul(m.code(1), nr_inv), F.mul(m.code(2), nr), m.code(3));
        galois_[i] = index_of(img);
    }
}

uint32_t Sl2Tables::index_of(const Mat2& m) const {
    auto it = index_.find(pack(m));
    if (it == index_.end()) throw Error("matrix is not in the SL2 list");
    return it->second;
}

uint32_t Sl2Tables::product_trace(uint32_t i, uint32_t j) const {
    const FieldCtx& F = *F_;
    const Mat2& m = mats_[i];
    const Mat2& n = mats_[j];
    // tr(MN) = m_a n_a + m_b n_c + m_c n_b + m_d n_d
    uint32_t t = F.add(F.mul(m.code(0), n.code(0)), F.mul(m.code(1), n.code(2)));
    return F.add(t, F.add(F.mul(m.code(2), n.code(1)), F.mul(m.code(3), n.code(3))));
}

}  // namespace sl2
