// Precomputed data for one SL2(F_q): the lex-ordered matrix list, the full
// conjugation table and the per-matrix classification digests.  Everything
// downstream (census, verification suites) is table-driven integer work.

#ifndef SL2CENSUS_TABLES_HPP
#define SL2CENSUS_TABLES_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "strata.hpp"

namespace sl2 {

class Sl2Tables {
public:
    // Throws CapExceededError when |G| is too large for the quadratic
    // conjugation table (limit 8192, i.e. 256 MiB of table).
    explicit Sl2Tables(const FieldCtx& F);

    const FieldCtx& field() const { return *F_; }
    uint32_t size() const { return n_; }
    const Mat2& mat(uint32_t i) const { return mats_[i]; }
    const std::vector<Mat2>& mats() const { return mats_; }
    const MatClass& cls(uint32_t i) const { return cls_[i]; }
    uint32_t trace_code(uint32_t i) const { return trace_[i]; }
    uint32_t inverse_index(uint32_t i) const { return inv_[i]; }
    uint32_t identity_index() const { return id_; }

    uint32_t index_of(const Mat2& m) const;

    // index of g * m * g^{-1}
    uint32_t conj_of(uint32_t g, uint32_t m) const { return conj_[(size_t)g * n_ + m]; }
    bool commutes(uint32_t i, uint32_t j) const { return conj_of(i, j) == j; }
    // trace code of mat(i) * mat(j)
    uint32_t product_trace(uint32_t i, uint32_t j) const;
    // index of the Galois involution image (a, b/n, c*n, d)
    uint32_t galois_index(uint32_t i) const { return galois_[i]; }

private:
    const FieldCtx* F_;
    uint32_t n_ = 0;
    uint32_t id_ = 0;
    std::vector<Mat2> mats_;
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<uint32_t> inv_;
    std::vector<uint32_t> conj_;
    std::vector<uint32_t> trace_;
    std::vector<uint32_t> galois_;
    std::vector<MatClass> cls_;
};

}  // namespace sl2

#endif
