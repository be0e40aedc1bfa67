// Classification of r-tuples of SL2(F_q) matrices into the six strata:
// central Z, diagonalizable D, extendably diagonalizable Dbar, projectively
// unipotent U, non-Abelian reducible NR, absolutely irreducible AI.
//
// The cascade decides from per-component eigen data and common-eigenvector
// tests alone; it never searches for a conjugating matrix.  Normal-form
// conjugators are produced only in verification mode (normal_form_witness).

#ifndef SL2CENSUS_STRATA_HPP
#define SL2CENSUS_STRATA_HPP

#include <array>
#include <optional>
#include <vector>

#include "mat.hpp"

namespace sl2 {

enum class StratumLabel { Z = 0, D = 1, Dbar = 2, U = 3, NR = 4, AI = 5 };

constexpr std::array<StratumLabel, 6> kAllLabels = {
    StratumLabel::Z, StratumLabel::D, StratumLabel::Dbar,
    StratumLabel::U, StratumLabel::NR, StratumLabel::AI};

const char* label_name(StratumLabel s);
std::optional<StratumLabel> label_from_name(const std::string& s);

// One point of Hom(F_r, SL2(F_q)): an ordered r-tuple of determinant-1
// matrices over one field.
class Rep {
public:
    explicit Rep(std::vector<Mat2> components);

    const FieldCtx& field() const { return comps_.front().field(); }
    int rank() const { return (int)comps_.size(); }
    const Mat2& operator[](int i) const { return comps_[(size_t)i]; }
    const std::vector<Mat2>& components() const { return comps_; }

    bool operator==(const Rep& o) const { return comps_ == o.comps_; }
    bool operator!=(const Rep& o) const { return !(*this == o); }
    // Lexicographic on the tuple encoding.
    bool operator<(const Rep& o) const;

private:
    std::vector<Mat2> comps_;
};

// Per-component digest driving the cascade.  Line ids refer to P^1(GF(q^2)).
struct MatClass {
    uint32_t trace_code = 0;
    int legendre_disc = 0;  // legendre(t^2 - 4); +1 distinct rational, 0 repeated, -1 irrational
    bool pm_identity = false;
    bool trace_pm2 = false;
    int n_lines = 0;  // 0 when pm_identity (every line is fixed)
    uint64_t line[2] = {0, 0};
    bool line_base[2] = {false, false};

    bool fixes(uint64_t line_id) const {
        if (pm_identity) return true;
        return line[0] == line_id || (n_lines == 2 && line[1] == line_id);
    }
};

MatClass mat_class(const Mat2& M);

// The decision cascade.  `cls(i)` returns the MatClass of component i and
// `commutes(i, j)` decides whether components i and j commute; both are only
// consulted as needed.
template <class ClsAt, class CommuteAt>
StratumLabel classify_cascade(int r, ClsAt&& cls, CommuteAt&& commutes) {
    // (1) all components +-I
    int pivot = -1;
    for (int i = 0; i < r; ++i)
        if (!cls(i).pm_identity) {
            pivot = i;
            break;
        }
    if (pivot < 0) return StratumLabel::Z;

    // (2) a common eigenline over GF(q^2) must be an eigenline of the first
    // non-central component
    bool reducible = false;
    {
        const MatClass& pc = cls(pivot);
        for (int li = 0; li < pc.n_lines && !reducible; ++li) {
            uint64_t id = pc.line[li];
            bool ok = true;
            for (int j = 0; j < r && ok; ++j) ok = cls(j).fixes(id);
            reducible = ok;
        }
    }
    if (!reducible) return StratumLabel::AI;

    // (3) non-Abelian reducible
    for (int i = 0; i < r; ++i) {
        if (cls(i).pm_identity) continue;
        for (int j = i + 1; j < r; ++j) {
            if (cls(j).pm_identity) continue;
            if (!commutes(i, j)) return StratumLabel::NR;
        }
    }

    // (4) every component of trace +-2: conjugable into U
    bool all_pm2 = true;
    for (int i = 0; i < r && all_pm2; ++i) all_pm2 = cls(i).trace_pm2;
    if (all_pm2) return StratumLabel::U;

    // (5) all rational, individually diagonalizable, and a full common
    // eigenbasis over the base field: the two eigenlines of the first
    // component with distinct rational eigenvalues are the only candidates
    bool d_possible = true;
    for (int i = 0; i < r && d_possible; ++i) {
        const MatClass& m = cls(i);
        d_possible = m.legendre_disc >= 0 && (!m.trace_pm2 || m.pm_identity);
    }
    if (d_possible) {
        int dp = -1;
        for (int i = 0; i < r; ++i)
            if (cls(i).legendre_disc > 0) {
                dp = i;
                break;
            }
        if (dp >= 0) {
            const MatClass& m = cls(dp);
            bool both = true;
            for (int j = 0; j < r && both; ++j)
                both = cls(j).fixes(m.line[0]) && cls(j).fixes(m.line[1]);
            if (both) return StratumLabel::D;
        }
    }

    // (6) simultaneously diagonalizable only over the extension
    return StratumLabel::Dbar;
}

bool is_central(const Rep& rho);
// Pairwise commutation of the components; this decides whether the image
// group is Abelian since the components generate it.
bool is_abelian(const Rep& rho);

enum class Scope { Base, Quadratic };

// A canonical projective point fixed by every component, searched among the
// eigenlines of the first non-central component; (1,0) for central tuples.
std::optional<ProjLine> common_eigenvector(const Rep& rho, Scope scope);

StratumLabel classify(const Rep& rho);

// Verification mode: a determinant-1 conjugator g with g rho g^{-1} in the
// stratum's normal form (diagonal for D over the base field, diagonal over
// GF(q^2) for Dbar, upper-triangular with +-1 diagonal for U,
// upper-triangular for NR, the identity for Z).  nullopt for AI.
std::optional<ExtMat2> normal_form_witness(const Rep& rho, StratumLabel label);

}  // namespace sl2

#endif
