#include "strata.hpp"

#include <algorithm>

namespace sl2 {

const char* label_name(StratumLabel s) {
    switch (s) {
        case StratumLabel::Z: return "Z";
        case StratumLabel::D: return "D";
        case StratumLabel::Dbar: return "Dbar";
        case StratumLabel::U: return "U";
        case StratumLabel::NR: return "NR";
        case StratumLabel::AI: return "AI";
    }
    return "?";
}

std::optional<StratumLabel> label_from_name(const std::string& s) {
    for (StratumLabel l : kAllLabels)
        if (s == label_name(l)) return l;
    return std::nullopt;
}

Rep::Rep(std::vector<Mat2> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw Error("a representation needs at least one component");
    const FieldCtx& F = comps_.front().field();
    for (const Mat2& m : comps_) {
        if (!m.field().same_as(F)) throw MixedFieldsError("components over different fields");
        if (!m.is_unimodular()) throw Error("component has det != 1");
    }
}

bool Rep::operator<(const Rep& o) const {
    if (comps_.size() != o.comps_.size()) return comps_.size() < o.comps_.size();
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i] != o.comps_[i]) return comps_[i] < o.comps_[i];
    }
    return false;
}

MatClass mat_class(const Mat2& M) {
    const FieldCtx& F = M.field();
    MatClass out;
    out.trace_code = M.trace().code();
    FieldElem t = M.trace();
    FieldElem delta = t * t - F.elem_from_int(4);
    out.legendre_disc = legendre(delta);
    out.pm_identity = M.is_central();
    out.trace_pm2 = delta.is_zero();
    if (out.pm_identity) return out;
    EigData e = eigen(M);
    out.n_lines = (int)e.lines.size();
    for (int i = 0; i < out.n_lines; ++i) {
        out.line[i] = e.lines[(size_t)i].id();
        out.line_base[i] = e.lines[(size_t)i].is_base();
    }
    // sort by id so candidate order is canonical
    if (out.n_lines == 2 && out.line[1] < out.line[0]) {
        std::swap(out.line[0], out.line[1]);
        std::swap(out.line_base[0], out.line_base[1]);
    }
    return out;
}

bool is_central(const Rep& rho) {
    for (const Mat2& m : rho.components())
        if (!m.is_central()) return false;
    return true;
}

bool is_abelian(const Rep& rho) {
    const int r = rho.rank();
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (!commute(rho[i], rho[j])) return false;
    return true;
}

namespace {

ProjLine line_from_id(const FieldCtx& F, uint64_t id) {
    ExtElem one(F.elem(F.one()));
    ExtElem zero(F.elem(0));
    if (id == (uint64_t)F.q() * F.q()) return ProjLine{zero, one};
    ExtElem w(F.elem((uint32_t)(id / F.q())), F.elem((uint32_t)(id % F.q())));
    return ProjLine{one, w};
}

}  // namespace

std::optional<ProjLine> common_eigenvector(const Rep& rho, Scope scope) {
    const FieldCtx& F = rho.field();
    const int r = rho.rank();
    std::vector<MatClass> cls((size_t)r);
    int pivot = -1;
    for (int i = 0; i < r; ++i) {
        cls[(size_t)i] = mat_class(rho[i]);
        if (pivot < 0 && !cls[(size_t)i].pm_identity) pivot = i;
    }
    if (pivot < 0) {
        ExtElem one(F.elem(F.one()));
        ExtElem zero(F.elem(0));
        return ProjLine{one, zero};
    }
    // candidates in id order
    const MatClass& pc = cls[(size_t)pivot];
    std::vector<int> order;
    for (int li = 0; li < pc.n_lines; ++li) order.push_back(li);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pc.line[a] < pc.line[b]; });
    for (int li : order) {
        if (scope == Scope::Base && !pc.line_base[li]) continue;
        uint64_t id = pc.line[li];
        bool ok = true;
        for (int j = 0; j < r && ok; ++j) ok = cls[(size_t)j].fixes(id);
        if (ok) return line_from_id(F, id);
    }
    return std::nullopt;
}

StratumLabel classify(const Rep& rho) {
    const int r = rho.rank();
    std::vector<MatClass> cls((size_t)r);
    for (int i = 0; i < r; ++i) cls[(size_t)i] = mat_class(rho[i]);
    return classify_cascade(
        r, [&](int i) -> const MatClass& { return cls[(size_t)i]; },
        [&](int i, int j) { return commute(rho[i], rho[j]); });
}

namespace {

// Completes a projective point to a determinant-1 basis matrix whose first
// column spans the point.
ExtMat2 basis_from_line(const ProjLine& v) {
    const FieldCtx& F = v.x.field();
    ExtElem one(F.elem(F.one()));
    ExtElem zero(F.elem(0));
    if (!v.x.is_zero()) return ExtMat2(v.x, zero, v.y, one / v.x);
    return ExtMat2(zero, -one, one, zero);
}

// Basis matrix from two distinct projective points, rescaled in the second
// column to determinant 1.
ExtMat2 basis_from_lines(const ProjLine& v, const ProjLine& u) {
    ExtMat2 C(v.x, u.x, v.y, u.y);
    ExtElem dt = C.det();
    return ExtMat2(v.x, u.x / dt, v.y, u.y / dt);
}

bool is_diagonal(const ExtMat2& m) { return m.b().is_zero() && m.c().is_zero(); }
bool is_upper(const ExtMat2& m) { return m.c().is_zero(); }

}  // namespace

std::optional<ExtMat2> normal_form_witness(const Rep& rho, StratumLabel label) {
    const FieldCtx& F = rho.field();
    const int r = rho.rank();

    auto check = [&](const ExtMat2& g, bool base_witness, auto&& pred, const char* what) {
        if (g.det() != ExtElem(F.elem(F.one()))) throw Error("witness has det != 1");
        if (base_witness && !g.is_base()) throw Error("witness left the base field");
        for (int i = 0; i < r; ++i) {
            ExtMat2 c = conjugate(g, ExtMat2(rho[i]));
            if (!pred(c)) throw Error(std::string("witness failed to reach ") + what);
        }
        return g;
    };

    switch (label) {
        case StratumLabel::Z:
            return ExtMat2::identity(F);
        case StratumLabel::AI:
            return std::nullopt;
        case StratumLabel::D:
        case StratumLabel::Dbar: {
            // eigenbasis of the first component with distinct eigenvalues
            for (int i = 0; i < r; ++i) {
                EigData e = eigen(rho[i]);
                if (e.all_lines || e.lines.size() != 2) continue;
                ExtMat2 C = basis_from_lines(e.lines[0], e.lines[1]);
                ExtMat2 g = C.inverse();
                return check(g, label == StratumLabel::D, is_diagonal, "diagonal form");
            }
            throw Error("no component with distinct eigenvalues");
        }
        case StratumLabel::U:
        case StratumLabel::NR: {
            auto v = common_eigenvector(rho, Scope::Base);
            if (!v) throw Error("no common eigenvector over the base field");
            ExtMat2 g = basis_from_line(*v).inverse();
            if (label == StratumLabel::U) {
                auto in_u = [&](const ExtMat2& m) {
                    if (!is_upper(m)) return false;
                    ExtElem one(F.elem(F.one()));
                    return (m.a() == one && m.d() == one) || (m.a() == -one && m.d() == -one);
                };
                return check(g, true, in_u, "unipotent form");
            }
            return check(g, true, is_upper, "upper-triangular form");
        }
    }
    return std::nullopt;
}

}  // namespace sl2
