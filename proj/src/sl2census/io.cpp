#include "io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace sl2 {

namespace {

// cpp_int as a JSON number when it fits, else as a decimal string
Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return Json((int64_t)v);
    return Json(v.str());
}

}  // namespace

Json field_descriptor(const FieldCtx& F) {
    Json j;
    j["p"] = F.p();
    j["k"] = F.k();
    j["modulus"] = F.modulus();
    return j;
}

Json elem_to_json(const FieldElem& e) { return Json(e.coeffs()); }

Json ext_to_json(const ExtElem& e) {
    Json j;
    j["re"] = elem_to_json(e.re());
    j["im"] = elem_to_json(e.im());
    return j;
}

Json mat_to_json(const Mat2& m) {
    Json j;
    j["a"] = elem_to_json(m.a());
    j["b"] = elem_to_json(m.b());
    j["c"] = elem_to_json(m.c());
    j["d"] = elem_to_json(m.d());
    return j;
}

Json ext_mat_to_json(const ExtMat2& m) {
    Json j;
    j["a"] = ext_to_json(m.a());
    j["b"] = ext_to_json(m.b());
    j["c"] = ext_to_json(m.c());
    j["d"] = ext_to_json(m.d());
    return j;
}

Json rep_to_json(const Rep& rho) {
    Json j = Json::array();
    for (const Mat2& m : rho.components()) j.push_back(mat_to_json(m));
    return j;
}

FieldElem elem_from_json(const FieldCtx& F, const Json& j) {
    if (!j.is_array()) throw Error("field element must be a JSON array of coefficients");
    std::vector<int> coeffs;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw Error("field element coefficients must be integers");
        long long v = c.get<long long>();
        long long m = v % F.p();
        if (m < 0) m += F.p();
        coeffs.push_back((int)m);
    }
    if ((int)coeffs.size() != F.k())
        throw Error("field element needs exactly k = " + std::to_string(F.k()) +
                    " coefficients");
    return F.elem(F.from_coeffs(coeffs));
}

Mat2 mat_from_json(const FieldCtx& F, const Json& j) {
    if (!j.is_object()) throw Error("matrix must be a JSON object with keys a, b, c, d");
    for (const char* key : {"a", "b", "c", "d"})
        if (!j.contains(key)) throw Error(std::string("matrix is missing entry ") + key);
    return Mat2::from_elems(elem_from_json(F, j["a"]), elem_from_json(F, j["b"]),
                            elem_from_json(F, j["c"]), elem_from_json(F, j["d"]));
}

Rep rep_from_json(const FieldCtx& F, const Json& j) {
    if (!j.is_array() || j.empty())
        throw Error("a representation must be a nonempty JSON list of matrices");
    std::vector<Mat2> comps;
    for (const auto& m : j) comps.push_back(mat_from_json(F, m));
    return Rep(std::move(comps));
}

CensusFormulaSide census_formula_side(const FieldCtx& F, int r) {
    CensusFormulaSide out;
    auto polys = stratum_polys(r);
    Int q(F.q());
    for (size_t s = 0; s < 6; ++s) {
        out.size[s] = polys[s].size.eval_int(q);
        out.orbits[s] = polys[s].orbits.eval_int(q);
    }
    out.total_orbits = total_orbits_poly(r).eval_int(q);
    return out;
}

bool census_matches(const StrataCensus& c, const CensusFormulaSide& f) {
    for (size_t s = 0; s < 6; ++s) {
        if (Int(c.strata[s].size) != f.size[s]) return false;
        if (Int(c.strata[s].orbits) != f.orbits[s]) return false;
    }
    return Int(c.total_orbits) == f.total_orbits;
}

Json census_to_json(const StrataCensus& c, CensusMode mode, const CensusFormulaSide* formula) {
    if (!formula && mode != CensusMode::Brute)
        throw Error("formula values are required outside brute mode");
    Json j;
    j["p"] = c.p;
    j["k"] = c.k;
    j["q"] = c.q;
    j["r"] = c.r;
    Json strata;
    for (StratumLabel s : kAllLabels) {
        const StratumCell& cell = c.cell(s);
        Json sc;
        if (mode != CensusMode::Formula) {
            sc["size"] = cell.size;
            sc["orbits"] = cell.orbits;
        } else {
            sc["size"] = int_to_json(formula->size[(size_t)s]);
            sc["orbits"] = int_to_json(formula->orbits[(size_t)s]);
        }
        sc["stab"] = cell.stab;
        if (mode == CensusMode::Both) {
            sc["size_formula"] = int_to_json(formula->size[(size_t)s]);
            sc["orbits_formula"] = int_to_json(formula->orbits[(size_t)s]);
            sc["match"] = Int(cell.size) == formula->size[(size_t)s] &&
                          Int(cell.orbits) == formula->orbits[(size_t)s];
        }
        strata[label_name(s)] = sc;
    }
    j["strata"] = strata;
    if (mode == CensusMode::Formula)
        j["total_orbits"] = int_to_json(formula->total_orbits);
    else
        j["total_orbits"] = c.total_orbits;
    if (formula) j["theorem_a"] = int_to_json(formula->total_orbits);
    bool match = true;
    if (formula && mode == CensusMode::Both)
        match = census_matches(c, *formula);
    else if (formula && mode == CensusMode::Brute)
        match = Int(c.total_orbits) == formula->total_orbits;
    j["match"] = match;
    return j;
}

namespace {

std::string int_to_string(const Int& v) { return v.str(); }

}  // namespace

std::string census_to_csv(const StrataCensus& c, CensusMode mode,
                          const CensusFormulaSide* formula) {
    if (!formula && mode != CensusMode::Brute)
        throw Error("formula values are required outside brute mode");
    std::ostringstream out;
    out << "stratum,size,orbits,stab,size_formula,orbits_formula,match\n";
    Int total_size(0);
    for (StratumLabel s : kAllLabels) {
        const StratumCell& cell = c.cell(s);
        size_t i = (size_t)s;
        Int size = mode == CensusMode::Formula ? formula->size[i] : Int(cell.size);
        Int orbits = mode == CensusMode::Formula ? formula->orbits[i] : Int(cell.orbits);
        total_size += size;
        out << label_name(s) << "," << int_to_string(size) << "," << int_to_string(orbits)
            << "," << cell.stab << ",";
        if (mode == CensusMode::Both || mode == CensusMode::Formula) {
            bool match = size == formula->size[i] && orbits == formula->orbits[i];
            out << int_to_string(formula->size[i]) << "," << int_to_string(formula->orbits[i])
                << "," << (match ? "true" : "false");
        } else {
            out << ",,";
        }
        out << "\n";
    }
    Int total_orbits =
        mode == CensusMode::Formula ? formula->total_orbits : Int(c.total_orbits);
    out << "total," << int_to_string(total_size) << "," << int_to_string(total_orbits)
        << ",,";
    if (mode == CensusMode::Both || mode == CensusMode::Formula) {
        bool match = total_orbits == formula->total_orbits;
        out << "," << int_to_string(formula->total_orbits) << ","
            << (match ? "true" : "false");
    } else {
        out << ",,";
    }
    out << "\n";
    return out.str();
}

std::string census_to_text(const StrataCensus& c, CensusMode mode,
                           const CensusFormulaSide* formula) {
    if (!formula && mode != CensusMode::Brute)
        throw Error("formula values are required outside brute mode");
    std::ostringstream out;
    out << "census over GF(" << c.q << "), r = " << c.r << "\n";
    out << "stratum      size    orbits      stab";
    if (mode == CensusMode::Both) out << "   formula(size, orbits)   match";
    out << "\n";
    for (StratumLabel s : kAllLabels) {
        const StratumCell& cell = c.cell(s);
        size_t i = (size_t)s;
        char line[128];
        if (mode == CensusMode::Formula)
            snprintf(line, sizeof line, "%-6s %9s %9s %9llu", label_name(s),
                     formula->size[i].str().c_str(), formula->orbits[i].str().c_str(),
                     (unsigned long long)cell.stab);
        else
            snprintf(line, sizeof line, "%-6s %9llu %9llu %9llu", label_name(s),
                     (unsigned long long)cell.size, (unsigned long long)cell.orbits,
                     (unsigned long long)cell.stab);
        out << line;
        if (mode == CensusMode::Both) {
            bool match = Int(cell.size) == formula->size[i] &&
                         Int(cell.orbits) == formula->orbits[i];
            out << "   (" << formula->size[i].str() << ", " << formula->orbits[i].str()
                << ")   " << (match ? "yes" : "NO");
        }
        out << "\n";
    }
    if (mode == CensusMode::Formula)
        out << "total orbits " << formula->total_orbits.str() << "\n";
    else if (formula)
        out << "total orbits " << c.total_orbits << " (closed form "
            << formula->total_orbits.str() << ")\n";
    else
        out << "total orbits " << c.total_orbits << "\n";
    return out.str();
}

Json suite_to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    if (r.counterexample) j["counterexample"] = rep_to_json(*r.counterexample);
    return j;
}

std::string suite_to_text(const SuiteReport& r) {
    std::string line = r.suite + ": " + (r.pass ? "pass" : "FAIL");
    if (!r.detail.empty()) line += " (" + r.detail + ")";
    if (r.counterexample) line += "\n  counterexample: " + rep_to_json(*r.counterexample).dump();
    return line;
}

Json poly_to_json(const CountPoly& p) {
    if (!p.is_integral()) throw Error("polynomial has non-integer coefficients");
    Json j = Json::array();
    for (const Rat& c : p.coeffs()) j.push_back(int_to_json(boost::multiprecision::numerator(c)));
    return j;
}

}  // namespace sl2
