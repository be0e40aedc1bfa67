#include "poly.hpp"

#include <sstream>

namespace sl2 {

CountPoly CountPoly::constant(Var v, const Rat& c) {
    CountPoly p(v);
    if (c != 0) p.coeffs_ = {c};
    return p;
}

CountPoly CountPoly::variable(Var v) {
    CountPoly p(v);
    p.coeffs_ = {Rat(0), Rat(1)};
    return p;
}

CountPoly CountPoly::from_coeffs(Var v, std::vector<Rat> coeffs) {
    CountPoly p(v);
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

void CountPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void CountPoly::check_vars(const CountPoly& a, const CountPoly& b) {
    if (a.var_ != b.var_) throw Error("polynomial variable mismatch");
}

bool CountPoly::is_integral() const {
    for (const Rat& c : coeffs_)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

CountPoly CountPoly::operator+(const CountPoly& o) const {
    check_vars(*this, o);
    CountPoly r(var_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.normalize();
    return r;
}

CountPoly CountPoly::operator-(const CountPoly& o) const { return *this + (-o); }

CountPoly CountPoly::operator-() const {
    CountPoly r(var_);
    r.coeffs_ = coeffs_;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

CountPoly CountPoly::operator*(const CountPoly& o) const {
    check_vars(*this, o);
    CountPoly r(var_);
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.normalize();
    return r;
}

CountPoly CountPoly::scaled(const Rat& c) const {
    CountPoly r(var_);
    if (c == 0) return r;
    r.coeffs_ = coeffs_;
    for (Rat& x : r.coeffs_) x *= c;
    return r;
}

CountPoly CountPoly::pow(unsigned e) const {
    CountPoly result = constant(var_, 1);
    CountPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool CountPoly::operator==(const CountPoly& o) const {
    return var_ == o.var_ && coeffs_ == o.coeffs_;
}

Rat CountPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Int CountPoly::eval_int(const Int& x) const {
    Rat v = eval(Rat(x));
    if (boost::multiprecision::denominator(v) != 1)
        throw Error("polynomial evaluation is not an integer: " + v.str());
    return boost::multiprecision::numerator(v);
}

CountPoly CountPoly::reciprocal(int deg) const {
    if (degree() > deg) throw Error("reciprocal transform degree too small");
    std::vector<Rat> rev((size_t)deg + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) rev[(size_t)deg - i] = coeffs_[i];
    return from_coeffs(var_, std::move(rev));
}

CountPoly CountPoly::divide_exact(const CountPoly& den) const {
    check_vars(*this, den);
    if (den.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (is_zero()) return CountPoly(var_);
    std::vector<Rat> rem = coeffs_;
    std::vector<Rat> quot(coeffs_.size(), Rat(0));
    const Rat lead = den.coeffs_.back();
    const size_t dn = den.coeffs_.size();
    while (rem.size() >= dn) {
        Rat c = rem.back() / lead;
        size_t shift = rem.size() - dn;
        quot[shift] = c;
        for (size_t i = 0; i < dn; ++i) rem[shift + i] -= c * den.coeffs_[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    if (!rem.empty()) throw Error("polynomial division has nonzero remainder");
    return from_coeffs(var_, std::move(quot));
}

std::string CountPoly::to_string(const std::string& varname) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        out << coeffs_[i].str();
        if (i >= 1) out << "*" << varname;
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return out.str();
}

}  // namespace sl2
