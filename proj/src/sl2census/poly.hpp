// Univariate polynomials with exact rational coefficients, in the counting
// variable q or the Poincare variable t.  All arithmetic is exact.

#ifndef SL2CENSUS_POLY_HPP
#define SL2CENSUS_POLY_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace sl2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Var { Q, T };

class CountPoly {
public:
    CountPoly() : var_(Var::Q) {}
    explicit CountPoly(Var v) : var_(v) {}

    static CountPoly constant(Var v, const Rat& c);
    static CountPoly variable(Var v);
    // Dense coefficients, low-to-high; trailing zeros are stripped.
    static CountPoly from_coeffs(Var v, std::vector<Rat> coeffs);

    Var var() const { return var_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    // -1 for the zero polynomial.
    int degree() const { return (int)coeffs_.size() - 1; }
    Rat coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;

    CountPoly operator+(const CountPoly& o) const;
    CountPoly operator-(const CountPoly& o) const;
    CountPoly operator*(const CountPoly& o) const;
    CountPoly operator-() const;
    CountPoly scaled(const Rat& c) const;
    CountPoly pow(unsigned e) const;

    bool operator==(const CountPoly& o) const;
    bool operator!=(const CountPoly& o) const { return !(*this == o); }

    Rat eval(const Rat& x) const;
    // Evaluation that must land on an integer; throws Error otherwise.
    Int eval_int(const Int& x) const;

    // x^deg * P(1/x), the reciprocal transform of stated degree.
    // Requires degree() <= deg.
    CountPoly reciprocal(int deg) const;

    // Exact division; throws Error when the remainder is nonzero.
    CountPoly divide_exact(const CountPoly& den) const;

    std::string to_string(const std::string& varname) const;

private:
    void normalize();
    static void check_vars(const CountPoly& a, const CountPoly& b);

    Var var_;
    std::vector<Rat> coeffs_;
};

}  // namespace sl2

#endif
