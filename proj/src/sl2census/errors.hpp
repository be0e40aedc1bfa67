#ifndef SL2CENSUS_ERRORS_HPP
#define SL2CENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sl2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeError : Error {
    using Error::Error;
};
struct EvenCharacteristicError : Error {
    using Error::Error;
};
struct CapExceededError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct MixedFieldsError : Error {
    using Error::Error;
};
struct WorkBudgetExceededError : Error {
    using Error::Error;
};
struct RankTooSmallError : Error {
    using Error::Error;
};
struct SeriesNotPolynomialError : Error {
    using Error::Error;
};
// The next two signal implementation bugs: the conditions are mathematically
// impossible, so hitting them means the engine itself is wrong.
struct EntryLeftBaseFieldError : Error {
    using Error::Error;
};
struct OddIrreducibleOrbitCountError : Error {
    using Error::Error;
};

}  // namespace sl2

#endif
