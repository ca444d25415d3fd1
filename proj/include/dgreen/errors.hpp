#pragma once

#include <stdexcept>
#include <string>

namespace dgreen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DGREEN_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

// exact arithmetic
DGREEN_DEFINE_ERROR(NotDivisible);
DGREEN_DEFINE_ERROR(ZeroDenominator);
DGREEN_DEFINE_ERROR(DivisionByZero);
DGREEN_DEFINE_ERROR(NotRational);
DGREEN_DEFINE_ERROR(NotPolynomial);
DGREEN_DEFINE_ERROR(SingularBlock);

// group model
DGREEN_DEFINE_ERROR(InvalidM);
DGREEN_DEFINE_ERROR(BadSubgroup);
DGREEN_DEFINE_ERROR(NotUnique);
DGREEN_DEFINE_ERROR(InvalidLabel);

// solver / search
DGREEN_DEFINE_ERROR(InvalidDatum);
DGREEN_DEFINE_ERROR(InvalidSpringerSet);
DGREEN_DEFINE_ERROR(InvalidFSequence);
DGREEN_DEFINE_ERROR(SearchBoundExceeded);

// I/O
DGREEN_DEFINE_ERROR(ParseError);

#undef DGREEN_DEFINE_ERROR

}  // namespace dgreen
