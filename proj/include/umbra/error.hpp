#ifndef UMBRA_ERROR_HPP
#define UMBRA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace umbra {

// Base of every exception the library throws. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on arguments or parameters was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Evaluation of a series flagged as divergent was refused.
class DivergentSeriesError : public Error {
 public:
  using Error::Error;
};

}  // namespace umbra

#endif  // UMBRA_ERROR_HPP
