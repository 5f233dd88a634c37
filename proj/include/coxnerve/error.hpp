#pragma once

#include <stdexcept>
#include <string>

namespace coxnerve {

/// Malformed or out-of-contract input. The CLI maps this to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation contradicted a structural fact that holds for every Coxeter
/// system (e.g. a missing full-support root). Indicates a bug; exit status 2.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coxnerve
