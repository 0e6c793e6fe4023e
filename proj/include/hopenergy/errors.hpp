#pragma once

#include <stdexcept>
#include <string>

namespace hopenergy {

// Argument outside the domain of a formula (negative SNR, bad node index,
// wrong allocation length, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A quantity left the representable double range or a construction produced
// a physically meaningless value (e.g. a negative power).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

class OverflowError : public NumericalError {
 public:
  explicit OverflowError(const std::string& what) : NumericalError(what) {}
};

}  // namespace hopenergy
