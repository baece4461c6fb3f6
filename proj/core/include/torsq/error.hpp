#ifndef TORSQ_ERROR_HPP
#define TORSQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace torsq {

// Error categories; the CLI maps them onto its exit-code contract
// (parameter/domain/resource -> 2, group -> 3, io -> 4).
enum class ErrorKind {
  kDomain,     // value outside an operation's domain
  kParameter,  // rejected construction parameters
  kGroup,      // torsion / basis structure failure
  kResource,   // configured limit exceeded
  kIo,         // malformed file or document
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace torsq

#endif  // TORSQ_ERROR_HPP
