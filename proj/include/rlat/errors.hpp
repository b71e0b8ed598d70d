#ifndef RLAT_ERRORS_HPP
#define RLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rlat {

enum class ErrorKind {
  ParseError,
  NotALattice,
  NotAMonoid,
  ResiduationFails,
  TrivialLattice,
  EmptyGeneratingSet,
  LatticeMismatch,
  NotASubfilter,
  EmptyFamily,
  CapacityExceeded,
  OrderOutOfRange,
  CapExceeded,
  QuerySyntaxError,
  InternalInconsistency,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Exit codes used by the CLI: 0 success/found, 1 none-found, 2 parse error,
// 3 axiom failure, 4 capacity.
int exit_code_for(ErrorKind k);

}  // namespace rlat

#endif
