#pragma once

#include <stdexcept>
#include <string>

namespace neron {

// Error kinds mirror the failure modes of the public operations.  Input
// validation problems (schema, bad generators) are distinguished from
// computation-level failures so the CLI can map them to exit codes.
enum class ErrorKind {
  NonUnimodularGenerator,
  OrderBoundExceeded,
  NonNormalSubgroupForResidualAction,
  DegreeCapExceeded,
  NonEquivariantMap,
  NotExactInput,
  NotFreeModule,
  NonCyclicAction,
  InvalidDegree,
  MissingFrobenius,
  NotUnipotent,
  CorootsNotStable,
  MismatchedGaloisData,
  NonFreeCokernel,
  SchemaError,
  ValidationError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // true for errors caused by bad user input rather than a failed computation
  bool is_input_error() const {
    return kind_ == ErrorKind::SchemaError || kind_ == ErrorKind::ValidationError ||
           kind_ == ErrorKind::NonUnimodularGenerator;
  }

 private:
  ErrorKind kind_;
};

inline void check(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

// Internal invariant check.  Stays on in release builds: a violated invariant
// means a wrong answer, which must never be returned silently.
inline void require_internal(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::Internal, what);
}

}  // namespace neron
