// SPDX-FileCopyrightText: 2026 The cmest authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace cmest {

enum class ErrorKind {
  Domain,              // argument outside the mathematical domain
  Config,              // malformed or inconsistent configuration
  Unsupported,         // operation not defined for this model or mode
  CfZero,              // characteristic function vanishes at the requested phase
  MomentUndefined,     // requested moment does not exist (e.g. Cauchy)
  NonConvergence,      // iterative method ran out of budget
  Degenerate,          // phase of a zero received value
  AssumptionViolated,  // theorem precondition does not hold
  RootNotFound,
  SingularAngle,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace cmest
