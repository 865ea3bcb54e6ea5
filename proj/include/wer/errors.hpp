#pragma once

#include <stdexcept>
#include <string>

namespace wer {

/// Process exit codes, one per error class surfaced by the CLI.
enum class ExitCode : int {
  Ok = 0,
  Unknown = 1,
  SchemaError = 2,
  UnitError = 3,
  BadGeometry = 4,
  PathThroughEP = 5,
  OnCriticalRadius = 6,
  SingularInput = 7,
  DegenerateState = 8,
  NonConvergence = 9,
  IllConditioned = 10,
  PreconditionViolated = 11,
  IoError = 12,
};

struct Error : std::runtime_error {
  Error(ExitCode code, const std::string& msg) : std::runtime_error(msg), exit_code(code) {}
  ExitCode exit_code;
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error(ExitCode::SchemaError, msg) {}
};
struct UnitError : Error {
  explicit UnitError(const std::string& msg) : Error(ExitCode::UnitError, msg) {}
};
struct BadGeometry : Error {
  explicit BadGeometry(const std::string& msg) : Error(ExitCode::BadGeometry, msg) {}
};
struct PathThroughEP : Error {
  explicit PathThroughEP(const std::string& msg) : Error(ExitCode::PathThroughEP, msg) {}
};
struct OnCriticalRadius : Error {
  explicit OnCriticalRadius(const std::string& msg) : Error(ExitCode::OnCriticalRadius, msg) {}
};
struct SingularInput : Error {
  explicit SingularInput(const std::string& msg) : Error(ExitCode::SingularInput, msg) {}
};
struct DegenerateState : Error {
  explicit DegenerateState(const std::string& msg) : Error(ExitCode::DegenerateState, msg) {}
};
struct NonConvergence : Error {
  explicit NonConvergence(const std::string& msg) : Error(ExitCode::NonConvergence, msg) {}
};
struct IllConditioned : Error {
  explicit IllConditioned(const std::string& msg) : Error(ExitCode::IllConditioned, msg) {}
};
struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& msg)
      : Error(ExitCode::PreconditionViolated, msg) {}
};
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ExitCode::IoError, msg) {}
};

}  // namespace wer
