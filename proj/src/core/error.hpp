#ifndef MANIN_ERROR_HPP
#define MANIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace manin {

enum class ErrorCode {
  InadmissibleType,
  DimensionMismatch,
  IndexOutOfRange,
  ParentMismatch,
  RankLimitExceeded,
  InvalidTriple,
  NotInPi0,
  NotDiagramAutomorphism,
  NotInCartan,
  InconsistentExtension,
  InvalidExtension,
  NotSigmaEquivariant,
  InconsistentSpec,
  ExtensionSignConflict,
  NotInvariant,
  InvalidFlags,
  Parse,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace manin

#endif
