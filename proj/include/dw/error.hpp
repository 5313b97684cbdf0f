#pragma once

#include <stdexcept>
#include <string>

namespace dw {

enum class Errc {
  InvalidArgument,
  NotPrime,
  ReducibleModulus,
  NotInvertibleModF,
  OutOfRange,
  NotATree,
  NotARoot,
  PoleOnModulus,
  InconsistentJets,
  SplittingFieldTooLarge,
  BadCharacteristic,
  NotTorsion,
  TruncationTooShallow,
  RankMismatch,
  Unsupported,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Usage-level errors map to exit 2 in the CLI; the rest are math failures.
inline bool is_usage_error(Errc c) {
  return c == Errc::InvalidArgument || c == Errc::NotPrime || c == Errc::ReducibleModulus ||
         c == Errc::OutOfRange || c == Errc::RankMismatch || c == Errc::NotATree ||
         c == Errc::Unsupported;
}

}  // namespace dw
