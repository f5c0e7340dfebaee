#pragma once

#include <stdexcept>
#include <string>

namespace quess {

// Every failure mode the library reports, named so the CLI can print the
// condition that was violated.
enum class Errc {
  NonNegativityViolated,
  SigmaBetaOrderViolated,
  GammaAlphaNegative,
  DominanceViolated,
  AmplitudeOutOfRange,
  DegenerateDeviation,
  StepTooLarge,
  BadGrid,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quess
