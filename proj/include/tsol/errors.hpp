#pragma once

#include <stdexcept>
#include <string>

namespace tsol {

/// Failure kinds surfaced by the kernel. Each maps to CLI exit code 2.
enum class ErrorKind {
    LightlikeNormalization,
    DegeneratePoint,
    AllPointsDegenerate,
    DegenerateSampleSet,
    DomainViolation,
    EpsMismatch,
    EpsUnavailable,
    RegimeViolationAtStart,
    StepUnderflow,
    OutOfRange,
    IncompatiblePair,
    ParseError,
    EvalDomainError,
    RankDeficient,
    DegenerateBase,
    LightlikeDirectorDerivative,
    InconclusiveSampling,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace tsol
