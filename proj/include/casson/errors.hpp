#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace casson {

enum class ErrorCode {
    InvalidArgument,
    NotSymmetrizable,
    NotUnimodularAtOne,
    NotHermitian,
    InvalidSeifertMatrix,
    NotCoprime,
    DegeneratePolarization,
    NonIntegral,
    NonIntegralInvariant,
    SizeMismatch,
    OddLefschetz,
    NoSolution,
    AmbiguousSolution,
    InconsistentRing,
    NonBinary,
    ZeroW2,
    HypothesisFails,
    PontryaginObstruction,
    NonTrivialAlexander,
    BadEuler,
    ParseError,
    SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace casson
