#include "casson/errors.hpp"

namespace casson {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NotUnimodularAtOne: return "NotUnimodularAtOne";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::InvalidSeifertMatrix: return "InvalidSeifertMatrix";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DegeneratePolarization: return "DegeneratePolarization";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NonIntegralInvariant: return "NonIntegralInvariant";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::OddLefschetz: return "OddLefschetz";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::AmbiguousSolution: return "AmbiguousSolution";
    case ErrorCode::InconsistentRing: return "InconsistentRing";
    case ErrorCode::NonBinary: return "NonBinary";
    case ErrorCode::ZeroW2: return "ZeroW2";
    case ErrorCode::HypothesisFails: return "HypothesisFails";
    case ErrorCode::PontryaginObstruction: return "PontryaginObstruction";
    case ErrorCode::NonTrivialAlexander: return "NonTrivialAlexander";
    case ErrorCode::BadEuler: return "BadEuler";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

} // namespace casson
