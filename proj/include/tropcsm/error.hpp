#ifndef TROPCSM_ERROR_HPP
#define TROPCSM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tropcsm {

enum class Err {
    EmptyBases,
    UnequalCardinality,
    ExchangeViolation,
    SubsetViolation,
    LoopInput,
    ZeroVector,
    ConeNotInFan,
    NotPure,
    DimensionMismatch,
    GenericityFailure,
    RecessionNotFan,
    NotZeroDimensional,
    KOutOfRange,
    EmptyFan,
    NotMatroidalIntersection,
    DegenerateInput,
    NonProportional,
    NotUnimodular,
    NotCovering,
    ParseError,
    Internal,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::EmptyBases: return "EmptyBases";
        case Err::UnequalCardinality: return "UnequalCardinality";
        case Err::ExchangeViolation: return "ExchangeViolation";
        case Err::SubsetViolation: return "SubsetViolation";
        case Err::LoopInput: return "LoopInput";
        case Err::ZeroVector: return "ZeroVector";
        case Err::ConeNotInFan: return "ConeNotInFan";
        case Err::NotPure: return "NotPure";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::GenericityFailure: return "GenericityFailure";
        case Err::RecessionNotFan: return "RecessionNotFan";
        case Err::NotZeroDimensional: return "NotZeroDimensional";
        case Err::KOutOfRange: return "KOutOfRange";
        case Err::EmptyFan: return "EmptyFan";
        case Err::NotMatroidalIntersection: return "NotMatroidalIntersection";
        case Err::DegenerateInput: return "DegenerateInput";
        case Err::NonProportional: return "NonProportional";
        case Err::NotUnimodular: return "NotUnimodular";
        case Err::NotCovering: return "NotCovering";
        case Err::ParseError: return "ParseError";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

} // namespace tropcsm

#endif
