#pragma once

#include <stdexcept>
#include <string>

namespace zr {

// Failure categories surfaced by the library. The CLI maps these to exit
// codes: verification failures -> 2, budget -> 3, bad input -> 4.
enum class Err {
    UniverseMismatch,
    InvalidLambda,
    InvalidPrime,
    InvalidFrequency,
    InvalidProbability,
    InvalidParams,
    EmptyFamily,
    NoDisjointPairs,
    DensityTooLow,
    BudgetExceeded,
    ZeroVariance,
    PreconditionFailed,
    TooDense,
    RankContradiction,
    NumericalFailure,
    ConstantsFalsified,
    ProgressViolation,
    EmptyResult,
    VerificationFailed,
    BadInput,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& msg)
        : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

} // namespace zr
