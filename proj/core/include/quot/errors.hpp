#pragma once

#include <stdexcept>
#include <string>

namespace quot {

// Base for all engine errors; subclasses match the failure modes of the
// individual operations so callers can catch precisely.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByNonUnit : Error {
    explicit DivisionByNonUnit(const std::string& m) : Error("DivisionByNonUnit: " + m) {}
};
struct TruncationUnderflow : Error {
    explicit TruncationUnderflow(const std::string& m) : Error("TruncationUnderflow: " + m) {}
};
struct BadConstantTerm : Error {
    explicit BadConstantTerm(const std::string& m) : Error("BadConstantTerm: " + m) {}
};
struct NonUnitResultant : Error {
    explicit NonUnitResultant(const std::string& m) : Error("NonUnitResultant: " + m) {}
};
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& m) : Error("DegreeMismatch: " + m) {}
};
struct NonInvertibleDenominator : Error {
    explicit NonInvertibleDenominator(const std::string& m) : Error("NonInvertibleDenominator: " + m) {}
};
struct SingularJacobian : Error {
    explicit SingularJacobian(const std::string& m) : Error("SingularJacobian: " + m) {}
};
struct UnsupportedGenus : Error {
    explicit UnsupportedGenus(const std::string& m) : Error("UnsupportedGenus: " + m) {}
};
struct UnsupportedPattern : Error {
    explicit UnsupportedPattern(const std::string& m) : Error("UnsupportedPattern: " + m) {}
};
struct InsufficientJetCap : Error {
    explicit InsufficientJetCap(const std::string& m) : Error("InsufficientJetCap: " + m) {}
};
struct HypothesisViolation : Error {
    explicit HypothesisViolation(const std::string& m) : Error("HypothesisViolation: " + m) {}
};
struct PoleAtEvalPoint : Error {
    explicit PoleAtEvalPoint(const std::string& m) : Error("PoleAtEvalPoint: " + m) {}
};
struct InsufficientData : Error {
    explicit InsufficientData(const std::string& m) : Error("InsufficientData: " + m) {}
};

} // namespace quot
