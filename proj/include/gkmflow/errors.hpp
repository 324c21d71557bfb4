// errors.hpp
// ----------
// Exception types shared across the library. Benign "not found" results are
// returned as std::optional by the operations themselves; exceptions are
// reserved for contract violations and computational-integrity failures.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gkmflow {

/// Base class of all library exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested Cartan type is outside the supported set.
class UnsupportedTypeError : public Error {
public:
    using Error::Error;
};

/// A vector passed as a root is not an element of the root system.
class NotARootError : public Error {
public:
    using Error::Error;
};

/// The removed set is not upward closed in dominance order.
/// Carries a witness pair: beta removed, alpha above beta but not removed.
class NotAnIdealError : public Error {
public:
    NotAnIdealError(const std::string& msg, std::vector<int> beta, std::vector<int> alpha)
        : Error(msg), beta_(std::move(beta)), alpha_(std::move(alpha)) {}
    const std::vector<int>& beta() const { return beta_; }
    const std::vector<int>& alpha() const { return alpha_; }

private:
    std::vector<int> beta_;
    std::vector<int> alpha_;
};

/// More than one candidate cover satisfied the gamma-partner conditions.
class MultiplePartnersError : public Error {
public:
    using Error::Error;
};

/// A vertex value in a divided-difference step was not divisible by alpha_i.
class InexactDivisionError : public Error {
public:
    using Error::Error;
};

/// A divided-difference step needed a class the partial family does not hold.
class MissingPrerequisiteError : public Error {
public:
    using Error::Error;
};

/// Two descent routes produced different candidate classes for one element.
class UniquenessViolationError : public Error {
public:
    using Error::Error;
};

/// A constructed class failed the flow-up axioms it was required to satisfy.
class FlowUpViolationError : public Error {
public:
    using Error::Error;
};

/// Basis expansion failed: a division did not come out exact or a residue
/// survived the triangular pass.
class NotInSpanError : public Error {
public:
    using Error::Error;
};

/// A character decomposition produced a non-integer multiplicity.
class NonIntegralMultiplicityError : public Error {
public:
    using Error::Error;
};

/// Reduced-word enumeration exceeded the configured cap.
class WordCapExceededError : public Error {
public:
    using Error::Error;
};

} // namespace gkmflow
