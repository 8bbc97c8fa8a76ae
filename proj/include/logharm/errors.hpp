#pragma once

#include <stdexcept>
#include <string>

namespace logharm {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested outside a series' trusted radius.
class PointOutsideRadius : public Error {
public:
    using Error::Error;
};

/// Division by a series whose constant term is below the division floor.
class SingularLeadingCoefficient : public Error {
public:
    using Error::Error;
};

/// log of a series whose constant term admits no principal branch.
class BranchAmbiguity : public Error {
public:
    using Error::Error;
};

/// Derivative-based quantity requested at z = 0, where |z|^{2beta} is not smooth.
class OriginSingularity : public Error {
public:
    using Error::Error;
};

/// h or g (or the map value) vanished within tolerance at an evaluation point.
class SingularityDetected : public Error {
public:
    using Error::Error;
};

/// A denominator (1+beta+zh'/h, or 1-psi) degenerated on the working set.
class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

/// Candidate Schwarz function failed its certificate (psi(0) != 0 or range escape).
class NotSchwarz : public Error {
public:
    using Error::Error;
};

/// Theorem hypothesis alpha in (1/2, 1) violated.
class AlphaOutOfRange : public Error {
public:
    using Error::Error;
};

/// Map construction violated an invariant (Re beta <= -1/2, g(0) != 1, h(0) == 0).
class InvalidMap : public Error {
public:
    using Error::Error;
};

/// Spec file rejected; message carries the offending field path.
class SpecParseError : public Error {
public:
    using Error::Error;
};

}  // namespace logharm
