#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace eqrec {

using MatXd = Eigen::MatrixXd;
using VecXd = Eigen::VectorXd;
using MatXi = Eigen::MatrixXi;

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or inline specification.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Matrix/vector dimensions differ from the declared sizes.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// An observed arrival pattern is not the prefix of any admissible word.
class PatternOutsideLanguage : public Error {
public:
    explicit PatternOutsideLanguage(const std::string& msg) : Error(msg) {}
};

/// A measurement was delivered twice.
class DuplicateArrival : public Error {
public:
    explicit DuplicateArrival(const std::string& msg) : Error(msg) {}
};

/// The estimator was stepped past the end of its horizon.
class StepBeyondHorizon : public Error {
public:
    explicit StepBeyondHorizon(const std::string& msg) : Error(msg) {}
};

/// Two sequences share a tree node but disagree on data availability.
/// Cannot happen for a tree built from a valid event language; indicates
/// a construction bug or a tampered certificate.
class ConflictingZeroPattern : public Error {
public:
    explicit ConflictingZeroPattern(const std::string& msg) : Error(msg) {}
};

/// No point of the mu1 line search admitted a feasible design.
class AllInfeasible : public Error {
public:
    explicit AllInfeasible(const std::string& msg) : Error(msg) {}
};

/// A certificate does not belong to the supplied model/language pair.
class FingerprintMismatch : public Error {
public:
    explicit FingerprintMismatch(const std::string& msg) : Error(msg) {}
};

} // namespace eqrec
