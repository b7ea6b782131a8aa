#pragma once

#include <stdexcept>
#include <string>

namespace geew {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A series was asked to sum outside its convergence regime
/// (e.g. Fox-Wright with A > 1 and asymptotic mode off).
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Coincident poles (Meijer G lower parameters differing by an integer).
class PoleCoincidenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Whittaker second index with 2b (numerically) an integer.
class NearDegenerateIndexError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iteration failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace geew
