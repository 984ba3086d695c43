#pragma once

#include <stdexcept>
#include <string>

namespace hedonic {

/// A coalition has no utility value and the strict missing-value policy is
/// active.
class UnknownCoalitionError : public std::runtime_error {
public:
    explicit UnknownCoalitionError(const std::string& what)
        : std::runtime_error(what) {}
};

/// An operation was asked to run beyond its documented size cap.
class LimitExceededError : public std::runtime_error {
public:
    explicit LimitExceededError(const std::string& what)
        : std::runtime_error(what) {}
};

/// A numerical kernel failed (singular system, iteration cap); distinct from
/// a well-posed infeasible answer.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace hedonic
