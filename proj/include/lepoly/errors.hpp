#pragma once

#include <stdexcept>
#include <string>

namespace lepoly {

// Exit-code mapping used by the CLI lives in pipeline.cpp; these types keep
// failure categories distinguishable across module boundaries.

/// Malformed expression or configuration input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::invalid_argument(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& msg)
        : std::invalid_argument(msg), position_(0) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A germ violates the standing hypotheses (reducedness, coprimality, ...).
class HypothesisError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scale/path selection could not be validated.
class GeometryError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical path tracking failed (step underflow, sheet collision, ...).
class TrackingError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cross-checks disagree (defect formula vs. graph, monodromy product, ...).
class ConsistencyError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root finding: leading coefficient below tolerance.
class DegreeDropError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root finding: simultaneous iteration did not converge.
class NonConvergenceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lepoly
