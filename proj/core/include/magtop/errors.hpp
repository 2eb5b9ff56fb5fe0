#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace magtop {

/// Broad classes of failure. The command-line front end maps each class to
/// a distinct exit code.
enum class ErrorKind {
    parse,       // malformed input document or number
    metric,      // metric axioms or construction preconditions violated
    label,       // a point label does not resolve
    hypothesis,  // a theorem's hypothesis does not hold for the input
    internal,    // internal consistency failure (a bug, not bad input)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

struct LabelError : Error {
    explicit LabelError(const std::string& what) : Error(ErrorKind::label, what) {}
};

struct MetricError : Error {
    explicit MetricError(const std::string& what) : Error(ErrorKind::metric, what) {}
};

struct AsymmetryError : MetricError {
    AsymmetryError(std::size_t i, std::size_t j, const std::string& what) : MetricError(what), witness{i, j} {}
    std::array<std::size_t, 2> witness;
};

struct TriangleViolation : MetricError {
    TriangleViolation(std::array<std::size_t, 3> w, const std::string& what) : MetricError(what), witness(w) {}
    /// (i, j, k) with d(i, k) > d(i, j) + d(j, k).
    std::array<std::size_t, 3> witness;
};

struct ZeroOffDiagonal : MetricError {
    using MetricError::MetricError;
};

struct NegativeDistance : MetricError {
    using MetricError::MetricError;
};

struct DisconnectedGraph : MetricError {
    using MetricError::MetricError;
};

struct NonpositiveWeight : MetricError {
    using MetricError::MetricError;
};

struct NotIsometricEmbedding : MetricError {
    NotIsometricEmbedding(std::size_t i, std::size_t j, const std::string& what) : MetricError(what), witness{i, j} {}
    /// Positions in the K lists whose distances disagree.
    std::array<std::size_t, 2> witness;
};

struct EmptyK : MetricError {
    using MetricError::MetricError;
};

struct SizeMismatch : MetricError {
    using MetricError::MetricError;
};

struct EmptyComplex : MetricError {
    using MetricError::MetricError;
};

struct HypothesisError : Error {
    explicit HypothesisError(const std::string& what) : Error(ErrorKind::hypothesis, what) {}
};

/// The requested length is not below m_X, so the frame decomposition does not apply.
struct FourCutObstruction : HypothesisError {
    using HypothesisError::HypothesisError;
};

struct NotASycamoreTwist : HypothesisError {
    using HypothesisError::HypothesisError;
};

struct InvalidLength : HypothesisError {
    using HypothesisError::HypothesisError;
};

struct NotGated : HypothesisError {
    using HypothesisError::HypothesisError;
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

struct BoundarySquareNonzero : InternalError {
    using InternalError::InternalError;
};

struct NotAMatching : InternalError {
    using InternalError::InternalError;
};

struct GateMissing : InternalError {
    using InternalError::InternalError;
};

}  // namespace magtop
