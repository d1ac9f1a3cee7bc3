#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vamod {

// Base of all library errors. kind() is a stable machine-readable tag that the
// CLI maps into error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Matrix dimension out of range or mismatched between operands.
struct DimensionError : Error {
    explicit DimensionError(const std::string& m) : Error("dimension", m) {}
};

// Upper-triangular matrix with a zero diagonal entry cannot be inverted.
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& m) : Error("singular_matrix", m) {}
};

// A matrix series is not invertible; `witness` serializes the offending
// leading coefficient (or zero matrix for an identically zero series).
struct NotInvertible : Error {
    NotInvertible(const std::string& m, std::string w)
        : Error("not_invertible", m), witness(std::move(w)) {}
    std::string witness;
};

// A second independent square root adjunction was requested.
struct TowerExhausted : Error {
    explicit TowerExhausted(const std::string& m) : Error("tower_exhausted", m) {}
};

// An operation would need ramification index above 2.
struct RamificationCap : Error {
    explicit RamificationCap(const std::string& m) : Error("ramification_cap", m) {}
};

// Inputs do not carry enough known coefficients for the requested output.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& m) : Error("precision_exhausted", m) {}
};

// The linearization of a lift problem vanishes at the seed root.
struct NotSeparable : Error {
    explicit NotSeparable(const std::string& m) : Error("not_separable", m) {}
};

// Requested module case/alpha combination fails its admissibility predicate.
struct Inadmissible : Error {
    explicit Inadmissible(const std::string& m) : Error("inadmissible", m) {}
};

// The closed-form twist predicate disagrees with the computed valuation
// parity. Internal consistency failure: must never fire on valid input.
struct PredicateMismatch : Error {
    explicit PredicateMismatch(const std::string& m) : Error("predicate_mismatch", m) {}
};

// Malformed text or JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse", m) {}
};

} // namespace vamod
