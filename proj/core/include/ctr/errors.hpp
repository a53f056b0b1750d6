#pragma once

#include <stdexcept>
#include <string>

namespace ctr {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// A series was read past its guaranteed order. Callers re-expand at a higher
// order; omega() does this automatically.
struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& m) : Error(m) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& m) : Error(m) {}
};
struct OddLeadingOrder : Error {
    explicit OddLeadingOrder(const std::string& m) : Error(m) {}
};
struct NonSquareLeadingCoefficient : Error {
    explicit NonSquareLeadingCoefficient(const std::string& m) : Error(m) {}
};
struct NonSeparable : Error {
    explicit NonSeparable(const std::string& m) : Error(m) {}
};
struct PoleCollision : Error {
    explicit PoleCollision(const std::string& m) : Error(m) {}
};
struct NonSimpleBranchPoint : Error {
    explicit NonSimpleBranchPoint(const std::string& m) : Error(m) {}
};
struct CuspDetected : Error {
    explicit CuspDetected(const std::string& m) : Error(m) {}
};
struct IrreducibilityFailure : Error {
    explicit IrreducibilityFailure(const std::string& m) : Error(m) {}
};
struct EliminationFailure : Error {
    explicit EliminationFailure(const std::string& m) : Error(m) {}
};
struct RamifiedInfinity : Error {
    explicit RamifiedInfinity(const std::string& m) : Error(m) {}
};
struct ResidueObstruction : Error {
    explicit ResidueObstruction(const std::string& m) : Error(m) {}
};
struct InfeasibleConstraints : Error {
    explicit InfeasibleConstraints(const std::string& m) : Error(m) {}
};
struct DegenerateCurve : Error {
    explicit DegenerateCurve(const std::string& m) : Error(m) {}
};
struct NotCubic : Error {
    explicit NotCubic(const std::string& m) : Error(m) {}
};
struct CacheMismatch : Error {
    explicit CacheMismatch(const std::string& m) : Error(m) {}
};
struct ResidueInconsistency : Error {
    explicit ResidueInconsistency(const std::string& m) : Error(m) {}
};

}  // namespace ctr
