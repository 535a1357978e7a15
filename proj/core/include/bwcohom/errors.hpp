#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bwc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { public: using Error::Error; };
class NotWellDefined : public Error { public: using Error::Error; };
class CompositionNotZero : public Error { public: using Error::Error; };
class NotComposable : public Error { public: using Error::Error; };
class ShapeMismatch : public Error { public: using Error::Error; };
class NaturalityBroken : public Error { public: using Error::Error; };
class SquareNotCommuting : public Error { public: using Error::Error; };
class TwoMorphismInvalid : public Error { public: using Error::Error; };
class LadderInvalid : public Error { public: using Error::Error; };
class DegreeOutOfRange : public Error { public: using Error::Error; };
class BifunctorInvalid : public Error { public: using Error::Error; };
class NotInvertible : public Error { public: using Error::Error; };

/// A natural system is not local (or colocal) for the supplied adjunction.
/// `witness` names the offending morphism of the big category.
class NotLocal : public Error {
public:
    NotLocal(const std::string& what, std::string witness)
        : Error(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// An exact chain-level identity failed.  Carries the degree and the basis
/// coordinate (target row, source column) of the first offending entry.
class IdentityViolation : public Error {
public:
    IdentityViolation(const std::string& what, int degree, std::string coordinate)
        : Error(what + " (degree " + std::to_string(degree) + ", " + coordinate + ")"),
          degree_(degree),
          coordinate_(std::move(coordinate)) {}
    int degree() const noexcept { return degree_; }
    const std::string& coordinate() const noexcept { return coordinate_; }

private:
    int degree_;
    std::string coordinate_;
};

/// Collected axiom violations.  Validators never throw on bad input; they
/// fill a report instead and callers decide.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
    void add(std::string v) { violations.push_back(std::move(v)); }
    void merge(const ValidationReport& other, const std::string& prefix = {})
    {
        for (const auto& v : other.violations) violations.push_back(prefix + v);
    }
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& what, ValidationReport report)
        : Error(what + (report.violations.empty() ? std::string{} : ": " + report.violations.front())),
          report_(std::move(report)) {}
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

} // namespace bwc
