#pragma once

#include <stdexcept>
#include <string>

namespace orbitile {

// Triangle data does not describe a spherical triangle (angle sum <= pi).
struct NotSphericalError : std::domain_error {
    explicit NotSphericalError(const std::string& what) : std::domain_error(what) {}
};

// Reflection closure exceeded its tile budget without closing.
struct NonClosingError : std::runtime_error {
    explicit NonClosingError(const std::string& what) : std::runtime_error(what) {}
};

// A basepoint/target pair (or a single marked point) failed a genericity
// predicate; callers redraw rather than perturb.
struct NonGenericError : std::runtime_error {
    explicit NonGenericError(const std::string& what) : std::runtime_error(what) {}
};

// The requested orbit-space case has no tiling model (cases 2, 3, 9, 10).
struct UnsupportedCaseError : std::runtime_error {
    explicit UnsupportedCaseError(const std::string& what) : std::runtime_error(what) {}
};

// Growth-degree fit requested on a degenerate series.
struct UndefinedFitError : std::runtime_error {
    explicit UndefinedFitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbitile
