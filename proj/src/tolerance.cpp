#include "orbitile/tolerance.hpp"

#include <cstdlib>

namespace orbitile {

double predicate_tolerance() {
    static const double tol = [] {
        if (const char* env = std::getenv("ORBIFOLD_TOLERANCE")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end != env && v > 0) return v;
        }
        return 1e-9;
    }();
    return tol;
}

}  // namespace orbitile
