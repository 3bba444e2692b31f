#pragma once

namespace orbitile {

// Absolute tolerance for geometric predicates (default 1e-9). The environment
// variable ORBIFOLD_TOLERANCE overrides it; read once per process.
double predicate_tolerance();

}  // namespace orbitile
