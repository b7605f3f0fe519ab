#ifndef MACHINA_CATALOG_HPP
#define MACHINA_CATALOG_HPP

#include "machina/machine.hpp"

namespace machina::catalog {

/// Running parity over {0,1}, Mealy: states q0, q1; delta(qi,a) = q(i^a),
/// out(qi,a) = i^a.
MealyMachine parity();

/// Running parity, Moore: same dynamics, out(qi) = i.
MooreMachine parity_moore();

}  // namespace machina::catalog

#endif  // MACHINA_CATALOG_HPP
