#include "machina/catalog.hpp"

namespace machina::catalog {

MealyMachine parity() {
  return MealyMachine(digits(2), digits(2), {"q0", "q1"}, {0, 1, 1, 0}, {0, 1, 1, 0});
}

MooreMachine parity_moore() {
  return MooreMachine(digits(2), digits(2), {"q0", "q1"}, {0, 1, 1, 0}, {0, 1});
}

}  // namespace machina::catalog
