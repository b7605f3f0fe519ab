#ifndef MACHINA_UNIVERSAL_HPP
#define MACHINA_UNIVERSAL_HPP

#include <cstdint>
#include <optional>

#include "machina/machine.hpp"

namespace machina {

/// The one-step register on x: the state is the last letter read and is
/// also the output. delta(e,a) = a, out(e) = e.
MooreMachine universal_u(const Alphabet& x);

/// The frozen register on x, carried on x itself (each state stands for the
/// function on words that is `head` on nonempty words and takes that value on
/// the empty one). delta(e,a) = e, out(e) = e.
MooreMachine universal_p(const Alphabet& x);

/// Enumerates every function from the words over x of length ≤ depth into x
/// and counts those that agree with `head` on all nonempty words.
/// Throws enumeration_too_large past 10^7 candidate functions.
std::uint64_t pinfty_carrier_check(const Alphabet& x, std::size_t depth);

/// Views a Moore machine as the Mealy machine whose output ignores the letter.
MealyMachine embed_j(const MooreMachine& m);

/// Same carrier and dynamics; out'(e,a) = out(delta(e,a)).
MealyMachine apply_D1(const MooreMachine& m);

/// Post-composition with universal_u(B): states (b,e), delta((b,e),a) =
/// (out(e,a), delta(e,a)), out((b,e)) = b.
MooreMachine moorify(const MealyMachine& m);

/// Post-composition with universal_p(B): states (h,e), delta((h,e),a) =
/// (h, delta(e,a)), out((h,e)) = h.
MooreMachine decapitate(const MealyMachine& m);

/// out(delta(e,a)) = out(e) for all e, a.
bool is_soft(const MooreMachine& m);

/// out(d_iter(e,w)) = out(e) for all e and all words w of length exactly n.
/// n must be positive.
bool is_n_soft(const MooreMachine& m, std::size_t n);

struct SoftnessReport {
  std::optional<std::size_t> level;  // least n with an n-soft square, if ≤ bound
  std::size_t bound = 0;
};

SoftnessReport softness_level(const MooreMachine& m, std::size_t bound);

}  // namespace machina

#endif  // MACHINA_UNIVERSAL_HPP
