#ifndef MACHINA_MACHINE_HPP
#define MACHINA_MACHINE_HPP

#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "machina/alphabet.hpp"
#include "machina/error.hpp"

namespace machina {

namespace detail {

// Shared carrier and dynamics of both machine kinds. `delta` is row-major:
// delta[e * |input| + a] = d(e, a).
struct Transitions {
  Alphabet input;
  Alphabet output;
  std::vector<std::string> states;
  std::vector<StateIndex> delta;

  Transitions() = default;
  Transitions(Alphabet in, Alphabet out, std::vector<std::string> names,
              std::vector<StateIndex> table);

  std::size_t index(StateIndex e, Letter a) const noexcept {
    return static_cast<std::size_t>(e) * input.size() + a;
  }
  std::optional<StateIndex> state_index(std::string_view name) const;

  friend bool operator==(const Transitions&, const Transitions&) = default;
};

}  // namespace detail

/// A Mealy 1-cell A ↝ B: output depends on the current state and letter.
class MealyMachine {
 public:
  MealyMachine() = default;
  /// `out` is row-major like `delta`. Throws Error on any size or range
  /// violation, or on duplicate state names.
  MealyMachine(Alphabet input, Alphabet output, std::vector<std::string> states,
               std::vector<StateIndex> delta, std::vector<Letter> out);

  const Alphabet& input() const noexcept { return t_.input; }
  const Alphabet& output() const noexcept { return t_.output; }
  std::size_t num_states() const noexcept { return t_.states.size(); }
  const std::vector<std::string>& states() const noexcept { return t_.states; }
  const std::string& state_name(StateIndex e) const { return t_.states.at(e); }
  std::optional<StateIndex> state_index(std::string_view name) const {
    return t_.state_index(name);
  }

  StateIndex next(StateIndex e, Letter a) const noexcept { return t_.delta[t_.index(e, a)]; }
  Letter out(StateIndex e, Letter a) const noexcept { return out_[t_.index(e, a)]; }

  const std::vector<StateIndex>& delta_table() const noexcept { return t_.delta; }
  const std::vector<Letter>& out_table() const noexcept { return out_; }

  friend bool operator==(const MealyMachine&, const MealyMachine&) = default;

 private:
  detail::Transitions t_;
  std::vector<Letter> out_;
};

/// A Moore 1-cell A ↝ B: output depends on the current state only.
class MooreMachine {
 public:
  MooreMachine() = default;
  MooreMachine(Alphabet input, Alphabet output, std::vector<std::string> states,
               std::vector<StateIndex> delta, std::vector<Letter> out);

  const Alphabet& input() const noexcept { return t_.input; }
  const Alphabet& output() const noexcept { return t_.output; }
  std::size_t num_states() const noexcept { return t_.states.size(); }
  const std::vector<std::string>& states() const noexcept { return t_.states; }
  const std::string& state_name(StateIndex e) const { return t_.states.at(e); }
  std::optional<StateIndex> state_index(std::string_view name) const {
    return t_.state_index(name);
  }

  StateIndex next(StateIndex e, Letter a) const noexcept { return t_.delta[t_.index(e, a)]; }
  Letter out(StateIndex e) const noexcept { return out_[e]; }

  const std::vector<StateIndex>& delta_table() const noexcept { return t_.delta; }
  const std::vector<Letter>& out_table() const noexcept { return out_; }

  friend bool operator==(const MooreMachine&, const MooreMachine&) = default;

 private:
  detail::Transitions t_;
  std::vector<Letter> out_;
};

template <class M>
concept Machine = std::same_as<M, MealyMachine> || std::same_as<M, MooreMachine>;

template <class M>
inline constexpr bool is_moore_v = std::is_same_v<M, MooreMachine>;

/// Output observed at state e when reading a. For Moore machines the letter
/// is ignored.
template <Machine M>
Letter observe(const M& m, StateIndex e, Letter a) noexcept {
  if constexpr (is_moore_v<M>) {
    return m.out(e);
  } else {
    return m.out(e, a);
  }
}

// --- raw descriptions --------------------------------------------------------

using LetterKeyedTable = std::map<std::string, std::map<std::string, std::string>>;
using StateKeyedTable = std::map<std::string, std::string>;

/// An unvalidated machine description, as produced by the file parser.
struct RawMachine {
  std::string kind;  // "mealy" or "moore"
  std::vector<std::string> input;
  std::vector<std::string> output;
  std::vector<std::string> states;
  LetterKeyedTable delta;
  std::variant<LetterKeyedTable, StateKeyedTable> out;
};

MealyMachine validate_mealy(const RawMachine& raw);
MooreMachine validate_moore(const RawMachine& raw);

RawMachine to_raw(const MealyMachine& m);
RawMachine to_raw(const MooreMachine& m);

/// The one-state machine ⟨1, π₁, π_A⟩: echoes every letter.
MealyMachine identity_cell(const Alphabet& a);

// --- 2-cells -----------------------------------------------------------------

/// A total function between the state sets of two machines. `image[e]` is the
/// target of source state e; `target_size` is the target state count.
struct StateMap {
  std::vector<StateIndex> image;
  std::size_t target_size = 0;

  std::size_t source_size() const noexcept { return image.size(); }
  StateIndex operator()(StateIndex e) const { return image.at(e); }

  static StateMap identity(std::size_t n);

  friend bool operator==(const StateMap&, const StateMap&) = default;
  friend auto operator<=>(const StateMap& x, const StateMap& y) { return x.image <=> y.image; }
};

/// Vertical composite: (second ∘ first)(e) = second(first(e)).
StateMap compose(const StateMap& second, const StateMap& first);

/// Throws endpoint_mismatch unless the two machines share both alphabets and
/// `phi` is a total map from source states into target states.
template <Machine M>
void require_state_map(const M& source, const M& target, const StateMap& phi) {
  if (!(source.input() == target.input()) || !(source.output() == target.output())) {
    throw Error(Errc::endpoint_mismatch, "state map between machines with different alphabets");
  }
  if (phi.source_size() != source.num_states() || phi.target_size != target.num_states()) {
    throw Error(Errc::shape_error, "state map size does not match the machines");
  }
  for (StateIndex img : phi.image) {
    if (img >= target.num_states()) {
      throw Error(Errc::unknown_symbol, "state map image is not a target state");
    }
  }
}

/// True iff phi commutes with the dynamics (φ∘d = d'∘(A×φ)) and preserves
/// the output (Mealy: letter-wise; Moore: state-wise).
template <Machine M>
bool is_homomorphism(const M& source, const M& target, const StateMap& phi) {
  require_state_map(source, target, phi);
  const std::size_t letters = source.input().size();
  for (StateIndex e = 0; e < source.num_states(); ++e) {
    const StateIndex fe = phi.image[e];
    if constexpr (is_moore_v<M>) {
      if (target.out(fe) != source.out(e)) return false;
    }
    for (Letter a = 0; a < letters; ++a) {
      if (phi.image[source.next(e, a)] != target.next(fe, a)) return false;
      if constexpr (!is_moore_v<M>) {
        if (target.out(fe, a) != source.out(e, a)) return false;
      }
    }
  }
  return true;
}

}  // namespace machina

#endif  // MACHINA_MACHINE_HPP
