#ifndef MACHINA_SEMANTICS_HPP
#define MACHINA_SEMANTICS_HPP

#include <functional>
#include <string_view>

#include "machina/machine.hpp"

namespace machina {

/// A machine together with a start state. Non-owning: the machine must
/// outlive the pointed view.
template <Machine M>
struct PointedMachine {
  std::reference_wrapper<const M> machine;
  StateIndex start;

  const M& get() const noexcept { return machine.get(); }
};

template <Machine M>
PointedMachine<M> at(const M& m, StateIndex start) {
  if (start >= m.num_states()) {
    throw Error(Errc::unknown_symbol, "start state out of range", "start");
  }
  return {std::cref(m), start};
}

template <Machine M>
PointedMachine<M> at(const M& m, std::string_view start) {
  auto e = m.state_index(start);
  if (!e) throw Error(Errc::unknown_symbol, "undeclared start state '" + std::string(start) + "'", "start");
  return {std::cref(m), *e};
}

namespace detail {

template <Machine M>
void check_word(const M& m, const Word& w) {
  for (Letter a : w) {
    if (a >= m.input().size()) {
      throw Error(Errc::letter_out_of_alphabet, "letter index outside the input alphabet");
    }
  }
}

}  // namespace detail

/// Left-to-right fold of the dynamics over w starting at e. The empty word
/// leaves the state unchanged.
template <Machine M>
StateIndex d_iter(const M& m, StateIndex e, const Word& w) {
  detail::check_word(m, w);
  for (Letter a : w) e = m.next(e, a);
  return e;
}

/// Terminal-extension evaluation: the output after consuming all of w.
/// Moore machines accept the empty word; Mealy machines need at least one
/// letter and report the output emitted at the last one.
template <Machine M>
Letter run(const PointedMachine<M>& p, const Word& w) {
  const M& m = p.get();
  if constexpr (is_moore_v<M>) {
    return m.out(d_iter(m, p.start, w));
  } else {
    if (w.empty()) throw Error(Errc::empty_word_on_mealy, "a Mealy machine cannot run the empty word");
    detail::check_word(m, w);
    StateIndex e = p.start;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) e = m.next(e, w[i]);
    return m.out(e, w.back());
  }
}

/// Every output along the run. Mealy: one letter per input letter.
/// Moore: one letter per visited state, starting state included.
template <Machine M>
Word trace(const PointedMachine<M>& p, const Word& w) {
  const M& m = p.get();
  detail::check_word(m, w);
  Word result;
  result.reserve(w.size() + 1);
  StateIndex e = p.start;
  if constexpr (is_moore_v<M>) result.push_back(m.out(e));
  for (Letter a : w) {
    if constexpr (!is_moore_v<M>) result.push_back(m.out(e, a));
    e = m.next(e, a);
    if constexpr (is_moore_v<M>) result.push_back(m.out(e));
  }
  return result;
}

/// Coarsest stable partition of the states of both machines (disjoint union,
/// p's states first). Returns the block id of every state.
template <Machine M>
std::vector<std::size_t> behavior_classes(const M& p, const M& q);

/// True iff the two pointed machines produce the same output on every word,
/// decided by partition refinement.
template <Machine M>
bool bisimilar(const PointedMachine<M>& p, const PointedMachine<M>& q) {
  const auto blocks = behavior_classes(p.get(), q.get());
  return blocks[p.start] == blocks[p.get().num_states() + q.start];
}

extern template std::vector<std::size_t> behavior_classes(const MealyMachine&, const MealyMachine&);
extern template std::vector<std::size_t> behavior_classes(const MooreMachine&, const MooreMachine&);

/// For every state e and nonempty word w with |w| ≤ maxlen, the Moore run of
/// m and the Mealy run of apply_D1(m) from e agree.
bool check_extension_square(const MooreMachine& m, std::size_t maxlen);

/// Calls visit(w) for every word over an alphabet of the given size with
/// length exactly n, in lexicographic order.
template <class F>
void for_each_word(std::size_t letters, std::size_t n, F&& visit) {
  Word w(n, 0);
  while (true) {
    visit(std::as_const(w));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++w[i] < letters) break;
      w[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace machina

#endif  // MACHINA_SEMANTICS_HPP
