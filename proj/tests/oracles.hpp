// Independent reference computations used by the tests. Nothing here calls
// the library routine it is meant to check.
#ifndef MACHINA_TESTS_ORACLES_HPP
#define MACHINA_TESTS_ORACLES_HPP

#include <vector>

#include "machina/machine.hpp"

namespace oracle {

using machina::Letter;
using machina::MealyMachine;
using machina::MooreMachine;
using machina::StateIndex;
using machina::Word;

/// Every word of length ≤ max_len over `letters` symbols, shortest first.
inline std::vector<Word> words_up_to(std::size_t letters, std::size_t max_len) {
  std::vector<Word> all{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Letter a = 0; a < letters; ++a) {
        Word x = w;
        x.push_back(a);
        next.push_back(x);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

/// Output word of a Mealy machine, one letter per input letter.
inline Word mealy_outputs(const MealyMachine& m, StateIndex e, const Word& w) {
  Word out;
  for (Letter a : w) {
    out.push_back(m.out_table()[e * m.input().size() + a]);
    e = m.delta_table()[e * m.input().size() + a];
  }
  return out;
}

/// Output word of a Moore machine, one letter per visited state.
inline Word moore_outputs(const MooreMachine& m, StateIndex e, const Word& w) {
  Word out{m.out_table()[e]};
  for (Letter a : w) {
    e = m.delta_table()[e * m.input().size() + a];
    out.push_back(m.out_table()[e]);
  }
  return out;
}

/// All homomorphisms by exhaustive odometer over total state maps.
template <class M>
std::vector<std::vector<StateIndex>> brute_force_homs(const M& source, const M& target) {
  std::vector<std::vector<StateIndex>> homs;
  const std::size_t ns = source.num_states(), nt = target.num_states();
  const std::size_t k = source.input().size();
  std::vector<StateIndex> phi(ns, 0);
  while (true) {
    bool ok = true;
    for (StateIndex e = 0; e < ns && ok; ++e) {
      for (Letter a = 0; a < k && ok; ++a) {
        const std::size_t src = e * k + a, tgt = phi[e] * k + a;
        if (phi[source.delta_table()[src]] != target.delta_table()[tgt]) ok = false;
        if constexpr (std::is_same_v<M, MealyMachine>) {
          if (source.out_table()[src] != target.out_table()[tgt]) ok = false;
        }
      }
      if constexpr (std::is_same_v<M, MooreMachine>) {
        if (source.out_table()[e] != target.out_table()[phi[e]]) ok = false;
      }
    }
    if (ok) homs.push_back(phi);
    std::size_t i = ns;
    while (i > 0) {
      --i;
      if (++phi[i] < nt) break;
      phi[i] = 0;
      if (i == 0) return homs;
    }
  }
}

}  // namespace oracle

#endif  // MACHINA_TESTS_ORACLES_HPP
