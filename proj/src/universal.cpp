#include "machina/universal.hpp"

#include <vector>

#include "machina/composition.hpp"

namespace machina {

namespace {

constexpr std::uint64_t kEnumerationLimit = 10'000'000;

std::vector<Letter> identity_letters(std::size_t n) {
  std::vector<Letter> id(n);
  for (Letter x = 0; x < n; ++x) id[x] = x;
  return id;
}

}  // namespace

MooreMachine universal_u(const Alphabet& x) {
  const std::size_t n = x.size();
  std::vector<StateIndex> delta(n * n);
  for (StateIndex e = 0; e < n; ++e) {
    for (Letter a = 0; a < n; ++a) delta[e * n + a] = a;
  }
  return MooreMachine(x, x, x.symbols(), std::move(delta), identity_letters(n));
}

MooreMachine universal_p(const Alphabet& x) {
  const std::size_t n = x.size();
  std::vector<StateIndex> delta(n * n);
  for (StateIndex e = 0; e < n; ++e) {
    for (Letter a = 0; a < n; ++a) delta[e * n + a] = e;
  }
  return MooreMachine(x, x, x.symbols(), std::move(delta), identity_letters(n));
}

std::uint64_t pinfty_carrier_check(const Alphabet& x, std::size_t depth) {
  if (depth == 0) throw Error(Errc::invalid_argument, "depth must be positive");
  const std::uint64_t k = x.size();

  // Words of length ≤ depth in shortlex order; only their heads matter.
  // heads[i] is the first letter of word i, or -1 for the empty word.
  std::vector<int> heads{-1};
  std::uint64_t layer = 1;
  for (std::size_t len = 1; len <= depth; ++len) {
    layer *= k;
    for (std::uint64_t i = 0; i < layer; ++i) {
      heads.push_back(static_cast<int>(i / (layer / k)));
    }
    if (heads.size() > 64) break;
  }
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    candidates *= k;
    if (candidates > kEnumerationLimit) {
      throw Error(Errc::enumeration_too_large, "too many candidate functions on words");
    }
  }

  // Odometer over all functions words → x.
  std::vector<Letter> f(heads.size(), 0);
  std::uint64_t survivors = 0;
  for (std::uint64_t c = 0; c < candidates; ++c) {
    bool agrees = true;
    for (std::size_t i = 0; i < f.size() && agrees; ++i) {
      if (heads[i] >= 0 && f[i] != static_cast<Letter>(heads[i])) agrees = false;
    }
    if (agrees) ++survivors;
    for (std::size_t i = f.size(); i-- > 0;) {
      if (++f[i] < k) break;
      f[i] = 0;
    }
  }
  return survivors;
}

MealyMachine embed_j(const MooreMachine& m) {
  const std::size_t letters = m.input().size();
  std::vector<Letter> out;
  out.reserve(m.num_states() * letters);
  for (StateIndex e = 0; e < m.num_states(); ++e) out.insert(out.end(), letters, m.out(e));
  return MealyMachine(m.input(), m.output(), m.states(), m.delta_table(), std::move(out));
}

MealyMachine apply_D1(const MooreMachine& m) {
  std::vector<Letter> out;
  out.reserve(m.delta_table().size());
  for (StateIndex target : m.delta_table()) out.push_back(m.out(target));
  return MealyMachine(m.input(), m.output(), m.states(), m.delta_table(), std::move(out));
}

MooreMachine moorify(const MealyMachine& m) { return ltimes(universal_u(m.output()), m); }

MooreMachine decapitate(const MealyMachine& m) { return ltimes(universal_p(m.output()), m); }

bool is_soft(const MooreMachine& m) {
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    for (Letter a = 0; a < m.input().size(); ++a) {
      if (m.out(m.next(e, a)) != m.out(e)) return false;
    }
  }
  return true;
}

bool is_n_soft(const MooreMachine& m, std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "softness level must be positive");
  // The states reachable by words of length exactly n are the n-th frontier.
  const std::size_t states = m.num_states();
  std::vector<char> frontier(states), next(states);
  for (StateIndex e = 0; e < states; ++e) {
    std::fill(frontier.begin(), frontier.end(), 0);
    frontier[e] = 1;
    for (std::size_t step = 0; step < n; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (StateIndex s = 0; s < states; ++s) {
        if (!frontier[s]) continue;
        for (Letter a = 0; a < m.input().size(); ++a) next[m.next(s, a)] = 1;
      }
      frontier.swap(next);
    }
    for (StateIndex s = 0; s < states; ++s) {
      if (frontier[s] && m.out(s) != m.out(e)) return false;
    }
  }
  return true;
}

SoftnessReport softness_level(const MooreMachine& m, std::size_t bound) {
  SoftnessReport report{std::nullopt, bound};
  for (std::size_t n = 1; n <= bound; ++n) {
    if (is_n_soft(m, n)) {
      report.level = n;
      break;
    }
  }
  return report;
}

}  // namespace machina
