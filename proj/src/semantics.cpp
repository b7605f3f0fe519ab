#include "machina/semantics.hpp"

#include <map>

#include "machina/universal.hpp"

namespace machina {

template <Machine M>
std::vector<std::size_t> behavior_classes(const M& p, const M& q) {
  if (!(p.input() == q.input()) || !(p.output() == q.output())) {
    throw Error(Errc::endpoint_mismatch, "cannot compare machines with different alphabets");
  }
  const std::size_t np = p.num_states();
  const std::size_t total = np + q.num_states();
  const std::size_t letters = p.input().size();

  auto next = [&](std::size_t s, Letter a) -> std::size_t {
    return s < np ? p.next(static_cast<StateIndex>(s), a)
                  : np + q.next(static_cast<StateIndex>(s - np), a);
  };
  auto obs = [&](std::size_t s, Letter a) -> Letter {
    return s < np ? observe(p, static_cast<StateIndex>(s), a)
                  : observe(q, static_cast<StateIndex>(s - np), a);
  };

  // Initial split by the observable output row.
  std::vector<std::size_t> block(total);
  std::size_t count = 0;
  {
    std::map<std::vector<Letter>, std::size_t> ids;
    std::vector<Letter> row(letters);
    for (std::size_t s = 0; s < total; ++s) {
      for (Letter a = 0; a < letters; ++a) row[a] = obs(s, a);
      block[s] = ids.try_emplace(row, ids.size()).first->second;
    }
    count = ids.size();
  }

  // Refine by successor blocks until the number of blocks is stable.
  std::vector<std::size_t> signature(letters + 1);
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> refined(total);
    for (std::size_t s = 0; s < total; ++s) {
      signature[0] = block[s];
      for (Letter a = 0; a < letters; ++a) signature[a + 1] = block[next(s, a)];
      refined[s] = ids.try_emplace(signature, ids.size()).first->second;
    }
    block = std::move(refined);
    if (ids.size() == count) break;
    count = ids.size();
  }
  return block;
}

template std::vector<std::size_t> behavior_classes(const MealyMachine&, const MealyMachine&);
template std::vector<std::size_t> behavior_classes(const MooreMachine&, const MooreMachine&);

bool check_extension_square(const MooreMachine& m, std::size_t maxlen) {
  if (maxlen == 0) throw Error(Errc::invalid_argument, "maxlen must be positive");
  const MealyMachine d1 = apply_D1(m);
  bool ok = true;
  for (StateIndex e = 0; e < m.num_states() && ok; ++e) {
    for (std::size_t n = 1; n <= maxlen && ok; ++n) {
      for_each_word(m.input().size(), n, [&](const Word& w) {
        if (ok && run(at(m, e), w) != run(at(d1, e), w)) ok = false;
      });
    }
  }
  return ok;
}

}  // namespace machina
