#include "machina/composition.hpp"

#include "machina/universal.hpp"

namespace machina {

std::string pair_name(const std::string& outer, const std::string& inner) {
  constexpr std::string_view open = "⟨", close = "⟩";
  std::string name;
  name.reserve(open.size() + outer.size() + 1 + inner.size() + close.size());
  name.append(open).append(outer).append(1, ',').append(inner).append(close);
  return name;
}

namespace {

template <Machine S, Machine F>
void require_composable(const S& second, const F& first) {
  if (!(first.output() == second.input())) {
    throw Error(Errc::endpoint_mismatch,
                "output alphabet of the first machine differs from the input of the second");
  }
}

template <Machine S, Machine F>
std::vector<std::string> pair_names(const S& second, const F& first) {
  std::vector<std::string> names;
  names.reserve(second.num_states() * first.num_states());
  for (const auto& f : second.states()) {
    for (const auto& e : first.states()) names.push_back(pair_name(f, e));
  }
  return names;
}

// delta((f,e),a) = (second.next(f, first's output at (e,a)), first.next(e,a))
template <Machine S, Machine F>
std::vector<StateIndex> cascade_delta(const S& second, const F& first) {
  const std::size_t letters = first.input().size();
  const std::size_t ne = first.num_states();
  std::vector<StateIndex> delta;
  delta.reserve(second.num_states() * ne * letters);
  for (StateIndex f = 0; f < second.num_states(); ++f) {
    for (StateIndex e = 0; e < ne; ++e) {
      for (Letter a = 0; a < letters; ++a) {
        delta.push_back(pair_index(second.next(f, observe(first, e, a)), first.next(e, a), ne));
      }
    }
  }
  return delta;
}

}  // namespace

MealyMachine compose_mealy(const MealyMachine& second, const MealyMachine& first) {
  require_composable(second, first);
  const std::size_t letters = first.input().size();
  std::vector<Letter> out;
  out.reserve(second.num_states() * first.num_states() * letters);
  for (StateIndex f = 0; f < second.num_states(); ++f) {
    for (StateIndex e = 0; e < first.num_states(); ++e) {
      for (Letter a = 0; a < letters; ++a) out.push_back(second.out(f, first.out(e, a)));
    }
  }
  return MealyMachine(first.input(), second.output(), pair_names(second, first),
                      cascade_delta(second, first), std::move(out));
}

MooreMachine compose_moore(const MooreMachine& second, const MooreMachine& first) {
  require_composable(second, first);
  std::vector<Letter> out;
  out.reserve(second.num_states() * first.num_states());
  for (StateIndex f = 0; f < second.num_states(); ++f) {
    out.insert(out.end(), first.num_states(), second.out(f));
  }
  return MooreMachine(first.input(), second.output(), pair_names(second, first),
                      cascade_delta(second, first), std::move(out));
}

MooreMachine ltimes(const MooreMachine& n, const MealyMachine& m) {
  require_composable(n, m);
  std::vector<Letter> out;
  out.reserve(n.num_states() * m.num_states());
  for (StateIndex f = 0; f < n.num_states(); ++f) out.insert(out.end(), m.num_states(), n.out(f));
  return MooreMachine(m.input(), n.output(), pair_names(n, m), cascade_delta(n, m), std::move(out));
}

MooreMachine rtimes(const MealyMachine& m, const MooreMachine& n) {
  require_composable(m, n);
  std::vector<Letter> out;
  out.reserve(m.num_states() * n.num_states());
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    for (StateIndex f = 0; f < n.num_states(); ++f) out.push_back(m.out(e, n.out(f)));
  }
  return MooreMachine(n.input(), m.output(), pair_names(m, n), cascade_delta(m, n), std::move(out));
}

StateMap horizontal(const StateMap& outer, const StateMap& inner) {
  const std::size_t total = outer.source_size() * inner.source_size();
  StateMap result{std::vector<StateIndex>(total), outer.target_size * inner.target_size};
  for (StateIndex f = 0; f < outer.source_size(); ++f) {
    for (StateIndex e = 0; e < inner.source_size(); ++e) {
      result.image[pair_index(f, e, inner.source_size())] =
          pair_index(outer.image[f], inner.image[e], inner.target_size);
    }
  }
  return result;
}

bool check_j_compatibilities(const MealyMachine& m, const MooreMachine& n) {
  return embed_j(rtimes(m, n)) == compose_mealy(m, embed_j(n));
}

bool check_j_compatibilities(const MooreMachine& m, const MealyMachine& n) {
  return embed_j(ltimes(m, n)) == compose_mealy(embed_j(m), n);
}

bool check_j_compatibilities(const MooreMachine& m, const MooreMachine& n) {
  return ltimes(m, embed_j(n)) == rtimes(embed_j(m), n) &&
         embed_j(compose_moore(m, n)) == compose_mealy(embed_j(m), embed_j(n));
}

}  // namespace machina
