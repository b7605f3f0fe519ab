#include "machina/machine.hpp"

#include <algorithm>

namespace machina {

namespace detail {

Transitions::Transitions(Alphabet in, Alphabet out, std::vector<std::string> names,
                         std::vector<StateIndex> table)
    : input(std::move(in)), output(std::move(out)), states(std::move(names)), delta(std::move(table)) {
  if (input.size() == 0 || output.size() == 0) {
    throw Error(Errc::empty_alphabet, "machine alphabets must be nonempty");
  }
  if (states.empty()) {
    throw Error(Errc::shape_error, "a machine needs at least one state", "states");
  }
  std::vector<std::string_view> sorted(states.begin(), states.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(Errc::duplicate_name, "duplicate state '" + std::string(*dup) + "'", "states");
  }
  if (delta.size() != states.size() * input.size()) {
    throw Error(Errc::shape_error, "transition table has the wrong size", "delta");
  }
  for (StateIndex target : delta) {
    if (target >= states.size()) {
      throw Error(Errc::unknown_symbol, "transition into an undeclared state", "delta");
    }
  }
}

std::optional<StateIndex> Transitions::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == name) return static_cast<StateIndex>(i);
  }
  return std::nullopt;
}

}  // namespace detail

MealyMachine::MealyMachine(Alphabet input, Alphabet output, std::vector<std::string> states,
                           std::vector<StateIndex> delta, std::vector<Letter> out)
    : t_(std::move(input), std::move(output), std::move(states), std::move(delta)),
      out_(std::move(out)) {
  if (out_.size() != t_.delta.size()) {
    throw Error(Errc::shape_error, "Mealy output table must be keyed by (state, letter)", "out");
  }
  for (Letter b : out_) {
    if (b >= t_.output.size()) {
      throw Error(Errc::unknown_symbol, "output is not a letter of the output alphabet", "out");
    }
  }
}

MooreMachine::MooreMachine(Alphabet input, Alphabet output, std::vector<std::string> states,
                           std::vector<StateIndex> delta, std::vector<Letter> out)
    : t_(std::move(input), std::move(output), std::move(states), std::move(delta)),
      out_(std::move(out)) {
  if (out_.size() != t_.states.size()) {
    throw Error(Errc::shape_error, "Moore output table must be keyed by state", "out");
  }
  for (Letter b : out_) {
    if (b >= t_.output.size()) {
      throw Error(Errc::unknown_symbol, "output is not a letter of the output alphabet", "out");
    }
  }
}

namespace {

std::string path(std::initializer_list<std::string_view> parts) {
  std::string p;
  for (auto part : parts) {
    if (!p.empty()) p += '.';
    p += part;
  }
  return p;
}

struct Resolved {
  Alphabet input;
  Alphabet output;
  std::vector<StateIndex> delta;
};

Alphabet make_alphabet(const std::vector<std::string>& symbols, const char* field) {
  // Errors from the constructor carry the field name as their location.
  return Alphabet(symbols, field);
}

void require_unique_states(const std::vector<std::string>& states) {
  if (states.empty()) throw Error(Errc::shape_error, "a machine needs at least one state", "states");
  std::vector<std::string_view> sorted(states.begin(), states.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(Errc::duplicate_name, "duplicate state '" + std::string(*dup) + "'", "states");
  }
}

StateIndex lookup_state(const std::vector<std::string>& states, const std::string& name,
                        const std::string& where) {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == name) return static_cast<StateIndex>(i);
  }
  throw Error(Errc::unknown_symbol, "undeclared state '" + name + "'", where);
}

Letter lookup_letter(const Alphabet& alphabet, const std::string& name, const std::string& where) {
  if (auto a = alphabet.index_of(name)) return *a;
  throw Error(Errc::unknown_symbol, "undeclared letter '" + name + "'", where);
}

// Resolves a letter-keyed table to a row-major index table. `resolve` maps the
// cell value to an index; keys outside the declared sets are rejected.
template <class F>
std::vector<StateIndex> resolve_table(const LetterKeyedTable& table, const std::vector<std::string>& states,
                                      const Alphabet& input, const char* field, F resolve) {
  for (const auto& [state, row] : table) {
    lookup_state(states, state, path({field, state}));
    for (const auto& [letter, value] : row) {
      lookup_letter(input, letter, path({field, state, letter}));
    }
  }
  std::vector<StateIndex> result;
  result.reserve(states.size() * input.size());
  for (const auto& state : states) {
    auto row = table.find(state);
    for (const auto& letter : input.symbols()) {
      const std::string where = path({field, state, letter});
      if (row == table.end()) throw Error(Errc::missing_entry, "no entry", where);
      auto cell = row->second.find(letter);
      if (cell == row->second.end()) throw Error(Errc::missing_entry, "no entry", where);
      result.push_back(resolve(cell->second, where));
    }
  }
  return result;
}

Resolved resolve_common(const RawMachine& raw, std::string_view expected_kind) {
  if (raw.kind != expected_kind) {
    throw Error(Errc::kind_mismatch,
                "expected a " + std::string(expected_kind) + " machine, got '" + raw.kind + "'", "kind");
  }
  Resolved r{make_alphabet(raw.input, "input"), make_alphabet(raw.output, "output"), {}};
  require_unique_states(raw.states);
  r.delta = resolve_table(raw.delta, raw.states, r.input, "delta",
                          [&](const std::string& v, const std::string& where) {
                            return lookup_state(raw.states, v, where);
                          });
  return r;
}

}  // namespace

MealyMachine validate_mealy(const RawMachine& raw) {
  Resolved r = resolve_common(raw, "mealy");
  const auto* table = std::get_if<LetterKeyedTable>(&raw.out);
  if (!table) {
    throw Error(Errc::shape_error, "Mealy output table must be keyed by (state, letter)", "out");
  }
  auto out = resolve_table(*table, raw.states, r.input, "out",
                           [&](const std::string& v, const std::string& where) {
                             return lookup_letter(r.output, v, where);
                           });
  return MealyMachine(std::move(r.input), std::move(r.output), raw.states, std::move(r.delta),
                      std::move(out));
}

MooreMachine validate_moore(const RawMachine& raw) {
  Resolved r = resolve_common(raw, "moore");
  const auto* table = std::get_if<StateKeyedTable>(&raw.out);
  if (!table) {
    throw Error(Errc::shape_error, "Moore output table must be keyed by state only", "out");
  }
  for (const auto& [state, value] : *table) lookup_state(raw.states, state, path({"out", state}));
  std::vector<Letter> out;
  out.reserve(raw.states.size());
  for (const auto& state : raw.states) {
    auto cell = table->find(state);
    if (cell == table->end()) throw Error(Errc::missing_entry, "no entry", path({"out", state}));
    out.push_back(lookup_letter(r.output, cell->second, path({"out", state})));
  }
  return MooreMachine(std::move(r.input), std::move(r.output), raw.states, std::move(r.delta),
                      std::move(out));
}

namespace {

template <Machine M>
RawMachine raw_common(const M& m, std::string kind) {
  RawMachine raw;
  raw.kind = std::move(kind);
  raw.input = m.input().symbols();
  raw.output = m.output().symbols();
  raw.states = m.states();
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    auto& row = raw.delta[m.state_name(e)];
    for (Letter a = 0; a < m.input().size(); ++a) {
      row[m.input().symbol(a)] = m.state_name(m.next(e, a));
    }
  }
  return raw;
}

}  // namespace

RawMachine to_raw(const MealyMachine& m) {
  RawMachine raw = raw_common(m, "mealy");
  LetterKeyedTable out;
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    auto& row = out[m.state_name(e)];
    for (Letter a = 0; a < m.input().size(); ++a) {
      row[m.input().symbol(a)] = m.output().symbol(m.out(e, a));
    }
  }
  raw.out = std::move(out);
  return raw;
}

RawMachine to_raw(const MooreMachine& m) {
  RawMachine raw = raw_common(m, "moore");
  StateKeyedTable out;
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    out[m.state_name(e)] = m.output().symbol(m.out(e));
  }
  raw.out = std::move(out);
  return raw;
}

MealyMachine identity_cell(const Alphabet& a) {
  std::vector<Letter> echo(a.size());
  for (Letter x = 0; x < a.size(); ++x) echo[x] = x;
  return MealyMachine(a, a, {"*"}, std::vector<StateIndex>(a.size(), 0), std::move(echo));
}

StateMap StateMap::identity(std::size_t n) {
  StateMap id{std::vector<StateIndex>(n), n};
  for (std::size_t i = 0; i < n; ++i) id.image[i] = static_cast<StateIndex>(i);
  return id;
}

StateMap compose(const StateMap& second, const StateMap& first) {
  if (first.target_size != second.source_size()) {
    throw Error(Errc::endpoint_mismatch, "state maps are not composable");
  }
  StateMap result{std::vector<StateIndex>(first.source_size()), second.target_size};
  for (std::size_t e = 0; e < first.source_size(); ++e) {
    result.image[e] = second.image.at(first.image[e]);
  }
  return result;
}

}  // namespace machina
