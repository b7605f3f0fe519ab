#include "machina/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace machina {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw Error(Errc::syntax_error, "missing field", name);
  return *it;
}

std::vector<std::string> string_list(const json& doc, const char* name) {
  const json& value = field(doc, name);
  if (!value.is_array()) throw Error(Errc::syntax_error, "expected an array of names", name);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      throw Error(Errc::syntax_error, "expected a string", std::string(name) + "." + std::to_string(i));
    }
    names.push_back(value[i].get<std::string>());
  }
  return names;
}

LetterKeyedTable letter_keyed(const json& value, const std::string& name) {
  if (!value.is_object()) throw Error(Errc::syntax_error, "expected an object", name);
  LetterKeyedTable table;
  for (const auto& [state, row] : value.items()) {
    const std::string row_path = name + "." + state;
    if (!row.is_object()) throw Error(Errc::shape_error, "expected an object keyed by letter", row_path);
    auto& target = table[state];
    for (const auto& [letter, cell] : row.items()) {
      if (!cell.is_string()) {
        throw Error(Errc::syntax_error, "expected a string", row_path + "." + letter);
      }
      target[letter] = cell.get<std::string>();
    }
  }
  return table;
}

std::variant<LetterKeyedTable, StateKeyedTable> out_table(const json& value) {
  if (!value.is_object()) throw Error(Errc::syntax_error, "expected an object", "out");
  bool any_object = false, any_string = false;
  for (const auto& [state, cell] : value.items()) {
    if (cell.is_object()) {
      any_object = true;
    } else if (cell.is_string()) {
      any_string = true;
    } else {
      throw Error(Errc::syntax_error, "expected a letter or an object of letters", "out." + state);
    }
    if (any_object && any_string) {
      throw Error(Errc::shape_error, "mixes per-state and per-(state, letter) outputs", "out." + state);
    }
  }
  if (any_string) {
    StateKeyedTable table;
    for (const auto& [state, cell] : value.items()) table[state] = cell.get<std::string>();
    return table;
  }
  return letter_keyed(value, "out");
}

template <Machine M>
ordered_json to_json(const M& m) {
  ordered_json doc;
  doc["version"] = kFormatVersion;
  doc["kind"] = is_moore_v<M> ? "moore" : "mealy";
  doc["input"] = m.input().symbols();
  doc["output"] = m.output().symbols();
  doc["states"] = m.states();
  ordered_json delta = ordered_json::object();
  ordered_json out = ordered_json::object();
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    ordered_json row = ordered_json::object();
    ordered_json out_row = ordered_json::object();
    for (Letter a = 0; a < m.input().size(); ++a) {
      row[m.input().symbol(a)] = m.state_name(m.next(e, a));
      if constexpr (!is_moore_v<M>) out_row[m.input().symbol(a)] = m.output().symbol(m.out(e, a));
    }
    delta[m.state_name(e)] = std::move(row);
    if constexpr (is_moore_v<M>) {
      out[m.state_name(e)] = m.output().symbol(m.out(e));
    } else {
      out[m.state_name(e)] = std::move(out_row);
    }
  }
  doc["delta"] = std::move(delta);
  doc["out"] = std::move(out);
  return doc;
}

}  // namespace

RawMachine parse_machine_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::syntax_error, "malformed JSON", "line " + std::to_string(line_of(text, e.byte)));
  }
  if (!doc.is_object()) throw Error(Errc::syntax_error, "a machine file is a single JSON object");

  static const std::set<std::string> known{"version", "kind", "input", "output", "states", "delta", "out"};
  const json& version = field(doc, "version");
  if (!version.is_number_integer()) throw Error(Errc::syntax_error, "expected an integer", "version");
  if (version.get<long long>() != kFormatVersion) {
    throw Error(Errc::version_mismatch,
                "unsupported format version " + std::to_string(version.get<long long>()), "version");
  }
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw Error(Errc::syntax_error, "unknown field", key);
  }

  RawMachine raw;
  const json& kind = field(doc, "kind");
  if (!kind.is_string() || (kind != "mealy" && kind != "moore")) {
    throw Error(Errc::syntax_error, "kind must be \"mealy\" or \"moore\"", "kind");
  }
  raw.kind = kind.get<std::string>();
  raw.input = string_list(doc, "input");
  raw.output = string_list(doc, "output");
  raw.states = string_list(doc, "states");
  raw.delta = letter_keyed(field(doc, "delta"), "delta");
  raw.out = out_table(field(doc, "out"));
  return raw;
}

RawMachine parse_machine_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::syntax_error, "cannot open file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_machine_text(buffer.str());
  } catch (const Error& e) {
    throw e.within(path.string());
  }
}

namespace {

AnyMachine validate_any(const RawMachine& raw) {
  if (raw.kind == "mealy") return validate_mealy(raw);
  return validate_moore(raw);
}

}  // namespace

AnyMachine load_machine(const std::filesystem::path& path) {
  const RawMachine raw = parse_machine_file(path);
  try {
    return validate_any(raw);
  } catch (const Error& e) {
    throw e.within(path.string());
  }
}

AnyMachine machine_from_text(std::string_view text) { return validate_any(parse_machine_text(text)); }

std::string serialize(const MealyMachine& m) { return to_json(m).dump(2) + "\n"; }

std::string serialize(const MooreMachine& m) { return to_json(m).dump(2) + "\n"; }

std::string serialize(const AnyMachine& m) {
  return std::visit([](const auto& x) { return serialize(x); }, m);
}

void save_machine(const std::filesystem::path& path, const AnyMachine& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::syntax_error, "cannot write file", path.string());
  out << serialize(m);
}

}  // namespace machina
