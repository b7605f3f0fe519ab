#ifndef MACHINA_IO_HPP
#define MACHINA_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "machina/machine.hpp"

namespace machina {

inline constexpr int kFormatVersion = 1;

using AnyMachine = std::variant<MealyMachine, MooreMachine>;

/// Parses one JSON machine document:
///   {"version":1,"kind":"mealy"|"moore","input":[...],"output":[...],
///    "states":[...],"delta":{state:{letter:state}},
///    "out": {state:{letter:letter}} (mealy) | {state:letter} (moore)}
/// Unknown fields are rejected. Errors are syntax_error (with a line number
/// or field path) or version_mismatch.
RawMachine parse_machine_text(std::string_view text);
RawMachine parse_machine_file(const std::filesystem::path& path);

/// Parses and validates according to the declared kind.
AnyMachine load_machine(const std::filesystem::path& path);
AnyMachine machine_from_text(std::string_view text);

std::string serialize(const MealyMachine& m);
std::string serialize(const MooreMachine& m);
std::string serialize(const AnyMachine& m);

void save_machine(const std::filesystem::path& path, const AnyMachine& m);

}  // namespace machina

#endif  // MACHINA_IO_HPP
