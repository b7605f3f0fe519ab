#include "machina/cli.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "machina/catalog.hpp"
#include "machina/composition.hpp"
#include "machina/io.hpp"
#include "machina/lab.hpp"
#include "machina/semantics.hpp"
#include "machina/universal.hpp"
#include "machina/unitization.hpp"

namespace machina::cli {

namespace {

const char* kind_name(const AnyMachine& m) {
  return std::holds_alternative<MealyMachine>(m) ? "mealy" : "moore";
}

std::size_t state_count(const AnyMachine& m) {
  return std::visit([](const auto& x) { return x.num_states(); }, m);
}

template <class M>
const M& expect(const AnyMachine& m, const std::string& file) {
  if (const auto* x = std::get_if<M>(&m)) return *x;
  throw Error(Errc::kind_mismatch,
              std::string("expected a ") + (is_moore_v<M> ? "moore" : "mealy") + " machine", file);
}

Alphabet alphabet_from(const std::string& text) {
  std::vector<std::string> symbols;
  std::string token;
  for (char c : text + ",") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) symbols.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  return Alphabet(std::move(symbols));
}

template <Machine M>
std::string render_map(const M& source, const M& target, const StateMap& phi) {
  std::string text;
  for (StateIndex e = 0; e < phi.source_size(); ++e) {
    if (e) text += ' ';
    text += source.state_name(e) + "->" + target.state_name(phi.image[e]);
  }
  return text;
}

template <Machine M>
void render_homs(std::ostream& out, const std::string& title, const M& source, const M& target,
                 const HomSet& homs) {
  out << title << ": " << homs.size() << " of " << homs.candidates << " candidate maps\n";
  for (std::size_t i = 0; i < homs.size(); ++i) {
    out << "  [" << i << "] " << render_map(source, target, homs.homs[i]) << '\n';
  }
}

int render_report(std::ostream& out, const BijectionReport& report, const MooreMachine& n,
                  const MealyMachine& left_source, const MealyMachine& m, const MooreMachine& right_target,
                  const std::string& left_title, const std::string& right_title) {
  render_homs(out, left_title, left_source, m, report.left);
  render_homs(out, right_title, n, right_target, report.right);
  if (report.success()) {
    out << "pairing:";
    for (auto [l, r] : report.pairing) out << ' ' << l << "<->" << r;
    out << "\nresult: SUCCESS\n";
    return kOk;
  }
  const auto& failure = *report.failure;
  const bool left = failure.side == Side::left;
  out << "result: FAILURE at " << (left ? "left" : "right") << '[' << failure.index << "]: "
      << failure.reason << '\n';
  out << "  offending map: "
      << (left ? render_map(n, right_target, failure.image) : render_map(left_source, m, failure.image))
      << '\n';
  return kViolated;
}

int verdict(std::ostream& out, const std::string& label, bool holds) {
  out << label << ": " << (holds ? "true" : "false") << '\n';
  return holds ? kOk : kViolated;
}

void emit(std::ostream& out, const std::string& path, const AnyMachine& m) {
  if (path.empty()) {
    out << serialize(m);
  } else {
    save_machine(path, m);
    out << "wrote " << path << " (" << kind_name(m) << ", " << state_count(m) << " states)\n";
  }
}

AnyMachine compose_any(const AnyMachine& second, const AnyMachine& first) {
  return std::visit(
      [](const auto& s, const auto& f) -> AnyMachine {
        using S = std::decay_t<decltype(s)>;
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<S, MealyMachine> && std::is_same_v<F, MealyMachine>) {
          return compose_mealy(s, f);
        } else if constexpr (std::is_same_v<S, MooreMachine> && std::is_same_v<F, MooreMachine>) {
          return compose_moore(s, f);
        } else if constexpr (std::is_same_v<S, MooreMachine>) {
          return ltimes(s, f);
        } else {
          return rtimes(s, f);
        }
      },
      second, first);
}

template <Machine M>
bool random_pentagons(std::mt19937_64& rng, std::size_t count, std::size_t max_states) {
  std::uniform_int_distribution<std::size_t> size(1, 2), states(1, max_states);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Alphabet> objects;
    for (int j = 0; j < 5; ++j) objects.push_back(digits(size(rng)));
    auto make = [&](std::size_t from) {
      if constexpr (is_moore_v<M>) {
        return random_moore(rng, objects[from], objects[from + 1], states(rng));
      } else {
        return random_mealy(rng, objects[from], objects[from + 1], states(rng));
      }
    };
    const M f = make(0), g = make(1), h = make(2), k = make(3);
    if (!check_pentagon(k, h, g, f)) return false;
    if (!associator(h, g, f).is_isomorphism()) return false;
  }
  return true;
}

int unitize_demo(std::ostream& out) {
  const Alphabet bits = digits(2);
  const std::vector<std::pair<std::string, UCell>> cells{
      {"⊥", UCell::formal_id(bits)},
      {"u", UCell::cell(universal_u(bits))},
      {"p", UCell::cell(universal_p(bits))},
      {"cpar", UCell::cell(catalog::parity_moore())},
  };
  const UCell unit = cells[0].second;
  bool units = true, triangles = true, pentagons = true;
  for (const auto& [name, c] : cells) {
    units = units && ucompose(unit, c) == c && ucompose(c, unit) == c;
  }
  for (const auto& x : cells) {
    for (const auto& y : cells) triangles = triangles && check_triangle(x.second, y.second);
  }
  std::size_t checked = 0;
  for (const auto& k : cells) {
    for (const auto& h : cells) {
      for (const auto& g : cells) {
        for (const auto& f : cells) {
          pentagons = pentagons && check_upentagon(k.second, h.second, g.second, f.second);
          ++checked;
        }
      }
    }
  }
  out << "cells: ⊥, u, p, cpar over {0,1}\n";
  out << "strict units: " << (units ? "true" : "false") << '\n';
  out << "triangles (" << cells.size() * cells.size() << "): " << (triangles ? "true" : "false") << '\n';
  out << "pentagons (" << checked << "): " << (pentagons ? "true" : "false") << '\n';
  return units && triangles && pentagons ? kOk : kViolated;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mealy and Moore machine algebra toolkit", "machina"};
  app.require_subcommand(1);

  std::string file, file2, output_path, start, word, alphabet_text;
  std::vector<std::string> files;
  std::size_t number = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 0, max_states = 3;

  auto* validate = app.add_subcommand("validate", "Parse and validate a machine file");
  validate->add_option("file", file)->required();

  auto* run_cmd = app.add_subcommand("run", "Run a word from a start state");
  run_cmd->add_option("file", file)->required();
  run_cmd->add_option("--start", start, "start state")->required();
  run_cmd->add_option("--word", word, "symbols separated by spaces or commas")->required();

  auto* compose_cmd = app.add_subcommand("compose", "Cascade FILE1 into FILE2");
  compose_cmd->add_option("second", file)->required();
  compose_cmd->add_option("first", file2)->required();
  compose_cmd->add_option("-o,--output", output_path);

  auto* transform = app.add_subcommand("transform", "Convert or build machines");
  transform->require_subcommand(1);
  transform->add_option("-o,--output", output_path);
  std::vector<std::pair<std::string, CLI::App*>> transforms;
  for (const char* name : {"embed-j", "d1", "moorify", "decapitate"}) {
    auto* sub = transform->add_subcommand(name);
    sub->add_option("file", file)->required();
    sub->add_option("-o,--output", output_path);
    transforms.emplace_back(name, sub);
  }
  for (const char* name : {"u", "p"}) {
    auto* sub = transform->add_subcommand(name);
    sub->add_option("--alphabet", alphabet_text, "comma-separated symbols")->required();
    sub->add_option("-o,--output", output_path);
    transforms.emplace_back(name, sub);
  }

  auto* check = app.add_subcommand("check", "Check a law");
  check->require_subcommand(1);
  check->add_option("--seed", seed, "seed for randomized sweeps");
  auto* soft = check->add_subcommand("soft");
  soft->add_option("file", file)->required();
  auto* n_soft = check->add_subcommand("n-soft");
  n_soft->add_option("n", number)->required()->check(CLI::PositiveNumber);
  n_soft->add_option("file", file)->required();
  auto* pentagon = check->add_subcommand("pentagon");
  pentagon->add_option("files", files, "k h g f")->expected(0, 4);
  pentagon->add_option("--random", samples, "number of random quadruples");
  pentagon->add_option("--max-states", max_states)->check(CLI::PositiveNumber);
  pentagon->add_option("--seed", seed);
  auto* ext = check->add_subcommand("extension-square");
  ext->add_option("maxlen", number)->required()->check(CLI::PositiveNumber);
  ext->add_option("file", file)->required();
  auto* counit = check->add_subcommand("counit");
  counit->add_option("file", file)->required();
  auto* jcompat = check->add_subcommand("j-compat");
  jcompat->add_option("m", file)->required();
  jcompat->add_option("n", file2)->required();

  auto* homs = app.add_subcommand("homs", "List all homomorphisms FILE1 -> FILE2");
  homs->add_option("source", file)->required();
  homs->add_option("target", file2)->required();

  auto* adjunction = app.add_subcommand("adjunction", "Check the D1 / moorify hom bijection");
  adjunction->add_option("moore", file)->required();
  adjunction->add_option("mealy", file2)->required();

  auto* correspondence = app.add_subcommand("correspondence", "Measure the J / decapitate hom correspondence");
  correspondence->add_option("moore", file)->required();
  correspondence->add_option("mealy", file2)->required();

  auto* search = app.add_subcommand("search-identity", "Search for a Moore identity cell");
  search->add_option("--alphabet", alphabet_text)->required();
  search->add_option("--max-states", max_states)->required()->check(CLI::PositiveNumber);
  search->add_option("--probe", files)->required();

  auto* demo = app.add_subcommand("unitize-demo", "Unit, triangle and pentagon laws with formal identities");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) {
      const AnyMachine m = load_machine(file);
      out << "valid: " << kind_name(m) << ", " << state_count(m) << " states\n";
      return kOk;
    }
    if (run_cmd->parsed()) {
      const AnyMachine m = load_machine(file);
      return std::visit(
          [&](const auto& machine) {
            const Word w = parse_word(machine.input(), word);
            const auto p = at(machine, start);
            out << "final: " << machine.output().symbol(run(p, w)) << '\n';
            out << "trace: " << format_word(machine.output(), trace(p, w)) << '\n';
            return int{kOk};
          },
          m);
    }
    if (compose_cmd->parsed()) {
      emit(out, output_path, compose_any(load_machine(file), load_machine(file2)));
      return kOk;
    }
    if (transform->parsed()) {
      for (const auto& [name, sub] : transforms) {
        if (!sub->parsed()) continue;
        if (name == "u") {
          emit(out, output_path, universal_u(alphabet_from(alphabet_text)));
        } else if (name == "p") {
          emit(out, output_path, universal_p(alphabet_from(alphabet_text)));
        } else if (name == "embed-j") {
          emit(out, output_path, embed_j(expect<MooreMachine>(load_machine(file), file)));
        } else if (name == "d1") {
          emit(out, output_path, apply_D1(expect<MooreMachine>(load_machine(file), file)));
        } else if (name == "moorify") {
          emit(out, output_path, moorify(expect<MealyMachine>(load_machine(file), file)));
        } else {
          emit(out, output_path, decapitate(expect<MealyMachine>(load_machine(file), file)));
        }
      }
      return kOk;
    }
    if (check->parsed()) {
      if (soft->parsed()) {
        return verdict(out, "soft", is_soft(expect<MooreMachine>(load_machine(file), file)));
      }
      if (n_soft->parsed()) {
        const auto m = expect<MooreMachine>(load_machine(file), file);
        return verdict(out, "n-soft(" + std::to_string(number) + ")", is_n_soft(m, number));
      }
      if (ext->parsed()) {
        const auto m = expect<MooreMachine>(load_machine(file), file);
        return verdict(out, "extension-square(" + std::to_string(number) + ")",
                       check_extension_square(m, number));
      }
      if (counit->parsed()) {
        return verdict(out, "counit", check_counit(expect<MealyMachine>(load_machine(file), file)));
      }
      if (jcompat->parsed()) {
        const AnyMachine m = load_machine(file), n = load_machine(file2);
        if (std::holds_alternative<MealyMachine>(m) && std::holds_alternative<MealyMachine>(n)) {
          throw Error(Errc::kind_mismatch, "j-compat needs at least one Moore machine");
        }
        const bool holds = std::visit(
            [](const auto& x, const auto& y) {
              if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MealyMachine> &&
                            std::is_same_v<std::decay_t<decltype(y)>, MealyMachine>) {
                return false;
              } else {
                return check_j_compatibilities(x, y);
              }
            },
            m, n);
        return verdict(out, "j-compat", holds);
      }
      if (pentagon->parsed()) {
        if (!files.empty()) {
          if (files.size() != 4) throw Error(Errc::invalid_argument, "pentagon needs four files: k h g f");
          std::vector<AnyMachine> ms;
          for (const auto& f : files) ms.push_back(load_machine(f));
          const bool all_mealy = std::all_of(ms.begin(), ms.end(), [](const AnyMachine& x) {
            return std::holds_alternative<MealyMachine>(x);
          });
          bool holds = false;
          if (all_mealy) {
            const auto& k = expect<MealyMachine>(ms[0], files[0]);
            const auto& h = expect<MealyMachine>(ms[1], files[1]);
            const auto& g = expect<MealyMachine>(ms[2], files[2]);
            const auto& f = expect<MealyMachine>(ms[3], files[3]);
            holds = check_pentagon(k, h, g, f) && associator(h, g, f).is_isomorphism();
          } else {
            const auto& k = expect<MooreMachine>(ms[0], files[0]);
            const auto& h = expect<MooreMachine>(ms[1], files[1]);
            const auto& g = expect<MooreMachine>(ms[2], files[2]);
            const auto& f = expect<MooreMachine>(ms[3], files[3]);
            holds = check_pentagon(k, h, g, f) && associator(h, g, f).is_isomorphism();
          }
          return verdict(out, "pentagon", holds);
        }
        if (samples == 0) throw Error(Errc::invalid_argument, "give four files or --random N");
        std::mt19937_64 rng(seed);
        const bool holds = random_pentagons<MealyMachine>(rng, samples, max_states) &&
                           random_pentagons<MooreMachine>(rng, samples, max_states);
        return verdict(out, "pentagon (" + std::to_string(samples) + " random quadruples per kind, seed " +
                                std::to_string(seed) + ")",
                       holds);
      }
    }
    if (homs->parsed()) {
      const AnyMachine a = load_machine(file), b = load_machine(file2);
      if (a.index() != b.index()) throw Error(Errc::kind_mismatch, "machines must be of the same kind");
      std::visit(
          [&](const auto& x) {
            using M = std::decay_t<decltype(x)>;
            const M& y = std::get<M>(b);
            render_homs(out, "homs", x, y, enumerate_homs(x, y));
          },
          a);
      return kOk;
    }
    if (adjunction->parsed()) {
      const auto n = expect<MooreMachine>(load_machine(file), file);
      const auto m = expect<MealyMachine>(load_machine(file2), file2);
      const auto d1 = apply_D1(n);
      const auto right = moorify(m);
      return render_report(out, check_adjunction_D1(n, d1, m, right), n, d1, m, right,
                           "left homs(D1(n), m)", "right homs(n, moorify(m))");
    }
    if (correspondence->parsed()) {
      const auto n = expect<MooreMachine>(load_machine(file), file);
      const auto m = expect<MealyMachine>(load_machine(file2), file2);
      const auto report = check_hom_correspondence(n, m);
      return render_report(out, report, n, embed_j(n), m, decapitate(m), "left homs(J(n), m)",
                           "right homs(n, decapitate(m))");
    }
    if (search->parsed()) {
      const Alphabet a = alphabet_from(alphabet_text);
      std::vector<MealyMachine> probes;
      for (const auto& f : files) probes.push_back(expect<MealyMachine>(load_machine(f), f));
      const auto report = search_moore_identity(a, probes, max_states);
      out << "candidates: " << report.candidates.size() << '\n';
      std::vector<std::size_t> failures(probes.size(), 0);
      for (const auto& c : report.candidates) {
        if (c.first_failing_probe) ++failures[*c.first_failing_probe];
      }
      for (std::size_t p = 0; p < probes.size(); ++p) {
        out << "  rejected first by " << files[p] << ": " << failures[p] << '\n';
      }
      out << "survivors: " << report.survivors.size() << '\n';
      for (const auto& s : report.survivors) out << serialize(s);
      if (report.probes_insufficient) {
        out << "warning: no probe has letter-dependent output; the probes cannot separate Moore cells "
               "from identities\n";
      }
      return report.survivors.empty() ? kOk : kViolated;
    }
    if (demo->parsed()) return unitize_demo(out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace machina::cli
