#include "machina/lab.hpp"

#include <algorithm>

#include "machina/composition.hpp"
#include "machina/semantics.hpp"
#include "machina/universal.hpp"

namespace machina {

std::uint64_t candidate_count(std::size_t source_states, std::size_t target_states) noexcept {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < source_states; ++i) {
    count *= target_states;
    if (count > kCandidateLimit) return kCandidateLimit + 1;
  }
  return count;
}

bool HomSet::contains(const StateMap& phi) const {
  return std::binary_search(homs.begin(), homs.end(), phi);
}

namespace {

template <Machine M>
bool same_output_row(const M& source, StateIndex e, const M& target, StateIndex t) {
  if constexpr (is_moore_v<M>) {
    return source.out(e) == target.out(t);
  } else {
    for (Letter a = 0; a < source.input().size(); ++a) {
      if (source.out(e, a) != target.out(t, a)) return false;
    }
    return true;
  }
}

}  // namespace

template <Machine M>
HomSet enumerate_homs(const M& source, const M& target) {
  if (!(source.input() == target.input()) || !(source.output() == target.output())) {
    throw Error(Errc::endpoint_mismatch, "hom-set between machines with different alphabets");
  }
  const std::size_t ns = source.num_states();
  const std::size_t nt = target.num_states();
  const std::size_t letters = source.input().size();
  HomSet result;
  result.candidates = candidate_count(ns, nt);
  if (result.candidates > kCandidateLimit) {
    throw Error(Errc::enumeration_too_large, "more than 10^7 candidate state maps");
  }

  // Equations φ(d(k,a)) = d'(φ(k),a) are checked when the later of k and
  // d(k,a) is assigned. back_edges holds, for each state i, the pairs (k,a)
  // with k < i and d(k,a) = i, starting at back_begin[i].
  thread_local std::vector<std::size_t> back_begin;
  thread_local std::vector<std::size_t> fill;
  thread_local std::vector<std::pair<StateIndex, Letter>> back_edges;
  back_begin.assign(ns + 1, 0);
  for (StateIndex k = 0; k < ns; ++k) {
    for (Letter a = 0; a < letters; ++a) {
      const StateIndex j = source.next(k, a);
      if (k < j) ++back_begin[j + 1];
    }
  }
  for (std::size_t i = 0; i < ns; ++i) back_begin[i + 1] += back_begin[i];
  back_edges.resize(back_begin[ns]);
  fill.assign(back_begin.begin(), back_begin.end() - 1);
  for (StateIndex k = 0; k < ns; ++k) {
    for (Letter a = 0; a < letters; ++a) {
      const StateIndex j = source.next(k, a);
      if (k < j) back_edges[fill[j]++] = {k, a};
    }
  }

  auto consistent = [&](const std::vector<StateIndex>& image, StateIndex i, StateIndex t) {
    if (!same_output_row(source, i, target, t)) return false;
    for (Letter a = 0; a < letters; ++a) {
      const StateIndex j = source.next(i, a);
      if (j < i && image[j] != target.next(t, a)) return false;
      if (j == i && t != target.next(t, a)) return false;
    }
    for (std::size_t b = back_begin[i]; b < back_begin[i + 1]; ++b) {
      const auto [k, a] = back_edges[b];
      if (t != target.next(image[k], a)) return false;
    }
    return true;
  };

  // Iterative depth-first search; image[i] == nt marks "not yet tried".
  thread_local std::vector<StateIndex> image;
  image.assign(ns, static_cast<StateIndex>(nt));
  std::size_t depth = 0;
  while (true) {
    StateIndex& slot = image[depth];
    slot = slot == nt ? 0 : slot + 1;
    while (slot < nt && !consistent(image, static_cast<StateIndex>(depth), slot)) ++slot;
    if (slot < nt) {
      if (depth + 1 == ns) {
        result.homs.push_back(StateMap{image, nt});
      } else {
        ++depth;
        image[depth] = static_cast<StateIndex>(nt);
      }
      continue;
    }
    slot = static_cast<StateIndex>(nt);
    if (depth == 0) break;
    --depth;
  }
  return result;
}

template HomSet enumerate_homs(const MealyMachine&, const MealyMachine&);
template HomSet enumerate_homs(const MooreMachine&, const MooreMachine&);

namespace {

// right_target carries states (b,e) at b * |E_m| + e with b an output letter.
BijectionReport transpose(const MooreMachine& n, const MealyMachine& left_source,
                          const MealyMachine& m, const MooreMachine& right_target) {
  BijectionReport report{enumerate_homs(left_source, m), enumerate_homs(n, right_target), {}, {}};
  const std::size_t nm = m.num_states();

  for (std::size_t i = 0; i < report.left.size(); ++i) {
    const StateMap& phi = report.left.homs[i];
    StateMap psi{std::vector<StateIndex>(phi.source_size()), right_target.num_states()};
    for (StateIndex e = 0; e < phi.source_size(); ++e) {
      psi.image[e] = pair_index(n.out(e), phi.image[e], nm);
    }
    auto it = std::lower_bound(report.right.homs.begin(), report.right.homs.end(), psi);
    if (it == report.right.homs.end() || !(*it == psi)) {
      report.failure = Counterexample{Side::left, i, std::move(psi),
                                      "transpose of a left hom is not a right hom"};
      report.pairing.clear();
      return report;
    }
    report.pairing.emplace_back(i, static_cast<std::size_t>(it - report.right.homs.begin()));
  }

  for (std::size_t j = 0; j < report.right.size(); ++j) {
    const StateMap& psi = report.right.homs[j];
    StateMap phi{std::vector<StateIndex>(psi.source_size()), nm};
    bool first_is_output = true;
    for (StateIndex e = 0; e < psi.source_size(); ++e) {
      phi.image[e] = static_cast<StateIndex>(psi.image[e] % nm);
      if (psi.image[e] / nm != n.out(e)) first_is_output = false;
    }
    if (!report.left.contains(phi)) {
      report.failure = Counterexample{Side::right, j, std::move(phi),
                                      "projection of a right hom is not a left hom"};
      report.pairing.clear();
      return report;
    }
    if (!first_is_output) {
      report.failure = Counterexample{Side::right, j, std::move(phi),
                                      "right hom does not round-trip through its projection"};
      report.pairing.clear();
      return report;
    }
  }
  return report;
}

}  // namespace

BijectionReport check_adjunction_D1(const MooreMachine& n, const MealyMachine& m) {
  return check_adjunction_D1(n, apply_D1(n), m, moorify(m));
}

BijectionReport check_adjunction_D1(const MooreMachine& n, const MealyMachine& d1_n,
                                    const MealyMachine& m, const MooreMachine& moorified_m) {
  return transpose(n, d1_n, m, moorified_m);
}

BijectionReport check_hom_correspondence(const MooreMachine& n, const MealyMachine& m) {
  return check_hom_correspondence(n, embed_j(n), m, decapitate(m));
}

BijectionReport check_hom_correspondence(const MooreMachine& n, const MealyMachine& j_n,
                                         const MealyMachine& m, const MooreMachine& decapitated_m) {
  if (!is_soft(n)) throw Error(Errc::not_soft, "the Moore machine must be soft");
  return transpose(n, j_n, m, decapitated_m);
}

bool check_counit(const MealyMachine& m) {
  const MealyMachine unit_side = apply_D1(moorify(m));
  const std::size_t nm = m.num_states();
  StateMap projection{std::vector<StateIndex>(unit_side.num_states()), nm};
  for (StateIndex s = 0; s < unit_side.num_states(); ++s) {
    projection.image[s] = static_cast<StateIndex>(s % nm);
  }
  return is_homomorphism(unit_side, m, projection);
}

bool check_moorify_functorial(const MealyMachine& m1, const MealyMachine& m2, const StateMap& phi) {
  if (!is_homomorphism(m1, m2, phi)) {
    throw Error(Errc::not_a_homomorphism, "the state map is not a Mealy homomorphism");
  }
  const std::size_t letters = m1.output().size();
  StateMap lifted{std::vector<StateIndex>(letters * m1.num_states()), letters * m2.num_states()};
  for (Letter b = 0; b < letters; ++b) {
    for (StateIndex e = 0; e < m1.num_states(); ++e) {
      lifted.image[pair_index(b, e, m1.num_states())] = pair_index(b, phi.image[e], m2.num_states());
    }
  }
  return is_homomorphism(moorify(m1), moorify(m2), lifted);
}

namespace {

std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

// Advances an odometer with the given radix; false once it wraps to zero.
bool advance(std::vector<StateIndex>& digits, std::size_t radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

template <Machine M>
std::vector<M> enumerate_machines(const Alphabet& input, const Alphabet& output, std::size_t states) {
  if (states == 0) throw Error(Errc::invalid_argument, "a machine needs at least one state");
  const std::size_t cells = states * input.size();
  const std::size_t out_cells = is_moore_v<M> ? states : cells;
  const std::uint64_t total = candidate_count(cells, states) * candidate_count(out_cells, output.size());
  if (candidate_count(cells, states) > kCandidateLimit ||
      candidate_count(out_cells, output.size()) > kCandidateLimit || total > kCandidateLimit) {
    throw Error(Errc::enumeration_too_large, "more than 10^7 machines to enumerate");
  }
  const auto names = state_names(states);
  std::vector<M> machines;
  machines.reserve(total);
  std::vector<StateIndex> delta(cells, 0);
  do {
    std::vector<StateIndex> out(out_cells, 0);
    do {
      machines.emplace_back(input, output, names, delta, std::vector<Letter>(out.begin(), out.end()));
    } while (advance(out, output.size()));
  } while (advance(delta, states));
  return machines;
}

}  // namespace

namespace {

template <Machine M>
M random_machine(std::mt19937_64& rng, const Alphabet& input, const Alphabet& output, std::size_t states) {
  if (states == 0) throw Error(Errc::invalid_argument, "a machine needs at least one state");
  const std::size_t cells = states * input.size();
  std::uniform_int_distribution<StateIndex> pick_state(0, static_cast<StateIndex>(states - 1));
  std::uniform_int_distribution<Letter> pick_letter(0, static_cast<Letter>(output.size() - 1));
  std::vector<StateIndex> delta(cells);
  for (auto& d : delta) d = pick_state(rng);
  std::vector<Letter> out(is_moore_v<M> ? states : cells);
  for (auto& b : out) b = pick_letter(rng);
  return M(input, output, state_names(states), std::move(delta), std::move(out));
}

}  // namespace

MealyMachine random_mealy(std::mt19937_64& rng, const Alphabet& input, const Alphabet& output,
                          std::size_t states) {
  return random_machine<MealyMachine>(rng, input, output, states);
}

MooreMachine random_moore(std::mt19937_64& rng, const Alphabet& input, const Alphabet& output,
                          std::size_t states) {
  return random_machine<MooreMachine>(rng, input, output, states);
}

std::vector<MooreMachine> enumerate_moore(const Alphabet& input, const Alphabet& output,
                                          std::size_t states) {
  return enumerate_machines<MooreMachine>(input, output, states);
}

std::vector<MealyMachine> enumerate_mealy(const Alphabet& input, const Alphabet& output,
                                          std::size_t states) {
  return enumerate_machines<MealyMachine>(input, output, states);
}

namespace {

// True iff every state e of the probe has some u with composite@index(u,e)
// bisimilar to probe@e.
template <class Index>
bool every_state_matched(const MealyMachine& composite, const MealyMachine& probe,
                         std::size_t cell_states, Index index) {
  const auto blocks = behavior_classes(composite, probe);
  const std::size_t offset = composite.num_states();
  for (StateIndex e = 0; e < probe.num_states(); ++e) {
    bool matched = false;
    for (StateIndex u = 0; u < cell_states && !matched; ++u) {
      matched = blocks[index(u, e)] == blocks[offset + e];
    }
    if (!matched) return false;
  }
  return true;
}

bool letter_dependent(const MealyMachine& m) {
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    for (Letter a = 1; a < m.input().size(); ++a) {
      if (m.out(e, a) != m.out(e, 0)) return true;
    }
  }
  return false;
}

}  // namespace

bool acts_as_identity_on(const MooreMachine& u, const MealyMachine& probe) {
  const std::size_t nu = u.num_states();
  const std::size_t ne = probe.num_states();
  const bool left_unit = every_state_matched(
      embed_j(ltimes(u, probe)), probe, nu,
      [&](StateIndex x, StateIndex e) { return pair_index(x, e, ne); });
  if (!left_unit) return false;
  return every_state_matched(embed_j(rtimes(probe, u)), probe, nu,
                             [&](StateIndex x, StateIndex e) { return pair_index(e, x, nu); });
}

IdentitySearchReport search_moore_identity(const Alphabet& a, const std::vector<MealyMachine>& probes,
                                           std::size_t max_states) {
  for (const auto& probe : probes) {
    if (!(probe.input() == a) || !(probe.output() == a)) {
      throw Error(Errc::endpoint_mismatch, "identity probes must be endomachines on the alphabet");
    }
  }
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_states; ++n) {
    total += candidate_count(n * a.size(), n) * candidate_count(n, a.size());
    if (total > kCandidateLimit) {
      throw Error(Errc::enumeration_too_large, "more than 10^7 candidate Moore machines");
    }
  }

  IdentitySearchReport report;
  report.probes_insufficient = std::none_of(probes.begin(), probes.end(), letter_dependent);
  for (std::size_t n = 1; n <= max_states; ++n) {
    for (auto& candidate : enumerate_moore(a, a, n)) {
      std::optional<std::size_t> failing;
      for (std::size_t p = 0; p < probes.size(); ++p) {
        if (!acts_as_identity_on(candidate, probes[p])) {
          failing = p;
          break;
        }
      }
      if (!failing) report.survivors.push_back(candidate);
      report.candidates.push_back({std::move(candidate), failing});
    }
  }
  return report;
}

}  // namespace machina
