#ifndef MACHINA_LAB_HPP
#define MACHINA_LAB_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "machina/machine.hpp"

namespace machina {

inline constexpr std::uint64_t kCandidateLimit = 10'000'000;

/// |target|^|source|, saturating just above kCandidateLimit.
std::uint64_t candidate_count(std::size_t source_states, std::size_t target_states) noexcept;

/// All homomorphisms between two machines, in lexicographic order of their
/// image tables. `candidates` is the number of total state maps covered.
struct HomSet {
  std::vector<StateMap> homs;
  std::uint64_t candidates = 0;

  bool contains(const StateMap& phi) const;
  std::size_t size() const noexcept { return homs.size(); }
};

/// Searches every total state map, assigning images state by state in
/// lexicographic order and discarding a branch as soon as one of the
/// homomorphism equations between assigned states fails.
template <Machine M>
HomSet enumerate_homs(const M& source, const M& target);

extern template HomSet enumerate_homs(const MealyMachine&, const MealyMachine&);
extern template HomSet enumerate_homs(const MooreMachine&, const MooreMachine&);

enum class Side { left, right };

struct Counterexample {
  Side side;
  std::size_t index;   // position in the left or right hom-set
  StateMap image;      // the transposed map that failed
  std::string reason;
};

/// Outcome of transposing between a Mealy-side hom-set (left) and a
/// Moore-side hom-set (right) with φ ↦ (e ↦ (n.out(e), φ(e))) and its inverse
/// (second projection).
struct BijectionReport {
  HomSet left;
  HomSet right;
  std::vector<std::pair<std::size_t, std::size_t>> pairing;  // (left index, right index)
  std::optional<Counterexample> failure;

  bool success() const noexcept { return !failure.has_value(); }
};

/// left = homs(apply_D1(n), m), right = homs(n, moorify(m)).
BijectionReport check_adjunction_D1(const MooreMachine& n, const MealyMachine& m);

/// As above with the two transformed machines supplied by the caller, which
/// must be apply_D1(n) and moorify(m). Lets exhaustive sweeps build each
/// transform once.
BijectionReport check_adjunction_D1(const MooreMachine& n, const MealyMachine& d1_n,
                                    const MealyMachine& m, const MooreMachine& moorified_m);

/// left = homs(embed_j(n), m), right = homs(n, decapitate(m)); n must be soft.
/// The report records whether the transposition is a bijection here; it does
/// not assume it.
BijectionReport check_hom_correspondence(const MooreMachine& n, const MealyMachine& m);

/// As above with embed_j(n) and decapitate(m) supplied by the caller.
BijectionReport check_hom_correspondence(const MooreMachine& n, const MealyMachine& j_n,
                                         const MealyMachine& m, const MooreMachine& decapitated_m);

/// The projection (b,e) ↦ e is a Mealy homomorphism apply_D1(moorify(m)) → m.
bool check_counit(const MealyMachine& m);

/// For a homomorphism phi: m1 → m2, (b,e) ↦ (b, phi(e)) is a Moore
/// homomorphism moorify(m1) → moorify(m2). Throws not_a_homomorphism if phi
/// is not one.
bool check_moorify_functorial(const MealyMachine& m1, const MealyMachine& m2, const StateMap& phi);

/// Every machine over the given alphabets with exactly `states` states,
/// in a fixed order (delta table as an odometer, then the output table).
std::vector<MooreMachine> enumerate_moore(const Alphabet& input, const Alphabet& output,
                                          std::size_t states);
std::vector<MealyMachine> enumerate_mealy(const Alphabet& input, const Alphabet& output,
                                          std::size_t states);

/// Uniformly random tables with states named s0, s1, ...
MealyMachine random_mealy(std::mt19937_64& rng, const Alphabet& input, const Alphabet& output,
                          std::size_t states);
MooreMachine random_moore(std::mt19937_64& rng, const Alphabet& input, const Alphabet& output,
                          std::size_t states);

struct IdentityCandidate {
  MooreMachine machine;
  std::optional<std::size_t> first_failing_probe;  // empty = passed every probe
};

struct IdentitySearchReport {
  std::vector<IdentityCandidate> candidates;
  std::vector<MooreMachine> survivors;
  /// No probe has letter-dependent output, so the probes cannot tell a Moore
  /// machine from an identity.
  bool probes_insufficient = false;
};

/// A candidate U passes probe m when for every state e of m some state u
/// makes J(U⋄m)@(u,e) bisimilar to m@e and some state u' makes
/// J(m⋄U)@(e,u') bisimilar to m@e.
bool acts_as_identity_on(const MooreMachine& u, const MealyMachine& probe);

IdentitySearchReport search_moore_identity(const Alphabet& a, const std::vector<MealyMachine>& probes,
                                           std::size_t max_states);

}  // namespace machina

#endif  // MACHINA_LAB_HPP
