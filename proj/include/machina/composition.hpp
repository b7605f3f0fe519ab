#ifndef MACHINA_COMPOSITION_HPP
#define MACHINA_COMPOSITION_HPP

#include <string>

#include "machina/machine.hpp"

namespace machina {

// Composite carriers are ordered pairs (f, e): f a state of the second
// (downstream) machine, e a state of the first. The pair is stored at index
// f * |E| + e and named "⟨f,e⟩".

inline StateIndex pair_index(StateIndex outer, StateIndex inner, std::size_t inner_size) noexcept {
  return static_cast<StateIndex>(outer * inner_size + inner);
}

std::string pair_name(const std::string& outer, const std::string& inner);

/// Cascade of two Mealy machines: delta((f,e),a) = (d₂(f, s₁(e,a)), d₁(e,a)),
/// out((f,e),a) = s₂(f, s₁(e,a)).
MealyMachine compose_mealy(const MealyMachine& second, const MealyMachine& first);

/// Cascade of two Moore machines: delta((f,e),a) = (d₂(f, s₁(e)), d₁(e,a)),
/// out((f,e)) = s₂(f).
MooreMachine compose_moore(const MooreMachine& second, const MooreMachine& first);

/// Moore after Mealy. The composite is Moore: out((f,e)) = n.out(f).
MooreMachine ltimes(const MooreMachine& n, const MealyMachine& m);

/// Mealy after Moore. The composite is Moore: out((e,f)) = m.out(e, n.out(f)).
MooreMachine rtimes(const MealyMachine& m, const MooreMachine& n);

// Overload set used by the kind-generic coherence code.
inline MealyMachine compose(const MealyMachine& second, const MealyMachine& first) {
  return compose_mealy(second, first);
}
inline MooreMachine compose(const MooreMachine& second, const MooreMachine& first) {
  return compose_moore(second, first);
}

/// Horizontal composite of 2-cells: (f,e) ↦ (outer(f), inner(e)) on the
/// composite carriers.
StateMap horizontal(const StateMap& outer, const StateMap& inner);

/// An invertible 2-cell together with the machines it relates.
template <Machine M>
struct StateBijection {
  M source;
  M target;
  StateMap forward;
  StateMap backward;

  /// forward and backward are mutually inverse and both are homomorphisms.
  bool is_isomorphism() const {
    const auto id_source = StateMap::identity(source.num_states());
    const auto id_target = StateMap::identity(target.num_states());
    return compose(backward, forward) == id_source && compose(forward, backward) == id_target &&
           is_homomorphism(source, target, forward) && is_homomorphism(target, source, backward);
  }
};

/// Re-bracketing ((eh,eg),ef) ↦ (eh,(eg,ef)) from (h⋄g)⋄f to h⋄(g⋄f).
template <Machine M>
StateBijection<M> associator(const M& h, const M& g, const M& f) {
  StateBijection<M> alpha{compose(compose(h, g), f), compose(h, compose(g, f)), {}, {}};
  const std::size_t nh = h.num_states(), ng = g.num_states(), nf = f.num_states();
  const std::size_t total = nh * ng * nf;
  alpha.forward = {std::vector<StateIndex>(total), total};
  alpha.backward = {std::vector<StateIndex>(total), total};
  for (StateIndex eh = 0; eh < nh; ++eh) {
    for (StateIndex eg = 0; eg < ng; ++eg) {
      for (StateIndex ef = 0; ef < nf; ++ef) {
        const StateIndex left = pair_index(pair_index(eh, eg, ng), ef, nf);
        const StateIndex right = pair_index(eh, pair_index(eg, ef, nf), ng * nf);
        alpha.forward.image[left] = right;
        alpha.backward.image[right] = left;
      }
    }
  }
  return alpha;
}

/// Evaluates both legs of the pentagon from ((k⋄h)⋄g)⋄f to k⋄(h⋄(g⋄f)) and
/// compares them as functions. Every edge is also required to be a
/// homomorphism between the machines it connects.
template <Machine M>
bool check_pentagon(const M& k, const M& h, const M& g, const M& f) {
  const auto a_kh_g_f = associator(compose(k, h), g, f);   // ((kh)g)f → (kh)(gf)
  const auto a_k_h_gf = associator(k, h, compose(g, f));   // (kh)(gf) → k(h(gf))
  const auto a_k_h_g = associator(k, h, g);                // (kh)g → k(hg)
  const auto a_k_hg_f = associator(k, compose(h, g), f);   // (k(hg))f → k((hg)f)
  const auto a_h_g_f = associator(h, g, f);                // (hg)f → h(gf)

  const M top_source = a_k_h_g.source;  // (kh)g
  const M k_hg_f = a_k_hg_f.source;     // (k(hg))f
  const M k_hgf = a_k_hg_f.target;      // k((hg)f)

  // α_{k,h,g} ⋄ 1_f : ((kh)g)f → (k(hg))f
  const StateMap left_whisker = horizontal(a_k_h_g.forward, StateMap::identity(f.num_states()));
  // 1_k ⋄ α_{h,g,f} : k((hg)f) → k(h(gf))
  const StateMap right_whisker = horizontal(StateMap::identity(k.num_states()), a_h_g_f.forward);

  const M source = compose(top_source, f);
  const M sink = a_k_h_gf.target;
  if (!(source == a_kh_g_f.source) || !(a_kh_g_f.target == a_k_h_gf.source)) return false;
  if (!is_homomorphism(source, k_hg_f, left_whisker)) return false;
  if (!is_homomorphism(k_hgf, sink, right_whisker)) return false;
  if (!is_homomorphism(a_kh_g_f.source, a_kh_g_f.target, a_kh_g_f.forward)) return false;
  if (!is_homomorphism(a_k_h_gf.source, a_k_h_gf.target, a_k_h_gf.forward)) return false;
  if (!is_homomorphism(k_hg_f, k_hgf, a_k_hg_f.forward)) return false;

  const StateMap upper = compose(a_k_h_gf.forward, a_kh_g_f.forward);
  const StateMap lower = compose(right_whisker, compose(a_k_hg_f.forward, left_whisker));
  return upper == lower;
}

/// m Mealy, n Moore: J(m⋄n) = m⋄Jn.
bool check_j_compatibilities(const MealyMachine& m, const MooreMachine& n);
/// m Moore, n Mealy: J(m⋄n) = Jm⋄n.
bool check_j_compatibilities(const MooreMachine& m, const MealyMachine& n);
/// m, n Moore: m⋄Jn = Jm⋄n and J(m⋄n) = Jm⋄Jn.
bool check_j_compatibilities(const MooreMachine& m, const MooreMachine& n);

}  // namespace machina

#endif  // MACHINA_COMPOSITION_HPP
