#include "machina/unitization.hpp"

#include "machina/composition.hpp"

namespace machina {

const MooreMachine& UCell::machine() const {
  if (const auto* m = std::get_if<MooreMachine>(&value_)) return *m;
  throw Error(Errc::no_such_cell, "a formal identity has no machine");
}

const Alphabet& UCell::source() const noexcept {
  if (const auto* id = std::get_if<FormalId>(&value_)) return id->at;
  return std::get<MooreMachine>(value_).input();
}

const Alphabet& UCell::target() const noexcept {
  if (const auto* id = std::get_if<FormalId>(&value_)) return id->at;
  return std::get<MooreMachine>(value_).output();
}

UCell ucompose(const UCell& c2, const UCell& c1) {
  if (!(c1.target() == c2.source())) {
    throw Error(Errc::endpoint_mismatch, "cells are not composable");
  }
  if (c2.is_formal_id()) return c1;
  if (c1.is_formal_id()) return c2;
  return UCell::cell(compose_moore(c2.machine(), c1.machine()));
}

UMap UMap::identity(const UCell& c) {
  if (c.is_formal_id()) return UMap(c, c, std::nullopt);
  return UMap(c, c, StateMap::identity(c.machine().num_states()));
}

UMap UMap::between(const UCell& source, const UCell& target, StateMap phi) {
  if (source.is_formal_id() || target.is_formal_id()) {
    throw Error(Errc::no_such_cell, "no state map can start or end at a formal identity");
  }
  if (!is_homomorphism(source.machine(), target.machine(), phi)) {
    throw Error(Errc::not_a_homomorphism, "state map is not a Moore homomorphism");
  }
  return UMap(source, target, std::move(phi));
}

UMap UMap::between(const UCell& source, const UCell& target) {
  if (source.is_formal_id() && target.is_formal_id() && source == target) {
    return UMap(source, target, std::nullopt);
  }
  throw Error(Errc::no_such_cell, "the only map without a state table is the identity on ⊥");
}

const StateMap& UMap::map() const {
  if (!map_) throw Error(Errc::no_such_cell, "the identity on a formal identity has no state map");
  return *map_;
}

UMap ucompose2(const UMap& psi, const UMap& phi) {
  if (!(phi.target_.target() == psi.target_.source()) || !(phi.source_.target() == psi.source_.source())) {
    throw Error(Errc::endpoint_mismatch, "2-cells are not horizontally composable");
  }
  if (psi.is_identity_token()) return phi;
  if (phi.is_identity_token()) return psi;
  return UMap(ucompose(psi.source_, phi.source_), ucompose(psi.target_, phi.target_),
              horizontal(*psi.map_, *phi.map_));
}

UMap vcompose(const UMap& second, const UMap& first) {
  if (!(first.target_ == second.source_)) {
    throw Error(Errc::endpoint_mismatch, "2-cells are not vertically composable");
  }
  if (first.is_identity_token()) return first;
  return UMap(first.source_, second.target_, compose(*second.map_, *first.map_));
}

UMap uassociator(const UCell& h, const UCell& g, const UCell& f) {
  const UCell left = ucompose(ucompose(h, g), f);
  if (h.is_formal_id() || g.is_formal_id() || f.is_formal_id()) {
    const UCell right = ucompose(h, ucompose(g, f));
    if (!(left == right)) {
      throw Error(Errc::invalid_argument, "bracketings around a formal identity differ");
    }
    return UMap::identity(left);
  }
  auto alpha = associator(h.machine(), g.machine(), f.machine());
  return UMap(left, UCell::cell(std::move(alpha.target)), std::move(alpha.forward));
}

UMap left_unitor(const UCell& c) { return UMap::identity(c); }

UMap right_unitor(const UCell& c) { return UMap::identity(c); }

bool check_triangle(const UCell& x, const UCell& y) {
  const UCell unit = UCell::formal_id(x.source());
  const UMap alpha = uassociator(x, unit, y);
  const UMap via_associator = vcompose(ucompose2(UMap::identity(x), left_unitor(y)), alpha);
  const UMap direct = ucompose2(right_unitor(x), UMap::identity(y));
  return via_associator == direct;
}

bool check_upentagon(const UCell& k, const UCell& h, const UCell& g, const UCell& f) {
  const UCell kh = ucompose(k, h);
  const UCell hg = ucompose(h, g);
  const UCell gf = ucompose(g, f);
  const UMap upper = vcompose(uassociator(k, h, gf), uassociator(kh, g, f));
  const UMap lower = vcompose(
      ucompose2(UMap::identity(k), uassociator(h, g, f)),
      vcompose(uassociator(k, hg, f), ucompose2(uassociator(k, h, g), UMap::identity(f))));
  return upper == lower;
}

}  // namespace machina
