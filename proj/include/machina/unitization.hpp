#ifndef MACHINA_UNITIZATION_HPP
#define MACHINA_UNITIZATION_HPP

#include <optional>
#include <variant>

#include "machina/machine.hpp"

namespace machina {

/// The formal identity ⊥ at an object. It has no carrier.
struct FormalId {
  Alphabet at;
  friend bool operator==(const FormalId&, const FormalId&) = default;
};

/// A 1-cell of the unitized Moore structure: a Moore machine or a formal
/// identity.
class UCell {
 public:
  static UCell formal_id(Alphabet at) { return UCell(FormalId{std::move(at)}); }
  static UCell cell(MooreMachine m) { return UCell(std::move(m)); }

  bool is_formal_id() const noexcept { return std::holds_alternative<FormalId>(value_); }
  /// Throws no_such_cell on a formal identity.
  const MooreMachine& machine() const;
  const Alphabet& source() const noexcept;
  const Alphabet& target() const noexcept;

  friend bool operator==(const UCell&, const UCell&) = default;

 private:
  explicit UCell(std::variant<FormalId, MooreMachine> v) : value_(std::move(v)) {}
  std::variant<FormalId, MooreMachine> value_;
};

/// c2 ⋄ c1, with formal identities acting as strict units.
UCell ucompose(const UCell& c2, const UCell& c1);

/// A 2-cell of the unitized structure. Between two machines it is a
/// homomorphism; on a formal identity only the identity exists; there are
/// no 2-cells between a formal identity and a machine.
class UMap {
 public:
  static UMap identity(const UCell& c);
  /// Throws no_such_cell if either side is a formal identity and
  /// not_a_homomorphism if phi is not a homomorphism.
  static UMap between(const UCell& source, const UCell& target, StateMap phi);
  /// The unique 2-cell between two formal identities at the same object.
  /// Throws no_such_cell for any other pair.
  static UMap between(const UCell& source, const UCell& target);

  const UCell& source() const noexcept { return source_; }
  const UCell& target() const noexcept { return target_; }
  bool is_identity_token() const noexcept { return !map_.has_value(); }
  const StateMap& map() const;

  friend bool operator==(const UMap&, const UMap&) = default;

 private:
  UMap(UCell s, UCell t, std::optional<StateMap> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

  UCell source_;
  UCell target_;
  std::optional<StateMap> map_;

  friend UMap ucompose2(const UMap&, const UMap&);
  friend UMap vcompose(const UMap&, const UMap&);
  friend UMap uassociator(const UCell&, const UCell&, const UCell&);
};

/// Horizontal composite psi ⋄ phi. Identity tokens are strict units.
UMap ucompose2(const UMap& psi, const UMap& phi);

/// Vertical composite second ∘ first.
UMap vcompose(const UMap& second, const UMap& first);

/// (h⋄g)⋄f → h⋄(g⋄f); the identity whenever a formal identity is involved.
UMap uassociator(const UCell& h, const UCell& g, const UCell& f);

/// ⊥⋄c → c and c⋄⊥ → c; both are identities.
UMap left_unitor(const UCell& c);
UMap right_unitor(const UCell& c);

/// (1_X ⋄ λ_Y) ∘ α_{X,⊥,Y} = ρ_X ⋄ 1_Y with ⊥ at the object between them.
bool check_triangle(const UCell& x, const UCell& y);

/// The pentagon for (k, h, g, f) evaluated with unitized cells and maps.
bool check_upentagon(const UCell& k, const UCell& h, const UCell& g, const UCell& f);

}  // namespace machina

#endif  // MACHINA_UNITIZATION_HPP
