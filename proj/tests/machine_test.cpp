#include <gtest/gtest.h>

#include <random>

#include "machina/catalog.hpp"
#include "machina/composition.hpp"
#include "machina/lab.hpp"
#include "machina/machine.hpp"

using namespace machina;

namespace {

RawMachine par_raw() {
  RawMachine raw;
  raw.kind = "mealy";
  raw.input = {"0", "1"};
  raw.output = {"0", "1"};
  raw.states = {"q0", "q1"};
  raw.delta = {{"q0", {{"0", "q0"}, {"1", "q1"}}}, {"q1", {{"0", "q1"}, {"1", "q0"}}}};
  raw.out = LetterKeyedTable{{"q0", {{"0", "0"}, {"1", "1"}}}, {"q1", {{"0", "1"}, {"1", "0"}}}};
  return raw;
}

RawMachine cpar_raw() {
  RawMachine raw = par_raw();
  raw.kind = "moore";
  raw.out = StateKeyedTable{{"q0", "0"}, {"q1", "1"}};
  return raw;
}

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::invalid_argument;
}

}  // namespace

TEST(Validate, ParityIsValid) {
  const MealyMachine m = validate_mealy(par_raw());
  EXPECT_EQ(m, catalog::parity());
  EXPECT_EQ(m.out(1, 0), 1u);
  EXPECT_EQ(m.next(1, 1), 0u);
}

TEST(Validate, MissingTransition) {
  RawMachine raw = par_raw();
  raw.delta["q1"].erase("1");
  try {
    validate_mealy(raw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::missing_entry);
    EXPECT_EQ(e.where(), "delta.q1.1");
  }
}

TEST(Validate, OutputOutsideAlphabet) {
  RawMachine raw = par_raw();
  std::get<LetterKeyedTable>(raw.out)["q0"]["0"] = "2";
  EXPECT_EQ(error_of([&] { validate_mealy(raw); }), Errc::unknown_symbol);
}

TEST(Validate, UndeclaredStateOrLetterKeys) {
  RawMachine raw = par_raw();
  raw.delta["q2"] = {{"0", "q0"}, {"1", "q0"}};
  EXPECT_EQ(error_of([&] { validate_mealy(raw); }), Errc::unknown_symbol);
  raw = par_raw();
  raw.delta["q0"]["x"] = "q0";
  EXPECT_EQ(error_of([&] { validate_mealy(raw); }), Errc::unknown_symbol);
  raw = par_raw();
  raw.delta["q0"]["0"] = "nowhere";
  EXPECT_EQ(error_of([&] { validate_mealy(raw); }), Errc::unknown_symbol);
}

TEST(Validate, DuplicateNames) {
  RawMachine raw = par_raw();
  raw.states = {"q0", "q0"};
  EXPECT_EQ(error_of([&] { validate_mealy(raw); }), Errc::duplicate_name);
  raw = par_raw();
  raw.input = {"0", "0"};
  EXPECT_EQ(error_of([&] { validate_mealy(raw); }), Errc::duplicate_name);
}

TEST(Validate, EmptyAlphabetRejected) {
  RawMachine raw = par_raw();
  raw.output.clear();
  EXPECT_EQ(error_of([&] { validate_mealy(raw); }), Errc::empty_alphabet);
}

TEST(Validate, MooreParity) {
  EXPECT_EQ(validate_moore(cpar_raw()), catalog::parity_moore());
}

TEST(Validate, MooreWithLetterKeyedOutputIsShapeError) {
  RawMachine raw = par_raw();
  raw.kind = "moore";
  EXPECT_EQ(error_of([&] { validate_moore(raw); }), Errc::shape_error);
  EXPECT_EQ(error_of([&] { validate_mealy(cpar_raw()); }), Errc::kind_mismatch);
}

TEST(Validate, OneStateMoore) {
  RawMachine raw;
  raw.kind = "moore";
  raw.input = {"0", "1"};
  raw.output = {"0", "1"};
  raw.states = {"*"};
  raw.delta = {{"*", {{"0", "*"}, {"1", "*"}}}};
  raw.out = StateKeyedTable{{"*", "0"}};
  const MooreMachine m = validate_moore(raw);
  EXPECT_EQ(m.num_states(), 1u);
  EXPECT_EQ(m.out(0), 0u);
}

TEST(Validate, IdempotentOnRandomMachines) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto in = digits(1 + i % 3), out = digits(1 + (i / 3) % 3);
    const MealyMachine m = random_mealy(rng, in, out, 1 + i % 4);
    EXPECT_EQ(validate_mealy(to_raw(m)), m);
    const MooreMachine n = random_moore(rng, in, out, 1 + i % 4);
    EXPECT_EQ(validate_moore(to_raw(n)), n);
  }
}

TEST(IdentityCell, EchoesLetters) {
  const MealyMachine id = identity_cell(digits(2));
  EXPECT_EQ(id.num_states(), 1u);
  EXPECT_EQ(id.out(0, 0), 0u);
  EXPECT_EQ(id.out(0, 1), 1u);
  const MealyMachine one = identity_cell(digits(1));
  EXPECT_EQ(one.out(0, 0), 0u);
}

TEST(Homomorphism, ParityExamples) {
  const MealyMachine par = catalog::parity();
  EXPECT_TRUE(is_homomorphism(par, par, StateMap::identity(2)));
  // Swap is equivariant but flips outputs.
  EXPECT_FALSE(is_homomorphism(par, par, StateMap{{1, 0}, 2}));
  // Constant q0 breaks equivariance at letter 1.
  EXPECT_FALSE(is_homomorphism(par, par, StateMap{{0, 0}, 2}));
}

TEST(Homomorphism, EndpointMismatch) {
  const MealyMachine par = catalog::parity();
  const MealyMachine other = identity_cell(digits(3));
  EXPECT_EQ(error_of([&] { is_homomorphism(par, other, StateMap{{0, 0}, 1}); }),
            Errc::endpoint_mismatch);
}

TEST(Homomorphism, IdentityAlwaysAHom) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto m = random_mealy(rng, digits(2), digits(2), 1 + i % 4);
    EXPECT_TRUE(is_homomorphism(m, m, StateMap::identity(m.num_states())));
    const auto n = random_moore(rng, digits(2), digits(2), 1 + i % 4);
    EXPECT_TRUE(is_homomorphism(n, n, StateMap::identity(n.num_states())));
  }
}

TEST(Homomorphism, ClosedUnderVerticalComposition) {
  std::mt19937_64 rng(5);
  int composed = 0;
  for (int i = 0; i < 3000 && composed < 200; ++i) {
    // Small output alphabets make homomorphisms common.
    const auto a = random_moore(rng, digits(2), digits(1), 1 + i % 3);
    const auto b = random_moore(rng, digits(2), digits(1), 1 + (i / 3) % 3);
    const auto c = random_moore(rng, digits(2), digits(1), 1 + (i / 9) % 3);
    for (const auto& phi : enumerate_homs(a, b).homs) {
      for (const auto& psi : enumerate_homs(b, c).homs) {
        EXPECT_TRUE(is_homomorphism(a, c, compose(psi, phi)));
        ++composed;
      }
    }
  }
  EXPECT_GT(composed, 0);
}
