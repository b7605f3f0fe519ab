#include <gtest/gtest.h>

#include <random>

#include "machina/catalog.hpp"
#include "machina/composition.hpp"
#include "machina/lab.hpp"
#include "machina/semantics.hpp"
#include "machina/universal.hpp"
#include "oracles.hpp"

using namespace machina;

namespace {

const Alphabet kBits = digits(2);

bool letter_independent(const MealyMachine& m) {
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    for (Letter a = 1; a < m.input().size(); ++a) {
      if (m.out(e, a) != m.out(e, 0)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(ComposeMealy, ParityAfterParity) {
  const auto par = catalog::parity();
  const auto pp = compose_mealy(par, par);
  const Word w{1, 1};
  // Inner emits [1,0]; outer re-accumulates to [1,1].
  const Word inner = oracle::mealy_outputs(par, 0, w);
  EXPECT_EQ(inner, (Word{1, 0}));
  const Word expected = oracle::mealy_outputs(par, 0, inner);
  EXPECT_EQ(expected, (Word{1, 1}));
  EXPECT_EQ(trace(at(pp, "⟨q0,q0⟩"), w), expected);
}

TEST(ComposeMealy, IdentityOnTheLeftCopiesOutputs) {
  std::mt19937_64 rng(1);
  const auto m = random_mealy(rng, kBits, digits(3), 3);
  const auto composite = compose_mealy(identity_cell(m.output()), m);
  for (StateIndex e = 0; e < m.num_states(); ++e) {
    for (Letter a = 0; a < 2; ++a) EXPECT_EQ(composite.out(pair_index(0, e, 3), a), m.out(e, a));
  }
}

TEST(ComposeMealy, CarrierIsProduct) {
  std::mt19937_64 rng(2);
  const auto f = random_mealy(rng, kBits, digits(3), 3);
  const auto g = random_mealy(rng, digits(3), kBits, 4);
  const auto gf = compose_mealy(g, f);
  EXPECT_EQ(gf.num_states(), 12u);
  EXPECT_EQ(gf.state_name(pair_index(2, 1, 3)), "⟨s2,s1⟩");
}

TEST(ComposeMealy, EndpointMismatch) {
  const auto par = catalog::parity();
  EXPECT_THROW(compose_mealy(identity_cell(digits(3)), par), Error);
}

TEST(ComposeMealy, CascadeSemantics) {
  std::mt19937_64 rng(4);
  const auto words = oracle::words_up_to(2, 5);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_mealy(rng, kBits, digits(3), 1 + i % 3);
    const auto g = random_mealy(rng, digits(3), kBits, 1 + (i / 3) % 3);
    const auto gf = compose_mealy(g, f);
    for (StateIndex fg = 0; fg < g.num_states(); ++fg) {
      for (StateIndex e = 0; e < f.num_states(); ++e) {
        for (const auto& w : words) {
          EXPECT_EQ(trace(at(gf, pair_index(fg, e, f.num_states())), w),
                    oracle::mealy_outputs(g, fg, oracle::mealy_outputs(f, e, w)));
        }
      }
    }
  }
}

TEST(ComposeMoore, TwoStepDelayLine) {
  const auto u2 = universal_u(kBits);
  const auto uu = compose_moore(u2, u2);
  const Word w{1, 1};
  // The outer register sees the inner output before each step.
  Word inner = oracle::moore_outputs(u2, 0, w);
  inner.pop_back();
  const Word expected = oracle::moore_outputs(u2, 0, inner);
  EXPECT_EQ(expected, (Word{0, 0, 1}));
  EXPECT_EQ(trace(at(uu, "⟨0,0⟩"), w), expected);
}

TEST(ComposeMoore, OutputComesFromTheSecondMachine) {
  std::mt19937_64 rng(6);
  const auto f = random_moore(rng, kBits, digits(3), 3);
  const auto g = random_moore(rng, digits(3), kBits, 2);
  const auto gf = compose_moore(g, f);
  for (StateIndex x = 0; x < 2; ++x) {
    for (StateIndex e = 0; e < 3; ++e) EXPECT_EQ(gf.out(pair_index(x, e, 3)), g.out(x));
  }
}

TEST(ComposeMoore, OneStateTimesOneState) {
  const auto c = universal_p(digits(1));
  EXPECT_EQ(compose_moore(c, c).num_states(), 1u);
}

TEST(Mixed, LtimesIsMoorifyAndDecapitate) {
  const auto par = catalog::parity();
  EXPECT_EQ(ltimes(universal_u(kBits), par), moorify(par));
  EXPECT_EQ(ltimes(universal_p(kBits), par), decapitate(par));
}

TEST(Mixed, RtimesEchoAfterRegister) {
  const auto echo = identity_cell(kBits);
  const auto r = rtimes(echo, universal_u(kBits));
  ASSERT_EQ(r.num_states(), 2u);
  for (StateIndex x = 0; x < 2; ++x) EXPECT_EQ(r.out(pair_index(0, x, 2)), x);
}

TEST(Mixed, CompositesWithAMooreFactorAreLetterIndependent) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_mealy(rng, kBits, kBits, 1 + i % 3);
    const auto n = random_moore(rng, kBits, kBits, 1 + (i / 3) % 3);
    EXPECT_TRUE(letter_independent(embed_j(ltimes(n, m))));
    EXPECT_TRUE(letter_independent(embed_j(rtimes(m, n))));
    // The same composites computed in the Mealy bicategory.
    EXPECT_TRUE(letter_independent(compose_mealy(embed_j(n), m)));
    EXPECT_TRUE(letter_independent(compose_mealy(m, embed_j(n))));
    EXPECT_EQ(rtimes(m, n).num_states(), m.num_states() * n.num_states());
  }
}

TEST(Associator, Singletons) {
  const auto id = identity_cell(kBits);
  const auto alpha = associator(id, id, id);
  EXPECT_EQ(alpha.forward, StateMap::identity(1));
  EXPECT_TRUE(alpha.is_isomorphism());
}

TEST(Associator, SizesTwoThreeFive) {
  std::mt19937_64 rng(9);
  const auto f = random_mealy(rng, kBits, digits(3), 5);
  const auto g = random_mealy(rng, digits(3), kBits, 3);
  const auto h = random_mealy(rng, kBits, digits(2), 2);
  const auto alpha = associator(h, g, f);
  EXPECT_EQ(alpha.forward.source_size(), 30u);
  EXPECT_TRUE(is_homomorphism(alpha.source, alpha.target, alpha.forward));
  EXPECT_TRUE(alpha.is_isomorphism());
  // Re-bracketing is visible in the state names.
  EXPECT_EQ(alpha.source.state_name(0), "⟨⟨s0,s0⟩,s0⟩");
  EXPECT_EQ(alpha.target.state_name(0), "⟨s0,⟨s0,s0⟩⟩");
}

TEST(Associator, ParityTriple) {
  const auto par = catalog::parity();
  EXPECT_TRUE(associator(par, par, par).is_isomorphism());
  const auto cpar = catalog::parity_moore();
  EXPECT_TRUE(associator(cpar, cpar, cpar).is_isomorphism());
}

TEST(Pentagon, Examples) {
  const auto id = identity_cell(kBits);
  EXPECT_TRUE(check_pentagon(id, id, id, id));
  const auto par = catalog::parity();
  EXPECT_TRUE(check_pentagon(par, par, par, par));
  std::mt19937_64 rng(10);
  const auto f = random_mealy(rng, kBits, kBits, 3);
  const auto g = random_mealy(rng, kBits, kBits, 3);
  const auto h = random_mealy(rng, kBits, kBits, 2);
  const auto k = random_mealy(rng, kBits, kBits, 2);
  EXPECT_TRUE(check_pentagon(k, h, g, f));
  const auto u = universal_u(kBits);
  EXPECT_TRUE(check_pentagon(u, catalog::parity_moore(), u, universal_p(kBits)));
}

TEST(Pentagon, EndpointMismatch) {
  const auto par = catalog::parity();
  const auto wide = identity_cell(digits(3));
  EXPECT_THROW(check_pentagon(par, wide, par, par), Error);
}

TEST(JCompat, Examples) {
  const auto u2 = universal_u(kBits);
  EXPECT_TRUE(check_j_compatibilities(u2, u2));
  EXPECT_TRUE(check_j_compatibilities(catalog::parity(), catalog::parity_moore()));
  EXPECT_TRUE(check_j_compatibilities(catalog::parity_moore(), catalog::parity()));
  const auto one = universal_p(digits(1));
  EXPECT_TRUE(check_j_compatibilities(one, one));
  EXPECT_TRUE(check_j_compatibilities(identity_cell(digits(1)), one));
}

TEST(Horizontal, IdentitiesComposeToIdentity) {
  EXPECT_EQ(horizontal(StateMap::identity(3), StateMap::identity(4)), StateMap::identity(12));
}
