#include <gtest/gtest.h>

#include "machina/catalog.hpp"
#include "machina/composition.hpp"
#include "machina/lab.hpp"
#include "machina/unitization.hpp"
#include "machina/universal.hpp"

using namespace machina;

namespace {

const Alphabet kBits = digits(2);

std::vector<UCell> corpus() {
  return {UCell::formal_id(kBits), UCell::cell(universal_u(kBits)), UCell::cell(universal_p(kBits)),
          UCell::cell(catalog::parity_moore())};
}

}  // namespace

TEST(UCompose, StrictUnits) {
  const auto bottom = UCell::formal_id(kBits);
  const auto cpar = UCell::cell(catalog::parity_moore());
  EXPECT_EQ(ucompose(bottom, cpar), cpar);
  EXPECT_EQ(ucompose(cpar, bottom), cpar);
  EXPECT_EQ(ucompose(bottom, bottom), bottom);
  for (const auto& c : corpus()) {
    EXPECT_EQ(ucompose(bottom, c), c);
    EXPECT_EQ(ucompose(c, bottom), c);
  }
}

TEST(UCompose, CellsComposeAsMachines) {
  const auto u2 = universal_u(kBits);
  EXPECT_EQ(ucompose(UCell::cell(u2), UCell::cell(u2)), UCell::cell(compose_moore(u2, u2)));
}

TEST(UCompose, EndpointMismatch) {
  const auto bottom3 = UCell::formal_id(digits(3));
  const auto cpar = UCell::cell(catalog::parity_moore());
  try {
    ucompose(bottom3, cpar);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::endpoint_mismatch);
  }
  EXPECT_THROW(ucompose(UCell::formal_id(kBits), bottom3), Error);
}

TEST(UMapTest, NoMapsAcrossTheFormalIdentity) {
  const auto bottom = UCell::formal_id(kBits);
  const auto p2 = UCell::cell(universal_p(kBits));
  for (const auto& [s, t] : {std::pair{bottom, p2}, std::pair{p2, bottom}}) {
    try {
      UMap::between(s, t, StateMap::identity(2));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::no_such_cell);
    }
    EXPECT_THROW(UMap::between(s, t), Error);
  }
  EXPECT_TRUE(UMap::between(bottom, bottom).is_identity_token());
  EXPECT_THROW(UMap::between(bottom, UCell::formal_id(digits(3))), Error);
  EXPECT_THROW(UMap::identity(bottom).map(), Error);
  EXPECT_THROW(bottom.machine(), Error);
}

TEST(UMapTest, RejectsNonHomomorphisms) {
  const auto cpar = UCell::cell(catalog::parity_moore());
  try {
    UMap::between(cpar, cpar, StateMap{{1, 0}, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_homomorphism);
  }
  EXPECT_EQ(UMap::between(cpar, cpar, StateMap::identity(2)), UMap::identity(cpar));
}

TEST(UCompose2, IdentityTokensAreUnits) {
  const auto bottom = UCell::formal_id(kBits);
  const auto id_bottom = UMap::identity(bottom);
  const auto cpar = UCell::cell(catalog::parity_moore());
  const auto phi = UMap::identity(cpar);
  EXPECT_EQ(ucompose2(id_bottom, phi), phi);
  EXPECT_EQ(ucompose2(phi, id_bottom), phi);
  EXPECT_EQ(ucompose2(id_bottom, id_bottom), id_bottom);
}

TEST(UCompose2, ProductOfIdentities) {
  const auto u = UCell::cell(universal_u(kBits));
  const auto cpar = UCell::cell(catalog::parity_moore());
  const auto both = ucompose2(UMap::identity(u), UMap::identity(cpar));
  EXPECT_EQ(both.map(), StateMap::identity(4));
  EXPECT_EQ(both.source(), ucompose(u, cpar));
}

TEST(UCompose2, EnumeratedHomsComposeToHoms) {
  const auto a = universal_p(kBits);
  const auto b = catalog::parity_moore();
  for (const auto& phi : enumerate_homs(a, a).homs) {
    for (const auto& psi : enumerate_homs(b, b).homs) {
      const auto x = ucompose2(UMap::between(UCell::cell(b), UCell::cell(b), psi),
                               UMap::between(UCell::cell(a), UCell::cell(a), phi));
      EXPECT_TRUE(is_homomorphism(x.source().machine(), x.target().machine(), x.map()));
    }
  }
}

TEST(Triangle, AllCombinations) {
  for (const auto& x : corpus()) {
    for (const auto& y : corpus()) EXPECT_TRUE(check_triangle(x, y));
  }
}

TEST(UPentagon, AgreesWithCellPentagon) {
  const auto cells = corpus();
  for (std::size_t i = 1; i < cells.size(); ++i) {
    for (std::size_t j = 1; j < cells.size(); ++j) {
      const auto& k = cells[i].machine();
      const auto& h = cells[j].machine();
      EXPECT_EQ(check_upentagon(cells[i], cells[j], cells[i], cells[j]),
                check_pentagon(k, h, k, h));
    }
  }
}

TEST(UPentagon, AllCombinations) {
  const auto cells = corpus();
  for (const auto& k : cells) {
    for (const auto& h : cells) {
      for (const auto& g : cells) {
        for (const auto& f : cells) EXPECT_TRUE(check_upentagon(k, h, g, f));
      }
    }
  }
}

TEST(UAssociator, FormalIdentityComponentsAreIdentities) {
  const auto bottom = UCell::formal_id(kBits);
  const auto cpar = UCell::cell(catalog::parity_moore());
  EXPECT_EQ(uassociator(cpar, bottom, cpar), UMap::identity(ucompose(cpar, cpar)));
  EXPECT_TRUE(uassociator(bottom, bottom, bottom).is_identity_token());
}
