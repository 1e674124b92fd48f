#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "su3franel/calogero.hpp"
#include "su3franel/laurent.hpp"
#include "su3franel/weights.hpp"

using namespace su3franel;

namespace {

const std::vector<Rational> kCouplings = {Rational(0), Rational(1, 2),
                                          Rational(1), Rational(2)};

std::vector<Weight> dominant_up_to(int height) {
  std::vector<Weight> ws;
  for (int p = 0; p <= height; ++p)
    for (int q = 0; p + q <= height; ++q) ws.emplace_back(p, q);
  return ws;
}

}  // namespace

TEST_CASE("ZPoly arithmetic basics") {
  const ZPoly z1 = ZPoly::monomial(1, 0);
  const ZPoly z2 = ZPoly::monomial(0, 1);
  CHECK((z1 * z2).coefficient(1, 1) == 1);
  CHECK(z1.pow(3) == z1 * z1 * z1);
  CHECK((z1 - z1).is_zero());
  CHECK((Rational(2, 3) * z1).coefficient(1, 0) == Rational(2, 3));
  CHECK(d_dz1(z1.pow(2) * z2) == Rational(2) * (z1 * z2));
  CHECK(d_dz1(z2).is_zero());
  CHECK(d_dz1(ZPoly::constant(5)).is_zero());
}

TEST_CASE("eigenvalues of the effective operator") {
  CHECK(eigenvalue(Coupling{Rational(7)}, Weight(0, 0)) == 0);
  CHECK(eigenvalue(Coupling{Rational(1)}, Weight(1, 1)) == 9);
  CHECK(eigenvalue(Coupling{Rational(0)}, Weight(3, 0)) == 9);
  CHECK(eigenvalue(Coupling{Rational(1, 2)}, Weight(1, 1)) == 6);
}

TEST_CASE("operator pinned actions") {
  const ZPoly z1 = ZPoly::monomial(1, 0);
  const ZPoly one = ZPoly::constant(1);
  for (const Rational& k : kCouplings) {
    const Coupling c{k};
    CHECK(apply_hamiltonian(c, z1) == (3 * k + 1) * z1);
    CHECK(apply_hamiltonian(c, one).is_zero());
    const ZPoly z1z2 = ZPoly::monomial(1, 1);
    CHECK(apply_hamiltonian(c, z1z2) ==
          (6 * k + 3) * z1z2 + ZPoly::constant(-9));
  }
}

TEST_CASE("lowest eigenpolynomials in closed form") {
  const ZPoly z1 = ZPoly::monomial(1, 0);
  const ZPoly z1z2 = ZPoly::monomial(1, 1);

  for (const Rational& k : kCouplings)
    CHECK(gegenbauer(Coupling{k}, Weight(1, 0)) == z1);

  CHECK(gegenbauer(Coupling{Rational(1)}, Weight(1, 1)) ==
        z1z2 + ZPoly::constant(-1));
  CHECK(gegenbauer(Coupling{Rational(0)}, Weight(1, 1)) ==
        z1z2 + ZPoly::constant(-3));
  CHECK(gegenbauer(Coupling{Rational(1, 2)}, Weight(1, 1)) ==
        z1z2 + ZPoly::constant(Rational(-3, 2)));
  // The constant is -3/(1+2k) for every regular coupling.
  for (const Rational& k : kCouplings)
    CHECK(gegenbauer(Coupling{k}, Weight(1, 1)) ==
          z1z2 + ZPoly::constant(Rational(-3) / (1 + 2 * k)));
}

TEST_CASE("eigen identity holds exactly for p+q <= 6 across couplings") {
  for (const Rational& k : kCouplings) {
    const Coupling c{k};
    for (const Weight& w : dominant_up_to(6)) {
      const ZPoly p = gegenbauer(c, w);
      CHECK(p.coefficient(w.p, w.q) == 1);  // monic
      CHECK(apply_hamiltonian(c, p) == eigenvalue(c, w) * p);
    }
  }
}

TEST_CASE("coupling 1 specializes to irreducible characters for p+q <= 6") {
  for (const Weight& w : dominant_up_to(6)) {
    const ZPoly p = gegenbauer(Coupling{Rational(1)}, w);
    CHECK(z_to_x(p) == weyl_character_x(w));
    CHECK(p == x_to_z(weyl_character_x(w)));
  }
}

TEST_CASE("coupling 0 specializes to orbit sums for p+q <= 6") {
  for (const Weight& w : dominant_up_to(6)) {
    const ZPoly p = gegenbauer(Coupling{Rational(0)}, w);
    CHECK(z_to_x(p) == monomial_symmetric_x(w));
    CHECK(p == x_to_z(monomial_symmetric_x(w)));
  }
}

TEST_CASE("support stays inside the dominance cone") {
  for (const Rational& k : kCouplings)
    for (const Weight& w : dominant_up_to(6)) {
      const ZPoly g = gegenbauer(Coupling{k}, w);
      for (const auto& [e, c] : g.terms()) {
        CHECK(e.first >= 0);
        CHECK(e.second >= 0);
        CHECK(dominance_le(Weight(e.first, e.second), w));
      }
    }
}

TEST_CASE("a resonant coupling aborts with a diagnostic") {
  // At coupling -1/2 the eigenvalue at (1,1) collides with the one at (0,0).
  const Coupling bad{Rational(-1, 2)};
  CHECK(eigenvalue(bad, Weight(1, 1)) == eigenvalue(bad, Weight(0, 0)));
  CHECK_THROWS_AS(gegenbauer(bad, Weight(1, 1)), ResonanceError);
  try {
    gegenbauer(bad, Weight(1, 1));
    FAIL("expected a resonance");
  } catch (const ResonanceError& e) {
    CHECK(e.target() == Weight(1, 1));
    REQUIRE(e.colliding().size() >= 1);
    CHECK(std::find(e.colliding().begin(), e.colliding().end(), Weight(0, 0)) !=
          e.colliding().end());
    CHECK(std::string(e.what()).find("resonance") != std::string::npos);
  }
}

TEST_CASE("derivative lowering coefficients: cancelled closed forms") {
  // Coupling 0 reduces to A = q, B = -(p+q) whenever the index guards pass.
  for (int p = 2; p <= 5; ++p)
    for (int q = 1; p + q <= 7; ++q) {
      const auto c = derivative_coefficients(Coupling{Rational(0)}, Weight(p, q));
      CHECK(c.a == q);
      if (q >= 2) CHECK(c.b == -(p + q));
    }
  const auto c32 = derivative_coefficients(Coupling{Rational(0)}, Weight(3, 2));
  CHECK(c32.a == 2);
  CHECK(c32.b == -5);

  const auto c31 = derivative_coefficients(Coupling{Rational(1, 2)}, Weight(3, 1));
  CHECK(c31.a == Rational(27, 50));

  // Index guards: both lowering terms vanish at (1,1); B vanishes for q < 2.
  for (const Rational& k : kCouplings) {
    const auto c11 = derivative_coefficients(Coupling{k}, Weight(1, 1));
    CHECK(c11.a == 0);
    CHECK(c11.b == 0);
    const auto c41 = derivative_coefficients(Coupling{k}, Weight(4, 1));
    CHECK(c41.b == 0);
  }
  const auto c02 = derivative_coefficients(Coupling{Rational(0)}, Weight(0, 2));
  CHECK(c02.a == 0);
  CHECK(c02.b == -2);
}

TEST_CASE("derivative identity holds for p+q <= 5 across couplings") {
  for (const Rational& k : kCouplings)
    for (const Weight& w : dominant_up_to(5))
      CHECK(verify_derivative_identity(Coupling{k}, w));
}

TEST_CASE("coordinate change pinned images") {
  const ZPoly z1 = ZPoly::monomial(1, 0);
  const ZPoly z1z2 = ZPoly::monomial(1, 1);

  CHECK(x_to_z(monomial_symmetric_x(Weight(1, 0))) == z1);
  CHECK(x_to_z(adjoint_character_x()) == z1z2 + ZPoly::constant(-1));

  // Orbit sum of (3,0): cubic minus mixed term plus 3.
  ZPoly m30 = z1.pow(3);
  m30 += Rational(-3) * z1z2;
  m30 += ZPoly::constant(3);
  CHECK(x_to_z(monomial_symmetric_x(Weight(3, 0))) == m30);

  CHECK(z_to_x(z1) == monomial_symmetric_x(Weight(1, 0)));
  CHECK(z_to_x(z1z2 + ZPoly::constant(-1)) == adjoint_character_x());
  CHECK(z_to_x(gegenbauer(Coupling{Rational(1)}, Weight(2, 1))) ==
        weyl_character_x(Weight(2, 1)));
}

TEST_CASE("powers of the adjoint transform to powers of the invariant coordinate form") {
  const ZPoly z1z2 = ZPoly::monomial(1, 1);
  for (unsigned n = 0; n <= 5; ++n)
    CHECK(x_to_z(adjoint_character_x().pow(n)) ==
          (z1z2 + ZPoly::constant(-1)).pow(n));
}

TEST_CASE("coordinate change round trip on seeded random integer inputs") {
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<int> expo(0, 8);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> nterms(1, 6);
  int produced = 0;
  while (produced < 50) {
    ZPoly g;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      const int c = coef(rng);
      if (c != 0) g += ZPoly::monomial(expo(rng), expo(rng), c);
    }
    if (g.is_zero()) continue;
    ++produced;
    CHECK(x_to_z(z_to_x(g)) == g);
  }
}

TEST_CASE("coordinate change rejects invalid inputs") {
  CHECK_THROWS_AS(x_to_z(XLaurent::monomial(1, 0)), std::invalid_argument);
  const ZPoly half_z1 = ZPoly::monomial(1, 0, Rational(1, 2));
  CHECK_THROWS_AS(z_to_x(half_z1), std::invalid_argument);
}
