#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "daha/polyqh.hpp"
#include "daha/ratqt.hpp"

using namespace daha;

namespace {

QTPoly random_qtpoly(std::mt19937& rng, int maxdeg = 2) {
  std::uniform_int_distribution<int> coef(-3, 3);
  QTPoly p;
  p.rows.resize(maxdeg + 1);
  for (auto& row : p.rows) {
    row.resize(maxdeg + 1);
    for (auto& c : row) c = coef(rng);
  }
  p.trim();
  return p;
}

QTPoly random_nonzero_qtpoly(std::mt19937& rng, int maxdeg = 2) {
  for (;;) {
    QTPoly p = random_qtpoly(rng, maxdeg);
    if (!p.is_zero()) return p;
  }
}

RatQT random_ratqt(std::mt19937& rng) {
  return RatQT(random_qtpoly(rng), random_nonzero_qtpoly(rng));
}

const QTPoly one(1);

}  // namespace

TEST_CASE("rational canonical forms") {
  RatQT a(one - QTPoly::t(2), one - QTPoly::t());
  CHECK(a == RatQT(one + QTPoly::t(), one));
  CHECK(a.num() == one + QTPoly::t());
  CHECK(a.den() == one);

  // Zero is 0/1 regardless of construction route.
  RatQT z(QTPoly(), QTPoly::q() - QTPoly::t());
  CHECK(z.is_zero());
  CHECK(z.den() == one);
  CHECK(z == RatQT());

  // Denominator sign is normalized.
  RatQT b(one, QTPoly::t() - one);
  RatQT c(QTPoly(-1), one - QTPoly::t());
  CHECK(b == c);
}

TEST_CASE("t-order frozen values") {
  CHECK(RatQT(QTPoly::t(2), one + QTPoly::t()).t_order() == 2);
  CHECK(RatQT(QTPoly::t(3) - QTPoly::t(5), QTPoly::q() * QTPoly::t()).t_order() == 2);
  CHECK(RatQT(one, one - QTPoly::t()).t_order() == 0);
  CHECK(RatQT().t_order() == std::nullopt);
  CHECK(RatQT::t(-2).t_order() == -2);
}

TEST_CASE("t-order additivity and min rule") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    RatQT a = random_ratqt(rng), b = random_ratqt(rng);
    if (!a.is_zero() && !b.is_zero()) {
      auto oa = *a.t_order(), ob = *b.t_order();
      CHECK(*((a * b).t_order()) == oa + ob);
      RatQT s = a + b;
      if (!s.is_zero()) {
        CHECK(*s.t_order() >= std::min(oa, ob));
        if (oa != ob) CHECK(*s.t_order() == std::min(oa, ob));
      }
    }
  }
}

TEST_CASE("canonical form is route independent") {
  std::mt19937 rng(987);
  for (int trial = 0; trial < 100; ++trial) {
    RatQT a = random_ratqt(rng), b = random_ratqt(rng), c = random_ratqt(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    // Common factors cancel on construction.
    QTPoly g = random_nonzero_qtpoly(rng);
    QTPoly n = random_qtpoly(rng), d = random_nonzero_qtpoly(rng);
    CHECK(RatQT(n * g, d * g) == RatQT(n, d));
  }
}

TEST_CASE("gcd and exact division") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    QTPoly a = random_nonzero_qtpoly(rng), g = random_nonzero_qtpoly(rng);
    CHECK(qt_divexact(a * g, g) == a);
    QTPoly b = random_nonzero_qtpoly(rng);
    QTPoly d = qt_gcd(a * g, b * g);
    // g divides the gcd of (ag, bg).
    QTPoly q = qt_divexact(d, qt_gcd(d, g));
    CHECK(qt_gcd(d, g) == qt_gcd(g, d));
    CHECK((q * qt_gcd(d, g)) == d);
  }
  CHECK(qt_gcd(QTPoly(), QTPoly()).is_zero());
  CHECK(qt_gcd(QTPoly(-6), QTPoly(4)) == QTPoly(2));
}

TEST_CASE("h-order frozen values") {
  PolyQH a = PolyQH::q() + PolyQH::h(2);
  CHECK(a.h_order() == 0);
  PolyQH b = PolyQH::q() * PolyQH::h(3) + PolyQH::h(5);
  CHECK(b.h_order() == 3);
  CHECK(PolyQH().h_order() == std::nullopt);
}

TEST_CASE("h-order additivity") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> e(0, 3), coef(-2, 2);
  auto rnd = [&]() {
    PolyQH p;
    for (int i = 0; i < 4; ++i)
      p += PolyQH::monomial(coef(rng), e(rng), e(rng));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    PolyQH a = rnd(), b = rnd();
    if (a.is_zero() || b.is_zero()) {
      CHECK((a * b).h_order() == std::nullopt);
    } else {
      CHECK(*((a * b).h_order()) == *a.h_order() + *b.h_order());
    }
    PolyQH s = a + b;
    if (!s.is_zero() && !a.is_zero() && !b.is_zero())
      CHECK(*s.h_order() >= std::min(*a.h_order(), *b.h_order()));
  }
}

TEST_CASE("string forms") {
  CHECK(RatQT(one - QTPoly::t(2), one - QTPoly::t()).str() == "1 + t");
  CHECK(RatQT(one, one - QTPoly::t()).str() == "1/(1 - t)");
  CHECK(RatQT().str() == "0");
  CHECK((PolyQH::q() + PolyQH::h()).str() == "q + h");
}
