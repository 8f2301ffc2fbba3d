#include <doctest.h>

#include <random>

#include "bschur/scalars.hpp"

using namespace bschur;

namespace {

using RF = RationalFunction;

RF Qp(int e = 1) { return RF::Q(e); }
RF qp(int e = 1) { return RF::q(e); }

LaurentPoly2 randomPoly(std::mt19937& rng, int maxTerms = 4) {
  std::uniform_int_distribution<int> nterms(1, maxTerms), ex(-2, 2), co(-3, 3);
  LaurentPoly2 p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p += LaurentPoly2::monomial(co(rng), ex(rng), ex(rng));
  return p;
}

RF randomRF(std::mt19937& rng) {
  LaurentPoly2 d;
  while (d.isZero()) d = randomPoly(rng, 2);
  return RF(randomPoly(rng, 3), d);
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly2 Q = LaurentPoly2::varQ(), q = LaurentPoly2::varq();
  CHECK((Q + q) * (Q - q) == Q * Q - q * q);
  CHECK(fPoly(1) == LaurentPoly2::varQ(-2) + LaurentPoly2(1));
  LaurentPoly2 f2 = (LaurentPoly2::varQ(-2) + LaurentPoly2::varq(-2)) * (LaurentPoly2::varQ(-2) + LaurentPoly2(1)) *
                    (LaurentPoly2::varQ(-2) + LaurentPoly2::varq(2));
  CHECK(fPoly(2) == f2);
  CHECK((Q - Q).isZero());
  CHECK((Q * LaurentPoly2(0)).isZero());
}

TEST_CASE("laurent ring axioms on random samples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto x = randomPoly(rng), y = randomPoly(rng), z = randomPoly(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("rational function canonical form") {
  RF v = qp() - qp(-1);
  CHECK((RF(1) / v) * v == RF(1));
  CHECK((Qp(-1) - Qp()) + Qp() == Qp(-1));
  LaurentPoly2 Q = LaurentPoly2::varQ();
  RF r(Q * Q - LaurentPoly2(1), Q * (Q - LaurentPoly2(1)));
  RF expected(Q + LaurentPoly2(1), Q);
  CHECK(r == expected);
  // cross-multiplication confirms the cancellation
  CHECK((Q * Q - LaurentPoly2(1)) * Q == (Q + LaurentPoly2(1)) * (Q * (Q - LaurentPoly2(1))));
  CHECK(r.toString() == "(1*Q^1*q^0 + 1*Q^0*q^0)/(1*Q^1*q^0)");
  RF s(LaurentPoly2(1) - Q * Q, Q);
  CHECK(s.toString() == "(-1*Q^2*q^0 + 1*Q^0*q^0)/(1*Q^1*q^0)");
  CHECK(Qp(-1).toString() == "1*Q^-1*q^0");
  CHECK(RF::fromRat(Rat(-6, 4)).toString() == "(-3*Q^0*q^0)/(2*Q^0*q^0)");
  CHECK_THROWS_AS(RF(0).inv(), Error);
}

TEST_CASE("bivariate gcd") {
  LaurentPoly2 Q = LaurentPoly2::varQ(), q = LaurentPoly2::varq(), one(1);
  LaurentPoly2 a = (Q + q) * (Q * q - one) * (Q - one);
  LaurentPoly2 b = (Q * q - one) * (q * q + Q) * (Q - one);
  CHECK(polyGcd(a, b) == (Q * q - one) * (Q - one));
  CHECK(polyDivExact(a, Q + q) == (Q * q - one) * (Q - one));
  LaurentPoly2 c = LaurentPoly2::monomial(6, 0, 0) * (Q + one);
  LaurentPoly2 d = LaurentPoly2::monomial(4, 0, 0) * (Q + one) * (q + one);
  CHECK(polyGcd(c, d) == LaurentPoly2::monomial(2, 0, 0) * (Q + one));
}

TEST_CASE("field axioms and canonical idempotence on random samples") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    RF x = randomRF(rng), y = randomRF(rng), z = randomRF(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(RF(x.num(), x.den()) == x);
    if (!y.isZero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("specialization") {
  Specialization s(2, 3);
  CHECK(fPoly(2).evaluate(s.Q(), s.q()) == (Rat(1, 4) + Rat(1, 9)) * (Rat(1, 4) + 1) * (Rat(1, 4) + 9));
  CHECK(Qp(-1).specialize(s) == Rat(1, 2));
  for (int d = 1; d <= 6; ++d) {
    CHECK(fPoly(d).evaluate(1, 1) == ratPow(2, 2 * d - 1));
    CHECK(sgn(fPoly(d).evaluate(s.Q(), s.q())) != 0);
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    RF x = randomRF(rng), y = randomRF(rng);
    try {
      Rat sx = x.specialize(s), sy = y.specialize(s);
      CHECK((x * y).specialize(s) == sx * sy);
      CHECK((x + y).specialize(s) == sx + sy);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PoleAtSpecialization);
    }
  }
  RF pole(LaurentPoly2(1), LaurentPoly2::varQ() - LaurentPoly2(2));
  CHECK_THROWS_AS(pole.specialize(s), Error);
  CHECK_THROWS_AS(Specialization(2, 1), Error);
  CHECK_THROWS_AS(Specialization(-1, 3), Error);
  CHECK_THROWS_AS(Specialization(0, 3), Error);
  CHECK(s.separates(12, 120));
  Specialization p = Specialization::parse("Q=2/3,q=-5");
  CHECK(p.Q() == Rat(2, 3));
  CHECK(p.q() == -5);
  CHECK_THROWS_AS(Specialization::parse("Q=0.5,q=3"), Error);
}
