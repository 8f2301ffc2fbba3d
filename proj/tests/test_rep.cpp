#include <doctest.h>

#include "bschur/rep.hpp"

using namespace bschur;

namespace {

using MR = ExactMatrix<RF>;
using MQ = ExactMatrix<Rat>;

Special defaultBackend() { return Special(Specialization::defaultPoint()); }

}  // namespace

TEST_CASE("K and R matrices") {
  Symbolic S;
  MR k3 = kMatrix(3, S);
  // order v_-1, v_0, v_1
  CHECK(k3.at(1, 1) == RF::Q(-1));
  CHECK(k3.at(0, 2) == RF(1));
  CHECK(k3.at(2, 0) == RF(1));
  CHECK(k3.at(0, 0) == RF::Q(-1) - RF::Q());
  CHECK(k3 * k3 == (k3.scaledBy(RF::Q(-1) - RF::Q()) + MR::identity(3)));
  CHECK(kernelBasis(k3 - MR::identity(3, RF::Q(-1))).dim() == 2);
  CHECK(kMatrix(1, S) == MR::identity(1, RF::Q(-1)));
  CHECK(minimalPolynomial(k3).degree() == 2);
  CHECK(minimalPolynomial(k3)(RF::Q(-1)).isZero());
  CHECK(minimalPolynomial(k3)(-RF::Q()).isZero());
  CHECK(minimalPolynomial(MR::identity(3)) == UPoly<RF>::linear(RF(1)));

  MR r2 = rMatrix(2, S);
  CHECK(rank(r2) == 4);
  CHECK(rMatrix(1, S) == MR::identity(1, RF::q(-1)));
  // v_{1/2} v_{-1/2} (position 2) -> v_{-1/2} v_{1/2} (position 1) + (q^-1 - q) v_{1/2} v_{-1/2}
  CHECK(r2.at(1, 2) == RF(1));
  CHECK(r2.at(2, 2) == RF::q(-1) - RF::q());
  CHECK(((r2 + MR::identity(4, RF::q())) * (r2 - MR::identity(4, RF::q(-1)))).isZeroMatrix());

  auto split = generalizedEigensplit<Rat>(kMatrix(2, defaultBackend()), {{Rat(1, 2), true}, {Rat(-2), false}});
  CHECK(split.positive.dim() == 1);
  CHECK(split.negative.dim() == 1);
}

TEST_CASE("Hecke relations through rho") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      if (n == 4 && d == 3) continue;
      TensorRep<RF> rep(n, d, Symbolic{});
      for (const auto& c : heckeRelationChecks(rep)) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(c.name);
        CHECK(c.pass);
      }
    }
}

TEST_CASE("rho is an anti-homomorphism") {
  TensorRep<RF> rep(3, 2, Symbolic{});
  CHECK(rep.rho(HeckeElement::generator(2, 0)) == kron(kMatrix(3, Symbolic{}), MR::identity(3)));
  HeckeElement x = HeckeElement::generator(2, 0) + HeckeElement::scalar(2, RF::Q());
  HeckeElement y = HeckeElement::generator(2, 1) * HeckeElement::generator(2, 0);
  CHECK(rep.rho(x * y) == rep.rho(y) * rep.rho(x));
  CHECK(rep.rho((HeckeElement::generator(2, 0) + HeckeElement::scalar(2, RF::Q())) *
                (HeckeElement::generator(2, 0) - HeckeElement::scalar(2, RF::Q(-1))))
            .isZeroMatrix());
  CHECK_THROWS_AS(rep.rho(HeckeElement::one(3)), Error);
}

TEST_CASE("commutant examples") {
  TensorRep<RF> r1(3, 1, Symbolic{});
  CHECK(commutantDim(r1.generators()) == 5);
  TensorRep<RF> r2(3, 2, Symbolic{});
  CHECK(commutantDim(r2.generators()) == 15);
  CHECK(commutantDimSylvester(r2.generators()) == 15);
}

TEST_CASE("spectrum of c_K(2) on V_3^2") {
  TensorRep<Rat> rep(3, 2, defaultBackend());
  MQ c = rep.rho(cK(2));
  std::vector<Candidate<Rat>> cands;
  for (const auto& v : signedMonomialCandidates(Specialization::defaultPoint(), 2, 4)) cands.push_back({v, v > 0});
  auto split = generalizedEigensplit(c, cands);
  CHECK(split.positive.dim() == 5);
  CHECK(split.negative.dim() == 4);
  MQ k2 = rep.rho(jucysMurphy(2, 2));
  auto p = minimalPolynomial(k2);
  CHECK(isSquarefree(p));
  std::vector<Rat> predicted{Rat(-18), Rat(-2, 9), Rat(-2), Rat(9, 2), Rat(1, 18), Rat(1, 2)};
  CHECK(splitRoots(p, predicted).second.degree() == 0);
}

TEST_CASE("inductive R and K") {
  InductiveRK<RF> rk(3, Symbolic{});
  TensorRep<RF> rep(3, 2, Symbolic{});
  CHECK(rk.K(2) == rep.rho(cK(2)));
  CHECK(rk.K(2) == rep.rho(jucysMurphy(2, 2) * jucysMurphy(1, 2)));
  CHECK(rk.R(1, 1) == rep.generator(1));
  CHECK(rk.R(1, 0) == MR::identity(3));
  for (int n = 2; n <= 3; ++n) {
    InductiveRK<RF> r(n, Symbolic{});
    for (int d = 1; d <= 3; ++d) {
      TensorRep<RF> t(n, d, Symbolic{});
      CHECK(r.K(d) == t.rho(cK(d)));
    }
    // Under the right action the braiding R_{d,e} is rho(T_{e,d}).
    TensorRep<RF> t3(n, 3, Symbolic{});
    CHECK(r.R(2, 1) == t3.rho(tAB(1, 2)));
    CHECK(r.R(1, 2) == t3.rho(tAB(2, 1)));
  }
  InductiveRK<RF> rk2(2, Symbolic{});
  CHECK(yangBaxterHolds(rk2, 1, 1, 1));
  CHECK(yangBaxterHolds(rk2, 1, 2, 1));
  CHECK(reflectionHolds(rk, 1, 1));
  CHECK(reflectionHolds(rk2, 2, 1));
  CHECK_FALSE(reflectionHolds(rk, 1, 1, false));
  CHECK_FALSE(reflectionHolds(rk2, 1, 1, false));
}

TEST_CASE("permutation modules and adding zeros") {
  TensorRep<RF> rep(3, 2, Symbolic{});
  auto pm = permutationModule(rep, TensorIndex::fromIntegers(3, {0, 1}));
  CHECK(pm.orbit.size() == 4u);
  TensorRep<RF> rep3(3, 3, Symbolic{});
  auto z = permutationModule(rep3, TensorIndex::fromIntegers(3, {0, 0, 0}));
  CHECK(z.orbit.size() == 1u);
  CHECK(z.gens[0] == MR::identity(1, RF::Q(-1)));
  CHECK(z.gens[1] == MR::identity(1, RF::q(-1)));
  auto r1 = verifyAddZeros(Composition{3, {2, 1, 2}}, 2, Symbolic{});
  CHECK(r1.thetaPrime == Composition{5, {2, 0, 1, 0, 2}});
  CHECK(r1.ok());
  CHECK(verifyAddZeros(Composition{4, {1, 0, 1, 1}}, 0, Symbolic{}).ok());
  CHECK(verifyAddZeros(Composition{4, {1, 0, 2, 0}}, 1, Symbolic{}).ok());
}

TEST_CASE("v-bar embedding") {
  auto v = barVector(TensorIndex::fromIntegers(1, {0}), 2, Symbolic{});
  REQUIRE(v.size() == 2u);
  CHECK(v[0] == std::make_pair(0, RF::Q(-1)));
  CHECK(v[1] == std::make_pair(1, RF(1)));
  MR k = kMatrix(2, Symbolic{});
  CHECK(k.apply(v) == scaled(v, RF::Q(-1)));
  auto v2 = barVector(TensorIndex::fromIntegers(1, {0, 0}), 2, Symbolic{});
  TensorRep<RF> rep(2, 2, Symbolic{});
  CHECK(rep.generator(0).apply(v2) == scaled(v2, RF::Q(-1)));
  CHECK(rep.generator(1).apply(v2) == scaled(v2, RF::q(-1)));
  for (auto a : {std::vector<int>{0}, {1}, {0, 0}, {0, 1}, {1, 1}, {1, 2}, {0, 2}}) {
    int n = 5;
    auto report = verifyBarEmbedding(TensorIndex::fromIntegers(n, a), n + 1, Symbolic{});
    CAPTURE(a[0]);
    CHECK(report.equivariant);
    CHECK(report.rank == report.sourceDim);
  }
  CHECK_THROWS_AS(barVector(TensorIndex::fromIntegers(3, {1, 0}), 4, Symbolic{}), Error);
}

TEST_CASE("quantum group and coideal") {
  QuantumAction<RF> q2(2, 1, Symbolic{});
  MR e0 = q2.E1(0);
  CHECK(e0.at(0, 1) == RF(1));
  CHECK(e0.nnz() == 1u);
  CHECK(q2.D1(1).at(1, 1) == RF::q());
  CHECK_THROWS_AS(q2.eHalf(), Error);
  QuantumAction<RF> q3(3, 1, Symbolic{});
  CHECK_THROWS_AS(q3.t(), Error);
  // Coassociativity: the right-leaning and left-leaning brackets agree at d = 3.
  QuantumAction<RF> q33(3, 3, Symbolic{});
  MR E = q3.E1(1), Hi = q3.H1(1, -1), I3 = MR::identity(3);
  MR left = kron(kron(I3, I3), E) + kron(kron(I3, E), Hi) + kron(kron(E, Hi), Hi);
  CHECK(q33.E(1) == left);
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 2; ++d) {
      TensorRep<RF> rep(n, d, Symbolic{});
      QuantumAction<RF> qa(n, d, Symbolic{});
      for (const auto& [name, x] : qa.coidealGenerators())
        for (const auto& g : rep.generators()) {
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(name);
          CHECK(x * g == g * x);
        }
    }
}

TEST_CASE("double centralizer") {
  auto s = Specialization::defaultPoint();
  auto r1 = verifyDoubleCentralizer(3, 1, s);
  CHECK(r1.commutantDim == 5);
  CHECK(r1.ok());
  auto r2 = verifyDoubleCentralizer(3, 2, s);
  CHECK(r2.commutantDim == 15);
  CHECK(r2.ok());
  auto r0 = verifyDoubleCentralizer(1, 2, s);
  CHECK(r0.commutantDim == 1);
  CHECK(r0.ok());
}
