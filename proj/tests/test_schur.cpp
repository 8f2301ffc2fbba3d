#include <doctest.h>

#include "bschur/schur.hpp"

using namespace bschur;

namespace {

Special defaultBackend() { return Special(Specialization::defaultPoint()); }

}  // namespace

TEST_CASE("young generators") {
  CHECK(youngGenerators({2, 1}, 0) == std::vector<int>{1});
  CHECK(youngGenerators({3}, 1) == std::vector<int>{2, 3});
  CHECK(youngGenerators({1, 1}, 0).empty());
  CHECK(youngGenerators({}, 2).empty());
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(requireBudget(126, Symbolic{}), Error);
  CHECK_NOTHROW(requireBudget(125, Symbolic{}));
  CHECK_NOTHROW(requireBudget(343, defaultBackend()));
  try {
    requireBudget(344, defaultBackend());
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("schur algebra commutes and has the expected dimension") {
  auto B = defaultBackend();
  auto s = schurAlgebra(2, 2, 2, B);
  CHECK(s.commutes);
  // V_2^{(x)2} = L_{(2),0} + L_{0,(2)} + 2 L_{(1),(1)}, all one-dimensional.
  CHECK(s.dim() == 3);
  auto s3 = schurAlgebra(3, 3, 2, Symbolic{});
  CHECK(s3.commutes);
  CHECK(s3.dim() == 15);
  auto rect = schurAlgebra(3, 2, 1, B);
  CHECK(rect.commutes);
  CHECK(rect.dim() == 3);
}

TEST_CASE("plus-minus powers match the binomial formulas") {
  auto B = defaultBackend();
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      if (ipow(n, d) > 125) continue;
      for (PmKind k : allPmKinds()) {
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(pmKindName(k));
        auto p = pmPower(n, d, k, B);
        CHECK(p.quotientDim() == pmPowerFormula(k, n, d));
        CHECK(p.kernelDim() == p.quotientDim());
        CHECK(static_cast<long>(admissibleIndices(k, n, d).size()) == pmPowerFormula(k, n, d));
      }
    }
  CHECK(pmPowerFormula(PmKind::SymPlus, 4, 2) == 3);
  CHECK(pmPowerFormula(PmKind::WedgeMinus, 4, 2) == 1);
  CHECK(pmPowerFormula(PmKind::WedgePlus, 5, 3) == 1);
  CHECK(pmPowerFormula(PmKind::SymMinus, 5, 3) == 4);
}

TEST_CASE("plus-minus power bases") {
  for (int n = 2; n <= 4; ++n)
    for (PmKind k : allPmKinds()) {
      CAPTURE(n);
      CAPTURE(pmKindName(k));
      auto b = pmPowerBasis(n, 2, k, Symbolic{});
      CHECK(b.inKernel);
      CHECK(b.basisOfQuotient);
    }
}

TEST_CASE("plus-minus kind names") {
  for (PmKind k : allPmKinds()) CHECK(parsePmKind(pmKindName(k)) == k);
  CHECK_THROWS_AS(parsePmKind("S"), Error);
  CHECK(pmQSign(PmKind::WedgePlus) == -1);
  CHECK(pmBigQSign(PmKind::WedgePlus) == 1);
}

TEST_CASE("tensor plus-minus by idempotent and by eigensplit") {
  auto B = defaultBackend();
  for (int n = 2; n <= 4; ++n)
    for (int sign : {1, -1}) {
      CAPTURE(n);
      CAPTURE(sign);
      auto a = tensorPm(n, 2, sign, B);
      auto b = tensorPmByEigensplit(n, 2, sign, Specialization::defaultPoint());
      CHECK(a == b);
    }
  // ^1_+ (x) ^1_- has dimension r_+ r_- with r_+ = ceil(n/2), r_- = floor(n/2).
  CHECK(signedTensor(1, 1, 3, B).dim() == 2);
  CHECK(signedTensor(2, 1, 3, B).dim() == 4);
  CHECK(signedTensor(1, 2, 3, B).dim() == 2);
  CHECK(signedTensor(2, 0, 3, B).dim() == 4);
}

TEST_CASE("schur functors agree with the young symmetrizer") {
  auto B = defaultBackend();
  for (int n : {2, 3})
    for (int d : {2, 3})
      for (const auto& bp : bipartitions(d)) {
        CAPTURE(n);
        CAPTURE(bp.toString());
        auto v = schurFunctor(bp, n, B);
        CHECK(v.image == youngSymmetrizerImage(bp, n, B));
        CHECK(v.dim() == countSemistandardBitableaux(bp, n));
      }
  auto v = schurFunctor(Bipartition{{1}, {1}}, 3, Symbolic{});
  CHECK(v.dim() == 2);
  CHECK(v.signedImage.dim() == 2);
}

TEST_CASE("type-A symmetrizer self-test") {
  auto B = defaultBackend();
  CHECK(typeASelfTest({2, 1}, 3, B));
  CHECK(typeASelfTest({1, 1, 1}, 3, B));
  CHECK(typeASelfTest({2}, 4, B));
  CHECK_NOTHROW(requireTypeASymmetrizer(Bipartition{{2}, {1}}, 3, B));
}

TEST_CASE("schur-weyl decomposition") {
  auto B = defaultBackend();
  auto r = schurWeylDecompose(5, 2, B);
  CHECK(r.ok());
  CHECK(r.ssytOk);
  CHECK(r.sumLM == 25);
  CHECK(r.schurDim == 91);
  auto r3 = schurWeylDecompose(3, 3, B);
  CHECK(r3.ok());
  CHECK(r3.ssytOk);
  CHECK(r3.sumLM == 27);
}

TEST_CASE("irreducibility at n=4, d=2") {
  auto r = irreducibilityReport(4, 2, defaultBackend());
  CHECK(r.ok());
  CHECK(r.shapes.size() == 5);
  CHECK_THROWS_AS(irreducibilityReport(3, 2, defaultBackend()), Error);
}

TEST_CASE("e-Hecke generators") {
  auto B = defaultBackend();
  for (auto [d, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {1, 3}, {3, 1}})
    for (const auto& c : eHeckeConsistency(d, e, 2, B)) {
      CAPTURE(d);
      CAPTURE(e);
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  for (const auto& c : eHeckeBraidChecks(eHeckeGenerators(2, 2, 2, B))) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("rank-one e-Hecke spectrum") {
  auto s = Specialization::defaultPoint();
  auto r = eHeckeRankOne(2, 4, s);
  CHECK(r.distinctEigenvalues == 5);
  CHECK(r.diagonalizable);
  CHECK(eHeckeRankOne(2, 2, s).distinctEigenvalues == 3);
  CHECK(eHeckeRankOneAlgebraDim(1) == 2);
  CHECK(eHeckeRankOneAlgebraDim(2) == 5);
}

TEST_CASE("spectra at the default point") {
  auto s = Specialization::defaultPoint();
  for (int i = 1; i <= 3; ++i) {
    auto r = jucysMurphySpectrum(3, 3, i, s);
    CAPTURE(i);
    CHECK(r.ok());
    CHECK(r.squarefree);
  }
  CHECK(cylinderSpectrum(3, 2, s).ok());
  CHECK(signedCandidates(s, 1, 1).size() == 18);
}

TEST_CASE("higher plus-minus powers reduce to e=1") {
  auto s = Specialization::defaultPoint();
  for (PmKind k : allPmKinds()) {
    CAPTURE(pmKindName(k));
    auto h = higherPmPower(2, 1, 3, k, s);
    CHECK(h.subDim == pmPowerFormula(k, 3, 2));
    CHECK(h.quotientDim == pmPowerFormula(k, 3, 2));
    CHECK(h.quotientSignsOk);
    auto h2 = higherPmPower(1, 2, 2, k, s);
    CHECK(h2.quotientSignsOk);
  }
  // The kept generalized eigenspaces of T_{w_1} and c_K do not commute, so their
  // intersection can exceed the largest quotient.
  auto w = higherPmPower(2, 2, 2, PmKind::SymPlus, s);
  CHECK(w.quotientSignsOk);
  CHECK(w.quotientDim == 2);
  CHECK(w.subDim == 3);
}
