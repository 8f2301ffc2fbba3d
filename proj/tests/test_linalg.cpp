#include <doctest.h>

#include <random>

#include "bschur/linalg.hpp"

using namespace bschur;

namespace {

using M = ExactMatrix<Rat>;

M dense(const std::vector<std::vector<long>>& a) {
  M m(static_cast<int>(a.size()), static_cast<int>(a[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, Rat(a[i][j]));
  return m;
}

M randomSparse(std::mt19937& rng, int n, int density) {
  M m(n, n);
  std::uniform_int_distribution<int> coin(0, 99), val(-3, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng) < density) m.set(i, j, Rat(val(rng)));
  return m;
}

}  // namespace

TEST_CASE("matrix products and kron") {
  M a = dense({{1, 2}, {3, 4}});
  M b = dense({{0, 1}, {1, 0}});
  CHECK(a * b == dense({{2, 1}, {4, 3}}));
  CHECK(kron(a, b) == dense({{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
  CHECK_THROWS_AS(a * M(3, 3), Error);
  CHECK((a - a).isZeroMatrix());
  CHECK(a.transpose().transpose() == a);
}

TEST_CASE("rank kernel image intersection") {
  M a = dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  auto ker = kernelBasis(a);
  REQUIRE(ker.dim() == 1);
  CHECK(a.apply(ker.basis()[0]).empty());
  CHECK(imageBasis(a).dim() == 2);
  auto s1 = Subspace<Rat>::span(3, {unitVec<Rat>(0), unitVec<Rat>(1)});
  auto s2 = Subspace<Rat>::span(3, {unitVec<Rat>(1), unitVec<Rat>(2)});
  CHECK(intersect(s1, s2).dim() == 1);
  CHECK(intersect(s1, s2) == Subspace<Rat>::span(3, {unitVec<Rat>(1)}));
  CHECK(s1.plus(s2) == Subspace<Rat>::whole(3));
  auto c = s1.coordinates(SparseVec<Rat>{{0, Rat(2)}, {1, Rat(5)}});
  REQUIRE(c.has_value());
  CHECK((*c)[1] == 5);
  CHECK_FALSE(s1.contains(unitVec<Rat>(2)));
}

TEST_CASE("dense inverse") {
  auto inv = denseInverse<Rat>({{Rat(2), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(inv[0][0] == 1);
  CHECK(inv[0][1] == -1);
  CHECK(inv[1][1] == 2);
  CHECK_THROWS_AS(denseInverse<Rat>({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}), Error);
}

TEST_CASE("commutant dimensions") {
  // Identity: full matrix algebra.
  CHECK(commutantDim<Rat>({M::identity(4)}) == 16);
  CHECK(commutantDimSylvester<Rat>({M::identity(4)}) == 16);
  // Regular nilpotent: polynomials in it.
  M j = dense({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(commutantDim<Rat>({j}) == 3);
  // diag(1,1,2): GL_2 x GL_1 commutant.
  M d = dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  CHECK(commutantDim<Rat>({d}) == 5);
  CHECK(commutantDimSylvester<Rat>({d}) == 5);
  // Intertwiners between non-isomorphic 1-dim modules vanish.
  CHECK(intertwinerDim<Rat>({dense({{1}})}, {dense({{2}})}) == 0);
  auto basis = commutantBasis<Rat>({d});
  CHECK(basis.size() == 5);
  for (const auto& x : basis) CHECK(x * d == d * x);
}

TEST_CASE("reduced commutant agrees with plain Sylvester on random families") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 5;
    std::vector<M> gens{randomSparse(rng, n, 25), randomSparse(rng, n, 15)};
    if (trial % 3 == 0) gens = {dense({{1, 0}, {0, 1}})};
    CAPTURE(trial);
    CHECK(commutantDim(gens) == commutantDimSylvester(gens));
    for (const auto& x : commutantBasis(gens))
      for (const auto& g : gens) CHECK(x * g == g * x);
  }
}

TEST_CASE("generated algebra and double commutant of a diagonal matrix") {
  M d = dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  CHECK(generatedAlgebraDim<Rat>({d}) == 2);
}

TEST_CASE("minimal polynomial and eigensplit") {
  M a = dense({{2, 0, 0}, {0, 2, 0}, {0, 0, -1}});
  auto p = minimalPolynomial(a);
  CHECK(p.degree() == 2);
  CHECK(isSquarefree(p));
  CHECK(evalPoly(p, a).isZeroMatrix());
  M jb = dense({{3, 1}, {0, 3}});
  auto pj = minimalPolynomial(jb);
  CHECK(pj.degree() == 2);
  CHECK_FALSE(isSquarefree(pj));
  auto split = generalizedEigensplit<Rat>(a, {{Rat(2), true}, {Rat(-1), false}});
  CHECK(split.positive.dim() == 2);
  CHECK(split.negative.dim() == 1);
  CHECK_THROWS_AS(generalizedEigensplit<Rat>(a, {{Rat(2), true}}), Error);
  try {
    generalizedEigensplit<Rat>(a, {{Rat(2), true}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnclassifiedEigenvalue);
  }
}

TEST_CASE("rational function entries") {
  using RF = RationalFunction;
  ExactMatrix<RF> k(2, 2);
  k.set(0, 0, RF::Q(-1));
  k.set(1, 1, -RF::Q());
  auto p = minimalPolynomial(k);
  CHECK(p.degree() == 2);
  auto split = generalizedEigensplit<RF>(k, {{RF::Q(-1), true}, {-RF::Q(), false}});
  CHECK(split.positive.dim() == 1);
}
