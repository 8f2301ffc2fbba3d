#include <doctest.h>

#include <random>

#include "bschur/hecke.hpp"
#include "bschur/linalg.hpp"

using namespace bschur;

namespace {

using H = HeckeElement;

H T(int d, int i) { return H::generator(d, i); }
H scal(int d, const RF& c) { return H::scalar(d, c); }

}  // namespace

TEST_CASE("quadratic relations and products of generators") {
  H t0 = T(1, 0);
  CHECK(t0 * t0 == (RF::Q(-1) - RF::Q()) * t0 + H::one(1));
  CHECK((t0 + scal(1, RF::Q())) * (t0 - scal(1, RF::Q(-1))) == H::zero(1));
  for (int d = 2; d <= 4; ++d)
    for (int i = 1; i < d; ++i)
      CHECK((T(d, i) + scal(d, RF::q())) * (T(d, i) - scal(d, RF::q(-1))) == H::zero(d));
  CHECK(T(2, 1) * T(2, 0) == H::basis(SignedPermutation::fromWord(2, {1, 0})));
  CHECK((T(2, 0) * T(2, 1) * T(2, 0) * T(2, 1)) == (T(2, 1) * T(2, 0) * T(2, 1) * T(2, 0)));
  CHECK((T(3, 1) * T(3, 2) * T(3, 1)) == (T(3, 2) * T(3, 1) * T(3, 2)));
  CHECK((T(3, 0) * T(3, 2)) == (T(3, 2) * T(3, 0)));
  CHECK_THROWS_AS(T(2, 0) * T(3, 0), Error);
}

TEST_CASE("structure constants stay Laurent and multiplication is associative") {
  std::mt19937 rng(11);
  auto all = allElements(3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(all.size()) - 1), coef(-2, 2);
  auto randomElement = [&]() {
    H h(3);
    for (int k = 0; k < 3; ++k) h += H::basis(all[pick(rng)], RF(coef(rng)) * RF::q(coef(rng)));
    return h;
  };
  for (int t = 0; t < 15; ++t) {
    H x = randomElement(), y = randomElement(), z = randomElement();
    CHECK((x * y) * z == x * (y * z));
    H xy = x * y;
    for (const auto& [w, c] : xy.coeffs()) CHECK(c.isLaurent());
  }
}

TEST_CASE("T_w span the algebra") {
  for (int d = 1; d <= 3; ++d) {
    auto all = allElements(d);
    std::map<SignedPermutation, int> pos;
    for (std::size_t k = 0; k < all.size(); ++k) pos[all[k]] = static_cast<int>(k);
    auto flat = [&](const H& h) {
      SparseVec<RF> v;
      for (const auto& [w, c] : h.coeffs()) v.emplace_back(pos.at(w), c);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return v;
    };
    Echelon<RF> ech(static_cast<int>(all.size()));
    std::vector<H> frontier{H::one(d)};
    ech.insert(flat(frontier[0]));
    while (!frontier.empty()) {
      std::vector<H> next;
      for (const auto& h : frontier)
        for (int i = 0; i < d; ++i) {
          H g = T(d, i) * h;
          for (const auto& [w, c] : g.coeffs()) CHECK(pos.count(w) == 1);
          if (ech.insert(flat(g))) next.push_back(g);
        }
      frontier = std::move(next);
    }
    CHECK(ech.rank() == static_cast<int>(all.size()));
  }
}

TEST_CASE("Jucys-Murphy elements and c_K") {
  CHECK(jucysMurphy(1, 3) == T(3, 0));
  CHECK(jucysMurphy(2, 2) == H::basis(SignedPermutation::fromWord(2, {1, 0, 1})));
  CHECK_THROWS_AS(jucysMurphy(3, 2), Error);
  CHECK(cK(1) == T(1, 0));
  H c2 = cK(2);
  CHECK(c2.supportSize() == 1u);
  CHECK(c2 == H::basis(SignedPermutation::fromWord(2, {0, 1, 0, 1})));
  for (int d = 2; d <= 4; ++d) {
    std::vector<H> K;
    for (int i = 1; i <= d; ++i) K.push_back(jucysMurphy(i, d));
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) CHECK(K[i] * K[j] == K[j] * K[i]);
    H c = cK(d);
    for (int i = 0; i < d; ++i) CHECK(T(d, i) * c == c * T(d, i));
  }
}

TEST_CASE("u plus and minus") {
  CHECK(uPlus(1, 1) == T(1, 0) + scal(1, RF::Q()));
  CHECK((uPlus(1, 1) * uMinus(1, 1)).isZero());
  CHECK(uPlus(2, 2).supportSize() == 4u);
  CHECK_THROWS_AS(uPlus(3, 2), Error);
}

TEST_CASE("type-A symmetrizers") {
  H x = rowSymmetrizer({2});
  CHECK(T(2, 1) * x == RF::q(-1) * x);
  CHECK(x * T(2, 1) == RF::q(-1) * x);
  H y = columnAntisymmetrizer({2});
  CHECK(T(2, 1) * y == -RF::q() * y);
  // e = y_{(2,1)} T_c x_{(2,1)}: left column sign, right row symmetry.
  H e = typeASymmetrizer({2, 1});
  CHECK_FALSE(e.isZero());
  CHECK(T(3, 1) * e == -RF::q() * e);
  CHECK(e * T(3, 1) == RF::q(-1) * e);
}

TEST_CASE("e prime and cylinder identity") {
  H ep = youngSymmetrizerPrime(Bipartition{{1}, {1}});
  CHECK(ep.degree() == 2);
  CHECK_FALSE(ep.isZero());
  CHECK(youngSymmetrizerPrime(Bipartition{{2}, {}}).degree() == 2);
  CHECK_THROWS_AS(youngSymmetrizerPrime(Bipartition{{1, 2}, {}}), Error);
  for (auto [d, e] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}}) {
    CAPTURE(d);
    CAPTURE(e);
    auto r = cylinderIdentityCheck(d, e);
    CHECK(r.first);
    CHECK(r.second);
  }
}

TEST_CASE("serialization") {
  H h = RF::Q(-1) * T(2, 0) + H::one(2);
  auto s = h.serialize();
  REQUIRE(s.size() == 2u);
  CHECK(s[0] == "[1 2] : 1*Q^0*q^0");
  CHECK(s[1] == "[-1 2] : 1*Q^-1*q^0");
}
