#include <doctest.h>

#include <random>
#include <set>

#include "bschur/weyl.hpp"

using namespace bschur;

TEST_CASE("lengths agree with word search") {
  for (int d = 1; d <= 3; ++d) {
    auto bfs = lengthSplitsByWordSearch(d);
    auto all = allElements(d);
    CHECK(all.size() == bfs.size());
    for (const auto& w : all) {
      CAPTURE(w.toString());
      CHECK(w.lengthSplit() == bfs.at(w));
      auto word = w.reducedWord();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(SignedPermutation::fromWord(d, word) == w);
      int zeros = 0;
      for (int s : word) zeros += s == 0;
      CHECK(zeros == w.lengthSplit().first);
    }
  }
}

TEST_CASE("length split examples") {
  CHECK(SignedPermutation::identity(3).lengthSplit() == std::make_pair(0, 0));
  CHECK(SignedPermutation({-1}).lengthSplit() == std::make_pair(1, 0));
  auto w = SignedPermutation::fromWord(2, {1, 0, 1});
  CHECK(w == SignedPermutation({1, -2}));
  CHECK(w.lengthSplit() == std::make_pair(1, 2));
  CHECK_THROWS_AS(SignedPermutation({1, 1}), Error);
}

TEST_CASE("group laws") {
  auto all = allElements(3);
  CHECK(all.size() == 48u);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 47);
  for (int t = 0; t < 100; ++t) {
    auto u = all[pick(rng)], v = all[pick(rng)], w = all[pick(rng)];
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * u.inverse() == SignedPermutation::identity(3));
    TensorIndex a(5, {2, -4, 0});
    CHECK(act(u * v, a) == act(u, act(v, a)));
  }
}

TEST_CASE("action on indices") {
  TensorIndex a = TensorIndex::fromIntegers(3, {1, 0});
  CHECK(act(SignedPermutation::generator(2, 0), a) == TensorIndex::fromIntegers(3, {-1, 0}));
  CHECK(act(SignedPermutation::generator(2, 1), a) == TensorIndex::fromIntegers(3, {0, 1}));
  CHECK(act(SignedPermutation::identity(2), a) == a);
  CHECK_THROWS_AS(act(SignedPermutation::identity(3), a), Error);
  CHECK_THROWS_AS(TensorIndex(3, {1}), Error);
  CHECK(TensorIndex(2, {1, -1}).toString() == "(1/2, -1/2)");
}

TEST_CASE("orbits") {
  auto o = orbitAndStabilizer(TensorIndex::fromIntegers(3, {0, 1}));
  CHECK(o.orbit.size() == 4u);
  CHECK(o.stabOrder == 2);
  CHECK(o.orbit.front() == TensorIndex::fromIntegers(3, {0, 1}));
  CHECK(orbitAndStabilizer(TensorIndex::fromIntegers(3, {0, 0, 0})).orbit.size() == 1u);
  CHECK(orbitAndStabilizer(TensorIndex::fromIntegers(5, {1, 2})).orbit.size() == 8u);
  // Orbits partition I_n^d.
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      std::set<TensorIndex> reps;
      std::vector<int> idx(d, 0);
      auto vals = indexSet(n);
      long total = 1;
      for (int i = 0; i < d; ++i) total *= n;
      for (long c = 0; c < total; ++c) {
        long x = c;
        std::vector<int> dv(d);
        for (int i = d - 1; i >= 0; --i) {
          dv[i] = vals[x % n];
          x /= n;
        }
        reps.insert(TensorIndex(n, dv).dominant());
      }
      long sum = 0;
      for (const auto& r : reps) sum += static_cast<long>(orbitAndStabilizer(r).orbit.size());
      CHECK(sum == total);
    }
}

TEST_CASE("minimal coset representatives") {
  TensorIndex a = TensorIndex::fromIntegers(3, {0, 1});
  auto reps = minimalCosetRepresentatives(a);
  CHECK(reps.size() == 4u);
  for (const auto& [b, w] : reps) {
    CHECK(act(w, a) == b);
    for (const auto& v : allElements(2))
      if (act(v, a) == b) CHECK(v.length() >= w.length());
  }
}

TEST_CASE("partitions and tableaux") {
  CHECK(partitions(4).size() == 5u);
  CHECK(partitions(4).front() == Partition{4});
  CHECK(bipartitions(2).size() == 5u);
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(standardTableaux({3, 2}) == 5);
  CHECK(semistandardTableaux({2, 1}, 3) == 8);
  CHECK(semistandardTableaux({1, 1, 1}, 2) == 0);
  for (int d = 1; d <= 4; ++d) {
    long sum = 0, group = 1;
    for (int i = 1; i <= d; ++i) group *= 2 * i;
    for (const auto& bp : bipartitions(d)) sum += countStandardBitableaux(bp) * countStandardBitableaux(bp);
    CHECK(sum == group);
  }
  std::multiset<long> counts;
  for (const auto& bp : bipartitions(2)) counts.insert(countStandardBitableaux(bp));
  CHECK(counts == std::multiset<long>{1, 1, 1, 1, 2});
  CHECK(countSemistandardBitableaux(Bipartition{{1}, {1}}, 5) == 6);
  CHECK(countSemistandardBitableaux(Bipartition{}, 4) == 1);
  CHECK_THROWS_AS(standardTableaux({1, 2}), Error);
}

TEST_CASE("bipartition strings") {
  auto bp = Bipartition::parse("2,1|1");
  CHECK(bp.lambda == Partition{2, 1});
  CHECK(bp.mu == Partition{1});
  CHECK(Bipartition::parse("-|1,1").toString() == "-|1,1");
  CHECK(Bipartition{{2}, {}}.toString() == "2|-");
  CHECK_THROWS_AS(Bipartition::parse("1,2|"), Error);
  CHECK_THROWS_AS(Bipartition::parse("21"), Error);
}

TEST_CASE("special words") {
  auto c = cOfLambda({4, 2});
  CHECK(c.element == SignedPermutation({1, 5, 2, 6, 3, 4}));
  CHECK(SignedPermutation::fromWord(6, c.word) == c.element);
  CHECK(wAB(1, 1).element == SignedPermutation::generator(2, 1));
  auto w = wAB(2, 3).element;
  CHECK(w == SignedPermutation({3, 4, 5, 1, 2}));
  auto w0 = wZero(2, 1);
  CHECK(w0.word == std::vector<int>{0, 1, 0, 1});
  CHECK(w0.element.length() == 4);
  CHECK(w0.element == SignedPermutation({-1, -2}));
  CHECK(wZero(3, 2).element == SignedPermutation({-1, -2, -3, 4, 5, 6}));
  auto b = wBlock(1, 2, 2).element;
  CHECK(b == SignedPermutation({3, 4, 1, 2}));
  CHECK(b.length() == 4);
  CHECK_THROWS_AS(wBlock(2, 2, 2), Error);
}

TEST_CASE("compositions") {
  Composition t{3, {2, 1, 2}};
  Composition tp = addZeroPair(t, 2);
  CHECK(tp == Composition{5, {2, 0, 1, 0, 2}});
  CHECK(removeZeroPair(tp, 2) == t);
  Composition e{4, {1, 2, 3, 4}};
  Composition c = addZeroCenter(e);
  CHECK(c == Composition{5, {1, 2, 0, 3, 4}});
  CHECK(removeZeroCenter(c) == e);
  CHECK_THROWS_AS(addZeroCenter(t), Error);
  CHECK_THROWS_AS(removeZeroPair(t, 2), Error);
  CHECK_THROWS_AS(addZeroPair(t, 1), Error);
  CHECK(toIndex(Composition{3, {2, 1, 3}}) == TensorIndex::fromIntegers(3, {1, 1, 0, -1, -1, -1}));
  Composition h{4, {1, 0, 2, 1}};
  CHECK(addZeroPair(h, 1) == Composition{6, {1, 0, 0, 0, 2, 1}});
}
