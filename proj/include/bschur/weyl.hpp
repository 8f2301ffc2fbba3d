#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bschur/error.hpp"

namespace bschur {

// Element of W^B(d) in one-line notation w(1..d); negative images record sign flips.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images);
  static SignedPermutation identity(int d);
  // s_0 negates the first entry, s_i (1 <= i < d) swaps i and i+1.
  static SignedPermutation generator(int d, int i);
  static SignedPermutation fromWord(int d, const std::vector<int>& word);

  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  // w(i) for 1 <= |i| <= d, with w(-i) = -w(i).
  int operator()(int i) const { return i > 0 ? images_[i - 1] : -images_[-i - 1]; }

  // (v*w)(i) = v(w(i)).
  SignedPermutation operator*(const SignedPermutation& w) const;
  SignedPermutation inverse() const;

  // Coxeter length: inversions + negatives + negative-sum pairs.
  int length() const;
  // (l0, l1): l0 = number of negative images, l1 = length - l0.
  std::pair<int, int> lengthSplit() const;
  // w = s_{word[0]} s_{word[1]} ..., found by peeling left descents.
  std::vector<int> reducedWord() const;

  std::uint64_t key() const;
  std::string toString() const;  // "[-1 2]"

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> images_;
};

// All 2^d d! elements in a fixed order (by length, then one-line notation).
std::vector<SignedPermutation> allElements(int d);
// Lengths computed by breadth-first search over words in the generators.
std::map<SignedPermutation, int> lengthsByWordSearch(int d);
// Length split computed by breadth-first search: fewest s_0 among reduced words.
std::map<SignedPermutation, std::pair<int, int>> lengthSplitsByWordSearch(int d);

// Doubled index values of I_n in ascending order: entry t stands for t/2.
std::vector<int> indexSet(int n);

// Tuple of d indices from I_n, stored doubled.
struct TensorIndex {
  int n = 1;
  std::vector<int> doubled;

  TensorIndex() = default;
  TensorIndex(int n, std::vector<int> doubled);  // validates membership in I_n
  static TensorIndex fromHalfValues(int n, const std::vector<int>& v) { return TensorIndex(n, v); }
  static TensorIndex fromIntegers(int n, const std::vector<int>& values);

  int degree() const { return static_cast<int>(doubled.size()); }
  // Dominant representative: absolute values sorted ascending.
  TensorIndex dominant() const;
  std::string toString() const;  // "(1, 0, -1)" or "(1/2, -3/2)"
  auto operator<=>(const TensorIndex&) const = default;
};

// (w.a)_{|w(i)|} = sign(w(i)) a_i.
TensorIndex act(const SignedPermutation& w, const TensorIndex& a);

struct OrbitInfo {
  std::vector<TensorIndex> orbit;  // dominant representative first
  long stabOrder = 0;
};
OrbitInfo orbitAndStabilizer(const TensorIndex& a);

// For every b in the orbit of a, a minimal-length w with w.a = b.
std::map<TensorIndex, SignedPermutation> minimalCosetRepresentatives(const TensorIndex& a);

using Partition = std::vector<int>;

struct Bipartition {
  Partition lambda;
  Partition mu;
  int size() const;
  std::string toString() const;  // "2,1|1", empty side "-"
  static Bipartition parse(const std::string& text);
  auto operator<=>(const Bipartition&) const = default;
};

void validatePartition(const Partition& p);
int partitionSize(const Partition& p);
Partition conjugate(const Partition& p);
std::string partitionString(const Partition& p);
// Partitions of k in reverse lexicographic order: (k), ..., (1^k).
std::vector<Partition> partitions(int k);
// Bipartitions of d: |lambda| from d down to 0, then reverse lexicographic in each part.
std::vector<Bipartition> bipartitions(int d);

long binomial(int n, int k);
long standardTableaux(const Partition& p);
long semistandardTableaux(const Partition& p, int bound);
// Standard bitableaux: C(d, |lambda|) * SYT(lambda) * SYT(mu).
long countStandardBitableaux(const Bipartition& bp);
// Entry bounds for semistandard bitableaux: (r+1, r) for n = 2r+1, (r, r) for n = 2r.
std::pair<int, int> semistandardBounds(int n);
long countSemistandardBitableaux(const Bipartition& bp, int n);

// Element together with a reduced word for it.
struct SpecialWord {
  SignedPermutation element;
  std::vector<int> word;
};

// w_{a,b}: 1..b -> a+1..a+b and b+1..a+b -> 1..a, in W^B(a+b).
SpecialWord wAB(int a, int b, int d = -1);
// c(lambda): wedge positions, column by column, to row-reading tableau positions.
SpecialWord cOfLambda(const Partition& lambda);
// Block transposition of blocks i and i+1 (size e) in W^B(de), 1 <= i < d.
SpecialWord wBlock(int i, int e, int d);
// Longest element of W^B(e) acting on the first block, word s_0 (s_1 s_0 s_1) ... .
SpecialWord wZero(int e, int d);
// Embeds w in W^B(d) acting on positions offset+1 .. offset+degree(w); requires
// offset = 0 for elements with sign flips.
SignedPermutation embed(const SignedPermutation& w, int offset, int d);

// Composition of d indexed by I_n; parts[k] is the multiplicity of the index
// (n-1)/2 - k, so the first part belongs to the largest index.
struct Composition {
  int n = 1;
  std::vector<int> parts;
  int total() const;
  bool operator==(const Composition&) const = default;
};

// j2 is the doubled position j > 0 (j in I_n).
Composition addZeroPair(const Composition& theta, int j2);
Composition removeZeroPair(const Composition& theta, int j2);
// n even only: insert a zero at index 0, giving n+1.
Composition addZeroCenter(const Composition& theta);
Composition removeZeroCenter(const Composition& theta);
TensorIndex toIndex(const Composition& theta);

}  // namespace bschur
