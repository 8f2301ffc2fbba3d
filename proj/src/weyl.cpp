#include "bschur/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace bschur {

// ---------------------------------------------------------------- SignedPermutation

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int d = degree();
  std::vector<char> seen(d + 1, 0);
  for (int x : images_) {
    int a = std::abs(x);
    if (a < 1 || a > d || seen[a]) throw Error(ErrorKind::InvalidIndex, "not a signed permutation");
    seen[a] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int d) {
  std::vector<int> im(d);
  std::iota(im.begin(), im.end(), 1);
  return SignedPermutation(std::move(im));
}

SignedPermutation SignedPermutation::generator(int d, int i) {
  if (i < 0 || i >= d) throw Error(ErrorKind::OutOfRange, "generator s_" + std::to_string(i) + " in W(" + std::to_string(d) + ")");
  SignedPermutation s = identity(d);
  if (i == 0)
    s.images_[0] = -1;
  else
    std::swap(s.images_[i - 1], s.images_[i]);
  return s;
}

SignedPermutation SignedPermutation::fromWord(int d, const std::vector<int>& word) {
  SignedPermutation w = identity(d);
  for (int s : word) w = w * generator(d, s);
  return w;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& w) const {
  if (degree() != w.degree()) throw Error(ErrorKind::SizeMismatch, "composing different degrees");
  std::vector<int> im(degree());
  for (int i = 0; i < degree(); ++i) im[i] = (*this)(w.images_[i]);
  SignedPermutation r;
  r.images_ = std::move(im);
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> im(degree());
  for (int i = 0; i < degree(); ++i) {
    int x = images_[i];
    im[std::abs(x) - 1] = x > 0 ? i + 1 : -(i + 1);
  }
  SignedPermutation r;
  r.images_ = std::move(im);
  return r;
}

int SignedPermutation::length() const {
  const int d = degree();
  int len = 0;
  for (int i = 0; i < d; ++i) {
    if (images_[i] < 0) ++len;
    for (int j = i + 1; j < d; ++j) {
      if (images_[i] > images_[j]) ++len;
      if (images_[i] + images_[j] < 0) ++len;
    }
  }
  return len;
}

std::pair<int, int> SignedPermutation::lengthSplit() const {
  int l0 = static_cast<int>(std::count_if(images_.begin(), images_.end(), [](int x) { return x < 0; }));
  return {l0, length() - l0};
}

std::vector<int> SignedPermutation::reducedWord() const {
  std::vector<int> word;
  SignedPermutation w = *this;
  int len = w.length();
  while (len > 0) {
    for (int s = 0; s < degree(); ++s) {
      SignedPermutation sw = generator(degree(), s) * w;
      int l = sw.length();
      if (l < len) {
        word.push_back(s);
        w = std::move(sw);
        len = l;
        break;
      }
    }
  }
  return word;
}

std::uint64_t SignedPermutation::key() const {
  std::uint64_t k = 0;
  for (int x : images_) k = (k << 5) | static_cast<std::uint64_t>(x + 16);
  return k;
}

std::string SignedPermutation::toString() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < degree(); ++i) os << (i ? " " : "") << images_[i];
  os << "]";
  return os.str();
}

std::vector<SignedPermutation> allElements(int d) {
  std::vector<int> base(d);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (int mask = 0; mask < (1 << d); ++mask) {
      std::vector<int> im = base;
      for (int i = 0; i < d; ++i)
        if (mask & (1 << i)) im[i] = -im[i];
      out.emplace_back(std::move(im));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::stable_sort(out.begin(), out.end(), [](const SignedPermutation& a, const SignedPermutation& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  return out;
}

std::map<SignedPermutation, std::pair<int, int>> lengthSplitsByWordSearch(int d) {
  // Breadth-first over words; among shortest words keep the fewest s_0 letters.
  std::map<SignedPermutation, std::pair<int, int>> best;  // (length, s0 count)
  std::deque<SignedPermutation> queue;
  SignedPermutation e = SignedPermutation::identity(d);
  best[e] = {0, 0};
  queue.push_back(e);
  while (!queue.empty()) {
    SignedPermutation w = queue.front();
    queue.pop_front();
    auto [len, zeros] = best[w];
    for (int s = 0; s < d; ++s) {
      SignedPermutation ws = w * SignedPermutation::generator(d, s);
      std::pair<int, int> cand{len + 1, zeros + (s == 0 ? 1 : 0)};
      auto it = best.find(ws);
      if (it == best.end()) {
        best[ws] = cand;
        queue.push_back(ws);
      } else if (it->second.first == cand.first && cand.second < it->second.second) {
        it->second = cand;
      }
    }
  }
  std::map<SignedPermutation, std::pair<int, int>> out;
  for (const auto& [w, lz] : best) out[w] = {lz.second, lz.first - lz.second};
  return out;
}

std::map<SignedPermutation, int> lengthsByWordSearch(int d) {
  std::map<SignedPermutation, int> out;
  for (const auto& [w, split] : lengthSplitsByWordSearch(d)) out[w] = split.first + split.second;
  return out;
}

// ---------------------------------------------------------------- tensor indices

std::vector<int> indexSet(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
  std::vector<int> v;
  for (int t = -(n - 1); t <= n - 1; t += 2) v.push_back(t);
  return v;
}

TensorIndex::TensorIndex(int n_, std::vector<int> d_) : n(n_), doubled(std::move(d_)) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
  for (int t : doubled)
    if (std::abs(t) > n - 1 || ((t + n - 1) % 2) != 0)
      throw Error(ErrorKind::InvalidIndex, "doubled index " + std::to_string(t) + " not in I_" + std::to_string(n));
}

TensorIndex TensorIndex::fromIntegers(int n, const std::vector<int>& values) {
  std::vector<int> d;
  for (int v : values) d.push_back(2 * v);
  return TensorIndex(n, std::move(d));
}

TensorIndex TensorIndex::dominant() const {
  TensorIndex r = *this;
  for (int& t : r.doubled) t = std::abs(t);
  std::sort(r.doubled.begin(), r.doubled.end());
  return r;
}

std::string TensorIndex::toString() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ", ";
    int t = doubled[i];
    if (t % 2 == 0)
      os << t / 2;
    else
      os << t << "/2";
  }
  os << ")";
  return os.str();
}

TensorIndex act(const SignedPermutation& w, const TensorIndex& a) {
  if (w.degree() != a.degree()) throw Error(ErrorKind::SizeMismatch, "act: degrees differ");
  TensorIndex r = a;
  for (int i = 0; i < a.degree(); ++i) {
    int x = w.images()[i];
    r.doubled[std::abs(x) - 1] = x > 0 ? a.doubled[i] : -a.doubled[i];
  }
  return r;
}

OrbitInfo orbitAndStabilizer(const TensorIndex& a) {
  const int d = a.degree();
  OrbitInfo info;
  TensorIndex start = a.dominant();
  std::set<TensorIndex> seen{start};
  info.orbit.push_back(start);
  for (std::size_t k = 0; k < info.orbit.size(); ++k)
    for (int s = 0; s < d; ++s) {
      TensorIndex b = act(SignedPermutation::generator(d, s), info.orbit[k]);
      if (seen.insert(b).second) info.orbit.push_back(b);
    }
  long order = 1;
  for (int i = 1; i <= d; ++i) order *= 2 * i;
  info.stabOrder = order / static_cast<long>(info.orbit.size());
  return info;
}

std::map<TensorIndex, SignedPermutation> minimalCosetRepresentatives(const TensorIndex& a) {
  std::map<TensorIndex, SignedPermutation> reps;
  for (const auto& w : allElements(a.degree())) reps.try_emplace(act(w, a), w);  // length-ascending order
  return reps;
}

// ---------------------------------------------------------------- partitions

void validatePartition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw Error(ErrorKind::InvalidShape, "partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1]) throw Error(ErrorKind::InvalidShape, "partition must be weakly decreasing");
  }
}

int partitionSize(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int i = 0; i < p[0]; ++i) {
    int cnt = 0;
    for (int x : p)
      if (x > i) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

std::string partitionString(const Partition& p) {
  if (p.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

int Bipartition::size() const { return partitionSize(lambda) + partitionSize(mu); }

std::string Bipartition::toString() const { return partitionString(lambda) + "|" + partitionString(mu); }

Bipartition Bipartition::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw Error(ErrorKind::InvalidShape, "shape needs '|': '" + text + "'");
  auto side = [&](const std::string& s) {
    Partition p;
    if (s == "-" || s.empty()) return p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::InvalidShape, "bad part '" + tok + "' in '" + text + "'");
      p.push_back(std::stoi(tok));
    }
    validatePartition(p);
    return p;
  };
  return Bipartition{side(text.substr(0, bar)), side(text.substr(bar + 1))};
}

std::vector<Partition> partitions(int k) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxPart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::vector<Bipartition> bipartitions(int d) {
  std::vector<Bipartition> out;
  for (int a = d; a >= 0; --a)
    for (const auto& l : partitions(a))
      for (const auto& m : partitions(d - a)) out.push_back(Bipartition{l, m});
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long standardTableaux(const Partition& p) {
  validatePartition(p);
  Partition c = conjugate(p);
  int n = partitionSize(p);
  // n! / prod hooks, accumulated in exact rationals of small size.
  long double num = 1;
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  long hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
  (void)num;
  return fact / hooks;
}

long semistandardTableaux(const Partition& p, int bound) {
  validatePartition(p);
  if (bound < 0) throw Error(ErrorKind::InvalidShape, "negative entry bound");
  if (static_cast<int>(p.size()) > bound) return 0;
  Partition c = conjugate(p);
  // Hook-content formula: prod (bound + content) / hook.
  long num = 1, den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      num *= bound + j - static_cast<int>(i);
      den *= (p[i] - j - 1) + (c[j] - static_cast<int>(i) - 1) + 1;
    }
  return num / den;
}

long countStandardBitableaux(const Bipartition& bp) {
  validatePartition(bp.lambda);
  validatePartition(bp.mu);
  int a = partitionSize(bp.lambda);
  return binomial(bp.size(), a) * standardTableaux(bp.lambda) * standardTableaux(bp.mu);
}

std::pair<int, int> semistandardBounds(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
  int r = n / 2;
  return n % 2 ? std::make_pair(r + 1, r) : std::make_pair(r, r);
}

long countSemistandardBitableaux(const Bipartition& bp, int n) {
  auto [bp_, bm] = semistandardBounds(n);
  return semistandardTableaux(bp.lambda, bp_) * semistandardTableaux(bp.mu, bm);
}

// ---------------------------------------------------------------- special words

namespace {

SpecialWord withWord(const SignedPermutation& w) { return SpecialWord{w, w.reducedWord()}; }

}  // namespace

SignedPermutation embed(const SignedPermutation& w, int offset, int d) {
  if (offset < 0 || offset + w.degree() > d) throw Error(ErrorKind::OutOfRange, "embedding does not fit");
  std::vector<int> im(d);
  std::iota(im.begin(), im.end(), 1);
  for (int i = 0; i < w.degree(); ++i) {
    int x = w.images()[i];
    if (x < 0 && offset > 0) throw Error(ErrorKind::OutOfRange, "sign flips only embed at offset 0");
    im[offset + i] = x > 0 ? x + offset : x - offset;
  }
  return SignedPermutation(std::move(im));
}

SpecialWord wAB(int a, int b, int d) {
  if (a < 0 || b < 0) throw Error(ErrorKind::OutOfRange, "w_{a,b} needs a, b >= 0");
  if (d < 0) d = a + b;
  if (d < a + b) throw Error(ErrorKind::OutOfRange, "w_{a,b} does not fit in degree d");
  std::vector<int> im(a + b);
  for (int i = 1; i <= b; ++i) im[i - 1] = a + i;
  for (int i = b + 1; i <= a + b; ++i) im[i - 1] = i - b;
  return withWord(embed(SignedPermutation(std::move(im)), 0, d));
}

SpecialWord cOfLambda(const Partition& lambda) {
  validatePartition(lambda);
  std::vector<std::vector<int>> rows;
  int k = 1;
  for (int r : lambda) {
    std::vector<int> row;
    for (int j = 0; j < r; ++j) row.push_back(k++);
    rows.push_back(row);
  }
  Partition lc = conjugate(lambda);
  std::vector<int> im;
  for (std::size_t c = 0; c < lc.size(); ++c)
    for (int r = 0; r < lc[c]; ++r) im.push_back(rows[r][c]);
  return withWord(SignedPermutation(std::move(im)));
}

SpecialWord wBlock(int i, int e, int d) {
  if (e < 1 || i < 1 || i >= d) throw Error(ErrorKind::OutOfRange, "block transposition index out of range");
  std::vector<int> im(d * e);
  std::iota(im.begin(), im.end(), 1);
  for (int k = 1; k <= e; ++k) {
    im[e * (i - 1) + k - 1] = e * i + k;
    im[e * i + k - 1] = e * (i - 1) + k;
  }
  return withWord(SignedPermutation(std::move(im)));
}

SpecialWord wZero(int e, int d) {
  if (e < 1 || d < 1) throw Error(ErrorKind::OutOfRange, "w_0 needs e, d >= 1");
  std::vector<int> word;
  for (int j = 0; j < e; ++j) {
    for (int s = j; s >= 1; --s) word.push_back(s);
    word.push_back(0);
    for (int s = 1; s <= j; ++s) word.push_back(s);
  }
  SignedPermutation w = SignedPermutation::fromWord(d * e, word);
  if (w.length() != static_cast<int>(word.size()))
    throw Error(ErrorKind::ConsistencyFailure, "w_0 word is not reduced");
  return SpecialWord{w, word};
}

// ---------------------------------------------------------------- compositions

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void checkComposition(const Composition& theta) {
  if (static_cast<int>(theta.parts.size()) != theta.n)
    throw Error(ErrorKind::SizeMismatch, "composition needs n parts");
  for (int p : theta.parts)
    if (p < 0) throw Error(ErrorKind::InvalidShape, "negative part");
}

// Position in parts of the doubled index t.
int partPos(int n, int t) { return (n - 1 - t) / 2; }

}  // namespace

Composition addZeroPair(const Composition& theta, int j2) {
  checkComposition(theta);
  const int n = theta.n;
  if (j2 <= 0 || j2 > n - 1 || (j2 + n - 1) % 2 != 0)
    throw Error(ErrorKind::InvalidPosition, "pair position must be a positive index of I_n");
  Composition out{n + 2, std::vector<int>(n + 2, 0)};
  for (int t : indexSet(n + 2)) {
    int v;
    if (std::abs(t) < j2)
      v = theta.parts[partPos(n, t)];
    else if (std::abs(t) == j2)
      v = 0;
    else
      v = theta.parts[partPos(n, t > 0 ? t - 2 : t + 2)];
    out.parts[partPos(n + 2, t)] = v;
  }
  return out;
}

Composition removeZeroPair(const Composition& theta, int j2) {
  checkComposition(theta);
  const int n = theta.n;
  if (n < 3 || j2 <= 0 || j2 > n - 1 || (j2 + n - 1) % 2 != 0)
    throw Error(ErrorKind::InvalidPosition, "pair position must be a positive index of I_n");
  if (theta.parts[partPos(n, j2)] != 0 || theta.parts[partPos(n, -j2)] != 0)
    throw Error(ErrorKind::InvalidPosition, "parts at ±j must vanish");
  Composition out{n - 2, std::vector<int>(n - 2, 0)};
  for (int t : indexSet(n - 2)) {
    int src = std::abs(t) < j2 ? t : (t > 0 ? t + 2 : t - 2);
    out.parts[partPos(n - 2, t)] = theta.parts[partPos(n, src)];
  }
  return out;
}

Composition addZeroCenter(const Composition& theta) {
  checkComposition(theta);
  if (theta.n % 2 != 0) throw Error(ErrorKind::InvalidPosition, "a zero at j=0 is added only for even n");
  const int n = theta.n;
  Composition out{n + 1, std::vector<int>(n + 1, 0)};
  for (int t : indexSet(n + 1)) {
    if (t == 0) continue;
    out.parts[partPos(n + 1, t)] = theta.parts[partPos(n, t > 0 ? t - 1 : t + 1)];
  }
  return out;
}

Composition removeZeroCenter(const Composition& theta) {
  checkComposition(theta);
  const int n = theta.n;
  if (n % 2 == 0 || theta.parts[partPos(n, 0)] != 0)
    throw Error(ErrorKind::InvalidPosition, "removing j=0 needs odd n and a zero center part");
  Composition out{n - 1, std::vector<int>(n - 1, 0)};
  for (int t : indexSet(n - 1)) out.parts[partPos(n - 1, t)] = theta.parts[partPos(n, t > 0 ? t + 1 : t - 1)];
  return out;
}

TensorIndex toIndex(const Composition& theta) {
  checkComposition(theta);
  std::vector<int> d;
  for (int k = 0; k < theta.n; ++k)
    for (int c = 0; c < theta.parts[k]; ++c) d.push_back(theta.n - 1 - 2 * k);
  return TensorIndex(theta.n, d);
}

}  // namespace bschur
