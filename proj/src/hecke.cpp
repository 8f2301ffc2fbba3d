#include "bschur/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace bschur {

namespace {

void requireSameDegree(const HeckeElement& x, const HeckeElement& y) {
  if (x.degree() != y.degree())
    throw Error(ErrorKind::DegreeMismatch,
                "Hecke elements of degrees " + std::to_string(x.degree()) + " and " + std::to_string(y.degree()));
}

}  // namespace

RF generatorParameter(int i) { return i == 0 ? RF::Q() : RF::q(); }

HeckeElement HeckeElement::scalar(int d, const RF& c) {
  HeckeElement h(d);
  h.addTerm(SignedPermutation::identity(d), c);
  return h;
}

HeckeElement HeckeElement::basis(const SignedPermutation& w, const RF& c) {
  HeckeElement h(w.degree());
  h.addTerm(w, c);
  return h;
}

HeckeElement HeckeElement::generator(int d, int i) { return basis(SignedPermutation::generator(d, i)); }

HeckeElement HeckeElement::fromWord(int d, const std::vector<int>& word) {
  HeckeElement h = one(d);
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = h.leftMulGenerator(*it);
  return h;
}

RF HeckeElement::coefficient(const SignedPermutation& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? RF(0) : it->second;
}

void HeckeElement::addTerm(const SignedPermutation& w, const RF& c) {
  if (c.isZero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) coeffs_.erase(it);
  }
}

HeckeElement HeckeElement::leftMulGenerator(int i) const {
  const SignedPermutation s = SignedPermutation::generator(d_, i);
  const RF c = generatorParameter(i);
  const RF gap = c.inv() - c;
  HeckeElement out(d_);
  for (const auto& [w, a] : coeffs_) {
    SignedPermutation sw = s * w;
    if (sw.length() > w.length()) {
      out.addTerm(sw, a);
    } else {
      out.addTerm(sw, a);
      out.addTerm(w, a * gap);
    }
  }
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  requireSameDegree(*this, o);
  for (const auto& [w, c] : o.coeffs_) addTerm(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  requireSameDegree(*this, o);
  for (const auto& [w, c] : o.coeffs_) addTerm(w, -c);
  return *this;
}

HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
  requireSameDegree(x, y);
  HeckeElement out(x.d_);
  for (const auto& [v, a] : x.coeffs_) {
    HeckeElement z = y;
    auto word = v.reducedWord();
    for (auto it = word.rbegin(); it != word.rend(); ++it) z = z.leftMulGenerator(*it);
    for (const auto& [w, b] : z.coeffs_) out.addTerm(w, a * b);
  }
  return out;
}

HeckeElement operator*(const RF& c, const HeckeElement& x) {
  HeckeElement out(x.d_);
  if (c.isZero()) return out;
  for (const auto& [w, a] : x.coeffs_) out.addTerm(w, c * a);
  return out;
}

std::vector<std::string> HeckeElement::serialize() const {
  std::vector<std::pair<SignedPermutation, RF>> terms(coeffs_.begin(), coeffs_.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int la = a.first.length(), lb = b.first.length();
    return la != lb ? la < lb : a.first < b.first;
  });
  std::vector<std::string> out;
  for (const auto& [w, c] : terms) out.push_back(w.toString() + " : " + c.toString());
  return out;
}

HeckeElement jucysMurphy(int i, int d) {
  if (i < 1 || i > d) throw Error(ErrorKind::OutOfRange, "K_" + std::to_string(i) + " in degree " + std::to_string(d));
  std::vector<int> word;
  for (int j = i - 1; j >= 1; --j) word.push_back(j);
  word.push_back(0);
  for (int j = 1; j <= i - 1; ++j) word.push_back(j);
  return HeckeElement::fromWord(d, word);
}

HeckeElement cK(int d) {
  if (d < 1) throw Error(ErrorKind::OutOfRange, "c_K needs d >= 1");
  HeckeElement h = HeckeElement::one(d);
  for (int i = 1; i <= d; ++i) h = h * jucysMurphy(i, d);
  return h;
}

namespace {

HeckeElement uProduct(int i, int d, const RF& shift, const char* name) {
  if (i < 1 || i > d)
    throw Error(ErrorKind::OutOfRange, std::string(name) + "_" + std::to_string(i) + " in degree " + std::to_string(d));
  HeckeElement h = HeckeElement::one(d);
  for (int j = 1; j <= i; ++j) h = h * (jucysMurphy(j, d) + HeckeElement::scalar(d, shift));
  return h;
}

}  // namespace

HeckeElement uPlus(int i, int d) { return uProduct(i, d, RF::Q(), "u+"); }
HeckeElement uMinus(int i, int d) { return uProduct(i, d, -RF::Q(-1), "u-"); }

HeckeElement embed(const HeckeElement& h, int offset, int d) {
  HeckeElement out(d);
  for (const auto& [w, c] : h.coeffs()) out += HeckeElement::basis(bschur::embed(w, offset, d), c);
  return out;
}

HeckeElement arrayBasis(const SignedPermutation& w) { return HeckeElement::basis(w.inverse()); }

HeckeElement tAB(int a, int b) { return arrayBasis(wAB(a, b).element); }

namespace {

// All permutations of the consecutive position blocks, as elements of S_{sum blocks}.
std::vector<SignedPermutation> youngSubgroup(const Partition& blocks) {
  const int d = partitionSize(blocks);
  std::vector<SignedPermutation> out{SignedPermutation::identity(d)};
  int start = 0;
  for (int b : blocks) {
    std::vector<int> perm(b);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> local;
    do {
      std::vector<int> im(d);
      std::iota(im.begin(), im.end(), 1);
      for (int k = 0; k < b; ++k) im[start + k] = start + perm[k] + 1;
      local.emplace_back(std::move(im));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<SignedPermutation> next;
    for (const auto& u : out)
      for (const auto& v : local) next.push_back(u * v);
    out = std::move(next);
    start += b;
  }
  return out;
}

HeckeElement weightedSum(const Partition& blocks, const RF& base) {
  const int d = partitionSize(blocks);
  HeckeElement h(d);
  for (const auto& w : youngSubgroup(blocks)) {
    RF c(1);
    for (int k = 0; k < w.length(); ++k) c *= base;
    h += HeckeElement::basis(w, c);
  }
  return h;
}

}  // namespace

HeckeElement rowSymmetrizer(const Partition& blocks) { return weightedSum(blocks, RF::q(-1)); }

HeckeElement columnAntisymmetrizer(const Partition& blocks) { return weightedSum(blocks, -RF::q()); }

HeckeElement typeASymmetrizer(const Partition& lambda) {
  validatePartition(lambda);
  if (lambda.empty()) return HeckeElement::one(0);
  return columnAntisymmetrizer(conjugate(lambda)) * arrayBasis(cOfLambda(lambda).element) *
         rowSymmetrizer(lambda);
}

HeckeElement youngSymmetrizerPrime(const Bipartition& shape) {
  validatePartition(shape.lambda);
  validatePartition(shape.mu);
  const int a = partitionSize(shape.lambda), b = partitionSize(shape.mu), d = a + b;
  if (d == 0) throw Error(ErrorKind::InvalidShape, "empty bipartition");
  HeckeElement h = HeckeElement::one(d);
  if (b > 0) h = h * embed(uMinus(b, b), 0, d);
  h = h * tAB(a, b);
  if (a > 0) h = h * embed(uPlus(a, a), 0, d);
  if (a > 0) h = h * embed(typeASymmetrizer(shape.lambda), 0, d);
  if (b > 0) h = h * embed(typeASymmetrizer(shape.mu), a, d);
  return tAB(b, a) * h;
}

CylinderCheck cylinderIdentityCheck(int d, int e) {
  if (d < 1 || e < 1) throw Error(ErrorKind::OutOfRange, "cylinder check needs d, e >= 1");
  const int n = d + e;
  HeckeElement full = cK(n);
  HeckeElement cd = embed(cK(d), 0, n), ce = embed(cK(e), 0, n);
  HeckeElement ted = tAB(e, d), tde = tAB(d, e);
  CylinderCheck r;
  r.first = (ted * ce * tde * cd) == full;
  r.second = (cd * ted * ce * tde) == full;
  return r;
}

}  // namespace bschur
