#pragma once

#include <map>
#include <string>
#include <vector>

#include "bschur/scalars.hpp"
#include "bschur/weyl.hpp"

namespace bschur {

using RF = RationalFunction;

// Element of H^B_{Q,q}(d) in the basis {T_w}.
class HeckeElement {
 public:
  using Coeffs = std::map<SignedPermutation, RF>;

  HeckeElement() = default;
  explicit HeckeElement(int d) : d_(d) {}
  static HeckeElement zero(int d) { return HeckeElement(d); }
  static HeckeElement one(int d) { return scalar(d, RF(1)); }
  static HeckeElement scalar(int d, const RF& c);
  static HeckeElement basis(const SignedPermutation& w, const RF& c = RF(1));
  // T_{s_i}; s_0 is the Q-generator.
  static HeckeElement generator(int d, int i);
  // T_{s_{word[0]}} T_{s_{word[1]}} ...
  static HeckeElement fromWord(int d, const std::vector<int>& word);

  int degree() const { return d_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  RF coefficient(const SignedPermutation& w) const;
  std::size_t supportSize() const { return coeffs_.size(); }

  // T_{s_i} * this.
  HeckeElement leftMulGenerator(int i) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) { return x += y; }
  friend HeckeElement operator-(HeckeElement x, const HeckeElement& y) { return x -= y; }
  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y);
  friend HeckeElement operator*(const RF& c, const HeckeElement& x);
  friend bool operator==(const HeckeElement& x, const HeckeElement& y) {
    return x.d_ == y.d_ && x.coeffs_ == y.coeffs_;
  }

  // One "<one-line> : <scalar>" entry per basis element, ordered by length then one-line.
  std::vector<std::string> serialize() const;

 private:
  void addTerm(const SignedPermutation& w, const RF& c);
  int d_ = 0;
  Coeffs coeffs_;
};

// Quadratic parameter of generator s_i: Q for i = 0, q otherwise.
RF generatorParameter(int i);

// K_i = T_{i-1} ... T_1 T_0 T_1 ... T_{i-1} in H^B(d).
HeckeElement jucysMurphy(int i, int d);
// c_K = K_1 K_2 ... K_d.
HeckeElement cK(int d);
// u_i^+ = prod_{j<=i} (K_j + Q), u_i^- = prod_{j<=i} (K_j - Q^{-1}), in H^B(d).
HeckeElement uPlus(int i, int d);
HeckeElement uMinus(int i, int d);

// Image of h under the parabolic inclusion placing H(degree h) on positions
// offset+1 .. offset+degree; elements involving T_0 only embed at offset 0.
HeckeElement embed(const HeckeElement& h, int offset, int d);

// Basis element for a permutation given in the left-to-right composition convention of
// two-line arrays: with (vw)(i) = v(w(i)) here, that element is T_{w^{-1}}.
HeckeElement arrayBasis(const SignedPermutation& w);

// T_{a,b} = arrayBasis(w_{a,b}) in H^B(a+b).
HeckeElement tAB(int a, int b);

// Type-A symmetrizers in H(sum blocks), on consecutive position blocks.
// x = sum q^{-l(w)} T_w (each T_i acts by q^{-1}), y = sum (-q)^{l(w)} T_w (by -q).
HeckeElement rowSymmetrizer(const Partition& blocks);
HeckeElement columnAntisymmetrizer(const Partition& blocks);
// e_lambda = y_{lambda'} T_{c(lambda)} x_lambda in H(|lambda|), T_{c(lambda)} = arrayBasis(c(lambda)).
HeckeElement typeASymmetrizer(const Partition& lambda);
// e'_{lambda,mu} = T_{a,b} u_b^- T_{b,a} u_a^+ e^a_lambda e^b_mu, with e^b_mu on
// positions a+1 .. a+b. The block shuffle that carries positions 1..a past a+1..a+b is
// tAB(a, b) here, so the inner factor is tAB(a, b) and the outer one tAB(b, a).
HeckeElement youngSymmetrizerPrime(const Bipartition& shape);

// Both cylinder-type factorizations of c_K(d+e); returns true when both equal it.
struct CylinderCheck {
  bool first = false;
  bool second = false;
  bool ok() const { return first && second; }
};
CylinderCheck cylinderIdentityCheck(int d, int e);

}  // namespace bschur
