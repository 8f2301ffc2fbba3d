#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include "bschur/error.hpp"

namespace bschur {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent pair: Q^a q^b.
struct Exp {
  int a = 0;
  int b = 0;
  auto operator<=>(const Exp&) const = default;
};

// Integer Laurent polynomial in Q, q.
class LaurentPoly2 {
 public:
  using Terms = std::map<Exp, Int>;

  LaurentPoly2() = default;
  explicit LaurentPoly2(long c);
  static LaurentPoly2 constant(const Int& c);
  static LaurentPoly2 monomial(const Int& c, int a, int b);
  static LaurentPoly2 varQ(int power = 1) { return monomial(1, power, 0); }
  static LaurentPoly2 varq(int power = 1) { return monomial(1, 0, power); }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  bool isMonomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  // Componentwise minimum / maximum exponents; zero polynomial gives {0,0}.
  Exp minExponents() const;
  Exp maxExponents() const;
  // Term with the lexicographically largest exponent pair.
  const std::pair<const Exp, Int>& leading() const { return *terms_.rbegin(); }

  LaurentPoly2 shifted(int da, int db) const;
  Int content() const;
  LaurentPoly2 divExact(const Int& c) const;

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const Int& c);
  friend LaurentPoly2 operator+(LaurentPoly2 x, const LaurentPoly2& y) { return x += y; }
  friend LaurentPoly2 operator-(LaurentPoly2 x, const LaurentPoly2& y) { return x -= y; }
  friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y);
  friend bool operator==(const LaurentPoly2& x, const LaurentPoly2& y) { return x.terms_ == y.terms_; }

  Rat evaluate(const Rat& Q, const Rat& q) const;

  // Terms sorted by (a, b) descending, "c*Q^a*q^b" joined by " + "; zero prints "0".
  std::string toString() const;

 private:
  void addTerm(const Exp& e, const Int& c);
  Terms terms_;
};

class Specialization;

// Element of Frac(Z[Q^{±1}, q^{±1}]) kept in canonical form.
//
// Stored as num/den where den is a polynomial with no monomial factor and a positive
// lexicographically leading coefficient, num is a Laurent polynomial carrying the
// monomial unit, gcd(num, den) = 1 and the joint integer content is 1.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c);  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const LaurentPoly2& p);
  RationalFunction(const LaurentPoly2& num, const LaurentPoly2& den);
  static RationalFunction fromRat(const Rat& r);
  static RationalFunction Q(int power = 1) { return RationalFunction(LaurentPoly2::varQ(power)); }
  static RationalFunction q(int power = 1) { return RationalFunction(LaurentPoly2::varq(power)); }

  const LaurentPoly2& num() const { return num_; }
  const LaurentPoly2& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return den_.isOne() && num_.isOne(); }
  bool isLaurent() const { return den_.isOne(); }

  RationalFunction operator-() const;
  RationalFunction inv() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  Rat specialize(const Specialization& s) const;

  // "(num)/(den)" with monomial units distributed so both sides have nonnegative
  // exponents; a Laurent polynomial prints as its numerator alone.
  std::string toString() const;

 private:
  struct Raw {};
  RationalFunction(Raw, LaurentPoly2 num, LaurentPoly2 den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize(bool coprime);

  LaurentPoly2 num_;
  LaurentPoly2 den_{1};
};

// Evaluation point for Q, q together with the degree range it must support.
class Specialization {
 public:
  // Throws InvalidSpecialization if Q or q is zero, Q^2 = 1, q^2 = 1 or some
  // f_i(Q, q) vanishes for 1 <= i <= maxDegree.
  Specialization(const Rat& Q, const Rat& q, int maxDegree = 6);
  static Specialization defaultPoint() { return Specialization(2, 3, 6); }
  // Parses "Q=<rat>,q=<rat>".
  static Specialization parse(const std::string& text, int maxDegree = 6);

  const Rat& Q() const { return Q_; }
  const Rat& q() const { return q_; }
  int maxDegree() const { return maxDegree_; }

  // Q^i q^j != ±1 for 0 < |i| + |j|, |i| <= iBound, |j| <= jBound.
  bool separates(int iBound, int jBound) const;
  void requireSeparation(int iBound, int jBound) const;
  std::string label() const;

 private:
  Rat Q_, q_;
  int maxDegree_;
};

Rat ratPow(const Rat& x, int e);
std::string ratToString(const Rat& r);
Rat parseRat(const std::string& text);

// f_d(Q, q) = prod_{i=1-d}^{d-1} (Q^{-2} + q^{2i}).
LaurentPoly2 fPoly(int d);

// Greatest common divisor in Z[Q, q] of two polynomials with nonnegative exponents,
// normalized to a positive lexicographically leading coefficient.
LaurentPoly2 polyGcd(const LaurentPoly2& a, const LaurentPoly2& b);
// Exact quotient a / b in Z[Q, q]; throws ConsistencyFailure when b does not divide a.
LaurentPoly2 polyDivExact(const LaurentPoly2& a, const LaurentPoly2& b);

inline bool isZero(const Rat& x) { return sgn(x) == 0; }
inline bool isZero(const RationalFunction& x) { return x.isZero(); }
inline std::string scalarString(const Rat& x) { return ratToString(x); }
inline std::string scalarString(const RationalFunction& x) { return x.toString(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.toString(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly2& x) { return os << x.toString(); }

}  // namespace bschur
