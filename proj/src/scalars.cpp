#include "bschur/scalars.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace bschur {

// ---------------------------------------------------------------- LaurentPoly2

LaurentPoly2::LaurentPoly2(long c) {
  if (c != 0) terms_.emplace(Exp{0, 0}, Int(c));
}

LaurentPoly2 LaurentPoly2::constant(const Int& c) { return monomial(c, 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(const Int& c, int a, int b) {
  LaurentPoly2 p;
  if (c != 0) p.terms_.emplace(Exp{a, b}, c);
  return p;
}

bool LaurentPoly2::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} && terms_.begin()->second == 1;
}

Exp LaurentPoly2::minExponents() const {
  if (terms_.empty()) return {};
  Exp m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    m.a = std::min(m.a, e.a);
    m.b = std::min(m.b, e.b);
  }
  return m;
}

Exp LaurentPoly2::maxExponents() const {
  if (terms_.empty()) return {};
  Exp m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    m.a = std::max(m.a, e.a);
    m.b = std::max(m.b, e.b);
  }
  return m;
}

LaurentPoly2 LaurentPoly2::shifted(int da, int db) const {
  if (da == 0 && db == 0) return *this;
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Exp{e.a + da, e.b + db}, c);
  return r;
}

Int LaurentPoly2::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly2 LaurentPoly2::divExact(const Int& c) const {
  if (c == 1) return *this;
  LaurentPoly2 r;
  for (const auto& [e, v] : terms_) {
    Int x;
    mpz_divexact(x.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    r.terms_.emplace_hint(r.terms_.end(), e, std::move(x));
  }
  return r;
}

void LaurentPoly2::addTerm(const Exp& e, const Int& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
  LaurentPoly2 r;
  if (x.isZero() || y.isZero()) return r;
  if (y.isMonomial()) {
    const auto& [ey, cy] = *y.terms_.begin();
    for (const auto& [e, c] : x.terms_)
      r.terms_.emplace_hint(r.terms_.end(), Exp{e.a + ey.a, e.b + ey.b}, c * cy);
    return r;
  }
  if (x.isMonomial()) return y * x;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) r.addTerm(Exp{ex.a + ey.a, ex.b + ey.b}, cx * cy);
  return r;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
  *this = *this * o;
  return *this;
}

Rat ratPow(const Rat& x, int e) {
  if (e == 0) return Rat(1);
  Rat base = x;
  if (e < 0) {
    if (sgn(x) == 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    base = 1 / x;
    e = -e;
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

Rat LaurentPoly2::evaluate(const Rat& Q, const Rat& q) const {
  Rat s = 0;
  std::map<int, Rat> powQ, powq;
  for (const auto& [e, c] : terms_) {
    auto iq = powQ.find(e.a);
    if (iq == powQ.end()) iq = powQ.emplace(e.a, ratPow(Q, e.a)).first;
    auto jq = powq.find(e.b);
    if (jq == powq.end()) jq = powq.emplace(e.b, ratPow(q, e.b)).first;
    s += Rat(c) * iq->second * jq->second;
  }
  return s;
}

std::string LaurentPoly2::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.get_str() << "*Q^" << it->first.a << "*q^" << it->first.b;
  }
  return os.str();
}

// ---------------------------------------------------------------- gcd machinery

namespace {

// Z[Q] as coefficient vectors indexed by degree, no trailing zeros.
using UPZ = std::vector<Int>;
// Z[Q][q] as vectors of Z[Q] indexed by q-degree, no trailing zeros.
using BPZ = std::vector<UPZ>;

void trim(UPZ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(BPZ& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

Int contentZ(const UPZ& p) {
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPZ scale(const UPZ& p, const Int& c) {
  UPZ r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] * c;
  trim(r);
  return r;
}

UPZ divExactZ(const UPZ& p, const Int& c) {
  UPZ r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

UPZ mul(const UPZ& a, const UPZ& b) {
  if (a.empty() || b.empty()) return {};
  UPZ r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPZ sub(const UPZ& a, const UPZ& b) {
  UPZ r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPZ primPartZ(const UPZ& p) {
  if (p.empty()) return p;
  Int c = contentZ(p);
  if (p.back() < 0) c = -c;
  return divExactZ(p, c);
}

// Pseudo-remainder of a by b over Z.
UPZ premZ(UPZ a, const UPZ& b) {
  const Int& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Int la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
    Int g = contentZ(a);
    if (g > 1) a = divExactZ(a, g);
  }
  return a;
}

UPZ positiveLead(UPZ p) {
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

UPZ gcdZ(UPZ a, UPZ b) {
  if (a.empty()) return positiveLead(b);
  if (b.empty()) return positiveLead(a);
  Int ca = contentZ(a), cb = contentZ(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primPartZ(a);
  b = primPartZ(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UPZ r = premZ(a, b);
    a = std::move(b);
    b = primPartZ(r);
  }
  return scale(primPartZ(a), c);
}

UPZ divExactUPZ(UPZ a, const UPZ& b) {
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error(ErrorKind::ConsistencyFailure, "inexact polynomial division");
  UPZ quot(a.size() - b.size() + 1, Int(0));
  while (!a.empty()) {
    if (a.size() < b.size()) throw Error(ErrorKind::ConsistencyFailure, "inexact polynomial division");
    std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()))
      throw Error(ErrorKind::ConsistencyFailure, "inexact polynomial division");
    Int t;
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    quot[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= t * b[i];
    if (a.back() != 0) throw Error(ErrorKind::ConsistencyFailure, "inexact polynomial division");
    trim(a);
  }
  trim(quot);
  return quot;
}

BPZ toBPZ(const LaurentPoly2& p) {
  BPZ r;
  for (const auto& [e, c] : p.terms()) {
    if (e.a < 0 || e.b < 0) throw Error(ErrorKind::ConsistencyFailure, "negative exponent in polynomial gcd");
    if (static_cast<int>(r.size()) <= e.b) r.resize(e.b + 1);
    UPZ& u = r[e.b];
    if (static_cast<int>(u.size()) <= e.a) u.resize(e.a + 1, Int(0));
    u[e.a] = c;
  }
  return r;
}

LaurentPoly2 fromBPZ(const BPZ& p) {
  LaurentPoly2 r;
  for (std::size_t b = 0; b < p.size(); ++b)
    for (std::size_t a = 0; a < p[b].size(); ++a)
      if (p[b][a] != 0) r += LaurentPoly2::monomial(p[b][a], static_cast<int>(a), static_cast<int>(b));
  return r;
}

UPZ contentQ(const BPZ& p) {
  UPZ g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = gcdZ(g, c);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

BPZ divByUPZ(const BPZ& p, const UPZ& c) {
  BPZ r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = divExactUPZ(p[i], c);
  return r;
}

BPZ primPartQ(const BPZ& p) {
  if (p.empty()) return p;
  UPZ c = contentQ(p);
  return divByUPZ(p, c);
}

BPZ premQ(BPZ a, const BPZ& b) {
  const UPZ& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    UPZ la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = mul(c, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(la, b[i]));
    trim(a);
    if (!a.empty()) a = primPartQ(a);
  }
  return a;
}

BPZ gcdQ(BPZ a, BPZ b) {
  UPZ ca = contentQ(a), cb = contentQ(b);
  UPZ c = gcdZ(ca, cb);
  a = divByUPZ(a, ca);
  b = divByUPZ(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BPZ r = premQ(a, b);
    a = std::move(b);
    b = r.empty() ? r : primPartQ(r);
  }
  a = primPartQ(a);
  for (auto& u : a) u = mul(u, c);
  trim(a);
  return a;
}

BPZ divExactQ(BPZ a, const BPZ& b) {
  BPZ quot;
  if (a.empty()) return quot;
  if (a.size() < b.size()) throw Error(ErrorKind::ConsistencyFailure, "inexact polynomial division");
  quot.resize(a.size() - b.size() + 1);
  while (!a.empty()) {
    if (a.size() < b.size()) throw Error(ErrorKind::ConsistencyFailure, "inexact polynomial division");
    std::size_t shift = a.size() - b.size();
    UPZ t = divExactUPZ(a.back(), b.back());
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(t, b[i]));
    quot[shift] = std::move(t);
    if (!a.back().empty()) throw Error(ErrorKind::ConsistencyFailure, "inexact polynomial division");
    trim(a);
  }
  trim(quot);
  return quot;
}

LaurentPoly2 positiveLeading(const LaurentPoly2& p) {
  if (!p.isZero() && p.leading().second < 0) return -p;
  return p;
}

}  // namespace

LaurentPoly2 polyGcd(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (a.isZero()) return positiveLeading(b);
  if (b.isZero()) return positiveLeading(a);
  if (a.isMonomial() || b.isMonomial()) {
    // gcd with a monomial: integer content gcd times the common monomial part.
    Int g = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cb.get_mpz_t());
    Exp ma = a.minExponents(), mb = b.minExponents();
    return LaurentPoly2::monomial(g, std::min(ma.a, mb.a), std::min(ma.b, mb.b));
  }
  return positiveLeading(fromBPZ(gcdQ(toBPZ(a), toBPZ(b))));
}

LaurentPoly2 polyDivExact(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (b.isZero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.isMonomial()) {
    const auto& [e, c] = *b.terms().begin();
    LaurentPoly2 r;
    for (const auto& [ea, ca] : a.terms()) {
      if (!mpz_divisible_p(ca.get_mpz_t(), c.get_mpz_t()))
        throw Error(ErrorKind::ConsistencyFailure, "inexact polynomial division");
      Int t;
      mpz_divexact(t.get_mpz_t(), ca.get_mpz_t(), c.get_mpz_t());
      r += LaurentPoly2::monomial(t, ea.a - e.a, ea.b - e.b);
    }
    return r;
  }
  return fromBPZ(divExactQ(toBPZ(a), toBPZ(b)));
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(long c) : num_(c) {}

RationalFunction::RationalFunction(const LaurentPoly2& p) : num_(p) {}

RationalFunction::RationalFunction(const LaurentPoly2& num, const LaurentPoly2& den) : num_(num), den_(den) {
  if (den_.isZero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  canonicalize(false);
}

RationalFunction RationalFunction::fromRat(const Rat& r) {
  return RationalFunction(LaurentPoly2::constant(r.get_num()), LaurentPoly2::constant(r.get_den()));
}

void RationalFunction::canonicalize(bool coprime) {
  if (num_.isZero()) {
    den_ = LaurentPoly2(1);
    return;
  }
  // Move the monomial part of the denominator into the numerator.
  Exp md = den_.minExponents();
  if (md.a != 0 || md.b != 0) {
    den_ = den_.shifted(-md.a, -md.b);
    num_ = num_.shifted(-md.a, -md.b);
  }
  if (den_.isMonomial()) {
    // den is now an integer constant.
    Int d = den_.terms().begin()->second;
    Int g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (d < 0) g = -g;
    if (g != 1) {
      num_ = num_.divExact(g);
      den_ = LaurentPoly2::constant(d / g);
    }
    return;
  }
  if (!coprime) {
    Exp mn = num_.minExponents();
    LaurentPoly2 numPoly = num_.shifted(-mn.a, -mn.b);
    LaurentPoly2 g = polyGcd(numPoly, den_);
    if (!g.isOne()) {
      // g has no monomial factor since den_ has none.
      numPoly = polyDivExact(numPoly, g);
      den_ = polyDivExact(den_, g);
      num_ = numPoly.shifted(mn.a, mn.b);
    }
  }
  Int g = num_.content(), cd = den_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading().second < 0) g = -g;
  if (g != 1) {
    num_ = num_.divExact(g);
    den_ = den_.divExact(g);
  }
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_); }

RationalFunction RationalFunction::inv() const {
  if (isZero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  RationalFunction r(Raw{}, den_, num_);
  r.canonicalize(true);
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.isZero()) return *this;
  if (isZero()) return *this = o;
  if (den_.isOne() && o.den_.isOne()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize(false);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize(false);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (isZero()) return *this;
  if (o.isZero()) return *this = o;
  if (den_.isOne() && o.den_.isOne()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.num_.isMonomial() && o.den_.isOne() && o.num_.terms().begin()->second == 1) {
    // Multiplication by a unit monomial keeps the canonical form up to the shift.
    const Exp& e = o.num_.terms().begin()->first;
    num_ = num_.shifted(e.a, e.b);
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize(false);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inv(); }

Rat RationalFunction::specialize(const Specialization& s) const {
  Rat d = den_.evaluate(s.Q(), s.q());
  if (sgn(d) == 0) throw Error(ErrorKind::PoleAtSpecialization, toString() + " at " + s.label());
  return num_.evaluate(s.Q(), s.q()) / d;
}

std::string RationalFunction::toString() const {
  if (den_.isOne() && (num_.size() <= 1 || (num_.minExponents().a >= 0 && num_.minExponents().b >= 0)))
    return num_.toString();
  Exp m = num_.minExponents();
  int na = std::max(-m.a, 0), nb = std::max(-m.b, 0);
  LaurentPoly2 n = num_.shifted(na, nb);
  LaurentPoly2 d = den_.shifted(na, nb);
  return "(" + n.toString() + ")/(" + d.toString() + ")";
}

// ---------------------------------------------------------------- Specialization

Specialization::Specialization(const Rat& Q, const Rat& q, int maxDegree) : Q_(Q), q_(q), maxDegree_(maxDegree) {
  if (sgn(Q_) == 0 || sgn(q_) == 0) throw Error(ErrorKind::InvalidSpecialization, "Q and q must be nonzero");
  if (Q_ * Q_ == 1) throw Error(ErrorKind::InvalidSpecialization, "Q^2 = 1 at " + label());
  if (q_ * q_ == 1) throw Error(ErrorKind::InvalidSpecialization, "q^2 = 1 at " + label());
  for (int i = 1; i <= maxDegree_; ++i)
    if (sgn(fPoly(i).evaluate(Q_, q_)) == 0)
      throw Error(ErrorKind::InvalidSpecialization, "f_" + std::to_string(i) + " vanishes at " + label());
}

Specialization Specialization::parse(const std::string& text, int maxDegree) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.rfind("Q=", 0) != 0 || text.compare(comma + 1, 2, "q=") != 0)
    throw Error(ErrorKind::ParseError, "expected Q=<rat>,q=<rat>, got '" + text + "'");
  return Specialization(parseRat(text.substr(2, comma - 2)), parseRat(text.substr(comma + 3)), maxDegree);
}

bool Specialization::separates(int iBound, int jBound) const {
  for (int i = -iBound; i <= iBound; ++i) {
    Rat qi = ratPow(Q_, i);
    for (int j = -jBound; j <= jBound; ++j) {
      if (i == 0 && j == 0) continue;
      Rat v = qi * ratPow(q_, j);
      if (v == 1 || v == -1) return false;
    }
  }
  return true;
}

void Specialization::requireSeparation(int iBound, int jBound) const {
  if (!separates(iBound, jBound))
    throw Error(ErrorKind::InvalidSpecialization,
                "Q^i q^j = ±1 within |i|<=" + std::to_string(iBound) + ", |j|<=" + std::to_string(jBound));
}

std::string Specialization::label() const { return "Q=" + ratToString(Q_) + ",q=" + ratToString(q_); }

std::string ratToString(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parseRat(const std::string& text) {
  auto valid = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string n = text.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(n) || !valid(d) || d[0] == '-' || d[0] == '+')
    throw Error(ErrorKind::ParseError, "not an exact rational: '" + text + "'");
  Int num(n[0] == '+' ? n.substr(1) : n), den(d);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

LaurentPoly2 fPoly(int d) {
  LaurentPoly2 f(1);
  for (int i = 1 - d; i <= d - 1; ++i) f *= LaurentPoly2::varQ(-2) + LaurentPoly2::varq(2 * i);
  return f;
}

}  // namespace bschur
