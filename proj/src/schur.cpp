#include "bschur/schur.hpp"

#include <functional>

namespace bschur {

std::vector<int> youngGenerators(const Partition& blocks, int offset) {
  std::vector<int> out;
  int p = offset;
  for (int b : blocks) {
    for (int k = 1; k < b; ++k) out.push_back(p + k);
    p += b;
  }
  return out;
}

// ---------------------------------------------------------------- e-Hecke

RankOneReport eHeckeRankOne(int e, int n, const Specialization& s) {
  Special B(s);
  requireBudget(ipow(n, e), B);
  InductiveRK<Rat> rk(n, B);
  UPoly<Rat> mp = minimalPolynomial(rk.K(e));
  auto [roots, rest] = splitRoots(mp, signedMonomialCandidates(s, e, e * (e - 1)));
  if (rest.degree() > 0)
    throw Error(ErrorKind::UnclassifiedEigenvalue, "block K-matrix has factor " + rest.toString());
  RankOneReport r;
  r.e = e;
  r.n = n;
  r.roots = roots;
  r.distinctEigenvalues = static_cast<int>(roots.size());
  r.minimalPolynomialDegree = mp.degree();
  r.diagonalizable = isSquarefree(mp);
  return r;
}

int eHeckeRankOneAlgebraDim(int e) {
  if (e < 1) throw Error(ErrorKind::OutOfRange, "e >= 1");
  auto all = allElements(e);
  std::map<SignedPermutation, int> pos;
  for (std::size_t k = 0; k < all.size(); ++k) pos[all[k]] = static_cast<int>(k);
  auto flat = [&](const HeckeElement& h) {
    SparseVec<RF> v;
    for (const auto& [w, c] : h.coeffs()) v.emplace_back(pos.at(w), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };
  const HeckeElement t = HeckeElement::basis(wZero(e, 1).element);
  Echelon<RF> ech(static_cast<int>(all.size()));
  HeckeElement p = HeckeElement::one(e);
  while (ech.insert(flat(p))) p = p * t;
  return ech.rank();
}

// ---------------------------------------------------------------- +- powers

std::string pmKindName(PmKind k) {
  switch (k) {
    case PmKind::SymPlus: return "S+";
    case PmKind::SymMinus: return "S-";
    case PmKind::WedgePlus: return "L+";
    case PmKind::WedgeMinus: return "L-";
  }
  return "?";
}

PmKind parsePmKind(const std::string& s) {
  for (PmKind k : allPmKinds())
    if (pmKindName(k) == s) return k;
  throw Error(ErrorKind::ParseError, "unknown +- power kind '" + s + "' (expected S+, S-, L+, L-)");
}

const std::vector<PmKind>& allPmKinds() {
  static const std::vector<PmKind> kinds{PmKind::SymPlus, PmKind::SymMinus, PmKind::WedgePlus, PmKind::WedgeMinus};
  return kinds;
}

int pmQSign(PmKind k) { return k == PmKind::SymPlus || k == PmKind::SymMinus ? 1 : -1; }
int pmBigQSign(PmKind k) { return k == PmKind::SymPlus || k == PmKind::WedgePlus ? 1 : -1; }

long pmPowerFormula(PmKind k, int n, int d) {
  const int r = n / 2;
  if (n % 2 == 0) return pmQSign(k) > 0 ? binomial(r + d - 1, d) : binomial(r, d);
  switch (k) {
    case PmKind::SymPlus: return binomial(r + d, d);
    case PmKind::SymMinus: return binomial(r + d - 1, d);
    case PmKind::WedgePlus: return binomial(r + 1, d);
    case PmKind::WedgeMinus: return binomial(r, d);
  }
  return 0;
}

std::vector<TensorIndex> admissibleIndices(PmKind kind, int n, int d) {
  std::vector<int> vals;
  for (int t : indexSet(n))
    if (t > 0 || (t == 0 && pmBigQSign(kind) > 0)) vals.push_back(t);
  const bool strict = pmQSign(kind) < 0;
  std::vector<TensorIndex> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == d) {
      out.emplace_back(n, cur);
      return;
    }
    for (std::size_t k = from; k < vals.size(); ++k) {
      cur.push_back(vals[k]);
      rec(strict ? k + 1 : k);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------- tensor +-

Subspace<Rat> tensorPmByEigensplit(int n, int d, int sign, const Specialization& s) {
  Special B(s);
  requireBudget(ipow(n, d), B);
  TensorRep<Rat> rep(n, d, B);
  Subspace<Rat> acc = Subspace<Rat>::whole(rep.dim());
  for (int i = 1; i <= d; ++i) {
    std::vector<Candidate<Rat>> cands;
    for (int j = 1 - i; j <= i - 1; ++j) {
      cands.push_back({ratPow(s.Q(), -1) * ratPow(s.q(), 2 * j), true});
      cands.push_back({-s.Q() * ratPow(s.q(), 2 * j), false});
    }
    auto split = generalizedEigensplit(rep.rho(jucysMurphy(i, d)), cands);
    acc = intersect(acc, sign > 0 ? split.positive : split.negative);
  }
  return acc;
}

HeckeElement signedProjector(int a, int b) {
  const int d = a + b;
  HeckeElement h = HeckeElement::one(d);
  if (b > 0) h = uMinus(b, d);
  h = h * tAB(a, b);
  if (a > 0) h = h * uPlus(a, d);
  return h;
}

HeckeElement signedTransport(int a, int b) { return tAB(b, a) * signedProjector(a, b); }

HeckeElement columnConjugation(const Bipartition& shape) {
  const int a = partitionSize(shape.lambda), d = a + partitionSize(shape.mu);
  HeckeElement h = HeckeElement::one(d);
  if (!shape.lambda.empty()) h = h * embed(arrayBasis(cOfLambda(shape.lambda).element), 0, d);
  if (!shape.mu.empty()) h = h * embed(arrayBasis(cOfLambda(shape.mu).element), a, d);
  return h;
}

// ---------------------------------------------------------------- spectra

std::vector<Candidate<Rat>> signedCandidates(const Specialization& s, int iBound, int jBound) {
  std::map<Rat, bool> seen;
  std::vector<Candidate<Rat>> out;
  for (int i = -iBound; i <= iBound; ++i)
    for (int j = -jBound; j <= jBound; ++j) {
      Rat v = ratPow(s.Q(), i) * ratPow(s.q(), j);
      for (const auto& [x, positive] : {std::pair<Rat, bool>{v, true}, {Rat(-v), false}}) {
        auto [it, inserted] = seen.emplace(x, positive);
        if (inserted)
          out.push_back({x, positive});
        else if (it->second != positive)
          throw Error(ErrorKind::InvalidSpecialization,
                      ratToString(x) + " is both a positive and a negative monomial value");
      }
    }
  return out;
}

namespace {

SpectrumReport spectrumOf(const std::string& op, const ExactMatrix<Rat>& m, const std::vector<Rat>& candidates) {
  SpectrumReport r;
  r.op = op;
  UPoly<Rat> mp = minimalPolynomial(m);
  r.squarefree = isSquarefree(mp);
  auto [roots, rest] = splitRoots(mp, candidates);
  r.roots = roots;
  r.leftoverDegree = rest.degree();
  return r;
}

}  // namespace

SpectrumReport jucysMurphySpectrum(int n, int d, int i, const Specialization& s) {
  Special B(s);
  requireBudget(ipow(n, d), B);
  TensorRep<Rat> rep(n, d, B);
  std::vector<Rat> cands;
  for (int j = 1 - i; j <= i - 1; ++j) {
    cands.push_back(-s.Q() * ratPow(s.q(), 2 * j));
    cands.push_back(ratPow(s.Q(), -1) * ratPow(s.q(), 2 * j));
  }
  return spectrumOf("K_" + std::to_string(i), rep.rho(jucysMurphy(i, d)), cands);
}

SpectrumReport cylinderSpectrum(int n, int d, const Specialization& s) {
  Special B(s);
  requireBudget(ipow(n, d), B);
  TensorRep<Rat> rep(n, d, B);
  return spectrumOf("c_K", rep.rho(cK(d)), signedMonomialCandidates(s, d, d * (d - 1)));
}

// ---------------------------------------------------------------- higher +- powers

HigherPmPower higherPmPower(int d, int e, int n, PmKind kind, const Specialization& s) {
  s.requireSeparation(2 * e, 2 * e * e);
  Special B(s);
  auto g = eHeckeGenerators(d, e, n, B);
  const int N = g[0].rows();
  const auto wCands = signedCandidates(s, 0, e * e);
  const auto cCands = signedCandidates(s, e, e * (e - 1));
  HigherPmPower h;
  h.kind = kind;
  h.d = d;
  h.e = e;
  h.n = n;
  Subspace<Rat> sub = Subspace<Rat>::whole(N);
  Echelon<Rat> other(N);
  for (int i = 0; i < d; ++i) {
    const bool keepPositive = (i == 0 ? pmBigQSign(kind) : pmQSign(kind)) > 0;
    auto split = generalizedEigensplit(g[i], i == 0 ? cCands : wCands);
    sub = intersect(sub, keepPositive ? split.positive : split.negative);
    for (const auto& v : (keepPositive ? split.negative : split.positive).basis()) other.insert(v);
  }
  // Close the discarded part under the e-Hecke generators.
  std::vector<SparseVec<Rat>> frontier = Subspace<Rat>::fromEchelon(other).basis();
  while (!frontier.empty()) {
    std::vector<SparseVec<Rat>> next;
    for (const auto& v : frontier)
      for (const auto& x : g) {
        SparseVec<Rat> w = x.apply(v);
        if (other.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  h.subDim = sub.dim();
  h.quotientDim = N - other.rank();

  // Induced action on the complement of the pivot columns. Rows are images of the
  // complement unit vectors, so each matrix is the transpose of the quotient action.
  std::map<int, SparseVec<Rat>> pivotRow;
  for (const auto& r : other.rref()) pivotRow.emplace(r.front().first, r);
  std::map<int, int> slot;
  for (int j = 0; j < N; ++j)
    if (!pivotRow.count(j)) slot.emplace(j, static_cast<int>(slot.size()));
  auto modU = [&](SparseVec<Rat> v) {
    SparseVec<Rat> acc = v;
    for (const auto& [c, x] : v)
      if (auto it = pivotRow.find(c); it != pivotRow.end()) acc = axpy(acc, Rat(-x), it->second);
    SparseVec<Rat> out;
    for (const auto& [c, x] : acc)
      if (auto it = slot.find(c); it != slot.end()) out.emplace_back(it->second, x);
    return out;
  };
  h.quotientSignsOk = true;
  for (int i = 0; i < d && !slot.empty(); ++i) {
    const bool keepPositive = (i == 0 ? pmBigQSign(kind) : pmQSign(kind)) > 0;
    std::vector<SparseVec<Rat>> rows;
    for (const auto& [j, k] : slot) rows.push_back(modU(g[i].apply(SparseVec<Rat>{{j, Rat(1)}})));
    const auto& cands = i == 0 ? cCands : wCands;
    std::vector<Rat> values;
    std::map<Rat, bool> cls;
    for (const auto& c : cands) {
      values.push_back(c.value);
      cls.emplace(c.value, c.positive);
    }
    auto [roots, rest] =
        splitRoots(minimalPolynomial(ExactMatrix<Rat>::fromRows(static_cast<int>(slot.size()), std::move(rows))), values);
    if (rest.degree() > 0) h.quotientSignsOk = false;
    for (const auto& [x, m] : roots)
      if (cls.at(x) != keepPositive) h.quotientSignsOk = false;
  }
  return h;
}

}  // namespace bschur
