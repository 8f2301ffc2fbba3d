#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bschur/hecke.hpp"
#include "bschur/linalg.hpp"
#include "bschur/weyl.hpp"

namespace bschur {

// Ground field together with the values of Q, q in it.
template <class F>
class Backend;

template <>
class Backend<RationalFunction> {
 public:
  using Field = RationalFunction;
  RF Q() const { return RF::Q(); }
  RF q() const { return RF::q(); }
  RF from(const RF& x) const { return x; }
  std::string label() const { return "symbolic"; }
};

template <>
class Backend<Rat> {
 public:
  using Field = Rat;
  explicit Backend(Specialization s) : s_(std::move(s)) {}
  Rat Q() const { return s_.Q(); }
  Rat q() const { return s_.q(); }
  Rat from(const RF& x) const { return x.specialize(s_); }
  std::string label() const { return s_.label(); }
  const Specialization& specialization() const { return s_; }

 private:
  Specialization s_;
};

using Symbolic = Backend<RationalFunction>;
using Special = Backend<Rat>;

// Basis of V_n^{(x)d}: tuples ordered with the first factor most significant and index
// values ascending in each factor.
int tensorPosition(const TensorIndex& a);
TensorIndex tensorIndexAt(int n, int d, int pos);
long ipow(long base, int e);

// K_Q on V_n: v_0 -> Q^{-1} v_0, v_i -> v_{-i} (i > 0), v_i -> v_{-i} + (Q^{-1} - Q) v_i (i < 0).
template <class F>
ExactMatrix<F> kMatrix(int n, const Backend<F>& B) {
  auto vals = indexSet(n);
  std::map<int, int> pos;
  for (int k = 0; k < n; ++k) pos[vals[k]] = k;
  ExactMatrix<F> m(n, n);
  const F Qi = F(1) / B.Q();
  for (int t : vals) {
    int c = pos[t];
    if (t == 0) {
      m.set(c, c, Qi);
    } else {
      m.set(pos[-t], c, F(1));
      if (t < 0) m.set(c, c, Qi - B.Q());
    }
  }
  return m;
}

// R_q on V_n (x) V_n: v_i v_i -> q^{-1} v_i v_i, v_i v_j -> v_j v_i (i < j),
// v_i v_j -> v_j v_i + (q^{-1} - q) v_i v_j (i > j).
template <class F>
ExactMatrix<F> rMatrix(int n, const Backend<F>& B) {
  auto vals = indexSet(n);
  ExactMatrix<F> m(n * n, n * n);
  const F qi = F(1) / B.q();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int c = x * n + y;
      if (x == y) {
        m.set(c, c, qi);
      } else {
        m.set(y * n + x, c, F(1));
        if (vals[x] > vals[y]) m.set(c, c, qi - B.q());
      }
    }
  return m;
}

// Action of H^B(d) on V_n^{(x)d}: T_0 -> (K_Q)_1, T_i -> (R_q)_{i,i+1}.  Matrices act on
// column coordinates and the action is a right action: rho(xy) = rho(y) rho(x), so for a
// reduced word s_1 ... s_k of w, rho(T_w) = G_{s_k} ... G_{s_1}.
template <class F>
class TensorRep {
 public:
  TensorRep(int n, int d, Backend<F> B) : n_(n), d_(d), B_(std::move(B)) {
    if (n < 1 || d < 1) throw Error(ErrorKind::OutOfRange, "tensor space needs n, d >= 1");
    dim_ = static_cast<int>(ipow(n, d));
    ExactMatrix<F> k = kMatrix(n, B_), r = rMatrix(n, B_);
    gens_.push_back(kron(k, ExactMatrix<F>::identity(static_cast<int>(ipow(n, d - 1)))));
    for (int i = 1; i < d; ++i)
      gens_.push_back(kron(kron(ExactMatrix<F>::identity(static_cast<int>(ipow(n, i - 1))), r),
                           ExactMatrix<F>::identity(static_cast<int>(ipow(n, d - i - 1)))));
  }

  int n() const { return n_; }
  int d() const { return d_; }
  int dim() const { return dim_; }
  const Backend<F>& backend() const { return B_; }
  const std::vector<ExactMatrix<F>>& generators() const { return gens_; }
  const ExactMatrix<F>& generator(int i) const { return gens_.at(i); }

  // rho(T_w), cached; built as rho(T_{w'}) G_s with w = s w' and l(w') = l(w) - 1.
  const ExactMatrix<F>& basisOperator(const SignedPermutation& w) {
    if (w.degree() != d_) throw Error(ErrorKind::DegreeMismatch, "rho: element of degree " + std::to_string(w.degree()));
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    if (w.length() == 0) return cache_.emplace(w, ExactMatrix<F>::identity(dim_)).first->second;
    int s = w.reducedWord().front();
    SignedPermutation rest = SignedPermutation::generator(d_, s) * w;
    ExactMatrix<F> m = basisOperator(rest) * gens_[s];
    return cache_.emplace(w, std::move(m)).first->second;
  }

  ExactMatrix<F> rho(const HeckeElement& h) {
    if (h.degree() != d_) throw Error(ErrorKind::DegreeMismatch, "rho: element of degree " + std::to_string(h.degree()));
    ExactMatrix<F> m(dim_, dim_);
    for (const auto& [w, c] : h.coeffs()) m = m + basisOperator(w).scaledBy(B_.from(c));
    return m;
  }

 private:
  int n_, d_, dim_ = 0;
  Backend<F> B_;
  std::vector<ExactMatrix<F>> gens_;
  std::map<SignedPermutation, ExactMatrix<F>> cache_;
};

// Nonzero entries of a failing difference lhs - rhs, scalars in canonical form.
struct MatrixWitness {
  int rows = 0, cols = 0;
  std::vector<std::tuple<int, int, std::string>> entries;
};

template <class F>
MatrixWitness witnessOf(const ExactMatrix<F>& diff) {
  MatrixWitness w;
  w.rows = diff.rows();
  w.cols = diff.cols();
  for (int i = 0; i < diff.rows(); ++i)
    for (const auto& [j, c] : diff.row(i)) w.entries.emplace_back(i, j, scalarString(c));
  return w;
}

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::optional<MatrixWitness> witness;
};

// lhs == rhs, keeping the difference when they disagree.
template <class F>
NamedCheck matrixCheck(const std::string& name, const ExactMatrix<F>& lhs, const ExactMatrix<F>& rhs) {
  if (lhs == rhs) return {name, true, std::nullopt};
  return {name, false, witnessOf(ExactMatrix<F>(lhs - rhs))};
}

// Folds several instances of one relation into a single check; the first failure is kept.
inline void foldCheck(NamedCheck& acc, const NamedCheck& c) {
  if (acc.pass && !c.pass) {
    acc.pass = false;
    acc.witness = c.witness;
  }
}

// The six defining relations of H^B(d) transported through rho.
template <class F>
std::vector<NamedCheck> heckeRelationChecks(TensorRep<F>& rep) {
  const auto& G = rep.generators();
  const int d = rep.d(), N = rep.dim();
  const F Q = rep.backend().Q(), q = rep.backend().q();
  auto I = [&](const F& c) { return ExactMatrix<F>::identity(N, c); };
  const ExactMatrix<F> Z(N, N);
  std::vector<NamedCheck> out;
  out.push_back(matrixCheck("(T0+Q)(T0-Q^-1)=0", (G[0] + I(Q)) * (G[0] - I(F(1) / Q)), Z));
  NamedCheck quad{"(Ti+q)(Ti-q^-1)=0", true, {}}, braidB{"T0T1T0T1=T1T0T1T0", true, {}},
      braidA{"TiTi+1Ti=Ti+1TiTi+1", true, {}}, farA{"TiTj=TjTi", true, {}}, farB{"T0Tj=TjT0", true, {}};
  for (int i = 1; i < d; ++i) foldCheck(quad, matrixCheck(quad.name, (G[i] + I(q)) * (G[i] - I(F(1) / q)), Z));
  if (d >= 2) foldCheck(braidB, matrixCheck(braidB.name, G[0] * G[1] * G[0] * G[1], G[1] * G[0] * G[1] * G[0]));
  for (int i = 1; i + 1 < d; ++i)
    foldCheck(braidA, matrixCheck(braidA.name, G[i] * G[i + 1] * G[i], G[i + 1] * G[i] * G[i + 1]));
  for (int i = 1; i < d; ++i)
    for (int j = i + 2; j < d; ++j) foldCheck(farA, matrixCheck(farA.name, G[i] * G[j], G[j] * G[i]));
  for (int j = 2; j < d; ++j) foldCheck(farB, matrixCheck(farB.name, G[0] * G[j], G[j] * G[0]));
  for (auto* c : {&quad, &braidB, &braidA, &farA, &farB}) out.push_back(*c);
  return out;
}

// ---------------------------------------------------------------- inductive R and K

// R_{p,q}: V^{(x)p} (x) V^{(x)q} -> V^{(x)q} (x) V^{(x)p} from
// R_{X(x)Y,Z} = (R_{X,Z} (x) Id_Y)(Id_X (x) R_{Y,Z}) and
// R_{X,Y(x)Z} = (Id_Y (x) R_{X,Z})(R_{X,Y} (x) Id_Z).
template <class F>
class InductiveRK {
 public:
  InductiveRK(int n, Backend<F> B) : n_(n), B_(std::move(B)) {
    R11_ = rMatrix(n, B_);
    K1_ = kMatrix(n, B_);
  }
  int n() const { return n_; }

  const ExactMatrix<F>& R(int p, int q) {
    if (p < 0 || q < 0) throw Error(ErrorKind::IncompatibleSpaces, "negative tensor exponent");
    auto key = std::make_pair(p, q);
    auto it = Rcache_.find(key);
    if (it != Rcache_.end()) return it->second;
    ExactMatrix<F> m;
    if (p == 0 || q == 0) {
      m = ExactMatrix<F>::identity(static_cast<int>(ipow(n_, p + q)));
    } else if (p == 1 && q == 1) {
      m = R11_;
    } else if (p == 1) {
      m = kron(id(1), R(1, q - 1)) * kron(R(1, 1), id(q - 1));
    } else {
      m = kron(R(1, q), id(p - 1)) * kron(id(1), R(p - 1, q));
    }
    return Rcache_.emplace(key, std::move(m)).first->second;
  }

  // K_{V(x)W} = (K_V (x) Id_W) R_{W,V} (K_W (x) Id_V) R_{V,W} with V = V_n and
  // W = V_n^{(x)(p-1)}.  withInnerK = false replaces K_W by the identity.
  ExactMatrix<F> K(int p, bool withInnerK = true) {
    if (p < 1) throw Error(ErrorKind::IncompatibleSpaces, "K needs p >= 1");
    if (p == 1) return K1_;
    ExactMatrix<F> kw = withInnerK ? K(p - 1) : id(p - 1);
    return kron(K1_, id(p - 1)) * R(p - 1, 1) * kron(kw, id(1)) * R(1, p - 1);
  }

  ExactMatrix<F> id(int p) const { return ExactMatrix<F>::identity(static_cast<int>(ipow(n_, p))); }

 private:
  int n_;
  Backend<F> B_;
  ExactMatrix<F> R11_, K1_;
  std::map<std::pair<int, int>, ExactMatrix<F>> Rcache_;
};

// YBE on X (x) Y (x) Z with X, Y, Z tensor powers p1, p2, p3 of V_n.
template <class F>
bool yangBaxterHolds(InductiveRK<F>& rk, int p1, int p2, int p3) {
  auto lhs = kron(rk.R(p2, p3), rk.id(p1)) * kron(rk.id(p2), rk.R(p1, p3)) * kron(rk.R(p1, p2), rk.id(p3));
  auto rhs = kron(rk.id(p3), rk.R(p1, p2)) * kron(rk.R(p1, p3), rk.id(p2)) * kron(rk.id(p1), rk.R(p2, p3));
  return lhs == rhs;
}

// Reflection equation on V (x) W, V = V_n^{(x)p}, W = V_n^{(x)r}, with block K-matrices from
// the inductive formula:  (K_V (x) 1) R_{W,V} (K_W (x) 1) R_{V,W} = R_{W,V} (K_W (x) 1) R_{V,W} (K_V (x) 1).
// withInnerK = false replaces K_W by the identity (negative control).
template <class F>
bool reflectionHolds(InductiveRK<F>& rk, int p, int r, bool withInnerK = true) {
  ExactMatrix<F> kv = kron(rk.K(p), rk.id(r));
  ExactMatrix<F> kw = withInnerK ? kron(rk.K(r), rk.id(p)) : rk.id(p + r);
  auto lhs = kv * rk.R(r, p) * kw * rk.R(p, r);
  auto rhs = rk.R(r, p) * kw * rk.R(p, r) * kv;
  return lhs == rhs;
}

// ---------------------------------------------------------------- permutation modules

template <class F>
struct PermutationModule {
  TensorIndex a;
  std::vector<TensorIndex> orbit;  // deterministic order (lexicographic)
  std::vector<int> positions;      // positions in V_n^{(x)d}
  std::vector<ExactMatrix<F>> gens;  // restricted generators in the orbit basis
};

template <class F>
PermutationModule<F> permutationModule(TensorRep<F>& rep, const TensorIndex& a) {
  if (a.n != rep.n() || a.degree() != rep.d()) throw Error(ErrorKind::SizeMismatch, "index does not match the space");
  PermutationModule<F> pm;
  pm.a = a;
  pm.orbit = orbitAndStabilizer(a).orbit;
  std::sort(pm.orbit.begin(), pm.orbit.end());
  for (const auto& b : pm.orbit) pm.positions.push_back(tensorPosition(b));
  for (const auto& g : rep.generators()) pm.gens.push_back(g.submatrix(pm.positions, pm.positions));
  return pm;
}

// Shift of an index from I_n into I_{n+2}: entries with |t| >= j2 move one step outward.
TensorIndex shiftIndexPair(const TensorIndex& a, int j2);
// Shift of an index from I_n (n even) into I_{n+1}: every entry moves half a step outward.
TensorIndex shiftIndexCenter(const TensorIndex& a);

struct AddZerosReport {
  Composition theta, thetaPrime;
  int dim = 0;
  bool bijective = false;
  bool intertwines = false;
  bool ok() const { return bijective && intertwines; }
};

// Adding zeros: V(a(theta)) at n and V(a(theta')) at n' are identified by the index
// shift, and the resulting permutation matrix intertwines all restricted generators.
// j2 > 0 adds a pair at +-j2/2; j2 = 0 adds a center zero (n even).
template <class F>
AddZerosReport verifyAddZeros(const Composition& theta, int j2, const Backend<F>& B) {
  AddZerosReport rep;
  rep.theta = theta;
  rep.thetaPrime = j2 > 0 ? addZeroPair(theta, j2) : addZeroCenter(theta);
  const int d = theta.total();
  if (d < 1) throw Error(ErrorKind::InvalidShape, "composition of zero");
  TensorRep<F> small(theta.n, d, B), big(rep.thetaPrime.n, d, B);
  TensorIndex a = toIndex(theta), ap = toIndex(rep.thetaPrime);
  auto pm = permutationModule(small, a);
  auto pmp = permutationModule(big, ap);
  rep.dim = static_cast<int>(pm.orbit.size());
  std::map<TensorIndex, int> where;
  for (int k = 0; k < static_cast<int>(pmp.orbit.size()); ++k) where[pmp.orbit[k]] = k;
  std::vector<SparseVec<F>> cols;
  std::set<int> hit;
  bool ok = pm.orbit.size() == pmp.orbit.size();
  for (const auto& b : pm.orbit) {
    TensorIndex s = j2 > 0 ? shiftIndexPair(b, j2) : shiftIndexCenter(b);
    auto it = where.find(s);
    if (it == where.end()) {
      ok = false;
      break;
    }
    hit.insert(it->second);
    cols.push_back(unitVec<F>(it->second));
  }
  rep.bijective = ok && hit.size() == pmp.orbit.size();
  if (!rep.bijective) return rep;
  ExactMatrix<F> P = ExactMatrix<F>::fromColumns(static_cast<int>(pmp.orbit.size()), cols);
  rep.intertwines = true;
  for (std::size_t k = 0; k < pm.gens.size(); ++k)
    rep.intertwines = rep.intertwines && (P * pm.gens[k] == pmp.gens[k] * P);
  return rep;
}

// ---------------------------------------------------------------- v-bar embedding

// v-bar_a in V_{targetN}^{(x)d} for 0 <= a_1 <= ... <= a_d (n odd): the k leading zeros
// become sum_w Q^{-l0(w)} q^{-l1(w)} v_{w(1/2, ..., 1/2)} over minimal coset
// representatives of W^B(k)/S_k; positive entries shift up by 1/2.
template <class F>
SparseVec<F> barVector(const TensorIndex& a, int targetN, const Backend<F>& B) {
  const int d = a.degree();
  if (a.n % 2 == 0) throw Error(ErrorKind::InvalidIndex, "v-bar needs integer indices (n odd)");
  if (targetN % 2 != 0 || targetN < a.n + 1) throw Error(ErrorKind::InvalidIndex, "target must be even and >= n+1");
  for (int i = 0; i < d; ++i)
    if (a.doubled[i] < 0 || (i > 0 && a.doubled[i] < a.doubled[i - 1]))
      throw Error(ErrorKind::InvalidIndex, "v-bar needs 0 <= a_1 <= ... <= a_d");
  int k = 0;
  while (k < d && a.doubled[k] == 0) ++k;
  std::vector<int> tail;
  for (int i = k; i < d; ++i) tail.push_back(a.doubled[i] + 1);
  std::map<int, F> acc;
  if (k == 0) {
    acc[tensorPosition(TensorIndex(targetN, tail))] = F(1);
  } else {
    TensorIndex halves(2, std::vector<int>(k, 1));
    for (const auto& [b, w] : minimalCosetRepresentatives(halves)) {
      auto [l0, l1] = w.lengthSplit();
      F c = F(1);
      for (int t = 0; t < l0; ++t) c = c / B.Q();
      for (int t = 0; t < l1; ++t) c = c / B.q();
      std::vector<int> full = b.doubled;
      full.insert(full.end(), tail.begin(), tail.end());
      acc[tensorPosition(TensorIndex(targetN, full))] += c;
    }
  }
  SparseVec<F> v;
  for (auto& [p, c] : acc)
    if (!isZero(c)) v.emplace_back(p, c);
  return v;
}

struct BarEmbeddingReport {
  int sourceDim = 0;
  int rank = 0;
  bool equivariant = false;
  bool ok() const { return equivariant && rank == sourceDim; }
};

// Phi: V(a) -> V_{targetN}^{(x)d}, Phi(v_a . T) = v-bar_a . T, built on a spanning set of
// Hecke translates of v_a; equivariance is then checked on every basis vector.
template <class F>
BarEmbeddingReport verifyBarEmbedding(const TensorIndex& a, int targetN, const Backend<F>& B,
                                      ExactMatrix<F>* phiOut = nullptr) {
  const int d = a.degree();
  TensorRep<F> src(a.n, d, B), dst(targetN, d, B);
  auto pm = permutationModule(src, a);
  const int m = static_cast<int>(pm.orbit.size());
  std::map<int, int> local;
  for (int k = 0; k < m; ++k) local[pm.positions[k]] = k;
  SparseVec<F> start = unitVec<F>(local.at(tensorPosition(a)));
  SparseVec<F> startBar = barVector(a, targetN, B);
  // Breadth-first translates by generators, keeping pairs (u, Phi(u)).
  Echelon<F> ech(m);
  std::vector<std::pair<SparseVec<F>, SparseVec<F>>> pairs{{start, startBar}};
  ech.insert(start);
  for (std::size_t j = 0; j < pairs.size() && static_cast<int>(pairs.size()) < m; ++j)
    for (int k = 0; k < d; ++k) {
      SparseVec<F> u = pm.gens[k].apply(pairs[j].first);
      if (ech.insert(u)) pairs.emplace_back(u, dst.generator(k).apply(pairs[j].second));
    }
  BarEmbeddingReport rep;
  rep.sourceDim = m;
  if (static_cast<int>(pairs.size()) < m) return rep;  // v_a not cyclic: cannot define Phi this way
  std::vector<std::vector<F>> U(m, std::vector<F>(m, F(0)));
  for (int j = 0; j < m; ++j)
    for (const auto& [i, v] : pairs[j].first) U[i][j] = v;
  auto Uinv = denseInverse(U);
  // Phi = [Phi(u_j)] U^{-1}
  std::vector<SparseVec<F>> cols(m);
  for (int c = 0; c < m; ++c) {
    SparseVec<F> col;
    for (int j = 0; j < m; ++j)
      if (!isZero(Uinv[j][c])) col = axpy(col, Uinv[j][c], pairs[j].second);
    cols[c] = std::move(col);
  }
  ExactMatrix<F> phi = ExactMatrix<F>::fromColumns(dst.dim(), cols);
  rep.rank = bschur::rank(phi);
  rep.equivariant = true;
  for (int k = 0; k < d; ++k) rep.equivariant = rep.equivariant && (phi * pm.gens[k] == dst.generator(k) * phi);
  if (phiOut) *phiOut = phi;
  return rep;
}

// ---------------------------------------------------------------- quantum group action

// Generators of U_q(gl_n) and of the coideal subalgebra acting on V_n^{(x)d}.
// Indices are doubled: E_i, F_i for i in I_{n-1}, D_i for i in I_n.
template <class F>
class QuantumAction {
 public:
  QuantumAction(int n, int d, Backend<F> B) : n_(n), d_(d), B_(std::move(B)) {
    if (n < 1 || d < 1) throw Error(ErrorKind::OutOfRange, "quantum action needs n, d >= 1");
    vals_ = indexSet(n);
    for (int k = 0; k < n; ++k) pos_[vals_[k]] = k;
  }

  int n() const { return n_; }
  int d() const { return d_; }

  // Single-factor matrices.
  ExactMatrix<F> E1(int i2) const { return shift1(i2, -1); }
  ExactMatrix<F> F1(int i2) const { return shift1(i2, +1); }
  ExactMatrix<F> D1(int i2, int power = 1) const {
    ExactMatrix<F> m(n_, n_);
    for (int k = 0; k < n_; ++k) m.set(k, k, vals_[k] == i2 ? powq(power) : F(1));
    return m;
  }
  // H_j = D_{j-1/2} D_{j+1/2}^{-1}.
  ExactMatrix<F> H1(int j2, int power = 1) const { return D1(j2 - 1, power) * D1(j2 + 1, -power); }

  // Operators on the tensor power; coproducts iterated right-leaning:
  // Delta(E) = 1 (x) E + E (x) H^{-1}, Delta(F) = F (x) 1 + H (x) F, D and H group-like.
  ExactMatrix<F> E(int i2) const { return coproduct(E1(i2), H1(i2, -1), true, d_); }
  ExactMatrix<F> Fo(int i2) const { return coproduct(F1(i2), H1(i2, 1), false, d_); }
  ExactMatrix<F> D(int i2, int power = 1) const { return groupLike(D1(i2, power)); }
  ExactMatrix<F> H(int j2, int power = 1) const { return groupLike(H1(j2, power)); }

  bool hasT() const { return n_ % 2 == 0; }
  bool hasHalf() const { return n_ % 2 == 1 && n_ > 1; }

  // e_i = E_i + F_{-i} H_i^{-1}, f_i = E_{-i} + H_{-i}^{-1} F_i for i > 0, i != 1/2.
  ExactMatrix<F> e(int i2) const {
    requireRegular(i2);
    return E(i2) + Fo(-i2) * H(i2, -1);
  }
  ExactMatrix<F> f(int i2) const {
    requireRegular(i2);
    return E(-i2) + H(-i2, -1) * Fo(i2);
  }
  // d_i = D_i D_{-i}.
  ExactMatrix<F> dgen(int i2) const { return D(i2) * D(-i2); }
  // e_{1/2} = E_{1/2} + Q^{-1} F_{-1/2} H_{1/2}^{-1}, f_{1/2} = E_{-1/2} + Q H_{-1/2}^{-1} F_{1/2}; n odd.
  ExactMatrix<F> eHalf() const {
    if (!hasHalf()) throw Error(ErrorKind::ParityMismatch, "e_1/2 exists only for odd n >= 3");
    return E(1) + (Fo(-1) * H(1, -1)).scaledBy(F(1) / B_.Q());
  }
  ExactMatrix<F> fHalf() const {
    if (!hasHalf()) throw Error(ErrorKind::ParityMismatch, "f_1/2 exists only for odd n >= 3");
    return E(-1) + (H(-1, -1) * Fo(1)).scaledBy(B_.Q());
  }
  // t = E_0 + q F_0 H_0^{-1} + (Q - Q^{-1})/(q - q^{-1}) H_0^{-1}; n even.
  ExactMatrix<F> t() const {
    if (!hasT()) throw Error(ErrorKind::ParityMismatch, "t exists only for even n");
    const F Q = B_.Q(), q = B_.q();
    F c = (Q - F(1) / Q) / (q - F(1) / q);
    return E(0) + (Fo(0) * H(0, -1)).scaledBy(q) + H(0, -1).scaledBy(c);
  }

  // Generating set of the coideal subalgebra, named.
  std::vector<std::pair<std::string, ExactMatrix<F>>> coidealGenerators() const {
    std::vector<std::pair<std::string, ExactMatrix<F>>> out;
    if (hasHalf()) {
      out.emplace_back("e_1/2", eHalf());
      out.emplace_back("f_1/2", fHalf());
    }
    if (hasT()) out.emplace_back("t", t());
    for (int i2 : indexSet(std::max(n_ - 1, 1))) {
      if (n_ == 1 || i2 <= 0 || (i2 == 1 && hasHalf())) continue;
      out.emplace_back("e_" + halfName(i2), e(i2));
      out.emplace_back("f_" + halfName(i2), f(i2));
    }
    for (int j2 : vals_)
      if (j2 > 0) out.emplace_back("d_" + halfName(j2), dgen(j2));
    return out;
  }

 private:
  static std::string halfName(int t) { return t % 2 == 0 ? std::to_string(t / 2) : std::to_string(t) + "/2"; }

  void requireRegular(int i2) const {
    if (n_ < 2 || std::abs(i2) > n_ - 2 || (i2 + n_) % 2 != 0 || i2 <= 0)
      throw Error(ErrorKind::OutOfRange, "coideal generator index not in I_{n-1}, i > 0");
    if (i2 == 1 && hasHalf()) throw Error(ErrorKind::ParityMismatch, "use e_1/2, f_1/2 for i = 1/2");
  }

  F powq(int p) const {
    F r(1);
    for (int k = 0; k < std::abs(p); ++k) r = p > 0 ? F(r * B_.q()) : F(r / B_.q());
    return r;
  }

  // E: v_{i+1/2} -> v_{i-1/2} (dir = -1); F: v_{i-1/2} -> v_{i+1/2} (dir = +1).
  ExactMatrix<F> shift1(int i2, int dir) const {
    ExactMatrix<F> m(n_, n_);
    int src = i2 - dir, dst = i2 + dir;
    if (pos_.count(src) && pos_.count(dst)) m.set(pos_.at(dst), pos_.at(src), F(1));
    return m;
  }

  ExactMatrix<F> groupLike(const ExactMatrix<F>& x) const {
    ExactMatrix<F> m = x;
    for (int k = 1; k < d_; ++k) m = kron(m, x);
    return m;
  }

  ExactMatrix<F> power(const ExactMatrix<F>& x, int k) const {
    ExactMatrix<F> m = ExactMatrix<F>::identity(1);
    for (int j = 0; j < k; ++j) m = kron(m, x);
    return m;
  }

  // Right-leaning iteration of the coproduct.
  ExactMatrix<F> coproduct(const ExactMatrix<F>& x, const ExactMatrix<F>& h, bool isE, int d) const {
    if (d == 1) return x;
    ExactMatrix<F> rest = coproduct(x, h, isE, d - 1);
    if (isE) return kron(ExactMatrix<F>::identity(n_), rest) + kron(x, power(h, d - 1));
    return kron(x, ExactMatrix<F>::identity(static_cast<int>(ipow(n_, d - 1)))) + kron(h, rest);
  }

  int n_, d_;
  Backend<F> B_;
  std::vector<int> vals_;
  std::map<int, int> pos_;
};

struct DoubleCentralizerReport {
  bool commute = false;       // symbolic commutation of coideal and Hecke generators
  long commutantDim = 0;      // at the specialization
  long coidealAlgebraDim = 0; // at the specialization
  bool ok() const { return commute && commutantDim == coidealAlgebraDim; }
};

DoubleCentralizerReport verifyDoubleCentralizer(int n, int d, const Specialization& s);

// Roots of p found among the candidates, with multiplicities; the leftover factor has
// no candidate roots.
template <class F>
std::pair<std::vector<std::pair<F, int>>, UPoly<F>> splitRoots(UPoly<F> p, const std::vector<F>& candidates) {
  std::vector<std::pair<F, int>> roots;
  for (const auto& c : candidates) {
    int mult = 0;
    while (p.degree() > 0 && isZero(p(c))) {
      p = UPoly<F>::divmod(p, UPoly<F>::linear(c)).first;
      ++mult;
    }
    if (mult) roots.emplace_back(c, mult);
  }
  return {roots, p};
}

// +-Q^i q^j at the specialization for |i| <= iBound, |j| <= jBound, no duplicates.
std::vector<Rat> signedMonomialCandidates(const Specialization& s, int iBound, int jBound);

}  // namespace bschur
