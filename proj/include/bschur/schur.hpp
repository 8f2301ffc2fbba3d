#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "bschur/rep.hpp"

namespace bschur {

// Largest ambient dimensions handled per backend.
inline constexpr long kSymbolicBudget = 125;
inline constexpr long kSpecialBudget = 343;

template <class F>
long budgetFor(const Backend<F>&) {
  return std::is_same_v<F, Rat> ? kSpecialBudget : kSymbolicBudget;
}

template <class F>
void requireBudget(long dim, const Backend<F>& B) {
  if (dim > budgetFor(B))
    throw Error(ErrorKind::BudgetExceeded, "ambient dimension " + std::to_string(dim) + " exceeds the " + B.label() +
                                               " budget " + std::to_string(budgetFor(B)));
}

// ---------------------------------------------------------------- subspace helpers

// Span of M b over the basis vectors b of W.
template <class F>
Subspace<F> applyTo(const ExactMatrix<F>& M, const Subspace<F>& W) {
  std::vector<SparseVec<F>> out;
  for (const auto& b : W.basis()) out.push_back(M.apply(b));
  return Subspace<F>::span(M.rows(), out);
}

// Projection of W onto G along U, for V = G (+) U: (W + U) meet G.
template <class F>
Subspace<F> projectAlong(const Subspace<F>& W, const Subspace<F>& G, const Subspace<F>& U) {
  return intersect(W.plus(U), G);
}

// Joint kernel of (G_i - c_i) over the listed generators; the whole space if none.
template <class F>
Subspace<F> jointEigenspace(TensorRep<F>& rep, const std::vector<int>& gens, const std::vector<F>& values) {
  if (gens.empty()) return Subspace<F>::whole(rep.dim());
  std::vector<SparseVec<F>> rows;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    ExactMatrix<F> A = rep.generator(gens[k]) - ExactMatrix<F>::identity(rep.dim(), values[k]);
    rows.insert(rows.end(), A.rowData().begin(), A.rowData().end());
  }
  return kernelOfRows(rep.dim(), rows);
}

// Sum of the images of (G_i - c_i).
template <class F>
Subspace<F> relationSpace(TensorRep<F>& rep, const std::vector<int>& gens, const std::vector<F>& values) {
  Echelon<F> e(rep.dim());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    ExactMatrix<F> A = rep.generator(gens[k]) - ExactMatrix<F>::identity(rep.dim(), values[k]);
    for (const auto& c : A.columns()) e.insert(c);
  }
  return Subspace<F>::fromEchelon(e);
}

// Generators s_i of the Young subgroup on consecutive blocks starting after offset.
std::vector<int> youngGenerators(const Partition& blocks, int offset);

// ---------------------------------------------------------------- Schur algebras

template <class F>
struct SchurAlgebra {
  int n = 0, m = 0, d = 0;
  std::vector<ExactMatrix<F>> basis;  // maps V_m^{(x)d} -> V_n^{(x)d}
  bool commutes = false;              // post-check against every generator
  long dim() const { return static_cast<long>(basis.size()); }
};

// S^B(m, n; d) = Hom_H(V_m^{(x)d}, V_n^{(x)d}).
template <class F>
SchurAlgebra<F> schurAlgebra(int n, int m, int d, const Backend<F>& B) {
  requireBudget(std::max(ipow(n, d), ipow(m, d)), B);
  TensorRep<F> src(m, d, B), dst(n, d, B);
  SchurAlgebra<F> s;
  s.n = n;
  s.m = m;
  s.d = d;
  s.basis = intertwinerBasis(src.generators(), dst.generators());
  s.commutes = true;
  for (const auto& X : s.basis)
    for (int k = 0; k < d; ++k) s.commutes = s.commutes && (X * src.generator(k) == dst.generator(k) * X);
  return s;
}

// ---------------------------------------------------------------- e-Hecke algebras

// T_{w_0}, T_{w_1}, ..., T_{w_{d-1}} on (V_n^{(x)e})^{(x)d}: (K_{V^{(x)e}})_1 and block R-matrices.
template <class F>
std::vector<ExactMatrix<F>> eHeckeGenerators(int d, int e, int n, const Backend<F>& B) {
  if (d < 1 || e < 1) throw Error(ErrorKind::OutOfRange, "e-Hecke generators need d, e >= 1");
  requireBudget(ipow(n, d * e), B);
  InductiveRK<F> rk(n, B);
  std::vector<ExactMatrix<F>> g;
  g.push_back(kron(rk.K(e), rk.id(e * (d - 1))));
  for (int i = 1; i < d; ++i) g.push_back(kron(kron(rk.id(e * (i - 1)), rk.R(e, e)), rk.id(e * (d - i - 1))));
  return g;
}

// Each block generator against rho of its word in H^B(de).
template <class F>
std::vector<NamedCheck> eHeckeConsistency(int d, int e, int n, const Backend<F>& B) {
  auto g = eHeckeGenerators(d, e, n, B);
  TensorRep<F> rep(n, d * e, B);
  std::vector<NamedCheck> out;
  out.push_back(matrixCheck("T_w0 = (K_V)_1", g[0], rep.basisOperator(wZero(e, d).element)));
  for (int i = 1; i < d; ++i)
    out.push_back(matrixCheck("T_w" + std::to_string(i) + " = (R_V)_" + std::to_string(i) + "," + std::to_string(i + 1),
                              g[i], rep.basisOperator(wBlock(i, e, d).element)));
  return out;
}

// Images of the type-B braid relations among block generators.
template <class F>
std::vector<NamedCheck> eHeckeBraidChecks(const std::vector<ExactMatrix<F>>& g) {
  const int d = static_cast<int>(g.size());
  bool bB = d < 2 || (g[0] * g[1] * g[0] * g[1] == g[1] * g[0] * g[1] * g[0]);
  bool bA = true, far = true;
  for (int i = 1; i + 1 < d; ++i) bA = bA && (g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1]);
  for (int i = 0; i < d; ++i)
    for (int j = std::max(i + 2, 2); j < d; ++j) far = far && (g[i] * g[j] == g[j] * g[i]);
  return {{"Tw0Tw1Tw0Tw1=Tw1Tw0Tw1Tw0", bB, std::nullopt},
          {"TwiTwi+1Twi=Twi+1TwiTwi+1", bA, std::nullopt},
          {"TwiTwj=TwjTwi", far, std::nullopt}};
}

struct RankOneReport {
  int e = 0, n = 0;
  std::vector<std::pair<Rat, int>> roots;  // eigenvalue, multiplicity in the minimal polynomial
  int distinctEigenvalues = 0;
  int minimalPolynomialDegree = 0;
  bool diagonalizable = false;
};

// Spectrum of the block K-matrix K_{V_n^{(x)e}} at s.
RankOneReport eHeckeRankOne(int e, int n, const Specialization& s);
// dim H^B(1, e), computed in the abstract algebra as the dimension of the span of the
// powers of T_{w_0} in H^B(e).
int eHeckeRankOneAlgebraDim(int e);

// ---------------------------------------------------------------- +- powers

enum class PmKind { SymPlus, SymMinus, WedgePlus, WedgeMinus };

std::string pmKindName(PmKind k);  // "S+", "S-", "L+", "L-"
PmKind parsePmKind(const std::string& s);
const std::vector<PmKind>& allPmKinds();
// +1 when T_i (i > 0) keeps q^{-1}, -1 when it keeps -q.
int pmQSign(PmKind k);
// +1 when T_0 keeps Q^{-1}, -1 when it keeps -Q.
int pmBigQSign(PmKind k);
// The six binomial dimension formulas.
long pmPowerFormula(PmKind k, int n, int d);

template <class F>
struct PmPower {
  PmKind kind = PmKind::SymPlus;
  int n = 0, d = 0;
  Subspace<F> relations;  // span of the (T - c)w, quotient presentation
  Subspace<F> kernel;     // joint eigenspace, kernel presentation (Gamma for S)
  int quotientDim() const { return relations.ambientDim() - relations.dim(); }
  int kernelDim() const { return kernel.dim(); }
};

template <class F>
std::vector<F> pmKeptValues(PmKind k, int d, const Backend<F>& B) {
  std::vector<F> v;
  v.push_back(pmBigQSign(k) > 0 ? F(F(1) / B.Q()) : F(-B.Q()));
  for (int i = 1; i < d; ++i) v.push_back(pmQSign(k) > 0 ? F(F(1) / B.q()) : F(-B.q()));
  return v;
}

template <class F>
PmPower<F> pmPower(int n, int d, PmKind kind, const Backend<F>& B) {
  requireBudget(ipow(n, d), B);
  TensorRep<F> rep(n, d, B);
  std::vector<int> gens(d);
  for (int i = 0; i < d; ++i) gens[i] = i;
  auto vals = pmKeptValues(kind, d, B);
  PmPower<F> p;
  p.kind = kind;
  p.n = n;
  p.d = d;
  p.relations = relationSpace(rep, gens, vals);
  p.kernel = jointEigenspace(rep, gens, vals);
  return p;
}

// Indices 0 <= a_1 <= ... <= a_d (strict for wedge kinds, a_1 > 0 for minus kinds).
std::vector<TensorIndex> admissibleIndices(PmKind kind, int n, int d);

template <class F>
struct PmBasis {
  std::vector<TensorIndex> indices;
  std::vector<SparseVec<F>> vectors;
  bool inKernel = false;            // each vector is a joint eigenvector of the kind
  bool basisOfQuotient = false;     // images are independent and span the quotient
};

// v(a)_{alpha beta} = sum over W/Stab(a) of coefficient * v(w a), with alpha the q-side
// sign and beta the Q-side sign of the kind: coefficient (beta Q)^{-beta l0} (alpha q)^{-alpha l1}.
template <class F>
SparseVec<F> pmBasisVector(PmKind kind, const TensorIndex& a, const Backend<F>& B) {
  const int alpha = pmQSign(kind), beta = pmBigQSign(kind);
  const F Qf = beta > 0 ? F(F(1) / B.Q()) : F(-B.Q());
  const F qf = alpha > 0 ? F(F(1) / B.q()) : F(-B.q());
  std::map<int, F> acc;
  for (const auto& [b, w] : minimalCosetRepresentatives(a)) {
    auto [l0, l1] = w.lengthSplit();
    F c(1);
    for (int t = 0; t < l0; ++t) c = c * Qf;
    for (int t = 0; t < l1; ++t) c = c * qf;
    acc[tensorPosition(b)] += c;
  }
  SparseVec<F> v;
  for (auto& [p, c] : acc)
    if (!isZero(c)) v.emplace_back(p, c);
  return v;
}

template <class F>
PmBasis<F> pmPowerBasis(int n, int d, PmKind kind, const Backend<F>& B) {
  PmPower<F> p = pmPower(n, d, kind, B);
  PmBasis<F> out;
  out.indices = admissibleIndices(kind, n, d);
  out.inKernel = true;
  for (const auto& a : out.indices) {
    out.vectors.push_back(pmBasisVector(kind, a, B));
    out.inKernel = out.inKernel && p.kernel.contains(out.vectors.back());
  }
  Subspace<F> withRel = p.relations.plus(Subspace<F>::span(p.relations.ambientDim(), out.vectors));
  out.basisOfQuotient = static_cast<int>(out.indices.size()) == p.quotientDim() &&
                        withRel.dim() == p.relations.dim() + static_cast<int>(out.indices.size());
  return out;
}

// ---------------------------------------------------------------- tensor +- and signed tensors

// (V_n^{(x)d})_+- as the image of rho(u_d^+-).
template <class F>
Subspace<F> tensorPm(int n, int d, int sign, const Backend<F>& B) {
  requireBudget(ipow(n, d), B);
  TensorRep<F> rep(n, d, B);
  return imageBasis(rep.rho(sign > 0 ? uPlus(d, d) : uMinus(d, d)));
}

// The same space as the joint positive (negative) generalized eigenspace of all K_i.
Subspace<Rat> tensorPmByEigensplit(int n, int d, int sign, const Specialization& s);

// u_b^- T_{b,a} u_a^+ in H^B(a+b), with T_{b,a} realized as tAB(a, b); empty factors are omitted.
HeckeElement signedProjector(int a, int b);

// ^a_+ (x) ^b_-: image of rho(u_b^- T_{b,a} u_a^+).
template <class F>
Subspace<F> signedTensor(int a, int b, int n, const Backend<F>& B) {
  if (a < 0 || b < 0 || a + b < 1) throw Error(ErrorKind::OutOfRange, "signed tensor needs a + b >= 1");
  requireBudget(ipow(n, a + b), B);
  TensorRep<F> rep(n, a + b, B);
  return imageBasis(rep.rho(signedProjector(a, b)));
}

// ---------------------------------------------------------------- Schur functors

// T_{c(lambda)} on positions 1..a times T_{c(mu)} on positions a+1..a+b.
HeckeElement columnConjugation(const Bipartition& shape);
// T_{a,b} u_b^- T_{b,a} u_a^+.
HeckeElement signedTransport(int a, int b);

template <class F>
struct SchurFunctorValue {
  Bipartition shape;
  int n = 0, d = 0;
  Subspace<F> wedgeInclusion;  // image of iota_{lambda'} (x) iota_{mu'}
  Subspace<F> signedImage;     // after T_c and the signed-tensor projection
  Subspace<F> image;           // projected into S^lambda (x) S^mu
  int dim() const { return image.dim(); }
};

// S_{(lambda, mu)}(V_n) from the defining diagram, entirely with matrices and subspaces:
// wedge^{lambda'} (x) wedge^{mu'} as the joint -q eigenspace of the column Young subgroup,
// then rho(T_c), then rho(T_{a,b} u_b^- T_{b,a} u_a^+), then the projection onto the joint
// q^{-1} eigenspace of the row Young subgroup along the span of the (T_i - q^{-1})w.
template <class F>
SchurFunctorValue<F> schurFunctor(const Bipartition& shape, int n, const Backend<F>& B) {
  validatePartition(shape.lambda);
  validatePartition(shape.mu);
  const int a = partitionSize(shape.lambda), b = partitionSize(shape.mu), d = a + b;
  if (d < 1) throw Error(ErrorKind::InvalidShape, "empty bipartition");
  requireBudget(ipow(n, d), B);
  TensorRep<F> rep(n, d, B);
  SchurFunctorValue<F> v;
  v.shape = shape;
  v.n = n;
  v.d = d;
  auto colGens = youngGenerators(conjugate(shape.lambda), 0);
  auto colMu = youngGenerators(conjugate(shape.mu), a);
  colGens.insert(colGens.end(), colMu.begin(), colMu.end());
  auto rowGens = youngGenerators(shape.lambda, 0);
  auto rowMu = youngGenerators(shape.mu, a);
  rowGens.insert(rowGens.end(), rowMu.begin(), rowMu.end());
  const F minusq = -B.q(), qinv = F(1) / B.q();
  v.wedgeInclusion = jointEigenspace(rep, colGens, std::vector<F>(colGens.size(), minusq));
  Subspace<F> conj = applyTo(rep.rho(columnConjugation(shape)), v.wedgeInclusion);
  v.signedImage = applyTo(rep.rho(signedTransport(a, b)), conj);
  std::vector<F> keep(rowGens.size(), qinv);
  Subspace<F> G = jointEigenspace(rep, rowGens, keep), U = relationSpace(rep, rowGens, keep);
  if (G.dim() + U.dim() != rep.dim())
    throw Error(ErrorKind::ConsistencyFailure, "row Young subgroup eigenspace and relations do not split");
  v.image = projectAlong(v.signedImage, G, U);
  return v;
}

// Image of rho(e'_{lambda, mu}).
template <class F>
Subspace<F> youngSymmetrizerImage(const Bipartition& shape, int n, const Backend<F>& B) {
  const int d = shape.size();
  requireBudget(ipow(n, d), B);
  TensorRep<F> rep(n, d, B);
  return imageBasis(rep.rho(youngSymmetrizerPrime(shape)));
}

// Rank of rho(e_lambda) on V_n^{(x)|lambda|} against the number of SSYT with entries <= n.
template <class F>
bool typeASelfTest(const Partition& lambda, int n, const Backend<F>& B) {
  validatePartition(lambda);
  const int a = partitionSize(lambda);
  if (a == 0) return true;
  requireBudget(ipow(n, a), B);
  TensorRep<F> rep(n, a, B);
  return rank(rep.rho(typeASymmetrizer(lambda))) == semistandardTableaux(lambda, n);
}

// Throws SymmetrizerValidationFailed when some type-A factor of the shape fails.
template <class F>
void requireTypeASymmetrizer(const Bipartition& shape, int n, const Backend<F>& B) {
  for (const auto* p : {&shape.lambda, &shape.mu})
    if (!typeASelfTest(*p, n, B))
      throw Error(ErrorKind::SymmetrizerValidationFailed,
                  "type-A symmetrizer for (" + partitionString(*p) + ") fails the SSYT image test at n=" +
                      std::to_string(n));
}

// ---------------------------------------------------------------- decomposition

struct SWRow {
  Bipartition shape;
  long dimL = 0;  // dim S_{(lambda, mu)}(V_n), diagram route
  long dimM = 0;  // standard bitableaux
  long ssyt = 0;  // semistandard bitableaux under the (r+1, r) / (r, r) bounds
};

struct SWReport {
  int n = 0, d = 0;
  std::string backend;
  std::vector<SWRow> rows;
  long schurDim = 0;  // commutant of the Hecke action
  long sumLM = 0, sumL2 = 0;
  bool sumLdOk = false, sumL2Ok = false, ssytOk = false;
  bool ok() const { return sumLdOk && sumL2Ok; }
};

template <class F>
SWReport schurWeylDecompose(int n, int d, const Backend<F>& B) {
  requireBudget(ipow(n, d), B);
  SWReport r;
  r.n = n;
  r.d = d;
  r.backend = B.label();
  r.ssytOk = true;
  for (const auto& bp : bipartitions(d)) {
    SWRow row;
    row.shape = bp;
    row.dimL = schurFunctor(bp, n, B).dim();
    row.dimM = countStandardBitableaux(bp);
    row.ssyt = countSemistandardBitableaux(bp, n);
    r.ssytOk = r.ssytOk && row.ssyt == row.dimL;
    r.sumLM += row.dimL * row.dimM;
    r.sumL2 += row.dimL * row.dimL;
    r.rows.push_back(row);
  }
  TensorRep<F> rep(n, d, B);
  r.schurDim = commutantDim(rep.generators());
  r.sumLdOk = r.sumLM == ipow(n, d);
  r.sumL2Ok = r.sumL2 == r.schurDim;
  return r;
}

// Matrices of the operators in `ops` restricted to the invariant subspace W, in the basis of W.
template <class F>
std::vector<ExactMatrix<F>> restrictTo(const std::vector<ExactMatrix<F>>& ops, const Subspace<F>& W) {
  std::vector<ExactMatrix<F>> out;
  const int k = W.dim();
  for (const auto& X : ops) {
    std::vector<SparseVec<F>> cols;
    for (const auto& b : W.basis()) {
      auto c = W.coordinates(X.apply(b));
      if (!c) throw Error(ErrorKind::ConsistencyFailure, "subspace is not invariant");
      SparseVec<F> col;
      for (int j = 0; j < k; ++j)
        if (!isZero((*c)[j])) col.emplace_back(j, (*c)[j]);
      cols.push_back(std::move(col));
    }
    out.push_back(ExactMatrix<F>::fromColumns(k, cols));
  }
  return out;
}

struct IrreducibilityReport {
  int n = 0, d = 0;
  std::vector<Bipartition> shapes;
  std::vector<int> dims;
  std::vector<std::vector<long>> homDims;  // homDims[i][j] = dim Hom_S(L_i, L_j)
  bool ok() const {
    for (std::size_t i = 0; i < homDims.size(); ++i)
      for (std::size_t j = 0; j < homDims.size(); ++j)
        if (homDims[i][j] != (i == j ? 1 : 0)) return false;
    return !homDims.empty();
  }
};

// Hom spaces between Schur-functor subspaces under the Schur algebra S^B(n; d).
template <class F>
IrreducibilityReport irreducibilityReport(int n, int d, const Backend<F>& B) {
  if (n < 2 * d) throw Error(ErrorKind::OutOfRange, "irreducibility report needs n >= 2d");
  SchurAlgebra<F> S = schurAlgebra(n, n, d, B);
  IrreducibilityReport r;
  r.n = n;
  r.d = d;
  std::vector<std::vector<ExactMatrix<F>>> restricted;
  for (const auto& bp : bipartitions(d)) {
    auto v = schurFunctor(bp, n, B);
    r.shapes.push_back(bp);
    r.dims.push_back(v.dim());
    restricted.push_back(restrictTo(S.basis, v.image));
  }
  const std::size_t k = restricted.size();
  r.homDims.assign(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r.homDims[i][j] = intertwinerDim(restricted[i], restricted[j]);
  return r;
}

// ---------------------------------------------------------------- spectra

struct SpectrumReport {
  std::string op;
  std::vector<std::pair<Rat, int>> roots;
  int leftoverDegree = 0;  // factor of the minimal polynomial with no candidate root
  bool squarefree = false;
  bool ok() const { return leftoverDegree == 0; }
};

// rho(K_i) on V_n^{(x)d} at s against {-Q q^{2j}, Q^{-1} q^{2j} : |j| < i}.
SpectrumReport jucysMurphySpectrum(int n, int d, int i, const Specialization& s);
// rho(c_K) on V_n^{(x)d} at s against {+-Q^i q^j : |i| <= d, |j| <= d(d-1)}.
SpectrumReport cylinderSpectrum(int n, int d, const Specialization& s);

// Signed monomials +-Q^i q^j with their sign class; throws InvalidSpecialization when a
// value is reached from both classes.
std::vector<Candidate<Rat>> signedCandidates(const Specialization& s, int iBound, int jBound);

// ---------------------------------------------------------------- higher +- powers

struct HigherPmPower {
  PmKind kind = PmKind::SymPlus;
  int d = 0, e = 0, n = 0;
  int subDim = 0;       // intersection of the generalized eigenspaces of the kept classes
  int quotientDim = 0;  // quotient by the H(d,e)-submodule generated by the other classes
  // Every generator acts on the quotient with eigenvalues of the kept class only.
  bool quotientSignsOk = false;
};

HigherPmPower higherPmPower(int d, int e, int n, PmKind kind, const Specialization& s);

}  // namespace bschur
