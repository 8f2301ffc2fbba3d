#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bschur/error.hpp"
#include "bschur/scalars.hpp"

namespace bschur {

// Sparse vector: entries sorted by index, no stored zeros.
template <class F>
using SparseVec = std::vector<std::pair<int, F>>;

// y + a*x
template <class F>
SparseVec<F> axpy(const SparseVec<F>& y, const F& a, const SparseVec<F>& x) {
  SparseVec<F> r;
  r.reserve(y.size() + x.size());
  auto iy = y.begin(), ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      r.push_back(*iy++);
    } else if (iy == y.end() || ix->first < iy->first) {
      F v = a * ix->second;
      if (!isZero(v)) r.emplace_back(ix->first, std::move(v));
      ++ix;
    } else {
      F v = iy->second + a * ix->second;
      if (!isZero(v)) r.emplace_back(ix->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  return r;
}

template <class F>
SparseVec<F> scaled(const SparseVec<F>& x, const F& a) {
  SparseVec<F> r;
  if (isZero(a)) return r;
  r.reserve(x.size());
  for (const auto& [i, v] : x) r.emplace_back(i, a * v);
  return r;
}

template <class F>
const F* findEntry(const SparseVec<F>& x, int i) {
  auto it = std::lower_bound(x.begin(), x.end(), i, [](const auto& e, int k) { return e.first < k; });
  if (it != x.end() && it->first == i) return &it->second;
  return nullptr;
}

template <class F>
SparseVec<F> unitVec(int i) {
  return SparseVec<F>{{i, F(1)}};
}

// Sparse matrix stored by rows.
template <class F>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static ExactMatrix identity(int n, const F& scale = F(1)) {
    ExactMatrix m(n, n);
    if (!isZero(scale))
      for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, scale);
    return m;
  }
  static ExactMatrix fromRows(int cols, std::vector<SparseVec<F>> rows) {
    ExactMatrix m(static_cast<int>(rows.size()), cols);
    m.data_ = std::move(rows);
    return m;
  }
  static ExactMatrix fromColumns(int rows, const std::vector<SparseVec<F>>& cols) {
    ExactMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
      for (const auto& [i, v] : cols[j]) m.data_[i].emplace_back(j, v);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec<F>& row(int i) const { return data_[i]; }
  const std::vector<SparseVec<F>>& rowData() const { return data_; }

  F at(int i, int j) const {
    const F* p = findEntry(data_[i], j);
    return p ? *p : F(0);
  }
  void set(int i, int j, const F& v) {
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, int k) { return e.first < k; });
    if (it != r.end() && it->first == j) {
      if (isZero(v))
        r.erase(it);
      else
        it->second = v;
    } else if (!isZero(v)) {
      r.insert(it, {j, v});
    }
  }
  void add(int i, int j, const F& v) { set(i, j, at(i, j) + v); }

  std::size_t nnz() const {
    std::size_t s = 0;
    for (const auto& r : data_) s += r.size();
    return s;
  }
  bool isZeroMatrix() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    return t;
  }

  std::vector<SparseVec<F>> columns() const { return transpose().data_; }

  ExactMatrix operator*(const ExactMatrix& b) const {
    if (cols_ != b.rows_)
      throw Error(ErrorKind::ShapeMismatch, "mat_mul " + shape() + " * " + b.shape());
    ExactMatrix c(rows_, b.cols_);
    std::vector<F> acc(b.cols_, F(0));
    std::vector<char> touched(b.cols_, 0);
    std::vector<int> idx;
    for (int i = 0; i < rows_; ++i) {
      idx.clear();
      for (const auto& [k, a] : data_[i])
        for (const auto& [j, v] : b.data_[k]) {
          if (!touched[j]) {
            touched[j] = 1;
            idx.push_back(j);
            acc[j] = a * v;
          } else {
            acc[j] += a * v;
          }
        }
      std::sort(idx.begin(), idx.end());
      auto& out = c.data_[i];
      for (int j : idx) {
        if (!isZero(acc[j])) out.emplace_back(j, acc[j]);
        acc[j] = F(0);
        touched[j] = 0;
      }
    }
    return c;
  }

  SparseVec<F> apply(const SparseVec<F>& x) const {
    SparseVec<F> r;
    for (int i = 0; i < rows_; ++i) {
      F s(0);
      auto ix = x.begin();
      for (const auto& [j, v] : data_[i]) {
        while (ix != x.end() && ix->first < j) ++ix;
        if (ix != x.end() && ix->first == j) s += v * ix->second;
      }
      if (!isZero(s)) r.emplace_back(i, std::move(s));
    }
    return r;
  }

  ExactMatrix operator+(const ExactMatrix& b) const {
    requireSameShape(b);
    ExactMatrix c(rows_, cols_);
    for (int i = 0; i < rows_; ++i) c.data_[i] = axpy(data_[i], F(1), b.data_[i]);
    return c;
  }
  ExactMatrix operator-(const ExactMatrix& b) const {
    requireSameShape(b);
    ExactMatrix c(rows_, cols_);
    for (int i = 0; i < rows_; ++i) c.data_[i] = axpy(data_[i], F(-1), b.data_[i]);
    return c;
  }
  ExactMatrix scaledBy(const F& a) const {
    ExactMatrix c(rows_, cols_);
    for (int i = 0; i < rows_; ++i) c.data_[i] = scaled(data_[i], a);
    return c;
  }
  bool operator==(const ExactMatrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
  }

  ExactMatrix submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const {
    std::map<int, int> colPos;
    for (int j = 0; j < static_cast<int>(colIdx.size()); ++j) colPos[colIdx[j]] = j;
    ExactMatrix s(static_cast<int>(rowIdx.size()), static_cast<int>(colIdx.size()));
    for (int i = 0; i < static_cast<int>(rowIdx.size()); ++i) {
      for (const auto& [j, v] : data_[rowIdx[i]]) {
        auto it = colPos.find(j);
        if (it != colPos.end()) s.data_[i].emplace_back(it->second, v);
      }
      std::sort(s.data_[i].begin(), s.data_[i].end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return s;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  template <class G, class Fn>
  ExactMatrix<G> mapEntries(Fn fn) const {
    ExactMatrix<G> m(rows_, cols_);
    std::vector<SparseVec<G>> rows(rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) {
        G g = fn(v);
        if (!isZero(g)) rows[i].emplace_back(j, std::move(g));
      }
    return ExactMatrix<G>::fromRows(cols_, std::move(rows));
  }

 private:
  void requireSameShape(const ExactMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw Error(ErrorKind::ShapeMismatch, shape() + " vs " + b.shape());
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec<F>> data_;
};

template <class F>
ExactMatrix<F> kron(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  std::vector<SparseVec<F>> rows(static_cast<std::size_t>(a.rows()) * b.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < b.rows(); ++k) {
      auto& out = rows[static_cast<std::size_t>(i) * b.rows() + k];
      for (const auto& [j, x] : a.row(i))
        for (const auto& [l, y] : b.row(k)) out.emplace_back(j * b.cols() + l, x * y);
    }
  return ExactMatrix<F>::fromRows(a.cols() * b.cols(), std::move(rows));
}

// Incremental row echelon form: each stored row is normalized with leading entry 1 at
// a distinct pivot column.
template <class F>
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Eliminates leading entries against stored pivots; zero result means dependent.
  SparseVec<F> reduce(SparseVec<F> v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) break;
      F a = -v.front().second;
      v = axpy(v, a, it->second);
    }
    return v;
  }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  // Returns true when v was independent and has been added.
  bool insert(const SparseVec<F>& v) {
    SparseVec<F> r = reduce(v);
    if (r.empty()) return false;
    F inv = F(1) / r.front().second;
    int p = r.front().first;
    rows_.emplace(p, scaled(r, inv));
    return true;
  }

  std::vector<int> pivots() const {
    std::vector<int> p;
    for (const auto& [c, r] : rows_) p.push_back(c);
    return p;
  }

  // Reduced row echelon form, rows sorted by pivot.
  std::vector<SparseVec<F>> rref() const {
    std::map<int, SparseVec<F>> done;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseVec<F> r = it->second;
      std::vector<std::pair<int, F>> hits;
      for (const auto& [c, v] : r)
        if (c != it->first && done.count(c)) hits.emplace_back(c, v);
      for (const auto& [c, v] : hits) r = axpy(r, F(-v), done.at(c));
      done.emplace(it->first, std::move(r));
    }
    std::vector<SparseVec<F>> out;
    out.reserve(done.size());
    for (auto& [c, r] : done) out.push_back(std::move(r));
    return out;
  }

 private:
  int ncols_;
  std::map<int, SparseVec<F>> rows_;
};

// Subspace of F^ambient held as the reduced echelon form of a basis (rows of the
// echelon form are the basis vectors), so equality is structural.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace span(int ambient, const std::vector<SparseVec<F>>& vectors) {
    Echelon<F> e(ambient);
    for (const auto& v : vectors) e.insert(v);
    return fromEchelon(e);
  }
  static Subspace fromEchelon(const Echelon<F>& e) {
    Subspace s(e.ncols());
    s.basis_ = e.rref();
    for (const auto& r : s.basis_) s.pivots_.push_back(r.front().first);
    return s;
  }
  static Subspace whole(int ambient) {
    Subspace s(ambient);
    for (int i = 0; i < ambient; ++i) {
      s.basis_.push_back(unitVec<F>(i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  int ambientDim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec<F>>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Coordinates with respect to basis(); nullopt when v is not in the subspace.
  std::optional<std::vector<F>> coordinates(const SparseVec<F>& v) const {
    std::vector<F> c(basis_.size(), F(0));
    SparseVec<F> r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const F* x = findEntry(v, pivots_[k]);
      if (x) {
        c[k] = *x;
        r = axpy(r, F(-*x), basis_[k]);
      }
    }
    if (!r.empty()) return std::nullopt;
    return c;
  }
  bool contains(const SparseVec<F>& v) const { return coordinates(v).has_value(); }
  bool containsSubspace(const Subspace& o) const {
    for (const auto& b : o.basis_)
      if (!contains(b)) return false;
    return true;
  }

  Subspace plus(const Subspace& o) const {
    std::vector<SparseVec<F>> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, all);
  }

  // Matrix whose columns are the basis vectors.
  ExactMatrix<F> basisMatrix() const { return ExactMatrix<F>::fromColumns(ambient_, basis_); }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  int ambient_ = 0;
  std::vector<SparseVec<F>> basis_;
  std::vector<int> pivots_;
};

template <class F>
int rank(const ExactMatrix<F>& m) {
  Echelon<F> e(m.cols());
  for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

template <class F>
Subspace<F> imageBasis(const ExactMatrix<F>& m) {
  Echelon<F> e(m.rows());
  for (const auto& c : m.columns()) e.insert(c);
  return Subspace<F>::fromEchelon(e);
}

// Kernel of the linear map whose rows are given, as vectors of length ncols.
template <class F>
Subspace<F> kernelOfRows(int ncols, const std::vector<SparseVec<F>>& rows) {
  Echelon<F> e(ncols);
  for (const auto& r : rows) e.insert(r);
  std::vector<SparseVec<F>> rr = e.rref();
  std::vector<char> isPivot(ncols, 0);
  for (const auto& r : rr) isPivot[r.front().first] = 1;
  // Column f of the reduced form: pivot rows that mention f.
  std::vector<SparseVec<F>> colHits(ncols);
  for (const auto& r : rr)
    for (const auto& [c, v] : r)
      if (!isPivot[c]) colHits[c].emplace_back(r.front().first, v);
  std::vector<SparseVec<F>> vecs;
  for (int f = 0; f < ncols; ++f) {
    if (isPivot[f]) continue;
    SparseVec<F> v;
    for (const auto& [p, x] : colHits[f]) v.emplace_back(p, -x);
    v.emplace_back(f, F(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::span(ncols, vecs);
}

template <class F>
Subspace<F> kernelBasis(const ExactMatrix<F>& m) {
  return kernelOfRows(m.cols(), m.rowData());
}

// Intersection of subspaces via the kernel of the stacked annihilators.
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.dim() == 0 || b.dim() == 0) return Subspace<F>(a.ambientDim());
  // Solve x = A y = B z: kernel of [A | -B], then map y back.
  int ka = a.dim(), kb = b.dim();
  std::vector<SparseVec<F>> rows(a.ambientDim());
  for (int k = 0; k < ka; ++k)
    for (const auto& [i, v] : a.basis()[k]) rows[i].emplace_back(k, v);
  for (int k = 0; k < kb; ++k)
    for (const auto& [i, v] : b.basis()[k]) rows[i].emplace_back(ka + k, -v);
  Subspace<F> ker = kernelOfRows(ka + kb, rows);
  std::vector<SparseVec<F>> out;
  for (const auto& v : ker.basis()) {
    SparseVec<F> x;
    for (const auto& [k, c] : v)
      if (k < ka) x = axpy(x, c, a.basis()[k]);
    out.push_back(std::move(x));
  }
  return Subspace<F>::span(a.ambientDim(), out);
}

// Dense inverse by Gauss-Jordan; throws ConsistencyFailure when singular.
template <class F>
std::vector<std::vector<F>> denseInverse(std::vector<std::vector<F>> a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<F>> inv(n, std::vector<F>(n, F(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = F(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!isZero(a[r][c])) {
        p = r;
        break;
      }
    if (p < 0) throw Error(ErrorKind::ConsistencyFailure, "singular matrix in dense inverse");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    F s = F(1) / a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || isZero(a[r][c])) continue;
      F f = a[r][c];
      for (int j = 0; j < n; ++j) {
        if (!isZero(a[c][j])) a[r][j] -= f * a[c][j];
        if (!isZero(inv[c][j])) inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Connected components of the index graph of a family of square matrices.
template <class F>
std::vector<std::vector<int>> matrixBlocks(int n, const std::vector<ExactMatrix<F>>& gens) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int i = 0; i < g.rows(); ++i)
      for (const auto& [j, v] : g.row(i)) {
        int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, c] : comps) out.push_back(std::move(c));
  return out;
}

namespace detail {

template <class F>
void requireSquareFamily(const std::vector<ExactMatrix<F>>& gens, int& n) {
  n = -1;
  for (const auto& g : gens) {
    if (g.rows() != g.cols()) throw Error(ErrorKind::ShapeMismatch, "non-square generator " + g.shape());
    if (n >= 0 && g.rows() != n) throw Error(ErrorKind::ShapeMismatch, "generators of different sizes");
    n = g.rows();
  }
}

// Solutions Y (p x m) of Y A_k = B_k Y for one pair of blocks, as flattened vectors
// (index i*m + j).
template <class F>
std::vector<SparseVec<F>> blockIntertwiners(const std::vector<ExactMatrix<F>>& A,
                                            const std::vector<ExactMatrix<F>>& B, int m, int p,
                                            bool dimensionOnly, int& dimOut) {
  const int K = static_cast<int>(A.size());
  // Look for a cyclic coordinate vector of the source block.
  for (int t = 0; t < m; ++t) {
    Echelon<F> ech(m);
    std::vector<SparseVec<F>> basis;
    std::vector<std::pair<int, int>> word;  // (parent, generator)
    basis.push_back(unitVec<F>(t));
    word.emplace_back(-1, -1);
    ech.insert(basis[0]);
    for (std::size_t j = 0; j < basis.size() && static_cast<int>(basis.size()) < m; ++j)
      for (int k = 0; k < K && static_cast<int>(basis.size()) < m; ++k) {
        SparseVec<F> w = A[k].apply(basis[j]);
        if (ech.insert(w)) {
          basis.push_back(std::move(w));
          word.emplace_back(static_cast<int>(j), k);
        }
      }
    if (static_cast<int>(basis.size()) < m) continue;
    // Images of basis vectors under the unknown map: W_j y.
    std::vector<ExactMatrix<F>> W;
    W.push_back(ExactMatrix<F>::identity(p));
    for (int j = 1; j < m; ++j) W.push_back(B[word[j].second] * W[word[j].first]);
    std::vector<std::vector<F>> bm(m, std::vector<F>(m, F(0)));
    for (int j = 0; j < m; ++j)
      for (const auto& [i, v] : basis[j]) bm[i][j] = v;
    auto binv = denseInverse(bm);
    std::set<std::pair<int, int>> tree;
    for (int j = 1; j < m; ++j) tree.insert(word[j]);
    std::vector<SparseVec<F>> rows;
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < K; ++k) {
        if (tree.count({j, k})) continue;
        SparseVec<F> img = A[k].apply(basis[j]);
        // coefficients c_l with img = sum c_l basis_l
        std::vector<F> c(m, F(0));
        for (int l = 0; l < m; ++l)
          for (const auto& [i, v] : img) c[l] += binv[l][i] * v;
        ExactMatrix<F> rel = B[k] * W[j];
        for (int l = 0; l < m; ++l)
          if (!isZero(c[l])) rel = rel - W[l].scaledBy(c[l]);
        for (int i = 0; i < p; ++i)
          if (!rel.row(i).empty()) rows.push_back(rel.row(i));
      }
    Subspace<F> ys = kernelOfRows(p, rows);
    dimOut = ys.dim();
    std::vector<SparseVec<F>> out;
    if (dimensionOnly) return out;
    for (const auto& y : ys.basis()) {
      // Y = [W_0 y ... W_{m-1} y] * binv
      std::vector<SparseVec<F>> cols(m);
      for (int j = 0; j < m; ++j) cols[j] = W[j].apply(y);
      std::vector<std::vector<F>> Y(p, std::vector<F>(m, F(0)));
      for (int j = 0; j < m; ++j)
        for (const auto& [i, v] : cols[j])
          for (int l = 0; l < m; ++l)
            if (!isZero(binv[j][l])) Y[i][l] += v * binv[j][l];
      SparseVec<F> flat;
      for (int i = 0; i < p; ++i)
        for (int l = 0; l < m; ++l)
          if (!isZero(Y[i][l])) flat.emplace_back(i * m + l, Y[i][l]);
      out.push_back(std::move(flat));
    }
    return Subspace<F>::span(p * m, out).basis();
  }
  // General Sylvester system: sum_l Y_il A_lj - sum_l B_il Y_lj = 0.
  std::vector<SparseVec<F>> rows;
  for (int k = 0; k < K; ++k) {
    std::vector<SparseVec<F>> Acols = A[k].columns();
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < m; ++j) {
        std::map<int, F> eq;
        for (const auto& [l, v] : Acols[j]) eq[i * m + l] += v;
        for (const auto& [l, v] : B[k].row(i)) eq[l * m + j] -= v;
        SparseVec<F> r;
        for (auto& [c, v] : eq)
          if (!isZero(v)) r.emplace_back(c, v);
        if (!r.empty()) rows.push_back(std::move(r));
      }
  }
  Subspace<F> ker = kernelOfRows(p * m, rows);
  dimOut = ker.dim();
  return dimensionOnly ? std::vector<SparseVec<F>>{} : ker.basis();
}

template <class F>
std::vector<ExactMatrix<F>> intertwinersImpl(const std::vector<ExactMatrix<F>>& A,
                                             const std::vector<ExactMatrix<F>>& B, bool dimensionOnly,
                                             long& dimOut) {
  int m, p;
  requireSquareFamily(A, m);
  requireSquareFamily(B, p);
  if (A.size() != B.size()) throw Error(ErrorKind::ShapeMismatch, "generator tuples of different lengths");
  if (A.empty()) throw Error(ErrorKind::ShapeMismatch, "empty generator tuple");
  auto blocksA = matrixBlocks(m, A);
  auto blocksB = matrixBlocks(p, B);
  std::vector<std::vector<ExactMatrix<F>>> subA, subB;
  for (const auto& b : blocksA) {
    std::vector<ExactMatrix<F>> s;
    for (const auto& g : A) s.push_back(g.submatrix(b, b));
    subA.push_back(std::move(s));
  }
  for (const auto& b : blocksB) {
    std::vector<ExactMatrix<F>> s;
    for (const auto& g : B) s.push_back(g.submatrix(b, b));
    subB.push_back(std::move(s));
  }
  dimOut = 0;
  std::vector<std::pair<int, ExactMatrix<F>>> found;  // (pivot of flattened form, matrix)
  for (std::size_t x = 0; x < blocksA.size(); ++x)
    for (std::size_t y = 0; y < blocksB.size(); ++y) {
      int bm = static_cast<int>(blocksA[x].size()), bp = static_cast<int>(blocksB[y].size());
      int dim = 0;
      auto sols = blockIntertwiners(subA[x], subB[y], bm, bp, dimensionOnly, dim);
      dimOut += dim;
      for (const auto& s : sols) {
        ExactMatrix<F> X(p, m);
        std::vector<SparseVec<F>> rows(p);
        for (const auto& [idx, v] : s) rows[blocksB[y][idx / bm]].emplace_back(blocksA[x][idx % bm], v);
        for (auto& r : rows)
          std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        X = ExactMatrix<F>::fromRows(m, std::move(rows));
        int pivot = -1;
        for (int i = 0; i < p && pivot < 0; ++i)
          if (!X.row(i).empty()) pivot = i * m + X.row(i).front().first;
        found.emplace_back(pivot, std::move(X));
      }
    }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ExactMatrix<F>> out;
  for (auto& [piv, X] : found) out.push_back(std::move(X));
  return out;
}

}  // namespace detail

// Basis of {X : X A_k = B_k X for all k}, reduced echelon in the row-major
// flattening of X.  Blocks of the index graph are solved independently; a block with
// a cyclic coordinate vector is parametrized by the image of that vector.
template <class F>
std::vector<ExactMatrix<F>> intertwinerBasis(const std::vector<ExactMatrix<F>>& A,
                                             const std::vector<ExactMatrix<F>>& B) {
  long d = 0;
  return detail::intertwinersImpl(A, B, false, d);
}

template <class F>
long intertwinerDim(const std::vector<ExactMatrix<F>>& A, const std::vector<ExactMatrix<F>>& B) {
  long d = 0;
  detail::intertwinersImpl(A, B, true, d);
  return d;
}

template <class F>
std::vector<ExactMatrix<F>> commutantBasis(const std::vector<ExactMatrix<F>>& gens) {
  return intertwinerBasis(gens, gens);
}

template <class F>
long commutantDim(const std::vector<ExactMatrix<F>>& gens) {
  return intertwinerDim(gens, gens);
}

// Dimension of the commutant by the plain Sylvester system on all N^2 unknowns, with
// no block or cyclic reduction.  Used as an independent cross-check.
template <class F>
long commutantDimSylvester(const std::vector<ExactMatrix<F>>& gens) {
  int n;
  detail::requireSquareFamily(gens, n);
  std::vector<SparseVec<F>> rows;
  for (const auto& g : gens) {
    auto gcols = g.columns();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::map<int, F> eq;
        for (const auto& [l, v] : gcols[j]) eq[i * n + l] += v;
        for (const auto& [l, v] : g.row(i)) eq[l * n + j] -= v;
        SparseVec<F> r;
        for (auto& [c, v] : eq)
          if (!isZero(v)) r.emplace_back(c, v);
        if (!r.empty()) rows.push_back(std::move(r));
      }
  }
  return kernelOfRows(n * n, rows).dim();
}

// Dimension of the unital algebra generated by square matrices (closure under left
// multiplication by generators).
template <class F>
int generatedAlgebraDim(const std::vector<ExactMatrix<F>>& gens) {
  int n;
  detail::requireSquareFamily(gens, n);
  auto flatten = [n](const ExactMatrix<F>& m) {
    SparseVec<F> v;
    for (int i = 0; i < n; ++i)
      for (const auto& [j, x] : m.row(i)) v.emplace_back(i * n + j, x);
    return v;
  };
  Echelon<F> e(n * n);
  std::vector<ExactMatrix<F>> frontier{ExactMatrix<F>::identity(n)};
  e.insert(flatten(frontier[0]));
  while (!frontier.empty()) {
    std::vector<ExactMatrix<F>> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        ExactMatrix<F> p = g * m;
        if (e.insert(flatten(p))) next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return e.rank();
}

// Univariate polynomial over F, coefficients by ascending degree, no trailing zeros.
template <class F>
struct UPoly {
  std::vector<F> c;

  static UPoly one() { return UPoly{{F(1)}}; }
  static UPoly linear(const F& root) { return UPoly{{-root, F(1)}}; }  // t - root
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool isZero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && bschur::isZero(c.back())) c.pop_back();
  }
  UPoly monic() const {
    UPoly r = *this;
    if (r.c.empty()) return r;
    F inv = F(1) / r.c.back();
    for (auto& x : r.c) x *= inv;
    return r;
  }
  F operator()(const F& x) const {
    F s(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  // Quotient and remainder.
  static std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    if (b.c.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    UPoly q;
    if (a.degree() < b.degree()) return {q, a};
    q.c.assign(a.c.size() - b.c.size() + 1, F(0));
    F lbInv = F(1) / b.c.back();
    while (!a.c.empty() && a.degree() >= b.degree()) {
      int s = a.degree() - b.degree();
      F t = a.c.back() * lbInv;
      q.c[s] = t;
      for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + s] -= t * b.c[i];
      a.c.pop_back();
      a.trim();
    }
    q.trim();
    return {q, a};
  }
  UPoly derivative() const {
    UPoly r;
    for (std::size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * F(static_cast<long>(i)));
    r.trim();
    return r;
  }
  bool operator==(const UPoly& o) const { return c == o.c; }
  std::string toString() const {
    if (c.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (bschur::isZero(c[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + bschur::scalarString(c[i]) + ")*t^" + std::to_string(i);
    }
    return s;
  }
};

template <class F>
UPoly<F> polyGcd(UPoly<F> a, UPoly<F> b) {
  while (!b.isZero()) {
    auto r = UPoly<F>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
bool isSquarefree(const UPoly<F>& p) {
  return polyGcd(p, p.derivative()).degree() == 0;
}

template <class F>
ExactMatrix<F> evalPoly(const UPoly<F>& p, const ExactMatrix<F>& m) {
  ExactMatrix<F> r(m.rows(), m.cols());
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * m + ExactMatrix<F>::identity(m.rows(), *it);
  return r;
}

// Monic minimal polynomial as the lcm of local minimal polynomials of coordinate
// vectors, skipping vectors already inside the accumulated Krylov spaces.
template <class F>
UPoly<F> minimalPolynomial(const ExactMatrix<F>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "minimal polynomial of " + m.shape());
  const int n = m.rows();
  UPoly<F> P = UPoly<F>::one();
  Echelon<F> global(n);
  for (int j = 0; j < n; ++j) {
    SparseVec<F> v = unitVec<F>(j);
    if (global.contains(v)) continue;
    // Local Krylov with tracked combinations: stored rows carry (vector, coefficients).
    std::vector<SparseVec<F>> kry;
    std::map<int, std::pair<SparseVec<F>, std::vector<F>>> ech;
    std::vector<F> relation;
    for (int k = 0;; ++k) {
      SparseVec<F> r = v;
      std::vector<F> comb(k + 1, F(0));
      comb[k] = F(1);
      while (!r.empty()) {
        auto it = ech.find(r.front().first);
        if (it == ech.end()) break;
        F a = -r.front().second;
        r = axpy(r, a, it->second.first);
        for (std::size_t i = 0; i < it->second.second.size(); ++i) comb[i] += a * it->second.second[i];
      }
      if (r.empty()) {
        relation = std::move(comb);
        break;
      }
      F inv = F(1) / r.front().second;
      for (auto& x : comb) x *= inv;
      ech.emplace(r.front().first, std::make_pair(scaled(r, inv), std::move(comb)));
      kry.push_back(v);
      v = m.apply(v);
    }
    for (const auto& x : kry) global.insert(x);
    UPoly<F> local{relation};
    local.trim();
    local = local.monic();
    UPoly<F> g = polyGcd(P, local);
    P = (P * UPoly<F>::divmod(local, g).first).monic();
  }
  return P;
}

// Candidate eigenvalue with its sign class.
template <class F>
struct Candidate {
  F value;
  bool positive;
};

template <class F>
struct EigenSplit {
  Subspace<F> positive;
  Subspace<F> negative;
  std::vector<std::pair<F, int>> roots;  // eigenvalue, multiplicity in the minimal polynomial
};

// Generalized eigenspaces for the positive and negative candidate classes.
template <class F>
EigenSplit<F> generalizedEigensplit(const ExactMatrix<F>& m, const std::vector<Candidate<F>>& candidates) {
  UPoly<F> p = minimalPolynomial(m);
  UPoly<F> pos = UPoly<F>::one(), neg = UPoly<F>::one();
  EigenSplit<F> out;
  for (const auto& cand : candidates) {
    int mult = 0;
    while (p.degree() > 0 && isZero(p(cand.value))) {
      p = UPoly<F>::divmod(p, UPoly<F>::linear(cand.value)).first;
      ++mult;
    }
    if (mult == 0) continue;
    out.roots.emplace_back(cand.value, mult);
    UPoly<F>& target = cand.positive ? pos : neg;
    for (int i = 0; i < mult; ++i) target = target * UPoly<F>::linear(cand.value);
  }
  if (p.degree() > 0)
    throw Error(ErrorKind::UnclassifiedEigenvalue, "minimal polynomial has factor " + p.toString() +
                                                       " outside the candidate set");
  out.positive = kernelBasis(evalPoly(pos, m));
  out.negative = kernelBasis(evalPoly(neg, m));
  if (out.positive.dim() + out.negative.dim() != m.rows())
    throw Error(ErrorKind::ConsistencyFailure, "eigensplit parts do not span the ambient space");
  return out;
}

}  // namespace bschur
