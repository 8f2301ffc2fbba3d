#include "bschur/rep.hpp"

#include <set>

namespace bschur {

long ipow(long base, int e) {
  long r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

int tensorPosition(const TensorIndex& a) {
  int pos = 0;
  for (int t : a.doubled) pos = pos * a.n + (t + a.n - 1) / 2;
  return pos;
}

TensorIndex tensorIndexAt(int n, int d, int pos) {
  std::vector<int> dv(d);
  for (int i = d - 1; i >= 0; --i) {
    dv[i] = 2 * (pos % n) - (n - 1);
    pos /= n;
  }
  return TensorIndex(n, std::move(dv));
}

TensorIndex shiftIndexPair(const TensorIndex& a, int j2) {
  std::vector<int> dv = a.doubled;
  for (int& t : dv)
    if (std::abs(t) >= j2) t += t > 0 ? 2 : -2;
  return TensorIndex(a.n + 2, std::move(dv));
}

TensorIndex shiftIndexCenter(const TensorIndex& a) {
  if (a.n % 2 != 0) throw Error(ErrorKind::InvalidPosition, "center shift needs even n");
  std::vector<int> dv = a.doubled;
  for (int& t : dv) t += t > 0 ? 1 : -1;
  return TensorIndex(a.n + 1, std::move(dv));
}

DoubleCentralizerReport verifyDoubleCentralizer(int n, int d, const Specialization& s) {
  DoubleCentralizerReport rep;
  {
    TensorRep<RF> hecke(n, d, Symbolic{});
    QuantumAction<RF> qa(n, d, Symbolic{});
    rep.commute = true;
    for (const auto& [name, x] : qa.coidealGenerators())
      for (const auto& g : hecke.generators()) rep.commute = rep.commute && (x * g == g * x);
  }
  Special B(s);
  TensorRep<Rat> hecke(n, d, B);
  QuantumAction<Rat> qa(n, d, B);
  rep.commutantDim = commutantDim(hecke.generators());
  std::vector<ExactMatrix<Rat>> gens;
  for (auto& [name, x] : qa.coidealGenerators()) gens.push_back(std::move(x));
  if (gens.empty()) gens.push_back(ExactMatrix<Rat>::identity(hecke.dim()));
  rep.coidealAlgebraDim = generatedAlgebraDim(gens);
  return rep;
}

std::vector<Rat> signedMonomialCandidates(const Specialization& s, int iBound, int jBound) {
  std::vector<Rat> out;
  std::set<Rat> seen;
  for (int i = -iBound; i <= iBound; ++i)
    for (int j = -jBound; j <= jBound; ++j) {
      Rat v = ratPow(s.Q(), i) * ratPow(s.q(), j);
      for (const Rat& c : {v, Rat(-v)})
        if (seen.insert(c).second) out.push_back(c);
    }
  return out;
}

}  // namespace bschur
