#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bschur/report.hpp"

using namespace bschur;

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* claim;
};

const std::vector<Criterion> kCriteria{
    {1, "hecke-relations", "six relations via rho, n<=5, d<=3 symbolic; abstract d<=4"},
    {2, "jucys-murphy", "K_i commute and c_K central, d<=4"},
    {3, "spectra", "K_i and c_K spectra at Q=2,q=3, n<=5, d<=3; squarefree minimal polynomials"},
    {4, "ybe-reflection", "Yang-Baxter and reflection, n<=3, blocks e<=2; control K_W->Id fails"},
    {5, "cylinder", "cylinder identity d+e<=4; K_{V^(x)d} = rho(c_K), d<=3, n<=4"},
    {6, "pm-dims", "+- power dimensions, quotient and kernel, d<=3, n<=7"},
    {7, "schur-weyl", "sum dimL*dimM = n^d and sum dimL^2 = dim S^B(n;d), n in {5,7}, n>=2d"},
    {8, "irreducibility", "End = 1, cross Hom = 0 at n=5, d=2"},
    {9, "symmetrizer", "diagram subspace = image rho(e') for all bipartitions of 2 at n=5"},
    {10, "stability", "adding zeros (3 fixtures) and v-bar embedding, d<=2"},
    {11, "double-centralizer", "coideal algebra dim = Hecke commutant dim, n=3, d=1,2"},
    {12, "rank-one", "distinct block K-matrix eigenvalues at e=2 against the stated dimension"},
};

}  // namespace

int main() {
  bool all = true;
  std::vector<std::string> notes;
  for (const auto& c : kCriteria) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    std::string error;
    try {
      r = runSuite(c.suite, SuiteOptions{});
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = error.empty() && r.pass();
    all = all && pass;
    std::printf("criterion %2d %s  %-19s %5d/%-5d tolerance=exact  %6.2fs  %s\n", c.id, pass ? "PASS" : "FAIL", c.suite,
                r.passed(), r.total(), secs, c.claim);
    if (!error.empty()) std::printf("  error: %s\n", error.c_str());
    for (const auto& ch : r.checks) {
      if (!ch.pass) std::printf("  failed: %s %s\n", ch.check.c_str(), ch.params.dump().c_str());
      if (!ch.note.empty()) {
        std::string line = "criterion " + std::to_string(c.id) + ": " + ch.check + ": " + ch.note;
        if (ch.witness) line += "; witness spectrum " + ch.witness->dump();
        notes.push_back(line);
      }
    }
  }
  for (const auto& n : notes) std::printf("note %s\n", n.c_str());
  std::printf("%s\n", all ? "all 12 criteria pass" : "some criteria FAILED");
  return all ? 0 : 1;
}
