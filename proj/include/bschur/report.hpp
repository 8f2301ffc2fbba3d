#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bschur/schur.hpp"

namespace bschur {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "bschur";
inline constexpr const char* kToolVersion = "0.1.0";

// {rows, cols, entries: [[r, c, scalar-string]]}
Json toJson(const MatrixWitness& w);
template <class F>
Json matrixJson(const ExactMatrix<F>& m) {
  return toJson(witnessOf(m));
}
template <class F>
Json subspaceJson(const Subspace<F>& W) {
  return matrixJson(W.basisMatrix());
}
Json toJson(const HeckeElement& h);
Json rootsJson(const std::vector<std::pair<Rat, int>>& roots);

struct CheckRecord {
  std::string check;
  Json params = Json::object();
  std::string backend;
  bool pass = false;
  std::optional<Json> witness;
  std::string note;
};

Json toJson(const CheckRecord& c);
CheckRecord checkFromJson(const Json& j);

struct SuiteResult {
  std::string suite;
  std::vector<CheckRecord> checks;
  bool pass() const;
  int passed() const;
  int total() const { return static_cast<int>(checks.size()); }
};

Json toJson(const SuiteResult& s);
SuiteResult suiteFromJson(const Json& j);

// Cell overrides and backend choice for a suite. Each suite has a default grid and a
// default backend; --n/--d/--e replace the grid coordinate they name.
struct SuiteOptions {
  std::optional<int> n, d, e;
  std::optional<Specialization> point;
  bool symbolic = false;
};

// Suite names in run order; the first twelve are the acceptance criteria 1..12.
const std::vector<std::string>& suiteNames();
bool isSuite(const std::string& name);
SuiteResult runSuite(const std::string& name, const SuiteOptions& o);

// "symbolic" or "Q=<rat>,q=<rat>".
std::string backendLabel(const SuiteOptions& o);

// Computation reports used by the CLI.
Json dimsReport(int n, int d, const SuiteOptions& o, bool& pass);
Json decomposeReport(int n, int d, const SuiteOptions& o, bool& pass);
Json schurReport(const Bipartition& shape, int n, const SuiteOptions& o, bool& pass);
Json eigenReport(int n, int d, std::optional<int> e, const Specialization& s, bool& pass);
Json centralizerReport(int n, int d, const Specialization& s, bool& pass);

}  // namespace bschur
