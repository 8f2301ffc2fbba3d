#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bschur/report.hpp"

using namespace bschur;

namespace {

struct Config {
  std::string command;
  std::optional<int> n, d, e;
  std::string backend;
  std::string shape;
  std::string output;
  std::string out;
  std::string suite = "all";
  int timeout = 600;
};

// Thrown for exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool isInputError(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::InvalidSpecialization:
    case ErrorKind::InvalidShape:
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidIndex:
    case ErrorKind::InadmissibleIndex:
    case ErrorKind::ParityMismatch:
      return true;
    default:
      return false;
  }
}

SuiteOptions suiteOptions(const Config& c) {
  SuiteOptions o;
  o.n = c.n;
  o.d = c.d;
  o.e = c.e;
  if (c.backend == "symbolic")
    o.symbolic = true;
  else if (!c.backend.empty())
    o.point = Specialization::parse(c.backend);
  return o;
}

Specialization pointFor(const Config& c, const SuiteOptions& o) {
  if (o.symbolic) throw InputError(c.command + " needs --backend Q=<rat>,q=<rat>");
  return o.point ? *o.point : Specialization::defaultPoint();
}

int need(const std::optional<int>& v, const char* flag, const Config& c) {
  if (!v) throw InputError(c.command + " needs " + flag);
  if (*v < 1) throw InputError(std::string(flag) + " must be positive");
  return *v;
}

Json paramsJson(const Config& c) {
  Json p = Json::object();
  if (c.command == "verify") p["suite"] = c.suite;
  if (c.n) p["n"] = *c.n;
  if (c.d) p["d"] = *c.d;
  if (c.e) p["e"] = *c.e;
  if (!c.backend.empty()) p["backend"] = c.backend;
  if (!c.shape.empty()) p["shape"] = c.shape;
  return p;
}

// ---------------------------------------------------------------- isolated suites

bool readAll(int fd, std::string& buf, int timeoutSeconds) {
  char chunk[65536];
  const bool bounded = timeoutSeconds > 0;
  long remainingMs = static_cast<long>(timeoutSeconds) * 1000;
  while (true) {
    pollfd p{fd, POLLIN, 0};
    const int step = bounded ? static_cast<int>(std::min<long>(remainingMs, 1000)) : 1000;
    if (bounded && remainingMs <= 0) return false;
    int r = poll(&p, 1, step);
    if (bounded) remainingMs -= step;
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) continue;
    ssize_t k = read(fd, chunk, sizeof chunk);
    if (k < 0 && errno == EINTR) continue;
    if (k <= 0) return true;
    buf.append(chunk, static_cast<std::size_t>(k));
  }
}

// Runs the suite in a child process so that an expired timeout can stop it.
SuiteResult runIsolated(const std::string& name, const SuiteOptions& o, int timeoutSeconds) {
  int fds[2];
  if (pipe(fds) != 0) return runSuite(name, o);
  std::cout.flush();
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    return runSuite(name, o);
  }
  if (pid == 0) {
    close(fds[0]);
    Json out;
    try {
      out = Json{{"result", toJson(runSuite(name, o))}};
    } catch (const Error& e) {
      out = Json{{"errorKind", static_cast<int>(e.kind())}, {"message", e.what()}};
    } catch (const std::exception& e) {
      out = Json{{"errorKind", -1}, {"message", e.what()}};
    }
    std::string s = out.dump();
    const char* p = s.data();
    std::size_t left = s.size();
    while (left > 0) {
      ssize_t k = write(fds[1], p, left);
      if (k <= 0) break;
      p += k;
      left -= static_cast<std::size_t>(k);
    }
    close(fds[1]);
    _exit(0);
  }
  close(fds[1]);
  std::string buf;
  bool finished = readAll(fds[0], buf, timeoutSeconds);
  close(fds[0]);
  if (!finished) kill(pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);
  SuiteResult r;
  r.suite = name;
  if (!finished) {
    r.checks.push_back({"completed within timeout", Json{{"timeoutSeconds", timeoutSeconds}}, backendLabel(o), false,
                        std::nullopt, "suite stopped after the timeout"});
    return r;
  }
  Json j = Json::parse(buf, nullptr, false);
  if (j.is_discarded()) {
    r.checks.push_back({"completed", Json::object(), backendLabel(o), false, std::nullopt,
                        "worker exited without a report (status " + std::to_string(status) + ")"});
    return r;
  }
  if (j.contains("errorKind")) {
    int k = j.at("errorKind").get<int>();
    std::string msg = j.at("message").get<std::string>();
    if (k >= 0 && isInputError(static_cast<ErrorKind>(k))) throw InputError(msg);
    r.checks.push_back({"completed", Json::object(), backendLabel(o), false, std::nullopt, msg});
    return r;
  }
  return suiteFromJson(j.at("result"));
}

// ---------------------------------------------------------------- formatting

std::string tsvValue(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flattenText(const Json& v, const std::string& prefix, std::ostream& os) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, x] : v.items()) flattenText(x, prefix.empty() ? k : prefix + "." + k, os);
  } else {
    os << prefix << " = " << tsvValue(v) << "\n";
  }
}

std::string verifyText(const std::vector<SuiteResult>& suites) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %8s  %s\n", "suite", "passed", "status");
  os << line;
  for (const auto& s : suites) {
    std::string frac = std::to_string(s.passed()) + "/" + std::to_string(s.total());
    std::snprintf(line, sizeof line, "%-20s %8s  %s\n", s.suite.c_str(), frac.c_str(), s.pass() ? "PASS" : "FAIL");
    os << line;
  }
  for (const auto& s : suites)
    for (const auto& c : s.checks) {
      if (!c.pass) {
        os << "FAIL " << s.suite << ": " << c.check << " " << c.params.dump() << " [" << c.backend << "]";
        if (!c.note.empty()) os << " " << c.note;
        if (c.witness) os << " witness=" << c.witness->dump();
        os << "\n";
      } else if (!c.note.empty()) {
        os << "NOTE " << s.suite << ": " << c.check << " " << c.params.dump() << " " << c.note << "\n";
      }
    }
  return os.str();
}

std::string verifyTsv(const std::vector<SuiteResult>& suites) {
  std::ostringstream os;
  os << "suite\tcheck\tparams\tbackend\tpass\n";
  for (const auto& s : suites)
    for (const auto& c : s.checks)
      os << s.suite << "\t" << c.check << "\t" << c.params.dump() << "\t" << c.backend << "\t"
         << (c.pass ? "true" : "false") << "\n";
  return os.str();
}

std::string rowsTsv(const Json& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [k, v] : rows.front().items()) {
    os << (first ? "" : "\t") << k;
    first = false;
  }
  os << "\n";
  for (const auto& r : rows) {
    first = true;
    for (const auto& [k, v] : r.items()) {
      os << (first ? "" : "\t") << tsvValue(v);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- commands

int run(const Config& c) {
  const SuiteOptions o = suiteOptions(c);
  std::string output = c.output;
  if (output.empty()) output = c.command == "dims" ? "tsv" : c.command == "verify" ? "text" : "json";
  Json results;
  bool pass = false;
  std::string body;

  if (c.command == "verify") {
    std::vector<std::string> names;
    if (c.suite == "all") {
      names = suiteNames();
    } else {
      std::stringstream ss(c.suite);
      for (std::string s; std::getline(ss, s, ',');) {
        if (!isSuite(s)) throw InputError("unknown suite '" + s + "'");
        names.push_back(s);
      }
    }
    std::vector<SuiteResult> suites;
    for (const auto& name : names) suites.push_back(runIsolated(name, o, c.timeout));
    pass = std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.pass(); });
    results = Json::array();
    for (const auto& s : suites) results.push_back(toJson(s));
    if (output == "text") body = verifyText(suites) + (pass ? "all checks pass\n" : "some checks FAILED\n");
    if (output == "tsv") body = verifyTsv(suites);
  } else if (c.command == "dims") {
    results = dimsReport(need(c.n, "--n", c), need(c.d, "--d", c), o, pass);
    if (output == "tsv") {
      Json rows = results.at("rows");
      for (auto& r : rows) {
        Json x{{"n", results["n"]}, {"d", results["d"]}};
        x.update(r);
        r = x;
      }
      body = rowsTsv(rows);
    }
  } else if (c.command == "decompose") {
    results = decomposeReport(need(c.n, "--n", c), need(c.d, "--d", c), o, pass);
    if (output == "tsv") {
      body = rowsTsv(results.at("rows"));
      body += "# sumLd=" + results["checks"]["sumLd"].dump() + " sumL2=" + results["checks"]["sumL2"].dump() + "\n";
    }
  } else if (c.command == "schur") {
    if (c.shape.empty()) throw InputError("schur needs --shape \"<lambda>|<mu>\"");
    Bipartition bp = Bipartition::parse(c.shape);
    results = schurReport(bp, need(c.n, "--n", c), o, pass);
    if (output == "tsv") {
      Json row = results;
      row.erase("basis");
      body = rowsTsv(Json::array({row}));
    }
  } else if (c.command == "eigen") {
    const Specialization s = pointFor(c, o);
    results = eigenReport(need(c.n, "--n", c), need(c.d, "--d", c), c.e, s, pass);
    if (output == "tsv") {
      Json rows = Json::array();
      for (const auto& op : results.at("spectra"))
        for (const auto& r : op.at("roots"))
          rows.push_back(Json{{"op", op["op"]}, {"value", r["value"]}, {"multiplicity", r["multiplicity"]}});
      body = rowsTsv(rows);
    }
  } else if (c.command == "centralizer") {
    const Specialization s = pointFor(c, o);
    results = centralizerReport(need(c.n, "--n", c), need(c.d, "--d", c), s, pass);
    if (output == "tsv") body = rowsTsv(Json::array({results}));
  } else {
    throw InputError("unknown command '" + c.command + "'");
  }

  if (output == "json") {
    Json top{{"tool", kToolName},
             {"version", kToolVersion},
             {"command", c.command},
             {"params", paramsJson(c)},
             {"results", results},
             {"pass", pass}};
    body = top.dump(2) + "\n";
  } else if (output == "text" && c.command != "verify") {
    std::ostringstream os;
    flattenText(results, "", os);
    os << "pass = " << (pass ? "true" : "false") << "\n";
    body = os.str();
  }

  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out);
    if (!f) throw InputError("cannot open '" + c.out + "' for writing");
    f << body;
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Exact computations with two-parameter type-B Hecke algebras and their Schur functors"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  const CLI::Validator smallPositive(
      [](std::string& v) -> std::string {
        int x = 0;
        auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc() || end != v.data() + v.size()) return "'" + v + "' is not an integer";
        if (x < 1 || x > 64) return "value " + v + " outside 1..64";
        return {};
      },
      "INT in 1..64");

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "dimension of V_n")->check(smallPositive);
    sub->add_option("--d", cfg.d, "tensor degree")->check(smallPositive);
    sub->add_option("--e", cfg.e, "block size for e-Hecke computations")->check(smallPositive);
    sub->add_option("--backend", cfg.backend, "symbolic or Q=<rat>,q=<rat>");
    sub->add_option("--shape", cfg.shape, "bipartition \"<lambda>|<mu>\", e.g. \"2,1|1\" or \"-|2\"");
    sub->add_option("--output", cfg.output, "json, tsv or text")->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_option("--out", cfg.out, "write the report to this file");
  };

  auto* verify = app.add_subcommand("verify", "run verification suites");
  addCommon(verify);
  verify->add_option("--suite", cfg.suite, "suite name, comma-separated names, or all");
  verify->add_option("--timeout", cfg.timeout, "seconds per suite (0 disables)")->check(CLI::Range(0, 86400));
  for (const char* name : {"dims", "decompose", "schur", "eigen", "centralizer"}) {
    const char* help = std::string(name) == "dims"          ? "dimensions of the four +- powers"
                       : std::string(name) == "decompose"   ? "Schur-Weyl decomposition of V_n^(x)d"
                       : std::string(name) == "schur"       ? "Schur functor subspace for a bipartition"
                       : std::string(name) == "eigen"       ? "spectra of K_i, c_K and block K-matrices"
                                                            : "double centralizer dimensions";
    addCommon(app.add_subcommand(name, help));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return run(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return isInputError(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
