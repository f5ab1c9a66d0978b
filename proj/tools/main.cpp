// Command-line front end: load a configuration and a kappa spec, build the
// free-field realization and run the selected verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "torfock/kappa.hpp"
#include "torfock/verify.hpp"

using namespace torfock;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::optional<std::vector<Rat>> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& tok : split(s, ',')) {
    auto r = parse_rat(tok);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

// kappa argument: builtin:point-at-zero:<c0,..,cN>, builtin:positive-cone,
// or a path to a JSON file [{"m": [..], "p": int, "value": "p/q"}, ...].
std::optional<KappaSpec> load_kappa(const std::string& arg, int N,
                                    const OrderScheme& scheme,
                                    std::string& err) {
  const std::string pz = "builtin:point-at-zero:";
  if (arg.rfind(pz, 0) == 0) {
    auto c = parse_rat_list(arg.substr(pz.size()));
    if (!c || int(c->size()) != N + 1) {
      err = "point-at-zero needs N+1 rational values";
      return std::nullopt;
    }
    return kappa_point_at_zero(N, *c);
  }
  if (arg == "builtin:positive-cone") {
    if (N < 1) {
      err = "positive-cone builtin needs N >= 1";
      return std::nullopt;
    }
    // support point (1,1,0,...,0) with values (1,-1,0,...,0)
    MultiIndex m(std::size_t(N + 1));
    m[0] = 1;
    m[1] = 1;
    std::vector<Rat> c(std::size_t(N + 1), Rat(0));
    c[0] = Rat(1);
    c[1] = Rat(-1);
    return kappa_positive_cone(N, scheme, {{m, c}});
  }
  std::ifstream in(arg);
  if (!in) {
    err = "cannot open kappa file: " + arg;
    return std::nullopt;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    err = std::string("kappa file parse error: ") + e.what();
    return std::nullopt;
  }
  KappaSpec spec;
  spec.N = N;
  if (!j.is_array()) {
    err = "kappa file must be a JSON array of records";
    return std::nullopt;
  }
  for (const auto& rec : j) {
    if (!rec.contains("m") || !rec.contains("p") || !rec.contains("value")) {
      err = "kappa record needs m, p, value";
      return std::nullopt;
    }
    MultiIndex m;
    for (const auto& v : rec["m"]) m.c.push_back(v.get<long>());
    if (int(m.dim()) != N + 1) {
      err = "kappa record mode has wrong dimension";
      return std::nullopt;
    }
    int p = rec["p"].get<int>();
    if (p < 0 || p > N) {
      err = "kappa record index p out of 0..N";
      return std::nullopt;
    }
    auto val = parse_rat(rec["value"].get<std::string>());
    if (!val) {
      err = "kappa record value is not a rational";
      return std::nullopt;
    }
    spec.set(m, p, *val);
  }
  return spec;
}

void merge(CheckReport& into, const CheckReport& from) {
  into.checks.insert(into.checks.end(), from.checks.begin(),
                     from.checks.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Free-field realization of the toroidal Lie algebra of type A_n: "
      "exact mode-level relation checker"};
  app.require_subcommand(1);
  auto* cmd = app.add_subcommand("verify", "run verification suites");

  int n = 2, N = 1;
  std::string weights_arg, kappa_arg = "builtin:point-at-zero:1,-1";
  std::string lambda_arg, suite = "all", out_path = "report.json", dump;
  long box = 2;
  int vectors = 25, mode_samples = 40, vectors_per_instance = 2;
  std::uint64_t seed = 42;

  cmd->add_option("--n", n, "rank (>= 2)");
  cmd->add_option("--N", N, "number of extra torus directions (modes in Z^{N+1})");
  cmd->add_option("--weights", weights_arg,
                  "order-scheme weights, comma-separated rationals (default all 1)");
  cmd->add_option("--kappa", kappa_arg,
                  "builtin:point-at-zero:c0,..,cN | builtin:positive-cone | file");
  cmd->add_option("--lambda", lambda_arg,
                  "lambda_0..lambda_n, comma-separated rationals (default 0)");
  cmd->add_option("--box", box, "mode box radius");
  cmd->add_option("--vectors", vectors, "test-vector pool size");
  cmd->add_option("--seed", seed, "RNG seed");
  cmd->add_option("--mode-samples", mode_samples,
                  "sampled mode tuples per generator pair");
  cmd->add_option("--vectors-per-instance", vectors_per_instance,
                  "vectors applied per sampled instance");
  cmd->add_option("--suite", suite,
                  "all | heisenberg | relations | serre | lemmas | mutation | grading");
  cmd->add_option("--out", out_path, "report output path");
  cmd->add_option("--dump-realization", dump,
                  "r,m0,..,mN: print the E/F/H term lists at that mode and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  CheckConfig cfg;
  cfg.params.n = n;
  cfg.params.N = N;
  cfg.box_radius = box;
  cfg.vectors = vectors;
  cfg.seed = seed;
  cfg.mode_samples = mode_samples;
  cfg.vectors_per_instance = vectors_per_instance;

  if (weights_arg.empty()) {
    cfg.params.scheme = OrderScheme::all_ones(std::size_t(N + 1));
  } else {
    auto w = parse_rat_list(weights_arg);
    if (!w || int(w->size()) != N + 1) {
      std::cerr << "error: --weights needs N+1 rationals\n";
      return 64;
    }
    cfg.params.scheme.weights = *w;
  }

  if (lambda_arg.empty()) {
    cfg.params.lambda.assign(std::size_t(n + 1), Rat(0));
  } else {
    auto l = parse_rat_list(lambda_arg);
    if (!l || int(l->size()) != n + 1) {
      std::cerr << "error: --lambda needs n+1 rationals\n";
      return 64;
    }
    cfg.params.lambda = *l;
  }

  std::string kerr;
  auto kappa = load_kappa(kappa_arg, N, cfg.params.scheme, kerr);
  if (!kappa) {
    std::cerr << "error: " << kerr << "\n";
    return 64;
  }
  cfg.params.kappa = *kappa;

  KappaReport krep = validate_kappa(cfg.params.kappa, cfg.params.scheme, box);
  if (!krep.pass) {
    std::cerr << "kappa spec is invalid:\n";
    for (const auto& v : krep.violations) std::cerr << "  " << v.str() << "\n";
    return 2;
  }

  try {
    cfg.params.check();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }

  if (!dump.empty()) {
    auto parts = split(dump, ',');
    if (int(parts.size()) != N + 2) {
      std::cerr << "error: --dump-realization wants r,m0,..,mN\n";
      return 64;
    }
    int r = std::stoi(parts[0]);
    MultiIndex m(std::size_t(N + 1));
    for (int p = 0; p <= N; ++p) m[std::size_t(p)] = std::stol(parts[p + 1]);
    Realization real(cfg.params);
    std::cout << "E_" << r << m.str() << ":\n" << real.E(r, m).str();
    std::cout << "F_" << r << m.str() << ":\n" << real.F(r, m).str();
    std::cout << "H_" << r << m.str() << ":\n" << real.H(r, m).str();
    return 0;
  }

  std::set<std::string> suites;
  for (const auto& s : split(suite, ',')) suites.insert(s);
  bool all = suites.count("all") > 0;
  auto want = [&](const char* name) { return all || suites.count(name) > 0; };

  CheckReport report;
  if (want("heisenberg")) merge(report, check_heisenberg(cfg));
  if (want("relations"))
    for (Relation r : {Relation::R0ii, Relation::R1, Relation::R2E,
                       Relation::R2F, Relation::R3})
      merge(report, check_relation(r, cfg));
  if (want("serre"))
    for (Relation r : {Relation::S4iE, Relation::S4iF, Relation::S4ii,
                       Relation::S4iii})
      merge(report, check_relation(r, cfg));
  if (want("lemmas")) merge(report, check_lemmas(cfg));
  if (want("mutation")) merge(report, mutation_guard(cfg));
  if (want("grading")) merge(report, check_grading(cfg, 20));

  if (report.checks.empty()) {
    std::cerr << "error: no suite selected (unknown --suite value?)\n";
    return 64;
  }

  std::ofstream out(out_path, std::ios::binary);
  out << report.to_json(cfg);
  out.close();

  for (const auto& c : report.checks) {
    std::cout << (c.failures.empty() ? "PASS " : "FAIL ") << c.id << " ("
              << c.instances << " instances, " << c.failures.size()
              << " failures)";
    if (!c.note.empty()) std::cout << " [" << c.note << "]";
    std::cout << "\n";
  }
  std::cout << (report.pass() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
  return report.pass() ? 0 : 1;
}
