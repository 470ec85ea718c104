// assoc — exact associahedron/multiassociahedron workbench.
//
// Commands: secondary, cluster, minkowski, multi, verify.
// Exit codes: 0 all requested checks pass, 1 a mathematical check failed,
// 2 input error, 3 resource guard tripped.

#include "assoc/checks.hpp"
#include "assoc/errors.hpp"
#include "assoc/io.hpp"
#include "assoc/multi.hpp"
#include "assoc/realizations.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace assoc;

// ---------------------------------------------------------------------------
// Small helpers

struct RequestedCheck {
  enum Kind { kAssoc, kSphere, kParallel } kind;
  int parallel_expected = 0;
};

RequestedCheck parse_check(const std::string& s) {
  if (s == "assoc") return {RequestedCheck::kAssoc};
  if (s == "sphere") return {RequestedCheck::kSphere};
  if (s.rfind("parallel=", 0) == 0) {
    RequestedCheck c{RequestedCheck::kParallel};
    try {
      c.parallel_expected = std::stoi(s.substr(9));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --check value: " + s);
    }
    return c;
  }
  throw std::invalid_argument("unknown --check value: " + s +
                              " (expected assoc, sphere, or parallel=N)");
}

int thread_count(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("ASSOC_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("ASSOC_THREADS must be a positive integer");
  }
  return 1;
}

std::string pairs_to_string(const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out << ' ';
    out << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  }
  return out.str();
}

void write_out_file(const std::string& path, const Polytope& p) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open --out path: " + path);
  write_polytope(out, p);
}

// Runs the three property checks on a polytope, records the results, and
// appends pass/fail entries for the requested checks.
void run_polytope_checks(const Polytope& p, int n, const std::vector<RequestedCheck>& requested,
                         ExperimentReport* report) {
  const VerificationReport ver = verify_associahedron(p, n);
  const auto [spherical, radius2] = sphericity_check(p);
  const ParallelFacetReport par = parallel_facet_pairs(p);

  report->results.emplace_back("intrinsic_dim", std::to_string(p.intrinsic_dim));
  report->results.emplace_back("vertices", std::to_string(p.vertex_count()));
  report->results.emplace_back("facets", std::to_string(p.facet_count()));
  report->results.emplace_back("is_associahedron", ver.is_associahedron ? "true" : "false");
  if (!ver.is_associahedron)
    report->results.emplace_back("verification_failure", ver.failure_reason);
  report->results.emplace_back("is_simple", ver.is_simple ? "true" : "false");
  report->results.emplace_back("spherical", spherical ? "true" : "false");
  if (spherical) report->results.emplace_back("radius2", to_string(*radius2));
  report->results.emplace_back("parallel_pairs", std::to_string(par.count));
  if (par.count > 0) report->results.emplace_back("parallel_pair_list", pairs_to_string(par.pairs));

  for (const RequestedCheck& c : requested) {
    switch (c.kind) {
      case RequestedCheck::kAssoc:
        report->checks.push_back({"associahedron", ver.is_associahedron,
                                  ver.is_associahedron ? "" : ver.failure_reason});
        break;
      case RequestedCheck::kSphere:
        report->checks.push_back(
            {"sphericity", spherical, spherical ? "radius2=" + to_string(*radius2) : ""});
        break;
      case RequestedCheck::kParallel: {
        const bool ok = par.count == c.parallel_expected;
        std::ostringstream detail;
        detail << "count=" << par.count << " expected=" << c.parallel_expected;
        report->checks.push_back({"parallel_pairs", ok, detail.str()});
        break;
      }
    }
  }
}

int finish(ExperimentReport& report, std::chrono::steady_clock::time_point start) {
  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  std::cout << to_text(report);
  std::cerr << "timing_ms " << report.timing_ms << "\n";
  return report.all_checks_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// secondary

struct SecondaryArgs {
  std::vector<std::string> parabola;
  int ngon = 0;
  std::uint64_t seed = 1;
  bool triangle_midpoints = false;
  std::string config_file;
  std::vector<std::string> checks;
  std::string out_path;
  bool force = false;
  int threads = 0;
};

PointConfig2D build_secondary_config(const SecondaryArgs& args, ExperimentReport* report) {
  const int sources = (args.parabola.empty() ? 0 : 1) + (args.ngon ? 1 : 0) +
                      (args.triangle_midpoints ? 1 : 0) + (args.config_file.empty() ? 0 : 1);
  if (sources != 1)
    throw std::invalid_argument(
        "need exactly one of --parabola / --ngon / --triangle-midpoints / --config");

  if (!args.parabola.empty()) {
    int m = 0;
    std::optional<Rational> a, b;
    std::optional<AffineMap2D> map;
    for (const std::string& tok : args.parabola) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--parabola tokens must look like key=value: " + tok);
      const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
      if (key == "m") {
        m = std::stoi(value);
      } else if (key == "a") {
        a = parse_rational(value);
      } else if (key == "b") {
        b = parse_rational(value);
      } else if (key == "map" || key == "shift") {
        // map=r00,r01,r10,r11 (row major), shift=s0,s1
        std::vector<Rational> vals;
        std::istringstream parts(value);
        std::string piece;
        while (std::getline(parts, piece, ',')) vals.push_back(parse_rational(piece));
        if (!map) {
          map = AffineMap2D{RationalMatrix::Identity(2, 2), RationalVector::Zero(2)};
        }
        if (key == "map") {
          if (vals.size() != 4) throw std::invalid_argument("map= needs 4 entries");
          map->linear << vals[0], vals[1], vals[2], vals[3];
        } else {
          if (vals.size() != 2) throw std::invalid_argument("shift= needs 2 entries");
          map->shift << vals[0], vals[1];
        }
      } else {
        throw std::invalid_argument("unknown --parabola key: " + key);
      }
    }
    if (m == 0 || !a || !b)
      throw std::invalid_argument("--parabola needs m=, a=, b=");
    report->inputs.emplace_back("generator", "parabola");
    report->inputs.emplace_back("m", std::to_string(m));
    report->inputs.emplace_back("a", to_string(*a));
    report->inputs.emplace_back("b", to_string(*b));
    return parabola_config(m, *a, *b, map);
  }
  if (args.ngon) {
    report->inputs.emplace_back("generator", "random-ngon");
    report->inputs.emplace_back("m", std::to_string(args.ngon));
    report->inputs.emplace_back("seed", std::to_string(args.seed));
    return random_convex_polygon(args.ngon, args.seed);
  }
  if (args.triangle_midpoints) {
    report->inputs.emplace_back("generator", "triangle-midpoints");
    return make_point_config({rvec({0, 0}), rvec({1, 0}), rvec({2, 0}), rvec({1, 1}),
                              rvec({0, 2}), rvec({0, 1})});
  }
  std::ifstream in(args.config_file);
  if (!in) throw std::invalid_argument("cannot open config file: " + args.config_file);
  report->inputs.emplace_back("config_file", args.config_file);
  return read_point_config(in);
}

int run_secondary(const SecondaryArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.command = "secondary";
  const PointConfig2D config = build_secondary_config(args, &report);
  if (config.size() > 9 && !args.force)
    throw resource_limit_error(
        "secondary polytopes are guarded at m <= 9; pass --force to override");
  std::vector<RequestedCheck> requested;
  for (const std::string& c : args.checks) requested.push_back(parse_check(c));

  const Polytope p = secondary_polytope(config, thread_count(args.threads));
  run_polytope_checks(p, config.size() - 3, requested, &report);
  write_out_file(args.out_path, p);
  return finish(report, start);
}

// ---------------------------------------------------------------------------
// cluster / minkowski

struct RealizationArgs {
  int n = 0;
  std::string params_file;
  std::string alpha;  // minkowski only: "all=VALUE"
  std::vector<std::string> checks;
  std::string out_path;
};

int run_cluster(const RealizationArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.command = "cluster";
  ClusterParams params;
  if (!args.params_file.empty()) {
    std::ifstream in(args.params_file);
    if (!in) throw std::invalid_argument("cannot open params file: " + args.params_file);
    params = read_cluster_params(in);
    if (args.n && args.n != params.n)
      throw std::invalid_argument("--n disagrees with the params file");
    report.inputs.emplace_back("params_file", args.params_file);
  } else {
    if (!args.n) throw std::invalid_argument("cluster needs --n or --params");
    params = default_cluster_params(args.n);
    report.inputs.emplace_back("params", "defaults");
  }
  report.inputs.emplace_back("n", std::to_string(params.n));

  std::vector<RequestedCheck> requested = {{RequestedCheck::kAssoc}};
  for (const std::string& c : args.checks) requested.push_back(parse_check(c));

  const Polytope p = cluster_associahedron(params);
  run_polytope_checks(p, params.n, requested, &report);
  write_out_file(args.out_path, p);
  return finish(report, start);
}

int run_minkowski(const RealizationArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.command = "minkowski";
  MinkowskiParams params;
  if (!args.params_file.empty()) {
    std::ifstream in(args.params_file);
    if (!in) throw std::invalid_argument("cannot open params file: " + args.params_file);
    params = read_minkowski_params(in);
    if (args.n && args.n != params.n)
      throw std::invalid_argument("--n disagrees with the params file");
    report.inputs.emplace_back("params_file", args.params_file);
  } else {
    if (!args.n) throw std::invalid_argument("minkowski needs --n (with --alpha) or --params");
    params = default_minkowski_params(args.n);
    if (!args.alpha.empty()) {
      if (args.alpha.rfind("all=", 0) != 0)
        throw std::invalid_argument("--alpha must look like all=VALUE");
      const Rational w = parse_rational(args.alpha.substr(4));
      for (auto& [key, value] : params.alpha) value = w;
      report.inputs.emplace_back("alpha", to_string(w));
    } else {
      report.inputs.emplace_back("alpha", "1");
    }
  }
  report.inputs.emplace_back("n", std::to_string(params.n));

  std::vector<RequestedCheck> requested = {{RequestedCheck::kAssoc}};
  for (const std::string& c : args.checks) requested.push_back(parse_check(c));

  const Polytope p = minkowski_associahedron(params);
  run_polytope_checks(p, params.n, requested, &report);
  write_out_file(args.out_path, p);
  return finish(report, start);
}

// ---------------------------------------------------------------------------
// multi

struct MultiArgs {
  int n = 0;
  int k = 0;
  std::string subcommand;
  bool force = false;
};

std::string fvector_to_string(const FVector& f) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < f.counts.size(); ++i) {
    if (i) out << ", ";
    out << f.counts[i];
  }
  out << ')';
  return out.str();
}

std::string facet_to_string(const KTriangulation& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out << ' ';
    out << t[i].a << '-' << t[i].b;
  }
  return out.str();
}

int run_multi(const MultiArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.command = "multi " + args.subcommand;
  report.inputs.emplace_back("n", std::to_string(args.n));
  report.inputs.emplace_back("k", std::to_string(args.k));
  const int n = args.n, k = args.k;

  // Desk-scale guard shared by the enumerating subcommands: the Jonsson
  // determinant predicts the facet count cheaply.
  const auto guard_facets = [&](std::size_t cap) {
    if (args.force) return;
    const long long predicted = jonsson_count(n, k);
    if (predicted > static_cast<long long>(cap))
      throw resource_limit_error("instance too large: expected facet count " +
                                 std::to_string(predicted) + " exceeds " +
                                 std::to_string(cap) + " (pass --force to override)");
  };

  if (args.subcommand == "fvector") {
    guard_facets(10000);
    const FVector f = f_vector(n, k);
    report.results.emplace_back("fvector", fvector_to_string(f));
    const long long jonsson = jonsson_count(n, k);
    report.checks.push_back({"top_count_matches_jonsson", f.counts.back() == jonsson,
                             "jonsson=" + std::to_string(jonsson)});
  } else if (args.subcommand == "facets") {
    guard_facets(10000);
    const auto facets = enumerate_k_triangulations(n, k);
    report.results.emplace_back("facet_count", std::to_string(facets.size()));
    for (const KTriangulation& t : facets)
      report.results.emplace_back("facet", facet_to_string(t));
    const auto [pure, dim] = purity_and_dimension_check(n, k);
    report.results.emplace_back("dimension", std::to_string(dim));
    std::ostringstream detail;
    detail << "expected facet size " << k * (n - 2 * k - 1);
    report.checks.push_back({"pure", pure, detail.str()});
  } else if (args.subcommand == "flipgraph") {
    const FlipGraph g = flip_graph_connected(n, k, args.force ? SIZE_MAX : 10000);
    std::size_t edges = 0;
    for (const auto& adj : g.adjacency) edges += adj.size();
    report.results.emplace_back("nodes", std::to_string(g.adjacency.size()));
    report.results.emplace_back("edges", std::to_string(edges / 2));
    report.checks.push_back({"connected", g.connected, ""});
  } else if (args.subcommand == "jonsson") {
    guard_facets(10000);
    const long long det = jonsson_count(n, k);
    const auto facets = enumerate_k_triangulations(n, k);
    report.results.emplace_back("jonsson_determinant", std::to_string(det));
    report.results.emplace_back("enumerated_facets", std::to_string(facets.size()));
    report.checks.push_back(
        {"determinant_matches_enumeration", det == static_cast<long long>(facets.size()), ""});
  } else if (args.subcommand == "capoyleas") {
    const bool ok = capoyleas_pach_check(n, k);
    report.results.emplace_back("expected_size", std::to_string(k * (2 * n - 2 * k - 1)));
    report.checks.push_back({"capoyleas_pach", ok, ""});
  } else if (args.subcommand == "cyclic-compare") {
    if (n != 2 * k + 3)
      throw std::invalid_argument("cyclic-compare requires n = 2k+3");
    const FVector lhs = f_vector(n, k);
    const FVector rhs = cyclic_polytope_boundary_fvector(k);
    report.results.emplace_back("delta_fvector", fvector_to_string(lhs));
    report.results.emplace_back("cyclic_fvector", fvector_to_string(rhs));
    report.checks.push_back({"fvectors_equal", lhs == rhs, ""});
  } else {
    throw std::invalid_argument("unknown multi subcommand: " + args.subcommand);
  }
  return finish(report, start);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string in_path;
  int n = -1;
  std::vector<std::string> checks;
};

int run_verify(const VerifyArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.command = "verify";
  report.inputs.emplace_back("file", args.in_path);
  std::ifstream in(args.in_path);
  if (!in) throw std::invalid_argument("cannot open polytope file: " + args.in_path);
  const Polytope p = read_polytope(in);
  const int n = args.n >= 0 ? args.n : p.intrinsic_dim;
  report.inputs.emplace_back("n", std::to_string(n));

  std::vector<RequestedCheck> requested;
  for (const std::string& c : args.checks) requested.push_back(parse_check(c));
  if (requested.empty()) requested = {{RequestedCheck::kAssoc}};
  run_polytope_checks(p, n, requested, &report);
  return finish(report, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact associahedron & multiassociahedron workbench"};
  app.require_subcommand(1);

  SecondaryArgs sec;
  CLI::App* secondary = app.add_subcommand("secondary", "secondary polytope of a plane config");
  secondary->add_option("--parabola", sec.parabola, "parabola generator: m= a= b= [map=] [shift=]")
      ->expected(-1);
  secondary->add_option("--ngon", sec.ngon, "random strictly convex m-gon");
  secondary->add_option("--random-seed", sec.seed, "seed for --ngon");
  secondary->add_flag("--triangle-midpoints", sec.triangle_midpoints,
                      "triangle (0,0),(2,0),(0,2) with edge midpoints");
  secondary->add_option("--config", sec.config_file, "point configuration file");
  secondary->add_option("--check", sec.checks, "assoc | sphere | parallel=N");
  secondary->add_option("--out", sec.out_path, "write the polytope file here");
  secondary->add_flag("--force", sec.force, "override the m <= 9 guard");
  secondary->add_option("--threads", sec.threads, "GKZ worker threads (or ASSOC_THREADS)");

  RealizationArgs clu;
  CLI::App* cluster = app.add_subcommand("cluster", "cluster-type H-description realization");
  cluster->add_option("--n", clu.n, "dimension");
  cluster->add_option("--params", clu.params_file, "JSON file with the f table");
  cluster->add_option("--check", clu.checks, "extra checks: sphere | parallel=N");
  cluster->add_option("--out", clu.out_path, "write the polytope file here");

  RealizationArgs mink;
  CLI::App* minkowski = app.add_subcommand("minkowski", "weighted Minkowski sum of simplices");
  minkowski->add_option("--n", mink.n, "dimension");
  minkowski->add_option("--alpha", mink.alpha, "all=VALUE (uniform weights)");
  minkowski->add_option("--params", mink.params_file, "JSON file with the alpha table");
  minkowski->add_option("--check", mink.checks, "extra checks: sphere | parallel=N");
  minkowski->add_option("--out", mink.out_path, "write the polytope file here");

  MultiArgs mul;
  CLI::App* multi = app.add_subcommand("multi", "multiassociahedron Delta_{n,k}");
  multi->add_option("--n", mul.n, "polygon size")->required();
  multi->add_option("--k", mul.k, "crossing parameter")->required();
  multi
      ->add_option("subcommand", mul.subcommand,
                   "fvector | facets | flipgraph | jonsson | capoyleas | cyclic-compare")
      ->required();
  multi->add_flag("--force", mul.force, "override the 10000-facet guard");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "load a polytope file and run checks");
  verify->add_option("--in", ver.in_path, "polytope file")->required();
  verify->add_option("--n", ver.n, "expected associahedron dimension");
  verify->add_option("--check", ver.checks, "assoc | sphere | parallel=N (default: assoc)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version are not errors; bad usage is input error
  }

  try {
    if (*secondary) return run_secondary(sec);
    if (*cluster) return run_cluster(clu);
    if (*minkowski) return run_minkowski(mink);
    if (*multi) return run_multi(mul);
    if (*verify) return run_verify(ver);
    return 2;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const math_check_error& e) {
    std::cerr << "math check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
