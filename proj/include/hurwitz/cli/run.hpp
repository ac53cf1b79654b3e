#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/cayley/graph.hpp"
#include "hurwitz/cayley/paths.hpp"
#include "hurwitz/cli/cache.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/genus0/tree.hpp"
#include "hurwitz/genus0/walls.hpp"
#include "hurwitz/oracle/graph.hpp"
#include "hurwitz/oracle/tuples.hpp"
#include "hurwitz/tropical/enumerate.hpp"
#include "hurwitz/tropical/export.hpp"
#include "hurwitz/tropical/hurwitz.hpp"

namespace hurwitz::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kInfeasible = 3,
  kDisagreement = 4,
  kOnWall = 5,
};

/// Engines disagree; the message carries the diff.
class Disagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Entries parse_entries(const std::string& text) {
  const Partition check = Partition::parse(text);  // validates the syntax
  (void)check;
  Entries out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(std::stoi(token));
  return out;
}

/// "a,b:c,d" into labeled (μ, ν).
inline std::pair<Entries, Entries> parse_point(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("point must read MU:NU, e.g. 20,9:3,16,10");
  return {parse_entries(text.substr(0, colon)), parse_entries(text.substr(colon + 1))};
}

inline std::string join_entries(const Entries& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s;
}

inline std::string path_json(const PathCount& p) {
  return "{\"length\": " + std::to_string(p.length) + ", \"count\": " + p.count.str() + "}";
}

inline Matching parse_matching_arg(const std::string& text, int degree) {
  if (text.find('(') != std::string::npos || text == "id") return matching_of(parse_cycles(text, degree));
  return Matching::parse(text, degree);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool use_cache = true;
  unsigned threads = 0;
};

/// Runs `compute` through the cache when enabled.
inline std::string cached(Context& ctx, const std::string& engine, const std::string& query,
                          const std::function<std::string()>& compute) {
  const ResultCache cache(ResultCache::default_dir());
  if (ctx.use_cache)
    if (auto hit = cache.lookup(engine, query)) return hit->result;
  const auto start = std::chrono::steady_clock::now();
  std::string result = compute();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  if (ctx.use_cache) cache.store(ComputationRecord{query, engine, result, elapsed.count(), kVersion});
  return result;
}

}  // namespace detail

/// Entry point behind the `hurwitz` executable. Never throws; returns the
/// process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real double Hurwitz numbers: tuple oracle, tropical graphs, Cayley walks, genus-0 walls", "hurwitz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  detail::Context ctx{out, err};
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Bypass the result cache");
  app.add_option("--threads", ctx.threads, "Worker threads (default: machine parallelism)")->check(CLI::NonNegativeNumber);

  std::function<void()> action;

  // compute
  auto* compute = app.add_subcommand("compute", "Compute H̃_g(μ,ν) or H_g(μ,ν)");
  int genus = 0;
  std::string mu_text;
  std::string nu_text;
  bool structure = true;
  std::string engine = "tropical";
  std::string format = "text";
  compute->add_option("--genus", genus, "Genus g")->required()->check(CLI::NonNegativeNumber);
  compute->add_option("--mu", mu_text, "Profile μ, e.g. 4 or 2,2")->required();
  compute->add_option("--nu", nu_text, "Profile ν")->required();
  compute->add_flag("--structure,!--no-structure", structure, "Count covers with real structure (H̃, default) or without (H)");
  compute->add_option("--engine", engine, "oracle | tropical | both | cayley")
      ->check(CLI::IsMember({"oracle", "tropical", "both", "cayley"}));
  compute->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  compute->callback([&] {
    action = [&] {
      const auto q = make_query(Partition::parse(mu_text), Partition::parse(nu_text), genus, structure);
      OracleConfig config;
      config.threads = ctx.threads;
      auto oracle = [&] { return hurwitz_oracle(q, config).to_string(); };
      auto tropical = [&] { return tropical_hurwitz(q).to_string(); };
      std::string result;
      if (engine == "oracle") {
        result = detail::cached(ctx, "oracle", q.canonical_string(), oracle);
      } else if (engine == "tropical") {
        result = detail::cached(ctx, "tropical", q.canonical_string(), tropical);
      } else if (engine == "cayley") {
        if (!q.with_structure) throw InvalidArgument("the cayley engine counts H̃ only; use --structure");
        result = detail::cached(ctx, "cayley", q.canonical_string(), [&] { return walk_tuple_aggregate(q).to_string(); });
      } else {
        const auto a = detail::cached(ctx, "oracle", q.canonical_string(), oracle);
        const auto b = detail::cached(ctx, "tropical", q.canonical_string(), tropical);
        if (a != b) throw Disagreement("engines disagree on " + q.canonical_string() + ": oracle " + a + ", tropical " + b);
        result = a;
      }
      if (format == "json") {
        nlohmann::json j = {{"query", q.canonical_string()}, {"engine", engine}, {"result", result}, {"version", kVersion}};
        out << j.dump() << '\n';
      } else {
        out << result << '\n';
      }
    };
  });

  // graphs
  auto* graphs = app.add_subcommand("graphs", "List colored monodromy graph classes with o and m̃");
  std::string graph_format = "json";
  graphs->add_option("--genus", genus, "Genus g")->required()->check(CLI::NonNegativeNumber);
  graphs->add_option("--mu", mu_text, "Profile μ")->required();
  graphs->add_option("--nu", nu_text, "Profile ν")->required();
  graphs->add_option("--format", graph_format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  graphs->callback([&] {
    action = [&] {
      const auto q = make_query(Partition::parse(mu_text), Partition::parse(nu_text), genus, true);
      const auto classes = enumerate_graphs(q);
      if (graph_format == "dot") {
        for (std::size_t i = 0; i < classes.size(); ++i) {
          out << "// o=" << classes[i].orderings << " m_tilde=" << multiplicity_tilde(classes[i].canonical) << '\n';
          out << graph_to_dot(classes[i].canonical, "G" + std::to_string(i + 1));
        }
      } else {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : classes) j.push_back(graph_class_to_json(c));
        out << j.dump(2) << '\n';
      }
    };
  });

  // tuples
  auto* tuples = app.add_subcommand("tuples", "List the monodromy tuples (small queries only)");
  tuples->add_option("--genus", genus, "Genus g")->required()->check(CLI::NonNegativeNumber);
  tuples->add_option("--mu", mu_text, "Profile μ")->required();
  tuples->add_option("--nu", nu_text, "Profile ν")->required();
  tuples->add_flag("--structure,!--no-structure", structure, "One tuple per γ (default) or per (σ, τ)");
  tuples->callback([&] {
    action = [&] {
      const auto q = make_query(Partition::parse(mu_text), Partition::parse(nu_text), genus, structure);
      enumerate_tuples(q, [&](const MonodromyTuple& t) { out << to_string(t) << '\n'; });
    };
  });

  // genus0
  auto* genus0 = app.add_subcommand("genus0", "Genus-0 piecewise constant function F, walls and wall-crossings");
  genus0->require_subcommand(1);
  auto* g0_f = genus0->add_subcommand("F", "Evaluate F(μ,ν) (entries keep their order)");
  bool bound_only = false;
  std::string g0_format = "text";
  g0_f->add_option("--mu", mu_text, "Entries of μ")->required();
  g0_f->add_option("--nu", nu_text, "Entries of ν")->required();
  g0_f->add_flag("--bound-only", bound_only, "Allow ℓ(μ), ℓ(ν) ≤ 2, where F only bounds H₀");
  g0_f->add_option("--format", g0_format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  g0_f->callback([&] {
    action = [&] {
      const Entries mu = detail::parse_entries(mu_text);
      const Entries nu = detail::parse_entries(nu_text);
      const std::string key = "mu=" + detail::join_entries(mu) + ";nu=" + detail::join_entries(nu) + (bound_only ? ";bound" : "");
      const auto value = detail::cached(ctx, "genus0", key, [&] { return F_value(mu, nu, FOptions{bound_only}).to_string(); });
      if (g0_format == "csv")
        out << "mu,nu,F\n\"" << detail::join_entries(mu) << "\",\"" << detail::join_entries(nu) << "\"," << value << '\n';
      else
        out << value << '\n';
    };
  });

  auto* g0_walls = genus0->add_subcommand("walls", "List the walls for given lengths as JSON [I, J] pairs");
  int l_mu = 0;
  int l_nu = 0;
  g0_walls->add_option("--lmu", l_mu, "ℓ(μ)")->required()->check(CLI::PositiveNumber);
  g0_walls->add_option("--lnu", l_nu, "ℓ(ν)")->required()->check(CLI::PositiveNumber);
  g0_walls->callback([&] {
    action = [&] {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& w : walls(l_mu, l_nu)) {
        std::vector<int> I;
        std::vector<int> J;
        for (int i : w.I) I.push_back(i + 1);
        for (int x : w.J) J.push_back(x + 1);
        j.push_back(nlohmann::json::array({I, J}));
      }
      out << j.dump() << '\n';
    };
  });

  auto* g0_chambers = genus0->add_subcommand("chambers", "CSV table of F over all points with entries up to --max");
  int max_entry = 6;
  g0_chambers->add_option("--lmu", l_mu, "ℓ(μ)")->required()->check(CLI::PositiveNumber);
  g0_chambers->add_option("--lnu", l_nu, "ℓ(ν)")->required()->check(CLI::PositiveNumber);
  g0_chambers->add_option("--max", max_entry, "Largest entry")->check(CLI::Range(1, 12));
  g0_chambers->callback([&] {
    action = [&] {
      const int n = l_mu + l_nu;
      if (n < 3 || n > 6) throw InvalidArgument("chamber tables need 3 <= ℓ(μ)+ℓ(ν) <= 6");
      out << "mu,nu,chamber,F\n";
      Entries point(static_cast<std::size_t>(n), 1);
      for (;;) {
        Entries mu(point.begin(), point.begin() + l_mu);
        Entries nu(point.begin() + l_mu, point.end());
        long long sum = 0;
        for (int x : mu) sum += x;
        for (int x : nu) sum -= x;
        if (sum == 0) {
          try {
            std::string chamber;
            for (int s : sign_vector(mu, nu)) chamber += s > 0 ? '+' : '-';
            out << '"' << detail::join_entries(mu) << "\",\"" << detail::join_entries(nu) << "\"," << chamber << ','
                << F_value(mu, nu, FOptions{true}) << '\n';
          } catch (const OnWallError&) {
          }
        }
        std::size_t k = 0;
        while (k < point.size() && ++point[k] > max_entry) point[k++] = 1;
        if (k == point.size()) break;
      }
    };
  });

  auto* g0_cross = genus0->add_subcommand("crossing", "Wall-crossing F(plus) − F(minus) across one wall");
  std::string wall_text;
  std::string plus_text;
  std::string minus_text;
  g0_cross->add_option("--wall", wall_text, "Wall I:J with 1-based indices, e.g. 1:1,2")->required();
  g0_cross->add_option("--plus", plus_text, "Point MU:NU on one side")->required();
  g0_cross->add_option("--minus", minus_text, "Point MU:NU on the other side")->required();
  g0_cross->callback([&] {
    action = [&] {
      const auto [mu_p, nu_p] = detail::parse_point(plus_text);
      const auto [mu_m, nu_m] = detail::parse_point(minus_text);
      const Wall w = parse_wall(wall_text, static_cast<int>(mu_p.size()), static_cast<int>(nu_p.size()));
      out << wall_crossing(w, mu_p, nu_p, mu_m, nu_m) << '\n';
    };
  });

  // cayley
  auto* cayley = app.add_subcommand("cayley", "Restricted Cayley graph of involutions");
  cayley->require_subcommand(1);
  std::string from_text;
  std::string to_text;
  int degree = 0;
  auto* c_min = cayley->add_subcommand("minpaths", "Length and number of shortest walks between two matchings");
  std::string method = "both";
  c_min->add_option("--from", from_text, "Matching 1-2,3-4 or involution in cycle notation")->required();
  c_min->add_option("--to", to_text, "Matching or involution")->required();
  c_min->add_option("--degree", degree, "Degree d (default: largest point mentioned)")->check(CLI::NonNegativeNumber);
  c_min->add_option("--method", method, "formula | bfs | both")->check(CLI::IsMember({"formula", "bfs", "both"}));
  c_min->callback([&] {
    action = [&] {
      Matching s = detail::parse_matching_arg(from_text, degree);
      Matching t = detail::parse_matching_arg(to_text, degree);
      if (degree == 0 && s.degree() != t.degree()) {
        const int d = std::max(s.degree(), t.degree());
        s = detail::parse_matching_arg(from_text, d);
        t = detail::parse_matching_arg(to_text, d);
      }
      if (method == "formula") {
        out << detail::path_json(min_paths_formula(s, t)) << '\n';
      } else if (method == "bfs") {
        out << detail::path_json(min_paths_bfs(s, t)) << '\n';
      } else {
        const auto f = min_paths_formula(s, t);
        const auto b = min_paths_bfs(s, t);
        if (!(f == b))
          throw Disagreement("formula " + detail::path_json(f) + " vs bfs " + detail::path_json(b) +
                             (component_profile(s, t).cycle_sizes.empty() ? "" : " (shared pairs count two steps in the formula)"));
        out << detail::path_json(f) << '\n';
      }
    };
  });

  auto* c_walks = cayley->add_subcommand("walks", "Number of walks of a given length");
  int length = 0;
  c_walks->add_option("--from", from_text, "Matching or involution")->required();
  c_walks->add_option("--to", to_text, "Matching or involution")->required();
  c_walks->add_option("--length", length, "Walk length r")->required()->check(CLI::NonNegativeNumber);
  c_walks->add_option("--degree", degree, "Degree d (default: largest point mentioned)")->check(CLI::NonNegativeNumber);
  c_walks->callback([&] {
    action = [&] {
      Matching s = detail::parse_matching_arg(from_text, degree);
      Matching t = detail::parse_matching_arg(to_text, degree);
      if (degree == 0 && s.degree() != t.degree()) {
        const int d = std::max(s.degree(), t.degree());
        s = detail::parse_matching_arg(from_text, d);
        t = detail::parse_matching_arg(to_text, d);
      }
      out << detail::path_json(PathCount{length, count_walks(WalkQuery{s, t, length})}) << '\n';
    };
  });

  auto* c_egf = cayley->add_subcommand("egf", "Coefficient of xⁿ/n! in sec+tan (P) or x·tan/2 (C)");
  std::string series = "P";
  int n = 0;
  c_egf->add_option("--series", series, "P | C")->required()->check(CLI::IsMember({"P", "C"}));
  c_egf->add_option("--n", n, "Index n")->required()->check(CLI::Range(0, 2000));
  c_egf->callback([&] {
    action = [&] { out << egf_coefficient(series == "P" ? Series::P : Series::C, n) << '\n'; };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }
  ctx.use_cache = !no_cache;
  if (!action) return kParseError;
  try {
    action();
  } catch (const InfeasibleQuery& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Disagreement& e) {
    err << "disagreement: " << e.what() << '\n';
    return kDisagreement;
  } catch (const OnWallError& e) {
    err << "on wall: " << e.what() << '\n';
    return kOnWall;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace hurwitz::cli
