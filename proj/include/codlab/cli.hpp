// Copyright 2026 The codlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "codlab/catalog.hpp"
#include "codlab/report.hpp"
#include "codlab/search.hpp"

namespace codlab {

/// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

/// Search target name to family; nullopt for "sporadic" and "all".
inline std::optional<Family> search_family(const std::string& target) {
  static const std::map<std::string, Family> kTargets = {
      {"psl", Family::PSL},         {"psu", Family::PSU},
      {"psp", Family::PSp},         {"omega", Family::OmegaOdd},
      {"oplus", Family::OPlus},     {"ominus", Family::OMinus},
      {"e6", Family::E6},           {"e7", Family::E7},
      {"e8", Family::E8},           {"f4", Family::F4},
      {"g2", Family::G2},           {"2e6", Family::TwistedE6},
      {"3d4", Family::TriD4},       {"suzuki", Family::Suzuki},
      {"2b2", Family::Suzuki},      {"2f4", Family::TwistedF4},
      {"ree", Family::Ree},         {"2g2", Family::Ree}};
  auto it = kTargets.find(target);
  if (it != kTargets.end()) return it->second;
  if (target == "sporadic" || target == "all") return std::nullopt;
  throw UsageError("unknown search target '" + target + "'");
}

}  // namespace detail

/// Runs `codlab <args...>` (args exclude the program name) and returns the
/// exit code. Reports go to `out`; diagnostics and timings go to `err`.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"codlab: codegree sets of alternating groups and the exception search",
               "codlab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::optional<int> max_n;
  bool with_factored = false;
  bool timings = false;
  app.add_option("--format", format, "Output format: table, json or csv");
  app.add_option("--threads", threads, "Worker threads for searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", max_n,
                 "Largest n for cod/min-cod (default 40); n cap for search (default 200)");
  app.add_flag("--factored", with_factored, "Also print prime factorizations");
  app.add_flag("--timings", timings, "Print elapsed time to stderr");

  int cod_n = 0;
  auto* cod = app.add_subcommand("cod", "Codegree set of A_n");
  cod->add_option("n", cod_n, "Degree n")->required();

  int lo = 0, hi = 0;
  auto* min_cod = app.add_subcommand("min-cod", "Minimal non-trivial codegrees a_n");
  min_cod->add_option("lo", lo)->required();
  min_cod->add_option("hi", hi)->required();

  std::string target;
  auto* search = app.add_subcommand("search", "Exception search for a family, sporadic or all");
  search->add_option("target", target)->required();

  auto* schur = app.add_subcommand("schur", "Degree equations and the A9 / 2.A9 size check");

  std::string label;
  int subset_n = 0;
  auto* subset = app.add_subcommand("check-subset", "Is cod(H) contained in cod(A_n)?");
  subset->add_option("group", label, "Group label, e.g. L2(7), J2, U4(2)")->required();
  subset->add_option("n", subset_n)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    if (timings) {
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      err << "elapsed: " << ms << " ms\n";
    }
    return code;
  };

  try {
    const auto fmt = parse_output_format(format);
    if (!fmt) throw detail::UsageError("unknown format '" + format + "'");

    if (*cod) {
      const int limit = max_n.value_or(40);
      if (cod_n < 5 || cod_n > limit) {
        throw detail::UsageError("cod: n must lie in [5, " + std::to_string(limit) + "]");
      }
      out << render_codegree_set(alt_codegree_set(cod_n), *fmt, with_factored);
      return finish(kExitOk);
    }
    if (*min_cod) {
      const int limit = max_n.value_or(40);
      if (lo < 5 || lo >= hi || hi > limit) {
        throw detail::UsageError("min-cod: need 5 <= lo < hi <= " + std::to_string(limit));
      }
      const MonotoneCheck c = verify_min_codegree_monotone(lo, hi);
      out << render_min_cod(c, *fmt, with_factored);
      return finish(c.holds ? kExitOk : kExitVerification);
    }

    const Catalog catalog = Catalog::load_default();
    SearchOptions sopts;
    sopts.threads = threads;
    sopts.n_cap = max_n.value_or(200);

    if (*search) {
      const std::string t = detail::lower(target);
      const std::optional<Family> family = detail::search_family(t);
      if (t == "all") {
        VerificationOptions vopts;
        vopts.search = sopts;
        const MasterReport m = run_full_verification(catalog, vopts);
        out << render_master(m, *fmt);
        if (timings) {
          for (const SearchReport* r : m.all_searches()) {
            err << r->target << ": " << r->elapsed_ms << " ms\n";
          }
        }
        return finish(m.pass() ? kExitOk : kExitVerification);
      }
      const SearchReport r =
          family ? sweep_family(catalog, *family, sopts) : sweep_sporadic(catalog, sopts);
      out << render_search(r, *fmt);
      const std::vector<std::string> failures = search_failures(r);
      for (const std::string& f : failures) err << "failure: " << f << "\n";
      return finish(failures.empty() ? kExitOk : kExitVerification);
    }
    if (*schur) {
      const SchurSolutions s = schur_degree_equation_solutions(8, 64);
      const SchurSizeCheck c = schur_a9_size_check_detail(catalog);
      out << render_schur(s, c, *fmt);
      return finish(c.distinct && c.contained ? kExitOk : kExitVerification);
    }
    if (*subset) {
      if (subset_n < 5) throw detail::UsageError("check-subset: n must be >= 5");
      const GroupId h = GroupId::parse(label);
      if (h.family() == Family::Sporadic && !catalog.find(h.name())) {
        throw detail::UsageError("check-subset: unknown group '" + label + "'");
      }
      const SubsetCheck c = check_subset(catalog, h, subset_n);
      out << render_subset(h, subset_n, c, *fmt);
      return finish(c.verdict == Verdict::subset_holds ? kExitVerification : kExitOk);
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MissingDataError& e) {
    err << "error: missing data for " << e.label() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}

}  // namespace codlab
