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
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "codlab/alt_codegrees.hpp"
#include "codlab/catalog.hpp"
#include "codlab/exactnum.hpp"

// Exception search: for a simple group H to have cod(H) inside cod(A_n) we
// need |H| to divide |A_n| and |A_n| < |H| * k(H). This header sweeps every
// family through those two sieves and discharges the survivors.
namespace codlab {

struct SearchOptions {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  /// Safety cap on n; every scan must reach its natural cutoff first.
  int n_cap = 200;
};

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Results are
/// written by index, so the output does not depend on scheduling.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<Result> out(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
          next = count;
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace detail

/// Lower bound on n forced by the q-part of |g| dividing n!/2 (Legendre):
/// e * k * (p - 1). Sporadic groups impose none.
inline int legendre_n_min(const GroupId& g) {
  switch (g.family()) {
    case Family::Sporadic:
    case Family::Alternating: return 0;
    case Family::G2Prime2: return static_cast<int>(valuation(Natural(6048), 2));
    default: {
      const PrimePower& q = *g.q();
      return static_cast<int>(q_part_exponent(g) * q.k() * (q.p() - 1));
    }
  }
}

struct CandidateScan {
  std::vector<int> values;
  int start = 5;
  /// First n where n!/2 >= |g| * bound; every larger n fails as well.
  int cutoff = 0;
  bool reached_cap = false;
};

/// All n >= max(5, n_min) with |g| | n!/2 and n!/2 < |g| * k-bound.
inline CandidateScan scan_candidates(const Catalog& catalog, const GroupId& g,
                                     const FactorialTable& fact, int n_cap = 200) {
  const Natural order = group_order(catalog, g);
  const Rational bound = class_number_bound(catalog, g);
  CandidateScan scan;
  scan.start = std::max(5, legendre_n_min(g));
  for (int n = scan.start;; ++n) {
    const Natural half = exact_div(fact(static_cast<unsigned>(n)), Natural(2));
    if (!less_than_scaled(half, order, bound)) {
      scan.cutoff = n;
      break;
    }
    if (n > n_cap) {
      scan.reached_cap = true;
      scan.cutoff = n;
      break;
    }
    if (divides(order, half)) scan.values.push_back(n);
  }
  return scan;
}

inline std::vector<int> candidate_n_range(const Catalog& catalog, const GroupId& g,
                                          int n_cap = 200) {
  FactorialTable fact(static_cast<unsigned>(std::max(legendre_n_min(g), 5)) + 64);
  return scan_candidates(catalog, g, fact, n_cap).values;
}

/// Outcome of comparing cod(H) against cod(A_n).
enum class Verdict { isomorphic, subset_refuted, subset_holds, unresolved };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::isomorphic: return "isomorphic";
    case Verdict::subset_refuted: return "subset_refuted";
    case Verdict::subset_holds: return "subset_holds";
    case Verdict::unresolved: return "unresolved";
  }
  return "?";
}

struct SubsetCheck {
  Verdict verdict = Verdict::unresolved;
  /// Element of cod(H) missing from cod(A_n) when refuted.
  std::optional<Natural> witness;
};

/// isomorphic when orders and codegree sets coincide; otherwise refuted with
/// the smallest witness, or subset_holds (which would contradict the theorem).
inline SubsetCheck check_subset(const Catalog& catalog, const GroupId& h, int n) {
  const CodegreeSet cod_h = simple_codegree_set(catalog, h);
  const CodegreeSet cod_a = alt_codegree_set(n);
  SubsetCheck out;
  if (cod_h.order() == cod_a.order() && cod_h.same_values(cod_a)) {
    out.verdict = Verdict::isomorphic;
    return out;
  }
  out.witness = cod_h.first_missing_from(cod_a);
  out.verdict = out.witness ? Verdict::subset_refuted : Verdict::subset_holds;
  return out;
}

/// A (group, n) pair that survives both sieves.
struct ExceptionRow {
  GroupId group;
  int m = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  int n = 0;
  Natural ratio;
  Rational class_bound;
  Verdict verdict = Verdict::unresolved;
  std::optional<Natural> witness;
};

/// Parameter box (m, p, k). Families without a rank leave m_max empty with
/// has_rank false; Suzuki/Ree/2F4 store a in m_max (q = p^(2a+1)).
struct FamilyBounds {
  bool has_rank = false;
  std::optional<int> m_max;
  std::optional<std::uint64_t> p_max;
  std::optional<unsigned> k_max;

  bool empty() const {
    return (has_rank && !m_max) || !p_max || !k_max;
  }
};

struct SweepPlan {
  Family family;
  int m_min = 0;
  std::uint64_t base_p = 2;
  FamilyBounds bounds;
};

struct SearchReport {
  std::string target;
  std::optional<Family> family;
  FamilyBounds bounds;
  std::optional<BoundTriple> published;
  std::size_t points_evaluated = 0;
  /// Labels of swept groups satisfying the inequality at n_min.
  std::vector<std::string> feasible_groups;
  bool box_closed = true;
  bool cutoff_before_cap = true;
  std::vector<ExceptionRow> rows;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
};

namespace detail {

/// Swept group for a parameter point, or nullopt when not simple. G2 at
/// q = 2 is replaced by its derived subgroup.
inline std::optional<GroupId> sweep_group(Family f, int m, std::uint64_t p, unsigned k) {
  if (!is_prime(p) || k < 1) return std::nullopt;
  const PrimePower q(p, k);
  if (f == Family::G2 && p == 2 && k == 1) return GroupId::g2_prime_2();
  if (!GroupId::lie_parameters_valid(f, m, q)) return std::nullopt;
  return GroupId::lie(f, m, q);
}

/// |A_max(5,n_min)| < |g| * bound, the necessary condition on parameters.
inline bool n_min_inequality(const Catalog& catalog, const GroupId& g,
                             const FactorialTable& fact) {
  const unsigned n = static_cast<unsigned>(std::max(5, legendre_n_min(g)));
  return less_than_scaled(exact_div(fact(n), Natural(2)), group_order(catalog, g),
                          class_number_bound(catalog, g));
}

/// Scans one axis upward from its smallest legal value; returns the last
/// value where the inequality holds. Points with n_min < 5 are compared
/// against |A_5| and never end the scan.
template <typename Value, typename Next, typename PointAt>
std::optional<Value> scan_axis(Value start, Next next, PointAt point_at,
                               const Catalog& catalog, const FactorialTable& fact,
                               int max_steps) {
  std::optional<Value> last;
  Value x = start;
  for (int step = 0; step < max_steps; ++step, x = next(x)) {
    std::optional<GroupId> g = point_at(x);
    if (!g) continue;
    if (n_min_inequality(catalog, *g, fact)) {
      last = x;
    } else if (legendre_n_min(*g) >= 5) {
      return last;
    }
  }
  throw std::runtime_error("derive_family_bounds: no cutoff within scan limit");
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace detail

inline SweepPlan family_sweep_plan(Family f) {
  if (!is_lie(f) || f == Family::G2Prime2) {
    throw std::invalid_argument("family_sweep_plan: not a sweepable Lie family");
  }
  SweepPlan plan{f, 0, 2, {}};
  plan.m_min = min_rank(f);
  plan.bounds.has_rank = is_classical(f) || is_odd_power_family(f);
  if (f == Family::OmegaOdd) plan.base_p = 3;
  if (is_odd_power_family(f)) {
    plan.m_min = 1;
    plan.base_p = fixed_characteristic(f);
  }
  return plan;
}

/// Derives (m_max, p_max, k_max), varying one parameter at a time with the
/// others at their smallest legal values.
inline FamilyBounds derive_family_bounds(const Catalog& catalog, Family f) {
  const SweepPlan plan = family_sweep_plan(f);
  FactorialTable fact(512);
  FamilyBounds b;
  b.has_rank = plan.bounds.has_rank;
  constexpr int kMaxSteps = 400;
  auto inc = [](auto v) { return v + 1; };

  if (is_odd_power_family(f)) {
    const std::uint64_t p = plan.base_p;
    b.m_max = detail::scan_axis<int>(
        1, inc, [&](int a) { return detail::sweep_group(f, 0, p, 2 * a + 1); },
        catalog, fact, kMaxSteps);
    if (b.m_max) {
      b.p_max = p;
      b.k_max = static_cast<unsigned>(2 * *b.m_max + 1);
    }
    return b;
  }

  const int m0 = plan.m_min;
  const std::uint64_t p0 = plan.base_p;
  if (is_classical(f)) {
    b.m_max = detail::scan_axis<int>(
        m0, inc, [&](int m) { return detail::sweep_group(f, m, p0, 1); }, catalog,
        fact, kMaxSteps);
  }
  b.p_max = detail::scan_axis<std::uint64_t>(
      2, [](std::uint64_t p) { return next_prime(p); },
      [&](std::uint64_t p) { return detail::sweep_group(f, m0, p, 1); }, catalog,
      fact, kMaxSteps);
  b.k_max = detail::scan_axis<unsigned>(
      1u, inc, [&](unsigned k) { return detail::sweep_group(f, m0, p0, k); },
      catalog, fact, kMaxSteps);
  return b;
}

namespace detail {

struct Point {
  int m;
  std::uint64_t p;
  unsigned k;
};

/// Legal points of the box [m_min, m_hi] x primes <= p_hi x [1, k_hi].
inline std::vector<Point> box_points(Family f, int m_min, int m_hi,
                                     std::uint64_t p_hi, unsigned k_hi) {
  std::vector<Point> out;
  if (is_odd_power_family(f)) {
    for (int a = 1; a <= m_hi; ++a) {
      out.push_back({a, fixed_characteristic(f), static_cast<unsigned>(2 * a + 1)});
    }
    return out;
  }
  for (int m = m_min; m <= m_hi; ++m) {
    for (std::uint64_t p : primes_up_to(p_hi)) {
      for (unsigned k = 1; k <= k_hi; ++k) {
        if (sweep_group(f, m, p, k)) out.push_back({m, p, k});
      }
    }
  }
  return out;
}

inline std::optional<GroupId> point_group(Family f, const Point& pt) {
  return sweep_group(f, is_odd_power_family(f) ? 0 : pt.m, pt.p, pt.k);
}

}  // namespace detail

/// Builds the row for (g, n), with its subset verdict. Missing degree data
/// leaves the row unresolved.
inline ExceptionRow make_row(const Catalog& catalog, const GroupId& g, int m,
                             std::uint64_t p, unsigned k, int n) {
  ExceptionRow row{g, 0, 0, 0, 0, {}, {}, Verdict::unresolved, std::nullopt};
  row.m = m;
  row.p = p;
  row.k = k;
  row.n = n;
  const Natural order = group_order(catalog, g);
  row.ratio = exact_div(alternating_order(n), order);
  row.class_bound = class_number_bound(catalog, g);
  try {
    SubsetCheck c = check_subset(catalog, g, n);
    row.verdict = c.verdict;
    row.witness = c.witness;
  } catch (const MissingDataError&) {
    row.verdict = Verdict::unresolved;
  }
  return row;
}

/// True iff the row satisfies both sieves exactly.
inline bool row_passes_sieves(const Catalog& catalog, const ExceptionRow& row) {
  const Natural order = group_order(catalog, row.group);
  const Natural alt = alternating_order(row.n);
  return divides(order, alt) &&
         less_than_scaled(alt, order, class_number_bound(catalog, row.group));
}

inline std::string bound_polynomial_text(Family f) {
  const ClassNumberBound b = lie_class_number_bound(f, 1);
  if (is_classical(f)) return b.condition;
  std::string out;
  const std::size_t deg = b.coefficients.size() - 1;
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) {
    const Rational& c = b.coefficients[i];
    if (c == Rational()) continue;
    const std::size_t e = deg - i;
    if (!out.empty()) out += "+";
    const bool unit = c == Rational(Natural(1));
    if (!unit || e == 0) out += c.str();
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return "k <= " + out;
}

inline SearchReport sweep_family(const Catalog& catalog, Family f,
                                 const SearchOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const SweepPlan plan = family_sweep_plan(f);
  SearchReport rep;
  rep.target = std::string(family_name(f));
  rep.family = f;
  rep.bounds = derive_family_bounds(catalog, f);
  rep.published = catalog.published_bounds(f);
  const FamilyBounds& b = rep.bounds;

  std::vector<detail::Point> box;
  if (!b.empty()) {
    box = detail::box_points(f, plan.m_min, b.has_rank ? *b.m_max : plan.m_min,
                             *b.p_max, *b.k_max);
  }

  // One step past the box along every axis; none of these may satisfy the
  // inequality, otherwise the box does not enclose the feasible set.
  const int m_hi = b.has_rank ? (b.m_max ? *b.m_max + 1 : plan.m_min + 1) : plan.m_min;
  const std::uint64_t p_hi = next_prime(b.p_max.value_or(plan.base_p));
  const unsigned k_hi = b.k_max ? *b.k_max + 1 : 2;
  std::vector<detail::Point> shell;
  for (const detail::Point& pt : detail::box_points(f, plan.m_min, m_hi, p_hi, k_hi)) {
    const bool inside =
        !b.empty() && (!b.has_rank || pt.m <= *b.m_max) && pt.p <= *b.p_max &&
        (is_odd_power_family(f) || pt.k <= *b.k_max);
    if (!inside) shell.push_back(pt);
  }

  unsigned max_n = 64;
  for (const auto* pts : {&box, &shell}) {
    for (const detail::Point& pt : *pts) {
      if (auto g = detail::point_group(f, pt)) {
        max_n = std::max(max_n, static_cast<unsigned>(legendre_n_min(*g)) + 64);
      }
    }
  }
  const FactorialTable fact(max_n);

  struct PointResult {
    bool feasible = false;
    std::string label;
    CandidateScan scan;
    std::vector<ExceptionRow> rows;
  };
  auto results = detail::parallel_map<PointResult>(
      box.size(), opts.threads, [&](std::size_t i) {
        const detail::Point& pt = box[i];
        PointResult r;
        const GroupId g = *detail::point_group(f, pt);
        r.label = g.label();
        r.feasible = detail::n_min_inequality(catalog, g, fact);
        r.scan = scan_candidates(catalog, g, fact, opts.n_cap);
        const int m = is_odd_power_family(f) ? 0 : pt.m;
        for (int n : r.scan.values) r.rows.push_back(make_row(catalog, g, m, pt.p, pt.k, n));
        return r;
      });
  auto shell_ok = detail::parallel_map<char>(shell.size(), opts.threads, [&](std::size_t i) {
    const GroupId g = *detail::point_group(f, shell[i]);
    return static_cast<char>(!detail::n_min_inequality(catalog, g, fact));
  });

  rep.points_evaluated = box.size();
  for (auto& r : results) {
    if (r.feasible) rep.feasible_groups.push_back(r.label);
    if (r.scan.reached_cap) rep.cutoff_before_cap = false;
    for (auto& row : r.rows) rep.rows.push_back(std::move(row));
  }
  rep.box_closed = std::all_of(shell_ok.begin(), shell_ok.end(), [](char c) { return c != 0; });
  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const ExceptionRow& a, const ExceptionRow& b) {
    return std::tie(a.m, a.p, a.k, a.n) < std::tie(b.m, b.p, b.k, b.n);
  });
  for (const ExceptionRow& row : rep.rows) {
    if (!row_passes_sieves(catalog, row)) {
      throw std::logic_error("sweep_family: row " + row.group.label() + " fails a sieve");
    }
  }

  rep.notes.push_back("class-number bound: " + bound_polynomial_text(f));
  if (b.empty()) {
    rep.notes.push_back("n_min inequality already fails at the smallest legal parameters");
  }
  if (is_odd_power_family(f) && b.m_max) {
    rep.notes.push_back("inequality holds for a <= " + std::to_string(*b.m_max) +
                        " and fails at a = " + std::to_string(*b.m_max + 1) +
                        " (q = " + std::to_string(b.p_max.value()) + "^(2a+1))");
  }
  if (f == Family::G2) {
    rep.notes.push_back("G2(2) is not simple; q = 2 is swept as G2(2)' of order 6048");
  }
  if (!rep.feasible_groups.empty() && rep.feasible_groups.size() <= 8) {
    std::string s;
    for (const auto& l : rep.feasible_groups) s += (s.empty() ? "" : ", ") + l;
    rep.notes.push_back("groups satisfying the n_min inequality: " + s);
  }
  if (rep.rows.empty()) rep.notes.push_back("no exceptions after checking divisibility");
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline SearchReport sweep_sporadic(const Catalog& catalog, const SearchOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.target = "Sporadic";
  const auto groups = catalog.sporadic_groups();
  const FactorialTable fact(static_cast<unsigned>(opts.n_cap) + 2);
  auto results = detail::parallel_map<std::pair<CandidateScan, std::vector<ExceptionRow>>>(
      groups.size(), opts.threads, [&](std::size_t i) {
        const GroupId g = GroupId::sporadic(groups[i]->label);
        std::pair<CandidateScan, std::vector<ExceptionRow>> r;
        r.first = scan_candidates(catalog, g, fact, opts.n_cap);
        for (int n : r.first.values) r.second.push_back(make_row(catalog, g, 0, 0, 0, n));
        return r;
      });
  rep.points_evaluated = groups.size();
  for (auto& [scan, rows] : results) {
    if (scan.reached_cap) rep.cutoff_before_cap = false;
    for (auto& row : rows) {
      if (!row_passes_sieves(catalog, row)) {
        throw std::logic_error("sweep_sporadic: row fails a sieve");
      }
      rep.rows.push_back(std::move(row));
    }
  }
  rep.notes.push_back("swept " + std::to_string(groups.size()) +
                      " groups (26 sporadic groups and the Tits group) with exact class numbers");
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  return rep;
}

struct SchurSolutions {
  int n_lo = 0;
  int n_hi = 0;
  std::vector<int> solutions;
  /// Smallest n from which 2^(floor(n/2)-2) > n-1 holds through n_hi, so
  /// neither equation can be solved there.
  std::optional<int> dominated_from;
};

/// n with n-1 == 2^(floor((n-2)/2)-1) or n-1 == 2^(floor(n/2)-1).
inline SchurSolutions schur_degree_equation_solutions(int n_lo, int n_hi) {
  if (n_lo < 8 || n_hi <= n_lo) {
    throw std::invalid_argument("schur_degree_equation_solutions: need 8 <= lo < hi");
  }
  SchurSolutions out{n_lo, n_hi, {}, std::nullopt};
  for (int n = n_lo; n <= n_hi; ++n) {
    const Natural lhs(static_cast<std::uint64_t>(n - 1));
    const Natural small = pow(Natural(2), static_cast<unsigned>((n - 2) / 2 - 1));
    const Natural large = pow(Natural(2), static_cast<unsigned>(n / 2 - 1));
    if (lhs == small || lhs == large) out.solutions.push_back(n);
    if (small > lhs) {
      if (!out.dominated_from) out.dominated_from = n;
    } else {
      out.dominated_from.reset();
    }
  }
  return out;
}

struct SchurSizeCheck {
  std::size_t cod_a9 = 0;
  std::size_t cod_2a9 = 0;
  /// |cod(A9)| recomputed from the A9 degree record.
  std::size_t cod_a9_from_data = 0;
  bool distinct = false;
  bool contained = false;
  bool a9_routes_agree = false;
};

inline SchurSizeCheck schur_a9_size_check_detail(const Catalog& catalog) {
  SchurSizeCheck out;
  const CodegreeSet a9 = alt_codegree_set(9);
  const CodegreeSet cover = twisted_codegree_set_2A9(catalog);
  const CodegreeSet a9_data = record_codegree_set(catalog.require("A9"));
  out.cod_a9 = a9.size();
  out.cod_2a9 = cover.size();
  out.cod_a9_from_data = a9_data.size();
  out.distinct = a9.size() != cover.size();
  out.contained = a9.is_subset_of(cover);
  out.a9_routes_agree = a9.same_values(a9_data);
  return out;
}

inline bool schur_a9_size_check(const Catalog& catalog) {
  return schur_a9_size_check_detail(catalog).distinct;
}

/// Column order shared by CSV output and the golden row files.
inline constexpr std::string_view kRowCsvHeader =
    "family,group,m,p,k,q,n,ratio,class_bound,verdict,witness";

inline std::string row_csv_line(const ExceptionRow& row) {
  const GroupId& g = row.group;
  const bool sporadic = g.family() == Family::Sporadic;
  std::string family(sporadic ? "Sporadic" : family_name(g.family()));
  if (g.family() == Family::G2Prime2) family = "G2";
  std::string out = family + "," + g.label() + ",";
  if (sporadic || g.family() == Family::G2Prime2) {
    out += ",,,,";
  } else {
    const PrimePower& q = *g.q();
    out += std::to_string(row.m) + "," + std::to_string(q.p()) + "," +
           std::to_string(q.k()) + "," + q.value().str() + ",";
  }
  out += std::to_string(row.n) + "," + row.ratio.str() + "," + row.class_bound.str() +
         "," + std::string(verdict_name(row.verdict)) + "," +
         (row.witness ? row.witness->str() : std::string());
  return out;
}

inline std::string rows_csv(const std::vector<ExceptionRow>& rows) {
  std::string out(kRowCsvHeader);
  out += "\n";
  for (const ExceptionRow& r : rows) out += row_csv_line(r) + "\n";
  return out;
}

/// Golden file name for a family whose sweep has expected rows, or empty.
inline std::string_view golden_name(const SearchReport& r) {
  if (!r.family) return "sporadic";
  switch (*r.family) {
    case Family::PSL: return "psl";
    case Family::OmegaOdd: return "omega";
    case Family::PSU: return "psu";
    default: return {};
  }
}

/// Reasons a single sweep does not discharge its family: open survivors, an
/// unclosed box, a cap hit, or rows that differ from the expected ones.
inline std::vector<std::string> search_failures(const SearchReport& r) {
  std::vector<std::string> out;
  for (const ExceptionRow& row : r.rows) {
    if (row.verdict == Verdict::unresolved || row.verdict == Verdict::subset_holds) {
      out.push_back(std::string(verdict_name(row.verdict)) + " survivor " +
                    row.group.label() + " at n = " + std::to_string(row.n));
    }
  }
  if (!r.box_closed) out.push_back(r.target + ": parameter box not closed");
  if (!r.cutoff_before_cap) out.push_back(r.target + ": n cap reached before cutoff");
  const std::string_view name = golden_name(r);
  if (name.empty()) {
    if (!r.rows.empty()) out.push_back(r.target + ": unexpected exception rows");
    return out;
  }
  const std::string_view expected = embedded::golden_csv(name);
  if (expected.empty()) {
    out.push_back("golden file " + std::string(name) + ".csv missing");
  } else if (rows_csv(r.rows) != expected) {
    out.push_back(r.target + ": rows differ from golden " + std::string(name) + ".csv");
  }
  return out;
}

struct MasterReport {
  int monotone_lo = 5;
  int monotone_hi = 30;
  MonotoneCheck monotone;
  SearchReport sporadic;
  std::vector<SearchReport> families;
  SchurSolutions schur;
  SchurSizeCheck schur_sizes;
  /// Every reason the run does not pass; empty means PASS.
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool pass() const { return failures.empty(); }

  std::vector<const SearchReport*> all_searches() const {
    std::vector<const SearchReport*> out{&sporadic};
    for (const SearchReport& r : families) out.push_back(&r);
    return out;
  }
};

struct VerificationOptions {
  SearchOptions search;
  int monotone_hi = 30;
};

/// Runs every check and compares the surviving rows with the golden files.
inline MasterReport run_full_verification(const Catalog& catalog,
                                          const VerificationOptions& opts = {}) {
  MasterReport rep;
  rep.monotone_hi = opts.monotone_hi;
  rep.monotone = verify_min_codegree_monotone(rep.monotone_lo, rep.monotone_hi);
  if (!rep.monotone.holds) {
    rep.failures.push_back("minimal codegree not increasing at n = " +
                           std::to_string(rep.monotone.first_violation.value_or(0)));
  }

  rep.sporadic = sweep_sporadic(catalog, opts.search);
  for (Family f : kClassicalFamilies) rep.families.push_back(sweep_family(catalog, f, opts.search));
  for (Family f : kExceptionalFamilies) rep.families.push_back(sweep_family(catalog, f, opts.search));

  for (const SearchReport* r : rep.all_searches()) {
    for (std::string& f : search_failures(*r)) rep.failures.push_back(std::move(f));
  }

  rep.schur = schur_degree_equation_solutions(8, 64);
  if (rep.schur.solutions != std::vector<int>{9}) {
    rep.failures.push_back("Schur degree equations: solutions other than {9}");
  }
  rep.schur_sizes = schur_a9_size_check_detail(catalog);
  if (!rep.schur_sizes.distinct || !rep.schur_sizes.contained ||
      !rep.schur_sizes.a9_routes_agree) {
    rep.failures.push_back("A9 / 2.A9 codegree size check failed");
  }

  rep.notes.push_back("E7 bound uses q^7+q^6+2q^5+... and 3D4 uses q^4+q^3+q^2+q+6");
  return rep;
}

}  // namespace codlab
