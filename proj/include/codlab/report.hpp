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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "codlab/alt_codegrees.hpp"
#include "codlab/search.hpp"

// Text, JSON and CSV renderings. Big integers are always emitted as decimal
// strings; counts are plain JSON integers. Nothing here depends on timing,
// so output is identical for any thread count.
namespace codlab {

enum class OutputFormat { table, json, csv };

inline std::optional<OutputFormat> parse_output_format(std::string_view s) {
  if (s == "table") return OutputFormat::table;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return std::nullopt;
}

using Json = nlohmann::ordered_json;

namespace detail {

/// Left-aligned columns separated by two spaces.
inline std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json opt_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace detail

inline std::string render_codegree_set(const CodegreeSet& s, OutputFormat fmt,
                                       bool with_factored = false) {
  switch (fmt) {
    case OutputFormat::json: {
      Json j;
      j["group"] = s.label();
      j["order"] = s.order().str();
      j["size"] = s.size();
      Json values = Json::array();
      for (const Natural& v : s.values()) values.push_back(v.str());
      j["codegrees"] = values;
      if (with_factored) {
        Json f = Json::array();
        for (const Natural& v : s.values()) f.push_back(factored(v));
        j["factored"] = f;
      }
      return detail::dump(j);
    }
    case OutputFormat::csv: {
      std::string out = with_factored ? "codegree,factored\n" : "codegree\n";
      for (const Natural& v : s.values()) {
        out += v.str() + (with_factored ? "," + factored(v) : "") + "\n";
      }
      return out;
    }
    case OutputFormat::table: break;
  }
  std::string out = "cod(" + s.label() + ")  |" + s.label() + "| = " + s.order().str();
  if (with_factored) out += " = " + factored(s.order());
  out += "  (" + std::to_string(s.size()) + " values)\n";
  std::vector<std::vector<std::string>> rows;
  for (const Natural& v : s.values()) {
    rows.push_back(with_factored ? std::vector<std::string>{v.str(), factored(v)}
                                 : std::vector<std::string>{v.str()});
  }
  return out + detail::aligned(rows);
}

inline std::string render_min_cod(const MonotoneCheck& c, OutputFormat fmt,
                                  bool with_factored = false) {
  const char* verdict = c.holds ? "PASS" : "FAIL";
  switch (fmt) {
    case OutputFormat::json: {
      Json j;
      Json rows = Json::array();
      for (const auto& [n, a] : c.witness) {
        Json r;
        r["n"] = n;
        r["a_n"] = a.str();
        if (with_factored) r["factored"] = factored(a);
        rows.push_back(r);
      }
      j["rows"] = rows;
      j["increasing"] = c.holds;
      j["first_violation"] = detail::opt_int(c.first_violation);
      j["verdict"] = verdict;
      return detail::dump(j);
    }
    case OutputFormat::csv: {
      std::string out = with_factored ? "n,a_n,factored\n" : "n,a_n\n";
      for (const auto& [n, a] : c.witness) {
        out += std::to_string(n) + "," + a.str() + (with_factored ? "," + factored(a) : "") + "\n";
      }
      return out;
    }
    case OutputFormat::table: break;
  }
  std::vector<std::vector<std::string>> rows{{"n", "a_n"}};
  if (with_factored) rows[0].push_back("factored");
  for (const auto& [n, a] : c.witness) {
    rows.push_back({std::to_string(n), a.str()});
    if (with_factored) rows.back().push_back(factored(a));
  }
  std::string out = detail::aligned(rows);
  out += std::string("a_{n-1} < a_n: ") + verdict;
  if (c.first_violation) out += " (first violation at n = " + std::to_string(*c.first_violation) + ")";
  return out + "\n";
}

inline Json row_json(const ExceptionRow& row) {
  Json j;
  j["group"] = row.group.label();
  const bool has_q = row.group.q().has_value() && row.group.family() != Family::G2Prime2;
  j["m"] = has_q ? Json(row.m) : Json(nullptr);
  j["p"] = has_q ? Json(row.group.q()->p()) : Json(nullptr);
  j["k"] = has_q ? Json(row.group.q()->k()) : Json(nullptr);
  j["q"] = has_q ? Json(row.group.q()->value().str()) : Json(nullptr);
  j["n"] = row.n;
  j["ratio"] = row.ratio.str();
  j["class_bound"] = row.class_bound.str();
  j["verdict"] = verdict_name(row.verdict);
  j["witness"] = row.witness ? Json(row.witness->str()) : Json(nullptr);
  return j;
}

inline Json search_json(const SearchReport& r) {
  Json j;
  j["target"] = r.target;
  if (r.family) {
    Json b;
    b["m_max"] = r.bounds.has_rank ? detail::opt_int(r.bounds.m_max) : Json(nullptr);
    b["p_max"] = r.bounds.p_max ? Json(*r.bounds.p_max) : Json(nullptr);
    b["k_max"] = r.bounds.k_max ? Json(*r.bounds.k_max) : Json(nullptr);
    j["bounds"] = b;
    j["published_bounds"] =
        r.published ? Json::array({(*r.published)[0], (*r.published)[1], (*r.published)[2]})
                    : Json(nullptr);
    j["box_closed"] = r.box_closed;
    j["feasible_groups"] = r.feasible_groups;
  }
  j["points_evaluated"] = r.points_evaluated;
  j["cutoff_before_cap"] = r.cutoff_before_cap;
  Json rows = Json::array();
  for (const ExceptionRow& row : r.rows) rows.push_back(row_json(row));
  j["rows"] = rows;
  j["notes"] = r.notes;
  return j;
}

inline std::string bounds_text(const SearchReport& r) {
  if (!r.family) return "";
  const FamilyBounds& b = r.bounds;
  if (b.empty()) return "empty (no legal parameters satisfy the inequality)";
  std::string out;
  if (is_odd_power_family(*r.family)) {
    out = "a<=" + std::to_string(*b.m_max) + " p=" + std::to_string(*b.p_max) +
          " k<=" + std::to_string(*b.k_max);
  } else {
    if (b.has_rank) out = "m<=" + std::to_string(*b.m_max) + " ";
    out += "p<=" + std::to_string(*b.p_max) + " k<=" + std::to_string(*b.k_max);
  }
  if (r.published) {
    const BoundTriple& t = *r.published;
    out += "  (published m<=" + std::to_string(t[0]) + " p<=" + std::to_string(t[1]) +
           " k<=" + std::to_string(t[2]) + ")";
  }
  return out;
}

inline std::string search_table(const SearchReport& r) {
  std::string out = "== " + r.target + "\n";
  if (r.family) {
    out += "bounds: " + bounds_text(r) + "\n";
    out += std::string("box closed: ") + (r.box_closed ? "yes" : "NO") + "\n";
  }
  out += "points evaluated: " + std::to_string(r.points_evaluated) + "\n";
  for (const std::string& n : r.notes) out += "note: " + n + "\n";
  if (r.rows.empty()) return out + "rows: none\n";
  std::vector<std::vector<std::string>> rows{
      {"group", "m", "q", "n", "|A_n|/|H|", "k-bound", "verdict", "witness"}};
  for (const ExceptionRow& row : r.rows) {
    const bool has_q = row.group.q().has_value() && row.group.family() != Family::G2Prime2;
    rows.push_back({row.group.label(), has_q ? std::to_string(row.m) : "-",
                    has_q ? row.group.q()->value().str() : "-", std::to_string(row.n),
                    row.ratio.str(), row.class_bound.str(),
                    std::string(verdict_name(row.verdict)),
                    row.witness ? row.witness->str() : "-"});
  }
  return out + detail::aligned(rows);
}

inline std::string render_search(const SearchReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: return detail::dump(search_json(r));
    case OutputFormat::csv: return rows_csv(r.rows);
    case OutputFormat::table: return search_table(r);
  }
  return {};
}

inline Json schur_json(const SchurSolutions& s, const SchurSizeCheck& c) {
  Json j;
  j["range"] = Json::array({s.n_lo, s.n_hi});
  j["solutions"] = s.solutions;
  j["dominated_from"] = detail::opt_int(s.dominated_from);
  j["cod_A9_size"] = c.cod_a9;
  j["cod_2A9_size"] = c.cod_2a9;
  j["cod_A9_size_from_degrees"] = c.cod_a9_from_data;
  j["distinct_sizes"] = c.distinct;
  j["A9_contained"] = c.contained;
  return j;
}

inline std::string render_schur(const SchurSolutions& s, const SchurSizeCheck& c,
                                OutputFormat fmt) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  switch (fmt) {
    case OutputFormat::json: return detail::dump(schur_json(s, c));
    case OutputFormat::csv: {
      std::string sol;
      for (int n : s.solutions) sol += (sol.empty() ? "" : " ") + std::to_string(n);
      return "n_lo,n_hi,solutions,cod_A9_size,cod_2A9_size,distinct_sizes,A9_contained\n" +
             std::to_string(s.n_lo) + "," + std::to_string(s.n_hi) + "," + sol + "," +
             std::to_string(c.cod_a9) + "," + std::to_string(c.cod_2a9) + "," +
             b(c.distinct) + "," + b(c.contained) + "\n";
    }
    case OutputFormat::table: break;
  }
  std::string out = "n-1 = 2^(floor((n-2)/2)-1) or 2^(floor(n/2)-1) on [" +
                    std::to_string(s.n_lo) + ", " + std::to_string(s.n_hi) + "]\n";
  std::string sol;
  for (int n : s.solutions) sol += (sol.empty() ? "" : ", ") + std::to_string(n);
  out += "solutions: [" + sol + "]\n";
  if (s.dominated_from) {
    out += "note: 2^(floor(n/2)-2) > n-1 for every n in [" + std::to_string(*s.dominated_from) +
           ", " + std::to_string(s.n_hi) + "]\n";
  }
  out += "|cod(A9)| = " + std::to_string(c.cod_a9) + " (from degrees: " +
         std::to_string(c.cod_a9_from_data) + ")\n";
  out += "|cod(2.A9)| = " + std::to_string(c.cod_2a9) + "\n";
  out += std::string("distinct sizes: ") + b(c.distinct) + "\n";
  out += std::string("cod(A9) contained in cod(2.A9): ") + b(c.contained) + "\n";
  return out;
}

inline std::string render_subset(const GroupId& h, int n, const SubsetCheck& c,
                                 OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      Json j;
      j["group"] = h.label();
      j["n"] = n;
      j["verdict"] = verdict_name(c.verdict);
      j["witness"] = c.witness ? Json(c.witness->str()) : Json(nullptr);
      return detail::dump(j);
    }
    case OutputFormat::csv:
      return "group,n,verdict,witness\n" + h.label() + "," + std::to_string(n) + "," +
             std::string(verdict_name(c.verdict)) + "," + (c.witness ? c.witness->str() : "") +
             "\n";
    case OutputFormat::table: break;
  }
  std::string out = "cod(" + h.label() + ") vs cod(A" + std::to_string(n) + "): " +
                    std::string(verdict_name(c.verdict)) + "\n";
  if (c.witness) out += "witness: " + c.witness->str() + " = " + factored(*c.witness) + "\n";
  return out;
}

inline std::string render_master(const MasterReport& m, OutputFormat fmt) {
  const std::vector<const SearchReport*> all = m.all_searches();
  switch (fmt) {
    case OutputFormat::json: {
      Json j;
      Json mono;
      mono["range"] = Json::array({m.monotone_lo, m.monotone_hi});
      mono["increasing"] = m.monotone.holds;
      Json mrows = Json::array();
      for (const auto& [n, a] : m.monotone.witness) mrows.push_back(Json::array({n, a.str()}));
      mono["a_n"] = mrows;
      j["monotonicity"] = mono;
      Json sweeps = Json::array();
      for (const SearchReport* r : all) sweeps.push_back(search_json(*r));
      j["searches"] = sweeps;
      j["schur"] = schur_json(m.schur, m.schur_sizes);
      j["failures"] = m.failures;
      j["notes"] = m.notes;
      j["verdict"] = m.pass() ? "PASS" : "FAIL";
      return detail::dump(j);
    }
    case OutputFormat::csv: {
      std::vector<ExceptionRow> rows;
      for (const SearchReport* r : all) rows.insert(rows.end(), r->rows.begin(), r->rows.end());
      return rows_csv(rows);
    }
    case OutputFormat::table: break;
  }
  std::string out = "a_{n-1} < a_n for " + std::to_string(m.monotone_lo) + " <= n <= " +
                    std::to_string(m.monotone_hi) + ": " +
                    (m.monotone.holds ? "PASS" : "FAIL") + "\n\n";
  for (const SearchReport* r : all) out += search_table(*r) + "\n";
  out += render_schur(m.schur, m.schur_sizes, OutputFormat::table) + "\n";
  for (const std::string& n : m.notes) out += "note: " + n + "\n";
  for (const std::string& f : m.failures) out += "failure: " + f + "\n";
  out += std::string("summary: ") + (m.pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace codlab
