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

#include <array>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "codlab/alt_codegrees.hpp"
#include "codlab/embedded_data.hpp"
#include "codlab/exactnum.hpp"

namespace codlab {

enum class Family {
  Alternating,
  Sporadic,
  PSL,
  PSU,
  PSp,
  OmegaOdd,
  OPlus,
  OMinus,
  E6,
  E7,
  E8,
  F4,
  G2,
  TwistedE6,
  TriD4,
  Suzuki,
  TwistedF4,
  Ree,
  G2Prime2,
};

inline constexpr std::array<Family, 6> kClassicalFamilies = {
    Family::PSL, Family::OmegaOdd, Family::PSp,
    Family::OPlus, Family::PSU, Family::OMinus};

inline constexpr std::array<Family, 10> kExceptionalFamilies = {
    Family::E6,        Family::E7,    Family::E8,     Family::F4,
    Family::G2,        Family::TwistedE6, Family::TriD4, Family::Suzuki,
    Family::TwistedF4, Family::Ree};

inline bool is_classical(Family f) {
  return f == Family::PSL || f == Family::PSU || f == Family::PSp ||
         f == Family::OmegaOdd || f == Family::OPlus || f == Family::OMinus;
}

/// Families whose q is forced to p^(2a+1) with a fixed p.
inline bool is_odd_power_family(Family f) {
  return f == Family::Suzuki || f == Family::Ree || f == Family::TwistedF4;
}

inline bool is_lie(Family f) {
  return f != Family::Alternating && f != Family::Sporadic;
}

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Alternating: return "Alternating";
    case Family::Sporadic: return "Sporadic";
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::PSp: return "PSp";
    case Family::OmegaOdd: return "OmegaOdd";
    case Family::OPlus: return "OPlus";
    case Family::OMinus: return "OMinus";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::TwistedE6: return "TwistedE6";
    case Family::TriD4: return "TriD4";
    case Family::Suzuki: return "Suzuki";
    case Family::TwistedF4: return "TwistedF4";
    case Family::Ree: return "Ree";
    case Family::G2Prime2: return "G2Prime2";
  }
  return "?";
}

/// Smallest rank parameter m for the classical families.
inline int min_rank(Family f) {
  switch (f) {
    case Family::PSL: return 1;
    case Family::PSU: return 2;
    case Family::OmegaOdd: return 2;
    case Family::PSp: return 3;
    case Family::OPlus:
    case Family::OMinus: return 4;
    default: return 0;
  }
}

/// Fixed characteristic of the Suzuki/Ree/2F4 families.
inline std::uint64_t fixed_characteristic(Family f) {
  return f == Family::Ree ? 3 : 2;
}

/// Thrown when a group's embedded data is required but absent.
class MissingDataError : public std::runtime_error {
 public:
  explicit MissingDataError(std::string label)
      : std::runtime_error("missing catalog data for group " + label),
        label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

/// Identifier of a finite simple group. Parameters that do not give a simple
/// group are rejected at construction; G2(2) is represented by G2Prime2.
class GroupId {
 public:
  static GroupId alternating(int n) {
    if (n < 5) throw std::invalid_argument("A_n requires n >= 5");
    GroupId g(Family::Alternating);
    g.n_ = n;
    return g;
  }

  static GroupId sporadic(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty sporadic name");
    GroupId g(Family::Sporadic);
    g.name_ = std::move(name);
    return g;
  }

  /// Classical family with rank parameter m, or exceptional family (m ignored).
  static GroupId lie(Family f, int m, PrimePower q) {
    std::string why;
    if (!lie_parameters_valid(f, m, q, &why)) {
      throw std::invalid_argument(std::string(family_name(f)) + ": " + why);
    }
    GroupId g(f);
    g.m_ = is_classical(f) ? m : 0;
    g.q_ = q;
    return g;
  }

  static GroupId exceptional(Family f, PrimePower q) { return lie(f, 0, q); }

  static GroupId g2_prime_2() {
    GroupId g(Family::G2Prime2);
    g.q_ = PrimePower(2, 1);
    return g;
  }

  /// Checks the parameter ranges of each family.
  static bool lie_parameters_valid(Family f, int m, const PrimePower& q,
                                   std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
      if (why) *why = msg;
      return false;
    };
    const std::uint64_t p = q.p();
    const unsigned k = q.k();
    switch (f) {
      case Family::PSL:
        if (m < 1) return fail("m >= 1 required");
        if (m == 1 && p == 2 && k == 1) return fail("PSL(2,2) is not simple");
        if (m == 1 && p == 3 && k == 1) return fail("PSL(2,3) is not simple");
        return true;
      case Family::PSU:
        if (m < 2) return fail("m >= 2 required");
        if (m == 2 && p == 2 && k == 1) return fail("PSU(3,2) is not simple");
        return true;
      case Family::PSp:
        return m >= 3 ? true : fail("m >= 3 required");
      case Family::OmegaOdd:
        if (m < 2) return fail("m >= 2 required");
        return p % 2 == 1 ? true : fail("q must be odd");
      case Family::OPlus:
      case Family::OMinus:
        return m >= 4 ? true : fail("m >= 4 required");
      case Family::G2:
        if (p == 2 && k == 1) return fail("G2(2) is not simple; use G2Prime2");
        return true;
      case Family::E6:
      case Family::E7:
      case Family::E8:
      case Family::F4:
      case Family::TwistedE6:
      case Family::TriD4:
        return true;
      case Family::Suzuki:
      case Family::Ree:
      case Family::TwistedF4:
        if (p != fixed_characteristic(f)) return fail("wrong characteristic");
        if (k % 2 == 0 || k < 3) return fail("q = p^(2a+1) with a >= 1 required");
        return true;
      default:
        return fail("not a Lie family");
    }
  }

  /// Parses ATLAS-style labels: A9, L2(7), U4(2), S6(2), O5(3), O8+(2),
  /// O8-(2), E6(2), 2E6(2), 3D4(2), G2(3), F4(2), E7(2), E8(2), Sz(8),
  /// R(27), 2F4(8), G2(2)'. Anything else is taken as a sporadic name.
  static GroupId parse(std::string_view label) {
    const std::string s(label);
    std::smatch mt;
    static const std::regex alt_re(R"(A(\d+))");
    static const std::regex cls_re(R"((L|U|S|O)(\d+)([+-]?)\((\d+)\))");
    static const std::regex exc_re(R"((E6|E7|E8|F4|G2|2E6|3D4|Sz|R|2F4)\((\d+)\))");
    if (s == "G2(2)'") return g2_prime_2();
    if (std::regex_match(s, mt, alt_re)) return alternating(std::stoi(mt[1]));
    if (std::regex_match(s, mt, cls_re)) {
      const std::string kind = mt[1];
      const int dim = std::stoi(mt[2]);
      const std::string sign = mt[3];
      const PrimePower q = PrimePower::from_value(std::stoull(mt[4]));
      if (kind == "L" && sign.empty()) return lie(Family::PSL, dim - 1, q);
      if (kind == "U" && sign.empty()) return lie(Family::PSU, dim - 1, q);
      if (kind == "S" && sign.empty() && dim % 2 == 0) {
        return lie(Family::PSp, dim / 2, q);
      }
      if (kind == "O" && sign.empty() && dim % 2 == 1) {
        return lie(Family::OmegaOdd, (dim - 1) / 2, q);
      }
      if (kind == "O" && sign == "+" && dim % 2 == 0) {
        return lie(Family::OPlus, dim / 2, q);
      }
      if (kind == "O" && sign == "-" && dim % 2 == 0) {
        return lie(Family::OMinus, dim / 2, q);
      }
      throw std::invalid_argument("unrecognized group label " + s);
    }
    if (std::regex_match(s, mt, exc_re)) {
      static const std::map<std::string, Family> names = {
          {"E6", Family::E6},         {"E7", Family::E7},
          {"E8", Family::E8},         {"F4", Family::F4},
          {"G2", Family::G2},         {"2E6", Family::TwistedE6},
          {"3D4", Family::TriD4},     {"Sz", Family::Suzuki},
          {"R", Family::Ree},         {"2F4", Family::TwistedF4}};
      return exceptional(names.at(mt[1]),
                         PrimePower::from_value(std::stoull(mt[2])));
    }
    return sporadic(s);
  }

  Family family() const { return family_; }
  int n() const { return n_; }
  int m() const { return m_; }
  const std::optional<PrimePower>& q() const { return q_; }
  const std::string& name() const { return name_; }

  std::string label() const {
    const std::string qs = q_ ? q_->value().str() : "";
    switch (family_) {
      case Family::Alternating: return "A" + std::to_string(n_);
      case Family::Sporadic: return name_;
      case Family::PSL: return "L" + std::to_string(m_ + 1) + "(" + qs + ")";
      case Family::PSU: return "U" + std::to_string(m_ + 1) + "(" + qs + ")";
      case Family::PSp: return "S" + std::to_string(2 * m_) + "(" + qs + ")";
      case Family::OmegaOdd: return "O" + std::to_string(2 * m_ + 1) + "(" + qs + ")";
      case Family::OPlus: return "O" + std::to_string(2 * m_) + "+(" + qs + ")";
      case Family::OMinus: return "O" + std::to_string(2 * m_) + "-(" + qs + ")";
      case Family::E6: return "E6(" + qs + ")";
      case Family::E7: return "E7(" + qs + ")";
      case Family::E8: return "E8(" + qs + ")";
      case Family::F4: return "F4(" + qs + ")";
      case Family::G2: return "G2(" + qs + ")";
      case Family::TwistedE6: return "2E6(" + qs + ")";
      case Family::TriD4: return "3D4(" + qs + ")";
      case Family::Suzuki: return "Sz(" + qs + ")";
      case Family::TwistedF4: return "2F4(" + qs + ")";
      case Family::Ree: return "R(" + qs + ")";
      case Family::G2Prime2: return "G2(2)'";
    }
    return "?";
  }

  friend bool operator==(const GroupId&, const GroupId&) = default;

 private:
  explicit GroupId(Family f) : family_(f) {}

  Family family_;
  int n_ = 0;
  int m_ = 0;
  std::optional<PrimePower> q_;
  std::string name_;
};

/// Exponent e with q^e the q-power factor of the order formula.
inline unsigned q_part_exponent(Family f, int m) {
  switch (f) {
    case Family::PSL:
    case Family::PSU: return static_cast<unsigned>(m * (m + 1) / 2);
    case Family::OmegaOdd:
    case Family::PSp: return static_cast<unsigned>(m * m);
    case Family::OPlus:
    case Family::OMinus: return static_cast<unsigned>(m * (m - 1));
    case Family::E6:
    case Family::TwistedE6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
    case Family::TriD4: return 12;
    case Family::TwistedF4: return 12;
    case Family::Suzuki: return 2;
    case Family::Ree: return 3;
    default:
      throw std::invalid_argument("q_part_exponent: " +
                                  std::string(family_name(f)) +
                                  " has no q-power order factor");
  }
}

inline unsigned q_part_exponent(const GroupId& g) {
  return q_part_exponent(g.family(), g.m());
}

namespace detail {

inline Natural cyclotomic_product(const Natural& q, std::initializer_list<unsigned> minus,
                                  std::initializer_list<unsigned> plus = {}) {
  Natural acc(1);
  for (unsigned i : minus) acc *= pow(q, i) - Natural(1);
  for (unsigned i : plus) acc *= pow(q, i) + Natural(1);
  return acc;
}

inline Natural small_gcd(std::uint64_t a, const Natural& b) {
  return gcd(Natural(a), b);
}

}  // namespace detail

/// Order formula for a Lie family at (m, q). Evaluates the formula without
/// checking simplicity, so G2 at q = 2 yields |G2(2)| = 12096.
inline Natural lie_order_formula(Family f, int m, const PrimePower& pq) {
  const Natural q = pq.value();
  const Natural one(1);
  const unsigned e = q_part_exponent(f, m);
  Natural qe = pow(q, e);
  switch (f) {
    case Family::PSL: {
      Natural prod = qe;
      for (int i = 2; i <= m + 1; ++i) prod *= pow(q, i) - one;
      return exact_div(prod, detail::small_gcd(m + 1, q - one));
    }
    case Family::PSU: {
      Natural prod = qe;
      for (int i = 2; i <= m + 1; ++i) {
        prod *= (i % 2 == 0) ? pow(q, i) - one : pow(q, i) + one;
      }
      return exact_div(prod, detail::small_gcd(m + 1, q + one));
    }
    case Family::PSp:
    case Family::OmegaOdd: {
      Natural prod = qe;
      for (int i = 1; i <= m; ++i) prod *= pow(q, 2 * i) - one;
      return exact_div(prod, detail::small_gcd(2, q - one));
    }
    case Family::OPlus:
    case Family::OMinus: {
      const Natural qm = pow(q, m);
      Natural prod = qe * (f == Family::OPlus ? qm - one : qm + one);
      for (int i = 1; i <= m - 1; ++i) prod *= pow(q, 2 * i) - one;
      return exact_div(prod, detail::small_gcd(4, f == Family::OPlus ? qm - one : qm + one));
    }
    case Family::G2: return qe * detail::cyclotomic_product(q, {6, 2});
    case Family::F4: return qe * detail::cyclotomic_product(q, {12, 8, 6, 2});
    case Family::E6:
      return exact_div(qe * detail::cyclotomic_product(q, {12, 9, 8, 6, 5, 2}),
                       detail::small_gcd(3, q - one));
    case Family::TwistedE6:
      return exact_div(qe * detail::cyclotomic_product(q, {12, 8, 6, 2}, {9, 5}),
                       detail::small_gcd(3, q + one));
    case Family::E7:
      return exact_div(
          qe * detail::cyclotomic_product(q, {18, 14, 12, 10, 8, 6, 2}),
          detail::small_gcd(2, q - one));
    case Family::E8:
      return qe * detail::cyclotomic_product(q, {30, 24, 20, 18, 14, 12, 8, 2});
    case Family::TriD4:
      return qe * (pow(q, 8) + pow(q, 4) + one) *
             detail::cyclotomic_product(q, {6, 2});
    case Family::Suzuki:
      return qe * (pow(q, 2) + one) * (q - one);
    case Family::Ree:
      return qe * (pow(q, 3) + one) * (q - one);
    case Family::TwistedF4:
      return qe * detail::cyclotomic_product(q, {4, 1}, {6, 3});
    default:
      throw std::invalid_argument("lie_order_formula: not a Lie family");
  }
}

/// Upper bound on the number of conjugacy classes, as a polynomial in q with
/// exact rational coefficients (highest power first).
struct ClassNumberBound {
  Family family;
  std::vector<Rational> coefficients;
  std::string condition;

  Rational evaluate(const Natural& q) const {
    Rational acc;
    for (const Rational& c : coefficients) acc = acc * Rational(q) + c;
    return acc;
  }
};

/// Class-number bound of a Lie family. Classical families use the bound of
/// the covering group c·q^m; when the bound depends on the parity of q the
/// larger constant is used.
inline ClassNumberBound lie_class_number_bound(Family f, int m) {
  auto ints = [](std::initializer_list<std::uint64_t> cs) {
    std::vector<Rational> out;
    for (auto c : cs) out.emplace_back(Natural(c));
    return out;
  };
  auto monomial = [&](Rational c) {
    std::vector<Rational> out(static_cast<std::size_t>(m) + 1, Rational());
    out.front() = std::move(c);
    return out;
  };
  switch (f) {
    case Family::PSL: return {f, monomial({Natural(5), Natural(2)}), "k(SL(m+1,q)) <= 2.5 q^m"};
    case Family::PSU: return {f, monomial({Natural(413), Natural(50)}), "k(SU(m+1,q)) <= 8.26 q^m"};
    case Family::PSp: return {f, monomial({Natural(76), Natural(5)}), "k(Sp(2m,q)) <= 15.2 q^m (q even; 10.8 for q odd)"};
    case Family::OmegaOdd: return {f, monomial({Natural(73), Natural(10)}), "k(Omega(2m+1,q)) <= 7.3 q^m, q odd"};
    case Family::OPlus:
    case Family::OMinus: return {f, monomial({Natural(15)}), "k(O(2m,q)) <= 15 q^m (q even; 9.5 for q odd)"};
    case Family::Suzuki: return {f, ints({1, 3}), "q = 2^(2a+1)"};
    case Family::Ree: return {f, ints({1, 8}), "q = 3^(2a+1)"};
    case Family::G2:
    case Family::G2Prime2: return {f, ints({1, 2, 9}), ""};
    case Family::TwistedF4: return {f, ints({1, 4, 17}), "q = 2^(2a+1)"};
    case Family::TriD4: return {f, ints({1, 1, 1, 1, 6}), ""};
    case Family::F4: return {f, ints({1, 2, 7, 15, 31}), ""};
    case Family::E6: return {f, ints({1, 1, 2, 2, 15, 21, 60}), ""};
    case Family::TwistedE6: return {f, ints({1, 1, 2, 4, 18, 26, 62}), ""};
    case Family::E7: return {f, ints({1, 1, 2, 7, 17, 35, 71, 103}), ""};
    case Family::E8: return {f, ints({1, 1, 2, 3, 10, 16, 40, 67, 112}), ""};
    default:
      throw std::invalid_argument("lie_class_number_bound: not a Lie family");
  }
}

/// Character-degree data for one group, as stored in the catalog file.
struct DegreeRecord {
  std::string label;
  std::vector<std::string> aliases;
  std::string kind;
  Natural order;
  std::optional<int> class_count;
  std::vector<Natural> degrees;
  bool faithful_only = false;
  std::string provenance;

  bool has_degrees() const { return !degrees.empty(); }
};

/// Published parameter box (m_max, p_max, k_max) for a family.
using BoundTriple = std::array<int, 3>;

/// Immutable group catalog: degree records, sporadic orders and class counts.
class Catalog {
 public:
  static Catalog from_json(std::string_view text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(std::string("catalog: malformed JSON: ") + e.what());
    }
    if (doc.value("format", "") != "codlab-catalog") {
      throw std::runtime_error("catalog: unexpected format tag");
    }
    Catalog c;
    c.version_ = doc.value("version", 0);
    if (c.version_ != 1) {
      throw std::runtime_error("catalog: unsupported version " +
                               std::to_string(c.version_));
    }
    for (const auto& r : doc.at("records")) {
      DegreeRecord rec;
      rec.label = r.at("label").get<std::string>();
      rec.kind = r.value("kind", "");
      rec.order = Natural::parse(r.at("order").get<std::string>());
      if (r.contains("class_count")) rec.class_count = r.at("class_count").get<int>();
      if (r.contains("aliases")) rec.aliases = r.at("aliases").get<std::vector<std::string>>();
      if (r.contains("degrees")) {
        for (const auto& d : r.at("degrees")) rec.degrees.push_back(Natural::parse(d.get<std::string>()));
      }
      rec.faithful_only = r.value("faithful_only", false);
      rec.provenance = r.value("provenance", "");
      validate(rec);
      c.add(std::move(rec));
    }
    if (doc.contains("published_bounds")) {
      for (const auto& [fam, v] : doc.at("published_bounds").items()) {
        c.published_[fam] = v.get<BoundTriple>();
      }
    }
    return c;
  }

  static Catalog embedded() { return from_json(embedded::catalog_json()); }

  /// Embedded catalog, or the file named by CODLAB_DATA when set.
  static Catalog load_default() {
    if (const char* path = std::getenv("CODLAB_DATA"); path && *path) {
      return from_file(path);
    }
    return embedded();
  }

  static Catalog from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("catalog: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
  }

  int version() const { return version_; }
  const std::vector<DegreeRecord>& records() const { return records_; }

  const DegreeRecord* find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    return it == index_.end() ? nullptr : &records_[it->second];
  }

  const DegreeRecord& require(std::string_view label) const {
    if (const DegreeRecord* r = find(label)) return *r;
    throw MissingDataError(std::string(label));
  }

  /// Sporadic groups and the Tits group, in file order.
  std::vector<const DegreeRecord*> sporadic_groups() const {
    std::vector<const DegreeRecord*> out;
    for (const auto& r : records_) {
      if (r.kind == "sporadic") out.push_back(&r);
    }
    return out;
  }

  std::optional<BoundTriple> published_bounds(Family f) const {
    auto it = published_.find(std::string(family_name(f)));
    if (it == published_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static void validate(const DegreeRecord& rec) {
    if (!rec.has_degrees()) return;
    Natural sum;
    for (const Natural& d : rec.degrees) {
      if (d.is_zero() || !divides(d, rec.order)) {
        throw std::runtime_error("catalog: degree " + d.str() +
                                 " does not divide |" + rec.label + "|");
      }
      sum += d * d;
    }
    // Faithful characters of a double cover account for half the order.
    const Natural expected =
        rec.faithful_only ? exact_div(rec.order, Natural(2)) : rec.order;
    if (sum != expected) {
      throw std::runtime_error("catalog: sum of squared degrees of " +
                               rec.label + " is " + sum.str() + ", expected " +
                               expected.str());
    }
    if (!rec.faithful_only && rec.class_count &&
        static_cast<std::size_t>(*rec.class_count) != rec.degrees.size()) {
      throw std::runtime_error("catalog: class count mismatch for " + rec.label);
    }
  }

  void add(DegreeRecord rec) {
    const std::size_t at = records_.size();
    auto claim = [&](const std::string& key) {
      if (!index_.emplace(key, at).second) {
        throw std::runtime_error("catalog: duplicate label " + key);
      }
    };
    claim(rec.label);
    for (const auto& a : rec.aliases) claim(a);
    records_.push_back(std::move(rec));
  }

  int version_ = 0;
  std::vector<DegreeRecord> records_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, BoundTriple> published_;
};

inline Natural group_order(const Catalog& catalog, const GroupId& g) {
  switch (g.family()) {
    case Family::Alternating: return alternating_order(g.n());
    case Family::Sporadic: return catalog.require(g.name()).order;
    case Family::G2Prime2:
      return exact_div(lie_order_formula(Family::G2, 0, PrimePower(2, 1)), Natural(2));
    default: return lie_order_formula(g.family(), g.m(), *g.q());
  }
}

/// Exact upper bound on k(g); sporadic groups use their exact class count.
inline Rational class_number_bound(const Catalog& catalog, const GroupId& g) {
  switch (g.family()) {
    case Family::Alternating:
      throw std::invalid_argument("class_number_bound: not defined for A_n");
    case Family::Sporadic: {
      const DegreeRecord& r = catalog.require(g.name());
      if (!r.class_count) throw MissingDataError(g.name() + " (class count)");
      return Rational(Natural(static_cast<std::uint64_t>(*r.class_count)));
    }
    default:
      return lie_class_number_bound(g.family(), g.m()).evaluate(g.q()->value());
  }
}

/// {1} ∪ {|S| / chi(1)} over the non-trivial degrees of a record.
inline CodegreeSet record_codegree_set(const DegreeRecord& r) {
  if (!r.has_degrees() || r.faithful_only) throw MissingDataError(r.label);
  std::vector<Natural> values{Natural(1)};
  bool trivial_seen = false;
  for (const Natural& d : r.degrees) {
    if (d == Natural(1) && !trivial_seen) {
      trivial_seen = true;
      continue;
    }
    values.push_back(exact_div(r.order, d));
  }
  return {r.label, r.order, std::move(values)};
}

/// Codegree set of a simple group: A_n through the hook length formula,
/// anything else from its catalog degree record.
inline CodegreeSet simple_codegree_set(const Catalog& catalog, const GroupId& g) {
  if (g.family() == Family::Alternating) return alt_codegree_set(g.n());
  const DegreeRecord* r = catalog.find(g.label());
  if (!r || !r->has_degrees() || r->faithful_only) throw MissingDataError(g.label());
  CodegreeSet s = record_codegree_set(*r);
  return {g.label(), s.order(), s.values()};
}

/// cod(2.A9): the codegrees of A9 (characters with the centre in their
/// kernel) together with |2.A9| / chi(1) for the faithful characters.
inline CodegreeSet twisted_codegree_set_2A9(const Catalog& catalog) {
  const DegreeRecord& cover = catalog.require("2.A9");
  if (!cover.has_degrees() || !cover.faithful_only) throw MissingDataError("2.A9");
  CodegreeSet quotient = alt_codegree_set(9);
  std::vector<Natural> values = quotient.values();
  for (const Natural& d : cover.degrees) values.push_back(exact_div(cover.order, d));
  return {"2.A9", cover.order, std::move(values)};
}

}  // namespace codlab
