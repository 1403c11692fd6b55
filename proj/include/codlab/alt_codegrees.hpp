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
#include <utility>
#include <vector>

#include "codlab/exactnum.hpp"
#include "codlab/partitions.hpp"

namespace codlab {

/// Codegree set of a named group: sorted, deduplicated, contains 1, and every
/// value divides the group order.
class CodegreeSet {
 public:
  CodegreeSet(std::string label, Natural order, std::vector<Natural> values)
      : label_(std::move(label)), order_(std::move(order)),
        values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.empty() || values_.front() != Natural(1)) {
      throw std::logic_error("CodegreeSet " + label_ + ": 1 missing");
    }
    for (const Natural& v : values_) {
      if (!divides(v, order_)) {
        throw std::logic_error("CodegreeSet " + label_ + ": " + v.str() +
                               " does not divide " + order_.str());
      }
    }
  }

  const std::string& label() const { return label_; }
  const Natural& order() const { return order_; }
  const std::vector<Natural>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  bool contains(const Natural& v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
  }

  /// Smallest element of *this absent from `other`, if any.
  std::optional<Natural> first_missing_from(const CodegreeSet& other) const {
    for (const Natural& v : values_) {
      if (!other.contains(v)) return v;
    }
    return std::nullopt;
  }

  bool is_subset_of(const CodegreeSet& other) const {
    return !first_missing_from(other).has_value();
  }

  /// Value equality; labels are ignored.
  bool same_values(const CodegreeSet& other) const {
    return values_ == other.values_;
  }

 private:
  std::string label_;
  Natural order_;
  std::vector<Natural> values_;
};

/// One irreducible of A_n coming from the conjugate pair {lambda, lambda'}.
/// A split entry stands for the two equal-dimension constituents.
struct AltIrrEntry {
  Partition lambda;
  bool split = false;
  Natural dimension;
  Natural codegree;
};

inline Natural sym_degree(const Partition& lambda) {
  return exact_div(factorial(static_cast<unsigned>(lambda.n())),
                   hook_product(lambda));
}

inline Natural alternating_order(int n) {
  if (n < 2) throw std::invalid_argument("alternating_order: n must be >= 2");
  return exact_div(factorial(static_cast<unsigned>(n)), Natural(2));
}

namespace detail {

inline void require_alt_degree(int n, const char* who) {
  if (n < 5) {
    throw std::invalid_argument(std::string(who) + ": n must be >= 5, got " +
                                std::to_string(n));
  }
}

}  // namespace detail

/// Irreducibles of A_n, one record per conjugate pair; the representative is
/// the lexicographically larger partition, so the trivial character is (n).
inline std::vector<AltIrrEntry> alt_irr_entries(int n) {
  detail::require_alt_degree(n, "alt_irr_entries");
  const Natural nfact = factorial(static_cast<unsigned>(n));
  const Natural half = exact_div(nfact, Natural(2));
  std::vector<AltIrrEntry> out;
  for (const Partition& lambda : Partitions(n)) {
    const Partition mu = conjugate(lambda);
    if (lambda < mu) continue;
    const Natural hooks = hook_product(lambda);
    AltIrrEntry e;
    e.lambda = lambda;
    e.split = (lambda == mu);
    const Natural sym_dim = exact_div(nfact, hooks);
    if (e.split) {
      e.dimension = exact_div(sym_dim, Natural(2));
      e.codegree = hooks;
    } else {
      e.dimension = sym_dim;
      e.codegree = lambda.length() == 1 ? Natural(1) : exact_div(hooks, Natural(2));
    }
    if (lambda.length() != 1 && exact_div(half, e.dimension) != e.codegree) {
      throw std::logic_error("alt_irr_entries: codegree mismatch at " +
                             lambda.str());
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline CodegreeSet alt_codegree_set(int n) {
  detail::require_alt_degree(n, "alt_codegree_set");
  std::vector<Natural> values;
  for (AltIrrEntry& e : alt_irr_entries(n)) values.push_back(std::move(e.codegree));
  return {"A" + std::to_string(n), alternating_order(n), std::move(values)};
}

/// a_n: the smallest codegree of a non-trivial irreducible of A_n.
inline Natural min_nontrivial_codegree(int n) {
  detail::require_alt_degree(n, "min_nontrivial_codegree");
  std::optional<Natural> best;
  for (const Partition& lambda : Partitions(n)) {
    if (lambda.length() == 1 || lambda.length() == n) continue;
    Natural c = is_self_conjugate(lambda) ? hook_product(lambda)
                                          : exact_div(hook_product(lambda), Natural(2));
    if (!best || c < *best) best = std::move(c);
  }
  return *best;
}

struct MonotoneCheck {
  bool holds = true;
  /// (n, a_n) for n_lo <= n <= n_hi.
  std::vector<std::pair<int, Natural>> witness;
  /// First n with a_{n-1} >= a_n, when the check fails.
  std::optional<int> first_violation;
};

/// Checks a_{n-1} < a_n for every n in (n_lo, n_hi].
inline MonotoneCheck verify_min_codegree_monotone(int n_lo, int n_hi) {
  if (n_lo < 5 || n_hi <= n_lo) {
    throw std::invalid_argument("verify_min_codegree_monotone: need 5 <= lo < hi");
  }
  MonotoneCheck out;
  for (int n = n_lo; n <= n_hi; ++n) {
    Natural a = min_nontrivial_codegree(n);
    if (!out.witness.empty() && !(out.witness.back().second < a) &&
        !out.first_violation) {
      out.holds = false;
      out.first_violation = n;
    }
    out.witness.emplace_back(n, std::move(a));
  }
  return out;
}

}  // namespace codlab
