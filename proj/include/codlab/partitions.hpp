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

#include <cstddef>
#include <iterator>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "codlab/exactnum.hpp"

namespace codlab {

/// A box of a Young diagram, 1-based (row, column).
struct Cell {
  int row;
  int col;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition in canonical form: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) {
        throw std::invalid_argument("Partition: parts must be positive");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
      }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Parses "[3,2,1]" (whitespace tolerated).
  static Partition parse(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (c != ' ' && c != '\t') s += c;
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
      throw std::invalid_argument("Partition: expected [a,b,...], got " +
                                  std::string(text));
    }
    std::vector<int> parts;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
      std::size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
      if (tok.empty() ||
          tok.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("Partition: bad part '" + tok + "'");
      }
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (parts.empty()) throw std::invalid_argument("Partition: empty");
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Row length, 1-based; 0 past the last row.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  bool contains(Cell c) const {
    return c.row >= 1 && c.row <= length() && c.col >= 1 && c.col <= row(c.row);
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the parts list.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Successor in reverse-lexicographic order, or nullopt after (1^n).
inline std::optional<Partition> next_partition(const Partition& lambda) {
  std::vector<int> a = lambda.parts();
  int ones = 0;
  while (!a.empty() && a.back() == 1) {
    a.pop_back();
    ++ones;
  }
  if (a.empty()) return std::nullopt;
  int v = --a.back();
  int rest = ones + 1;
  while (rest > 0) {
    int take = std::min(v, rest);
    a.push_back(take);
    rest -= take;
  }
  return Partition(std::move(a));
}

/// All partitions of n in reverse-lexicographic order, (n) first and (1^n)
/// last. Generated lazily; only the current partition is held.
class Partitions {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(std::optional<Partition> cur) : cur_(std::move(cur)) {}

    reference operator*() const { return *cur_; }
    pointer operator->() const { return &*cur_; }
    iterator& operator++() {
      cur_ = next_partition(*cur_);
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.cur_ == b.cur_;
    }

   private:
    std::optional<Partition> cur_;
  };

  explicit Partitions(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Partitions: n must be >= 1");
  }

  iterator begin() const { return iterator(Partition({n_})); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for (const Partition& p : Partitions(n)) out.push_back(p);
  return out;
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> t;
  const int width = lambda.length() ? lambda.row(1) : 0;
  t.reserve(width);
  for (int j = 1; j <= width; ++j) {
    int count = 0;
    while (count < lambda.length() && lambda.parts()[count] >= j) ++count;
    t.push_back(count);
  }
  return Partition(std::move(t));
}

inline bool is_self_conjugate(const Partition& lambda) {
  return lambda == conjugate(lambda);
}

/// arm + leg + 1 for the given cell.
inline int hook_length(const Partition& lambda, Cell c) {
  if (!lambda.contains(c)) {
    throw std::out_of_range("hook_length: cell (" + std::to_string(c.row) +
                            "," + std::to_string(c.col) + ") outside " +
                            lambda.str());
  }
  int arm = lambda.row(c.row) - c.col;
  int below = 0;
  for (int r = c.row + 1; r <= lambda.length() && lambda.row(r) >= c.col; ++r) {
    ++below;
  }
  return arm + below + 1;
}

/// Product of all hook lengths, H_lambda = n! / dim V_lambda.
inline Natural hook_product(const Partition& lambda) {
  const Partition t = conjugate(lambda);
  Natural::Rep acc = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) {
      acc *= (lambda.row(i) - j) + (t.row(j) - i) + 1;
    }
  }
  return Natural::from_rep(std::move(acc));
}

/// Removable cells, top row first.
inline std::vector<Cell> corners(const Partition& lambda) {
  std::vector<Cell> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.row(i) > lambda.row(i + 1)) out.push_back({i, lambda.row(i)});
  }
  return out;
}

inline Partition remove_corner(const Partition& lambda, Cell c) {
  const bool is_corner = lambda.contains(c) && c.col == lambda.row(c.row) &&
                         lambda.row(c.row + 1) < c.col;
  if (!is_corner) {
    throw std::invalid_argument("remove_corner: (" + std::to_string(c.row) +
                                "," + std::to_string(c.col) +
                                ") is not a corner of " + lambda.str());
  }
  std::vector<int> parts = lambda.parts();
  if (--parts[c.row - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

}  // namespace codlab
