// Copyright 2026 The regorb Authors.
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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "regorb/util.hpp"

// Dense exact linear algebra over a prime field F_p. Everything is a value
// type; all operations are pure. Dimensions are capped at kMaxDim and vector
// spaces at kMaxSpace points so that a whole space fits in a flat bitset.

namespace regorb::linalg {

inline constexpr int kMaxDim = 6;
inline constexpr int64_t kMaxSpace = int64_t{1} << 20;

/// Square matrix over F_p, row-major, entries reduced into [0, p).
/// Unused slots of the inline storage stay zero so that equality and hashing
/// can look at the whole array.
class Mat {
 public:
  Mat() = default;
  Mat(int32_t p, int32_t n);

  static Mat identity(int32_t p, int32_t n);
  static Mat from_rows(int32_t p, int32_t n,
                       const std::vector<std::vector<int64_t>>& rows);

  int32_t p() const { return p_; }
  int32_t n() const { return n_; }
  int32_t at(int r, int c) const { return e_[r * n_ + c]; }
  void set(int r, int c, int64_t v) { e_[r * n_ + c] = norm(v); }

  bool is_identity() const;
  bool operator==(const Mat& o) const {
    return p_ == o.p_ && n_ == o.n_ && e_ == o.e_;
  }

  /// Canonical integer code: sum of e[i] * p^i over row-major positions
  /// (little-endian base p). Only valid when p^(n^2) fits in int64.
  int64_t code() const;

 private:
  int32_t norm(int64_t v) const {
    int64_t r = v % p_;
    return static_cast<int32_t>(r < 0 ? r + p_ : r);
  }

  int32_t p_ = 0;
  int32_t n_ = 0;
  std::array<int32_t, kMaxDim * kMaxDim> e_{};

  friend struct MatHash;
};

struct MatHash {
  size_t operator()(const Mat& m) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(m.p()));
    mix(static_cast<uint64_t>(m.n()));
    for (int i = 0; i < m.n() * m.n(); ++i)
      mix(static_cast<uint64_t>(m.e_[i]));
    return static_cast<size_t>(h);
  }
};

/// Orders matrices by their canonical code without materializing it
/// (compares the most significant entries first). Used for least-index
/// deterministic searches.
bool mat_code_less(const Mat& a, const Mat& b);

/// Column vector over F_p with the canonical little-endian base-p index.
class Vec {
 public:
  Vec() = default;
  Vec(int32_t p, int32_t n);
  static Vec from_coords(int32_t p, int32_t n, const std::vector<int64_t>& c);
  static Vec from_index(int32_t p, int32_t n, int64_t index);

  int32_t p() const { return p_; }
  int32_t n() const { return n_; }
  int32_t at(int i) const { return c_[i]; }
  void set(int i, int64_t v);

  int64_t index() const;
  bool is_zero() const;
  bool operator==(const Vec& o) const {
    return p_ == o.p_ && n_ == o.n_ && c_ == o.c_;
  }

 private:
  int32_t p_ = 0;
  int32_t n_ = 0;
  std::array<int32_t, kMaxDim> c_{};
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, int64_t k);

/// Inverse by Gauss-Jordan elimination; throws std::domain_error on a
/// singular input.
Mat mat_inv(const Mat& a);

int64_t mat_det(const Mat& a);
bool mat_invertible(const Mat& a);

/// Least k >= 1 with a^k = I, or nullopt once k would exceed cap.
std::optional<int64_t> mat_order(const Mat& a, int64_t cap);

Vec mat_apply(const Mat& a, const Vec& v);

/// Kronecker (tensor) product; the result dimension must stay within kMaxDim.
Mat kronecker(const Mat& a, const Mat& b);

/// F_p-subspace kept in reduced row-echelon form with recorded pivots,
/// giving O(dim * n) membership tests.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int32_t p, int32_t n, std::vector<Vec> rref_basis,
           std::vector<int32_t> pivots);

  int32_t p() const { return p_; }
  int32_t n() const { return n_; }
  int32_t dim() const { return static_cast<int32_t>(basis_.size()); }
  int64_t size() const { return ipow(p_, dim()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int32_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool operator==(const Subspace& o) const {
    return p_ == o.p_ && n_ == o.n_ && basis_ == o.basis_;
  }

 private:
  int32_t p_ = 0;
  int32_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<int32_t> pivots_;
};

/// Row span of the given vectors, as a canonical RREF subspace.
Subspace rref(int32_t p, int32_t n, const std::vector<Vec>& rows);

/// Joint kernel {v : r . v = 0 for every row r}. Rows may come from several
/// stacked matrices.
Subspace nullspace(int32_t p, int32_t n, const std::vector<Vec>& rows);

/// Kernel of a single square matrix.
Subspace kernel(const Mat& a);

Subspace full_space(int32_t p, int32_t n);
Subspace zero_space(int32_t p, int32_t n);

/// Flat bitset over the point indices of F_p^n.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int64_t nbits);

  int64_t size() const { return nbits_; }
  void set(int64_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(int64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void or_with(const Bitset& o);
  int64_t count() const;
  bool all() const;
  /// Least unset index, or -1 when full.
  int64_t first_unset() const;
  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && w_ == o.w_;
  }

 private:
  int64_t nbits_ = 0;
  std::vector<uint64_t> w_;
};

/// Characteristic bitset of a subspace inside F_p^n: bit index(v) is set iff
/// v lies in the subspace. Requires p^n <= kMaxSpace.
Bitset subspace_bitset(const Subspace& s);

}  // namespace regorb::linalg
