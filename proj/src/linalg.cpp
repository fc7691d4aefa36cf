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

#include "regorb/linalg.hpp"

#include <algorithm>
#include <bit>

namespace regorb::linalg {

namespace {

void check_dims(int32_t p, int32_t n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
}

void check_same(const Mat& a, const Mat& b) {
  if (a.p() != b.p() || a.n() != b.n())
    throw std::invalid_argument("matrix shape/modulus mismatch");
}

}  // namespace

Mat::Mat(int32_t p, int32_t n) : p_(p), n_(n) { check_dims(p, n); }

Mat Mat::identity(int32_t p, int32_t n) {
  Mat m(p, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(int32_t p, int32_t n,
                   const std::vector<std::vector<int64_t>>& rows) {
  Mat m(p, n);
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("row count mismatch");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n)
      throw std::invalid_argument("row length mismatch");
    for (int c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

bool Mat::is_identity() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (e_[r * n_ + c] != (r == c ? 1 : 0)) return false;
  return true;
}

int64_t Mat::code() const {
  int64_t code = 0;
  for (int i = n_ * n_ - 1; i >= 0; --i) {
    code = code * p_ + e_[i];
  }
  return code;
}

bool mat_code_less(const Mat& a, const Mat& b) {
  check_same(a, b);
  const int nn = a.n() * a.n();
  for (int i = nn - 1; i >= 0; --i) {
    int32_t x = a.at(i / a.n(), i % a.n());
    int32_t y = b.at(i / b.n(), i % b.n());
    if (x != y) return x < y;
  }
  return false;
}

Vec::Vec(int32_t p, int32_t n) : p_(p), n_(n) { check_dims(p, n); }

Vec Vec::from_coords(int32_t p, int32_t n, const std::vector<int64_t>& c) {
  Vec v(p, n);
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument("coordinate count mismatch");
  for (int i = 0; i < n; ++i) v.set(i, c[i]);
  return v;
}

Vec Vec::from_index(int32_t p, int32_t n, int64_t index) {
  Vec v(p, n);
  for (int i = 0; i < n; ++i) {
    v.c_[i] = static_cast<int32_t>(index % p);
    index /= p;
  }
  if (index != 0) throw std::invalid_argument("vector index out of range");
  return v;
}

void Vec::set(int i, int64_t v) {
  int64_t r = v % p_;
  c_[i] = static_cast<int32_t>(r < 0 ? r + p_ : r);
}

int64_t Vec::index() const {
  int64_t idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + c_[i];
  return idx;
}

bool Vec::is_zero() const {
  for (int i = 0; i < n_; ++i)
    if (c_[i] != 0) return false;
  return true;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  check_same(a, b);
  const int n = a.n();
  Mat out(a.p(), n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int64_t acc = 0;
      for (int k = 0; k < n; ++k)
        acc += static_cast<int64_t>(a.at(r, k)) * b.at(k, c);
      out.set(r, c, acc);
    }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  check_same(a, b);
  Mat out(a.p(), a.n());
  for (int r = 0; r < a.n(); ++r)
    for (int c = 0; c < a.n(); ++c)
      out.set(r, c, static_cast<int64_t>(a.at(r, c)) + b.at(r, c));
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  check_same(a, b);
  Mat out(a.p(), a.n());
  for (int r = 0; r < a.n(); ++r)
    for (int c = 0; c < a.n(); ++c)
      out.set(r, c, static_cast<int64_t>(a.at(r, c)) - b.at(r, c));
  return out;
}

Mat mat_pow(const Mat& a, int64_t k) {
  if (k < 0) return mat_pow(mat_inv(a), -k);
  Mat result = Mat::identity(a.p(), a.n());
  Mat base = a;
  while (k > 0) {
    if (k & 1) result = mat_mul(result, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return result;
}

namespace {

// Gauss-Jordan on an n x (n + m) augmented system held as rows of int64.
// Returns the rank of the left block.
int eliminate(std::vector<std::vector<int64_t>>& rows, int64_t p, int ncols_left) {
  const int nrows = static_cast<int>(rows.size());
  int rank = 0;
  for (int col = 0; col < ncols_left && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r][col] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int64_t inv = mod_inverse(rows[rank][col], p);
    for (auto& x : rows[rank]) x = ((x * inv) % p + p) % p;
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int64_t f = rows[r][col];
      for (size_t c = 0; c < rows[r].size(); ++c)
        rows[r][c] = (((rows[r][c] - f * rows[rank][c]) % p) + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Mat mat_inv(const Mat& a) {
  const int n = a.n();
  const int64_t p = a.p();
  std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(2 * n, 0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) rows[r][c] = a.at(r, c);
    rows[r][n + r] = 1;
  }
  if (eliminate(rows, p, n) != n)
    throw std::domain_error("matrix is singular");
  Mat out(a.p(), n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.set(r, c, rows[r][n + c]);
  return out;
}

int64_t mat_det(const Mat& a) {
  const int n = a.n();
  const int64_t p = a.p();
  std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rows[r][c] = a.at(r, c);
  int64_t det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (rows[r][col] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = p - det;
    }
    det = (det * rows[col][col]) % p;
    int64_t inv = mod_inverse(rows[col][col], p);
    for (int r = col + 1; r < n; ++r) {
      if (rows[r][col] == 0) continue;
      int64_t f = (rows[r][col] * inv) % p;
      for (int c = col; c < n; ++c)
        rows[r][c] = (((rows[r][c] - f * rows[col][c]) % p) + p) % p;
    }
  }
  return det % p;
}

bool mat_invertible(const Mat& a) { return mat_det(a) != 0; }

std::optional<int64_t> mat_order(const Mat& a, int64_t cap) {
  if (cap < 1) throw std::invalid_argument("order cap must be positive");
  Mat x = a;
  for (int64_t k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = mat_mul(x, a);
  }
  return std::nullopt;
}

Vec mat_apply(const Mat& a, const Vec& v) {
  if (a.p() != v.p() || a.n() != v.n())
    throw std::invalid_argument("matrix/vector mismatch");
  Vec out(v.p(), v.n());
  for (int r = 0; r < a.n(); ++r) {
    int64_t acc = 0;
    for (int c = 0; c < a.n(); ++c)
      acc += static_cast<int64_t>(a.at(r, c)) * v.at(c);
    out.set(r, acc);
  }
  return out;
}

Mat kronecker(const Mat& a, const Mat& b) {
  if (a.p() != b.p()) throw std::invalid_argument("modulus mismatch");
  const int n = a.n() * b.n();
  if (n > kMaxDim)
    throw std::invalid_argument("kronecker product exceeds dimension cap");
  Mat out(a.p(), n);
  for (int ar = 0; ar < a.n(); ++ar)
    for (int ac = 0; ac < a.n(); ++ac)
      for (int br = 0; br < b.n(); ++br)
        for (int bc = 0; bc < b.n(); ++bc)
          out.set(ar * b.n() + br, ac * b.n() + bc,
                  static_cast<int64_t>(a.at(ar, ac)) * b.at(br, bc));
  return out;
}

Subspace::Subspace(int32_t p, int32_t n, std::vector<Vec> rref_basis,
                   std::vector<int32_t> pivots)
    : p_(p), n_(n), basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {
  check_dims(p, n);
  if (basis_.size() != pivots_.size())
    throw std::invalid_argument("basis/pivot size mismatch");
}

bool Subspace::contains(const Vec& v) const {
  if (v.p() != p_ || v.n() != n_)
    throw std::invalid_argument("vector/subspace mismatch");
  Vec w = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    int32_t c = w.at(pivots_[i]);
    if (c == 0) continue;
    for (int j = 0; j < n_; ++j)
      w.set(j, static_cast<int64_t>(w.at(j)) -
                   static_cast<int64_t>(c) * basis_[i].at(j));
  }
  return w.is_zero();
}

Subspace rref(int32_t p, int32_t n, const std::vector<Vec>& rows) {
  check_dims(p, n);
  std::vector<std::vector<int64_t>> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.p() != p || r.n() != n)
      throw std::invalid_argument("row modulus/dimension mismatch");
    std::vector<int64_t> w(n);
    for (int i = 0; i < n; ++i) w[i] = r.at(i);
    work.push_back(std::move(w));
  }
  int rank = eliminate(work, p, n);
  std::vector<Vec> basis;
  std::vector<int32_t> pivots;
  for (int r = 0; r < rank; ++r) {
    Vec v(p, n);
    int pivot = -1;
    for (int c = 0; c < n; ++c) {
      v.set(c, work[r][c]);
      if (pivot < 0 && work[r][c] != 0) pivot = c;
    }
    basis.push_back(v);
    pivots.push_back(pivot);
  }
  return Subspace(p, n, std::move(basis), std::move(pivots));
}

Subspace nullspace(int32_t p, int32_t n, const std::vector<Vec>& rows) {
  check_dims(p, n);
  std::vector<std::vector<int64_t>> work;
  for (const auto& r : rows) {
    std::vector<int64_t> w(n);
    for (int i = 0; i < n; ++i) w[i] = r.at(i);
    work.push_back(std::move(w));
  }
  int rank = eliminate(work, p, n);
  // Pivot columns of the reduced system; every other column is free.
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < n; ++c)
      if (work[r][c] != 0) {
        pivot_col[r] = c;
        is_pivot[c] = true;
        break;
      }
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(p, n);
    v.set(f, 1);
    for (int r = 0; r < rank; ++r) v.set(pivot_col[r], -work[r][f]);
    basis.push_back(v);
  }
  // Canonicalize: the raw free-variable basis is not in echelon order.
  return rref(p, n, basis);
}

Subspace kernel(const Mat& a) {
  std::vector<Vec> rows;
  for (int r = 0; r < a.n(); ++r) {
    Vec v(a.p(), a.n());
    for (int c = 0; c < a.n(); ++c) v.set(c, a.at(r, c));
    rows.push_back(v);
  }
  return nullspace(a.p(), a.n(), rows);
}

Subspace full_space(int32_t p, int32_t n) {
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) {
    Vec v(p, n);
    v.set(i, 1);
    rows.push_back(v);
  }
  return rref(p, n, rows);
}

Subspace zero_space(int32_t p, int32_t n) {
  return Subspace(p, n, {}, {});
}

Bitset::Bitset(int64_t nbits)
    : nbits_(nbits), w_(static_cast<size_t>((nbits + 63) / 64), 0) {
  if (nbits < 1 || nbits > kMaxSpace)
    throw std::invalid_argument("bitset size out of range");
}

void Bitset::or_with(const Bitset& o) {
  if (nbits_ != o.nbits_) throw std::invalid_argument("bitset size mismatch");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
}

int64_t Bitset::count() const {
  int64_t c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool Bitset::all() const { return count() == nbits_; }

int64_t Bitset::first_unset() const {
  for (size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] == ~uint64_t{0}) continue;
    int64_t base = static_cast<int64_t>(i) * 64;
    uint64_t inv = ~w_[i];
    int64_t bit = base + std::countr_zero(inv);
    if (bit < nbits_) return bit;
  }
  return -1;
}

Bitset subspace_bitset(const Subspace& s) {
  int64_t space = ipow(s.p(), s.n());
  if (space > kMaxSpace)
    throw std::invalid_argument("space exceeds bitset cap");
  Bitset bits(space);
  // Walk the span: extend the enumerated point list one basis vector at a time.
  std::vector<Vec> points = {Vec(s.p(), s.n())};
  for (const auto& b : s.basis()) {
    size_t cur = points.size();
    for (int32_t c = 1; c < s.p(); ++c) {
      for (size_t i = 0; i < cur; ++i) {
        Vec v = points[i];
        for (int j = 0; j < s.n(); ++j)
          v.set(j, static_cast<int64_t>(v.at(j)) +
                       static_cast<int64_t>(c) * b.at(j));
        points.push_back(v);
      }
    }
  }
  for (const auto& v : points) bits.set(v.index());
  return bits;
}

}  // namespace regorb::linalg
