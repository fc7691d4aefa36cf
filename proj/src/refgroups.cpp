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

#include "regorb/group.hpp"

// Reference groups built from explicit matrix generators. Dihedral groups use
// the diagonal rotation / antidiagonal reflection form over the least prime
// q = 1 (mod k); everything else lives over a small fixed field (F_7 unless
// the construction forces another characteristic).

namespace regorb::group::refs {

using linalg::Mat;

namespace {

Group must_close(int32_t p, int32_t n, const std::vector<Mat>& gens,
                 int64_t expected_order) {
  auto g = close(p, n, gens, std::max<int64_t>(expected_order * 2, 16));
  if (!g || g->size() != expected_order)
    throw std::logic_error("reference group has unexpected order");
  return std::move(*g);
}

int64_t element_of_order(int64_t q, int64_t k) {
  // Least element of multiplicative order exactly k mod q.
  for (int64_t a = 2; a < q; ++a) {
    int64_t x = a % q, ord = 1;
    while (x != 1) {
      x = (x * a) % q;
      ++ord;
      if (ord > k) break;
    }
    if (ord == k) return a;
  }
  throw std::logic_error("no element of requested order");
}

}  // namespace

Mat permutation_matrix(int32_t p, const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  Mat m(p, n);
  for (int j = 0; j < n; ++j) m.set(images[j], j, 1);
  return m;
}

Group from_permutations(int32_t p, const std::vector<std::vector<int>>& perms) {
  std::vector<Mat> gens;
  for (const auto& im : perms) gens.push_back(permutation_matrix(p, im));
  auto g = close(p, static_cast<int32_t>(perms[0].size()), gens, kCloseCapMax);
  if (!g) throw std::logic_error("permutation group closure exceeded cap");
  return std::move(*g);
}

Group dihedral(int64_t order) {
  if (order < 6 || order % 2 != 0)
    throw std::invalid_argument("dihedral reference needs even order >= 6");
  const int64_t k = order / 2;
  int64_t q = 3;
  while (!(is_prime(q) && (q - 1) % k == 0)) ++q;
  int64_t zeta = element_of_order(q, k);
  Mat rot(static_cast<int32_t>(q), 2);
  rot.set(0, 0, zeta);
  rot.set(1, 1, mod_inverse(zeta, q));
  Mat flip(static_cast<int32_t>(q), 2);
  flip.set(0, 1, 1);
  flip.set(1, 0, 1);
  return must_close(static_cast<int32_t>(q), 2, {rot, flip}, order);
}

Group quaternion8() {
  // The classical matrix copy over F_5.
  Mat i = Mat::from_rows(5, 2, {{0, 4}, {1, 0}});
  Mat j = Mat::from_rows(5, 2, {{2, 0}, {0, 3}});
  return must_close(5, 2, {i, j}, 8);
}

Group symmetric(int degree) {
  if (degree == 3) return from_permutations(7, {{1, 2, 0}, {1, 0, 2}});
  if (degree == 4) return from_permutations(7, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  throw std::invalid_argument("only S_3 and S_4 references are built");
}

Group alternating5() {
  // 5-cycle and a 3-cycle.
  return from_permutations(7, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
}

Group s3_times_s3() {
  return from_permutations(
      7, {{1, 2, 0, 3, 4, 5}, {1, 0, 2, 3, 4, 5}, {0, 1, 2, 4, 5, 3},
          {0, 1, 2, 4, 3, 5}});
}

Group s3_times_d8() {
  // S_3 as 2x2 matrices block-joined with D_8 as 2x2 matrices, all over F_7.
  Mat r3 = Mat::from_rows(7, 4, {{0, 6, 0, 0}, {1, 6, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  Mat s3 = Mat::from_rows(7, 4, {{1, 6, 0, 0}, {0, 6, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  Mat r4 = Mat::from_rows(7, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 6}, {0, 0, 1, 0}});
  Mat s4 = Mat::from_rows(7, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 6}});
  return must_close(7, 4, {r3, s3, r4, s4}, 48);
}

Group elementary_abelian2(int rank) {
  if (rank < 1 || rank > 4)
    throw std::invalid_argument("elementary abelian rank must be 1..4");
  std::vector<Mat> gens;
  for (int i = 0; i < rank; ++i) {
    Mat m = Mat::identity(7, rank);
    m.set(i, i, 6);
    gens.push_back(m);
  }
  return must_close(7, rank, gens, int64_t{1} << rank);
}

Group heisenberg27() {
  Mat a = Mat::from_rows(3, 3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  Mat b = Mat::from_rows(3, 3, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
  return must_close(3, 3, {a, b}, 27);
}

Group a4() {
  return from_permutations(7, {{1, 0, 3, 2}, {1, 2, 0, 3}});
}

Group c2_4_by_c3() {
  // Sign patterns with product one inside each coordinate triple, normalized
  // by the double 3-cycle (0 1 2)(3 4 5). The complement acts without fixed
  // points, so the extension is a Frobenius group of order 48.
  std::vector<Mat> gens;
  auto signs = [](std::vector<int64_t> d) {
    Mat m = Mat::identity(7, 6);
    for (int i = 0; i < 6; ++i) m.set(i, i, d[i]);
    return m;
  };
  gens.push_back(signs({6, 6, 1, 1, 1, 1}));
  gens.push_back(signs({1, 6, 6, 1, 1, 1}));
  gens.push_back(signs({1, 1, 1, 6, 6, 1}));
  gens.push_back(signs({1, 1, 1, 1, 6, 6}));
  gens.push_back(permutation_matrix(7, {1, 2, 0, 4, 5, 3}));
  return must_close(7, 6, gens, 48);
}

Group c2_3_by_c2() {
  std::vector<Mat> gens;
  for (int i = 0; i < 3; ++i) {
    Mat m = Mat::identity(7, 3);
    m.set(i, i, 6);
    gens.push_back(m);
  }
  gens.push_back(permutation_matrix(7, {1, 0, 2}));
  return must_close(7, 3, gens, 16);
}

Group d8(int64_t over_p) {
  if (over_p % 2 == 0) throw std::invalid_argument("D_8 copy needs odd characteristic");
  const auto p = static_cast<int32_t>(over_p);
  Mat r = Mat::from_rows(p, 2, {{0, over_p - 1}, {1, 0}});
  Mat s = Mat::from_rows(p, 2, {{1, 0}, {0, over_p - 1}});
  return must_close(p, 2, {r, s}, 8);
}

Group d8_star_d8(int64_t over_p) {
  const auto p = static_cast<int32_t>(over_p);
  Mat r = Mat::from_rows(p, 2, {{0, over_p - 1}, {1, 0}});
  Mat s = Mat::from_rows(p, 2, {{1, 0}, {0, over_p - 1}});
  Mat id2 = Mat::identity(p, 2);
  // r^2 = -I on both factors, so the Kronecker copies share their central
  // involution: a central product of order 32, not a direct product.
  std::vector<Mat> gens = {kronecker(r, id2), kronecker(s, id2),
                           kronecker(id2, r), kronecker(id2, s)};
  return must_close(p, 4, gens, 32);
}

Group d8_star_c4() {
  Mat r = Mat::from_rows(5, 2, {{0, 4}, {1, 0}});
  Mat s = Mat::from_rows(5, 2, {{1, 0}, {0, 4}});
  Mat c = Mat::from_rows(5, 2, {{2, 0}, {0, 2}});  // scalar of order 4, c^2 = r^2
  return must_close(5, 2, {r, s, c}, 16);
}

Group cyclic(int64_t m) {
  if (m == 1) return must_close(7, 1, {}, 1);
  int64_t q = 3;
  while (!(is_prime(q) && (q - 1) % m == 0)) ++q;
  Mat g(static_cast<int32_t>(q), 1);
  g.set(0, 0, element_of_order(q, m));
  return must_close(static_cast<int32_t>(q), 1, {g}, m);
}

}  // namespace regorb::group::refs
