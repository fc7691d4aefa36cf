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

#include <algorithm>

#include "regorb/group.hpp"

// Shape recognition. The specific reference shapes (dihedral, D8*C4) are
// tested first so that the tags stay aligned with the classification of the
// no-regular-orbit exceptions; the broader minimal-subgroup-threshold cases
// follow in their listed order. Overlaps resolve to the first match.

namespace regorb::group {

namespace {

// Conjugation by an outside involution inverts every element of the subgroup,
// i.e. the subgroup together with the involution is a split extension with
// inversion action.
bool inverted_by_outside_involution(const Group& g, const SubgroupRef& a) {
  for (int32_t t = 1; t < g.size(); ++t) {
    if (a.contains(t) || g.order_of(t) != 2) continue;
    bool inverts = true;
    for (int32_t x : a.ids) {
      if (g.mul(g.mul(t, x), t) != g.inverse(x)) {
        inverts = false;
        break;
      }
    }
    if (inverts) return true;
  }
  return false;
}

bool exists_outside_involution(const Group& g, const SubgroupRef& a) {
  for (int32_t t = 1; t < g.size(); ++t)
    if (!a.contains(t) && g.order_of(t) == 2) return true;
  return false;
}

// Dihedral of order >= 6: cyclic subgroup of index 2 inverted by an outside
// involution. Works at any size, no reference copy needed.
bool is_dihedral(const Group& g) {
  if (g.size() < 6 || g.size() % 2 != 0) return false;
  for (const auto& a : index_two_subgroups(g))
    if (is_cyclic(a) && inverted_by_outside_involution(g, a)) return true;
  return false;
}

bool is_exponent2(const Group& g) {
  for (int32_t x = 1; x < g.size(); ++x)
    if (g.order_of(x) != 2) return false;
  return true;
}

// G = N : C_3 with N the set of involutions forming C_2^{2n} and a
// fixed-point-free complement of order 3 (Frobenius).
bool is_c2even_by_c3(const Group& g) {
  int64_t size = g.size();
  if (size % 3 != 0) return false;
  int64_t m = size / 3;
  // m must be 4^n for n >= 1.
  if (m < 4) return false;
  int64_t w = m;
  while (w % 4 == 0) w /= 4;
  if (w != 1) return false;
  std::vector<int32_t> n_ids = {0};
  for (int32_t x = 1; x < size; ++x)
    if (g.order_of(x) == 2) n_ids.push_back(x);
  if (static_cast<int64_t>(n_ids.size()) != m) return false;
  SubgroupRef n{&g, n_ids};
  for (int32_t x : n.ids)
    for (int32_t y : n.ids)
      if (!n.contains(g.mul(x, y))) return false;
  // In a Frobenius group every order-3 element acts without fixed points,
  // so testing one is decisive.
  for (int32_t t = 1; t < size; ++t) {
    if (g.order_of(t) != 3) continue;
    for (int32_t x : n.ids) {
      if (x == 0) continue;
      if (g.mul(g.mul(t, x), g.inverse(t)) == x) return false;
    }
    return true;
  }
  return false;
}

bool is_2group(const Group& g) {
  int64_t size = g.size();
  while (size % 2 == 0) size /= 2;
  return size == 1;
}

bool matches_reference(const Group& g, const Group& ref) {
  if (g.size() != ref.size()) return false;
  if (g.size() > kIsoCap) return false;
  return is_isomorphic(g, ref);
}

// D_8 * ... * D_8 x C_2^k references of order <= 64, keyed by order.
const std::vector<Group>& central_product_family() {
  static const std::vector<Group> family = [] {
    std::vector<Group> f;
    f.push_back(refs::d8(7));  // one factor, k = 0
    // Direct C_2 factors are realized by diagonally embedding sign blocks.
    auto with_signs = [](const Group& base, int extra) {
      std::vector<linalg::Mat> gens;
      int n = base.n() + extra;
      for (const auto& m : base.generators()) {
        linalg::Mat big = linalg::Mat::identity(base.p(), n);
        for (int r = 0; r < base.n(); ++r)
          for (int c = 0; c < base.n(); ++c) big.set(r, c, m.at(r, c));
        gens.push_back(big);
      }
      for (int i = 0; i < extra; ++i) {
        linalg::Mat s = linalg::Mat::identity(base.p(), n);
        s.set(base.n() + i, base.n() + i, base.p() - 1);
        gens.push_back(s);
      }
      auto g = close(base.p(), n, gens, 128);
      if (!g) throw std::logic_error("sign extension closure failed");
      return std::move(*g);
    };
    f.push_back(with_signs(refs::d8(7), 1));       // D_8 x C_2, order 16
    f.push_back(with_signs(refs::d8(7), 2));       // D_8 x C_2^2, order 32
    f.push_back(refs::d8_star_d8(7));              // order 32
    f.push_back(with_signs(refs::d8(7), 3));       // D_8 x C_2^3, order 64
    f.push_back(with_signs(refs::d8_star_d8(7), 1));  // order 64
    return f;
  }();
  return family;
}

const Group& d8_squared_reference() {
  static const Group g = [] {
    // Block-diagonal embedding keeps the two copies independent (a Kronecker
    // product would identify the central involutions).
    Group d = refs::d8(7);
    std::vector<linalg::Mat> gens;
    auto block = [](const linalg::Mat& m, bool first) {
      linalg::Mat big = linalg::Mat::identity(7, 4);
      int off = first ? 0 : 2;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) big.set(off + r, off + c, m.at(r, c));
      return big;
    };
    for (const auto& m : d.generators()) {
      gens.push_back(block(m, true));
      gens.push_back(block(m, false));
    }
    auto g64 = close(7, 4, gens, 128);
    if (!g64 || g64->size() != 64)
      throw std::logic_error("D_8^2 reference has unexpected order");
    return std::move(*g64);
  }();
  return g;
}

}  // namespace

std::string ShapeTag::str() const {
  switch (shape) {
    case Shape::Dihedral:
      return "Dihedral(" + std::to_string(param) + ")";
    case Shape::D8starC4:
      return "D8*C4";
    case Shape::AbelianInvertedByC2:
      return "AbelianInvertedByC2";
    case Shape::C2nByC2:
      return "C2nByC2";
    case Shape::C2evenByC3:
      return "C2evenByC3";
    case Shape::CentralProductD8family:
      return "CentralProductD8family";
    case Shape::Exponent3:
      return "Exponent3";
    case Shape::D8squaredTimesC2n:
      return "D8squaredTimesC2n";
    case Shape::S3xD8xC2n:
      return "S3xD8xC2n";
    case Shape::S3sq_S4_A5:
      return "S3sq_S4_A5";
    case Shape::None:
      return "None";
  }
  return "None";
}

ShapeTag recognize_shape(const Group& g) {
  if (g.size() > kShapeCap)
    throw std::invalid_argument("shape recognition capped at order 512");
  if (g.size() == 1) throw std::invalid_argument("trivial group has no shape");

  if (is_dihedral(g)) return {Shape::Dihedral, g.size()};
  if (g.size() == 16 && matches_reference(g, refs::d8_star_c4()))
    return {Shape::D8starC4, 0};

  // (i) A : C_2 with abelian A inverted. For an abelian group the action is
  // trivial, so the case reduces to the elementary abelian 2-groups.
  if (is_abelian(g)) {
    if (is_exponent2(g)) return {Shape::AbelianInvertedByC2, g.size() / 2};
  } else {
    for (const auto& a : index_two_subgroups(g))
      if (is_abelian(a) && inverted_by_outside_involution(g, a))
        return {Shape::AbelianInvertedByC2, a.order()};
  }

  // (ii) C_2^n : C_2 with n >= 2.
  for (const auto& a : index_two_subgroups(g))
    if (a.order() >= 4 && is_elementary_abelian_2(a) &&
        exists_outside_involution(g, a))
      return {Shape::C2nByC2, a.order()};

  // (iii) C_2^{2n} : C_3, Frobenius.
  if (is_c2even_by_c3(g)) return {Shape::C2evenByC3, g.size() / 3};

  // (iv) D_8 * ... * D_8 x C_2^n.
  if (is_2group(g)) {
    for (const auto& ref : central_product_family())
      if (matches_reference(g, ref))
        return {Shape::CentralProductD8family, g.size()};
  }

  // (v) exponent 3.
  if (exponent(g) == 3) return {Shape::Exponent3, g.size()};

  // (vi) D_8^2 x C_2^n.
  if (matches_reference(g, d8_squared_reference()))
    return {Shape::D8squaredTimesC2n, g.size()};

  // (vii) S_3 x D_8 x C_2^n.
  if (matches_reference(g, refs::s3_times_d8()))
    return {Shape::S3xD8xC2n, g.size()};

  // (viii) S_3^2, S_4, A_5.
  if (matches_reference(g, refs::s3_times_s3()) ||
      matches_reference(g, refs::symmetric(4)) ||
      matches_reference(g, refs::alternating5()))
    return {Shape::S3sq_S4_A5, g.size()};

  return {Shape::None, 0};
}

}  // namespace regorb::group
