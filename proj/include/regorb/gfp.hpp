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
#include <cstdint>
#include <vector>

#include "regorb/linalg.hpp"

// Exact arithmetic in F_{p^t} (1 <= t <= 4, p^t <= 2^20) in the polynomial
// basis, plus the regular matrix representation and the Frobenius matrix.
// Field construction is fully deterministic: the modulus is the least monic
// irreducible polynomial of its degree, the primitive element gamma is the
// least element of full multiplicative order.

namespace regorb::gfp {

inline constexpr int kMaxDegree = 4;

/// Element of F_{p^t}: coordinates in the polynomial basis 1, x, ..., x^{t-1},
/// each reduced into [0, p). Slots beyond t stay zero.
struct FieldElement {
  std::array<int32_t, kMaxDegree> c{};
  bool operator==(const FieldElement&) const = default;
};

class Field {
 public:
  /// Builds F_{p^t}. Verifies primality of p, irreducibility of the chosen
  /// modulus (trial division) and the multiplicative order of gamma.
  Field(int64_t p, int t);

  int64_t p() const { return p_; }
  int t() const { return t_; }
  int64_t q() const { return q_; }

  /// Modulus polynomial coefficients, low to high, length t+1, monic.
  const std::vector<int32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const;
  FieldElement gamma() const { return gamma_; }

  /// Canonical index: sum of c[i] * p^i, a bijection onto [0, q).
  int64_t index_of(const FieldElement& a) const;
  FieldElement element(int64_t index) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, int64_t k) const;
  FieldElement inverse(const FieldElement& a) const;
  FieldElement frobenius(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const;

  /// Discrete log base gamma (table lookup); requires a != 0.
  int64_t dlog(const FieldElement& a) const;
  /// Multiplicative order of a nonzero element.
  int64_t mul_order(const FieldElement& a) const;

  bool same_field(const Field& o) const {
    return p_ == o.p_ && t_ == o.t_ && modulus_ == o.modulus_;
  }

 private:
  int64_t p_ = 0;
  int t_ = 0;
  int64_t q_ = 0;
  std::vector<int32_t> modulus_;
  FieldElement gamma_;
  std::vector<int32_t> dlog_;  // index -> exponent, -1 for zero
};

Field make_field(int64_t p, int t);

/// t x t matrix over F_p of the multiplication map x -> a*x in the polynomial
/// basis. Requires a != 0, so the result is invertible and
/// regular_rep(a)*regular_rep(b) = regular_rep(a*b).
linalg::Mat regular_rep(const Field& f, const FieldElement& a);

/// Matrix of the Frobenius x -> x^p in the polynomial basis; order t.
/// Rejects t = 1, where the map degenerates to the identity.
linalg::Mat frobenius_matrix(const Field& f);

}  // namespace regorb::gfp
