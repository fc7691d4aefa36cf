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

#include "regorb/gfp.hpp"

#include <numeric>

namespace regorb::gfp {

namespace {

using Poly = std::vector<int64_t>;  // coefficients low to high

Poly poly_mod(Poly a, const Poly& m, int64_t p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int64_t f = a[i] % p;
    if (f == 0) continue;
    // m is monic, so the reduction step is a plain subtraction.
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = (((a[i - dm + j] - f * m[j]) % p) + p) % p;
    }
  }
  a.resize(dm);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// Remainder of a monic-or-not dividend by a monic divisor.
bool divides(const Poly& divisor, Poly dividend, int64_t p) {
  Poly r = poly_mod(std::move(dividend), divisor, p);
  for (int64_t c : r)
    if (c % p != 0) return false;
  return true;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    int64_t count = ipow(p, d);
    for (int64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(int64_t p, int t) : p_(p), t_(t) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (t < 1 || t > kMaxDegree)
    throw std::invalid_argument("extension degree must be in [1, 4]");
  q_ = ipow(p, t);
  if (q_ > linalg::kMaxSpace)
    throw std::invalid_argument("field size exceeds 2^20 cap");

  // Least monic irreducible polynomial of degree t, by the canonical
  // little-endian code of the non-leading coefficients.
  bool found = false;
  for (int64_t code = 0; code < q_ && !found; ++code) {
    Poly f(t + 1, 0);
    int64_t c = code;
    for (int i = 0; i < t; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[t] = 1;
    if (is_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.end());
      found = true;
    }
  }
  if (!found) throw std::logic_error("no irreducible polynomial found");

  // Least element of full multiplicative order q - 1.
  auto factors = prime_factors(q_ - 1);
  for (int64_t idx = 1; idx < q_; ++idx) {
    FieldElement cand = element(idx);
    bool primitive = true;
    for (int64_t r : factors) {
      if (q_ - 1 == 1) break;
      if (!is_zero(sub(pow(cand, (q_ - 1) / r), one()))) continue;
      primitive = false;
      break;
    }
    if (primitive) {
      gamma_ = cand;
      break;
    }
  }
  if (q_ > 2 && index_of(gamma_) == 0)
    throw std::logic_error("no primitive element found");
  if (q_ == 2) gamma_ = one();

  // Verify the order claim directly and fill the discrete log table.
  dlog_.assign(static_cast<size_t>(q_), -1);
  FieldElement x = one();
  for (int64_t k = 0; k < q_ - 1; ++k) {
    int64_t idx = index_of(x);
    if (dlog_[idx] != -1)
      throw std::logic_error("gamma does not have full multiplicative order");
    dlog_[idx] = static_cast<int32_t>(k);
    x = mul(x, gamma_);
  }
  if (!(x == one()))
    throw std::logic_error("gamma order verification failed");
}

Field make_field(int64_t p, int t) { return Field(p, t); }

FieldElement Field::one() const {
  FieldElement e;
  e.c[0] = 1;
  return e;
}

int64_t Field::index_of(const FieldElement& a) const {
  int64_t idx = 0;
  for (int i = t_ - 1; i >= 0; --i) idx = idx * p_ + a.c[i];
  return idx;
}

FieldElement Field::element(int64_t index) const {
  if (index < 0 || index >= q_)
    throw std::invalid_argument("field element index out of range");
  FieldElement e;
  for (int i = 0; i < t_; ++i) {
    e.c[i] = static_cast<int32_t>(index % p_);
    index /= p_;
  }
  return e;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out;
  for (int i = 0; i < t_; ++i)
    out.c[i] = static_cast<int32_t>((a.c[i] + b.c[i]) % p_);
  return out;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out;
  for (int i = 0; i < t_; ++i)
    out.c[i] = static_cast<int32_t>(((a.c[i] - b.c[i]) % p_ + p_) % p_);
  return out;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  Poly pa(t_), pb(t_);
  for (int i = 0; i < t_; ++i) {
    pa[i] = a.c[i];
    pb[i] = b.c[i];
  }
  Poly m(modulus_.begin(), modulus_.end());
  Poly prod = poly_mod(poly_mul(pa, pb, p_), m, p_);
  FieldElement out;
  for (int i = 0; i < t_; ++i) out.c[i] = static_cast<int32_t>(prod[i]);
  return out;
}

FieldElement Field::pow(const FieldElement& a, int64_t k) const {
  if (k < 0) return pow(inverse(a), -k);
  FieldElement result = one();
  FieldElement base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement Field::inverse(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("zero has no inverse");
  return pow(a, q_ - 2);
}

FieldElement Field::frobenius(const FieldElement& a) const {
  return pow(a, p_);
}

bool Field::is_zero(const FieldElement& a) const {
  for (int i = 0; i < t_; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

int64_t Field::dlog(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("discrete log of zero");
  return dlog_[index_of(a)];
}

int64_t Field::mul_order(const FieldElement& a) const {
  int64_t k = dlog(a);
  return (q_ - 1) / std::gcd(q_ - 1, k);
}

linalg::Mat regular_rep(const Field& f, const FieldElement& a) {
  if (f.is_zero(a)) throw std::domain_error("regular_rep of zero");
  linalg::Mat m(static_cast<int32_t>(f.p()), f.t());
  for (int j = 0; j < f.t(); ++j) {
    FieldElement basis;
    basis.c[j] = 1;
    FieldElement img = f.mul(a, basis);
    for (int i = 0; i < f.t(); ++i) m.set(i, j, img.c[i]);
  }
  return m;
}

linalg::Mat frobenius_matrix(const Field& f) {
  if (f.t() < 2)
    throw std::domain_error("Frobenius is trivial on a prime field");
  linalg::Mat m(static_cast<int32_t>(f.p()), f.t());
  for (int j = 0; j < f.t(); ++j) {
    FieldElement basis;
    basis.c[j] = 1;
    FieldElement img = f.frobenius(basis);
    for (int i = 0; i < f.t(); ++i) m.set(i, j, img.c[i]);
  }
  return m;
}

}  // namespace regorb::gfp
