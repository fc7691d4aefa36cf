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

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace regorb {

/// Raised when two independent computation routes disagree. This is always an
/// implementation bug, never a mathematical statement; the CLI maps it to
/// exit code 3.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(const std::string& what)
      : std::logic_error("internal cross-check failed: " + what) {}
};

/// Raised when a verification campaign contradicts an expected mathematical
/// fact (e.g. a mandatory search comes back empty). The CLI maps it to exit
/// code 1.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factors of n, each listed once, ascending.
inline std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// p^e with an overflow guard; exponents here are tiny.
inline int64_t ipow(int64_t p, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (int64_t{1} << 62) / p) throw std::overflow_error("ipow overflow");
    r *= p;
  }
  return r;
}

inline int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  return ((t % p) + p) % p;
}

/// Worker count for the data-parallel verification passes. Honors the ORB_THREADS
/// environment variable, otherwise uses the hardware concurrency.
unsigned thread_count();

}  // namespace regorb
