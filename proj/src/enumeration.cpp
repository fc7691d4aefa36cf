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
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "regorb/group.hpp"

namespace regorb::group {

using linalg::Mat;

AmbientGL::AmbientGL(int32_t p, int32_t n) : p_(p), n_(n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  int64_t codes = 1;
  for (int i = 0; i < n * n; ++i) {
    codes *= p;
    if (codes > (int64_t{1} << 25))
      throw std::invalid_argument("GL(n,p) too large to enumerate");
  }
  id_by_code_.assign(static_cast<size_t>(codes), -1);
  for (int64_t code = 0; code < codes; ++code) {
    Mat m(p, n);
    int64_t c = code;
    for (int i = 0; i < n * n; ++i) {
      m.set(i / n, i % n, c % p);
      c /= p;
    }
    if (!mat_invertible(m)) continue;
    id_by_code_[code] = static_cast<int32_t>(elems_.size());
    if (m.is_identity()) identity_ = id_by_code_[code];
    elems_.push_back(m);
  }
}

int32_t AmbientGL::id_of(const Mat& m) const {
  if (m.p() != p_ || m.n() != n_) return -1;
  int64_t code = m.code();
  return id_by_code_[code];
}

int32_t AmbientGL::mul(int32_t a, int32_t b) const {
  return id_by_code_[mat_mul(elems_[a], elems_[b]).code()];
}

int32_t AmbientGL::inverse(int32_t a) const {
  return id_by_code_[mat_inv(elems_[a]).code()];
}

std::optional<int64_t> AmbientGL::order_of(int32_t a, int64_t cap) const {
  int32_t x = a;
  for (int64_t k = 1; k <= cap; ++k) {
    if (x == identity_) return k;
    x = mul(x, a);
  }
  return std::nullopt;
}

const AmbientGL& ambient_gl(int32_t p, int32_t n) {
  static std::mutex mu;
  static std::map<std::pair<int32_t, int32_t>, AmbientGL> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, AmbientGL(p, n)).first;
  return it->second;
}

namespace {

struct IdSetHash {
  size_t operator()(const std::vector<int32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : v) {
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Closure of the seed ids under ambient multiplication, abandoned once its
// size passes bound. Seeds are group elements, so products alone suffice.
std::optional<std::vector<int32_t>> close_ids(const AmbientGL& amb,
                                              const std::vector<int32_t>& gens,
                                              int64_t bound) {
  std::vector<int32_t> members = {amb.identity_id()};
  std::vector<int32_t> sorted = members;
  auto contains = [&sorted](int32_t x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  };
  auto insert = [&](int32_t x) {
    members.push_back(x);
    sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), x), x);
  };
  for (int32_t g : gens)
    if (!contains(g)) insert(g);
  for (size_t qi = 0; qi < members.size(); ++qi) {
    for (int32_t g : gens) {
      int32_t y = amb.mul(members[qi], g);
      if (contains(y)) continue;
      if (static_cast<int64_t>(members.size()) + 1 > bound) return std::nullopt;
      insert(y);
    }
  }
  return sorted;
}

}  // namespace

std::vector<IdSubgroup> enumerate_bounded_subgroups(const AmbientGL& amb,
                                                    int64_t bound,
                                                    int64_t coprime_to) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  auto order_ok = [&](int64_t order) {
    return coprime_to == 0 || std::gcd(order, coprime_to) == 1;
  };

  // All distinct cyclic subgroups of admissible order.
  std::vector<IdSubgroup> seeds;
  std::unordered_set<std::vector<int32_t>, IdSetHash> seen;
  for (int32_t id = 0; id < amb.order(); ++id) {
    auto ord = amb.order_of(id, bound);
    if (!ord || !order_ok(*ord)) continue;
    std::vector<int32_t> ids;
    int32_t x = id;
    do {
      ids.push_back(x);
      x = amb.mul(x, id);
    } while (x != id);
    std::sort(ids.begin(), ids.end());
    if (seen.insert(ids).second) seeds.push_back({std::move(ids), {id}});
  }

  // Worklist: join every discovered subgroup with every cyclic seed. Each
  // bounded subgroup is a join of its cyclic subgroups, with every
  // intermediate join inside it, so this fixpoint reaches all of them.
  std::vector<IdSubgroup> all = seeds;
  for (size_t wi = 0; wi < all.size(); ++wi) {
    // Copy: `all` may reallocate while we extend.
    const IdSubgroup h = all[wi];
    for (const auto& c : seeds) {
      // A cyclic seed inside h adds nothing.
      if (std::binary_search(h.ids.begin(), h.ids.end(), c.gens[0])) continue;
      int64_t inter = 0;
      for (int32_t x : c.ids)
        if (std::binary_search(h.ids.begin(), h.ids.end(), x)) ++inter;
      // |<H,C>| >= |H||C| / |H n C|; skip joins that cannot stay bounded.
      if (h.order() * c.order() / inter > bound) continue;
      std::vector<int32_t> gens = h.gens;
      gens.insert(gens.end(), c.gens.begin(), c.gens.end());
      auto joined = close_ids(amb, gens, bound);
      if (!joined) continue;
      if (!order_ok(static_cast<int64_t>(joined->size()))) continue;
      if (!seen.insert(*joined).second) continue;
      all.push_back({std::move(*joined), std::move(gens)});
    }
  }

  std::sort(all.begin(), all.end(), [](const IdSubgroup& a, const IdSubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.ids < b.ids;
  });
  return all;
}

Group materialize(const AmbientGL& amb, const IdSubgroup& sub) {
  std::vector<Mat> elems;
  elems.reserve(sub.ids.size());
  elems.push_back(amb.element(amb.identity_id()));
  for (int32_t id : sub.ids)
    if (id != amb.identity_id()) elems.push_back(amb.element(id));
  std::vector<int32_t> gen_ids;
  for (int32_t g : sub.gens) {
    const Mat& gm = amb.element(g);
    for (int32_t i = 0; i < static_cast<int32_t>(elems.size()); ++i)
      if (elems[i] == gm) {
        gen_ids.push_back(i);
        break;
      }
  }
  return Group::from_elements(amb.p(), amb.n(), std::move(elems),
                              std::move(gen_ids));
}

}  // namespace regorb::group
