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

// Isomorphism testing for small groups: fingerprint prefilter, then
// backtracking over images of a short generating sequence. A candidate
// assignment is propagated to the whole subgroup it generates, so conflicts
// prune early; a complete assignment is verified as a bijective homomorphism
// on the full multiplication table before a witness is returned.

namespace regorb::group {

namespace {

// Greedy generating sequence: repeatedly take the element of largest order
// (ties: least id) outside the closure so far.
std::vector<int32_t> generating_sequence(const Group& g) {
  std::vector<int32_t> gens;
  SubgroupRef closed{&g, {0}};
  while (closed.order() < g.size()) {
    int32_t best = -1;
    for (int32_t a = 0; a < g.size(); ++a) {
      if (closed.contains(a)) continue;
      if (best < 0 || g.order_of(a) > g.order_of(best)) best = a;
    }
    gens.push_back(best);
    std::vector<int32_t> seed = closed.ids;
    seed.push_back(best);
    closed = subgroup_closure(g, std::move(seed));
  }
  return gens;
}

struct Search {
  const Group& a;
  const Group& b;
  std::vector<int32_t> gens;           // generating sequence of a
  std::vector<int32_t> map;            // a-id -> b-id or -1
  std::vector<bool> used;              // b-ids already taken

  // Extends the partial map over the subgroup generated by the assigned
  // generators; returns the list of newly mapped a-ids, or nullopt on
  // conflict (the caller rolls back using the returned list).
  std::optional<std::vector<int32_t>> propagate(int depth) {
    std::vector<int32_t> added;
    std::vector<int32_t> queue;
    for (int32_t x = 0; x < a.size(); ++x)
      if (map[x] >= 0) queue.push_back(x);
    auto assign = [&](int32_t x, int32_t y) -> bool {
      if (map[x] >= 0) return map[x] == y;
      if (used[y]) return false;
      map[x] = y;
      used[y] = true;
      added.push_back(x);
      queue.push_back(x);
      return true;
    };
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int32_t x = queue[qi];
      for (int d = 0; d <= depth; ++d) {
        int32_t gx = gens[d];
        int32_t y = a.mul(x, gx);
        int32_t img = b.mul(map[x], map[gx]);
        if (!assign(y, img)) {
          rollback(added);
          return std::nullopt;
        }
      }
    }
    return added;
  }

  void rollback(const std::vector<int32_t>& added) {
    for (int32_t x : added) {
      used[map[x]] = false;
      map[x] = -1;
    }
  }

  bool backtrack(int depth) {
    if (depth == static_cast<int>(gens.size())) {
      // Generators exhausted: the map must now be total.
      for (int32_t x = 0; x < a.size(); ++x)
        if (map[x] < 0) return false;
      return true;
    }
    int32_t gx = gens[depth];
    int32_t want_order = a.order_of(gx);
    for (int32_t y = 0; y < b.size(); ++y) {
      if (used[y] || b.order_of(y) != want_order) continue;
      map[gx] = y;
      used[y] = true;
      auto added = propagate(depth);
      if (added) {
        if (backtrack(depth + 1)) return true;
        rollback(*added);
      }
      used[y] = false;
      map[gx] = -1;
    }
    return false;
  }
};

bool verify_witness(const Group& a, const Group& b,
                    const std::vector<int32_t>& map) {
  std::vector<bool> hit(static_cast<size_t>(b.size()), false);
  for (int32_t x = 0; x < a.size(); ++x) {
    if (map[x] < 0 || map[x] >= b.size() || hit[map[x]]) return false;
    hit[map[x]] = true;
  }
  for (int32_t x = 0; x < a.size(); ++x)
    for (int32_t y = 0; y < a.size(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

}  // namespace

std::optional<IsoWitness> isomorphism(const Group& a, const Group& b) {
  if (a.size() > kIsoCap || b.size() > kIsoCap)
    throw std::invalid_argument("isomorphism testing capped at order 64");
  if (a.size() != b.size()) return std::nullopt;
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;

  Search s{a, b, generating_sequence(a),
           std::vector<int32_t>(static_cast<size_t>(a.size()), -1),
           std::vector<bool>(static_cast<size_t>(b.size()), false)};
  s.map[0] = 0;
  s.used[0] = true;
  if (!s.backtrack(0)) return std::nullopt;
  if (!verify_witness(a, b, s.map))
    throw InternalCheckError("isomorphism witness failed verification");
  return IsoWitness{std::move(s.map)};
}

bool is_isomorphic(const Group& a, const Group& b) {
  return isomorphism(a, b).has_value();
}

}  // namespace regorb::group
