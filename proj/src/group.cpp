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
#include <bit>
#include <numeric>
#include <set>

#include "regorb/group.hpp"

namespace regorb::group {

using linalg::Mat;

Group Group::from_elements(int32_t p, int32_t n, std::vector<Mat> elements,
                           std::vector<int32_t> generator_ids) {
  Group g;
  g.p_ = p;
  g.n_ = n;
  g.elems_ = std::move(elements);
  g.gens_ = std::move(generator_ids);
  if (g.elems_.empty() || !g.elems_[0].is_identity())
    throw std::invalid_argument("element 0 must be the identity");
  const int64_t size = g.size();
  g.index_.reserve(static_cast<size_t>(size) * 2);
  for (int32_t i = 0; i < size; ++i) {
    auto [it, inserted] = g.index_.emplace(g.elems_[i], i);
    if (!inserted) throw std::invalid_argument("duplicate group element");
  }

  if (size <= kMultTableCap) {
    g.mult_.resize(static_cast<size_t>(size) * size);
    for (int32_t a = 0; a < size; ++a)
      for (int32_t b = 0; b < size; ++b) {
        auto it = g.index_.find(mat_mul(g.elems_[a], g.elems_[b]));
        if (it == g.index_.end())
          throw std::invalid_argument("element set is not closed");
        g.mult_[static_cast<size_t>(a) * size + b] = it->second;
      }
  }

  g.inv_.assign(static_cast<size_t>(size), -1);
  for (int32_t a = 0; a < size; ++a) {
    if (g.inv_[a] >= 0) continue;
    if (g.has_mult_table()) {
      for (int32_t b = 0; b < size; ++b)
        if (g.mul(a, b) == 0) {
          g.inv_[a] = b;
          g.inv_[b] = a;
          break;
        }
    } else {
      auto it = g.index_.find(mat_inv(g.elems_[a]));
      if (it == g.index_.end())
        throw std::invalid_argument("element set is not closed under inverse");
      g.inv_[a] = it->second;
      g.inv_[it->second] = a;
    }
    if (g.inv_[a] < 0) throw std::invalid_argument("no inverse found");
  }

  if (size <= 4096) {
    g.order_.assign(static_cast<size_t>(size), 0);
    for (int32_t a = 0; a < size; ++a) {
      int32_t x = a, ord = 1;
      while (x != 0) {
        x = g.mul(x, a);
        ++ord;
      }
      g.order_[a] = ord;
    }
  }
  return g;
}

std::vector<Mat> Group::generators() const {
  std::vector<Mat> out;
  out.reserve(gens_.size());
  for (int32_t id : gens_) out.push_back(elems_[id]);
  return out;
}

int32_t Group::id_of(const Mat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int32_t Group::mul(int32_t a, int32_t b) const {
  if (!mult_.empty()) return mult_[static_cast<size_t>(a) * size() + b];
  auto it = index_.find(mat_mul(elems_[a], elems_[b]));
  if (it == index_.end()) throw std::logic_error("group not closed");
  return it->second;
}

int32_t Group::order_of(int32_t a) const {
  if (!order_.empty()) return order_[a];
  int32_t x = a, ord = 1;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::optional<Group> close(int32_t p, int32_t n,
                           const std::vector<Mat>& generators, int64_t cap) {
  if (cap < 1 || cap > kCloseCapMax)
    throw std::invalid_argument("closure cap out of range");
  for (const auto& g : generators) {
    if (g.p() != p || g.n() != n)
      throw std::invalid_argument("generator shape/modulus mismatch");
    if (!mat_invertible(g)) throw std::invalid_argument("singular generator");
  }

  std::vector<Mat> elems = {Mat::identity(p, n)};
  std::unordered_map<Mat, int32_t, linalg::MatHash> index;
  index.emplace(elems[0], 0);
  auto push = [&](const Mat& m) -> bool {
    if (index.contains(m)) return false;
    index.emplace(m, static_cast<int32_t>(elems.size()));
    elems.push_back(m);
    return true;
  };

  std::vector<int32_t> gen_ids;
  std::vector<Mat> active;  // generators incorporated so far
  for (const auto& gen : generators) {
    if (index.contains(gen)) {
      active.push_back(gen);
      continue;
    }
    if (active.empty()) {
      // First nontrivial generator: plain cyclic group.
      Mat x = gen;
      while (!x.is_identity()) {
        if (static_cast<int64_t>(elems.size()) + 1 > cap) return std::nullopt;
        push(x);
        x = mat_mul(x, gen);
      }
      active.push_back(gen);
      continue;
    }
    // Dimino step: extend the current group H by a new generator. The new
    // group is a union of cosets H*r; right-multiplying coset representatives
    // by the active generators reaches every coset.
    active.push_back(gen);
    const int64_t h_size = static_cast<int64_t>(elems.size());
    std::vector<Mat> reps = {gen};
    if (h_size + h_size > cap) return std::nullopt;
    for (int64_t i = 0; i < h_size; ++i) push(mat_mul(elems[i], gen));
    for (size_t ri = 0; ri < reps.size(); ++ri) {
      Mat rep = reps[ri];
      for (const auto& s : active) {
        Mat t = mat_mul(rep, s);
        if (index.contains(t)) continue;
        if (static_cast<int64_t>(elems.size()) + h_size > cap)
          return std::nullopt;
        for (int64_t i = 0; i < h_size; ++i) push(mat_mul(elems[i], t));
        reps.push_back(t);
      }
    }
  }

  for (const auto& gen : generators) gen_ids.push_back(index.at(gen));
  return Group::from_elements(p, n, std::move(elems), std::move(gen_ids));
}

bool SubgroupRef::contains(int32_t id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

SubgroupRef whole_group(const Group& g) {
  SubgroupRef s{&g, {}};
  s.ids.resize(static_cast<size_t>(g.size()));
  std::iota(s.ids.begin(), s.ids.end(), 0);
  return s;
}

SubgroupRef cyclic_subgroup(const Group& g, int32_t gid) {
  std::vector<int32_t> ids = {0};
  int32_t x = gid;
  while (x != 0) {
    ids.push_back(x);
    x = g.mul(x, gid);
  }
  std::sort(ids.begin(), ids.end());
  return SubgroupRef{&g, std::move(ids)};
}

SubgroupRef subgroup_closure(const Group& g, std::vector<int32_t> seed_ids) {
  std::vector<bool> seen(static_cast<size_t>(g.size()), false);
  seen[0] = true;
  std::vector<int32_t> members = {0};
  std::vector<int32_t> queue = {0};
  std::vector<int32_t> gens;
  for (int32_t s : seed_ids)
    if (!seen[s]) {
      seen[s] = true;
      members.push_back(s);
      queue.push_back(s);
      gens.push_back(s);
    }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int32_t x = queue[qi];
    for (int32_t s : gens) {
      int32_t y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubgroupRef{&g, std::move(members)};
}

SubgroupRef center(const Group& g) {
  std::vector<int32_t> ids;
  const auto& gens = g.generator_ids();
  for (int32_t a = 0; a < g.size(); ++a) {
    bool central = true;
    // Commuting with every generator is commuting with everything.
    for (int32_t s : gens)
      if (g.mul(a, s) != g.mul(s, a)) {
        central = false;
        break;
      }
    if (central) ids.push_back(a);
  }
  return SubgroupRef{&g, std::move(ids)};
}

SubgroupRef derived_subgroup(const Group& g) {
  if (g.size() > 4096)
    throw std::invalid_argument("derived subgroup capped at order 4096");
  std::set<int32_t> comms;
  for (int32_t a = 0; a < g.size(); ++a)
    for (int32_t b = 0; b < g.size(); ++b) {
      int32_t c =
          g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
      comms.insert(c);
    }
  return subgroup_closure(g, {comms.begin(), comms.end()});
}

int64_t exponent(const Group& g) {
  int64_t e = 1;
  for (int32_t a = 0; a < g.size(); ++a)
    e = std::lcm(e, static_cast<int64_t>(g.order_of(a)));
  return e;
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generator_ids();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_abelian(const SubgroupRef& s) {
  for (size_t i = 0; i < s.ids.size(); ++i)
    for (size_t j = i + 1; j < s.ids.size(); ++j)
      if (s.parent->mul(s.ids[i], s.ids[j]) !=
          s.parent->mul(s.ids[j], s.ids[i]))
        return false;
  return true;
}

bool is_cyclic(const SubgroupRef& s) {
  for (int32_t id : s.ids)
    if (s.parent->order_of(id) == s.order()) return true;
  return false;
}

bool is_elementary_abelian_2(const SubgroupRef& s) {
  for (int32_t id : s.ids)
    if (s.parent->order_of(id) > 2) return false;
  return true;
}

std::vector<SubgroupRef> minimal_subgroups(const Group& g) {
  std::set<std::vector<int32_t>> seen;
  std::vector<SubgroupRef> out;
  for (int32_t a = 1; a < g.size(); ++a) {
    if (!is_prime(g.order_of(a))) continue;
    SubgroupRef s = cyclic_subgroup(g, a);
    if (seen.insert(s.ids).second) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.ids < b.ids;
  });
  return out;
}

int64_t count_prime_order_subgroups(const Group& g, int64_t r) {
  if (!is_prime(r)) throw std::invalid_argument("r must be prime");
  if (g.size() % r != 0) return 0;
  int64_t elements_of_order_r = 0;
  for (int32_t a = 1; a < g.size(); ++a)
    if (g.order_of(a) == r) ++elements_of_order_r;
  int64_t count = elements_of_order_r / (r - 1);
  // Frobenius' extension of Sylow's theorem.
  if (count % r != 1)
    throw InternalCheckError("prime-order subgroup count violates the "
                             "Frobenius congruence");
  return count;
}

std::vector<SubgroupRef> index_two_subgroups(const Group& g) {
  // Index-2 subgroups all contain K = G' G^2; they are the preimages of the
  // hyperplanes of the elementary abelian quotient G/K.
  std::set<int32_t> seed;
  for (int32_t a = 0; a < g.size(); ++a) seed.insert(g.mul(a, a));
  for (int32_t a = 0; a < g.size(); ++a)
    for (int32_t b = 0; b < g.size(); ++b)
      seed.insert(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  SubgroupRef k = subgroup_closure(g, {seed.begin(), seed.end()});
  if (k.order() == g.size()) return {};

  // Label each element with its coset and give the cosets an F_2 basis.
  std::vector<int32_t> coset_of(static_cast<size_t>(g.size()), -1);
  std::vector<int32_t> coset_rep;
  for (int32_t a = 0; a < g.size(); ++a) {
    if (coset_of[a] >= 0) continue;
    int32_t c = static_cast<int32_t>(coset_rep.size());
    coset_rep.push_back(a);
    for (int32_t x : k.ids) coset_of[g.mul(x, a)] = c;
  }
  const int32_t num_cosets = static_cast<int32_t>(coset_rep.size());
  std::vector<int32_t> label(static_cast<size_t>(num_cosets), -1);
  label[coset_of[0]] = 0;
  std::vector<int32_t> labeled = {coset_of[0]};
  int rank = 0;
  for (int32_t c = 0; c < num_cosets; ++c) {
    if (label[c] >= 0) continue;
    int bit = 1 << rank++;
    size_t known = labeled.size();
    for (size_t i = 0; i < known; ++i) {
      int32_t lc = labeled[i];
      int32_t prod = coset_of[g.mul(coset_rep[lc], coset_rep[c])];
      label[prod] = label[lc] | bit;
      labeled.push_back(prod);
    }
  }

  std::vector<SubgroupRef> out;
  for (int32_t chi = 1; chi < (1 << rank); ++chi) {
    std::vector<int32_t> ids;
    for (int32_t a = 0; a < g.size(); ++a)
      if (std::popcount(static_cast<uint32_t>(label[coset_of[a]] & chi)) % 2 ==
          0)
        ids.push_back(a);
    out.push_back(SubgroupRef{&g, std::move(ids)});
  }
  std::sort(out.begin(), out.end(),
            [](const SubgroupRef& a, const SubgroupRef& b) { return a.ids < b.ids; });
  return out;
}

Fingerprint fingerprint(const Group& g) {
  Fingerprint f;
  f.order = g.size();
  for (int32_t a = 0; a < g.size(); ++a) f.order_counts[g.order_of(a)]++;
  f.center_order = center(g).order();
  f.derived_order = derived_subgroup(g).order();
  f.exponent = exponent(g);
  return f;
}

}  // namespace regorb::group
