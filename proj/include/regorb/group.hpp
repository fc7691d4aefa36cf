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

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "regorb/linalg.hpp"

// Fully enumerated matrix groups: Dimino closure from generators, structural
// subgroups, minimal subgroups, isomorphism testing with explicit witnesses,
// shape recognition, and bounded enumeration of subgroups of GL(n, p).

namespace regorb::group {

inline constexpr int64_t kCloseCapMax = 20160;
inline constexpr int64_t kMultTableCap = 512;
inline constexpr int64_t kIsoCap = 64;
inline constexpr int64_t kShapeCap = 512;

/// An enumerated matrix group. Element 0 is always the identity. Immutable
/// after construction; all queries are const and safe to share.
class Group {
 public:
  static Group from_elements(int32_t p, int32_t n,
                             std::vector<linalg::Mat> elements,
                             std::vector<int32_t> generator_ids);

  int32_t p() const { return p_; }
  int32_t n() const { return n_; }
  int64_t size() const { return static_cast<int64_t>(elems_.size()); }
  const std::vector<linalg::Mat>& elements() const { return elems_; }
  const linalg::Mat& element(int32_t id) const { return elems_[id]; }
  const std::vector<int32_t>& generator_ids() const { return gens_; }
  std::vector<linalg::Mat> generators() const;

  /// Id of a matrix, or -1 when it is not an element.
  int32_t id_of(const linalg::Mat& m) const;
  bool contains(const linalg::Mat& m) const { return id_of(m) >= 0; }

  int32_t mul(int32_t a, int32_t b) const;
  int32_t inverse(int32_t a) const { return inv_[a]; }
  int32_t order_of(int32_t a) const;
  bool has_mult_table() const { return !mult_.empty(); }

 private:
  Group() = default;

  int32_t p_ = 0, n_ = 0;
  std::vector<linalg::Mat> elems_;
  std::unordered_map<linalg::Mat, int32_t, linalg::MatHash> index_;
  std::vector<int32_t> gens_;
  std::vector<int32_t> inv_;
  std::vector<int32_t> order_;  // filled for groups up to 4096 elements
  std::vector<int32_t> mult_;   // |G| x |G| table for |G| <= kMultTableCap
};

/// Closure of the generators by Dimino's inductive coset algorithm.
/// Returns nullopt as soon as the group would exceed cap (a normal outcome
/// for bounded enumeration). Throws on a singular generator.
std::optional<Group> close(int32_t p, int32_t n,
                           const std::vector<linalg::Mat>& generators,
                           int64_t cap);

/// Subgroup as a sorted id list into a parent group; always contains id 0.
struct SubgroupRef {
  const Group* parent = nullptr;
  std::vector<int32_t> ids;

  int64_t order() const { return static_cast<int64_t>(ids.size()); }
  bool contains(int32_t id) const;
};

SubgroupRef whole_group(const Group& g);
SubgroupRef cyclic_subgroup(const Group& g, int32_t gid);
/// Closure of the given ids under the parent multiplication.
SubgroupRef subgroup_closure(const Group& g, std::vector<int32_t> seed_ids);

SubgroupRef center(const Group& g);
SubgroupRef derived_subgroup(const Group& g);
int64_t exponent(const Group& g);
bool is_abelian(const Group& g);
bool is_abelian(const SubgroupRef& s);
bool is_cyclic(const SubgroupRef& s);
/// Largest exponent-dividing-2 check: every element squares to the identity.
bool is_elementary_abelian_2(const SubgroupRef& s);

/// All subgroups of prime order, each reported once, sorted by
/// (order, id set). These are exactly the minimal subgroups.
std::vector<SubgroupRef> minimal_subgroups(const Group& g);

/// Number of subgroups of prime order r; 0 when r does not divide |G|.
/// Whenever r divides |G| the Frobenius congruence count = 1 (mod r) is
/// asserted, not assumed.
int64_t count_prime_order_subgroups(const Group& g, int64_t r);

/// All index-2 subgroups, via hyperplanes of G / (G' G^2).
std::vector<SubgroupRef> index_two_subgroups(const Group& g);

/// Cheap isomorphism invariants.
struct Fingerprint {
  int64_t order = 0;
  std::map<int64_t, int64_t> order_counts;  // element order -> multiplicity
  int64_t center_order = 0;
  int64_t derived_order = 0;
  int64_t exponent = 0;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Group& g);

/// Isomorphism witness: map[a-id] = b-id, a bijective homomorphism
/// (verified on the full multiplication table before being returned).
struct IsoWitness {
  std::vector<int32_t> map;
};

/// Backtracking over generator images after a fingerprint prefilter.
/// Both groups must have order <= kIsoCap.
std::optional<IsoWitness> isomorphism(const Group& a, const Group& b);
bool is_isomorphic(const Group& a, const Group& b);

enum class Shape {
  Dihedral,
  D8starC4,
  AbelianInvertedByC2,
  C2nByC2,
  C2evenByC3,
  CentralProductD8family,
  Exponent3,
  D8squaredTimesC2n,
  S3xD8xC2n,
  S3sq_S4_A5,
  None,
};

struct ShapeTag {
  Shape shape = Shape::None;
  int64_t param = 0;  // group order for Dihedral, C_2-rank style data elsewhere
  std::string str() const;
  bool operator==(const ShapeTag&) const = default;
};

/// First matching structural shape, testing the specific reference shapes
/// (dihedral, D8*C4) before the broader classification cases (i)-(viii).
/// Requires |G| <= kShapeCap.
ShapeTag recognize_shape(const Group& g);

/// Reference groups used by shape recognition and theorem tagging. All are
/// built from explicit matrix generators, never from a group database.
namespace refs {
linalg::Mat permutation_matrix(int32_t p, const std::vector<int>& images);
Group from_permutations(int32_t p, const std::vector<std::vector<int>>& perms);

/// Abstract dihedral group of the given even order >= 6, realized as
/// 2x2 matrices over the least suitable prime field.
Group dihedral(int64_t order);
Group quaternion8();
Group symmetric(int degree);        // S_3, S_4 as permutation matrices over F_7
Group alternating5();               // A_5 over F_7
Group s3_times_s3();
Group s3_times_d8();
Group elementary_abelian2(int rank);  // C_2^k, k <= 4
Group heisenberg27();               // unitriangular 3x3 over F_3, exponent 3
Group a4();                         // C_2^2 : C_3 as even permutations
Group c2_4_by_c3();                 // C_2^4 : C_3 Frobenius group, 6x6 over F_7
Group c2_3_by_c2();                 // C_2^3 : C_2 swapping two coordinates
Group d8(int64_t over_p);           // D_8 as 2x2 matrices over F_p (p odd)
Group d8_star_d8(int64_t over_p);   // central product via Kronecker, order 32
Group d8_star_c4();                 // over F_5: D_8 joined with the scalar C_4
Group cyclic(int64_t m);            // C_m as a 1x1 or 2x2 matrix group
}  // namespace refs

/// Ambient enumeration of all of GL(n, p), with ids ascending by matrix code.
/// Only built for moderate sizes (p^(n^2) <= 2^25).
class AmbientGL {
 public:
  AmbientGL(int32_t p, int32_t n);

  int32_t p() const { return p_; }
  int32_t n() const { return n_; }
  int64_t order() const { return static_cast<int64_t>(elems_.size()); }
  const linalg::Mat& element(int32_t id) const { return elems_[id]; }
  int32_t identity_id() const { return identity_; }
  int32_t id_of(const linalg::Mat& m) const;
  int32_t mul(int32_t a, int32_t b) const;
  int32_t inverse(int32_t a) const;
  /// Element order computed by powering, nullopt once it exceeds cap.
  std::optional<int64_t> order_of(int32_t a, int64_t cap) const;

 private:
  int32_t p_, n_;
  std::vector<linalg::Mat> elems_;
  std::vector<int32_t> id_by_code_;
  int32_t identity_ = -1;
};

/// Shared cache; ambient enumerations are immutable.
const AmbientGL& ambient_gl(int32_t p, int32_t n);

/// Subgroup of an ambient GL as a sorted ambient-id set.
struct IdSubgroup {
  std::vector<int32_t> ids;   // sorted, includes the identity
  std::vector<int32_t> gens;  // ambient ids of a generating set
  int64_t order() const { return static_cast<int64_t>(ids.size()); }
};

/// Every subgroup of GL(n,p) of order <= bound (optionally with order coprime
/// to coprime_to), found by seeding with all cyclic subgroups and closing
/// under joins with cyclic subgroups. Deterministic output, sorted by
/// (order, id set). Any subgroup H with |H| <= bound is a join of its cyclic
/// subgroups through intermediate joins inside H, so the fixpoint is complete.
std::vector<IdSubgroup> enumerate_bounded_subgroups(const AmbientGL& amb,
                                                    int64_t bound,
                                                    int64_t coprime_to = 0);

/// Builds a Group (identity first, then ascending ambient id) from an
/// enumerated id set.
Group materialize(const AmbientGL& amb, const IdSubgroup& sub);

}  // namespace regorb::group
