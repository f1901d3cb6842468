#pragma once

#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "mixsurf/error.hpp"

namespace mixsurf {

// Finite group on dense element indices 0..order()-1 with a full Cayley
// table. The identity is always element 0 (relabeled at construction).
// Copying is cheap: the table is shared and immutable.
class FiniteGroup {
public:
  FiniteGroup() = default;

  int order() const { return data_->order; }
  int mul(int a, int b) const { return data_->table[a * data_->order + b]; }
  int inv(int a) const { return data_->inverse[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int x) const;
  bool is_abelian() const;

  // Identity of the underlying table object, not isomorphism.
  bool same_group(const FiniteGroup& other) const { return data_ == other.data_; }

  // Non-empty only for groups built from permutation generators: element
  // index -> permutation (0-based image list).
  const std::vector<std::vector<int>>& permutation_labels() const {
    return data_->perm_labels;
  }

  // Element index of a permutation label, or -1.
  int element_of_permutation(const std::vector<int>& images0) const;

private:
  struct Data {
    int order = 1;
    std::vector<int> table{0};
    std::vector<int> inverse{0};
    std::vector<std::vector<int>> perm_labels;
  };
  std::shared_ptr<const Data> data_ = trivial_data();

  static std::shared_ptr<const Data> trivial_data();
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  friend FiniteGroup detail_make_group(std::vector<int> table, int order,
                                       std::vector<std::vector<int>> perm_labels);
};

// A subgroup, kept as a sorted member list inside a fixed parent group.
// Equality is member-set equality within the same parent.
struct SubgroupRef {
  FiniteGroup parent;
  std::vector<int> members;  // sorted, contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int element) const;
  int index_of(int element) const;  // position in members, -1 if absent

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) {
    return a.parent.same_group(b.parent) && a.members == b.members;
  }
};

// Group homomorphism as a dense element map; the factory verifies
// image[a*b] == image[a]*image[b] over all pairs.
struct GroupHom {
  FiniteGroup domain;
  FiniteGroup codomain;
  std::vector<int> image;

  int operator()(int a) const { return image[a]; }
};

// The group G0(2) of order 2*|G0|^2: pairs (a,b) acting coordinate-wise with
// an adjoined factor swap. Element (a,b;eps) has index eps*n^2 + a*n + b.
struct SquareExtension {
  FiniteGroup base;   // G0
  FiniteGroup group;  // order 2*|base|^2

  int encode(int a, int b, int eps) const {
    const int n = base.order();
    return eps * n * n + a * n + b;
  }
  std::tuple<int, int, int> decode(int index) const {
    const int n = base.order();
    const int eps = index / (n * n);
    const int rest = index % (n * n);
    return {rest / n, rest % n, eps};
  }
  int sigma() const { return encode(0, 0, 1); }
};

// A subgroup reindexed as a standalone group; to_parent maps the new dense
// indices back into the parent.
struct ReindexedGroup {
  FiniteGroup group;
  std::vector<int> to_parent;
};

// ---- construction -----------------------------------------------------

// Validates the table (Latin square, identity, inverses, associativity) and
// relabels the identity to index 0. If input_to_normalized is given it
// receives the relabeling applied to the input indices.
FiniteGroup group_from_cayley(const std::vector<std::vector<int>>& table,
                              std::vector<int>* input_to_normalized = nullptr);

// Closure of permutation generators on {1..degree} (1-based image lists).
// Element 0 is the identity; each distinct non-identity generator receives
// the next indices in the order listed.
FiniteGroup group_from_permutations(int degree,
                                    const std::vector<std::vector<int>>& generators,
                                    int max_order = 20000);

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);  // (x,y) -> x*|b|+y
FiniteGroup generalized_dihedral(const FiniteGroup& abelian);  // (a;eps) -> eps*|A|+a
FiniteGroup quaternion_group();

// ---- subgroup machinery ------------------------------------------------

SubgroupRef make_subgroup(const FiniteGroup& g, std::vector<int> members);
SubgroupRef subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);
SubgroupRef normal_closure(const FiniteGroup& g, const std::vector<int>& gens);
SubgroupRef commutator_subgroup(const FiniteGroup& g, const SubgroupRef& h);
SubgroupRef center(const FiniteGroup& g);
bool is_normal_subgroup(const FiniteGroup& g, const SubgroupRef& h);
ReindexedGroup subgroup_to_group(const SubgroupRef& h);

// All subgroups of g, sorted by (order, members). Throws GroupTooLarge above
// max_order.
std::vector<SubgroupRef> all_subgroups(const FiniteGroup& g, int max_order = 64);

// Quotient by a normal subgroup: cosets ordered by minimal member, plus the
// projection homomorphism.
std::pair<FiniteGroup, GroupHom> quotient_group(const FiniteGroup& g, const SubgroupRef& n);

GroupHom make_hom(const FiniteGroup& domain, const FiniteGroup& codomain,
                  std::vector<int> image);

// ---- structure ----------------------------------------------------------

// Invariant factors f1 | f2 | ... | fk (each > 1, empty for the trivial
// group), via Smith normal form of a Cayley-graph relation matrix.
std::vector<int> abelian_invariants(const FiniteGroup& a);
std::vector<int> abelian_invariants(const SubgroupRef& a);

// True iff a is abelian of index 2 in g and the outer coset inverts it.
bool is_generalized_dihedral(const FiniteGroup& g, const SubgroupRef& a);

// Brute-force isomorphism search, order <= 16 only (GroupTooLarge above).
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// ---- the square extension ----------------------------------------------

SquareExtension build_square_extension(const FiniteGroup& g0, int max_order = 4096);

}  // namespace mixsurf
