#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regulus/common.hpp"

namespace regulus {

/// Raw ring data before validation. `add` and `mul` are order*order tables of
/// element indices in row-major order: table[a*order + b] is a op b.
/// Index 0 must be the additive identity.
struct RingTables {
  int order = 0;
  std::vector<Idx> add;
  std::vector<Idx> mul;
  std::vector<std::string> labels;  // optional; defaulted to "0".."n-1"
};

/// Outcome of an exhaustive axiom scan.
/// `kind` distinguishes malformed tables from genuine axiom failures.
struct AxiomReport {
  enum class Kind { pass, structural, axiom };
  Kind kind = Kind::pass;
  std::string clause;         // name of the violated clause, empty on pass
  std::vector<Idx> witness;   // elements exhibiting the violation
  std::string detail;

  bool ok() const { return kind == Kind::pass; }
};

/// Exhaustively checks the ring axioms on candidate tables: abelian group
/// under +, associative unital *, both distributive laws, index 0 the
/// additive identity. Reports the first violation in deterministic scan
/// order.
AxiomReport check_ring_axioms(const RingTables& t);

/// Immutable unital finite ring given by full addition and multiplication
/// tables. Construction performs structural validation and locates the
/// identity; use check_ring_axioms for a full axiom scan.
class FiniteRing {
 public:
  explicit FiniteRing(RingTables t);

  int order() const { return order_; }
  Idx zero() const { return 0; }
  Idx one() const { return one_; }
  Idx add(Idx a, Idx b) const { return detail::at(add_, order_, a, b); }
  Idx mul(Idx a, Idx b) const { return detail::at(mul_, order_, a, b); }
  Idx neg(Idx a) const { return neg_[a]; }
  Idx sub(Idx a, Idx b) const { return add(a, neg_[b]); }

  const std::string& label(Idx a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Idx>& add_table() const { return add_; }
  const std::vector<Idx>& mul_table() const { return mul_; }

  /// Smallest k >= 1 with k*a = 0.
  int additive_order(Idx a) const;

  RingTables tables() const { return RingTables{order_, add_, mul_, labels_}; }

 private:
  int order_;
  std::vector<Idx> add_;
  std::vector<Idx> mul_;
  std::vector<std::string> labels_;
  std::vector<Idx> neg_;
  Idx one_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Tables equal (labels ignored).
bool structurally_equal(const FiniteRing& a, const FiniteRing& b);

/// Same object or structurally equal.
bool same_ring(const RingPtr& a, const RingPtr& b);

bool is_commutative(const FiniteRing& r);

/// Z/n with representatives 0..n-1. n >= 1; n = 1 is the zero ring.
RingPtr cyclic_ring(int n, const Caps& caps = {});

/// Componentwise product R1 x R2; element (a, b) has index a*|R2| + b.
RingPtr product_ring(const RingPtr& r1, const RingPtr& r2,
                     const Caps& caps = {});

/// Translates between element indices of a constructed ring and coefficient
/// vectors over the base ring (matrix entries in row-major order, or group
/// ring coefficients indexed by group element). Index = sum of
/// digit[i] * base^i, a mixed-radix encoding with digit 0 least significant.
struct VectorCodec {
  int base = 0;    // order of the coefficient ring
  int length = 0;  // number of digits

  Idx encode(const std::vector<Idx>& digits) const;
  std::vector<Idx> decode(Idx v) const;
};

struct MatrixRing {
  RingPtr ring;
  VectorCodec codec;  // n*n entries, row-major
  int n = 0;
};

/// n x n matrices over R. Order |R|^(n*n); refused above caps.ring_order.
MatrixRing matrix_ring(const RingPtr& r, int n, const Caps& caps = {});

/// Finite group as a full multiplication table; identity at index 0.
struct GroupTables {
  int order = 0;
  std::vector<Idx> mul;
  std::vector<std::string> labels;
};

AxiomReport check_group_axioms(const GroupTables& t);

class FiniteGroup {
 public:
  explicit FiniteGroup(GroupTables t);
  int order() const { return order_; }
  Idx identity() const { return 0; }
  Idx mul(Idx a, Idx b) const { return detail::at(mul_, order_, a, b); }
  Idx inverse(Idx a) const { return inv_[a]; }
  const std::string& label(Idx a) const { return labels_[a]; }

 private:
  int order_;
  std::vector<Idx> mul_;
  std::vector<std::string> labels_;
  std::vector<Idx> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic_group(int n);
GroupPtr klein_four_group();
/// Permutations of {1..n} in lexicographic one-line order; identity first.
GroupPtr symmetric_group(int n);

struct GroupRing {
  RingPtr ring;
  VectorCodec codec;  // coefficients indexed by group element
};

/// Group ring R[G]: formal sums of group elements with coefficients in R.
GroupRing group_ring(const RingPtr& r, const GroupPtr& g,
                     const Caps& caps = {});

/// Same carrier and addition, multiplication reversed.
RingPtr opposite_ring(const RingPtr& r);

/// All e with e*e = e, ascending. Always contains 0 and 1.
std::vector<Idx> idempotents(const FiniteRing& r);

/// All tuples (e_1..e_k) of pairwise orthogonal idempotents summing to 1,
/// enumerated in ascending lexicographic order.
std::vector<std::vector<Idx>> complete_orthogonal_families(const FiniteRing& r,
                                                           int k);

struct CornerRing {
  RingPtr ring;
  std::vector<Idx> carrier;  // new index -> index in the parent ring
};

/// eRe with unit e, for idempotent e. Carrier listed ascending, so the
/// parent's zero stays at index 0.
CornerRing corner_ring(const RingPtr& r, Idx e);

/// Searches for a ring isomorphism by assigning images to a minimal additive
/// generating set, with additive-order and partial-homomorphism pruning.
/// Returns the full element map of the first (lexicographically least)
/// witness, or nullopt after exhausting the search space.
std::optional<std::vector<Idx>> find_ring_isomorphism(const FiniteRing& a,
                                                      const FiniteRing& b);

/// Multiset of prime-power cyclic factors of the additive group, ascending.
std::vector<int> additive_invariants(int order, const std::vector<Idx>& add);

namespace detail {
/// Greedy minimal additive generating set: repeatedly adjoin the least
/// element outside the current additive span.
std::vector<Idx> additive_generators(int order, const std::vector<Idx>& add);
}  // namespace detail

}  // namespace regulus
