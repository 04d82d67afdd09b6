#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regulus/finring.hpp"

namespace regulus {

/// Raw left-module data before validation. `add` is order*order, `act` is
/// |ring|*order with act[r*order + m] = r.m. Index 0 must be the zero
/// element.
struct ModuleTables {
  RingPtr ring;
  int order = 0;
  std::vector<Idx> add;
  std::vector<Idx> act;
  std::vector<std::string> labels;
};

/// Exhaustively checks the left-module axioms: abelian group under +,
/// (r+r')m = rm+r'm, r(m+m') = rm+rm', (rr')m = r(r'm), 1m = m.
AxiomReport check_module_axioms(const ModuleTables& t);

/// Immutable finite left module over a FiniteRing, given by full tables.
class FiniteModule {
 public:
  explicit FiniteModule(ModuleTables t);

  const RingPtr& ring() const { return ring_; }
  int order() const { return order_; }
  Idx zero() const { return 0; }
  Idx add(Idx a, Idx b) const { return detail::at(add_, order_, a, b); }
  Idx act(Idx r, Idx m) const { return detail::at(act_, order_, r, m); }
  Idx neg(Idx a) const { return neg_[a]; }
  const std::string& label(Idx a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Idx>& add_table() const { return add_; }
  const std::vector<Idx>& act_table() const { return act_; }
  int additive_order(Idx a) const;

 private:
  RingPtr ring_;
  int order_;
  std::vector<Idx> add_;
  std::vector<Idx> act_;
  std::vector<std::string> labels_;
  std::vector<Idx> neg_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

bool same_module(const ModulePtr& a, const ModulePtr& b);

/// Module homomorphism as a full value table on the source.
struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Idx> map;

  Idx operator()(Idx x) const { return map[x]; }
};

/// Exhaustive check that `map` is additive and commutes with the action.
bool hom_is_valid(const ModuleHom& f);

ModuleHom identity_hom(const ModulePtr& m);
ModuleHom zero_hom(const ModulePtr& source, const ModulePtr& target);
/// outer o inner; inner.target and outer.source must agree.
ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner);

/// Subset of a module closed under addition and the action; elements sorted
/// ascending and always containing 0.
struct Submodule {
  ModulePtr parent;
  std::vector<Idx> elements;

  bool contains(Idx x) const;
  int order() const { return static_cast<int>(elements.size()); }
};

/// R as a left module over itself.
ModulePtr regular_left_module(const RingPtr& r);
ModulePtr zero_module(const RingPtr& r);

/// Biproduct with its canonical injections and projections. Element (a, b)
/// has index a*|M2| + b.
struct DirectSum {
  ModulePtr module;
  ModuleHom inj1, inj2, proj1, proj2;
};
DirectSum direct_sum(const ModulePtr& m1, const ModulePtr& m2);

/// Iterated direct sum of k copies of the regular module; k = 0 gives the
/// zero module.
ModulePtr free_module(const RingPtr& r, int k);

/// Greedy minimal generating sequence: repeatedly adjoin the least element
/// outside the span. Empty for the zero module.
std::vector<Idx> minimal_generators(const FiniteModule& m);

/// Smallest submodule containing the given elements.
Submodule submodule_span(const ModulePtr& m, const std::vector<Idx>& gens);

/// All homomorphisms source -> target, sorted by value-table lexicographic
/// order. Enumerates images of a minimal generating set and extends by
/// linearity; candidates that fail well-definedness are discarded.
/// Throws CapError when either module exceeds caps.module_order and
/// BudgetError when |target|^#generators exceeds caps.hom_budget.
std::vector<ModuleHom> enumerate_homs(const ModulePtr& source,
                                      const ModulePtr& target,
                                      const Caps& caps = {});

Submodule kernel(const ModuleHom& f);
Submodule image(const ModuleHom& f);
/// Rm = {r.m : r in R}; closed under addition since rm + r'm = (r+r')m.
Submodule cyclic_submodule(const ModulePtr& m, Idx x);

/// A submodule repackaged as a standalone module, with the inclusion map.
struct ExtractedModule {
  ModulePtr module;
  std::vector<Idx> carrier;  // new index -> parent index
  ModuleHom inclusion;
};
ExtractedModule submodule_as_module(const Submodule& n);

/// M/N with each coset indexed by its least member, ascending, so the coset
/// of 0 sits at index 0. `projection` is the canonical surjection.
struct QuotientModule {
  ModulePtr module;
  std::vector<Idx> representative;  // new index -> least element of the coset
  ModuleHom projection;
};
QuotientModule quotient_module(const Submodule& n);

/// Witness that N is (or is not) a direct summand: an idempotent
/// endomorphism of the parent with image exactly N. The search scans
/// enumerate_homs(M, M) in canonical order, so a success returns the least
/// such idempotent and a failure is exhaustive.
struct SummandCertificate {
  bool is_summand = false;
  std::optional<ModuleHom> idempotent;
};
SummandCertificate is_direct_summand(const Submodule& n, const Caps& caps = {});

/// Same search over a caller-supplied endomorphism list (must be
/// enumerate_homs(M, M) in canonical order); avoids re-enumeration in loops.
SummandCertificate is_direct_summand(const Submodule& n,
                                     const std::vector<ModuleHom>& endos);

/// Independent summand oracle: searches for a complement submodule C with
/// N intersect C = 0 and |N||C| = |M|, trying spans of at most three
/// generators first and falling back to the full submodule lattice.
std::optional<Submodule> find_complement(const Submodule& n);

/// Every submodule, sorted by (order, elements). Parent must be within
/// caps.module_order.
std::vector<Submodule> all_submodules(const ModulePtr& m,
                                      const Caps& caps = {});

/// Backtracking search for a module isomorphism (same ring on both sides),
/// assigning images to a minimal generating set. Returns the first witness
/// in ascending order.
std::optional<ModuleHom> find_module_isomorphism(const ModulePtr& a,
                                                 const ModulePtr& b);

namespace detail {

/// Derivation of every module element from a generating sequence, for
/// replaying candidate homomorphisms. Steps are applied in order; each
/// step defines one new element.
struct SpanProgram {
  enum class Op { gen, add, act };
  struct Step {
    Op op;
    Idx elem;  // element being defined
    Idx a;     // gen: generator position; add: left operand; act: ring elt
    Idx b;     // add: right operand; act: operand
  };
  std::vector<Step> steps;
  int covered = 0;  // number of elements reachable (including 0)
};

SpanProgram build_span_program(const FiniteModule& m,
                               const std::vector<Idx>& gens);

}  // namespace detail

}  // namespace regulus
