#pragma once

#include "regulus/regularity.hpp"

namespace regulus {

/// Unital embedding of a small ring into a big one, as an index map.
struct RingEmbedding {
  RingPtr small;
  RingPtr big;
  std::vector<Idx> map;  // length |small|, values are big-ring indices
};

/// Basis elements a_1..a_n of the big ring, a_1 = 1, each normalizing the
/// embedded subring (a_i R = R a_i as sets) and jointly free: both
/// coefficient maps R^n -> S, (r_i) |-> sum a_i r_i and
/// (r_i) |-> sum r_i a_i, are bijections.
struct NormalizingBasis {
  std::vector<Idx> elements;
  int size() const { return static_cast<int>(elements.size()); }
};

/// Whether the big ring is known to split off restricted submodules
/// (the hypothesis separating merely free normalizing extensions from
/// excellent ones). Never silently claimed: either it holds by the shape
/// of the construction, or a bounded family was checked, or nothing is
/// known.
enum class ProjectivityStatus {
  AssumedByConstruction,
  BoundedChecked,
  Unchecked,
};

const char* to_string(ProjectivityStatus s);

struct ExtensionDescriptor {
  RingEmbedding embedding;
  NormalizingBasis basis;
  ProjectivityStatus projectivity = ProjectivityStatus::Unchecked;
};

/// Exhaustive check of every embedding and basis invariant. Failure names
/// the clause ("embedding-injective", "a1-is-one", "normalizing",
/// "left-coefficient-freeness", ...) and a witness tuple.
AxiomReport verify_free_normalizing(const RingEmbedding& embedding,
                                    const NormalizingBasis& basis);
AxiomReport verify_free_normalizing(const ExtensionDescriptor& d);

/// R embedded in the n x n matrix ring as scalar matrices. Basis: the
/// identity matrix followed by the off-(1,1) matrix units; the identity
/// replaces e_11 so the first basis element is 1, and the swap keeps both
/// coefficient maps bijective.
ExtensionDescriptor matrix_extension(const RingPtr& r, int n,
                                     const Caps& caps = {});

/// R embedded in the group ring R[G] as coefficients of the identity;
/// basis = the group elements. Splitting is assumed only when |G| is
/// invertible in R; otherwise the descriptor is usable but unchecked.
ExtensionDescriptor group_ring_extension(const RingPtr& r, const GroupPtr& g,
                                         const Caps& caps = {});

/// Same carrier and addition, action pulled back through the embedding.
ModulePtr restrict_scalars(const ExtensionDescriptor& d, const ModulePtr& m);

/// Unique tuple (s_1..s_n) with s = sum iota(s_i) a_i.
std::vector<Idx> basis_coordinates(const ExtensionDescriptor& d, Idx s);

/// All coordinate tuples at once: row s holds basis_coordinates(d, s).
std::vector<std::vector<Idx>> coordinate_table(const ExtensionDescriptor& d);

/// Bounded probe of the splitting hypothesis: for each big-ring module M
/// in the family and each of its submodules N, if N restricted is a
/// summand of M restricted then N must already be a summand of M. An
/// empty family list means the default family {S, S + S within caps}.
struct ProjectivityCheckReport {
  bool passed = false;
  int modules_checked = 0;
  int submodules_checked = 0;
  // set when a violation was found
  std::optional<int> failing_module;     // index into the checked family
  std::optional<Submodule> failing_submodule;
};

ProjectivityCheckReport left_projectivity_bounded_check(
    ExtensionDescriptor& d, const std::vector<ModulePtr>& family = {},
    const Caps& caps = {});

/// True when, for every m and every s, s*m = 0 forces each basis-line
/// contribution iota(s_i) a_i * m to vanish on its own. This is exactly
/// the condition making cyclic big-ring submodules split into basis lines.
struct TorsionFreeReport {
  bool torsion_free = false;
  // counterexample: s*m = 0 but line i survives
  std::optional<Idx> elem;
  Idx annihilator = 0;
  std::vector<Idx> coeffs;
  int line = -1;
};

TorsionFreeReport basis_torsion_free(const ExtensionDescriptor& d,
                                     const ModulePtr& m);

/// Verifies S*m = (+) R a_i m: the basis-line pieces meet trivially and
/// jointly cover the cyclic big-ring submodule.
struct CyclicDecomposition {
  bool direct = false;
  bool spans = false;
  bool ok() const { return direct && spans; }
  std::vector<std::vector<Idx>> pieces;  // element sets of R a_i m
  std::vector<Idx> total;                // sorted element set of S m
};

CyclicDecomposition decompose_cyclic(const ExtensionDescriptor& d,
                                     const ModulePtr& m, Idx x);

/// Regularity transfer along the extension, both directions: p = regular
/// after restriction, q = regular over the big ring, t = basis torsion
/// freeness. Asserts p => q and (q and t) => p. Only probative when the
/// splitting hypothesis is not Unchecked.
struct Theorem22Report {
  bool p = false;
  bool q = false;
  bool t = false;
  bool p_implies_q = false;
  bool qt_implies_p = false;
  bool probative = false;
  bool ok() const { return p_implies_q && qt_implies_p; }
};

Theorem22Report verify_theorem_2_2(const ExtensionDescriptor& d,
                                   const ModulePtr& m, const Caps& caps = {});

/// Elementwise regularity transfers both ways between the small and big
/// ring. Additionally replays the witness projection: for each small r
/// with big-ring witness s, the first coordinate s_1 of s must already
/// satisfy r = r s_1 r downstairs.
struct Corollary23Report {
  bool small_regular = false;
  bool big_regular = false;
  bool verdicts_agree = false;
  bool projections_ok = false;
  std::optional<Idx> projection_failure;  // small-ring element
  bool probative = false;
  bool ok() const { return verdicts_agree && projections_ok; }
};

Corollary23Report verify_corollary_2_3(const ExtensionDescriptor& d,
                                       const Caps& caps = {});

}  // namespace regulus
