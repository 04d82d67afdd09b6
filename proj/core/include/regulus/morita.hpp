#pragma once

#include <array>

#include "regulus/regularity.hpp"

namespace regulus {

/// Two-sided module: a left module carrier plus a right action by a second
/// ring, with the two actions commuting.
struct Bimodule {
  RingPtr left_ring;
  RingPtr right_ring;
  ModulePtr carrier;           // left module over left_ring
  std::vector<Idx> right_act;  // |carrier| x |right_ring|

  Idx right(Idx m, Idx s) const {
    return detail::at(right_act, right_ring->order(), m, s);
  }
};

AxiomReport check_bimodule(const Bimodule& b);

/// The right action repackaged as a left module over the opposite ring,
/// so one regularity engine serves both sides.
ModulePtr right_as_left_module(const Bimodule& b);

Bimodule zero_bimodule(const RingPtr& left, const RingPtr& right);

/// Rings R, S with bimodules M (R,S) and N (S,R) and balanced pairings
/// phi : M x N -> R, psi : N x M -> S satisfying the two associativity
/// identities phi(m,n)m' = m psi(n,m') and psi(n,m)n' = n phi(m,n').
struct MoritaContext {
  RingPtr r;
  RingPtr s;
  Bimodule m;
  Bimodule n;
  std::vector<Idx> phi;  // |M| x |N| -> R indices
  std::vector<Idx> psi;  // |N| x |M| -> S indices

  Idx phi_at(Idx mm, Idx nn) const {
    return detail::at(phi, n.carrier->order(), mm, nn);
  }
  Idx psi_at(Idx nn, Idx mm) const {
    return detail::at(psi, m.carrier->order(), nn, mm);
  }
};

/// Exhaustive check of every context invariant; failure names the clause
/// and the witnessing tuple.
AxiomReport check_context(const MoritaContext& ctx);

/// (R, R, R, R) with both pairings equal to ring multiplication.
MoritaContext standard_context(const RingPtr& r);

/// Zero bimodules and zero pairings over an arbitrary ring pair.
MoritaContext zero_context(const RingPtr& r, const RingPtr& s);

/// The generalized matrix ring on R x M x N x S with componentwise addition
/// and the block product
///   (r,m,n,s)(r',m',n',s') =
///     (rr' + phi(m,n'), rm' + ms', nr' + sn', psi(n,m') + ss').
/// Rejects contexts failing check_context (the product would not be
/// associative). The corner idempotent is (1,0,0,0).
struct ContextRing {
  RingPtr ring;
  Idx corner = 0;  // (1,0,0,0)
  int r_order = 0, m_order = 0, n_order = 0, s_order = 0;

  Idx encode(Idx r, Idx m, Idx n, Idx s) const;
  struct Parts {
    Idx r, m, n, s;
  };
  Parts decode(Idx t) const;
};

ContextRing context_ring(const MoritaContext& ctx, const Caps& caps = {});

/// Both pairings hit additive generating sets: the additive closure of the
/// phi values is all of R and the psi values close to all of S.
bool is_strict(const MoritaContext& ctx);

/// The block-idempotent criterion for von Neumann regularity: given a
/// complete orthogonal idempotent family e_1..e_k, the ring is regular
/// exactly when every x in e_i R e_j admits y in e_j R e_i with x = xyx.
/// Compares that criterion against the elementwise scan.
struct PeirceReport {
  bool criterion = false;
  bool vnr = false;
  bool agree = false;
  // least failing block element when the criterion fails
  std::optional<std::array<Idx, 3>> counterexample;  // i, j, x
};

PeirceReport verify_lemma_3_3(const RingPtr& r, const std::vector<Idx>& family);

/// Both transfer directions between a context and its matrix ring T:
/// (1) vnr(T) forces vnr(R), vnr(S) and left/right regularity of M and N;
/// (2) a strict context with vnr(R), vnr(S) and left-regular M, N forces
/// vnr(T). Corner isomorphisms eTe = R and (1-e)T(1-e) = S are checked too.
struct Theorem34Report {
  bool t_vnr = false;
  bool r_vnr = false;
  bool s_vnr = false;
  bool m_left = false, m_right = false;
  bool n_left = false, n_right = false;
  bool strict = false;
  bool direction1 = false;
  bool direction2 = false;
  bool corner_r = false;
  bool corner_s = false;
  bool ok() const { return direction1 && direction2 && corner_r && corner_s; }
};

Theorem34Report verify_theorem_3_4(const MoritaContext& ctx,
                                   const Caps& caps = {});

/// Witnesses that P is projective (a summand of some R^k) and a generator
/// (R a summand of some P^j), with k, j bounded by caps.summand_power.
struct Progenerator {
  RingPtr ring;
  ModulePtr module;
  int k = 0;
  int j = 0;
  ModuleHom projective_witness;  // idempotent endo of R^k, image iso to P
  ModuleHom generator_witness;   // idempotent endo of P^j, image iso to R
};

struct ProgeneratorCheck {
  bool is_progenerator = false;
  std::string failure;  // bounded reason when not
  std::optional<Progenerator> witness;
};

ProgeneratorCheck progenerator_check(const ModulePtr& p,
                                     const Caps& caps = {});

/// Endomorphisms of P as a ring: elements are enumerate_homs(P,P) in
/// canonical order (zero map lands at index 0), addition pointwise, and the
/// product s s' acts by x -> s'(s(x)) so that h |-> h o s is a left action.
struct EndoRing {
  RingPtr ring;
  ModulePtr module;                // P
  std::vector<ModuleHom> elements;  // ring index -> endomorphism
};

EndoRing endo_ring(const ModulePtr& p, const Caps& caps = {});

/// Hom(P, M) as a left module over endo_ring(P): addition pointwise,
/// action s . h = h o s. Elements indexed like enumerate_homs(P, M).
struct HomModule {
  ModulePtr module;  // over the endo ring
  std::vector<ModuleHom> elements;
};

HomModule hom_functor(const EndoRing& e, const ModulePtr& m,
                      const Caps& caps = {});

/// The canonical map Hom_R(U, M) -> Hom_E(F(U), F(M)), u |-> (h -> u o h),
/// must be a bijection when P is a progenerator.
struct FunctorBijectionReport {
  bool injective = false;
  bool counts_match = false;
  bool all_images_valid = false;
  bool ok() const { return injective && counts_match && all_images_valid; }
};

FunctorBijectionReport hom_functor_bijection(const EndoRing& e,
                                             const ModulePtr& u,
                                             const ModulePtr& m,
                                             const Caps& caps = {});

/// Relative regularity transported through the hom functor: M is U-regular
/// exactly when F(M) is F(U)-regular. Probative only when P checks out as
/// a progenerator.
struct Lemma31Report {
  bool probative = false;
  bool base_regular = false;
  bool image_regular = false;
  bool agree = false;
  bool ok() const { return agree; }
};

Lemma31Report verify_lemma_3_1(const ModulePtr& p, const ModulePtr& u,
                               const ModulePtr& m, const Caps& caps = {});

/// Elementwise regularity agrees between R and the endomorphism ring of a
/// progenerator over R.
struct Theorem32Report {
  bool probative = false;
  bool base_vnr = false;
  bool endo_vnr = false;
  bool agree = false;
  bool ok() const { return agree; }
};

Theorem32Report verify_theorem_3_2(const ModulePtr& p, const Caps& caps = {});

}  // namespace regulus
