#pragma once

#include "regulus/finmod.hpp"

namespace regulus {

/// Elementwise von Neumann regularity of a ring: every r admits an s with
/// r = r*s*r. On success the witness table holds the least such s per
/// element; on failure the least element with no quasi-inverse is recorded.
struct VnrCertificate {
  RingPtr ring;
  bool regular = false;
  std::vector<Idx> witness;
  std::optional<Idx> counterexample;
};

/// Least s with r = r*s*r, if any.
std::optional<Idx> element_witness(const FiniteRing& ring, Idx r);

VnrCertificate vnr_check(const RingPtr& ring);

/// Replays a certificate against its ring: every recorded witness must
/// satisfy r = r*s*r, and a recorded counterexample must admit no s at all.
bool verify(const VnrCertificate& cert);

/// One morphism f : U -> M together with the least companion g : M -> U
/// satisfying f = f o g o f.
struct RegularPair {
  ModuleHom f;
  ModuleHom g;
};

/// M is U-regular when every f : U -> M admits a companion g : M -> U with
/// f = f o g o f. On success, one pair per hom in canonical order; on
/// failure, the least f admitting no companion (search exhaustive).
struct RelativeRegularityCertificate {
  ModulePtr module;   // M
  ModulePtr relator;  // U
  bool regular = false;
  std::vector<RegularPair> pairs;
  std::optional<ModuleHom> counterexample;
  std::int64_t homs_checked = 0;
};

RelativeRegularityCertificate is_relative_regular(const ModulePtr& m,
                                                  const ModulePtr& u,
                                                  const Caps& caps = {});

bool verify(const RelativeRegularityCertificate& cert);

/// Independent oracle for the same predicate: every f : U -> M must have a
/// kernel that is a direct summand of U and an image that is a direct
/// summand of M. Summand evidence comes from complement search, not from
/// the companion search above.
struct SummandRouteCertificate {
  struct Item {
    ModuleHom f;
    bool kernel_ok = false;
    bool image_ok = false;
    std::optional<Submodule> kernel_complement;
    std::optional<Submodule> image_complement;
  };
  ModulePtr module;
  ModulePtr relator;
  bool regular = false;
  std::vector<Item> items;  // all homs on success; up to the least failure
  std::int64_t homs_checked = 0;
};

SummandRouteCertificate relative_regular_via_summands(const ModulePtr& m,
                                                      const ModulePtr& u,
                                                      const Caps& caps = {});

/// M is a regular module exactly when it is regular relative to the ring
/// acting on itself.
RelativeRegularityCertificate is_regular_module(const ModulePtr& m,
                                                const Caps& caps = {});

/// Projectivity of the cyclic submodule Rm: the evaluation map R -> M,
/// r |-> r*m, presents Rm as a quotient of R, and Rm is projective exactly
/// when the kernel of that presentation is a direct summand of R.
struct CyclicProjectivityCertificate {
  ModulePtr module;
  Idx element = 0;
  bool projective = false;
  ModuleHom evaluation;     // regular module -> M
  Submodule kernel;         // of the regular module
  SummandCertificate kernel_summand;
};

CyclicProjectivityCertificate cyclic_projective(const ModulePtr& m, Idx x,
                                                const Caps& caps = {});

/// Elementwise module regularity: every cyclic submodule Rm must be
/// projective and a direct summand of M. Agrees with is_regular_module on
/// everything both can evaluate; serves as a third oracle.
struct ZelmanowitzCertificate {
  ModulePtr module;
  bool regular = false;
  std::optional<Idx> counterexample;  // least failing element
  std::string failure;                // "not-projective" or "not-summand"
};

ZelmanowitzCertificate zelmanowitz_check(const ModulePtr& m,
                                         const Caps& caps = {});

}  // namespace regulus
