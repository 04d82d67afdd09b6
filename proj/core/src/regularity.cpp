#include "regulus/regularity.hpp"

#include <algorithm>
#include <map>

namespace regulus {

std::optional<Idx> element_witness(const FiniteRing& ring, Idx r) {
  for (Idx s = 0; s < ring.order(); ++s)
    if (ring.mul(ring.mul(r, s), r) == r) return s;
  return std::nullopt;
}

VnrCertificate vnr_check(const RingPtr& ring) {
  VnrCertificate cert;
  cert.ring = ring;
  cert.witness.reserve(ring->order());
  for (Idx r = 0; r < ring->order(); ++r) {
    auto s = element_witness(*ring, r);
    if (!s) {
      cert.regular = false;
      cert.witness.clear();
      cert.counterexample = r;
      return cert;
    }
    cert.witness.push_back(*s);
  }
  cert.regular = true;
  return cert;
}

bool verify(const VnrCertificate& cert) {
  if (!cert.ring) return false;
  const FiniteRing& r = *cert.ring;
  if (cert.regular) {
    if (static_cast<int>(cert.witness.size()) != r.order()) return false;
    for (Idx x = 0; x < r.order(); ++x) {
      Idx s = cert.witness[x];
      if (s < 0 || s >= r.order()) return false;
      if (r.mul(r.mul(x, s), x) != x) return false;
    }
    return !cert.counterexample;
  }
  if (!cert.counterexample) return false;
  return !element_witness(r, *cert.counterexample).has_value();
}

RelativeRegularityCertificate is_relative_regular(const ModulePtr& m,
                                                  const ModulePtr& u,
                                                  const Caps& caps) {
  RelativeRegularityCertificate cert;
  cert.module = m;
  cert.relator = u;
  const auto forward = enumerate_homs(u, m, caps);
  const auto backward = enumerate_homs(m, u, caps);
  cert.homs_checked = static_cast<std::int64_t>(forward.size());
  for (const auto& f : forward) {
    bool found = false;
    for (const auto& g : backward) {
      // f o g o f == f, evaluated pointwise
      bool match = true;
      for (Idx x = 0; x < u->order(); ++x)
        if (f.map[g.map[f.map[x]]] != f.map[x]) {
          match = false;
          break;
        }
      if (match) {
        cert.pairs.push_back(RegularPair{f, g});
        found = true;
        break;
      }
    }
    if (!found) {
      cert.regular = false;
      cert.pairs.clear();
      cert.counterexample = f;
      return cert;
    }
  }
  cert.regular = true;
  return cert;
}

bool verify(const RelativeRegularityCertificate& cert) {
  if (!cert.module || !cert.relator) return false;
  if (cert.regular) {
    if (cert.counterexample) return false;
    if (static_cast<std::int64_t>(cert.pairs.size()) != cert.homs_checked)
      return false;
    for (const auto& pr : cert.pairs) {
      if (!hom_is_valid(pr.f) || !hom_is_valid(pr.g)) return false;
      if (!same_module(pr.f.source, cert.relator) ||
          !same_module(pr.f.target, cert.module))
        return false;
      if (!same_module(pr.g.source, cert.module) ||
          !same_module(pr.g.target, cert.relator))
        return false;
      for (Idx x = 0; x < cert.relator->order(); ++x)
        if (pr.f.map[pr.g.map[pr.f.map[x]]] != pr.f.map[x]) return false;
    }
    return true;
  }
  if (!cert.counterexample) return false;
  const ModuleHom& f = *cert.counterexample;
  if (!hom_is_valid(f)) return false;
  for (const auto& g : enumerate_homs(cert.module, cert.relator)) {
    bool match = true;
    for (Idx x = 0; x < cert.relator->order(); ++x)
      if (f.map[g.map[f.map[x]]] != f.map[x]) {
        match = false;
        break;
      }
    if (match) return false;
  }
  return true;
}

SummandRouteCertificate relative_regular_via_summands(const ModulePtr& m,
                                                      const ModulePtr& u,
                                                      const Caps& caps) {
  SummandRouteCertificate cert;
  cert.module = m;
  cert.relator = u;
  const auto forward = enumerate_homs(u, m, caps);
  cert.homs_checked = static_cast<std::int64_t>(forward.size());
  // distinct kernels and images repeat heavily across homs
  std::map<std::vector<Idx>, std::optional<Submodule>> kernel_memo, image_memo;
  auto complement_of = [](std::map<std::vector<Idx>, std::optional<Submodule>>& memo,
                          const Submodule& n) -> const std::optional<Submodule>& {
    auto it = memo.find(n.elements);
    if (it == memo.end())
      it = memo.emplace(n.elements, find_complement(n)).first;
    return it->second;
  };
  cert.regular = true;
  for (const auto& f : forward) {
    SummandRouteCertificate::Item item;
    item.f = f;
    const auto& kc = complement_of(kernel_memo, kernel(f));
    item.kernel_ok = kc.has_value();
    item.kernel_complement = kc;
    const auto& ic = complement_of(image_memo, image(f));
    item.image_ok = ic.has_value();
    item.image_complement = ic;
    const bool ok = item.kernel_ok && item.image_ok;
    cert.items.push_back(std::move(item));
    if (!ok) {
      cert.regular = false;
      break;  // least failing f recorded last
    }
  }
  return cert;
}

RelativeRegularityCertificate is_regular_module(const ModulePtr& m,
                                                const Caps& caps) {
  return is_relative_regular(m, regular_left_module(m->ring()), caps);
}

CyclicProjectivityCertificate cyclic_projective(const ModulePtr& m, Idx x,
                                                const Caps& caps) {
  if (x < 0 || x >= m->order()) throw StructureError("element out of range");
  CyclicProjectivityCertificate cert;
  cert.module = m;
  cert.element = x;
  auto reg = regular_left_module(m->ring());
  ModuleHom ev{reg, m, {}};
  ev.map.resize(reg->order());
  for (Idx r = 0; r < reg->order(); ++r) ev.map[r] = m->act(r, x);
  cert.evaluation = ev;
  cert.kernel = kernel(ev);
  cert.kernel_summand = is_direct_summand(cert.kernel, caps);
  cert.projective = cert.kernel_summand.is_summand;
  return cert;
}

ZelmanowitzCertificate zelmanowitz_check(const ModulePtr& m,
                                         const Caps& caps) {
  ZelmanowitzCertificate cert;
  cert.module = m;
  auto reg = regular_left_module(m->ring());
  const auto reg_endos = enumerate_homs(reg, reg, caps);
  const auto m_endos = enumerate_homs(m, m, caps);
  for (Idx x = 0; x < m->order(); ++x) {
    ModuleHom ev{reg, m, {}};
    ev.map.resize(reg->order());
    for (Idx r = 0; r < reg->order(); ++r) ev.map[r] = m->act(r, x);
    if (!is_direct_summand(kernel(ev), reg_endos).is_summand) {
      cert.regular = false;
      cert.counterexample = x;
      cert.failure = "not-projective";
      return cert;
    }
    if (!is_direct_summand(cyclic_submodule(m, x), m_endos).is_summand) {
      cert.regular = false;
      cert.counterexample = x;
      cert.failure = "not-summand";
      return cert;
    }
  }
  cert.regular = true;
  return cert;
}

}  // namespace regulus
