#include "regulus/extensions.hpp"

#include <algorithm>
#include <set>

namespace regulus {

namespace {

AxiomReport fail(std::string clause, std::vector<Idx> witness,
                 std::string detail) {
  return AxiomReport{AxiomReport::Kind::axiom, std::move(clause),
                     std::move(witness), std::move(detail)};
}

}  // namespace

const char* to_string(ProjectivityStatus s) {
  switch (s) {
    case ProjectivityStatus::AssumedByConstruction:
      return "assumed-by-construction";
    case ProjectivityStatus::BoundedChecked:
      return "bounded-checked";
    case ProjectivityStatus::Unchecked:
      return "unchecked";
  }
  return "unchecked";
}

AxiomReport verify_free_normalizing(const RingEmbedding& e,
                                    const NormalizingBasis& b) {
  if (!e.small || !e.big)
    return AxiomReport{AxiomReport::Kind::structural, "embedding-shape", {},
                       "missing ring"};
  const FiniteRing& r = *e.small;
  const FiniteRing& s = *e.big;
  if (e.map.size() != static_cast<std::size_t>(r.order()))
    return AxiomReport{AxiomReport::Kind::structural, "embedding-shape", {},
                       "map length does not match small ring order"};
  for (Idx v : e.map)
    if (v < 0 || v >= s.order())
      return AxiomReport{AxiomReport::Kind::structural, "embedding-shape", {},
                         "map entry out of range"};
  {
    std::set<Idx> seen(e.map.begin(), e.map.end());
    if (seen.size() != e.map.size())
      return fail("embedding-injective", {}, "two elements share an image");
  }
  for (Idx a = 0; a < r.order(); ++a)
    for (Idx c = 0; c < r.order(); ++c) {
      if (e.map[r.add(a, c)] != s.add(e.map[a], e.map[c]))
        return fail("embedding-add", {a, c}, "image of a sum is not the sum");
      if (e.map[r.mul(a, c)] != s.mul(e.map[a], e.map[c]))
        return fail("embedding-mul", {a, c},
                    "image of a product is not the product");
    }
  if (e.map[r.one()] != s.one())
    return fail("embedding-one", {r.one()}, "identity does not map to identity");

  const int n = b.size();
  if (n <= 0)
    return AxiomReport{AxiomReport::Kind::structural, "basis-shape", {},
                       "basis is empty"};
  for (Idx v : b.elements)
    if (v < 0 || v >= s.order())
      return AxiomReport{AxiomReport::Kind::structural, "basis-shape", {},
                         "basis element out of range"};
  if (b.elements[0] != s.one())
    return fail("a1-is-one", {b.elements[0]},
                "first basis element is not the identity");

  for (int i = 0; i < n; ++i) {
    Idx a = b.elements[i];
    std::set<Idx> left, right;
    for (Idx x = 0; x < r.order(); ++x) {
      left.insert(s.mul(a, e.map[x]));
      right.insert(s.mul(e.map[x], a));
    }
    if (left != right)
      return fail("normalizing", {a},
                  "basis element does not normalize the subring");
  }

  // both coefficient maps R^n -> S must be bijections; sizes first
  std::int64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= r.order();
    if (count > s.order()) break;
  }
  if (count != s.order())
    return fail("left-coefficient-freeness", {},
                "|R|^n does not equal |S|, coefficient maps cannot be bijective");

  std::vector<Idx> tuple(n, 0);
  std::vector<char> hit_left(s.order(), 0), hit_right(s.order(), 0);
  for (std::int64_t c = 0; c < count; ++c) {
    std::int64_t x = c;
    for (int i = 0; i < n; ++i) {
      tuple[i] = static_cast<Idx>(x % r.order());
      x /= r.order();
    }
    Idx lhs = s.zero(), rhs = s.zero();
    for (int i = 0; i < n; ++i) {
      lhs = s.add(lhs, s.mul(e.map[tuple[i]], b.elements[i]));
      rhs = s.add(rhs, s.mul(b.elements[i], e.map[tuple[i]]));
    }
    if (hit_left[lhs])
      return fail("left-coefficient-freeness", {lhs},
                  "two coefficient tuples produce the same element");
    hit_left[lhs] = 1;
    if (hit_right[rhs])
      return fail("right-coefficient-freeness", {rhs},
                  "two coefficient tuples produce the same element");
    hit_right[rhs] = 1;
  }
  return {};
}

AxiomReport verify_free_normalizing(const ExtensionDescriptor& d) {
  return verify_free_normalizing(d.embedding, d.basis);
}

ExtensionDescriptor matrix_extension(const RingPtr& r, int n,
                                     const Caps& caps) {
  if (n <= 0) throw UsageError("matrix extension needs n >= 1");
  MatrixRing mat = matrix_ring(r, n, caps);
  ExtensionDescriptor d;
  d.embedding.small = r;
  d.embedding.big = mat.ring;
  d.embedding.map.resize(r->order());
  std::vector<Idx> entries(static_cast<std::size_t>(n) * n, 0);
  for (Idx x = 0; x < r->order(); ++x) {
    for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i) * n + i] = x;
    d.embedding.map[x] = mat.codec.encode(entries);
  }
  for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i) * n + i] = 0;
  d.basis.elements.push_back(d.embedding.map[r->one()]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      entries[static_cast<std::size_t>(i) * n + j] = r->one();
      d.basis.elements.push_back(mat.codec.encode(entries));
      entries[static_cast<std::size_t>(i) * n + j] = 0;
    }
  d.projectivity = ProjectivityStatus::AssumedByConstruction;
  auto report = verify_free_normalizing(d);
  if (!report.ok())
    throw StructureError("matrix extension failed validation: " + report.clause);
  return d;
}

ExtensionDescriptor group_ring_extension(const RingPtr& r, const GroupPtr& g,
                                         const Caps& caps) {
  GroupRing gr = group_ring(r, g, caps);
  ExtensionDescriptor d;
  d.embedding.small = r;
  d.embedding.big = gr.ring;
  d.embedding.map.resize(r->order());
  std::vector<Idx> coeffs(g->order(), 0);
  for (Idx x = 0; x < r->order(); ++x) {
    coeffs[g->identity()] = x;
    d.embedding.map[x] = gr.codec.encode(coeffs);
  }
  coeffs[g->identity()] = 0;
  for (Idx k = 0; k < g->order(); ++k) {
    coeffs[k] = r->one();
    d.basis.elements.push_back(gr.codec.encode(coeffs));
    coeffs[k] = 0;
  }
  // splitting holds when the group order is invertible downstairs
  Idx count = r->zero();
  for (int i = 0; i < g->order(); ++i) count = r->add(count, r->one());
  bool invertible = false;
  for (Idx u = 0; u < r->order(); ++u)
    if (r->mul(count, u) == r->one() && r->mul(u, count) == r->one()) {
      invertible = true;
      break;
    }
  d.projectivity = invertible ? ProjectivityStatus::AssumedByConstruction
                              : ProjectivityStatus::Unchecked;
  auto report = verify_free_normalizing(d);
  if (!report.ok())
    throw StructureError("group ring extension failed validation: " +
                         report.clause);
  return d;
}

ModulePtr restrict_scalars(const ExtensionDescriptor& d, const ModulePtr& m) {
  if (!same_ring(m->ring(), d.embedding.big))
    throw StructureError("restriction needs a module over the big ring");
  ModuleTables t;
  t.ring = d.embedding.small;
  t.order = m->order();
  t.add = m->add_table();
  t.act.resize(static_cast<std::size_t>(t.ring->order()) * t.order);
  for (Idx r = 0; r < t.ring->order(); ++r)
    for (Idx x = 0; x < t.order; ++x)
      t.act[static_cast<std::size_t>(r) * t.order + x] =
          m->act(d.embedding.map[r], x);
  t.labels = m->labels();
  return std::make_shared<FiniteModule>(std::move(t));
}

std::vector<std::vector<Idx>> coordinate_table(const ExtensionDescriptor& d) {
  const FiniteRing& r = *d.embedding.small;
  const FiniteRing& s = *d.embedding.big;
  const int n = d.basis.size();
  std::int64_t count = 1;
  for (int i = 0; i < n; ++i) count *= r.order();
  if (count != s.order())
    throw StructureError("descriptor is not free, coordinates undefined");
  std::vector<std::vector<Idx>> coords(s.order());
  std::vector<char> hit(s.order(), 0);
  std::vector<Idx> tuple(n, 0);
  for (std::int64_t c = 0; c < count; ++c) {
    std::int64_t x = c;
    for (int i = 0; i < n; ++i) {
      tuple[i] = static_cast<Idx>(x % r.order());
      x /= r.order();
    }
    Idx sum = s.zero();
    for (int i = 0; i < n; ++i)
      sum = s.add(sum, s.mul(d.embedding.map[tuple[i]], d.basis.elements[i]));
    if (hit[sum])
      throw StructureError("descriptor is not free, coordinates collide");
    hit[sum] = 1;
    coords[sum] = tuple;
  }
  return coords;
}

std::vector<Idx> basis_coordinates(const ExtensionDescriptor& d, Idx s) {
  if (s < 0 || s >= d.embedding.big->order())
    throw StructureError("element out of range");
  return coordinate_table(d)[s];
}

ProjectivityCheckReport left_projectivity_bounded_check(
    ExtensionDescriptor& d, const std::vector<ModulePtr>& family,
    const Caps& caps) {
  std::vector<ModulePtr> mods = family;
  if (mods.empty()) {
    auto s_reg = regular_left_module(d.embedding.big);
    if (s_reg->order() <= caps.module_order) {
      mods.push_back(s_reg);
      if (static_cast<std::int64_t>(s_reg->order()) * s_reg->order() <=
          caps.module_order)
        mods.push_back(direct_sum(s_reg, s_reg).module);
    }
  }
  ProjectivityCheckReport report;
  for (std::size_t mi = 0; mi < mods.size(); ++mi) {
    const ModulePtr& m = mods[mi];
    if (!same_ring(m->ring(), d.embedding.big))
      throw StructureError("family member is not a module over the big ring");
    auto restricted = restrict_scalars(d, m);
    const auto big_endos = enumerate_homs(m, m, caps);
    const auto small_endos = enumerate_homs(restricted, restricted, caps);
    ++report.modules_checked;
    for (const auto& sub : all_submodules(m, caps)) {
      ++report.submodules_checked;
      Submodule down{restricted, sub.elements};
      if (is_direct_summand(down, small_endos).is_summand &&
          !is_direct_summand(sub, big_endos).is_summand) {
        report.passed = false;
        report.failing_module = static_cast<int>(mi);
        report.failing_submodule = sub;
        return report;
      }
    }
  }
  report.passed = true;
  if (report.modules_checked > 0 &&
      d.projectivity == ProjectivityStatus::Unchecked)
    d.projectivity = ProjectivityStatus::BoundedChecked;
  return report;
}

TorsionFreeReport basis_torsion_free(const ExtensionDescriptor& d,
                                     const ModulePtr& m) {
  if (!same_ring(m->ring(), d.embedding.big))
    throw StructureError("torsion check needs a module over the big ring");
  const FiniteRing& s = *d.embedding.big;
  const int n = d.basis.size();
  const auto coords = coordinate_table(d);
  TorsionFreeReport report;
  for (Idx x = 0; x < m->order(); ++x)
    for (Idx t = 0; t < s.order(); ++t) {
      if (m->act(t, x) != 0) continue;
      for (int i = 0; i < n; ++i) {
        Idx line = s.mul(d.embedding.map[coords[t][i]], d.basis.elements[i]);
        if (m->act(line, x) != 0) {
          report.torsion_free = false;
          report.elem = x;
          report.annihilator = t;
          report.coeffs = coords[t];
          report.line = i;
          return report;
        }
      }
    }
  report.torsion_free = true;
  return report;
}

CyclicDecomposition decompose_cyclic(const ExtensionDescriptor& d,
                                     const ModulePtr& m, Idx x) {
  if (!same_ring(m->ring(), d.embedding.big))
    throw StructureError("decomposition needs a module over the big ring");
  if (x < 0 || x >= m->order()) throw StructureError("element out of range");
  const FiniteRing& s = *d.embedding.big;
  const FiniteRing& r = *d.embedding.small;
  CyclicDecomposition out;
  for (int i = 0; i < d.basis.size(); ++i) {
    std::set<Idx> piece;
    for (Idx c = 0; c < r.order(); ++c)
      piece.insert(
          m->act(s.mul(d.embedding.map[c], d.basis.elements[i]), x));
    out.pieces.emplace_back(piece.begin(), piece.end());
  }
  {
    std::set<Idx> total;
    for (Idx t = 0; t < s.order(); ++t) total.insert(m->act(t, x));
    out.total.assign(total.begin(), total.end());
  }
  // the internal sum is direct exactly when sizes multiply out
  std::set<Idx> sum = {0};
  out.direct = true;
  for (const auto& piece : out.pieces) {
    std::set<Idx> next;
    for (Idx a : sum)
      for (Idx b : piece) next.insert(m->add(a, b));
    if (next.size() != sum.size() * piece.size()) out.direct = false;
    sum = std::move(next);
  }
  out.spans = std::equal(sum.begin(), sum.end(), out.total.begin(),
                         out.total.end());
  return out;
}

Theorem22Report verify_theorem_2_2(const ExtensionDescriptor& d,
                                   const ModulePtr& m, const Caps& caps) {
  Theorem22Report report;
  report.p = is_regular_module(restrict_scalars(d, m), caps).regular;
  report.q = is_regular_module(m, caps).regular;
  report.t = basis_torsion_free(d, m).torsion_free;
  report.p_implies_q = !report.p || report.q;
  report.qt_implies_p = !(report.q && report.t) || report.p;
  report.probative = d.projectivity != ProjectivityStatus::Unchecked;
  return report;
}

Corollary23Report verify_corollary_2_3(const ExtensionDescriptor& d,
                                       const Caps& caps) {
  (void)caps;
  Corollary23Report report;
  auto small = vnr_check(d.embedding.small);
  auto big = vnr_check(d.embedding.big);
  report.small_regular = small.regular;
  report.big_regular = big.regular;
  report.verdicts_agree = small.regular == big.regular;
  report.probative = d.projectivity != ProjectivityStatus::Unchecked;
  report.projections_ok = true;
  if (big.regular) {
    const FiniteRing& r = *d.embedding.small;
    const auto coords = coordinate_table(d);
    for (Idx x = 0; x < r.order(); ++x) {
      Idx s1 = coords[big.witness[d.embedding.map[x]]][0];
      if (r.mul(r.mul(x, s1), x) != x) {
        report.projections_ok = false;
        report.projection_failure = x;
        break;
      }
    }
  }
  return report;
}

}  // namespace regulus
