#include "regulus/morita.hpp"

#include <algorithm>
#include <map>

namespace regulus {

namespace {

AxiomReport fail(std::string clause, std::vector<Idx> witness,
                 std::string detail) {
  return AxiomReport{AxiomReport::Kind::axiom, std::move(clause),
                     std::move(witness), std::move(detail)};
}

AxiomReport structural(std::string clause, std::string detail) {
  return AxiomReport{AxiomReport::Kind::structural, std::move(clause), {},
                     std::move(detail)};
}

/// Additive closure of a value set within a ring.
bool additively_spans(const FiniteRing& ring, const std::vector<Idx>& values) {
  std::vector<char> known(ring.order(), 0);
  known[0] = 1;
  std::vector<Idx> span = {0};
  std::vector<Idx> work;
  for (Idx v : values)
    if (!known[v]) {
      known[v] = 1;
      span.push_back(v);
      work.push_back(v);
    }
  while (!work.empty()) {
    Idx x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < span.size(); ++i) {
      Idx s = ring.add(x, span[i]);
      if (!known[s]) {
        known[s] = 1;
        span.push_back(s);
        work.push_back(s);
      }
    }
  }
  return static_cast<int>(span.size()) == ring.order();
}

}  // namespace

AxiomReport check_bimodule(const Bimodule& b) {
  if (!b.left_ring || !b.right_ring || !b.carrier)
    return structural("bimodule-shape", "missing component");
  if (!same_ring(b.carrier->ring(), b.left_ring))
    return structural("bimodule-shape", "carrier ring is not the left ring");
  const int n = b.carrier->order();
  const int so = b.right_ring->order();
  if (b.right_act.size() != static_cast<std::size_t>(n) * so)
    return structural("bimodule-shape", "right action table has wrong size");
  for (Idx v : b.right_act)
    if (v < 0 || v >= n)
      return structural("bimodule-shape", "right action entry out of range");
  // right module laws, checked through the opposite-ring adapter
  {
    ModuleTables t;
    t.ring = opposite_ring(b.right_ring);
    t.order = n;
    t.add = b.carrier->add_table();
    t.act.resize(static_cast<std::size_t>(so) * n);
    for (Idx s = 0; s < so; ++s)
      for (Idx x = 0; x < n; ++x)
        t.act[static_cast<std::size_t>(s) * n + x] = b.right(x, s);
    auto rep = check_module_axioms(t);
    if (!rep.ok())
      return fail("right-module-" + rep.clause, rep.witness, rep.detail);
  }
  for (Idx r = 0; r < b.left_ring->order(); ++r)
    for (Idx x = 0; x < n; ++x)
      for (Idx s = 0; s < so; ++s)
        if (b.right(b.carrier->act(r, x), s) !=
            b.carrier->act(r, b.right(x, s)))
          return fail("bimodule-compatibility", {r, x, s},
                      "(r m) s differs from r (m s)");
  return {};
}

ModulePtr right_as_left_module(const Bimodule& b) {
  ModuleTables t;
  t.ring = opposite_ring(b.right_ring);
  t.order = b.carrier->order();
  t.add = b.carrier->add_table();
  t.act.resize(static_cast<std::size_t>(b.right_ring->order()) * t.order);
  for (Idx s = 0; s < b.right_ring->order(); ++s)
    for (Idx x = 0; x < t.order; ++x)
      t.act[static_cast<std::size_t>(s) * t.order + x] = b.right(x, s);
  t.labels = b.carrier->labels();
  return std::make_shared<FiniteModule>(std::move(t));
}

Bimodule zero_bimodule(const RingPtr& left, const RingPtr& right) {
  Bimodule b;
  b.left_ring = left;
  b.right_ring = right;
  b.carrier = zero_module(left);
  b.right_act.assign(right->order(), 0);
  return b;
}

AxiomReport check_context(const MoritaContext& ctx) {
  if (!ctx.r || !ctx.s) return structural("context-shape", "missing ring");
  if (!ctx.m.carrier || !ctx.n.carrier)
    return structural("context-shape", "missing bimodule");
  if (!same_ring(ctx.m.left_ring, ctx.r) || !same_ring(ctx.m.right_ring, ctx.s))
    return structural("context-shape", "first bimodule has wrong rings");
  if (!same_ring(ctx.n.left_ring, ctx.s) || !same_ring(ctx.n.right_ring, ctx.r))
    return structural("context-shape", "second bimodule has wrong rings");
  const int mo = ctx.m.carrier->order();
  const int no = ctx.n.carrier->order();
  if (ctx.phi.size() != static_cast<std::size_t>(mo) * no)
    return structural("context-shape", "phi table has wrong size");
  if (ctx.psi.size() != static_cast<std::size_t>(no) * mo)
    return structural("context-shape", "psi table has wrong size");
  for (Idx v : ctx.phi)
    if (v < 0 || v >= ctx.r->order())
      return structural("context-shape", "phi entry out of range");
  for (Idx v : ctx.psi)
    if (v < 0 || v >= ctx.s->order())
      return structural("context-shape", "psi entry out of range");
  {
    auto rep = check_bimodule(ctx.m);
    if (!rep.ok()) return fail("m-" + rep.clause, rep.witness, rep.detail);
    rep = check_bimodule(ctx.n);
    if (!rep.ok()) return fail("n-" + rep.clause, rep.witness, rep.detail);
  }
  const FiniteRing& r = *ctx.r;
  const FiniteRing& s = *ctx.s;
  const FiniteModule& m = *ctx.m.carrier;
  const FiniteModule& n = *ctx.n.carrier;

  for (Idx a = 0; a < mo; ++a)
    for (Idx b = 0; b < mo; ++b)
      for (Idx c = 0; c < no; ++c)
        if (ctx.phi_at(m.add(a, b), c) !=
            r.add(ctx.phi_at(a, c), ctx.phi_at(b, c)))
          return fail("phi-additive-left", {a, b, c},
                      "phi(m+m', n) is not phi(m,n)+phi(m',n)");
  for (Idx a = 0; a < mo; ++a)
    for (Idx b = 0; b < no; ++b)
      for (Idx c = 0; c < no; ++c)
        if (ctx.phi_at(a, n.add(b, c)) !=
            r.add(ctx.phi_at(a, b), ctx.phi_at(a, c)))
          return fail("phi-additive-right", {a, b, c},
                      "phi(m, n+n') is not phi(m,n)+phi(m,n')");
  for (Idx t = 0; t < r.order(); ++t)
    for (Idx a = 0; a < mo; ++a)
      for (Idx b = 0; b < no; ++b) {
        if (ctx.phi_at(m.act(t, a), b) != r.mul(t, ctx.phi_at(a, b)))
          return fail("phi-left-linear", {t, a, b},
                      "phi(r m, n) is not r phi(m, n)");
        if (ctx.phi_at(a, ctx.n.right(b, t)) != r.mul(ctx.phi_at(a, b), t))
          return fail("phi-right-linear", {a, b, t},
                      "phi(m, n r) is not phi(m, n) r");
      }
  for (Idx t = 0; t < s.order(); ++t)
    for (Idx a = 0; a < mo; ++a)
      for (Idx b = 0; b < no; ++b)
        if (ctx.phi_at(ctx.m.right(a, t), b) != ctx.phi_at(a, n.act(t, b)))
          return fail("phi-balanced", {a, t, b},
                      "phi(m s, n) is not phi(m, s n)");

  for (Idx a = 0; a < no; ++a)
    for (Idx b = 0; b < no; ++b)
      for (Idx c = 0; c < mo; ++c)
        if (ctx.psi_at(n.add(a, b), c) !=
            s.add(ctx.psi_at(a, c), ctx.psi_at(b, c)))
          return fail("psi-additive-left", {a, b, c},
                      "psi(n+n', m) is not psi(n,m)+psi(n',m)");
  for (Idx a = 0; a < no; ++a)
    for (Idx b = 0; b < mo; ++b)
      for (Idx c = 0; c < mo; ++c)
        if (ctx.psi_at(a, m.add(b, c)) !=
            s.add(ctx.psi_at(a, b), ctx.psi_at(a, c)))
          return fail("psi-additive-right", {a, b, c},
                      "psi(n, m+m') is not psi(n,m)+psi(n,m')");
  for (Idx t = 0; t < s.order(); ++t)
    for (Idx a = 0; a < no; ++a)
      for (Idx b = 0; b < mo; ++b) {
        if (ctx.psi_at(n.act(t, a), b) != s.mul(t, ctx.psi_at(a, b)))
          return fail("psi-left-linear", {t, a, b},
                      "psi(s n, m) is not s psi(n, m)");
        if (ctx.psi_at(a, ctx.m.right(b, t)) != s.mul(ctx.psi_at(a, b), t))
          return fail("psi-right-linear", {a, b, t},
                      "psi(n, m s) is not psi(n, m) s");
      }
  for (Idx t = 0; t < r.order(); ++t)
    for (Idx a = 0; a < no; ++a)
      for (Idx b = 0; b < mo; ++b)
        if (ctx.psi_at(ctx.n.right(a, t), b) != ctx.psi_at(a, m.act(t, b)))
          return fail("psi-balanced", {a, t, b},
                      "psi(n r, m) is not psi(n, r m)");

  // the two associativity identities tying the pairings together
  for (Idx a = 0; a < mo; ++a)
    for (Idx b = 0; b < no; ++b)
      for (Idx c = 0; c < mo; ++c)
        if (m.act(ctx.phi_at(a, b), c) != ctx.m.right(a, ctx.psi_at(b, c)))
          return fail("pairing-associativity-phi", {a, b, c},
                      "phi(m,n) m' differs from m psi(n,m')");
  for (Idx a = 0; a < no; ++a)
    for (Idx b = 0; b < mo; ++b)
      for (Idx c = 0; c < no; ++c)
        if (n.act(ctx.psi_at(a, b), c) != ctx.n.right(a, ctx.phi_at(b, c)))
          return fail("pairing-associativity-psi", {a, b, c},
                      "psi(n,m) n' differs from n phi(m,n')");
  return {};
}

MoritaContext standard_context(const RingPtr& r) {
  MoritaContext ctx;
  ctx.r = r;
  ctx.s = r;
  ctx.m.left_ring = r;
  ctx.m.right_ring = r;
  ctx.m.carrier = regular_left_module(r);
  ctx.m.right_act = r->mul_table();
  ctx.n = ctx.m;
  ctx.phi = r->mul_table();
  ctx.psi = r->mul_table();
  return ctx;
}

MoritaContext zero_context(const RingPtr& r, const RingPtr& s) {
  MoritaContext ctx;
  ctx.r = r;
  ctx.s = s;
  ctx.m = zero_bimodule(r, s);
  ctx.n = zero_bimodule(s, r);
  ctx.phi.assign(1, 0);
  ctx.psi.assign(1, 0);
  return ctx;
}

Idx ContextRing::encode(Idx r, Idx m, Idx n, Idx s) const {
  return ((r * m_order + m) * n_order + n) * s_order + s;
}

ContextRing::Parts ContextRing::decode(Idx t) const {
  Parts p;
  p.s = t % s_order;
  t /= s_order;
  p.n = t % n_order;
  t /= n_order;
  p.m = t % m_order;
  p.r = t / m_order;
  return p;
}

ContextRing context_ring(const MoritaContext& ctx, const Caps& caps) {
  {
    auto rep = check_context(ctx);
    if (!rep.ok())
      throw StructureError("context rejected: " + rep.clause +
                           (rep.detail.empty() ? "" : " (" + rep.detail + ")"));
  }
  ContextRing out;
  out.r_order = ctx.r->order();
  out.m_order = ctx.m.carrier->order();
  out.n_order = ctx.n.carrier->order();
  out.s_order = ctx.s->order();
  const std::int64_t total = std::int64_t{1} * out.r_order * out.m_order *
                             out.n_order * out.s_order;
  if (total > caps.ring_order)
    throw CapError("context ring order exceeds cap");
  const int t = static_cast<int>(total);
  const FiniteRing& r = *ctx.r;
  const FiniteRing& s = *ctx.s;
  const FiniteModule& m = *ctx.m.carrier;
  const FiniteModule& n = *ctx.n.carrier;

  RingTables tables;
  tables.order = t;
  tables.add.resize(static_cast<std::size_t>(t) * t);
  tables.mul.resize(static_cast<std::size_t>(t) * t);
  tables.labels.resize(t);
  for (Idx a = 0; a < t; ++a) {
    auto pa = out.decode(a);
    tables.labels[a] = "(" + r.label(pa.r) + "|" + m.label(pa.m) + "|" +
                       n.label(pa.n) + "|" + s.label(pa.s) + ")";
    for (Idx b = 0; b < t; ++b) {
      auto pb = out.decode(b);
      tables.add[static_cast<std::size_t>(a) * t + b] =
          out.encode(r.add(pa.r, pb.r), m.add(pa.m, pb.m), n.add(pa.n, pb.n),
                     s.add(pa.s, pb.s));
      // block product through the pairings
      Idx rr = r.add(r.mul(pa.r, pb.r), ctx.phi_at(pa.m, pb.n));
      Idx mm = m.add(m.act(pa.r, pb.m), ctx.m.right(pa.m, pb.s));
      Idx nn = n.add(n.act(pa.s, pb.n), ctx.n.right(pa.n, pb.r));
      Idx ss = s.add(ctx.psi_at(pa.n, pb.m), s.mul(pa.s, pb.s));
      tables.mul[static_cast<std::size_t>(a) * t + b] =
          out.encode(rr, mm, nn, ss);
    }
  }
  out.ring = std::make_shared<FiniteRing>(std::move(tables));
  out.corner = out.encode(r.one(), 0, 0, 0);
  return out;
}

bool is_strict(const MoritaContext& ctx) {
  std::vector<Idx> phi_values(ctx.phi.begin(), ctx.phi.end());
  std::vector<Idx> psi_values(ctx.psi.begin(), ctx.psi.end());
  return additively_spans(*ctx.r, phi_values) &&
         additively_spans(*ctx.s, psi_values);
}

PeirceReport verify_lemma_3_3(const RingPtr& r,
                              const std::vector<Idx>& family) {
  const FiniteRing& ring = *r;
  const int k = static_cast<int>(family.size());
  if (k == 0) throw StructureError("idempotent family is empty");
  Idx sum = ring.zero();
  for (int i = 0; i < k; ++i) {
    Idx e = family[i];
    if (e < 0 || e >= ring.order())
      throw StructureError("idempotent out of range");
    if (ring.mul(e, e) != e)
      throw StructureError("family member is not idempotent");
    for (int j = 0; j < k; ++j)
      if (i != j && ring.mul(e, family[j]) != ring.zero())
        throw StructureError("family is not orthogonal");
    sum = ring.add(sum, e);
  }
  if (sum != ring.one()) throw StructureError("family does not sum to 1");

  PeirceReport report;
  report.criterion = true;
  for (int i = 0; i < k && report.criterion; ++i)
    for (int j = 0; j < k && report.criterion; ++j) {
      // the block e_i R e_j, scanned in element order
      for (Idx x0 = 0; x0 < ring.order(); ++x0) {
        Idx x = ring.mul(family[i], ring.mul(x0, family[j]));
        if (x != x0) continue;  // visit each block element once, as itself
        bool found = false;
        for (Idx y0 = 0; y0 < ring.order() && !found; ++y0) {
          Idx y = ring.mul(family[j], ring.mul(y0, family[i]));
          if (y != y0) continue;
          if (ring.mul(ring.mul(x, y), x) == x) found = true;
        }
        if (!found) {
          report.criterion = false;
          report.counterexample =
              std::array<Idx, 3>{static_cast<Idx>(i), static_cast<Idx>(j), x};
          break;
        }
      }
    }
  report.vnr = vnr_check(r).regular;
  report.agree = report.criterion == report.vnr;
  return report;
}

Theorem34Report verify_theorem_3_4(const MoritaContext& ctx,
                                   const Caps& caps) {
  Theorem34Report rep;
  auto t = context_ring(ctx, caps);
  rep.t_vnr = vnr_check(t.ring).regular;
  rep.r_vnr = vnr_check(ctx.r).regular;
  rep.s_vnr = vnr_check(ctx.s).regular;
  rep.m_left = is_regular_module(ctx.m.carrier, caps).regular;
  rep.n_left = is_regular_module(ctx.n.carrier, caps).regular;
  rep.m_right = is_regular_module(right_as_left_module(ctx.m), caps).regular;
  rep.n_right = is_regular_module(right_as_left_module(ctx.n), caps).regular;
  rep.strict = is_strict(ctx);
  rep.direction1 = !rep.t_vnr || (rep.r_vnr && rep.s_vnr && rep.m_left &&
                                  rep.m_right && rep.n_left && rep.n_right);
  rep.direction2 =
      !(rep.strict && rep.r_vnr && rep.s_vnr && rep.m_left && rep.n_left) ||
      rep.t_vnr;
  auto corner_r = corner_ring(t.ring, t.corner);
  rep.corner_r = find_ring_isomorphism(*corner_r.ring, *ctx.r).has_value();
  Idx complement = t.ring->sub(t.ring->one(), t.corner);
  auto corner_s = corner_ring(t.ring, complement);
  rep.corner_s = find_ring_isomorphism(*corner_s.ring, *ctx.s).has_value();
  return rep;
}

ProgeneratorCheck progenerator_check(const ModulePtr& p, const Caps& caps) {
  ProgeneratorCheck out;
  const RingPtr ring = p->ring();
  Progenerator w;
  w.ring = ring;
  w.module = p;

  const auto p_inv = additive_invariants(p->order(), p->add_table());
  bool projective = false;
  for (int k = 1; k <= caps.summand_power && !projective; ++k) {
    std::int64_t order = 1;
    for (int i = 0; i < k; ++i) order *= ring->order();
    if (order > caps.module_order) break;
    auto free = free_module(ring, k);
    // additive invariants of a summand embed in the free module's
    {
      auto f_inv = additive_invariants(free->order(), free->add_table());
      std::map<Idx, int> have;
      for (Idx v : f_inv) ++have[v];
      bool fits = true;
      for (Idx v : p_inv)
        if (--have[v] < 0) {
          fits = false;
          break;
        }
      if (!fits) continue;
    }
    for (const auto& e : enumerate_homs(free, free, caps)) {
      bool idem = true;
      for (Idx x = 0; x < free->order(); ++x)
        if (e.map[e.map[x]] != e.map[x]) {
          idem = false;
          break;
        }
      if (!idem) continue;
      auto img = image(e);
      if (img.order() != p->order()) continue;
      if (find_module_isomorphism(submodule_as_module(img).module, p)) {
        w.k = k;
        w.projective_witness = e;
        projective = true;
        break;
      }
    }
  }
  if (!projective) {
    out.failure = "no free summand presentation within bounds";
    return out;
  }

  auto reg = regular_left_module(ring);
  bool generator = false;
  ModulePtr power;
  for (int j = 1; j <= caps.summand_power && !generator; ++j) {
    power = j == 1 ? p : direct_sum(power, p).module;
    if (power->order() > caps.module_order) break;
    for (const auto& e : enumerate_homs(power, power, caps)) {
      bool idem = true;
      for (Idx x = 0; x < power->order(); ++x)
        if (e.map[e.map[x]] != e.map[x]) {
          idem = false;
          break;
        }
      if (!idem) continue;
      auto img = image(e);
      if (img.order() != reg->order()) continue;
      if (find_module_isomorphism(submodule_as_module(img).module, reg)) {
        w.j = j;
        w.generator_witness = e;
        generator = true;
        break;
      }
    }
  }
  if (!generator) {
    out.failure = "ring is not a summand of any bounded power";
    return out;
  }
  out.is_progenerator = true;
  out.witness = std::move(w);
  return out;
}

EndoRing endo_ring(const ModulePtr& p, const Caps& caps) {
  EndoRing out;
  out.module = p;
  out.elements = enumerate_homs(p, p, caps);
  const int t = static_cast<int>(out.elements.size());
  std::map<std::vector<Idx>, Idx> index_of;
  for (Idx i = 0; i < t; ++i) index_of[out.elements[i].map] = i;

  RingTables tables;
  tables.order = t;
  tables.add.resize(static_cast<std::size_t>(t) * t);
  tables.mul.resize(static_cast<std::size_t>(t) * t);
  std::vector<Idx> tmp(p->order());
  for (Idx a = 0; a < t; ++a)
    for (Idx b = 0; b < t; ++b) {
      const auto& fa = out.elements[a].map;
      const auto& fb = out.elements[b].map;
      for (Idx x = 0; x < p->order(); ++x) tmp[x] = p->add(fa[x], fb[x]);
      tables.add[static_cast<std::size_t>(a) * t + b] = index_of.at(tmp);
      // product a b acts by x -> b(a(x)), making h o s a left action
      for (Idx x = 0; x < p->order(); ++x) tmp[x] = fb[fa[x]];
      tables.mul[static_cast<std::size_t>(a) * t + b] = index_of.at(tmp);
    }
  out.ring = std::make_shared<FiniteRing>(std::move(tables));
  return out;
}

HomModule hom_functor(const EndoRing& e, const ModulePtr& m,
                      const Caps& caps) {
  HomModule out;
  out.elements = enumerate_homs(e.module, m, caps);
  const int t = static_cast<int>(out.elements.size());
  std::map<std::vector<Idx>, Idx> index_of;
  for (Idx i = 0; i < t; ++i) index_of[out.elements[i].map] = i;

  ModuleTables tables;
  tables.ring = e.ring;
  tables.order = t;
  tables.add.resize(static_cast<std::size_t>(t) * t);
  tables.act.resize(static_cast<std::size_t>(e.ring->order()) * t);
  const int po = e.module->order();
  std::vector<Idx> tmp(po);
  for (Idx a = 0; a < t; ++a)
    for (Idx b = 0; b < t; ++b) {
      const auto& ha = out.elements[a].map;
      const auto& hb = out.elements[b].map;
      for (Idx x = 0; x < po; ++x) tmp[x] = m->add(ha[x], hb[x]);
      tables.add[static_cast<std::size_t>(a) * t + b] = index_of.at(tmp);
    }
  for (Idx s = 0; s < e.ring->order(); ++s) {
    const auto& fs = e.elements[s].map;
    for (Idx a = 0; a < t; ++a) {
      const auto& ha = out.elements[a].map;
      for (Idx x = 0; x < po; ++x) tmp[x] = ha[fs[x]];
      tables.act[static_cast<std::size_t>(s) * t + a] = index_of.at(tmp);
    }
  }
  out.module = std::make_shared<FiniteModule>(std::move(tables));
  return out;
}

FunctorBijectionReport hom_functor_bijection(const EndoRing& e,
                                             const ModulePtr& u,
                                             const ModulePtr& m,
                                             const Caps& caps) {
  FunctorBijectionReport rep;
  auto fu = hom_functor(e, u, caps);
  auto fm = hom_functor(e, m, caps);
  std::map<std::vector<Idx>, Idx> fm_index;
  for (Idx i = 0; i < fm.module->order(); ++i)
    fm_index[fm.elements[i].map] = i;

  const auto base = enumerate_homs(u, m, caps);
  std::vector<std::vector<Idx>> images;
  rep.all_images_valid = true;
  std::vector<Idx> tmp(e.module->order());
  for (const auto& f : base) {
    // the transported map sends h : P -> U to f o h : P -> M
    std::vector<Idx> img(fu.module->order());
    for (Idx h = 0; h < fu.module->order(); ++h) {
      const auto& hm = fu.elements[h].map;
      for (Idx x = 0; x < e.module->order(); ++x) tmp[x] = f.map[hm[x]];
      img[h] = fm_index.at(tmp);
    }
    if (!hom_is_valid(ModuleHom{fu.module, fm.module, img}))
      rep.all_images_valid = false;
    images.push_back(std::move(img));
  }
  std::sort(images.begin(), images.end());
  rep.injective =
      std::adjacent_find(images.begin(), images.end()) == images.end();
  rep.counts_match =
      images.size() == enumerate_homs(fu.module, fm.module, caps).size();
  return rep;
}

Lemma31Report verify_lemma_3_1(const ModulePtr& p, const ModulePtr& u,
                               const ModulePtr& m, const Caps& caps) {
  Lemma31Report rep;
  rep.probative = progenerator_check(p, caps).is_progenerator;
  auto e = endo_ring(p, caps);
  auto fu = hom_functor(e, u, caps);
  auto fm = hom_functor(e, m, caps);
  rep.base_regular = is_relative_regular(m, u, caps).regular;
  rep.image_regular = is_relative_regular(fm.module, fu.module, caps).regular;
  rep.agree = rep.base_regular == rep.image_regular;
  return rep;
}

Theorem32Report verify_theorem_3_2(const ModulePtr& p, const Caps& caps) {
  Theorem32Report rep;
  rep.probative = progenerator_check(p, caps).is_progenerator;
  rep.base_vnr = vnr_check(p->ring()).regular;
  rep.endo_vnr = vnr_check(endo_ring(p, caps).ring).regular;
  rep.agree = rep.base_vnr == rep.endo_vnr;
  return rep;
}

}  // namespace regulus
