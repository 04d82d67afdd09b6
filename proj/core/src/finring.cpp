#include "regulus/finring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace regulus {

namespace {

std::vector<std::string> default_labels(int order) {
  std::vector<std::string> ls(order);
  for (int i = 0; i < order; ++i) ls[i] = std::to_string(i);
  return ls;
}

AxiomReport fail_structural(std::string clause, std::string detail) {
  return AxiomReport{AxiomReport::Kind::structural, std::move(clause), {},
                     std::move(detail)};
}

AxiomReport fail_axiom(std::string clause, std::vector<Idx> witness,
                       std::string detail) {
  return AxiomReport{AxiomReport::Kind::axiom, std::move(clause),
                     std::move(witness), std::move(detail)};
}

AxiomReport check_table_shape(int order, const std::vector<Idx>& table,
                              const char* name) {
  if (order <= 0)
    return fail_structural("table-shape", "order must be positive");
  auto expect = static_cast<std::size_t>(order) * static_cast<std::size_t>(order);
  if (table.size() != expect)
    return fail_structural("table-shape",
                           std::string(name) + " table has wrong size");
  for (Idx v : table)
    if (v < 0 || v >= order)
      return fail_structural("entry-range",
                             std::string(name) + " entry out of range");
  return {};
}

AxiomReport check_labels(int order, const std::vector<std::string>& labels) {
  if (labels.empty()) return {};
  if (static_cast<int>(labels.size()) != order)
    return fail_structural("labels", "label count does not match order");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != order)
    return fail_structural("labels", "labels are not distinct");
  return {};
}

}  // namespace

AxiomReport check_ring_axioms(const RingTables& t) {
  if (auto r = check_table_shape(t.order, t.add, "add"); !r.ok()) return r;
  if (auto r = check_table_shape(t.order, t.mul, "mul"); !r.ok()) return r;
  if (auto r = check_labels(t.order, t.labels); !r.ok()) return r;
  const int n = t.order;
  auto add = [&](Idx a, Idx b) { return detail::at(t.add, n, a, b); };
  auto mul = [&](Idx a, Idx b) { return detail::at(t.mul, n, a, b); };

  for (Idx a = 0; a < n; ++a)
    if (add(0, a) != a || add(a, 0) != a)
      return fail_axiom("additive-identity-at-0", {a},
                        "index 0 is not a two-sided additive identity");
  for (Idx a = 0; a < n; ++a)
    for (Idx b = a; b < n; ++b)
      if (add(a, b) != add(b, a))
        return fail_axiom("add-commutativity", {a, b}, "a+b != b+a");
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c)))
          return fail_axiom("add-associativity", {a, b, c},
                            "(a+b)+c != a+(b+c)");
  for (Idx a = 0; a < n; ++a) {
    bool found = false;
    for (Idx b = 0; b < n && !found; ++b)
      if (add(a, b) == 0) found = true;
    if (!found) return fail_axiom("add-inverse", {a}, "a has no negative");
  }
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return fail_axiom("mul-associativity", {a, b, c},
                            "(a*b)*c != a*(b*c)");
  {
    bool found = false;
    for (Idx e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (Idx a = 0; a < n && ok; ++a)
        if (mul(e, a) != a || mul(a, e) != a) ok = false;
      if (ok) found = true;
    }
    if (!found)
      return fail_axiom("mul-identity", {},
                        "no two-sided multiplicative identity");
  }
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          return fail_axiom("left-distributivity", {a, b, c},
                            "a*(b+c) != a*b + a*c");
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          return fail_axiom("right-distributivity", {a, b, c},
                            "(a+b)*c != a*c + b*c");
      }
  return {};
}

FiniteRing::FiniteRing(RingTables t)
    : order_(t.order),
      add_(std::move(t.add)),
      mul_(std::move(t.mul)),
      labels_(std::move(t.labels)) {
  if (auto r = check_table_shape(order_, add_, "add"); !r.ok())
    throw StructureError(r.detail);
  if (auto r = check_table_shape(order_, mul_, "mul"); !r.ok())
    throw StructureError(r.detail);
  if (labels_.empty()) labels_ = default_labels(order_);
  if (auto r = check_labels(order_, labels_); !r.ok())
    throw StructureError(r.detail);
  for (Idx a = 0; a < order_; ++a)
    if (add(0, a) != a || add(a, 0) != a)
      throw StructureError("index 0 is not the additive identity");
  neg_.assign(order_, -1);
  for (Idx a = 0; a < order_; ++a) {
    for (Idx b = 0; b < order_; ++b)
      if (add(a, b) == 0) {
        neg_[a] = b;
        break;
      }
    if (neg_[a] < 0) throw StructureError("addition is not a group");
  }
  one_ = -1;
  for (Idx e = 0; e < order_ && one_ < 0; ++e) {
    bool ok = true;
    for (Idx a = 0; a < order_ && ok; ++a)
      if (mul(e, a) != a || mul(a, e) != a) ok = false;
    if (ok) one_ = e;
  }
  if (one_ < 0) throw StructureError("no multiplicative identity");
}

int FiniteRing::additive_order(Idx a) const {
  int k = 1;
  Idx x = a;
  while (x != 0) {
    x = add(x, a);
    ++k;
  }
  return k;
}

bool structurally_equal(const FiniteRing& a, const FiniteRing& b) {
  return a.order() == b.order() && a.add_table() == b.add_table() &&
         a.mul_table() == b.mul_table();
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return structurally_equal(*a, *b);
}

bool is_commutative(const FiniteRing& r) {
  for (Idx a = 0; a < r.order(); ++a)
    for (Idx b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

RingPtr cyclic_ring(int n, const Caps& caps) {
  if (n < 1) throw UsageError("cyclic ring needs n >= 1");
  if (n > caps.ring_order) throw CapError("ring order cap exceeded");
  RingTables t;
  t.order = n;
  t.add.resize(static_cast<std::size_t>(n) * n);
  t.mul.resize(static_cast<std::size_t>(n) * n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      t.add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
      t.mul[static_cast<std::size_t>(a) * n + b] =
          static_cast<Idx>((static_cast<long long>(a) * b) % n);
    }
  t.labels = default_labels(n);
  return std::make_shared<FiniteRing>(std::move(t));
}

RingPtr product_ring(const RingPtr& r1, const RingPtr& r2, const Caps& caps) {
  const long long n = static_cast<long long>(r1->order()) * r2->order();
  if (n > caps.ring_order) throw CapError("ring order cap exceeded");
  const int o2 = r2->order();
  RingTables t;
  t.order = static_cast<int>(n);
  t.add.resize(static_cast<std::size_t>(n) * n);
  t.mul.resize(static_cast<std::size_t>(n) * n);
  t.labels.resize(n);
  for (Idx a = 0; a < t.order; ++a) {
    t.labels[a] =
        "(" + r1->label(a / o2) + "," + r2->label(a % o2) + ")";
    for (Idx b = 0; b < t.order; ++b) {
      Idx s = r1->add(a / o2, b / o2) * o2 + r2->add(a % o2, b % o2);
      Idx p = r1->mul(a / o2, b / o2) * o2 + r2->mul(a % o2, b % o2);
      t.add[static_cast<std::size_t>(a) * t.order + b] = s;
      t.mul[static_cast<std::size_t>(a) * t.order + b] = p;
    }
  }
  return std::make_shared<FiniteRing>(std::move(t));
}

Idx VectorCodec::encode(const std::vector<Idx>& digits) const {
  long long v = 0;
  for (int i = length - 1; i >= 0; --i) v = v * base + digits[i];
  return static_cast<Idx>(v);
}

std::vector<Idx> VectorCodec::decode(Idx v) const {
  std::vector<Idx> digits(length);
  long long x = v;
  for (int i = 0; i < length; ++i) {
    digits[i] = static_cast<Idx>(x % base);
    x /= base;
  }
  return digits;
}

namespace {

/// |R|^k with a cap guard; throws CapError if the result would exceed cap.
int checked_power_order(int base, int k, int cap) {
  long long v = 1;
  for (int i = 0; i < k; ++i) {
    v *= base;
    if (v > cap) throw CapError("ring order cap exceeded");
  }
  return static_cast<int>(v);
}

}  // namespace

MatrixRing matrix_ring(const RingPtr& r, int n, const Caps& caps) {
  if (n < 1) throw UsageError("matrix ring needs n >= 1");
  const int cells = n * n;
  const int order = checked_power_order(r->order(), cells, caps.ring_order);
  VectorCodec codec{r->order(), cells};
  RingTables t;
  t.order = order;
  t.add.resize(static_cast<std::size_t>(order) * order);
  t.mul.resize(static_cast<std::size_t>(order) * order);
  t.labels.resize(order);
  std::vector<std::vector<Idx>> dec(order);
  for (Idx v = 0; v < order; ++v) dec[v] = codec.decode(v);
  for (Idx v = 0; v < order; ++v) {
    std::string lab = "[";
    for (int i = 0; i < n; ++i) {
      if (i) lab += "; ";
      for (int j = 0; j < n; ++j) {
        if (j) lab += " ";
        lab += r->label(dec[v][i * n + j]);
      }
    }
    lab += "]";
    t.labels[v] = lab;
  }
  std::vector<Idx> sum(cells), prod(cells);
  for (Idx a = 0; a < order; ++a)
    for (Idx b = 0; b < order; ++b) {
      for (int c = 0; c < cells; ++c) sum[c] = r->add(dec[a][c], dec[b][c]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Idx acc = 0;
          for (int k = 0; k < n; ++k)
            acc = r->add(acc, r->mul(dec[a][i * n + k], dec[b][k * n + j]));
          prod[i * n + j] = acc;
        }
      t.add[static_cast<std::size_t>(a) * order + b] = codec.encode(sum);
      t.mul[static_cast<std::size_t>(a) * order + b] = codec.encode(prod);
    }
  return MatrixRing{std::make_shared<FiniteRing>(std::move(t)), codec, n};
}

AxiomReport check_group_axioms(const GroupTables& t) {
  if (auto r = check_table_shape(t.order, t.mul, "mul"); !r.ok()) return r;
  if (auto r = check_labels(t.order, t.labels); !r.ok()) return r;
  const int n = t.order;
  auto mul = [&](Idx a, Idx b) { return detail::at(t.mul, n, a, b); };
  for (Idx a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      return fail_axiom("identity-at-0", {a},
                        "index 0 is not a two-sided identity");
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return fail_axiom("associativity", {a, b, c}, "(ab)c != a(bc)");
  for (Idx a = 0; a < n; ++a) {
    bool found = false;
    for (Idx b = 0; b < n && !found; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) found = true;
    if (!found) return fail_axiom("inverse", {a}, "a has no inverse");
  }
  return {};
}

FiniteGroup::FiniteGroup(GroupTables t)
    : order_(t.order), mul_(std::move(t.mul)), labels_(std::move(t.labels)) {
  if (labels_.empty()) labels_ = default_labels(order_);
  auto rep = check_group_axioms(GroupTables{order_, mul_, labels_});
  if (!rep.ok()) throw StructureError("invalid group tables: " + rep.clause);
  inv_.assign(order_, -1);
  for (Idx a = 0; a < order_; ++a)
    for (Idx b = 0; b < order_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw UsageError("cyclic group needs n >= 1");
  GroupTables t;
  t.order = n;
  t.mul.resize(static_cast<std::size_t>(n) * n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      t.mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  t.labels.resize(n);
  for (Idx a = 0; a < n; ++a)
    t.labels[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
  return std::make_shared<FiniteGroup>(std::move(t));
}

GroupPtr klein_four_group() {
  GroupTables t;
  t.order = 4;
  t.mul = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  t.labels = {"e", "a", "b", "ab"};
  return std::make_shared<FiniteGroup>(std::move(t));
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 5) throw UsageError("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<Idx>> perms;
  std::vector<Idx> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<Idx>, Idx> index;
  for (Idx i = 0; i < static_cast<Idx>(perms.size()); ++i) index[perms[i]] = i;
  const int order = static_cast<int>(perms.size());
  GroupTables t;
  t.order = order;
  t.mul.resize(static_cast<std::size_t>(order) * order);
  t.labels.resize(order);
  for (Idx a = 0; a < order; ++a) {
    std::string lab;
    for (int i = 0; i < n; ++i) lab += std::to_string(perms[a][i] + 1);
    t.labels[a] = lab;
    for (Idx b = 0; b < order; ++b) {
      std::vector<Idx> comp(n);
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      t.mul[static_cast<std::size_t>(a) * order + b] = index[comp];
    }
  }
  return std::make_shared<FiniteGroup>(std::move(t));
}

GroupRing group_ring(const RingPtr& r, const GroupPtr& g, const Caps& caps) {
  const int order = checked_power_order(r->order(), g->order(), caps.ring_order);
  VectorCodec codec{r->order(), g->order()};
  RingTables t;
  t.order = order;
  t.add.resize(static_cast<std::size_t>(order) * order);
  t.mul.resize(static_cast<std::size_t>(order) * order);
  t.labels.resize(order);
  std::vector<std::vector<Idx>> dec(order);
  for (Idx v = 0; v < order; ++v) dec[v] = codec.decode(v);
  for (Idx v = 0; v < order; ++v) {
    std::string lab;
    for (int i = 0; i < g->order(); ++i) {
      Idx c = dec[v][i];
      if (c == 0) continue;
      if (!lab.empty()) lab += "+";
      if (i == 0) {
        lab += r->label(c);
      } else if (c == r->one()) {
        lab += g->label(i);
      } else {
        lab += r->label(c) + "*" + g->label(i);
      }
    }
    t.labels[v] = lab.empty() ? "0" : lab;
  }
  std::vector<Idx> sum(g->order()), prod(g->order());
  for (Idx a = 0; a < order; ++a)
    for (Idx b = 0; b < order; ++b) {
      for (int i = 0; i < g->order(); ++i) sum[i] = r->add(dec[a][i], dec[b][i]);
      std::fill(prod.begin(), prod.end(), 0);
      for (int i = 0; i < g->order(); ++i)
        for (int j = 0; j < g->order(); ++j) {
          Idx k = g->mul(i, j);
          prod[k] = r->add(prod[k], r->mul(dec[a][i], dec[b][j]));
        }
      t.add[static_cast<std::size_t>(a) * order + b] = codec.encode(sum);
      t.mul[static_cast<std::size_t>(a) * order + b] = codec.encode(prod);
    }
  return GroupRing{std::make_shared<FiniteRing>(std::move(t)), codec};
}

RingPtr opposite_ring(const RingPtr& r) {
  const int n = r->order();
  RingTables t;
  t.order = n;
  t.add = r->add_table();
  t.mul.resize(static_cast<std::size_t>(n) * n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      t.mul[static_cast<std::size_t>(a) * n + b] = r->mul(b, a);
  t.labels = r->labels();
  return std::make_shared<FiniteRing>(std::move(t));
}

std::vector<Idx> idempotents(const FiniteRing& r) {
  std::vector<Idx> es;
  for (Idx e = 0; e < r.order(); ++e)
    if (r.mul(e, e) == e) es.push_back(e);
  return es;
}

std::vector<std::vector<Idx>> complete_orthogonal_families(const FiniteRing& r,
                                                           int k) {
  if (k < 1) throw UsageError("family size must be >= 1");
  const auto es = idempotents(r);
  std::vector<std::vector<Idx>> out;
  std::vector<Idx> cur;
  auto rec = [&](auto&& self, Idx partial_sum) -> void {
    if (static_cast<int>(cur.size()) == k) {
      if (partial_sum == r.one()) out.push_back(cur);
      return;
    }
    for (Idx e : es) {
      bool ortho = true;
      for (Idx f : cur)
        if (r.mul(e, f) != 0 || r.mul(f, e) != 0) {
          ortho = false;
          break;
        }
      if (!ortho) continue;
      cur.push_back(e);
      self(self, r.add(partial_sum, e));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CornerRing corner_ring(const RingPtr& r, Idx e) {
  if (e < 0 || e >= r->order() || r->mul(e, e) != e)
    throw UsageError("corner element must be an idempotent");
  std::set<Idx> carrier_set;
  for (Idx x = 0; x < r->order(); ++x)
    carrier_set.insert(r->mul(r->mul(e, x), e));
  std::vector<Idx> carrier(carrier_set.begin(), carrier_set.end());
  const int n = static_cast<int>(carrier.size());
  std::vector<Idx> pos(r->order(), -1);
  for (int i = 0; i < n; ++i) pos[carrier[i]] = i;
  RingTables t;
  t.order = n;
  t.add.resize(static_cast<std::size_t>(n) * n);
  t.mul.resize(static_cast<std::size_t>(n) * n);
  t.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    t.labels[i] = r->label(carrier[i]);
    for (int j = 0; j < n; ++j) {
      t.add[static_cast<std::size_t>(i) * n + j] =
          pos[r->add(carrier[i], carrier[j])];
      t.mul[static_cast<std::size_t>(i) * n + j] =
          pos[r->mul(carrier[i], carrier[j])];
    }
  }
  return CornerRing{std::make_shared<FiniteRing>(std::move(t)), carrier};
}

namespace detail {

std::vector<Idx> additive_generators(int order, const std::vector<Idx>& add) {
  std::vector<char> in_span(order, 0);
  in_span[0] = 1;
  int span_size = 1;
  std::vector<Idx> span = {0};
  std::vector<Idx> gens;
  while (span_size < order) {
    Idx g = -1;
    for (Idx x = 0; x < order; ++x)
      if (!in_span[x]) {
        g = x;
        break;
      }
    gens.push_back(g);
    // close the span under addition with the new generator
    std::vector<Idx> work = {g};
    in_span[g] = 1;
    span.push_back(g);
    ++span_size;
    while (!work.empty()) {
      Idx x = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < span.size(); ++i) {
        Idx s = regulus::detail::at(add, order, x, span[i]);
        if (!in_span[s]) {
          in_span[s] = 1;
          span.push_back(s);
          ++span_size;
          work.push_back(s);
        }
      }
    }
  }
  return gens;
}

}  // namespace detail

std::vector<int> additive_invariants(int order, const std::vector<Idx>& add) {
  // additive order of each element
  std::vector<int> ord(order, 0);
  for (Idx a = 0; a < order; ++a) {
    int k = 1;
    Idx x = a;
    while (x != 0) {
      x = detail::at(add, order, x, a);
      ++k;
    }
    ord[a] = k;
  }
  std::vector<int> factors;
  // for each prime p, recover the partition of the p-primary component from
  // the counts of elements of order dividing p^j
  std::set<int> primes;
  for (int o : ord)
    for (int p = 2; p <= o; ++p)
      if (o % p == 0) {
        primes.insert(p);
        while (o % p == 0) o /= p;
      }
  for (int p : primes) {
    // e_j = log_p #{x : x has p-power order dividing p^j}
    std::vector<int> e = {0};
    for (int j = 1;; ++j) {
      long long pj = 1;
      for (int i = 0; i < j; ++i) pj *= p;
      int count = 0;
      for (int o : ord) {
        // x lies in the p-primary part iff its order is a p-power
        int q = o;
        while (q % p == 0) q /= p;
        if (q == 1 && pj % o == 0) ++count;
      }
      int ej = 0;
      long long c = count;
      while (c > 1) {
        c /= p;
        ++ej;
      }
      e.push_back(ej);
      if (j > 1 && e[j] == e[j - 1]) break;
      if (pj > order) break;
    }
    // d_j = number of parts >= j; multiplicity of part j is d_j - d_{j+1}
    std::vector<int> d;
    for (std::size_t j = 1; j < e.size(); ++j) d.push_back(e[j] - e[j - 1]);
    d.push_back(0);
    for (std::size_t j = 0; j + 1 < d.size(); ++j) {
      int mult = d[j] - d[j + 1];
      long long pj = 1;
      for (std::size_t i = 0; i <= j; ++i) pj *= p;
      for (int m = 0; m < mult; ++m) factors.push_back(static_cast<int>(pj));
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

namespace {

/// Backtracking isomorphism search shared state.
struct IsoSearch {
  const FiniteRing& a;
  const FiniteRing& b;
  std::vector<Idx> gens;       // additive generators of a
  std::vector<Idx> img;        // a-index -> b-index, -1 unknown
  std::vector<Idx> used_by;    // b-index -> a-index, -1 unknown
  std::vector<Idx> span;       // a-elements with img defined, insertion order
  std::vector<int> a_ord;      // additive orders in a
  std::vector<int> b_ord;

  bool define(Idx ax, Idx bx, std::vector<Idx>& log) {
    if (img[ax] >= 0) return img[ax] == bx;
    if (used_by[bx] >= 0) return false;
    img[ax] = bx;
    used_by[bx] = ax;
    span.push_back(ax);
    log.push_back(ax);
    return true;
  }

  void undo(const std::vector<Idx>& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
      used_by[img[*it]] = -1;
      img[*it] = -1;
      span.pop_back();
    }
  }

  /// Close the partial map additively after newly defining `seed`; cheap
  /// multiplicative consistency checks along the way. Conflicts => false.
  bool close(Idx seed, std::vector<Idx>& log) {
    std::vector<Idx> work = {seed};
    while (!work.empty()) {
      Idx x = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < span.size(); ++i) {
        Idx e = span[i];
        Idx s = a.add(x, e);
        Idx t = b.add(img[x], img[e]);
        if (img[s] >= 0) {
          if (img[s] != t) return false;
        } else {
          if (!define(s, t, log)) return false;
          work.push_back(s);
        }
        // products with both factors mapped and the product already mapped
        Idx p1 = a.mul(x, e);
        if (img[p1] >= 0 && img[p1] != b.mul(img[x], img[e])) return false;
        Idx p2 = a.mul(e, x);
        if (img[p2] >= 0 && img[p2] != b.mul(img[e], img[x])) return false;
      }
    }
    return true;
  }

  bool full_check() const {
    if (img[a.one()] != b.one()) return false;
    for (Idx x = 0; x < a.order(); ++x)
      for (Idx y = 0; y < a.order(); ++y) {
        if (img[a.add(x, y)] != b.add(img[x], img[y])) return false;
        if (img[a.mul(x, y)] != b.mul(img[x], img[y])) return false;
      }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == gens.size()) return full_check();
    Idx g = gens[depth];
    for (Idx cand = 0; cand < b.order(); ++cand) {
      if (used_by[cand] >= 0) continue;
      if (b_ord[cand] != a_ord[g]) continue;
      std::vector<Idx> log;
      if (define(g, cand, log) && close(g, log)) {
        if (dfs(depth + 1)) return true;
      }
      undo(log);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Idx>> find_ring_isomorphism(const FiniteRing& a,
                                                      const FiniteRing& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (additive_invariants(a.order(), a.add_table()) !=
      additive_invariants(b.order(), b.add_table()))
    return std::nullopt;
  if (idempotents(a).size() != idempotents(b).size()) return std::nullopt;
  if (is_commutative(a) != is_commutative(b)) return std::nullopt;

  IsoSearch s{a, b, {}, {}, {}, {}, {}, {}};
  s.gens = detail::additive_generators(a.order(), a.add_table());
  s.img.assign(a.order(), -1);
  s.used_by.assign(b.order(), -1);
  s.a_ord.resize(a.order());
  s.b_ord.resize(b.order());
  for (Idx x = 0; x < a.order(); ++x) s.a_ord[x] = a.additive_order(x);
  for (Idx x = 0; x < b.order(); ++x) s.b_ord[x] = b.additive_order(x);
  std::vector<Idx> root_log;
  s.define(0, 0, root_log);
  if (s.dfs(0)) return s.img;
  return std::nullopt;
}

}  // namespace regulus
