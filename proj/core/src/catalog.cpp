#include "regulus/catalog.hpp"

#include <sstream>

#include "regulus/tableio.hpp"

namespace regulus {

const char* dual_numbers_table() {
  return
      "ring 4\n"
      "add\n"
      "0 1 2 3\n"
      "1 0 3 2\n"
      "2 3 0 1\n"
      "3 2 1 0\n"
      "mul\n"
      "0 0 0 0\n"
      "0 1 2 3\n"
      "0 2 0 2\n"
      "0 3 2 1\n";
}

const char* gf4_table() {
  return
      "ring 4\n"
      "add\n"
      "0 1 2 3\n"
      "1 0 3 2\n"
      "2 3 0 1\n"
      "3 2 1 0\n"
      "mul\n"
      "0 0 0 0\n"
      "0 1 2 3\n"
      "0 2 3 1\n"
      "0 3 1 2\n";
}

const char* triangular2_table() {
  return
      "ring 8\n"
      "add\n"
      "0 1 2 3 4 5 6 7\n"
      "1 0 3 2 5 4 7 6\n"
      "2 3 0 1 6 7 4 5\n"
      "3 2 1 0 7 6 5 4\n"
      "4 5 6 7 0 1 2 3\n"
      "5 4 7 6 1 0 3 2\n"
      "6 7 4 5 2 3 0 1\n"
      "7 6 5 4 3 2 1 0\n"
      "mul\n"
      "0 0 0 0 0 0 0 0\n"
      "0 1 0 1 0 1 0 1\n"
      "0 2 0 2 0 2 0 2\n"
      "0 3 0 3 0 3 0 3\n"
      "0 0 2 2 4 4 6 6\n"
      "0 1 2 3 4 5 6 7\n"
      "0 2 2 0 4 6 6 4\n"
      "0 3 2 1 4 7 6 5\n";
}

std::vector<int> Corpus::modules_of(int ring_index) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(modules.size()); ++i)
    if (modules[i].ring_index == ring_index) out.push_back(i);
  return out;
}

namespace {

RingPtr fixture_ring(const char* text, const Caps& caps) {
  std::istringstream in(text);
  return read_ring(in, caps);
}

bool same_tables(const ModulePtr& a, const ModulePtr& b) {
  return a->order() == b->order() && a->add_table() == b->add_table() &&
         a->act_table() == b->act_table();
}

/// Zero module, regular module, its powers, then proper ideals and
/// quotients, deduplicated by table equality within the ring's group.
void add_modules(Corpus& corpus, int ring_index, const Caps& caps) {
  const RingPtr& r = corpus.rings[ring_index].ring;
  const std::string& rn = corpus.rings[ring_index].name;
  std::vector<ModulePtr> group;
  auto push = [&](const std::string& suffix, const ModulePtr& m) {
    for (const auto& other : group)
      if (same_tables(m, other)) return;
    group.push_back(m);
    corpus.modules.push_back(CorpusModule{rn + " " + suffix, ring_index, m});
  };

  push("zero", zero_module(r));
  auto reg = regular_left_module(r);
  if (reg->order() > caps.module_order) return;
  push("regular", reg);
  ModulePtr power = reg;
  for (int k = 2; k <= 3; ++k) {
    if (static_cast<std::int64_t>(power->order()) * reg->order() >
        caps.module_order)
      break;
    power = direct_sum(power, reg).module;
    push("regular^" + std::to_string(k), power);
  }
  auto subs = all_submodules(reg, caps);
  int ideal_count = 0;
  for (const auto& sub : subs) {
    if (sub.order() == 1 || sub.order() == reg->order()) continue;
    push("ideal" + std::to_string(++ideal_count),
         submodule_as_module(sub).module);
  }
  int quot_count = 0;
  for (const auto& sub : subs) {
    if (sub.order() == 1 || sub.order() == reg->order()) continue;
    push("quotient" + std::to_string(++quot_count),
         quotient_module(sub).module);
  }
}

void add_ring(Corpus& corpus, std::string name, RingPtr ring,
              const Caps& caps) {
  corpus.rings.push_back(CorpusRing{std::move(name), std::move(ring)});
  add_modules(corpus, static_cast<int>(corpus.rings.size()) - 1, caps);
}

}  // namespace

Corpus default_corpus(const Caps& caps) {
  Corpus corpus;
  corpus.name = "default";
  for (int n = 1; n <= 8; ++n)
    add_ring(corpus, "Zn(" + std::to_string(n) + ")", cyclic_ring(n, caps),
             caps);
  add_ring(corpus, "Prod(Zn(2), Zn(2))",
           product_ring(cyclic_ring(2, caps), cyclic_ring(2, caps), caps),
           caps);
  add_ring(corpus, "Mat(2, Zn(2))", matrix_ring(cyclic_ring(2, caps), 2, caps).ring,
           caps);
  add_ring(corpus, "Mat(2, Zn(3))", matrix_ring(cyclic_ring(3, caps), 2, caps).ring,
           caps);
  add_ring(corpus, "Mat(2, Zn(4))", matrix_ring(cyclic_ring(4, caps), 2, caps).ring,
           caps);
  add_ring(corpus, "GroupRing(Zn(2), Cyclic(2))",
           group_ring(cyclic_ring(2, caps), cyclic_group(2), caps).ring, caps);
  add_ring(corpus, "GroupRing(Zn(3), Cyclic(2))",
           group_ring(cyclic_ring(3, caps), cyclic_group(2), caps).ring, caps);
  add_ring(corpus, "fixture:dual-numbers",
           fixture_ring(dual_numbers_table(), caps), caps);
  add_ring(corpus, "fixture:gf4", fixture_ring(gf4_table(), caps), caps);
  add_ring(corpus, "fixture:triangular2",
           fixture_ring(triangular2_table(), caps), caps);

  for (int n : {2, 3, 4, 6})
    corpus.extensions.push_back(CorpusExtension{
        "MatExt(2, Zn(" + std::to_string(n) + "))",
        matrix_extension(cyclic_ring(n, caps), 2, caps)});
  corpus.extensions.push_back(CorpusExtension{
      "GroupRingExt(Zn(2), Cyclic(2))",
      group_ring_extension(cyclic_ring(2, caps), cyclic_group(2), caps)});
  corpus.extensions.push_back(CorpusExtension{
      "GroupRingExt(Zn(3), Cyclic(2))",
      group_ring_extension(cyclic_ring(3, caps), cyclic_group(2), caps)});

  for (int n : {2, 3, 4})
    corpus.contexts.push_back(
        CorpusContext{"StdCtx(Zn(" + std::to_string(n) + "))",
                      standard_context(cyclic_ring(n, caps))});
  corpus.contexts.push_back(
      CorpusContext{"ZeroCtx(Zn(2), Zn(3))",
                    zero_context(cyclic_ring(2, caps), cyclic_ring(3, caps))});
  return corpus;
}

Corpus smoke_corpus(const Caps& caps) {
  Corpus corpus;
  corpus.name = "smoke";
  add_ring(corpus, "Zn(2)", cyclic_ring(2, caps), caps);
  add_ring(corpus, "Zn(4)", cyclic_ring(4, caps), caps);
  add_ring(corpus, "Zn(6)", cyclic_ring(6, caps), caps);
  add_ring(corpus, "Mat(2, Zn(2))",
           matrix_ring(cyclic_ring(2, caps), 2, caps).ring, caps);
  add_ring(corpus, "GroupRing(Zn(2), Cyclic(2))",
           group_ring(cyclic_ring(2, caps), cyclic_group(2), caps).ring, caps);
  corpus.extensions.push_back(
      CorpusExtension{"MatExt(2, Zn(2))",
                      matrix_extension(cyclic_ring(2, caps), 2, caps)});
  corpus.extensions.push_back(CorpusExtension{
      "GroupRingExt(Zn(2), Cyclic(2))",
      group_ring_extension(cyclic_ring(2, caps), cyclic_group(2), caps)});
  corpus.contexts.push_back(CorpusContext{
      "StdCtx(Zn(2))", standard_context(cyclic_ring(2, caps))});
  corpus.contexts.push_back(
      CorpusContext{"ZeroCtx(Zn(2), Zn(3))",
                    zero_context(cyclic_ring(2, caps), cyclic_ring(3, caps))});
  return corpus;
}

std::vector<std::string> corpus_names() { return {"default", "smoke"}; }

Corpus corpus_by_name(const std::string& name, const Caps& caps) {
  if (name == "default") return default_corpus(caps);
  if (name == "smoke") return smoke_corpus(caps);
  throw UsageError("unknown corpus '" + name + "'");
}

}  // namespace regulus
