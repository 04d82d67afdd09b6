#pragma once

#include <string>
#include <vector>

#include "regulus/common.hpp"
#include "regulus/extensions.hpp"
#include "regulus/finmod.hpp"
#include "regulus/finring.hpp"
#include "regulus/morita.hpp"

namespace regulus {

struct CorpusRing {
  std::string name;
  RingPtr ring;
};

struct CorpusModule {
  std::string name;
  int ring_index;  // position in Corpus::rings
  ModulePtr module;
};

struct CorpusExtension {
  std::string name;
  ExtensionDescriptor descriptor;
};

struct CorpusContext {
  std::string name;
  MoritaContext context;
};

/// A fixed, deterministically ordered collection of instances. Modules are
/// grouped by ring: zero module, regular module, its direct powers up to the
/// module cap, then proper ideals and quotients of the regular module,
/// deduplicated by table equality.
struct Corpus {
  std::string name;
  std::vector<CorpusRing> rings;
  std::vector<CorpusModule> modules;
  std::vector<CorpusExtension> extensions;
  std::vector<CorpusContext> contexts;

  /// Indices into `modules` belonging to one ring, in corpus order.
  std::vector<int> modules_of(int ring_index) const;
};

/// Names accepted by corpus_by_name, in display order.
std::vector<std::string> corpus_names();

/// "default" is the full instance set; "smoke" is a small fast subset.
Corpus corpus_by_name(const std::string& name, const Caps& caps = {});
Corpus default_corpus(const Caps& caps = {});
Corpus smoke_corpus(const Caps& caps = {});

/// Table texts of the bundled fixture rings, byte-identical to the files
/// under tests/fixtures/. The corpus parses them through the regular table
/// reader, so the file format is exercised on every run.
const char* dual_numbers_table();  // F2[x]/(x^2), order 4
const char* gf4_table();           // the four-element field
const char* triangular2_table();   // upper triangular 2x2 over F2, order 8

}  // namespace regulus
