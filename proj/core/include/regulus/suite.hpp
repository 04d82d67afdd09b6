#pragma once

#include <string>
#include <vector>

#include "regulus/catalog.hpp"
#include "regulus/common.hpp"

namespace regulus {

/// One checked fact. `ok` means the asserted implication held (or the check
/// was legitimately skipped); `probative` is false when hypotheses were not
/// met or caps forced a skip, so the item supports no conclusion.
struct SuiteItem {
  std::string section;
  std::string instance;
  bool ok = true;
  bool probative = true;
  std::string detail;
};

struct SuiteResult {
  std::string corpus;
  std::vector<SuiteItem> items;

  int failures() const;
  int non_probative() const;
};

/// Runs every verification section over the corpus, in a fixed order:
/// axiom checks, regularity certificates, the three-way regularity
/// agreement, the two relative-regularity oracles on all small module
/// pairs, extension transfer and its matrix corollary, the idempotent-block
/// criterion, context rings, and the progenerator transfer checks. Items
/// are appended in deterministic corpus order; two runs over the same
/// corpus produce identical results.
SuiteResult run_suite(const Corpus& corpus, const Caps& caps = {});

}  // namespace regulus
