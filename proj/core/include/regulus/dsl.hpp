#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "regulus/common.hpp"
#include "regulus/extensions.hpp"
#include "regulus/finmod.hpp"
#include "regulus/finring.hpp"
#include "regulus/morita.hpp"

namespace regulus {

/// Expression tree for the construction language. Nodes are either literals
/// or constructor applications:
///
///   rings:      Zn(n), Prod(r, r), Mat(n, r), GroupRing(r, g), Op(r),
///               Corner(r, e), TableRing("file")
///   modules:    Free(k, r), Zero(r); a bare ring expression in module
///               position means its regular left module
///   groups:     Cyclic(n), Sym(n), Klein4()
///   extensions: MatExt(n, r), GroupRingExt(r, g); a bare Mat or GroupRing
///               expression in extension position lifts to the same
///               descriptor
///   contexts:   StdCtx(r), ZeroCtx(r, s), TableCtx("file")
///
/// Literals are nonnegative integers and double-quoted file names.
struct Expr {
  enum class Kind { integer, text, call };
  Kind kind = Kind::call;
  std::int64_t number = 0;  // integer literals
  std::string word;         // constructor name, or text literal content
  std::vector<Expr> args;

  bool operator==(const Expr& other) const;
};

/// Parses one expression covering the whole input (trailing whitespace
/// allowed). Unknown constructors, wrong arity, and malformed syntax raise
/// ParseError carrying the byte offset of the problem.
Expr parse(const std::string& text);

/// Canonical text form; parse(print(e)) == e.
std::string print(const Expr& e);

/// Evaluated instance of any kind the language can denote.
struct Instance {
  enum class Kind { ring, module, group, extension, context };
  Kind kind = Kind::ring;
  RingPtr ring;
  ModulePtr module;
  GroupPtr group;
  std::shared_ptr<ExtensionDescriptor> extension;
  std::shared_ptr<MoritaContext> context;
};

const char* to_string(Instance::Kind k);

/// Evaluates an expression to whatever kind it denotes. Integer and text
/// literals are not instances by themselves and raise UsageError here.
/// Structural misuse (e.g. Corner with a non-idempotent) raises UsageError;
/// size violations propagate as CapError.
Instance evaluate(const Expr& e, const Caps& caps = {});

/// Kind-directed conveniences. Each evaluates and coerces, applying the
/// documented lifts (ring to regular module; Mat/GroupRing to extension),
/// and raises UsageError when the expression denotes something else.
RingPtr evaluate_ring(const Expr& e, const Caps& caps = {});
ModulePtr evaluate_module(const Expr& e, const Caps& caps = {});
GroupPtr evaluate_group(const Expr& e, const Caps& caps = {});
ExtensionDescriptor evaluate_extension(const Expr& e, const Caps& caps = {});
MoritaContext evaluate_context(const Expr& e, const Caps& caps = {});

}  // namespace regulus
