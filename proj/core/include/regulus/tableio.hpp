#pragma once

#include <iosfwd>
#include <string>

#include "regulus/common.hpp"
#include "regulus/finmod.hpp"
#include "regulus/finring.hpp"
#include "regulus/morita.hpp"

namespace regulus {

/// Line-oriented ring table format:
///
///   ring <order>
///   add
///   <order> rows of <order> indices
///   mul
///   <order> rows of <order> indices
///
/// Blank lines and lines starting with '#' are ignored. Malformed text
/// raises ParseError with the line number as the offset; tables that parse
/// but violate the ring axioms raise StructureError from the ring
/// constructor.
RingPtr read_ring(std::istream& in, const Caps& caps = {});
RingPtr load_ring(const std::string& path, const Caps& caps = {});

void write_ring(std::ostream& out, const FiniteRing& r);
void save_ring(const std::string& path, const FiniteRing& r);

/// Context file format. Six sections in fixed order, same lexical rules as
/// the ring format:
///
///   context
///   ring R <order>       followed by add and mul tables
///   ring S <order>       followed by add and mul tables
///   module M <order>     followed by add (|M| rows), act (|R| rows),
///                        ract (|M| rows of |S| entries)
///   module N <order>     followed by add, act (|S| rows), ract (of |R|)
///   phi                  |M| rows of |N| entries, values in R
///   psi                  |N| rows of |M| entries, values in S
///
/// Shapes are checked here; the algebraic context laws are checked by
/// check_context / context_ring at the point of use.
MoritaContext read_context(std::istream& in, const Caps& caps = {});
MoritaContext load_context(const std::string& path, const Caps& caps = {});

void write_context(std::ostream& out, const MoritaContext& ctx);
void save_context(const std::string& path, const MoritaContext& ctx);

}  // namespace regulus
