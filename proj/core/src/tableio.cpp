#include "regulus/tableio.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace regulus {

namespace {

/// Token stream over non-blank, non-comment lines. Reports errors by line
/// number (passed through ParseError's offset field).
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  int line() const { return line_; }

  /// Next meaningful line, split on whitespace. False at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      tokens.clear();
      std::istringstream words(raw);
      std::string w;
      while (words >> w) {
        if (w[0] == '#') break;
        tokens.push_back(w);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " (line " + std::to_string(line_) + ")",
                     static_cast<std::size_t>(line_));
  }

  void expect_keyword(const std::string& kw) {
    std::vector<std::string> tokens;
    if (!next(tokens)) fail("expected '" + kw + "', got end of input");
    if (tokens.size() != 1 || tokens[0] != kw)
      fail("expected '" + kw + "'");
  }

  int parse_int(const std::string& tok) const {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail("trailing characters in '" + tok + "'");
    return v;
  }

  /// rows*cols table of indices in [0, bound).
  std::vector<Idx> read_table(int rows, int cols, int bound) {
    std::vector<Idx> table;
    table.reserve(static_cast<std::size_t>(rows) * cols);
    std::vector<std::string> tokens;
    for (int i = 0; i < rows; ++i) {
      if (!next(tokens)) fail("expected a table row, got end of input");
      if (static_cast<int>(tokens.size()) != cols)
        fail("row has " + std::to_string(tokens.size()) + " entries, expected " +
             std::to_string(cols));
      for (const auto& tok : tokens) {
        int v = parse_int(tok);
        if (v < 0 || v >= bound)
          fail("entry " + std::to_string(v) + " out of range [0, " +
               std::to_string(bound) + ")");
        table.push_back(v);
      }
    }
    return table;
  }

 private:
  std::istream& in_;
  int line_ = 0;
};

RingPtr read_ring_body(LineReader& reader, std::vector<std::string> header,
                       const Caps& caps) {
  if (header.empty() || header[0] != "ring")
    reader.fail("expected a 'ring <order>' header");
  if (header.size() != 2) reader.fail("'ring' header takes one argument");
  int order = reader.parse_int(header[1]);
  if (order <= 0) reader.fail("ring order must be positive");
  if (order > caps.ring_order)
    throw CapError("ring in file exceeds the order cap");
  RingTables t;
  t.order = order;
  reader.expect_keyword("add");
  t.add = reader.read_table(order, order, order);
  reader.expect_keyword("mul");
  t.mul = reader.read_table(order, order, order);
  // file tables are untrusted: run the full axiom suite, not just the
  // constructor's shape checks
  if (auto rep = check_ring_axioms(t); !rep.ok())
    throw StructureError("ring file violates '" + rep.clause + "'" +
                         (rep.detail.empty() ? "" : ": " + rep.detail));
  return std::make_shared<FiniteRing>(std::move(t));
}

/// "ring <name> <order>" header inside a context file.
RingPtr read_named_ring(LineReader& reader, const std::string& name,
                        const Caps& caps) {
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) reader.fail("expected 'ring " + name + "'");
  if (tokens.size() != 3 || tokens[0] != "ring" || tokens[1] != name)
    reader.fail("expected 'ring " + name + " <order>'");
  return read_ring_body(reader, {"ring", tokens[2]}, caps);
}

Bimodule read_named_bimodule(LineReader& reader, const std::string& name,
                             const RingPtr& left, const RingPtr& right,
                             const Caps& caps) {
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) reader.fail("expected 'module " + name + "'");
  if (tokens.size() != 3 || tokens[0] != "module" || tokens[1] != name)
    reader.fail("expected 'module " + name + " <order>'");
  int order = reader.parse_int(tokens[2]);
  if (order <= 0) reader.fail("module order must be positive");
  if (order > caps.module_order)
    throw CapError("module in file exceeds the order cap");
  ModuleTables t;
  t.ring = left;
  t.order = order;
  reader.expect_keyword("add");
  t.add = reader.read_table(order, order, order);
  reader.expect_keyword("act");
  t.act = reader.read_table(left->order(), order, order);
  if (auto rep = check_module_axioms(t); !rep.ok())
    throw StructureError("module " + name + " violates '" + rep.clause + "'" +
                         (rep.detail.empty() ? "" : ": " + rep.detail));
  Bimodule b;
  b.left_ring = left;
  b.right_ring = right;
  b.carrier = std::make_shared<FiniteModule>(std::move(t));
  reader.expect_keyword("ract");
  b.right_act = reader.read_table(order, right->order(), order);
  return b;
}

}  // namespace

RingPtr read_ring(std::istream& in, const Caps& caps) {
  LineReader reader(in);
  std::vector<std::string> header;
  if (!reader.next(header)) reader.fail("empty ring file");
  return read_ring_body(reader, std::move(header), caps);
}

RingPtr load_ring(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open ring file: " + path);
  return read_ring(in, caps);
}

void write_ring(std::ostream& out, const FiniteRing& r) {
  const int n = r.order();
  out << "ring " << n << "\n";
  out << "add\n";
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) out << (b ? " " : "") << r.add(a, b);
    out << "\n";
  }
  out << "mul\n";
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) out << (b ? " " : "") << r.mul(a, b);
    out << "\n";
  }
}

void save_ring(const std::string& path, const FiniteRing& r) {
  std::ofstream out(path);
  if (!out) throw StructureError("cannot write ring file: " + path);
  write_ring(out, r);
}

MoritaContext read_context(std::istream& in, const Caps& caps) {
  LineReader reader(in);
  reader.expect_keyword("context");
  MoritaContext ctx;
  ctx.r = read_named_ring(reader, "R", caps);
  ctx.s = read_named_ring(reader, "S", caps);
  ctx.m = read_named_bimodule(reader, "M", ctx.r, ctx.s, caps);
  ctx.n = read_named_bimodule(reader, "N", ctx.s, ctx.r, caps);
  reader.expect_keyword("phi");
  ctx.phi = reader.read_table(ctx.m.carrier->order(), ctx.n.carrier->order(),
                              ctx.r->order());
  reader.expect_keyword("psi");
  ctx.psi = reader.read_table(ctx.n.carrier->order(), ctx.m.carrier->order(),
                              ctx.s->order());
  return ctx;
}

MoritaContext load_context(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open context file: " + path);
  return read_context(in, caps);
}

void write_context(std::ostream& out, const MoritaContext& ctx) {
  const auto write_module = [&out](const char* name, const Bimodule& b) {
    const int n = b.carrier->order();
    out << "module " << name << " " << n << "\n";
    out << "add\n";
    for (Idx a = 0; a < n; ++a) {
      for (Idx x = 0; x < n; ++x) out << (x ? " " : "") << b.carrier->add(a, x);
      out << "\n";
    }
    out << "act\n";
    for (Idx r = 0; r < b.left_ring->order(); ++r) {
      for (Idx x = 0; x < n; ++x) out << (x ? " " : "") << b.carrier->act(r, x);
      out << "\n";
    }
    out << "ract\n";
    for (Idx x = 0; x < n; ++x) {
      for (Idx s = 0; s < b.right_ring->order(); ++s)
        out << (s ? " " : "") << b.right(x, s);
      out << "\n";
    }
  };
  out << "context\n";
  out << "ring R ";
  {
    std::ostringstream body;
    write_ring(body, *ctx.r);
    out << body.str().substr(5);  // drop the duplicate "ring " prefix
  }
  out << "ring S ";
  {
    std::ostringstream body;
    write_ring(body, *ctx.s);
    out << body.str().substr(5);
  }
  write_module("M", ctx.m);
  write_module("N", ctx.n);
  out << "phi\n";
  for (Idx m = 0; m < ctx.m.carrier->order(); ++m) {
    for (Idx n = 0; n < ctx.n.carrier->order(); ++n)
      out << (n ? " " : "") << ctx.phi_at(m, n);
    out << "\n";
  }
  out << "psi\n";
  for (Idx n = 0; n < ctx.n.carrier->order(); ++n) {
    for (Idx m = 0; m < ctx.m.carrier->order(); ++m)
      out << (m ? " " : "") << ctx.psi_at(n, m);
    out << "\n";
  }
}

void save_context(const std::string& path, const MoritaContext& ctx) {
  std::ofstream out(path);
  if (!out) throw StructureError("cannot write context file: " + path);
  write_context(out, ctx);
}

}  // namespace regulus
