#include "regulus/dsl.hpp"

#include <cctype>
#include <map>

#include "regulus/tableio.hpp"

namespace regulus {

bool Expr::operator==(const Expr& other) const {
  return kind == other.kind && number == other.number && word == other.word &&
         args == other.args;
}

namespace {

const std::map<std::string, int>& constructor_arity() {
  static const std::map<std::string, int> table = {
      {"Zn", 1},     {"Prod", 2},   {"Mat", 2},    {"GroupRing", 2},
      {"Op", 1},     {"Corner", 2}, {"TableRing", 1},
      {"Free", 2},   {"Zero", 1},
      {"Cyclic", 1}, {"Sym", 1},    {"Klein4", 0},
      {"MatExt", 2}, {"GroupRingExt", 2},
      {"StdCtx", 1}, {"ZeroCtx", 2}, {"TableCtx", 1},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  Expr parse_expr() {
    skip_ws();
    if (pos_ == text_.size()) fail("expected an expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_integer();
    if (c == '"') return parse_text();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_call();
    fail("expected an expression");
  }

  Expr parse_integer() {
    Expr e;
    e.kind = Expr::Kind::integer;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e.number = e.number * 10 + (text_[pos_] - '0');
      if (e.number > 1'000'000'000) fail("integer literal too large");
      ++pos_;
    }
    return e;
  }

  Expr parse_text() {
    ++pos_;  // opening quote
    Expr e;
    e.kind = Expr::Kind::text;
    while (!at('"')) {
      if (pos_ == text_.size()) fail("unterminated string literal");
      e.word.push_back(text_[pos_++]);
    }
    ++pos_;  // closing quote
    return e;
  }

  Expr parse_call() {
    const std::size_t name_start = pos_;
    Expr e;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      e.word.push_back(text_[pos_++]);
    auto it = constructor_arity().find(e.word);
    if (it == constructor_arity().end())
      throw ParseError("unknown constructor '" + e.word + "'", name_start);
    skip_ws();
    if (!at('(')) fail("expected '('");
    ++pos_;
    skip_ws();
    if (!at(')')) {
      e.args.push_back(parse_expr());
      skip_ws();
      while (at(',')) {
        ++pos_;
        e.args.push_back(parse_expr());
        skip_ws();
      }
    }
    if (!at(')')) fail("expected ',' or ')'");
    ++pos_;
    if (static_cast<int>(e.args.size()) != it->second)
      throw ParseError(e.word + " expects " + std::to_string(it->second) +
                           " argument(s), got " + std::to_string(e.args.size()),
                       name_start);
    return e;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

int int_arg(const Expr& e, std::size_t i) {
  const Expr& a = e.args[i];
  if (a.kind != Expr::Kind::integer)
    throw UsageError(e.word + ": argument " + std::to_string(i + 1) +
                     " must be an integer");
  return static_cast<int>(a.number);
}

std::string text_arg(const Expr& e, std::size_t i) {
  const Expr& a = e.args[i];
  if (a.kind != Expr::Kind::text)
    throw UsageError(e.word + ": argument " + std::to_string(i + 1) +
                     " must be a quoted file name");
  return a.word;
}

Instance ring_instance(RingPtr r) {
  Instance inst;
  inst.kind = Instance::Kind::ring;
  inst.ring = std::move(r);
  return inst;
}

Instance module_instance(ModulePtr m) {
  Instance inst;
  inst.kind = Instance::Kind::module;
  inst.module = std::move(m);
  return inst;
}

}  // namespace

Expr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::integer:
      return std::to_string(e.number);
    case Expr::Kind::text:
      return "\"" + e.word + "\"";
    case Expr::Kind::call:
      break;
  }
  std::string out = e.word + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    out += print(e.args[i]);
  }
  return out + ")";
}

const char* to_string(Instance::Kind k) {
  switch (k) {
    case Instance::Kind::ring: return "ring";
    case Instance::Kind::module: return "module";
    case Instance::Kind::group: return "group";
    case Instance::Kind::extension: return "extension";
    case Instance::Kind::context: return "context";
  }
  return "?";
}

Instance evaluate(const Expr& e, const Caps& caps) {
  if (e.kind != Expr::Kind::call)
    throw UsageError("a bare literal does not denote an instance");
  const std::string& c = e.word;

  if (c == "Zn") {
    int n = int_arg(e, 0);
    if (n < 1) throw UsageError("Zn needs n >= 1");
    return ring_instance(cyclic_ring(n, caps));
  }
  if (c == "Prod")
    return ring_instance(product_ring(evaluate_ring(e.args[0], caps),
                                      evaluate_ring(e.args[1], caps), caps));
  if (c == "Mat") {
    int n = int_arg(e, 0);
    return ring_instance(
        matrix_ring(evaluate_ring(e.args[1], caps), n, caps).ring);
  }
  if (c == "GroupRing")
    return ring_instance(group_ring(evaluate_ring(e.args[0], caps),
                                    evaluate_group(e.args[1], caps), caps)
                             .ring);
  if (c == "Op")
    return ring_instance(opposite_ring(evaluate_ring(e.args[0], caps)));
  if (c == "Corner") {
    auto r = evaluate_ring(e.args[0], caps);
    int idem = int_arg(e, 1);
    if (idem < 0 || idem >= r->order())
      throw UsageError("Corner: idempotent index out of range");
    return ring_instance(corner_ring(r, idem).ring);
  }
  if (c == "TableRing") return ring_instance(load_ring(text_arg(e, 0), caps));

  if (c == "Free") {
    int k = int_arg(e, 0);
    if (k < 0) throw UsageError("Free needs k >= 0");
    auto r = evaluate_ring(e.args[1], caps);
    std::int64_t order = 1;
    for (int i = 0; i < k; ++i) {
      order *= r->order();
      if (order > caps.module_order)
        throw CapError("free module order exceeds the module cap");
    }
    return module_instance(free_module(r, k));
  }
  if (c == "Zero")
    return module_instance(zero_module(evaluate_ring(e.args[0], caps)));

  if (c == "Cyclic") {
    int n = int_arg(e, 0);
    if (n < 1) throw UsageError("Cyclic needs n >= 1");
    if (n > caps.ring_order) throw CapError("group order exceeds the cap");
    Instance inst;
    inst.kind = Instance::Kind::group;
    inst.group = cyclic_group(n);
    return inst;
  }
  if (c == "Sym") {
    Instance inst;
    inst.kind = Instance::Kind::group;
    inst.group = symmetric_group(int_arg(e, 0));
    return inst;
  }
  if (c == "Klein4") {
    Instance inst;
    inst.kind = Instance::Kind::group;
    inst.group = klein_four_group();
    return inst;
  }

  if (c == "MatExt") {
    Instance inst;
    inst.kind = Instance::Kind::extension;
    inst.extension = std::make_shared<ExtensionDescriptor>(
        matrix_extension(evaluate_ring(e.args[1], caps), int_arg(e, 0), caps));
    return inst;
  }
  if (c == "GroupRingExt") {
    Instance inst;
    inst.kind = Instance::Kind::extension;
    inst.extension =
        std::make_shared<ExtensionDescriptor>(group_ring_extension(
            evaluate_ring(e.args[0], caps), evaluate_group(e.args[1], caps),
            caps));
    return inst;
  }

  if (c == "StdCtx") {
    Instance inst;
    inst.kind = Instance::Kind::context;
    inst.context = std::make_shared<MoritaContext>(
        standard_context(evaluate_ring(e.args[0], caps)));
    return inst;
  }
  if (c == "ZeroCtx") {
    Instance inst;
    inst.kind = Instance::Kind::context;
    inst.context = std::make_shared<MoritaContext>(
        zero_context(evaluate_ring(e.args[0], caps),
                     evaluate_ring(e.args[1], caps)));
    return inst;
  }
  if (c == "TableCtx") {
    Instance inst;
    inst.kind = Instance::Kind::context;
    inst.context =
        std::make_shared<MoritaContext>(load_context(text_arg(e, 0), caps));
    return inst;
  }
  throw UsageError("constructor '" + c + "' cannot be evaluated");
}

RingPtr evaluate_ring(const Expr& e, const Caps& caps) {
  Instance inst = evaluate(e, caps);
  if (inst.kind != Instance::Kind::ring)
    throw UsageError("expected a ring, got a " +
                     std::string(to_string(inst.kind)));
  return inst.ring;
}

ModulePtr evaluate_module(const Expr& e, const Caps& caps) {
  Instance inst = evaluate(e, caps);
  if (inst.kind == Instance::Kind::ring)
    return regular_left_module(inst.ring);  // a ring names its regular module
  if (inst.kind != Instance::Kind::module)
    throw UsageError("expected a module, got a " +
                     std::string(to_string(inst.kind)));
  return inst.module;
}

GroupPtr evaluate_group(const Expr& e, const Caps& caps) {
  Instance inst = evaluate(e, caps);
  if (inst.kind != Instance::Kind::group)
    throw UsageError("expected a group, got a " +
                     std::string(to_string(inst.kind)));
  return inst.group;
}

ExtensionDescriptor evaluate_extension(const Expr& e, const Caps& caps) {
  // plain ring constructions lift to their canonical extension
  if (e.kind == Expr::Kind::call && e.word == "Mat")
    return matrix_extension(evaluate_ring(e.args[1], caps), int_arg(e, 0),
                            caps);
  if (e.kind == Expr::Kind::call && e.word == "GroupRing")
    return group_ring_extension(evaluate_ring(e.args[0], caps),
                                evaluate_group(e.args[1], caps), caps);
  Instance inst = evaluate(e, caps);
  if (inst.kind != Instance::Kind::extension)
    throw UsageError("expected an extension, got a " +
                     std::string(to_string(inst.kind)));
  return *inst.extension;
}

MoritaContext evaluate_context(const Expr& e, const Caps& caps) {
  Instance inst = evaluate(e, caps);
  if (inst.kind != Instance::Kind::context)
    throw UsageError("expected a context, got a " +
                     std::string(to_string(inst.kind)));
  return *inst.context;
}

}  // namespace regulus
