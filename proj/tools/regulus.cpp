// Command-line front end: parses construction expressions, runs the
// requested checks, and emits deterministic text or JSON reports.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "regulus/dsl.hpp"
#include "regulus/report.hpp"

using namespace regulus;

namespace {

struct Outcome {
  std::string command;
  Json arguments = Json::object();
  int exit_code = kExitOk;
  Json result = Json::object();
};

// Parses, canonicalizes the echo in `slot`, and returns the AST. The raw
// text is echoed first so error reports still show what was asked.
Expr parse_echo(Outcome& out, const std::string& key,
                const std::string& text) {
  out.arguments[key] = text;
  Expr ast = parse(text);
  out.arguments[key] = print(ast);
  return ast;
}

std::string echoed(const Outcome& out, const std::string& key) {
  return out.arguments[key].get<std::string>();
}

void run_check_vnr(Outcome& out, const std::string& expr, const Caps& caps) {
  out.command = "check vnr";
  Expr ast = parse_echo(out, "expr", expr);
  auto ring = evaluate_ring(ast, caps);
  auto cert = vnr_check(ring);
  bool replay = verify(cert);
  out.result = vnr_result(instance_json(echoed(out, "expr"), ring->order()),
                          cert, replay);
  out.exit_code = verdict_exit(replay);
}

void run_check_regular(Outcome& out, const std::string& module_expr,
                       const std::string& over_expr,
                       const std::optional<std::string>& relator_expr,
                       const Caps& caps) {
  out.command = "check regular";
  Expr module_ast = parse_echo(out, "module", module_expr);
  Expr over_ast = parse_echo(out, "over", over_expr);
  auto ring = evaluate_ring(over_ast, caps);
  auto mod = evaluate_module(module_ast, caps);
  if (!same_ring(mod->ring(), ring))
    throw UsageError("--module is not a module over --over");
  ModulePtr relator;
  std::string relator_echo;
  if (relator_expr) {
    Expr rel_ast = parse_echo(out, "relative_to", *relator_expr);
    relator = evaluate_module(rel_ast, caps);
    relator_echo = echoed(out, "relative_to");
    if (!same_ring(relator->ring(), ring))
      throw UsageError("--relative-to is not a module over --over");
  } else {
    relator = regular_left_module(ring);
    relator_echo = echoed(out, "over");
  }
  auto cert = is_relative_regular(mod, relator, caps);
  bool replay = verify(cert);
  out.result = relative_result(
      instance_json(echoed(out, "over"), ring->order()),
      instance_json(echoed(out, "module"), mod->order()),
      instance_json(relator_echo, relator->order()), cert, replay);
  out.exit_code = verdict_exit(replay);
}

void run_oracle_agreement(Outcome& out, const std::string& module_expr,
                          const std::string& relator_expr, const Caps& caps) {
  out.command = "verify prop1.2";
  Expr module_ast = parse_echo(out, "module", module_expr);
  Expr relator_ast = parse_echo(out, "relator", relator_expr);
  auto mod = evaluate_module(module_ast, caps);
  auto relator = evaluate_module(relator_ast, caps);
  if (!same_ring(mod->ring(), relator->ring()))
    throw UsageError("--module and --relator live over different rings");
  auto direct = is_relative_regular(mod, relator, caps);
  bool replay = verify(direct);
  auto route = relative_regular_via_summands(mod, relator, caps);
  out.result = oracle_agreement_result(
      instance_json(echoed(out, "module"), mod->order()),
      instance_json(echoed(out, "relator"), relator->order()), direct, replay,
      route);
  out.exit_code = verdict_exit(direct.regular == route.regular && replay);
}

void run_transfer(Outcome& out, const std::string& extension_expr,
                  const std::string& module_expr, const Caps& caps) {
  out.command = "verify thm2.2";
  Expr ext_ast = parse_echo(out, "extension", extension_expr);
  Expr module_ast = parse_echo(out, "module", module_expr);
  auto ext = evaluate_extension(ext_ast, caps);
  auto mod = evaluate_module(module_ast, caps);
  if (!same_ring(mod->ring(), ext.embedding.big))
    throw UsageError("--module must live over the extension's big ring");
  auto rep = verify_theorem_2_2(ext, mod, caps);
  out.result =
      transfer_result(extension_json(echoed(out, "extension"), ext),
                      instance_json(echoed(out, "module"), mod->order()), rep);
  // The reverse implication holds without the splitting hypothesis, so its
  // failure is a bug even on non-probative descriptors.
  if (rep.probative)
    out.exit_code = verdict_exit(rep.ok());
  else
    out.exit_code =
        rep.qt_implies_p ? kExitNonProbative : kExitAssertionFailed;
}

void run_elementwise_transfer(Outcome& out, const std::string& extension_expr,
                              const Caps& caps) {
  out.command = "verify cor2.3";
  Expr ext_ast = parse_echo(out, "extension", extension_expr);
  auto ext = evaluate_extension(ext_ast, caps);
  auto rep = verify_corollary_2_3(ext, caps);
  std::string failure_label;
  if (rep.projection_failure)
    failure_label = ext.embedding.small->label(*rep.projection_failure);
  out.result = elementwise_transfer_result(
      extension_json(echoed(out, "extension"), ext), rep, failure_label);
  // Witness projection is a coordinate identity of the free basis and is
  // asserted even when the splitting hypothesis is open.
  if (rep.probative)
    out.exit_code = verdict_exit(rep.ok());
  else
    out.exit_code =
        rep.projections_ok ? kExitNonProbative : kExitAssertionFailed;
}

void run_hom_transport(Outcome& out, const std::string& progenerator_expr,
                       const std::string& u_expr, const std::string& m_expr,
                       const Caps& caps) {
  out.command = "verify lem3.1";
  Expr p_ast = parse_echo(out, "progenerator", progenerator_expr);
  Expr u_ast = parse_echo(out, "u", u_expr);
  Expr m_ast = parse_echo(out, "m", m_expr);
  auto p = evaluate_module(p_ast, caps);
  auto u = evaluate_module(u_ast, caps);
  auto m = evaluate_module(m_ast, caps);
  if (!same_ring(u->ring(), p->ring()) || !same_ring(m->ring(), p->ring()))
    throw UsageError("--progenerator, --u and --m must share one ring");
  Json pj = instance_json(echoed(out, "progenerator"), p->order());
  Json uj = instance_json(echoed(out, "u"), u->order());
  Json mj = instance_json(echoed(out, "m"), m->order());
  auto check = progenerator_check(p, caps);
  if (!check.is_progenerator) {
    Lemma31Report rep;
    out.result = hom_transport_result(pj, uj, mj, rep, check.failure);
    out.exit_code = kExitNonProbative;
    return;
  }
  auto rep = verify_lemma_3_1(p, u, m, caps);
  out.result = hom_transport_result(pj, uj, mj, rep, "");
  out.exit_code = hypothesis_exit(rep.probative, rep.ok());
}

void run_endo_transfer(Outcome& out, const std::string& progenerator_expr,
                       const Caps& caps) {
  out.command = "verify thm3.2";
  Expr p_ast = parse_echo(out, "progenerator", progenerator_expr);
  auto p = evaluate_module(p_ast, caps);
  Json pj = instance_json(echoed(out, "progenerator"), p->order());
  auto check = progenerator_check(p, caps);
  Theorem32Report rep;
  if (check.is_progenerator) rep = verify_theorem_3_2(p, caps);
  out.result = endo_transfer_result(pj, check, rep);
  out.exit_code = hypothesis_exit(rep.probative, rep.ok());
}

void run_peirce(Outcome& out, const std::string& expr, const Caps& caps) {
  out.command = "verify lem3.3";
  Expr ast = parse_echo(out, "expr", expr);
  auto ring = evaluate_ring(ast, caps);
  int families_checked = 0;
  std::optional<PeirceFailure> failure;
  for (int size = 1; size <= 2; ++size) {
    for (const auto& family : complete_orthogonal_families(*ring, size)) {
      auto rep = verify_lemma_3_3(ring, family);
      ++families_checked;
      if (!rep.agree && !failure) failure = PeirceFailure{family, rep};
    }
  }
  out.result =
      peirce_result(instance_json(echoed(out, "expr"), ring->order()),
                    families_checked, failure);
  out.exit_code = verdict_exit(!failure.has_value());
}

void run_context_transfer(Outcome& out, const std::string& context_expr,
                          const Caps& caps) {
  out.command = "verify thm3.4";
  Expr ctx_ast = parse_echo(out, "context", context_expr);
  auto ctx = evaluate_context(ctx_ast, caps);
  auto rep = verify_theorem_3_4(ctx, caps);
  std::int64_t order = static_cast<std::int64_t>(ctx.r->order()) *
                       ctx.m.carrier->order() * ctx.n.carrier->order() *
                       ctx.s->order();
  out.result = context_result(
      context_json(echoed(out, "context"), ctx, static_cast<int>(order)),
      rep);
  out.exit_code = verdict_exit(rep.ok());
}

void run_suite_command(Outcome& out, const std::string& corpus_name,
                       const Caps& caps) {
  out.command = "suite run";
  out.arguments["corpus"] = corpus_name;
  auto corpus = corpus_by_name(corpus_name, caps);
  auto result = run_suite(corpus, caps);
  out.result = suite_json(result);
  out.exit_code = verdict_exit(result.failures() == 0);
}

Json error_result(const std::string& category, const std::string& message) {
  Json j;
  j["kind"] = "error";
  j["category"] = category;
  j["message"] = message;
  return j;
}

int emit(const Json& doc, const std::string& json_path) {
  if (json_path == "-") {
    std::cout << render_json(doc);
    return kExitOk;
  }
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file) {
      std::cerr << "regulus: cannot write " << json_path << "\n";
      return kExitUsage;
    }
    file << render_json(doc);
  }
  std::cout << render_text(doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Caps caps;
  if (const char* env = std::getenv("REGULUS_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
      std::cerr << "regulus: REGULUS_CAP must be a positive integer\n";
      return kExitUsage;
    }
    caps.ring_order = static_cast<int>(v);
  }

  CLI::App app{"finite-ring regularity checker"};
  app.require_subcommand(1);
  std::string json_path;
  auto add_json = [&json_path](CLI::App* cmd) {
    cmd->add_option("--json", json_path,
                    "write the JSON report to this file, or - for stdout");
  };

  auto* check = app.add_subcommand("check", "compute certificates");
  check->require_subcommand(1);

  std::string vnr_expr;
  auto* vnr = check->add_subcommand(
      "vnr", "elementwise regularity of a ring, with witness table");
  vnr->add_option("expr", vnr_expr, "ring expression")->required();
  add_json(vnr);

  std::string reg_module, reg_over, reg_relator;
  bool reg_has_relator = false;
  auto* regular = check->add_subcommand(
      "regular", "relative regularity of a module, with companion table");
  regular->add_option("--module", reg_module, "module expression")
      ->required();
  regular->add_option("--over", reg_over, "ring expression")->required();
  regular
      ->add_option("--relative-to", reg_relator,
                   "relator module (default: the ring as a module)")
      ->each([&reg_has_relator](const std::string&) {
        reg_has_relator = true;
      });
  add_json(regular);

  auto* verify_cmd =
      app.add_subcommand("verify", "assert a transfer implication");
  verify_cmd->require_subcommand(1);

  std::string prop_module, prop_relator;
  auto* prop = verify_cmd->add_subcommand(
      "prop1.2", "definitional and summand-route oracles agree");
  prop->add_option("--module", prop_module, "module expression")->required();
  prop->add_option("--relator", prop_relator, "relator module expression")
      ->required();
  add_json(prop);

  std::string thm22_ext, thm22_module;
  auto* thm22 = verify_cmd->add_subcommand(
      "thm2.2", "regularity transfer along a free normalizing extension");
  thm22->add_option("--extension", thm22_ext, "extension expression")
      ->required();
  thm22->add_option("--module", thm22_module, "big-ring module expression")
      ->required();
  add_json(thm22);

  std::string cor23_ext;
  auto* cor23 = verify_cmd->add_subcommand(
      "cor2.3", "elementwise regularity transfers between the two rings");
  cor23->add_option("--extension", cor23_ext, "extension expression")
      ->required();
  add_json(cor23);

  std::string lem31_p, lem31_u, lem31_m;
  auto* lem31 = verify_cmd->add_subcommand(
      "lem3.1", "relative regularity survives the hom transport");
  lem31->add_option("--progenerator", lem31_p, "module expression")
      ->required();
  lem31->add_option("--u", lem31_u, "relator module expression")->required();
  lem31->add_option("--m", lem31_m, "module expression")->required();
  add_json(lem31);

  std::string thm32_p;
  auto* thm32 = verify_cmd->add_subcommand(
      "thm3.2", "ring and endomorphism ring agree on regularity");
  thm32->add_option("--progenerator", thm32_p, "module expression")
      ->required();
  add_json(thm32);

  std::string lem33_expr;
  auto* lem33 = verify_cmd->add_subcommand(
      "lem3.3", "idempotent block criterion matches the elementwise scan");
  lem33->add_option("expr", lem33_expr, "ring expression")->required();
  add_json(lem33);

  std::string thm34_ctx;
  auto* thm34 = verify_cmd->add_subcommand(
      "thm3.4", "context ring regularity, both directions plus corners");
  thm34->add_option("--context", thm34_ctx, "context expression")->required();
  add_json(thm34);

  auto* suite = app.add_subcommand("suite", "run the corpus checks");
  suite->require_subcommand(1);
  std::string corpus_name = "default";
  auto* suite_run =
      suite->add_subcommand("run", "every section over a named corpus");
  suite_run->add_option("--corpus", corpus_name, "corpus name");
  add_json(suite_run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (vnr->parsed())
      run_check_vnr(out, vnr_expr, caps);
    else if (regular->parsed())
      run_check_regular(out, reg_module, reg_over,
                        reg_has_relator
                            ? std::optional<std::string>(reg_relator)
                            : std::nullopt,
                        caps);
    else if (prop->parsed())
      run_oracle_agreement(out, prop_module, prop_relator, caps);
    else if (thm22->parsed())
      run_transfer(out, thm22_ext, thm22_module, caps);
    else if (cor23->parsed())
      run_elementwise_transfer(out, cor23_ext, caps);
    else if (lem31->parsed())
      run_hom_transport(out, lem31_p, lem31_u, lem31_m, caps);
    else if (thm32->parsed())
      run_endo_transfer(out, thm32_p, caps);
    else if (lem33->parsed())
      run_peirce(out, lem33_expr, caps);
    else if (thm34->parsed())
      run_context_transfer(out, thm34_ctx, caps);
    else if (suite_run->parsed())
      run_suite_command(out, corpus_name, caps);
  } catch (const ParseError& e) {
    out.exit_code = kExitUsage;
    out.result = error_result("parse-error", e.what());
    out.result["offset"] = e.offset();
  } catch (const UsageError& e) {
    out.exit_code = kExitUsage;
    out.result = error_result("usage-error", e.what());
  } catch (const StructureError& e) {
    out.exit_code = kExitUsage;
    out.result = error_result("structure-error", e.what());
  } catch (const CapError& e) {
    out.exit_code = kExitCap;
    out.result = error_result("cap-exceeded", e.what());
  } catch (const BudgetError& e) {
    out.exit_code = kExitCap;
    out.result = error_result("budget-exceeded", e.what());
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  Json doc =
      report_envelope(out.command, out.arguments, out.exit_code, out.result,
                      static_cast<std::int64_t>(ms));
  int emit_code = emit(doc, json_path);
  return emit_code != kExitOk ? emit_code : out.exit_code;
}
