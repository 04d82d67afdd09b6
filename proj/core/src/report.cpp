#include "regulus/report.hpp"

#include <sstream>

namespace regulus {

int verdict_exit(bool ok) { return ok ? kExitOk : kExitAssertionFailed; }

int hypothesis_exit(bool probative, bool ok) {
  if (!probative) return kExitNonProbative;
  return verdict_exit(ok);
}

Json report_envelope(const std::string& command, const Json& arguments,
                     int exit_code, const Json& result,
                     std::int64_t total_ms) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["arguments"] = arguments;
  doc["exit"] = exit_code;
  doc["result"] = result;
  doc["timing"] = Json{{"total_ms", total_ms}};
  return doc;
}

Json instance_json(const std::string& expression, int order) {
  Json j;
  j["expression"] = expression;
  j["order"] = order;
  return j;
}

Json extension_json(const std::string& expression,
                    const ExtensionDescriptor& d) {
  Json j;
  j["expression"] = expression;
  j["small_order"] = d.embedding.small->order();
  j["big_order"] = d.embedding.big->order();
  j["basis_size"] = d.basis.size();
  j["splitting"] = to_string(d.projectivity);
  return j;
}

Json context_json(const std::string& expression, const MoritaContext& ctx,
                  int ring_order) {
  Json j;
  j["expression"] = expression;
  j["r_order"] = ctx.r->order();
  j["s_order"] = ctx.s->order();
  j["m_order"] = ctx.m.carrier->order();
  j["n_order"] = ctx.n.carrier->order();
  j["ring_order"] = ring_order;
  return j;
}

Json vnr_result(const Json& ring, const VnrCertificate& cert, bool replay_ok) {
  Json j;
  j["kind"] = "vnr-check";
  j["ring"] = ring;
  j["regular"] = cert.regular;
  if (cert.regular) {
    j["witness"] = cert.witness;
  } else if (cert.counterexample) {
    Json c;
    c["element"] = *cert.counterexample;
    c["label"] = cert.ring->label(*cert.counterexample);
    j["counterexample"] = c;
  }
  j["replay"] = replay_ok;
  return j;
}

namespace {

// Full companion dumps are only worth the bytes on small hom sets.
constexpr std::int64_t kPairDumpLimit = 32;

Json hom_map_json(const ModuleHom& f) { return Json(f.map); }

}  // namespace

Json relative_result(const Json& ring, const Json& module, const Json& relator,
                     const RelativeRegularityCertificate& cert,
                     bool replay_ok) {
  Json j;
  j["kind"] = "relative-regularity";
  j["ring"] = ring;
  j["module"] = module;
  j["relator"] = relator;
  j["regular"] = cert.regular;
  j["homs_checked"] = cert.homs_checked;
  if (cert.regular && cert.homs_checked <= kPairDumpLimit) {
    Json pairs = Json::array();
    for (const auto& p : cert.pairs) {
      Json e;
      e["f"] = hom_map_json(p.f);
      e["g"] = hom_map_json(p.g);
      pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
  }
  if (!cert.regular && cert.counterexample) {
    Json c;
    c["f"] = hom_map_json(*cert.counterexample);
    j["counterexample"] = c;
  }
  j["replay"] = replay_ok;
  return j;
}

Json oracle_agreement_result(const Json& module, const Json& relator,
                             const RelativeRegularityCertificate& direct,
                             bool direct_replay,
                             const SummandRouteCertificate& route) {
  Json j;
  j["kind"] = "oracle-agreement";
  j["module"] = module;
  j["relator"] = relator;
  Json d;
  d["regular"] = direct.regular;
  d["homs_checked"] = direct.homs_checked;
  d["replay"] = direct_replay;
  j["definitional"] = std::move(d);
  Json r;
  r["regular"] = route.regular;
  r["homs_checked"] = route.homs_checked;
  j["summand_route"] = std::move(r);
  j["agree"] = direct.regular == route.regular;
  return j;
}

Json transfer_result(const Json& extension, const Json& module,
                     const Theorem22Report& rep) {
  Json j;
  j["kind"] = "extension-transfer";
  j["extension"] = extension;
  j["module"] = module;
  Json facts;
  facts["restricted_regular"] = rep.p;
  facts["big_regular"] = rep.q;
  facts["basis_torsion_free"] = rep.t;
  j["facts"] = std::move(facts);
  Json imp;
  imp["restricted_to_big"] = rep.p_implies_q;
  imp["big_and_torsion_free_to_restricted"] = rep.qt_implies_p;
  j["implications"] = std::move(imp);
  j["probative"] = rep.probative;
  return j;
}

Json elementwise_transfer_result(const Json& extension,
                                 const Corollary23Report& rep,
                                 const std::string& failure_label) {
  Json j;
  j["kind"] = "elementwise-transfer";
  j["extension"] = extension;
  j["small_regular"] = rep.small_regular;
  j["big_regular"] = rep.big_regular;
  j["verdicts_agree"] = rep.verdicts_agree;
  j["witness_projections_ok"] = rep.projections_ok;
  if (rep.projection_failure) {
    Json c;
    c["element"] = *rep.projection_failure;
    c["label"] = failure_label;
    j["projection_failure"] = c;
  }
  j["probative"] = rep.probative;
  return j;
}

Json peirce_result(const Json& ring, int families_checked,
                   const std::optional<PeirceFailure>& failure) {
  Json j;
  j["kind"] = "idempotent-blocks";
  j["ring"] = ring;
  j["families_checked"] = families_checked;
  j["agree"] = !failure.has_value();
  if (failure) {
    Json f;
    f["family"] = failure->family;
    f["criterion"] = failure->report.criterion;
    f["elementwise"] = failure->report.vnr;
    if (failure->report.counterexample) {
      Json b;
      b["i"] = (*failure->report.counterexample)[0];
      b["j"] = (*failure->report.counterexample)[1];
      b["x"] = (*failure->report.counterexample)[2];
      f["block"] = std::move(b);
    }
    j["failure"] = std::move(f);
  }
  return j;
}

Json context_result(const Json& context, const Theorem34Report& rep) {
  Json j;
  j["kind"] = "context-transfer";
  j["context"] = context;
  Json facts;
  facts["ring_regular"] = rep.t_vnr;
  facts["r_regular"] = rep.r_vnr;
  facts["s_regular"] = rep.s_vnr;
  facts["m_left_regular"] = rep.m_left;
  facts["m_right_regular"] = rep.m_right;
  facts["n_left_regular"] = rep.n_left;
  facts["n_right_regular"] = rep.n_right;
  facts["strict"] = rep.strict;
  j["facts"] = std::move(facts);
  Json dir;
  dir["from_block_ring"] = rep.direction1;
  dir["to_block_ring"] = rep.direction2;
  j["directions"] = std::move(dir);
  Json corners;
  corners["r"] = rep.corner_r;
  corners["s"] = rep.corner_s;
  j["corners"] = std::move(corners);
  return j;
}

Json hom_transport_result(const Json& progenerator, const Json& u,
                          const Json& m, const Lemma31Report& rep,
                          const std::string& note) {
  Json j;
  j["kind"] = "hom-transport";
  j["progenerator"] = progenerator;
  j["u"] = u;
  j["m"] = m;
  j["probative"] = rep.probative;
  if (!note.empty()) j["note"] = note;
  j["base_regular"] = rep.base_regular;
  j["image_regular"] = rep.image_regular;
  j["agree"] = rep.agree;
  return j;
}

Json endo_transfer_result(const Json& progenerator,
                          const ProgeneratorCheck& check,
                          const Theorem32Report& rep) {
  Json j;
  j["kind"] = "endomorphism-transfer";
  j["progenerator"] = progenerator;
  j["probative"] = rep.probative;
  if (check.witness) {
    Json w;
    w["free_power"] = check.witness->k;
    w["generator_power"] = check.witness->j;
    j["witness"] = std::move(w);
  }
  if (!check.is_progenerator && !check.failure.empty())
    j["note"] = check.failure;
  j["base_regular"] = rep.base_vnr;
  j["endo_regular"] = rep.endo_vnr;
  j["agree"] = rep.agree;
  return j;
}

Json suite_json(const SuiteResult& result) {
  Json j;
  j["kind"] = "suite";
  j["corpus"] = result.corpus;
  Json counts;
  counts["items"] = static_cast<int>(result.items.size());
  counts["failures"] = result.failures();
  counts["non_probative"] = result.non_probative();
  j["counts"] = std::move(counts);
  Json items = Json::array();
  for (const auto& item : result.items) {
    Json e;
    e["section"] = item.section;
    e["instance"] = item.instance;
    e["ok"] = item.ok;
    e["probative"] = item.probative;
    e["detail"] = item.detail;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  return j;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

constexpr std::size_t kArrayPrintLimit = 16;

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// {"expression": ..., "order": ...} prints as one line.
bool is_instance(const Json& v) {
  return v.is_object() && v.contains("expression") && v.contains("order") &&
         v.size() == 2;
}

void walk(const Json& v, const std::string& key, int indent,
          std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    if (is_instance(v)) {
      out << pad << key << ": " << v["expression"].get<std::string>()
          << " (order " << v["order"].dump() << ")\n";
      return;
    }
    out << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it)
      walk(it.value(), it.key(), indent + 2, out);
    return;
  }
  if (v.is_array()) {
    if (!v.empty() && v.front().is_structured()) {
      out << pad << key << ": " << v.size() << " entries\n";
      return;
    }
    out << pad << key << ": [";
    for (std::size_t i = 0; i < v.size() && i < kArrayPrintLimit; ++i) {
      if (i) out << ", ";
      out << scalar_text(v[i]);
    }
    if (v.size() > kArrayPrintLimit)
      out << ", ... " << v.size() << " total";
    out << "]\n";
    return;
  }
  out << pad << key << ": " << scalar_text(v) << "\n";
}

void suite_text(const Json& result, std::ostringstream& out) {
  const auto& counts = result["counts"];
  out << "suite: corpus " << result["corpus"].get<std::string>() << ", "
      << counts["items"].dump() << " items, " << counts["failures"].dump()
      << " failing, " << counts["non_probative"].dump()
      << " non-probative\n";
  for (const auto& item : result["items"]) {
    bool ok = item["ok"].get<bool>();
    bool probative = item["probative"].get<bool>();
    if (ok && probative) continue;
    out << (ok ? "  note " : "  FAIL ") << item["section"].get<std::string>()
        << " / " << item["instance"].get<std::string>() << ": "
        << item["detail"].get<std::string>() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& envelope) {
  std::ostringstream out;
  out << envelope["tool"].get<std::string>() << " "
      << envelope["version"].get<std::string>() << "\n";
  out << "command: " << envelope["command"].get<std::string>() << "\n";
  const auto& args = envelope["arguments"];
  for (auto it = args.begin(); it != args.end(); ++it)
    out << "  " << it.key() << ": " << scalar_text(it.value()) << "\n";
  const auto& result = envelope["result"];
  if (result.is_object() && result.contains("kind") &&
      result["kind"] == "suite") {
    suite_text(result, out);
  } else {
    walk(result, "result", 0, out);
  }
  out << "exit: " << envelope["exit"].dump() << "\n";
  return out.str();
}

}  // namespace regulus
