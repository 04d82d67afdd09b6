#pragma once

#include <nlohmann/json.hpp>

#include "regulus/suite.hpp"

namespace regulus {

// Reports keep a fixed key order so identical invocations serialize to
// identical bytes; ordered_json preserves insertion order.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "regulus";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit code conventions shared by the command layer and the tests.
/// 0 = checks ran and every asserted implication held, 1 = an asserted
/// implication failed, 2 = usage or parse error, 3 = cap or budget
/// exceeded, 4 = hypotheses unmet so nothing was asserted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitNonProbative = 4;

int verdict_exit(bool ok);
int hypothesis_exit(bool probative, bool ok);

/// Top-level document: schema, tool, version, command echo, exit code,
/// result payload, then timing. Timing is the only non-reproducible field
/// and sits last so golden comparisons can drop exactly one key.
Json report_envelope(const std::string& command, const Json& arguments,
                     int exit_code, const Json& result, std::int64_t total_ms);

/// {"expression": ..., "order": ...}
Json instance_json(const std::string& expression, int order);

/// Extension descriptor summary: ring orders, basis size, splitting status.
Json extension_json(const std::string& expression,
                    const ExtensionDescriptor& d);

/// Context summary: component orders plus the order of the block ring.
Json context_json(const std::string& expression, const MoritaContext& ctx,
                  int ring_order);

Json vnr_result(const Json& ring, const VnrCertificate& cert, bool replay_ok);

Json relative_result(const Json& ring, const Json& module, const Json& relator,
                     const RelativeRegularityCertificate& cert, bool replay_ok);

Json oracle_agreement_result(const Json& module, const Json& relator,
                             const RelativeRegularityCertificate& direct,
                             bool direct_replay,
                             const SummandRouteCertificate& route);

Json transfer_result(const Json& extension, const Json& module,
                     const Theorem22Report& rep);

Json elementwise_transfer_result(const Json& extension,
                                 const Corollary23Report& rep,
                                 const std::string& failure_label);

/// One entry per checked idempotent family; `failure` carries the first
/// disagreeing family together with its block counterexample.
struct PeirceFailure {
  std::vector<Idx> family;
  PeirceReport report;
};

Json peirce_result(const Json& ring, int families_checked,
                   const std::optional<PeirceFailure>& failure);

Json context_result(const Json& context, const Theorem34Report& rep);

Json hom_transport_result(const Json& progenerator, const Json& u,
                          const Json& m, const Lemma31Report& rep,
                          const std::string& note);

Json endo_transfer_result(const Json& progenerator,
                          const ProgeneratorCheck& check,
                          const Theorem32Report& rep);

Json suite_json(const SuiteResult& result);

/// dump(2) plus a trailing newline.
std::string render_json(const Json& doc);

/// Line-oriented rendering of a full envelope for terminal output. Arrays
/// longer than sixteen entries are elided; suite results are summarized by
/// section with failing and non-probative items spelled out.
std::string render_text(const Json& envelope);

}  // namespace regulus
