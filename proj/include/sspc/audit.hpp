#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sspc/classes.hpp"
#include "sspc/completion.hpp"
#include "sspc/digraph.hpp"
#include "sspc/symbolic.hpp"

namespace sspc {

// Verdict for "does every partial member of this pattern complete into the
// target class". Proved verdicts carry re-checkable certificates; evidence
// verdicts carry counts and the seed that reproduces them. Exhaustion is
// never promoted to impossibility.
enum class Verdict { yes_proved, no_proved, yes_evidence, no_evidence, undecided };
const char* to_string(Verdict v);

enum class ProofKind { complete, zero_completion, loopless_construction };
const char* to_string(ProofKind k);

// A verified completion: `completed` extends `partial` and is a member of
// `target`. Stored in reports and re-validated by verify_completion.
struct CompletionCertificate {
    PartialMatrix partial;
    ExactMatrix completed;
    MatrixClass target;
    CompletionCertificate(PartialMatrix p, ExactMatrix m, MatrixClass c)
        : partial(std::move(p)), completed(std::move(m)), target(c) {}
};

// Sign-forced negative minor: the witness specifies d_i * d_j = 0 and a
// nonzero a_ij whose twin is a hole. Sign symmetry forces the twin to the
// same sign (a zero twin violates the twin rule outright), so the 2x2 minor
// on {i,j} is -a_ij*a_ji < 0 in every admissible completion.
struct ForcedPairCertificate {
    PartialMatrix witness;
    int i = 0, j = 0;
    MatrixClass target;
    ForcedPairCertificate(PartialMatrix w, int i_, int j_, MatrixClass c)
        : witness(std::move(w)), i(i_), j(j_), target(c) {}
};

struct SampleSummary {
    int requested = 0;
    int generated = 0;
    int completed = 0;
};

struct PatternStatus {
    MatrixClass target = MatrixClass::ssp01plus;
    Verdict verdict = Verdict::undecided;
    std::optional<ProofKind> proof;  // present iff yes_proved
    SampleSummary samples;
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;  // per-pattern seed all sample draws derive from
    std::vector<CompletionCertificate> completions;    // exemplars, at most 3
    std::optional<ZeroDetCertificate> zero_det;        // no_proved, route 1
    std::optional<ForcedPairCertificate> forced_pair;  // no_proved, route 2
    std::optional<PartialMatrix> hard_witness;         // no_evidence
    std::string note;
};

struct AuditConfig {
    CompletionConfig completion;
    int samples = 50;
    int min_order = 1;
    int max_order = 4;
    Exec exec = Exec::serial;
    void validate() const;
};

// Decision cascade: complete pattern, null pattern completable by zeros
// (sound for every class except the two whose per-order positivity a zero
// diagonal can starve), loopless construction, then sampling: N random
// partial members, a symbolic-proof sweep, and exact search per sample.
PatternStatus classify_pattern(const Pattern& g, MatrixClass c, const AuditConfig& cfg);

// One catalog row of the published classification: expected YES/NO pattern
// counts for order p with q arcs, split by the argument the catalog uses
// (incomplete two-cycle patterns, external results on asymmetric patterns).
struct ClaimTableRow {
    int p = 0, q = 0;
    int yes = 0, no = 0;
    int two_cycle_no = 0;    // NO via the two-cycle argument
    int external_no = 0;     // NO via the cited external classification
    int asymmetric_yes = 0;  // YES via the cited external classification
};

struct CatalogTable {
    std::vector<ClaimTableRow> rows;
    static const CatalogTable& builtin();
    const ClaimTableRow* find(int p, int q) const;
};

struct PatternRow {
    Pattern pattern;
    std::string code;
    int p = 0, q = 0;
    StructuralProps props;
    // What the catalog says about this pattern: "yes", "no", or
    // "count-only" when the catalog pins the row's counts but this pattern's
    // side is not structurally attributable.
    std::string claimed_side;
    PatternStatus primary;
    std::vector<std::pair<MatrixClass, PatternStatus>> related;
};

// Per-(p,q) comparison of engine verdicts against the claim table.
struct TallyRow {
    int p = 0, q = 0;
    int patterns = 0;
    int claimed_yes = 0, claimed_no = 0;
    int yes_proved = 0, yes_evidence = 0, no_proved = 0, no_evidence = 0, undecided = 0;
    bool exhaustive = false;            // claimed_yes + claimed_no == patterns
    bool structure_consistent = false;  // claimed splits match enumerated structure
    std::string status;  // confirmed | supported | refuted-with-certificate | undecided
    std::string note;
};

struct SingletonClaim {
    std::string id;
    std::string statement;
    std::string status;  // confirmed | refuted-with-certificate | undecided
    std::string detail;
    std::optional<PartialMatrix> witness;  // input the claim speaks about
    std::optional<CompletionCertificate> completion;
    std::optional<ZeroDetCertificate> zero_det;
    std::optional<std::string> polynomial;  // for formula claims
};

struct RuleFinding {
    std::string rule;
    std::string code;  // canonical form of the pattern involved
    bool violation = false;  // proved statuses contradict; anything else is a tension note
    std::string detail;
};

struct AuditReport {
    AuditConfig config;
    MatrixClass target = MatrixClass::ssp01plus;
    std::vector<PatternRow> rows;       // sorted by (p, q, canonical code)
    std::vector<TallyRow> tallies;      // only for the catalog's target class
    std::vector<SingletonClaim> claims;
    std::vector<RuleFinding> findings;
    int violations = 0;
};

// Classifies every all-loops pattern of the configured orders for the target
// class and the rest of the sign symmetric family, compares tallies against
// the claim table, resolves the singleton claims, and evaluates the
// cross-class implication rules on computed verdicts. Requires a sign
// symmetric target (the catalog and the rules speak about that family).
AuditReport audit_catalog_claims(const AuditConfig& cfg,
                                 MatrixClass target = MatrixClass::ssp01plus);

std::vector<SingletonClaim> check_singleton_claims(const CompletionConfig& cfg);

// Deterministic serialization. JSON is the machine interface (schema in the
// README); text is a terminal summary.
nlohmann::ordered_json report_json(const AuditReport& r);
std::string render_report(const AuditReport& r, const std::string& format);  // "json" | "text"

struct VerifyOutcome {
    int checked = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

// Re-validates certificates embedded in a serialized report: completions via
// verify_completion, zero-determinant proofs by re-deriving the symbolic
// determinant, forced-pair proofs by re-checking the sign argument. `row`
// narrows to one pattern row (by index), `claim` to one singleton claim.
VerifyOutcome verify_report_certificates(const nlohmann::ordered_json& report,
                                         std::optional<int> row = std::nullopt,
                                         const std::optional<std::string>& claim = std::nullopt);

}  // namespace sspc
