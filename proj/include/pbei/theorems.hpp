#ifndef PBEI_THEOREMS_HPP
#define PBEI_THEOREMS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pbei/graphs.hpp"
#include "pbei/ideals.hpp"
#include "pbei/resolution.hpp"

namespace pbei {

struct CheckConfig {
    std::uint64_t characteristic = 32003;
    int jobs = 1;
};

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

/// Pass/fail/witness record for one claim on one graph instance.
struct ClaimReport {
    std::string claim_id;
    std::string graph6;
    int n = 0;
    std::uint64_t characteristic = 0;
    bool hypotheses_met = false;
    Verdict verdict = Verdict::skipped;
    std::string witness;  // JSON object; non-empty on fail
    double seconds = 0.0;

    std::string to_json() const;
};

/// One machine-checkable claim: a hypothesis predicate over graphs plus a
/// checker that fills in verdict and witness. Claims are registry data, not
/// hard-coded branches.
struct Claim {
    std::string id;
    std::string description;
    bool external = false;   // instantiated conclusion of a cited result
    bool probe = false;      // report-only; never fails a sweep
    bool connected_only = false;  // enumeration domain for sweeps
    int n_cap = 6;           // largest n a sweep feeds this claim
    std::function<bool(const Graph&)> hypothesis;
    /// Runs only when hypothesis holds; sets verdict to pass or fail and,
    /// on fail, a witness.
    std::function<void(const Graph&, const CheckConfig&, ClaimReport&)> check;
};

const std::vector<Claim>& claim_registry();
const Claim* find_claim(const std::string& id);

/// max(ell(G), oc(G)); connected graphs only.
int reg_lower_bound(const Graph& g);

/// Exact regularity of S/I_G when g falls in a class with a known closed
/// form (odd cycles, paths, complete bipartite, K2 u K2, disjoint unions of
/// odd cycles and paths); absent otherwise.
std::optional<int> predicted_regularity(const Graph& g);

ClaimReport check_claim(const std::string& claim_id, const Graph& g,
                        const CheckConfig& config);

struct SweepSummary {
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    /// claim id -> number of hypothesis-satisfying graphs actually checked
    std::map<std::string, long> checked;
    std::vector<ClaimReport> failures;

    std::string to_json() const;
};

/// Runs each listed claim over all graphs (up to isomorphism) with k <= n_max
/// vertices, parallel over graphs. When `jsonl` is given, one ClaimReport
/// JSON object is written per line, followed by a summary line.
std::vector<ClaimReport> sweep(int n_max, const std::vector<std::string>& claims,
                               const CheckConfig& config, SweepSummary* summary = nullptr,
                               std::ostream* jsonl = nullptr);

/// Minimal Betti table of the given ideal kind on g, memoized by canonical
/// form, kind, and characteristic (tables are isomorphism invariants).
const BettiTable& cached_betti(const Graph& g, IdealKind kind, std::uint64_t characteristic);

}  // namespace pbei

#endif
