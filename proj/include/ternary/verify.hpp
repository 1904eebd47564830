#ifndef TERNARY_VERIFY_HPP
#define TERNARY_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ternary/graph.hpp"
#include "ternary/hypergraph.hpp"

namespace ternary {

/// Deterministic instance stream description.
/// Families: exhaustive (n), path (n | nmax), cycle (n | nmax),
/// tree (n, exhaustive over labeled trees; or count for seeded random),
/// theta (len), ear_grown (count, ears, max_vertices), a_k (k | kmax),
/// b_k (k | kmax), random_hypergraph (count, n, m, max_edge),
/// file / hyperfile (path).
struct InstanceSpec {
    std::string family;
    std::map<std::string, long long> params;
    std::uint64_t seed = 0;
    std::string path;
};

inline const std::set<std::string> kGraphChecks = {"prop12", "thm13", "thm31", "thm32",
                                                   "thm22", "lem21", "lem23", "lem36"};
inline const std::set<std::string> kHyperChecks = {"thm14", "lem42", "gamma_shift", "betti_shift"};
std::set<std::string> all_checks();

struct CampaignOptions {
    bool timings = false;  // wall-clock fields break byte-determinism; off by default
    int jobs = 1;
    long long min_set_cap = 100'000;
};

struct CampaignSummary {
    long long instances = 0;
    long long failures = 0;
    long long skips = 0;
    long long indeterminate = 0;
    bool all_pass() const { return failures == 0; }
};

using Instance = std::variant<Graph, Hypergraph>;

/// Materialize the instance stream of a spec (deterministic in spec+seed).
std::vector<Instance> build_instances(const InstanceSpec& spec);

/// Evaluate the requested checks on every instance, one JSON object per
/// line on `out`. Non-applicable checks are recorded as skips with the
/// violated hypothesis named; indeterminate classifications never pass.
CampaignSummary run_campaign(const InstanceSpec& spec, const std::set<std::string>& checks,
                             std::ostream& out, const CampaignOptions& opts = {});

/// Single-instance evaluation (JSON line), shared by campaign and tests.
std::string evaluate_instance(long long id, const Instance& inst, const InstanceSpec& spec,
                              const std::set<std::string>& checks, const CampaignOptions& opts,
                              CampaignSummary& tally);

}  // namespace ternary

#endif
