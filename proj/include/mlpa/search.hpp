#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlpa/coarray.hpp"
#include "mlpa/core.hpp"

namespace mlpa {

enum class Objective { unique, consecutive, joint };

std::string to_string(Objective objective);
std::optional<Objective> objective_from_string(std::string_view name);

struct DesignQuery {
    int total_elements = 0;
    int levels = 0;
    Objective objective = Objective::unique;
    std::optional<int> max_count_bound;  // optional cap on the largest count
};

struct EvaluatedConfig {
    MlpaConfig config;
    CoarrayReport coarray;
};

class InfeasibleQueryError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full search outcome for one (N, L). Carries both objectives' argmax sets so
/// joint queries and sweeps need a single pass; each set is in rank_ties order.
struct DesignResult {
    DesignQuery query;
    int max_unique = 0;
    int max_consecutive = 0;
    std::vector<EvaluatedConfig> unique_optima;
    std::vector<EvaluatedConfig> consecutive_optima;
    std::vector<EvaluatedConfig> joint_optima;  // intersection, possibly empty
    long long evaluated_count = 0;  // every enumerated (partition, spacing) pair
    long long excluded_count = 0;   // pairs dropped for coinciding subarrays

    bool is_joint() const { return !joint_optima.empty(); }
    const std::vector<EvaluatedConfig>& optima(Objective objective) const;
    int optimum_value(Objective objective) const;
    const EvaluatedConfig& recommended(Objective objective) const;
};

/// All strictly increasing, pairwise coprime count vectors with L entries,
/// each >= 2, summing to N + L - 1. Lexicographic order; empty when infeasible.
std::vector<Partition> enumerate_coprime_partitions(
    int total_elements, int levels, std::optional<int> max_count_bound = std::nullopt);

/// All derangements of the partition's counts, lexicographic order.
std::vector<SpacingOrder> enumerate_spacing_orders(const Partition& partition);

/// Positions plus coarray metrics for one candidate. Throws ConfigError when
/// the pair is invalid in any way, coincidences included.
EvaluatedConfig evaluate_config(const Partition& partition, const SpacingOrder& spacing);

/// Sorts tied optima by ascending unit-spacing count, then ascending aperture,
/// then lexicographic spacing vector. The leading entry is the recommendation.
std::vector<EvaluatedConfig> rank_ties(std::vector<EvaluatedConfig> optima);

/// Exhaustive search over every partition and spacing order for the query's
/// (N, L). Throws InfeasibleQueryError when no partition exists. workers = 0
/// picks the hardware concurrency; the result is identical for any count.
DesignResult optimize(const DesignQuery& query, int workers = 0);

struct SweepRow {
    int total_elements = 0;
    bool feasible = false;
    std::optional<DesignResult> result;
};

/// Per-N results over [n_min, n_max]; infeasible N yields a row with no result.
std::vector<SweepRow> sweep(int levels, int n_min, int n_max, int workers = 0);

}  // namespace mlpa
