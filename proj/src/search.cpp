#include "mlpa/search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>
#include <tuple>

namespace mlpa {

std::string to_string(Objective objective) {
    switch (objective) {
        case Objective::unique: return "unique";
        case Objective::consecutive: return "consecutive";
        case Objective::joint: return "joint";
    }
    return "unique";
}

std::optional<Objective> objective_from_string(std::string_view name) {
    if (name == "unique") return Objective::unique;
    if (name == "consecutive") return Objective::consecutive;
    if (name == "joint") return Objective::joint;
    return std::nullopt;
}

const std::vector<EvaluatedConfig>& DesignResult::optima(Objective objective) const {
    switch (objective) {
        case Objective::unique: return unique_optima;
        case Objective::consecutive: return consecutive_optima;
        case Objective::joint: return joint_optima;
    }
    return unique_optima;
}

int DesignResult::optimum_value(Objective objective) const {
    switch (objective) {
        case Objective::unique: return max_unique;
        case Objective::consecutive: return max_consecutive;
        case Objective::joint:
            throw std::logic_error("joint objective has two optimum values, "
                                   "use max_unique / max_consecutive");
    }
    return max_unique;
}

const EvaluatedConfig& DesignResult::recommended(Objective objective) const {
    const auto& set = optima(objective);
    if (set.empty())
        throw std::out_of_range("no optimum for objective " + to_string(objective));
    return set.front();
}

std::vector<Partition> enumerate_coprime_partitions(int total_elements, int levels,
                                                    std::optional<int> max_count_bound) {
    std::vector<Partition> out;
    if (levels < 2 || total_elements < 1) return out;
    const int target = total_elements + levels - 1;
    const int cap = max_count_bound ? std::min(*max_count_bound, target) : target;

    std::vector<int> current;
    std::function<void(int, int)> extend = [&](int next_min, int remaining) {
        const int open = levels - static_cast<int>(current.size());
        if (open == 0) {
            if (remaining == 0) out.push_back(Partition{current});
            return;
        }
        for (int c = next_min; c <= cap; ++c) {
            // smallest possible sum of `open` strictly increasing values from c
            long long floor_sum = static_cast<long long>(open) * c +
                                  static_cast<long long>(open) * (open - 1) / 2;
            if (floor_sum > remaining) break;
            bool coprime = true;
            for (int prev : current) {
                if (std::gcd(prev, c) != 1) {
                    coprime = false;
                    break;
                }
            }
            if (!coprime) continue;
            current.push_back(c);
            extend(c + 1, remaining - c);
            current.pop_back();
        }
    };
    extend(2, target);
    return out;
}

std::vector<SpacingOrder> enumerate_spacing_orders(const Partition& partition) {
    auto violations = validate_partition(partition);
    if (!violations.empty()) throw ConfigError(std::move(violations));

    std::vector<SpacingOrder> out;
    auto perm = partition.counts;
    do {
        bool deranged = true;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (perm[i] == partition.counts[i]) {
                deranged = false;
                break;
            }
        }
        if (deranged) out.push_back(SpacingOrder{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

EvaluatedConfig evaluate_config(const Partition& partition, const SpacingOrder& spacing) {
    EvaluatedConfig evaluated;
    evaluated.config = make_config(partition, spacing);
    evaluated.coarray = difference_coarray(evaluated.config.positions);
    return evaluated;
}

std::vector<EvaluatedConfig> rank_ties(std::vector<EvaluatedConfig> optima) {
    std::stable_sort(optima.begin(), optima.end(),
                     [](const EvaluatedConfig& a, const EvaluatedConfig& b) {
                         return std::tie(a.coarray.unit_spacing_count, a.config.aperture,
                                         a.config.spacing.spacings) <
                                std::tie(b.coarray.unit_spacing_count, b.config.aperture,
                                         b.config.spacing.spacings);
                     });
    return optima;
}

DesignResult optimize(const DesignQuery& query, int workers) {
    if (query.total_elements < 1 || query.levels < 2)
        throw std::invalid_argument("query requires N >= 1 and L >= 2");

    auto partitions =
        enumerate_coprime_partitions(query.total_elements, query.levels, query.max_count_bound);
    if (partitions.empty())
        throw InfeasibleQueryError("no pairwise-coprime decomposition for N=" +
                                   std::to_string(query.total_elements) +
                                   ", L=" + std::to_string(query.levels));

    struct Candidate {
        const Partition* partition;
        SpacingOrder spacing;
    };
    std::vector<Candidate> candidates;
    for (const auto& partition : partitions) {
        auto orders = enumerate_spacing_orders(partition);
        for (auto& order : orders) candidates.push_back(Candidate{&partition, std::move(order)});
    }

    // one slot per candidate, written by exactly one worker; empty means the
    // spacing made two subarrays coincide and the candidate is excluded
    std::vector<std::optional<EvaluatedConfig>> slots(candidates.size());
    const int n = query.total_elements;
    auto eval_strided = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < candidates.size(); i += stride) {
            auto positions = build_positions(*candidates[i].partition, candidates[i].spacing);
            if (static_cast<int>(positions.size()) != n) continue;
            EvaluatedConfig evaluated;
            evaluated.config.partition = *candidates[i].partition;
            evaluated.config.spacing = candidates[i].spacing;
            evaluated.config.total_elements = n;
            evaluated.config.aperture =
                aperture(*candidates[i].partition, candidates[i].spacing);
            evaluated.coarray = difference_coarray(positions);
            evaluated.config.positions = std::move(positions);
            slots[i] = std::move(evaluated);
        }
    };

    int thread_count =
        workers > 0 ? workers
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    thread_count = std::min<int>(thread_count, static_cast<int>(candidates.size()));
    if (thread_count <= 1) {
        eval_strided(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (int w = 0; w < thread_count; ++w)
            pool.emplace_back(eval_strided, static_cast<std::size_t>(w),
                              static_cast<std::size_t>(thread_count));
        for (auto& t : pool) t.join();
    }

    DesignResult result;
    result.query = query;
    result.evaluated_count = static_cast<long long>(candidates.size());
    for (const auto& slot : slots) {
        if (!slot) {
            ++result.excluded_count;
            continue;
        }
        result.max_unique = std::max(result.max_unique, slot->coarray.unique_count);
        result.max_consecutive = std::max(result.max_consecutive, slot->coarray.consecutive_count);
    }

    std::vector<EvaluatedConfig> unique_set, consecutive_set, joint_set;
    for (const auto& slot : slots) {
        if (!slot) continue;
        bool best_unique = slot->coarray.unique_count == result.max_unique;
        bool best_consecutive = slot->coarray.consecutive_count == result.max_consecutive;
        if (best_unique) unique_set.push_back(*slot);
        if (best_consecutive) consecutive_set.push_back(*slot);
        if (best_unique && best_consecutive) joint_set.push_back(*slot);
    }
    result.unique_optima = rank_ties(std::move(unique_set));
    result.consecutive_optima = rank_ties(std::move(consecutive_set));
    result.joint_optima = rank_ties(std::move(joint_set));
    return result;
}

std::vector<SweepRow> sweep(int levels, int n_min, int n_max, int workers) {
    std::vector<SweepRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        SweepRow row;
        row.total_elements = n;
        DesignQuery query;
        query.total_elements = n;
        query.levels = levels;
        query.objective = Objective::joint;
        try {
            row.result = optimize(query, workers);
            row.feasible = true;
        } catch (const InfeasibleQueryError&) {
            row.feasible = false;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace mlpa
