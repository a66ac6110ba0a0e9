#include "mlpa/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mlpa {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
    std::ostringstream out;
    out << "invalid configuration:";
    for (const auto& v : violations) out << " [" << v << "]";
    return out.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

std::vector<std::string> validate_partition(const Partition& partition) {
    std::vector<std::string> violations;
    const auto& counts = partition.counts;
    if (counts.size() < 2) {
        violations.push_back("need at least 2 levels, got " + std::to_string(counts.size()));
        return violations;
    }
    if (counts.front() < 2)
        violations.push_back("N_1 = " + std::to_string(counts.front()) + " is below 2");
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i - 1] >= counts[i]) {
            std::ostringstream msg;
            msg << "counts not strictly increasing at index " << i << ": " << counts[i - 1]
                << " >= " << counts[i];
            violations.push_back(msg.str());
        }
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        for (std::size_t j = i + 1; j < counts.size(); ++j) {
            int g = std::gcd(counts[i], counts[j]);
            if (g != 1) {
                std::ostringstream msg;
                msg << "gcd(" << counts[i] << "," << counts[j] << ")=" << g;
                violations.push_back(msg.str());
            }
        }
    }
    return violations;
}

static std::vector<std::string> validate_spacing(const Partition& partition,
                                                 const SpacingOrder& spacing) {
    std::vector<std::string> violations;
    const auto& counts = partition.counts;
    const auto& spacings = spacing.spacings;
    if (spacings.size() != counts.size()) {
        violations.push_back("spacing has " + std::to_string(spacings.size()) +
                             " entries for " + std::to_string(counts.size()) + " levels");
        return violations;
    }
    auto sorted = spacings;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != counts) {
        violations.push_back("spacing is not a permutation of the counts");
        return violations;
    }
    for (std::size_t i = 0; i < spacings.size(); ++i) {
        if (spacings[i] == counts[i]) {
            std::ostringstream msg;
            msg << "fixed point S_" << (i + 1) << " = N_" << (i + 1) << " = " << spacings[i];
            violations.push_back(msg.str());
        }
    }
    return violations;
}

static std::vector<int> expand_positions(const Partition& partition, const SpacingOrder& spacing) {
    std::vector<int> positions;
    for (std::size_t i = 0; i < partition.counts.size(); ++i)
        for (int k = 0; k < partition.counts[i]; ++k)
            positions.push_back(k * spacing.spacings[i]);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    return positions;
}

std::vector<std::string> validate_config(const Partition& partition, const SpacingOrder& spacing) {
    auto violations = validate_partition(partition);
    auto spacing_violations = validate_spacing(partition, spacing);
    violations.insert(violations.end(), spacing_violations.begin(), spacing_violations.end());
    if (violations.empty()) {
        auto positions = expand_positions(partition, spacing);
        int expected = total_elements(partition);
        if (static_cast<int>(positions.size()) != expected) {
            std::ostringstream msg;
            msg << "subarrays coincide beyond the origin: " << positions.size()
                << " distinct positions, expected " << expected;
            violations.push_back(msg.str());
        }
    }
    return violations;
}

int total_elements(const Partition& partition) {
    auto violations = validate_partition(partition);
    if (!violations.empty()) throw ConfigError(std::move(violations));
    int sum = std::accumulate(partition.counts.begin(), partition.counts.end(), 0);
    return sum - static_cast<int>(partition.counts.size()) + 1;
}

int aperture(const Partition& partition, const SpacingOrder& spacing) {
    int best = 0;
    for (std::size_t i = 0; i < partition.counts.size(); ++i)
        best = std::max(best, spacing.spacings[i] * (partition.counts[i] - 1));
    return best;
}

int aperture_last_two(const Partition& partition, const SpacingOrder& spacing) {
    std::size_t levels = partition.counts.size();
    int best = 0;
    for (std::size_t i = levels >= 2 ? levels - 2 : 0; i < levels; ++i)
        best = std::max(best, spacing.spacings[i] * (partition.counts[i] - 1));
    return best;
}

std::vector<int> build_positions(const Partition& partition, const SpacingOrder& spacing) {
    auto violations = validate_partition(partition);
    auto spacing_violations = validate_spacing(partition, spacing);
    violations.insert(violations.end(), spacing_violations.begin(), spacing_violations.end());
    if (!violations.empty()) throw ConfigError(std::move(violations));
    return expand_positions(partition, spacing);
}

MlpaConfig make_config(const Partition& partition, const SpacingOrder& spacing) {
    auto violations = validate_config(partition, spacing);
    if (!violations.empty()) throw ConfigError(std::move(violations));
    MlpaConfig config;
    config.partition = partition;
    config.spacing = spacing;
    config.positions = expand_positions(partition, spacing);
    config.total_elements = total_elements(partition);
    config.aperture = aperture(partition, spacing);
    return config;
}

}  // namespace mlpa
