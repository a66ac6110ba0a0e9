#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mlpa {

inline constexpr const char* kVersion = "0.1.0";

/// Subarray element counts N_1 < N_2 < ... < N_L, pairwise coprime, each >= 2.
struct Partition {
    std::vector<int> counts;
};

/// Inter-element spacings, one per subarray, in units of d. Must be a
/// derangement of the sorted counts: a permutation with S_i != N_i everywhere.
struct SpacingOrder {
    std::vector<int> spacings;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Violated partition invariants, empty when the partition is well formed.
std::vector<std::string> validate_partition(const Partition& partition);

/// Violated config invariants (partition problems, non-permutation spacing,
/// fixed points, subarrays coinciding beyond the shared origin).
/// Empty when the pair describes a valid array.
std::vector<std::string> validate_config(const Partition& partition,
                                         const SpacingOrder& spacing);

/// Total element count N = sum(N_i) - (L - 1). Throws ConfigError on a bad partition.
int total_elements(const Partition& partition);

/// Array aperture max_i S_i * (N_i - 1), in units of d.
int aperture(const Partition& partition, const SpacingOrder& spacing);

/// Aperture restricted to the two largest-count subarrays:
/// max(S_{L-1} * (N_{L-1} - 1), S_L * (N_L - 1)).
int aperture_last_two(const Partition& partition, const SpacingOrder& spacing);

/// Element positions union_i { k * S_i : 0 <= k <= N_i - 1 }, deduplicated and
/// sorted. Throws ConfigError when the partition or the permutation/derangement
/// constraints fail; coincidences beyond the origin are not checked here.
std::vector<int> build_positions(const Partition& partition, const SpacingOrder& spacing);

struct MlpaConfig {
    Partition partition;
    SpacingOrder spacing;
    std::vector<int> positions;
    int total_elements = 0;
    int aperture = 0;
};

/// Builds a fully validated config. Throws ConfigError listing every violated
/// invariant, including position coincidences (|positions| < N).
MlpaConfig make_config(const Partition& partition, const SpacingOrder& spacing);

}  // namespace mlpa
