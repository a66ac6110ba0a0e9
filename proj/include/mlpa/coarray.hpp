#pragma once

#include <map>
#include <vector>

namespace mlpa {

/// Difference coarray of an integer position set. Lags are two-sided: every
/// ordered pair (p_i, p_j) contributes p_i - p_j, so the lag set is symmetric
/// around 0 and both l_ug and l_cg come out odd.
struct CoarrayReport {
    std::vector<int> lags;              // distinct lags, sorted ascending
    std::map<int, long long> weights;   // lag -> number of ordered pairs
    int unique_count = 0;               // l_ug = |lags|
    int consecutive_count = 0;          // l_cg = 2m + 1 for maximal [0, m] run
    int unit_spacing_count = 0;         // v = weights at lag 1
    int hole_count = 0;                 // missing integers strictly inside (0, max lag)
    int max_lag = 0;
};

/// Throws std::invalid_argument on an empty set or a negative position.
/// Input need not be sorted or deduplicated; weights always count ordered
/// pairs of distinct positions.
CoarrayReport difference_coarray(const std::vector<int>& positions);

int unique_lag_count(const CoarrayReport& report);
int consecutive_lag_count(const CoarrayReport& report);
int hole_count(const CoarrayReport& report);

/// Number of unordered position pairs exactly one unit apart.
int unit_spacing_count(const std::vector<int>& positions);

}  // namespace mlpa
