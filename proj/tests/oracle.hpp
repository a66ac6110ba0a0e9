#pragma once

// Brute-force reference for coarray metrics, kept deliberately independent of
// the library: a plain double loop over ordered position pairs into a map.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

struct Metrics {
    int unique = 0;
    int consecutive = 0;
    int unit = 0;
    int holes = 0;
    std::map<int, long long> weights;
};

inline Metrics coarray(const std::vector<int>& raw) {
    std::set<int> dedup(raw.begin(), raw.end());
    std::vector<int> positions(dedup.begin(), dedup.end());

    Metrics m;
    for (int a : positions)
        for (int b : positions) ++m.weights[a - b];

    m.unique = static_cast<int>(m.weights.size());

    int run = 0;
    while (m.weights.count(run + 1)) ++run;
    m.consecutive = 2 * run + 1;

    auto unit = m.weights.find(1);
    m.unit = unit == m.weights.end() ? 0 : static_cast<int>(unit->second);

    int max_lag = m.weights.rbegin()->first;
    for (int lag = 1; lag < max_lag; ++lag)
        if (!m.weights.count(lag)) ++m.holes;
    return m;
}

inline std::vector<int> positions_of(const std::vector<int>& counts,
                                     const std::vector<int>& spacings) {
    std::vector<int> raw;
    for (std::size_t i = 0; i < counts.size(); ++i)
        for (int k = 0; k < counts[i]; ++k) raw.push_back(k * spacings[i]);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return raw;
}

}  // namespace oracle
