#include "mlpa/coarray.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlpa {

CoarrayReport difference_coarray(const std::vector<int>& positions) {
    if (positions.empty()) throw std::invalid_argument("difference coarray of an empty set");
    for (int p : positions)
        if (p < 0) throw std::invalid_argument("negative position " + std::to_string(p));

    std::vector<int> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const int span = sorted.back() - sorted.front();
    std::vector<long long> counts(2 * span + 1, 0);
    for (int a : sorted)
        for (int b : sorted) ++counts[a - b + span];

    CoarrayReport report;
    report.max_lag = span;
    for (int lag = -span; lag <= span; ++lag) {
        long long w = counts[lag + span];
        if (w == 0) continue;
        report.lags.push_back(lag);
        report.weights.emplace(lag, w);
    }
    report.unique_count = static_cast<int>(report.lags.size());

    int run = 0;
    while (run < span && counts[run + 1 + span] > 0) ++run;
    report.consecutive_count = 2 * run + 1;

    auto unit = report.weights.find(1);
    report.unit_spacing_count =
        unit == report.weights.end() ? 0 : static_cast<int>(unit->second);

    int holes = 0;
    for (int lag = 1; lag < span; ++lag)
        if (counts[lag + span] == 0) ++holes;
    report.hole_count = holes;
    return report;
}

int unique_lag_count(const CoarrayReport& report) { return report.unique_count; }

int consecutive_lag_count(const CoarrayReport& report) { return report.consecutive_count; }

int hole_count(const CoarrayReport& report) { return report.hole_count; }

int unit_spacing_count(const std::vector<int>& positions) {
    return difference_coarray(positions).unit_spacing_count;
}

}  // namespace mlpa
