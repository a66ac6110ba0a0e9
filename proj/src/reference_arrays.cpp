#include "mlpa/reference_arrays.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mlpa {

std::vector<int> nested_positions(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("nested array needs n1, n2 >= 1");
    std::vector<int> positions;
    for (int i = 1; i <= n1; ++i) positions.push_back(i);
    for (int k = 1; k <= n2; ++k) positions.push_back(k * (n1 + 1));
    for (int& p : positions) p -= 1;
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    return positions;
}

std::vector<int> coprime_positions(int m, int nbar) {
    if (m < 1 || nbar < 1 || m >= nbar || std::gcd(m, nbar) != 1)
        throw std::invalid_argument("coprime array needs gcd(m, nbar) = 1 and m < nbar");
    std::vector<int> positions;
    for (int k = 0; k < nbar; ++k) positions.push_back(k * m);
    for (int k = 0; k < 2 * m; ++k) positions.push_back(k * nbar);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    return positions;
}

NestedParams nested_params_for(int total) {
    if (total < 2) throw std::invalid_argument("nested array needs at least 2 elements");
    return NestedParams{total / 2, total - total / 2};
}

std::optional<CoprimeParams> coprime_params_for(int total) {
    std::optional<CoprimeParams> best;
    long long best_product = -1;
    for (int m = 2; 3 * m <= total; ++m) {
        int nbar = total + 1 - 2 * m;
        if (nbar <= m || std::gcd(m, nbar) != 1) continue;
        long long product = static_cast<long long>(m) * nbar;
        if (product > best_product) {
            best_product = product;
            best = CoprimeParams{m, nbar};
        }
    }
    return best;
}

}  // namespace mlpa
