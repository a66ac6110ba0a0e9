#pragma once

#include <optional>
#include <vector>

namespace mlpa {

/// Two-level nested array: dense ULA {1..n1} plus sparse level {k(n1+1)},
/// k = 1..n2, shifted so the first element sits at 0. n1 + n2 elements.
std::vector<int> nested_positions(int n1, int n2);

/// Extended coprime array {k*m : k < nbar} union {k*nbar : k < 2m}.
/// Requires gcd(m, nbar) = 1 and m < nbar; 2m + nbar - 1 elements.
/// Throws std::invalid_argument otherwise.
std::vector<int> coprime_positions(int m, int nbar);

struct NestedParams {
    int n1 = 0;
    int n2 = 0;
};

struct CoprimeParams {
    int m = 0;
    int nbar = 0;
};

/// Parameter choice used by the compare command for an N-element nested array:
/// n1 = floor(N/2), n2 = ceil(N/2). Requires total >= 2.
NestedParams nested_params_for(int total);

/// Parameter choice for an N-element coprime array: among pairs with
/// 2m + nbar - 1 = total, gcd(m, nbar) = 1 and 2 <= m < nbar, the one with the
/// largest product m * nbar (smaller m on ties). No such pair -> nullopt.
std::optional<CoprimeParams> coprime_params_for(int total);

}  // namespace mlpa
