#include "crossnest/numeric.hpp"

#include <stdexcept>

namespace crossnest {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

BigInt catalan(int m) {
    if (m < 0) throw std::invalid_argument("catalan: negative argument");
    return binomial(2 * m, m) / (m + 1);
}

BigInt double_factorial_odd(int m) {
    if (m < 0) throw std::invalid_argument("double_factorial_odd: negative argument");
    BigInt r = 1;
    for (int i = 1; i <= m; ++i) r *= 2 * i - 1;
    return r;
}

}  // namespace crossnest
