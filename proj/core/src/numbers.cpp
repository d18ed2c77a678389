#include "treepat/numbers.hpp"

namespace treepat {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

BigInt catalan(std::int64_t n) {
    return binomial(2 * n, n) / (n + 1);
}

}  // namespace treepat
