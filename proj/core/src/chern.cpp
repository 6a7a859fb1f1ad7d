#include "samelson/chern.hpp"

#include "samelson/trunc_series.hpp"

#include <stdexcept>
#include <vector>

namespace samelson {

namespace {

void check_indices(long j, long k) {
    if (j < 1 || k < 1) throw std::invalid_argument("chern: j and k must be >= 1");
}

}  // namespace

Rational chern_via_series(long j, long k) {
    check_indices(j, k);
    return TruncSeries::exp_minus_one(j).pow(k).coefficient(j);
}

Rational chern_via_compositions(long j, long k) {
    check_indices(j, k);
    if (j > 30) throw std::invalid_argument("oracle size limit");
    if (k > j) return 0;  // no composition of j into more than j positive parts

    std::vector<Rational> inv_fact(static_cast<size_t>(j) + 1);
    for (long i = 1; i <= j; ++i) inv_fact[static_cast<size_t>(i)] = Rational(1, factorial(i));

    // sum[l][d] = sum over compositions of d into l parts of prod 1/(part!),
    // grouped by the value of the last part
    std::vector<std::vector<Rational>> sum(
        static_cast<size_t>(k) + 1, std::vector<Rational>(static_cast<size_t>(j) + 1));
    sum[0][0] = 1;
    for (long l = 1; l <= k; ++l) {
        for (long d = l; d <= j; ++d) {
            Rational acc;
            for (long i = 1; i <= d - l + 1; ++i)
                acc += inv_fact[static_cast<size_t>(i)] *
                       sum[static_cast<size_t>(l - 1)][static_cast<size_t>(d - i)];
            sum[static_cast<size_t>(l)][static_cast<size_t>(d)] = acc;
        }
    }
    return sum[static_cast<size_t>(k)][static_cast<size_t>(j)];
}

Rational chern_via_stirling(long j, long k) {
    check_indices(j, k);
    return Rational(factorial(k) * stirling2(j, k), factorial(j));
}

ChernCoefficient chern_coefficient(long j, long k) {
    return ChernCoefficient{j, k, chern_via_series(j, k)};
}

Rational chern_square_half_sum(long m, long n) {
    if (m < 1 || m >= n) throw std::invalid_argument("chern_square_half_sum: need 1 <= m < n");
    long degree = 2 * n - 2 * m + 1;
    Rational acc;
    for (long k = 1; k <= n - m; ++k)
        acc += Rational(1, factorial(k) * factorial(degree - k));
    return acc;
}

}  // namespace samelson
