#pragma once

#include "samelson/rational.hpp"

namespace samelson {

/// The Chern character of the reduced line-bundle class x = L - 1 on a
/// complex projective space is the truncation of e^t - 1, so the coefficient
/// a_{j,k} of t^j in ch(x^k) is [t^j] (e^t - 1)^k. The three routes below
/// compute a_{j,k} by unrelated mechanisms and must agree exactly:
///
///   series:       expand (e^t - 1)^k in Q[t]/(t^(j+1)) and read off t^j
///   compositions: sum 1/(i_1! ... i_k!) over ordered compositions
///                 i_1 + ... + i_k = j with every part >= 1
///   stirling:     k! S(j,k) / j!  via the set-partition recurrence
///
/// All three require j, k >= 1 and throw std::invalid_argument otherwise.

Rational chern_via_series(long j, long k);

/// Throws std::invalid_argument("oracle size limit") for j > 30.
Rational chern_via_compositions(long j, long k);

Rational chern_via_stirling(long j, long k);

/// The coefficient a_{j,k} together with its indices (series route).
struct ChernCoefficient {
    long j = 0;  // cohomological half-degree: coefficient of t^j
    long k = 0;  // power of x
    Rational value;
};

ChernCoefficient chern_coefficient(long j, long k);

/// sum_{k=1}^{n-m} 1/(k! (2n-2m+1-k)!): the half-range form of the degree
/// 2n-2m+1 coefficient of ch(x^2), counting each unordered pair of exponents
/// once. The total degree is odd, so no composition is self-paired and twice
/// this sum equals chern_via_series(2n-2m+1, 2). Requires 1 <= m < n.
Rational chern_square_half_sum(long m, long n);

}  // namespace samelson
