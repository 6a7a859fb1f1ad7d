#pragma once

#include "samelson/rational.hpp"

#include <vector>

namespace samelson {

/// Element of the truncated polynomial ring Q[t]/(t^(cap+1)).
///
/// The cap is fixed at construction and arithmetic between series with
/// different caps throws std::invalid_argument rather than re-truncating:
/// a silent cap change would hide degree bookkeeping mistakes. Values are
/// immutable after construction.
class TruncSeries {
public:
    /// Zero series with coefficients 0..cap.
    explicit TruncSeries(long cap);

    /// Series with the given coefficients; coeffs.size() must be cap + 1.
    TruncSeries(long cap, std::vector<Rational> coeffs);

    static TruncSeries zero(long cap) { return TruncSeries(cap); }
    static TruncSeries one(long cap);

    /// Truncation of e^t - 1: coefficients [0, 1, 1/2!, ..., 1/cap!].
    static TruncSeries exp_minus_one(long cap);

    long cap() const { return cap_; }

    /// Coefficient of t^j. Throws std::out_of_range("degree out of range")
    /// unless 0 <= j <= cap.
    const Rational& coefficient(long j) const;

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// k-fold product; pow(0) is one(cap), including for the zero series.
    TruncSeries pow(long k) const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    long cap_;
    std::vector<Rational> coeffs_;  // size cap_ + 1
};

std::ostream& operator<<(std::ostream& os, const TruncSeries& series);

}  // namespace samelson
