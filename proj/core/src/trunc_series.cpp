#include "samelson/trunc_series.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace samelson {

namespace {

void check_same_cap(const TruncSeries& a, const TruncSeries& b) {
    if (a.cap() != b.cap()) {
        throw std::invalid_argument("cap mismatch: " + std::to_string(a.cap()) +
                                    " vs " + std::to_string(b.cap()));
    }
}

}  // namespace

TruncSeries::TruncSeries(long cap) : cap_(cap) {
    if (cap < 0) throw std::invalid_argument("TruncSeries: cap must be >= 0");
    coeffs_.resize(static_cast<size_t>(cap) + 1);
}

TruncSeries::TruncSeries(long cap, std::vector<Rational> coeffs)
    : cap_(cap), coeffs_(std::move(coeffs)) {
    if (cap < 0) throw std::invalid_argument("TruncSeries: cap must be >= 0");
    if (coeffs_.size() != static_cast<size_t>(cap) + 1) {
        throw std::invalid_argument("TruncSeries: expected " + std::to_string(cap + 1) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

TruncSeries TruncSeries::one(long cap) {
    TruncSeries result(cap);
    result.coeffs_[0] = 1;
    return result;
}

TruncSeries TruncSeries::exp_minus_one(long cap) {
    TruncSeries result(cap);
    Rational term = 1;
    for (long i = 1; i <= cap; ++i) {
        term /= i;  // 1/i!
        result.coeffs_[static_cast<size_t>(i)] = term;
    }
    return result;
}

const Rational& TruncSeries::coefficient(long j) const {
    if (j < 0 || j > cap_) throw std::out_of_range("degree out of range");
    return coeffs_[static_cast<size_t>(j)];
}

TruncSeries TruncSeries::pow(long k) const {
    if (k < 0) throw std::invalid_argument("TruncSeries::pow: negative exponent");
    TruncSeries result = one(cap_);
    TruncSeries base = *this;
    // square-and-multiply
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_same_cap(a, b);
    TruncSeries result(a.cap_);
    for (size_t i = 0; i < result.coeffs_.size(); ++i)
        result.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return result;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_same_cap(a, b);
    TruncSeries result(a.cap_);
    for (long i = 0; i <= a.cap_; ++i) {
        const Rational& ai = a.coeffs_[static_cast<size_t>(i)];
        if (ai.is_zero()) continue;
        for (long j = 0; i + j <= a.cap_; ++j) {
            const Rational& bj = b.coeffs_[static_cast<size_t>(j)];
            if (bj.is_zero()) continue;
            result.coeffs_[static_cast<size_t>(i + j)] += ai * bj;
        }
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& series) {
    os << '[';
    for (long j = 0; j <= series.cap(); ++j) {
        if (j > 0) os << ", ";
        os << series.coefficient(j);
    }
    return os << ']';
}

}  // namespace samelson
