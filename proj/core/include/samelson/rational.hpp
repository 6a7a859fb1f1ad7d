#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace samelson {

/// Signed arbitrary-precision integer. Every quantity in the engine that is
/// not a fraction lives here; factorials far beyond 40! stay exact.
using Integer = mpz_class;

/// k! for k >= 0. Throws std::invalid_argument for negative k.
Integer factorial(long k);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Stirling number of the second kind S(j, k): the number of partitions of a
/// j-element set into k nonempty blocks. Computed from the recurrence
/// S(j, k) = k*S(j-1, k) + S(j-1, k-1) with S(0, 0) = 1.
Integer stirling2(long j, long k);

/// Positive gcd of the values; the subgroup of Z generated by the inputs is
/// exactly (gcd)*Z. Throws std::invalid_argument("degenerate subgroup") when
/// every value is zero, and on an empty list.
Integer gcd_all(const std::vector<Integer>& values);

/// Reduced fraction num/den with den >= 1 and gcd(|num|, den) = 1. The
/// canonical form is established at construction, so equality is structural.
/// Values are immutable; all operations return fresh values.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}
    Rational(Integer value) : num_(std::move(value)), den_(1) {}
    Rational(Integer num, Integer den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Numerator of an integral value. Throws std::domain_error otherwise.
    Integer to_integer() const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) { return !(lhs == rhs); }

private:
    void normalize();

    Integer num_;
    Integer den_;  // always >= 1
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace samelson
