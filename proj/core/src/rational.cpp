#include "samelson/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace samelson {

namespace {

Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

void divide_exact(Integer& value, const Integer& divisor) {
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
}

}  // namespace

Integer factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(k));
    return result;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

Integer stirling2(long j, long k) {
    if (j < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > j) return 0;
    if (j == 0) return 1;  // S(0,0); k > j handled above
    if (k == 0) return 0;
    // row-by-row table of the defining recurrence
    std::vector<Integer> row(static_cast<size_t>(k) + 1);
    row[0] = 1;  // S(0,0)
    for (long r = 1; r <= j; ++r) {
        long top = std::min(r, k);
        for (long c = top; c >= 1; --c) row[c] = c * row[c] + row[c - 1];
        row[0] = 0;  // S(r, 0) = 0 for r >= 1
    }
    return row[static_cast<size_t>(k)];
}

Integer gcd_all(const std::vector<Integer>& values) {
    if (values.empty()) throw std::invalid_argument("gcd_all: empty input");
    Integer g = 0;
    for (const Integer& v : values) g = int_gcd(g, v);
    if (g == 0) throw std::invalid_argument("degenerate subgroup");
    return g;
}

Rational::Rational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = int_gcd(num_, den_);  // gcd(0, d) = d, so 0/d reduces to 0/1
    if (g > 1) {
        divide_exact(num_, g);
        divide_exact(den_, g);
    }
}

Integer Rational::to_integer() const {
    if (den_ != 1) throw std::domain_error("Rational: not an integer: " + str());
    return num_;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const {
    Rational result;
    result.num_ = -num_;
    result.den_ = den_;
    return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::invalid_argument("Rational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

}  // namespace samelson
