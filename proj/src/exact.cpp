#include "ramsey/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <utility>

namespace ramsey {

Natural checked_sub(const Natural& a, const Natural& b) {
    if (b > a)
        throw std::domain_error("checked_sub: " + b.str() + " exceeds " + a.str());
    return a - b;
}

ExactRational::ExactRational(Sign sign, Natural numerator, Natural denominator)
    : sign_(sign), num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.sign() < 0 || den_.sign() < 0)
        throw std::domain_error("ExactRational: numerator and denominator must be nonnegative");
    if (den_.is_zero())
        throw std::domain_error("ExactRational: zero denominator");
    if (num_.is_zero()) {
        sign_ = Sign::zero;
        den_ = 1;
        return;
    }
    if (sign_ == Sign::zero)
        throw std::domain_error("ExactRational: sign zero with nonzero numerator");
    Natural g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExactRational ExactRational::from_natural(const Natural& value) {
    return ExactRational(value.is_zero() ? Sign::zero : Sign::positive, value, 1);
}

ExactRational ExactRational::fraction(const Natural& numerator, const Natural& denominator) {
    return ExactRational(numerator.is_zero() ? Sign::zero : Sign::positive, numerator,
                         denominator);
}

ExactRational ExactRational::from_signed(Natural numerator, Natural denominator) {
    if (denominator.is_zero())
        throw std::domain_error("ExactRational: zero denominator");
    int s = numerator.sign() * denominator.sign();
    return ExactRational(s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive),
                         boost::multiprecision::abs(numerator),
                         boost::multiprecision::abs(denominator));
}

ExactRational ExactRational::operator-() const {
    ExactRational r = *this;
    if (r.sign_ == Sign::positive)
        r.sign_ = Sign::negative;
    else if (r.sign_ == Sign::negative)
        r.sign_ = Sign::positive;
    return r;
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational::from_signed(a.signed_num() * b.den_ + b.signed_num() * a.den_,
                                      a.den_ * b.den_);
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return a + (-b);
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational::from_signed(a.signed_num() * b.signed_num(), a.den_ * b.den_);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.is_zero())
        throw std::domain_error("ExactRational: division by zero");
    return ExactRational::from_signed(a.signed_num() * b.den_, a.den_ * b.signed_num());
}

bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.sign_ == b.sign_ && a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const ExactRational& a, const ExactRational& b) {
    return a.signed_num() * b.den_ < b.signed_num() * a.den_;
}

std::string ExactRational::str() const {
    std::string out;
    if (sign_ == Sign::negative)
        out += '-';
    out += num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

Natural factorial(unsigned n) {
    Natural f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Natural floor_factorial_e(unsigned n) {
    if (n == 0)
        throw std::domain_error("floor_factorial_e: identity stated for n >= 1");
    // Sum n!/i! for i = n..0. Walking i downward, n!/(i-1)! = (n!/i!) * i,
    // so the running term picks up one factor per step and ends at n!/0! = n!.
    Natural acc = 1;  // i = n
    Natural term = 1;
    for (unsigned i = n; i >= 1; --i) {
        term *= i;
        acc += term;
    }
    return acc;
}

bool check_euler_recursion(unsigned n) {
    return floor_factorial_e(n + 1) == Natural(n + 1) * floor_factorial_e(n) + 1;
}

Natural floor_scaled(unsigned n, const ExactRational& q) {
    Natural e_floor = floor_factorial_e(n);  // also enforces n >= 1
    if (q.is_zero())
        return e_floor;
    Natural fact = factorial(n);
    if (fact % q.denominator() != 0)
        throw std::domain_error("floor_scaled: closed form requires n!q to be an integer");
    Natural shift = (fact / q.denominator()) * q.numerator();  // |n! q|
    if (q.sign() == Sign::negative)
        return e_floor + shift;
    if (shift > e_floor)
        throw std::domain_error("floor_scaled: result would be negative");
    return e_floor - shift;
}

}  // namespace ramsey
