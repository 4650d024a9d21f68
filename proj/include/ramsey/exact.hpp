#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ramsey {

// Arbitrary-precision nonnegative integer. cpp_int is signed; every routine
// in this library keeps its values >= 0 and uses checked_sub wherever a
// subtraction could underflow.
using Natural = boost::multiprecision::cpp_int;

// a - b, throwing std::domain_error when b > a.
Natural checked_sub(const Natural& a, const Natural& b);

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Reduced fraction of Naturals with an explicit sign.
//
// Invariants, restored after every construction and operation:
//   * denominator > 0
//   * gcd(numerator, denominator) == 1
//   * zero is uniquely represented as (Sign::zero, 0, 1)
class ExactRational {
public:
    ExactRational() : sign_(Sign::zero), num_(0), den_(1) {}
    ExactRational(Sign sign, Natural numerator, Natural denominator);

    static ExactRational from_natural(const Natural& value);
    // numerator/denominator with both parts nonnegative
    static ExactRational fraction(const Natural& numerator, const Natural& denominator);

    Sign sign() const { return sign_; }
    const Natural& numerator() const { return num_; }
    const Natural& denominator() const { return den_; }
    bool is_zero() const { return sign_ == Sign::zero; }
    bool is_integer() const { return den_ == 1; }

    ExactRational operator-() const;
    friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

    friend bool operator==(const ExactRational& a, const ExactRational& b);
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return !(a == b); }
    friend bool operator<(const ExactRational& a, const ExactRational& b);
    friend bool operator>(const ExactRational& a, const ExactRational& b) { return b < a; }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) { return !(b < a); }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) { return !(a < b); }

    // "0", "3", "5/8", "-5/8"
    std::string str() const;

private:
    // Normalizes a signed numerator/denominator pair (cpp_int semantics).
    static ExactRational from_signed(Natural numerator, Natural denominator);
    Natural signed_num() const { return sign_ == Sign::negative ? Natural(-num_) : num_; }

    Sign sign_;
    Natural num_;
    Natural den_;
};

// n!
Natural factorial(unsigned n);

// floor(n! e) evaluated as the exact integer sum of n!/i! for i = 0..n,
// term by term (each term divides evenly). The identity is only stated for
// n >= 1; n = 0 is a domain error.
Natural floor_factorial_e(unsigned n);

// floor((n+1)! e) == (n+1) floor(n! e) + 1, both sides evaluated by the
// exact sum above. Requires n >= 1.
bool check_euler_recursion(unsigned n);

// floor(n! (e - q)) for rational q with n! q an integer, computed as
// floor(n! e) - n! q; floor(x - m) = floor(x) - m holds for integer m, so
// the value is exact. Requires n >= 1. Rejects non-integer n! q and any q
// large enough to make the result negative.
Natural floor_scaled(unsigned n, const ExactRational& q);

}  // namespace ramsey
