#pragma once

#include "macc/combinatorics.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace macc {

/// Exact rational number, always reduced with a positive denominator.
/// Memories, rates and bounds are all carried as Rationals.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : v_(n) {} // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    /// Smallest integer >= value.
    BigInt ceil() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// Decimal rendering with `digits` places after the point (rounded).
    std::string decimal(int digits = 6) const;
    double to_double() const;

    /// Parses "p/q", "p" or a negative form of either.
    static Rational parse(const std::string& text);

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }
/// (z)^+ = max(0, z).
inline Rational positive_part(const Rational& z) { return z < Rational(0) ? Rational(0) : z; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace macc
