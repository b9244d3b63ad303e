/**
 * @file rat.hpp
 * @brief Exact rational scalar built on arbitrary-precision integers.
 *
 * Canonical form is maintained at all times:
 *  - denominator > 0 (sign carried by the numerator),
 *  - gcd(|num|, den) = 1,
 *  - zero is uniquely 0/1.
 *
 * Values are immutable in spirit: every operation returns a fresh canonical
 * value, so Rat is safe to share across threads without synchronization.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace ellip {

using BigInt = boost::multiprecision::cpp_int;

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
    Rat(T n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}

    // Throws std::domain_error on a zero denominator.
    Rat(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    // Largest integer <= num/den (floors toward -infinity).
    BigInt floor() const;

    Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

    // "p/q" in canonical form, or "p" alone when q = 1.
    std::string to_string() const;

    // Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
    // with a character position on malformed input; "1.5" is rejected.
    static Rat parse(std::string_view text);

    // Fixed-point decimal approximation, rounded toward zero. Non-authoritative
    // display helper only; never feeds back into computation.
    std::string decimal_approx(int digits = 12) const;

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);  // throws std::domain_error when o = 0

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }

private:
    void canonicalize();

    BigInt num_;
    BigInt den_;
};

// floor(x / y); y must be nonzero.
BigInt floor_div(const Rat& x, const Rat& y);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace ellip
