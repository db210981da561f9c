// rational.hpp
// ------------
// Exact rationals over BigInt. Always reduced, denominator always
// positive, canonical zero is 0/1. The symbolic path of the library never
// touches floating point; to_double exists only for the numeric bridge.

#pragma once

#include <string>
#include <string_view>

#include "satake/bigint.hpp"
#include "satake/errors.hpp"

namespace satake {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    // Accepts "n" or "n/d".
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw input_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    // Serialization form, always "n/d".
    std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

    // Human form, "/d" dropped for integers.
    std::string pretty() const {
        return den_.is_one() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void reduce() {
        if (den_.is_zero()) throw input_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.signum() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

} // namespace satake
