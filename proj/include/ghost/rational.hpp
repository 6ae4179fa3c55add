#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ghost {

// Exact rational arithmetic on 64-bit components. Weights and root
// coordinates in this library stay tiny (half-integers, small sums), so
// overflow is not a practical concern; normalization keeps den > 0 and
// gcd(num, den) == 1 as a class invariant.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long num) : num_(num) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    // Requires is_integer(); guards against silent truncation.
    long long as_integer() const {
        if (den_ != 1) throw std::logic_error("rational is not an integer");
        return num_;
    }

    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    Rational operator-() const { return raw(-num_, den_); }

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
        if (b.num_ == 0) throw std::domain_error("division by zero");
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
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    static Rational raw(long long n, long long d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace ghost
