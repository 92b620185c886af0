#pragma once

// Exact rational arithmetic on arbitrary-precision integers.
//
// Invariants maintained by every constructor and operation:
//   * denominator > 0,
//   * gcd(|numerator|, denominator) = 1 (fully reduced),
//   * zero is represented as 0/1.
//
// Serialization is "p/q", or just "p" when q = 1.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

#include "geo5/error.hpp"

namespace geo5 {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rat(const Int& n) : num_(n), den_(1) {}          // NOLINT(google-explicit-constructor)
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat operator-() const { return Rat(-num_, den_, already_reduced_tag{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw DegenerateInput("division by zero rational");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    Rat inv() const {
        if (num_ == 0) throw DegenerateInput("inverse of zero rational");
        return Rat(den_, num_);
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Parses "p", "p/q", or "-p/q".  Whitespace is not accepted.
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(Int(s));
            Int p(s.substr(0, slash));
            Int q(s.substr(slash + 1));
            if (q == 0) throw ParseError("zero denominator in '" + s + "'");
            return Rat(p, q);
        } catch (const std::runtime_error& e) {
            throw ParseError("bad rational '" + s + "'");
        }
    }

  private:
    struct already_reduced_tag {};
    Rat(Int n, Int d, already_reduced_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw DegenerateInput("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = int_gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

inline Rat abs(const Rat& q) { return q.abs(); }
inline int sign(const Rat& q) { return q.sign(); }

} // namespace geo5
