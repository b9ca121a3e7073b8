// Exact rational scalar type. All arithmetic in the library runs over these;
// overflow of the 64-bit representation throws instead of wrapping.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace latk {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("rational arithmetic overflow (add)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("rational arithmetic overflow (mul)");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN)
        throw std::overflow_error("rational arithmetic overflow (neg)");
    return -a;
}

} // namespace detail

/// Rational number p/q with q > 0 and gcd(|p|, q) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = detail::checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        // reduce cross terms first to keep intermediates small
        std::int64_t g = std::gcd(den_, o.den_);
        std::int64_t lhs = detail::checked_mul(num_, o.den_ / g);
        std::int64_t rhs = detail::checked_mul(o.num_, den_ / g);
        num_ = detail::checked_add(lhs, rhs);
        den_ = detail::checked_mul(den_, o.den_ / g);
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }

    Rational& operator*=(const Rational& o) {
        std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
        std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
        num_ = detail::checked_mul(num_ / g1, o.num_ / g2);
        den_ = detail::checked_mul(den_ / g2, o.den_ / g1);
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        Rational inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        if (inv.den_ < 0) {
            inv.num_ = detail::checked_neg(inv.num_);
            inv.den_ = detail::checked_neg(inv.den_);
        }
        return *this *= inv;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        // wide intermediates, comparison never overflows
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational inverse() const {
        Rational r(1);
        return r /= *this;
    }

    /// Canonical form: "p" when q = 1, otherwise "p/q".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = detail::checked_neg(num_);
            den_ = detail::checked_neg(den_);
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace latk
