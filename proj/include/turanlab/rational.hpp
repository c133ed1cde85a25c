#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "turanlab/errors.hpp"

namespace turanlab {

namespace detail {

inline int64_t checked_i64(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw Overflow(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<int64_t>(v);
}

}  // namespace detail

// Exact rational arithmetic on int64 numerator/denominator, always reduced,
// denominator > 0. Intermediate products use 128-bit; anything that would not
// reduce back into 64 bits raises Overflow rather than wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(int64_t n, int64_t d) { assign(n, d); }

    static Rational from_uint(uint64_t n) {
        if (n > static_cast<uint64_t>(INT64_MAX)) throw Overflow("rational from count");
        return Rational(static_cast<int64_t>(n));
    }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return make_reduced(n, d);
    }
    Rational operator-(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return make_reduced(n, d);
    }
    Rational operator*(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.num_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return make_reduced(n, d);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Overflow("rational division by zero");
        __int128 n = static_cast<__int128>(num_) * o.den_;
        __int128 d = static_cast<__int128>(den_) * o.num_;
        return make_reduced(n, d);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational pow(int e) const {
        Rational r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // "p" or "p/q"
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Parses "p" or "p/q" with optional sign on p. Throws std::invalid_argument.
    static Rational parse(const std::string& text);

private:
    void assign(int64_t n, int64_t d) {
        if (d == 0) throw Overflow("rational with zero denominator");
        if (d < 0) {
            if (n == INT64_MIN || d == INT64_MIN) throw Overflow("rational normalization");
            n = -n;
            d = -d;
        }
        int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    static Rational make_reduced(__int128 n, __int128 d) {
        if (d == 0) throw Overflow("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        Rational r;
        r.num_ = detail::checked_i64(n, "rational numerator");
        r.den_ = detail::checked_i64(d, "rational denominator");
        return r;
    }

    int64_t num_;
    int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        size_t pos = 0;
        if (slash == std::string::npos) {
            int64_t n = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return Rational(n);
        }
        int64_t n = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument(text);
        int64_t d = std::stoll(text.substr(slash + 1), &pos);
        if (pos != text.size() - slash - 1) throw std::invalid_argument(text);
        return Rational(n, d);
    } catch (const Overflow&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

}  // namespace turanlab
