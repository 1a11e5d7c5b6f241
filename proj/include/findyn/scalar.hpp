#pragma once

// Exact-where-possible number type. Distances and thresholds are stored as
// exact rationals whenever they are constructible (grids, table metrics,
// rational parameters), with a double fallback for data that is inherently
// inexact (Euclidean distances of random points). Verdicts in this library
// hinge on closed <= comparisons against thresholds, so mixed arithmetic
// promotes to double only when a double operand is actually present.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

#include "findyn/errors.hpp"

namespace findyn {

namespace detail {

inline long long checked_narrow(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw error(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

// Reduced fraction num/den, den > 0. All operators reduce; intermediates use
// __int128 so that int64-range operands never overflow silently.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den) {
        if (den == 0) throw parameter_error("rational with zero denominator");
        __int128 n = num, d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g == 0) g = 1;
        num_ = detail::checked_narrow(n / g, "construction");
        den_ = detail::checked_narrow(d / g, "construction");
    }
    Rational(long long num) : num_(num), den_(1) {}  // NOLINT: implicit by design

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw parameter_error("rational division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return make(n, d);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Canonical text form: "p/q", or bare "p" when q == 1. Parse accepts both.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    static Rational make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g == 0) g = 1;
        Rational r;
        r.num_ = detail::checked_narrow(n / g, "arithmetic");
        r.den_ = detail::checked_narrow(d / g, "arithmetic");
        return r;
    }

    long long num_;
    long long den_;
};

// Scalar = exact Rational or double. Arithmetic and comparison between two
// exact operands stay exact; a double operand anywhere demotes the result.
class Scalar {
  public:
    constexpr Scalar() : exact_(true), rat_(), dbl_(0.0) {}
    Scalar(const Rational& r) : exact_(true), rat_(r), dbl_(0.0) {}       // NOLINT
    Scalar(long long v) : exact_(true), rat_(v), dbl_(0.0) {}             // NOLINT
    Scalar(int v) : exact_(true), rat_(v), dbl_(0.0) {}                   // NOLINT
    static Scalar from_double(double v) {
        Scalar s;
        s.exact_ = false;
        s.dbl_ = v;
        return s;
    }
    static Scalar ratio(long long p, long long q) { return Scalar(Rational(p, q)); }

    bool is_exact() const { return exact_; }
    const Rational& rational() const {
        if (!exact_) throw error("scalar is not exact");
        return rat_;
    }
    double to_double() const { return exact_ ? rat_.to_double() : dbl_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(a.rat_ + b.rat_);
        return from_double(a.to_double() + b.to_double());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(a.rat_ - b.rat_);
        return from_double(a.to_double() - b.to_double());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(a.rat_ * b.rat_);
        return from_double(a.to_double() * b.to_double());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(a.rat_ / b.rat_);
        return from_double(a.to_double() / b.to_double());
    }
    Scalar operator-() const { return exact_ ? Scalar(-rat_) : from_double(-dbl_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return a.rat_ == b.rat_;
        return a.to_double() == b.to_double();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return a.rat_ < b.rat_;
        return a.to_double() < b.to_double();
    }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

    std::string to_string() const {
        if (exact_) return rat_.to_string();
        std::ostringstream os;
        os.precision(17);
        os << dbl_;
        return os.str();
    }

  private:
    bool exact_;
    Rational rat_;
    double dbl_;
};

inline Scalar abs(const Scalar& s) { return s < Scalar(0) ? -s : s; }
inline Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

// Parses "p/q", a bare integer, or a finite decimal ("0.25" -> 1/4), all
// exact. Anything else (scientific notation, non-numeric text) is rejected;
// inexact data enters only through Euclidean coordinates or JSON numbers.
inline Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw input_error("empty scalar");
    auto parse_ll = [](const std::string& s) -> long long {
        long long v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw input_error("bad scalar component '" + s + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long p = parse_ll(text.substr(0, slash));
        long long q = parse_ll(text.substr(slash + 1));
        if (q == 0) throw input_error("zero denominator in '" + text + "'");
        return Scalar(Rational(p, q));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18) throw input_error("bad decimal '" + text + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head.empty()) head = "0";
        long long whole = parse_ll(head);
        long long digits = parse_ll(frac);
        if (digits < 0) throw input_error("bad decimal '" + text + "'");
        long long den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational r(whole, 1);
        Rational tail(digits, den);
        return Scalar(neg || whole < 0 ? r - tail : r + tail);
    }
    return Scalar(Rational(parse_ll(text), 1));
}

}  // namespace findyn
