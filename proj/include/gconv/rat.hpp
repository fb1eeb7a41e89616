#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gconv {

/// Exact rational number in canonical reduced form: den > 0 and
/// gcd(|num|, den) == 1. All arithmetic is exact; intermediates go through
/// 128-bit integers and an overflow of the reduced 64-bit result throws.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) { init(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }
    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        i128 lhs = i128(a.num_) * b.den_;
        i128 rhs = i128(b.num_) * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    /// Largest integer <= *this.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const { return -(-*this).floor(); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }
    /// Always "p/q" (canonical wire form).
    std::string wire() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rat make(i128 n, i128 d) {
        Rat r;
        r.init128(n, d);
        return r;
    }

    void init(std::int64_t n, std::int64_t d) { init128(i128(n), i128(d)); }

    void init128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        i128 g = gcd128(n, d);
        n /= g;
        d /= g;
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rat: value exceeds 64-bit range");
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

/// Point of the extended real line: -inf, a finite rational, or +inf.
class ExtRat {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtRat() : kind_(Kind::Finite), value_() {}
    ExtRat(Rat v) : kind_(Kind::Finite), value_(v) {}
    static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
    static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const Rat& value() const {
        if (!finite()) throw std::logic_error("ExtRat: not finite");
        return value_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
        auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : k == Kind::Finite ? 1 : 2; };
        if (rank(a.kind_) != rank(b.kind_))
            return rank(a.kind_) <=> rank(b.kind_);
        if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

    /// Sum, with infinities absorbing. NegInf + PosInf is rejected.
    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.finite() && b.finite()) return ExtRat(a.value_ + b.value_);
        Kind inf = a.finite() ? b.kind_ : a.kind_;
        const ExtRat& other = a.finite() ? a : b;
        if (!other.finite() && other.kind_ != inf)
            throw std::domain_error("ExtRat: inf + (-inf)");
        return ExtRat(inf);
    }
    friend ExtRat operator-(const ExtRat& a) {
        switch (a.kind_) {
            case Kind::NegInf: return pos_inf();
            case Kind::PosInf: return neg_inf();
            default: return ExtRat(-a.value_);
        }
    }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "inf";
            default: return value_.str();
        }
    }

private:
    explicit ExtRat(Kind k) : kind_(k), value_() {}
    Kind kind_;
    Rat value_;
};

}  // namespace gconv
