#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace g2h {

using Rational = mpq_class;

/// An element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
/// Both components are exact rationals; equality is componentwise.
class Scalar {
public:
    Scalar() : rat_(0), irr_(0) {}
    Scalar(long n) : rat_(n), irr_(0) {}
    Scalar(const Rational& a) : rat_(a), irr_(0) { rat_.canonicalize(); }
    Scalar(Rational a, Rational b) : rat_(std::move(a)), irr_(std::move(b)) {
        rat_.canonicalize();
        irr_.canonicalize();
    }
    Scalar(long p, long q) : rat_(p, q), irr_(0) { rat_.canonicalize(); }

    static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }
    /// b*sqrt(2) for rational b given as p/q.
    static Scalar sqrt2_times(long p, long q = 1) {
        return Scalar(Rational(0), Rational(p, q));
    }

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }

    bool is_zero() const { return rat_ == 0 && irr_ == 0; }
    bool is_rational() const { return irr_ == 0; }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        return Scalar(x.rat_ + y.rat_, x.irr_ + y.irr_);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        return Scalar(x.rat_ - y.rat_, x.irr_ - y.irr_);
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        // (a + b r2)(c + d r2) = (ac + 2bd) + (ad + bc) r2
        return Scalar(x.rat_ * y.rat_ + 2 * x.irr_ * y.irr_,
                      x.rat_ * y.irr_ + x.irr_ * y.rat_);
    }
    Scalar operator-() const { return Scalar(-rat_, -irr_); }

    Scalar& operator+=(const Scalar& y) {
        rat_ += y.rat_;
        irr_ += y.irr_;
        return *this;
    }
    Scalar& operator-=(const Scalar& y) {
        rat_ -= y.rat_;
        irr_ -= y.irr_;
        return *this;
    }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    /// Multiplicative inverse via the Galois conjugate: 1/x = conj(x)/N(x),
    /// N(a + b r2) = a^2 - 2 b^2, which vanishes only at x = 0.
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
        Rational n = rat_ * rat_ - 2 * irr_ * irr_;
        return Scalar(rat_ / n, -irr_ / n);
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    /// Galois conjugate a - b*sqrt(2).
    Scalar conj() const { return Scalar(rat_, -irr_); }

    /// Sign of the real number a + b*sqrt(2) under the embedding sqrt(2) > 0.
    /// Exact: decided by the component signs and by comparing a^2 with 2 b^2.
    int sign() const {
        int sa = sgn(rat_), sb = sgn(irr_);
        if (sa == 0) return sb;
        if (sb == 0) return sa;
        if (sa == sb) return sa;
        // opposite component signs: compare |a| with |b| sqrt 2
        int c = cmp(rat_ * rat_, 2 * irr_ * irr_);
        return c == 0 ? 0 : (c > 0 ? sa : sb);
    }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.rat_ == y.rat_ && x.irr_ == y.irr_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    /// Total order compatible with the real embedding.
    friend bool operator<(const Scalar& x, const Scalar& y) {
        return (x - y).sign() < 0;
    }

    /// Exact square root within the field, if one exists.
    std::optional<Scalar> sqrt_in_field() const;

    double to_double() const;  // display only, never used in decisions

    /// Canonical text form: `p/q`, `p/q r2` or `p/q + r/s r2` (r2 = sqrt 2).
    std::string str() const;
    static Scalar parse(const std::string& text);
    /// Parse a scalar starting at `pos`; advances `pos` past what was read.
    static Scalar parse_prefix(const std::string& text, size_t& pos);

private:
    Rational rat_, irr_;
};

inline Scalar operator*(long n, const Scalar& x) { return Scalar(n) * x; }

}  // namespace g2h
