#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace structalg {

/// Element of the field Q(i): a Gaussian rational with exact components.
///
/// Both components are kept in canonical (reduced) form by mpq_class.
/// The textual form is "a/b+c/d*i" with zero parts omitted, unit imaginary
/// coefficients contracted to "i"/"-i", and integral values printed without
/// denominator; parse/format round-trip bit-exactly.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    /// Exact rational p/q (q > 0 not required; canonicalized).
    static GaussianRational rational(long p, long q);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// Field norm re^2 + im^2 (a nonnegative rational).
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    /// Throws DivisionByZero when o == 0.
    GaussianRational operator/(const GaussianRational& o) const;

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    GaussianRational inverse() const;

    std::string str() const;
    /// Parses the textual form; throws ParseError on malformed input.
    static GaussianRational parse(const std::string& text);

private:
    mpq_class re_, im_;
};

using GQ = GaussianRational;

/// Exact square root inside Q(i), if one exists.
///
/// The returned root w satisfies w*w == a and the sign convention
/// re(w) > 0, or re(w) == 0 and im(w) >= 0.  std::nullopt when no root
/// exists in the field.
std::optional<GaussianRational> sqrt_in_field(const GaussianRational& a);

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> sqrt_rational(const mpq_class& q);

}  // namespace structalg
