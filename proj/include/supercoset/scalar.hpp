#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace supercoset {

/// Base error type for structural misuse (bad signatures, parity clashes,
/// singular differentials, ...). Residual check failures are reported as
/// data, never as exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using Rational = mpq_class;

/// Gaussian rational a + b*i, the exactly representable subfield of the
/// coefficient field. Kept canonical: lowest terms, positive denominator
/// (mpq_class maintains this), zero is 0/1.
struct Scalar {
    Rational re{0};
    Rational im{0};

    Scalar() = default;
    Scalar(long n) : re(n) {}  // NOLINT: implicit by design
    Scalar(long num, long den);
    Scalar(Rational r) : re(std::move(r)) {}  // NOLINT
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }

    Scalar operator-() const { return {-re, -im}; }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order for deterministic containers; not a numeric order.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    Scalar inverse() const;

    /// "p/q" with the denominator always spelled out, e.g. "3/2", "-1/1".
    static std::string formatRational(const Rational& r);
    static Rational parseRational(const std::string& text);

    /// Human-readable form: "3/2", "i", "1/2+3/4i", ...
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace supercoset
