#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercoset/chart.hpp"

namespace supercoset {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// Monomial key: one exponent per even coordinate plus an odd-subset bitmask.
/// Bit i set means the i-th odd coordinate occurs (exponent 1).
struct TermKey {
    std::vector<std::uint32_t> even;
    std::uint32_t odd = 0;

    std::uint32_t evenDegree() const;
    std::uint32_t oddDegree() const;
    Parity parity() const { return static_cast<Parity>(oddDegree() % 2); }

    friend bool operator==(const TermKey& a, const TermKey& b) {
        return a.even == b.even && a.odd == b.odd;
    }
};

/// Canonical storage order: even total degree, then even exponents
/// lexicographically, then the odd subset as an ascending index sequence.
struct TermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const;
};

/// Order used by ideal reduction: local (degree-ascending on the combined
/// even+odd degree), so the leading term of a generator is its lowest part.
bool divisionLess(const TermKey& a, const TermKey& b);

/// Sign of reordering the concatenation of two disjoint ascending odd
/// subsets into ascending order; 0 when the masks intersect.
int koszulSign(std::uint32_t maskA, std::uint32_t maskB);

using TermMap = std::map<TermKey, Scalar, TermOrder>;

/// Exact Grassmann-valued polynomial over a chart, written in displacement
/// variables relative to the chart center. Zero coefficients are never
/// stored; odd factors are kept ascending, which fixes all signs.
class SuperPolynomial {
public:
    SuperPolynomial() = default;
    explicit SuperPolynomial(ChartSignature sig) : sig_(std::move(sig)) {}

    static SuperPolynomial constant(const ChartSignature& sig, const Scalar& c);
    /// The displacement variable of the named coordinate (even or odd).
    static SuperPolynomial variable(const ChartSignature& sig, const std::string& name);
    /// The absolute coordinate function: center + displacement for an even
    /// name, the same as variable() for an odd name.
    static SuperPolynomial coordinate(const ChartSignature& sig, const std::string& name);

    const ChartSignature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    Scalar coefficient(const TermKey& key) const;
    Scalar constantTerm() const;
    void addTerm(const TermKey& key, const Scalar& c);

    bool hasParity(Parity p) const;  // true for zero under either parity
    std::optional<Parity> parity() const;
    std::uint32_t maxEvenDegree() const;

    SuperPolynomial operator-() const;
    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
    SuperPolynomial scaled(const Scalar& c) const;

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) {
        return !(a == b);
    }

    /// Numeric part evaluated at the absolute point p: nilpotent terms are
    /// discarded, even displacements take the values p - center.
    Scalar valueAt(const ReducedPoint& p) const;

    /// Formal partial derivative in an even displacement variable.
    SuperPolynomial partialEven(const std::string& name) const;
    /// Left partial derivative in an odd variable.
    SuperPolynomial partialOdd(const std::string& name) const;

    /// Drops every term of even total degree exceeding order.
    SuperPolynomial truncatedEven(int order) const;

    std::string str() const;

private:
    ChartSignature sig_;
    TermMap terms_;
};

/// Algebra-homomorphism substitution: each coordinate of f's chart is
/// replaced by a value over `target`. Even coordinates require even-parity
/// values, odd coordinates odd-parity values. When `truncOrder` is given,
/// intermediates are truncated; this is only sound when every substituted
/// value has zero constant term (jet composition), which the caller must
/// ensure.
SuperPolynomial substitute(const SuperPolynomial& f, const ChartSignature& target,
                           const std::map<std::string, SuperPolynomial>& assignment,
                           std::optional<int> truncOrder = std::nullopt);

/// The same function expressed around a new center of the same chart.
SuperPolynomial recentered(const SuperPolynomial& f, const ReducedPoint& newCenter);

/// Reinterprets f over a chart with identical layout but different names.
SuperPolynomial renamed(const SuperPolynomial& f, const ChartSignature& newSig);

/// Injects f into a product chart whose factor occupies the given slots.
SuperPolynomial embedded(const SuperPolynomial& f, const ChartSignature& productSig,
                         std::size_t evenOffset, std::size_t oddOffset);

/// SuperPolynomial truncated at even total degree D around the chart
/// center; the computational stand-in for a germ. Arithmetic is closed on
/// equal signature and order.
class Jet {
public:
    Jet(SuperPolynomial body, int order);

    const SuperPolynomial& body() const { return body_; }
    int order() const { return order_; }

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend bool operator==(const Jet& a, const Jet& b) {
        return a.order_ == b.order_ && a.body_ == b.body_;
    }

private:
    SuperPolynomial body_;
    int order_;
};

Jet jetTruncate(const SuperPolynomial& f, int order);

}  // namespace supercoset
