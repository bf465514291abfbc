#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "supercoset/scalar.hpp"

namespace supercoset {

/// Odd coordinates are stored as bitmask positions; machine-width cap.
inline constexpr std::size_t kMaxOddCoordinates = 16;

/// Assignment of Scalars to (a subset of) the even coordinates of a chart.
/// Odd coordinates of a reduced point are identically zero.
using ReducedPoint = std::map<std::string, Scalar>;

/// A coordinate chart: ordered even names with a center value each, and
/// ordered odd names. Polynomials over the chart are written in the
/// displacement variables x - center (odd coordinates are their own
/// displacement).
class ChartSignature {
public:
    ChartSignature() = default;
    ChartSignature(std::vector<std::string> evenNames,
                   std::vector<std::string> oddNames,
                   std::vector<Scalar> center);

    const std::vector<std::string>& evenNames() const { return even_; }
    const std::vector<std::string>& oddNames() const { return odd_; }
    const std::vector<Scalar>& center() const { return center_; }

    std::size_t evenCount() const { return even_.size(); }
    std::size_t oddCount() const { return odd_.size(); }

    bool hasEven(const std::string& name) const { return evenIndexOf(name) >= 0; }
    bool hasOdd(const std::string& name) const { return oddIndexOf(name) >= 0; }
    /// -1 when absent.
    int evenIndexOf(const std::string& name) const;
    int oddIndexOf(const std::string& name) const;

    const Scalar& centerOf(const std::string& evenName) const;

    /// Same names in the same order; centers may differ.
    bool sameNames(const ChartSignature& o) const {
        return even_ == o.even_ && odd_ == o.odd_;
    }
    friend bool operator==(const ChartSignature& a, const ChartSignature& b) {
        return a.even_ == b.even_ && a.odd_ == b.odd_ && a.center_ == b.center_;
    }
    friend bool operator!=(const ChartSignature& a, const ChartSignature& b) {
        return !(a == b);
    }

    ChartSignature recentered(const ReducedPoint& newCenter) const;
    ReducedPoint centerPoint() const;

    /// Fills missing even coordinates with the center value; rejects unknown
    /// names and nonzero odd assignments.
    ReducedPoint resolvePoint(const ReducedPoint& partial) const;

    std::string str() const;

private:
    std::vector<std::string> even_;
    std::vector<std::string> odd_;
    std::vector<Scalar> center_;  // one per even name
};

/// Appends a suffix to every coordinate name.
ChartSignature renamedChart(const ChartSignature& sig, const std::string& suffix);

/// Concatenation A then B; throws on a name collision.
ChartSignature productChart(const ChartSignature& a, const ChartSignature& b);

}  // namespace supercoset
