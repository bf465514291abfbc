#include "supercoset/chart.hpp"

#include <set>
#include <sstream>

namespace supercoset {

ChartSignature::ChartSignature(std::vector<std::string> evenNames,
                               std::vector<std::string> oddNames,
                               std::vector<Scalar> center)
    : even_(std::move(evenNames)), odd_(std::move(oddNames)), center_(std::move(center)) {
    if (center_.size() != even_.size())
        throw Error("ChartSignature: center must assign every even coordinate");
    if (odd_.size() > kMaxOddCoordinates)
        throw Error("ChartSignature: more than " + std::to_string(kMaxOddCoordinates) +
                    " odd coordinates");
    std::set<std::string> seen;
    for (const auto& n : even_)
        if (!seen.insert(n).second) throw Error("ChartSignature: duplicate coordinate '" + n + "'");
    for (const auto& n : odd_)
        if (!seen.insert(n).second) throw Error("ChartSignature: duplicate coordinate '" + n + "'");
}

int ChartSignature::evenIndexOf(const std::string& name) const {
    for (std::size_t i = 0; i < even_.size(); ++i)
        if (even_[i] == name) return static_cast<int>(i);
    return -1;
}

int ChartSignature::oddIndexOf(const std::string& name) const {
    for (std::size_t i = 0; i < odd_.size(); ++i)
        if (odd_[i] == name) return static_cast<int>(i);
    return -1;
}

const Scalar& ChartSignature::centerOf(const std::string& evenName) const {
    int i = evenIndexOf(evenName);
    if (i < 0) throw Error("ChartSignature: no even coordinate '" + evenName + "'");
    return center_[static_cast<std::size_t>(i)];
}

ChartSignature ChartSignature::recentered(const ReducedPoint& newCenter) const {
    ChartSignature out = *this;
    ReducedPoint full = resolvePoint(newCenter);
    for (std::size_t i = 0; i < even_.size(); ++i) out.center_[i] = full.at(even_[i]);
    return out;
}

ReducedPoint ChartSignature::centerPoint() const {
    ReducedPoint p;
    for (std::size_t i = 0; i < even_.size(); ++i) p[even_[i]] = center_[i];
    return p;
}

ReducedPoint ChartSignature::resolvePoint(const ReducedPoint& partial) const {
    ReducedPoint out = centerPoint();
    for (const auto& [name, value] : partial) {
        if (hasEven(name)) {
            out[name] = value;
        } else if (hasOdd(name)) {
            if (!value.isZero())
                throw Error("reduced point: odd coordinate '" + name + "' must be zero");
        } else {
            throw Error("reduced point: unknown coordinate '" + name + "'");
        }
    }
    return out;
}

std::string ChartSignature::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < even_.size(); ++i) {
        if (i) os << ",";
        os << even_[i];
        if (!center_[i].isZero()) os << "@" << center_[i].str();
    }
    os << "|";
    for (std::size_t i = 0; i < odd_.size(); ++i) {
        if (i) os << ",";
        os << odd_[i];
    }
    os << ")";
    return os.str();
}

ChartSignature renamedChart(const ChartSignature& sig, const std::string& suffix) {
    std::vector<std::string> even, odd;
    for (const auto& n : sig.evenNames()) even.push_back(n + suffix);
    for (const auto& n : sig.oddNames()) odd.push_back(n + suffix);
    return {std::move(even), std::move(odd), sig.center()};
}

ChartSignature productChart(const ChartSignature& a, const ChartSignature& b) {
    std::vector<std::string> even = a.evenNames();
    even.insert(even.end(), b.evenNames().begin(), b.evenNames().end());
    std::vector<std::string> odd = a.oddNames();
    odd.insert(odd.end(), b.oddNames().begin(), b.oddNames().end());
    std::vector<Scalar> center = a.center();
    center.insert(center.end(), b.center().begin(), b.center().end());
    return {std::move(even), std::move(odd), std::move(center)};
}

}  // namespace supercoset
