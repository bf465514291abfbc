#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercoset/matrix.hpp"
#include "supercoset/superpoly.hpp"

namespace supercoset {

/// A superdomain morphism, carried entirely by its structure-sheaf pullback:
/// for every target coordinate y the polynomial (or jet) pullback of the
/// absolute coordinate function y, written over the source chart. The
/// continuous point map is carried only through reduced images of centers.
///
/// When `order` is set the pullbacks are jets at the source center and the
/// morphism may not be recentered.
class Morphism {
public:
    Morphism() = default;
    Morphism(ChartSignature source, ChartSignature target,
             std::map<std::string, SuperPolynomial> pullbacks,
             std::optional<int> order = std::nullopt);

    static Morphism identity(const ChartSignature& chart);
    /// The constant morphism onto a reduced point of the target.
    static Morphism constant(const ChartSignature& source, const ChartSignature& target,
                             const ReducedPoint& value);

    const ChartSignature& source() const { return source_; }
    const ChartSignature& target() const { return target_; }
    std::optional<int> order() const { return order_; }
    bool isExact() const { return !order_.has_value(); }

    const SuperPolynomial& pullback(const std::string& targetCoordinate) const;
    const std::map<std::string, SuperPolynomial>& pullbacks() const { return pullbacks_; }

    /// Pullback of the displacement variable y - targetCenter(y).
    SuperPolynomial displacementPullback(const std::string& targetCoordinate) const;

    /// Image of the source center under the reduced map.
    ReducedPoint reducedImage() const;

    /// Applies the sheaf map to a function over the target chart.
    SuperPolynomial pullApply(const SuperPolynomial& f) const;

    /// Identity on the nose: every pullback equals the matching coordinate
    /// (up to the jet order, when set).
    bool isIdentity() const;

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.order_ == b.order_ &&
               a.pullbacks_ == b.pullbacks_;
    }
    friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

    std::string str() const;

private:
    ChartSignature source_;
    ChartSignature target_;
    std::map<std::string, SuperPolynomial> pullbacks_;
    std::optional<int> order_;
};

/// Composite "phi then psi" (the sheaf maps compose the other way around).
/// Requires psi's source names to match phi's target and phi's reduced
/// image to sit at the center psi expects.
Morphism compose(const Morphism& phi, const Morphism& psi);

/// (A x C) -> (B x D) acting factorwise. Factor charts must have disjoint
/// coordinate names on each side.
Morphism productMorphism(const Morphism& f, const Morphism& g);

/// Projection of a product chart onto consecutive slots, with the stated
/// target chart (the target may be recentered relative to the factor).
Morphism factorProjection(const ChartSignature& productSig, const ChartSignature& factor,
                          std::size_t evenOffset, std::size_t oddOffset);

/// Express the same polynomial morphism around a new source center.
Morphism recenterSource(const Morphism& phi, const ReducedPoint& newCenter);

/// Rebuilds the morphism with positionally identical charts of new names.
Morphism renameSource(const Morphism& phi, const ChartSignature& newSource);
Morphism renameTarget(const Morphism& phi, const ChartSignature& newTarget);

/// Truncates all pullbacks, marking the morphism as a jet.
Morphism truncated(const Morphism& phi, int order);

/// Per-coordinate difference of pullbacks (compared at the finer of the two
/// jet orders); keys with nonzero difference only.
std::map<std::string, SuperPolynomial> residual(const Morphism& a, const Morphism& b);

/// Differential blocks at a reduced point. At a reduced point the odd-even
/// and even-odd couplings vanish, so two blocks suffice.
struct TangentMap {
    Matrix even;  // target-even x source-even
    Matrix odd;   // target-odd x source-odd

    bool isInvertible() const { return even.isInvertible() && odd.isInvertible(); }
    friend bool operator==(const TangentMap& a, const TangentMap& b) {
        return a.even == b.even && a.odd == b.odd;
    }
};

/// d(phi) at p: evenBlock[i][j] = d(pullback y_i)_0 / dx_j at p, oddBlock
/// [a][b] = numeric part of the xi_b coefficient of pullback eta_a. For a
/// jet-valued morphism p must be the source center.
TangentMap differentialAt(const Morphism& phi, const ReducedPoint& p);

struct RankProfile {
    std::size_t evenRank = 0;
    std::size_t oddRank = 0;
    bool isSubmersion = false;
    bool isImmersion = false;
};

RankProfile rankProfile(const Morphism& phi, const ReducedPoint& p);

}  // namespace supercoset
