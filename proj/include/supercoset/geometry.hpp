#pragma once

#include "supercoset/morphism.hpp"

namespace supercoset {

/// Coordinate change bringing a submersion to the normal form in which its
/// pullbacks are the leading coordinate projections.
struct AdaptedChart {
    /// Invertible self-morphism of the source chart, from new coordinates to
    /// old ones; compose(change, phi) is in normal form to the jet order.
    Morphism change;
    /// The exact inverse direction (old coordinates to new ones).
    Morphism forward;
    std::vector<std::size_t> pivotEven;
    std::vector<std::size_t> pivotOdd;
};

/// Normal form of a submersion at p (pivot selection: rows in target order,
/// leftmost nonzero column after reduction).
AdaptedChart adaptedCoordinates(const Morphism& phi, const ReducedPoint& p, int order);

/// Formal inverse of a morphism with invertible differential at p: jets psi
/// of the given order with both composites reducing to the identity jet.
/// psi's source is the target chart recentered at the image of p.
Morphism invertLocal(const Morphism& phi, const ReducedPoint& p, int order);

}  // namespace supercoset
