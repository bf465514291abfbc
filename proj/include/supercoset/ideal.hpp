#pragma once

#include "supercoset/morphism.hpp"

namespace supercoset {

/// Finite generator list of superfunctions on a chart. Membership testing
/// is multivariate division at a jet order; no Groebner machinery.
struct IdealPresentation {
    ChartSignature chart;
    std::vector<SuperPolynomial> generators;

    IdealPresentation(ChartSignature c, std::vector<SuperPolynomial> gens);

    /// All generators vanish at the chart center.
    bool vanishesAtCenter() const;
};

/// Remainder of f modulo the generators at even jet order `order`. Division
/// uses the local order (lowest total degree leads), so triangular systems
/// of the kind produced here reduce completely.
SuperPolynomial reduceModulo(const SuperPolynomial& f, const IdealPresentation& ideal, int order);

/// Concatenates generator lists over a shared chart.
IdealPresentation idealSum(const IdealPresentation& a, const IdealPresentation& b);

/// Pushes the ideal through a chart embedding into a product.
IdealPresentation embeddedIdeal(const IdealPresentation& ideal, const ChartSignature& productSig,
                                std::size_t evenOffset, std::size_t oddOffset);

/// Solution of a generator system for its pivot coordinates: the zero locus
/// presented as a chart on the complementary coordinates together with the
/// embedding into the ambient chart.
struct CoordinateSolution {
    std::vector<std::size_t> pivotEven;
    std::vector<std::size_t> pivotOdd;
    ChartSignature residualChart;  // non-pivot coordinates, centers inherited
    Morphism embed;                // residualChart -> ambient chart, jets
};

/// Solves generators = 0 for pivot coordinates as jets in the remaining
/// ones. Generators must be parity-homogeneous, vanish at the center, and
/// have independent linear parts.
CoordinateSolution solveForPivotCoordinates(const IdealPresentation& ideal, int order);

}  // namespace supercoset
