#pragma once

#include "supercoset/geometry.hpp"
#include "supercoset/ideal.hpp"
#include "supercoset/report.hpp"

namespace supercoset {

/// A Lie supergroup presented by a single chart centered at the identity
/// and a polynomial multiplication pullback on the doubled chart (factor
/// copies suffixed "1" and "2"). The inverse morphism is derived as jets.
struct LieSupergroup {
    std::string name;
    ChartSignature chart;
    Morphism mul;  // doubled chart -> chart
    std::optional<Morphism> inv;

    ReducedPoint identity() const { return chart.centerPoint(); }
};

ChartSignature doubledChart(const ChartSignature& chart);
ChartSignature tripledChart(const ChartSignature& chart);

/// Validates parities and the chart wiring of the multiplication pullbacks
/// (keyed by target coordinate name, over doubledChart(chart)).
LieSupergroup makeSupergroup(std::string name, ChartSignature chart,
                             std::map<std::string, SuperPolynomial> mulPullbacks);

/// Same-source pairing (f, g): X -> target(f) x target(g).
Morphism pairMorphism(const Morphism& f, const Morphism& g);

/// G -> G x G with one slot frozen at the reduced point g.
Morphism includeWithConstant(const LieSupergroup& G, const ReducedPoint& g, bool gFirst);

Morphism mulTimesId(const LieSupergroup& G);  // G^3 -> G^2, multiplies copies 1,2
Morphism idTimesMul(const LieSupergroup& G);  // G^3 -> G^2, multiplies copies 2,3

enum class Side { Left, Right };

/// l_g resp. r_g as an exact polynomial morphism.
Morphism translationMorphism(const LieSupergroup& G, const ReducedPoint& g, Side side);

/// nu with its source recentered at the reduced pair (p, q).
Morphism multiplicationAt(const LieSupergroup& G, const ReducedPoint& p, const ReducedPoint& q);

/// Reduced-point group operations. Inversion solves the left-translation
/// system exactly and requires the presentation to be affine in the second
/// factor (true for matrix-style and affine presentations).
ReducedPoint groupPointMul(const LieSupergroup& G, const ReducedPoint& a, const ReducedPoint& b);
ReducedPoint groupPointInverse(const LieSupergroup& G, const ReducedPoint& g);

/// Inverse morphism of order D via the inverse function theorem applied to
/// (g,h) -> (g, gh) around (e,e); requires associativity and the identity
/// axioms (call verifyGroupAxioms first).
Morphism deriveInverse(const LieSupergroup& G, int order);

/// Residual report for associativity, the two identity axioms, the inverse
/// axiom and iota^2 = id. The first three are exact polynomial identities;
/// the inverse rows hold to the given order. When associativity or an
/// identity axiom fails the inverse rows are reported as skipped failures.
std::vector<CheckResult> verifyGroupAxioms(const LieSupergroup& G, int order);

/// Structure constants of the Lie superalgebra, read off the cross 2-jet of
/// the multiplication: bracket(i,j) = B(i,j) - (-1)^{|i||j|} B(j,i), the
/// left-invariant convention (odd-odd pairs give the anticommutator).
struct LieSuperalgebra {
    std::vector<std::string> basisNames;  // chart evens then odds
    std::vector<Parity> parities;
    std::vector<Scalar> constants;  // c[(i*dim + j)*dim + k]

    std::size_t dimension() const { return basisNames.size(); }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return constants[(i * dimension() + j) * dimension() + k];
    }
    bool superAntisymmetric() const;
    bool jacobiHolds() const;
};

LieSuperalgebra lieSuperalgebra(const LieSupergroup& G);

/// A subsupergroup cut out by an ideal, charted on the complementary
/// coordinates (the non-pivot ones, as in the coset construction).
struct Subsupergroup {
    std::string parentName;
    ChartSignature parentChart;
    IdealPresentation ideal;
    ChartSignature chart;
    Morphism embed;  // chart -> parentChart
    std::vector<std::size_t> pivotEven;
    std::vector<std::size_t> pivotOdd;
};

struct SubgroupCheck {
    std::optional<Subsupergroup> subgroup;
    std::vector<CheckResult> checks;
};

/// Builds the subgroup chart by solving the generators for the pivot
/// coordinates and verifies nu- and iota-invariance of the ideal by
/// reduction at the given order.
SubgroupCheck checkSubsupergroup(const LieSupergroup& G, const IdealPresentation& ideal,
                                 int order);

/// checkSubsupergroup that throws when a verification fails.
Subsupergroup requireSubsupergroup(const LieSupergroup& G, const IdealPresentation& ideal,
                                   int order);

/// The subgroup as a supergroup in its own right (restricted multiplication).
LieSupergroup subgroupAsGroup(const LieSupergroup& G, const Subsupergroup& H);

/// Embeds a reduced point of H into the parent chart.
ReducedPoint subgroupPointInParent(const Subsupergroup& H, const ReducedPoint& h);

}  // namespace supercoset
