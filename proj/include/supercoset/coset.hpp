#pragma once

#include "supercoset/group.hpp"

namespace supercoset {

/// Transversal slice through the identity, on the subgroup ideal's pivot
/// coordinates (suffixed "_s" to keep product charts collision-free).
struct Slice {
    ChartSignature chart;
    Morphism embed;  // chart -> G chart, exact
    /// Stacked differential [d(embed_S) | d(embed_H)] at (e,e); invertible.
    TangentMap transversalityWitness;
};

Slice transversalSlice(const LieSupergroup& G, const Subsupergroup& H);

/// nu restricted to S x H together with its local inverse at (e,e).
struct Trivialization {
    ChartSignature productSig;  // slice chart x subgroup chart
    Morphism forward;           // S x H -> G, exact
    Morphism inverse;           // G@e -> S x H, jets
};

Trivialization buildTrivialization(const LieSupergroup& G, const Subsupergroup& H,
                                   const Slice& slice, int order);

/// Writes f on W x F as sum of (monomial in W-coordinates) x (function on
/// F), ordered by the W monomial. The decomposition is unique against the
/// graded-lex monomial basis and reassembles exactly.
std::vector<std::pair<SuperPolynomial, SuperPolynomial>> decomposeProductFunction(
    const SuperPolynomial& f, const ChartSignature& wChart, const ChartSignature& fChart);

/// Reassembles a decomposition over the product chart (test oracle hook).
SuperPolynomial reassembleProductFunction(
    const std::vector<std::pair<SuperPolynomial, SuperPolynomial>>& parts,
    const ChartSignature& productSig);

struct InvarianceCheck {
    bool invariant = false;
    SuperPolynomial residual;  // over the doubled chart; zero iff invariant
};

/// f (over the group chart or a recentered translate) is H-right invariant
/// iff nu_2(f) - pr_1(f) reduces to zero modulo H's ideal pulled into the
/// second factor.
InvarianceCheck isRightInvariant(const LieSupergroup& G, const IdealPresentation& hIdeal,
                                 const SuperPolynomial& f, int order);

/// Preimage of a right-invariant function under the chart projection,
/// rebuilt through the product decomposition: the H-side factors of an
/// invariant function are constants, which is exactly the paper's route.
SuperPolynomial invariantPreimage(const Morphism& trivForward, const ChartSignature& sliceChart,
                                  const ChartSignature& subgroupChart, const SuperPolynomial& f,
                                  int order);

/// User-designated point of a chart overlap: slice coordinates in both
/// charts plus the subgroup point h with i_B(sliceB) * h = i_A(sliceA).
struct OverlapSample {
    std::size_t chartA = 0;
    std::size_t chartB = 0;
    ReducedPoint sliceA;
    ReducedPoint sliceB;
    ReducedPoint subgroupPoint;
};

struct CosetChart {
    ReducedPoint representative;
    ChartSignature chart;  // the slice chart
    Morphism section;      // chart -> G (i_g, exact)
    Morphism trivForward;  // S x H -> G translated by g, exact
    Morphism projection;   // G@g -> chart (p_gU, jets)
};

struct Overlap {
    OverlapSample sample;
    Morphism transition;  // chart A at sliceA -> chart B at sliceB, jets
};

struct CosetAtlas {
    std::string groupName;
    Slice slice;
    int order = 0;
    std::vector<CosetChart> charts;
    std::vector<Overlap> overlaps;
    /// p o i_g identities, right-invariance of projection images, and
    /// transition invertibility.
    std::vector<CheckResult> checks;
};

/// Charts from the representative list, transitions at the user-specified
/// overlap samples. Throws when a sample does not lie in both charts.
CosetAtlas cosetAtlas(const LieSupergroup& G, const Subsupergroup& H,
                      const std::vector<ReducedPoint>& representatives,
                      const std::vector<OverlapSample>& samples, int order);

/// The projection of one atlas chart rebuilt around a sample point of its
/// domain; source is the group chart recentered at the sample's image.
Morphism projectionAt(const LieSupergroup& G, const Subsupergroup& H, const CosetChart& chart,
                      const ReducedPoint& slicePoint, const ReducedPoint& subgroupPoint,
                      int order);

struct TripleSpec {
    std::size_t a = 0, b = 0, c = 0;
};

/// Residual Psi_ac - Psi_bc o Psi_ab per triple, using recorded overlaps
/// whose sample points line up; throws when a transition is missing.
std::vector<CheckResult> verifyCocycle(const CosetAtlas& atlas,
                                       const std::vector<TripleSpec>& triples);

/// The induced action alpha = p o nu o (id x i_g), one morphism per chart,
/// with the action axioms and cross-chart agreement residuals.
struct CosetAction {
    std::vector<Morphism> alphas;  // (G x chart) -> chart, jets
    std::vector<CheckResult> checks;
};

CosetAction cosetActionAlpha(const LieSupergroup& G, const Subsupergroup& H,
                             const CosetAtlas& atlas, int order);

}  // namespace supercoset
