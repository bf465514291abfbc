#include "supercoset/coset.hpp"

namespace supercoset {

namespace {

const std::string kSliceSuffix = "_s";

ReducedPoint productPoint(const ChartSignature& productSig, const ChartSignature& a,
                          const ReducedPoint& pa, const ChartSignature& b,
                          const ReducedPoint& pb) {
    ReducedPoint merged;
    ReducedPoint ra = a.resolvePoint(pa);
    ReducedPoint rb = b.resolvePoint(pb);
    merged.insert(ra.begin(), ra.end());
    merged.insert(rb.begin(), rb.end());
    return productSig.resolvePoint(merged);
}

}  // namespace

Slice transversalSlice(const LieSupergroup& G, const Subsupergroup& H) {
    if (H.parentChart != G.chart)
        throw Error("transversalSlice: subgroup does not live in this group");

    std::vector<std::string> evenNames, oddNames;
    std::vector<Scalar> center;
    for (auto j : H.pivotEven) {
        evenNames.push_back(G.chart.evenNames()[j] + kSliceSuffix);
        center.push_back(G.chart.center()[j]);
    }
    for (auto b : H.pivotOdd) oddNames.push_back(G.chart.oddNames()[b] + kSliceSuffix);
    ChartSignature chart(evenNames, oddNames, center);

    std::map<std::string, SuperPolynomial> pb;
    std::vector<bool> evenPivot(G.chart.evenCount(), false), oddPivot(G.chart.oddCount(), false);
    for (auto j : H.pivotEven) evenPivot[j] = true;
    for (auto b : H.pivotOdd) oddPivot[b] = true;
    for (std::size_t j = 0; j < G.chart.evenCount(); ++j) {
        const std::string& n = G.chart.evenNames()[j];
        if (evenPivot[j]) {
            SuperPolynomial v = SuperPolynomial::variable(chart, n + kSliceSuffix);
            v += SuperPolynomial::constant(chart, G.chart.center()[j]);
            pb.emplace(n, std::move(v));
        } else {
            pb.emplace(n, SuperPolynomial::constant(chart, G.chart.center()[j]));
        }
    }
    for (std::size_t b = 0; b < G.chart.oddCount(); ++b) {
        const std::string& n = G.chart.oddNames()[b];
        pb.emplace(n, oddPivot[b] ? SuperPolynomial::variable(chart, n + kSliceSuffix)
                                  : SuperPolynomial(chart));
    }
    Morphism embed(chart, G.chart, std::move(pb));

    TangentMap dS = differentialAt(embed, chart.centerPoint());
    TangentMap dH = differentialAt(H.embed, H.chart.centerPoint());
    TangentMap witness{dS.even.hcat(dH.even), dS.odd.hcat(dH.odd)};
    if (!witness.isInvertible())
        throw Error("transversalSlice: transversality witness is singular; the subgroup "
                    "presentation is not coordinate-aligned");
    return {std::move(chart), std::move(embed), std::move(witness)};
}

namespace {

// nu restricted to (translated slice) x H: nu . (section x embed_H).
Morphism restrictedMultiplication(const LieSupergroup& G, const Subsupergroup& H,
                                  const Morphism& section) {
    Morphism lifted = productMorphism(renameTarget(section, renamedChart(G.chart, "1")),
                                      renameTarget(H.embed, renamedChart(G.chart, "2")));
    return compose(lifted, multiplicationAt(G, section.reducedImage(), G.identity()));
}

}  // namespace

Trivialization buildTrivialization(const LieSupergroup& G, const Subsupergroup& H,
                                   const Slice& slice, int order) {
    Morphism forward = restrictedMultiplication(G, H, slice.embed);
    Morphism inverse = invertLocal(forward, forward.source().centerPoint(), order);
    return {forward.source(), std::move(forward), std::move(inverse)};
}

std::vector<std::pair<SuperPolynomial, SuperPolynomial>> decomposeProductFunction(
    const SuperPolynomial& f, const ChartSignature& wChart, const ChartSignature& fChart) {
    ChartSignature product = productChart(wChart, fChart);
    if (!(f.signature().sameNames(product) && f.signature().center() == product.center()))
        throw Error("decomposeProductFunction: function does not live on the product chart");
    std::size_t nW = wChart.evenCount();
    std::uint32_t wOddMask = (1u << wChart.oddCount()) - 1;

    std::map<TermKey, SuperPolynomial, TermOrder> groups;
    for (const auto& [key, c] : f.terms()) {
        TermKey wKey{std::vector<std::uint32_t>(key.even.begin(),
                                                key.even.begin() + static_cast<long>(nW)),
                     key.odd & wOddMask};
        TermKey fKey{std::vector<std::uint32_t>(key.even.begin() + static_cast<long>(nW),
                                                key.even.end()),
                     key.odd >> wChart.oddCount()};
        auto [it, inserted] = groups.emplace(wKey, SuperPolynomial(fChart));
        it->second.addTerm(fKey, c);
    }

    std::vector<std::pair<SuperPolynomial, SuperPolynomial>> parts;
    parts.reserve(groups.size());
    for (const auto& [wKey, g] : groups) {
        SuperPolynomial h(wChart);
        h.addTerm(wKey, Scalar(1));
        parts.emplace_back(std::move(h), g);
    }
    return parts;
}

SuperPolynomial reassembleProductFunction(
    const std::vector<std::pair<SuperPolynomial, SuperPolynomial>>& parts,
    const ChartSignature& productSig) {
    SuperPolynomial out(productSig);
    for (const auto& [h, g] : parts) {
        SuperPolynomial hLift = embedded(h, productSig, 0, 0);
        SuperPolynomial gLift = embedded(g, productSig, h.signature().evenCount(),
                                         h.signature().oddCount());
        out += hLift * gLift;
    }
    return out;
}

InvarianceCheck isRightInvariant(const LieSupergroup& G, const IdealPresentation& hIdeal,
                                 const SuperPolynomial& f, int order) {
    if (!f.signature().sameNames(G.chart))
        throw Error("isRightInvariant: function is not over the group chart");
    if (!hIdeal.chart.sameNames(G.chart))
        throw Error("isRightInvariant: ideal is not over the group chart");

    Morphism mul2 = multiplicationAt(G, f.signature().centerPoint(), G.identity());
    SuperPolynomial nuF = mul2.pullApply(f);
    SuperPolynomial pr1F = embedded(f, mul2.source(), 0, 0);
    IdealPresentation secondFactor =
        embeddedIdeal(hIdeal, mul2.source(), G.chart.evenCount(), G.chart.oddCount());
    SuperPolynomial residual = reduceModulo(nuF - pr1F, secondFactor, order);
    return {residual.isZero(), std::move(residual)};
}

SuperPolynomial invariantPreimage(const Morphism& trivForward, const ChartSignature& sliceChart,
                                  const ChartSignature& subgroupChart, const SuperPolynomial& f,
                                  int order) {
    if (!(trivForward.source().sameNames(productChart(sliceChart, subgroupChart))))
        throw Error("invariantPreimage: trivialization does not match the factor charts");
    SuperPolynomial pulled = trivForward.pullApply(f).truncatedEven(order);
    auto parts = decomposeProductFunction(pulled, sliceChart, subgroupChart);
    SuperPolynomial out(sliceChart);
    for (const auto& [h, g] : parts) out += h.scaled(g.constantTerm());
    return out;
}

namespace {

CosetChart buildChart(const LieSupergroup& G, const Subsupergroup& H, const Slice& slice,
                      const ReducedPoint& rep, int order, std::size_t index,
                      std::vector<CheckResult>& checks) {
    ReducedPoint g = G.chart.resolvePoint(rep);
    Morphism section = compose(slice.embed, translationMorphism(G, g, Side::Left));
    Morphism forward = restrictedMultiplication(G, H, section);
    Morphism inverse = invertLocal(forward, forward.source().centerPoint(), order);
    Morphism projection =
        compose(inverse, factorProjection(forward.source(), slice.chart, 0, 0));

    std::string tag = " (chart " + std::to_string(index + 1) + ")";
    Morphism roundTrip = compose(section, projection);
    checks.push_back(CheckResult::fromResiduals(
        "p o i_g identity" + tag,
        residual(roundTrip, truncated(Morphism::identity(slice.chart), order)),
        "order " + std::to_string(order)));

    // Lemma 4, forward direction: chart functions pull back to H-right
    // invariant functions on the group.
    std::map<std::string, SuperPolynomial> invarianceResiduals;
    for (const auto& n : slice.chart.evenNames()) {
        SuperPolynomial f = projection.pullApply(SuperPolynomial::coordinate(slice.chart, n));
        InvarianceCheck c = isRightInvariant(G, H.ideal, f, order);
        if (!c.invariant) invarianceResiduals.emplace(n, c.residual);
    }
    for (const auto& n : slice.chart.oddNames()) {
        SuperPolynomial f = projection.pullApply(SuperPolynomial::variable(slice.chart, n));
        InvarianceCheck c = isRightInvariant(G, H.ideal, f, order);
        if (!c.invariant) invarianceResiduals.emplace(n, c.residual);
    }
    checks.push_back(CheckResult::fromResiduals("projection images right-invariant" + tag,
                                                invarianceResiduals,
                                                "order " + std::to_string(order)));

    return {std::move(g), slice.chart, std::move(section), std::move(forward),
            std::move(projection)};
}

}  // namespace

Morphism projectionAt(const LieSupergroup& G, const Subsupergroup& H, const CosetChart& chart,
                      const ReducedPoint& slicePoint, const ReducedPoint& subgroupPoint,
                      int order) {
    (void)G;
    ReducedPoint center = productPoint(chart.trivForward.source(), chart.chart, slicePoint,
                                       H.chart, subgroupPoint);
    Morphism forward = recenterSource(chart.trivForward, center);
    Morphism inverse = invertLocal(forward, forward.source().centerPoint(), order);
    ChartSignature targetSlice = chart.chart.recentered(chart.chart.resolvePoint(slicePoint));
    return compose(inverse, factorProjection(forward.source(), targetSlice, 0, 0));
}

namespace {

Morphism buildTransition(const LieSupergroup& G, const Subsupergroup& H, const CosetAtlas& atlas,
                         const OverlapSample& sample, int order) {
    if (sample.chartA >= atlas.charts.size() || sample.chartB >= atlas.charts.size())
        throw Error("cosetAtlas: overlap sample names a chart that does not exist");
    const CosetChart& a = atlas.charts[sample.chartA];
    const CosetChart& b = atlas.charts[sample.chartB];

    Morphism sectionAt = recenterSource(a.section, a.chart.resolvePoint(sample.sliceA));
    ReducedPoint imageA = sectionAt.reducedImage();

    ReducedPoint centerB = productPoint(b.trivForward.source(), b.chart, sample.sliceB,
                                        b.trivForward.source(), sample.subgroupPoint);
    Morphism forwardB = recenterSource(b.trivForward, centerB);
    ReducedPoint imageB = forwardB.reducedImage();
    for (const auto& n : G.chart.evenNames())
        if (imageA.at(n) != imageB.at(n))
            throw Error("cosetAtlas: overlap sample is not in both reduced charts "
                        "(coordinate '" + n + "')");

    Morphism inverseB = invertLocal(forwardB, forwardB.source().centerPoint(), order);
    ChartSignature targetSlice = b.chart.recentered(b.chart.resolvePoint(sample.sliceB));
    Morphism projectionB =
        compose(inverseB, factorProjection(forwardB.source(), targetSlice, 0, 0));
    Morphism transition = compose(sectionAt, projectionB);
    if (!differentialAt(transition, transition.source().centerPoint()).isInvertible())
        throw Error("cosetAtlas: transition is not invertible at the sample point "
                    "(inconsistent representatives)");
    (void)H;
    return transition;
}

}  // namespace

CosetAtlas cosetAtlas(const LieSupergroup& G, const Subsupergroup& H,
                      const std::vector<ReducedPoint>& representatives,
                      const std::vector<OverlapSample>& samples, int order) {
    CosetAtlas atlas;
    atlas.groupName = G.name;
    atlas.slice = transversalSlice(G, H);
    atlas.order = order;
    for (std::size_t i = 0; i < representatives.size(); ++i)
        atlas.charts.push_back(
            buildChart(G, H, atlas.slice, representatives[i], order, i, atlas.checks));
    for (const auto& sample : samples) {
        Morphism transition = buildTransition(G, H, atlas, sample, order);
        atlas.overlaps.push_back({sample, std::move(transition)});
    }
    return atlas;
}

namespace {

const Overlap* findOverlap(const CosetAtlas& atlas, std::size_t a, std::size_t b) {
    for (const auto& o : atlas.overlaps)
        if (o.sample.chartA == a && o.sample.chartB == b) return &o;
    return nullptr;
}

}  // namespace

std::vector<CheckResult> verifyCocycle(const CosetAtlas& atlas,
                                       const std::vector<TripleSpec>& triples) {
    std::vector<CheckResult> checks;
    for (const auto& t : triples) {
        const Overlap* ab = findOverlap(atlas, t.a, t.b);
        const Overlap* bc = findOverlap(atlas, t.b, t.c);
        const Overlap* ac = findOverlap(atlas, t.a, t.c);
        std::string tag = "cocycle (" + std::to_string(t.a + 1) + "," + std::to_string(t.b + 1) +
                          "," + std::to_string(t.c + 1) + ")";
        if (!ab || !bc || !ac) throw Error("verifyCocycle: missing transition for " + tag);
        if (ab->transition.target().center() != bc->transition.source().center() ||
            ab->transition.source().center() != ac->transition.source().center() ||
            bc->transition.target().center() != ac->transition.target().center())
            throw Error("verifyCocycle: transitions of " + tag +
                        " are sampled at incompatible points");
        Morphism chained = compose(ab->transition, bc->transition);
        checks.push_back(CheckResult::fromResiduals(tag, residual(chained, ac->transition),
                                                    "order " + std::to_string(atlas.order)));
    }
    return checks;
}

namespace {

// nu . (id x i_g) : (G x chart) -> G around ((e), slice center).
Morphism actionNumerator(const LieSupergroup& G, const Morphism& section) {
    Morphism lifted = productMorphism(
        renameTarget(Morphism::identity(G.chart), renamedChart(G.chart, "1")),
        renameTarget(section, renamedChart(G.chart, "2")));
    return compose(lifted, multiplicationAt(G, G.identity(), section.reducedImage()));
}

Morphism includeSpace(const ChartSignature& group, const ChartSignature& space,
                      const ReducedPoint& g) {
    ChartSignature product = productChart(group, space);
    ReducedPoint point = group.resolvePoint(g);
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& n : group.evenNames())
        pb.emplace(n, SuperPolynomial::constant(space, point.at(n)));
    for (const auto& n : group.oddNames()) pb.emplace(n, SuperPolynomial(space));
    for (const auto& n : space.evenNames())
        pb.emplace(n, SuperPolynomial::coordinate(space, n));
    for (const auto& n : space.oddNames()) pb.emplace(n, SuperPolynomial::variable(space, n));
    return {space, std::move(product), std::move(pb)};
}

}  // namespace

CosetAction cosetActionAlpha(const LieSupergroup& G, const Subsupergroup& H,
                             const CosetAtlas& atlas, int order) {
    CosetAction out;
    std::string orderNote = "order " + std::to_string(order);
    for (std::size_t k = 0; k < atlas.charts.size(); ++k) {
        const CosetChart& chart = atlas.charts[k];
        std::string tag = " (chart " + std::to_string(k + 1) + ")";
        Morphism alpha = compose(actionNumerator(G, chart.section), chart.projection);
        // Identity axiom: alpha . (epsilon x id) = id.
        Morphism includeE = includeSpace(G.chart, chart.chart, G.identity());
        out.checks.push_back(CheckResult::fromResiduals(
            "alpha identity axiom" + tag,
            residual(compose(includeE, alpha),
                     truncated(Morphism::identity(chart.chart), order)),
            orderNote));
        // Compatibility: alpha . (nu x id) = alpha . (id x alpha).
        ChartSignature triple = productChart(doubledChart(G.chart), chart.chart);
        ChartSignature gs = alpha.source();
        std::size_t n = G.chart.evenCount(), m = G.chart.oddCount();
        std::map<std::string, SuperPolynomial> nuPb, alphaPb;
        for (const auto& z : G.chart.evenNames()) {
            nuPb.emplace(z, embedded(G.mul.pullback(z), triple, 0, 0));
            SuperPolynomial first = SuperPolynomial::variable(triple, z + "1");
            first += SuperPolynomial::constant(triple, G.chart.centerOf(z));
            alphaPb.emplace(z, std::move(first));
        }
        for (const auto& z : G.chart.oddNames()) {
            nuPb.emplace(z, embedded(G.mul.pullback(z), triple, 0, 0));
            alphaPb.emplace(z, SuperPolynomial::variable(triple, z + "1"));
        }
        for (const auto& z : chart.chart.evenNames()) {
            SuperPolynomial own = SuperPolynomial::variable(triple, z);
            own += SuperPolynomial::constant(triple, chart.chart.centerOf(z));
            nuPb.emplace(z, std::move(own));
            alphaPb.emplace(z, embedded(alpha.pullback(z), triple, n, m));
        }
        for (const auto& z : chart.chart.oddNames()) {
            nuPb.emplace(z, SuperPolynomial::variable(triple, z));
            alphaPb.emplace(z, embedded(alpha.pullback(z), triple, n, m));
        }
        Morphism nuTimesIdChart(triple, gs, std::move(nuPb));
        Morphism idTimesAlpha(triple, gs, std::move(alphaPb), alpha.order());
        out.checks.push_back(CheckResult::fromResiduals(
            "alpha compatibility axiom" + tag,
            residual(compose(nuTimesIdChart, alpha), compose(idTimesAlpha, alpha)), orderNote));
        out.alphas.push_back(std::move(alpha));
    }

    // Cross-chart agreement at the recorded overlap samples.
    for (const auto& overlap : atlas.overlaps) {
        const OverlapSample& s = overlap.sample;
        const CosetChart& a = atlas.charts[s.chartA];
        const CosetChart& b = atlas.charts[s.chartB];
        std::string tag = " (charts " + std::to_string(s.chartA + 1) + "," +
                          std::to_string(s.chartB + 1) + ")";
        Morphism sectionA = recenterSource(a.section, a.chart.resolvePoint(s.sliceA));
        Morphism sectionB = recenterSource(b.section, b.chart.resolvePoint(s.sliceB));
        Morphism proj = projectionAt(G, H, b, s.sliceB, s.subgroupPoint, order);
        Morphism lhs = compose(actionNumerator(G, sectionA), proj);
        Morphism alphaB = compose(actionNumerator(G, sectionB), proj);
        Morphism rhs = compose(productMorphism(Morphism::identity(G.chart), overlap.transition),
                               alphaB);
        out.checks.push_back(CheckResult::fromResiduals("alpha agrees across charts" + tag,
                                                        residual(lhs, rhs), orderNote));
    }
    return out;
}

}  // namespace supercoset
