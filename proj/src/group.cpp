#include "supercoset/group.hpp"

namespace supercoset {

ChartSignature doubledChart(const ChartSignature& chart) {
    return productChart(renamedChart(chart, "1"), renamedChart(chart, "2"));
}

ChartSignature tripledChart(const ChartSignature& chart) {
    return productChart(doubledChart(chart), renamedChart(chart, "3"));
}

LieSupergroup makeSupergroup(std::string name, ChartSignature chart,
                             std::map<std::string, SuperPolynomial> mulPullbacks) {
    ChartSignature doubled = doubledChart(chart);
    Morphism mul(doubled, chart, std::move(mulPullbacks));
    return {std::move(name), std::move(chart), std::move(mul), std::nullopt};
}

Morphism pairMorphism(const Morphism& f, const Morphism& g) {
    if (f.source() != g.source()) throw Error("pairMorphism: sources differ");
    ChartSignature target = productChart(f.target(), g.target());
    std::map<std::string, SuperPolynomial> pb = f.pullbacks();
    for (const auto& [name, p] : g.pullbacks()) pb.emplace(name, p);
    std::optional<int> order;
    if (f.order() && g.order()) order = std::min(*f.order(), *g.order());
    else if (f.order()) order = f.order();
    else if (g.order()) order = g.order();
    return {f.source(), std::move(target), std::move(pb), order};
}

Morphism includeWithConstant(const LieSupergroup& G, const ReducedPoint& g, bool gFirst) {
    ReducedPoint point = G.chart.resolvePoint(g);
    ChartSignature doubled = doubledChart(G.chart);
    std::map<std::string, SuperPolynomial> pb;
    const std::string constSuffix = gFirst ? "1" : "2";
    const std::string varSuffix = gFirst ? "2" : "1";
    for (const auto& n : G.chart.evenNames()) {
        pb.emplace(n + constSuffix, SuperPolynomial::constant(G.chart, point.at(n)));
        pb.emplace(n + varSuffix, SuperPolynomial::coordinate(G.chart, n));
    }
    for (const auto& n : G.chart.oddNames()) {
        pb.emplace(n + constSuffix, SuperPolynomial(G.chart));
        pb.emplace(n + varSuffix, SuperPolynomial::variable(G.chart, n));
    }
    return {G.chart, std::move(doubled), std::move(pb)};
}

Morphism mulTimesId(const LieSupergroup& G) {
    ChartSignature tripled = tripledChart(G.chart);
    ChartSignature doubled = doubledChart(G.chart);
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& z : G.chart.evenNames()) {
        pb.emplace(z + "1", embedded(G.mul.pullback(z), tripled, 0, 0));
        SuperPolynomial third = SuperPolynomial::variable(tripled, z + "3");
        third += SuperPolynomial::constant(tripled, G.chart.centerOf(z));
        pb.emplace(z + "2", std::move(third));
    }
    for (const auto& z : G.chart.oddNames()) {
        pb.emplace(z + "1", embedded(G.mul.pullback(z), tripled, 0, 0));
        pb.emplace(z + "2", SuperPolynomial::variable(tripled, z + "3"));
    }
    return {std::move(tripled), std::move(doubled), std::move(pb)};
}

Morphism idTimesMul(const LieSupergroup& G) {
    ChartSignature tripled = tripledChart(G.chart);
    ChartSignature doubled = doubledChart(G.chart);
    std::size_t n = G.chart.evenCount(), m = G.chart.oddCount();
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& z : G.chart.evenNames()) {
        SuperPolynomial first = SuperPolynomial::variable(tripled, z + "1");
        first += SuperPolynomial::constant(tripled, G.chart.centerOf(z));
        pb.emplace(z + "1", std::move(first));
        pb.emplace(z + "2", embedded(G.mul.pullback(z), tripled, n, m));
    }
    for (const auto& z : G.chart.oddNames()) {
        pb.emplace(z + "1", SuperPolynomial::variable(tripled, z + "1"));
        pb.emplace(z + "2", embedded(G.mul.pullback(z), tripled, n, m));
    }
    return {std::move(tripled), std::move(doubled), std::move(pb)};
}

Morphism translationMorphism(const LieSupergroup& G, const ReducedPoint& g, Side side) {
    return compose(includeWithConstant(G, g, side == Side::Left), G.mul);
}

Morphism multiplicationAt(const LieSupergroup& G, const ReducedPoint& p, const ReducedPoint& q) {
    ReducedPoint left = G.chart.resolvePoint(p);
    ReducedPoint right = G.chart.resolvePoint(q);
    ReducedPoint pair;
    bool atCenter = true;
    for (const auto& n : G.chart.evenNames()) {
        pair[n + "1"] = left.at(n);
        pair[n + "2"] = right.at(n);
        if (left.at(n) != G.chart.centerOf(n) || right.at(n) != G.chart.centerOf(n))
            atCenter = false;
    }
    return atCenter ? G.mul : recenterSource(G.mul, pair);
}

ReducedPoint groupPointMul(const LieSupergroup& G, const ReducedPoint& a, const ReducedPoint& b) {
    Morphism la = translationMorphism(G, a, Side::Left);
    ReducedPoint pb = G.chart.resolvePoint(b);
    ReducedPoint out;
    for (const auto& n : G.chart.evenNames()) out[n] = la.pullback(n).valueAt(pb);
    return out;
}

ReducedPoint groupPointInverse(const LieSupergroup& G, const ReducedPoint& g) {
    Morphism lg = translationMorphism(G, G.chart.resolvePoint(g), Side::Left);
    // Reduced part of l_g must be affine for an exact solve.
    std::size_t n = G.chart.evenCount();
    Matrix A(n, n);
    std::vector<Scalar> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const SuperPolynomial& p = lg.pullback(G.chart.evenNames()[i]);
        for (const auto& [key, c] : p.terms()) {
            if (key.odd != 0) continue;
            std::uint32_t deg = key.evenDegree();
            if (deg == 0) continue;
            if (deg > 1)
                throw Error("groupPointInverse: presentation is not affine in the second "
                            "factor; supply the inverse point explicitly");
        }
        for (std::size_t j = 0; j < n; ++j) {
            TermKey key{std::vector<std::uint32_t>(n, 0), 0};
            key.even[j] = 1;
            A.at(i, j) = p.coefficient(key);
        }
        rhs[i] = G.chart.center()[i] - p.constantTerm();
    }
    Matrix Ainv;
    try {
        Ainv = A.inverse();
    } catch (const Error&) {
        throw Error("groupPointInverse: point is not invertible in the underlying group");
    }
    ReducedPoint out;
    for (std::size_t j = 0; j < n; ++j) {
        Scalar u(0);
        for (std::size_t i = 0; i < n; ++i) u += Ainv.at(j, i) * rhs[i];
        out[G.chart.evenNames()[j]] = G.chart.center()[j] + u;
    }
    // The solve inverts l_g; confirm the result is a two-sided inverse.
    ReducedPoint check = groupPointMul(G, out, g);
    for (const auto& nm : G.chart.evenNames())
        if (check.at(nm) != G.chart.centerOf(nm))
            throw Error("groupPointInverse: solved point is not a group inverse");
    return out;
}

Morphism deriveInverse(const LieSupergroup& G, int order) {
    ChartSignature doubled = doubledChart(G.chart);
    std::size_t n = G.chart.evenCount(), m = G.chart.oddCount();

    // Phi(g, h) = (g, gh); Theorem-1 inversion around (e, e).
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& z : G.chart.evenNames()) {
        SuperPolynomial first = SuperPolynomial::variable(doubled, z + "1");
        first += SuperPolynomial::constant(doubled, G.chart.centerOf(z));
        pb.emplace(z + "1", std::move(first));
        pb.emplace(z + "2", G.mul.pullback(z));
    }
    for (const auto& z : G.chart.oddNames()) {
        pb.emplace(z + "1", SuperPolynomial::variable(doubled, z + "1"));
        pb.emplace(z + "2", G.mul.pullback(z));
    }
    Morphism phi(doubled, doubled, std::move(pb));
    Morphism psi;
    try {
        psi = invertLocal(phi, doubled.centerPoint(), order);
    } catch (const Error&) {
        throw Error("deriveInverse: singular differential at the identity; not a Lie "
                    "supergroup presentation");
    }

    // iota = pr2 . psi . (id, e).
    Morphism include = includeWithConstant(G, G.identity(), false);
    Morphism pr2 = factorProjection(doubled, G.chart, n, m);
    return compose(compose(include, psi), pr2);
}

std::vector<CheckResult> verifyGroupAxioms(const LieSupergroup& G, int order) {
    std::vector<CheckResult> checks;

    Morphism assocLeft = compose(mulTimesId(G), G.mul);
    Morphism assocRight = compose(idTimesMul(G), G.mul);
    checks.push_back(
        CheckResult::fromResiduals("associativity", residual(assocLeft, assocRight), "exact"));

    Morphism id = Morphism::identity(G.chart);
    Morphism leftId = compose(includeWithConstant(G, G.identity(), true), G.mul);
    checks.push_back(CheckResult::fromResiduals("left identity", residual(leftId, id), "exact"));
    Morphism rightId = compose(includeWithConstant(G, G.identity(), false), G.mul);
    checks.push_back(CheckResult::fromResiduals("right identity", residual(rightId, id), "exact"));

    if (!checks[0].pass || !checks[1].pass || !checks[2].pass) {
        checks.push_back(
            CheckResult::failed("inverse axiom", "skipped: associativity/identity failed"));
        checks.push_back(
            CheckResult::failed("iota squared", "skipped: associativity/identity failed"));
        return checks;
    }

    Morphism inv = G.inv ? *G.inv : deriveInverse(G, order);
    std::string note = "order " + std::to_string(order);

    Morphism graph = pairMorphism(renameTarget(inv, renamedChart(G.chart, "1")),
                                  renameTarget(Morphism::identity(G.chart),
                                               renamedChart(G.chart, "2")));
    Morphism inverseAxiom = compose(graph, G.mul);
    Morphism epsilon = Morphism::constant(G.chart, G.chart, G.identity());
    checks.push_back(CheckResult::fromResiduals(
        "inverse axiom", residual(truncated(inverseAxiom, order), truncated(epsilon, order)),
        note));

    Morphism iotaSquared = compose(inv, inv);
    checks.push_back(CheckResult::fromResiduals(
        "iota squared", residual(iotaSquared, truncated(id, order)), note));
    return checks;
}

bool LieSuperalgebra::superAntisymmetric() const {
    std::size_t d = dimension();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            int sign = (parities[i] == Parity::Odd && parities[j] == Parity::Odd) ? 1 : -1;
            for (std::size_t k = 0; k < d; ++k)
                if (c(i, j, k) != c(j, i, k) * Scalar(sign)) return false;
        }
    return true;
}

bool LieSuperalgebra::jacobiHolds() const {
    std::size_t d = dimension();
    auto sign = [&](std::size_t a, std::size_t b) {
        return (parities[a] == Parity::Odd && parities[b] == Parity::Odd) ? Scalar(-1) : Scalar(1);
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Scalar total(0);
                    // (-1)^{|i||k|} [[i,j],k] + cyclic.
                    for (std::size_t p = 0; p < d; ++p) {
                        total += sign(i, k) * c(i, j, p) * c(p, k, l);
                        total += sign(j, i) * c(j, k, p) * c(p, i, l);
                        total += sign(k, j) * c(k, i, p) * c(p, j, l);
                    }
                    if (!total.isZero()) return false;
                }
    return true;
}

LieSuperalgebra lieSuperalgebra(const LieSupergroup& G) {
    std::size_t n = G.chart.evenCount(), m = G.chart.oddCount();
    std::size_t dim = n + m;
    LieSuperalgebra lie;
    for (const auto& nm : G.chart.evenNames()) {
        lie.basisNames.push_back(nm);
        lie.parities.push_back(Parity::Even);
    }
    for (const auto& nm : G.chart.oddNames()) {
        lie.basisNames.push_back(nm);
        lie.parities.push_back(Parity::Odd);
    }
    lie.constants.assign(dim * dim * dim, Scalar(0));

    // Cross 2-jet coefficient of (factor-1 basis i) x (factor-2 basis j) in
    // the displacement pullback of coordinate k.
    auto crossCoefficient = [&](std::size_t k, std::size_t i, std::size_t j) {
        const std::string& target =
            k < n ? G.chart.evenNames()[k] : G.chart.oddNames()[k - n];
        SuperPolynomial p = G.mul.displacementPullback(target);
        TermKey key{std::vector<std::uint32_t>(2 * n, 0), 0};
        if (i < n) key.even[i] += 1;
        else key.odd |= 1u << (i - n);
        if (j < n) key.even[n + j] += 1;
        else key.odd |= 1u << (m + (j - n));
        return p.coefficient(key);
    };

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Scalar sign = (lie.parities[i] == Parity::Odd && lie.parities[j] == Parity::Odd)
                              ? Scalar(1)
                              : Scalar(-1);
            for (std::size_t k = 0; k < dim; ++k)
                lie.constants[(i * dim + j) * dim + k] =
                    crossCoefficient(k, i, j) + sign * crossCoefficient(k, j, i);
        }
    if (!lie.superAntisymmetric() || !lie.jacobiHolds())
        throw Error("lieSuperalgebra: inconsistent presentation (Jacobi residual nonzero)");
    return lie;
}

SubgroupCheck checkSubsupergroup(const LieSupergroup& G, const IdealPresentation& ideal,
                                 int order) {
    if (ideal.chart != G.chart)
        throw Error("checkSubsupergroup: ideal is not on the group chart");
    if (!ideal.vanishesAtCenter())
        throw Error("checkSubsupergroup: generators do not vanish at the identity");

    CoordinateSolution solution = solveForPivotCoordinates(ideal, order);

    SubgroupCheck out;
    ChartSignature doubled = doubledChart(G.chart);
    std::size_t n = G.chart.evenCount(), m = G.chart.oddCount();
    IdealPresentation bothFactors =
        idealSum(embeddedIdeal(ideal, doubled, 0, 0), embeddedIdeal(ideal, doubled, n, m));

    std::map<std::string, SuperPolynomial> nuResiduals;
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        SuperPolynomial pushed = G.mul.pullApply(ideal.generators[i]);
        SuperPolynomial rem = reduceModulo(pushed, bothFactors, order);
        if (!rem.isZero()) nuResiduals.emplace("generator " + std::to_string(i + 1), rem);
    }
    out.checks.push_back(CheckResult::fromResiduals("nu-invariance", nuResiduals,
                                                    "order " + std::to_string(order)));

    Morphism inv = G.inv ? *G.inv : deriveInverse(G, order);
    std::map<std::string, SuperPolynomial> iotaResiduals;
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        SuperPolynomial pushed = inv.pullApply(ideal.generators[i]);
        SuperPolynomial rem = reduceModulo(pushed, ideal, order);
        if (!rem.isZero()) iotaResiduals.emplace("generator " + std::to_string(i + 1), rem);
    }
    out.checks.push_back(CheckResult::fromResiduals("iota-invariance", iotaResiduals,
                                                    "order " + std::to_string(order)));

    if (allPass(out.checks)) {
        out.subgroup = Subsupergroup{G.name,
                                     G.chart,
                                     ideal,
                                     solution.residualChart,
                                     solution.embed,
                                     solution.pivotEven,
                                     solution.pivotOdd};
    }
    return out;
}

Subsupergroup requireSubsupergroup(const LieSupergroup& G, const IdealPresentation& ideal,
                                   int order) {
    SubgroupCheck check = checkSubsupergroup(G, ideal, order);
    if (!check.subgroup) {
        for (const auto& c : check.checks)
            if (!c.pass)
                throw Error("requireSubsupergroup: " + c.name + " failed" +
                            (c.witnesses.empty()
                                 ? ""
                                 : " (witness " + c.witnesses.front().first + ": " +
                                       c.witnesses.front().second.str() + ")"));
        throw Error("requireSubsupergroup: verification failed");
    }
    return *check.subgroup;
}

LieSupergroup subgroupAsGroup(const LieSupergroup& G, const Subsupergroup& H) {
    ChartSignature hDoubled = doubledChart(H.chart);
    Morphism emb1 = renameTarget(renameSource(H.embed, renamedChart(H.chart, "1")),
                                 renamedChart(G.chart, "1"));
    Morphism emb2 = renameTarget(renameSource(H.embed, renamedChart(H.chart, "2")),
                                 renamedChart(G.chart, "2"));
    Morphism full = compose(productMorphism(emb1, emb2), G.mul);

    // The product must stay on H: pivot pullbacks sit at their center values.
    for (auto j : H.pivotEven) {
        const std::string& nm = G.chart.evenNames()[j];
        if (!full.displacementPullback(nm).isZero())
            throw Error("subgroupAsGroup: multiplication does not close on the subgroup chart "
                        "(coordinate '" + nm + "')");
    }
    for (auto b : H.pivotOdd) {
        const std::string& nm = G.chart.oddNames()[b];
        if (!full.pullback(nm).isZero())
            throw Error("subgroupAsGroup: multiplication does not close on the subgroup chart "
                        "(coordinate '" + nm + "')");
    }

    std::map<std::string, SuperPolynomial> pb;
    for (const auto& nm : H.chart.evenNames()) pb.emplace(nm, full.pullback(nm));
    for (const auto& nm : H.chart.oddNames()) pb.emplace(nm, full.pullback(nm));
    Morphism mulH(hDoubled, H.chart, std::move(pb), full.order());
    return {G.name + "|" + "sub", H.chart, std::move(mulH), std::nullopt};
}

ReducedPoint subgroupPointInParent(const Subsupergroup& H, const ReducedPoint& h) {
    ReducedPoint full = H.chart.resolvePoint(h);
    ReducedPoint out;
    for (const auto& nm : H.parentChart.evenNames()) out[nm] = H.embed.pullback(nm).valueAt(full);
    return out;
}

}  // namespace supercoset
