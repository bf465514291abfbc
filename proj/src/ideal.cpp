#include "supercoset/ideal.hpp"

#include <bit>

namespace supercoset {

IdealPresentation::IdealPresentation(ChartSignature c, std::vector<SuperPolynomial> gens)
    : chart(std::move(c)), generators(std::move(gens)) {
    for (const auto& g : generators)
        if (g.signature() != chart)
            throw Error("IdealPresentation: generator over a different chart");
}

bool IdealPresentation::vanishesAtCenter() const {
    for (const auto& g : generators)
        if (!g.constantTerm().isZero()) return false;
    return true;
}

namespace {

struct LeadTerm {
    TermKey key;
    Scalar coeff;
};

// Lowest term in the local division order.
std::optional<LeadTerm> leadingTerm(const SuperPolynomial& f) {
    std::optional<LeadTerm> best;
    for (const auto& [key, c] : f.terms())
        if (!best || divisionLess(key, best->key)) best = LeadTerm{key, c};
    return best;
}

bool divides(const TermKey& lt, const TermKey& t) {
    if ((t.odd & lt.odd) != lt.odd) return false;
    for (std::size_t i = 0; i < lt.even.size(); ++i)
        if (t.even[i] < lt.even[i]) return false;
    return true;
}

}  // namespace

SuperPolynomial reduceModulo(const SuperPolynomial& f, const IdealPresentation& ideal,
                             int order) {
    if (!f.signature().sameNames(ideal.chart) || f.signature().center() != ideal.chart.center())
        throw Error("reduceModulo: function and ideal live on different charts");
    std::vector<std::pair<SuperPolynomial, LeadTerm>> gens;
    for (const auto& g : ideal.generators) {
        SuperPolynomial gt = renamed(g, f.signature()).truncatedEven(order);
        auto lt = leadingTerm(gt);
        if (lt) gens.emplace_back(std::move(gt), *lt);
    }

    SuperPolynomial work = f.truncatedEven(order);
    while (true) {
        // Smallest reducible term in the division order.
        const TermKey* t = nullptr;
        const SuperPolynomial* gen = nullptr;
        const LeadTerm* lt = nullptr;
        Scalar coeff;
        for (const auto& [key, c] : work.terms()) {
            if (t && divisionLess(*t, key)) continue;
            for (const auto& [g, l] : gens) {
                if (divides(l.key, key)) {
                    t = &key;
                    gen = &g;
                    lt = &l;
                    coeff = c;
                    break;
                }
            }
        }
        if (!t) return work;

        TermKey q{t->even, t->odd & ~lt->key.odd};
        for (std::size_t i = 0; i < q.even.size(); ++i) q.even[i] -= lt->key.even[i];
        int sign = koszulSign(q.odd, lt->key.odd);
        SuperPolynomial qPoly(work.signature());
        Scalar factor = coeff / (lt->coeff * Scalar(sign));
        qPoly.addTerm(q, factor);
        work -= (qPoly * *gen).truncatedEven(order);
    }
}

IdealPresentation idealSum(const IdealPresentation& a, const IdealPresentation& b) {
    if (a.chart != b.chart) throw Error("idealSum: charts differ");
    std::vector<SuperPolynomial> gens = a.generators;
    gens.insert(gens.end(), b.generators.begin(), b.generators.end());
    return {a.chart, std::move(gens)};
}

IdealPresentation embeddedIdeal(const IdealPresentation& ideal, const ChartSignature& productSig,
                                std::size_t evenOffset, std::size_t oddOffset) {
    std::vector<SuperPolynomial> gens;
    gens.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators)
        gens.push_back(embedded(g, productSig, evenOffset, oddOffset));
    return {productSig, std::move(gens)};
}

CoordinateSolution solveForPivotCoordinates(const IdealPresentation& ideal, int order) {
    const ChartSignature& chart = ideal.chart;
    if (!ideal.vanishesAtCenter())
        throw Error("solveForPivotCoordinates: generators do not vanish at the center");

    std::vector<const SuperPolynomial*> evenGens, oddGens;
    for (const auto& g : ideal.generators) {
        if (g.isZero()) continue;
        if (g.hasParity(Parity::Even)) evenGens.push_back(&g);
        else if (g.hasParity(Parity::Odd)) oddGens.push_back(&g);
        else throw Error("solveForPivotCoordinates: generator is not parity-homogeneous");
    }

    // Linear parts at the center.
    Matrix E(evenGens.size(), chart.evenCount());
    for (std::size_t i = 0; i < evenGens.size(); ++i)
        for (std::size_t j = 0; j < chart.evenCount(); ++j) {
            TermKey key{std::vector<std::uint32_t>(chart.evenCount(), 0), 0};
            key.even[j] = 1;
            E.at(i, j) = evenGens[i]->coefficient(key);
        }
    Matrix O(oddGens.size(), chart.oddCount());
    for (std::size_t a = 0; a < oddGens.size(); ++a)
        for (std::size_t b = 0; b < chart.oddCount(); ++b) {
            TermKey key{std::vector<std::uint32_t>(chart.evenCount(), 0), 1u << b};
            O.at(a, b) = oddGens[a]->coefficient(key);
        }
    auto pivotEven = E.rowPivotColumns();
    auto pivotOdd = O.rowPivotColumns();
    if (!pivotEven || !pivotOdd)
        throw Error("solveForPivotCoordinates: generators not independent at the center");

    // Residual chart on the complementary coordinates.
    std::vector<bool> evenTaken(chart.evenCount(), false), oddTaken(chart.oddCount(), false);
    for (auto j : *pivotEven) evenTaken[j] = true;
    for (auto b : *pivotOdd) oddTaken[b] = true;
    std::vector<std::string> restEvenNames, restOddNames;
    std::vector<Scalar> restCenter;
    for (std::size_t j = 0; j < chart.evenCount(); ++j)
        if (!evenTaken[j]) {
            restEvenNames.push_back(chart.evenNames()[j]);
            restCenter.push_back(chart.center()[j]);
        }
    for (std::size_t b = 0; b < chart.oddCount(); ++b)
        if (!oddTaken[b]) restOddNames.push_back(chart.oddNames()[b]);
    ChartSignature residual(restEvenNames, restOddNames, restCenter);

    // Invertible linear blocks on the pivot columns.
    Matrix L(evenGens.size(), evenGens.size());
    for (std::size_t i = 0; i < evenGens.size(); ++i)
        for (std::size_t j = 0; j < evenGens.size(); ++j) L.at(i, j) = E.at(i, (*pivotEven)[j]);
    Matrix Lodd(oddGens.size(), oddGens.size());
    for (std::size_t a = 0; a < oddGens.size(); ++a)
        for (std::size_t b = 0; b < oddGens.size(); ++b) Lodd.at(a, b) = O.at(a, (*pivotOdd)[b]);
    Matrix Linv = L.inverse();
    Matrix LoddInv = Lodd.inverse();

    // Newton iteration with the constant linear part: s <- s - L^-1 G(s).
    std::vector<SuperPolynomial> sEven(evenGens.size(), SuperPolynomial(residual));
    std::vector<SuperPolynomial> sOdd(oddGens.size(), SuperPolynomial(residual));
    auto assignmentOf = [&](const std::vector<SuperPolynomial>& se,
                            const std::vector<SuperPolynomial>& so) {
        std::map<std::string, SuperPolynomial> a;
        for (std::size_t j = 0; j < chart.evenCount(); ++j) {
            const std::string& n = chart.evenNames()[j];
            if (evenTaken[j]) continue;
            a.emplace(n, SuperPolynomial::variable(residual, n));
        }
        for (std::size_t i = 0; i < evenGens.size(); ++i)
            a.emplace(chart.evenNames()[(*pivotEven)[i]], se[i]);
        for (std::size_t b = 0; b < chart.oddCount(); ++b) {
            const std::string& n = chart.oddNames()[b];
            if (oddTaken[b]) continue;
            a.emplace(n, SuperPolynomial::variable(residual, n));
        }
        for (std::size_t a2 = 0; a2 < oddGens.size(); ++a2)
            a.emplace(chart.oddNames()[(*pivotOdd)[a2]], sOdd[a2]);
        return a;
    };

    int maxIterations = order + static_cast<int>(chart.oddCount()) + 3;
    for (int iter = 0;; ++iter) {
        auto assignment = assignmentOf(sEven, sOdd);
        std::vector<SuperPolynomial> Ge, Go;
        for (const auto* g : evenGens) Ge.push_back(substitute(*g, residual, assignment, order));
        for (const auto* g : oddGens) Go.push_back(substitute(*g, residual, assignment, order));
        std::vector<SuperPolynomial> nextEven = sEven, nextOdd = sOdd;
        for (std::size_t j = 0; j < evenGens.size(); ++j)
            for (std::size_t i = 0; i < evenGens.size(); ++i)
                nextEven[j] -= Ge[i].scaled(Linv.at(j, i));
        for (std::size_t b = 0; b < oddGens.size(); ++b)
            for (std::size_t a2 = 0; a2 < oddGens.size(); ++a2)
                nextOdd[b] -= Go[a2].scaled(LoddInv.at(b, a2));
        for (auto& p : nextEven) p = p.truncatedEven(order);
        for (auto& p : nextOdd) p = p.truncatedEven(order);
        if (nextEven == sEven && nextOdd == sOdd) break;
        sEven = std::move(nextEven);
        sOdd = std::move(nextOdd);
        if (iter > maxIterations)
            throw Error("solveForPivotCoordinates: iteration failed to stabilize");
    }

    // The solution is exact when the generators vanish identically on it,
    // not merely to the jet order; then the embedding is a polynomial.
    auto assignment = assignmentOf(sEven, sOdd);
    bool exact = true;
    for (const auto& g : ideal.generators)
        if (!substitute(g, residual, assignment).isZero()) exact = false;

    std::map<std::string, SuperPolynomial> pb;
    for (std::size_t j = 0; j < chart.evenCount(); ++j) {
        const std::string& n = chart.evenNames()[j];
        SuperPolynomial value = assignment.at(n);
        value += SuperPolynomial::constant(residual, chart.center()[j]);
        pb.emplace(n, std::move(value));
    }
    for (std::size_t b = 0; b < chart.oddCount(); ++b) {
        const std::string& n = chart.oddNames()[b];
        pb.emplace(n, assignment.at(n));
    }
    Morphism embed(residual, chart, std::move(pb),
                   exact ? std::nullopt : std::optional<int>(order));
    return {*pivotEven, *pivotOdd, std::move(residual), std::move(embed)};
}

}  // namespace supercoset
