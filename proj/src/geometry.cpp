#include "supercoset/geometry.hpp"

namespace supercoset {

namespace {

bool atSourceCenter(const Morphism& phi, const ReducedPoint& p) {
    ReducedPoint full = phi.source().resolvePoint(p);
    for (const auto& n : phi.source().evenNames())
        if (full.at(n) != phi.source().centerOf(n)) return false;
    return true;
}

Morphism centeredAt(const Morphism& phi, const ReducedPoint& p) {
    if (atSourceCenter(phi, p)) return phi;
    return recenterSource(phi, p);  // throws for jets away from their center
}

}  // namespace

Morphism invertLocal(const Morphism& phiIn, const ReducedPoint& p, int order) {
    Morphism phi = centeredAt(phiIn, p);
    const ChartSignature& src = phi.source();
    const ChartSignature& dst = phi.target();
    if (src.evenCount() != dst.evenCount() || src.oddCount() != dst.oddCount())
        throw Error("invertLocal: dimension mismatch between source and target");
    if (phi.order()) order = std::min(order, *phi.order());

    TangentMap d = differentialAt(phi, src.centerPoint());
    if (d.even.rank() != d.even.rows() || d.odd.rank() != d.odd.rows())
        throw Error("invertLocal: singular differential");
    Matrix Ainv = d.even.inverse();
    Matrix Binv = d.odd.inverse();

    // The inverse lives on the target chart recentered at the image point.
    ChartSignature invSource = dst.recentered(phi.reducedImage());
    std::size_t n = src.evenCount(), m = src.oddCount();

    // Displacement pullbacks relative to the image point; zero constant term.
    std::vector<SuperPolynomial> F;
    for (const auto& name : dst.evenNames()) {
        SuperPolynomial f = phi.pullback(name);
        f -= SuperPolynomial::constant(src, f.constantTerm());
        F.push_back(std::move(f));
    }
    for (const auto& name : dst.oddNames()) F.push_back(phi.pullback(name));

    std::vector<SuperPolynomial> v;
    for (const auto& name : invSource.evenNames())
        v.push_back(SuperPolynomial::variable(invSource, name));
    for (const auto& name : invSource.oddNames())
        v.push_back(SuperPolynomial::variable(invSource, name));

    // Solve F(g(v)) = v degree by degree: g <- L^-1 (v - (F - L)(g)).
    std::vector<SuperPolynomial> g(n + m, SuperPolynomial(invSource));
    int maxIterations = order + static_cast<int>(m) + 2;
    for (int iter = 0;; ++iter) {
        std::map<std::string, SuperPolynomial> assignment;
        for (std::size_t j = 0; j < n; ++j) assignment.emplace(src.evenNames()[j], g[j]);
        for (std::size_t b = 0; b < m; ++b) assignment.emplace(src.oddNames()[b], g[n + b]);

        std::vector<SuperPolynomial> rhs;
        rhs.reserve(n + m);
        for (std::size_t i = 0; i < n + m; ++i) {
            SuperPolynomial Fg = substitute(F[i], invSource, assignment, order);
            // Subtract the linear part L(g) to isolate the nonlinearity.
            SuperPolynomial Lg(invSource);
            if (i < n) {
                for (std::size_t j = 0; j < n; ++j) Lg += g[j].scaled(d.even.at(i, j));
            } else {
                for (std::size_t b = 0; b < m; ++b) Lg += g[n + b].scaled(d.odd.at(i - n, b));
            }
            rhs.push_back((v[i] - (Fg - Lg)).truncatedEven(order));
        }
        std::vector<SuperPolynomial> next(n + m, SuperPolynomial(invSource));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) next[j] += rhs[i].scaled(Ainv.at(j, i));
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t a = 0; a < m; ++a) next[n + b] += rhs[n + a].scaled(Binv.at(b, a));
        if (next == g) break;
        g = std::move(next);
        if (iter > maxIterations) throw Error("invertLocal: iteration failed to stabilize");
    }

    std::map<std::string, SuperPolynomial> pb;
    for (std::size_t j = 0; j < n; ++j) {
        SuperPolynomial p_j = g[j];
        p_j += SuperPolynomial::constant(invSource, src.center()[j]);
        pb.emplace(src.evenNames()[j], std::move(p_j));
    }
    for (std::size_t b = 0; b < m; ++b) pb.emplace(src.oddNames()[b], g[n + b]);
    return {invSource, src, std::move(pb), order};
}

AdaptedChart adaptedCoordinates(const Morphism& phiIn, const ReducedPoint& p, int order) {
    Morphism phi = centeredAt(phiIn, p);
    const ChartSignature& src = phi.source();
    const ChartSignature& dst = phi.target();

    TangentMap d = differentialAt(phi, src.centerPoint());
    if (d.even.rank() != d.even.rows() || d.odd.rank() != d.odd.rows())
        throw Error("adaptedCoordinates: not a submersion at the given point");
    auto pivotEven = d.even.rowPivotColumns();
    auto pivotOdd = d.odd.rowPivotColumns();
    if (!pivotEven || !pivotOdd)
        throw Error("adaptedCoordinates: not a submersion at the given point");

    auto nonPivots = [](const std::vector<std::size_t>& pivots, std::size_t count) {
        std::vector<bool> taken(count, false);
        for (auto j : pivots) taken[j] = true;
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < count; ++j)
            if (!taken[j]) rest.push_back(j);
        return rest;
    };
    std::vector<std::size_t> restEven = nonPivots(*pivotEven, src.evenCount());
    std::vector<std::size_t> restOdd = nonPivots(*pivotOdd, src.oddCount());

    // Self-morphism filling the leading slots with the submersion's
    // displacement pullbacks and the remaining slots with the non-pivot
    // coordinates; invertible by the pivot choice.
    std::map<std::string, SuperPolynomial> pb;
    for (std::size_t i = 0; i < src.evenCount(); ++i) {
        SuperPolynomial value(src);
        if (i < dst.evenCount()) {
            value = phi.pullback(dst.evenNames()[i]);
            value -= SuperPolynomial::constant(src, value.constantTerm());
        } else {
            value = SuperPolynomial::variable(src, src.evenNames()[restEven[i - dst.evenCount()]]);
        }
        value += SuperPolynomial::constant(src, src.center()[i]);
        pb.emplace(src.evenNames()[i], std::move(value));
    }
    for (std::size_t a = 0; a < src.oddCount(); ++a) {
        SuperPolynomial value =
            a < dst.oddCount()
                ? phi.pullback(dst.oddNames()[a])
                : SuperPolynomial::variable(src, src.oddNames()[restOdd[a - dst.oddCount()]]);
        pb.emplace(src.oddNames()[a], std::move(value));
    }
    Morphism forward(src, src, std::move(pb), phi.order());
    Morphism change = invertLocal(forward, src.centerPoint(), order);
    // invertLocal hands back a source recentered at the (unchanged) center.
    return {std::move(change), std::move(forward), *pivotEven, *pivotOdd};
}

}  // namespace supercoset
