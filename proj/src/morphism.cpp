#include "supercoset/morphism.hpp"

#include <sstream>

namespace supercoset {

Morphism::Morphism(ChartSignature source, ChartSignature target,
                   std::map<std::string, SuperPolynomial> pullbacks, std::optional<int> order)
    : source_(std::move(source)), target_(std::move(target)),
      pullbacks_(std::move(pullbacks)), order_(order) {
    for (const auto& n : target_.evenNames()) {
        auto it = pullbacks_.find(n);
        if (it == pullbacks_.end())
            throw Error("Morphism: missing pullback for coordinate '" + n + "'");
        if (it->second.signature() != source_)
            throw Error("Morphism: pullback of '" + n + "' is not over the source chart");
        if (!it->second.hasParity(Parity::Even))
            throw Error("Morphism: even coordinate '" + n + "' has an odd-parity pullback");
    }
    for (const auto& n : target_.oddNames()) {
        auto it = pullbacks_.find(n);
        if (it == pullbacks_.end())
            throw Error("Morphism: missing pullback for coordinate '" + n + "'");
        if (it->second.signature() != source_)
            throw Error("Morphism: pullback of '" + n + "' is not over the source chart");
        if (!it->second.hasParity(Parity::Odd))
            throw Error("Morphism: odd coordinate '" + n + "' has an even-parity pullback");
    }
    if (pullbacks_.size() != target_.evenCount() + target_.oddCount())
        throw Error("Morphism: pullback for a coordinate not in the target chart");
    if (order_) {
        if (*order_ < 0) throw Error("Morphism: negative jet order");
        for (auto& [name, p] : pullbacks_) p = p.truncatedEven(*order_);
    }
}

Morphism Morphism::identity(const ChartSignature& chart) {
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& n : chart.evenNames()) pb.emplace(n, SuperPolynomial::coordinate(chart, n));
    for (const auto& n : chart.oddNames()) pb.emplace(n, SuperPolynomial::variable(chart, n));
    return {chart, chart, std::move(pb)};
}

Morphism Morphism::constant(const ChartSignature& source, const ChartSignature& target,
                            const ReducedPoint& value) {
    ReducedPoint v = target.resolvePoint(value);
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& n : target.evenNames())
        pb.emplace(n, SuperPolynomial::constant(source, v.at(n)));
    for (const auto& n : target.oddNames()) pb.emplace(n, SuperPolynomial(source));
    return {source, target, std::move(pb)};
}

const SuperPolynomial& Morphism::pullback(const std::string& targetCoordinate) const {
    auto it = pullbacks_.find(targetCoordinate);
    if (it == pullbacks_.end())
        throw Error("Morphism: no pullback for coordinate '" + targetCoordinate + "'");
    return it->second;
}

SuperPolynomial Morphism::displacementPullback(const std::string& name) const {
    SuperPolynomial p = pullback(name);
    if (target_.hasEven(name))
        p -= SuperPolynomial::constant(source_, target_.centerOf(name));
    return p;
}

ReducedPoint Morphism::reducedImage() const {
    ReducedPoint img;
    for (const auto& n : target_.evenNames()) img[n] = pullback(n).constantTerm();
    return img;
}

SuperPolynomial Morphism::pullApply(const SuperPolynomial& f) const {
    if (!f.signature().sameNames(target_))
        throw Error("Morphism: function is not over the target chart");
    std::map<std::string, SuperPolynomial> assignment;
    for (const auto& n : target_.evenNames()) {
        SuperPolynomial v = pullback(n);
        v -= SuperPolynomial::constant(source_, f.signature().centerOf(n));
        assignment.emplace(n, std::move(v));
    }
    for (const auto& n : target_.oddNames()) assignment.emplace(n, pullback(n));
    std::optional<int> trunc = order_;
    if (trunc) {
        // Jet substitution is only valid when the displacement assignment is
        // constant-free, i.e. the function is centered at our reduced image.
        for (const auto& n : target_.evenNames())
            if (!assignment.at(n).constantTerm().isZero())
                throw Error("Morphism: jet pullback of a function centered away from the image");
    }
    return substitute(f, source_, assignment, trunc);
}

bool Morphism::isIdentity() const {
    if (!source_.sameNames(target_)) return false;
    Morphism id = identity(source_);
    for (const auto& [name, p] : pullbacks_) {
        SuperPolynomial want = id.pullback(name);
        if (order_) want = want.truncatedEven(*order_);
        if (p != want) return false;
    }
    return true;
}

std::string Morphism::str() const {
    std::ostringstream os;
    os << source_.str() << " -> " << target_.str();
    if (order_) os << " [jet " << *order_ << "]";
    for (const auto& [name, p] : pullbacks_) os << "\n  " << name << " <- " << p.str();
    return os.str();
}

Morphism compose(const Morphism& phi, const Morphism& psi) {
    if (!phi.target().sameNames(psi.source()))
        throw Error("compose: middle charts do not match");
    ReducedPoint img = phi.reducedImage();
    for (const auto& n : psi.source().evenNames())
        if (img.at(n) != psi.source().centerOf(n))
            throw Error("compose: reduced image of the first morphism is not the center "
                        "expected by the second (coordinate '" + n + "')");
    std::optional<int> order;
    if (phi.order() && psi.order()) order = std::min(*phi.order(), *psi.order());
    else if (phi.order()) order = phi.order();
    else if (psi.order()) order = psi.order();

    std::map<std::string, SuperPolynomial> assignment;
    for (const auto& n : psi.source().evenNames()) {
        SuperPolynomial v = phi.pullback(n);
        v -= SuperPolynomial::constant(phi.source(), psi.source().centerOf(n));
        assignment.emplace(n, std::move(v));
    }
    for (const auto& n : psi.source().oddNames()) assignment.emplace(n, phi.pullback(n));

    std::map<std::string, SuperPolynomial> pb;
    for (const auto& [name, p] : psi.pullbacks())
        pb.emplace(name, substitute(p, phi.source(), assignment, order));
    return {phi.source(), psi.target(), std::move(pb), order};
}

Morphism productMorphism(const Morphism& f, const Morphism& g) {
    ChartSignature source = productChart(f.source(), g.source());
    ChartSignature target = productChart(f.target(), g.target());
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& [name, p] : f.pullbacks()) pb.emplace(name, embedded(p, source, 0, 0));
    for (const auto& [name, p] : g.pullbacks())
        pb.emplace(name, embedded(p, source, f.source().evenCount(), f.source().oddCount()));
    std::optional<int> order;
    if (f.order() && g.order()) order = std::min(*f.order(), *g.order());
    else if (f.order()) order = f.order();
    else if (g.order()) order = g.order();
    return {std::move(source), std::move(target), std::move(pb), order};
}

Morphism factorProjection(const ChartSignature& productSig, const ChartSignature& factor,
                          std::size_t evenOffset, std::size_t oddOffset) {
    std::map<std::string, SuperPolynomial> pb;
    for (std::size_t i = 0; i < factor.evenCount(); ++i) {
        const std::string& slot = productSig.evenNames()[evenOffset + i];
        SuperPolynomial p = SuperPolynomial::variable(productSig, slot);
        p += SuperPolynomial::constant(productSig, productSig.center()[evenOffset + i]);
        pb.emplace(factor.evenNames()[i], std::move(p));
    }
    for (std::size_t i = 0; i < factor.oddCount(); ++i)
        pb.emplace(factor.oddNames()[i],
                   SuperPolynomial::variable(productSig, productSig.oddNames()[oddOffset + i]));
    return {productSig, factor, std::move(pb)};
}

Morphism recenterSource(const Morphism& phi, const ReducedPoint& newCenter) {
    if (!phi.isExact()) throw Error("recenterSource: cannot recenter a jet-valued morphism");
    ChartSignature src = phi.source().recentered(newCenter);
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& [name, p] : phi.pullbacks()) pb.emplace(name, recentered(p, newCenter));
    return {std::move(src), phi.target(), std::move(pb)};
}

Morphism renameSource(const Morphism& phi, const ChartSignature& newSource) {
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& [name, p] : phi.pullbacks()) pb.emplace(name, renamed(p, newSource));
    return {newSource, phi.target(), std::move(pb), phi.order()};
}

Morphism renameTarget(const Morphism& phi, const ChartSignature& newTarget) {
    if (!(newTarget.evenCount() == phi.target().evenCount() &&
          newTarget.oddCount() == phi.target().oddCount() &&
          newTarget.center() == phi.target().center()))
        throw Error("renameTarget: chart layout mismatch");
    std::map<std::string, SuperPolynomial> pb;
    for (std::size_t i = 0; i < newTarget.evenCount(); ++i)
        pb.emplace(newTarget.evenNames()[i], phi.pullback(phi.target().evenNames()[i]));
    for (std::size_t i = 0; i < newTarget.oddCount(); ++i)
        pb.emplace(newTarget.oddNames()[i], phi.pullback(phi.target().oddNames()[i]));
    return {phi.source(), newTarget, std::move(pb), phi.order()};
}

Morphism truncated(const Morphism& phi, int order) {
    std::map<std::string, SuperPolynomial> pb;
    for (const auto& [name, p] : phi.pullbacks()) pb.emplace(name, p.truncatedEven(order));
    int effective = phi.order() ? std::min(*phi.order(), order) : order;
    return {phi.source(), phi.target(), std::move(pb), effective};
}

std::map<std::string, SuperPolynomial> residual(const Morphism& a, const Morphism& b) {
    if (!a.source().sameNames(b.source()) || a.source().center() != b.source().center())
        throw Error("residual: source charts differ");
    if (!a.target().sameNames(b.target()))
        throw Error("residual: target charts differ");
    std::optional<int> order;
    if (a.order() && b.order()) order = std::min(*a.order(), *b.order());
    else if (a.order()) order = a.order();
    else if (b.order()) order = b.order();
    std::map<std::string, SuperPolynomial> out;
    for (const auto& [name, p] : a.pullbacks()) {
        SuperPolynomial diff = p - b.pullback(name);
        if (order) diff = diff.truncatedEven(*order);
        if (!diff.isZero()) out.emplace(name, std::move(diff));
    }
    return out;
}

TangentMap differentialAt(const Morphism& phi, const ReducedPoint& p) {
    ReducedPoint full = phi.source().resolvePoint(p);
    if (!phi.isExact()) {
        for (const auto& n : phi.source().evenNames())
            if (full.at(n) != phi.source().centerOf(n))
                throw Error("differentialAt: jet-valued morphism away from its center");
    }
    const auto& src = phi.source();
    const auto& dst = phi.target();
    TangentMap d;
    d.even = Matrix(dst.evenCount(), src.evenCount());
    d.odd = Matrix(dst.oddCount(), src.oddCount());
    for (std::size_t i = 0; i < dst.evenCount(); ++i) {
        const SuperPolynomial& pb = phi.pullback(dst.evenNames()[i]);
        for (std::size_t j = 0; j < src.evenCount(); ++j)
            d.even.at(i, j) = pb.partialEven(src.evenNames()[j]).valueAt(full);
    }
    for (std::size_t a = 0; a < dst.oddCount(); ++a) {
        const SuperPolynomial& pb = phi.pullback(dst.oddNames()[a]);
        for (std::size_t b = 0; b < src.oddCount(); ++b)
            d.odd.at(a, b) = pb.partialOdd(src.oddNames()[b]).valueAt(full);
    }
    return d;
}

RankProfile rankProfile(const Morphism& phi, const ReducedPoint& p) {
    TangentMap d = differentialAt(phi, p);
    RankProfile r;
    r.evenRank = d.even.rank();
    r.oddRank = d.odd.rank();
    r.isSubmersion = r.evenRank == d.even.rows() && r.oddRank == d.odd.rows();
    r.isImmersion = r.evenRank == d.even.cols() && r.oddRank == d.odd.cols();
    return r;
}

}  // namespace supercoset
