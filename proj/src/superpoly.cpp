#include "supercoset/superpoly.hpp"

#include <bit>
#include <sstream>

namespace supercoset {

std::uint32_t TermKey::evenDegree() const {
    std::uint32_t d = 0;
    for (auto e : even) d += e;
    return d;
}

std::uint32_t TermKey::oddDegree() const { return static_cast<std::uint32_t>(std::popcount(odd)); }

namespace {

// Compares odd masks as ascending index sequences.
bool oddSubsetLess(std::uint32_t a, std::uint32_t b) {
    while (a != 0 || b != 0) {
        if (a == 0) return true;   // proper prefix
        if (b == 0) return false;
        int ia = std::countr_zero(a);
        int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

}  // namespace

bool TermOrder::operator()(const TermKey& a, const TermKey& b) const {
    std::uint32_t da = a.evenDegree(), db = b.evenDegree();
    if (da != db) return da < db;
    if (a.even != b.even) return a.even < b.even;
    if (a.odd != b.odd) return oddSubsetLess(a.odd, b.odd);
    return false;
}

bool divisionLess(const TermKey& a, const TermKey& b) {
    std::uint32_t da = a.evenDegree() + a.oddDegree();
    std::uint32_t db = b.evenDegree() + b.oddDegree();
    if (da != db) return da < db;
    if (a.even != b.even) return a.even < b.even;
    if (a.odd != b.odd) return oddSubsetLess(a.odd, b.odd);
    return false;
}

int koszulSign(std::uint32_t maskA, std::uint32_t maskB) {
    if (maskA & maskB) return 0;
    int inversions = 0;
    std::uint32_t b = maskB;
    while (b) {
        int j = std::countr_zero(b);
        inversions += std::popcount(maskA >> (j + 1));
        b &= b - 1;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

SuperPolynomial SuperPolynomial::constant(const ChartSignature& sig, const Scalar& c) {
    SuperPolynomial f(sig);
    f.addTerm(TermKey{std::vector<std::uint32_t>(sig.evenCount(), 0), 0}, c);
    return f;
}

SuperPolynomial SuperPolynomial::variable(const ChartSignature& sig, const std::string& name) {
    SuperPolynomial f(sig);
    TermKey key{std::vector<std::uint32_t>(sig.evenCount(), 0), 0};
    int ie = sig.evenIndexOf(name);
    if (ie >= 0) {
        key.even[static_cast<std::size_t>(ie)] = 1;
    } else {
        int io = sig.oddIndexOf(name);
        if (io < 0) throw Error("SuperPolynomial: unknown coordinate '" + name + "'");
        key.odd = 1u << io;
    }
    f.addTerm(key, Scalar(1));
    return f;
}

SuperPolynomial SuperPolynomial::coordinate(const ChartSignature& sig, const std::string& name) {
    SuperPolynomial f = variable(sig, name);
    if (sig.hasEven(name)) f += constant(sig, sig.centerOf(name));
    return f;
}

Scalar SuperPolynomial::coefficient(const TermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar SuperPolynomial::constantTerm() const {
    return coefficient(TermKey{std::vector<std::uint32_t>(sig_.evenCount(), 0), 0});
}

void SuperPolynomial::addTerm(const TermKey& key, const Scalar& c) {
    if (c.isZero()) return;
    if (key.even.size() != sig_.evenCount())
        throw Error("SuperPolynomial: term arity does not match the chart");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

bool SuperPolynomial::hasParity(Parity p) const {
    for (const auto& [key, c] : terms_)
        if (key.parity() != p) return false;
    return true;
}

std::optional<Parity> SuperPolynomial::parity() const {
    if (terms_.empty()) return Parity::Even;
    Parity p = terms_.begin()->first.parity();
    return hasParity(p) ? std::optional<Parity>(p) : std::nullopt;
}

std::uint32_t SuperPolynomial::maxEvenDegree() const {
    std::uint32_t d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.evenDegree());
    return d;
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial out(sig_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    if (sig_ != o.sig_) throw Error("SuperPolynomial: signature mismatch in addition");
    for (const auto& [key, c] : o.terms_) addTerm(key, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    if (sig_ != o.sig_) throw Error("SuperPolynomial: signature mismatch in subtraction");
    for (const auto& [key, c] : o.terms_) addTerm(key, -c);
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    if (a.sig_ != b.sig_) throw Error("SuperPolynomial: signature mismatch in multiplication");
    SuperPolynomial out(a.sig_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            int sign = koszulSign(ka.odd, kb.odd);
            if (sign == 0) continue;
            TermKey key{ka.even, ka.odd | kb.odd};
            for (std::size_t i = 0; i < key.even.size(); ++i) key.even[i] += kb.even[i];
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            out.addTerm(key, c);
        }
    }
    return out;
}

SuperPolynomial SuperPolynomial::scaled(const Scalar& c) const {
    SuperPolynomial out(sig_);
    if (c.isZero()) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
    return out;
}

Scalar SuperPolynomial::valueAt(const ReducedPoint& p) const {
    ReducedPoint full = sig_.resolvePoint(p);
    Scalar total(0);
    for (const auto& [key, c] : terms_) {
        if (key.odd != 0) continue;
        Scalar v = c;
        for (std::size_t i = 0; i < key.even.size(); ++i) {
            if (key.even[i] == 0) continue;
            Scalar d = full.at(sig_.evenNames()[i]) - sig_.center()[i];
            for (std::uint32_t k = 0; k < key.even[i]; ++k) v *= d;
        }
        total += v;
    }
    return total;
}

SuperPolynomial SuperPolynomial::partialEven(const std::string& name) const {
    int idx = sig_.evenIndexOf(name);
    if (idx < 0) throw Error("partialEven: no even coordinate '" + name + "'");
    auto i = static_cast<std::size_t>(idx);
    SuperPolynomial out(sig_);
    for (const auto& [key, c] : terms_) {
        if (key.even[i] == 0) continue;
        TermKey k = key;
        k.even[i] -= 1;
        out.addTerm(k, c * Scalar(static_cast<long>(key.even[i])));
    }
    return out;
}

SuperPolynomial SuperPolynomial::partialOdd(const std::string& name) const {
    int idx = sig_.oddIndexOf(name);
    if (idx < 0) throw Error("partialOdd: no odd coordinate '" + name + "'");
    std::uint32_t bit = 1u << idx;
    SuperPolynomial out(sig_);
    for (const auto& [key, c] : terms_) {
        if (!(key.odd & bit)) continue;
        TermKey k = key;
        k.odd &= ~bit;
        // Left derivative: move the factor to the front across the lower
        // indices that precede it.
        int below = std::popcount(key.odd & (bit - 1));
        out.addTerm(k, (below % 2 == 0) ? c : -c);
    }
    return out;
}

SuperPolynomial SuperPolynomial::truncatedEven(int order) const {
    if (order < 0) throw Error("truncatedEven: negative order");
    SuperPolynomial out(sig_);
    for (const auto& [key, c] : terms_)
        if (key.evenDegree() <= static_cast<std::uint32_t>(order)) out.terms_.emplace(key, c);
    return out;
}

std::string SuperPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        std::string cs = c.str();
        if (!first) {
            if (cs.size() && cs[0] == '-' && c.isReal()) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < key.even.size(); ++i) {
            if (key.even[i] == 0) continue;
            if (mono.tellp() > 0) mono << "*";
            mono << "u[" << sig_.evenNames()[i] << "]";
            if (key.even[i] > 1) mono << "^" << key.even[i];
        }
        std::uint32_t m = key.odd;
        while (m) {
            int j = std::countr_zero(m);
            if (mono.tellp() > 0) mono << "*";
            mono << sig_.oddNames()[static_cast<std::size_t>(j)];
            m &= m - 1;
        }
        std::string ms = mono.str();
        if (ms.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << ms;
        } else if (cs == "-1" && c.isReal()) {
            os << "-" << ms;
        } else {
            bool paren = !c.isReal() || (c.im.get_num() != 0 && c.re.get_num() != 0);
            os << (paren ? "(" : "") << cs << (paren ? ")" : "") << "*" << ms;
        }
    }
    return os.str();
}

SuperPolynomial substitute(const SuperPolynomial& f, const ChartSignature& target,
                           const std::map<std::string, SuperPolynomial>& assignment,
                           std::optional<int> truncOrder) {
    const ChartSignature& src = f.signature();
    auto valueOf = [&](const std::string& name, Parity expected) -> const SuperPolynomial& {
        auto it = assignment.find(name);
        if (it == assignment.end())
            throw Error("substitute: no value for coordinate '" + name + "'");
        if (it->second.signature() != target)
            throw Error("substitute: value for '" + name + "' is over a different chart");
        if (!it->second.hasParity(expected))
            throw Error("substitute: parity mismatch for coordinate '" + name + "'");
        return it->second;
    };
    for (const auto& n : src.evenNames()) valueOf(n, Parity::Even);
    for (const auto& n : src.oddNames()) valueOf(n, Parity::Odd);

    auto trunc = [&](SuperPolynomial p) {
        return truncOrder ? p.truncatedEven(*truncOrder) : p;
    };

    std::map<std::pair<std::string, std::uint32_t>, SuperPolynomial> powers;
    auto power = [&](const std::string& name, std::uint32_t e) -> const SuperPolynomial& {
        auto it = powers.find({name, e});
        if (it != powers.end()) return it->second;
        SuperPolynomial p = valueOf(name, Parity::Even);
        for (std::uint32_t k = 2; k <= e; ++k) {
            auto cached = powers.find({name, k});
            p = cached != powers.end() ? cached->second
                                       : trunc(p * valueOf(name, Parity::Even));
            powers.emplace(std::make_pair(name, k), p);
        }
        return powers.emplace(std::make_pair(name, e), std::move(p)).first->second;
    };

    SuperPolynomial out(target);
    for (const auto& [key, c] : f.terms()) {
        SuperPolynomial term = SuperPolynomial::constant(target, c);
        for (std::size_t i = 0; i < key.even.size(); ++i)
            if (key.even[i] > 0) term = trunc(term * power(src.evenNames()[i], key.even[i]));
        std::uint32_t m = key.odd;
        while (m) {
            int j = std::countr_zero(m);
            term = trunc(term * valueOf(src.oddNames()[static_cast<std::size_t>(j)], Parity::Odd));
            m &= m - 1;
        }
        out += term;
    }
    return out;
}

SuperPolynomial recentered(const SuperPolynomial& f, const ReducedPoint& newCenter) {
    const ChartSignature& src = f.signature();
    ChartSignature dst = src.recentered(newCenter);
    std::map<std::string, SuperPolynomial> assignment;
    for (std::size_t i = 0; i < src.evenCount(); ++i) {
        const std::string& n = src.evenNames()[i];
        // u_old = u_new + (newCenter - oldCenter)
        SuperPolynomial v = SuperPolynomial::variable(dst, n);
        v += SuperPolynomial::constant(dst, dst.center()[i] - src.center()[i]);
        assignment.emplace(n, std::move(v));
    }
    for (const auto& n : src.oddNames()) assignment.emplace(n, SuperPolynomial::variable(dst, n));
    return substitute(f, dst, assignment);
}

SuperPolynomial renamed(const SuperPolynomial& f, const ChartSignature& newSig) {
    if (newSig.evenCount() != f.signature().evenCount() ||
        newSig.oddCount() != f.signature().oddCount() ||
        newSig.center() != f.signature().center())
        throw Error("renamed: chart layout mismatch");
    SuperPolynomial out(newSig);
    for (const auto& [key, c] : f.terms()) out.addTerm(key, c);
    return out;
}

SuperPolynomial embedded(const SuperPolynomial& f, const ChartSignature& productSig,
                         std::size_t evenOffset, std::size_t oddOffset) {
    const ChartSignature& src = f.signature();
    if (evenOffset + src.evenCount() > productSig.evenCount() ||
        oddOffset + src.oddCount() > productSig.oddCount())
        throw Error("embedded: factor does not fit into the product chart");
    SuperPolynomial out(productSig);
    for (const auto& [key, c] : f.terms()) {
        TermKey k{std::vector<std::uint32_t>(productSig.evenCount(), 0),
                  key.odd << oddOffset};
        for (std::size_t i = 0; i < key.even.size(); ++i) k.even[evenOffset + i] = key.even[i];
        out.addTerm(k, c);
    }
    return out;
}

Jet::Jet(SuperPolynomial body, int order) : body_(std::move(body)), order_(order) {
    if (order_ < 0) throw Error("Jet: negative order");
    if (body_.maxEvenDegree() > static_cast<std::uint32_t>(order_))
        throw Error("Jet: body exceeds the stated order");
}

namespace {
void requireCompatible(const Jet& a, const Jet& b) {
    if (a.order() != b.order()) throw Error("Jet: order mismatch");
    if (a.body().signature() != b.body().signature()) throw Error("Jet: signature mismatch");
}
}  // namespace

Jet operator+(const Jet& a, const Jet& b) {
    requireCompatible(a, b);
    return {a.body() + b.body(), a.order()};
}

Jet operator-(const Jet& a, const Jet& b) {
    requireCompatible(a, b);
    return {a.body() - b.body(), a.order()};
}

Jet operator*(const Jet& a, const Jet& b) {
    requireCompatible(a, b);
    return {(a.body() * b.body()).truncatedEven(a.order()), a.order()};
}

Jet jetTruncate(const SuperPolynomial& f, int order) {
    if (order < 0) throw Error("jetTruncate: negative order");
    return {f.truncatedEven(order), order};
}

}  // namespace supercoset
