#include "supercoset/scalar.hpp"

#include <ostream>

namespace supercoset {

Scalar::Scalar(long num, long den) : re(num, den) {
    if (den == 0) throw Error("Scalar: zero denominator");
    re.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw Error("Scalar: division by zero");
    Rational n = re * re + im * im;
    return {re / n, -im / n};
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::formatRational(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational Scalar::parseRational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw Error("Scalar: bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw Error("Scalar: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string Scalar::str() const {
    auto one = [](const Rational& r, bool imag) {
        std::string s = r.get_num().get_str();
        if (r.get_den() != 1) s += "/" + r.get_den().get_str();
        if (imag) {
            if (s == "1") return std::string("i");
            if (s == "-1") return std::string("-i");
            s += "i";
        }
        return s;
    };
    if (isZero()) return "0";
    if (im == 0) return one(re, false);
    if (re == 0) return one(im, true);
    std::string s = one(re, false);
    if (im > 0) s += "+";
    return s + one(im, true);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace supercoset
