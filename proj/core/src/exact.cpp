#include "twinfoam/exact.hpp"

#include <cctype>
#include <sstream>

namespace twinfoam {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(i)");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r; // gmpxx prints "p" or "p/q" in lowest terms
    return os.str();
}

} // namespace

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += rational_str(re_);
    if (im_ != 0) {
        Rational mag = abs(im_);
        std::string part = (mag == 1) ? "i" : rational_str(mag) + "*i";
        if (out.empty()) {
            out += (im_ < 0 ? "-" : "") + part;
        } else {
            out += (im_ < 0 ? "-" : "+") + part;
        }
    }
    return out;
}

namespace {

// One signed term: [sign] digits [/digits] [*] [i], or [sign] i.
// Returns rational magnitude with sign, and whether the term was imaginary.
struct Term {
    Rational value;
    bool imaginary;
};

size_t parse_term(std::string_view s, size_t pos, Term& out) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string num;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num += s[pos++];
    std::string den;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) den += s[pos++];
        if (den.empty()) throw InputError("missing denominator in rational");
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    bool imaginary = false;
    if (pos < s.size() && s[pos] == 'i') {
        imaginary = true;
        ++pos;
    }
    if (num.empty() && !imaginary) throw InputError("expected a number");
    Rational mag = num.empty() ? Rational(1)
                               : make_rational(Integer(num), den.empty() ? Integer(1) : Integer(den));
    out.value = neg ? Rational(-mag) : mag;
    out.imaginary = imaginary;
    return pos;
}

} // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InputError("empty Gaussian rational");
    Rational re(0), im(0);
    size_t pos = 0;
    int terms = 0;
    while (pos < s.size()) {
        if (terms == 2) throw InputError("trailing characters in Gaussian rational: '" + s + "'");
        Term t;
        pos = parse_term(s, pos, t);
        (t.imaginary ? im : re) += t.value;
        ++terms;
    }
    return {re, im};
}

LaurentPolynomial LaurentPolynomial::monomial(Integer coeff, int exponent) {
    LaurentPolynomial p;
    if (coeff != 0) p.coeffs_[exponent] = std::move(coeff);
    return p;
}

Integer LaurentPolynomial::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Integer& slot = coeffs_[e];
        slot += c;
        if (slot == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Integer& slot = coeffs_[e];
        slot -= c;
        if (slot == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            Integer& slot = out.coeffs_[ea + eb];
            slot += ca * cb;
            if (slot == 0) out.coeffs_.erase(ea + eb);
        }
    return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
    LaurentPolynomial out(1);
    LaurentPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) out *= base;
        base *= base;
        exponent >>= 1u;
    }
    return out;
}

GaussianRational LaurentPolynomial::eval(const GaussianRational& q_value) const {
    GaussianRational acc;
    for (const auto& [e, c] : coeffs_) {
        GaussianRational qe(1);
        if (e > 0) {
            for (int k = 0; k < e; ++k) qe *= q_value;
        } else if (e < 0) {
            GaussianRational inv = q_value.inv();
            for (int k = 0; k < -e; ++k) qe *= inv;
        }
        acc += GaussianRational(Rational(c)) * qe;
    }
    return acc;
}

std::string LaurentPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
        Integer mag = abs(c);
        std::string term;
        if (e == 0) {
            term = mag.get_str();
        } else {
            std::string qpart = (e == 1) ? "q" : "q^" + std::to_string(e);
            term = (mag == 1) ? qpart : mag.get_str() + "*" + qpart;
        }
        if (out.empty()) {
            out += (c < 0 ? "-" : "") + term;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

} // namespace twinfoam
