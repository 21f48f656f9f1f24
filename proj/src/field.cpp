#include "structalg/field.hpp"

#include <cctype>

#include "structalg/errors.hpp"

namespace structalg {

GaussianRational GaussianRational::rational(long p, long q) {
    if (q == 0) throw DivisionByZero();
    mpq_class v(p, q);
    v.canonicalize();
    return {v, mpq_class(0)};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    return *this * o.inverse();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

namespace {

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

/// Renders one imaginary part c as "i", "-i", or "<c>*i".
std::string imag_str(const mpq_class& c) {
    if (c == 1) return "i";
    if (c == -1) return "-i";
    return rational_str(c) + "*i";
}

}  // namespace

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    if (im_ == 0) return rational_str(re_);
    if (re_ == 0) return imag_str(im_);
    std::string out = rational_str(re_);
    if (im_ > 0) out += "+";
    return out + imag_str(im_);
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
};

mpq_class parse_rational(Cursor& c) {
    size_t start = c.pos;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) ++c.pos;
    size_t digits_begin = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == digits_begin) throw ParseError("expected digits in '" + c.s + "'");
    if (!c.done() && c.peek() == '/') {
        ++c.pos;
        size_t den_begin = c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        if (c.pos == den_begin) throw ParseError("expected denominator in '" + c.s + "'");
    }
    mpq_class v(c.s.substr(start, c.pos - start));
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + c.s + "'");
    v.canonicalize();
    return v;
}

/// Parses one term: either a rational, "i", "-i", "+i", or "<rational>*i".
/// Returns the term's contribution and whether it was imaginary.
std::pair<mpq_class, bool> parse_term(Cursor& c) {
    int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        if (c.peek() == '-') sign = -1;
        ++c.pos;
    }
    if (!c.done() && c.peek() == 'i') {
        ++c.pos;
        return {mpq_class(sign), true};
    }
    size_t save = c.pos;
    // Re-parse the digits without the consumed sign.
    Cursor body{c.s, save};
    mpq_class v = parse_rational(body);
    c.pos = body.pos;
    v *= sign;
    if (!c.done() && c.peek() == '*') {
        ++c.pos;
        if (c.done() || c.peek() != 'i') throw ParseError("expected 'i' after '*' in '" + c.s + "'");
        ++c.pos;
        return {v, true};
    }
    return {v, false};
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty()) throw ParseError("empty scalar");
    Cursor c{compact};
    mpq_class re(0), im(0);
    bool seen_re = false, seen_im = false;
    while (!c.done()) {
        auto [v, imag] = parse_term(c);
        if (imag) {
            if (seen_im) throw ParseError("repeated imaginary part in '" + text + "'");
            im = v;
            seen_im = true;
        } else {
            if (seen_re) throw ParseError("repeated real part in '" + text + "'");
            re = v;
            seen_re = true;
        }
    }
    return {re, im};
}

std::optional<mpq_class> sqrt_rational(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<GaussianRational> sqrt_in_field(const GaussianRational& a) {
    if (a.is_zero()) return GaussianRational();
    // For w = x + y*i with w^2 = a:  x^2 - y^2 = re(a), 2xy = im(a), and
    // x^2 + y^2 = sqrt(norm(a)).  Hence x^2 = (re(a) + sqrt(norm(a))) / 2.
    auto r = sqrt_rational(a.norm());
    if (!r) return std::nullopt;
    mpq_class u = (a.re() + *r) / 2;
    auto x = sqrt_rational(u);
    if (!x) return std::nullopt;
    mpq_class y;
    if (*x == 0) {
        // Negative real input: w is purely imaginary.
        auto yy = sqrt_rational(-a.re());
        if (!yy) return std::nullopt;
        y = *yy;
    } else {
        y = a.im() / (2 * *x);
    }
    GaussianRational w(*x, y);
    if (w * w != a) return std::nullopt;
    // Sign convention: re > 0, or re == 0 and im >= 0.
    if (w.re() < 0 || (w.re() == 0 && w.im() < 0)) w = -w;
    return w;
}

}  // namespace structalg
