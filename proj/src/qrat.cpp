#include "periplectiq/qrat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace periplectiq {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

LaurentPoly::LaurentPoly(const Rat& constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Rat(constant)) {}

LaurentPoly LaurentPoly::q_power(int e, const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

Rat LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(int e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const Rat& LaurentPoly::leading_coeff() const { return terms_.rbegin()->second; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    if (e == 0) return *this;
    LaurentPoly out;
    for (const auto& [ex, v] : terms_) out.terms_[ex + e] = v;
    return out;
}

LaurentPoly LaurentPoly::subst_q_inverse() const {
    LaurentPoly out;
    for (const auto& [e, v] : terms_) out.terms_[-e] = v;
    return out;
}

Rat LaurentPoly::eval_at_one() const {
    Rat s = 0;
    for (const auto& [e, v] : terms_) s += v;
    return s;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    if (denominator(r) == 1) os << numerator(r);
    else os << "(" << numerator(r) << "/" << denominator(r) << ")";
    return os.str();
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        const Rat& c = it->second;
        const bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const Rat a = neg ? Rat(-c) : c;
        if (e == 0) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a);
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

ContentSplit content_split(const LaurentPoly& p) {
    ContentSplit out;
    if (p.is_zero()) {
        out.content = 0;
        return out;
    }
    out.shift = p.min_exp();
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = gcd(num_gcd, Int(boost::multiprecision::abs(numerator(c))));
        den_lcm = lcm(den_lcm, Int(denominator(c)));
    }
    Rat content(num_gcd, den_lcm);
    if (p.leading_coeff() < 0) content = -content;
    out.content = content;
    const Rat inv_content = Rat(1) / content;
    for (const auto& [e, c] : p.terms()) out.primitive.add_term(e - out.shift, c * inv_content);
    return out;
}

namespace {

int degree(const LaurentPoly& p) { return p.max_exp(); } // ordinary polys only

// lc(b)^(deg a - deg b + 1) * a mod b, for ordinary polynomials, deg a >= deg b.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const int db = degree(b);
    const Rat lb = b.leading_coeff();
    int e = degree(a) - db + 1;
    while (!a.is_zero() && degree(a) >= db) {
        const int d = degree(a) - db;
        const Rat la = a.leading_coeff();
        a = a.scaled(lb) - b.shifted(d).scaled(la);
        --e;
    }
    if (e > 0) {
        Rat f = 1;
        for (int i = 0; i < e; ++i) f *= lb;
        a = a.scaled(f);
    }
    return a;
}

LaurentPoly divide_coeffs(const LaurentPoly& p, const Rat& c) { return p.scaled(Rat(1) / c); }

Rat rat_pow(const Rat& x, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.is_zero() ? LaurentPoly() : content_split(b).primitive;
    if (b.is_zero()) return content_split(a).primitive;
    LaurentPoly A = content_split(a).primitive;
    LaurentPoly B = content_split(b).primitive;
    if (degree(A) < degree(B)) std::swap(A, B);
    // Subresultant PRS; coefficients remain integral throughout.
    Rat g = 1, h = 1;
    while (true) {
        const int delta = degree(A) - degree(B);
        LaurentPoly r = pseudo_rem(A, B);
        if (r.is_zero()) return content_split(B).primitive;
        if (degree(r) == 0 && r.min_exp() == 0) return LaurentPoly(Rat(1));
        A = B;
        B = divide_coeffs(r, g * rat_pow(h, delta));
        g = A.leading_coeff();
        h = delta == 0 ? h : rat_pow(g, delta) / rat_pow(h, delta - 1);
    }
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("poly_divexact by zero");
    if (a.is_zero()) return LaurentPoly();
    const int shift = a.min_exp() - b.min_exp();
    LaurentPoly r = a.shifted(-a.min_exp());
    const LaurentPoly d = b.shifted(-b.min_exp());
    LaurentPoly quot;
    const Rat lb = d.leading_coeff();
    const int db = degree(d);
    while (!r.is_zero()) {
        const int dr = degree(r);
        if (dr < db) throw std::logic_error("poly_divexact: not divisible");
        const Rat c = r.leading_coeff() / lb;
        quot.add_term(dr - db, c);
        r -= d.shifted(dr - db).scaled(c);
    }
    return quot.shifted(shift);
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    canonicalize();
}

void RatFunc::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("RatFunc with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rat(1));
        return;
    }
    ContentSplit n = content_split(num_);
    ContentSplit d = content_split(den_);
    LaurentPoly g = poly_gcd(n.primitive, d.primitive);
    if (!g.is_zero() && g.max_exp() > 0) {
        n.primitive = poly_divexact(n.primitive, g);
        d.primitive = poly_divexact(d.primitive, g);
    }
    const Rat c = n.content / d.content; // reduced; denominator positive
    num_ = n.primitive.scaled(Rat(numerator(c))).shifted(n.shift - d.shift);
    den_ = d.primitive.scaled(Rat(denominator(c)));
}

RatFunc RatFunc::q_power(int e, const Rat& c) { return RatFunc(LaurentPoly::q_power(e, c)); }

bool RatFunc::is_one() const {
    return num_ == LaurentPoly(Rat(1)) && den_ == LaurentPoly(Rat(1));
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc out = RatFunc::one();
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

RatFunc RatFunc::subst_q_inverse() const {
    return RatFunc(num_.subst_q_inverse(), den_.subst_q_inverse());
}

std::string RatFunc::str() const {
    if (den_ == LaurentPoly(Rat(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc quantum_integer(int m) {
    if (m < 0) throw std::invalid_argument("quantum_integer: m must be >= 0");
    LaurentPoly p;
    for (int j = 0; j < m; ++j) p.add_term(m - 1 - 2 * j, Rat(1));
    return RatFunc(p);
}

RatFunc quantum_factorial(int m) {
    if (m < 0) throw std::invalid_argument("quantum_factorial: m must be >= 0");
    RatFunc out = RatFunc::one();
    for (int j = 1; j <= m; ++j) out *= quantum_integer(j);
    return out;
}

Rat eval_at_one(const RatFunc& a) {
    const Rat d = a.den().eval_at_one();
    if (d == 0) throw PoleAtOne("pole at q = 1: " + a.str());
    return a.num().eval_at_one() / d;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        if (i >= s.size()) throw ParseError("unexpected end of input: " + s);
        return s[i++];
    }
};

Int parse_int_digits(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) digits += c.s[c.i++];
    if (digits.empty()) throw ParseError("expected digits in: " + c.s);
    return Int(digits);
}

int parse_exponent(Cursor& c) {
    bool neg = false;
    if (c.peek() == '-') {
        c.take();
        neg = true;
    } else if (c.peek() == '+') {
        c.take();
    }
    Int v = parse_int_digits(c);
    int e = static_cast<int>(v);
    return neg ? -e : e;
}

LaurentPoly parse_poly_body(Cursor& c) {
    LaurentPoly out;
    bool first = true;
    while (true) {
        int sign = 1;
        if (c.eof()) {
            if (first) throw ParseError("empty polynomial in: " + c.s);
            break;
        }
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            sign = ch == '-' ? -1 : 1;
        } else if (!first) {
            break; // caller handles what follows
        }
        Rat coef = 1;
        bool have_coef = false;
        ch = c.peek();
        if (ch == '(') { // "(a/b)" coefficient
            c.take();
            Int a = parse_int_digits(c);
            if (c.take() != '/') throw ParseError("expected '/' in rational coefficient: " + c.s);
            Int b = parse_int_digits(c);
            if (c.take() != ')') throw ParseError("expected ')' in rational coefficient: " + c.s);
            coef = Rat(a, b);
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            coef = Rat(parse_int_digits(c));
            have_coef = true;
        }
        if (c.peek() == '*') c.take();
        int e = 0;
        if (c.peek() == 'q') {
            c.take();
            e = 1;
            if (c.peek() == '^') {
                c.take();
                e = parse_exponent(c);
            }
        } else if (!have_coef) {
            throw ParseError("expected coefficient or q in: " + c.s);
        }
        out.add_term(e, sign * coef);
        first = false;
    }
    return out;
}

LaurentPoly parse_poly_string(const std::string& text) {
    std::string t = text;
    // strip one layer of redundant outer parentheses
    auto strip = [](std::string s) {
        while (true) {
            std::size_t b = s.find_first_not_of(" \t");
            std::size_t e = s.find_last_not_of(" \t");
            if (b == std::string::npos) return std::string();
            s = s.substr(b, e - b + 1);
            if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
            int depth = 0;
            bool outer = true;
            for (std::size_t i = 0; i + 1 < s.size(); ++i) {
                if (s[i] == '(') ++depth;
                else if (s[i] == ')') {
                    --depth;
                    if (depth == 0) {
                        outer = false;
                        break;
                    }
                }
            }
            if (!outer) return s;
            s = s.substr(1, s.size() - 2);
        }
    };
    t = strip(t);
    Cursor c{t};
    LaurentPoly p = parse_poly_body(c);
    if (!c.eof()) throw ParseError("trailing characters in polynomial: " + text);
    return p;
}

} // namespace

RatFunc parse_ratfunc(const std::string& text) {
    // split at a top-level '/' that separates "(num)/(den)" or "num/(den)"
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        else if (text[i] == ')') --depth;
        else if (text[i] == '/' && depth == 0) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '(') slash = i;
        }
    }
    if (slash == std::string::npos) return RatFunc(parse_poly_string(text));
    return RatFunc(parse_poly_string(text.substr(0, slash)),
                   parse_poly_string(text.substr(slash + 1)));
}

} // namespace periplectiq
