#pragma once

// Exact arithmetic in the coefficient field Q(q): Laurent polynomials in q
// over the rationals and their normalized quotients, plus the quantum
// combinatorial scalars [m]_q and [m]_q!.

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "periplectiq/errors.hpp"

namespace periplectiq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Sparse Laurent polynomial in q with rational coefficients.
/// Invariant: no stored coefficient is zero; the zero polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& constant);
    explicit LaurentPoly(long constant);

    /// c * q^e
    static LaurentPoly q_power(int e, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    int min_exp() const; // requires nonzero
    int max_exp() const; // requires nonzero
    std::size_t term_count() const { return terms_.size(); }
    const std::map<int, Rat>& terms() const { return terms_; }

    Rat coeff(int e) const;
    void add_term(int e, const Rat& c);

    /// Leading (highest-exponent) coefficient; requires nonzero.
    const Rat& leading_coeff() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(int e) const; // multiply by q^e
    LaurentPoly subst_q_inverse() const;

    /// Sum of coefficients, i.e. the value at q = 1.
    Rat eval_at_one() const;

    std::string str() const;

private:
    std::map<int, Rat> terms_;
};

/// p = content * q^shift * primitive, with primitive an ordinary polynomial
/// with coprime integer coefficients, nonzero constant term and positive
/// leading coefficient. For p = 0: content = 0, shift = 0, primitive = 0.
struct ContentSplit {
    Rat content;
    int shift = 0;
    LaurentPoly primitive;
};
ContentSplit content_split(const LaurentPoly& p);

/// Primitive gcd (positive leading coefficient) of the polynomial parts,
/// computed by the subresultant fraction-free PRS. q-power factors are ignored:
/// gcd(q^a u, q^b v) = gcd(u, v) for u, v with nonzero constant term.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b; throws std::logic_error if the division is not exact.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Normalized quotient of Laurent polynomials: the scalar field Q(q).
///
/// Canonical form: den is an ordinary polynomial with nonzero constant term
/// (minimal exponent 0) and positive leading coefficient, gcd(num, den) = 1
/// over Q[q] after clearing q-powers, all coefficients are integers with
/// joint content 1, and 0 is 0/1. Equality of canonical forms is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);
    explicit RatFunc(const LaurentPoly& num) : RatFunc(num, LaurentPoly(Rat(1))) {}
    explicit RatFunc(long c) : RatFunc(LaurentPoly(c)) {}
    explicit RatFunc(const Rat& c) : RatFunc(LaurentPoly(c)) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    /// c * q^e
    static RatFunc q_power(int e, const Rat& c = Rat(1));

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RatFunc operator-() const;
    RatFunc inv() const; // throws DivisionByZero on 0
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
    RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
    RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }
    bool operator==(const RatFunc& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    bool operator!=(const RatFunc& rhs) const { return !(*this == rhs); }

    RatFunc pow(int e) const;
    RatFunc subst_q_inverse() const;

    /// Total number of stored terms; the sparsity weight used by pivoting.
    std::size_t term_count() const { return num_.term_count() + den_.term_count(); }

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void canonicalize();
};

/// [m]_q = (q^m - q^(-m)) / (q - q^(-1)), m >= 0.
RatFunc quantum_integer(int m);
/// [m]_q! with [0]_q! = 1, m >= 0.
RatFunc quantum_factorial(int m);

/// Value at q = 1; throws PoleAtOne when the denominator vanishes there.
Rat eval_at_one(const RatFunc& a);

/// Parses the rendering grammar: "q^2 + 1 + q^-2", "2q", "(q^2 + 1)/(q)", "0".
RatFunc parse_ratfunc(const std::string& text);

std::string rat_str(const Rat& r);

} // namespace periplectiq
