#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2def/rational.hpp"

namespace g2def {

// Element of the multiquadratic field Q(i, √2, √3, √5): a 16-dimensional
// Q-vector space with basis {1, √2, √3, √6, √5, √10, √15, √30} × {1, i}.
//
// A basis monomial is packed into one index byte:
//   bit 0 = √2, bit 1 = √3, bit 2 = √5  (the radical mask, 0..7),
//   bit 3 = the imaginary unit i.
// So mask 0 ↦ 1, 1 ↦ √2, 2 ↦ √3, 3 ↦ √6, 4 ↦ √5, 5 ↦ √10, 6 ↦ √15, 7 ↦ √30.
// Two radicals multiply by (√p)² = p on their common bits and XOR of masks:
//   √m · √m' = (Π_{p | gcd} p) · √(lcm/gcd-free part).
//
// Terms are kept sorted by index with zero coefficients dropped, so the
// representation is canonical and equality is term-wise comparison.  Most
// elements arising here have 1–2 terms, which keeps products cheap.
class FieldElem {
public:
    struct Term {
        std::uint8_t idx = 0;
        Rational c;
        bool operator==(const Term& o) const { return idx == o.idx && c == o.c; }
    };

    FieldElem() = default; // zero
    FieldElem(long v) : FieldElem(make_rational(v)) {}
    FieldElem(const Rational& v);

    static FieldElem imaginary_unit();
    // Radical basis monomial by mask 0..7 (see table above).
    static FieldElem radical(unsigned mask);
    static FieldElem sqrt2() { return radical(1); }
    static FieldElem sqrt3() { return radical(2); }
    static FieldElem sqrt5() { return radical(4); }

    bool is_zero() const { return terms_.empty(); }
    // Lies in Q (only the "1" monomial present).
    bool is_rational() const;
    // The rational value if is_rational(), otherwise nullopt.
    std::optional<Rational> as_rational() const;

    const std::vector<Term>& terms() const { return terms_; }
    Rational coeff(unsigned idx) const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    bool operator==(const FieldElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Multiplicative inverse via iterated conjugation down the tower:
    // multiplying numerator and denominator by the conjugate over i, then
    // √2, √3, √5 strips one generator from the denominator at each step,
    // leaving a rational denominator after four steps.
    FieldElem inv() const;

    FieldElem conj_i() const;              // i ↦ −i
    FieldElem conj_sqrt(unsigned bit) const; // √p ↦ −√p for bit 0,1,2 (p = 2,3,5)
    FieldElem real_part() const;
    FieldElem imag_part() const;           // b in a = re + i·b (b has no i terms)

    std::complex<double> approx() const;

    // Text encoding: terms `<rat>`, `<rat>*rN` (N ∈ {2,3,5,6,10,15,30}),
    // optionally prefixed `i*`, joined by " + "; zero is "0".
    // Example: "-12/5*r5" is −(12/5)√5.
    std::string str() const;
    static FieldElem parse(const std::string& s);

private:
    std::vector<Term> terms_; // sorted by idx, no zero coefficients
};

inline FieldElem operator*(const Rational& r, const FieldElem& a) { return FieldElem(r) * a; }
inline FieldElem operator*(long v, const FieldElem& a) { return FieldElem(v) * a; }
inline std::string to_string(const FieldElem& a) { return a.str(); }

// √r as a field element when r ≥ 0 is s²·m for a basis radicand
// m ∈ {1,2,3,5,6,10,15,30}; nullopt otherwise (including all r < 0).
std::optional<FieldElem> sqrt_of_rational(const Rational& r);

} // namespace g2def
