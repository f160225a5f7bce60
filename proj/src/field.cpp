#include "g2def/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace g2def {

namespace {

constexpr std::array<int, 8> kRadicand = {1, 2, 3, 6, 5, 10, 15, 30};
// Display order of radical masks: by radicand 1, 2, 3, 5, 6, 10, 15, 30.
constexpr std::array<unsigned, 8> kPrintOrder = {0, 1, 2, 4, 3, 5, 6, 7};

int common_prime_product(unsigned m1, unsigned m2) {
    static constexpr std::array<int, 3> primes = {2, 3, 5};
    int prod = 1;
    unsigned common = m1 & m2;
    for (unsigned b = 0; b < 3; ++b)
        if (common & (1u << b)) prod *= primes[b];
    return prod;
}

} // namespace

FieldElem::FieldElem(const Rational& v) {
    if (!g2def::is_zero(v)) terms_.push_back({0, v});
}

FieldElem FieldElem::imaginary_unit() {
    FieldElem a;
    a.terms_.push_back({8, make_rational(1)});
    return a;
}

FieldElem FieldElem::radical(unsigned mask) {
    require(mask < 8, "radical mask out of range");
    FieldElem a;
    a.terms_.push_back({static_cast<std::uint8_t>(mask), make_rational(1)});
    return a;
}

bool FieldElem::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].idx == 0);
}

std::optional<Rational> FieldElem::as_rational() const {
    if (terms_.empty()) return make_rational(0);
    if (terms_.size() == 1 && terms_[0].idx == 0) return terms_[0].c;
    return std::nullopt;
}

Rational FieldElem::coeff(unsigned idx) const {
    for (const Term& t : terms_)
        if (t.idx == idx) return t.c;
    return make_rational(0);
}

FieldElem FieldElem::operator-() const {
    FieldElem a(*this);
    for (Term& t : a.terms_) t.c = -t.c;
    return a;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto it = terms_.begin(), jt = o.terms_.begin();
    while (it != terms_.end() || jt != o.terms_.end()) {
        if (jt == o.terms_.end() || (it != terms_.end() && it->idx < jt->idx)) {
            out.terms_.push_back(*it++);
        } else if (it == terms_.end() || jt->idx < it->idx) {
            out.terms_.push_back(*jt++);
        } else {
            Rational c = it->c + jt->c;
            if (!g2def::is_zero(c)) out.terms_.push_back({it->idx, c});
            ++it;
            ++jt;
        }
    }
    return out;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    // Accumulate into the full 16-slot coefficient grid, then compress.
    std::array<Rational, 16> acc;
    for (const Term& s : terms_) {
        for (const Term& t : o.terms_) {
            unsigned m1 = s.idx & 7u, m2 = t.idx & 7u;
            bool im1 = s.idx & 8u, im2 = t.idx & 8u;
            unsigned idx = (m1 ^ m2) | ((im1 != im2) ? 8u : 0u);
            Rational c = s.c * t.c * common_prime_product(m1, m2);
            if (im1 && im2) c = -c; // i² = −1
            acc[idx] += c;
        }
    }
    FieldElem out;
    for (unsigned idx = 0; idx < 16; ++idx)
        if (!g2def::is_zero(acc[idx]))
            out.terms_.push_back({static_cast<std::uint8_t>(idx), acc[idx]});
    return out;
}

FieldElem FieldElem::conj_i() const {
    FieldElem a(*this);
    for (Term& t : a.terms_)
        if (t.idx & 8u) t.c = -t.c;
    return a;
}

FieldElem FieldElem::conj_sqrt(unsigned bit) const {
    require(bit < 3, "conj_sqrt bit out of range");
    FieldElem a(*this);
    for (Term& t : a.terms_)
        if (t.idx & (1u << bit)) t.c = -t.c;
    return a;
}

FieldElem FieldElem::real_part() const {
    FieldElem a;
    for (const Term& t : terms_)
        if (!(t.idx & 8u)) a.terms_.push_back(t);
    return a;
}

FieldElem FieldElem::imag_part() const {
    FieldElem a;
    for (const Term& t : terms_)
        if (t.idx & 8u) a.terms_.push_back({static_cast<std::uint8_t>(t.idx & 7u), t.c});
    return a;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw division_by_zero();
    // num/den accumulator: after conjugating over i the denominator has no i
    // terms; each √p conjugation then clears that radical bit, because each
    // step multiplies the denominator by its own conjugate.
    FieldElem num(1), den(*this);
    FieldElem c = den.conj_i();
    num = num * c;
    den = den * c;
    for (unsigned bit = 0; bit < 3; ++bit) {
        c = den.conj_sqrt(bit);
        num = num * c;
        den = den * c;
    }
    std::optional<Rational> d = den.as_rational();
    require(d.has_value() && !g2def::is_zero(*d),
            "conjugation tower did not rationalize the denominator");
    return num * FieldElem(Rational(1) / *d);
}

std::complex<double> FieldElem::approx() const {
    std::complex<double> out(0.0, 0.0);
    for (const Term& t : terms_) {
        double v = t.c.get_d() * std::sqrt(static_cast<double>(kRadicand[t.idx & 7u]));
        if (t.idx & 8u)
            out += std::complex<double>(0.0, v);
        else
            out += std::complex<double>(v, 0.0);
    }
    return out;
}

std::string FieldElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (unsigned imag = 0; imag < 2; ++imag) {
        for (unsigned mask : kPrintOrder) {
            unsigned idx = mask | (imag ? 8u : 0u);
            Rational c = coeff(idx);
            if (g2def::is_zero(c)) continue;
            if (!first) os << " + ";
            first = false;
            if (imag) os << "i*";
            os << g2def::to_string(c);
            if (mask != 0) os << "*r" << kRadicand[mask];
        }
    }
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

unsigned mask_of_radicand_token(const std::string& tok) {
    for (unsigned m = 1; m < 8; ++m)
        if (tok == "r" + std::to_string(kRadicand[m])) return m;
    throw parse_error("unknown radical token: '" + tok + "'");
}

// One term: (i*)? <rat> (*rN)?  |  (i*)? rN   (bare radical, coefficient 1)
FieldElem parse_term(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw parse_error("empty term in field element");
    bool imag = false;
    if (s.rfind("i*", 0) == 0) {
        imag = true;
        s = trim(s.substr(2));
    } else if (s == "i") {
        return FieldElem::imaginary_unit();
    }
    Rational c = make_rational(1);
    unsigned mask = 0;
    std::size_t star = s.find('*');
    if (star == std::string::npos) {
        if (!s.empty() && s[0] == 'r')
            mask = mask_of_radicand_token(s);
        else
            c = parse_rational(s);
    } else {
        c = parse_rational(trim(s.substr(0, star)));
        mask = mask_of_radicand_token(trim(s.substr(star + 1)));
    }
    FieldElem out = FieldElem(c) * FieldElem::radical(mask);
    if (imag) out = out * FieldElem::imaginary_unit();
    return out;
}

} // namespace

FieldElem FieldElem::parse(const std::string& s) {
    std::string body = trim(s);
    if (body.empty()) throw parse_error("empty field element");
    if (body == "0") return FieldElem();
    FieldElem out;
    std::size_t pos = 0;
    while (true) {
        std::size_t plus = body.find('+', pos);
        std::string piece =
            (plus == std::string::npos) ? body.substr(pos) : body.substr(pos, plus - pos);
        out += parse_term(piece);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return out;
}

std::optional<FieldElem> sqrt_of_rational(const Rational& r) {
    if (g2def::is_zero(r)) return FieldElem(0);
    if (sgn(r) < 0) return std::nullopt;
    // √(p/q) = √(p·q)/q; factor out squares of 2, 3, 5 from v = p·q.
    mpz_class v = r.get_num() * r.get_den();
    mpz_class s = 1;
    unsigned mask = 0;
    static constexpr std::array<int, 3> primes = {2, 3, 5};
    for (unsigned b = 0; b < 3; ++b) {
        int count = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), primes[b])) {
            v /= primes[b];
            ++count;
        }
        for (int k = 0; k < count / 2; ++k) s *= primes[b];
        if (count % 2) mask |= 1u << b;
    }
    // The 2-3-5-free remainder must itself be a perfect square.
    if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    Rational coeff(s * root, r.get_den());
    coeff.canonicalize();
    return FieldElem(coeff) * FieldElem::radical(mask);
}

} // namespace g2def
