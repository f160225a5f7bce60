#include "g2def/kform.hpp"

#include <algorithm>
#include <sstream>

#include "g2def/errors.hpp"

namespace g2def {

namespace {

// Sort idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t a = 0; a + 1 < idx.size(); ++a)
        for (std::size_t b = 0; b + 1 < idx.size() - a; ++b)
            if (idx[b] > idx[b + 1]) {
                std::swap(idx[b], idx[b + 1]);
                sign = -sign;
            }
    for (std::size_t a = 0; a + 1 < idx.size(); ++a)
        if (idx[a] == idx[a + 1]) return 0;
    return sign;
}

} // namespace

std::vector<MultiIndex> all_multi_indices(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    MultiIndex cur(k);
    // Lexicographic enumeration of increasing k-tuples.
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - pos - 1); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

KForm::KForm(int n, int k) : n_(n), k_(k) {
    require(n >= 0 && k >= 0, "negative form dimensions");
}

KForm KForm::monomial(int n, std::vector<int> idx, const FieldElem& c) {
    KForm w(n, static_cast<int>(idx.size()));
    w.add_term(std::move(idx), c);
    return w;
}

FieldElem KForm::coeff(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? FieldElem(0) : it->second;
}

void KForm::add_term(std::vector<int> idx, const FieldElem& c) {
    require(static_cast<int>(idx.size()) == k_, "term degree mismatch");
    for (int v : idx) require(v >= 1 && v <= n_, "frame index out of range");
    if (c.is_zero()) return;
    int sign = sort_sign(idx);
    if (sign == 0) return;
    FieldElem add = (sign == 1) ? c : -c;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(std::move(idx), add);
    } else {
        it->second += add;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KForm KForm::operator-() const {
    KForm w(n_, k_);
    for (const auto& [idx, c] : terms_) w.terms_.emplace(idx, -c);
    return w;
}

KForm KForm::operator+(const KForm& o) const {
    require(n_ == o.n_ && k_ == o.k_, "form shape mismatch in +");
    KForm w(*this);
    for (const auto& [idx, c] : o.terms_) {
        auto it = w.terms_.find(idx);
        if (it == w.terms_.end()) {
            w.terms_.emplace(idx, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) w.terms_.erase(it);
        }
    }
    return w;
}

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::operator*(const FieldElem& s) const {
    KForm w(n_, k_);
    if (s.is_zero()) return w;
    for (const auto& [idx, c] : terms_) w.terms_.emplace(idx, c * s);
    return w;
}

KForm wedge(const KForm& a, const KForm& b) {
    require(a.n() == b.n(), "form dimension mismatch in wedge");
    KForm w(a.n(), a.degree() + b.degree());
    if (w.degree() > a.n()) return w; // no monomials of this degree
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<int> idx(ia);
            idx.insert(idx.end(), ib.begin(), ib.end());
            w.add_term(std::move(idx), ca * cb);
        }
    return w;
}

KForm contract_basis(int i, const KForm& w) {
    require(w.degree() >= 1, "contraction of a 0-form");
    KForm out(w.n(), w.degree() - 1);
    for (const auto& [idx, c] : w.terms()) {
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (idx[t] != i) continue;
            // Moving e_i to the front across t earlier slots gives (−1)^t.
            MultiIndex rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t u = 0; u < idx.size(); ++u)
                if (u != t) rest.push_back(idx[u]);
            out.add_term(std::move(rest), (t % 2 == 0) ? c : -c);
            break; // indices are strictly increasing: i occurs at most once
        }
    }
    return out;
}

KForm contract(const FieldVector& X, const KForm& w) {
    require(static_cast<int>(X.size()) == w.n(), "vector/form dimension mismatch");
    KForm out(w.n(), w.degree() - 1);
    for (int i = 1; i <= w.n(); ++i)
        if (!X[i - 1].is_zero()) out += contract_basis(i, w) * X[i - 1];
    return out;
}

KForm hodge(const KForm& w, int orientation) {
    require(orientation == 1 || orientation == -1, "orientation must be ±1");
    KForm out(w.n(), w.n() - w.degree());
    for (const auto& [idx, c] : w.terms()) {
        MultiIndex comp;
        comp.reserve(w.n() - idx.size());
        std::size_t t = 0;
        for (int v = 1; v <= w.n(); ++v) {
            if (t < idx.size() && idx[t] == v)
                ++t;
            else
                comp.push_back(v);
        }
        // Sign of the permutation (I, I^c) of (1..n): count inversions
        // between the two blocks (each block is already increasing).
        long inversions = 0;
        for (int a : idx)
            for (int b : comp)
                if (a > b) ++inversions;
        FieldElem coeff = (inversions % 2 == 0) ? c : -c;
        if (orientation == -1) coeff = -coeff;
        out.add_term(std::move(comp), coeff);
    }
    return out;
}

FieldElem inner(const KForm& a, const KForm& b) {
    require(a.n() == b.n() && a.degree() == b.degree(), "form shape mismatch in inner");
    FieldElem s;
    for (const auto& [idx, c] : a.terms()) {
        FieldElem cb = b.coeff(idx);
        if (!cb.is_zero()) s += c * cb;
    }
    return s;
}

KForm one_form(const FieldVector& X, int n) {
    require(static_cast<int>(X.size()) == n, "vector length mismatch");
    KForm w(n, 1);
    for (int i = 1; i <= n; ++i) w.add_term({i}, X[i - 1]);
    return w;
}

FieldVector vector_of(const KForm& w) {
    require(w.degree() == 1, "vector_of expects a 1-form");
    FieldVector X(w.n());
    for (const auto& [idx, c] : w.terms()) X[idx[0] - 1] = c;
    return X;
}

FormValuedCovector FormValuedCovector::zero(int n, int s) {
    FormValuedCovector F;
    F.components.assign(n, KForm(n, s));
    return F;
}

KForm eps(const FormValuedCovector& F) {
    require(!F.components.empty(), "empty form-valued covector");
    int n = F.components[0].n(), s = F.components[0].degree();
    require(static_cast<int>(F.components.size()) == n, "covector needs n components");
    KForm out(n, s + 1);
    for (int i = 1; i <= n; ++i) {
        require(F.components[i - 1].n() == n && F.components[i - 1].degree() == s,
                "covector components must share shape");
        out += wedge(KForm::monomial(n, {i}), F.components[i - 1]);
    }
    return out;
}

FieldVector kform_coords(const KForm& w, const std::vector<MultiIndex>& index_list) {
    FieldVector out(index_list.size());
    std::size_t found = 0;
    for (std::size_t a = 0; a < index_list.size(); ++a) {
        out[a] = w.coeff(index_list[a]);
        if (!out[a].is_zero()) ++found;
    }
    require(found == w.terms().size(), "form not supported on the given monomial list");
    return out;
}

KForm kform_from_coords(const FieldVector& coords, const std::vector<MultiIndex>& index_list,
                        int n, int k) {
    require(coords.size() == index_list.size(), "coordinate/index list length mismatch");
    KForm w(n, k);
    for (std::size_t a = 0; a < coords.size(); ++a) w.add_term(index_list[a], coords[a]);
    return w;
}

std::string KForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        if (c.terms().size() > 1)
            os << "(" << cs << ")";
        else
            os << cs;
        os << "*e";
        for (int v : idx) os << v;
    }
    return os.str();
}

KForm KForm::parse(const std::string& s, int n, int k) {
    require(n <= 9, "text encoding uses single-digit indices");
    KForm w(n, k);
    std::string body = s;
    if (body == "0" || body.empty()) return w;
    std::size_t pos = 0;
    while (pos < body.size()) {
        // Split on '+' at parenthesis depth 0.
        int depth = 0;
        std::size_t end = pos;
        while (end < body.size() && !(body[end] == '+' && depth == 0)) {
            if (body[end] == '(') ++depth;
            if (body[end] == ')') --depth;
            ++end;
        }
        std::string term = body.substr(pos, end - pos);
        std::size_t star = term.rfind("*e");
        if (star == std::string::npos) throw parse_error("k-form term lacks '*e': '" + term + "'");
        std::string cs = term.substr(0, star);
        // Trim blanks and optional parentheses around the coefficient.
        auto b = cs.find_first_not_of(" \t");
        auto e = cs.find_last_not_of(" \t");
        if (b == std::string::npos) throw parse_error("empty coefficient in k-form term");
        cs = cs.substr(b, e - b + 1);
        if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')')
            cs = cs.substr(1, cs.size() - 2);
        std::vector<int> idx;
        for (std::size_t q = star + 2; q < term.size(); ++q) {
            char ch = term[q];
            if (ch == ' ' || ch == '\t') continue;
            if (ch < '1' || ch > '9') throw parse_error("bad frame index in k-form term");
            idx.push_back(ch - '0');
        }
        w.add_term(std::move(idx), FieldElem::parse(cs));
        pos = (end < body.size()) ? end + 1 : end;
    }
    return w;
}

} // namespace g2def
