#include "g2def/space.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "g2def/errors.hpp"
#include "g2def/g2.hpp"

namespace g2def {

namespace {

// Columns of the combined h ∪ m basis, for splitting g-vectors.
FieldMatrix split_columns(const ReductiveSpace& s) {
    int n = s.g.dim();
    std::size_t d = s.h_basis.size() + s.m_frame.size();
    FieldMatrix M(n, d);
    for (std::size_t j = 0; j < s.h_basis.size(); ++j) {
        require(static_cast<int>(s.h_basis[j].size()) == n, "h basis vector of wrong length");
        for (int i = 0; i < n; ++i) M.at(i, j) = s.h_basis[j][i];
    }
    for (std::size_t j = 0; j < s.m_frame.size(); ++j) {
        require(static_cast<int>(s.m_frame[j].size()) == n, "m frame vector of wrong length");
        for (int i = 0; i < n; ++i) M.at(i, s.h_basis.size() + j) = s.m_frame[j][i];
    }
    return M;
}

} // namespace

FieldElem ReductiveSpace::metric(const FieldVector& X, const FieldVector& Y) const {
    return -(FieldElem(c2) * g.killing(X, Y));
}

void verify_space(const ReductiveSpace& s) {
    s.g.check_jacobi();
    require(s.m_frame.size() == 7, "the frame of m must consist of 7 vectors");
    require(s.h_basis.size() + 7 == static_cast<std::size_t>(s.g.dim()),
            "h basis and m frame together must have dim(g) vectors");
    Coordinatizer both(split_columns(s)); // throws when h ∪ m is not a basis

    std::size_t nh = s.h_basis.size();
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = a + 1; b < nh; ++b) {
            FieldVector v = s.g.bracket(s.h_basis[a], s.h_basis[b]);
            FieldVector x = both.coords(v);
            for (std::size_t t = nh; t < x.size(); ++t)
                require(x[t].is_zero(), "h is not a subalgebra: [h,h] leaves h");
        }
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = 0; b < 7; ++b) {
            FieldVector v = s.g.bracket(s.h_basis[a], s.m_frame[b]);
            FieldVector x = both.coords(v);
            for (std::size_t t = 0; t < nh; ++t)
                require(x[t].is_zero(), "the split is not reductive: [h,m] leaves m");
        }
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = 0; b < 7; ++b)
            require(s.g.killing(s.h_basis[a], s.m_frame[b]).is_zero(),
                    "h and m are not orthogonal for the Killing form");
    for (std::size_t a = 0; a < 7; ++a)
        for (std::size_t b = a; b < 7; ++b) {
            FieldElem want(a == b ? 1 : 0);
            require(s.metric(s.m_frame[a], s.m_frame[b]) == want,
                    "the frame is not orthonormal for -c^2 B");
        }
    require(sgn(s.c2) > 0, "c^2 must be positive");
    require(s.orientation == 1 || s.orientation == -1, "orientation must be +1 or -1");
}

KForm torsion_form(const ReductiveSpace& s) {
    require(s.m_frame.size() == 7, "the frame of m must consist of 7 vectors");
    int n = s.g.dim();
    Coordinatizer both(split_columns(s));
    std::size_t nh = s.h_basis.size();

    // F(i,j,k) = -<[e_i,e_j]_m, e_k> for i < j; antisymmetry in (i,j) is
    // automatic, so total antisymmetry reduces to the checks below.
    std::vector<std::vector<FieldVector>> mpart(7, std::vector<FieldVector>(7));
    auto F = [&](int i, int j, int k) { return -s.metric(mpart[i][j], s.m_frame[k]); };
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            FieldVector v = s.g.bracket(s.m_frame[i], s.m_frame[j]);
            FieldVector x = both.coords(v);
            FieldVector m(n);
            for (std::size_t t = 0; t < 7; ++t)
                if (!x[nh + t].is_zero()) m = m + x[nh + t] * s.m_frame[t];
            mpart[i][j] = std::move(m);
        }
    KForm torsion(7, 3);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            require(F(i, j, i).is_zero() && F(i, j, j).is_zero(),
                    "torsion is not totally skew: the split is not naturally reductive "
                    "for this frame and metric");
            for (int k = j + 1; k < 7; ++k) {
                FieldElem t = F(i, j, k);
                require(t == -F(i, k, j) && t == F(j, k, i),
                        "torsion is not totally skew: the split is not naturally reductive "
                        "for this frame and metric");
                if (!t.is_zero()) torsion.add_term({i + 1, j + 1, k + 1}, t);
            }
        }
    return torsion;
}

NearlyParallelData nearly_parallel_data(const ReductiveSpace& s) {
    KForm torsion = torsion_form(s);
    require(!torsion.is_zero(), "not nearly parallel: the torsion form vanishes");

    require(sgn(s.c2) > 0, "c^2 must be positive");
    Rational t2 = make_rational(6, 5) / s.c2;
    auto root = sqrt_of_rational(t2);
    require(root.has_value(),
            "not nearly parallel: tau0^2 = 6/(5c^2) has no square root in the "
            "coefficient field");
    NearlyParallelData out;
    out.tau0 = -*root;
    out.sigma_o = torsion * (FieldElem(-6) * out.tau0.inv());
    require(inner(out.sigma_o, out.sigma_o) == FieldElem(7),
            "not nearly parallel: |sigma_o|^2 differs from 7");
    require(induces_metric(out.sigma_o, s.orientation),
            "not nearly parallel: sigma_o does not induce the metric and orientation");
    out.scal = FieldElem(Rational(63) / (20 * s.c2));
    FieldElem trace_formula =
        FieldElem(make_rational(-3, 2)) * inner(torsion, torsion) +
        FieldElem(Rational(7) / (2 * s.c2));
    require(out.scal == trace_formula,
            "not nearly parallel: scalar curvature fails the trace formula");
    return out;
}

KForm isotropy_two_form(const ReductiveSpace& s, const FieldVector& X) {
    require(s.m_frame.size() == 7, "the frame of m must consist of 7 vectors");
    if (!s.h_basis.empty()) {
        FieldMatrix H(s.g.dim(), s.h_basis.size());
        for (std::size_t j = 0; j < s.h_basis.size(); ++j)
            for (int i = 0; i < s.g.dim(); ++i) H.at(i, j) = s.h_basis[j][i];
        require(Coordinatizer(H).in_span(X), "isotropy vector is not in h");
    } else {
        require(is_zero(X), "isotropy vector is not in h");
    }

    FieldMatrix A(7, 7);
    for (int i = 0; i < 7; ++i) {
        FieldVector v = s.g.bracket(X, s.m_frame[i]);
        for (int j = 0; j < 7; ++j) A.at(i, j) = s.metric(v, s.m_frame[j]);
    }
    KForm alpha(7, 2);
    for (int i = 0; i < 7; ++i) {
        require(A.at(i, i).is_zero(), "isotropy action is not skew on the frame");
        for (int j = i + 1; j < 7; ++j) {
            require(A.at(i, j) == -A.at(j, i), "isotropy action is not skew on the frame");
            if (!A.at(i, j).is_zero()) alpha.add_term({i + 1, j + 1}, A.at(i, j));
        }
    }
    return alpha;
}

KForm isotropy_action(const ReductiveSpace& s, const FieldVector& X, const KForm& w) {
    require(w.n() == 7, "isotropy acts on forms over the 7-dimensional frame");
    return two_form_action(isotropy_two_form(s, X), w);
}

namespace {

using nlohmann::ordered_json;

ReductiveSpace space_from_parsed(const ordered_json& j) {
    try {
        ReductiveSpace s;
        s.name = j.at("name").get<std::string>();
        int dim = j.at("dim").get<int>();
        std::vector<StructEntry> entries;
        for (const auto& row : j.at("structure_constants")) {
            if (!row.is_array() || row.size() != 4)
                throw parse_error("structure constant rows must be [i, j, k, coefficient]");
            entries.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                               FieldElem::parse(row[3].get<std::string>())});
        }
        s.g = LieAlgebra(dim, entries);
        auto read_vectors = [&](const char* key) {
            std::vector<FieldVector> out;
            for (const auto& row : j.at(key)) {
                FieldVector v;
                for (const auto& entry : row) v.push_back(FieldElem::parse(entry.get<std::string>()));
                if (static_cast<int>(v.size()) != dim)
                    throw parse_error(std::string(key) + " vectors must have dim coordinates");
                out.push_back(std::move(v));
            }
            return out;
        };
        s.h_basis = read_vectors("h_basis");
        s.m_frame = read_vectors("m_frame");
        s.c2 = parse_rational(j.at("c2").get<std::string>());
        s.orientation = j.at("orientation").get<int>();
        verify_space(s);
        return s;
    } catch (const ordered_json::exception& e) {
        throw parse_error(std::string("malformed space description: ") + e.what());
    }
}

} // namespace

ReductiveSpace space_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("space description is not valid JSON");
    return space_from_parsed(j);
}

std::string space_to_json(const ReductiveSpace& s) {
    ordered_json j;
    j["name"] = s.name;
    j["dim"] = s.g.dim();
    ordered_json constants = ordered_json::array();
    for (const auto& e : s.g.sparse_constants())
        constants.push_back({e.i, e.j, e.k, e.c.str()});
    j["structure_constants"] = std::move(constants);
    auto write_vectors = [](const std::vector<FieldVector>& vs) {
        ordered_json rows = ordered_json::array();
        for (const auto& v : vs) {
            ordered_json row = ordered_json::array();
            for (const auto& x : v) row.push_back(x.str());
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["h_basis"] = write_vectors(s.h_basis);
    j["m_frame"] = write_vectors(s.m_frame);
    j["c2"] = to_string(s.c2);
    j["orientation"] = s.orientation;
    return j.dump(2) + "\n";
}

ReductiveSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open space file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return space_from_json(buf.str());
}

} // namespace g2def
