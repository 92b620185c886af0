#pragma once
// Group-law models in exponential coordinates for the solvable catalog entries.
//
// Every constructor-backed solvable catalog algebra L is realized as a simply
// connected group in coordinates of the second kind:
//
//     g = exp(v) * exp(t_1 u_1) * ... * exp(t_k u_k),
//
// where v ranges over a nilpotent ideal N of nilpotency class <= 3 spanned by
// standard basis slots, and u_1..u_k span an abelian complement (k <= 2).  In
// these coordinates the group law is
//
//     (v, t) (v', t') = ( bch3(v, Phi(t) v'), t + t' ),
//     Phi(t) = exp(t_1 D_1 + ... + t_k D_k),   D_a = ad(u_a)|N,
//
// where bch3 is the Baker-Campbell-Hausdorff series truncated after triple
// brackets.  The truncation is exact: every higher term is an iterated
// bracket of length >= 4 and vanishes when N has class <= 3.  Phi(t) is an
// automorphism of N (the D_a are commuting derivations), so the law above is
// the genuine semidirect-product multiplication and is associative.
//
// The split N + torus is derived, not assumed: construction tries k = 0
// (nilpotent of class <= 3), then k = 1 with N = first n-1 slots, then k = 2,
// and verifies closure, the class bound, the ideal property, and that the
// complement is abelian.  Models whose torus actions are all nilpotent have a
// polynomial group law with rational coefficients and additionally support an
// exact-rational element type; for the rest, Phi is evaluated numerically by
// a scaling-and-squaring diagonal Pade approximant with relative accuracy far
// below 1e-13 at the scales used here.
//
// A dedicated 3-dimensional model "heis3" with bracket [e1,e2] = 2 e3 is
// included alongside the catalog; its law in exponential coordinates is the
// classical (x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y' - y x').

#include <geo5/atlas.hpp>
#include <geo5/error.hpp>
#include <geo5/liealg.hpp>
#include <geo5/mat.hpp>
#include <geo5/rat.hpp>

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace geo5 {

// A group element: model id plus coordinates in the model's basis order.
struct GroupElement {
    std::string model;
    std::vector<double> coords;
    bool operator==(const GroupElement&) const = default;
};

// Exact twin of GroupElement for models whose law is polynomial over Q.
struct GroupElementQ {
    std::string model;
    std::vector<Rat> coords;
    bool operator==(const GroupElementQ&) const = default;
};

struct GroupModel {
    std::string id;    // stable key ("heis3" or a catalog id)
    std::string name;  // display label
    LieAlgebra algebra{1};  // placeholder; always replaced at construction
    std::vector<std::size_t> ideal;  // coordinate slots of the nilpotent ideal N
    std::vector<std::size_t> torus;  // coordinate slots of the abelian complement
    bool exact = false;              // group law is polynomial with rational coefficients
    std::vector<Mat> actions;        // D_a = ad(u_a)|N in the ideal slots, rational
    std::vector<std::vector<Vec>> nbracket;  // bracket tensor of N in the ideal slots
    // Double-precision copies of the tensors for the floating-point law.
    std::vector<std::vector<std::vector<double>>> actions_d;
    std::vector<std::vector<std::vector<double>>> nbracket_d;

    std::size_t dim() const { return algebra.dim(); }
};

namespace groupdetail {

inline Vec basis_vec(std::size_t n, std::size_t k) {
    Vec v(n, Rat(0));
    v[k] = Rat(1);
    return v;
}

// Nilpotency class of the subalgebra spanned by the given basis slots, capped
// at `cap` (returns cap + 1 when the lower central series has not died yet).
inline int subalgebra_class(const LieAlgebra& L, const std::vector<std::size_t>& slots, int cap) {
    const std::size_t n = L.dim();
    std::vector<Vec> gens;
    gens.reserve(slots.size());
    for (std::size_t s : slots) gens.push_back(basis_vec(n, s));
    const Subspace N = Subspace::span(gens, n);
    Subspace cur = N;
    int cls = 1;
    while (cls <= cap) {
        cur = L.bracket_span(N, cur);
        if (cur.dim() == 0) return cls;
        ++cls;
    }
    return cap + 1;
}

// True when every bracket among / onto the candidate ideal stays inside it:
// [N, N] and [u_a, N] supported on the ideal slots, torus pairwise commuting.
inline bool split_is_valid(const LieAlgebra& L, const std::vector<std::size_t>& ideal,
                           const std::vector<std::size_t>& torus) {
    const std::size_t n = L.dim();
    std::vector<char> in_ideal(n, 0);
    for (std::size_t s : ideal) in_ideal[s] = 1;
    auto supported = [&](const Vec& v) {
        for (std::size_t k = 0; k < n; ++k)
            if (!in_ideal[k] && !v[k].is_zero()) return false;
        return true;
    };
    for (std::size_t i : ideal)
        for (std::size_t j : ideal)
            if (!supported(L.bracket(basis_vec(n, i), basis_vec(n, j)))) return false;
    for (std::size_t a : torus) {
        for (std::size_t j : ideal)
            if (!supported(L.bracket(basis_vec(n, a), basis_vec(n, j)))) return false;
        for (std::size_t b : torus)
            if (!vec_is_zero(L.bracket(basis_vec(n, a), basis_vec(n, b)))) return false;
    }
    if (subalgebra_class(L, ideal, 3) > 3) return false;
    return true;
}

inline bool mat_is_nilpotent(const Mat& a) {
    Mat pw = a;
    for (std::size_t s = 1; s < a.rows(); ++s) {
        if (pw.is_zero()) return true;
        pw = pw * a;
    }
    return pw.is_zero();
}

// Populate tensors and the exact flag once ideal/torus slots are chosen.
inline void finish_model(GroupModel& m) {
    const LieAlgebra& L = m.algebra;
    const std::size_t n = L.dim();
    const std::size_t p = m.ideal.size();

    m.nbracket.assign(p, std::vector<Vec>(p, Vec(p, Rat(0))));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            Vec v = L.bracket(basis_vec(n, m.ideal[i]), basis_vec(n, m.ideal[j]));
            for (std::size_t k = 0; k < p; ++k) m.nbracket[i][j][k] = v[m.ideal[k]];
        }

    m.actions.clear();
    for (std::size_t a : m.torus) {
        Mat d(p, p);
        for (std::size_t j = 0; j < p; ++j) {
            Vec v = L.bracket(basis_vec(n, a), basis_vec(n, m.ideal[j]));
            for (std::size_t i = 0; i < p; ++i) d.at(i, j) = v[m.ideal[i]];
        }
        m.actions.push_back(std::move(d));
    }
    // Commuting actions are forced by an abelian torus, but verify anyway.
    for (std::size_t a = 0; a < m.actions.size(); ++a)
        for (std::size_t b = a + 1; b < m.actions.size(); ++b)
            if (!(m.actions[a] * m.actions[b] - m.actions[b] * m.actions[a]).is_zero())
                throw Error("internal error: torus actions of model '" + m.id + "' do not commute");

    m.exact = true;
    for (const Mat& d : m.actions)
        if (!mat_is_nilpotent(d)) m.exact = false;

    m.nbracket_d.assign(p, std::vector<std::vector<double>>(p, std::vector<double>(p, 0.0)));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k)
                m.nbracket_d[i][j][k] = m.nbracket[i][j][k].to_double();
    m.actions_d.clear();
    for (const Mat& d : m.actions) {
        std::vector<std::vector<double>> dd(p, std::vector<double>(p, 0.0));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) dd[i][j] = d.at(i, j).to_double();
        m.actions_d.push_back(std::move(dd));
    }
}

inline GroupModel make_model(std::string id, std::string name, LieAlgebra L) {
    GroupModel m;
    m.id = std::move(id);
    m.name = std::move(name);
    m.algebra = std::move(L);
    const std::size_t n = m.algebra.dim();

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;

    bool placed = false;
    for (std::size_t k = 0; !placed && k <= 2 && k < n; ++k) {
        std::vector<std::size_t> ideal(all.begin(), all.end() - static_cast<long>(k));
        std::vector<std::size_t> torus(all.end() - static_cast<long>(k), all.end());
        if (k == 0 && !m.algebra.is_nilpotent()) continue;
        if (!split_is_valid(m.algebra, ideal, torus)) continue;
        m.ideal = std::move(ideal);
        m.torus = std::move(torus);
        placed = true;
    }
    if (!placed)
        throw NotAGroup("no exponential-coordinate model of the supported shape for '" + m.id + "'");
    finish_model(m);
    return m;
}

inline const std::map<std::string, GroupModel>& registry() {
    static const std::map<std::string, GroupModel> reg = [] {
        std::map<std::string, GroupModel> r;
        {
            LieAlgebra h(3);
            h.set_bracket_term(0, 1, 2, Rat(2));
            r.emplace("heis3", make_model("heis3", "Heis_3", std::move(h)));
        }
        for (const AtlasEntry& e : atlas()) {
            if (!e.has_constructor) continue;
            LieAlgebra L = build_algebra(e.id);
            if (!L.is_solvable()) continue;
            r.emplace(e.id, make_model(e.id, e.name, std::move(L)));
        }
        return r;
    }();
    return reg;
}

// ---- double-precision linear algebra for the numeric action --------------

using DMat = std::vector<std::vector<double>>;

inline DMat dident(std::size_t n) {
    DMat a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1.0;
    return a;
}

inline DMat dmul(const DMat& a, const DMat& b) {
    const std::size_t n = a.size();
    DMat c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double s = a[i][k];
            if (s == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += s * b[k][j];
        }
    return c;
}

inline std::vector<double> dapply(const DMat& a, const std::vector<double>& v) {
    const std::size_t n = a.size();
    std::vector<double> r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline double norm_inf(const DMat& a) {
    double m = 0.0;
    for (const auto& row : a) {
        double s = 0.0;
        for (double x : row) s += std::fabs(x);
        m = std::max(m, s);
    }
    return m;
}

// Solve a x = b (b a matrix) by Gaussian elimination with partial pivoting.
inline DMat dsolve(DMat a, DMat b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        if (a[piv][c] == 0.0) throw Error("internal error: singular Pade denominator");
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        const double d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            b[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0.0) continue;
            const double f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                b[r][j] -= f * b[c][j];
            }
        }
    }
    return b;
}

// Matrix exponential: scale so the norm is <= 1/2, apply the diagonal [6/6]
// Pade approximant, square back.  Truncation error below 1e-16 at that norm.
inline DMat expm(DMat a) {
    const std::size_t n = a.size();
    int s = 0;
    for (double nrm = norm_inf(a); nrm > 0.5; nrm *= 0.5) ++s;
    const double scale = std::ldexp(1.0, -s);
    for (auto& row : a)
        for (double& x : row) x *= scale;

    static const double c[7] = {1.0,        1.0 / 2.0,     5.0 / 44.0,    1.0 / 66.0,
                                1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};
    DMat pw = dident(n), p = dident(n), q = dident(n);
    double sgn = 1.0;
    for (int k = 1; k <= 6; ++k) {
        pw = dmul(pw, a);
        sgn = -sgn;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                p[i][j] += c[k] * pw[i][j];
                q[i][j] += c[k] * sgn * pw[i][j];
            }
    }
    DMat f = dsolve(q, p);
    for (int i = 0; i < s; ++i) f = dmul(f, f);
    return f;
}

// Phi(t) = exp(sum t_a D_a) over the rationals; requires nilpotent actions.
inline Mat phi_exact(const GroupModel& m, const std::vector<Rat>& t) {
    const std::size_t p = m.ideal.size();
    Mat a(p, p);
    for (std::size_t i = 0; i < m.actions.size(); ++i) a = a + t[i] * m.actions[i];
    Mat out = Mat::identity(p);
    Mat pw = Mat::identity(p);
    Rat fact(1);
    for (std::size_t s = 1; s <= p; ++s) {
        pw = a * pw;
        if (pw.is_zero()) break;
        fact = fact * Rat(static_cast<int>(s));
        out = out + (Rat(1) / fact) * pw;
    }
    if (!pw.is_zero())
        throw Error("internal error: exact group law requested for a non-nilpotent action");
    return out;
}

inline DMat phi_numeric(const GroupModel& m, const std::vector<double>& t) {
    const std::size_t p = m.ideal.size();
    DMat a(p, std::vector<double>(p, 0.0));
    for (std::size_t x = 0; x < m.actions_d.size(); ++x)
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) a[i][j] += t[x] * m.actions_d[x][i][j];
    return expm(std::move(a));
}

// Baker-Campbell-Hausdorff product truncated after triple brackets:
//   x . y = x + y + [x,y]/2 + [x,[x,y]]/12 - [y,[x,y]]/12,
// the exact group law when the ideal has nilpotency class <= 3.
inline Vec bch3(const GroupModel& m, const Vec& x, const Vec& y) {
    const std::size_t p = x.size();
    auto br = [&](const Vec& a, const Vec& b) {
        Vec out(p, Rat(0));
        for (std::size_t i = 0; i < p; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < p; ++j) {
                if (b[j].is_zero()) continue;
                const Rat f = a[i] * b[j];
                const Vec& c = m.nbracket[i][j];
                for (std::size_t k = 0; k < p; ++k)
                    if (!c[k].is_zero()) out[k] += f * c[k];
            }
        }
        return out;
    };
    const Vec xy = br(x, y);
    const Vec xxy = br(x, xy);
    const Vec yxy = br(y, xy);
    Vec z(p, Rat(0));
    for (std::size_t k = 0; k < p; ++k)
        z[k] = x[k] + y[k] + xy[k] / Rat(2) + xxy[k] / Rat(12) - yxy[k] / Rat(12);
    return z;
}

inline std::vector<double> bch3_d(const GroupModel& m, const std::vector<double>& x,
                                  const std::vector<double>& y) {
    const std::size_t p = x.size();
    auto br = [&](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> out(p, 0.0);
        for (std::size_t i = 0; i < p; ++i) {
            if (a[i] == 0.0) continue;
            for (std::size_t j = 0; j < p; ++j) {
                if (b[j] == 0.0) continue;
                const double f = a[i] * b[j];
                const auto& c = m.nbracket_d[i][j];
                for (std::size_t k = 0; k < p; ++k) out[k] += f * c[k];
            }
        }
        return out;
    };
    const std::vector<double> xy = br(x, y);
    const std::vector<double> xxy = br(x, xy);
    const std::vector<double> yxy = br(y, xy);
    std::vector<double> z(p, 0.0);
    for (std::size_t k = 0; k < p; ++k)
        z[k] = x[k] + y[k] + xy[k] / 2.0 + xxy[k] / 12.0 - yxy[k] / 12.0;
    return z;
}

template <typename T>
void split_coords(const GroupModel& m, const std::vector<T>& coords, std::vector<T>& v,
                  std::vector<T>& t) {
    v.resize(m.ideal.size());
    t.resize(m.torus.size());
    for (std::size_t i = 0; i < m.ideal.size(); ++i) v[i] = coords[m.ideal[i]];
    for (std::size_t a = 0; a < m.torus.size(); ++a) t[a] = coords[m.torus[a]];
}

template <typename T>
std::vector<T> join_coords(const GroupModel& m, const std::vector<T>& v, const std::vector<T>& t) {
    std::vector<T> coords(m.dim());
    for (std::size_t i = 0; i < m.ideal.size(); ++i) coords[m.ideal[i]] = v[i];
    for (std::size_t a = 0; a < m.torus.size(); ++a) coords[m.torus[a]] = t[a];
    return coords;
}

template <typename Element>
const GroupModel& checked_model(const Element& g);

}  // namespace groupdetail

// Look up a group model by catalog id or display name ("heis3" included).
inline const GroupModel& group_model(const std::string& label) {
    const auto& reg = groupdetail::registry();
    auto it = reg.find(label);
    if (it != reg.end()) return it->second;
    const AtlasEntry* e = nullptr;
    try {
        e = &atlas_entry(label);
    } catch (const std::exception&) {
        throw NotAGroup("unknown group model: " + label);
    }
    it = reg.find(e->id);
    if (it == reg.end()) {
        if (!e->has_constructor)
            throw NotAGroup("'" + e->name + "' carries no explicit construction to exponentiate");
        throw NotAGroup("'" + e->name + "' is not solvable; no exponential-coordinate model");
    }
    return it->second;
}

namespace groupdetail {

template <typename Element>
const GroupModel& checked_model(const Element& g) {
    const GroupModel& m = group_model(g.model);
    if (g.coords.size() != m.dim())
        throw ShapeMismatch("element of model '" + g.model + "' must have " +
                            std::to_string(m.dim()) + " coordinates");
    return m;
}

}  // namespace groupdetail

// Sorted ids of every available group model.
inline std::vector<std::string> group_model_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, m] : groupdetail::registry()) ids.push_back(id);
    return ids;
}

inline GroupElement identity_element(const std::string& label) {
    const GroupModel& m = group_model(label);
    return {m.id, std::vector<double>(m.dim(), 0.0)};
}

inline GroupElementQ identity_element_q(const std::string& label) {
    const GroupModel& m = group_model(label);
    if (!m.exact)
        throw Error("exact-rational elements exist only for polynomial models; '" + m.id +
                    "' needs the floating-point law");
    return {m.id, std::vector<Rat>(m.dim(), Rat(0))};
}

inline GroupElement make_element(const std::string& label, std::vector<double> coords) {
    const GroupModel& m = group_model(label);
    if (coords.size() != m.dim())
        throw ShapeMismatch("model '" + m.id + "' expects " + std::to_string(m.dim()) +
                            " coordinates");
    return {m.id, std::move(coords)};
}

inline GroupElementQ make_element_q(const std::string& label, std::vector<Rat> coords) {
    const GroupModel& m = group_model(label);
    if (!m.exact)
        throw Error("exact-rational elements exist only for polynomial models; '" + m.id +
                    "' needs the floating-point law");
    if (coords.size() != m.dim())
        throw ShapeMismatch("model '" + m.id + "' expects " + std::to_string(m.dim()) +
                            " coordinates");
    return {m.id, std::move(coords)};
}

inline GroupElement mul(const GroupElement& g, const GroupElement& h) {
    const GroupModel& m = groupdetail::checked_model(g);
    if (h.model != g.model)
        throw ModelMismatch("cannot multiply an element of model '" + g.model +
                            "' by an element of model '" + h.model + "'");
    if (h.coords.size() != m.dim())
        throw ShapeMismatch("element of model '" + h.model + "' must have " +
                            std::to_string(m.dim()) + " coordinates");
    std::vector<double> v1, t1, v2, t2;
    groupdetail::split_coords(m, g.coords, v1, t1);
    groupdetail::split_coords(m, h.coords, v2, t2);
    if (!m.torus.empty()) v2 = groupdetail::dapply(groupdetail::phi_numeric(m, t1), v2);
    std::vector<double> v = groupdetail::bch3_d(m, v1, v2);
    for (std::size_t a = 0; a < t1.size(); ++a) t1[a] += t2[a];
    return {m.id, groupdetail::join_coords(m, v, t1)};
}

inline GroupElement inv(const GroupElement& g) {
    const GroupModel& m = groupdetail::checked_model(g);
    std::vector<double> v, t;
    groupdetail::split_coords(m, g.coords, v, t);
    for (double& x : v) x = -x;
    for (double& x : t) x = -x;
    if (!m.torus.empty()) v = groupdetail::dapply(groupdetail::phi_numeric(m, t), v);
    return {m.id, groupdetail::join_coords(m, v, t)};
}

inline GroupElementQ mul(const GroupElementQ& g, const GroupElementQ& h) {
    const GroupModel& m = groupdetail::checked_model(g);
    if (!m.exact)
        throw Error("exact-rational multiplication exists only for polynomial models; '" + m.id +
                    "' needs the floating-point law");
    if (h.model != g.model)
        throw ModelMismatch("cannot multiply an element of model '" + g.model +
                            "' by an element of model '" + h.model + "'");
    if (h.coords.size() != m.dim())
        throw ShapeMismatch("element of model '" + h.model + "' must have " +
                            std::to_string(m.dim()) + " coordinates");
    std::vector<Rat> v1, t1, v2, t2;
    groupdetail::split_coords(m, g.coords, v1, t1);
    groupdetail::split_coords(m, h.coords, v2, t2);
    if (!m.torus.empty()) v2 = groupdetail::phi_exact(m, t1) * v2;
    Vec v = groupdetail::bch3(m, v1, v2);
    for (std::size_t a = 0; a < t1.size(); ++a) t1[a] += t2[a];
    return {m.id, groupdetail::join_coords(m, v, t1)};
}

inline GroupElementQ inv(const GroupElementQ& g) {
    const GroupModel& m = groupdetail::checked_model(g);
    if (!m.exact)
        throw Error("exact-rational inversion exists only for polynomial models; '" + m.id +
                    "' needs the floating-point law");
    std::vector<Rat> v, t;
    groupdetail::split_coords(m, g.coords, v, t);
    for (Rat& x : v) x = Rat(0) - x;
    for (Rat& x : t) x = Rat(0) - x;
    if (!m.torus.empty()) v = groupdetail::phi_exact(m, t) * v;
    return {m.id, groupdetail::join_coords(m, v, t)};
}

// Closed-form exponential for the Heisenberg models.  Model coordinates are
// exponential coordinates, so exp wraps an algebra vector as an element and
// log unwraps it; the content is the restriction to the two models where the
// classical closed form (exactness of bch at the second order) applies.
inline GroupElement heis_exp(const std::string& label, const std::vector<double>& x) {
    const GroupModel& m = group_model(label);
    if (m.id != "heis3" && m.id != "heis5")
        throw NotAGroup("closed-form exp/log is provided for the Heisenberg models only");
    if (x.size() != m.dim())
        throw ShapeMismatch("model '" + m.id + "' expects " + std::to_string(m.dim()) +
                            " coordinates");
    return {m.id, x};
}

inline std::vector<double> heis_log(const GroupElement& g) {
    const GroupModel& m = groupdetail::checked_model(g);
    if (m.id != "heis3" && m.id != "heis5")
        throw NotAGroup("closed-form exp/log is provided for the Heisenberg models only");
    return g.coords;
}

// Second-order finite-difference test that the group law differentiates to
// the bracket of L: for each basis pair, the commutator
//   C(h) = exp(h e_i) exp(h e_j) exp(-h e_i) exp(-h e_j)
// satisfies C(h) = h^2 [e_i, e_j] + O(h^3) in exponential coordinates, and
// the symmetrization (C(h) + C(-h)) / (2 h^2) cancels the cubic term.
// Returns the largest relative deviation from L's structure constants.
inline double commutator_derivative_check(const GroupModel& m, const LieAlgebra& L, double h) {
    if (L.dim() != m.dim())
        throw ShapeMismatch("algebra dimension does not match the model");
    if (h == 0.0) throw DegenerateInput("step size must be nonzero");
    const std::size_t n = m.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec b = L.bracket(groupdetail::basis_vec(n, i), groupdetail::basis_vec(n, j));
            double bmax = 0.0;
            for (const Rat& q : b) bmax = std::max(bmax, std::fabs(q.to_double()));
            const double denom = std::max(1.0, bmax);
            auto comm = [&](double s) {
                GroupElement gi{m.id, std::vector<double>(n, 0.0)};
                GroupElement gj{m.id, std::vector<double>(n, 0.0)};
                gi.coords[i] = s;
                gj.coords[j] = s;
                return mul(mul(mul(gi, gj), inv(gi)), inv(gj)).coords;
            };
            const std::vector<double> cp = comm(h);
            const std::vector<double> cm = comm(-h);
            for (std::size_t k = 0; k < n; ++k) {
                const double sym = (cp[k] + cm[k]) / (2.0 * h * h);
                worst = std::max(worst, std::fabs(sym - b[k].to_double()) / denom);
            }
        }
    return worst;
}

inline double commutator_derivative_check(const std::string& label, const LieAlgebra& L,
                                          double h) {
    return commutator_derivative_check(group_model(label), L, h);
}

}  // namespace geo5
