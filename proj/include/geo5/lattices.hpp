#pragma once
// Desk-scale lattice machinery for the solvable model geometries.
//
// Three tools:
//
//  * unit_cubic_check — gate for monic integer cubics whose companion matrix
//    is a unit acting on Z^3: constant term +-1, irreducible (no rational
//    root), squarefree, and totally real (Sturm count 3).  Every violated
//    invariant is reported by name.
//
//  * dirichlet_lattice — the unit-group construction of a lattice in
//    R^3 x| {xyz = 1}^0.  For an accepted cubic p with root lambda, the ring
//    Z[lambda] embeds in R^3 by the three real embeddings; the companion
//    matrix M is multiplication by lambda on the coefficient lattice Z^3, a
//    determinant +-1 integer matrix, and conjugation by the diagonal torus
//    element t(M) = (log|l_1|, log|l_2|, log|l_3|) realizes it.  The report
//    carries the generators (three translations, the columns of the
//    embedding matrix E, plus t(M)), the exact determinant, and numeric
//    verification: the conjugation relation diag(l) E = E M, the log-sum
//    constraint Sum log|l_i| = log|det M| = 0, and a discreteness proxy
//    (minimal displacement over all nonempty generator words of length <= 4
//    must clear a positive threshold).  The proxy is a finite check, not a
//    proof; the algebraic-integer structure is what guarantees discreteness.
//
//  * sol_family_model_check — exhaustive search for integer characteristic
//    polynomials (quartics x^4 - m x^3 + n x^2 - p x + 1, or cubics
//    x^3 - m x^2 + n x - 1) whose root data matches a normalized weight
//    target from the classifier, certifying that an R^4 x| R family member
//    (or the R^3 x| R block of a Sol^4-type product) admits an integer
//    lattice model.  Roots must be real, positive, and distinct
//    (Sturm-verified); the search is deterministic and lexicographic, so the
//    reported witness is canonical for the bound.

#include <geo5/error.hpp>
#include <geo5/mat.hpp>
#include <geo5/numroots.hpp>
#include <geo5/poly.hpp>
#include <geo5/rat.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace geo5 {

// ---------------------------------------------------------------------------
// Unit-cubic gate

struct UnitCubicCheck {
    Poly p;
    bool accepted = false;
    std::vector<std::string> failures;  // every violated invariant, by name
};

inline UnitCubicCheck unit_cubic_check(const Poly& p) {
    if (p.degree() != 3) throw DegenerateInput("unit check expects a cubic polynomial");
    UnitCubicCheck out{p, false, {}};
    bool integral = true;
    for (int k = 0; k <= 3; ++k)
        if (!p[static_cast<std::size_t>(k)].is_integer()) integral = false;
    if (!integral) out.failures.push_back("non-integer coefficients");
    if (!(p[3] == Rat(1))) out.failures.push_back("not monic");
    if (!(p[0] == Rat(1) || p[0] == Rat(-1))) out.failures.push_back("constant term not a unit");
    if (!rational_roots(p).empty()) out.failures.push_back("reducible");
    const Poly sf = squarefree_part(p);
    if (sf.degree() != p.degree()) out.failures.push_back("not squarefree");
    if (count_real_roots(sf) != 3) out.failures.push_back("not totally real");
    out.accepted = out.failures.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Dirichlet-unit lattice in R^3 x| {xyz = 1}^0

struct LatticeGenerator {
    std::string kind;                     // "translation" or "unit"
    std::array<double, 3> translation;    // R^3 part, embedding coordinates
    std::array<double, 3> log_torus;      // diagonal part (l_1, l_2, l_3), sum 0
};

struct LatticeReport {
    Poly p;
    Mat companion{3, 3};                  // exact integer matrix M
    Rat det;                              // exact determinant of M
    std::vector<double> eigenvalues;      // the three real embeddings, ascending
    std::vector<std::vector<double>> embedding;  // E with rows (1, l_i, l_i^2)
    double eigenvalue_product = 0.0;
    std::vector<double> log_moduli;       // t(M) = (log|l_1|, log|l_2|, log|l_3|)
    double log_sum = 0.0;
    double relation_residual = 0.0;       // max entry of diag(l) E - E M
    double condition_estimate = 0.0;      // inf-norm condition number of E
    int unit_power = 1;                   // least k with every eigenvalue of M^k positive
    std::vector<LatticeGenerator> generators;  // three translations + t(M)
    double min_word_displacement = 0.0;   // over nonempty words of length <= 4
    double discreteness_threshold = 0.0;
    bool discreteness_proxy = false;
};

namespace latdetail {

// Group law of R^3 x| diagonal torus in (translation, log-diagonal) pairs:
// (v, l)(v', l') = (v + diag(e^l) v', l + l').
struct Isom {
    std::array<double, 3> v{0, 0, 0};
    std::array<double, 3> l{0, 0, 0};
};

inline Isom compose(const Isom& a, const Isom& b) {
    Isom c;
    for (int i = 0; i < 3; ++i) {
        c.v[i] = a.v[i] + std::exp(a.l[i]) * b.v[i];
        c.l[i] = a.l[i] + b.l[i];
    }
    return c;
}

inline Isom invert(const Isom& a) {
    Isom c;
    for (int i = 0; i < 3; ++i) {
        c.l[i] = -a.l[i];
        c.v[i] = -std::exp(-a.l[i]) * a.v[i];
    }
    return c;
}

inline double displacement(const Isom& a) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) m = std::max({m, std::fabs(a.v[i]), std::fabs(a.l[i])});
    return m;
}

// Inf-norm condition estimate of a 3x3 matrix via the explicit inverse.
inline double condition3(const std::vector<std::vector<double>>& e) {
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return e[r0][c0] * e[r1][c1] - e[r0][c1] * e[r1][c0];
    };
    const double det = e[0][0] * minor2(1, 2, 1, 2) - e[0][1] * minor2(1, 2, 0, 2) +
                       e[0][2] * minor2(1, 2, 0, 1);
    if (det == 0.0) return std::numeric_limits<double>::infinity();
    std::array<std::array<double, 3>, 3> inv{};
    inv[0] = {minor2(1, 2, 1, 2) / det, -minor2(0, 2, 1, 2) / det, minor2(0, 1, 1, 2) / det};
    inv[1] = {-minor2(1, 2, 0, 2) / det, minor2(0, 2, 0, 2) / det, -minor2(0, 1, 0, 2) / det};
    inv[2] = {minor2(1, 2, 0, 1) / det, -minor2(0, 2, 0, 1) / det, minor2(0, 1, 0, 1) / det};
    auto norm_inf = [](const auto& m) {
        double w = 0.0;
        for (int i = 0; i < 3; ++i) {
            double s = 0.0;
            for (int j = 0; j < 3; ++j) s += std::fabs(m[i][j]);
            w = std::max(w, s);
        }
        return w;
    };
    return norm_inf(e) * norm_inf(inv);
}

}  // namespace latdetail

inline LatticeReport dirichlet_lattice(const Poly& p) {
    const UnitCubicCheck gate = unit_cubic_check(p);
    if (!gate.accepted) {
        std::string msg = "not a unit cubic:";
        for (const std::string& f : gate.failures) msg += " " + f + ";";
        msg.pop_back();
        throw DegenerateInput(msg);
    }

    LatticeReport rep;
    rep.p = p;

    // companion matrix in column convention — multiplication by lambda on the
    // basis (1, lambda, lambda^2): the last column holds minus the low coefficients
    Mat m(3, 3);
    m.at(1, 0) = Rat(1);
    m.at(2, 1) = Rat(1);
    for (int i = 0; i < 3; ++i) m.at(static_cast<std::size_t>(i), 2) = -p[static_cast<std::size_t>(i)];
    rep.companion = m;
    rep.det = det(m);

    const RealRoots rr = real_roots(p);
    if (rr.all.size() != 3)
        throw Error("internal error: accepted unit cubic without three real roots");
    rep.eigenvalues = rr.all;

    rep.embedding.assign(3, std::vector<double>(3, 0.0));
    for (int i = 0; i < 3; ++i) {
        const double l = rep.eigenvalues[static_cast<std::size_t>(i)];
        rep.embedding[static_cast<std::size_t>(i)] = {1.0, l, l * l};
    }

    rep.condition_estimate = latdetail::condition3(rep.embedding);
    if (!(rep.condition_estimate <= 1e8))
        throw IllConditioned("eigenvector embedding is numerically defective");

    rep.eigenvalue_product = rep.eigenvalues[0] * rep.eigenvalues[1] * rep.eigenvalues[2];
    rep.log_moduli.resize(3);
    rep.log_sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        rep.log_moduli[static_cast<std::size_t>(i)] =
            std::log(std::fabs(rep.eigenvalues[static_cast<std::size_t>(i)]));
        rep.log_sum += rep.log_moduli[static_cast<std::size_t>(i)];
    }

    // conjugation relation diag(lambda) E = E M
    rep.relation_residual = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double em = 0.0;
            for (std::size_t k = 0; k < 3; ++k)
                em += rep.embedding[i][k] * m.at(k, j).to_double();
            const double de = rep.eigenvalues[i] * rep.embedding[i][j];
            rep.relation_residual = std::max(rep.relation_residual, std::fabs(de - em));
        }

    rep.unit_power = 1;
    for (double l : rep.eigenvalues)
        if (l < 0.0) rep.unit_power = 2;

    // generators: the columns of E translate, t(M) acts diagonally
    for (std::size_t j = 0; j < 3; ++j) {
        LatticeGenerator g;
        g.kind = "translation";
        for (std::size_t i = 0; i < 3; ++i) g.translation[i] = rep.embedding[i][j];
        g.log_torus = {0.0, 0.0, 0.0};
        rep.generators.push_back(g);
    }
    {
        LatticeGenerator g;
        g.kind = "unit";
        g.translation = {0.0, 0.0, 0.0};
        g.log_torus = {rep.log_moduli[0], rep.log_moduli[1], rep.log_moduli[2]};
        rep.generators.push_back(g);
    }

    // discreteness proxy: every nonempty word of length <= 4 in the
    // generators and their inverses either cancels to the identity or moves
    // the basepoint by more than the threshold
    std::vector<latdetail::Isom> letters;
    for (const LatticeGenerator& g : rep.generators) {
        latdetail::Isom s;
        s.v = g.translation;
        s.l = g.log_torus;
        letters.push_back(s);
        letters.push_back(latdetail::invert(s));
    }
    const double identity_cut = 1e-9;
    double best = std::numeric_limits<double>::infinity();
    const std::size_t nl = letters.size();
    for (int len = 1; len <= 4; ++len) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
        while (true) {
            latdetail::Isom w = letters[idx[0]];
            for (int k = 1; k < len; ++k) w = latdetail::compose(w, letters[idx[static_cast<std::size_t>(k)]]);
            const double d = latdetail::displacement(w);
            if (d > identity_cut) best = std::min(best, d);
            int pos = len - 1;
            while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == nl) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    rep.min_word_displacement = best;
    rep.discreteness_threshold = 1e-6;
    rep.discreteness_proxy = best > rep.discreteness_threshold;
    return rep;
}

// ---------------------------------------------------------------------------
// Integer characteristic-polynomial search for the R^4 x| R families

struct SolSearchResult {
    bool found = false;
    std::vector<int> witness;  // (m, n) for cubics, (m, n, p) for quartics
    Poly polynomial;           // the witness polynomial (zero when none found)
    int bound = 0;
};

// Normalized log-root vector of a monic integer polynomial with all-real,
// positive, distinct roots and constant term 1: logs sorted descending and
// divided by the largest, so the leading entry is 1 — the same normalization
// the classifier applies to diagonal family weights.
inline std::vector<double> target_from_polynomial(const Poly& q) {
    const int deg = q.degree();
    const RealRoots rr = real_roots(q);
    if (static_cast<int>(rr.all.size()) != deg)
        throw DegenerateInput("polynomial must have all-real roots");
    std::vector<double> logs;
    for (double r : rr.all) {
        if (!(r > 0.0)) throw DegenerateInput("polynomial must have positive roots");
        logs.push_back(std::log(r));
    }
    std::sort(logs.begin(), logs.end(), std::greater<double>());
    if (!(logs.front() > 0.0))
        throw DegenerateInput("degenerate root data: no expanding direction");
    const double top = logs.front();
    for (double& l : logs) l /= top;
    return logs;
}

inline SolSearchResult sol_family_model_check(const std::vector<double>& target, int bound) {
    if (bound < 1 || bound > 30)
        throw DegenerateInput("search bound must be between 1 and 30");
    if (target.size() != 3 && target.size() != 4)
        throw DegenerateInput("malformed target: expected 3 or 4 normalized weights");
    if (std::fabs(target.front() - 1.0) > 1e-9)
        throw DegenerateInput("malformed target: leading weight must be 1");
    for (std::size_t k = 1; k < target.size(); ++k)
        if (target[k] > target[k - 1] + 1e-12)
            throw DegenerateInput("malformed target: weights must be sorted descending");

    const int deg = static_cast<int>(target.size());
    const double tol = 1e-9;

    SolSearchResult res;
    res.bound = bound;

    auto try_poly = [&](const Poly& q, std::vector<int> coeffs) {
        if (squarefree_part(q).degree() != deg) return false;  // repeated roots
        if (count_real_roots(q, Bound::at(Rat(0)), Bound::pos_inf()) != deg) return false;
        const std::vector<double> logs = target_from_polynomial(q);
        for (int k = 0; k < deg; ++k)
            if (std::fabs(logs[static_cast<std::size_t>(k)] - target[static_cast<std::size_t>(k)]) > tol)
                return false;
        res.found = true;
        res.witness = std::move(coeffs);
        res.polynomial = q;
        return true;
    };

    if (deg == 3) {
        // x^3 - m x^2 + n x - 1; positive roots force positive coefficients
        for (int mm = 1; mm <= bound && !res.found; ++mm)
            for (int nn = 1; nn <= bound && !res.found; ++nn)
                try_poly(Poly({Rat(-1), Rat(nn), Rat(-mm), Rat(1)}), {mm, nn});
    } else {
        // x^4 - m x^3 + n x^2 - p x + 1
        for (int mm = 1; mm <= bound && !res.found; ++mm)
            for (int nn = 1; nn <= bound && !res.found; ++nn)
                for (int pp = 1; pp <= bound && !res.found; ++pp)
                    try_poly(Poly({Rat(1), Rat(-pp), Rat(nn), Rat(-mm), Rat(1)}), {mm, nn, pp});
    }
    return res;
}

}  // namespace geo5
