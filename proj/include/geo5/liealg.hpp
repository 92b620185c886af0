#pragma once

// Finite-dimensional real Lie algebras presented by exact rational structure
// constants c[i][j][k], meaning [e_i, e_j] = sum_k c[i][j][k] e_k.
//
// Provides: validation (antisymmetry + Jacobi with first-violation
// reporting), adjoint matrices, lower central and derived series, center,
// Killing form and its exact signature, unimodularity, base change, the
// nilradical of a solvable algebra (certified for small abelianization,
// probe-based otherwise), and the existence test for a 4-dimensional abelian
// ideal in a 5-dimensional nilpotent algebra.
//
// Mathematical facts the nilradical routine leans on (solvable 𝔤, char 0):
//   * N(𝔤) = { x : ad x is nilpotent }, and this set is an ideal;
//   * [𝔤,𝔤] is nilpotent, so [𝔤,𝔤] ⊆ N(𝔤);
//   * membership in N(𝔤) is constant on [𝔤,𝔤]-cosets.
// Hence N(𝔤)/[𝔤,𝔤] lives in the abelianization, and for
// dim 𝔤/[𝔤,𝔤] ≤ 2 a rational pencil argument finds it exactly.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geo5/mat.hpp"

namespace geo5 {

inline constexpr std::size_t kMaxDim = 8;

struct ValidationReport {
    bool ok = true;
    std::string message;                    // empty when ok
    std::array<std::size_t, 4> indices{};   // violating basis indices (0-based)
};

class LieAlgebra {
  public:
    explicit LieAlgebra(std::size_t dim) : dim_(dim) {
        if (dim < 1 || dim > kMaxDim)
            throw WrongDimension("algebra dimension " + std::to_string(dim) +
                                 " outside supported range 1.." + std::to_string(kMaxDim));
        c_.assign(dim, std::vector<Vec>(dim, Vec(dim, Rat(0))));
        names_.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) names_[i] = "e" + std::to_string(i + 1);
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }
    void set_names(std::vector<std::string> names) {
        if (names.size() != dim_) throw WrongDimension("name list length mismatch");
        names_ = std::move(names);
    }

    const Vec& structure(std::size_t i, std::size_t j) const { return c_[i][j]; }

    // Sets [e_i, e_j] and its antisymmetric mirror.
    void set_bracket(std::size_t i, std::size_t j, const Vec& v) {
        if (i >= dim_ || j >= dim_ || v.size() != dim_)
            throw WrongDimension("bracket indices or value out of range");
        if (i == j && !vec_is_zero(v)) throw DegenerateInput("[e_i, e_i] must vanish");
        c_[i][j] = v;
        Vec neg(dim_);
        for (std::size_t k = 0; k < dim_; ++k) neg[k] = -v[k];
        if (i != j) c_[j][i] = neg;
    }
    // Convenience: [e_i, e_j] = q * e_k.
    void set_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Rat& q) {
        Vec v = c_[i][j];
        v[k] = q;
        set_bracket(i, j, v);
    }
    // Raw single-entry write, antisymmetry NOT mirrored (for JSON loading).
    void set_structure_raw(std::size_t i, std::size_t j, std::size_t k, const Rat& q) {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw WrongDimension("structure index out of range");
        c_[i][j][k] = q;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_) throw WrongDimension("bracket argument length");
        Vec r(dim_, Rat(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Rat f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c_[i][j][k].is_zero()) r[k] += f * c_[i][j][k];
            }
        }
        return r;
    }

    // ad(x): the matrix whose j-th column is [x, e_j].
    Mat ad(const Vec& x) const {
        Mat m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec ej(dim_, Rat(0));
            ej[j] = Rat(1);
            Vec col = bracket(x, ej);
            for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
        }
        return m;
    }
    Mat ad_basis(std::size_t i) const {
        Vec ei(dim_, Rat(0));
        ei[i] = Rat(1);
        return ad(ei);
    }

    ValidationReport validate() const {
        ValidationReport rep;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (c_[i][j][k] + c_[j][i][k] != Rat(0)) {
                        rep.ok = false;
                        rep.message = "antisymmetry fails at (i,j,k) = (" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
                        rep.indices = {i, j, k, 0};
                        return rep;
                    }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    Vec ei(dim_, Rat(0)), ej(dim_, Rat(0)), ek(dim_, Rat(0));
                    ei[i] = Rat(1);
                    ej[j] = Rat(1);
                    ek[k] = Rat(1);
                    Vec s = bracket(ei, bracket(ej, ek));
                    Vec t = bracket(ej, bracket(ek, ei));
                    Vec u = bracket(ek, bracket(ei, ej));
                    for (std::size_t l = 0; l < dim_; ++l) {
                        if (s[l] + t[l] + u[l] != Rat(0)) {
                            ValidationReport bad;
                            bad.ok = false;
                            bad.message = "Jacobi fails at (i,j,k,l) = (" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                          "," + std::to_string(l + 1) + ")";
                            bad.indices = {i, j, k, l};
                            return bad;
                        }
                    }
                }
        return rep;
    }

    // [A, B] for subspaces: span of brackets of the bases.
    Subspace bracket_span(const Subspace& a, const Subspace& b) const {
        std::vector<Vec> gens;
        for (const auto& x : a.basis())
            for (const auto& y : b.basis()) {
                Vec v = bracket(x, y);
                if (!vec_is_zero(v)) gens.push_back(std::move(v));
            }
        return Subspace::span(gens, dim_);
    }

    // Lower central series 𝔤¹ = 𝔤, 𝔤ᵏ⁺¹ = [𝔤, 𝔤ᵏ].  Dimensions are recorded
    // while strictly decreasing; the trailing value is the stable dimension
    // (0 exactly when nilpotent).
    std::vector<int> lower_central_dims() const {
        Subspace full = Subspace::full(dim_);
        std::vector<int> dims{static_cast<int>(dim_)};
        Subspace cur = full;
        while (true) {
            Subspace next = bracket_span(full, cur);
            if (next.dim() == cur.dim()) break;
            dims.push_back(static_cast<int>(next.dim()));
            if (next.dim() == 0) break;
            cur = next;
        }
        return dims;
    }

    std::vector<int> derived_dims() const {
        std::vector<int> dims{static_cast<int>(dim_)};
        Subspace cur = Subspace::full(dim_);
        while (true) {
            Subspace next = bracket_span(cur, cur);
            if (next.dim() == cur.dim()) break;
            dims.push_back(static_cast<int>(next.dim()));
            if (next.dim() == 0) break;
            cur = next;
        }
        return dims;
    }

    bool is_nilpotent() const { return lower_central_dims().back() == 0; }
    bool is_solvable() const { return derived_dims().back() == 0; }
    bool is_abelian() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (!vec_is_zero(c_[i][j])) return false;
        return true;
    }

    Subspace derived_subalgebra() const {
        Subspace full = Subspace::full(dim_);
        return bracket_span(full, full);
    }

    // Center: the joint kernel of all ad(e_i), via one stacked matrix.
    Subspace center() const {
        std::vector<Vec> stacked;
        for (std::size_t i = 0; i < dim_; ++i) {
            Mat m = ad_basis(i);
            for (std::size_t r = 0; r < dim_; ++r) stacked.push_back(m.row(r));
        }
        return Subspace::span(kernel(Mat::from_rows(stacked)), dim_);
    }

    Mat killing_form() const {
        std::vector<Mat> ads;
        ads.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad_basis(i));
        Mat k(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j) {
                Rat t = (ads[i] * ads[j]).trace();
                k.at(i, j) = t;
                k.at(j, i) = t;
            }
        return k;
    }
    SymSignature killing_signature() const { return symmetric_signature(killing_form()); }

    bool is_unimodular() const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (ad_basis(i).trace() != Rat(0)) return false;
        return true;
    }

    // Rewrites the structure constants in the basis given by the COLUMNS of
    // the invertible matrix P (new basis vectors in old coordinates).
    LieAlgebra basis_change(const Mat& p) const {
        if (p.rows() != dim_ || p.cols() != dim_) throw ShapeMismatch("base-change matrix shape");
        Mat pinv = inverse(p); // throws DegenerateInput when singular
        LieAlgebra out(dim_);
        out.names_ = names_;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Vec v = pinv * bracket(p.col(i), p.col(j));
                out.set_bracket(i, j, v);
            }
        return out;
    }

    // Direct sum, this ⊕ other, blocks in order.
    LieAlgebra direct_sum(const LieAlgebra& other) const {
        LieAlgebra out(dim_ + other.dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c_[i][j][k].is_zero()) out.set_bracket_term(i, j, k, c_[i][j][k]);
        for (std::size_t i = 0; i < other.dim_; ++i)
            for (std::size_t j = i + 1; j < other.dim_; ++j)
                for (std::size_t k = 0; k < other.dim_; ++k)
                    if (!other.c_[i][j][k].is_zero())
                        out.set_bracket_term(dim_ + i, dim_ + j, dim_ + k, other.c_[i][j][k]);
        return out;
    }

  private:
    std::size_t dim_;
    std::vector<std::vector<Vec>> c_;
    std::vector<std::string> names_;
};

inline bool is_ad_nilpotent(const LieAlgebra& L, const Vec& x) {
    Mat m = L.ad(x);
    Mat power = Mat::identity(L.dim());
    for (std::size_t k = 0; k < L.dim(); ++k) power = power * m;
    return power.is_zero();
}

// Is the restriction of the bracket to the subspace identically zero?
inline bool subspace_is_abelian(const LieAlgebra& L, const Subspace& s) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!vec_is_zero(L.bracket(b[i], b[j]))) return false;
    return true;
}

// dim [S, S] for a subalgebra/subspace S.
inline std::size_t subspace_derived_dim(const LieAlgebra& L, const Subspace& s) {
    return L.bracket_span(s, s).dim();
}

// Center of a subalgebra S: { x in S : [x, S] = 0 }.
inline Subspace subspace_center(const LieAlgebra& L, const Subspace& s) {
    std::vector<Vec> found;
    // Solve for coefficient vectors a with [sum a_i b_i, b_j] = 0 for all j.
    const auto& b = s.basis();
    if (b.empty()) return Subspace::zero(L.dim());
    std::vector<Vec> rows; // each row: one component of one [b_i, b_j] equation
    for (std::size_t j = 0; j < b.size(); ++j) {
        std::vector<Vec> brackets;
        for (std::size_t i = 0; i < b.size(); ++i) brackets.push_back(L.bracket(b[i], b[j]));
        for (std::size_t k = 0; k < L.dim(); ++k) {
            Vec row(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) row[i] = brackets[i][k];
            rows.push_back(std::move(row));
        }
    }
    for (const auto& coeff : kernel(Mat::from_rows(rows))) {
        Vec x(L.dim(), Rat(0));
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t k = 0; k < L.dim(); ++k) x[k] += coeff[i] * b[i][k];
        found.push_back(std::move(x));
    }
    return Subspace::span(found, L.dim());
}

// Centralizer in L of a subspace: { x in L : [x, S] = 0 }.
inline Subspace centralizer(const LieAlgebra& L, const Subspace& s) {
    std::vector<Vec> rows;
    for (const auto& y : s.basis()) {
        // [e_i, y] as a function of i: stack the transpose of ad maps.
        Mat m(L.dim(), L.dim());
        for (std::size_t i = 0; i < L.dim(); ++i) {
            Vec ei(L.dim(), Rat(0));
            ei[i] = Rat(1);
            Vec v = L.bracket(ei, y);
            for (std::size_t k = 0; k < L.dim(); ++k) m.at(k, i) = v[k];
        }
        for (std::size_t k = 0; k < L.dim(); ++k) rows.push_back(m.row(k));
    }
    if (rows.empty()) return Subspace::full(L.dim());
    return Subspace::span(kernel(Mat::from_rows(rows)), L.dim());
}

struct NilradicalInfo {
    Subspace space;
    bool certified = false;
};

namespace detail {

// Standard-basis vectors at the non-pivot coordinates of s: representatives
// of a complement of s.
inline std::vector<Vec> complement_coords(const Subspace& s) {
    std::vector<bool> pivot(s.ambient(), false);
    for (const auto& r : s.basis()) {
        std::size_t lead = 0;
        while (lead < s.ambient() && r[lead].is_zero()) ++lead;
        if (lead < s.ambient()) pivot[lead] = true;
    }
    std::vector<Vec> out;
    for (std::size_t i = 0; i < s.ambient(); ++i) {
        if (pivot[i]) continue;
        Vec v(s.ambient(), Rat(0));
        v[i] = Rat(1);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

// Nilradical of a solvable Lie algebra, exactly.
//
// For a solvable algebra in characteristic zero the nilradical is the set
// of ad-nilpotent elements (triangularize ad by Lie's theorem: x is
// ad-nilpotent iff every weight vanishes on x, a linear condition, and the
// resulting subspace is a nilpotent ideal by Engel that contains every
// nilpotent ideal).  That set is computed linearly through the associative
// algebra A generated by the adjoint images: A consists of simultaneously
// triangularizable matrices, its Jacobson radical is its zero-diagonal
// part, which by the trace-form characterization of the radical
// (characteristic zero) equals { a in A : tr(a b) = 0 for all b in A }.
// Hence
//     N = { x in L : tr(ad(x) b) = 0 for every basis element b of A },
// a rational kernel computation.  The result is re-verified exactly
// (every basis vector ad-nilpotent, closed under bracketing with L), so
// the certified flag is always true.
inline NilradicalInfo nilradical(const LieAlgebra& L) {
    if (!L.is_solvable()) throw NotSolvable("nilradical requested for a non-solvable algebra");
    const std::size_t n = L.dim();
    if (L.is_nilpotent()) return {Subspace::full(n), true};

    // Basis of the associative algebra generated by ad(e_1), ..., ad(e_n),
    // maintained alongside the span of the flattened matrices.
    auto flat = [n](const Mat& m) {
        Vec v(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m.at(i, j);
        return v;
    };
    std::vector<Mat> basis;
    Subspace span = Subspace::zero(n * n);
    auto add_if_new = [&](Mat m) {
        Vec v = flat(m);
        if (span.contains(v)) return;
        span = sum(span, Subspace::span({v}, n * n));
        basis.push_back(std::move(m));
    };
    std::vector<Mat> ads;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = Rat(1);
        ads.push_back(L.ad(e));
        add_if_new(ads.back());
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) add_if_new(basis[i] * basis[j]);

    // x = sum x_i e_i lies in N iff tr(ad(x) b) = 0 for every b.
    Mat sys(basis.size(), n);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t i = 0; i < n; ++i) sys.at(r, i) = trace(ads[i] * basis[r]);
    Subspace N = Subspace::span(kernel(sys), n);

    // Exact re-verification: ad-nilpotent generators, ideal, contains [L,L].
    for (const Vec& v : N.basis())
        if (!is_ad_nilpotent(L, v))
            throw Error("internal: nilradical candidate has a non-nilpotent generator");
    if (!N.contains(L.bracket_span(Subspace::full(n), N)))
        throw Error("internal: nilradical candidate is not an ideal");
    if (!N.contains(L.derived_subalgebra()))
        throw Error("internal: nilradical candidate misses the derived subalgebra");
    return {N, true};
}

// Does a 5-dimensional NILPOTENT algebra contain a 4-dimensional abelian
// ideal?  Any codimension-1 subspace containing [L,L] is automatically an
// ideal, and any 4-dim ideal contains [L,L]; so the question is whether some
// 4-dim subspace between [L,L] and L is abelian.  Cases by q = dim L/[L,L]:
//   q=5: abelian, trivially yes.
//   q=4: [L,L] is a central line; the induced alternating form on L/[L,L]
//        admits a 3-dim isotropic subspace iff its rank is <= 2.
//   q=3: need [L,L] abelian and a 2-dim subspace T of
//        S = { w : [w, [L,L]] = 0 } ⊆ L/[L,L] with [T,T] = 0.
//        dim S <= 1: no.  dim S = 2: test the single candidate.
//        dim S = 3: the bracket map Λ²S → [L,L] has a nonzero kernel
//        (3 > 2), and every bivector over a 3-dim space is decomposable, so
//        a witness plane always exists; it is extracted and re-verified.
//   q=2: need [L,L] abelian and centralizer([L,L]) ⊄ [L,L].
inline bool has_abelian_ideal_dim4(const LieAlgebra& L) {
    if (L.dim() != 5) throw WrongDimension("4-dim abelian ideal test needs a 5-dim algebra");
    if (!L.is_nilpotent()) throw WrongBranch("4-dim abelian ideal test is for nilpotent algebras");
    Subspace D = L.derived_subalgebra();
    const std::size_t q = 5 - D.dim();
    if (q == 5) return true;
    if (q == 4) {
        // rank of the alternating form on L/D valued in the line D
        std::vector<Vec> comp = detail::complement_coords(D);
        const Vec& d = D.basis()[0];
        std::size_t lead = 0;
        while (d[lead].is_zero()) ++lead;
        Mat omega(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Vec v = L.bracket(comp[i], comp[j]);
                omega.at(i, j) = v[lead] / d[lead];
            }
        return rank(omega) <= 2;
    }
    if (q == 3) {
        if (!subspace_is_abelian(L, D)) return false;
        std::vector<Vec> comp = detail::complement_coords(D);
        // S in complement coordinates: a with [sum a_i f_i, D] = 0.
        std::vector<Vec> rows;
        for (const auto& dvec : D.basis()) {
            std::vector<Vec> brackets;
            for (const auto& f : comp) brackets.push_back(L.bracket(f, dvec));
            for (std::size_t k = 0; k < 5; ++k) {
                Vec row(3);
                for (std::size_t i = 0; i < 3; ++i) row[i] = brackets[i][k];
                rows.push_back(std::move(row));
            }
        }
        std::vector<Vec> s_coords = kernel(Mat::from_rows(rows));
        auto lift = [&](const Vec& a) {
            Vec x(5, Rat(0));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t k = 0; k < 5; ++k) x[k] += a[i] * comp[i][k];
            return x;
        };
        if (s_coords.size() <= 1) return false;
        if (s_coords.size() == 2)
            return vec_is_zero(L.bracket(lift(s_coords[0]), lift(s_coords[1])));
        // dim S = 3: bracket map Λ²S → D on the pairs (0,1), (0,2), (1,2).
        std::vector<Vec> lifts{lift(s_coords[0]), lift(s_coords[1]), lift(s_coords[2])};
        std::size_t pair_idx = 0;
        std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
        Mat bmat(5, 3);
        for (const auto& [a, b] : pairs) {
            Vec v = L.bracket(lifts[a], lifts[b]);
            for (std::size_t k = 0; k < 5; ++k) bmat.at(k, pair_idx) = v[k];
            ++pair_idx;
        }
        std::vector<Vec> ker = kernel(bmat);
        if (ker.empty())
            throw Error("internal: bracket map of a 3-dim space into a 2-dim space has no kernel");
        // Decompose the kernel bivector xi = (xi_01, xi_02, xi_12) via its
        // Hodge dual v = (xi_12, -xi_02, xi_01): the witness plane is v-perp.
        const Vec& xi = ker[0];
        Vec dual{xi[2], -xi[1], xi[0]};
        Mat vrow(1, 3);
        for (std::size_t i = 0; i < 3; ++i) vrow.at(0, i) = dual[i];
        std::vector<Vec> plane = kernel(vrow);
        if (plane.size() != 2) throw Error("internal: dual-vector kernel is not a plane");
        Vec t1 = lift(plane[0]);
        Vec t2 = lift(plane[1]);
        if (!vec_is_zero(L.bracket(t1, t2)))
            throw Error("internal: decomposable kernel bivector failed re-verification");
        return true;
    }
    if (q == 2) {
        if (!subspace_is_abelian(L, D)) return false;
        Subspace c = centralizer(L, D);
        return !D.contains(c);
    }
    throw Error("internal: a 5-dim nilpotent algebra cannot have a 1-dim abelianization");
}

// Structure constants in the basis f_j = sum_i P(i,j) e_i, i.e. the
// columns of P are the new basis vectors in old coordinates.  Throws
// DegenerateInput when P is singular.
inline LieAlgebra change_basis(const LieAlgebra& L, const Mat& P) {
    const std::size_t n = L.dim();
    if (!P.is_square() || P.rows() != n)
        throw ShapeMismatch("basis-change matrix must be square of the algebra's dimension");
    const Mat Pinv = inverse(P);
    std::vector<Vec> f(n, Vec(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) f[j][i] = P.at(i, j);
    LieAlgebra out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec c = Pinv * L.bracket(f[i], f[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero()) out.set_bracket_term(i, j, k, c[k]);
        }
    return out;
}

} // namespace geo5
