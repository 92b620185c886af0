#pragma once
//
// Exact curvature of the left-invariant metric that makes the given basis
// orthonormal.  Everything is driven by the Koszul formula specialized to
// left-invariant fields: with c_{ij,k} = <[e_i, e_j], e_k>,
//
//     <nabla_{e_i} e_j, e_k> = (c_{ij,k} - c_{jk,i} + c_{ki,j}) / 2,
//
// the curvature operator is
//
//     R(e_i, e_j) e_k = nabla_i nabla_j e_k - nabla_j nabla_i e_k
//                       - nabla_{[e_i, e_j]} e_k,
//
// the sectional curvature of a coordinate plane is
// K(e_i, e_j) = <R(e_i, e_j) e_j, e_i> (no normalization needed in an
// orthonormal frame), Ric(i, j) = sum_k <R(e_k, e_i) e_j, e_k>, and the
// scalar curvature is the trace of Ric.  All of it is rational arithmetic;
// the only numerics appear in the Ricci spectrum when its characteristic
// polynomial does not split over Q, and that case is flagged.
//
// The construction needs no solvability: it works for any metric Lie
// algebra (compact factors included).

#include <geo5/error.hpp>
#include <geo5/liealg.hpp>
#include <geo5/mat.hpp>
#include <geo5/numroots.hpp>
#include <geo5/poly.hpp>
#include <geo5/rat.hpp>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace geo5 {

// Eigenvalues of the Ricci endomorphism, descending, with multiplicity.
// `exact` is true when the characteristic polynomial splits rationally;
// otherwise `values` is empty and only `approx` (isolated numerically from
// exact squarefree factors) is meaningful.
struct RicciSpectrum {
    bool exact = true;
    std::vector<Rat> values;
    std::vector<double> approx;
};

namespace curvdetail {

// p as a list of (squarefree factor, exact multiplicity) pairs: the
// classic gcd tower f_0 = p, f_{i+1} = gcd(f_i, f_i'); w_i = f_{i-1}/f_i
// collects the roots of multiplicity >= i, so w_i / w_{i+1} is the
// squarefree product of the roots of multiplicity exactly i.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw DegenerateInput("squarefree decomposition of zero polynomial");
    std::vector<Poly> tower{p.monic()};
    while (tower.back().degree() > 0)
        tower.push_back(poly_gcd(tower.back(), tower.back().derivative()));
    std::vector<Poly> w;
    for (std::size_t i = 1; i < tower.size(); ++i)
        w.push_back(divmod(tower[i - 1], tower[i]).first.monic());
    std::vector<std::pair<Poly, int>> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Poly s = (i + 1 < w.size()) ? divmod(w[i], w[i + 1]).first.monic() : w[i];
        if (s.degree() > 0) out.emplace_back(std::move(s), static_cast<int>(i) + 1);
    }
    return out;
}

}  // namespace curvdetail

class Curvature {
  public:
    explicit Curvature(const LieAlgebra& L) : n_(L.dim()), L_(L) {
        const ValidationReport report = L.validate();
        if (!report.ok)
            throw DegenerateInput("invalid structure constants: " + report.message);
        auto c = [&L](std::size_t i, std::size_t j, std::size_t k) {
            Vec e(L.dim(), Rat(0)), f(L.dim(), Rat(0));
            e[i] = Rat(1);
            f[j] = Rat(1);
            return L.bracket(e, f)[k];
        };
        gamma_.assign(n_, Mat(n_, n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    gamma_[i].at(j, k) = (c(i, j, k) - c(j, k, i) + c(k, i, j)) / Rat(2);
    }

    std::size_t dim() const { return n_; }

    // <nabla_{e_i} e_j, e_k>
    const Rat& christoffel(std::size_t i, std::size_t j, std::size_t k) const {
        return gamma_.at(i).at(j, k);
    }

    // nabla_{e_i} e_j in basis coordinates.
    Vec nabla(std::size_t i, std::size_t j) const {
        Vec v(n_);
        for (std::size_t k = 0; k < n_; ++k) v[k] = gamma_.at(i).at(j, k);
        return v;
    }

    // nabla_x y for left-invariant x, y given in basis coordinates.
    Vec nabla(const Vec& x, const Vec& y) const {
        Vec out(n_, Rat(0));
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j].is_zero()) continue;
                for (std::size_t k = 0; k < n_; ++k)
                    out[k] += x[i] * y[j] * gamma_[i].at(j, k);
            }
        }
        return out;
    }

    // R(e_i, e_j) e_k
    Vec riemann(std::size_t i, std::size_t j, std::size_t k) const {
        const Vec ei = basis_vec(i), ej = basis_vec(j), ek = basis_vec(k);
        const Vec a = nabla(ei, nabla(ej, ek));
        const Vec b = nabla(ej, nabla(ei, ek));
        const Vec c = nabla(L_.bracket(ei, ej), ek);
        Vec out(n_);
        for (std::size_t m = 0; m < n_; ++m) out[m] = a[m] - b[m] - c[m];
        return out;
    }

    // K(e_i, e_j) = <R(e_i, e_j) e_j, e_i>
    Rat sectional(std::size_t i, std::size_t j) const {
        if (i == j) throw DegenerateInput("sectional curvature needs two distinct directions");
        return riemann(i, j, j)[i];
    }

    Mat ricci() const {
        Mat r(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                Rat s(0);
                for (std::size_t k = 0; k < n_; ++k) s += riemann(k, i, j)[k];
                r.at(i, j) = s;
            }
        return r;
    }

    Rat scalar() const { return trace(ricci()); }

    // <nabla e_j, e_k> + <e_j, nabla e_k> = 0 in an orthonormal frame.
    bool metric_compatible() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (!(gamma_[i].at(j, k) + gamma_[i].at(k, j)).is_zero()) return false;
        return true;
    }

    // R(x,y)z + R(y,z)x + R(z,x)y = 0 on every basis triple, exactly.
    bool first_bianchi_holds() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const Vec a = riemann(i, j, k);
                    const Vec b = riemann(j, k, i);
                    const Vec c = riemann(k, i, j);
                    for (std::size_t m = 0; m < n_; ++m)
                        if (!(a[m] + b[m] + c[m]).is_zero()) return false;
                }
        return true;
    }

    // Flat iff every curvature component vanishes.
    bool flat() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const Vec r = riemann(i, j, k);
                    for (std::size_t m = 0; m < n_; ++m)
                        if (!r[m].is_zero()) return false;
                }
        return true;
    }

    RicciSpectrum ricci_spectrum() const {
        const Poly p = charpoly(ricci());
        RicciSpectrum s;
        for (const auto& [factor, mult] : curvdetail::squarefree_decomposition(p)) {
            const RealRoots rr = real_roots(factor);
            if (static_cast<int>(rr.all.size()) != factor.degree())
                throw Error("internal: Ricci operator with non-real spectrum");
            if (!rr.irrational.empty()) s.exact = false;
            for (const Rat& r : rr.rational)
                for (int m = 0; m < mult; ++m) s.values.push_back(r);
            for (double r : rr.all)
                for (int m = 0; m < mult; ++m) s.approx.push_back(r);
        }
        if (!s.exact) s.values.clear();
        std::sort(s.values.begin(), s.values.end(), [](const Rat& a, const Rat& b) { return b < a; });
        std::sort(s.approx.begin(), s.approx.end(), [](double a, double b) { return b < a; });
        return s;
    }

  private:
    Vec basis_vec(std::size_t k) const {
        Vec e(n_, Rat(0));
        e[k] = Rat(1);
        return e;
    }

    std::size_t n_;
    LieAlgebra L_;
    std::vector<Mat> gamma_;
};

}  // namespace geo5
