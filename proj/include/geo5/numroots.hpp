#pragma once
//
// Real-root extraction for exact rational polynomials.
//
// Rational roots are found exactly (rational-root test); the remaining
// irrational real roots are isolated by Sturm-count bisection and then
// refined by 60 sign bisections, which shrinks an isolating interval by
// 2^-60 — far below double precision for the degree-capped inputs here.
// All isolation arithmetic is exact, so the returned intervals genuinely
// bracket one root each; only the final readout is rounded to double.

#include <geo5/error.hpp>
#include <geo5/poly.hpp>
#include <geo5/rat.hpp>

#include <algorithm>
#include <vector>

namespace geo5 {

struct RealRoots {
    std::vector<Rat> rational;       // exact rational roots, ascending
    std::vector<double> irrational;  // irrational real roots, ascending
    std::vector<double> all;         // both kinds merged, ascending
};

namespace detail {

// Strict bound B with every complex root of p satisfying |z| < B (Cauchy).
inline Rat cauchy_bound(const Poly& p) {
    const int n = p.degree();
    Rat lead = abs(p[n]);
    Rat m(0);
    for (int i = 0; i < n; ++i) m = std::max(m, abs(p[i]));
    return Rat(1) + m / lead;
}

// One distinct real root of t lies in (lo, hi) and t has no rational
// roots; bisect 60 times and read out the midpoint.
inline double bisect_root(const Poly& t, Rat lo, Rat hi) {
    int slo = sign(t.eval(lo));
    if (slo == 0) throw Error("internal error: endpoint root in bisection");
    for (int step = 0; step < 60; ++step) {
        Rat mid = (lo + hi) / Rat(2);
        const int smid = sign(t.eval(mid));
        if (smid == 0) throw Error("internal error: rational root in bisection");
        if (smid == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return ((lo + hi) / Rat(2)).to_double();
}

}  // namespace detail

// All distinct real roots of p. Throws DegenerateInput on the zero
// polynomial; constants have no roots.
inline RealRoots real_roots(const Poly& p) {
    RealRoots out;
    Poly s = squarefree_part(p);
    if (s.degree() <= 0) return out;

    // Exact rational roots first; each is simple in s, divide them out.
    for (const Rat& r : rational_roots(s)) {
        out.rational.push_back(r);
        auto [q, rem] = divmod(s, Poly::linear_root(r));
        if (!rem.is_zero()) throw Error("internal error: rational root division");
        s = q;
    }
    std::sort(out.rational.begin(), out.rational.end());

    if (s.degree() > 0) {
        const Rat bound = detail::cauchy_bound(s);
        // Stack of open intervals with exact Sturm root counts.
        std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
        while (!work.empty()) {
            auto [lo, hi] = work.back();
            work.pop_back();
            const int count = count_real_roots(s, Bound::at(lo), Bound::at(hi));
            if (count == 0) continue;
            if (count == 1) {
                out.irrational.push_back(detail::bisect_root(s, lo, hi));
                continue;
            }
            const Rat mid = (lo + hi) / Rat(2);
            if (sign(s.eval(mid)) == 0)
                throw Error("internal error: rational root survived stripping");
            work.emplace_back(lo, mid);
            work.emplace_back(mid, hi);
        }
        std::sort(out.irrational.begin(), out.irrational.end());
    }

    for (const Rat& r : out.rational) out.all.push_back(r.to_double());
    for (double d : out.irrational) out.all.push_back(d);
    std::sort(out.all.begin(), out.all.end());
    return out;
}

}  // namespace geo5
