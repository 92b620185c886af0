#pragma once

// Dense univariate polynomials over the rationals, constant term first.
//
// The zero polynomial is stored as {0} and has degree() == -1.  All exact
// operations honour a hard degree cap (kDegreeCap): desk-scale inputs never
// come close, and the cap turns runaway symbolic growth into a clean error.
//
// Real-root counting is by Sturm sequences.  The chain is content-normalized
// after every remainder step (each polynomial divided by its positive
// content) so coefficient growth stays tame; scaling by positive constants
// does not change sign variations.  Evaluation bounds may be -inf/+inf.
// A finite bound that is itself a root raises EndpointRoot rather than
// guessing half-open semantics.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "geo5/rat.hpp"

namespace geo5 {

inline constexpr int kDegreeCap = 16;

class Poly {
  public:
    Poly() : c_{Rat(0)} {}
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& a) { return Poly({a}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }
    // x - r
    static Poly linear_root(const Rat& r) { return Poly({-r, Rat(1)}); }

    int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](std::size_t i) const {
        static const Rat kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const Rat& leading() const { return c_.back(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        int deg = a.degree() + b.degree();
        if (deg > kDegreeCap)
            throw DegreeCapExceeded("product degree " + std::to_string(deg) +
                                    " exceeds cap " + std::to_string(kDegreeCap));
        std::vector<Rat> r(static_cast<std::size_t>(deg) + 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rat& s, const Poly& p) {
        std::vector<Rat> r(p.c_);
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval_double(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
        return acc;
    }

    Poly derivative() const {
        if (degree() <= 0) return Poly();
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(Int(i)) * c_[i];
        return Poly(std::move(r));
    }

    // Quotient and remainder of exact division by a nonzero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
        std::vector<Rat> rem = a.c_;
        int db = b.degree();
        int da = a.degree();
        if (da < db) return {Poly(), a};
        std::vector<Rat> quot(static_cast<std::size_t>(da - db) + 1, Rat(0));
        for (int k = da - db; k >= 0; --k) {
            Rat q = rem[static_cast<std::size_t>(k + db)] / b.leading();
            quot[static_cast<std::size_t>(k)] = q;
            if (!q.is_zero())
                for (int j = 0; j <= db; ++j)
                    rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) throw DegenerateInput("monic of zero polynomial");
        return leading().inv() * *this;
    }

    // Divides by the positive content (gcd of numerators over lcm of
    // denominators), preserving all signs.  No-op on the zero polynomial.
    Poly primitive() const {
        if (is_zero()) return *this;
        Int den_lcm = 1;
        for (const auto& a : c_) den_lcm = den_lcm / int_gcd(den_lcm, a.den()) * a.den();
        Int num_gcd = 0;
        for (const auto& a : c_) num_gcd = int_gcd(num_gcd, a.num() * (den_lcm / a.den()));
        Rat scale(den_lcm, num_gcd); // positive: num_gcd > 0 for a nonzero poly
        return scale * *this;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rat& a = c_[static_cast<std::size_t>(i)];
            if (a.is_zero()) continue;
            Rat mag = a.abs();
            if (out.empty()) {
                if (a.sign() < 0) out += "-";
            } else {
                out += a.sign() < 0 ? " - " : " + ";
            }
            bool unit = (mag == Rat(1));
            if (i == 0 || !unit) out += mag.str();
            if (i > 0) {
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) c_.push_back(Rat(0));
        if (static_cast<int>(c_.size()) - 1 > kDegreeCap)
            throw DegreeCapExceeded("degree " + std::to_string(c_.size() - 1) +
                                    " exceeds cap " + std::to_string(kDegreeCap));
    }

    std::vector<Rat> c_;
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second.primitive();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// p / gcd(p, p'), made monic: same roots as p, each with multiplicity one.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DegenerateInput("squarefree part of zero polynomial");
    if (p.degree() == 0) return Poly::constant(Rat(1));
    Poly g = poly_gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

// An evaluation bound for root counting: a rational number or +-infinity.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind;
    Rat value;

    static Bound neg_inf() { return {NegInf, Rat(0)}; }
    static Bound pos_inf() { return {PosInf, Rat(0)}; }
    static Bound at(const Rat& v) { return {Finite, v}; }
};

inline std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p.primitive());
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive());
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

namespace detail {

inline int sign_at(const Poly& p, const Bound& b) {
    switch (b.kind) {
        case Bound::Finite: return p.eval(b.value).sign();
        case Bound::PosInf: return p.is_zero() ? 0 : p.leading().sign();
        case Bound::NegInf:
        default:
            if (p.is_zero()) return 0;
            return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
    }
}

inline int sign_variations(const std::vector<Poly>& chain, const Bound& b) {
    int count = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace detail

// Number of DISTINCT real roots of p in the open interval (lo, hi).
// Throws EndpointRoot if a finite endpoint is itself a root of p.
inline int count_real_roots(const Poly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw DegenerateInput("root counting on zero polynomial");
    if (p.degree() == 0) return 0;
    if (lo.kind == Bound::Finite && p.eval(lo.value).is_zero())
        throw EndpointRoot("lower bound " + lo.value.str() + " is a root");
    if (hi.kind == Bound::Finite && p.eval(hi.value).is_zero())
        throw EndpointRoot("upper bound " + hi.value.str() + " is a root");
    auto chain = sturm_sequence(p);
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

inline int count_real_roots(const Poly& p) {
    return count_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
}

// Summary of the root structure of a nonzero polynomial:
//   distinct       distinct complex roots (degree of the squarefree part),
//   real           distinct real roots (Sturm),
//   complex_pairs  conjugate pairs among the distinct roots,
//   zero_mult      multiplicity of the root 0 in p itself,
//   all_real       no complex pairs.
struct RootSignature {
    int distinct = 0;
    int real = 0;
    int complex_pairs = 0;
    int zero_mult = 0;
    bool all_real = true;

    friend bool operator==(const RootSignature&, const RootSignature&) = default;
};

inline RootSignature root_signature(const Poly& p) {
    if (p.is_zero()) throw DegenerateInput("root signature of zero polynomial");
    RootSignature sig;
    Poly q = p;
    while (q.degree() >= 1 && q[0].is_zero()) {
        ++sig.zero_mult;
        std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = Poly(std::move(shifted));
    }
    Poly s = squarefree_part(p);
    sig.distinct = s.degree();
    sig.real = s.degree() == 0 ? 0 : count_real_roots(s);
    sig.complex_pairs = (sig.distinct - sig.real) / 2;
    sig.all_real = sig.complex_pairs == 0;
    return sig;
}

// All rational roots of p, WITH multiplicity (a double root appears twice),
// sorted in descending order.  Uses the rational-root test on the integer
// primitive part.
inline std::vector<Rat> rational_roots(const Poly& p) {
    if (p.is_zero()) throw DegenerateInput("rational roots of zero polynomial");
    std::vector<Rat> roots;
    Poly q = p.primitive();
    while (q.degree() >= 1 && q[0].is_zero()) {
        roots.emplace_back(0);
        std::vector<Rat> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = Poly(std::move(shifted));
    }
    if (q.degree() >= 1) {
        Int a0 = q[0].num().sign() < 0 ? Int(-q[0].num()) : q[0].num();
        Int an = q.leading().num().sign() < 0 ? Int(-q.leading().num()) : q.leading().num();
        std::vector<Int> num_divs, den_divs;
        for (Int d = 1; d * d <= a0; ++d)
            if (a0 % d == 0) { num_divs.push_back(d); num_divs.push_back(a0 / d); }
        for (Int d = 1; d * d <= an; ++d)
            if (an % d == 0) { den_divs.push_back(d); den_divs.push_back(an / d); }
        std::vector<Rat> candidates;
        for (const auto& n : num_divs)
            for (const auto& d : den_divs) {
                Rat c(n, d);
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            while (q.degree() >= 1 && q.eval(c).is_zero()) {
                roots.push_back(c);
                q = divmod(q, Poly::linear_root(c)).first;
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) { return b < a; });
    return roots;
}

// Unique interpolating polynomial through points with distinct abscissae.
inline Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    if (pts.empty()) throw DegenerateInput("interpolation through no points");
    Poly result;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Poly term = Poly::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            if (pts[i].first == pts[j].first)
                throw DegenerateInput("repeated interpolation abscissa " + pts[i].first.str());
            term = term * Poly::linear_root(pts[j].first);
            denom *= pts[i].first - pts[j].first;
        }
        result = result + (pts[i].second / denom) * term;
    }
    return result;
}

// Parses an integer-coefficient polynomial such as "x^3+x^2-2x-1" or
// "2x-3".  Accepted syntax: optional signs, integer coefficients, variable
// 'x', caret powers, optional spaces.
inline Poly parse_int_poly(const std::string& text) {
    std::vector<Rat> coeffs;
    auto bump = [&coeffs](int pow, const Int& value) {
        if (pow > kDegreeCap) throw ParseError("power beyond supported degree");
        if (static_cast<int>(coeffs.size()) <= pow) coeffs.resize(static_cast<std::size_t>(pow) + 1, Rat(0));
        coeffs[static_cast<std::size_t>(pow)] += Rat(value);
    };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial");
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sgn = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(i));
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        bool has_var = i < text.size() && text[i] == 'x';
        if (!has_var && digits.empty()) throw ParseError("expected term at position " + std::to_string(i));
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        if (sgn < 0) coeff = -coeff;
        int pow = 0;
        if (has_var) {
            ++i;
            pow = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string pd;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) pd += text[i++];
                if (pd.empty()) throw ParseError("missing exponent after '^'");
                pow = std::stoi(pd);
            }
        }
        bump(pow, coeff);
        any = true;
        skip_ws();
    }
    return Poly(std::move(coeffs));
}

} // namespace geo5
