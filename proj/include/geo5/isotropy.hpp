#pragma once
//
// The poset of closed connected subgroups of SO(5) that occur as point
// stabilizers of 5-dimensional maximal model geometries, ordered by
// inclusion up to conjugacy.
//
// Nodes (13):
//   SO(5), SO(4), SO(3)xSO(2), SO(3)_5, U(2), SU(2), SO(3),
//   SO(2)xSO(2) (the maximal torus T^2),
//   four kinds of circles inside T^2, classified by a slope:
//     S1_0 = SO(2)  (slope 0: rotation in a single 2-plane),
//     S1_1          (slope 1: the diagonal circle, center of U(2)),
//     S1_{1/2}      (slope 1/2: the circle contained in SO(3)_5),
//     S1_{m/n}      (generic slope; acts with weights (m, n) on V_m + V_n + R),
//   and the trivial group {1}.
//
// SO(3)_5 denotes SO(3) in its 5-dimensional irreducible representation.
// A circle of slope q is conjugate to one of slope 1/q (swap the two
// invariant 2-planes) and of slope -q (reverse one plane's orientation),
// so slopes are canonicalized to the interval [0, 1].
//
// Cover relations (each line is a chain of covers):
//   SO(5) -- SO(4) -- U(2) -- SU(2) -- S1_1 -- 1
//   SO(5) -- SO(3)xSO(2) -- SO(3) -- SO(2) -- 1
//   SO(5) -- SO(3)_5 -- S1_{1/2} -- 1
//   SO(4) -- SO(3);  SO(3)xSO(2) -- T^2 -- SO(2);  U(2) -- T^2 -- S1_1;
//   T^2 -- S1_{m/n} -- 1;  T^2 -- S1_{1/2}
//
// `contains(a, b)` decides b <= a in the reflexive-transitive closure.
// A circle of specific non-named slope (e.g. S1_{2/3}) is an instance of
// the generic family: it sits below T^2 and above {1}, and is comparable
// to another circle only when the canonical slopes agree.

#include <geo5/error.hpp>
#include <geo5/rat.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace geo5 {

enum class StabKind {
    SO5,
    SO4,
    SO3xSO2,
    SO3_5,
    U2,
    SU2,
    SO3,
    T2,      // SO(2) x SO(2)
    S1,      // a circle in T^2; `slope` set = specific, unset = generic family node
    Trivial,
};

struct Stabilizer {
    StabKind kind = StabKind::Trivial;
    std::optional<Rat> slope;  // only meaningful for kind == S1; canonical in [0, 1]

    friend bool operator==(const Stabilizer& a, const Stabilizer& b) {
        if (a.kind != b.kind) return false;
        if (a.kind != StabKind::S1) return true;
        if (a.slope.has_value() != b.slope.has_value()) return false;
        return !a.slope.has_value() || *a.slope == *b.slope;
    }
    friend bool operator!=(const Stabilizer& a, const Stabilizer& b) { return !(a == b); }
};

namespace isotropy {

inline Rat canonical_slope(Rat q) {
    q = abs(q);
    if (q > Rat(1)) q = q.inv();
    return q;
}

inline Stabilizer make_circle(const Rat& slope) {
    return Stabilizer{StabKind::S1, canonical_slope(slope)};
}

// The 13 poset nodes, top to bottom.
inline const std::vector<Stabilizer>& nodes() {
    static const std::vector<Stabilizer> all = {
        {StabKind::SO5, std::nullopt},
        {StabKind::SO4, std::nullopt},
        {StabKind::SO3xSO2, std::nullopt},
        {StabKind::SO3_5, std::nullopt},
        {StabKind::U2, std::nullopt},
        {StabKind::SU2, std::nullopt},
        {StabKind::SO3, std::nullopt},
        {StabKind::T2, std::nullopt},
        {StabKind::S1, Rat(1)},          // S1_1
        {StabKind::S1, std::nullopt},    // S1_{m/n}, generic
        {StabKind::S1, Rat(0)},          // SO(2)
        {StabKind::S1, Rat(1, 2)},       // S1_{1/2}
        {StabKind::Trivial, std::nullopt},
    };
    return all;
}

inline int dim(const Stabilizer& s) {
    switch (s.kind) {
        case StabKind::SO5: return 10;
        case StabKind::SO4: return 6;
        case StabKind::SO3xSO2: return 4;
        case StabKind::U2: return 4;
        case StabKind::SO3_5: return 3;
        case StabKind::SU2: return 3;
        case StabKind::SO3: return 3;
        case StabKind::T2: return 2;
        case StabKind::S1: return 1;
        case StabKind::Trivial: return 0;
    }
    throw Error("unknown stabilizer kind");
}

inline std::string name(const Stabilizer& s) {
    switch (s.kind) {
        case StabKind::SO5: return "SO(5)";
        case StabKind::SO4: return "SO(4)";
        case StabKind::SO3xSO2: return "SO(3)xSO(2)";
        case StabKind::SO3_5: return "SO(3)_5";
        case StabKind::U2: return "U(2)";
        case StabKind::SU2: return "SU(2)";
        case StabKind::SO3: return "SO(3)";
        case StabKind::T2: return "SO(2)xSO(2)";
        case StabKind::Trivial: return "1";
        case StabKind::S1: break;
    }
    if (!s.slope) return "S1_{m/n}";
    if (*s.slope == Rat(0)) return "SO(2)";
    if (*s.slope == Rat(1)) return "S1_1";
    return "S1_{" + s.slope->str() + "}";
}

namespace detail {

// Index of a node in nodes(), or npos for a circle instance of
// non-named specific slope (those are handled outside the closure table).
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t node_index(const Stabilizer& s) {
    const auto& all = nodes();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == s) return i;
    return npos;
}

// Reflexive-transitive closure of the cover relations, as a 13x13 table:
// reach[i][j] == true  iff  node j <= node i.
inline const std::array<std::array<bool, 13>, 13>& closure() {
    static const auto table = [] {
        std::array<std::array<bool, 13>, 13> reach{};
        auto idx = [](StabKind k, std::optional<Rat> sl = std::nullopt) {
            return node_index(Stabilizer{k, std::move(sl)});
        };
        const std::size_t so5 = idx(StabKind::SO5), so4 = idx(StabKind::SO4),
                          so3so2 = idx(StabKind::SO3xSO2), so35 = idx(StabKind::SO3_5),
                          u2 = idx(StabKind::U2), su2 = idx(StabKind::SU2),
                          so3 = idx(StabKind::SO3), t2 = idx(StabKind::T2),
                          s11 = idx(StabKind::S1, Rat(1)), s1mn = idx(StabKind::S1),
                          so2 = idx(StabKind::S1, Rat(0)),
                          s12 = idx(StabKind::S1, Rat(1, 2)),
                          triv = idx(StabKind::Trivial);
        const std::pair<std::size_t, std::size_t> covers[] = {
            {so5, so4},    {so5, so3so2}, {so5, so35},  {so4, u2},   {so4, so3},
            {so3so2, so3}, {so3so2, t2},  {so35, s12},  {u2, su2},   {u2, t2},
            {su2, s11},    {so3, so2},    {t2, so2},    {t2, s11},   {t2, s1mn},
            {t2, s12},     {s11, triv},   {so2, triv},  {s1mn, triv}, {s12, triv},
        };
        for (std::size_t i = 0; i < 13; ++i) reach[i][i] = true;
        for (auto [a, b] : covers) reach[a][b] = true;
        // Floyd-Warshall boolean closure.
        for (std::size_t k = 0; k < 13; ++k)
            for (std::size_t i = 0; i < 13; ++i)
                if (reach[i][k])
                    for (std::size_t j = 0; j < 13; ++j)
                        if (reach[k][j]) reach[i][j] = true;
        return reach;
    }();
    return table;
}

}  // namespace detail

// True iff b is (conjugate into) a subgroup of a.
inline bool contains(const Stabilizer& a, const Stabilizer& b) {
    if (a == b) return true;
    const std::size_t ia = detail::node_index(a);
    const std::size_t ib = detail::node_index(b);
    if (ia != detail::npos && ib != detail::npos) return detail::closure()[ia][ib];
    // At least one side is a circle of specific non-named slope. Such a
    // circle lies strictly between T^2 and {1} and is comparable to no
    // other circle.
    if (ib == detail::npos) {
        // b is a circle instance: b <= a iff T^2 <= a.
        const std::size_t t2 = detail::node_index(Stabilizer{StabKind::T2, std::nullopt});
        return ia != detail::npos && detail::closure()[ia][t2];
    }
    // a is a circle instance: b <= a iff b is trivial.
    return b.kind == StabKind::Trivial;
}

// Parse an ASCII node label as produced by name(), plus a few aliases.
// Accepts: SO(5), SO(4), SO(3)xSO(2), SO(3)_5, U(2), SU(2), SO(3),
// SO(2)xSO(2), T^2, SO(2), S1_0, S1_1, S1_{m/n}, S1_{p/q} with integers
// p, q, 1, {1}.
inline Stabilizer parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s == "SO(5)") return {StabKind::SO5, std::nullopt};
    if (s == "SO(4)") return {StabKind::SO4, std::nullopt};
    if (s == "SO(3)xSO(2)") return {StabKind::SO3xSO2, std::nullopt};
    if (s == "SO(3)_5") return {StabKind::SO3_5, std::nullopt};
    if (s == "U(2)") return {StabKind::U2, std::nullopt};
    if (s == "SU(2)") return {StabKind::SU2, std::nullopt};
    if (s == "SO(3)") return {StabKind::SO3, std::nullopt};
    if (s == "SO(2)xSO(2)" || s == "T^2" || s == "T2") return {StabKind::T2, std::nullopt};
    if (s == "SO(2)" || s == "S1_0") return {StabKind::S1, Rat(0)};
    if (s == "1" || s == "{1}") return {StabKind::Trivial, std::nullopt};
    if (s.rfind("S1_", 0) == 0) {
        std::string inner = s.substr(3);
        if (!inner.empty() && inner.front() == '{' && inner.back() == '}')
            inner = inner.substr(1, inner.size() - 2);
        if (inner == "m/n") return {StabKind::S1, std::nullopt};
        return make_circle(Rat::parse(inner));  // ParseError on junk
    }
    throw ParseError("unknown stabilizer label: " + text);
}

}  // namespace isotropy
}  // namespace geo5
