#include <catch2/catch_amalgamated.hpp>

#include "geo5/mat.hpp"
#include "geo5/poly.hpp"
#include "geo5/rat.hpp"

using namespace geo5;

namespace {

Poly P(std::initializer_list<long long> constant_first) {
    std::vector<Rat> c;
    for (auto v : constant_first) c.emplace_back(v);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("rational arithmetic and normalization", "[exact]") {
    REQUIRE(Rat(2, 4) == Rat(1, 2));
    REQUIRE(Rat(-2, -4) == Rat(1, 2));
    REQUIRE(Rat(2, -4) == Rat(-1, 2));
    REQUIRE(Rat(0, -7) == Rat(0));
    REQUIRE((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    REQUIRE((Rat(3, 4) * Rat(2, 9)) == Rat(1, 6));
    REQUIRE((Rat(1) / Rat(1, 3)) == Rat(3));
    REQUIRE(Rat(7, 3).str() == "7/3");
    REQUIRE(Rat(-4, 2).str() == "-2");
    REQUIRE(Rat::parse("7/3") == Rat(7, 3));
    REQUIRE(Rat::parse("-5") == Rat(-5));
    REQUIRE_THROWS_AS(Rat(1) / Rat(0), DegenerateInput);
    REQUIRE_THROWS_AS(Rat::parse("1/0"), ParseError);
    REQUIRE(Rat(1, 3) < Rat(1, 2));
    REQUIRE(Rat(-1, 2) < Rat(-1, 3));
}

TEST_CASE("polynomial arithmetic, division, parsing", "[exact]") {
    Poly p = parse_int_poly("x^3+x^2-2x-1");
    REQUIRE(p == P({-1, -2, 1, 1}));
    REQUIRE(parse_int_poly("2x-3") == P({-3, 2}));
    REQUIRE(parse_int_poly("x^4 - 6x^3 + 5x^2 - x + 1") == P({1, -1, 5, -6, 1}));
    REQUIRE(parse_int_poly("-x") == P({0, -1}));
    REQUIRE_THROWS_AS(parse_int_poly(""), ParseError);
    REQUIRE_THROWS_AS(parse_int_poly("x^"), ParseError);
    REQUIRE_THROWS_AS(parse_int_poly("y+1"), ParseError);

    Poly prod = P({-1, 1}) * P({1, 1}); // (x-1)(x+1)
    REQUIRE(prod == P({-1, 0, 1}));
    auto [q, r] = divmod(P({-1, 0, 1}), P({-1, 1}));
    REQUIRE(q == P({1, 1}));
    REQUIRE(r.is_zero());
    REQUIRE(p.eval(Rat(2)) == Rat(8 + 4 - 4 - 1));
    REQUIRE(p.str() == "x^3 + x^2 - 2x - 1");
    REQUIRE(P({0, -1, 0, 2}).str() == "2x^3 - x");
}

TEST_CASE("squarefree part", "[exact]") {
    // (x-1)^2 (x+1)^2 -> x^2 - 1
    Poly p = P({-1, 1}) * P({-1, 1}) * P({1, 1}) * P({1, 1});
    REQUIRE(squarefree_part(p) == P({-1, 0, 1}));
    REQUIRE(squarefree_part(P({-1, 0, 1})) == P({-1, 0, 1}));
    REQUIRE(squarefree_part(P({5})) == P({1}));
    REQUIRE_THROWS_AS(squarefree_part(Poly::zero()), DegenerateInput);
}

TEST_CASE("Sturm real-root counting", "[exact]") {
    REQUIRE(count_real_roots(parse_int_poly("x^3+x^2-2x-1")) == 3);
    REQUIRE(count_real_roots(parse_int_poly("x^3-6x^2+5x-1"),
                             Bound::at(Rat(0)), Bound::pos_inf()) == 3);
    REQUIRE(count_real_roots(parse_int_poly("x^2+1")) == 0);
    REQUIRE(count_real_roots(parse_int_poly("x^3-2")) == 1);
    REQUIRE(count_real_roots(parse_int_poly("x^2-2"), Bound::at(Rat(0)), Bound::at(Rat(2))) == 1);
    // repeated roots are counted once
    REQUIRE(count_real_roots(P({-1, 1}) * P({-1, 1}) * P({1, 1})) == 2);
    REQUIRE_THROWS_AS(count_real_roots(parse_int_poly("x^2-1"), Bound::at(Rat(1)), Bound::pos_inf()),
                      EndpointRoot);
    REQUIRE_THROWS_AS(count_real_roots(Poly::zero()), DegenerateInput);
}

TEST_CASE("root signatures", "[exact]") {
    // x^2 (x-1)(x+1): distinct 3, real 3, no pairs, zero multiplicity 2
    Poly p = P({0, 0, 1}) * P({-1, 1}) * P({1, 1});
    RootSignature s = root_signature(p);
    REQUIRE(s.distinct == 3);
    REQUIRE(s.real == 3);
    REQUIRE(s.complex_pairs == 0);
    REQUIRE(s.zero_mult == 2);
    REQUIRE(s.all_real);

    // (x^2+1)(x-1)(x+2): distinct 4, real 2, one pair, no zero root
    Poly q = P({1, 0, 1}) * P({-1, 1}) * P({2, 1});
    RootSignature t = root_signature(q);
    REQUIRE(t.distinct == 4);
    REQUIRE(t.real == 2);
    REQUIRE(t.complex_pairs == 1);
    REQUIRE(t.zero_mult == 0);
    REQUIRE_FALSE(t.all_real);
}

TEST_CASE("rational roots with multiplicity", "[exact]") {
    auto r1 = rational_roots(parse_int_poly("x^2-1"));
    REQUIRE(r1 == std::vector<Rat>{Rat(1), Rat(-1)});
    auto r2 = rational_roots(parse_int_poly("2x-3"));
    REQUIRE(r2 == std::vector<Rat>{Rat(3, 2)});
    // (x-1)^2 x: root 1 twice, root 0 once
    auto r3 = rational_roots(P({-1, 1}) * P({-1, 1}) * P({0, 1}));
    REQUIRE(r3 == std::vector<Rat>{Rat(1), Rat(1), Rat(0)});
    // x^2 - 2 has no rational roots
    REQUIRE(rational_roots(parse_int_poly("x^2-2")).empty());
}

TEST_CASE("Lagrange interpolation", "[exact]") {
    std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(5)}};
    REQUIRE(lagrange_interpolate(pts) == P({1, 0, 1})); // x^2 + 1
    REQUIRE_THROWS_AS(
        lagrange_interpolate({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}), DegenerateInput);
}

TEST_CASE("degree cap", "[exact]") {
    std::vector<Rat> big(18, Rat(1));
    REQUIRE_THROWS_AS(Poly(std::move(big)), DegreeCapExceeded);
    Poly x8 = P({0, 0, 0, 0, 0, 0, 0, 0, 1});
    REQUIRE_THROWS_AS(x8 * x8 * x8, DegreeCapExceeded);
}

TEST_CASE("matrix basics: rref, rank, kernel, det, inverse", "[exact]") {
    Mat m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    REQUIRE(rank(m) == 1);
    auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    REQUIRE(ker[0] == Vec{Rat(-2), Rat(1)});
    REQUIRE(det(m) == Rat(0));

    Mat a{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    REQUIRE(det(a) == Rat(1));
    Mat ai = inverse(a);
    REQUIRE(a * ai == Mat::identity(2));
    REQUIRE_THROWS_AS(inverse(m), DegenerateInput);
    REQUIRE_THROWS_AS(det(Mat(2, 3)), ShapeMismatch);
}

TEST_CASE("characteristic polynomial", "[exact]") {
    // companion matrix of x^3+x^2-2x-1 (column convention) has that charpoly
    Mat c{{Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(-1)}};
    REQUIRE(charpoly(c) == parse_int_poly("x^3+x^2-2x-1"));
    Mat d(4, 4);
    Vec diag{Rat(1), Rat(2), Rat(3), Rat(-6)};
    for (std::size_t i = 0; i < 4; ++i) d.at(i, i) = diag[i];
    Poly expect = Poly::constant(Rat(1));
    for (const auto& r : diag) expect = expect * Poly::linear_root(r);
    REQUIRE(charpoly(d) == expect);
    REQUIRE_THROWS_AS(charpoly(Mat(2, 3)), ShapeMismatch);
}

TEST_CASE("Jordan block counts", "[exact]") {
    // J2(1) + J2(-1): 2 blocks
    Mat j(4, 4);
    j.at(0, 0) = Rat(1); j.at(0, 1) = Rat(1); j.at(1, 1) = Rat(1);
    j.at(2, 2) = Rat(-1); j.at(2, 3) = Rat(1); j.at(3, 3) = Rat(-1);
    REQUIRE(jordan_block_count(j) == 2);
    // nilpotent single block (companion of x^4): 1 block
    Mat n(4, 4);
    n.at(1, 0) = Rat(1); n.at(2, 1) = Rat(1); n.at(3, 2) = Rat(1);
    REQUIRE(jordan_block_count(n) == 1);
    REQUIRE(jordan_block_count(Mat::identity(4)) == 4);
    // diagonalizable with repeated eigenvalues: diag(1,1,-1,-1) has 4 blocks
    Mat d(4, 4);
    d.at(0, 0) = Rat(1); d.at(1, 1) = Rat(1); d.at(2, 2) = Rat(-1); d.at(3, 3) = Rat(-1);
    REQUIRE(jordan_block_count(d) == 4);
}

TEST_CASE("subspace canonical form and operations", "[exact]") {
    std::vector<Vec> gens{{Rat(1), Rat(1), Rat(0)}, {Rat(2), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    Subspace s = Subspace::span(gens, 3);
    REQUIRE(s.dim() == 2);
    REQUIRE(s.contains(Vec{Rat(3), Rat(3), Rat(-7)}));
    REQUIRE_FALSE(s.contains(Vec{Rat(1), Rat(0), Rat(0)}));
    Subspace t = Subspace::span({{Rat(1), Rat(0), Rat(0)}}, 3);
    REQUIRE(sum(s, t) == Subspace::full(3));
    REQUIRE(s.contains(Vec{Rat(1), Rat(1), Rat(1)})); // so adding it changes nothing
    REQUIRE(sum(s, Subspace::span({{Rat(1), Rat(1), Rat(1)}}, 3)) == s);
    Subspace meet = intersect(s, Subspace::span({{Rat(1), Rat(1), Rat(5)}, {Rat(1), Rat(0), Rat(0)}}, 3));
    REQUIRE(meet.dim() == 1);
    REQUIRE(meet.contains(Vec{Rat(1), Rat(1), Rat(5)}));
    // canonical: different spanning sets, equal representation
    Subspace s2 = Subspace::span({{Rat(2), Rat(2), Rat(3)}, {Rat(0), Rat(0), Rat(1)}}, 3);
    REQUIRE(s == s2);
}

TEST_CASE("symmetric signature by congruence", "[exact]") {
    Mat a{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
    REQUIRE(symmetric_signature(a) == SymSignature{2, 0, 0});
    Mat b{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    REQUIRE(symmetric_signature(b) == SymSignature{1, 1, 0});
    Mat c(3, 3);
    c.at(0, 0) = Rat(6); c.at(1, 1) = Rat(-2);
    REQUIRE(symmetric_signature(c) == SymSignature{1, 1, 1});
    // congruence-invariant under P^T A P for invertible P
    Mat p{{Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(1), Rat(3)}, {Rat(1), Rat(0), Rat(1)}};
    Mat conj = p.transpose() * c * p;
    REQUIRE(symmetric_signature(conj) == SymSignature{1, 1, 1});
    Mat ns{{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
    REQUIRE_THROWS_AS(symmetric_signature(ns), ShapeMismatch);
}
