#include <catch2/catch_amalgamated.hpp>

#include "geo5/liealg.hpp"

using namespace geo5;

namespace {

// [e_i, e_j] = q e_k with 1-based indices, mirroring the usual tables.
void br(LieAlgebra& L, int i, int j, int k, long long q) {
    L.set_bracket_term(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                       static_cast<std::size_t>(k - 1), Rat(q));
}

LieAlgebra heis3() {
    LieAlgebra L(3);
    br(L, 1, 2, 3, 1);
    return L;
}

LieAlgebra sl2() {
    LieAlgebra L(3); // h, e, f
    br(L, 1, 2, 2, 2);
    br(L, 1, 3, 3, -2);
    br(L, 2, 3, 1, 1);
    return L;
}

// R^4 x| R with e5 acting as a single nilpotent Jordan block of size 4.
LieAlgebra filiform_a52() {
    LieAlgebra L(5);
    br(L, 5, 1, 2, 1);
    br(L, 5, 2, 3, 1);
    br(L, 5, 3, 4, 1);
    return L;
}

LieAlgebra a56() {
    LieAlgebra L(5);
    br(L, 4, 3, 2, 1);
    br(L, 4, 2, 1, 1);
    br(L, 5, 4, 3, 1);
    br(L, 5, 3, 1, 1);
    return L;
}

LieAlgebra a55() {
    LieAlgebra L(5);
    br(L, 4, 3, 2, 1);
    br(L, 4, 2, 1, 1);
    br(L, 5, 3, 1, 1);
    return L;
}

LieAlgebra heis5() {
    LieAlgebra L(5);
    br(L, 1, 2, 5, 1);
    br(L, 3, 4, 5, 1);
    return L;
}

// R^3 x| the full diagonal {xyz=1} torus: two commuting diagonal actions.
LieAlgebra a533() {
    LieAlgebra L(5);
    br(L, 4, 1, 1, 1);
    br(L, 4, 2, 2, -1);
    br(L, 5, 2, 2, 1);
    br(L, 5, 3, 3, -1);
    return L;
}

// Same abelianization shape but the torus replaced by scaling + rotation.
LieAlgebra a533_rotation_variant() {
    LieAlgebra L(5);
    br(L, 4, 1, 1, 1);
    br(L, 4, 2, 2, 1);
    br(L, 4, 3, 3, -2);
    br(L, 5, 1, 2, 1);
    br(L, 5, 2, 1, -1);
    return L;
}

// R^4 x| R with elementary divisors x^2, x-1, x+1.
LieAlgebra a58() {
    LieAlgebra L(5);
    br(L, 5, 2, 1, 1);
    br(L, 5, 3, 3, 1);
    br(L, 5, 4, 4, -1);
    return L;
}

// (R x Heis3) x| R, hyperbolic on the Heisenberg wings, e4 -> e1.
LieAlgebra a520() {
    LieAlgebra L(5);
    br(L, 2, 3, 1, 1);
    br(L, 5, 2, 2, 1);
    br(L, 5, 3, 3, -1);
    br(L, 5, 4, 1, 1);
    return L;
}

LieAlgebra aff_r_plus_r3() {
    LieAlgebra L(5);
    br(L, 1, 2, 2, 1); // [e1,e2] = e2: the affine line, not unimodular
    return L;
}

} // namespace

TEST_CASE("validation accepts the references and reports first violations", "[liealg]") {
    REQUIRE(heis3().validate().ok);
    REQUIRE(sl2().validate().ok);
    REQUIRE(filiform_a52().validate().ok);
    REQUIRE(a56().validate().ok);
    REQUIRE(a533().validate().ok);
    REQUIRE(a520().validate().ok);

    LieAlgebra bad(3);
    bad.set_structure_raw(0, 1, 2, Rat(1)); // mirror never written
    ValidationReport rep = bad.validate();
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.message.find("antisymmetry") != std::string::npos);
    REQUIRE(rep.indices[0] == 0);
    REQUIRE(rep.indices[1] == 1);
    REQUIRE(rep.indices[2] == 2);

    // [e1,e2]=e3, [e1,e3]=e1 violates Jacobi on (1,2,3)
    LieAlgebra jb(3);
    br(jb, 1, 2, 3, 1);
    br(jb, 1, 3, 1, 1);
    ValidationReport jrep = jb.validate();
    REQUIRE_FALSE(jrep.ok);
    REQUIRE(jrep.message.find("Jacobi") != std::string::npos);
}

TEST_CASE("adjoint convention: columns are [x, e_j]", "[liealg]") {
    LieAlgebra L = heis3();
    Vec e1{Rat(1), Rat(0), Rat(0)};
    Mat ad1 = L.ad(e1);
    REQUIRE(ad1.at(2, 1) == Rat(1)); // [e1, e2] = e3
    REQUIRE(ad1.col(0) == Vec{Rat(0), Rat(0), Rat(0)});
    REQUIRE(L.bracket(e1, Vec{Rat(0), Rat(1), Rat(0)}) == Vec{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("series dimensions", "[liealg]") {
    REQUIRE(heis3().lower_central_dims() == std::vector<int>{3, 1, 0});
    REQUIRE(filiform_a52().lower_central_dims() == std::vector<int>{5, 3, 2, 1, 0});
    REQUIRE(a56().lower_central_dims() == std::vector<int>{5, 3, 2, 1, 0});
    REQUIRE(a533().lower_central_dims() == std::vector<int>{5, 3});
    REQUIRE(LieAlgebra(5).lower_central_dims() == std::vector<int>{5, 0});
    REQUIRE(filiform_a52().derived_dims() == std::vector<int>{5, 3, 0});
    REQUIRE(sl2().derived_dims() == std::vector<int>{3});
    REQUIRE(heis3().is_nilpotent());
    REQUIRE_FALSE(a533().is_nilpotent());
    REQUIRE(a533().is_solvable());
    REQUIRE_FALSE(sl2().is_solvable());
}

TEST_CASE("center and unimodularity", "[liealg]") {
    REQUIRE(heis3().center().dim() == 1);
    REQUIRE(heis5().center().dim() == 1);
    REQUIRE(a520().center().dim() == 1);
    REQUIRE(a533().center().dim() == 0);
    REQUIRE(LieAlgebra(5).center().dim() == 5);
    REQUIRE(a533().is_unimodular());
    REQUIRE(filiform_a52().is_unimodular());
    REQUIRE_FALSE(aff_r_plus_r3().is_unimodular());
}

TEST_CASE("Killing signature distinguishes split from rotated diagonal actions", "[liealg]") {
    REQUIRE(a533().killing_signature() == SymSignature{2, 0, 3});
    REQUIRE(a533_rotation_variant().killing_signature() == SymSignature{1, 1, 3});
    REQUIRE(heis3().killing_signature() == SymSignature{0, 0, 3});
    // sl2 is split simple: signature (2,1)
    REQUIRE(sl2().killing_signature() == SymSignature{2, 1, 0});
}

TEST_CASE("basis change preserves invariants and composes", "[liealg]") {
    LieAlgebra L = a520();
    Mat p{{Rat(1), Rat(0), Rat(1), Rat(0), Rat(2)},
          {Rat(0), Rat(1), Rat(1), Rat(0), Rat(0)},
          {Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)},
          {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0)},
          {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}};
    LieAlgebra M = L.basis_change(p);
    REQUIRE(M.validate().ok);
    REQUIRE(M.lower_central_dims() == L.lower_central_dims());
    REQUIRE(M.derived_dims() == L.derived_dims());
    REQUIRE(M.center().dim() == L.center().dim());
    REQUIRE(M.killing_signature() == L.killing_signature());
    REQUIRE(M.is_unimodular() == L.is_unimodular());
    // changing back with the inverse restores the table
    LieAlgebra back = M.basis_change(inverse(p));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) REQUIRE(back.structure(i, j) == L.structure(i, j));
    Mat sing(5, 5);
    REQUIRE_THROWS_AS(L.basis_change(sing), DegenerateInput);
}

TEST_CASE("nilradical: certified branches", "[liealg]") {
    // nilpotent: the whole algebra
    auto nr1 = nilradical(filiform_a52());
    REQUIRE(nr1.certified);
    REQUIRE(nr1.space.dim() == 5);

    // abelianization of dim 1: nilradical = derived subalgebra
    LieAlgebra a57(5);
    br(a57, 5, 1, 1, 1);
    br(a57, 5, 2, 2, 2);
    br(a57, 5, 3, 3, 3);
    br(a57, 5, 4, 4, -6);
    auto nr2 = nilradical(a57);
    REQUIRE(nr2.certified);
    REQUIRE(nr2.space.dim() == 4);
    REQUIRE(nr2.space == Subspace::span({{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)},
                                         {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)},
                                         {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)},
                                         {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}},
                                        5));

    // abelianization of dim 2, extra nilpotent direction found via the pencil
    auto nr3 = nilradical(a58());
    REQUIRE(nr3.certified);
    REQUIRE(nr3.space.dim() == 4);
    REQUIRE(nr3.space.contains(Vec{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}));

    auto nr4 = nilradical(a520());
    REQUIRE(nr4.certified);
    REQUIRE(nr4.space.dim() == 4);
    REQUIRE(nr4.space.contains(Vec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)}));

    // abelianization of dim 2 with no extra nilpotent coset
    auto nr5 = nilradical(a533());
    REQUIRE(nr5.certified);
    REQUIRE(nr5.space.dim() == 3);

    REQUIRE_THROWS_AS(nilradical(sl2()), NotSolvable);
}

TEST_CASE("nilradical is basis-change invariant on the certified branches", "[liealg]") {
    LieAlgebra L = a58();
    Mat p{{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)},
          {Rat(0), Rat(1), Rat(2), Rat(0), Rat(0)},
          {Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)},
          {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)},
          {Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}};
    LieAlgebra M = L.basis_change(p);
    auto nr = nilradical(M);
    REQUIRE(nr.certified);
    REQUIRE(nr.space.dim() == 4);
    // push the nilradical of M forward through p: must be the nilradical of L
    std::vector<Vec> pushed;
    for (const auto& v : nr.space.basis()) pushed.push_back(p * v);
    REQUIRE(Subspace::span(pushed, 5) == nilradical(L).space);
}

TEST_CASE("4-dimensional abelian ideal detection", "[liealg]") {
    REQUIRE(has_abelian_ideal_dim4(filiform_a52()));
    REQUIRE_FALSE(has_abelian_ideal_dim4(a56()));
    REQUIRE_FALSE(has_abelian_ideal_dim4(a55()));
    REQUIRE_FALSE(has_abelian_ideal_dim4(heis5()));
    REQUIRE(has_abelian_ideal_dim4(LieAlgebra(5)));

    // Nil4 x R: ideal spans the three bottom layers plus the split line
    LieAlgebra nil4xe(5);
    br(nil4xe, 5, 1, 2, 1);
    br(nil4xe, 5, 2, 3, 1);
    REQUIRE(has_abelian_ideal_dim4(nil4xe));

    // R^4 x| (x^2, x^2): two size-2 nilpotent blocks
    LieAlgebra a51(5);
    br(a51, 5, 1, 2, 1);
    br(a51, 5, 3, 4, 1);
    REQUIRE(has_abelian_ideal_dim4(a51));

    REQUIRE_THROWS_AS(has_abelian_ideal_dim4(a533()), WrongBranch);
    REQUIRE_THROWS_AS(has_abelian_ideal_dim4(heis3()), WrongDimension);
}

TEST_CASE("ideal detection is basis-change invariant", "[liealg]") {
    Mat p{{Rat(1), Rat(0), Rat(0), Rat(1), Rat(0)},
          {Rat(2), Rat(1), Rat(0), Rat(0), Rat(0)},
          {Rat(0), Rat(0), Rat(1), Rat(0), Rat(3)},
          {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)},
          {Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)}};
    REQUIRE(has_abelian_ideal_dim4(filiform_a52().basis_change(p)));
    REQUIRE_FALSE(has_abelian_ideal_dim4(a56().basis_change(p)));
    REQUIRE_FALSE(has_abelian_ideal_dim4(heis5().basis_change(p)));
}
