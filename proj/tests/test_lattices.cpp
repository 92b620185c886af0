#include <catch2/catch_amalgamated.hpp>

#include <geo5/lattices.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

using namespace geo5;

namespace {

bool has_failure(const UnitCubicCheck& c, const std::string& name) {
    return std::find(c.failures.begin(), c.failures.end(), name) != c.failures.end();
}

}  // namespace

TEST_CASE("the unit-cubic gate accepts the unit of the 2cos(2pi/7) field") {
    const UnitCubicCheck c = unit_cubic_check(parse_int_poly("x^3+x^2-2x-1"));
    CHECK(c.accepted);
    CHECK(c.failures.empty());
}

TEST_CASE("the unit-cubic gate names every violated invariant") {
    // one real root only (and a non-unit constant term)
    const UnitCubicCheck notreal = unit_cubic_check(parse_int_poly("x^3-2"));
    CHECK_FALSE(notreal.accepted);
    CHECK(has_failure(notreal, "not totally real"));
    CHECK(has_failure(notreal, "constant term not a unit"));
    CHECK_FALSE(has_failure(notreal, "reducible"));

    // a unit constant with a single real root fails on total reality alone
    const UnitCubicCheck onereal = unit_cubic_check(parse_int_poly("x^3+x-1"));
    CHECK_FALSE(onereal.accepted);
    CHECK(onereal.failures == std::vector<std::string>{"not totally real"});

    // rational roots 0, 1, -1 and a zero constant term
    const UnitCubicCheck reducible = unit_cubic_check(parse_int_poly("x^3-x"));
    CHECK_FALSE(reducible.accepted);
    CHECK(has_failure(reducible, "reducible"));
    CHECK(has_failure(reducible, "constant term not a unit"));
    CHECK_FALSE(has_failure(reducible, "not totally real"));

    // repeated root: (x-1)^2 (x+1) = x^3 - x^2 - x + 1
    const UnitCubicCheck sq = unit_cubic_check(parse_int_poly("x^3-x^2-x+1"));
    CHECK_FALSE(sq.accepted);
    CHECK(has_failure(sq, "not squarefree"));
    CHECK(has_failure(sq, "reducible"));

    // non-monic
    Poly nm = parse_int_poly("2x^3+x^2-2x-1");
    CHECK(has_failure(unit_cubic_check(nm), "not monic"));

    // fractional coefficient
    Poly fr({Rat(-1), Rat(1, 2), Rat(1), Rat(1)});
    CHECK(has_failure(unit_cubic_check(fr), "non-integer coefficients"));

    // wrong degree is a precondition violation, not a report
    CHECK_THROWS_AS(unit_cubic_check(parse_int_poly("x^2-2")), DegenerateInput);
}

TEST_CASE("the Dirichlet construction certifies the standard lattice") {
    const LatticeReport rep = dirichlet_lattice(parse_int_poly("x^3+x^2-2x-1"));

    // exact unit determinant
    CHECK(rep.det == Rat(1));

    // three real embeddings of 2cos(2pi/7)-conjugates: 1.247, -0.445, -1.802
    REQUIRE(rep.eigenvalues.size() == 3);
    CHECK(std::fabs(rep.eigenvalues[0] - (-1.8019377358048383)) < 1e-12);
    CHECK(std::fabs(rep.eigenvalues[1] - (-0.4450418679126288)) < 1e-12);
    CHECK(std::fabs(rep.eigenvalues[2] - 1.2469796037174672) < 1e-12);

    CHECK(std::fabs(rep.eigenvalue_product - 1.0) < 1e-10);
    CHECK(std::fabs(rep.log_sum) < 1e-10);
    CHECK(rep.relation_residual < 1e-9);
    CHECK(rep.condition_estimate < 1e3);

    // two embeddings are negative, so the square is the totally positive power
    CHECK(rep.unit_power == 2);

    // generators: three translations (columns of E) plus one torus element
    REQUIRE(rep.generators.size() == 4);
    CHECK(rep.generators[0].kind == "translation");
    CHECK(rep.generators[3].kind == "unit");
    for (int i = 0; i < 3; ++i) {
        CHECK(rep.generators[0].translation[static_cast<std::size_t>(i)] == 1.0);
        CHECK(rep.generators[3].translation[static_cast<std::size_t>(i)] == 0.0);
        CHECK(std::fabs(rep.generators[3].log_torus[static_cast<std::size_t>(i)] -
                        std::log(std::fabs(rep.eigenvalues[static_cast<std::size_t>(i)]))) <
              1e-15);
    }

    // the finite discreteness proxy clears its threshold
    CHECK(rep.discreteness_proxy);
    CHECK(rep.min_word_displacement > rep.discreteness_threshold);
    CHECK(rep.min_word_displacement < 10.0);  // words do reach near the basepoint
}

TEST_CASE("the Dirichlet construction rejects non-unit input by reason") {
    try {
        dirichlet_lattice(parse_int_poly("x^3-2"));
        FAIL("expected rejection");
    } catch (const DegenerateInput& e) {
        CHECK(std::string(e.what()).find("not totally real") != std::string::npos);
    }
    CHECK_THROWS_AS(dirichlet_lattice(parse_int_poly("x^3-x")), DegenerateInput);
}

TEST_CASE("another totally real unit cubic passes the same verification") {
    // x^3 - 3x - 1: discriminant 81, Galois cubic, roots ~ 1.879, -0.347, -1.532
    const LatticeReport rep = dirichlet_lattice(parse_int_poly("x^3-3x-1"));
    CHECK(rep.det == Rat(1));
    CHECK(std::fabs(rep.eigenvalue_product - 1.0) < 1e-10);
    CHECK(std::fabs(rep.log_sum) < 1e-10);
    CHECK(rep.relation_residual < 1e-9);
    CHECK(rep.discreteness_proxy);
}

TEST_CASE("the integer model search finds the canonical cubic witness") {
    const std::vector<double> target = target_from_polynomial(parse_int_poly("x^3-6x^2+5x-1"));
    REQUIRE(target.size() == 3);
    CHECK(target[0] == 1.0);
    CHECK(std::fabs(target[0] + target[1] + target[2]) < 1e-12);  // det-1 log sum

    const SolSearchResult res = sol_family_model_check(target, 10);
    REQUIRE(res.found);
    CHECK(res.witness == std::vector<int>{6, 5});
    CHECK(res.polynomial == parse_int_poly("x^3-6x^2+5x-1"));

    // determinism: repeated runs yield the identical witness
    const SolSearchResult again = sol_family_model_check(target, 10);
    CHECK(again.witness == res.witness);
}

TEST_CASE("the integer model search handles quartic targets") {
    // (x^2-3x+1)(x^2-4x+1) = x^4 - 7x^3 + 14x^2 - 7x + 1: all-real positive roots
    const Poly q = parse_int_poly("x^4-7x^3+14x^2-7x+1");
    const std::vector<double> target = target_from_polynomial(q);
    REQUIRE(target.size() == 4);

    const SolSearchResult res = sol_family_model_check(target, 15);
    REQUIRE(res.found);
    CHECK(res.witness == std::vector<int>{7, 14, 7});

    // every witness passes the root-signature sanity bundle
    const RootSignature sig = root_signature(res.polynomial);
    CHECK(sig.all_real);
    CHECK(sig.zero_mult == 0);
    CHECK(sig.distinct == 4);
}

TEST_CASE("targets outside the integer landscape report none-in-bound") {
    // log-weights that sum to a clearly nonzero value match no det-1 polynomial
    const SolSearchResult res = sol_family_model_check({1.0, 0.5, -0.3, -1.2}, 8);
    CHECK_FALSE(res.found);
    CHECK(res.witness.empty());
    CHECK(res.bound == 8);
}

TEST_CASE("malformed search targets are rejected") {
    CHECK_THROWS_AS(sol_family_model_check({1.0, -1.0}, 5), DegenerateInput);          // size
    CHECK_THROWS_AS(sol_family_model_check({0.9, -0.9, -1.0}, 5), DegenerateInput);    // leading
    CHECK_THROWS_AS(sol_family_model_check({1.0, -1.0, 0.0}, 5), DegenerateInput);     // order
    CHECK_THROWS_AS(sol_family_model_check({1.0, 0.0, -1.0}, 0), DegenerateInput);     // bound
    CHECK_THROWS_AS(sol_family_model_check({1.0, 0.0, -1.0}, 31), DegenerateInput);    // bound
}

TEST_CASE("search witnesses agree with the classifier normalization") {
    // the diagonal weights of Sol^4-type x E arise from an integer cubic; the
    // search must reproduce the defining polynomial of the catalog member
    const Poly q = parse_int_poly("x^3-5x^2+6x-1");
    const RootSignature sig = root_signature(q);
    REQUIRE(sig.all_real);
    REQUIRE(sig.distinct == 3);
    const SolSearchResult res = sol_family_model_check(target_from_polynomial(q), 30);
    REQUIRE(res.found);
    CHECK(res.witness == std::vector<int>{5, 6});
}
