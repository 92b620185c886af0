#include <catch2/catch_amalgamated.hpp>

#include <geo5/groups.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace geo5;

namespace {

GroupElement elt(const std::string& id, std::vector<double> c) { return {id, std::move(c)}; }

double coord_gap(const GroupElement& a, const GroupElement& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.coords.size(); ++k) {
        const double scale = std::max({1.0, std::fabs(a.coords[k]), std::fabs(b.coords[k])});
        worst = std::max(worst, std::fabs(a.coords[k] - b.coords[k]) / scale);
    }
    return worst;
}

GroupElement random_element(const GroupModel& m, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> c(m.dim());
    for (double& x : c) x = dist(rng);
    return {m.id, std::move(c)};
}

GroupElementQ random_element_q(const GroupModel& m, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> c(m.dim());
    for (Rat& x : c) x = Rat(num(rng)) / Rat(den(rng));
    return {m.id, std::move(c)};
}

}  // namespace

TEST_CASE("the Heisenberg model reproduces the classical group law") {
    const GroupElement a = elt("heis3", {1, 0, 0});
    const GroupElement b = elt("heis3", {0, 1, 0});

    const GroupElement ab = mul(a, b);
    CHECK(ab.coords == std::vector<double>{1, 1, 1});

    // group commutator a b a^-1 b^-1 lands on twice the center generator
    const GroupElement c = mul(mul(mul(a, b), inv(a)), inv(b));
    CHECK(c.coords == std::vector<double>{0, 0, 2});

    const GroupElement e = identity_element("heis3");
    CHECK(mul(a, e) == a);
    CHECK(mul(e, b) == b);
    CHECK(mul(a, inv(a)) == e);
    CHECK(inv(inv(a)) == a);

    // z-coordinate of the product carries x y' - y x'
    const GroupElement g = elt("heis3", {2, -1, 3});
    const GroupElement h = elt("heis3", {1, 4, -2});
    CHECK(mul(g, h).coords == std::vector<double>{3, 3, 1 + (2 * 4 - (-1) * 1)});
}

TEST_CASE("closed-form exp and log invert each other on the Heisenberg models") {
    CHECK(heis_exp("heis3", {0, 0, 0}) == identity_element("heis3"));
    CHECK(heis_exp("heis5", {0, 0, 0, 0, 0}) == identity_element("heis5"));

    const std::vector<double> v = {0.25, -1.5, 2.0};
    const std::vector<double> back = heis_log(heis_exp("heis3", v));
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::fabs(back[k] - v[k]) < 1e-12);

    // exp(e1) exp(e2) = exp(e1 + e2 + e3) because [e1, e2] = 2 e3 here
    const GroupElement lhs = mul(heis_exp("heis3", {1, 0, 0}), heis_exp("heis3", {0, 1, 0}));
    CHECK(lhs == heis_exp("heis3", {1, 1, 1}));

    // in the 5-dim model [e1, e2] = e5, so the correction is half a center unit
    const GroupElement lhs5 = mul(heis_exp("heis5", {1, 0, 0, 0, 0}),
                                  heis_exp("heis5", {0, 1, 0, 0, 0}));
    CHECK(lhs5 == heis_exp("heis5", {1, 1, 0, 0, 0.5}));
    // commuting directions add with no correction
    const GroupElement lhc = mul(heis_exp("heis5", {1, 0, 0, 0, 0}),
                                 heis_exp("heis5", {0, 0, 1, 0, 0}));
    CHECK(lhc == heis_exp("heis5", {1, 0, 1, 0, 0}));

    CHECK_THROWS_AS(heis_exp("sol3xe2", {0, 0, 0, 0, 0}), NotAGroup);
    CHECK_THROWS_AS(heis_log(identity_element("a52")), NotAGroup);
    CHECK_THROWS_AS(heis_exp("heis3", {1, 0}), ShapeMismatch);
}

TEST_CASE("the model registry covers exactly the solvable constructed entries") {
    const std::vector<std::string> ids = group_model_ids();
    CHECK(ids.size() == 22);
    CHECK(std::find(ids.begin(), ids.end(), "heis3") != ids.end());

    std::size_t solvable_constructed = 0;
    for (const AtlasEntry& e : atlas()) {
        if (!e.has_constructor) continue;
        if (!build_algebra(e.id).is_solvable()) continue;
        ++solvable_constructed;
        CHECK(std::find(ids.begin(), ids.end(), e.id) != ids.end());
    }
    CHECK(solvable_constructed == 21);

    for (const std::string& id : ids) {
        const GroupModel& m = group_model(id);
        // ideal and torus slots partition the coordinates
        std::set<std::size_t> seen(m.ideal.begin(), m.ideal.end());
        for (std::size_t a : m.torus) seen.insert(a);
        CHECK(seen.size() == m.dim());
        CHECK(m.ideal.size() + m.torus.size() == m.dim());
        CHECK(m.torus.size() <= 2);
    }

    // torus ranks as derived from the bracket tables
    CHECK(group_model("heis5").torus.empty());
    CHECK(group_model("nil4xe").torus.empty());
    CHECK(group_model("a52").torus == std::vector<std::size_t>{4});
    CHECK(group_model("sol3xe2").torus == std::vector<std::size_t>{4});
    CHECK(group_model("a533").torus == (std::vector<std::size_t>{3, 4}));

    // polynomial laws: the pure bch models plus the two nilpotent-action splits
    const std::set<std::string> expect_exact = {"heis3", "e5",   "a51",    "a52",      "a53",
                                                "heis5", "a55",  "a56",    "nil4xe",   "heis3xe2"};
    for (const std::string& id : ids) CHECK(group_model(id).exact == (expect_exact.count(id) > 0));

    // display names resolve to the same models
    CHECK(&group_model("Heis_5") == &group_model("heis5"));
}

TEST_CASE("group axioms hold numerically for every model") {
    std::mt19937 rng(12345);
    for (const std::string& id : group_model_ids()) {
        INFO("model " << id);
        const GroupModel& m = group_model(id);
        const GroupElement e = identity_element(id);
        for (int trial = 0; trial < 20; ++trial) {
            const GroupElement a = random_element(m, rng);
            const GroupElement b = random_element(m, rng);
            const GroupElement c = random_element(m, rng);
            CHECK(coord_gap(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-10);
            CHECK(coord_gap(mul(a, inv(a)), e) < 1e-12);
            CHECK(coord_gap(mul(inv(a), a), e) < 1e-12);
            CHECK(coord_gap(inv(inv(a)), a) < 1e-12);
            // identity laws are exact: the zero element never perturbs
            CHECK(mul(a, e) == a);
            CHECK(mul(e, a) == a);
        }
    }
}

TEST_CASE("the exact-rational law certifies the polynomial models") {
    std::mt19937 rng(777);
    std::size_t exact_models = 0;
    for (const std::string& id : group_model_ids()) {
        const GroupModel& m = group_model(id);
        if (!m.exact) {
            CHECK_THROWS_AS(identity_element_q(id), Error);
            continue;
        }
        ++exact_models;
        INFO("model " << id);
        const GroupElementQ e = identity_element_q(id);
        for (int trial = 0; trial < 10; ++trial) {
            const GroupElementQ a = random_element_q(m, rng);
            const GroupElementQ b = random_element_q(m, rng);
            const GroupElementQ c = random_element_q(m, rng);
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a, inv(a)) == e);
            CHECK(mul(inv(a), a) == e);
            CHECK(inv(inv(a)) == a);
            CHECK(mul(a, e) == a);

            // floating law agrees with the exact one
            auto dbl = [&](const GroupElementQ& g) {
                std::vector<double> c2(g.coords.size());
                for (std::size_t k = 0; k < c2.size(); ++k) c2[k] = g.coords[k].to_double();
                return GroupElement{g.model, std::move(c2)};
            };
            CHECK(coord_gap(mul(dbl(a), dbl(b)), dbl(mul(a, b))) < 1e-12);
        }
    }
    CHECK(exact_models == 10);
}

TEST_CASE("split models act by the exponentiated adjoint") {
    // one-parameter torus: conjugation scales the ideal by exp(t D)
    {
        const GroupElement t = elt("sol3xe2", {0, 0, 0, 0, 0.7});
        const GroupElement x = elt("sol3xe2", {2, 3, 1, -1, 0});
        const GroupElement p = mul(t, x);
        CHECK(std::fabs(p.coords[0] - 2 * std::exp(0.7)) < 1e-13);
        CHECK(std::fabs(p.coords[1] - 3 * std::exp(-0.7)) < 1e-13);
        CHECK(p.coords[2] == 1.0);
        CHECK(p.coords[3] == -1.0);
        CHECK(p.coords[4] == 0.7);
    }
    // rank-two torus: both parameters act diagonally and independently
    {
        const GroupElement t = elt("a533", {0, 0, 0, 0.5, -0.25});
        const GroupElement x = elt("a533", {1, 1, 1, 0, 0});
        const GroupElement p = mul(t, x);
        CHECK(std::fabs(p.coords[0] - std::exp(0.5)) < 1e-13);
        CHECK(std::fabs(p.coords[1] - std::exp(-0.5 - 0.25)) < 1e-13);
        CHECK(std::fabs(p.coords[2] - std::exp(0.25)) < 1e-13);
    }
    // nilpotent action: the law is polynomial, so exact arithmetic applies
    {
        const Rat t = Rat(3) / Rat(2);
        const GroupElementQ g = make_element_q("a52", {Rat(0), Rat(0), Rat(0), Rat(0), t});
        const GroupElementQ x = make_element_q("a52", {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
        const GroupElementQ p = mul(g, x);
        CHECK(p.coords[0] == Rat(1));
        CHECK(p.coords[1] == t);
        CHECK(p.coords[2] == t * t / Rat(2));
        CHECK(p.coords[3] == t * t * t / Rat(6));
        CHECK(p.coords[4] == t);
    }
}

TEST_CASE("the commutator derivative recovers the bracket on every model") {
    for (const std::string& id : group_model_ids()) {
        INFO("model " << id);
        const GroupModel& m = group_model(id);
        CHECK(commutator_derivative_check(m, m.algebra, 1e-4) < 1e-6);
    }

    // the abelian model commutes exactly, so the deviation is pure zero
    const GroupModel& ab = group_model("e5");
    CHECK(commutator_derivative_check(ab, ab.algebra, 1e-4) == 0.0);

    // diagonal weights (1, 2, 3, -6): the named spot-check
    const GroupModel& dg = group_model("a57_diag");
    CHECK(commutator_derivative_check("a57_diag", dg.algebra, 1e-4) < 1e-6);

    // a deliberately wrong bracket is noticed
    LieAlgebra wrong(3);
    wrong.set_bracket_term(0, 1, 2, Rat(5));
    CHECK(commutator_derivative_check("heis3", wrong, 1e-4) > 1e-2);

    CHECK_THROWS_AS(commutator_derivative_check("heis3", build_algebra("e5"), 1e-4),
                    ShapeMismatch);
    CHECK_THROWS_AS(commutator_derivative_check("heis3", group_model("heis3").algebra, 0.0),
                    DegenerateInput);
}

TEST_CASE("non-models and mismatches raise typed errors") {
    CHECK_THROWS_AS(group_model("r2_sl2"), NotAGroup);
    CHECK_THROWS_AS(group_model("s3xe2"), NotAGroup);
    CHECK_THROWS_AS(group_model("sl2xe2"), NotAGroup);
    CHECK_THROWS_AS(group_model("no-such-model"), NotAGroup);

    // a catalog entry without an explicit construction cannot be exponentiated
    for (const AtlasEntry& e : atlas()) {
        if (e.has_constructor) continue;
        CHECK_THROWS_AS(group_model(e.id), NotAGroup);
        break;
    }

    CHECK_THROWS_AS(mul(identity_element("heis3"), identity_element("heis5")), ModelMismatch);
    CHECK_THROWS_AS(mul(identity_element("a52"), identity_element("sol3xe2")), ModelMismatch);
    CHECK_THROWS_AS(make_element("heis3", {1, 2, 3, 4}), ShapeMismatch);
    CHECK_THROWS_AS(mul(elt("heis3", {1, 2}), elt("heis3", {1, 2})), ShapeMismatch);
    CHECK_THROWS_AS(make_element_q("sol3xe2", std::vector<Rat>(5, Rat(0))), Error);
}
