#include <catch2/catch_amalgamated.hpp>

#include <geo5/atlas.hpp>
#include <geo5/liealg.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace geo5;

TEST_CASE("catalog accounting: 53 individual + 6 families in 8 categories") {
    const auto& all = atlas();
    REQUIRE(all.size() == 59);

    int individuals = 0, families = 0;
    std::map<int, int> per_category, families_per_category;
    std::set<std::string> ids, names;
    for (const AtlasEntry& e : all) {
        (e.is_family ? families : individuals)++;
        per_category[e.category]++;
        if (e.is_family) families_per_category[e.category]++;
        ids.insert(e.id);
        names.insert(e.name);
        REQUIRE(e.model);
        REQUIRE(e.maximal);
    }
    REQUIRE(individuals == 53);
    REQUIRE(families == 6);
    REQUIRE(ids.size() == 59);
    REQUIRE(names.size() == 59);

    REQUIRE(per_category == std::map<int, int>{
                                {1, 3}, {2, 2}, {3, 3}, {4, 5}, {5, 3}, {6, 6}, {7, 8}, {8, 29}});
    REQUIRE(families_per_category == std::map<int, int>{{4, 3}, {7, 2}, {8, 1}});
}

TEST_CASE("every Lie-group entry constructs a valid unimodular algebra") {
    int constructed = 0;
    for (const AtlasEntry& e : atlas()) {
        if (e.category == 6 || e.category == 7) REQUIRE(e.has_constructor);
        if (!e.has_constructor) {
            REQUIRE_THROWS_AS(build_algebra(e.id), NotAGroup);
            continue;
        }
        REQUIRE(e.is_lie_group);
        const LieAlgebra L = build_algebra(e.id);
        const auto report = L.validate();
        INFO(e.id << ": " << report.message);
        REQUIRE(report.ok);
        REQUIRE(L.is_unimodular());
        ++constructed;
    }
    REQUIRE(constructed == 24);
}

TEST_CASE("pinned constructors") {
    const LieAlgebra h5a = build_algebra("heis5");
    Vec e1(5, Rat(0)), e2(5, Rat(0)), e5(5, Rat(0));
    e1[0] = Rat(1);
    e2[1] = Rat(1);
    e5[4] = Rat(1);
    REQUIRE(h5a.bracket(e1, e2) == e5);
    REQUIRE(h5a.center().dim() == 1);
    REQUIRE(h5a.is_nilpotent());

    const LieAlgebra a52 = build_algebra("a52");
    REQUIRE(a52.lower_central_dims() == std::vector<int>{5, 3, 2, 1, 0});

    // A_{5,33}: commuting derivations diag(1,-1,0) and diag(0,1,-1).
    const LieAlgebra a533 = build_algebra("a533");
    Vec e4(5, Rat(0));
    e4[3] = Rat(1);
    e5 = Vec(5, Rat(0));
    e5[4] = Rat(1);
    REQUIRE(vec_is_zero(a533.bracket(e4, e5)));
    REQUIRE(a533.is_solvable());
    REQUIRE_FALSE(a533.is_nilpotent());

    // by display name as well as by id
    REQUIRE(build_algebra("A_{5,2}").validate().ok);
    REQUIRE_THROWS_AS(atlas_entry("A_{9,9}"), ParseError);
    REQUIRE_THROWS_AS(build_algebra("s5"), NotAGroup);
    REQUIRE_THROWS_AS(build_algebra("f5_0"), NotAGroup);
}

TEST_CASE("product enumeration: 29 products split 9 / 17 / 3") {
    const auto products = enumerate_products();
    REQUIRE(products.size() == 29);

    std::map<std::string, int> by_shape;
    std::set<std::string> names;
    for (const ProductSpec& p : products) {
        by_shape[p.shape]++;
        names.insert(p.name);
        REQUIRE(atlas_entry(p.id).name == p.name);  // catalog referential integrity
        int euclidean = 0, dim = 0;
        for (const ProductFactor& f : p.factors) {
            euclidean += f.euclidean ? 1 : 0;
            dim += f.dim;
        }
        REQUIRE(dim == 5);
        REQUIRE(euclidean <= 1);
    }
    REQUIRE(names.size() == 29);
    REQUIRE(by_shape == std::map<std::string, int>{{"4+1", 9}, {"3+2", 17}, {"2+2+1", 3}});
    REQUIRE(names.count("E^3 x E^2") == 0);  // two Euclidean factors merge to E^5
    REQUIRE(names.count("E^4 x E") == 0);
    REQUIRE(names.count("Sol^4_{m,n} x E") == 1);
}

TEST_CASE("family parameter validation") {
    auto reject = [](const char* id, Params p) {
        REQUIRE_THROWS_AS(build_algebra(id, p), DegenerateInput);
    };
    auto accept_meta = [](const char* id, Params p) {
        validate_family_params(atlas_entry(id), atlasdetail::merge_params(atlas_entry(id), p));
    };

    // lens bundles: positive coprime a <= b
    REQUIRE_NOTHROW(accept_meta("lens", {{"a", Rat(1)}, {"b", Rat(1)}}));
    REQUIRE_NOTHROW(accept_meta("lens", {{"a", Rat(2)}, {"b", Rat(5)}}));
    REQUIRE_THROWS_AS(accept_meta("lens", {{"a", Rat(2)}, {"b", Rat(4)}}), DegenerateInput);
    REQUIRE_THROWS_AS(accept_meta("lens", {{"a", Rat(3)}, {"b", Rat(2)}}), DegenerateInput);
    REQUIRE_THROWS_AS(accept_meta("lens", {{"a", Rat(1, 2)}, {"b", Rat(3)}}), DegenerateInput);

    // slopes
    REQUIRE_NOTHROW(accept_meta("sl2xs3", {{"alpha", Rat(7, 2)}}));
    REQUIRE_THROWS_AS(accept_meta("sl2xs3", {{"alpha", Rat(-1)}}), DegenerateInput);
    REQUIRE_NOTHROW(accept_meta("sl2xsl2", {{"alpha", Rat(1)}}));
    REQUIRE_THROWS_AS(accept_meta("sl2xsl2", {{"alpha", Rat(2)}}), DegenerateInput);

    // diagonalizable A_{5,7}: weights distinct and nonzero
    reject("a57_diag", {{"a", Rat(1)}});                     // duplicate weight 1
    reject("a57_diag", {{"a", Rat(0)}});                     // zero weight
    reject("a57_diag", {{"a", Rat(2)}, {"b", Rat(-3)}});     // -1-a-b = 0
    REQUIRE(build_algebra("a57_diag", {{"a", Rat(1, 2)}, {"b", Rat(1, 3)}}).validate().ok);

    // complex A_{5,7}: trace-zero, genuinely complex, distinct reals
    reject("a57_complex", {{"c", Rat(1)}});                  // 1 + b + 2c != 0
    reject("a57_complex", {{"d", Rat(0)}});
    reject("a57_complex", {{"b", Rat(1)}, {"c", Rat(-1)}});  // repeated real weight

    // Sol^4_{m,n} x E: integer (m,n), distinct positive real monodromy roots
    REQUIRE(build_algebra("sol4mnxe", {{"m", Rat(7)}, {"n", Rat(6)}}).validate().ok);
    reject("sol4mnxe", {{"m", Rat(3)}, {"n", Rat(3)}});      // m = n
    reject("sol4mnxe", {{"m", Rat(0)}, {"n", Rat(5)}});      // roots not all real/positive
    reject("sol4mnxe", {{"m", Rat(1, 2)}, {"n", Rat(5)}});   // not integers
    reject("sol4mnxe", {{"m", Rat(-6)}, {"n", Rat(5)}});     // negative roots

    // unknown parameter names are refused
    reject("a57_diag", {{"zz", Rat(1)}});
}

TEST_CASE("metadata: bundle table rows and compact quotients") {
    REQUIRE(line_bundle_table().size() == 6);

    const AtlasMetadata h = metadata("heis5");
    REQUIRE(h.bundle_row.has_value());
    REQUIRE(h.bundle_row->base == "C^2");
    REQUIRE(h.bundle_row->curved == "Heis_5");

    REQUIRE(metadata("s4xe").bundle_row->base == "S^4");
    REQUIRE(metadata("u21_u2").bundle_row->base == "CH^2");
    REQUIRE(metadata("cp2xe").bundle_row->curved == "S^5 (non-maximal)");
    REQUIRE_FALSE(metadata("e5").bundle_row.has_value());
    REQUIRE_FALSE(metadata("a533").bundle_row.has_value());

    REQUIRE(metadata("sl2xs3", AlphaParam{true, Rat(3, 4)}).compact_quotients == true);
    REQUIRE(metadata("sl2xs3", parse_alpha("irrational")).compact_quotients == false);
    REQUIRE_FALSE(metadata("a533").compact_quotients.has_value());
}

TEST_CASE("list filters and stabilizer spot checks") {
    auto cat1 = list_entries(1);
    REQUIRE(cat1.size() == 3);
    REQUIRE(cat1[0]->name == "E^5");
    REQUIRE_THROWS_AS(list_entries(9), ParseError);

    REQUIRE(list_entries(std::nullopt, isotropy::parse("SO(3)_5")).size() == 2);
    REQUIRE(list_entries(8, isotropy::parse("SO(4)")).size() == 2);  // S^4 x E, H^4 x E

    auto st = [](const char* id) { return isotropy::name(atlas_entry(id).stabilizer); };
    REQUIRE(st("s4xe") == "SO(4)");
    REQUIRE(st("ch2xe") == "U(2)");
    REQUIRE(st("f4xe") == "S1_{1/2}");
    REQUIRE(st("sol40xe") == "SO(2)");
    REQUIRE(st("sol4mnxe") == "1");
    REQUIRE(st("h3xh2") == "SO(3)xSO(2)");
    REQUIRE(st("sol3xs2") == "SO(2)");
    REQUIRE(st("s2xh2xe") == "SO(2)xSO(2)");
}
