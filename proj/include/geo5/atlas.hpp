#pragma once
//
// The verified catalog of 5-dimensional maximal model geometries: 53
// individual geometries and 6 infinite families, in eight categories.
//
//   1. constant curvature:            E^5, S^5, H^5
//   2. irreducible symmetric spaces:  SL(3,R)/SO(3), SU(3)/SO(3)
//   3. unit tangent bundles etc.:     T^1 H^3, T^1 E^{1,2}, ~(U(2,1)/U(2))
//   4. associated S^1-bundle geometries over products of 2-dim bases:
//        Heis_3 x_R S^3, Heis_3 x_R ~SL_2, ~SL_2 x_a S^3 (family),
//        ~SL_2 x_a ~SL_2 (family), L(a;1) x_{S^1} L(b;1) (family)
//   5. line bundles over F^4:         R^2 x| ~SL_2, F^5_0, F^5_1
//   6. nilpotent Lie groups:          A_{5,1..6} (A_{5,4} = Heis_5)
//   7. non-nilpotent solvable groups: A_{5,7} (two families + one member),
//        A_{5,8}, A_{5,9}, A_{5,15}, A_{5,20}, A_{5,33}
//   8. products of lower-dimensional geometries: 28 individual + the
//        Sol^4_{m,n} x E family = 29 products (9 of shape 4+1, 17 of
//        shape 3+2, 3 of shape 2+2+1), with at most one Euclidean factor
//        (more than one would merge into a higher Euclidean factor).
//
// Category accounting: 3+2+3+(2+3 fam)+3+6+(6+2 fam)+(28+1 fam) = 53 + 6.
//
// Entries that are Lie groups carry an exact structure-constant
// constructor with a documented basis convention; the rest carry
// metadata only (their transitive groups recorded as strings).
//
// Naming conventions (ASCII): "~X" is the universal cover of X; "x|" is a
// semidirect product; "x_a" an associated bundle with parameter a; Jordan
// data like (x^2, x-1, x+1) lists elementary divisors of the derivation
// in "R^4 x| (...)"; diag weights are listed as (1, a, b, -1-a-b).

#include <geo5/error.hpp>
#include <geo5/isotropy.hpp>
#include <geo5/liealg.hpp>
#include <geo5/mat.hpp>
#include <geo5/poly.hpp>
#include <geo5/rat.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geo5 {

using Params = std::map<std::string, Rat>;

struct ParamSpec {
    std::string name;
    std::string doc;
    Rat default_value;
};

struct AtlasEntry {
    std::string id;    // stable machine key, e.g. "a57_diag"
    std::string name;  // canonical display name, e.g. "A_{5,7}^{a,b,-1-a-b}"
    std::string construction;
    int category = 0;  // 1..8 as listed above
    bool is_family = false;
    Stabilizer stabilizer;
    bool is_lie_group = false;
    bool has_constructor = false;
    bool model = true;    // every catalog entry is a model geometry
    bool maximal = true;  // ... and maximal (as stated by the classification)
    std::string transitive_group;  // for non-Lie-group entries
    std::vector<ParamSpec> params;
    std::string basis_doc;  // constructor basis convention
    std::string notes;
};

struct ProductFactor {
    std::string name;
    int dim = 0;
    bool euclidean = false;
};

struct ProductSpec {
    std::vector<ProductFactor> factors;
    std::string shape;  // "4+1", "3+2", "2+2+1"
    std::string name;   // e.g. "S^4 x E"
    std::string id;     // atlas id of the corresponding entry
};

struct LineBundleRow {  // one row of the irreducible-4-dim-isotropy table
    std::string base;   // 4-dimensional base geometry
    std::string flat;   // the flat (product or merged-Euclidean) bundle
    std::string curved; // the curved bundle, "-" when none exists
};

namespace atlasdetail {

inline Stabilizer stab(const char* label) { return isotropy::parse(label); }

inline AtlasEntry entry(std::string id, std::string name, std::string construction,
                        int category, const char* stabilizer) {
    AtlasEntry e;
    e.id = std::move(id);
    e.name = std::move(name);
    e.construction = std::move(construction);
    e.category = category;
    e.stabilizer = stab(stabilizer);
    return e;
}

inline std::vector<AtlasEntry> make_atlas() {
    std::vector<AtlasEntry> v;
    auto lie = [](AtlasEntry e, std::string basis_doc) {
        e.is_lie_group = true;
        e.has_constructor = true;
        e.basis_doc = std::move(basis_doc);
        return e;
    };
    auto homog = [](AtlasEntry e, std::string group) {
        e.transitive_group = std::move(group);
        return e;
    };

    // --- category 1: constant curvature ---
    v.push_back(lie(entry("e5", "E^5", "flat abelian group R^5", 1, "SO(5)"),
                    "e1..e5 an orthonormal basis of translations; all brackets zero"));
    v.push_back(homog(entry("s5", "S^5", "constant curvature +1", 1, "SO(5)"), "SO(6)"));
    v.push_back(homog(entry("h5", "H^5", "constant curvature -1", 1, "SO(5)"), "SO(5,1)^0"));

    // --- category 2: irreducible symmetric spaces ---
    v.push_back(homog(entry("sl3r_so3", "SL(3,R)/SO(3)",
                            "noncompact irreducible symmetric space", 2, "SO(3)_5"),
                      "SL(3,R)"));
    v.push_back(homog(entry("su3_so3", "SU(3)/SO(3)",
                            "compact irreducible symmetric space", 2, "SO(3)_5"),
                      "SU(3)"));

    // --- category 3: unit tangent bundles and the complex-hyperbolic cover ---
    v.push_back(homog(entry("t1h3", "T^1 H^3",
                            "unit tangent bundle of hyperbolic 3-space", 3, "S1_1"),
                      "PSL(2,C)"));
    v.push_back(homog(entry("t1e12", "T^1 E^{1,2}",
                            "unit tangent bundle of Minkowski 2+1 space", 3, "S1_1"),
                      "R^{1,2} x| ~SO(1,2)^0"));
    v.push_back(homog(entry("u21_u2", "~(U(2,1)/U(2))",
                            "universal cover of the complex-hyperbolic unit tangent space",
                            3, "U(2)"),
                      "~U(2,1)"));

    // --- category 4: associated S^1-bundle geometries ---
    v.push_back(homog(entry("heis3xS3", "Heis_3 x_R S^3",
                            "center-identified bundle of Heis_3 and S^3", 4, "SO(2)xSO(2)"),
                      "(Heis_3 x SU(2))/R (anti-diagonal centers)"));
    v.push_back(homog(entry("heis3xSL2", "Heis_3 x_R ~SL_2",
                            "center-identified bundle of Heis_3 and ~SL_2", 4, "SO(2)xSO(2)"),
                      "(Heis_3 x ~SL_2)/R (anti-diagonal centers)"));
    {
        AtlasEntry e = homog(entry("sl2xs3", "~SL_2 x_a S^3",
                                   "center-identified bundle of ~SL_2 and S^3, slope alpha",
                                   4, "SO(2)xSO(2)"),
                             "(~SL_2 x SU(2))/R_alpha");
        e.is_family = true;
        e.params = {{"alpha", "center slope, 0 < alpha < infinity", Rat(3, 4)}};
        e.notes = "admits compact quotients if and only if alpha is rational";
        v.push_back(std::move(e));
    }
    {
        AtlasEntry e = homog(entry("sl2xsl2", "~SL_2 x_a ~SL_2",
                                   "center-identified bundle of two copies of ~SL_2, slope alpha",
                                   4, "SO(2)xSO(2)"),
                             "(~SL_2 x ~SL_2)/R_alpha");
        e.is_family = true;
        e.params = {{"alpha", "center slope, 0 < alpha <= 1", Rat(1, 2)}};
        v.push_back(std::move(e));
    }
    {
        AtlasEntry e = homog(entry("lens", "L(a;1) x_{S^1} L(b;1)",
                                   "fiberwise product of lens-space circle bundles over S^2 x S^2",
                                   4, "SO(2)xSO(2)"),
                             "(SU(2) x SU(2) x S^1)/finite");
        e.is_family = true;
        e.params = {{"a", "first lens parameter, positive integer", Rat(1)},
                    {"b", "second lens parameter, positive integer, a <= b, gcd(a,b)=1", Rat(2)}};
        v.push_back(std::move(e));
    }

    // --- category 5: line bundles over F^4 ---
    v.push_back(lie(entry("r2_sl2", "R^2 x| ~SL_2",
                          "translations of the plane extended by ~SL_2", 5, "S1_{1/2}"),
                    "e1,e2 abelian ideal R^2; e3=h, e4=x, e5=y span sl_2 with "
                    "[h,x]=2x, [h,y]=-2y, [x,y]=h acting by the standard "
                    "representation: h = diag(1,-1), x: e2 -> e1, y: e1 -> e2"));
    v.push_back(homog(entry("f5_0", "F^5_0", "line bundle over F^4", 5, "S1_{1/2}"),
                      "line-bundle extension of Isom(F^4)^0"));
    v.push_back(homog(entry("f5_1", "F^5_1", "line bundle over F^4", 5, "S1_{1/2}"),
                      "line-bundle extension of Isom(F^4)^0"));

    // --- category 6: nilpotent Lie groups ---
    // Nil^4 convention: R^3 x| (single x^3 Jordan block), i.e. the extra
    // generator maps e3 -> e2 -> e1.  Arrow notation "i -> j" below means
    // the outer derivation sends basis vector i to basis vector j.
    v.push_back(lie(entry("a51", "A_{5,1}", "R^4 x| (x^2, x^2)", 6, "S1_1"),
                    "[e5,e1]=e2, [e5,e3]=e4; e1..e4 abelian"));
    v.push_back(lie(entry("a52", "A_{5,2}", "R^4 x| x^4", 6, "1"),
                    "[e5,e1]=e2, [e5,e2]=e3, [e5,e3]=e4; e1..e4 abelian"));
    v.push_back(lie(entry("a53", "A_{5,3}", "(R x Heis_3) x| (x_3 -> x_2 -> y)", 6, "S1_1"),
                    "Heis_3 = span(e1,e2,e3) with [e2,e3]=e1; y = e4 central in the "
                    "ideal; [e5,e3]=e2, [e5,e2]=e4"));
    v.push_back(lie(entry("heis5", "Heis_5", "A_{5,4}: contact Heisenberg group", 6, "U(2)"),
                    "[e1,e2]=e5, [e3,e4]=e5; e5 central"));
    v.push_back(lie(entry("a55", "A_{5,5}", "Nil^4 x| (3 -> 1)", 6, "1"),
                    "Nil^4 = span(e1..e4) with [e4,e3]=e2, [e4,e2]=e1; [e5,e3]=e1"));
    v.push_back(lie(entry("a56", "A_{5,6}", "Nil^4 x| (4 -> 3 -> 1)", 6, "1"),
                    "Nil^4 = span(e1..e4) with [e4,e3]=e2, [e4,e2]=e1; "
                    "[e5,e4]=e3, [e5,e3]=e1"));

    // --- category 7: non-nilpotent solvable Lie groups ---
    {
        AtlasEntry e = entry("a57_diag", "A_{5,7}^{a,b,-1-a-b}",
                             "R^4 x| diag(1, a, b, -1-a-b), four distinct real weights",
                             7, "1");
        e.is_lie_group = e.has_constructor = true;
        e.is_family = true;
        e.params = {{"a", "second diagonal weight", Rat(2)},
                    {"b", "third diagonal weight", Rat(3)}};
        e.basis_doc = "[e5,e1]=e1, [e5,e2]=a e2, [e5,e3]=b e3, [e5,e4]=(-1-a-b) e4; "
                      "e1..e4 abelian";
        e.notes = "weights 1, a, b, -1-a-b must be pairwise distinct and nonzero";
        v.push_back(std::move(e));
    }
    {
        AtlasEntry e = entry("a57_complex", "A_{5,7}^{1,-1-a,-1+a}",
                             "R^4 x| (1, b, c+di, c-di): two distinct real weights and a "
                             "complex pair, 1 + b + 2c = 0",
                             7, "SO(2)");
        e.is_lie_group = e.has_constructor = true;
        e.is_family = true;
        e.params = {{"b", "second real weight, b != 0, 1", Rat(-1)},
                    {"c", "real part of the complex weight pair; 1 + b + 2c = 0", Rat(0)},
                    {"d", "imaginary part of the complex weight pair, d != 0", Rat(1)}};
        e.basis_doc = "[e5,e1]=e1, [e5,e2]=b e2, [e5,e3]=c e3 + d e4, "
                      "[e5,e4]=-d e3 + c e4; e1..e4 abelian";
        v.push_back(std::move(e));
    }
    v.push_back(lie(entry("a57_1m1m1", "A_{5,7}^{1,-1,-1}",
                          "R^4 x| (x-1, x-1, x+1, x+1)", 7, "SO(2)xSO(2)"),
                    "[e5,e1]=e1, [e5,e2]=e2, [e5,e3]=-e3, [e5,e4]=-e4; e1..e4 abelian"));
    v.push_back(lie(entry("a58", "A_{5,8}^{-1}", "R^4 x| (x^2, x-1, x+1)", 7, "1"),
                    "[e5,e2]=e1, [e5,e3]=e3, [e5,e4]=-e4; e1..e4 abelian"));
    v.push_back(lie(entry("a59", "A_{5,9}^{-1,-1}", "R^4 x| ((x-1)^2, x+1, x+1)", 7, "SO(2)"),
                    "[e5,e1]=e1, [e5,e2]=e1+e2, [e5,e3]=-e3, [e5,e4]=-e4; e1..e4 abelian"));
    v.push_back(lie(entry("a515", "A_{5,15}^{-1}", "R^4 x| ((x-1)^2, (x+1)^2)", 7, "1"),
                    "[e5,e1]=e1, [e5,e2]=e1+e2, [e5,e3]=-e3, [e5,e4]=e3-e4; "
                    "e1..e4 abelian"));
    v.push_back(lie(entry("a520", "A_{5,20}^{0}",
                          "(R x Heis_3) x| (Lorentz boost, y -> x_1)", 7, "1"),
                    "Heis_3 = span(e1,e2,e3) with [e2,e3]=e1; y = e4; [e5,e2]=e2, "
                    "[e5,e3]=-e3, [e5,e4]=e1"));
    v.push_back(lie(entry("a533", "A_{5,33}^{-1,-1}", "R^3 x| {xyz=1}^0", 7, "1"),
                    "e1..e3 abelian ideal; two commuting diagonal derivations "
                    "[e4,.] = diag(1,-1,0) and [e5,.] = diag(0,1,-1)"));

    // --- category 8: products ---
    auto product = [&](std::string id, std::string name, const char* st) {
        return entry(std::move(id), std::move(name), "product of lower-dimensional geometries",
                     8, st);
    };
    auto homog_product = [&](std::string id, std::string name, const char* st) {
        AtlasEntry e = product(std::move(id), std::move(name), st);
        e.transitive_group = "product of the factors' isometry groups";
        return e;
    };
    // shape 4+1
    v.push_back(homog_product("s4xe", "S^4 x E", "SO(4)"));
    v.push_back(homog_product("h4xe", "H^4 x E", "SO(4)"));
    v.push_back(homog_product("cp2xe", "CP^2 x E", "U(2)"));
    v.push_back(homog_product("ch2xe", "CH^2 x E", "U(2)"));
    v.push_back(homog_product("f4xe", "F^4 x E", "S1_{1/2}"));
    v.push_back(lie(product("nil4xe", "Nil^4 x E", "1"),
                    "Nil^4 = span(e1..e4) with [e4,e3]=e2, [e4,e2]=e1; e5 central"));
    {
        AtlasEntry e = lie(product("sol40xe", "Sol^4_0 x E", "SO(2)"),
                           "[e5,e1]=e1, [e5,e2]=e2, [e5,e3]=-2 e3; e4 central; "
                           "e1..e4 abelian");
        e.notes = "structure constants use the transitive diag(1,1,-2) subgroup of the "
                  "isometry group (the rotation-free slice); the repeated weight keeps "
                  "this geometry outside the trivial-isotropy identification key";
        v.push_back(std::move(e));
    }
    v.push_back(lie(product("sol41xe", "Sol^4_1 x E", "1"),
                    "Heis_3 = span(e1,e2,e3) with [e2,e3]=e1; [e5,e2]=e2, [e5,e3]=-e3; "
                    "e4 central"));
    {
        AtlasEntry e = lie(product("sol4mnxe", "Sol^4_{m,n} x E", "1"),
                           "e1..e4 abelian; [e5, .] acts on span(e1,e2,e3) by "
                           "C - (m/3) I, C the companion matrix of x^3 - m x^2 + n x - 1; "
                           "e4 central");
        e.is_family = true;
        e.params = {{"m", "trace of the integer monodromy; x^3 - m x^2 + n x - 1 must "
                          "have three distinct positive real roots, none equal to 1",
                     Rat(6)},
                    {"n", "second symmetric function of the monodromy", Rat(5)}};
        e.notes = "exact rational stand-in: the genuine derivation log(monodromy) has "
                  "the same real-split weight type but irrational entries; the (m,n) "
                  "witness connection is checked by the lattice search";
        v.push_back(std::move(e));
    }
    // shape 3+2
    v.push_back(homog_product("e3xs2", "E^3 x S^2", "SO(3)xSO(2)"));
    v.push_back(homog_product("e3xh2", "E^3 x H^2", "SO(3)xSO(2)"));
    v.push_back(lie(product("s3xe2", "S^3 x E^2", "SO(3)xSO(2)"),
                    "su(2) = span(e1,e2,e3) with [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2; "
                    "e4,e5 central"));
    v.push_back(homog_product("s3xs2", "S^3 x S^2", "SO(3)xSO(2)"));
    v.push_back(homog_product("s3xh2", "S^3 x H^2", "SO(3)xSO(2)"));
    v.push_back(homog_product("h3xe2", "H^3 x E^2", "SO(3)xSO(2)"));
    v.push_back(homog_product("h3xs2", "H^3 x S^2", "SO(3)xSO(2)"));
    v.push_back(homog_product("h3xh2", "H^3 x H^2", "SO(3)xSO(2)"));
    v.push_back(lie(product("heis3xe2", "Heis_3 x E^2", "SO(2)xSO(2)"),
                    "[e1,e2]=e3; e4,e5 central"));
    v.push_back(homog_product("heis3xs2", "Heis_3 x S^2", "SO(2)xSO(2)"));
    v.push_back(homog_product("heis3xh2", "Heis_3 x H^2", "SO(2)xSO(2)"));
    v.push_back(lie(product("sol3xe2", "Sol^3 x E^2", "SO(2)"),
                    "[e5,e1]=e1, [e5,e2]=-e2; e3,e4 central; e1..e4 abelian"));
    v.push_back(homog_product("sol3xs2", "Sol^3 x S^2", "SO(2)"));
    v.push_back(homog_product("sol3xh2", "Sol^3 x H^2", "SO(2)"));
    v.push_back(lie(product("sl2xe2", "~SL_2 x E^2", "SO(2)xSO(2)"),
                    "sl_2 = span(e1,e2,e3) with [e1,e2]=2 e2, [e1,e3]=-2 e3, "
                    "[e2,e3]=e1; e4,e5 central"));
    v.push_back(homog_product("sl2xs2", "~SL_2 x S^2", "SO(2)xSO(2)"));
    v.push_back(homog_product("sl2xh2", "~SL_2 x H^2", "SO(2)xSO(2)"));
    // shape 2+2+1
    v.push_back(homog_product("s2xs2xe", "S^2 x S^2 x E", "SO(2)xSO(2)"));
    v.push_back(homog_product("s2xh2xe", "S^2 x H^2 x E", "SO(2)xSO(2)"));
    v.push_back(homog_product("h2xh2xe", "H^2 x H^2 x E", "SO(2)xSO(2)"));

    return v;
}

}  // namespace atlasdetail

inline const std::vector<AtlasEntry>& atlas() {
    static const std::vector<AtlasEntry> entries = atlasdetail::make_atlas();
    return entries;
}

// Lookup by id or exact display name; nullptr when unknown.
inline const AtlasEntry* find_entry(const std::string& label) {
    for (const AtlasEntry& e : atlas())
        if (e.id == label) return &e;
    for (const AtlasEntry& e : atlas())
        if (e.name == label) return &e;
    return nullptr;
}

inline const AtlasEntry& atlas_entry(const std::string& label) {
    const AtlasEntry* e = find_entry(label);
    if (!e) throw ParseError("unknown atlas entry: " + label);
    return *e;
}

inline std::vector<const AtlasEntry*> list_entries(
    std::optional<int> category = std::nullopt,
    const std::optional<Stabilizer>& stabilizer = std::nullopt) {
    if (category && (*category < 1 || *category > 8))
        throw ParseError("unknown category filter (want 1..8)");
    std::vector<const AtlasEntry*> out;
    for (const AtlasEntry& e : atlas()) {
        if (category && e.category != *category) continue;
        if (stabilizer && !(e.stabilizer == *stabilizer)) continue;
        out.push_back(&e);
    }
    return out;
}

// The stabilizer -> non-product-geometries table (categories 1..7 only);
// deliberately empty for SU(2), SO(4), SO(3)xSO(2), SO(3) and the generic
// circle (those subgroups stabilize no non-product geometry).
inline std::vector<const AtlasEntry*> geometries_with_stabilizer(const Stabilizer& s) {
    std::vector<const AtlasEntry*> out;
    for (const AtlasEntry& e : atlas())
        if (e.category <= 7 && e.stabilizer == s) out.push_back(&e);
    return out;
}

// ----------------------------------------------------------------------
// Family parameter handling.

inline Params default_params(const AtlasEntry& e) {
    Params p;
    for (const ParamSpec& ps : e.params) p[ps.name] = ps.default_value;
    return p;
}

namespace atlasdetail {

inline Params merge_params(const AtlasEntry& e, const Params& overrides) {
    Params p = default_params(e);
    for (const auto& [key, value] : overrides) {
        if (!p.count(key))
            throw DegenerateInput("unknown parameter '" + key + "' for " + e.name);
        p[key] = value;
    }
    return p;
}

inline void require(bool ok, const std::string& why) {
    if (!ok) throw DegenerateInput(why);
}

}  // namespace atlasdetail

// Check a family's parameter constraints; throws DegenerateInput with the
// violated constraint spelled out.  No-op for parameterless entries.
inline void validate_family_params(const AtlasEntry& e, const Params& p) {
    using atlasdetail::require;
    if (e.id == "a57_diag") {
        const Rat a = p.at("a"), b = p.at("b");
        const Rat roots[4] = {Rat(1), a, b, Rat(-1) - a - b};
        for (int i = 0; i < 4; ++i) {
            require(!roots[i].is_zero(), e.name + ": weights must be nonzero");
            for (int j = i + 1; j < 4; ++j)
                require(roots[i] != roots[j], e.name + ": weights must be pairwise distinct");
        }
    } else if (e.id == "a57_complex") {
        const Rat b = p.at("b"), c = p.at("c"), d = p.at("d");
        require(Rat(1) + b + Rat(2) * c == Rat(0),
                e.name + ": unimodularity needs 1 + b + 2c = 0");
        require(!d.is_zero(), e.name + ": complex pair needs d != 0");
        require(!b.is_zero() && b != Rat(1),
                e.name + ": real weights 1, b must be distinct and nonzero");
    } else if (e.id == "sol4mnxe") {
        const Rat m = p.at("m"), n = p.at("n");
        require(m.is_integer() && n.is_integer(), e.name + ": m, n must be integers");
        require(m != n, e.name + ": m = n makes 1 a monodromy eigenvalue (Sol^3 x E^2)");
        const Poly cubic(std::vector<Rat>{Rat(-1), n, -m, Rat(1)});  // x^3 - m x^2 + n x - 1
        require(squarefree_part(cubic).degree() == 3,
                e.name + ": monodromy eigenvalues must be distinct");
        require(count_real_roots(cubic) == 3, e.name + ": monodromy eigenvalues must be real");
        require(count_real_roots(cubic, Bound::at(Rat(0)), Bound::pos_inf()) == 3,
                e.name + ": monodromy eigenvalues must be positive");
    } else if (e.id == "lens") {
        const Rat a = p.at("a"), b = p.at("b");
        require(a.is_integer() && b.is_integer() && sign(a) > 0 && sign(b) > 0,
                e.name + ": a, b must be positive integers");
        require(a <= b, e.name + ": parameters are normalized to a <= b");
        require(int_gcd(a.num(), b.num()) == 1, e.name + ": a, b must be coprime");
    } else if (e.id == "sl2xs3") {
        require(sign(p.at("alpha")) > 0, e.name + ": alpha must be positive");
    } else if (e.id == "sl2xsl2") {
        const Rat alpha = p.at("alpha");
        require(sign(alpha) > 0 && alpha <= Rat(1), e.name + ": alpha must lie in (0, 1]");
    }
}

// ----------------------------------------------------------------------
// Structure-constant constructors.

namespace atlasdetail {

// R^4 x| D: e1..e4 abelian, [e5, ej] = (column j of D), j = 1..4.
inline LieAlgebra r4_semidirect(const Mat& D) {
    LieAlgebra L(5);
    for (std::size_t j = 0; j < 4; ++j) {
        Vec v(5, Rat(0));
        bool nonzero = false;
        for (std::size_t i = 0; i < 4; ++i) {
            v[i] = D.at(i, j);
            nonzero = nonzero || !v[i].is_zero();
        }
        if (nonzero) L.set_bracket(4, j, v);
    }
    return L;
}

inline Mat diag4(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    Mat D(4, 4);
    D.at(0, 0) = a;
    D.at(1, 1) = b;
    D.at(2, 2) = c;
    D.at(3, 3) = d;
    return D;
}

inline LieAlgebra build_entry(const AtlasEntry& e, const Params& p) {
    const std::string& id = e.id;
    auto term = [](LieAlgebra& L, int i, int j, int k, Rat q = Rat(1)) {
        L.set_bracket_term(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                           static_cast<std::size_t>(k - 1), q);
    };
    if (id == "e5") return LieAlgebra(5);
    if (id == "a51") {
        LieAlgebra L(5);
        term(L, 5, 1, 2);
        term(L, 5, 3, 4);
        return L;
    }
    if (id == "a52") {
        LieAlgebra L(5);
        term(L, 5, 1, 2);
        term(L, 5, 2, 3);
        term(L, 5, 3, 4);
        return L;
    }
    if (id == "a53") {
        LieAlgebra L(5);
        term(L, 2, 3, 1);
        term(L, 5, 3, 2);
        term(L, 5, 2, 4);
        return L;
    }
    if (id == "heis5") {
        LieAlgebra L(5);
        term(L, 1, 2, 5);
        term(L, 3, 4, 5);
        return L;
    }
    if (id == "a55") {
        LieAlgebra L(5);
        term(L, 4, 3, 2);
        term(L, 4, 2, 1);
        term(L, 5, 3, 1);
        return L;
    }
    if (id == "a56") {
        LieAlgebra L(5);
        term(L, 4, 3, 2);
        term(L, 4, 2, 1);
        term(L, 5, 4, 3);
        term(L, 5, 3, 1);
        return L;
    }
    if (id == "a57_diag") {
        const Rat a = p.at("a"), b = p.at("b");
        return r4_semidirect(diag4(Rat(1), a, b, Rat(-1) - a - b));
    }
    if (id == "a57_complex") {
        const Rat b = p.at("b"), c = p.at("c"), d = p.at("d");
        Mat D = diag4(Rat(1), b, c, c);
        D.at(3, 2) = d;   // [e5,e3] = c e3 + d e4
        D.at(2, 3) = -d;  // [e5,e4] = -d e3 + c e4
        return r4_semidirect(D);
    }
    if (id == "a57_1m1m1")
        return r4_semidirect(diag4(Rat(1), Rat(1), Rat(-1), Rat(-1)));
    if (id == "a58") {
        Mat D(4, 4);
        D.at(0, 1) = Rat(1);  // [e5,e2] = e1
        D.at(2, 2) = Rat(1);
        D.at(3, 3) = Rat(-1);
        return r4_semidirect(D);
    }
    if (id == "a59") {
        Mat D = diag4(Rat(1), Rat(1), Rat(-1), Rat(-1));
        D.at(0, 1) = Rat(1);  // [e5,e2] = e1 + e2
        return r4_semidirect(D);
    }
    if (id == "a515") {
        Mat D = diag4(Rat(1), Rat(1), Rat(-1), Rat(-1));
        D.at(0, 1) = Rat(1);  // [e5,e2] = e1 + e2
        D.at(2, 3) = Rat(1);  // [e5,e4] = e3 - e4
        return r4_semidirect(D);
    }
    if (id == "a520") {
        LieAlgebra L(5);
        term(L, 2, 3, 1);
        term(L, 5, 2, 2);
        term(L, 5, 3, 3, Rat(-1));
        term(L, 5, 4, 1);
        return L;
    }
    if (id == "a533") {
        LieAlgebra L(5);
        term(L, 4, 1, 1);
        term(L, 4, 2, 2, Rat(-1));
        term(L, 5, 2, 2);
        term(L, 5, 3, 3, Rat(-1));
        return L;
    }
    if (id == "r2_sl2") {
        LieAlgebra L(5);
        term(L, 3, 4, 4, Rat(2));   // [h,x] = 2x
        term(L, 3, 5, 5, Rat(-2));  // [h,y] = -2y
        term(L, 4, 5, 3);           // [x,y] = h
        term(L, 3, 1, 1);           // h acts by diag(1,-1)
        term(L, 3, 2, 2, Rat(-1));
        term(L, 4, 2, 1);  // x: e2 -> e1
        term(L, 5, 1, 2);  // y: e1 -> e2
        return L;
    }
    if (id == "nil4xe") {
        LieAlgebra L(5);
        term(L, 4, 3, 2);
        term(L, 4, 2, 1);
        return L;
    }
    if (id == "sol40xe")
        return r4_semidirect(diag4(Rat(1), Rat(1), Rat(-2), Rat(0)));
    if (id == "sol41xe") {
        LieAlgebra L(5);
        term(L, 2, 3, 1);
        term(L, 5, 2, 2);
        term(L, 5, 3, 3, Rat(-1));
        return L;
    }
    if (id == "sol4mnxe") {
        const Rat m = p.at("m"), n = p.at("n");
        // Companion matrix of x^3 - m x^2 + n x - 1, shifted traceless.
        Mat D(4, 4);
        D.at(1, 0) = Rat(1);
        D.at(2, 1) = Rat(1);
        D.at(0, 2) = Rat(1);
        D.at(1, 2) = -n;
        D.at(2, 2) = m;
        const Rat shift = m / Rat(3);
        for (std::size_t i = 0; i < 3; ++i) D.at(i, i) = D.at(i, i) - shift;
        return r4_semidirect(D);
    }
    if (id == "heis3xe2") {
        LieAlgebra L(5);
        term(L, 1, 2, 3);
        return L;
    }
    if (id == "sol3xe2")
        return r4_semidirect(diag4(Rat(1), Rat(-1), Rat(0), Rat(0)));
    if (id == "s3xe2") {
        LieAlgebra L(5);
        term(L, 1, 2, 3);
        term(L, 2, 3, 1);
        term(L, 3, 1, 2);
        return L;
    }
    if (id == "sl2xe2") {
        LieAlgebra L(5);
        term(L, 1, 2, 2, Rat(2));
        term(L, 1, 3, 3, Rat(-2));
        term(L, 2, 3, 1);
        return L;
    }
    throw NotAGroup("no constructor for " + e.name);
}

}  // namespace atlasdetail

// Build the exact structure constants of a Lie-group entry, by id or name.
// Family parameters default per entry and can be overridden; they are
// validated before construction.  Non-Lie-group entries throw NotAGroup.
inline LieAlgebra build_algebra(const std::string& label, const Params& overrides = {}) {
    const AtlasEntry& e = atlas_entry(label);
    if (!e.has_constructor)
        throw NotAGroup(e.name + " is not presented by a Lie group; metadata only");
    const Params p = atlasdetail::merge_params(e, overrides);
    validate_family_params(e, p);
    return atlasdetail::build_entry(e, p);
}

// ----------------------------------------------------------------------
// Product enumeration.

inline std::vector<ProductSpec> enumerate_products() {
    struct Factor {
        const char* name;
        int dim;
        bool euclidean;
    };
    // Irreducible (non-product) geometries by dimension; Euclidean space
    // appears once per dimension and counts as the single allowed
    // Euclidean factor.
    static const Factor dim4[] = {{"E^4", 4, true},     {"S^4", 4, false},
                                  {"H^4", 4, false},    {"CP^2", 4, false},
                                  {"CH^2", 4, false},   {"F^4", 4, false},
                                  {"Nil^4", 4, false},  {"Sol^4_0", 4, false},
                                  {"Sol^4_1", 4, false}, {"Sol^4_{m,n}", 4, false}};
    static const Factor dim3[] = {{"E^3", 3, true},    {"S^3", 3, false},
                                  {"H^3", 3, false},   {"Heis_3", 3, false},
                                  {"Sol^3", 3, false}, {"~SL_2", 3, false}};
    static const Factor dim2[] = {{"E^2", 2, true}, {"S^2", 2, false}, {"H^2", 2, false}};
    static const Factor line = {"E", 1, true};

    auto keep = [](std::initializer_list<Factor> factors) {
        int euclidean = 0;
        for (const Factor& f : factors) euclidean += f.euclidean ? 1 : 0;
        return euclidean <= 1;  // two Euclidean factors would merge
    };
    auto spec = [](const char* shape, std::initializer_list<Factor> factors) {
        ProductSpec s;
        s.shape = shape;
        for (const Factor& f : factors) {
            if (!s.name.empty()) s.name += " x ";
            s.name += f.name;
            s.factors.push_back({f.name, f.dim, f.euclidean});
        }
        s.id = atlas_entry(s.name).id;  // referential integrity with the catalog
        return s;
    };

    std::vector<ProductSpec> out;
    for (const Factor& f : dim4)
        if (keep({f, line})) out.push_back(spec("4+1", {f, line}));
    for (const Factor& a : dim3)
        for (const Factor& b : dim2)
            if (keep({a, b})) out.push_back(spec("3+2", {a, b}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j)
            if (keep({dim2[i], dim2[j], line}))
                out.push_back(spec("2+2+1", {dim2[i], dim2[j], line}));
    return out;
}

// ----------------------------------------------------------------------
// Metadata: the irreducible-4-dim-isotropy table and the compact-quotient
// predicate for the ~SL_2 x_a S^3 family.

inline const std::vector<LineBundleRow>& line_bundle_table() {
    static const std::vector<LineBundleRow> rows = {
        {"S^4", "S^4 x E", "-"},
        {"E^4", "E^5 (non-maximal)", "-"},
        {"H^4", "H^4 x E", "-"},
        {"CP^2", "CP^2 x E", "S^5 (non-maximal)"},
        {"C^2", "E^5 (non-maximal)", "Heis_5"},
        {"CH^2", "CH^2 x E", "~(U(2,1)/U(2))"},
    };
    return rows;
}

inline std::optional<LineBundleRow> line_bundle_row_for(const std::string& label) {
    const AtlasEntry& e = atlas_entry(label);
    for (const LineBundleRow& row : line_bundle_table())
        if (row.flat == e.name || row.curved == e.name) return row;
    return std::nullopt;
}

// A family parameter that is either an exact rational or an explicit
// irrational marker (e.g. a slope known only to be irrational).
struct AlphaParam {
    bool rational = true;
    Rat value;  // meaningful only when rational
};

inline AlphaParam parse_alpha(const std::string& text) {
    if (text == "irrational") return {false, Rat(0)};
    return {true, Rat::parse(text)};
}

// ~SL_2 x_a S^3 admits compact quotients if and only if alpha is rational.
inline bool compact_quotients_sl2xs3(const AlphaParam& alpha) { return alpha.rational; }

struct AtlasMetadata {
    const AtlasEntry* entry = nullptr;
    std::optional<LineBundleRow> bundle_row;
    std::optional<bool> compact_quotients;
};

inline AtlasMetadata metadata(const std::string& label,
                              const std::optional<AlphaParam>& alpha = std::nullopt) {
    AtlasMetadata m;
    m.entry = &atlas_entry(label);
    m.bundle_row = line_bundle_row_for(label);
    if (m.entry->id == "sl2xs3") {
        AlphaParam a{true, m.entry->params.front().default_value};
        if (alpha) a = *alpha;
        if (a.rational)
            validate_family_params(*m.entry, {{"alpha", a.value}});
        m.compact_quotients = compact_quotients_sl2xs3(a);
    }
    return m;
}

}  // namespace geo5
