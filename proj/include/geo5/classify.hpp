#pragma once
//
// The executable identification key for 5-dimensional solvable Lie
// algebras of maximal model geometries with trivial isotropy.
//
// The key is a decision tree on exact invariants:
//
//   nilpotent?
//     yes: 4-dim abelian ideal?            g^4 != 0?
//            yes  ................ yes -> A_{5,2},   no -> Nil^4 x E
//            no   ................ yes -> A_{5,6},   no -> A_{5,5}
//     no:  nilradical?
//            R^3 (abelian) ................... -> A_{5,33}^{-1,-1}
//            R^4: Jordan blocks of the action?
//                   2 -> A_{5,15}^{-1}
//                   3 -> A_{5,8}^{-1}
//                   4 -> a weight-pattern family leaf (see below)
//            R + Heis_3: center dim?  1 -> A_{5,20}^{0},  2 -> Sol^4_1 x E
//
// The 4-Jordan-block leaf splits by the root pattern of the action's
// characteristic polynomial:
//   4 distinct real            -> A_{5,7}^{a,b,-1-a-b}    (family)
//   2 distinct real + 1 pair   -> A_{5,7}^{1,-1-a,-1+a}   (family)
//   (x^2-k)^2, k > 0           -> A_{5,7}^{1,-1,-1}
//   one zero + 3 distinct real -> Sol^4-type x E          (family pattern)
//   two zeros + x^2-k, k > 0   -> Sol^3 x E^2
// Anything else has nontrivial or non-existent isotropy and is NotInKey.
//
// Every leaf answer is verified against a reference fingerprint computed
// from the catalog's constructor for that geometry; a mismatch rejects the
// input (NotInKey) instead of returning a plausible-but-wrong name.  The
// fingerprint extends the tree's invariants with the Killing-form
// signature and the 4-dim-abelian-ideal flag, which are exactly what
// separates the otherwise-colliding reference pairs (A_{5,2} vs A_{5,6};
// A_{5,33} vs its rotated sibling).  The complex-pair family's Killing
// signature varies across members, so that one leaf ignores the Killing
// field when matching.
//
// Family parameters are normalized so comparisons are well-defined: the
// action generator is only canonical up to nonzero scale, so the weight
// multiset r is replaced by the lexicographically greater of
// sortdesc(r)/max(r) and sortdesc(-r)/max(-r) (candidates are valid when
// their leading entry is positive).  E.g. weights (1,2,3,-6) normalize to
// (1, 2/3, 1/3, -2).  For the complex leaf the two real weights are scaled
// so the larger is 1 and the pair's real part is reported under the same
// scale.  Parameters are exact when the characteristic polynomial splits
// rationally and are otherwise isolated numerically and flagged.

#include <geo5/atlas.hpp>
#include <geo5/error.hpp>
#include <geo5/liealg.hpp>
#include <geo5/mat.hpp>
#include <geo5/numroots.hpp>
#include <geo5/poly.hpp>
#include <geo5/rat.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace geo5 {

struct TraceStep {
    std::string question;
    std::string answer;
    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// Basis-invariant profile of a 5-dimensional solvable algebra.  The
// "action" fields describe ad(t) restricted to the nilradical N, for any
// complement generator t, and are present exactly when N is 4-dimensional
// and abelian with a 1-dimensional complement (then ad(t)|_N is
// well-defined up to nonzero scale, so its Jordan block count and the
// root pattern of its characteristic polynomial are invariants).
struct Fingerprint {
    std::vector<int> lcs_dims;
    std::vector<int> ds_dims;
    int center_dim = 0;
    int nilradical_dim = 0;
    int nilradical_derived_dim = 0;
    bool nilradical_certified = true;
    bool unimodular = true;
    SymSignature killing;
    std::optional<RootSignature> action_signature;
    std::optional<int> action_jordan_blocks;
    std::optional<bool> abelian_ideal4;  // nilpotent algebras only
};

inline std::string fingerprint_json(const Fingerprint& f) {
    std::ostringstream os;
    auto ints = [&os](const std::vector<int>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << v[i] << (i + 1 < v.size() ? "," : "");
        os << ']';
    };
    auto flag = [](bool b) { return b ? "true" : "false"; };
    os << "{\"lcs_dims\":";
    ints(f.lcs_dims);
    os << ",\"ds_dims\":";
    ints(f.ds_dims);
    os << ",\"center_dim\":" << f.center_dim;
    os << ",\"nilradical_dim\":" << f.nilradical_dim;
    os << ",\"nilradical_derived_dim\":" << f.nilradical_derived_dim;
    os << ",\"nilradical_certified\":" << flag(f.nilradical_certified);
    os << ",\"unimodular\":" << flag(f.unimodular);
    os << ",\"killing_signature\":[" << f.killing.n_plus << "," << f.killing.n_minus << ","
       << f.killing.n_zero << "]";
    os << ",\"action_root_signature\":";
    if (f.action_signature) {
        const RootSignature& s = *f.action_signature;
        os << "{\"distinct\":" << s.distinct << ",\"real\":" << s.real
           << ",\"complex_pairs\":" << s.complex_pairs << ",\"zero_multiplicity\":" << s.zero_mult
           << ",\"all_real\":" << flag(s.all_real) << "}";
    } else {
        os << "null";
    }
    os << ",\"action_jordan_blocks\":";
    if (f.action_jordan_blocks)
        os << *f.action_jordan_blocks;
    else
        os << "null";
    os << ",\"abelian_ideal4\":";
    if (f.abelian_ideal4)
        os << flag(*f.abelian_ideal4);
    else
        os << "null";
    os << "}";
    return os.str();
}

// The nilradical-certified flag records computation quality, not an
// isomorphism invariant, so matching ignores it.
inline bool fingerprint_matches(const Fingerprint& got, const Fingerprint& want,
                                bool ignore_killing = false) {
    if (got.lcs_dims != want.lcs_dims) return false;
    if (got.ds_dims != want.ds_dims) return false;
    if (got.center_dim != want.center_dim) return false;
    if (got.nilradical_dim != want.nilradical_dim) return false;
    if (got.nilradical_derived_dim != want.nilradical_derived_dim) return false;
    if (got.unimodular != want.unimodular) return false;
    if (got.action_signature != want.action_signature) return false;
    if (got.action_jordan_blocks != want.action_jordan_blocks) return false;
    if (got.abelian_ideal4 != want.abelian_ideal4) return false;
    if (!ignore_killing && !(got.killing == want.killing)) return false;
    return true;
}

struct FamilyParams {
    std::vector<std::string> names;  // parallel to the value arrays
    bool numeric = false;            // true: only `approx` is meaningful
    std::vector<Rat> exact;          // filled when the weights are rational
    std::vector<double> approx;      // always filled
};

struct Classification {
    std::string label;     // canonical geometry name
    std::string atlas_id;  // catalog key
    std::string status;    // "certified" | "unverified" (per nilradical certificate)
    std::string notes;
    std::vector<TraceStep> trace;
    std::optional<FamilyParams> params;  // family leaves only
    Fingerprint fingerprint;
};

namespace classifydetail {

inline std::vector<std::size_t> pivot_cols(const Subspace& s) {
    std::vector<std::size_t> p;
    for (const Vec& r : s.basis()) {
        std::size_t lead = 0;
        while (lead < r.size() && r[lead].is_zero()) ++lead;
        p.push_back(lead);
    }
    return p;
}

// Coordinates of v in the subspace's canonical (RREF) basis.
inline Vec coords_in(const Subspace& s, const Vec& v) {
    const auto piv = pivot_cols(s);
    Vec c(s.dim(), Rat(0));
    for (std::size_t k = 0; k < s.dim(); ++k) c[k] = v[piv[k]];
    Vec check(s.ambient(), Rat(0));
    for (std::size_t k = 0; k < s.dim(); ++k)
        for (std::size_t j = 0; j < s.ambient(); ++j) check[j] += c[k] * s.basis()[k][j];
    if (!(check == v)) throw Error("internal error: vector outside subspace");
    return c;
}

inline Vec first_standard_complement(const Subspace& s) {
    for (std::size_t j = 0; j < s.ambient(); ++j) {
        Vec e(s.ambient(), Rat(0));
        e[j] = Rat(1);
        if (!s.contains(e)) return e;
    }
    throw Error("internal error: no complement to a full subspace");
}

// ad(t) restricted to the ideal N, expressed in N's canonical basis.
inline Mat restricted_action(const LieAlgebra& L, const Subspace& N, const Vec& t) {
    Mat A(N.dim(), N.dim());
    for (std::size_t j = 0; j < N.dim(); ++j) {
        const Vec c = coords_in(N, L.bracket(t, N.basis()[j]));
        for (std::size_t i = 0; i < N.dim(); ++i) A.at(i, j) = c[i];
    }
    return A;
}

struct Analysis {
    Fingerprint fp;
    Subspace nilrad;
    std::optional<Mat> action;
};

inline Analysis analyze(const LieAlgebra& L) {
    Analysis an;
    Fingerprint& fp = an.fp;
    fp.lcs_dims = L.lower_central_dims();
    fp.ds_dims = L.derived_dims();
    fp.center_dim = static_cast<int>(L.center().dim());
    fp.unimodular = L.is_unimodular();
    fp.killing = L.killing_signature();

    const NilradicalInfo ninfo = nilradical(L);
    an.nilrad = ninfo.space;
    fp.nilradical_dim = static_cast<int>(ninfo.space.dim());
    fp.nilradical_derived_dim = static_cast<int>(subspace_derived_dim(L, ninfo.space));
    fp.nilradical_certified = ninfo.certified;

    if (L.is_nilpotent()) {
        fp.abelian_ideal4 = (L.dim() == 5) ? std::optional<bool>(has_abelian_ideal_dim4(L))
                                           : std::nullopt;
    } else if (ninfo.space.dim() == 4 && subspace_is_abelian(L, ninfo.space)) {
        const Vec t = first_standard_complement(ninfo.space);
        Mat A = restricted_action(L, ninfo.space, t);
        fp.action_signature = root_signature(charpoly(A));
        fp.action_jordan_blocks = static_cast<int>(jordan_block_count(A));
        an.action = std::move(A);
    }
    return an;
}

struct LeafRef {
    const char* key;       // internal leaf key
    const char* atlas_id;  // catalog entry realizing the leaf
    const char* label;     // canonical label emitted by the classifier
    bool killing_wildcard; // Killing signature varies across family members
    Fingerprint fp;
};

inline const std::vector<LeafRef>& leaf_refs() {
    static const std::vector<LeafRef> refs = [] {
        auto ref = [](const char* key, const char* id, const char* label,
                      bool wildcard = false) {
            LeafRef r{key, id, label, wildcard, analyze(build_algebra(id)).fp};
            return r;
        };
        std::vector<LeafRef> v = {
            ref("a52", "a52", "A_{5,2}"),
            ref("nil4xe", "nil4xe", "Nil^4 x E"),
            ref("a56", "a56", "A_{5,6}"),
            ref("a55", "a55", "A_{5,5}"),
            ref("a533", "a533", "A_{5,33}^{-1,-1}"),
            ref("a515", "a515", "A_{5,15}^{-1}"),
            ref("a58", "a58", "A_{5,8}^{-1}"),
            ref("a520", "a520", "A_{5,20}^{0}"),
            ref("sol41xe", "sol41xe", "Sol^4_1 x E"),
            ref("a57_diag", "a57_diag", "A_{5,7}^{a,b,-1-a-b}"),
            ref("a57_complex", "a57_complex", "A_{5,7}^{1,-1-a,-1+a}", true),
            ref("a57_1m1m1", "a57_1m1m1", "A_{5,7}^{1,-1,-1}"),
            ref("sol4type", "sol4mnxe", "Sol^4-type x E"),
            ref("sol3xe2", "sol3xe2", "Sol^3 x E^2"),
        };
        return v;
    }();
    return refs;
}

inline const LeafRef& leaf_ref(const std::string& key) {
    for (const LeafRef& r : leaf_refs())
        if (key == r.key) return r;
    throw Error("internal error: unknown leaf key " + key);
}

// The +/- scale normalization described in the header comment, exact form.
inline std::vector<Rat> normalize_weights_exact(const std::vector<Rat>& roots) {
    auto candidate = [](std::vector<Rat> v) -> std::optional<std::vector<Rat>> {
        std::sort(v.begin(), v.end(), [](const Rat& a, const Rat& b) { return b < a; });
        if (sign(v.front()) <= 0) return std::nullopt;
        const Rat m = v.front();
        for (Rat& x : v) x = x / m;
        return v;
    };
    std::vector<Rat> neg = roots;
    for (Rat& x : neg) x = -x;
    const auto a = candidate(roots);
    const auto b = candidate(neg);
    if (a && b) return std::max(*a, *b);
    if (a) return *a;
    if (b) return *b;
    throw DegenerateInput("weight normalization needs a nonzero weight");
}

inline std::vector<double> normalize_weights_numeric(const std::vector<double>& roots) {
    auto candidate = [](std::vector<double> v) -> std::optional<std::vector<double>> {
        std::sort(v.begin(), v.end(), [](double a, double b) { return b < a; });
        if (!(v.front() > 0)) return std::nullopt;
        const double m = v.front();
        for (double& x : v) x /= m;
        return v;
    };
    std::vector<double> neg = roots;
    for (double& x : neg) x = -x;
    const auto a = candidate(roots);
    const auto b = candidate(neg);
    if (a && b) return std::max(*a, *b);
    if (a) return *a;
    if (b) return *b;
    throw DegenerateInput("weight normalization needs a nonzero weight");
}

// Parameters for the real-weight family leaves (all four weights real,
// possibly including one zero for the Sol^4-type pattern).
inline FamilyParams real_weight_params(const Poly& q) {
    FamilyParams p;
    p.names = {"r1", "r2", "r3", "r4"};
    const std::vector<Rat> rational = rational_roots(q);
    if (static_cast<int>(rational.size()) == q.degree()) {
        p.exact = normalize_weights_exact(rational);
        for (const Rat& r : p.exact) p.approx.push_back(r.to_double());
        return p;
    }
    p.numeric = true;
    p.approx = normalize_weights_numeric(real_roots(q).all);
    return p;
}

// Parameters for the complex-pair leaf: weights {r1, r2, c +- d i} with
// r1 > r2 real.  Reported as (1, r2/r1, c/r1) or the negated-and-rescaled
// variant, whichever is valid (leading real weight positive) and
// lexicographically greater.
inline FamilyParams complex_weight_params(const Poly& q) {
    FamilyParams p;
    p.names = {"r1", "r2", "re"};
    const std::vector<Rat> rational = rational_roots(q);
    if (rational.size() == 2) {
        const Rat r1 = rational[0], r2 = rational[1];  // descending
        auto [q1, rem1] = divmod(q, Poly::linear_root(r1));
        auto [q2, rem2] = divmod(q1, Poly::linear_root(r2));
        if (!rem1.is_zero() || !rem2.is_zero() || q2.degree() != 2)
            throw Error("internal error: complex-leaf factorization");
        const Rat c = -q2[1] / (Rat(2) * q2[2]);
        std::vector<std::vector<Rat>> cands;
        if (sign(r1) > 0) cands.push_back({Rat(1), r2 / r1, c / r1});
        if (sign(r2) < 0) cands.push_back({Rat(1), r1 / r2, c / r2});
        p.exact = *std::max_element(cands.begin(), cands.end());
        for (const Rat& r : p.exact) p.approx.push_back(r.to_double());
        return p;
    }
    p.numeric = true;
    const RealRoots rr = real_roots(q);
    if (rr.all.size() != 2) throw Error("internal error: complex leaf expects 2 real roots");
    const double r2 = rr.all[0], r1 = rr.all[1];
    const double c = (-q[3].to_double() / q[4].to_double() - r1 - r2) / 2;
    std::vector<std::vector<double>> cands;
    if (r1 > 0) cands.push_back({1.0, r2 / r1, c / r1});
    if (r2 < 0) cands.push_back({1.0, r1 / r2, c / r2});
    p.approx = *std::max_element(cands.begin(), cands.end());
    return p;
}

}  // namespace classifydetail

inline Fingerprint fingerprint(const LieAlgebra& L) { return classifydetail::analyze(L).fp; }

// Walk the identification key.  Throws WrongDimension / DegenerateInput /
// NotSolvable on out-of-domain input and NotInKeyError (carrying the
// fingerprint as JSON) when the algebra reaches no verified leaf.
inline Classification classify_solvable5(const LieAlgebra& L) {
    using namespace classifydetail;
    if (L.dim() != 5) throw WrongDimension("the identification key covers dimension 5 only");
    const ValidationReport report = L.validate();
    if (!report.ok) throw DegenerateInput("invalid structure constants: " + report.message);
    if (!L.is_solvable()) throw NotSolvable("the identification key covers solvable algebras");

    const Analysis an = analyze(L);
    const Fingerprint& fp = an.fp;

    Classification out;
    out.fingerprint = fp;
    out.status = fp.nilradical_certified ? "certified" : "unverified";
    auto say = [&out](std::string q, std::string a) {
        out.trace.push_back({std::move(q), std::move(a)});
    };
    auto reject = [&fp](const std::string& why) -> NotInKeyError {
        return NotInKeyError(why, fingerprint_json(fp));
    };

    const bool nilpotent = L.is_nilpotent();
    say("nilpotent", nilpotent ? "yes" : "no");

    std::string leaf;
    if (nilpotent) {
        const bool ideal4 = fp.abelian_ideal4.value();
        say("4-D abelian ideal", ideal4 ? "yes" : "no");
        const bool g4 = fp.lcs_dims.size() > 3 && fp.lcs_dims[3] > 0;
        say("g^4 != 0", g4 ? "yes" : "no");
        leaf = ideal4 ? (g4 ? "a52" : "nil4xe") : (g4 ? "a56" : "a55");
    } else {
        const Subspace& N = an.nilrad;
        std::string nname;
        if (N.dim() == 3) {
            nname = subspace_is_abelian(L, N) ? "R^3" : "Heis_3";
        } else if (N.dim() == 4) {
            if (subspace_is_abelian(L, N))
                nname = "R^4";
            else if (subspace_derived_dim(L, N) == 1 && subspace_center(L, N).dim() == 2)
                nname = "R + Heis_3";
            else
                nname = "Nil^4";
        } else {
            nname = "dim " + std::to_string(N.dim());
        }
        say("nilradical", nname);

        if (nname == "R^3") {
            leaf = "a533";
        } else if (nname == "R^4") {
            const int blocks = fp.action_jordan_blocks.value();
            say("Jordan blocks", std::to_string(blocks));
            if (blocks == 2) {
                leaf = "a515";
            } else if (blocks == 3) {
                leaf = "a58";
            } else if (blocks == 4) {
                // Weight-pattern refinement of the 4-block leaf.
                const RootSignature& sig = fp.action_signature.value();
                const Poly q = charpoly(*an.action);
                if (sig.zero_mult == 0 && sig.distinct == 4 && sig.real == 4) {
                    leaf = "a57_diag";
                } else if (sig.zero_mult == 0 && sig.distinct == 4 && sig.real == 2) {
                    leaf = "a57_complex";
                } else if (sig.zero_mult == 0 && sig.distinct == 2 && sig.real == 2) {
                    // diagonalizable with q = s^2: the (a, a, -a, -a) pattern
                    const Poly s = squarefree_part(q);
                    if (s.degree() == 2 && s * s == q)
                        leaf = "a57_1m1m1";
                    else
                        throw reject("repeated weights outside the (a,a,-a,-a) pattern");
                } else if (sig.zero_mult == 1 && sig.distinct == 4 && sig.real == 4) {
                    leaf = "sol4type";
                } else if (sig.zero_mult == 2 && sig.distinct == 3 && sig.real == 3) {
                    leaf = "sol3xe2";
                } else {
                    throw reject("weight pattern matches no trivial-isotropy leaf");
                }
            } else {
                throw reject("R^4 x| R with " + std::to_string(blocks) +
                             " Jordan blocks matches no leaf");
            }
        } else if (nname == "R + Heis_3") {
            say("center dim", std::to_string(fp.center_dim));
            if (fp.center_dim == 1)
                leaf = "a520";
            else if (fp.center_dim == 2)
                leaf = "sol41xe";
            else
                throw reject("(R x Heis_3) x| R with center dim " +
                             std::to_string(fp.center_dim) + " matches no leaf");
        } else {
            throw reject("nilradical " + nname + " matches no leaf");
        }
    }

    const LeafRef& ref = leaf_ref(leaf);
    if (!fingerprint_matches(fp, ref.fp, ref.killing_wildcard))
        throw reject(std::string("fingerprint differs from the ") + ref.label + " reference");

    out.label = ref.label;
    out.atlas_id = ref.atlas_id;
    if (leaf == "a57_diag" || leaf == "sol4type")
        out.params = real_weight_params(charpoly(*an.action));
    else if (leaf == "a57_complex")
        out.params = complex_weight_params(charpoly(*an.action));
    if (leaf == "sol4type")
        out.notes = "matches the Sol^4_{m,n} x E weight pattern; genuine members carry "
                    "irrational weights (logarithms of the monodromy's eigenvalues)";
    return out;
}

}  // namespace geo5
