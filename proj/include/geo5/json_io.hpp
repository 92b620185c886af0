#pragma once
// JSON bridges for the engine's inputs and reports.
//
// The wire schema for a Lie algebra is
//
//   {"dim": n,
//    "basis": ["e1", ...],                        // optional, size n
//    "brackets": [{"i": 0, "j": 1,                // 0-based, i < j only
//                  "terms": [{"k": 2, "q": "p/q"}, ...]}, ...]}
//
// Omitted pairs are zero brackets.  Rationals travel as reduced strings
// "p/q" (q > 0) or "p" when the denominator is 1, so a round-trip through
// this schema is bit-exact.  Serialization is deterministic: pairs ascend
// lexicographically, terms ascend in k, and objects keep insertion order.

#include <geo5/classify.hpp>
#include <geo5/curvature.hpp>
#include <geo5/error.hpp>
#include <geo5/liealg.hpp>
#include <geo5/rat.hpp>

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace geo5 {

using Json = nlohmann::ordered_json;

inline Json algebra_to_json(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    Json doc;
    doc["dim"] = n;
    Json basis = Json::array();
    for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
    doc["basis"] = basis;
    Json brackets = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec ei(n, Rat(0)), ej(n, Rat(0));
            ei[i] = Rat(1);
            ej[j] = Rat(1);
            const Vec v = L.bracket(ei, ej);
            if (vec_is_zero(v)) continue;
            Json terms = Json::array();
            for (std::size_t k = 0; k < n; ++k) {
                if (v[k].is_zero()) continue;
                terms.push_back(Json{{"k", k}, {"q", v[k].str()}});
            }
            brackets.push_back(Json{{"i", i}, {"j", j}, {"terms", terms}});
        }
    doc["brackets"] = brackets;
    return doc;
}

inline LieAlgebra algebra_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ParseError("missing integer field 'dim'");
    const long long dim_ll = doc["dim"].get<long long>();
    if (dim_ll < 0) throw ParseError("'dim' must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(dim_ll);
    LieAlgebra L(n);  // throws WrongDimension outside the supported range

    if (doc.contains("basis")) {
        const Json& basis = doc["basis"];
        if (!basis.is_array() || basis.size() != n)
            throw ParseError("'basis' must be an array of " + std::to_string(n) + " names");
        for (const Json& b : basis)
            if (!b.is_string()) throw ParseError("'basis' entries must be strings");
    }

    if (doc.contains("brackets")) {
        const Json& brackets = doc["brackets"];
        if (!brackets.is_array()) throw ParseError("'brackets' must be an array");
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
        for (const Json& entry : brackets) {
            if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
                !entry.contains("terms"))
                throw ParseError("each bracket needs fields 'i', 'j', 'terms'");
            if (!entry["i"].is_number_integer() || !entry["j"].is_number_integer())
                throw ParseError("bracket indices must be integers");
            const long long il = entry["i"].get<long long>();
            const long long jl = entry["j"].get<long long>();
            if (il < 0 || jl < 0 || il >= static_cast<long long>(n) ||
                jl >= static_cast<long long>(n))
                throw ParseError("bracket index out of range");
            if (!(il < jl)) throw ParseError("brackets must list pairs with i < j");
            const std::size_t i = static_cast<std::size_t>(il);
            const std::size_t j = static_cast<std::size_t>(jl);
            if (seen[i][j]) throw ParseError("duplicate bracket pair");
            seen[i][j] = true;
            if (!entry["terms"].is_array()) throw ParseError("'terms' must be an array");
            Vec v(n, Rat(0));
            std::vector<bool> used(n, false);
            for (const Json& term : entry["terms"]) {
                if (!term.is_object() || !term.contains("k") || !term.contains("q"))
                    throw ParseError("each term needs fields 'k' and 'q'");
                if (!term["k"].is_number_integer()) throw ParseError("term index must be an integer");
                const long long kl = term["k"].get<long long>();
                if (kl < 0 || kl >= static_cast<long long>(n))
                    throw ParseError("term index out of range");
                if (!term["q"].is_string()) throw ParseError("term coefficient must be a string");
                const std::size_t k = static_cast<std::size_t>(kl);
                if (used[k]) throw ParseError("duplicate term index in one bracket");
                used[k] = true;
                v[k] = Rat::parse(term["q"].get<std::string>());
            }
            L.set_bracket(i, j, v);
        }
    }
    const ValidationReport rep = L.validate();
    if (!rep.ok) throw DegenerateInput(rep.message);  // e.g. a Jacobi-identity failure
    return L;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

inline LieAlgebra load_algebra(const std::string& path) {
    return algebra_from_json(read_json_file(path));
}

// ---------------------------------------------------------------------------
// Reports

inline Json classification_to_json(const Classification& c) {
    Json doc;
    doc["label"] = c.label;
    doc["atlas_id"] = c.atlas_id;
    Json params = Json::object();
    if (c.params) {
        Json names = Json::array();
        for (const std::string& s : c.params->names) names.push_back(s);
        params["names"] = names;
        params["exact"] = !c.params->numeric;
        Json approx = Json::array();
        for (double d : c.params->approx) approx.push_back(d);
        params["approx"] = approx;
        if (!c.params->numeric) {
            Json exact = Json::array();
            for (const Rat& q : c.params->exact) exact.push_back(q.str());
            params["values"] = exact;
        }
    }
    doc["params"] = params;
    Json trace = Json::array();
    for (const TraceStep& s : c.trace)
        trace.push_back(Json{{"question", s.question}, {"answer", s.answer}});
    doc["trace"] = trace;
    doc["status"] = c.status;
    if (!c.notes.empty()) doc["notes"] = c.notes;
    doc["fingerprint"] = Json::parse(fingerprint_json(c.fingerprint));
    return doc;
}

inline Json curvature_to_json(const LieAlgebra& L) {
    const Curvature curv(L);
    const std::size_t n = L.dim();
    Json doc;
    doc["dim"] = n;
    Json gamma = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json gi = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Json gj = Json::array();
            for (std::size_t k = 0; k < n; ++k) gj.push_back(curv.christoffel(i, j, k).str());
            gi.push_back(gj);
        }
        gamma.push_back(gi);
    }
    doc["christoffel"] = gamma;
    Json planes = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            planes.push_back(Json{{"i", i}, {"j", j}, {"K", curv.sectional(i, j).str()}});
    doc["sectional"] = planes;
    const Mat ric = curv.ricci();
    Json ricci = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(ric.at(i, j).str());
        ricci.push_back(row);
    }
    doc["ricci"] = ricci;
    const RicciSpectrum spec = curv.ricci_spectrum();
    Json eig = Json::object();
    eig["exact"] = spec.exact;
    if (spec.exact) {
        Json vals = Json::array();
        for (const Rat& q : spec.values) vals.push_back(q.str());
        eig["values"] = vals;
    }
    Json approx = Json::array();
    for (double d : spec.approx) approx.push_back(d);
    eig["approx"] = approx;
    doc["ricci_eigenvalues"] = eig;
    doc["scalar"] = curv.scalar().str();
    doc["flat"] = curv.flat();
    doc["metric_compatible"] = curv.metric_compatible();
    doc["first_bianchi"] = curv.first_bianchi_holds();
    return doc;
}

}  // namespace geo5
