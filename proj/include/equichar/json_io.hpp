#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "equichar/class_function.hpp"
#include "equichar/curve.hpp"
#include "equichar/error.hpp"
#include "equichar/lrr.hpp"
#include "equichar/oracle.hpp"

// JSON schemas. Rationals are written as "p/q" strings; inputs may also use
// JSON integers. Permutations are image arrays or cycle strings "(0 1 2)(3 4)".
//
//   cyclotomic     {"conductor": N, "coeffs": ["p/q", ...]}   or "1/2 - z3^2"
//   group          {"degree": n, "generators": [perm, ...], "char": p}
//   class function {"group": group, "char": p, "classes": [perm, ...], "values": [cyclotomic, ...]}
//                  "classes" is optional; without it values follow the class order of `table`.
//   sector data    {"group": group, "char": p,
//                   "sectors": [{"sigma": id, "order": r, "generator": perm, "q": ["p/q", ...]}]}
//                  q may also be sparse: {"i": "p/q"}; sigma may be omitted when generator is given.
//   curve datum    {"group": group, "char": p, "rank": r, "mode": "direct" | "hrr",
//                   "chi": "p/q" | "deg": d, "gY": g,
//                   "orbits": [{"stabilizer": {"generators": [perm, ...]}, "e": e, "et": e_t,
//                               "fiber": values | {"powers": [a, ...]}, "conormal": values | {"power": j}}]}
//                  Power form needs a single stabilizer generator s; chi^a sends s^k to zeta_et^(ak).

namespace equichar::json_io {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw ParseError(what); }

inline const json& field(const json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field '") + key + "'");
    return *it;
}

inline long integer(const json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<long>();
}

}  // namespace detail

inline json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    detail::fail("expected a rational as \"p/q\" or an integer");
}

inline json to_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
    return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
    if (j.is_number_integer()) return Cyclotomic(Rational(j.get<long>()));
    if (j.is_string()) return parse_cyclotomic(j.get<std::string>());
    const long n = detail::integer(detail::field(j, "conductor"), "conductor");
    if (n < 1) detail::fail("conductor must be positive");
    if (static_cast<std::size_t>(n) > static_cast<std::size_t>(conductor_cap()))
        throw CapError("conductor " + std::to_string(n) + " exceeds the cap");
    const json& cs = detail::field(j, "coeffs");
    if (!cs.is_array()) detail::fail("coeffs must be an array");
    std::vector<Rational> v;
    for (const auto& c : cs) v.push_back(rational_from_json(c));
    return Cyclotomic(n, std::move(v));
}

inline json to_json(const Perm& p) { return p.images(); }

inline Perm perm_from_json(const json& j, int degree) {
    if (j.is_array()) {
        std::vector<int> images;
        for (const auto& x : j) images.push_back(static_cast<int>(detail::integer(x, "permutation image")));
        if (static_cast<int>(images.size()) != degree)
            throw InvariantError("permutation has " + std::to_string(images.size()) + " images, expected " +
                                 std::to_string(degree));
        return Perm(std::move(images));
    }
    if (!j.is_string()) detail::fail("permutation must be an image array or a cycle string");
    const std::string s = j.get<std::string>();
    std::vector<std::vector<int>> cycles;
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == ',')) ++pos;
    };
    skip();
    while (pos < s.size()) {
        if (s[pos] != '(') detail::fail("malformed cycle string '" + s + "'");
        ++pos;
        std::vector<int> cycle;
        for (skip(); pos < s.size() && s[pos] != ')'; skip()) {
            std::size_t used_chars = 0;
            int x = 0;
            try {
                x = std::stoi(s.substr(pos), &used_chars);
            } catch (const std::exception&) {
                detail::fail("malformed cycle string '" + s + "'");
            }
            pos += used_chars;
            if (x < 0 || x >= degree) throw InvariantError("point " + std::to_string(x) + " out of range in '" + s + "'");
            if (used[static_cast<std::size_t>(x)]) throw InvariantError("cycles in '" + s + "' are not disjoint");
            used[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
        }
        if (pos >= s.size()) detail::fail("unterminated cycle in '" + s + "'");
        ++pos;
        skip();
        cycles.push_back(std::move(cycle));
    }
    return Perm::from_cycles(degree, cycles);
}

inline json to_json(const PermGroup& G) {
    json gens = json::array();
    for (const auto& g : G.generators()) gens.push_back(to_json(g));
    return {{"degree", G.degree()}, {"generators", gens}, {"char", G.characteristic()}};
}

/// The group object; `characteristic` >= 0 overrides its "char" field.
inline GroupPtr group_from_json(const json& j, int characteristic = -1) {
    const long degree = detail::integer(detail::field(j, "degree"), "degree");
    if (degree < 0) throw InvariantError("degree must be non-negative");
    const json& gs = detail::field(j, "generators");
    if (!gs.is_array()) detail::fail("generators must be an array");
    std::vector<Perm> gens;
    for (const auto& g : gs) gens.push_back(perm_from_json(g, static_cast<int>(degree)));
    int p = characteristic;
    if (p < 0) p = j.contains("char") ? static_cast<int>(detail::integer(j["char"], "char")) : 0;
    return enumerate(static_cast<int>(degree), std::move(gens), p);
}

/// Group of a top-level document: its "group" field, with a top-level "char"
/// taking precedence over the group's own.
inline GroupPtr document_group(const json& doc, int characteristic = -1) {
    if (characteristic < 0 && doc.is_object() && doc.contains("char"))
        characteristic = static_cast<int>(detail::integer(doc["char"], "char"));
    return group_from_json(detail::field(doc, "group"), characteristic);
}

/// Values only (class order), with representatives alongside for readers.
inline json values_to_json(const ClassFunction& f) {
    json classes = json::array(), values = json::array();
    for (std::size_t k = 0; k < f.classes().size(); ++k) {
        classes.push_back(f.group()->element(f.classes()[k].representative).cycle_string());
        values.push_back(to_json(f.value(k)));
    }
    return {{"classes", classes}, {"values", values}};
}

inline json to_json(const ClassFunction& f) {
    json j = values_to_json(f);
    j["group"] = to_json(*f.group());
    j["char"] = f.characteristic();
    return j;
}

/// Reads "values" (and optional "classes") of j as a class function on G.
inline ClassFunction values_from_json(const json& j, const GroupPtr& G) {
    const json& vs = j.is_array() ? j : detail::field(j, "values");
    if (!vs.is_array()) detail::fail("values must be an array");
    const auto& classes = G->conjugacy_classes(G->characteristic() > 0);
    if (vs.size() != classes.size())
        throw InvariantError("expected " + std::to_string(classes.size()) + " class values, got " +
                             std::to_string(vs.size()));
    std::vector<Cyclotomic> values(classes.size());
    if (j.is_object() && j.contains("classes")) {
        const json& cs = j["classes"];
        if (!cs.is_array() || cs.size() != vs.size()) detail::fail("classes and values must have equal length");
        std::vector<bool> seen(classes.size(), false);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            const int g = G->index_of(perm_from_json(cs[k], G->degree()));
            if (g < 0) throw InvariantError("class representative " + cs[k].dump() + " is not in the group");
            const int c = G->characteristic() > 0 ? G->regular_class_of(g) : G->class_of(g);
            if (c < 0) throw InvariantError("class representative " + cs[k].dump() + " is p-singular");
            if (seen[static_cast<std::size_t>(c)]) throw InvariantError("class " + cs[k].dump() + " listed twice");
            seen[static_cast<std::size_t>(c)] = true;
            values[static_cast<std::size_t>(c)] = cyclotomic_from_json(vs[k]);
        }
    } else {
        for (std::size_t k = 0; k < vs.size(); ++k) values[k] = cyclotomic_from_json(vs[k]);
    }
    return ClassFunction(G, std::move(values));
}

inline ClassFunction class_function_from_json(const json& j, int characteristic = -1) {
    return values_from_json(j, document_group(j, characteristic));
}

/// Index of the cyclic subgroup class containing <g>.
inline int sigma_of(const GroupPtr& G, int g) {
    const int r = G->element_order(g);
    for (const auto& s : G->cyclic_subgroup_classes()) {
        if (s.order != r) continue;
        for (int k = 1; k <= std::max(1, r); ++k)
            if (gcd(k, r) == 1 && G->class_of(G->pow(g, k)) == G->class_of(s.generator)) return s.id;
    }
    throw InvariantError("element " + G->element(g).cycle_string() + " generates no dual cyclic subgroup");
}

inline json to_json(const SectorData& d) {
    json sectors = json::array();
    for (const auto& e : d.entries) {
        json q = json::array();
        for (const auto& x : e.q) q.push_back(to_json(x));
        sectors.push_back({{"sigma", e.sigma},
                           {"order", static_cast<int>(e.q.size())},
                           {"generator", to_json(d.group->element(e.generator))},
                           {"q", q}});
    }
    return {{"group", to_json(*d.group)}, {"char", d.group->characteristic()}, {"sectors", sectors}};
}

inline SectorData sector_data_from_json(const json& j, int characteristic = -1) {
    SectorData d{document_group(j, characteristic), {}};
    const GroupPtr& G = d.group;
    const auto& classes = G->cyclic_subgroup_classes();
    const json& ss = detail::field(j, "sectors");
    if (!ss.is_array()) detail::fail("sectors must be an array");
    for (const auto& s : ss) {
        SectorEntry e;
        if (s.contains("generator")) {
            const json& gj = detail::field(s, "generator");
            e.generator = gj.is_number_integer() ? static_cast<int>(gj.get<long>())
                                                 : G->index_of(perm_from_json(gj, G->degree()));
            if (e.generator < 0 || e.generator >= G->size())
                throw InvariantError("sector generator " + gj.dump() + " is not in the group");
            e.sigma = s.contains("sigma") ? static_cast<int>(detail::integer(s["sigma"], "sigma"))
                                          : sigma_of(G, e.generator);
        } else {
            e.sigma = static_cast<int>(detail::integer(detail::field(s, "sigma"), "sigma"));
            if (e.sigma < 0 || static_cast<std::size_t>(e.sigma) >= classes.size())
                throw InvariantError("sector id " + std::to_string(e.sigma) + " out of range");
            e.generator = classes[static_cast<std::size_t>(e.sigma)].generator;
        }
        if (e.sigma < 0 || static_cast<std::size_t>(e.sigma) >= classes.size())
            throw InvariantError("sector id " + std::to_string(e.sigma) + " out of range");
        const int r = classes[static_cast<std::size_t>(e.sigma)].order;
        if (s.contains("order") && detail::integer(s["order"], "order") != r)
            throw InvariantError("sector " + std::to_string(e.sigma) + " has order " + std::to_string(r));
        e.q.assign(static_cast<std::size_t>(r), Rational(0));
        const json& q = detail::field(s, "q");
        if (q.is_array()) {
            if (q.size() != static_cast<std::size_t>(r))
                throw InvariantError("sector " + std::to_string(e.sigma) + ": expected " + std::to_string(r) +
                                     " isotypic values");
            for (std::size_t i = 0; i < q.size(); ++i) e.q[i] = rational_from_json(q[i]);
        } else if (q.is_object()) {
            for (const auto& [key, value] : q.items()) {
                long i = 0;
                try {
                    std::size_t used = 0;
                    i = std::stol(key, &used);
                    if (used != key.size()) throw ParseError("");
                } catch (const std::exception&) {
                    detail::fail("isotypic index '" + key + "' is not an integer");
                }
                e.q[static_cast<std::size_t>(mod(i, r))] += rational_from_json(value);
            }
        } else {
            detail::fail("q must be an array or an object");
        }
        d.entries.push_back(std::move(e));
    }
    return d;
}

inline json to_json(const CurveDatum& d) {
    json orbits = json::array();
    for (const auto& o : d.orbits) {
        json gens = json::array();
        for (const auto& g : o.stabilizer.sub->generators()) gens.push_back(to_json(g));
        orbits.push_back({{"stabilizer", {{"generators", gens}}},
                          {"e", o.e},
                          {"et", o.e_t},
                          {"fiber", values_to_json(o.fiber)},
                          {"conormal", values_to_json(o.conormal)}});
    }
    json j = {{"group", to_json(*d.group)}, {"char", d.group->characteristic()}, {"rank", d.rank}};
    if (d.mode == ChiMode::direct) {
        j["mode"] = "direct";
        j["chi"] = to_json(d.chi_global);
    } else {
        j["mode"] = "hrr";
        j["deg"] = d.deg;
        j["gY"] = d.genus_quotient;
    }
    j["orbits"] = orbits;
    return j;
}

namespace detail {

/// Sum of chi^a over the listed powers, chi(s^k) = zeta_et^(ak) for the single generator s.
inline ClassFunction power_character(const SubgroupEmbedding& Gx, int e_t, const std::vector<long>& powers) {
    if (Gx.sub->generators().size() > 1) fail("power form needs a stabilizer with a single generator");
    ClassFunction sum = ClassFunction::zero(Gx.sub);
    for (long a : powers)
        sum += ClassFunction::from_representatives(Gx.sub, [&](int h) {
            // Element h of <s> is s^h.
            return Cyclotomic::root_of_unity(e_t, a * h);
        });
    return sum;
}

inline ClassFunction orbit_character(const json& j, const SubgroupEmbedding& Gx, int e_t, const char* single,
                                     const char* multiple) {
    if (j.is_object() && (j.contains(single) || j.contains(multiple))) {
        std::vector<long> powers;
        if (j.contains(single)) powers.push_back(integer(j[single], single));
        if (j.contains(multiple)) {
            if (!j[multiple].is_array()) fail(std::string(multiple) + " must be an array");
            for (const auto& a : j[multiple]) powers.push_back(integer(a, multiple));
        }
        return power_character(Gx, e_t, powers);
    }
    return values_from_json(j, Gx.sub);
}

}  // namespace detail

inline CurveDatum curve_datum_from_json(const json& j, int characteristic = -1) {
    CurveDatum d;
    d.group = document_group(j, characteristic);
    d.rank = static_cast<int>(detail::integer(detail::field(j, "rank"), "rank"));
    const std::string mode = j.contains("mode") ? j["mode"].get<std::string>() : std::string("direct");
    if (mode == "direct") {
        d.mode = ChiMode::direct;
        d.chi_global = rational_from_json(detail::field(j, "chi"));
    } else if (mode == "hrr") {
        d.mode = ChiMode::hrr;
        d.deg = detail::integer(detail::field(j, "deg"), "deg");
        d.genus_quotient = detail::integer(detail::field(j, "gY"), "gY");
    } else {
        detail::fail("mode must be \"direct\" or \"hrr\"");
    }
    const json& os = detail::field(j, "orbits");
    if (!os.is_array()) detail::fail("orbits must be an array");
    for (const auto& oj : os) {
        RamifiedOrbit o;
        const json& gens = detail::field(detail::field(oj, "stabilizer"), "generators");
        if (!gens.is_array()) detail::fail("stabilizer generators must be an array");
        std::vector<int> idx;
        for (const auto& g : gens) {
            const int k = g.is_number_integer() ? static_cast<int>(g.get<long>())
                                                : d.group->index_of(perm_from_json(g, d.group->degree()));
            if (k < 0 || k >= d.group->size()) throw InvariantError("stabilizer generator " + g.dump() + " is not in the group");
            idx.push_back(k);
        }
        o.stabilizer = subgroup(d.group, idx);
        o.e = static_cast<int>(detail::integer(detail::field(oj, "e"), "e"));
        o.e_t = static_cast<int>(detail::integer(detail::field(oj, "et"), "et"));
        if (o.e_t < 1) throw InvariantError("orbit: e_t must be positive");
        o.fiber = detail::orbit_character(detail::field(oj, "fiber"), o.stabilizer, o.e_t, "power", "powers");
        o.conormal = detail::orbit_character(detail::field(oj, "conormal"), o.stabilizer, o.e_t, "power", "powers");
        d.orbits.push_back(std::move(o));
    }
    return d;
}

inline json to_json(const oracle::Report& r) {
    return {{"group", r.group},
            {"d", r.d},
            {"equal", r.equal},
            {"lhs", values_to_json(r.lhs)},
            {"rhs", values_to_json(r.rhs)},
            {"diff", values_to_json(r.diff)},
            {"checks",
             {{"sectors_from_fixed_points", r.sectors_equal},
              {"fixed_point_normalization", r.remark_holds},
              {"orbit_count", r.orbit_count_holds},
              {"serre_duality", r.serre_duality_holds}}}};
}

/// Parses a document, mapping every JSON-level failure to ParseError.
inline json parse(const std::string& text, const std::string& origin = "input") {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

/// Runs a reader, translating nlohmann type errors into ParseError.
template <class F>
auto guarded(F&& read) -> decltype(read()) {
    try {
        return read();
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

}  // namespace equichar::json_io
