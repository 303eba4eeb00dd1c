// equichar: command-line front end.
//
// Exit codes: 0 success, 1 other error, 2 malformed input, 3 invariant
// violation, 4 computation mismatch, 5 size cap exceeded.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "equichar/acceptance.hpp"
#include "equichar/character_table.hpp"
#include "equichar/json_io.hpp"
#include "equichar/oracle.hpp"
#include "equichar/random.hpp"

using namespace equichar;
namespace jio = equichar::json_io;

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? ", " : "") + parts[k];
    return s;
}

/// A group file holds either a bare group object or a document with "group".
GroupPtr load_group(const std::string& path, int characteristic) {
    const auto doc = jio::read_file(path);
    return jio::guarded([&] {
        return doc.contains("group") ? jio::document_group(doc, characteristic) : jio::group_from_json(doc, characteristic);
    });
}

bool has_table(const GroupPtr& G) { return G->characteristic() == 0 && G->order() <= character_table_cap(); }

std::string name_of(const ClassFunction& f) {
    const std::string trivial = f.characteristic() == 0 ? "trivial character" : "trivial Brauer character";
    if (f.is_zero()) return "zero";
    if (f == ClassFunction::trivial(f.group())) return trivial;
    if (f == -ClassFunction::trivial(f.group())) return "minus the " + trivial;
    if (f.characteristic() == 0 && f == ClassFunction::regular(f.group())) return "regular character";
    return "";
}

void print_values(const ClassFunction& f) {
    std::vector<std::string> reps, vals;
    for (std::size_t k = 0; k < f.classes().size(); ++k) {
        reps.push_back(f.group()->element(f.classes()[k].representative).cycle_string());
        vals.push_back(f.value(k).str());
    }
    std::cout << "classes: (" << join(reps) << ")\n";
    std::cout << "values: (" << join(vals) << ")\n";
    if (auto n = name_of(f); !n.empty()) std::cout << "this is the " << n << "\n";
}

void print_decomposition(const ClassFunction& f) {
    if (!has_table(f.group())) {
        std::cout << "decomposition: no ordinary character table (needs characteristic 0 and |G| <= "
                  << character_table_cap() << ")\n";
        return;
    }
    const CharacterTable t = character_table(f.group());
    const Decomposition d = decompose(f, t);
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < d.multiplicities.size(); ++k)
        parts.push_back("X" + std::to_string(k + 1) + "(deg " + t.rows[k].degree().str() +
                        ") = " + to_string(d.multiplicities[k]));
    std::cout << "multiplicities: " << join(parts) << "\n";
    std::cout << (d.integral ? "virtual character (integral multiplicities)" : "not a virtual character") << "\n";
}

int cmd_table(const std::string& path, int p, bool irreducibles) {
    const GroupPtr G = load_group(path, p);
    std::cout << "order " << G->order() << ", characteristic " << G->characteristic() << ", exponent "
              << G->exponent() << "\n";
    std::cout << (G->characteristic() ? "p-regular classes:" : "conjugacy classes:") << "\n";
    const auto& classes = G->conjugacy_classes(G->characteristic() > 0);
    for (std::size_t k = 0; k < classes.size(); ++k)
        std::cout << "  " << k << ": " << G->element(classes[k].representative).cycle_string() << "  order "
                  << classes[k].order << "  size " << classes[k].size() << "  |C| "
                  << G->order() / classes[k].size() << "\n";
    std::cout << "dual cyclic subgroup classes:\n";
    for (const auto& s : G->cyclic_subgroup_classes())
        std::cout << "  sigma " << s.id << ": generator " << G->element(s.generator).cycle_string() << "  order "
                  << s.order << "  |C| " << s.centralizer_order << "  |N| " << s.normalizer_order
                  << "  conjugates " << s.conjugates << "  markings " << s.marking_count() << "\n";
    if (irreducibles) {
        if (G->characteristic() != 0) throw InvariantError("irreducible table is available in characteristic 0 only");
        if (G->order() > character_table_cap())
            throw CapError("group order exceeds the character table cap of " + std::to_string(character_table_cap()));
        const CharacterTable t = character_table(G);
        std::cout << "irreducible characters:\n";
        for (std::size_t k = 0; k < t.rows.size(); ++k) {
            std::vector<std::string> v;
            for (const auto& x : t.rows[k].values()) v.push_back(x.str());
            std::cout << "  X" << k + 1 << ": (" << join(v) << ")\n";
        }
    }
    return 0;
}

int cmd_reassemble(const std::string& path, int p, int trials, std::uint64_t seed) {
    const GroupPtr G = load_group(path, p);
    const auto basis = random_basis(G);
    Lcg rng(seed);
    int good = 0;
    for (int k = 0; k < trials; ++k) {
        const ClassFunction V = random_virtual_character(G, basis, rng);
        if (reassemble(V) == V)
            ++good;
        else
            std::cout << "trial " << k << ": reassembly differs for " << V.str() << "\n";
    }
    std::cout << good << "/" << trials << " identity\n";
    return good == trials ? 0 : 4;
}

int cmd_assemble(const std::string& path, int p, bool as_json) {
    const auto doc = jio::read_file(path);
    const SectorData data = jio::guarded([&] { return jio::sector_data_from_json(doc, p); });
    const ClassFunction chi = assemble_sectors(data);
    if (as_json) {
        std::cout << jio::to_json(chi).dump(2) << "\n";
        return 0;
    }
    print_values(chi);
    if (has_table(chi.group())) print_decomposition(chi);
    return 0;
}

int cmd_curve(const std::string& path, int p, bool decomposition, bool as_json) {
    const auto doc = jio::read_file(path);
    const CurveDatum datum = jio::guarded([&] { return jio::curve_datum_from_json(doc, p); });
    const ClassFunction chi = curve_euler_char(datum);
    if (as_json) {
        std::cout << jio::to_json(chi).dump(2) << "\n";
        return 0;
    }
    std::cout << "chi(X, E) = " << to_string(global_euler_char(datum)) << "\n";
    print_values(chi);
    if (decomposition) print_decomposition(chi);
    return 0;
}

int cmd_oracle(const std::string& spec, long degree, bool with_compare, bool as_json) {
    const auto G = oracle::build_matrix_group(spec);
    if (!with_compare) {
        const ClassFunction chi = oracle::cohomology_character(G, degree);
        if (as_json) {
            std::cout << jio::to_json(chi).dump(2) << "\n";
            return 0;
        }
        std::cout << spec << ", O(" << degree << "): order " << G.size() << "\n";
        print_values(chi);
        return 0;
    }
    const oracle::Report r = oracle::compare(G, degree);
    if (as_json) {
        std::cout << jio::to_json(r).dump(2) << "\n";
    } else {
        std::cout << spec << ", O(" << degree << "): order " << G.size() << "\n";
        std::cout << "cohomology:\n";
        print_values(r.lhs);
        std::cout << "curve formula:\n";
        print_values(r.rhs);
        std::cout << "sectors from fixed points: " << (r.sectors_equal ? "equal" : "DIFFERENT") << "\n";
        std::cout << "fixed point normalization: " << (r.remark_holds ? "holds" : "FAILS") << "\n";
        std::cout << "orbit count: " << (r.orbit_count_holds ? "holds" : "FAILS") << "\n";
        std::cout << "Serre duality: " << (r.serre_duality_holds ? "holds" : "FAILS") << "\n";
        std::cout << (r.ok() ? "EQUAL" : "MISMATCH") << "\n";
    }
    return r.ok() ? 0 : 4;
}

int cmd_verify_all() {
    int failed = 0;
    for (const auto& r : acceptance::run_all()) {
        std::cout << acceptance::format(r) << std::endl;
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant Euler characteristics of G-sheaves"};
    app.require_subcommand(1);

    std::string group_path, sectors_path, datum_path, spec;
    int p = -1, trials = 100;
    std::uint64_t seed = 1;
    long degree = 0;
    bool irreducibles = false, decomposition = false, with_compare = false, as_json = false;
    auto char_check = CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                const int v = std::stoi(s);
                if (v == 0 || (v > 0 && is_prime(v))) return {};
            } catch (const std::exception&) {
            }
            return "characteristic must be 0 or a prime";
        },
        "0|PRIME");

    auto* table = app.add_subcommand("table", "conjugacy classes, cyclic subgroup classes, character table");
    table->add_option("--group", group_path, "group JSON")->required()->check(CLI::ExistingFile);
    table->add_option("--char", p, "characteristic override")->check(char_check);
    table->add_flag("--irreducibles", irreducibles, "print the irreducible characters");

    auto* re = app.add_subcommand("reassemble-check", "reassembly identity on random virtual characters");
    re->add_option("--group", group_path, "group JSON")->required()->check(CLI::ExistingFile);
    re->add_option("--char", p, "characteristic override")->check(char_check);
    re->add_option("--trials", trials, "number of random characters")->check(CLI::Range(1, 1000000));
    re->add_option("--seed", seed, "LCG seed");

    auto* as = app.add_subcommand("assemble", "assemble a virtual character from sector data");
    as->add_option("--sectors", sectors_path, "sector data JSON")->required()->check(CLI::ExistingFile);
    as->add_option("--char", p, "characteristic override")->check(char_check);
    as->add_flag("--json", as_json, "print JSON");

    auto* curve = app.add_subcommand("curve-chi", "equivariant Euler characteristic of a curve datum");
    curve->add_option("--datum", datum_path, "curve datum JSON")->required()->check(CLI::ExistingFile);
    curve->add_option("--char", p, "characteristic override")->check(char_check);
    curve->add_flag("--decompose", decomposition, "print irreducible multiplicities");
    curve->add_flag("--json", as_json, "print JSON");

    auto* orc = app.add_subcommand("oracle-p1", "cohomology of O(d) on P^1 under a matrix group");
    orc->add_option("--spec", spec, "cyclic(n), dihedral(n) with n odd, or matrices([a, b; c, d], ...)")->required();
    orc->add_option("--degree", degree, "degree d of O(d)")->required();
    orc->add_flag("--compare", with_compare, "compare against the curve formula");
    orc->add_flag("--json", as_json, "print JSON");

    auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");

    CLI11_PARSE(app, argc, argv);

    if (const char* cap = std::getenv("EQUICHAR_MAX_GROUP")) {
        try {
            const long v = std::stol(cap);
            if (v < 1) throw std::invalid_argument("non-positive");
            group_order_cap() = static_cast<std::size_t>(v);
            character_table_cap() = std::min<std::size_t>(character_table_cap(), static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            std::cerr << "error: EQUICHAR_MAX_GROUP must be a positive integer\n";
            return 2;
        }
    }

    try {
        if (*table) return cmd_table(group_path, p, irreducibles);
        if (*re) return cmd_reassemble(group_path, p, trials, seed);
        if (*as) return cmd_assemble(sectors_path, p, as_json);
        if (*curve) return cmd_curve(datum_path, p, decomposition, as_json);
        if (*orc) return cmd_oracle(spec, degree, with_compare, as_json);
        if (*verify) return cmd_verify_all();
    } catch (const ParseError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return 4;
    } catch (const CapError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
