#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zn/oracle.hpp"
#include "zn/structure.hpp"
#include "zn/verify.hpp"

using json = nlohmann::ordered_json;
using zn::u64;

namespace {

constexpr int kExitNotFound = 1;    // non-lattice / nonexistent join / disagreement
constexpr int kExitUsage = 2;       // malformed arguments
constexpr int kExitCap = 3;         // resource cap exceeded
constexpr int kExitInternal = 4;    // cross-check mismatch (should never happen)

std::string set_to_string(const std::vector<u64>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

json flags_to_json(u64 a, const zn::ClassificationFlags& fl) {
    return json{{"a", a},
                {"is_unit", fl.is_unit},
                {"is_nilpotent", fl.is_nilpotent},
                {"is_projection", fl.is_projection},
                {"is_gp", fl.is_gp}};
}

int cmd_classify(u64 n, std::optional<u64> a, const std::string& format) {
    const zn::ZnContext ctx(n);
    if (a) {
        if (*a >= n) {
            std::cerr << "classify: residue " << *a << " out of range for n=" << n << "\n";
            return kExitUsage;
        }
        const auto fl = zn::classify(ctx, *a);
        if (format == "json") {
            json j = flags_to_json(*a, fl);
            j["schema_version"] = 1;
            j["n"] = n;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "a=" << *a << " in Z_" << n << ": "
                      << (fl.is_unit ? "unit " : "") << (fl.is_nilpotent ? "nilpotent " : "")
                      << (fl.is_projection ? "projection " : "")
                      << (fl.is_gp ? "gp" : "not gp") << "\n";
        }
        return 0;
    }
    const auto sets = zn::element_sets(ctx);
    if (format == "json") {
        json rows = json::array();
        for (u64 x = 0; x < n; ++x) rows.push_back(flags_to_json(x, zn::classify(ctx, x)));
        json j{{"schema_version", 1},
               {"n", n},
               {"elements", rows},
               {"sets",
                {{"gp", sets.gp},
                 {"projections", sets.projections},
                 {"units", sets.units},
                 {"nilpotents", sets.nilpotents}}}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n = " << n << "\n";
        std::cout << "   a  unit  nil  proj  gp\n";
        for (u64 x = 0; x < n; ++x) {
            const auto fl = zn::classify(ctx, x);
            auto mark = [](bool b) { return b ? "*" : "."; };
            std::cout << "  " << x << "     " << mark(fl.is_unit) << "    " << mark(fl.is_nilpotent)
                      << "    " << mark(fl.is_projection) << "    " << mark(fl.is_gp) << "\n";
        }
        std::cout << "U  = " << set_to_string(sets.units) << "\n";
        std::cout << "N  = " << set_to_string(sets.nilpotents) << "\n";
        std::cout << "P  = " << set_to_string(sets.projections) << "\n";
        std::cout << "GP = " << set_to_string(sets.gp) << "\n";
    }
    return 0;
}

int cmd_hasse(u64 n, const std::string& format, u64 cap) {
    if (cap != zn::kHasseCap)
        std::cerr << "warning: hasse cap overridden to " << cap << "\n";
    const zn::ZnContext ctx(n);
    zn::HasseDiagram d;
    try {
        d = zn::hasse(ctx, cap);
    } catch (const std::length_error& e) {
        std::cerr << "hasse: " << e.what() << "\n";
        return kExitCap;
    }
    if (format == "dot") {
        std::cout << "digraph Z" << n << " {\n";
        for (u64 v = 0; v < n; ++v) std::cout << "  " << v << ";\n";
        for (const auto& [lo, hi] : d.edges) std::cout << "  " << lo << " -> " << hi << ";\n";
        std::cout << "}\n";
    } else if (format == "ascii") {
        std::cout << "Z_" << n << ": " << n << " elements, " << d.edges.size()
                  << " cover edges\n";
        for (const auto& [lo, hi] : d.edges) std::cout << lo << " -> " << hi << "\n";
    } else {
        json edges = json::array();
        for (const auto& [lo, hi] : d.edges) edges.push_back({lo, hi});
        json nodes = json::array();
        for (u64 v = 0; v < n; ++v) nodes.push_back(v);
        json j{{"schema_version", 1}, {"n", n}, {"nodes", nodes}, {"edges", edges}};
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int cmd_lattice(u64 n, bool check, u64 oracle_cap, const std::string& format) {
    const zn::ZnContext ctx(n);
    const auto rep = zn::structure::is_lattice(ctx);
    std::optional<zn::oracle::LatticeWitness> brute;
    if (check) {
        try {
            brute = zn::oracle::brute_is_lattice(ctx, oracle_cap);
        } catch (const std::length_error& e) {
            std::cerr << "lattice: " << e.what() << "\n";
            return kExitCap;
        }
    }
    if (format == "json") {
        json j{{"schema_version", 1}, {"n", n}, {"is_lattice", rep.is_lattice}};
        if (!rep.is_lattice) j["failing_ideal"] = rep.failing_ideal;
        if (brute) {
            j["oracle_is_lattice"] = brute->is_lattice;
            j["agree"] = brute->is_lattice == rep.is_lattice;
        }
        std::cout << j.dump() << "\n";
    } else {
        if (rep.is_lattice)
            std::cout << "lattice\n";
        else
            std::cout << "not a lattice; failing ideal (" << rep.failing_ideal << ")\n";
        if (brute) {
            std::cout << "oracle: " << (brute->is_lattice ? "lattice" : "not a lattice")
                      << (brute->is_lattice == rep.is_lattice ? " (agree)" : " (DISAGREE)")
                      << "\n";
        }
    }
    if (brute && brute->is_lattice != rep.is_lattice) return kExitInternal;
    return rep.is_lattice ? 0 : kExitNotFound;
}

const char* path_name(zn::structure::MeetJoinPath p) {
    switch (p) {
        case zn::structure::MeetJoinPath::Comparable: return "comparable";
        case zn::structure::MeetJoinPath::CosetSmallest: return "coset_smallest";
        case zn::structure::MeetJoinPath::IdealLargest: return "ideal_largest";
    }
    return "?";
}

int cmd_joinmeet(bool is_join, u64 n, u64 a, u64 b, const std::string& format) {
    if (a >= n || b >= n) {
        std::cerr << (is_join ? "join" : "meet") << ": residues out of range for n=" << n << "\n";
        return kExitUsage;
    }
    const zn::ZnContext ctx(n);
    const auto r = is_join ? zn::structure::join(ctx, a, b) : zn::structure::meet(ctx, a, b);
    const char* op = is_join ? "join" : "meet";
    if (format == "json") {
        json j{{"schema_version", 1}, {"n", n},    {"op", op},
               {"a", a},              {"b", b},    {"exists", r.exists},
               {"path", path_name(r.path)},        {"d", r.d}};
        if (r.exists) j["value"] = r.value;
        std::cout << j.dump() << "\n";
    } else {
        if (r.exists)
            std::cout << op << "(" << a << ", " << b << ") = " << r.value
                      << " (path=" << path_name(r.path) << ", d=" << r.d << ")\n";
        else
            std::cout << op << "(" << a << ", " << b << ") does not exist (path="
                      << path_name(r.path) << ", d=" << r.d << ")\n";
    }
    return r.exists ? 0 : kExitNotFound;
}

int cmd_projections(u64 n, u64 a, const std::string& format) {
    const zn::ZnContext ctx(n);
    if (a >= n || !zn::classify(ctx, a).is_gp) {
        std::cerr << "projections: " << a << " is not a generalized projection in Z_" << n
                  << "; covering projections are defined on GP elements only\n";
        return kExitUsage;
    }
    const u64 fu = zn::structure::upper_covering_projection(ctx, a);
    const u64 pu = zn::structure::upper_covering_via_power(ctx, a);
    const u64 fl = zn::structure::lower_covering_projection(ctx, a);
    const auto [bl, bu] = zn::oracle::brute_covering_projections(ctx, a);
    const bool ok = fu == pu && fu == bu && fl == bl;
    if (format == "json") {
        json j{{"schema_version", 1},
               {"n", n},
               {"a", a},
               {"upper_formula", fu},
               {"upper_power", pu},
               {"lower_formula", fl},
               {"oracle", {{"lower", bl}, {"upper", bu}}},
               {"agree", ok}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "a = " << a << " in Z_" << n << "\n";
        std::cout << "a_u (formula) = " << fu << "\n";
        std::cout << "a_u (power)   = " << pu << "\n";
        std::cout << "a_l (formula) = " << fl << "\n";
        std::cout << "oracle: a_l = " << bl << ", a_u = " << bu << "\n";
    }
    if (!ok) {
        std::cerr << "projections: computation paths disagree\n";
        return kExitInternal;
    }
    return 0;
}

json report_to_json(const zn::verify::VerifyReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.per_n) {
        json row{{"n", r.n},
                 {"is_lattice_theorem", r.is_lattice_theorem},
                 {"is_lattice_oracle", r.is_lattice_oracle},
                 {"agree", r.agree},
                 {"witness", nullptr},
                 {"gp_count", r.gp_count},
                 {"p_count", r.p_count},
                 {"n_count", r.n_count},
                 {"u_count", r.u_count}};
        if (r.has_witness) row["witness"] = {r.witness_a, r.witness_b};
        rows.push_back(std::move(row));
    }
    return json{{"schema_version", 1},
                {"range", {{"lo", rep.lo}, {"hi", rep.hi}}},
                {"per_n", rows},
                {"summary",
                 {{"lattices", rep.lattices},
                  {"non_lattices", rep.non_lattices},
                  {"disagreements", rep.disagreements}}}};
}

int cmd_verify(const zn::verify::VerifyOptions& opt, const std::string& out,
               const std::string& format, bool quiet) {
    if (opt.hi > opt.oracle_cap) {
        std::cerr << "verify: range end " << opt.hi << " exceeds oracle cap " << opt.oracle_cap
                  << " (raise with --oracle-cap)\n";
        return kExitCap;
    }
    const auto rep = zn::verify::run(opt);
    const json j = report_to_json(rep);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "verify: cannot write " << out << "\n";
            return kExitUsage;
        }
        f << j.dump(2) << "\n";
    }
    if (format == "json") {
        std::cout << j.dump() << "\n";
    } else {
        if (!quiet) {
            for (const auto& r : rep.per_n) {
                std::cout << "n=" << r.n << " "
                          << (r.is_lattice_theorem ? "lattice" : "not-lattice")
                          << (r.agree ? " agree" : " DISAGREE");
                if (r.has_witness)
                    std::cout << " witness=(" << r.witness_a << "," << r.witness_b << ")";
                std::cout << "\n";
            }
        }
        std::cout << "range " << rep.lo << ".." << rep.hi << ": " << rep.lattices
                  << " lattices, " << rep.non_lattices << " non-lattices, "
                  << rep.disagreements << " disagreements\n";
    }
    return rep.disagreements == 0 ? 0 : kExitNotFound;
}

int cmd_scan(u64 lo, u64 hi, const std::string& format) {
    if (lo < 1 || lo > hi) {
        std::cerr << "scan: bad range\n";
        return kExitUsage;
    }
    std::vector<u64> lattices;
    for (u64 n = lo; n <= hi; ++n) {
        const zn::ZnContext ctx(n);
        if (zn::structure::is_lattice(ctx).is_lattice) lattices.push_back(n);
    }
    if (format == "json") {
        json j{{"schema_version", 1}, {"lo", lo}, {"hi", hi}, {"lattices", lattices}};
        std::cout << j.dump() << "\n";
    } else {
        for (u64 n : lattices) std::cout << n << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order structure of Z_n under a <= b iff a = b or a*b = a (mod n)"};
    app.require_subcommand(1);

    std::string format = "table";
    bool quiet = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_flag("--quiet", quiet, "suppress per-item output");

    u64 n = 1, lo = 1, hi = 1, a = 0, b = 0;
    std::optional<u64> opt_a;

    auto* classify = app.add_subcommand("classify", "classify elements of Z_n");
    classify->add_option("n", n, "modulus")->required();
    classify->add_option("a", opt_a, "single residue (omit for the full table)");

    std::string hasse_format = "dot";
    u64 hasse_cap = zn::kHasseCap;
    auto* hasse = app.add_subcommand("hasse", "cover relation of Z_n");
    hasse->add_option("n", n, "modulus")->required();
    hasse->add_option("--format", hasse_format, "dot|ascii|json")
        ->check(CLI::IsMember({"dot", "ascii", "json"}));
    hasse->add_option("--cap", hasse_cap, "resource cap on n");

    bool check = false;
    u64 oracle_cap = zn::oracle::kOracleCap;
    auto* lattice = app.add_subcommand("lattice", "decide whether Z_n is a lattice");
    lattice->add_option("n", n, "modulus")->required();
    lattice->add_flag("--check", check, "cross-check against the brute-force oracle");
    lattice->add_option("--oracle-cap", oracle_cap, "cap for the brute-force check");

    auto* join = app.add_subcommand("join", "sup{a, b} in Z_n");
    join->add_option("n", n, "modulus")->required();
    join->add_option("a", a, "residue")->required();
    join->add_option("b", b, "residue")->required();

    auto* meet = app.add_subcommand("meet", "inf{a, b} in Z_n");
    meet->add_option("n", n, "modulus")->required();
    meet->add_option("a", a, "residue")->required();
    meet->add_option("b", b, "residue")->required();

    auto* projections = app.add_subcommand("projections", "covering projections a_u and a_l");
    projections->add_option("n", n, "modulus")->required();
    projections->add_option("a", a, "generalized projection")->required();

    zn::verify::VerifyOptions vopt;
    std::string out;
    auto* verify = app.add_subcommand("verify", "theorem paths vs brute-force oracle");
    verify->add_option("lo", vopt.lo, "range start")->required();
    verify->add_option("hi", vopt.hi, "range end")->required();
    verify->add_option("--jobs", vopt.jobs, "worker threads");
    verify->add_option("--out", out, "write the JSON report to this file");
    verify->add_option("--pair-cap", vopt.pair_cap, "all-pairs join/meet check up to this n");
    verify->add_option("--oracle-cap", vopt.oracle_cap, "brute-force lattice cap");

    auto* scan = app.add_subcommand("scan", "list n in a range whose poset is a lattice");
    scan->add_option("lo", lo, "range start")->required();
    scan->add_option("hi", hi, "range end")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(n, opt_a, format);
        if (hasse->parsed()) return cmd_hasse(n, hasse_format, hasse_cap);
        if (lattice->parsed()) return cmd_lattice(n, check, oracle_cap, format);
        if (join->parsed()) return cmd_joinmeet(true, n, a, b, format);
        if (meet->parsed()) return cmd_joinmeet(false, n, a, b, format);
        if (projections->parsed()) return cmd_projections(n, a, format);
        if (verify->parsed()) return cmd_verify(vopt, out, format, quiet);
        if (scan->parsed()) return cmd_scan(lo, hi, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
