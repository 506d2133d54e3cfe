// Command-line front end.  Four subcommands: ci-invariant computes the total
// curvature integral over the circle bundle of a complete intersection,
// einstein-transform rewrites a curvature expression on the Einstein side,
// chern-expansion lists the graded parts of the top Chern form, and verify
// replays the library's identity suites on seeded random data.
//
// Exit codes: 0 success, 1 a verification identity failed, 2 usage error.
// All values print exactly (integers, fractions, symbolic pi); never decimals.

#include <CLI11.hpp>
#include <json.hpp>

#include <crinv/verify.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kParseGenerators = 16; // generous cap; degree checks come after

using ordered_json = nlohmann::ordered_json;
using namespace crinv;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string strip_quotes(std::string s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Expands `--config FILE` into the equivalent flags.  The file holds one
// `key = value` pair per line, keys mirroring the long flags; `#` starts a
// comment.  Flags given explicitly on the command line win over the file.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file: " + path);
    auto given = [&](const std::string& flag) {
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config file line is not key=value: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = strip_quotes(trim(line.substr(eq + 1)));
        if (key.empty()) throw UsageError("config file line has an empty key: " + line);
        std::string flag = "--" + key;
        if (!given(flag)) args.push_back(flag + "=" + value);
    }
    return args;
}

void emit(const ordered_json& doc, const std::string& output, const std::string& text) {
    if (output == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << text << "\n";
    for (const auto& w : doc["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
}

ordered_json base_doc(ordered_json config) {
    ordered_json doc;
    doc["config"] = std::move(config);
    doc["result"] = ordered_json::object();
    doc["warnings"] = ordered_json::array();
    doc["version"] = kVersion;
    return doc;
}

// Parses and enforces homogeneity of the given degree.
InvariantPoly<Rat> parse_homogeneous(const std::string& src, int n) {
    auto p = parse_phi(src, kParseGenerators);
    if (p.is_zero()) return p;
    std::set<int> weights;
    for (const auto& [e, c] : p.terms()) weights.insert(InvariantPoly<Rat>::weight(e));
    if (weights.size() > 1)
        throw UsageError("expression is not homogeneous, n = " + std::to_string(n));
    if (*weights.begin() != n)
        throw UsageError("degree " + std::to_string(*weights.begin()) +
                         " != n = " + std::to_string(n));
    return p;
}

int run_ci_invariant(int n, int r, const std::vector<int>& degrees, bool symbolic,
                     const std::string& phi, const std::string& output) {
    if (symbolic == !degrees.empty())
        throw UsageError("give exactly one of --degrees and --symbolic");
    CIData ci = symbolic ? CIData::symbolic(n, r) : CIData::numeric(n, r, degrees);
    auto p = parse_homogeneous(phi, n);
    PiValue v = total_Iprime(p, ci);

    ordered_json config;
    config["subcommand"] = "ci-invariant";
    config["n"] = n;
    config["r"] = r;
    if (symbolic)
        config["degrees"] = "symbolic";
    else
        config["degrees"] = degrees;
    config["phi"] = phi;
    config["output"] = output;

    ordered_json doc = base_doc(std::move(config));
    doc["result"]["value"] = v.str();
    for (const auto& w : validate_positivity(ci)) doc["warnings"].push_back(w);
    emit(doc, output, v.str());
    return 0;
}

int run_einstein_transform(const std::string& mode, int n, bool symbolic_n,
                           const std::string& phi, const std::string& output) {
    if (symbolic_n == (n > 0)) throw UsageError("give exactly one of --n and --symbolic-n");
    auto p = parse_phi(phi, kParseGenerators);
    EinsteinMode m = mode == "base" ? EinsteinMode::Base : EinsteinMode::Domain;
    std::string value = symbolic_n ? einstein_transform_symbolic(p, m).str()
                                   : einstein_transform(p, m, n).str();

    ordered_json config;
    config["subcommand"] = "einstein-transform";
    config["mode"] = mode;
    if (symbolic_n)
        config["n"] = "symbolic";
    else
        config["n"] = n;
    config["phi"] = phi;
    config["output"] = output;

    ordered_json doc = base_doc(std::move(config));
    doc["result"]["value"] = value;
    emit(doc, output, value);
    return 0;
}

int run_chern_expansion(int n, const std::string& output) {
    auto parts = chern_expansion(n);

    ordered_json config;
    config["subcommand"] = "chern-expansion";
    config["n"] = n;
    config["output"] = output;

    std::ostringstream text;
    ordered_json terms = ordered_json::array();
    for (std::size_t m = 0; m < parts.size(); ++m) {
        if (m) text << "; ";
        text << "Phi_" << m << " = " << parts[m].str();
        terms.push_back(parts[m].str());
    }

    ordered_json doc = base_doc(std::move(config));
    doc["result"]["terms"] = std::move(terms);
    doc["result"]["display"] = text.str();
    emit(doc, output, text.str());
    return 0;
}

int run_verify(const std::string& suite, int n, std::uint64_t seed, int trials,
               const std::string& output) {
    auto reports = verify_suites(suite, n, seed, trials);

    ordered_json config;
    config["subcommand"] = "verify";
    config["suite"] = suite;
    config["n"] = n;
    config["seed"] = seed;
    config["trials"] = trials;
    config["output"] = output;

    bool all_pass = true;
    std::ostringstream text;
    ordered_json suites = ordered_json::array();
    for (std::size_t si = 0; si < reports.size(); ++si) {
        const auto& rep = reports[si];
        all_pass = all_pass && rep.passed();
        if (si) text << "\n";
        text << "suite: " << rep.suite << " (n=" << rep.n << ", seed=" << rep.seed
             << ", trials=" << rep.trials << ")";
        ordered_json jrep;
        jrep["suite"] = rep.suite;
        jrep["n"] = rep.n;
        jrep["seed"] = rep.seed;
        jrep["trials"] = rep.trials;
        jrep["passed"] = rep.passed();
        ordered_json ids = ordered_json::array();
        for (const auto& id : rep.identities) {
            text << "\n  " << id.name << ": ";
            if (id.passed())
                text << "pass (" << id.checks << " checks)";
            else
                text << "FAIL (" << id.failures << " of " << id.checks
                     << " checks failed)\n    first counterexample: " << id.counterexample;
            ordered_json jid;
            jid["name"] = id.name;
            jid["checks"] = id.checks;
            jid["failures"] = id.failures;
            jid["status"] = id.passed() ? "pass" : "fail";
            if (!id.passed()) jid["counterexample"] = id.counterexample;
            ids.push_back(std::move(jid));
        }
        jrep["identities"] = std::move(ids);
        suites.push_back(std::move(jrep));
    }
    text << "\nresult: " << (all_pass ? "PASS" : "FAIL");

    ordered_json doc = base_doc(std::move(config));
    doc["result"]["suites"] = std::move(suites);
    doc["result"]["passed"] = all_pass;
    emit(doc, output, text.str());
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact curvature invariants of circle bundles over complete intersections"};
    app.require_subcommand(1);

    // ci-invariant
    int ci_n = 0, ci_r = 0;
    std::vector<int> ci_degrees;
    bool ci_symbolic = false;
    std::string ci_phi, ci_output = "text";
    auto* ci = app.add_subcommand("ci-invariant",
                                  "Total curvature integral over the circle bundle");
    ci->add_option("--n", ci_n, "complex dimension of the intersection")->required();
    ci->add_option("--r", ci_r, "codimension in projective space")->required();
    ci->add_option("--degrees", ci_degrees, "hypersurface degrees, comma separated")
        ->delimiter(',');
    ci->add_flag("--symbolic", ci_symbolic, "keep the degrees symbolic");
    ci->add_option("--phi", ci_phi, "curvature expression, e.g. c2 or 'c1*c1 - 2*c2'")
        ->required();
    ci->add_option("--output", ci_output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string ci_config;
    ci->add_option("--config", ci_config, "read options from a config file (keys mirror the flags)");

    // einstein-transform
    int et_n = 0;
    bool et_symbolic_n = false;
    std::string et_mode, et_phi, et_output = "text";
    auto* et = app.add_subcommand("einstein-transform",
                                  "Rewrite an expression on the Einstein side");
    et->add_option("--mode", et_mode, "domain or base")
        ->required()
        ->check(CLI::IsMember({"domain", "base"}));
    et->add_option("--n", et_n, "numeric dimension")->check(CLI::Range(1, 64));
    et->add_flag("--symbolic-n", et_symbolic_n, "keep the dimension symbolic");
    et->add_option("--phi", et_phi, "curvature expression")->required();
    et->add_option("--output", et_output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string et_config;
    et->add_option("--config", et_config, "read options from a config file (keys mirror the flags)");

    // chern-expansion
    int cx_n = 0;
    std::string cx_output = "text";
    auto* cx = app.add_subcommand("chern-expansion",
                                  "Graded parts of the expanded top Chern form");
    cx->add_option("--n", cx_n, "dimension, n >= 1")->required()->check(CLI::Range(1, 64));
    cx->add_option("--output", cx_output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string cx_config;
    cx->add_option("--config", cx_config, "read options from a config file (keys mirror the flags)");

    // verify
    int v_n = 3, v_trials = 100;
    std::uint64_t v_seed = 0;
    std::string v_suite, v_output = "text";
    auto* vf = app.add_subcommand("verify", "Replay the identity suites on seeded data");
    vf->add_option("--suite", v_suite, "lefschetz, tractor, ring, ci, or all")->required();
    vf->add_option("--n", v_n, "dimension (default 3)");
    vf->add_option("--seed", v_seed, "base seed (default 0)");
    vf->add_option("--trials", v_trials, "samples per identity (default 100)")
        ->check(CLI::Range(1, 1000000));
    vf->add_option("--output", v_output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string vf_config;
    vf->add_option("--config", vf_config, "read options from a config file (keys mirror the flags)");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        reversed.pop_back(); // program name
        app.parse(std::move(reversed));
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ci->parsed())
            return run_ci_invariant(ci_n, ci_r, ci_degrees, ci_symbolic, ci_phi, ci_output);
        if (et->parsed())
            return run_einstein_transform(et_mode, et_n, et_symbolic_n, et_phi, et_output);
        if (cx->parsed()) return run_chern_expansion(cx_n, cx_output);
        if (vf->parsed()) return run_verify(v_suite, v_n, v_seed, v_trials, v_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand given\n";
    return 2;
}
