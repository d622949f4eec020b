// a1kit: exact computational algebra over A(1).
//
// Subcommands:
//   verify-paper [--entry ID] [--json PATH]
//   show REF [--svg PATH]
//   ext REF --max-s N --max-t M [--svg PATH | --json PATH]
//   margolis REF
//   resolve REF --max-s N --max-t M
//
// REF is a builtin module name ("A1", "F2", "A1/(Sq1,Sq3)", optionally with
// an "S^n " suspension prefix) or the path of a .a1m module file.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "a1kit/invariants.hpp"
#include "a1kit/module_file.hpp"
#include "a1kit/registry.hpp"
#include "a1kit/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

/// Parses a builtin module name: optional "S^<n> " prefix, then "A1", "F2"
/// or "A1/(<relators>)" with comma-separated relators.
a1kit::A1Module parse_builtin(const std::string& ref) {
    a1kit::ModuleSpec spec;
    std::string rest = ref;
    while (!rest.empty() && rest.front() == ' ')
        rest.erase(rest.begin());
    if (rest.rfind("S^", 0) == 0) {
        std::size_t sp = rest.find(' ');
        if (sp == std::string::npos)
            throw std::invalid_argument("suspension prefix must be followed by a module name");
        spec.suspension = std::stoi(rest.substr(2, sp - 2));
        rest = rest.substr(sp + 1);
        while (!rest.empty() && rest.front() == ' ')
            rest.erase(rest.begin());
    }
    if (rest == "A1") {
        // free module on one generator
    } else if (rest == "F2") {
        spec.relators = {"Sq1", "Sq2"};
    } else if (rest.rfind("A1/(", 0) == 0 && rest.back() == ')') {
        std::string inner = rest.substr(4, rest.size() - 5);
        std::string current;
        for (char c : inner) {
            if (c == ',') {
                spec.relators.push_back(current);
                current.clear();
            } else if (c != ' ') {
                current += c;
            }
        }
        if (!current.empty())
            spec.relators.push_back(current);
        if (spec.relators.empty())
            throw std::invalid_argument("empty relator list");
    } else {
        throw std::invalid_argument("unknown builtin module \"" + rest + "\"");
    }
    return a1kit::build_module(spec);
}

/// Builtin name first; if that fails and the argument names a file, parse it
/// as a module file.
a1kit::A1Module resolve_ref(const std::string& ref) {
    try {
        return parse_builtin(ref);
    } catch (const std::exception& builtin_error) {
        if (std::filesystem::exists(ref))
            return a1kit::load_module_file(ref);
        throw std::invalid_argument("cannot resolve \"" + ref + "\": " + builtin_error.what() +
                                    ", and no such file exists");
    }
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write \"" << path << "\"\n";
        return false;
    }
    out << content;
    return true;
}

int cmd_verify_paper(const std::string& entry_id, const std::string& json_path) {
    a1kit::RegistryReport report;
    if (!entry_id.empty()) {
        const a1kit::RegistryEntry* entry = a1kit::find_entry(entry_id);
        if (!entry) {
            std::cerr << "error: unknown entry \"" << entry_id << "\"\n";
            return kExitUsage;
        }
        report.entries.push_back(a1kit::verify_entry(*entry));
        report.exact_count = report.entries.back().exact ? 1 : 0;
        report.all_exact = report.entries.back().exact;
    } else {
        report = a1kit::verify_all();
    }

    for (const a1kit::EntryReport& r : report.entries) {
        std::cout << r.id << "  " << r.sub_name << " -> " << r.mid_name << " -> " << r.quot_name
                  << "\n      induced by " << r.citation << "\n      "
                  << (r.exact ? "exact" : "NOT EXACT") << ", dims "
                  << (r.dims_additive ? "additive" : "NOT additive") << ", exact pairs: ";
        if (r.pair_count >= 0)
            std::cout << r.pair_count;
        else
            std::cout << "(search guarded)";
        std::cout << "\n";
        for (const std::string& f : r.failures)
            std::cout << "      failure: " << f << "\n";
        if (!r.notes.empty())
            std::cout << "      note: " << r.notes << "\n";
    }
    std::cout << report.exact_count << "/" << report.entries.size() << " exact\n";

    if (!json_path.empty()) {
        // The JSON export always covers the whole registry.
        a1kit::RegistryReport full = entry_id.empty() ? std::move(report) : a1kit::verify_all();
        if (!write_file(json_path, a1kit::registry_json(full)))
            return kExitUsage;
        return full.all_exact ? kExitOk : kExitVerificationFailure;
    }
    return report.all_exact ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational algebra over the subalgebra A(1) of the mod-2 Steenrod "
                 "algebra"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // verify-paper
    std::string entry_id, json_path;
    CLI::App* verify = app.add_subcommand(
        "verify-paper", "verify the registry of short exact sequences of A(1)-modules "
                        "underlying the ko/ku Postnikov towers");
    verify->add_option("--entry", entry_id, "verify a single entry (S1..S10)");
    verify->add_option("--json", json_path, "write the registry report as JSON");

    // show
    std::string show_ref, show_svg;
    CLI::App* show = app.add_subcommand("show", "print the cell diagram of a module");
    show->add_option("ref", show_ref, "builtin module name or .a1m file")->required();
    show->add_option("--svg", show_svg, "write an SVG diagram to this path");

    // ext
    std::string ext_ref, ext_svg, ext_json;
    int ext_max_s = 0, ext_max_t = 0;
    long ext_cap = 200000;
    CLI::App* ext = app.add_subcommand("ext", "Ext chart from a minimal free resolution");
    ext->add_option("ref", ext_ref, "builtin module name or .a1m file")->required();
    ext->add_option("--max-s", ext_max_s, "filtration bound")->required();
    ext->add_option("--max-t", ext_max_t, "internal degree bound")->required();
    ext->add_option("--svg", ext_svg, "write an SVG chart to this path");
    ext->add_option("--json", ext_json, "write the chart as JSON to this path");
    ext->add_option("--cap", ext_cap, "resource guard: refuse when max_s*max_t exceeds this");

    // margolis
    std::string margolis_ref;
    CLI::App* margolis = app.add_subcommand("margolis", "Margolis homology with respect to Q0 and Q1");
    margolis->add_option("ref", margolis_ref, "builtin module name or .a1m file")->required();

    // resolve
    std::string resolve_ref_arg;
    int res_max_s = 0, res_max_t = 0;
    CLI::App* resolve = app.add_subcommand("resolve", "minimal free resolution generator table");
    resolve->add_option("ref", resolve_ref_arg, "builtin module name or .a1m file")->required();
    resolve->add_option("--max-s", res_max_s, "filtration bound")->required();
    resolve->add_option("--max-t", res_max_t, "internal degree bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int cli_exit = app.exit(e);
        return cli_exit == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify_paper(entry_id, json_path);

        if (show->parsed()) {
            a1kit::A1Module m = resolve_ref(show_ref);
            std::cout << a1kit::render_module_ascii(m);
            if (!show_svg.empty() && !write_file(show_svg, a1kit::render_module_svg(m)))
                return kExitUsage;
            return kExitOk;
        }

        if (ext->parsed()) {
            if (ext_max_s < 0 || ext_max_t < 0) {
                std::cerr << "error: bounds must be nonnegative\n";
                return kExitUsage;
            }
            if (static_cast<long>(ext_max_s) * static_cast<long>(ext_max_t) > ext_cap) {
                std::cerr << "error: max_s*max_t exceeds the resource cap (" << ext_cap
                          << "); raise --cap to override\n";
                return kExitUsage;
            }
            a1kit::A1Module m = resolve_ref(ext_ref);
            a1kit::Resolution res = a1kit::minimal_resolution(m, ext_max_s, ext_max_t);
            a1kit::ExtChart chart = a1kit::ext_chart(res);
            std::cout << a1kit::render_chart_ascii(chart);
            if (!ext_svg.empty() && !write_file(ext_svg, a1kit::render_chart_svg(chart)))
                return kExitUsage;
            if (!ext_json.empty() && !write_file(ext_json, a1kit::chart_json(chart, m.name())))
                return kExitUsage;
            return kExitOk;
        }

        if (margolis->parsed()) {
            a1kit::A1Module m = resolve_ref(margolis_ref);
            std::cout << "Q0: "
                      << a1kit::graded_dims_str(
                             a1kit::margolis_homology(m, a1kit::MargolisOp::Q0))
                      << "\n";
            std::cout << "Q1: "
                      << a1kit::graded_dims_str(
                             a1kit::margolis_homology(m, a1kit::MargolisOp::Q1))
                      << "\n";
            return kExitOk;
        }

        if (resolve->parsed()) {
            if (res_max_s < 0 || res_max_t < 0) {
                std::cerr << "error: bounds must be nonnegative\n";
                return kExitUsage;
            }
            a1kit::A1Module m = resolve_ref(resolve_ref_arg);
            a1kit::Resolution res = a1kit::minimal_resolution(m, res_max_s, res_max_t);
            std::cout << a1kit::render_resolution(res);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
