// modlat: enumerate submodule lattices, build intersection graphs, compute
// exact invariants, and run the verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "modlat/harness.hpp"
#include "modlat/io.hpp"

namespace {

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    out << content;
    return 0;
}

int cmd_enumerate(const std::string& spec_file, bool full_listing) {
    const modlat::ModuleSpec spec = modlat::load_spec_file(spec_file);
    const modlat::SubmoduleLattice L = modlat::enumerate_submodules(spec);
    std::cout << "total: " << L.size() << "\n";
    std::cout << "strata: [";
    for (size_t i = 0; i < L.strata.size(); ++i)
        std::cout << (i ? ", " : "") << L.strata[i].size();
    std::cout << "]\n";
    if (full_listing) {
        for (size_t len = 0; len < L.strata.size(); ++len)
            for (size_t idx : L.strata[len])
                std::cout << "  length " << len << ": "
                          << modlat::submodule_label(spec, L.members[idx]) << "\n";
    }
    return 0;
}

int cmd_graph(const std::string& spec_file, const std::string& format, const std::string& out) {
    const modlat::ModuleSpec spec = modlat::load_spec_file(spec_file);
    const modlat::SubmoduleLattice L = modlat::enumerate_submodules(spec);
    const modlat::IntersectionGraph g = modlat::build_graph(L);
    if (format == "dot") return write_output(out, modlat::graph_to_dot(L, g));
    if (format == "json") return write_output(out, modlat::graph_to_json(L, g).dump(2) + "\n");
    std::cerr << "unsupported format: " << format << "\n";
    return 2;
}

int cmd_invariants(const std::string& spec_file, const std::string& out) {
    const modlat::ModuleSpec spec = modlat::load_spec_file(spec_file);
    const modlat::SubmoduleLattice L = modlat::enumerate_submodules(spec);
    const modlat::InvariantReport r = modlat::compute_invariants(L);
    return write_output(out, modlat::invariants_to_json(L, r).dump(2) + "\n");
}

int cmd_verify(const std::string& manifests, const std::string& suite,
               const std::vector<std::string>& only, unsigned jobs, const std::string& out) {
    const modlat::Scale scale = suite == "full" ? modlat::Scale::Full : modlat::Scale::Small;
    const modlat::Harness harness(manifests);
    modlat::SuiteReport report;
    report.scale = suite;
    if (only.empty()) {
        report = harness.run_all(scale, jobs);
    } else {
        const auto& known = modlat::Harness::check_ids();
        for (const std::string& id : only)
            if (std::find(known.begin(), known.end(), id) == known.end()) {
                std::cerr << "unknown check id: " << id << "\n";
                return 2;
            }
        for (const std::string& id : only) report.checks.push_back(harness.run_check(id, scale));
    }
    for (const auto& check : report.checks) {
        size_t passed = 0, skipped = 0;
        for (const auto& r : check.instances) {
            passed += r.status == "pass";
            skipped += r.status == "skipped";
        }
        std::printf("[%s] %-10s %zu/%zu instances%s\n", check.passed() ? "PASS" : "FAIL",
                    check.id.c_str(), passed, check.instances.size(),
                    skipped ? (" (" + std::to_string(skipped) + " skipped)").c_str() : "");
        for (const auto& r : check.instances)
            if (r.status == "fail")
                std::printf("       %s: %s\n", r.instance.c_str(), r.detail.c_str());
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return 2;
        }
        f << modlat::suite_to_json(report).dump(2) << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact submodule-lattice and intersection-graph toolkit"};
    app.require_subcommand(1);

    std::string spec_file, format = "dot", out, manifests = "manifests", suite = "small";
    std::vector<std::string> only;
    bool full_listing = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* enumerate = app.add_subcommand("enumerate", "print the submodule lattice summary");
    enumerate->add_option("spec", spec_file, "module spec file")->required();
    enumerate->add_flag("--full", full_listing, "list every submodule with its canonical label");

    auto* graph = app.add_subcommand("graph", "export the intersection graph");
    graph->add_option("spec", spec_file, "module spec file")->required();
    graph->add_option("--format", format, "dot or json");
    graph->add_option("-o,--output", out, "output file (default stdout)");

    auto* invariants = app.add_subcommand("invariants", "compute the full invariant report");
    invariants->add_option("spec", spec_file, "module spec file")->required();
    invariants->add_option("-o,--output", out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--suite", suite, "small or full")
        ->check(CLI::IsMember({"small", "full"}));
    verify->add_option("--only", only, "run only the named checks");
    verify->add_option("--manifests", manifests, "directory of instance spec files");
    verify->add_option("--jobs", jobs, "parallel checks");
    verify->add_option("-o,--output", out, "write the JSON suite report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(spec_file, full_listing);
        if (graph->parsed()) return cmd_graph(spec_file, format, out);
        if (invariants->parsed()) return cmd_invariants(spec_file, out);
        if (verify->parsed()) return cmd_verify(manifests, suite, only, jobs, out);
    } catch (const modlat::SpecParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const modlat::BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
