#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jtlab/io.hpp"
#include "jtlab/spectral.hpp"
#include "jtlab/suites.hpp"

namespace {

jtlab::Descriptor make_descriptor(const std::string& family, int p, int q, int r) {
    if (family == "typeI") {
        if (p <= 0 || q <= 0) throw jtlab::BadInput("typeI requires --p and --q");
        return jtlab::Descriptor::type_i(p, q);
    }
    if (family == "polydisc") {
        if (r <= 0) throw jtlab::BadInput("polydisc requires --r");
        return jtlab::Descriptor::polydisc(r);
    }
    throw jtlab::BadInput("unknown family: " + family + " (expected typeI or polydisc)");
}

void print_summary(const jtlab::SuiteReport& rep) {
    std::printf("%s on %s: %zu checks, %s (%.1f ms)\n", rep.suite.c_str(),
                rep.desc.name().c_str(), rep.checks.size(),
                rep.all_pass ? "all pass" : "FAILURES", rep.wall_time_ms);
    for (const auto& c : rep.checks)
        std::printf("  [%s] %-30s max_residual %.3e  tol %.0e\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.max_residual, c.tolerance);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jtlab: verification suites for Jordan-triple symplectic geometry"};
    app.require_subcommand(1);

    std::string suite_name, family, what, input_path, out_path;
    int p = 0, q = 0, r = 0;
    jtlab::SuiteOptions opts;

    auto* verify = app.add_subcommand("verify", "run a verification suite over one family");
    verify->add_option("suite", suite_name, "suite name (see `jtlab suites`)")->required();
    verify->add_option("--family", family, "typeI or polydisc")->required();
    verify->add_option("--p", p, "matrix rows (typeI)");
    verify->add_option("--q", q, "matrix columns (typeI)");
    verify->add_option("--r", r, "components (polydisc)");
    verify->add_option("--samples", opts.samples, "random samples per check")
        ->capture_default_str();
    verify->add_option("--seed", opts.seed, "random seed")->capture_default_str();
    verify->add_option("--fd-step", opts.fd_step, "finite-difference step")
        ->capture_default_str();
    verify->add_option("--tol", opts.tol, "membership and pullback tolerance")
        ->capture_default_str();
    verify->add_option("--gap-tol", opts.gap_tol, "spectral gap tolerance (polar suite)")
        ->capture_default_str();
    verify->add_option("--out", out_path, "write the JSON report to this file");

    auto* show = app.add_subcommand("show", "print derived data for an element");
    show->add_option("what", what, "what to show: spectral")->required();
    show->add_option("--input", input_path, "element JSON file")->required();

    auto* list = app.add_subcommand("suites", "list the available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            for (const auto& s : jtlab::suite_list())
                std::printf("%-10s %s\n", s.name.c_str(), s.description.c_str());
            return 0;
        }
        if (show->parsed()) {
            if (what != "spectral") throw jtlab::BadInput("show: only 'spectral' is supported");
            const jtlab::Element z = jtlab::element_from_json(jtlab::load_json_file(input_path));
            const jtlab::SpectralDecomposition sd = jtlab::spectral_decompose(z);
            jtlab::Json out;
            out["rank"] = sd.s();
            out["lambdas"] = sd.lambdas;
            jtlab::Json tr = jtlab::Json::array();
            for (const auto& e : sd.tripotents) tr.push_back(jtlab::element_to_json(e));
            out["tripotents"] = std::move(tr);
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        bool known = false;
        for (const auto& s : jtlab::suite_list()) known = known || s.name == suite_name;
        if (!known) throw jtlab::BadInput("unknown suite: " + suite_name);
        const jtlab::Descriptor desc = make_descriptor(family, p, q, r);

        const jtlab::SuiteReport rep = jtlab::run_suite(suite_name, desc, opts);
        const jtlab::Json j = jtlab::report_to_json(rep);
        if (out_path.empty()) {
            std::cout << j.dump(2) << "\n";
        } else {
            jtlab::save_json_file(out_path, j);
            print_summary(rep);
        }
        return rep.all_pass ? 0 : 1;
    } catch (const jtlab::BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const jtlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
