#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twinfoam/runner.hpp"

namespace {

using twinfoam::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& a_str, std::string& h_str,
                bool with_params = true) {
    if (with_params) {
        cmd->add_option("--a", a_str, "parameter a, an exact Gaussian rational (e.g. 1, 1/2, 1+i)")
            ->capture_default_str();
        cmd->add_option("--h", h_str, "parameter h, an exact Gaussian rational")
            ->capture_default_str();
    }
    std::map<std::string, RunConfig::Format> formats{{"json", RunConfig::Format::Json},
                                                     {"text", RunConfig::Format::Text}};
    cmd->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--threads", cfg.threads, "worker thread budget")
        ->check(CLI::PositiveNumber);
}

void add_diagram_flags(CLI::App* cmd, RunConfig& cfg, int& outer_face) {
    cmd->add_option("--outer-face", outer_face,
                    "override the deterministic outer face choice (face id)");
    cmd->add_flag("--force-neg-circles", cfg.force_neg_circles,
                  "experiment: treat every resolved circle as negatively oriented");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sl(2) link cohomology via an identical twin TQFT"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string a_str = "0", h_str = "0";
    int outer_face = -1;

    auto* compute = app.add_subcommand("compute", "bigraded cohomology dimensions of diagrams");
    compute->add_option("inputs", cfg.inputs, "PD files")->required()->expected(-1);
    add_common(compute, cfg, a_str, h_str);
    add_diagram_flags(compute, cfg, outer_face);
    compute->add_flag("--dump-cube", cfg.dump_cube, "also emit the full cube of edge maps");

    auto* skein = app.add_subcommand("skein", "quantum sl(2) polynomial by the state sum");
    skein->add_option("inputs", cfg.inputs, "PD files")->required()->expected(-1);
    add_common(skein, cfg, a_str, h_str, false);

    auto* euler = app.add_subcommand("euler-check",
                                     "graded Euler characteristic against the skein oracle");
    euler->add_option("inputs", cfg.inputs, "PD files")->required()->expected(-1);
    add_common(euler, cfg, a_str, h_str);
    add_diagram_flags(euler, cfg, outer_face);

    auto* inv = app.add_subcommand("invariance", "compare cohomology of two diagrams");
    inv->add_option("inputs", cfg.inputs, "two PD files")->required()->expected(2);
    add_common(inv, cfg, a_str, h_str);
    add_diagram_flags(inv, cfg, outer_face);

    auto* axioms = app.add_subcommand("check-axioms",
                                      "verify the twin Frobenius identities and local relations");
    add_common(axioms, cfg, a_str, h_str);

    auto* dump = app.add_subcommand("dump-cube", "stable dump of every cube edge map");
    dump->add_option("inputs", cfg.inputs, "PD files")->required()->expected(-1);
    add_common(dump, cfg, a_str, h_str);
    add_diagram_flags(dump, cfg, outer_face);

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) cfg.command = RunConfig::Command::Compute;
    if (skein->parsed()) cfg.command = RunConfig::Command::Skein;
    if (euler->parsed()) cfg.command = RunConfig::Command::EulerCheck;
    if (inv->parsed()) cfg.command = RunConfig::Command::Invariance;
    if (axioms->parsed()) cfg.command = RunConfig::Command::CheckAxioms;
    if (dump->parsed()) cfg.command = RunConfig::Command::DumpCube;

    try {
        cfg.a = twinfoam::GaussianRational::parse(a_str);
        cfg.h = twinfoam::GaussianRational::parse(h_str);
    } catch (const std::exception& e) {
        std::cerr << "input error: bad --a/--h value: " << e.what() << '\n';
        return 2;
    }
    if (outer_face >= 0) cfg.outer_face = outer_face;

    return twinfoam::run(cfg, std::cout, std::cerr);
}
