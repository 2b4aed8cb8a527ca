#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twinfoam/exact.hpp"

namespace twinfoam {

struct RunConfig {
    enum class Command { Compute, Skein, EulerCheck, Invariance, CheckAxioms, DumpCube };
    enum class Format { Json, Text };

    Command command = Command::Compute;
    std::vector<std::string> inputs;
    GaussianRational a; // defaults (0,0): the Khovanov specialization
    GaussianRational h;
    std::optional<int> outer_face;
    bool force_neg_circles = false;
    Format format = Format::Json;
    int threads = 1;
    bool dump_cube = false;
};

// Executes one command. Exit status: 0 success/PASS, 1 FAIL, 2 input error,
// 3 internal invariant violation; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace twinfoam
