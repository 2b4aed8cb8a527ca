#include "twinfoam/runner.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "twinfoam/cube.hpp"
#include "twinfoam/diagram.hpp"
#include "twinfoam/homology.hpp"
#include "twinfoam/skein.hpp"
#include "twinfoam/twinfrob.hpp"
#include "twinfoam/webs.hpp"

namespace twinfoam {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LinkDiagram load_diagram(const RunConfig& cfg, const std::string& path) {
    LinkDiagram d = LinkDiagram::parse(read_file(path));
    if (cfg.outer_face) d.set_outer_face(*cfg.outer_face);
    return d;
}

HomologyOptions homology_options(const RunConfig& cfg) {
    HomologyOptions opts;
    opts.resolve.force_neg_circles = cfg.force_neg_circles;
    opts.threads = cfg.threads;
    return opts;
}

json params_json(const RunConfig& cfg) {
    return json{{"a", cfg.a.to_string()}, {"h", cfg.h.to_string()}};
}

json dims_json(const BigradedDims& dims) {
    json arr = json::array();
    if (dims.graded) {
        for (const auto& [ij, d] : dims.by_ij) arr.push_back({ij.first, ij.second, d});
    } else {
        for (const auto& [i, d] : dims.by_i) arr.push_back({i, d});
    }
    return arr;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
    for (const std::string& path : cfg.inputs) {
        LinkDiagram d = load_diagram(cfg, path);
        if (cfg.dump_cube) out << dump_cube(d, Params{cfg.a, cfg.h}, homology_options(cfg).resolve);
        CochainComplex cx = build_complex(d, Params{cfg.a, cfg.h}, homology_options(cfg));
        BigradedDims dims = homology_dims(cx, cfg.threads);
        LaurentPolynomial euler = euler_characteristic(cx);
        if (cfg.format == RunConfig::Format::Json) {
            json doc{{"diagram", path},
                     {"params", params_json(cfg)},
                     {"graded", dims.graded},
                     {"dims", dims_json(dims)},
                     {"poincare", poincare_string(dims)},
                     {"euler", euler.to_string()},
                     {"total", dims.total}};
            out << doc.dump() << '\n';
        } else {
            out << path << " (a=" << cfg.a.to_string() << ", h=" << cfg.h.to_string() << ")\n"
                << dims.to_string() << "poincare: " << poincare_string(dims) << '\n'
                << "euler:    " << euler.to_string() << '\n';
        }
    }
    return 0;
}

int cmd_skein(const RunConfig& cfg, std::ostream& out) {
    for (const std::string& path : cfg.inputs) {
        LinkDiagram d = load_diagram(cfg, path);
        LaurentPolynomial p2 = p2_state_sum(d);
        if (cfg.format == RunConfig::Format::Json) {
            json doc{{"diagram", path}, {"p2", p2.to_string()}};
            out << doc.dump() << '\n';
        } else {
            out << path << ": " << p2.to_string() << '\n';
        }
    }
    return 0;
}

int cmd_euler_check(const RunConfig& cfg, std::ostream& out) {
    bool all_ok = true;
    for (const std::string& path : cfg.inputs) {
        LinkDiagram d = load_diagram(cfg, path);
        CochainComplex cx = build_complex(d, Params{cfg.a, cfg.h}, homology_options(cfg));
        LaurentPolynomial lhs = euler_characteristic(cx);
        LaurentPolynomial rhs = p2_state_sum(d);
        bool ok = lhs == rhs;
        all_ok = all_ok && ok;
        if (cfg.format == RunConfig::Format::Json) {
            json doc{{"diagram", path},
                     {"euler", lhs.to_string()},
                     {"p2", rhs.to_string()},
                     {"match", ok}};
            out << doc.dump() << '\n';
        } else {
            out << path << "\n  euler: " << lhs.to_string() << "\n  skein: " << rhs.to_string()
                << "\n  " << (ok ? "PASS" : "FAIL") << '\n';
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_invariance(const RunConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() != 2)
        throw InputError("invariance expects exactly two diagram files");
    BigradedDims dims[2];
    for (int s = 0; s < 2; ++s) {
        LinkDiagram d = load_diagram(cfg, cfg.inputs[s]);
        CochainComplex cx = build_complex(d, Params{cfg.a, cfg.h}, homology_options(cfg));
        dims[s] = homology_dims(cx, cfg.threads);
    }
    bool ok = dims[0] == dims[1];
    if (cfg.format == RunConfig::Format::Json) {
        json doc{{"first", cfg.inputs[0]},
                 {"second", cfg.inputs[1]},
                 {"dims_first", dims_json(dims[0])},
                 {"dims_second", dims_json(dims[1])},
                 {"match", ok}};
        out << doc.dump() << '\n';
    } else {
        out << cfg.inputs[0] << ":\n"
            << dims[0].to_string() << cfg.inputs[1] << ":\n"
            << dims[1].to_string() << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_check_axioms(const RunConfig& cfg, std::ostream& out) {
    Params p{cfg.a, cfg.h};
    CheckReport axioms = check_axioms(p);
    CheckReport local = check_local_relations(p);
    bool ok = axioms.all_passed() && local.all_passed();
    if (cfg.format == RunConfig::Format::Json) {
        json doc{{"params", params_json(cfg)}, {"ok", ok}};
        json rows = json::array();
        for (const auto* rep : {&axioms, &local})
            for (const auto& [name, passed] : rep->results) rows.push_back({name, passed});
        doc["identities"] = rows;
        out << doc.dump() << '\n';
    } else {
        out << "identities at a=" << cfg.a.to_string() << ", h=" << cfg.h.to_string() << "\n";
        for (const auto* rep : {&axioms, &local})
            for (const auto& [name, passed] : rep->results)
                out << (passed ? "  ok    " : "  FAIL  ") << name << '\n';
        out << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_dump_cube(const RunConfig& cfg, std::ostream& out) {
    for (const std::string& path : cfg.inputs) {
        LinkDiagram d = load_diagram(cfg, path);
        out << dump_cube(d, Params{cfg.a, cfg.h}, homology_options(cfg).resolve);
    }
    return 0;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case RunConfig::Command::Compute: return cmd_compute(config, out);
            case RunConfig::Command::Skein: return cmd_skein(config, out);
            case RunConfig::Command::EulerCheck: return cmd_euler_check(config, out);
            case RunConfig::Command::Invariance: return cmd_invariance(config, out);
            case RunConfig::Command::CheckAxioms: return cmd_check_axioms(config, out);
            case RunConfig::Command::DumpCube: return cmd_dump_cube(config, out);
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace twinfoam
