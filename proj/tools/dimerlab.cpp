// Command-line front end: build, verify, sweep, gamma, flip-check.

#include "dimerlab/errors.hpp"
#include "dimerlab/pipeline.hpp"
#include "dimerlab/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace dimerlab;

namespace {

struct TriangulationArgs {
    int n = 0;
    int m = 2;
    std::string diagonals;
    bool fan = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "Polygon vertex count")->required();
        cmd->add_option("--m", m, "Subdivision order (GL_m)")->required();
        auto* d = cmd->add_option("--diagonals", diagonals, "Diagonals 'a-b,c-d' or 'fan[:apex]'");
        auto* f = cmd->add_flag("--fan", fan, "Fan triangulation at vertex 1");
        d->excludes(f);
    }

    Triangulation triangulation() const { return parse_triangulation(n, fan || diagonals.empty() ? "fan" : diagonals); }
};

struct BudgetArgs {
    std::size_t visited = SearchBudget{}.max_visited;
    std::size_t length = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-visited", visited, "Visited-path budget per equality query")
            ->envname("DIMERLAB_BUDGET_VISITED")
            ->capture_default_str();
        cmd->add_option("--budget-length", length, "Path length cap (0 = default rule)")->capture_default_str();
    }

    SearchBudget budget() const { return {length, visited}; }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_for(const Error& e) {
    return e.kind() == ErrorKind::InconclusivePresentation ? ExitCode::Inconclusive : ExitCode::InvalidInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary algebras of GL_m-dimer models on triangulated polygons"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    TriangulationArgs tri;
    BudgetArgs budget;
    std::string format = "json";
    std::string object = "quiver";
    bool unreduced = false;
    bool reflect = false;

    auto* build = app.add_subcommand("build", "Emit the dimer and/or its dual quiver");
    tri.attach(build);
    build->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
    build->add_option("--object", object, "quiver, dimer or both")
        ->check(CLI::IsMember({"quiver", "dimer", "both"}))
        ->capture_default_str();
    build->add_flag("--unreduced", unreduced, "Skip the reduction of degree-2 diagonal nodes");

    auto* verify = app.add_subcommand("verify", "Extract the boundary presentation and check it against Gamma(m,n)");
    TriangulationArgs vtri;
    vtri.attach(verify);
    budget.attach(verify);
    verify->add_option("--format", format)->check(CLI::IsMember({"json"}))->capture_default_str();
    verify->add_flag("--reflect", reflect, "Also allow a reflected boundary labelling");

    auto* sweep = app.add_subcommand("sweep", "Verify every triangulation in a grid");
    std::vector<int> sweep_m{2};
    int min_n = 3, max_n = 3, workers = 1;
    bool timings = false;
    sweep->add_option("--m", sweep_m, "Orders, comma separated")->delimiter(',')->capture_default_str();
    sweep->add_option("--max-n,--n", max_n, "Largest polygon")->required();
    sweep->add_option("--min-n", min_n, "Smallest polygon")->capture_default_str();
    sweep->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_flag("--timings", timings, "Include per-row runtimes (non-canonical output)");
    sweep->add_flag("--reflect", reflect, "Also allow a reflected boundary labelling");
    budget.attach(sweep);

    auto* gamma = app.add_subcommand("gamma", "Print the quiver Gamma(m,n)");
    int gm = 2, gn = 3;
    gamma->add_option("--m", gm)->required();
    gamma->add_option("--n", gn)->required();
    gamma->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

    auto* flipcheck = app.add_subcommand("flip-check", "Transport the presentation across one diagonal flip");
    TriangulationArgs ftri;
    ftri.attach(flipcheck);
    budget.attach(flipcheck);
    std::string flip_spec;
    flipcheck->add_option("--flip", flip_spec, "Diagonal to flip, 'a-b'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ExitCode::InvalidInput;
    }

    try {
        if (build->parsed()) {
            Triangulation t = tri.triangulation();
            GLmDimer d = build_dimer(t, tri.m);
            if (!unreduced) d = reduce_dimer(d);
            if (format == "dot") {
                if (object == "dimer")
                    std::cout << to_dot(d);
                else
                    std::cout << to_dot(dual_quiver(d));
                return ExitCode::Verified;
            }
            Json out = {{"triangulation", to_json(t)}};
            if (object != "quiver") out["dimer"] = to_json(d);
            if (object != "dimer") out["quiver"] = to_json(dual_quiver(d));
            emit(out);
            return ExitCode::Verified;
        }
        if (verify->parsed()) {
            VerifyResult r = verify_triangulation(vtri.triangulation(), vtri.m, {budget.budget(), reflect});
            emit(to_json(r));
            std::cerr << "verify n=" << vtri.n << " m=" << vtri.m << ": "
                      << (r.status == 0 ? "verified" : r.status == 2 ? "inconclusive" : "failed")
                      << (r.error.empty() ? "" : " (" + r.error + ")") << "\n";
            return r.status;
        }
        if (sweep->parsed()) {
            for (int m : sweep_m)
                if (m < 2) throw Error(ErrorKind::UnsupportedOrder, "m = " + std::to_string(m) + " < 2");
            SweepReport r = run_sweep(sweep_m, min_n, max_n, {budget.budget(), reflect}, workers);
            emit(to_json(r, timings));
            return r.status();
        }
        if (gamma->parsed()) {
            GammaQuiver g = build_gamma(gm, gn);
            if (format == "dot")
                std::cout << to_dot(g);
            else
                emit(to_json(g));
            return ExitCode::Verified;
        }
        if (flipcheck->parsed()) {
            Triangulation t = ftri.triangulation();
            Diagonal d = parse_diagonal(ftri.n, flip_spec);
            FlipTransportCertificate c = verify_flip_transport(t, d, ftri.m, budget.budget());
            emit(to_json(c));
            if (c.passed()) return ExitCode::Verified;
            return c.inconclusive() ? ExitCode::Inconclusive : ExitCode::Failed;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e);
    }
    return ExitCode::InvalidInput;
}
