#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sperner/errors.hpp"
#include "sperner/maps.hpp"
#include "sperner/parallel.hpp"
#include "sperner/serialize.hpp"
#include "sperner/subdivision.hpp"
#include "sperner/verification.hpp"

using namespace sperner;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3, kEvaluation = 4 };

struct MeshArgs {
    int dim = 2;
    std::string scheme = "barycentric";
    std::optional<int> depth;
    std::optional<std::int64_t> m;
};

void add_mesh_options(CLI::App* cmd, MeshArgs& a) {
    cmd->add_option("--dim", a.dim, "Simplex dimension n")->required()->check(CLI::Range(0, kMaxDim));
    cmd->add_option("--scheme", a.scheme, "barycentric or edgewise")
        ->check(CLI::IsMember({"barycentric", "edgewise"}));
    auto* depth = cmd->add_option("--depth", a.depth, "Refinement level k")->check(CLI::NonNegativeNumber);
    auto* m = cmd->add_option("--m", a.m, "Edgewise parameter (m^n top simplices)")->check(CLI::PositiveNumber);
    depth->excludes(m);
}

/// Resolves the flags to one explicit complex plus its description.
ComplexPtr build_mesh(const MeshArgs& a, Json& info) {
    const Scheme scheme = parse_scheme(a.scheme);
    info["dim"] = a.dim;
    info["scheme"] = std::string(scheme_name(scheme));
    if (a.m) {
        if (scheme != Scheme::Edgewise) throw InvalidInput("--m requires --scheme edgewise");
        const EdgewiseGrid grid(a.dim, *a.m);
        if (grid.top_count() > default_simplex_cap())
            throw ResourceCapExceeded(std::to_string(grid.top_count()) + " top simplices exceed the cap of " +
                                      std::to_string(default_simplex_cap()));
        info["m"] = *a.m;
        return edgewise_subdivide(a.dim, *a.m);
    }
    const int depth = a.depth.value_or(0);
    const SubdivisionLevel level = subdivision_sequence(scheme, a.dim, depth);
    info["depth"] = depth;
    if (scheme == Scheme::Edgewise) info["m"] = level.m;
    return level.complex;
}

/// Writes to the path, or to stdout when the path is empty.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InvalidInput("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_subdivide(const MeshArgs& a, const std::string& out) {
    Json info;
    const ComplexPtr K = build_mesh(a, info);
    info["top_simplices"] = K->top_simplices().size();
    info["vertices"] = K->vertex_count();
    info["max_diameter"] = K->max_diameter();
    if (!out.empty()) {
        Output o(out);
        o.stream() << to_json(*K).dump() << '\n';
        info["out"] = out;
    }
    std::cout << info.dump() << '\n';
    std::cerr << K->top_simplices().size() << " top simplices, max diameter " << K->max_diameter() << '\n';
    return kOk;
}

int run_verify(const MeshArgs& a, const CorpusOptions& opts, const std::string& out) {
    Json info;
    const ComplexPtr K = build_mesh(a, info);
    const CorpusSummary s = run_corpus(K, opts);
    Output o(out);
    for (const CorpusEntry& e : s.entries) o.stream() << dump_line(to_json(e)) << '\n';
    if (a.dim == 0) std::cerr << "n = 0: trivially true, the single vertex is fully labeled\n";
    std::cerr << s.runs << " labelings, " << s.disagreements << " disagreements\n";
    if (!s.ok()) {
        std::cerr << "first failing " << (opts.exhaustive ? "index" : "seed") << ": " << *s.first_failure << '\n';
        return kFailed;
    }
    return kOk;
}

int run_solve(const std::string& map_spec, int dim, const SolveOptions& opts) {
    const MapOnSimplex f = make_map(map_spec, dim);
    const ApproxFixedPoint p = solve(f, opts);
    std::cout << to_json(p).dump() << '\n';
    std::cerr << status_name(p.status) << ": residual " << p.residual << " at level " << p.level << '\n';
    return p.residual <= opts.tol ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sperner labelings, cochain checks and approximate Brouwer fixed points"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (default: available parallelism)")
        ->check(CLI::NonNegativeNumber);

    MeshArgs sub_args;
    std::string sub_out;
    auto* sub = app.add_subcommand("subdivide", "Build a subdivision and report its size and mesh");
    add_mesh_options(sub, sub_args);
    sub->add_option("--out", sub_out, "Write the complex as JSON");

    MeshArgs ver_args;
    CorpusOptions corpus;
    std::string ver_out;
    bool no_pathfollow = false;
    auto* ver = app.add_subcommand("verify", "Cross-check parity proofs over a corpus of labelings");
    add_mesh_options(ver, ver_args);
    ver->add_option("--labelings", corpus.labelings, "Number of random labelings");
    ver->add_option("--seed", corpus.seed, "Seed of the first labeling (labeling i uses seed + i)");
    ver->add_flag("--exhaustive", corpus.exhaustive, "Enumerate every valid labeling (at most 10^6)");
    ver->add_flag("--no-pathfollow", no_pathfollow, "Skip the path-following vs brute-force comparison");
    ver->add_option("--out", ver_out, "JSON-lines report path (default stdout)");

    SolveOptions solve_opts;
    int solve_dim = 2;
    std::string map_spec, solve_scheme = "edgewise", search = "path";
    auto* sol = app.add_subcommand("solve", "Approximate a fixed point of a registry map");
    sol->add_option("--dim", solve_dim, "Simplex dimension n")->required()->check(CLI::Range(0, kMaxDim));
    sol->add_option("--map", map_spec, "identity | constant:c1,... | rotate | quadratic:<seed>")->required();
    sol->add_option("--tol", solve_opts.tol, "Residual tolerance")->check(CLI::PositiveNumber);
    sol->add_option("--max-level", solve_opts.max_level, "Deepest refinement level")->check(CLI::NonNegativeNumber);
    sol->add_option("--m0", solve_opts.m0, "Edgewise parameter at level 0")->check(CLI::PositiveNumber);
    sol->add_option("--scheme", solve_scheme, "barycentric or edgewise")
        ->check(CLI::IsMember({"barycentric", "edgewise"}));
    sol->add_option("--search", search, "path or brute")->check(CLI::IsMember({"path", "brute"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        set_thread_count(threads);
        if (*sub) return run_subdivide(sub_args, sub_out);
        if (*ver) {
            corpus.check_pathfollow = !no_pathfollow;
            return run_verify(ver_args, corpus, ver_out);
        }
        solve_opts.scheme = parse_scheme(solve_scheme);
        solve_opts.search = parse_search(search);
        return run_solve(map_spec, solve_dim, solve_opts);
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kResource;
    } catch (const MapEvaluationError& e) {
        std::cerr << "map evaluation failed: " << e.what() << '\n';
        return kEvaluation;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
}
