#include "monopath/digraph.hpp"
#include "monopath/game_adapters.hpp"
#include "monopath/geometry.hpp"
#include "monopath/longest_path.hpp"
#include "monopath/path_finder.hpp"
#include "monopath/search.hpp"
#include "monopath/transcript_io.hpp"
#include "monopath/transitive.hpp"
#include "monopath/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace monopath;

namespace {

// Exit codes: 0 claim verified, 1 claim refuted, 2 usage or budget error.
constexpr int kVerified = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::uint64_t seed = 1;
    int workers = 1;
    std::optional<std::uint64_t> node_cap;
    std::optional<std::uint64_t> time_cap_ms;

    SearchBudget budget() const {
        SearchBudget b;
        b.node_cap = node_cap;
        if (time_cap_ms) {
            b.time_cap = std::chrono::milliseconds(*time_cap_ms);
        }
        return b;
    }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--seed", c.seed, "Seed for every random choice")->capture_default_str();
    app->add_option("--workers", c.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--node-cap", c.node_cap, "Search node budget");
    app->add_option("--time-cap", c.time_cap_ms, "Search time budget in milliseconds");
}

// Plain "key: value" lines; written to stdout, or as '#' comments ahead of
// a file body.
class Report {
public:
    template <class T>
    Report& add(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        lines_.emplace_back(key, os.str());
        return *this;
    }
    void print(std::ostream& out, const char* prefix = "") const {
        for (const auto& [k, v] : lines_) {
            out << prefix << k << ": " << v << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) {
        s += (s.empty() ? "" : " ") + std::to_string(x);
    }
    return s;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return in;
}

// Writes body() to `path`, or to stdout when path is empty.
template <class F>
void emit(const std::string& path, F&& body) {
    if (path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write " + path);
    }
    body(out);
}

// ---------------------------------------------------------------- witness

struct WitnessArgs {
    std::string construction;
    int k = 3;
    int q = 2;
    int n = 3;
    int seed_size = 0;
    std::string graph = "path";
    int vertices = 0;
    int n1 = 2;
    int n2 = 2;
    std::string out;
};

int run_witness(const WitnessArgs& a, const Common&) {
    Report r;
    r.add("construction", a.construction).add("q", a.q).add("n", a.n);
    if (a.construction == "grid") {
        const OrderedColoring c = grid_witness_k2(a.q, a.n);
        r.add("vertices", c.num_vertices()).add("max_path", longest_mono_path_length(c));
        emit(a.out, [&](std::ostream& o) {
            r.print(o, "# ");
            write_coloring(c, o);
        });
    } else if (a.construction == "lowf") {
        const DigraphColoring d = lowf_witness(a.q, a.n);
        const WalkLengths w = longest_mono_walks(d);
        std::size_t longest = 0;
        for (const auto& l : w.per_color) {
            if (!l) {
                throw std::logic_error("lowf witness has a monochromatic cycle");
            }
            longest = std::max(longest, *l);
        }
        r.add("vertices", d.num_vertices()).add("max_walk", longest);
        emit(a.out, [&](std::ostream& o) {
            r.print(o, "# ");
            write_digraph(d, o);
        });
    } else if (a.construction == "stepup3") {
        if (a.n < 3 || a.q < 2) {
            throw UsageError("stepup3 needs n >= 3 and q >= 2");
        }
        // largest grid seed whose longest walk, 1 + (q-1)(m-1), stays below n - 1
        const DigraphColoring phi = lowf_witness(a.q, (a.n - 3) / (a.q - 1) + 1);
        r.add("seed_vertices", phi.num_vertices());
        if (phi.num_vertices() <= 9) {
            const OrderedColoring c = stepup3_witness(phi, a.q, a.n);
            r.add("vertices", c.num_vertices()).add("max_path", longest_mono_path_length(c));
            emit(a.out, [&](std::ostream& o) {
                r.print(o, "# ");
                write_coloring(c, o);
            });
        } else {
            // too large to write out; check the implicit coloring instead
            const StepUp3Coloring src = stepup3_source(phi, a.q, a.n);
            r.add("vertices", src.num_vertices()).add("max_path", longest_mono_path_length(src));
            r.add("written", "no (more than 512 vertices)");
            if (a.out.empty()) {
                r.print(std::cout);
            }
        }
    } else if (a.construction == "stepupk") {
        if (a.k < 4 || a.seed_size < 1) {
            throw UsageError("stepupk needs --k >= 4 and --seed-size");
        }
        const auto seed = exists_witness(static_cast<Vertex>(a.seed_size), a.k - 1, a.q, a.n);
        if (seed.outcome != Outcome::Found) {
            throw UsageError("no seed coloring on " + std::to_string(a.seed_size) + " vertices");
        }
        const OrderedColoring c = stepup_k_witness(*seed.witness, a.n);
        r.add("k", a.k).add("seed_vertices", a.seed_size);
        r.add("vertices", c.num_vertices()).add("max_path", longest_mono_path_length(c));
        emit(a.out, [&](std::ostream& o) {
            r.print(o, "# ");
            write_coloring(c, o);
        });
    } else if (a.construction == "sparse") {
        if (a.vertices < 1) {
            throw UsageError("sparse needs --vertices");
        }
        const auto v = static_cast<Vertex>(a.vertices);
        OrderedGraph g;
        if (a.graph == "path") {
            g = OrderedGraph::path(v);
        } else if (a.graph == "complete") {
            g = OrderedGraph::complete(v);
        } else {
            throw UsageError("unknown graph '" + a.graph + "'");
        }
        const SparseAdversary s = sparse_adversary_coloring(g, a.q, a.n1, a.n2);
        const GraphPaths paths = longest_mono_paths(s.coloring);
        r.add("graph", a.graph).add("vertices", v).add("edges", g.num_edges());
        r.add("n1", a.n1).add("n2", a.n2).add("t", s.t).add("core_size", s.v2.size());
        r.add("within_edge_budget", s.within_edge_budget ? "yes" : "no");
        r.add("max_path", paths.longest());
        emit(a.out, [&](std::ostream& o) {
            r.print(o, "# ");
            for (std::size_t e = 0; e < g.num_edges(); ++e) {
                o << "edge " << g.edges()[e].first << ' ' << g.edges()[e].second << " color "
                  << s.coloring.colors[e] << '\n';
            }
        });
    } else {
        throw UsageError("unknown construction '" + a.construction + "'");
    }
    if (!a.out.empty()) {
        r.print(std::cout);
    }
    return kVerified;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string file;
    int max_path = 0;
    bool walks = false;
};

int run_verify(const VerifyArgs& a) {
    std::ifstream in = open_in(a.file);
    Report r;
    if (a.walks) {
        const DigraphColoring d = read_digraph(in);
        const WalkLengths w = longest_mono_walks(d);
        r.add("vertices", d.num_vertices()).add("claim", "no monochromatic walk longer than " +
                                                             std::to_string(a.max_path));
        for (int c = 1; c <= d.num_colors(); ++c) {
            const auto& l = w.per_color[static_cast<std::size_t>(c - 1)];
            if (!l || *l > static_cast<std::size_t>(a.max_path)) {
                r.add("verdict", "refuted");
                r.add("refutation", "color " + std::to_string(c) + " walk of " +
                                        (l ? std::to_string(*l) : std::string("unbounded length")));
                r.print(std::cout);
                return kRefuted;
            }
        }
        r.add("verdict", "verified");
        r.print(std::cout);
        return kVerified;
    }
    const OrderedColoring c = read_coloring(in);
    const MonoPaths paths = longest_mono_paths(c);
    r.add("k", c.uniformity()).add("q", c.num_colors()).add("vertices", c.num_vertices());
    r.add("claim", "no monochromatic monotone path longer than " + std::to_string(a.max_path));
    r.add("longest", paths.longest());
    if (paths.longest() > a.max_path) {
        MonotonePath p = paths.best(paths.longest_color()).witness;
        p.vertices.erase(p.vertices.begin(),
                         p.vertices.end() - static_cast<std::ptrdiff_t>(a.max_path + 1));
        if (!verify_path(c, p)) {
            throw std::logic_error("refutation path failed its own check");
        }
        r.add("verdict", "refuted").add("refutation", format_path(p));
        r.print(std::cout);
        return kRefuted;
    }
    r.add("verdict", "verified");
    r.print(std::cout);
    return kVerified;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    int k = 2;
    int q = 2;
    int n = 3;
    std::optional<std::uint32_t> N;
    bool walks = false;
    std::uint32_t cap = 64;
    std::string out;
};

int run_search(const SearchArgs& a, const Common& common) {
    if (a.walks) {
        std::cout << f_exact(a.q, a.n, static_cast<Vertex>(a.cap), common.budget()) << '\n';
        return kVerified;
    }
    if (!a.N) {
        std::cout << n_exact(a.k, a.q, a.n, common.budget()) << '\n';
        return kVerified;
    }
    SearchStats stats;
    const auto res = exists_witness(static_cast<Vertex>(*a.N), a.k, a.q, a.n, common.budget(), &stats);
    if (res.outcome == Outcome::BudgetExhausted) {
        std::cerr << "budget exhausted after " << res.nodes << " nodes\n";
        return kUsage;
    }
    const bool found = res.outcome == Outcome::Found;
    std::cout << (found ? "found" : "none") << '\n';
    if (found && !a.out.empty()) {
        emit(a.out, [&](std::ostream& o) { write_coloring(*res.witness, o); });
    }
    return kVerified;
}

// ---------------------------------------------------------------- find-path

struct FindPathArgs {
    std::string file;
    int n = 3;
    std::string method = "recursive";
    bool override_threshold = false;
    int k = 3;
    int q = 2;
    std::uint32_t N = 0;
};

int run_find_path(const FindPathArgs& a, const Common& common) {
    Report r;
    if (a.method == "online") {
        if (a.N == 0) {
            throw UsageError("online reduction needs --N");
        }
        const ColorOracle chi = random_oracle(a.q, common.seed);
        const int target = a.n + a.k - 2;
        std::unique_ptr<LatticeBuilder> lattice;
        std::unique_ptr<OnlineBuilder> builder;
        if (a.k == 3) {
            lattice = builder_strategy(a.q, target);
            builder = online_builder_from_lattice(*lattice, a.q, target);
        } else {
            builder = complete_builder();
        }
        const ReductionResult res = find_path_online_reduction(chi, a.k, a.q, a.n, static_cast<Vertex>(a.N), *builder);
        FunctionColoring oracle(a.k, a.q, static_cast<Vertex>(a.N), chi);
        r.add("method", "online").add("k", a.k).add("q", a.q).add("n", a.n).add("N", a.N);
        r.add("auxiliary_edges", res.records.size());
        for (const auto& s : res.stages) {
            r.add("stage " + std::to_string(s.stage),
                  "vertex " + std::to_string(s.vertex) + " edges " + std::to_string(s.edges) + " survivors " +
                      std::to_string(s.before) + " -> " + std::to_string(s.after));
        }
        r.add("survivor_bound", res.survivor_bound_holds() ? "holds" : "violated");
        r.add("path", format_path(res.path));
        const bool ok = verify_path(oracle, res.path) && res.survivor_bound_holds();
        r.add("verdict", ok ? "verified" : "refuted");
        r.print(std::cout);
        return ok ? kVerified : kRefuted;
    }
    std::ifstream in = open_in(a.file);
    const OrderedColoring c = read_coloring(in);
    r.add("method", a.method).add("n", a.n);
    std::optional<MonotonePath> p;
    if (a.method == "recursive") {
        try {
            p = find_path_recursive(c, a.n, a.override_threshold ? ThresholdPolicy::Override
                                                                 : ThresholdPolicy::Enforce);
        } catch (const NotFound&) {
        }
    } else if (a.method == "dp") {
        p = find_mono_path(c, static_cast<std::size_t>(a.n));
    } else {
        throw UsageError("unknown method '" + a.method + "'");
    }
    if (!p) {
        r.add("verdict", "not found");
        r.print(std::cout);
        return kRefuted;
    }
    if (!verify_path(c, *p)) {
        throw std::logic_error("finder returned an invalid path");
    }
    r.add("path", format_path(*p)).add("verdict", "verified");
    r.print(std::cout);
    return kVerified;
}

// ---------------------------------------------------------------- game

struct GameArgs {
    std::string mode;
    int q = 2;
    int n = 3;
    int k = 2;
    std::string coordinator = "level";
    std::string builder = "strategy";
    std::string painter = "random";
    std::string file;
    std::string out;
};

int run_game(const GameArgs& a, const Common& common) {
    Report r;
    if (a.mode == "replay") {
        std::ifstream in = open_in(a.file);
        const std::string kind = transcript_kind(in);
        std::optional<std::string> problem;
        if (kind == "lattice") {
            const LatticeTranscript t = read_lattice_transcript(in);
            problem = t.validate();
            r.add("kind", kind).add("stages", t.stages.size()).add("total_steps", t.total_steps());
            r.add("max_stage_steps", t.max_stage_steps());
        } else {
            const GameTranscript t = read_game_transcript(in);
            problem = t.validate();
            r.add("kind", kind).add("stages", t.stages.size()).add("total_edges", t.total_edges());
            r.add("path", format_path(t.path));
        }
        r.add("verdict", problem ? "refuted" : "verified");
        if (problem) {
            r.add("problem", *problem);
        }
        r.print(std::cout);
        return problem ? kRefuted : kVerified;
    }
    if (a.mode == "lattice") {
        std::unique_ptr<LatticeBuilder> b;
        if (a.builder == "strategy") {
            b = builder_strategy(a.q, a.n);
        } else if (a.builder == "random") {
            b = random_lattice_builder(common.seed);
        } else {
            throw UsageError("unknown lattice builder '" + a.builder + "'");
        }
        std::unique_ptr<LatticeCoordinator> c;
        if (a.coordinator == "level") {
            c = coordinator_strategy(a.q, a.n);
        } else if (a.coordinator == "extension") {
            c = extension_coordinator(a.q, a.n, common.seed);
        } else if (a.coordinator == "random") {
            c = random_coordinator(a.q, a.n, common.seed);
        } else {
            throw UsageError("unknown coordinator '" + a.coordinator + "'");
        }
        const LatticeTranscript t = play_lattice(*b, *c, a.q, a.n);
        const auto problem = t.validate();
        r.add("game", "lattice").add("q", a.q).add("n", a.n).add("stages", t.stages.size());
        r.add("total_steps", t.total_steps()).add("max_stage_steps", t.max_stage_steps());
        r.add("step_bound", step_bound(a.q, a.n));
        r.add("verdict", problem ? "refuted" : "verified");
        if (!a.out.empty()) {
            emit(a.out, [&](std::ostream& o) { write_lattice_transcript(t, o); });
        }
        r.print(std::cout);
        return problem ? kRefuted : kVerified;
    }
    if (a.mode == "online") {
        std::unique_ptr<LatticeBuilder> lattice;
        std::unique_ptr<OnlineBuilder> b;
        if (a.builder == "strategy") {
            if (a.k != 2) {
                throw UsageError("the lattice strategy builder plays k = 2 only");
            }
            lattice = builder_strategy(a.q, a.n);
            b = online_builder_from_lattice(*lattice, a.q, a.n);
        } else if (a.builder == "complete") {
            b = complete_builder();
        } else if (a.builder == "random") {
            b = random_online_builder(common.seed);
        } else {
            throw UsageError("unknown online builder '" + a.builder + "'");
        }
        std::unique_ptr<OnlinePainter> p;
        if (a.painter == "random") {
            p = random_painter(a.q, common.seed);
        } else if (a.painter == "constant") {
            p = constant_painter(1);
        } else {
            throw UsageError("unknown painter '" + a.painter + "'");
        }
        const GameTranscript t = play_online_ramsey(*b, *p, a.k, a.q, a.n);
        const auto problem = t.validate();
        r.add("game", "online").add("k", a.k).add("q", a.q).add("n", a.n);
        r.add("stages", t.stages.size()).add("total_edges", t.total_edges());
        r.add("path", format_path(t.path));
        r.add("verdict", problem ? "refuted" : "verified");
        if (!a.out.empty()) {
            emit(a.out, [&](std::ostream& o) { write_game_transcript(t, o); });
        }
        r.print(std::cout);
        return problem ? kRefuted : kVerified;
    }
    throw UsageError("game mode must be lattice, online or replay");
}

// ---------------------------------------------------------------- geom

struct GeomArgs {
    std::string file;
    int random_size = 0;
    int n = 0;
    std::string family_out;
    std::string coloring_out;
};

int run_geom(const GeomArgs& a, const Common& common) {
    Report r;
    ConvexFamily f;
    if (a.random_size > 0) {
        f = random_family(a.random_size, common.seed);
        r.add("source", "random").add("seed", common.seed);
    } else {
        if (a.file.empty()) {
            throw UsageError("geom needs a family file or --random");
        }
        std::ifstream in = open_in(a.file);
        const FamilyReport rep = validate_family(read_bodies(in));
        r.add("source", a.file);
        for (const auto& w : rep.warnings) {
            r.add("warning", w);
        }
        if (!rep.ok()) {
            for (const auto& v : rep.violations) {
                r.add("violation", v.kind + ": bodies " + join(v.bodies));
            }
            r.add("verdict", "invalid family");
            r.print(std::cout);
            return kRefuted;
        }
        f = *rep.family;
    }
    r.add("bodies", f.size());
    if (!a.family_out.empty()) {
        emit(a.family_out, [&](std::ostream& o) { write_bodies(f.bodies(), o); });
    }
    const OrderedColoring c = color_triples(f, common.workers);
    std::size_t counts[4] = {0, 0, 0, 0};
    for (Color x : c.colors()) {
        ++counts[x];
    }
    r.add("cw_only", counts[1]).add("ccw_only", counts[2]).add("both", counts[3]);
    r.add("transitive", "yes");
    if (!a.coloring_out.empty()) {
        emit(a.coloring_out, [&](std::ostream& o) { write_coloring(c, o); });
    }
    if (a.n > 0) {
        try {
            const auto ids = find_convex_position(f, a.n, common.workers);
            r.add("convex_position", join(ids)).add("verdict", "verified");
        } catch (const NoPathFound&) {
            r.add("convex_position", "none found").add("verdict", "not found");
            r.print(std::cout);
            return kRefuted;
        }
    }
    r.print(std::cout);
    return kVerified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monotone paths in ordered hypergraphs: witnesses, searches, games and geometry"};
    app.require_subcommand(1);
    Common common;

    WitnessArgs wa;
    auto* witness = app.add_subcommand("witness", "Build a path-free coloring and check it");
    witness->add_option("--construction", wa.construction, "grid, lowf, stepup3, stepupk or sparse")
        ->required()
        ->check(CLI::IsMember({"grid", "lowf", "stepup3", "stepupk", "sparse"}));
    witness->add_option("--k", wa.k, "Uniformity (stepupk)");
    witness->add_option("--q", wa.q, "Colors")->check(CLI::PositiveNumber);
    witness->add_option("--n", wa.n, "Forbidden path length");
    witness->add_option("--seed-size", wa.seed_size, "Vertices of the searched seed coloring (stepupk)");
    witness->add_option("--graph", wa.graph, "Host graph for sparse: path or complete");
    witness->add_option("--vertices", wa.vertices, "Host graph size for sparse");
    witness->add_option("--n1", wa.n1, "Walk level for the sparse construction");
    witness->add_option("--n2", wa.n2, "Grid level for the sparse construction");
    witness->add_option("-o,--out", wa.out, "Output file (default stdout)");
    add_common(witness, common);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check that a coloring has no long monochromatic path");
    verify->add_option("file", va.file, "Coloring file")->required();
    verify->add_option("--max-path", va.max_path, "Claimed longest path (vertices)")->required();
    verify->add_flag("--walks", va.walks, "The file is a digraph coloring; check walks instead");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Exact Ramsey values by exhaustive search");
    search->add_option("--k", sa.k, "Uniformity");
    search->add_option("--q", sa.q, "Colors");
    search->add_option("--n", sa.n, "Path length");
    search->add_option("--N", sa.N, "Only decide whether a path-free coloring of [N] exists");
    search->add_flag("--walks", sa.walks, "Compute the walk number f(q, n) instead");
    search->add_option("--cap", sa.cap, "Largest N tried for --walks")->capture_default_str();
    search->add_option("-o,--out", sa.out, "Write the witness found with --N");
    add_common(search, common);

    FindPathArgs fa;
    auto* find = app.add_subcommand("find-path", "Find a monochromatic monotone path");
    find->add_option("file", fa.file, "Coloring file (recursive, dp)");
    find->add_option("--n", fa.n, "Path length")->required();
    find->add_option("--method", fa.method, "recursive, dp or online")
        ->check(CLI::IsMember({"recursive", "dp", "online"}))
        ->capture_default_str();
    find->add_flag("--override-threshold", fa.override_threshold, "Run the recursive finder below its size bound");
    find->add_option("--k", fa.k, "Uniformity (online)");
    find->add_option("--q", fa.q, "Colors (online)");
    find->add_option("--N", fa.N, "Vertices of the random oracle (online)");
    add_common(find, common);

    GameArgs ga;
    auto* game = app.add_subcommand("game", "Play or replay the lattice or online Ramsey game");
    game->add_option("mode", ga.mode, "lattice, online or replay")
        ->required()
        ->check(CLI::IsMember({"lattice", "online", "replay"}));
    game->add_option("file", ga.file, "Transcript to replay");
    game->add_option("--q", ga.q, "Colors");
    game->add_option("--n", ga.n, "Path length");
    game->add_option("--k", ga.k, "Uniformity (online)");
    game->add_option("--coordinator", ga.coordinator, "level, extension or random")->capture_default_str();
    game->add_option("--builder", ga.builder, "strategy, random or complete")->capture_default_str();
    game->add_option("--painter", ga.painter, "random or constant")->capture_default_str();
    game->add_option("-o,--out", ga.out, "Write the transcript here");
    add_common(game, common);

    GeomArgs gea;
    auto* geom = app.add_subcommand("geom", "Validate a convex family, color its triples, find bodies in convex position");
    geom->add_option("file", gea.file, "Family file");
    geom->add_option("--random", gea.random_size, "Generate a random valid family of this size instead");
    geom->add_option("--n", gea.n, "Look for this many bodies in convex position");
    geom->add_option("--family-out", gea.family_out, "Write the (sorted) family");
    geom->add_option("--coloring-out", gea.coloring_out, "Write the triple coloring");
    add_common(geom, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*witness) {
            return run_witness(wa, common);
        }
        if (*verify) {
            return run_verify(va);
        }
        if (*search) {
            return run_search(sa, common);
        }
        if (*find) {
            return run_find_path(fa, common);
        }
        if (*game) {
            return run_game(ga, common);
        }
        if (*geom) {
            return run_geom(gea, common);
        }
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
