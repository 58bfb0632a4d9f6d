// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status is nonzero if any criterion fails.

#include "oracles.hpp"

#include "monopath/digraph.hpp"
#include "monopath/game_adapters.hpp"
#include "monopath/geometry.hpp"
#include "monopath/path_finder.hpp"
#include "monopath/search.hpp"
#include "monopath/transitive.hpp"
#include "monopath/witness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace monopath;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Failure(what);
    }
}

template <class... Args>
std::string cat(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

// N_2(q, n) = (n-1)^q + 1
std::uint64_t n2(int q, int n) {
    return checked_pow(static_cast<std::uint64_t>(n - 1), static_cast<unsigned>(q)) + 1;
}

std::string exact_values() {
    const auto a = n_exact(2, 2, 3);
    const auto b = n_exact(2, 2, 4);
    const auto c = n_exact(3, 2, 4);
    require(a == 5, cat("N_2(2,3) = ", a));
    require(b == 10, cat("N_2(2,4) = ", b));
    require(c == 7, cat("N_3(2,4) = ", c));
    // cross-check the formula for three uniform graphs: C(2n-4, n-2) + 1
    require(c == binomial(4, 2) + 1, "N_3(2,4) differs from C(4,2) + 1");
    return cat("N_2(2,3)=", a, " N_2(2,4)=", b, " N_3(2,4)=", c);
}

std::string witness_validity() {
    std::size_t checked = 0;
    for (int q = 1; q <= 3; ++q) {
        for (int n = 2; n <= 5; ++n) {
            const auto c = grid_witness_k2(q, n);
            require(c.num_vertices() == n2(q, n) - 1, cat("grid size q=", q, " n=", n));
            require(longest_mono_path_length(c) < n, cat("grid q=", q, " n=", n, " has a path of ", n));
            ++checked;
        }
    }
    for (int q = 2; q <= 4; ++q) {
        for (int n = 1; n <= 5; ++n) {
            const auto w = longest_mono_walks(lowf_witness(q, n));
            for (int c = 1; c <= q; ++c) {
                const auto& len = w.per_color[static_cast<std::size_t>(c - 1)];
                const std::size_t bound = c < q ? static_cast<std::size_t>(n)
                                                : static_cast<std::size_t>(1 + (q - 1) * (n - 1));
                require(len && *len <= bound, cat("walk witness q=", q, " n=", n, " color ", c));
            }
            ++checked;
        }
    }

    // stepping up from three seeds, up to 2^12 vertices
    DigraphColoring two(2, 2);
    two.set(1, 2, 1);
    two.set(2, 1, 2);
    require(longest_mono_path_length(stepup3_witness(two, 2, 4)) < 4, "stepup3 from the 2-vertex seed");
    const auto fw = largest_walk_free(2, 4, 10);
    require(longest_mono_path_length(stepup3_witness(fw.witness, 2, 5)) < 5, "stepup3 from the f(2,4) witness");
    const auto big = stepup3_source(lowf_witness(2, 12), 2, 14);
    require(big.num_vertices() == 4096, "stepup3 size");
    const auto big_len = longest_mono_path_length(big);
    require(big_len < 14, cat("stepup3 on 4096 vertices has a path of ", big_len));
    const auto three = stepup3_source(lowf_witness(3, 3), 3, 7);
    require(three.num_vertices() == 512, "stepup3 q=3 size");
    require(longest_mono_path_length(three) < 7, "stepup3 q=3 has a path of 7");
    checked += 4;

    const auto seed = exists_witness(6, 3, 2, 4);
    require(seed.outcome == Outcome::Found, "no 6-vertex seed");
    const auto s4 = stepup_k_witness(*seed.witness, 4);
    require(s4.num_vertices() == 64 && s4.uniformity() == 4, "stepup_k shape");
    const auto s4_len = longest_mono_path_length(s4);
    require(s4_len < 7, cat("stepup_k has a path of ", s4_len));
    ++checked;
    return cat(checked, " witnesses checked; 4096-vertex longest path ", big_len, ", 64-vertex k=4 longest path ",
               s4_len);
}

std::string f_sandwich() {
    std::ostringstream out;
    auto check = [&](int q, int n) {
        const auto f = static_cast<double>(f_exact(q, n, 12));
        const double lo = std::pow(static_cast<double>(n) / q, q - 1);
        const auto hi = static_cast<double>(n2(q - 1, n));
        require(lo <= f && f <= hi, cat("f(", q, ",", n, ")=", f, " outside [", lo, ",", hi, "]"));
        out << "f(" << q << "," << n << ")=" << f << " ";
    };
    for (int n = 1; n <= 4; ++n) {
        check(2, n);
    }
    check(3, 3);
    return out.str();
}

std::string constructive_finders() {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto a = oracle::random_coloring(2, 2, 5, seed);
        const auto p = find_path_recursive(a, 3);
        require(p.length() == 3 && verify_path(a, p), cat("k=2 seed ", seed));
        const auto b = oracle::random_coloring(3, 2, 10, seed);
        const auto r = find_path_recursive(b, 4);
        require(r.length() == 4 && verify_path(b, r), cat("k=3 seed ", seed));
    }
    return "2000 random colorings, every returned path verified";
}

void audit_builder(const LatticeTranscript& t, int n, const std::string& who) {
    require(!t.validate(), who + ": transcript does not replay");
    require(t.won(), who + ": no winner");
    require(t.stages.size() == n2(2, n), cat(who, ": ", t.stages.size(), " stages at n=", n));
    require(static_cast<double>(t.max_stage_steps()) <= std::ceil(step_bound(2, n)),
            cat(who, ": ", t.max_stage_steps(), " steps in one stage at n=", n));
}

std::string game_bounds() {
    std::size_t games = 0;
    for (int n = 3; n <= 5; ++n) {
        auto b = builder_strategy(2, n);
        auto c = coordinator_strategy(2, n);
        audit_builder(play_lattice(*b, *c, 2, n), n, "level-filling coordinator");
        ++games;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            auto bb = builder_strategy(2, n);
            auto rc = extension_coordinator(2, n, seed);
            audit_builder(play_lattice(*bb, *rc, 2, n), n, cat("random coordinator ", seed));
            ++games;
        }
    }
    return cat(games, " transcripts audited");
}

std::string adapters() {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 3 + static_cast<int>(seed % 3);
        // lattice strategies played through the online game
        auto b = builder_strategy(2, n);
        auto c = random_coordinator(2, n, seed);
        const auto direct = play_lattice(*b, *c, 2, n);
        auto b2 = builder_strategy(2, n);
        auto c2 = random_coordinator(2, n, seed);
        auto ob = online_builder_from_lattice(*b2, 2, n);
        auto op = painter_from_coordinator(*c2, 2, n);
        const auto adapted = play_online_ramsey(*ob, *op, 2, 2, n);
        require(!adapted.validate(), cat("adapted online play ", seed, " does not replay"));
        require(adapted.total_edges() == direct.total_steps(),
                cat("seed ", seed, ": ", direct.total_steps(), " steps vs ", adapted.total_edges(), " edges"));

        // online strategies played through the lattice game
        auto rb = random_online_builder(seed);
        auto rp = random_painter(2, seed);
        const auto online = play_online_ramsey(*rb, *rp, 2, 2, n);
        auto rb2 = random_online_builder(seed);
        auto rp2 = random_painter(2, seed);
        auto lb = lattice_builder_from_online(*rb2, 2, n);
        auto lc = coordinator_from_painter(*rp2, 2, n);
        const auto lattice = play_lattice(*lb, *lc, 2, n);
        require(!lattice.validate(), cat("adapted lattice play ", seed, " does not replay"));
        require(lattice.total_steps() == online.total_edges(),
                cat("seed ", seed, ": ", online.total_edges(), " edges vs ", lattice.total_steps(), " steps"));
    }
    return "100 seeded pairs in each direction, counts identical";
}

std::string growth_and_sizes() {
    std::ostringstream out;
    for (int n = 3; n <= 8; ++n) {
        auto b = builder_strategy(2, n);
        auto c = coordinator_strategy(2, n);
        const auto steps = static_cast<double>(play_lattice(*b, *c, 2, n).total_steps());
        const double ratio = steps / (n * n * std::log2(static_cast<double>(n)));
        require(ratio >= 0.1 && ratio <= 10, cat("n=", n, " ratio ", ratio));
        out << "n=" << n << ":" << std::fixed << std::setprecision(2) << ratio << " ";
    }
    for (Vertex m = 1; m <= 9; ++m) {
        DigraphColoring phi(2, m);
        require(StepUp3Coloring(phi).num_vertices() == (Vertex{1} << m), cat("stepup3 size from ", m));
    }
    require(StepUp3Coloring(lowf_witness(2, 12)).num_vertices() == 4096, "stepup3 size from 12");
    for (Vertex m = 3; m <= 8; ++m) {
        const auto psi = OrderedColoring::uniform(3, 2, m);
        require(StepUpKColoring(psi).num_vertices() == (Vertex{1} << m), cat("stepup_k size from ", m));
    }
    return out.str() + "; stepping-up sizes are 2^(seed size)";
}

std::string transitivity() {
    for (int k = 2; k <= 4; ++k) {
        for (Vertex n = static_cast<Vertex>(k); n <= 8; ++n) {
            std::vector<std::vector<Vertex>> path;
            for (Vertex s = 1; s + static_cast<Vertex>(k) - 1 <= n; ++s) {
                std::vector<Vertex> e;
                for (int i = 0; i < k; ++i) {
                    e.push_back(s + static_cast<Vertex>(i));
                }
                path.push_back(e);
            }
            require(transitive_closure(k, n, path).size() == binomial(n, static_cast<std::uint64_t>(k)),
                    cat("closure of the path is not complete at k=", k, " n=", n));
        }
    }
    std::size_t fixtures = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        // pairs colored by whether a random permutation keeps their order
        std::vector<Vertex> perm(12);
        for (Vertex i = 0; i < 12; ++i) {
            perm[i] = i;
        }
        Rng rng = make_rng(seed, 4);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto c = OrderedColoring::from_function(2, 2, 12, [&](std::span<const Vertex> e) {
            return perm[e[0] - 1] < perm[e[1] - 1] ? Color{1} : Color{2};
        });
        const int n = longest_mono_path_length(c);
        const auto cl = extract_clique(c, n);
        require(oracle::all_subsets_one_color(c, cl.vertices, cl.color), cat("permutation fixture ", seed));
        ++fixtures;
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto c = color_triples(random_family(6 + static_cast<int>(seed % 7), 1000 + seed));
        const int n = longest_mono_path_length(c);
        const auto cl = extract_clique(c, n);
        require(oracle::all_subsets_one_color(c, cl.vertices, cl.color), cat("geometry fixture ", seed));
        ++fixtures;
    }
    return cat("closures complete for k<=4, n<=8; ", fixtures, " cliques verified");
}

std::string geometry(const std::string& data_dir) {
    std::size_t triples = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int size = 6 + static_cast<int>(seed % 7);
        const auto f = random_family(size, seed);
        const auto c = color_triples(f);
        require(!is_transitive(c), cat("family ", seed, " coloring is not transitive"));
        for (int i = 1; i <= size; ++i) {
            for (int j = i + 1; j <= size; ++j) {
                for (int k = j + 1; k <= size; ++k) {
                    const auto labels = hull_label_sequence(f, i, j, k);
                    require(label_runs(labels, k) <= 1, cat("family ", seed, ": last body separates"));
                    ++triples;
                }
            }
        }
        const int n = longest_mono_path_length(c);
        const auto ids = find_convex_position(f, n);
        std::vector<ConvexBody> chosen;
        for (int id : ids) {
            chosen.push_back(f.body(id));
        }
        require(static_cast<int>(ids.size()) == n && is_convex_position(chosen),
                cat("family ", seed, ": extracted bodies not in convex position"));
    }
    std::ifstream in(data_dir + "/four_bodies_nontransitive_cw.txt");
    require(static_cast<bool>(in), "four-body fixture missing");
    const auto f = make_family(read_bodies(in));
    const auto o123 = strong_orientation(f, 1, 2, 3);
    const auto o234 = strong_orientation(f, 2, 3, 4);
    const auto o134 = strong_orientation(f, 1, 3, 4);
    require(o123 != TripleOrientation::CcwOnly && o234 != TripleOrientation::CcwOnly,
            "fixture: (1,2,3) or (2,3,4) lacks a clockwise orientation");
    require(o134 == TripleOrientation::CcwOnly, "fixture: (1,3,4) has a clockwise orientation");
    return cat("100 families, ", triples, " triples; fixture (1,2,3) ", to_string(o123), ", (2,3,4) ",
               to_string(o234), ", (1,3,4) ", to_string(o134));
}

std::string online_reduction() {
    const auto start = std::chrono::steady_clock::now();
    auto lattice = builder_strategy(2, 5);
    auto builder = online_builder_from_lattice(*lattice, 2, 5);
    const auto chi = random_oracle(2, 1);
    const Vertex N = (Vertex{1} << 15) + 1;
    const auto r = find_path_online_reduction(chi, 3, 2, 4, N, *builder);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    require(r.path.length() == 4 && strictly_increasing(r.path.vertices) && r.path.vertices.back() <= N,
            "path shape");
    for (std::size_t i = 0; i + 3 <= r.path.length(); ++i) {
        const std::vector<Vertex> e(r.path.vertices.begin() + static_cast<std::ptrdiff_t>(i),
                                    r.path.vertices.begin() + static_cast<std::ptrdiff_t>(i + 3));
        require(chi(e) == r.path.color, "path is not monochromatic under the oracle");
    }
    for (const auto& st : r.stages) {
        // |S_t| * q^m_t >= |S_{t-1}| - 1, in integers
        std::uint64_t lhs = st.after;
        for (std::size_t i = 0; i < st.edges; ++i) {
            lhs *= 2;
        }
        require(lhs + 1 >= st.before, cat("stage ", st.stage, ": ", st.before, " -> ", st.after, " with ",
                                          st.edges, " edges"));
        require(st.after <= st.before, cat("stage ", st.stage, ": survivors grew"));
    }
    require(secs <= 300, cat("took ", secs, " s"));
    return cat("path ", format_path(r.path), " after ", r.records.size(), " auxiliary edges, ", r.stages.size(),
               " stages, ", std::fixed, std::setprecision(2), secs, " s");
}

} // namespace

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : MONOPATH_TEST_DATA;
    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria{
        {"exact values", exact_values},
        {"witness validity", witness_validity},
        {"walk function sandwich", f_sandwich},
        {"constructive finders", constructive_finders},
        {"game bounds", game_bounds},
        {"equivalence adapters", adapters},
        {"growth band and stepping-up sizes", growth_and_sizes},
        {"transitivity suite", transitivity},
        {"geometry", [&] { return geometry(data_dir); }},
        {"online reduction", online_reduction},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string status = "PASS";
        std::string detail;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = e.what();
            ++failed;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << i + 1 << " (" << criteria[i].name << "): " << status << " [" << std::fixed
                  << std::setprecision(1) << secs << " s] " << detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
