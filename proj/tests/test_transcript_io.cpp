#include "doctest.h"

#include "monopath/game_adapters.hpp"
#include "monopath/transcript_io.hpp"

#include <sstream>

using namespace monopath;

TEST_CASE("lattice transcripts round trip") {
    auto b = builder_strategy(2, 4);
    auto c = coordinator_strategy(2, 4);
    const auto t = play_lattice(*b, *c, 2, 4);
    std::stringstream ss;
    write_lattice_transcript(t, ss);
    CHECK(transcript_kind(ss) == "lattice");
    const auto back = read_lattice_transcript(ss);
    CHECK(back == t);
    CHECK_FALSE(back.validate());
}

TEST_CASE("online transcripts round trip") {
    for (int k = 2; k <= 3; ++k) {
        auto b = random_online_builder(4);
        auto p = random_painter(2, 4);
        OnlineOptions opt;
        opt.modified = k == 3;
        const auto t = play_online_ramsey(*b, *p, k, 2, 4, opt);
        std::stringstream ss;
        write_game_transcript(t, ss);
        CHECK(transcript_kind(ss) == "online");
        const auto back = read_game_transcript(ss);
        CHECK(back == t);
        CHECK_FALSE(back.validate());
    }
}

TEST_CASE("malformed transcripts") {
    auto lattice = [](const std::string& s) {
        std::istringstream in(s);
        return read_lattice_transcript(in);
    };
    auto online = [](const std::string& s) {
        std::istringstream in(s);
        return read_game_transcript(in);
    };
    CHECK_NOTHROW(lattice("# comment\nlattice q 2 n 2\nstage 1\npoint 1 1 new 1 pool 1\n"));
    CHECK_THROWS_AS(lattice("lattice q 2\n"), FormatError);
    CHECK_THROWS_WITH_AS(lattice("lattice q 2 n 2\nstage 2\n"), doctest::Contains("line 2"), FormatError);
    CHECK_THROWS_AS(lattice("lattice q 2 n 2\nstage 1\nstep pick 1 coord x\n"), FormatError);
    CHECK_THROWS_AS(lattice("lattice q 2 n 2\nstage 1\npoint 1 new 1\n"), FormatError);
    CHECK_THROWS_AS(lattice("lattice q 2 n 2\nstage 1\n"), FormatError);
    CHECK_THROWS_AS(lattice("lattice q 2 n 2\nbogus\n"), FormatError);

    CHECK_NOTHROW(online("online k 2 q 2 n 2 modified 0\nstage 1\nstage 2\nedge prefix 1 color 2\n"
                         "path color 2 vertices 1 2\n"));
    CHECK_THROWS_AS(online("online k 2 q 2 n 2 modified 0\nstage 1\nedge prefix 1 color 3\n"
                           "path color 1 vertices 1\n"),
                    FormatError);
    CHECK_THROWS_AS(online("online k 2 q 2 n 2 modified 0\nstage 1\n"), FormatError);
    CHECK_THROWS_AS(online("online k 2 q 2 n 2 modified 0\npath color 1 vertices 1\nstage 1\n"), FormatError);
    CHECK_THROWS_AS(online("online k 3 q 2 n 2 modified 0\nstage 1\nedge prefix 1 color 1\n"
                           "path color 1 vertices 1\n"),
                    FormatError);

    std::istringstream neither("coloring 2 2 3\n");
    CHECK_THROWS_AS(transcript_kind(neither), FormatError);
}

TEST_CASE("replays catch tampered moves") {
    auto b = random_online_builder(9);
    auto p = random_painter(2, 9);
    auto t = play_online_ramsey(*b, *p, 2, 2, 4);
    REQUIRE_FALSE(t.validate());
    auto wrong_color = t;
    wrong_color.path.color = wrong_color.path.color == 1 ? 2 : 1;
    CHECK(wrong_color.validate());
    auto extra = t;
    extra.stages.emplace_back();
    CHECK(extra.validate());
}
