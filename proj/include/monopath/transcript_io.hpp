#pragma once

#include "monopath/lattice_game.hpp"
#include "monopath/online_game.hpp"

#include <iosfwd>

namespace monopath {

// Line-oriented transcript text. Blank lines and '#' comments are ignored.
//
//   lattice q 2 n 3
//   stage 1
//   step pick 1 coord 2
//   point 1 2 new 1 pool 3
//
//   online k 2 q 2 n 3 modified 0
//   stage 1
//   edge prefix 1 color 2
//   path color 1 vertices 1 3 4
//
// Readers throw FormatError on malformed text; they do not validate moves.
void write_lattice_transcript(const LatticeTranscript& t, std::ostream& out);
LatticeTranscript read_lattice_transcript(std::istream& in);

void write_game_transcript(const GameTranscript& t, std::ostream& out);
GameTranscript read_game_transcript(std::istream& in);

// "lattice" or "online", from the first keyword; the stream is rewound.
std::string transcript_kind(std::istream& in);

} // namespace monopath
