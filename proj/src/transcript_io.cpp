#include "monopath/transcript_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace monopath {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> toks;
};

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // next non-blank line with comments stripped
    bool next(Line& line) {
        std::string text;
        while (std::getline(in_, text)) {
            ++number_;
            const auto hash = text.find('#');
            if (hash != std::string::npos) {
                text.erase(hash);
            }
            std::istringstream ls(text);
            line.toks.clear();
            for (std::string t; ls >> t;) {
                line.toks.push_back(t);
            }
            if (!line.toks.empty()) {
                line.number = number_;
                return true;
            }
        }
        return false;
    }

private:
    std::istream& in_;
    int number_ = 0;
};

[[noreturn]] void fail(const Line& l, const std::string& what) {
    throw FormatError("line " + std::to_string(l.number) + ": " + what);
}

long long to_int(const Line& l, const std::string& tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty()) {
        fail(l, "expected an integer, got '" + tok + "'");
    }
    return v;
}

// "key value" at position i
long long keyed(const Line& l, std::size_t i, const char* key) {
    if (i + 1 >= l.toks.size() || l.toks[i] != key) {
        fail(l, std::string("expected '") + key + " <value>'");
    }
    return to_int(l, l.toks[i + 1]);
}

} // namespace

void write_lattice_transcript(const LatticeTranscript& t, std::ostream& out) {
    out << "lattice q " << t.q << " n " << t.n << '\n';
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        const auto& st = t.stages[i];
        out << "stage " << i + 1 << '\n';
        for (const auto& s : st.steps) {
            out << "step pick " << s.pick << " coord " << s.coord << '\n';
        }
        out << "point";
        for (int c : st.point.coords) {
            out << ' ' << c;
        }
        out << " new " << (st.new_point ? 1 : 0);
        if (st.pool) {
            out << " pool " << *st.pool;
        }
        out << '\n';
    }
}

LatticeTranscript read_lattice_transcript(std::istream& in) {
    LineReader r(in);
    Line l;
    if (!r.next(l) || l.toks.size() != 5 || l.toks[0] != "lattice") {
        throw FormatError("expected header 'lattice q <q> n <n>'");
    }
    LatticeTranscript t;
    t.q = static_cast<int>(keyed(l, 1, "q"));
    t.n = static_cast<int>(keyed(l, 3, "n"));
    if (t.q < 1 || t.n < 1) {
        fail(l, "q and n must be positive");
    }
    bool open = false;
    while (r.next(l)) {
        const std::string& kw = l.toks[0];
        if (kw == "stage") {
            if (open) {
                fail(l, "stage " + std::to_string(t.stages.size()) + " has no point line");
            }
            if (l.toks.size() != 2 || to_int(l, l.toks[1]) != static_cast<long long>(t.stages.size() + 1)) {
                fail(l, "expected 'stage " + std::to_string(t.stages.size() + 1) + "'");
            }
            t.stages.emplace_back();
            open = true;
        } else if (kw == "step") {
            if (!open || l.toks.size() != 5) {
                fail(l, "misplaced or malformed step");
            }
            const long long pick = keyed(l, 1, "pick");
            const long long coord = keyed(l, 3, "coord");
            if (pick < 1 || coord < 1) {
                fail(l, "pick and coord are 1-based");
            }
            t.stages.back().steps.push_back({static_cast<std::size_t>(pick), static_cast<int>(coord)});
        } else if (kw == "point") {
            const auto q = static_cast<std::size_t>(t.q);
            if (!open || (l.toks.size() != q + 3 && l.toks.size() != q + 5)) {
                fail(l, "misplaced or malformed point");
            }
            auto& st = t.stages.back();
            st.point.coords.clear();
            for (std::size_t c = 0; c < q; ++c) {
                st.point.coords.push_back(static_cast<int>(to_int(l, l.toks[1 + c])));
            }
            const long long fresh = keyed(l, q + 1, "new");
            if (fresh != 0 && fresh != 1) {
                fail(l, "new must be 0 or 1");
            }
            st.new_point = fresh == 1;
            if (l.toks.size() == q + 5) {
                const long long pool = keyed(l, q + 3, "pool");
                if (pool < 0) {
                    fail(l, "negative pool");
                }
                st.pool = static_cast<std::size_t>(pool);
            }
            open = false;
        } else {
            fail(l, "unknown keyword '" + kw + "'");
        }
    }
    if (open) {
        throw FormatError("last stage has no point line");
    }
    return t;
}

void write_game_transcript(const GameTranscript& t, std::ostream& out) {
    out << "online k " << t.k << " q " << t.q << " n " << t.n << " modified " << (t.modified ? 1 : 0)
        << '\n';
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        out << "stage " << i + 1 << '\n';
        for (const auto& e : t.stages[i]) {
            out << "edge prefix";
            for (Vertex v : e.prefix) {
                out << ' ' << v;
            }
            out << " color " << e.color << '\n';
        }
    }
    out << "path " << format_path(t.path) << '\n';
}

GameTranscript read_game_transcript(std::istream& in) {
    LineReader r(in);
    Line l;
    if (!r.next(l) || l.toks.size() != 9 || l.toks[0] != "online") {
        throw FormatError("expected header 'online k <k> q <q> n <n> modified <0|1>'");
    }
    GameTranscript t;
    t.k = static_cast<int>(keyed(l, 1, "k"));
    t.q = static_cast<int>(keyed(l, 3, "q"));
    t.n = static_cast<int>(keyed(l, 5, "n"));
    const long long modified = keyed(l, 7, "modified");
    if (t.k < 2 || t.q < 1 || t.q > 65535 || t.n < 1 || (modified != 0 && modified != 1)) {
        fail(l, "header values out of range");
    }
    t.modified = modified == 1;
    bool have_path = false;
    while (r.next(l)) {
        const std::string& kw = l.toks[0];
        if (have_path) {
            fail(l, "content after the path line");
        }
        if (kw == "stage") {
            if (l.toks.size() != 2 || to_int(l, l.toks[1]) != static_cast<long long>(t.stages.size() + 1)) {
                fail(l, "expected 'stage " + std::to_string(t.stages.size() + 1) + "'");
            }
            t.stages.emplace_back();
        } else if (kw == "edge") {
            const auto width = static_cast<std::size_t>(t.k - 1);
            if (t.stages.empty() || l.toks.size() != width + 4 || l.toks[1] != "prefix") {
                fail(l, "misplaced or malformed edge");
            }
            DrawnEdge e;
            for (std::size_t i = 0; i < width; ++i) {
                const long long v = to_int(l, l.toks[2 + i]);
                if (v < 1 || v > 0xffffffffLL) {
                    fail(l, "vertex out of range");
                }
                e.prefix.push_back(static_cast<Vertex>(v));
            }
            const long long c = keyed(l, width + 2, "color");
            if (c < 1 || c > t.q) {
                fail(l, "color out of range");
            }
            e.color = static_cast<Color>(c);
            t.stages.back().push_back(std::move(e));
        } else if (kw == "path") {
            if (l.toks.size() < 4 || l.toks[3] != "vertices") {
                fail(l, "expected 'path color <c> vertices ...'");
            }
            const long long c = keyed(l, 1, "color");
            if (c < 1 || c > t.q) {
                fail(l, "color out of range");
            }
            t.path.color = static_cast<Color>(c);
            for (std::size_t i = 4; i < l.toks.size(); ++i) {
                const long long v = to_int(l, l.toks[i]);
                if (v < 1 || v > 0xffffffffLL) {
                    fail(l, "vertex out of range");
                }
                t.path.vertices.push_back(static_cast<Vertex>(v));
            }
            have_path = true;
        } else {
            fail(l, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_path) {
        throw FormatError("missing path line");
    }
    return t;
}

std::string transcript_kind(std::istream& in) {
    const auto start = in.tellg();
    LineReader r(in);
    Line l;
    std::string kind;
    if (r.next(l)) {
        kind = l.toks[0];
    }
    in.clear();
    in.seekg(start);
    if (kind != "lattice" && kind != "online") {
        throw FormatError("not a transcript: expected 'lattice' or 'online' header");
    }
    return kind;
}

} // namespace monopath
