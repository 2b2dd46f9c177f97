#include "tournadyn/tournament.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tournadyn {

Tournament::Tournament(int n_) : n(n_), words((n_ + 63) / 64) {
    if (n_ < 0) throw ArgumentError("negative vertex count");
    bits.assign(static_cast<std::size_t>(n) * words, 0);
    indeg.assign(n, 0);
}

Tournament Tournament::transitive(int n) {
    Tournament t(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) t.set_arc(u, v, true);
    for (int v = 0; v < n; ++v) t.indeg[v] = v;
    return t;
}

void Tournament::set_arc(int u, int v, bool present) {
    auto& w = bits[static_cast<std::size_t>(u) * words + (v >> 6)];
    std::uint64_t m = std::uint64_t(1) << (v & 63);
    if (present) w |= m; else w &= ~m;
}

void Tournament::reverse_pair(int u, int v) {
    check_pair(u, v);
    int x = arc(u, v) ? u : v;  // current arc is x -> y
    int y = x == u ? v : u;
    set_arc(x, y, false);
    set_arc(y, x, true);
    --indeg[y];
    ++indeg[x];
}

Tournament TournamentBuilder::take() {
    for (int u = 0; u < t.n; ++u) {
        if (t.arc(u, u)) throw FormatError("loop at vertex " + std::to_string(u));
        for (int v = u + 1; v < t.n; ++v) {
            if (t.arc(u, v) == t.arc(v, u))
                throw FormatError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") is not oriented exactly one way");
        }
    }
    for (int v = 0; v < t.n; ++v) {
        int d = 0;
        for (int u = 0; u < t.n; ++u)
            if (u != v && t.arc(u, v)) ++d;
        t.indeg[v] = d;
    }
    return std::move(t);
}

Tournament read_tournament(std::istream& in) {
    long long n = -1;
    if (!(in >> n) || n < 0) throw FormatError("tournament file: bad vertex count");
    if (n > 1'000'000) throw FormatError("tournament file: vertex count too large");
    std::string line;
    std::getline(in, line);  // rest of the count line
    Tournament t(static_cast<int>(n));
    for (int u = 0; u < t.n; ++u) {
        if (!std::getline(in, line))
            throw FormatError("tournament file: missing row " + std::to_string(u));
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (static_cast<int>(line.size()) != t.n)
            throw FormatError("tournament file: row " + std::to_string(u) + " has wrong length");
        for (int v = 0; v < t.n; ++v) {
            char c = line[v];
            if (c != '0' && c != '1')
                throw FormatError("tournament file: row " + std::to_string(u) + " has non-binary character");
            t.set_arc(u, v, c == '1');
        }
    }
    for (int u = 0; u < t.n; ++u) {
        if (t.arc(u, u)) throw FormatError("tournament file: loop at vertex " + std::to_string(u));
        for (int v = u + 1; v < t.n; ++v)
            if (t.arc(u, v) == t.arc(v, u))
                throw FormatError("tournament file: pair (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") not a tournament");
    }
    for (int v = 0; v < t.n; ++v) {
        int d = 0;
        for (int u = 0; u < t.n; ++u)
            if (u != v && t.arc(u, v)) ++d;
        t.indeg[v] = d;
    }
    return t;
}

Tournament read_tournament_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open tournament file: " + path);
    return read_tournament(in);
}

void write_tournament(std::ostream& out, const Tournament& t) {
    out << t.n << '\n';
    std::string line(static_cast<std::size_t>(t.n), '0');
    for (int u = 0; u < t.n; ++u) {
        for (int v = 0; v < t.n; ++v) line[v] = t.arc(u, v) ? '1' : '0';
        out << line << '\n';
    }
}

void write_tournament_file(const std::string& path, const Tournament& t) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open output file: " + path);
    write_tournament(out, t);
}

}  // namespace tournadyn
