#include "tournadyn/stream.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace tournadyn {

std::string to_string(StructKind s) {
    switch (s) {
        case StructKind::FastPromise: return "fast-promise";
        case StructKind::FastFull: return "fast-full";
        case StructKind::Fvst: return "fvst";
    }
    return "?";
}

StructKind struct_from_string(const std::string& name) {
    if (name == "fast-promise") return StructKind::FastPromise;
    if (name == "fast-full") return StructKind::FastFull;
    if (name == "fvst") return StructKind::Fvst;
    throw FormatError("unknown structure selector: " + name);
}

UpdateStream read_stream(std::istream& in) {
    UpdateStream s;
    std::string line;
    if (!std::getline(in, line)) throw FormatError("stream: missing header");
    std::istringstream hs(line);
    std::string tag, name, key;
    if (!(hs >> tag >> name) || tag != "STRUCT") throw FormatError("stream: bad header");
    s.structure = struct_from_string(name);
    bool have_n = false, have_k = false, have_seed = false;
    while (hs >> key) {
        if (key == "N") { have_n = static_cast<bool>(hs >> s.n); }
        else if (key == "K") { have_k = static_cast<bool>(hs >> s.K); }
        else if (key == "G") { if (!(hs >> s.G)) throw FormatError("stream: bad G"); }
        else if (key == "SEED") { have_seed = static_cast<bool>(hs >> s.seed); }
        else throw FormatError("stream: unknown header field " + key);
    }
    if (!have_n || !have_k || !have_seed)
        throw FormatError("stream: header needs N, K and SEED");
    if (s.n < 0) throw FormatError("stream: negative n");

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        Op op;
        ls >> op.kind;
        if (op.kind == 'R') {
            if (!(ls >> op.u >> op.v)) throw FormatError("stream: bad R op at line " + std::to_string(lineno));
            if (op.u < 0 || op.u >= s.n || op.v < 0 || op.v >= s.n || op.u == op.v)
                throw FormatError("stream: R vertices out of range at line " + std::to_string(lineno));
        } else if (op.kind == 'Q') {
            if (!(ls >> op.k) || op.k < 0) throw FormatError("stream: bad Q op at line " + std::to_string(lineno));
            if (s.structure == StructKind::Fvst && op.k > s.promise())
                throw FormatError("stream: fvst query k exceeds G at line " + std::to_string(lineno));
        } else if (op.kind == 'C') {
            // no arguments
        } else {
            throw FormatError("stream: unknown op at line " + std::to_string(lineno));
        }
        s.ops.push_back(op);
    }
    return s;
}

UpdateStream read_stream_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open stream file: " + path);
    return read_stream(in);
}

void write_stream(std::ostream& out, const UpdateStream& s) {
    out << "STRUCT " << to_string(s.structure) << " N " << s.n << " K " << s.K;
    if (s.G >= 0) out << " G " << s.G;
    out << " SEED " << s.seed << '\n';
    for (const Op& op : s.ops) {
        if (op.kind == 'R') out << "R " << op.u << ' ' << op.v << '\n';
        else if (op.kind == 'Q') out << "Q " << op.k << '\n';
        else out << "C\n";
    }
}

void write_stream_file(const std::string& path, const UpdateStream& s) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open output file: " + path);
    write_stream(out, s);
}

namespace {

// Splits "planted-fvs-3" into ("planted-fvs", 3); plain names pass through.
std::pair<std::string, int> split_kind(const std::string& kind, int budget) {
    for (const std::string base : {"transitive-plus", "planted-fvs"}) {
        if (kind.rfind(base + "-", 0) == 0) {
            std::string suffix = kind.substr(base.size() + 1);
            try {
                return {base, std::stoi(suffix)};
            } catch (...) {
                throw ArgumentError("gen: bad budget suffix in kind " + kind);
            }
        }
        if (kind == base) return {base, budget};
    }
    if (kind == "uniform-random") return {kind, budget};
    throw ArgumentError("gen: unknown kind " + kind);
}

}  // namespace

GenResult generate(const std::string& kind, int n, int budget, int num_ops,
                   std::uint64_t seed, const std::string& structure) {
    if (n < 0) throw ArgumentError("gen: n must be non-negative");
    auto [base, r] = split_kind(kind, budget);
    if (r < 0) throw ArgumentError("gen: budget must be non-negative");
    std::mt19937_64 rng(seed);

    GenResult out;
    UpdateStream& st = out.stream;
    st.n = n;
    st.seed = seed;
    st.K = r;
    st.G = r;

    auto rnd = [&](int m) { return m <= 0 ? 0 : static_cast<int>(rng() % m); };

    if (base == "transitive-plus") {
        st.structure = structure.empty() ? StructKind::FastPromise
                                         : struct_from_string(structure);
        out.tournament = Tournament::transitive(n);
        std::set<std::pair<int, int>> flipped;
        auto flip_random = [&]() -> bool {
            if (n < 2) return false;
            int u = rnd(n), v = rnd(n);
            if (u == v) return false;
            auto key = std::minmax(u, v);
            bool removing = flipped.count(key) > 0;
            if (!removing && static_cast<int>(flipped.size()) >= r) return false;
            out.tournament.reverse_pair(u, v);
            if (removing) flipped.erase(key);
            else flipped.insert(key);
            st.ops.push_back({'R', key.first, key.second, 0});
            return true;
        };
        // Seed the initial tournament with up to r flips (not recorded).
        st.ops.clear();
        for (int i = 0; i < r; ++i) {
            int u = rnd(n), v = rnd(n);
            if (u == v || n < 2) continue;
            auto key = std::minmax(u, v);
            out.tournament.reverse_pair(u, v);
            if (!flipped.erase(key)) flipped.insert(key);
        }
        for (int i = 0; i < num_ops; ++i) {
            int roll = rnd(16);
            if (roll == 0) st.ops.push_back({'C', 0, 0, 0});
            else if (roll <= 3) st.ops.push_back({'Q', 0, 0, static_cast<long long>(rnd(static_cast<int>(r) + 1))});
            else if (!flip_random() && !flipped.empty()) {
                auto it = flipped.begin();
                std::advance(it, rnd(static_cast<int>(flipped.size())));
                auto key = *it;
                out.tournament.reverse_pair(key.first, key.second);
                flipped.erase(it);
                st.ops.push_back({'R', key.first, key.second, 0});
            }
        }
        // The replayed stream must start from the INITIAL tournament; undo
        // the recorded ops so the emitted tournament matches op replay.
        for (auto it = st.ops.rbegin(); it != st.ops.rend(); ++it)
            if (it->kind == 'R') out.tournament.reverse_pair(it->u, it->v);
    } else if (base == "planted-fvs") {
        st.structure = structure.empty() ? StructKind::Fvst
                                         : struct_from_string(structure);
        out.tournament = Tournament::transitive(n);
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(verts[i], verts[rnd(i + 1)]);
        std::vector<int> plant(verts.begin(), verts.begin() + std::min(r, n));
        std::vector<char> in_plant(n, 0);
        for (int v : plant) in_plant[v] = 1;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((in_plant[u] || in_plant[v]) && (rng() & 1))
                    out.tournament.reverse_pair(u, v);
        for (int i = 0; i < num_ops; ++i) {
            int roll = rnd(16);
            if (roll == 0) st.ops.push_back({'C', 0, 0, 0});
            else if (roll <= 3) st.ops.push_back({'Q', 0, 0, static_cast<long long>(rnd(static_cast<int>(r) + 1))});
            else if (!plant.empty() && n >= 2) {
                int a = plant[rnd(static_cast<int>(plant.size()))];
                int b = rnd(n);
                if (a == b) continue;
                st.ops.push_back({'R', std::min(a, b), std::max(a, b), 0});
            }
        }
    } else {  // uniform-random
        st.structure = structure.empty() ? StructKind::FastFull
                                         : struct_from_string(structure);
        TournamentBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (rng() & 1) b.orient(u, v);
                else b.orient(v, u);
            }
        out.tournament = b.take();
        for (int i = 0; i < num_ops; ++i) {
            int roll = rnd(16);
            if (roll == 0) st.ops.push_back({'C', 0, 0, 0});
            else if (roll <= 3) st.ops.push_back({'Q', 0, 0, static_cast<long long>(rnd(static_cast<int>(r) + 1))});
            else if (n >= 2) {
                int u = rnd(n), v = rnd(n);
                if (u == v) continue;
                st.ops.push_back({'R', std::min(u, v), std::max(u, v), 0});
            }
        }
    }
    return out;
}

}  // namespace tournadyn
