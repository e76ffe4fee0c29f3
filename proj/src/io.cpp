#include "nestlab/io.hpp"

#include <fstream>
#include <sstream>

namespace nestlab {

namespace {

struct Lines {
    std::vector<std::string> lines;
    size_t pos = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            lines.push_back(line);
        }
    }

    std::istringstream next(const std::string& what) {
        if (pos >= lines.size()) throw ParseError("unexpected end of input, expected " + what);
        return std::istringstream(lines[pos++]);
    }

    bool done() const { return pos >= lines.size(); }
    const std::string& peek() const { return lines.at(pos); }
};

void expect_word(std::istringstream& in, const std::string& word) {
    std::string w;
    if (!(in >> w) || w != word) throw ParseError("expected '" + word + "'");
}

template <class T>
T read_value(std::istringstream& in, const std::string& what) {
    T v;
    if (!(in >> v)) throw ParseError("expected " + what);
    return v;
}

template <class T>
T keyed(std::istringstream& in, const std::string& key) {
    expect_word(in, key);
    return read_value<T>(in, key + " value");
}

void expect_end(std::istringstream& in) {
    std::string rest;
    if (in >> rest) throw ParseError("trailing text '" + rest + "'");
}

void header(Lines& L, const std::string& name) {
    auto in = L.next(name + " header");
    expect_word(in, name);
    int version = read_value<int>(in, "format version");
    if (version != 1) throw ParseError("unsupported " + name + " version " + std::to_string(version));
    expect_end(in);
}

}  // namespace

std::string write_labeling(const LabelingDocument& d) {
    std::ostringstream out;
    out << "labeling 1\n";
    out << "vertices " << d.labeling.vertices << "\n";
    out << "edges " << d.labeling.size() << "\n";
    out << "k " << d.k << " t " << d.t << " r ";
    if (d.r) out << *d.r;
    else out << "-";
    out << "\n";
    if (!d.provenance.empty()) out << "provenance " << d.provenance << "\n";
    for (const auto& a : d.labeling.arcs) out << a.tail << " " << a.head << " " << a.label << "\n";
    return out.str();
}

LabelingDocument parse_labeling(const std::string& text) {
    Lines L(text);
    header(L, "labeling");
    LabelingDocument d;
    {
        auto in = L.next("vertices");
        d.labeling.vertices = keyed<int>(in, "vertices");
        expect_end(in);
    }
    int m;
    {
        auto in = L.next("edges");
        m = keyed<int>(in, "edges");
        expect_end(in);
    }
    {
        auto in = L.next("k t r");
        d.k = keyed<Label>(in, "k");
        d.t = keyed<int>(in, "t");
        expect_word(in, "r");
        std::string r = read_value<std::string>(in, "r value");
        if (r != "-") {
            try {
                d.r = std::stoll(r);
            } catch (const std::exception&) {
                throw ParseError("bad r value '" + r + "'");
            }
        }
        expect_end(in);
    }
    if (!L.done() && L.peek().rfind("provenance", 0) == 0) {
        auto in = L.next("provenance");
        d.provenance = keyed<std::string>(in, "provenance");
        expect_end(in);
    }
    if (d.labeling.vertices < 0 || m < 0) throw ParseError("negative counts");
    for (int i = 0; i < m; ++i) {
        auto in = L.next("arc " + std::to_string(i + 1));
        Arc a;
        a.tail = read_value<int>(in, "tail");
        a.head = read_value<int>(in, "head");
        a.label = read_value<Label>(in, "label");
        expect_end(in);
        if (a.tail < 0 || a.tail >= d.labeling.vertices || a.head < 0 || a.head >= d.labeling.vertices)
            throw ParseError("arc " + std::to_string(i + 1) + " has an endpoint out of range");
        d.labeling.arcs.push_back(a);
    }
    if (!L.done()) throw ParseError("more arcs than declared");
    return d;
}

std::string write_vertex_labeling(const VertexLabeling& f) {
    std::ostringstream out;
    out << "vertex-labeling 1\nvertices " << f.f.size() << "\nt " << f.t << "\n";
    for (size_t v = 0; v < f.f.size(); ++v) out << v << " " << f.f[v] << "\n";
    return out.str();
}

VertexLabeling parse_vertex_labeling(const std::string& text) {
    Lines L(text);
    header(L, "vertex-labeling");
    VertexLabeling f;
    int n;
    {
        auto in = L.next("vertices");
        n = keyed<int>(in, "vertices");
        expect_end(in);
    }
    {
        auto in = L.next("t");
        f.t = keyed<int>(in, "t");
        expect_end(in);
    }
    if (n < 0) throw ParseError("negative vertex count");
    f.f.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        auto in = L.next("vertex value");
        int v = read_value<int>(in, "vertex");
        Label x = read_value<Label>(in, "value");
        expect_end(in);
        if (v < 0 || v >= n || seen[v]) throw ParseError("bad or repeated vertex " + std::to_string(v));
        seen[v] = 1;
        f.f[v] = x;
    }
    if (!L.done()) throw ParseError("more values than declared");
    return f;
}

std::string write_pairing(const SkolemPairing& p) {
    std::ostringstream out;
    out << "skolem-pairing 1\nn " << p.n << " t " << p.t << "\n";
    for (auto [a, b] : p.pairs) out << a << " " << b << "\n";
    return out.str();
}

SkolemPairing parse_pairing(const std::string& text) {
    Lines L(text);
    header(L, "skolem-pairing");
    SkolemPairing p;
    {
        auto in = L.next("n t");
        p.n = keyed<int>(in, "n");
        p.t = keyed<int>(in, "t");
        expect_end(in);
    }
    for (int i = 0; i < p.n; ++i) {
        auto in = L.next("pair");
        int a = read_value<int>(in, "a");
        int b = read_value<int>(in, "b");
        expect_end(in);
        p.pairs.push_back({a, b});
    }
    if (!L.done()) throw ParseError("more pairs than declared");
    return p;
}

std::string write_system(const SkolemSystem& S, const std::vector<Label>& distinguished) {
    std::ostringstream out;
    out << "skolem-system 1\n";
    out << "n " << S.order() << " k " << S.k << " t " << S.t << " r " << S.r << " M " << S.size() << "\n";
    for (int i = 0; i < S.order(); ++i) {
        bool starred = false;
        for (size_t j = 0; j < S.blocks[i].size(); ++j) {
            Label x = S.blocks[i][j];
            if (j) out << " ";
            out << x;
            if (!starred && i < static_cast<int>(distinguished.size()) && distinguished[i] == x) {
                out << "*";
                starred = true;
            }
        }
        out << "\n";
    }
    return out.str();
}

ZeroSumSystem parse_system(const std::string& text) {
    Lines L(text);
    header(L, "skolem-system");
    ZeroSumSystem Z;
    int n, M;
    {
        auto in = L.next("n k t r M");
        n = keyed<int>(in, "n");
        Z.system.k = keyed<Label>(in, "k");
        Z.system.t = keyed<int>(in, "t");
        Z.system.r = keyed<Label>(in, "r");
        M = keyed<int>(in, "M");
        expect_end(in);
    }
    int stars = 0;
    for (int i = 0; i < n; ++i) {
        auto in = L.next("block " + std::to_string(i + 1));
        Block b;
        std::string tok;
        std::optional<Label> mark;
        while (in >> tok) {
            bool star = !tok.empty() && tok.back() == '*';
            if (star) tok.pop_back();
            Label x;
            try {
                size_t used = 0;
                x = std::stoll(tok, &used);
                if (used != tok.size()) throw ParseError("");
            } catch (const std::exception&) {
                throw ParseError("bad block entry '" + tok + "'");
            }
            if (star) {
                if (mark) throw ParseError("two distinguished elements in block " + std::to_string(i + 1));
                mark = x;
            }
            b.push_back(x);
        }
        if (mark) {
            ++stars;
            Z.distinguished.push_back(*mark);
        } else {
            Z.distinguished.push_back(0);
        }
        Z.system.blocks.push_back(b);
    }
    if (!L.done()) throw ParseError("more blocks than declared");
    if (stars == 0) Z.distinguished.clear();
    else if (stars != n) throw ParseError("either every block or no block has a distinguished element");
    if (Z.system.size() != M) throw ParseError("declared M does not match the blocks");
    return Z;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "graph 1\nvertices " << g.vertices << "\nedges " << g.size() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    Lines L(text);
    header(L, "graph");
    int n, m;
    {
        auto in = L.next("vertices");
        n = keyed<int>(in, "vertices");
        expect_end(in);
    }
    {
        auto in = L.next("edges");
        m = keyed<int>(in, "edges");
        expect_end(in);
    }
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        auto in = L.next("edge");
        int u = read_value<int>(in, "u");
        int v = read_value<int>(in, "v");
        expect_end(in);
        edges.push_back({u, v});
    }
    if (!L.done()) throw ParseError("more edges than declared");
    try {
        return make_graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string dot_graph(const Graph& g, const std::vector<bool>& dashed, const std::vector<std::string>& vertex_labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertices; ++v) {
        out << "  " << v;
        if (v < static_cast<int>(vertex_labels.size())) out << " [label=\"" << vertex_labels[v] << "\"]";
        out << ";\n";
    }
    for (int e = 0; e < g.size(); ++e) {
        out << "  " << g.edges[e].first << " -- " << g.edges[e].second;
        if (e < static_cast<int>(dashed.size()) && dashed[e]) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_two_nested(const TwoNestedGraph& g, const VertexLabeling* f) {
    Graph G = g.graph();
    std::vector<bool> dashed(G.size());
    for (int e = 0; e < G.size(); ++e) dashed[e] = !g.is_chord_edge(e);
    std::vector<std::string> names;
    for (int v = 0; v < G.vertices; ++v) {
        std::string s = "v" + std::to_string(v + 1);
        if (f && v < static_cast<int>(f->f.size())) s += " : " + std::to_string(f->f[v]);
        names.push_back(s);
    }
    return dot_graph(G, dashed, names);
}

std::string dot_oriented(const OrientedLabeling& L) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < L.vertices; ++v) out << "  " << v << ";\n";
    for (const auto& a : L.arcs) out << "  " << a.tail << " -> " << a.head << " [label=\"" << a.label << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string write_campaign_record(const CampaignRecord& r) {
    std::ostringstream out;
    out << r.id << " " << to_string(r.status) << " " << (r.witness_path.empty() ? "-" : r.witness_path) << " "
        << r.nodes << " " << r.wall_ms;
    return out.str();
}

CampaignRecord parse_campaign_record(const std::string& line) {
    std::istringstream in(line);
    CampaignRecord r;
    std::string status;
    if (!(in >> r.id >> status >> r.witness_path >> r.nodes >> r.wall_ms)) throw ParseError("malformed campaign record");
    expect_end(in);
    if (status == "found") r.status = SearchStatus::found;
    else if (status == "none") r.status = SearchStatus::none;
    else if (status == "exhausted") r.status = SearchStatus::exhausted;
    else throw ParseError("unknown status '" + status + "'");
    return r;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw ParseError("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

Instance parse_instance(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("instance '" + spec + "' needs the form kind:args");
    std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
    Instance I;
    I.spec = spec;
    try {
        if (kind == "cycle" || kind == "star") {
            auto v = parse_int_list(args);
            if (v.size() != 1 || v[0] < (kind == "cycle" ? 3 : 1)) throw ParseError("bad size for " + kind);
            I.graph = kind == "cycle" ? cycle_graph(v[0]) : star_graph(v[0]);
        } else if (kind == "snowflake") {
            I.flake = make_snowflake(parse_int_list(args));
            I.graph = I.flake->graph();
        } else if (kind == "nested") {
            auto v = parse_int_list(args);
            if (v.size() != 2) throw ParseError("nested needs m1,m2");
            I.nested = build_two_nested(v[0], v[1], nested_t(v[0] + v[1]));
            I.graph = I.nested->graph();
        } else if (kind == "chords") {
            // chords:m2:p1,p2,...
            auto c2 = args.find(':');
            if (c2 == std::string::npos) throw ParseError("chords needs m2:p1,p2,...");
            auto m2 = parse_int_list(args.substr(0, c2));
            if (m2.size() != 1) throw ParseError("chords needs a single m2");
            I.nested = two_nested_from_positions(m2[0], parse_int_list(args.substr(c2 + 1)));
            I.graph = I.nested->graph();
        } else if (kind == "file") {
            I.graph = parse_edge_list(read_file(args));
        } else {
            throw ParseError("unknown instance kind '" + kind + "'");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
    return I;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace nestlab
