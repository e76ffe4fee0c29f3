#include "nestlab/labeling.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nestlab {

std::string to_string(Condition c) {
    switch (c) {
        case Condition::injectivity: return "injectivity";
        case Condition::codomain: return "codomain";
        case Condition::label_set: return "label-set";
        case Condition::vertex_sum: return "vertex-sum";
        case Condition::eulerian: return "eulerian";
        case Condition::edge_mismatch: return "edge-mismatch";
        case Condition::block_size: return "block-size";
        case Condition::block_sum: return "block-sum";
        case Condition::distinguished: return "distinguished";
        case Condition::order: return "order";
        case Condition::pairing: return "pairing";
    }
    return "unknown";
}

void VerifierReport::fail(Condition c, std::string detail, long long witness) {
    pass = false;
    violations.push_back({c, std::move(detail), witness});
}

std::string VerifierReport::summary() const {
    std::ostringstream os;
    os << (pass ? "pass" : "fail");
    if (r) os << " r=" << *r;
    for (const auto& v : violations) os << "\n  " << to_string(v.condition) << ": " << v.detail;
    for (const auto& n : notes) os << "\n  note: " << n;
    return os.str();
}

Graph OrientedLabeling::graph() const {
    std::vector<Edge> e;
    for (const auto& a : arcs) e.push_back({a.tail, a.head});
    return make_graph(vertices, std::move(e));
}

Label vertex_sum(const OrientedLabeling& L, int v) {
    if (v < 0 || v >= L.vertices) throw std::out_of_range("unknown vertex " + std::to_string(v));
    Label s = 0;
    for (const auto& a : L.arcs) {
        if (a.head == v) s += a.label;
        if (a.tail == v) s -= a.label;
    }
    return s;
}

std::vector<Label> vertex_sums(const OrientedLabeling& L) {
    std::vector<Label> s(L.vertices, 0);
    for (const auto& a : L.arcs) {
        s[a.head] += a.label;
        s[a.tail] -= a.label;
    }
    return s;
}

std::vector<Label> gapped_label_set(int M, Label r, Label k, int t) {
    std::vector<Label> out;
    for (Label x = 1; x <= r; ++x) out.push_back(x);
    for (Label x = r + 1 + k; x <= M + k - 1; ++x) out.push_back(x);
    out.push_back(M + k + t);
    return out;
}

std::optional<Label> recover_r(std::vector<Label> labels, Label k, int t) {
    std::sort(labels.begin(), labels.end());
    int M = static_cast<int>(labels.size());
    if (M == 0) return std::nullopt;
    Label prefix = 0;
    while (prefix < M && labels[prefix] == prefix + 1) ++prefix;
    Label r = std::min<Label>(prefix, M - 1);
    if (M == 1) r = 0;
    if (gapped_label_set(M, r, k, t) == labels) return r;
    return std::nullopt;
}

std::vector<Label> edge_differences(const Graph& g, const VertexLabeling& f) {
    std::vector<Label> d;
    for (auto [u, v] : g.edges) d.push_back(f.f[u] > f.f[v] ? f.f[u] - f.f[v] : f.f[v] - f.f[u]);
    return d;
}

bool parity_obstructed(const Graph& g) {
    int m = g.size() % 4;
    if (m != 1 && m != 2) return false;
    for (int d : g.degrees())
        if (d % 2) return false;
    return true;
}

VerifierReport verify_graceful(const Graph& g, const VertexLabeling& f, int t) {
    VerifierReport rep;
    int M = g.size();
    if (static_cast<int>(f.f.size()) != g.vertices) {
        rep.fail(Condition::codomain, "labeling covers " + std::to_string(f.f.size()) + " of " +
                                          std::to_string(g.vertices) + " vertices");
        return rep;
    }
    std::map<Label, int> owner;
    for (int v = 0; v < g.vertices; ++v) {
        Label x = f.f[v];
        bool ok = x >= 0 && x <= M + t;
        if (!ok) rep.fail(Condition::codomain, "f(" + std::to_string(v) + ") = " + std::to_string(x), v);
        auto [it, fresh] = owner.emplace(x, v);
        if (!fresh)
            rep.fail(Condition::injectivity,
                     "vertices " + std::to_string(it->second) + " and " + std::to_string(v) + " share " +
                         std::to_string(x),
                     v);
    }
    auto d = edge_differences(g, f);
    std::vector<Label> sorted = d;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Label> want;
    for (Label x = 1; x <= M - 1; ++x) want.push_back(x);
    want.push_back(M + t);
    if (sorted != want) {
        std::map<Label, int> seen;
        for (int e = 0; e < M; ++e) {
            if (++seen[d[e]] == 2) {
                rep.fail(Condition::label_set, "difference " + std::to_string(d[e]) + " repeated", e);
                break;
            }
        }
        for (Label w : want)
            if (!seen.count(w)) {
                rep.fail(Condition::label_set, "difference " + std::to_string(w) + " missing", w);
                break;
            }
    }
    if (t == 0 && parity_obstructed(g)) rep.notes.push_back("Eulerian with M = 1,2 (mod 4): no graceful labeling exists");
    return rep;
}

VerifierReport verify_kt_conservative(const OrientedLabeling& L, Label k, int t) {
    VerifierReport rep;
    std::vector<Label> labels;
    for (const auto& a : L.arcs) labels.push_back(a.label);
    std::vector<Label> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) {
            rep.fail(Condition::injectivity, "label " + std::to_string(sorted[i]) + " used twice", sorted[i]);
            break;
        }
    rep.r = recover_r(labels, k, t);
    if (!rep.r) {
        rep.fail(Condition::label_set, "labels do not form [1,r] u [r+1+k, M+k-1] u {M+k+t} for any r (k=" +
                                           std::to_string(k) + ", t=" + std::to_string(t) + ")");
    }
    std::vector<int> deg(L.vertices, 0);
    for (const auto& a : L.arcs) {
        ++deg[a.tail];
        ++deg[a.head];
    }
    auto s = vertex_sums(L);
    for (int v = 0; v < L.vertices; ++v)
        if (deg[v] >= 3 && s[v] != 0)
            rep.fail(Condition::vertex_sum, "s(" + std::to_string(v) + ") = " + std::to_string(s[v]), v);
    return rep;
}

VerifierReport verify_kt_conservative(const Graph& g, const OrientedLabeling& L, Label k, int t) {
    VerifierReport rep;
    if (L.vertices != g.vertices || L.size() != g.size()) {
        rep.fail(Condition::edge_mismatch, "labeling does not match the graph's shape");
        return rep;
    }
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges[e];
        const auto& a = L.arcs[e];
        if (!((a.tail == u && a.head == v) || (a.tail == v && a.head == u))) {
            rep.fail(Condition::edge_mismatch, "arc " + std::to_string(e) + " is not edge " + std::to_string(u) +
                                                   "-" + std::to_string(v),
                     e);
            return rep;
        }
    }
    return verify_kt_conservative(L, k, t);
}

VerifierReport verify_eulerian(const OrientedLabeling& L) {
    VerifierReport rep;
    std::vector<int> in(L.vertices, 0), out(L.vertices, 0);
    for (const auto& a : L.arcs) {
        ++out[a.tail];
        ++in[a.head];
    }
    for (int v = 0; v < L.vertices; ++v)
        if (in[v] + out[v] >= 2 && in[v] != out[v])
            rep.fail(Condition::eulerian,
                     "vertex " + std::to_string(v) + " has " + std::to_string(in[v]) + " in, " +
                         std::to_string(out[v]) + " out",
                     v);
    return rep;
}

OrientedLabeling shift_labels(const OrientedLabeling& L, Label alpha) {
    if (alpha < 0) throw std::invalid_argument("shift must be non-negative");
    if (!verify_eulerian(L).pass) throw std::invalid_argument("shift needs an Eulerian orientation");
    std::vector<int> deg(L.vertices, 0);
    for (const auto& a : L.arcs) {
        ++deg[a.tail];
        ++deg[a.head];
    }
    auto s = vertex_sums(L);
    for (int v = 0; v < L.vertices; ++v)
        if (deg[v] >= 3 && s[v] != 0)
            throw std::invalid_argument("shift needs zero vertex-sums at internal vertices");
    OrientedLabeling out = L;
    for (auto& a : out.arcs) a.label += alpha;
    return out;
}

OrientedLabeling reverse_arcs(const OrientedLabeling& L) {
    OrientedLabeling out = L;
    for (auto& a : out.arcs) std::swap(a.tail, a.head);
    return out;
}

OrientedLabeling induce_semidual_labeling(const TwoNestedGraph& g, const VertexLabeling& f) {
    Graph pg = g.graph();
    int t = nested_t(g.size());
    if (!verify_graceful(pg, f, t).pass) throw std::invalid_argument("input labeling is not (near-)graceful");
    Semidual sd = semidual(g);
    Graph fg = sd.flake.graph();
    OrientedLabeling out;
    out.vertices = fg.vertices;
    out.arcs.resize(fg.size());
    for (int e = 0; e < pg.size(); ++e) {
        auto [u, v] = pg.edges[e];
        int d = sd.dual_edge[e];
        Arc a;
        a.label = f.f[u] > f.f[v] ? f.f[u] - f.f[v] : f.f[v] - f.f[u];
        // Stored direction runs u -> v; flip the face pair when the labels decrease along it.
        bool forward = f.f[u] < f.f[v];
        a.tail = forward ? sd.left_face[e] : sd.right_face[e];
        a.head = forward ? sd.right_face[e] : sd.left_face[e];
        out.arcs[d] = a;
    }
    return out;
}

}  // namespace nestlab
