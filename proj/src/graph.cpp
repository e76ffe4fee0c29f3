#include "nestlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nestlab {

std::vector<int> Graph::degrees() const {
    std::vector<int> d(vertices, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<std::vector<int>> Graph::incident_edges() const {
    std::vector<std::vector<int>> inc(vertices);
    for (int e = 0; e < size(); ++e) {
        inc[edges[e].first].push_back(e);
        inc[edges[e].second].push_back(e);
    }
    return inc;
}

Graph make_graph(int vertices, std::vector<Edge> edges) {
    if (vertices < 0) throw std::invalid_argument("negative vertex count");
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertices || v >= vertices)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    return Graph{vertices, std::move(edges)};
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return make_graph(n, std::move(e));
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star needs at least one edge");
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i) e.push_back({0, i});
    return make_graph(n + 1, std::move(e));
}

Graph TwoNestedGraph::graph() const {
    std::vector<Edge> e;
    for (int i = 0; i < m2; ++i) e.push_back({i, (i + 1) % m2});
    for (int j = 0; j < m1; ++j)
        e.push_back({chord_positions[j] - 1, chord_positions[(j + 1) % m1] - 1});
    return make_graph(m2, std::move(e));
}

int nested_bound(int m1) { return m1 * (2 * m1 - 1); }

int nested_t(int m) {
    int r = ((m % 4) + 4) % 4;
    return (r == 0 || r == 3) ? 0 : 1;
}

TwoNestedGraph build_two_nested(int m1, int m2, int t) {
    if (m1 < 3) throw std::invalid_argument("m1 must be at least 3");
    if (m2 < nested_bound(m1))
        throw std::out_of_range("m2 = " + std::to_string(m2) + " is below the bound " +
                                std::to_string(nested_bound(m1)));
    if (t != nested_t(m1 + m2))
        throw std::invalid_argument("t = " + std::to_string(t) + " is inconsistent with m1+m2 = " +
                                    std::to_string(m1 + m2));
    std::vector<int> pos{1, 5 - 2 * t};
    for (int j = 3; j <= m1; ++j) pos.push_back(j * (j - 1) - 2 * t + 1);
    return two_nested_from_positions(m2, std::move(pos));
}

TwoNestedGraph two_nested_from_positions(int m2, std::vector<int> positions) {
    int m1 = static_cast<int>(positions.size());
    if (m1 < 3) throw std::invalid_argument("chord cycle needs at least 3 vertices");
    if (positions.front() != 1) throw std::invalid_argument("first chord position must be 1");
    for (int j = 1; j < m1; ++j)
        if (positions[j] < positions[j - 1] + 2)
            throw std::invalid_argument("chord positions must increase by at least 2");
    if (positions.back() > m2 - 1) throw std::invalid_argument("chord position beyond the base cycle");
    return TwoNestedGraph{m1, m2, std::move(positions)};
}

int Snowflake::size() const { return std::accumulate(profile.begin(), profile.end(), 0); }

int Snowflake::first_edge(int i) const {
    return std::accumulate(profile.begin(), profile.begin() + i, 0);
}

Graph Snowflake::graph() const {
    int p = stars();
    std::vector<Edge> e;
    int leaf = 1 + p;
    for (int i = 0; i < p; ++i) {
        e.push_back({0, 1 + i});
        for (int j = 1; j < profile[i]; ++j) e.push_back({1 + i, leaf++});
    }
    return make_graph(leaf, std::move(e));
}

Snowflake make_snowflake(std::vector<int> profile) {
    if (profile.empty()) throw std::invalid_argument("empty profile");
    for (int n : profile)
        if (n < 1) throw std::invalid_argument("star sizes must be positive");
    return Snowflake{std::move(profile)};
}

SnowflakeClass classify_snowflake(const Snowflake& s) {
    bool all_even = true, all_odd = true, minimum = true;
    for (int n : s.profile) {
        if (n % 2) all_even = false;
        else all_odd = false;
        if (n < 3 || n > 6) minimum = false;
    }
    Parity p = all_even ? Parity::even : all_odd ? Parity::odd : Parity::mixed;
    return {p, minimum};
}

std::string to_string(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "mixed";
    }
}

Semidual semidual(const TwoNestedGraph& g) {
    const auto& pos = g.chord_positions;
    std::vector<int> profile;
    for (int j = 0; j < g.m1; ++j) {
        int next = j + 1 < g.m1 ? pos[j + 1] : pos[0] + g.m2;
        profile.push_back(next - pos[j] + 1);
    }
    Semidual sd;
    sd.flake = make_snowflake(profile);
    int total = g.size();
    sd.primal_edge.assign(total, -1);
    sd.dual_edge.assign(total, -1);
    sd.left_face.assign(total, -1);
    sd.right_face.assign(total, -1);
    Graph fg = sd.flake.graph();
    for (int j = 0; j < g.m1; ++j) {
        int e = sd.flake.first_edge(j);
        int chord = g.m2 + j;
        sd.primal_edge[e] = chord;
        sd.dual_edge[chord] = e;
        sd.left_face[chord] = 0;
        sd.right_face[chord] = sd.flake.star_vertex(j);
        for (int a = 1; a < profile[j]; ++a) {
            int base = (pos[j] - 1 + a - 1) % g.m2;
            sd.primal_edge[e + a] = base;
            sd.dual_edge[base] = e + a;
            sd.left_face[base] = sd.flake.star_vertex(j);
            sd.right_face[base] = fg.edges[e + a].second;
        }
    }
    return sd;
}

}  // namespace nestlab
