#pragma once
// Simple graphs, two-nested-cycles plane graphs, snowflakes and the semidual map.
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nestlab {

using Label = long long;
using Edge = std::pair<int, int>;

struct Graph {
    int vertices = 0;
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;
    std::vector<std::vector<int>> incident_edges() const;
};

// Throws std::invalid_argument on loops, duplicates or out-of-range endpoints.
Graph make_graph(int vertices, std::vector<Edge> edges);
Graph cycle_graph(int n);
// K_{1,n}; vertex 0 is the center.
Graph star_graph(int n);

struct TwoNestedGraph {
    int m1 = 0;
    int m2 = 0;
    std::vector<int> chord_positions;  // 1-based positions of w_1..w_{m1} on the base cycle

    int size() const { return m1 + m2; }
    // Vertices 0..m2-1 stand for v_1..v_{m2}. Edges e_1..e_{m2} of the base cycle come first
    // (e_i = v_i v_{i+1}), followed by the chords w_j w_{j+1}.
    Graph graph() const;
    bool is_chord_edge(int edge) const { return edge >= m2; }
};

int nested_bound(int m1);
int nested_t(int m);

TwoNestedGraph build_two_nested(int m1, int m2, int t);
// Arbitrary chord cycle; positions must start at 1, increase strictly and leave gaps of at least two.
TwoNestedGraph two_nested_from_positions(int m2, std::vector<int> positions);

struct Snowflake {
    std::vector<int> profile;

    int stars() const { return static_cast<int>(profile.size()); }
    int size() const;
    int vertex_count() const { return 1 + size(); }
    // Vertex 0 is the center z, vertex 1+i is the internal vertex of star i, leaves follow
    // star by star. Star i contributes its hub edge (z, v_i) and then its leaf edges.
    Graph graph() const;
    int center() const { return 0; }
    int star_vertex(int i) const { return 1 + i; }
    int first_edge(int i) const;
};

Snowflake make_snowflake(std::vector<int> profile);

enum class Parity { even, odd, mixed };
struct SnowflakeClass {
    Parity parity;
    bool minimum;
};
SnowflakeClass classify_snowflake(const Snowflake& s);
std::string to_string(Parity p);

struct Semidual {
    Snowflake flake;
    std::vector<int> primal_edge;   // snowflake edge -> primal edge
    std::vector<int> dual_edge;     // primal edge -> snowflake edge
    // Faces on the left and right of each primal edge when it is traversed in its stored
    // direction (base edges v_i -> v_{i+1}, chords w_j -> w_{j+1}), as snowflake vertices.
    std::vector<int> left_face;
    std::vector<int> right_face;
};

Semidual semidual(const TwoNestedGraph& g);

}  // namespace nestlab
