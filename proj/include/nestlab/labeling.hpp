#pragma once
// Vertex labelings, oriented edge labelings and their verifiers.
#include <optional>
#include <string>
#include <vector>

#include "nestlab/graph.hpp"

namespace nestlab {

struct VertexLabeling {
    std::vector<Label> f;
    int t = 0;
};

struct Arc {
    int tail = 0;
    int head = 0;
    Label label = 0;
};

// Arcs are stored in the edge order of the underlying graph.
struct OrientedLabeling {
    int vertices = 0;
    std::vector<Arc> arcs;

    Graph graph() const;
    int size() const { return static_cast<int>(arcs.size()); }
};

enum class Condition {
    injectivity,
    codomain,
    label_set,
    vertex_sum,
    eulerian,
    edge_mismatch,
    block_size,
    block_sum,
    distinguished,
    order,
    pairing,
};

std::string to_string(Condition c);

struct Violation {
    Condition condition;
    std::string detail;
    long long witness = -1;
};

struct VerifierReport {
    bool pass = true;
    std::vector<Violation> violations;
    std::optional<Label> r;
    std::vector<std::string> notes;

    void fail(Condition c, std::string detail, long long witness = -1);
    std::string summary() const;
};

Label vertex_sum(const OrientedLabeling& L, int v);
std::vector<Label> vertex_sums(const OrientedLabeling& L);

// Sorted target set [1,r] u [r+1+k, M+k-1] u {M+k+t}.
std::vector<Label> gapped_label_set(int M, Label r, Label k, int t);
// Recovers r for a label multiset of the gapped shape; empty if no r fits.
std::optional<Label> recover_r(std::vector<Label> labels, Label k, int t);

VerifierReport verify_graceful(const Graph& g, const VertexLabeling& f, int t);
VerifierReport verify_kt_conservative(const Graph& g, const OrientedLabeling& L, Label k, int t);
VerifierReport verify_kt_conservative(const OrientedLabeling& L, Label k, int t);
VerifierReport verify_eulerian(const OrientedLabeling& L);

// Rosa's parity obstruction: Eulerian graph with M = 1,2 (mod 4) has no graceful labeling.
bool parity_obstructed(const Graph& g);

OrientedLabeling shift_labels(const OrientedLabeling& L, Label alpha);
OrientedLabeling reverse_arcs(const OrientedLabeling& L);
std::vector<Label> edge_differences(const Graph& g, const VertexLabeling& f);

// Transports a (near-)graceful labeling of a two-nested graph to its semidual snowflake.
OrientedLabeling induce_semidual_labeling(const TwoNestedGraph& g, const VertexLabeling& f);

}  // namespace nestlab
