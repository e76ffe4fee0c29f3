#pragma once
// Explicit graceful / near-graceful labelings of two-nested-cycles graphs with a long base cycle.
#include <vector>

#include "nestlab/graph.hpp"
#include "nestlab/labeling.hpp"

namespace nestlab {

struct NestedParams {
    int m1 = 0;
    int m2 = 0;
    int m = 0;
    int t = 0;
    int c_w = 0;
    int f_w = 0;
    int which = 0;  // construction case 1..4
};

NestedParams compute_params(int m1, int m2);
std::vector<Label> base_edge_labels(const NestedParams& p);

struct NestedLabeling {
    NestedParams params;
    TwoNestedGraph graph;
    VertexLabeling labeling;
    std::vector<Label> base_labels;
};

NestedLabeling construct_nested(int m1, int m2);

}  // namespace nestlab
