#pragma once
// Conservative labelings of snowflakes: Eulerian stars, even snowflakes, odd minimum
// snowflakes with controlled center sums, mixed minimum snowflakes, and the dispatcher.
#include <optional>
#include <string>
#include <vector>

#include "nestlab/graph.hpp"
#include "nestlab/labeling.hpp"
#include "nestlab/search.hpp"

namespace nestlab {

// Signed values of one star as seen from its internal vertex (positive = arc into it).
// values[0] is the hub edge towards the snowflake center.
using StarValues = std::vector<Label>;

enum class StarVariant { phi, phi1, phi2, phi3 };

struct BlockLabeling {
    Snowflake flake;             // star_graph blocks use a single-star profile {M}
    OrientedLabeling labeling;   // on flake.graph(), or on star_graph(M) for stars
    int center = 0;
    Label ell = 0;               // vertex sum at the center
    std::vector<Label> labels;   // sorted label set
    bool eulerian = false;
};

// Label set of a star of size M starting at x: phi [x, M+x-1]; phi1 [x, M+x-2] u {M+x};
// phi2 {x} u [x+2, M+x].
std::vector<Label> variant_labels(int M, StarVariant v, Label x = 1);

// Lexicographically smallest in-set of size n/2 whose sum is half the total; the in-set is
// returned positive. Empty when the labels admit no balanced split.
std::optional<StarValues> balanced_split(std::vector<Label> labels);

// Cuts sorted labels into consecutive chunks of the given sizes, exchanging a boundary
// element with the next chunk whenever a chunk sum is odd. Throws if a chunk stays odd.
std::vector<std::vector<Label>> chunk_partition(std::vector<Label> labels, const std::vector<int>& sizes);

BlockLabeling star_eulerian(int M, StarVariant variant);
BlockLabeling two_star_center(int M1, int M2, Label ell, StarVariant variant);
OrientedLabeling even_snowflake(const std::vector<int>& profile);

// C_{3 n1, 5 n2} with labels [1,n] u [n+1+k, M+k-1] u {M+k+t}.
BlockLabeling odd_center_small_sum(int n1, int n2, Label k, int t, const SearchBudget& budget = {});
BlockLabeling odd_center_large_sum(int n1, int n2, Label k, int t, const SearchBudget& budget = {});

// Even profile with odd center degree, labels by variant: phi [x, M+x-1]; phi2 [x, M+x-2] u
// {M+x}; phi3 {x} u [x+2, M+x]; phi1 [r+1, M+r-4] u {x, x+2, x+3, x+5} with the last 4-star
// taking the four separate labels.
BlockLabeling even_block_shifted(const std::vector<int>& profile, Label x, Label ell, StarVariant variant,
                                 Label r = 0);

OrientedLabeling mixed_minimum(int n1, int n2, int n3, int n4, Label k, int t, const SearchBudget& budget = {});

// Identifies vertex a_vertex of A with b_vertex of B. B's vertices are renumbered after A's.
// Throws on label collision or when the merged vertex has degree >= 3 and nonzero sum.
OrientedLabeling attach(const OrientedLabeling& A, int a_vertex, const OrientedLabeling& B, int b_vertex);

struct Decomposition {
    std::vector<int> core;    // b_i in {3,4,5,6}
    std::vector<int> galaxy;  // 4 q_i, zero when nothing hangs at v_i
    int galaxy_size = 0;
};

Decomposition decompose(const std::vector<int>& profile);

struct ConservativeResult {
    int t = 0;
    OrientedLabeling labeling;
    std::string provenance;  // even, zero-sum, mixed or search
};

ConservativeResult construct_conservative(const std::vector<int>& profile, const SearchBudget& budget = {});

}  // namespace nestlab
