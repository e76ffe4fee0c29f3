#pragma once
// t-Skolem pairings, Skolem systems, zero-sum systems and block orders.
#include <optional>
#include <utility>
#include <vector>

#include "nestlab/labeling.hpp"
#include "nestlab/search.hpp"

namespace nestlab {

struct SkolemPairing {
    int n = 0;
    int t = 0;
    std::vector<std::pair<int, int>> pairs;  // pairs[i] has difference i+1
};

using Block = std::vector<Label>;

struct SkolemSystem {
    std::vector<Block> blocks;
    Label k = 0;
    int t = 0;
    Label r = 0;

    int order() const { return static_cast<int>(blocks.size()); }
    int size() const;
    Label top() const { return size() + k + t; }
};

struct ZeroSumSystem {
    SkolemSystem system;
    std::vector<Label> distinguished;  // distinguished[i] is an element of block i
};

bool skolem_exists(int n, int t);
VerifierReport verify_pairing(const SkolemPairing& p);

std::optional<SkolemPairing> skolem_pairing(int n, int t, const SearchBudget& budget = {});
SkolemPairing table1_pairing(int s);
// The hooked pairing of order 6 (1,5),(2,4),(3,8),(10,11),(6,9),(7,13) with its block order.
SkolemPairing order6_pairing();
std::vector<int> order6_block_order();

// Blocks {-(b-a), -(a+n+k), b+n+k}; block i comes from the pair at order[i] (difference order
// when empty). r = n.
SkolemSystem system_from_pairing(const SkolemPairing& p, Label k, const std::vector<int>& order = {});

VerifierReport verify_system(const SkolemSystem& S);
VerifierReport verify_r_order(const SkolemSystem& S);
// R-order plus a pair of blocks (q, q+1), q odd and 1-based, holding elements two apart.
VerifierReport verify_r_prime_order(const SkolemSystem& S, int q);
VerifierReport verify_zero_sum(const ZeroSumSystem& Z);

SkolemSystem negate_block(const SkolemSystem& S, int i);

struct OrderedSystem {
    SkolemSystem system;
    int q = 0;  // 1-based witness position
    Label d = 0;
    Label d_prime = 0;
};

// Reorders the system built from table1_pairing(s) into its R'-order.
OrderedSystem order_r_prime(const SkolemSystem& S, int s);
// Searches block permutations for an R-order; n <= 14 only.
std::optional<SkolemSystem> order_r(const SkolemSystem& S, const SearchBudget& budget = {});

// Zero-sum (3n; k; t)-system. Throws std::domain_error on a congruence violation and
// std::runtime_error when a search gives up.
ZeroSumSystem zero_sum_system(int n, Label k, int t, const SearchBudget& budget = {});

// (3 n1, 5 n2; k; t)-system with r = n1 + n2 and each of 1..n in its own block.
SkolemSystem system_35(int n1, int n2, Label k, int t, const SearchBudget& budget = {});
ZeroSumSystem zero_sum_system_35(int n1, int n2, Label k, int t, const SearchBudget& budget = {});

// Sign pattern choosing signs for the given magnitudes so each block sums to zero; the
// first (largest) element is positive. Empty if none exists.
std::optional<Block> zero_sum_signing(std::vector<Label> magnitudes);

// Turns a signed transversal of |values| into a zero-sum system by negating blocks.
ZeroSumSystem apply_transversal(const SkolemSystem& S, const std::vector<Label>& picks);

}  // namespace nestlab
