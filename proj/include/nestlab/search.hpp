#pragma once
// Budgeted backtracking searches: graceful labelings, k-t-conservative labelings, Skolem
// pairings and signed transversals.
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nestlab/graph.hpp"
#include "nestlab/labeling.hpp"

namespace nestlab {

struct SkolemPairing;

struct SearchBudget {
    std::uint64_t max_nodes = 200'000'000;
    double max_seconds = 120.0;
    bool symmetry = true;
    const std::atomic<bool>* cancel = nullptr;
};

enum class SearchStatus { found, none, exhausted };
std::string to_string(SearchStatus s);

template <class T>
struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<T> witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

// Node and time accounting shared by the searches; checks the clock every 1024 nodes.
class SearchMeter {
public:
    explicit SearchMeter(const SearchBudget& b);
    bool tick();
    bool stopped() const { return stopped_; }
    std::uint64_t nodes() const { return nodes_; }
    double elapsed() const;

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

SearchResult<VertexLabeling> search_graceful(const Graph& g, int t, const SearchBudget& budget = {});

// Searches for a k-t-conservative labeling. With k > 0 every r in [1, M-1] is tried in turn
// unless r is given.
SearchResult<OrientedLabeling> search_conservative(const Graph& g, Label k, int t,
                                                   const SearchBudget& budget = {},
                                                   std::optional<Label> r = std::nullopt);

SearchResult<SkolemPairing> search_skolem(int n, int t, const SearchBudget& budget = {});

// Picks one magnitude per block and a sign for it so that the signed picks sum to target.
// Magnitudes are tried in increasing order; the sign moving the running sum toward the
// target is tried first, + on ties.
SearchResult<std::vector<Label>> search_signs(const std::vector<std::vector<Label>>& candidates, Label target,
                                              const SearchBudget& budget = {});

}  // namespace nestlab
