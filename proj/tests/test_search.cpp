#include <algorithm>
#include <atomic>
#include <numeric>

#include "doctest.h"
#include "nestlab/search.hpp"
#include "nestlab/skolem.hpp"

using namespace nestlab;

namespace {

// Every orientation and label permutation of a tiny graph.
bool brute_conservative(const Graph& g, Label k, int t) {
    const int M = g.size();
    for (Label r = 1; r <= std::max(1, M - 1); ++r) {
        std::vector<Label> labels = gapped_label_set(M, r, k, t);
        do {
            for (int mask = 0; mask < (1 << M); ++mask) {
                OrientedLabeling L;
                L.vertices = g.vertices;
                for (int e = 0; e < M; ++e) {
                    auto [u, v] = g.edges[e];
                    L.arcs.push_back(mask >> e & 1 ? Arc{u, v, labels[e]} : Arc{v, u, labels[e]});
                }
                if (verify_kt_conservative(g, L, k, t).pass) return true;
            }
        } while (std::next_permutation(labels.begin(), labels.end()));
        if (k == 0) break;
    }
    return false;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("graceful search on cycles") {
    auto r = search_graceful(cycle_graph(4), 0);
    CHECK(r.status == SearchStatus::found);
    REQUIRE(r.witness);
    CHECK(verify_graceful(cycle_graph(4), *r.witness, 0).pass);
    CHECK(search_graceful(cycle_graph(5), 0).status == SearchStatus::none);
    CHECK(search_graceful(cycle_graph(5), 1).status == SearchStatus::found);
    for (int n = 3; n <= 11; ++n) {
        bool parity_ok = n % 4 == 0 || n % 4 == 3;
        CHECK((search_graceful(cycle_graph(n), 0).status == SearchStatus::found) == parity_ok);
        CHECK(search_graceful(cycle_graph(n), 1).status == (parity_ok ? SearchStatus::none : SearchStatus::found));
    }
}

TEST_CASE("graceful search with and without symmetry agree") {
    SearchBudget plain;
    plain.symmetry = false;
    for (int n = 3; n <= 9; ++n)
        for (int t = 0; t <= 1; ++t)
            CHECK(search_graceful(cycle_graph(n), t).status == search_graceful(cycle_graph(n), t, plain).status);
    Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(search_graceful(k4, 0).status == SearchStatus::found);
    Graph k5 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(search_graceful(k5, 0).status == SearchStatus::none);
}

TEST_CASE("graceful search on a nested graph below the bound") {
    TwoNestedGraph g = two_nested_from_positions(8, {1, 3, 5});
    auto r = search_graceful(g.graph(), nested_t(11));
    CHECK(r.status == SearchStatus::found);
    if (r.witness) CHECK(verify_graceful(g.graph(), *r.witness, nested_t(11)).pass);
}

TEST_CASE("conservative search agrees with brute force on tiny graphs") {
    std::vector<Graph> graphs = {star_graph(3), star_graph(4), star_graph(5), make_snowflake({3, 3}).graph(),
                                 make_snowflake({2, 3}).graph(), make_snowflake({1, 3}).graph()};
    for (const Graph& g : graphs)
        for (int t = 0; t <= 1; ++t) {
            auto r = search_conservative(g, 0, t);
            CHECK((r.status == SearchStatus::found) == brute_conservative(g, 0, t));
        }
    CHECK((search_conservative(star_graph(4), 2, 1).status == SearchStatus::found) ==
          brute_conservative(star_graph(4), 2, 1));
}

TEST_CASE("conservative search examples") {
    CHECK(search_conservative(make_snowflake({3, 3}).graph(), 0, 0).status == SearchStatus::none);
    auto r = search_conservative(make_snowflake({3, 4}).graph(), 0, 0);
    CHECK(r.status == SearchStatus::found);
    REQUIRE(r.witness);
    CHECK(verify_kt_conservative(make_snowflake({3, 4}).graph(), *r.witness, 0, 0).pass);
    r = search_conservative(star_graph(3), 0, 0);
    REQUIRE(r.witness);
    std::vector<Label> labels;
    for (const auto& a : r.witness->arcs) labels.push_back(a.label);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<Label>{1, 2, 3});
    CHECK(search_conservative(make_snowflake({3, 3, 4}).graph(), 0, 0).status == SearchStatus::none);
    CHECK(search_conservative(make_snowflake({3, 3}).graph(), 0, 1).status == SearchStatus::found);
}

TEST_CASE("conservative search with a fixed gap") {
    Graph g = make_snowflake({3, 4}).graph();
    auto r = search_conservative(g, 3, 0, {}, Label{2});
    if (r.status == SearchStatus::found) {
        auto rep = verify_kt_conservative(g, *r.witness, 3, 0);
        CHECK(rep.pass);
        CHECK(rep.r == 2);
    } else {
        CHECK(r.status == SearchStatus::none);
    }
    auto any = search_conservative(g, 3, 0);
    CHECK(any.status == SearchStatus::found);
    if (any.witness) CHECK(verify_kt_conservative(g, *any.witness, 3, 0).pass);
}

TEST_CASE("budgets and cancellation") {
    SearchBudget tiny;
    tiny.max_nodes = 10;
    CHECK(search_graceful(cycle_graph(14), 1, tiny).status == SearchStatus::exhausted);
    CHECK(search_conservative(make_snowflake({3, 3, 4}).graph(), 0, 0, tiny).status == SearchStatus::exhausted);
    std::atomic<bool> stop{true};
    SearchBudget cancelled;
    cancelled.cancel = &stop;
    CHECK(search_conservative(make_snowflake({3, 3, 3, 3}).graph(), 0, 1, cancelled).status ==
          SearchStatus::exhausted);
    SearchMeter m(tiny);
    int ticks = 0;
    while (m.tick()) ++ticks;
    CHECK(ticks == 10);
    CHECK(m.stopped());
    CHECK(to_string(SearchStatus::exhausted) == "exhausted");
}

TEST_CASE("Skolem search") {
    CHECK(search_skolem(5, 0).status == SearchStatus::found);
    CHECK(search_skolem(6, 0).status == SearchStatus::none);
    auto r = search_skolem(6, 1);
    CHECK(r.status == SearchStatus::found);
    REQUIRE(r.witness);
    CHECK(verify_pairing(*r.witness).pass);
    auto big = search_skolem(60, 0);
    REQUIRE(big.witness);
    CHECK(verify_pairing(*big.witness).pass);
    CHECK(search_skolem(59, 0).status == SearchStatus::none);
    CHECK(search_skolem(59, 0).nodes <= 1);
}

TEST_CASE("sign search") {
    auto r = search_signs({{1}, {2}, {3}, {4}}, 2);
    REQUIRE(r.witness);
    CHECK(*r.witness == std::vector<Label>{1, 2, 3, -4});
    r = search_signs(std::vector<std::vector<Label>>(6, {1}), 0);
    REQUIRE(r.witness);
    CHECK(*r.witness == std::vector<Label>{1, -1, 1, -1, 1, -1});
    CHECK(search_signs({{1}, {2}}, 0).status == SearchStatus::none);
    CHECK(search_signs({{1, 2}, {4}}, 0).status == SearchStatus::none);
    r = search_signs({{1, 3}, {4}}, -1);
    REQUIRE(r.witness);
    CHECK(*r.witness == std::vector<Label>{3, -4});
}

TEST_CASE("sign search on the six-block system") {
    SkolemPairing p{6, 1, {{10, 11}, {2, 4}, {6, 9}, {1, 5}, {3, 8}, {7, 13}}};
    SkolemSystem S = system_from_pairing(p, 0, {3, 1, 4, 0, 2, 5});
    std::vector<std::vector<Label>> cand;
    for (const auto& b : S.blocks) {
        std::vector<Label> m;
        for (Label x : b) m.push_back(std::abs(x));
        std::sort(m.begin(), m.end());
        cand.push_back(m);
    }
    auto r = search_signs(cand, 0);
    REQUIRE(r.witness);
    CHECK(*r.witness == std::vector<Label>{4, -2, -5, 1, 15, -13});
    CHECK(verify_zero_sum(apply_transversal(S, *r.witness)).pass);
    CHECK(verify_zero_sum(apply_transversal(S, {4, -2, 5, -16, 3, 6})).pass);
}

}
