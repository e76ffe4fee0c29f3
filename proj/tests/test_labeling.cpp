#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "nestlab/labeling.hpp"
#include "nestlab/nested.hpp"

using namespace nestlab;

namespace {

OrientedLabeling star_labeling(const std::vector<Label>& signed_labels) {
    OrientedLabeling L;
    L.vertices = 1 + static_cast<int>(signed_labels.size());
    for (size_t i = 0; i < signed_labels.size(); ++i) {
        int leaf = 1 + static_cast<int>(i);
        Label x = signed_labels[i];
        L.arcs.push_back(x > 0 ? Arc{leaf, 0, x} : Arc{0, leaf, -x});
    }
    return L;
}

// All injective labelings of the vertices into [0, M+t] whose differences hit the target set.
int count_graceful(const Graph& g, int t) {
    int M = g.size();
    std::vector<Label> pool(M + t + 1);
    std::iota(pool.begin(), pool.end(), 0);
    int hits = 0;
    std::vector<Label> f(g.vertices);
    std::vector<bool> used(pool.size(), false);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.vertices) {
            std::vector<Label> d;
            for (auto [a, b] : g.edges) d.push_back(std::abs(f[a] - f[b]));
            std::sort(d.begin(), d.end());
            std::vector<Label> want(M - 1);
            std::iota(want.begin(), want.end(), 1);
            want.push_back(M + t);
            if (d == want) ++hits;
            return;
        }
        for (size_t x = 0; x < pool.size(); ++x)
            if (!used[x]) {
                used[x] = true;
                f[v] = pool[x];
                self(self, v + 1);
                used[x] = false;
            }
    };
    rec(rec, 0);
    return hits;
}

}  // namespace

TEST_SUITE("labeling") {

TEST_CASE("vertex sums") {
    OrientedLabeling L = star_labeling({1, -2, -3, 4});
    CHECK(vertex_sum(L, 0) == 0);
    OrientedLabeling leaf{2, {{1, 0, 7}}};
    CHECK(vertex_sum(leaf, 0) == 7);
    OrientedLabeling away{2, {{0, 1, 5}}};
    CHECK(vertex_sum(away, 0) == -5);
    CHECK_THROWS_AS(vertex_sum(away, 2), std::out_of_range);
}

TEST_CASE("graceful verifier on small cycles") {
    CHECK(count_graceful(cycle_graph(4), 0) > 0);
    CHECK(verify_graceful(cycle_graph(4), {{0, 4, 1, 2}, 0}, 0).pass);
    // around the cycle 0,4,1,3 gives differences 4,3,2,3
    CHECK_FALSE(verify_graceful(cycle_graph(4), {{0, 4, 1, 3}, 0}, 0).pass);
    CHECK(count_graceful(cycle_graph(5), 0) == 0);
    CHECK(count_graceful(cycle_graph(5), 1) > 0);
    auto rep = verify_graceful(cycle_graph(5), {{0, 5, 1, 4, 2}, 0}, 0);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.notes.empty());
}

TEST_CASE("graceful verifier reports duplicates") {
    auto rep = verify_graceful(cycle_graph(4), {{0, 4, 0, 3}, 0}, 0);
    CHECK_FALSE(rep.pass);
    bool injectivity = false;
    for (const auto& v : rep.violations) injectivity |= v.condition == Condition::injectivity;
    CHECK(injectivity);
}

TEST_CASE("graceful verifier rejects labels outside [0, M+t]") {
    CHECK_FALSE(verify_graceful(cycle_graph(4), {{0, 5, 1, 3}, 0}, 0).pass);
    CHECK_FALSE(verify_graceful(cycle_graph(4), {{0, 4, 1}, 0}, 0).pass);
}

TEST_CASE("conservative verifier on stars") {
    OrientedLabeling L = star_labeling({1, -2, -3, 4});
    auto rep = verify_kt_conservative(star_graph(4), L, 0, 0);
    CHECK(rep.pass);
    REQUIRE(rep.r);
    // every orientation of [1,5] leaves an odd center sum
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<Label> v;
        for (int i = 0; i < 5; ++i) v.push_back((mask >> i & 1) ? i + 1 : -(i + 1));
        CHECK_FALSE(verify_kt_conservative(star_graph(5), star_labeling(v), 0, 0).pass);
    }
}

TEST_CASE("conservative verifier with a gap") {
    // labels [1,2] u [5,6] u {8}: M=5, r=2, k=2, t=1
    OrientedLabeling L = star_labeling({1, 2, 5, -8});
    L = star_labeling({1, 2, 5, 6, -8});
    CHECK_FALSE(verify_kt_conservative(L, 2, 1).pass);
    L = star_labeling({1, -2, 5, 6, -10});
    auto rep = verify_kt_conservative(L, 2, 0);
    CHECK_FALSE(rep.pass);
    L = star_labeling({-1, -2, 5, 6, -8});
    rep = verify_kt_conservative(L, 2, 1);
    CHECK(rep.pass);
    CHECK(rep.r == 2);
    CHECK(gapped_label_set(5, 2, 2, 1) == std::vector<Label>{1, 2, 5, 6, 8});
    CHECK(recover_r({8, 6, 5, 2, 1}, 2, 1) == 2);
    CHECK_FALSE(recover_r({1, 2, 3, 4}, 2, 0));
}

TEST_CASE("conservative verifier on a six-block system") {
    // Hubs (+4,-2,+5,-16,+3,+6) taken from blocks 1,3,5,6 negated.
    std::vector<std::vector<Label>> blocks = {{4, 7, -11}, {-2, -8, 10}, {5, 9, -14},
                                              {-16, -1, 17}, {3, 12, -15}, {6, 13, -19}};
    OrientedLabeling L;
    L.vertices = 1 + 6 + 12;
    int leaf = 7;
    for (int i = 0; i < 6; ++i) {
        int v = 1 + i;
        for (size_t j = 0; j < 3; ++j) {
            int other = j == 0 ? 0 : leaf++;
            Label x = blocks[i][j];
            L.arcs.push_back(x > 0 ? Arc{other, v, x} : Arc{v, other, -x});
        }
    }
    auto rep = verify_kt_conservative(L, 0, 1);
    CHECK(rep.pass);
    CHECK(rep.r == 17);
    CHECK(vertex_sum(L, 0) == 0);
    CHECK_FALSE(verify_kt_conservative(L, 0, 0).pass);
}

TEST_CASE("conservative verifier checks the graph") {
    OrientedLabeling L = star_labeling({1, -2, -3, 4});
    CHECK_FALSE(verify_kt_conservative(cycle_graph(4), L, 0, 0).pass);
    L.arcs[0].label = 2;
    auto rep = verify_kt_conservative(L, 0, 0);
    CHECK_FALSE(rep.pass);
    CHECK(rep.violations[0].condition == Condition::injectivity);
}

TEST_CASE("Eulerian verifier") {
    CHECK(verify_eulerian(star_labeling({1, -2, -3, 4})).pass);
    for (int mask = 0; mask < 8; ++mask)
        CHECK_FALSE(verify_eulerian(star_labeling({mask & 1 ? 1 : -1, mask & 2 ? 2 : -2, mask & 4 ? 3 : -3})).pass);
    CHECK(verify_eulerian(star_labeling({1, -3, -4, 5, 7, -6})).pass);
}

TEST_CASE("shifting labels") {
    OrientedLabeling L = star_labeling({1, -2, -3, 4});
    OrientedLabeling same = shift_labels(L, 0);
    for (int e = 0; e < 4; ++e) CHECK(same.arcs[e].label == L.arcs[e].label);
    OrientedLabeling S = shift_labels(L, 10);
    std::vector<Label> labels;
    for (const auto& a : S.arcs) labels.push_back(a.label);
    CHECK(labels == std::vector<Label>{11, 12, 13, 14});
    CHECK(vertex_sum(S, 0) == 0);
    OrientedLabeling six = star_labeling({1, 5, 7, -3, -4, -6});
    CHECK(vertex_sum(six, 0) == 0);
    CHECK(vertex_sum(shift_labels(six, 2), 0) == 0);
    CHECK_THROWS_AS(shift_labels(star_labeling({1, 2, -3}), 1), std::invalid_argument);
    CHECK_THROWS_AS(shift_labels(L, -1), std::invalid_argument);
}

TEST_CASE("reversing arcs negates sums") {
    OrientedLabeling L = star_labeling({1, 2, -4});
    auto s = vertex_sums(L);
    auto r = vertex_sums(reverse_arcs(L));
    for (size_t v = 0; v < s.size(); ++v) CHECK(r[v] == -s[v]);
}

TEST_CASE("semidual transport") {
    for (auto [m1, m2] : std::vector<std::pair<int, int>>{{4, 28}, {4, 29}, {4, 30}, {4, 31}, {3, 16}}) {
        NestedLabeling N = construct_nested(m1, m2);
        OrientedLabeling L = induce_semidual_labeling(N.graph, N.labeling);
        auto rep = verify_kt_conservative(semidual(N.graph).flake.graph(), L, 0, N.params.t);
        CHECK(rep.pass);
        std::vector<Label> labels;
        for (const auto& a : L.arcs) labels.push_back(a.label);
        std::sort(labels.begin(), labels.end());
        CHECK(labels == gapped_label_set(m1 + m2, m1 + m2 - 1, 0, N.params.t));
    }
    NestedLabeling N = construct_nested(3, 16);
    N.labeling.f[1] = N.labeling.f[2];
    CHECK_THROWS_AS(induce_semidual_labeling(N.graph, N.labeling), std::invalid_argument);
}

TEST_CASE("parity obstruction") {
    CHECK(parity_obstructed(cycle_graph(5)));
    CHECK(parity_obstructed(cycle_graph(6)));
    CHECK_FALSE(parity_obstructed(cycle_graph(7)));
    CHECK_FALSE(parity_obstructed(star_graph(5)));
}

}
