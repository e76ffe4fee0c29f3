#include "nestlab/search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "nestlab/skolem.hpp"

namespace nestlab {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        default: return "exhausted";
    }
}

SearchMeter::SearchMeter(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

bool SearchMeter::tick() {
    if (stopped_) return false;
    ++nodes_;
    if (nodes_ > budget_.max_nodes) stopped_ = true;
    if ((nodes_ & 1023) == 0) {
        if (elapsed() > budget_.max_seconds) stopped_ = true;
        if (budget_.cancel && budget_.cancel->load(std::memory_order_relaxed)) stopped_ = true;
    }
    return !stopped_;
}

double SearchMeter::elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

namespace {

template <class T>
SearchResult<T> finish(const SearchMeter& meter, std::optional<T> witness) {
    SearchResult<T> r;
    r.nodes = meter.nodes();
    r.seconds = meter.elapsed();
    if (witness) {
        r.status = SearchStatus::found;
        r.witness = std::move(witness);
    } else {
        r.status = meter.stopped() ? SearchStatus::exhausted : SearchStatus::none;
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------- graceful

SearchResult<VertexLabeling> search_graceful(const Graph& g, int t, const SearchBudget& budget) {
    SearchMeter meter(budget);
    const int M = g.size(), n = g.vertices;
    const Label top = M + t;
    std::optional<VertexLabeling> found;
    if (M == 0) {
        VertexLabeling f;
        for (int v = 0; v < n; ++v) f.f.push_back(v);
        f.t = t;
        if (verify_graceful(g, f, t).pass) found = f;
        return finish(meter, found);
    }
    auto allowed = [&](Label x) { return (x >= 0 && x <= M - 1) || x == top || (t == 0 && x == M); };
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<Label> f(n, -1);
    std::vector<char> value_used(top + 1, 0), diff_used(top + 1, 0);
    int assigned = 0;
    bool done = false;

    std::function<void()> dfs = [&]() {
        if (done || !meter.tick()) return;
        if (assigned == n) {
            done = true;
            found = VertexLabeling{f, t};
            return;
        }
        int best = -1, best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (f[v] >= 0) continue;
            int score = 0;
            for (int w : adj[v]) score += f[w] >= 0;
            if (score > best_score) {
                best = v;
                best_score = score;
            }
        }
        std::vector<Label> diffs;
        for (Label x = 0; x <= top && !done; ++x) {
            if (!allowed(x) || value_used[x]) continue;
            diffs.clear();
            bool ok = true;
            for (int w : adj[best]) {
                if (f[w] < 0) continue;
                Label d = x > f[w] ? x - f[w] : f[w] - x;
                if (d == 0 || !allowed(d) || (t == 1 && d == M) || diff_used[d] ||
                    std::find(diffs.begin(), diffs.end(), d) != diffs.end()) {
                    ok = false;
                    break;
                }
                diffs.push_back(d);
            }
            if (!ok) continue;
            f[best] = x;
            value_used[x] = 1;
            for (Label d : diffs) diff_used[d] = 1;
            ++assigned;
            dfs();
            --assigned;
            for (Label d : diffs) diff_used[d] = 0;
            value_used[x] = 0;
            f[best] = -1;
            if (meter.stopped()) return;
        }
    };

    for (int e = 0; e < M && !done && !meter.stopped(); ++e) {
        auto [u, v] = g.edges[e];
        for (int flip = 0; flip < 2 && !done && !meter.stopped(); ++flip) {
            if (flip == 1 && t == 0 && budget.symmetry) break;
            int a = flip ? v : u, b = flip ? u : v;
            f[a] = 0;
            f[b] = top;
            value_used[0] = value_used[top] = 1;
            diff_used[top] = 1;
            assigned = 2;
            dfs();
            diff_used[top] = 0;
            value_used[0] = value_used[top] = 0;
            f[a] = f[b] = -1;
        }
    }
    return finish(meter, found);
}

// ------------------------------------------------------------ conservative

namespace {

struct ConservativeSearch {
    const Graph& g;
    std::vector<Label> labels;  // descending
    std::vector<Label> prefix;
    SearchMeter& meter;
    bool symmetry;
    std::vector<int> deg;
    std::vector<char> constrained;
    std::vector<int> pendant_at;               // edge -> internal endpoint of a pendant edge, or -1
    std::vector<std::vector<int>> pendant_of;  // vertex -> its pendant edges in order
    std::vector<int> pendant_next;
    std::vector<int> rem;
    std::vector<Label> sum;
    std::vector<int> tail, head;
    std::vector<Label> label_of;
    bool done = false;

    ConservativeSearch(const Graph& graph, std::vector<Label> ls, SearchMeter& m, bool sym)
        : g(graph), labels(std::move(ls)), meter(m), symmetry(sym) {
        std::sort(labels.rbegin(), labels.rend());
        prefix.assign(labels.size() + 1, 0);
        for (size_t i = 0; i < labels.size(); ++i) prefix[i + 1] = prefix[i] + labels[i];
        deg = g.degrees();
        constrained.assign(g.vertices, 0);
        for (int v = 0; v < g.vertices; ++v) constrained[v] = deg[v] >= 3;
        pendant_at.assign(g.size(), -1);
        pendant_of.assign(g.vertices, {});
        for (int e = 0; e < g.size(); ++e) {
            auto [u, v] = g.edges[e];
            int w = -1;
            if (deg[u] == 1 && deg[v] > 1) w = v;
            if (deg[v] == 1 && deg[u] > 1) w = u;
            if (w >= 0 && symmetry) {
                pendant_at[e] = w;
                pendant_of[w].push_back(e);
            }
        }
        pendant_next.assign(g.vertices, 0);
        rem = deg;
        sum.assign(g.vertices, 0);
        tail.assign(g.size(), -1);
        head.assign(g.size(), -1);
        label_of.assign(g.size(), 0);
    }

    bool feasible(int v, size_t i) const {
        if (!constrained[v]) return true;
        if (rem[v] == 0) return sum[v] == 0;
        size_t hi = std::min(labels.size(), i + 1 + static_cast<size_t>(rem[v]));
        Label reach = prefix[hi] - prefix[i + 1];
        return (sum[v] >= 0 ? sum[v] : -sum[v]) <= reach;
    }

    int pressure(int e) const {
        auto [u, v] = g.edges[e];
        int p = 1 << 20;
        if (constrained[u]) p = std::min(p, rem[u]);
        if (constrained[v]) p = std::min(p, rem[v]);
        return p;
    }

    void dfs(size_t i) {
        if (done || !meter.tick()) return;
        if (i == labels.size()) {
            done = true;
            return;
        }
        std::vector<int> cand;
        for (int e = 0; e < g.size(); ++e) {
            if (tail[e] >= 0) continue;
            int w = pendant_at[e];
            if (w >= 0 && pendant_of[w][pendant_next[w]] != e) continue;
            cand.push_back(e);
        }
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return pressure(a) < pressure(b); });
        const Label x = labels[i];
        for (int e : cand) {
            auto [u, v] = g.edges[e];
            int orientations = 2;
            if (!constrained[u] && !constrained[v]) orientations = 1;
            if (i == 0 && symmetry) orientations = 1;
            for (int o = 0; o < orientations; ++o) {
                int a = o ? v : u, b = o ? u : v;
                tail[e] = a;
                head[e] = b;
                label_of[e] = x;
                sum[a] -= x;
                sum[b] += x;
                --rem[a];
                --rem[b];
                int w = pendant_at[e];
                if (w >= 0) ++pendant_next[w];
                if (feasible(a, i) && feasible(b, i)) dfs(i + 1);
                if (done) return;
                if (w >= 0) --pendant_next[w];
                ++rem[a];
                ++rem[b];
                sum[a] += x;
                sum[b] -= x;
                tail[e] = head[e] = -1;
                if (meter.stopped()) return;
            }
        }
    }

    OrientedLabeling result() const {
        OrientedLabeling L;
        L.vertices = g.vertices;
        for (int e = 0; e < g.size(); ++e) L.arcs.push_back({tail[e], head[e], label_of[e]});
        return L;
    }
};

}  // namespace

SearchResult<OrientedLabeling> search_conservative(const Graph& g, Label k, int t, const SearchBudget& budget,
                                                   std::optional<Label> r) {
    SearchMeter meter(budget);
    const int M = g.size();
    std::optional<OrientedLabeling> found;
    std::vector<Label> rs;
    if (r) rs.push_back(*r);
    else if (k == 0) rs.push_back(std::max(0, M - 1));
    else
        for (Label x = 1; x <= M - 1; ++x) rs.push_back(x);
    for (Label rv : rs) {
        ConservativeSearch s(g, gapped_label_set(M, rv, k, t), meter, budget.symmetry);
        s.dfs(0);
        if (s.done) {
            found = s.result();
            if (!verify_kt_conservative(g, *found, k, t).pass) throw std::logic_error("conservative search returned an invalid labeling");
            break;
        }
        if (meter.stopped()) break;
    }
    return finish(meter, found);
}

// ------------------------------------------------------------------ skolem

SearchResult<SkolemPairing> search_skolem(int n, int t, const SearchBudget& budget) {
    SearchMeter meter(budget);
    std::optional<SkolemPairing> found;
    if (n < 1 || (t != 0 && t != 1)) return finish(meter, found);
    const int top = 2 * n + t;
    std::vector<char> allowed(top + 1, 0), used(top + 1, 0), dused(n + 1, 0);
    for (int p = 1; p <= 2 * n - 1; ++p) allowed[p] = 1;
    allowed[top] = 1;
    // Each pair removes 2a+d from the position sum and d from the difference sum, so the
    // parity of their gap is invariant; an odd gap rules the order out.
    long long pos_sum = 0;
    for (int p = 1; p <= top; ++p)
        if (allowed[p]) pos_sum += p;
    long long diff_sum = static_cast<long long>(n) * (n + 1) / 2;
    std::vector<std::pair<int, int>> pairs(n);
    bool done = false;
    std::function<void(int, int)> dfs = [&](int b, int placed) {
        if (done || !meter.tick()) return;
        if (placed == n) {
            done = true;
            return;
        }
        while (!allowed[b] || used[b]) --b;
        for (int d = n; d >= 1; --d) {
            if (dused[d]) continue;
            int a = b - d;
            if (a < 1 || !allowed[a] || used[a]) continue;
            used[a] = used[b] = 1;
            dused[d] = 1;
            pairs[d - 1] = {a, b};
            dfs(b - 1, placed + 1);
            if (done) return;
            used[a] = used[b] = 0;
            dused[d] = 0;
            if (meter.stopped()) return;
        }
    };
    if ((pos_sum - diff_sum) % 2 == 0) dfs(top, 0);
    else meter.tick();
    if (done) found = SkolemPairing{n, t, pairs};
    return finish(meter, found);
}

// ------------------------------------------------------------------- signs

SearchResult<std::vector<Label>> search_signs(const std::vector<std::vector<Label>>& candidates, Label target,
                                              const SearchBudget& budget) {
    SearchMeter meter(budget);
    const size_t n = candidates.size();
    std::vector<std::vector<Label>> cand(n);
    for (size_t i = 0; i < n; ++i) {
        for (Label c : candidates[i]) cand[i].push_back(c < 0 ? -c : c);
        std::sort(cand[i].begin(), cand[i].end());
        cand[i].erase(std::unique(cand[i].begin(), cand[i].end()), cand[i].end());
    }
    std::vector<Label> reach(n + 1, 0);
    for (size_t i = n; i-- > 0;) reach[i] = reach[i + 1] + (cand[i].empty() ? 0 : cand[i].back());
    std::vector<Label> pick(n, 0);
    bool done = false;
    std::function<void(size_t, Label)> dfs = [&](size_t i, Label partial) {
        if (done || !meter.tick()) return;
        Label rest = target - partial;
        if (i == n) {
            done = rest == 0;
            return;
        }
        if ((rest >= 0 ? rest : -rest) > reach[i]) return;
        for (Label c : cand[i]) {
            int first = rest >= 0 ? 1 : -1;
            for (int sgn : {first, -first}) {
                pick[i] = sgn * c;
                dfs(i + 1, partial + pick[i]);
                if (done || meter.stopped()) return;
                if (c == 0) break;
            }
        }
    };
    dfs(0, 0);
    std::optional<std::vector<Label>> found;
    if (done) found = pick;
    return finish(meter, found);
}

}  // namespace nestlab
