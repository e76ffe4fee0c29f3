#include "nestlab/skolem.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace nestlab {

namespace {

Label absl(Label x) { return x < 0 ? -x : x; }

std::vector<Label> abs_block(const Block& b) {
    std::vector<Label> out;
    for (Label x : b) out.push_back(absl(x));
    std::sort(out.begin(), out.end());
    return out;
}

bool adjacent(const Block& a, const Block& b, Label gap) {
    for (Label x : a)
        for (Label y : b)
            if (absl(absl(x) - absl(y)) == gap) return true;
    return false;
}

}  // namespace

int SkolemSystem::size() const {
    int m = 0;
    for (const auto& b : blocks) m += static_cast<int>(b.size());
    return m;
}

bool skolem_exists(int n, int t) {
    if (n < 1 || (t != 0 && t != 1)) return false;
    int r = n % 4;
    return r == (t + 1) % 4 || r == (4 - t) % 4;
}

VerifierReport verify_pairing(const SkolemPairing& p) {
    VerifierReport rep;
    if (p.t != 0 && p.t != 1) rep.fail(Condition::pairing, "t must be 0 or 1", p.t);
    if (static_cast<int>(p.pairs.size()) != p.n) {
        rep.fail(Condition::pairing, "expected " + std::to_string(p.n) + " pairs", static_cast<long long>(p.pairs.size()));
        return rep;
    }
    std::vector<int> expected;
    for (int x = 1; x <= 2 * p.n - 1; ++x) expected.push_back(x);
    expected.push_back(2 * p.n + p.t);
    std::vector<int> seen;
    for (int i = 0; i < p.n; ++i) {
        auto [a, b] = p.pairs[i];
        if (!(a < b) || b - a != i + 1)
            rep.fail(Condition::pairing, "pair " + std::to_string(i + 1) + " has difference " + std::to_string(b - a),
                     i + 1);
        seen.push_back(a);
        seen.push_back(b);
    }
    std::sort(seen.begin(), seen.end());
    for (size_t i = 1; i < seen.size(); ++i)
        if (seen[i] == seen[i - 1]) rep.fail(Condition::injectivity, "position used twice", seen[i]);
    if (seen != expected) rep.fail(Condition::label_set, "positions do not cover [1,2n-1] u {2n+t}");
    return rep;
}

SkolemPairing table1_pairing(int s) {
    if (s < 2) throw std::invalid_argument("table1_pairing needs s >= 2");
    std::vector<std::pair<int, int>> raw;
    for (int r = 1; r <= 2 * s; ++r) raw.push_back({r, 4 * s - r + 2});
    for (int r = 1; r <= s - 1; ++r) raw.push_back({4 * s + r + 3, 8 * s - r + 4});
    for (int r = 1; r <= s - 1; ++r) raw.push_back({5 * s + r + 2, 7 * s - r + 3});
    raw.push_back({2 * s + 1, 6 * s + 2});
    raw.push_back({4 * s + 2, 6 * s + 3});
    raw.push_back({4 * s + 3, 8 * s + 5});
    raw.push_back({7 * s + 3, 7 * s + 4});
    SkolemPairing p;
    p.n = 4 * s + 2;
    p.t = 1;
    p.pairs.assign(p.n, {0, 0});
    for (auto [a, b] : raw) {
        int d = b - a;
        if (d < 1 || d > p.n || p.pairs[d - 1].first != 0) throw std::logic_error("table rows collide");
        p.pairs[d - 1] = {a, b};
    }
    return p;
}

SkolemPairing order6_pairing() {
    SkolemPairing p;
    p.n = 6;
    p.t = 1;
    p.pairs = {{10, 11}, {2, 4}, {6, 9}, {1, 5}, {3, 8}, {7, 13}};
    return p;
}

std::vector<int> order6_block_order() { return {3, 1, 4, 0, 2, 5}; }

std::optional<SkolemPairing> skolem_pairing(int n, int t, const SearchBudget& budget) {
    if (!skolem_exists(n, t)) return std::nullopt;
    if (t == 1 && n % 4 == 2 && n >= 10) return table1_pairing((n - 2) / 4);
    auto res = search_skolem(n, t, budget);
    if (res.status == SearchStatus::exhausted)
        throw std::runtime_error("Skolem search for n = " + std::to_string(n) + " ran out of budget");
    if (!res.witness) throw std::logic_error("Skolem search found nothing where a pairing exists");
    return res.witness;
}

SkolemSystem system_from_pairing(const SkolemPairing& p, Label k, const std::vector<int>& order) {
    std::vector<int> idx = order;
    if (idx.empty()) {
        idx.resize(p.n);
        std::iota(idx.begin(), idx.end(), 0);
    }
    if (static_cast<int>(idx.size()) != p.n) throw std::invalid_argument("block order has the wrong length");
    SkolemSystem S;
    S.k = k;
    S.t = p.t;
    S.r = p.n;
    for (int i : idx) {
        auto [a, b] = p.pairs.at(i);
        S.blocks.push_back({-static_cast<Label>(b - a), -(a + p.n + k), b + p.n + k});
    }
    return S;
}

VerifierReport verify_system(const SkolemSystem& S) {
    VerifierReport rep;
    std::vector<Label> all;
    for (int i = 0; i < S.order(); ++i) {
        const auto& b = S.blocks[i];
        if (b.size() < 3) rep.fail(Condition::block_size, "block " + std::to_string(i + 1) + " has fewer than 3 elements", i + 1);
        if (std::accumulate(b.begin(), b.end(), Label{0}) != 0)
            rep.fail(Condition::block_sum, "block " + std::to_string(i + 1) + " does not sum to zero", i + 1);
        for (Label x : b) {
            if (x == 0) rep.fail(Condition::label_set, "zero element in block " + std::to_string(i + 1), i + 1);
            all.push_back(absl(x));
        }
    }
    std::sort(all.begin(), all.end());
    for (size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1]) rep.fail(Condition::injectivity, "value appears twice", all[i]);
    if (S.t != 0 && S.t != 1) rep.fail(Condition::label_set, "t must be 0 or 1", S.t);
    if (!rep.pass) return rep;
    if (gapped_label_set(S.size(), S.r, S.k, S.t) == all) {
        rep.r = S.r;
    } else if (auto r = recover_r(all, S.k, S.t)) {
        rep.r = r;
        rep.notes.push_back("stored r = " + std::to_string(S.r) + " but labels fit r = " + std::to_string(*r));
    } else {
        rep.fail(Condition::label_set, "absolute values do not partition [1,r] u [r+1+k, M+k-1] u {M+k+t}");
    }
    return rep;
}

VerifierReport verify_r_order(const SkolemSystem& S) {
    VerifierReport rep = verify_system(S);
    for (int i = 0; i + 1 < S.order(); ++i)
        if (!adjacent(S.blocks[i], S.blocks[i + 1], 1))
            rep.fail(Condition::order, "blocks " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                           " share no values one apart", i + 1);
    if (S.order() > 0) {
        auto last = abs_block(S.blocks.back());
        if (!std::binary_search(last.begin(), last.end(), S.top()))
            rep.fail(Condition::order, "last block misses the top label", S.top());
    }
    return rep;
}

VerifierReport verify_r_prime_order(const SkolemSystem& S, int q) {
    VerifierReport rep = verify_r_order(S);
    if (q < 1 || q % 2 == 0 || q >= S.order()) {
        rep.fail(Condition::order, "q must be odd and below n", q);
        return rep;
    }
    if (!adjacent(S.blocks[q - 1], S.blocks[q], 2))
        rep.fail(Condition::order, "blocks q and q+1 share no values two apart", q);
    return rep;
}

VerifierReport verify_zero_sum(const ZeroSumSystem& Z) {
    VerifierReport rep = verify_system(Z.system);
    if (static_cast<int>(Z.distinguished.size()) != Z.system.order()) {
        rep.fail(Condition::distinguished, "need one distinguished element per block",
                 static_cast<long long>(Z.distinguished.size()));
        return rep;
    }
    Label total = 0;
    for (int i = 0; i < Z.system.order(); ++i) {
        const auto& b = Z.system.blocks[i];
        if (std::find(b.begin(), b.end(), Z.distinguished[i]) == b.end())
            rep.fail(Condition::distinguished, "distinguished element not in block " + std::to_string(i + 1), i + 1);
        total += Z.distinguished[i];
    }
    if (total != 0) rep.fail(Condition::distinguished, "distinguished elements sum to " + std::to_string(total), total);
    return rep;
}

SkolemSystem negate_block(const SkolemSystem& S, int i) {
    if (i < 0 || i >= S.order()) throw std::out_of_range("block index " + std::to_string(i) + " out of range");
    SkolemSystem out = S;
    for (Label& x : out.blocks[i]) x = -x;
    return out;
}

OrderedSystem order_r_prime(const SkolemSystem& S, int s) {
    if (s < 2) throw std::invalid_argument("order_r_prime needs s >= 2");
    const int n = 4 * s + 2;
    if (S.order() != n) throw std::invalid_argument("system does not come from table1_pairing(s)");
    std::map<std::pair<Label, Label>, int> where;
    for (int i = 0; i < n; ++i) {
        const auto& b = S.blocks[i];
        if (b.size() != 3) throw std::invalid_argument("system does not come from table1_pairing(s)");
        auto v = abs_block(b);
        // sorted as {d, a+n+k, b+n+k}
        if (v[2] - v[1] != v[0] || v[0] > n) throw std::invalid_argument("system does not come from table1_pairing(s)");
        Label a = v[1] - n - S.k, bb = v[2] - n - S.k;
        where[{a, bb}] = i;
    }
    std::vector<std::pair<Label, Label>> seq;
    seq.push_back({4 * s + 2, 6 * s + 3});
    for (int r = 1; r <= 2 * s; ++r) seq.push_back({r, 4 * s - r + 2});
    seq.push_back({2 * s + 1, 6 * s + 2});
    for (int r = s - 1; r >= 1; --r) seq.push_back({5 * s + r + 2, 7 * s - r + 3});
    seq.push_back({7 * s + 3, 7 * s + 4});
    // s even: (5s+3, 7s+2) then (7s+3, 7s+4); s odd: (7s+3, 7s+4) then (5s+2, 7s+5)
    const int q = s % 2 == 0 ? 3 * s + 1 : 3 * s + 2;
    for (int r = s - 1; r >= 1; --r) seq.push_back({4 * s + r + 3, 8 * s - r + 4});
    seq.push_back({4 * s + 3, 8 * s + 5});
    OrderedSystem out;
    out.system = S;
    out.system.blocks.clear();
    for (auto key : seq) {
        auto it = where.find(key);
        if (it == where.end()) throw std::invalid_argument("system does not come from table1_pairing(s)");
        out.system.blocks.push_back(S.blocks[it->second]);
    }
    out.q = q;
    out.d = n + 7 * s + (s % 2 == 0 ? 2 : 3) + S.k;
    out.d_prime = out.d + 2;
    return out;
}

std::optional<SkolemSystem> order_r(const SkolemSystem& S, const SearchBudget& budget) {
    const int n = S.order();
    if (n > 14) throw std::runtime_error("R-order search is limited to n <= 14");
    if (n == 0) return std::nullopt;
    SearchMeter meter(budget);
    int last = -1;
    for (int i = 0; i < n; ++i) {
        auto v = abs_block(S.blocks[i]);
        if (std::binary_search(v.begin(), v.end(), S.top())) last = i;
    }
    if (last < 0) return std::nullopt;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[i][j] = i != j && adjacent(S.blocks[i], S.blocks[j], 1);
    // reach[mask][v]: a path through exactly mask starting at `last` and ending at v exists.
    const int full = (1 << n) - 1;
    std::vector<std::vector<char>> reach(1 << n, std::vector<char>(n, 0));
    reach[1 << last][last] = 1;
    for (int mask = 1; mask <= full; ++mask)
        for (int v = 0; v < n; ++v) {
            if (!reach[mask][v]) continue;
            if (!meter.tick()) throw std::runtime_error("R-order search ran out of budget");
            for (int w = 0; w < n; ++w)
                if (!(mask >> w & 1) && adj[v][w]) reach[mask | 1 << w][w] = 1;
        }
    int end = -1;
    for (int v = 0; v < n && end < 0; ++v)
        if (reach[full][v]) end = v;
    if (end < 0) return std::nullopt;
    std::vector<int> path{end};
    int mask = full, v = end;
    while (mask != (1 << last)) {
        int prev = -1;
        for (int u = 0; u < n && prev < 0; ++u)
            if (u != v && (mask >> u & 1) && adj[u][v] && reach[mask ^ (1 << v)][u]) prev = u;
        mask ^= 1 << v;
        v = prev;
        path.push_back(v);
    }
    // path runs from the first block to `last`
    SkolemSystem out = S;
    out.blocks.clear();
    for (int i : path) out.blocks.push_back(S.blocks[i]);
    return out;
}

ZeroSumSystem apply_transversal(const SkolemSystem& S, const std::vector<Label>& picks) {
    if (static_cast<int>(picks.size()) != S.order()) throw std::invalid_argument("one pick per block is required");
    ZeroSumSystem Z{S, picks};
    for (int i = 0; i < S.order(); ++i) {
        auto& b = Z.system.blocks[i];
        if (std::find(b.begin(), b.end(), picks[i]) != b.end()) continue;
        if (std::find(b.begin(), b.end(), -picks[i]) == b.end())
            throw std::invalid_argument("pick " + std::to_string(picks[i]) + " is not in block " + std::to_string(i + 1));
        for (Label& x : b) x = -x;
    }
    return Z;
}

namespace {

void check_congruences(int n, int M, int t) {
    if (t != 0 && t != 1) throw std::domain_error("t must be 0 or 1");
    int m = M % 4;
    if (m != t && m != 3 - t)
        throw std::domain_error("M = " + std::to_string(M) + " violates M = t, 3-t (mod 4) for t = " + std::to_string(t));
    if (!skolem_exists(n, t) && M == 3 * n)
        throw std::domain_error("n = " + std::to_string(n) + " violates n = t+1, -t (mod 4) for t = " +
                                std::to_string(t));
}

std::vector<std::vector<Label>> block_magnitudes(const SkolemSystem& S) {
    std::vector<std::vector<Label>> c;
    for (const auto& b : S.blocks) c.push_back(abs_block(b));
    return c;
}

ZeroSumSystem signed_transversal(const SkolemSystem& S, const std::vector<std::vector<Label>>& cand,
                                 const SearchBudget& budget) {
    auto res = search_signs(cand, 0, budget);
    if (res.status == SearchStatus::exhausted) throw std::runtime_error("sign search ran out of budget");
    if (!res.witness) throw std::runtime_error("no zero-sum transversal exists for this system");
    return apply_transversal(S, *res.witness);
}

}  // namespace

ZeroSumSystem zero_sum_system(int n, Label k, int t, const SearchBudget& budget) {
    if (n < 3) throw std::domain_error("zero_sum_system needs n >= 3");
    if (k < 0) throw std::domain_error("k must be non-negative");
    check_congruences(n, 3 * n, t);
    ZeroSumSystem Z;
    if (n % 4 == 0 || n % 4 == 3) {
        SkolemSystem S = system_from_pairing(*skolem_pairing(n, t, budget), k);
        std::vector<std::vector<Label>> cand;
        for (const auto& b : S.blocks) cand.push_back({absl(b[0])});
        Z = signed_transversal(S, cand, budget);
    } else if (n % 4 == 2 && n >= 10) {
        int s = (n - 2) / 4;
        OrderedSystem O = order_r_prime(system_from_pairing(table1_pairing(s), k), s);
        const SkolemSystem& S = O.system;
        std::vector<Label> lo(n / 2), hi(n / 2);  // witnesses of pair j, lo from block 2j, hi from 2j+1
        std::vector<std::vector<Label>> gaps;
        for (int j = 0; j < n / 2; ++j) {
            const auto& A = S.blocks[2 * j];
            const auto& B = S.blocks[2 * j + 1];
            Label gap = 2 * j + 1 == O.q ? 2 : 1;
            bool found = false;
            for (Label x : abs_block(A)) {
                for (Label y : abs_block(B))
                    if (absl(x - y) == gap) {
                        lo[j] = x;
                        hi[j] = y;
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) throw std::logic_error("R'-order witness missing");
            gaps.push_back({gap});
        }
        auto res = search_signs(gaps, 0, budget);
        if (!res.witness) throw std::runtime_error("sign search over R'-order witnesses failed");
        std::vector<Label> picks;
        for (int j = 0; j < n / 2; ++j) {
            // contribution sigma * |x - y| from the pair (sigma x... ) chosen as -x, +y or +x, -y
            Label want = (*res.witness)[j];
            Label diff = hi[j] - lo[j];
            int sigma = (want > 0) == (diff > 0) ? 1 : -1;
            picks.push_back(-sigma * lo[j]);
            picks.push_back(sigma * hi[j]);
        }
        Z = apply_transversal(S, picks);
    } else if (n == 6) {
        SkolemSystem S = system_from_pairing(order6_pairing(), k, order6_block_order());
        Z = signed_transversal(S, block_magnitudes(S), budget);
    } else {
        SkolemSystem S = system_from_pairing(*skolem_pairing(n, t, budget), k);
        Z = signed_transversal(S, block_magnitudes(S), budget);
    }
    if (!verify_zero_sum(Z).pass) throw std::logic_error("zero-sum system failed verification");
    return Z;
}

namespace {

// Enumerates (3 n1, 5 n2; k; t)-systems with one of 1..n per block; stops when accept returns true.
bool enumerate_35(int n1, int n2, Label k, int t, SearchMeter& meter,
                  const std::function<bool(const SkolemSystem&)>& accept) {
    const int n = n1 + n2;
    const int M = 3 * n1 + 5 * n2;
    std::vector<Label> large;
    for (Label x : gapped_label_set(M, n, k, t))
        if (x > n) large.push_back(x);
    std::sort(large.rbegin(), large.rend());
    std::vector<int> cap(n);
    for (int i = 0; i < n; ++i) cap[i] = i < n1 ? 2 : 4;
    std::vector<Block> blocks(n);
    std::vector<Label> partial(n, 0);
    std::vector<char> small_used(n + 1, 0);
    std::vector<Label> suffix(large.size() + 1, 0);
    for (size_t i = large.size(); i-- > 0;) suffix[i] = suffix[i + 1] + large[i];
    bool done = false;

    std::function<void(size_t)> dfs = [&](size_t i) {
        if (done || !meter.tick()) return;
        if (i == large.size()) {
            SkolemSystem S;
            S.k = k;
            S.t = t;
            S.r = n;
            S.blocks = blocks;
            done = accept(S);
            return;
        }
        const Label x = large[i];
        bool tried_empty3 = false, tried_empty5 = false;
        for (int j = 0; j < n && !done; ++j) {
            int need = j < n1 ? 2 : 4;
            int have = static_cast<int>(blocks[j].size());
            if (have >= need) continue;
            if (have == 0) {
                bool& flag = j < n1 ? tried_empty3 : tried_empty5;
                if (flag) continue;
                flag = true;
            }
            for (int sgn : {1, -1}) {
                if (have == 0 && sgn < 0) break;
                Label p = partial[j] + sgn * x;
                int left = need - have - 1;
                Label small = absl(p);
                if (left == 0) {
                    if (small < 1 || small > n || small_used[small]) continue;
                } else {
                    // the remaining large labels are at most large[i+1], ... so they cannot cancel more than this
                    Label reach = 0;
                    for (int c = 0; c < left && i + 1 + c < large.size(); ++c) reach += large[i + 1 + c];
                    if (small > reach + n) continue;
                }
                blocks[j].push_back(sgn * x);
                partial[j] = p;
                if (left == 0) {
                    small_used[small] = 1;
                    blocks[j].push_back(-p);
                }
                dfs(i + 1);
                if (left == 0) {
                    blocks[j].pop_back();
                    small_used[small] = 0;
                }
                blocks[j].pop_back();
                partial[j] -= sgn * x;
                if (done || meter.stopped()) return;
            }
        }
    };
    dfs(0);
    return done;
}

}  // namespace

SkolemSystem system_35(int n1, int n2, Label k, int t, const SearchBudget& budget) {
    if (n1 < 0 || n2 < 0 || n1 + n2 < 1) throw std::domain_error("need at least one block");
    if (k < 0) throw std::domain_error("k must be non-negative");
    const int n = n1 + n2, M = 3 * n1 + 5 * n2;
    check_congruences(n, M, t);
    if (n2 == 0) {
        auto p = skolem_pairing(n, t, budget);
        if (!p) throw std::domain_error("no Skolem pairing of order " + std::to_string(n));
        return system_from_pairing(*p, k);
    }
    SearchMeter meter(budget);
    std::optional<SkolemSystem> found;
    enumerate_35(n1, n2, k, t, meter, [&](const SkolemSystem& S) {
        found = S;
        return true;
    });
    if (!found) {
        if (meter.stopped()) throw std::runtime_error("(3,5)-system search ran out of budget");
        throw std::runtime_error("no (3,5)-system with one small label per block");
    }
    if (!verify_system(*found).pass) throw std::logic_error("(3,5)-system failed verification");
    return *found;
}

ZeroSumSystem zero_sum_system_35(int n1, int n2, Label k, int t, const SearchBudget& budget) {
    if (n2 == 0 && n1 >= 3) return zero_sum_system(n1, k, t, budget);
    if (n1 < 0 || n2 < 0 || n1 + n2 < 1) throw std::domain_error("need at least one block");
    const int n = n1 + n2, M = 3 * n1 + 5 * n2;
    check_congruences(n, M, t);
    SearchMeter meter(budget);
    std::optional<ZeroSumSystem> found;
    auto accept = [&](const SkolemSystem& S) {
        SearchBudget inner = budget;
        inner.max_nodes = 200000;
        auto res = search_signs(block_magnitudes(S), 0, inner);
        if (!res.witness) return false;
        found = apply_transversal(S, *res.witness);
        return true;
    };
    if (n2 == 0) {
        auto p = skolem_pairing(n, t, budget);
        if (p) accept(system_from_pairing(*p, k));
    } else {
        enumerate_35(n1, n2, k, t, meter, accept);
    }
    if (!found) {
        if (meter.stopped()) throw std::runtime_error("zero-sum (3,5)-system search ran out of budget");
        throw std::runtime_error("no zero-sum (3,5)-system found");
    }
    if (!verify_zero_sum(*found).pass) throw std::logic_error("zero-sum (3,5)-system failed verification");
    return *found;
}

std::optional<Block> zero_sum_signing(std::vector<Label> magnitudes) {
    for (Label& x : magnitudes) x = absl(x);
    std::sort(magnitudes.rbegin(), magnitudes.rend());
    const size_t n = magnitudes.size();
    if (n == 0) return Block{};
    Label total = std::accumulate(magnitudes.begin(), magnitudes.end(), Label{0});
    if (total % 2) return std::nullopt;
    std::vector<Label> suffix(n + 1, 0);
    for (size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + magnitudes[i];
    Block out(n);
    std::function<bool(size_t, Label)> dfs = [&](size_t i, Label s) {
        if (i == n) return s == 0;
        if (absl(s) > suffix[i]) return false;
        for (int sgn : {1, -1}) {
            if (i == 0 && sgn < 0) break;
            out[i] = sgn * magnitudes[i];
            if (dfs(i + 1, s + out[i])) return true;
        }
        return false;
    };
    if (!dfs(0, 0)) return std::nullopt;
    return out;
}

}  // namespace nestlab
