#include "nestlab/snowflake.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nestlab/skolem.hpp"

namespace nestlab {

namespace {

Label absl(Label x) { return x < 0 ? -x : x; }

Label total(const std::vector<Label>& v) { return std::accumulate(v.begin(), v.end(), Label{0}); }

void set_hub(StarValues& s, Label hub_value) {
    auto it = std::find_if(s.begin(), s.end(), [&](Label x) { return absl(x) == absl(hub_value); });
    if (it == s.end()) throw std::logic_error("hub label " + std::to_string(absl(hub_value)) + " is not in the star");
    std::iter_swap(s.begin(), it);
    if (s[0] != hub_value)
        for (Label& x : s) x = -x;
}

std::vector<int> sizes_of(const std::vector<StarValues>& stars) {
    std::vector<int> out;
    for (const auto& s : stars) out.push_back(static_cast<int>(s.size()));
    return out;
}

OrientedLabeling render(const std::vector<StarValues>& stars) {
    Snowflake flake = make_snowflake(sizes_of(stars));
    Graph g = flake.graph();
    OrientedLabeling L;
    L.vertices = g.vertices;
    int e = 0;
    for (const auto& s : stars)
        for (Label v : s) {
            auto [a, b] = g.edges[e++];  // a is z for the hub and the star vertex otherwise
            bool into_star = v > 0;
            int star = a == 0 ? b : a;
            int other = star == a ? b : a;
            if (into_star) L.arcs.push_back({other, star, absl(v)});
            else L.arcs.push_back({star, other, absl(v)});
        }
    return L;
}

Label center_sum(const std::vector<StarValues>& stars) {
    Label s = 0;
    for (const auto& st : stars) s -= st[0];
    return s;
}

std::vector<Label> abs_sorted(const StarValues& s) {
    std::vector<Label> out;
    for (Label x : s) out.push_back(absl(x));
    std::sort(out.begin(), out.end());
    return out;
}

StarValues split_or_throw(const std::vector<Label>& labels) {
    auto s = balanced_split(labels);
    if (!s) throw std::runtime_error("no balanced split for a star of size " + std::to_string(labels.size()));
    return *s;
}

std::vector<Label> range(Label a, Label b) {
    std::vector<Label> out;
    for (Label x = a; x <= b; ++x) out.push_back(x);
    return out;
}

std::vector<Label> concat(std::vector<Label> a, const std::vector<Label>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

struct HubPair {
    Label ell;
    Label h1;  // out of z, in the lower star
    Label h2;  // into z, in the upper star
};

std::vector<HubPair> pair_options(const StarValues& A, const StarValues& B) {
    auto a = abs_sorted(A), b = abs_sorted(B);
    std::vector<HubPair> out;
    for (Label ell : {1, 2}) {
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            if (std::binary_search(b.begin(), b.end(), *it + ell)) {
                out.push_back({ell, *it, *it + ell});
                break;
            }
    }
    return out;
}

void apply_pair(StarValues& A, StarValues& B, const HubPair& h, int sign) {
    set_hub(A, sign * h.h1);
    set_hub(B, -sign * h.h2);
}

// Picks one label per star as hub so that the center sum is target.
bool choose_hubs(std::vector<StarValues>& stars, const std::vector<std::vector<Label>>& cands, Label target,
                 const SearchBudget& budget) {
    auto res = search_signs(cands, target, budget);
    if (!res.witness) return false;
    for (size_t i = 0; i < stars.size(); ++i) set_hub(stars[i], -(*res.witness)[i]);
    return true;
}

std::vector<std::vector<Label>> all_labels(const std::vector<StarValues>& stars) {
    std::vector<std::vector<Label>> c;
    for (const auto& s : stars) c.push_back(abs_sorted(s));
    return c;
}

void require_verified(const OrientedLabeling& L, Label k, int t, const std::string& what) {
    auto rep = verify_kt_conservative(L, k, t);
    if (!rep.pass) throw std::logic_error(what + " failed verification: " + rep.summary());
}

int t_of(int M) { return (M % 4 == 0 || M % 4 == 3) ? 0 : 1; }

void check_mod4(int M, int t) {
    if (t != 0 && t != 1) throw std::domain_error("t must be 0 or 1");
    if (M % 4 != t && M % 4 != 3 - t)
        throw std::domain_error("M = " + std::to_string(M) + " violates M = t, 3-t (mod 4) for t = " + std::to_string(t));
}

// Stars of an even profile ordered with a chosen single star first (odd degree), then the
// stars of size 0 mod 4, then those of size 2 mod 4.
std::vector<int> even_order(const std::vector<int>& profile) {
    std::vector<int> zeros, twos, order;
    for (int i = 0; i < static_cast<int>(profile.size()); ++i) (profile[i] % 4 == 0 ? zeros : twos).push_back(i);
    if (profile.size() % 2 == 1) {
        auto& from = zeros.empty() ? twos : zeros;
        order.push_back(from.front());
        from.erase(from.begin());
    }
    order.insert(order.end(), zeros.begin(), zeros.end());
    order.insert(order.end(), twos.begin(), twos.end());
    return order;
}

std::vector<StarValues> unpermute(const std::vector<StarValues>& stars, const std::vector<int>& order) {
    std::vector<StarValues> out(stars.size());
    for (size_t j = 0; j < order.size(); ++j) out[order[j]] = stars[j];
    return out;
}

std::vector<StarValues> even_blocks(const std::vector<int>& profile, const SearchBudget& budget) {
    const int p = static_cast<int>(profile.size());
    const int M = std::accumulate(profile.begin(), profile.end(), 0);
    const int t = t_of(M);
    auto order = even_order(profile);
    std::vector<int> sizes;
    for (int i : order) sizes.push_back(profile[i]);
    auto chunks = chunk_partition(gapped_label_set(M, M - 1, 0, t), sizes);
    std::vector<StarValues> stars;
    for (const auto& c : chunks) stars.push_back(split_or_throw(c));

    const int first_pair = p % 2;
    std::vector<std::vector<HubPair>> opts;
    std::vector<std::vector<Label>> cands;
    if (first_pair) cands.push_back(abs_sorted(stars[0]));
    for (int j = first_pair; j + 1 < p; j += 2) {
        opts.push_back(pair_options(stars[j], stars[j + 1]));
        if (opts.back().empty()) throw std::runtime_error("no hub pair with difference 1 or 2");
        std::vector<Label> ells;
        for (const auto& h : opts.back()) ells.push_back(h.ell);
        cands.push_back(ells);
    }
    std::vector<Label> picks;
    if (p == 2) {
        picks = {opts[0][0].ell};
    } else {
        auto res = search_signs(cands, 0, budget);
        if (!res.witness) throw std::runtime_error("no hub signs cancel at the center");
        picks = *res.witness;
    }
    size_t c = 0;
    if (first_pair) set_hub(stars[0], -picks[c++]);
    for (int j = first_pair; j + 1 < p; j += 2, ++c) {
        const auto& o = opts[c - first_pair];
        auto h = *std::find_if(o.begin(), o.end(), [&](const HubPair& x) { return x.ell == absl(picks[c]); });
        apply_pair(stars[j], stars[j + 1], h, picks[c] > 0 ? 1 : -1);
    }
    return unpermute(stars, order);
}

BlockLabeling make_block(std::vector<StarValues> stars, std::vector<Label> labels, bool eulerian) {
    BlockLabeling b;
    b.flake = make_snowflake(sizes_of(stars));
    b.labeling = render(stars);
    b.center = 0;
    b.ell = center_sum(stars);
    std::sort(labels.begin(), labels.end());
    b.labels = std::move(labels);
    b.eulerian = eulerian;
    return b;
}

std::vector<StarValues> system_stars(const SkolemSystem& S) {
    std::vector<StarValues> stars;
    for (const auto& b : S.blocks) stars.push_back(b);
    return stars;
}

// Stars of the (3,5) odd part with hubs giving s(z) = target; candidates limited to [1,n] when small.
bool odd_hubs(std::vector<StarValues>& stars, int n, bool small, Label target, const SearchBudget& budget) {
    std::vector<std::vector<Label>> cands;
    for (const auto& s : stars) {
        std::vector<Label> c;
        for (Label x : abs_sorted(s))
            if (!small || x <= n) c.push_back(x);
        cands.push_back(c);
    }
    return choose_hubs(stars, cands, target, budget);
}

struct MixedLayout {
    Label k1 = 0;                 // k of the odd part
    int t1 = 0;                   // t of the odd part
    std::vector<Label> even_labels;
    std::vector<Label> s4;        // four labels of the appended 4-star, or empty
    std::vector<Label> window;    // candidate center sums of the odd part
    bool small_hubs = true;
};

MixedLayout mixed_layout(int n1, int n2, int n3, int n4, Label k) {
    const int n = n1 + n2, np = n3 + n4;
    const int M1 = 3 * n1 + 5 * n2, M2 = 6 * n3 + 4 * n4, M = M1 + M2;
    const int tp = t_of(M1);
    MixedLayout L;
    auto shape11 = [&]() {
        if (tp == 0) return concat(range(M1 + k + 1, M + k - 1), {M + k + 1});
        return concat({M1 + k}, range(M1 + k + 2, M + k));
    };
    if (np % 2 == 0) {
        L.window = {1, 2};
        if (n3 % 2 == 1) {
            L.k1 = k;
            L.t1 = tp;
            L.even_labels = shape11();
        } else {
            L.k1 = M2 + k;
            L.t1 = tp;
            L.even_labels = range(n + 1, M2 + n);
        }
        return L;
    }
    L.small_hubs = false;
    if (n3 % 2 == 1) {
        L.k1 = k;
        L.t1 = tp;
        L.even_labels = shape11();
    } else if (tp == 0) {
        L.k1 = k;
        L.t1 = 0;
        L.even_labels = range(M1 + k + 1, M + k);
    } else {
        L.k1 = M2 + k - 4;
        L.t1 = 1;
        L.even_labels = range(n + 1, M2 + n - 4);
        L.s4 = {M + k - 4, M + k - 2, M + k - 1, M + k + 1};
    }
    Label base = M1 + L.k1 + L.t1;
    if (np == 1) L.window = {base + 1, base + 2};
    else L.window = {base, base + 1, base + 2};
    return L;
}

// Returns the stars of C_{3 n1, 5 n2, 6 n3, 4 n4} in that order.
std::vector<StarValues> mixed_blocks(int n1, int n2, int n3, int n4, Label k, int t, const SearchBudget& budget) {
    const int n = n1 + n2, np = n3 + n4;
    const int M = 3 * n1 + 5 * n2 + 6 * n3 + 4 * n4;
    if (n + np < 3) throw std::domain_error("mixed minimum snowflake needs at least three stars");
    if (n < 1 || np < 1) throw std::domain_error("mixed minimum snowflake needs odd and even stars");
    if (k < 0) throw std::domain_error("k must be non-negative");
    check_mod4(M, t);
    MixedLayout L = mixed_layout(n1, n2, n3, n4, k);

    std::vector<StarValues> odd = system_stars(system_35(n1, n2, L.k1, L.t1, budget));

    // even part: 4-stars first, then 6-stars; the appended 4-star, if any, is the last 4-star
    std::vector<int> sizes;
    for (int i = 0; i < n4 - (L.s4.empty() ? 0 : 1); ++i) sizes.push_back(4);
    for (int i = 0; i < n3; ++i) sizes.push_back(6);
    std::vector<StarValues> even;
    for (const auto& c : chunk_partition(L.even_labels, sizes)) even.push_back(split_or_throw(c));
    if (!L.s4.empty()) even.insert(even.begin() + (n4 - 1), split_or_throw(L.s4));

    bool done = false;
    for (Label ell : L.window) {
        auto o = odd;
        auto e = even;
        if (!odd_hubs(o, n, L.small_hubs, ell, budget)) continue;
        if (!choose_hubs(e, all_labels(e), -ell, budget)) continue;
        odd = o;
        even = e;
        done = true;
        break;
    }
    if (!done) {
        std::vector<StarValues> all = odd;
        all.insert(all.end(), even.begin(), even.end());
        if (!choose_hubs(all, all_labels(all), 0, budget))
            throw std::runtime_error("no hub choice cancels at the center of the mixed snowflake");
        std::copy(all.begin(), all.begin() + n, odd.begin());
        std::copy(all.begin() + n, all.end(), even.begin());
    }
    std::vector<StarValues> out = odd;
    for (int i = 0; i < n3; ++i) out.push_back(even[n4 + i]);
    for (int i = 0; i < n4; ++i) out.push_back(even[i]);
    return out;
}

}  // namespace

std::vector<Label> variant_labels(int M, StarVariant v, Label x) {
    switch (v) {
        case StarVariant::phi: return range(x, M + x - 1);
        case StarVariant::phi1: return concat(range(x, M + x - 2), {M + x});
        case StarVariant::phi2: return concat({x}, range(x + 2, M + x));
        default: throw std::invalid_argument("variant has no single-star label set");
    }
}

std::optional<StarValues> balanced_split(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    const size_t n = labels.size();
    const Label sum = total(labels);
    if (n % 2 || sum % 2) return std::nullopt;
    const size_t want = n / 2;
    const Label half = sum / 2;
    std::vector<Label> prefix(n + 1, 0);
    for (size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + labels[i];
    std::vector<char> in(n, 0);
    std::function<bool(size_t, size_t, Label)> dfs = [&](size_t i, size_t cnt, Label s) {
        size_t need = want - cnt;
        if (need == 0) return s == half;
        if (n - i < need) return false;
        Label lo = prefix[i + need] - prefix[i], hi = prefix[n] - prefix[n - need];
        if (s + lo > half || s + hi < half) return false;
        in[i] = 1;
        if (dfs(i + 1, cnt + 1, s + labels[i])) return true;
        in[i] = 0;
        return dfs(i + 1, cnt, s);
    };
    if (!dfs(0, 0, 0)) return std::nullopt;
    StarValues out;
    for (size_t i = 0; i < n; ++i) out.push_back(in[i] ? labels[i] : -labels[i]);
    return out;
}

std::vector<std::vector<Label>> chunk_partition(std::vector<Label> labels, const std::vector<int>& sizes) {
    std::sort(labels.begin(), labels.end());
    if (static_cast<size_t>(std::accumulate(sizes.begin(), sizes.end(), 0)) != labels.size())
        throw std::invalid_argument("chunk sizes do not add up to the number of labels");
    std::vector<std::vector<Label>> chunks;
    size_t pos = 0;
    for (int s : sizes) {
        chunks.emplace_back(labels.begin() + pos, labels.begin() + pos + s);
        pos += s;
    }
    for (size_t j = 0; j + 1 < chunks.size(); ++j) {
        if (total(chunks[j]) % 2 == 0) continue;
        auto& a = chunks[j];
        auto& b = chunks[j + 1];
        Label x = a.back();
        auto it = std::find_if(b.begin(), b.end(), [&](Label y) { return (y - x) % 2 != 0; });
        if (it == b.end()) break;
        std::swap(a.back(), *it);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
    }
    for (const auto& c : chunks)
        if (total(c) % 2) throw std::runtime_error("label chunks cannot all be given an even sum");
    return chunks;
}

BlockLabeling star_eulerian(int M, StarVariant variant) {
    if (M < 2 || M % 2) throw std::invalid_argument("an Eulerian star needs even size");
    bool zero = M % 4 == 0;
    if (variant == StarVariant::phi3 || (variant == StarVariant::phi) != zero)
        throw std::invalid_argument("variant does not match M mod 4");
    auto labels = variant_labels(M, variant);
    StarValues s = split_or_throw(labels);
    BlockLabeling b;
    b.labeling.vertices = M + 1;
    for (int i = 0; i < M; ++i) {
        Label v = s[i];
        if (v > 0) b.labeling.arcs.push_back({i + 1, 0, v});
        else b.labeling.arcs.push_back({0, i + 1, -v});
    }
    b.center = 0;
    b.ell = vertex_sum(b.labeling, 0);
    b.labels = labels;
    b.eulerian = true;
    return b;
}

BlockLabeling two_star_center(int M1, int M2, Label ell, StarVariant variant) {
    if (M1 % 2 || M2 % 2 || M1 < 2 || M2 < 2) throw std::invalid_argument("both stars need even size");
    if (ell != 1 && ell != 2) throw std::invalid_argument("ell must be 1 or 2");
    const int M = M1 + M2;
    if (variant == StarVariant::phi3 || (variant == StarVariant::phi) != (M % 4 == 0))
        throw std::invalid_argument("variant does not match M mod 4");
    auto labels = variant_labels(M, variant);
    auto chunks = chunk_partition(labels, {M1, M2});
    StarValues A = split_or_throw(chunks[0]), B = split_or_throw(chunks[1]);
    auto opts = pair_options(A, B);
    auto it = std::find_if(opts.begin(), opts.end(), [&](const HubPair& h) { return h.ell == ell; });
    if (it == opts.end()) throw std::runtime_error("no hub pair realizes this center sum");
    apply_pair(A, B, *it, 1);
    return make_block({A, B}, labels, true);
}

OrientedLabeling even_snowflake(const std::vector<int>& profile) {
    if (profile.size() < 2) throw std::invalid_argument("even snowflake needs at least two stars");
    for (int n : profile)
        if (n % 2 || n < 4) throw std::invalid_argument("even snowflake needs even star sizes of at least 4");
    auto L = render(even_blocks(profile, {}));
    const int M = L.size();
    require_verified(L, 0, t_of(M), "even snowflake");
    if (profile.size() % 2 == 0 && !verify_eulerian(L).pass) throw std::logic_error("even snowflake is not Eulerian");
    return L;
}

BlockLabeling odd_center_small_sum(int n1, int n2, Label k, int t, const SearchBudget& budget) {
    const int n = n1 + n2, M = 3 * n1 + 5 * n2;
    check_mod4(M, t);
    auto stars = system_stars(system_35(n1, n2, k, t, budget));
    Label target = (n % 4 == 0 || n % 4 == 3) ? 2 : 1;
    if (!odd_hubs(stars, n, true, target, budget)) throw std::runtime_error("no signing of [1,n] reaches the center sum");
    return make_block(stars, gapped_label_set(M, n, k, t), false);
}

BlockLabeling odd_center_large_sum(int n1, int n2, Label k, int t, const SearchBudget& budget) {
    const int n = n1 + n2, M = 3 * n1 + 5 * n2;
    check_mod4(M, t);
    auto base = system_stars(system_35(n1, n2, k, t, budget));
    for (Label ell = M + k + t; ell <= M + k + t + 2; ++ell) {
        auto stars = base;
        if (odd_hubs(stars, n, false, ell, budget)) return make_block(stars, gapped_label_set(M, n, k, t), false);
    }
    throw std::runtime_error("no hub choice puts the center sum in [M+k+t, M+k+t+2]");
}

BlockLabeling even_block_shifted(const std::vector<int>& profile, Label x, Label ell, StarVariant variant, Label r) {
    const int p = static_cast<int>(profile.size());
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("center degree must be odd and at least 3");
    for (int n : profile)
        if (n % 2 || n < 4) throw std::invalid_argument("even block needs even star sizes of at least 4");
    const int M = std::accumulate(profile.begin(), profile.end(), 0);
    bool zero = M % 4 == 0;
    std::vector<int> order = even_order(profile);
    std::vector<int> sizes;
    std::vector<Label> labels, s4;
    int s4_star = -1;
    switch (variant) {
        case StarVariant::phi:
            if (!zero) throw std::invalid_argument("variant needs M = 0 (mod 4)");
            labels = range(x, M + x - 1);
            break;
        case StarVariant::phi1: {
            if (!zero) throw std::invalid_argument("variant needs M = 0 (mod 4)");
            if (!(r > 0 && r < x - M + 4)) throw std::invalid_argument("r must satisfy 0 < r < x - M + 4");
            for (int i = p - 1; i >= 0 && s4_star < 0; --i)
                if (profile[i] == 4) s4_star = i;
            if (s4_star < 0) throw std::invalid_argument("variant needs a star of size 4");
            order.erase(std::find(order.begin(), order.end(), s4_star));
            order.push_back(s4_star);
            labels = range(r + 1, M + r - 4);
            s4 = {x, x + 2, x + 3, x + 5};
            break;
        }
        case StarVariant::phi2:
            if (zero) throw std::invalid_argument("variant needs M = 2 (mod 4)");
            labels = concat(range(x, M + x - 2), {M + x});
            break;
        case StarVariant::phi3:
            if (zero) throw std::invalid_argument("variant needs M = 2 (mod 4)");
            labels = concat({x}, range(x + 2, M + x));
            break;
    }
    for (int i : order)
        if (i != s4_star) sizes.push_back(profile[i]);
    std::vector<StarValues> stars;
    for (const auto& c : chunk_partition(labels, sizes)) stars.push_back(split_or_throw(c));
    if (!s4.empty()) stars.push_back(split_or_throw(s4));
    if (!choose_hubs(stars, all_labels(stars), ell, {}))
        throw std::runtime_error("no hub choice gives center sum " + std::to_string(ell));
    return make_block(unpermute(stars, order), concat(labels, s4), false);
}

OrientedLabeling mixed_minimum(int n1, int n2, int n3, int n4, Label k, int t, const SearchBudget& budget) {
    auto L = render(mixed_blocks(n1, n2, n3, n4, k, t, budget));
    require_verified(L, k, t, "mixed minimum snowflake");
    return L;
}

OrientedLabeling attach(const OrientedLabeling& A, int a_vertex, const OrientedLabeling& B, int b_vertex) {
    if (a_vertex < 0 || a_vertex >= A.vertices || b_vertex < 0 || b_vertex >= B.vertices)
        throw std::out_of_range("weld vertex out of range");
    std::vector<Label> la, lb;
    for (const auto& a : A.arcs) la.push_back(a.label);
    for (const auto& b : B.arcs) lb.push_back(b.label);
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    std::vector<Label> common;
    std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
    if (!common.empty()) throw std::invalid_argument("label " + std::to_string(common[0]) + " used by both parts");
    auto map = [&](int v) {
        if (v == b_vertex) return a_vertex;
        return A.vertices + (v < b_vertex ? v : v - 1);
    };
    OrientedLabeling out = A;
    out.vertices = A.vertices + B.vertices - 1;
    for (const auto& b : B.arcs) out.arcs.push_back({map(b.tail), map(b.head), b.label});
    int deg = 0;
    for (const auto& a : out.arcs) deg += (a.tail == a_vertex) + (a.head == a_vertex);
    if (deg >= 3 && vertex_sum(out, a_vertex) != 0)
        throw std::invalid_argument("vertex sums do not cancel at the weld vertex");
    return out;
}

Decomposition decompose(const std::vector<int>& profile) {
    if (profile.size() < 3) throw std::invalid_argument("decomposition needs at least three stars");
    bool all_even = true;
    for (int n : profile) {
        if (n < 3) throw std::invalid_argument("star sizes must be at least 3");
        if (n % 2) all_even = false;
    }
    if (all_even) throw std::invalid_argument("even profiles are handled without decomposition");
    Decomposition d;
    for (int n : profile) {
        int b = n % 4 == 3 ? 3 : n % 4 + 4;
        d.core.push_back(b);
        d.galaxy.push_back(n - b);
        d.galaxy_size += n - b;
    }
    return d;
}

ConservativeResult construct_conservative(const std::vector<int>& profile, const SearchBudget& budget) {
    Snowflake flake = make_snowflake(profile);
    const int M = flake.size(), p = flake.stars();
    ConservativeResult res;
    res.t = t_of(M);
    bool all_even = true, all_big = true;
    for (int n : profile) {
        if (n % 2) all_even = false;
        if (n < 3) all_big = false;
    }
    if (all_even && p >= 2 && all_big && *std::min_element(profile.begin(), profile.end()) >= 4) {
        res.labeling = even_snowflake(profile);
        res.provenance = "even";
        return res;
    }
    if (p >= 3 && all_big) {
        Decomposition d = decompose(profile);
        const Label k = d.galaxy_size;
        std::vector<int> by_size[7];
        for (int i = 0; i < p; ++i) by_size[d.core[i]].push_back(i);
        const int n1 = by_size[3].size(), n2 = by_size[5].size(), n3 = by_size[6].size(), n4 = by_size[4].size();
        std::vector<StarValues> canon;
        if (n3 + n4 == 0) {
            ZeroSumSystem Z = zero_sum_system_35(n1, n2, k, res.t, budget);
            for (int i = 0; i < Z.system.order(); ++i) {
                StarValues s = Z.system.blocks[i];
                set_hub(s, Z.distinguished[i]);
                canon.push_back(s);
            }
            res.provenance = "zero-sum";
        } else {
            canon = mixed_blocks(n1, n2, n3, n4, k, res.t, budget);
            res.provenance = "mixed";
        }
        std::vector<StarValues> stars(p);
        size_t c = 0;
        for (int size : {3, 5, 6, 4})
            for (int i : by_size[size]) stars[i] = canon[c++];
        std::vector<Label> core_labels;
        for (const auto& s : stars)
            for (Label x : s) core_labels.push_back(absl(x));
        auto r = recover_r(core_labels, k, res.t);
        if (!r) throw std::logic_error("core labels have no gapped shape");
        std::vector<int> gsizes;
        for (int g : d.galaxy)
            if (g > 0) gsizes.push_back(g);
        if (!gsizes.empty()) {
            auto chunks = chunk_partition(range(1, k), gsizes);
            size_t j = 0;
            for (int i = 0; i < p; ++i) {
                if (d.galaxy[i] == 0) continue;
                StarValues g = split_or_throw(chunks[j++]);
                for (Label x : g) stars[i].push_back(x > 0 ? x + *r : x - *r);
            }
        }
        res.labeling = render(stars);
        require_verified(res.labeling, 0, res.t, "snowflake");
        return res;
    }
    auto found = search_conservative(flake.graph(), 0, res.t, budget);
    if (!found.witness)
        throw std::runtime_error("search for a conservative labeling ended: " + to_string(found.status));
    res.labeling = *found.witness;
    res.provenance = "search";
    return res;
}

}  // namespace nestlab
