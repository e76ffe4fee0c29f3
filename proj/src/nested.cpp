#include "nestlab/nested.hpp"

#include <stdexcept>
#include <string>

namespace nestlab {

NestedParams compute_params(int m1, int m2) {
    if (m1 < 3) throw std::invalid_argument("m1 must be at least 3");
    if (m2 < nested_bound(m1))
        throw std::out_of_range("m2 = " + std::to_string(m2) + " is below the bound " +
                                std::to_string(nested_bound(m1)));
    NestedParams p;
    p.m1 = m1;
    p.m2 = m2;
    p.m = m1 + m2;
    p.t = nested_t(p.m);
    p.c_w = (m1 - 1) * m1 / 2;
    int r = p.m % 4;
    bool odd = m1 % 2 == 1;
    if ((r == 0 && !odd) || (r == 3 && odd)) {
        p.which = 1;
        p.f_w = (p.m + m1) / 2;
    } else if ((r == 2 && !odd) || (r == 1 && odd)) {
        p.which = 2;
        p.f_w = (p.m + m1) / 2 + 1;
    } else if ((r == 0 && odd) || (r == 3 && !odd)) {
        p.which = 3;
        p.f_w = (p.m - m1 + 1) / 2;
    } else {
        p.which = 4;
        p.f_w = (p.m - m1 + 1) / 2 + 1;
    }
    if (p.f_w <= p.c_w) throw std::logic_error("f_w does not exceed c_w");
    return p;
}

std::vector<Label> base_edge_labels(const NestedParams& p) {
    const int m = p.m, m2 = p.m2;
    std::vector<Label> f(m2);
    int a = m - p.f_w;           // end of the second branch
    int b = m - p.c_w - 1;       // end of the third branch
    int c = m - p.c_w;           // start of the fourth branch
    if (p.m1 == 3 && c <= m2 - 1) throw std::logic_error("fourth branch must be empty when m1 = 3");
    for (int i = 1; i <= m2; ++i) {
        Label v;
        if (i == 1) v = m + p.t;
        else if (i == m2) v = p.f_w;
        else if (i <= a) v = m + 1 - i;
        else if (i <= b) v = m - i;
        else if (i >= c && p.m1 >= 4) v = m - 1 - i;
        else throw std::logic_error("edge e_" + std::to_string(i) + " falls outside every branch");
        f[i - 1] = v;
    }
    return f;
}

NestedLabeling construct_nested(int m1, int m2) {
    NestedLabeling out;
    out.params = compute_params(m1, m2);
    out.graph = build_two_nested(m1, m2, out.params.t);
    out.base_labels = base_edge_labels(out.params);
    auto& phi = out.labeling.f;
    phi.assign(m2, 0);
    for (int i = 2; i <= m2; ++i) {
        Label step = out.base_labels[i - 2];
        phi[i - 1] = phi[i - 2] + (i % 2 == 0 ? step : -step);
    }
    out.labeling.t = out.params.t;
    return out;
}

}  // namespace nestlab
