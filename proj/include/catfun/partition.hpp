#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace catfun {

// Partition: weakly decreasing, nonnegative, no trailing zeros.
// Weight: fixed-length integer vector (trailing zeros significant).
using Partition = std::vector<int>;
using Weight = std::vector<int>;

inline Partition trimmed(Weight v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

inline bool is_partition(const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
    }
    return v.empty() || v.back() >= 0;
}

inline Weight padded(const Partition& p, int ell) {
    if (int(p.size()) > ell) throw std::invalid_argument("padded: partition longer than target length");
    Weight w = p;
    w.resize(ell, 0);
    return w;
}

inline int psum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.assign(p[0], 0);
    for (int x : p)
        for (int j = 0; j < x; ++j) ++c[j];
    return c;
}

// dominance order on partitions of equal size; true iff a >= b (a dominates b)
inline bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return sa == sb;
}

inline bool contains(const Partition& outer, const Partition& inner) {
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > (i < outer.size() ? outer[i] : 0)) return false;
    return true;
}

inline bool is_kbounded(const Partition& p, int k) { return p.empty() || p[0] <= k; }

inline bool fits_box(const Partition& p, int k, int ell) {
    return int(p.size()) <= ell && is_kbounded(p, k);
}

// n(mu) = sum (i-1) mu_i
inline int nstat(const Partition& p) {
    int n = 0;
    for (size_t i = 0; i < p.size(); ++i) n += int(i) * p[i];
    return n;
}

// all partitions of n with at most max_rows parts, each part <= max_part
inline void partitions_of_rec(int n, int max_part, int max_rows, Partition& cur,
                              std::vector<Partition>& out) {
    if (n == 0) { out.push_back(cur); return; }
    if (max_rows == 0) return;
    for (int x = std::min(n, max_part); x >= 1; --x) {
        cur.push_back(x);
        partitions_of_rec(n - x, x, max_rows - 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Partition> partitions_of(int n, int max_part = 1 << 30, int max_rows = 1 << 30) {
    std::vector<Partition> out;
    Partition cur;
    partitions_of_rec(n, max_part, max_rows, cur, out);
    return out;
}

// all of Par^k_ell (every size), in a canonical order
inline std::vector<Partition> park_ell(int k, int ell) {
    std::vector<Partition> out;
    for (int n = 0; n <= k * ell; ++n)
        for (auto& p : partitions_of(n, k, ell)) out.push_back(p);
    return out;
}

}  // namespace catfun
