#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace catfun {

// Upper order ideal of Delta^+_ell = {(i,j) : 1 <= i < j <= ell} under
// (a,b) <= (c,d) iff a >= c and b <= d.  Canonical form: nr[i-1] = number of
// nonroots in row i, i.e. #{j > i : (i,j) not in the ideal}.
struct RootIdeal {
    int ell = 0;
    std::vector<int> nr;

    RootIdeal() = default;
    RootIdeal(int l, std::vector<int> nonroots) : ell(l), nr(std::move(nonroots)) { validate(); }

    void validate() const {
        if (int(nr.size()) != ell) throw NotAnIdeal("nr length != ell");
        for (int i = 1; i <= ell; ++i) {
            if (nr[i - 1] < 0 || nr[i - 1] > ell - i) throw NotAnIdeal("nr out of range");
            if (i < ell && nr[i - 1] > nr[i] + 1) throw NotAnIdeal("nr violates ideal condition");
        }
    }

    static RootIdeal empty(int l) {
        std::vector<int> v(l);
        for (int i = 1; i <= l; ++i) v[i - 1] = l - i;
        return RootIdeal(l, std::move(v));
    }
    static RootIdeal full(int l) { return RootIdeal(l, std::vector<int>(l, 0)); }

    // first root column of row r, or ell+1 when the row is empty
    int start(int r) const { return r + 1 + nr[r - 1]; }
    int row_len(int r) const { return ell - start(r) + 1; }
    bool has_root(int i, int j) const { return 1 <= i && i < j && j <= ell && j >= start(i); }
    int col_len(int c) const {
        int n = 0;
        for (int i = 1; i < c; ++i)
            if (start(i) <= c) ++n;
        return n;
    }
    int root_count() const {
        int n = 0;
        for (int r = 1; r <= ell; ++r) n += row_len(r);
        return n;
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> ps;
        for (int i = 1; i <= ell; ++i)
            for (int j = start(i); j <= ell; ++j) ps.push_back({i, j});
        return ps;
    }

    bool operator==(const RootIdeal& o) const { return ell == o.ell && nr == o.nr; }
    bool operator<(const RootIdeal& o) const {
        return ell != o.ell ? ell < o.ell : nr < o.nr;
    }
};

inline RootIdeal make_root_ideal(int ell, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> start(ell + 1, ell + 1), count(ell + 1, 0);
    for (auto [i, j] : pairs) {
        if (!(1 <= i && i < j && j <= ell)) throw NotAnIdeal("pair outside Delta^+");
        start[i] = std::min(start[i], j);
        ++count[i];
    }
    std::vector<int> nr(ell);
    for (int i = 1; i <= ell; ++i) {
        if (count[i] != (count[i] ? ell - start[i] + 1 : 0))
            throw NotAnIdeal("row is not a column suffix");
        if (i > 1 && start[i - 1] > start[i]) throw NotAnIdeal("rows not nested");
        nr[i - 1] = (count[i] ? start[i] : ell + 1) - i - 1;
        if (nr[i - 1] > ell - i) nr[i - 1] = ell - i;  // empty row
    }
    return RootIdeal(ell, std::move(nr));
}

// Delta^k(mu) = {(i,j) : k - mu_i + i < j}
inline RootIdeal delta_k(const Partition& mu, int k, int ell = -1) {
    if (!is_kbounded(mu, k)) throw NotInLambdaK("delta_k: mu_1 > k");
    if (ell < 0) ell = int(mu.size());
    Weight m = padded(mu, ell);
    std::vector<int> nr(ell);
    for (int i = 1; i <= ell; ++i) nr[i - 1] = std::min(k - m[i - 1], ell - i);
    return RootIdeal(ell, std::move(nr));
}

// catty-corner union with the full cross rectangle
inline RootIdeal uplus(const RootIdeal& a, const RootIdeal& b) {
    std::vector<int> nr = a.nr;
    nr.insert(nr.end(), b.nr.begin(), b.nr.end());
    return RootIdeal(a.ell + b.ell, std::move(nr));
}

inline std::vector<int> style(const RootIdeal& psi, const Weight& mu) {
    if (int(mu.size()) != psi.ell) throw std::invalid_argument("style: length mismatch");
    std::vector<int> s(psi.ell);
    for (int i = 0; i < psi.ell; ++i) s[i] = psi.nr[i] + mu[i];
    return s;
}

// removable root of row r: the leftmost root, provided deleting it leaves an ideal
inline std::optional<std::pair<int, int>> removable_root_in_row(const RootIdeal& psi, int r) {
    if (psi.row_len(r) <= 0) return std::nullopt;
    int c = psi.start(r);
    if (r < psi.ell && psi.start(r + 1) <= c) return std::nullopt;
    return std::make_pair(r, c);
}

inline std::vector<std::pair<int, int>> removable_roots(const RootIdeal& psi) {
    std::vector<std::pair<int, int>> out;
    for (int r = 1; r <= psi.ell; ++r)
        if (auto d = removable_root_in_row(psi, r)) out.push_back(*d);
    return out;
}

inline RootIdeal remove_root(const RootIdeal& psi, int r, int c) {
    auto d = removable_root_in_row(psi, r);
    if (!d || d->second != c) throw NotAnIdeal("remove_root: root not removable");
    auto nr = psi.nr;
    ++nr[r - 1];
    return RootIdeal(psi.ell, std::move(nr));
}

struct BounceGraph {
    RootIdeal psi;
    std::vector<int> down_;  // down_[r-1] = column of removable root, or 0

    explicit BounceGraph(RootIdeal p) : psi(std::move(p)), down_(psi.ell, 0) {
        for (int r = 1; r <= psi.ell; ++r)
            if (auto d = removable_root_in_row(psi, r)) down_[r - 1] = d->second;
    }

    std::optional<int> down(int r) const {
        return down_[r - 1] ? std::optional<int>(down_[r - 1]) : std::nullopt;
    }
    std::optional<int> up(int c) const {
        for (int r = 1; r < c; ++r)
            if (down_[r - 1] == c) return r;
        return std::nullopt;
    }

    std::vector<int> downpath(int r) const {
        std::vector<int> path{r};
        while (down_[path.back() - 1]) path.push_back(down_[path.back() - 1]);
        return path;
    }
    int bottom(int r) const { return downpath(r).back(); }
    int top(int r) const {
        int x = r;
        while (auto u = up(x)) x = *u;
        return x;
    }

    std::vector<int> bpath(int a, int b) const {
        auto path = downpath(a);
        std::vector<int> out;
        for (int x : path) {
            out.push_back(x);
            if (x == b) return out;
        }
        throw NotSamePath("bpath: b not on the downpath of a");
    }
    int B(int a, int b) const { return int(bpath(a, b).size()) - 1; }
};

inline bool has_ceiling(const RootIdeal& psi, int c) {
    return 1 <= c && c < psi.ell && psi.col_len(c) == psi.col_len(c + 1);
}

inline bool has_wall(const RootIdeal& psi, const std::vector<int>& rows) {
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        if (psi.row_len(rows[i]) != psi.row_len(rows[i + 1])) return false;
    return true;
}
inline bool has_wall(const RootIdeal& psi, int r) { return has_wall(psi, {r, r + 1}); }

inline bool has_mirror(const RootIdeal& psi, int r) {
    if (r < 1 || r >= psi.ell) return false;
    auto a = removable_root_in_row(psi, r), b = removable_root_in_row(psi, r + 1);
    return a && b && b->second == a->second + 1 && a->second > r + 1;
}

// Psi intersected with Delta^+_{ell-1} (drop last row and column)
inline RootIdeal restricted(const RootIdeal& psi) {
    if (psi.ell == 0) throw std::invalid_argument("restricted: ell = 0");
    std::vector<int> nr(psi.ell - 1);
    for (int i = 1; i < psi.ell; ++i) nr[i - 1] = std::min(psi.nr[i - 1], psi.ell - 1 - i);
    return RootIdeal(psi.ell - 1, std::move(nr));
}

// all root ideals of Delta^+_ell (Catalan-many)
inline std::vector<RootIdeal> all_root_ideals(int ell) {
    std::vector<RootIdeal> out;
    std::vector<int> nr(ell);
    auto rec = [&](auto&& self, int i) -> void {  // fill rows ell..1 backwards
        if (i == 0) {
            out.push_back(RootIdeal(ell, nr));
            return;
        }
        int hi = std::min(ell - i, i == ell ? 0 : nr[i] + 1);
        for (int v = 0; v <= hi; ++v) {
            nr[i - 1] = v;
            self(self, i - 1);
        }
    };
    rec(rec, ell);
    return out;
}

}  // namespace catfun
