#pragma once

#include <map>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace catfun {

// leg of cell (r,c), 1-based, = rows below r still covering column c
inline int leg_len(const Partition& shape, int r, int c) {
    int n = 0;
    for (size_t r2 = r; r2 < shape.size(); ++r2)
        if (shape[r2] >= c) ++n;
    return n;
}

inline int hook_len(const Partition& shape, int r, int c) {
    return shape[r - 1] - c + 1 + leg_len(shape, r, c);
}

inline bool row_avoids_hook(const Partition& shape, int r, int banned) {
    for (int c = 1; c <= shape[r - 1]; ++c)
        if (hook_len(shape, r, c) == banned) return false;
    return true;
}

inline bool is_core_shape(const Partition& shape, int k) {
    for (int r = 1; r <= int(shape.size()); ++r)
        if (!row_avoids_hook(shape, r, k + 1)) return false;
    return true;
}

// (k+1)-core: partition with no hook of length k+1
struct Core {
    Partition shape;
    int k = 0;

    Core() = default;
    Core(Partition s, int level) : shape(std::move(s)), k(level) {
        if (!is_core_shape(shape, k)) throw std::invalid_argument("not a (k+1)-core");
    }

    bool operator==(const Core& o) const { return k == o.k && shape == o.shape; }
    bool operator<(const Core& o) const { return shape < o.shape; }
};

// p(kappa)_r = #cells in row r with hook <= k
inline Partition p_of_core(const Core& kappa) {
    Partition mu(kappa.shape.size());
    for (int r = 1; r <= int(kappa.shape.size()); ++r) {
        int n = 0;
        for (int c = 1; c <= kappa.shape[r - 1]; ++c)
            if (hook_len(kappa.shape, r, c) <= kappa.k) ++n;
        mu[r - 1] = n;
    }
    CATFUN_ASSERT(is_partition(mu), "p of a core must be a partition");
    return mu;  // no trailing zeros: rows of a partition shape are nonempty
}

// p^{-1}: build bottom-up; row r is the unique length in [kappa_{r+1}, kappa_{r+1}+k]
// that avoids hook k+1 and gives exactly mu_r cells of hook <= k
inline Core core_of_partition(const Partition& mu, int k) {
    if (!is_kbounded(mu, k)) throw NotInLambdaK("core_of_partition: mu not k-bounded");
    int ell = int(mu.size());
    Partition shape(ell);
    for (int r = ell; r >= 1; --r) {
        int lo = r == ell ? mu[ell - 1] : shape[r];  // row ell needs no extension
        int found = 0;
        for (int x = lo; x <= lo + k; ++x) {
            shape[r - 1] = x;
            if (!row_avoids_hook(shape, r, k + 1)) continue;
            int n = 0;
            for (int c = 1; c <= x; ++c)
                if (hook_len(shape, r, c) <= k) ++n;
            if (n == mu[r - 1]) {
                ++found;
                lo = x;  // remember the hit; keep scanning to assert uniqueness
            }
        }
        CATFUN_ASSERT(found == 1, "p is a bijection; search must find exactly one row length");
        shape[r - 1] = lo;
    }
    Core kappa(shape, k);
    CATFUN_ASSERT(p_of_core(kappa) == mu, "core_of_partition round trip");
    return kappa;
}

struct SkewComponent {
    int row_lo = 0, row_hi = 0;  // inclusive row span
    int cells = 0;
};

struct StrongMarkedCover {
    Core inner;  // tau
    Core outer;  // kappa
    int mark = 0;
    int spin = 0;
    std::vector<SkewComponent> components;
};

namespace detail {

inline std::vector<SkewComponent> skew_components(const Partition& outer, const Partition& inner) {
    // row r cells: columns inner_r+1 .. outer_r; rows joined when column intervals meet
    std::vector<SkewComponent> comps;
    int rows = int(outer.size());
    auto lo = [&](int r) { return (r <= int(inner.size()) ? inner[r - 1] : 0) + 1; };
    for (int r = 1; r <= rows; ++r) {
        if (lo(r) > outer[r - 1]) continue;
        bool joined = false;
        if (!comps.empty() && comps.back().row_hi == r - 1) {
            // previous nonempty row is adjacent; connected iff intervals share a column
            int plo = lo(r - 1), phi = outer[r - 2];
            joined = std::max(plo, lo(r)) <= std::min(phi, outer[r - 1]);
        }
        if (!joined) comps.push_back({r, r, 0});
        comps.back().row_hi = r;
        comps.back().cells += outer[r - 1] - lo(r) + 1;
    }
    return comps;
}

}  // namespace detail

// all strong marked covers tau => kappa (one per legal mark), enumerated by a
// bottom-up search over sub-partitions with p-count pruning
inline std::vector<StrongMarkedCover> strong_marked_covers_down(const Core& kappa) {
    static std::map<std::pair<Partition, int>, std::vector<StrongMarkedCover>> cache;
    auto key = std::make_pair(kappa.shape, kappa.k);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    int k = kappa.k;
    Partition pk = p_of_core(kappa);
    int target = psum(pk) - 1;
    int rows = int(kappa.shape.size());
    std::vector<StrongMarkedCover> out;
    Partition tau(rows, 0);
    std::vector<int> prow(rows + 1, 0);  // p(tau) per row, filled bottom-up

    auto emit = [&](const Partition& t) {
        Partition tshape = trimmed(t);
        Core inner(tshape, k);
        auto comps = detail::skew_components(kappa.shape, tshape);
        CATFUN_ASSERT(!comps.empty(), "a strong cover has at least one skew component");
        int h = comps[0].row_hi - comps[0].row_lo + 1;
        int sz = comps[0].cells;
        for (const auto& c : comps) {
            // spin presumes equal component heights and sizes; fail loudly otherwise
            CATFUN_ASSERT(c.row_hi - c.row_lo + 1 == h, "cover components must share a height");
            CATFUN_ASSERT(c.cells == sz, "cover components must share a size");
        }
        int c = int(comps.size());
        for (int m = 0; m < c; ++m) {
            StrongMarkedCover cov;
            cov.inner = inner;
            cov.outer = kappa;
            cov.mark = comps[m].row_lo;
            cov.spin = c * (h - 1) + (c - 1 - m);  // components below the marked one
            cov.components = comps;
            out.push_back(std::move(cov));
        }
    };

    auto rec = [&](auto&& self, int r, int partial) -> void {  // rows r..rows fixed
        if (r == 0) {
            if (partial == target) emit(tau);
            return;
        }
        int hi = kappa.shape[r - 1];
        int lo = r == rows ? 0 : tau[r];
        for (int x = lo; x <= hi; ++x) {
            tau[r - 1] = x;
            if (!row_avoids_hook(tau, r, k + 1)) continue;
            int n = 0;
            for (int c = 1; c <= x; ++c)
                if (hook_len(tau, r, c) <= k) ++n;
            if (r < rows && n < prow[r]) continue;  // p(tau) must be a partition
            int sum = partial + n;
            if (sum > target) continue;
            if (sum + (r - 1) * k < target) continue;  // rows above contribute <= k each
            if (sum + (r - 1) * n > target) continue;  // ... and >= n each
            prow[r - 1] = n;
            self(self, r - 1, sum);
        }
        if (r <= rows) tau[r - 1] = 0;
    };
    if (target >= 0 && rows > 0) rec(rec, rows, 0);

    std::sort(out.begin(), out.end(), [](const StrongMarkedCover& a, const StrongMarkedCover& b) {
        return a.inner.shape != b.inner.shape ? a.inner.shape < b.inner.shape : a.mark < b.mark;
    });
    cache[key] = out;
    return out;
}

struct StrongTableau {
    std::vector<int> word;    // w_1..w_m (w_1 labels the cover closest to the outside)
    std::vector<Core> chain;  // kappa^{(0)} .. kappa^{(m)}
    int spin = 0;
    Partition inside, outside;
};

// SMT^k(w; mu): chains into p^{-1}(mu) whose marks, outside-in, read w_1, w_2, ...
inline std::vector<StrongTableau> strong_tableaux(const std::vector<int>& w, const Partition& mu,
                                                  int k) {
    std::vector<StrongTableau> out;
    Core top = core_of_partition(mu, k);
    std::vector<Core> rev_chain{top};
    int spin_acc = 0;
    auto rec = [&](auto&& self, size_t step) -> void {
        if (step == w.size()) {
            StrongTableau t;
            t.word = w;
            t.chain.assign(rev_chain.rbegin(), rev_chain.rend());
            t.spin = spin_acc;
            t.inside = p_of_core(rev_chain.back());
            t.outside = mu;
            out.push_back(std::move(t));
            return;
        }
        for (const auto& cov : strong_marked_covers_down(rev_chain.back())) {
            if (cov.mark != w[step]) continue;
            rev_chain.push_back(cov.inner);
            spin_acc += cov.spin;
            self(self, step + 1);
            spin_acc -= cov.spin;
            rev_chain.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// skew filling: entries[r-1] holds the entries of row r, columns inner_r+1..outer_r
struct SkewFilling {
    Partition outer, inner;
    std::vector<std::vector<int>> entries;
};

inline SkewFilling superstandard(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner)) throw std::invalid_argument("superstandard: invalid skew shape");
    SkewFilling f{outer, inner, {}};
    f.entries.resize(outer.size());
    for (size_t r = 1; r <= outer.size(); ++r) {
        int lo = (r <= inner.size() ? inner[r - 1] : 0) + 1;
        for (int c = lo; c <= outer[r - 1]; ++c) f.entries[r - 1].push_back(int(r));
    }
    return f;
}

// concatenate columns left to right, each read bottom to top
inline std::vector<int> creading(const SkewFilling& f) {
    std::vector<int> word;
    int width = f.outer.empty() ? 0 : f.outer[0];
    for (int c = 1; c <= width; ++c)
        for (int r = int(f.outer.size()); r >= 1; --r) {
            int lo = (r <= int(f.inner.size()) ? f.inner[r - 1] : 0) + 1;
            if (c >= lo && c <= f.outer[r - 1]) word.push_back(f.entries[r - 1][c - lo]);
        }
    return word;
}

}  // namespace catfun
