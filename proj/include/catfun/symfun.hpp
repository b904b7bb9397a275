#pragma once

#include <map>
#include <utility>

#include "errors.hpp"
#include "partition.hpp"
#include "tpoly.hpp"

namespace catfun {

enum class Basis { schur, kschur };

// Finite Z[t]-linear combination of basis elements indexed by partitions.
// kschur carries its level k; schur has k = 0.
struct SymFun {
    Basis basis = Basis::schur;
    int k = 0;
    std::map<Partition, TPoly> terms;

    SymFun() = default;
    explicit SymFun(Basis b, int level = 0) : basis(b), k(level) {}

    static SymFun zero(Basis b = Basis::schur, int level = 0) { return SymFun(b, level); }
    static SymFun one(Basis b = Basis::schur, int level = 0) {
        SymFun f(b, level);
        f.terms[{}] = TPoly(1);
        return f;
    }
    static SymFun schur(Partition la, TPoly c = TPoly(1)) {
        SymFun f(Basis::schur);
        f.add(std::move(la), std::move(c));
        return f;
    }

    bool is_zero() const { return terms.empty(); }

    void add(Partition la, TPoly c) {
        if (c.is_zero()) return;
        auto it = terms.find(la);
        if (it == terms.end()) {
            terms.emplace(std::move(la), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    void check_same(const SymFun& o) const {
        if (basis != o.basis || (basis == Basis::kschur && k != o.k))
            throw BasisMismatch("SymFun basis tags differ");
    }

    SymFun& operator+=(const SymFun& o) {
        check_same(o);
        for (const auto& [la, c] : o.terms) add(la, c);
        return *this;
    }
    SymFun& operator-=(const SymFun& o) {
        check_same(o);
        for (const auto& [la, c] : o.terms) add(la, -c);
        return *this;
    }
    friend SymFun operator+(SymFun a, const SymFun& b) { a += b; return a; }
    friend SymFun operator-(SymFun a, const SymFun& b) { a -= b; return a; }

    friend SymFun operator*(const TPoly& c, const SymFun& f) {
        SymFun r(f.basis, f.k);
        if (c.is_zero()) return r;
        for (const auto& [la, x] : f.terms) r.add(la, c * x);
        return r;
    }

    TPoly coeff(const Partition& la) const {
        auto it = terms.find(la);
        return it == terms.end() ? TPoly() : it->second;
    }

    bool positive() const {
        for (const auto& [la, c] : terms)
            if (!c.nonneg()) return false;
        return true;
    }

    // max |la| over support
    int degree() const {
        int d = 0;
        for (const auto& [la, c] : terms) d = std::max(d, psum(la));
        return d;
    }

    bool operator==(const SymFun& o) const {
        return basis == o.basis && (basis != Basis::kschur || k == o.k) && terms == o.terms;
    }
    bool operator!=(const SymFun& o) const { return !(*this == o); }
};

// Slinky straightening of s_gamma via the Jacobi-Trudi determinant row permutation:
// add rho = (l-1,...,0); a repeat means two equal rows (0); otherwise sort descending,
// sign of the sorting permutation, subtract rho; any negative entry means a zero row (0).
inline std::pair<int, Partition> straighten_schur(const Weight& gamma) {
    int ell = int(gamma.size());
    std::vector<int> v(ell);
    for (int i = 0; i < ell; ++i) v[i] = gamma[i] + (ell - 1 - i);
    // insertion sort, counting swaps for the sign
    int sign = 1;
    for (int i = 1; i < ell; ++i) {
        int x = v[i], j = i;
        while (j > 0 && v[j - 1] < x) {
            v[j] = v[j - 1];
            --j;
            sign = -sign;
        }
        v[j] = x;
    }
    for (int i = 0; i + 1 < ell; ++i)
        if (v[i] == v[i + 1]) return {0, {}};
    for (int i = 0; i < ell; ++i) {
        v[i] -= ell - 1 - i;
        if (v[i] < 0) return {0, {}};
    }
    return {sign, trimmed(v)};
}

namespace detail {

// partitions mu >= la with mu/la a horizontal strip of m cells
inline void hstrips_up(const Partition& la, int m, std::vector<Partition>& out) {
    int rows = int(la.size()) + 1;
    Partition mu(rows);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rows) {
            if (left == 0) out.push_back(trimmed(mu));
            return;
        }
        int lo = i < int(la.size()) ? la[i] : 0;
        int hi = i == 0 ? lo + left : std::min(la[i - 1], lo + left);
        for (int x = lo; x <= hi; ++x) {
            mu[i] = x;
            self(self, i + 1, left - (x - lo));
        }
    };
    rec(rec, 0, m);
}

// partitions mu <= la with la/mu a horizontal strip of m cells
inline void hstrips_down(const Partition& la, int m, std::vector<Partition>& out) {
    int rows = int(la.size());
    Partition mu(rows);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rows) {
            if (left == 0) out.push_back(trimmed(mu));
            return;
        }
        int hi = la[i];
        int lo = std::max(i + 1 < rows ? la[i + 1] : 0, hi - left);
        for (int x = hi; x >= lo; --x) {
            mu[i] = x;
            self(self, i + 1, left - (hi - x));
        }
    };
    rec(rec, 0, m);
}

// partitions mu <= la with la/mu a vertical strip of m cells (<=1 cell removed per row)
inline void vstrips_down(const Partition& la, int m, std::vector<Partition>& out) {
    int rows = int(la.size());
    Partition mu(rows);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rows) {
            if (left == 0) out.push_back(trimmed(mu));
            return;
        }
        for (int d = 0; d <= std::min(1, left); ++d) {
            int x = la[i] - d;
            if (x < 0) continue;
            if (i + 1 < rows && x < la[i + 1] - 1) continue;  // next row can drop at most 1
            if (i > 0 && x > mu[i - 1]) continue;
            mu[i] = x;
            self(self, i + 1, left - d);
        }
    };
    rec(rec, 0, m);
}

}  // namespace detail

// h_m * s_la (Pieri rule)
inline SymFun pieri_h(const Partition& la, int m) {
    SymFun f(Basis::schur);
    if (m < 0) return f;
    if (m == 0) return SymFun::schur(la);
    std::vector<Partition> mus;
    detail::hstrips_up(la, m, mus);
    for (auto& mu : mus) f.add(std::move(mu), TPoly(1));
    return f;
}

enum class PerpKind { E, H };

// adjoint of multiplication by e_d (kind E) or h_d (kind H) w.r.t. the Hall inner product
inline SymFun perp(const SymFun& f, int d, PerpKind kind) {
    if (f.basis != Basis::schur) throw BasisMismatch("perp requires Schur basis");
    SymFun r(Basis::schur);
    if (d < 0) return r;
    if (d == 0) return f;
    for (const auto& [la, c] : f.terms) {
        std::vector<Partition> mus;
        if (kind == PerpKind::E)
            detail::vstrips_down(la, d, mus);
        else
            detail::hstrips_down(la, d, mus);
        for (auto& mu : mus) r.add(std::move(mu), c);
    }
    return r;
}

// signed h-monomial expansion of s_la from det(h_{la_i - i + j}); each monomial is a
// list of positive h-subscripts (h_0 factors dropped, negative subscripts kill the term)
inline std::vector<std::pair<int, std::vector<int>>> jt_h_monomials(const Partition& la) {
    int n = int(la.size());
    std::vector<std::pair<int, std::vector<int>>> out;
    std::vector<int> used(n, 0), subs;
    auto rec = [&](auto&& self, int i, int sign) -> void {
        if (i == n) {
            auto s = subs;
            std::sort(s.rbegin(), s.rend());
            out.push_back({sign, std::move(s)});
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            int m = la[i] - i + j;  // column j+1 for row i+1
            if (m < 0) continue;
            used[j] = 1;
            int swaps = 0;  // inversions added by placing column j at row i
            for (int j2 = j + 1; j2 < n; ++j2) swaps += used[j2];
            if (m > 0) subs.push_back(m);
            self(self, i + 1, swaps % 2 ? -sign : sign);
            if (m > 0) subs.pop_back();
            used[j] = 0;
        }
    };
    rec(rec, 0, 1);
    return out;
}

// exact product; g is expanded through Jacobi-Trudi into h-monomials applied to f by pieri_h
inline SymFun mul(const SymFun& f, const SymFun& g) {
    if (f.basis != Basis::schur || g.basis != Basis::schur)
        throw BasisMismatch("mul requires Schur basis");
    // expand whichever side has the shorter partitions
    size_t lf = 0, lg = 0;
    for (auto& [la, c] : f.terms) lf = std::max(lf, la.size());
    for (auto& [la, c] : g.terms) lg = std::max(lg, la.size());
    const SymFun& keep = lf <= lg ? g : f;
    const SymFun& expand = lf <= lg ? f : g;
    SymFun r(Basis::schur);
    for (const auto& [la, c] : expand.terms) {
        for (const auto& [sign, subs] : jt_h_monomials(la)) {
            SymFun cur = keep;
            for (int m : subs) {
                SymFun next(Basis::schur);
                for (const auto& [mu, d] : cur.terms) {
                    std::vector<Partition> nus;
                    detail::hstrips_up(mu, m, nus);
                    for (auto& nu : nus) next.add(std::move(nu), d);
                }
                cur = std::move(next);
            }
            TPoly cc = sign < 0 ? -c : c;
            for (const auto& [mu, d] : cur.terms) r.add(mu, cc * d);
        }
    }
    return r;
}

inline SymFun specialize_t(const SymFun& f, const mpz_class& t0) {
    SymFun r(f.basis, f.k);
    for (const auto& [la, c] : f.terms) r.add(la, TPoly(c.eval(t0)));
    return r;
}

// Hall inner product <s_la, s_mu> = delta
inline TPoly hall_inner(const SymFun& f, const SymFun& g) {
    if (f.basis != Basis::schur || g.basis != Basis::schur)
        throw BasisMismatch("hall_inner requires Schur basis");
    TPoly r;
    for (const auto& [la, c] : f.terms) {
        auto it = g.terms.find(la);
        if (it != g.terms.end()) r += c * it->second;
    }
    return r;
}

}  // namespace catfun
