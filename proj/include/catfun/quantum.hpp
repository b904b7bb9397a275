#pragma once

#include <numeric>
#include <optional>

#include "expansions.hpp"

namespace catfun {

// permutation of [n] in one-line notation: w(i) = oneline[i-1]
struct Permutation {
    std::vector<int> oneline;

    Permutation() = default;
    explicit Permutation(std::vector<int> w) : oneline(std::move(w)) {
        std::vector<int> seen(oneline.size(), 0);
        for (int x : oneline) {
            if (x < 1 || x > int(oneline.size()) || seen[x - 1]++)
                throw std::invalid_argument("not a permutation in one-line notation");
        }
    }

    int n() const { return int(oneline.size()); }
    int operator()(int i) const { return oneline[i - 1]; }
    bool operator==(const Permutation& o) const { return oneline == o.oneline; }
    bool operator!=(const Permutation& o) const { return oneline != o.oneline; }
    bool operator<(const Permutation& o) const { return oneline < o.oneline; }
};

inline Permutation perm_identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

inline Permutation perm_longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

// (p . q)(i) = p(q(i))
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(p.n());
    for (int i = 1; i <= p.n(); ++i) w[i - 1] = p(q(i));
    return Permutation(std::move(w));
}

inline Permutation perm_inverse(const Permutation& p) {
    std::vector<int> w(p.n());
    for (int i = 1; i <= p.n(); ++i) w[p(i) - 1] = i;
    return Permutation(std::move(w));
}

inline Permutation perm_power(const Permutation& p, int e) {
    Permutation r = perm_identity(p.n());
    for (int i = 0; i < e; ++i) r = compose(r, p);
    return r;
}

// Inv_i(w) = #{j > i : w_i > w_j}
inline std::vector<int> inv_seq(const Permutation& w) {
    std::vector<int> inv(w.n());
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++inv[i - 1];
    return inv;
}

inline int perm_length(const Permutation& w) {
    auto inv = inv_seq(w);
    return std::accumulate(inv.begin(), inv.end(), 0);
}

// indicator vector of the descent set, length n-1
inline Weight descent_vector(const Permutation& w) {
    Weight d(w.n() - 1, 0);
    for (int i = 1; i < w.n(); ++i)
        if (w(i) > w(i + 1)) d[i - 1] = 1;
    return d;
}

// c_i = s_{k+1-i} ... s_k in S_{k+1}
inline Permutation cperm(int i, int k) {
    std::vector<int> w(k + 1);
    std::iota(w.begin(), w.end(), 1);
    for (int j = k + 1 - i; j <= k; ++j) std::swap(w[j - 1], w[j]);
    return Permutation(std::move(w));
}

// the partition whose i-th column is binom(k+1-i, 2) + Inv_i(w_circ w)
inline Partition zeta(const Permutation& w, int k) {
    if (w.n() != k + 1) throw std::invalid_argument("zeta: expected an element of S_{k+1}");
    auto inv = inv_seq(compose(perm_longest(k + 1), w));
    std::vector<int> cols(k);
    for (int i = 1; i <= k; ++i) cols[i - 1] = (k + 1 - i) * (k - i) / 2 + inv[i - 1];
    CATFUN_ASSERT(is_partition(cols), "columns of zeta must weakly decrease");
    Partition la;
    for (int r = 1; !cols.empty() && r <= cols[0]; ++r) {
        int cnt = 0;
        for (int c : cols)
            if (c >= r) ++cnt;
        la.push_back(cnt);
    }
    return la;
}

// mu = irr plus mults_i copies of the k-rectangle R_i = (i^{k+1-i})
struct RectDecomp {
    Partition irr;
    Weight mults;  // length k
};

inline bool is_irreducible(const Partition& mu, int k) {
    if (!is_kbounded(mu, k)) return false;
    for (int i = 1; i <= k; ++i) {
        int n = 0;
        for (int part : mu)
            if (part == i) ++n;
        if (n > k - i) return false;
    }
    return true;
}

inline RectDecomp rect_decompose(const Partition& mu, int k) {
    if (!is_kbounded(mu, k)) throw NotInLambdaK("rect_decompose: mu not k-bounded");
    RectDecomp out{{}, Weight(k, 0)};
    for (int i = k; i >= 1; --i) {
        int n = 0;
        for (int part : mu)
            if (part == i) ++n;
        out.mults[i - 1] = n / (k + 1 - i);
        out.irr.insert(out.irr.end(), n % (k + 1 - i), i);
    }
    CATFUN_ASSERT(is_irreducible(out.irr, k), "rectangle removal must leave an irreducible part");
    return out;
}

// rebuild the partition; nullopt when a multiplicity is negative
inline std::optional<Partition> rect_compose(const RectDecomp& d, int k) {
    for (int a : d.mults)
        if (a < 0) return std::nullopt;
    Partition out = d.irr;
    for (int i = 1; i <= k; ++i) out.insert(out.end(), d.mults[i - 1] * (k + 1 - i), i);
    std::sort(out.rbegin(), out.rend());
    return out;
}

// exponents of the unique factorization w = c_k^{m_0} c_{k-1}^{m_1} ... c_1^{m_{k-1}},
// found greedily: the first i factors pin down the first i one-line entries
inline std::vector<int> cyclic_factorization(const Permutation& w, int k) {
    if (w.n() != k + 1)
        throw std::invalid_argument("cyclic_factorization: expected an element of S_{k+1}");
    std::vector<int> m(k);
    Permutation p = perm_identity(k + 1);
    for (int i = 0; i < k; ++i) {
        int found = 0;
        Permutation next;
        Permutation step = cperm(k - i, k);
        Permutation cand = p;
        for (int mi = 0; mi <= k - i; ++mi) {
            if (cand(i + 1) == w(i + 1)) {
                ++found;
                m[i] = mi;
                next = cand;
            }
            cand = compose(cand, step);
        }
        CATFUN_ASSERT(found == 1, "cyclic factorization step must have a unique exponent");
        p = next;
    }
    CATFUN_ASSERT(p == w, "cyclic factorization must multiply back to w");
    return m;
}

// the k+1 permutations with theta(w) = nu: m_i = #(parts of size i), m_0 free
inline std::vector<Permutation> theta_fibre(const Partition& nu, int k) {
    if (!is_irreducible(nu, k) || (!nu.empty() && nu[0] > k - 1))
        throw std::invalid_argument("theta_fibre: nu must be irreducible");
    Permutation tail = perm_identity(k + 1);
    for (int i = 1; i < k; ++i) {
        int n = 0;
        for (int part : nu)
            if (part == i) ++n;
        tail = compose(tail, perm_power(cperm(k - i, k), n));
    }
    std::vector<Permutation> out;
    Permutation head = perm_identity(k + 1);
    for (int m0 = 0; m0 <= k; ++m0) {
        out.push_back(compose(head, tail));
        head = compose(head, cperm(k, k));
    }
    return out;
}

inline Partition theta(const Permutation& w, int k) { return rect_decompose(zeta(w, k), k).irr; }

// d-tilde_j = d_{j-1} - 2 d_j + d_{j+1}
inline Weight dtilde(const Weight& d) {
    int k = int(d.size());
    Weight out(k, 0);
    for (int j = 1; j <= k; ++j) {
        out[j - 1] = -2 * d[j - 1];
        if (j > 1) out[j - 1] += d[j - 2];
        if (j < k) out[j - 1] += d[j];
    }
    return out;
}

// exact inverse of dtilde (tridiagonal solve over the rationals);
// nullopt when the solution is not integral
inline std::optional<Weight> dtilde_solve(const Weight& target) {
    int k = int(target.size());
    if (k == 0) return Weight{};
    // forward elimination on tridiag(1, -2, 1) d = target
    std::vector<mpq_class> diag(k), rhs(k);
    diag[0] = -2;
    rhs[0] = target[0];
    for (int i = 1; i < k; ++i) {
        mpq_class f = mpq_class(1) / diag[i - 1];
        diag[i] = mpq_class(-2) - f;
        rhs[i] = mpq_class(target[i]) - f * rhs[i - 1];
    }
    std::vector<mpq_class> x(k);
    x[k - 1] = rhs[k - 1] / diag[k - 1];
    for (int i = k - 2; i >= 0; --i) x[i] = (rhs[i] - x[i + 1]) / diag[i];
    Weight out(k);
    for (int i = 0; i < k; ++i) {
        x[i].canonicalize();
        if (x[i].get_den() != 1) return std::nullopt;
        out[i] = int(x[i].get_num().get_si());
    }
    return out;
}

namespace detail {

inline const SymFun& kschur_t1(const Partition& mu, int k) {
    static std::map<std::pair<Partition, int>, SymFun> cache;
    auto key = std::make_pair(mu, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, specialize_t(kschur(mu, k), 1)).first;
    return it->second;
}

// greedy elimination against the t = 1 k-Schur functions
inline SymFun to_kschur_basis_t1(SymFun f, int k) {
    SymFun out(Basis::kschur, k);
    while (!f.terms.empty()) {
        Partition best = f.terms.begin()->first;
        CATFUN_ASSERT(is_kbounded(best, k), "t=1 expansion hit a non-k-bounded leading term");
        TPoly c = f.coeff(best);
        const SymFun& piece = kschur_t1(best, k);
        out.add(best, c);
        for (const auto& [la, d] : piece.terms) f.add(la, -(c * d));
        CATFUN_ASSERT(!f.terms.count(best), "t=1 elimination failed to clear a term");
    }
    return out;
}

// s^{(k)}_mu s^{(k)}_nu at t = 1 in the k-Schur basis, cached
inline const SymFun& kschur_product_t1(const Partition& mu, const Partition& nu, int k) {
    static std::map<std::tuple<Partition, Partition, int>, SymFun> cache;
    auto key = std::make_tuple(std::min(mu, nu), std::max(mu, nu), k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        SymFun prod = mul(specialize_t(kschur(std::get<0>(key), k), 1),
                          specialize_t(kschur(std::get<1>(key), k), 1));
        it = cache.emplace(key, to_kschur_basis_t1(std::move(prod), k)).first;
    }
    return it->second;
}

}  // namespace detail

// structure constant c^{w,d}_{uv} of QH*(Fl_{k+1}) as a k-Catalan-Kostka
// coefficient at t = 1
inline mpz_class gw_invariant(const Permutation& u, const Permutation& v, const Permutation& w,
                              const Weight& d, int k) {
    if (u.n() != k + 1 || v.n() != k + 1 || w.n() != k + 1 || int(d.size()) != k)
        throw std::invalid_argument("gw_invariant: size mismatch");
    for (int x : d)
        if (x < 0) throw std::invalid_argument("gw_invariant: d must be nonnegative");
    Weight a = dtilde(d);
    Weight du = descent_vector(u), dv = descent_vector(v), dw = descent_vector(w);
    for (int i = 0; i < k; ++i) a[i] += du[i] + dv[i] - dw[i];
    auto lam = rect_compose({theta(w, k), a}, k);
    if (!lam) return 0;
    return detail::kschur_product_t1(theta(u, k), theta(v, k), k).coeff(*lam).eval(1);
}

// sigma_u * sigma_v = sum over (w, d) of coefficient q^d sigma_w
struct QuantumClass {
    int k = 0;
    std::map<std::pair<std::vector<int>, Weight>, mpz_class> terms;

    bool operator==(const QuantumClass& o) const { return k == o.k && terms == o.terms; }
};

inline QuantumClass quantum_product(const Permutation& u, const Permutation& v, int k) {
    if (u.n() != k + 1 || v.n() != k + 1)
        throw std::invalid_argument("quantum_product: size mismatch");
    QuantumClass out;
    out.k = k;
    Weight du = descent_vector(u), dv = descent_vector(v);
    const SymFun& prod = detail::kschur_product_t1(theta(u, k), theta(v, k), k);
    for (const auto& [la, c] : prod.terms) {
        CATFUN_ASSERT(c.nonneg(), "Gromov-Witten invariants must be nonnegative");
        RectDecomp dec = rect_decompose(la, k);
        int matches = 0;
        for (const auto& w : theta_fibre(dec.irr, k)) {
            Weight dw = descent_vector(w);
            Weight target = dec.mults;
            for (int i = 0; i < k; ++i) target[i] += dw[i] - du[i] - dv[i];
            auto d = dtilde_solve(target);
            if (!d) continue;
            bool ok = true;
            for (int x : *d)
                if (x < 0) ok = false;
            if (!ok) continue;
            ++matches;
            out.terms[{w.oneline, *d}] = c.eval(1);
        }
        CATFUN_ASSERT(matches == 1, "each k-Schur coefficient must transfer to exactly one term");
    }
    return out;
}

// c^{w,d}_{uv} as a count of (semistandard filling, strong tableau) pairs,
// valid when u has one descent and the v-suffix is cyclically increasing
inline mpz_class gw_tableau(const Permutation& u, const Permutation& v, const Permutation& w,
                            const Weight& d, int k) {
    if (u.n() != k + 1 || v.n() != k + 1 || w.n() != k + 1 || int(d.size()) != k)
        throw std::invalid_argument("gw_tableau: size mismatch");
    Weight du = descent_vector(u);
    if (psum(du) != 1) throw HypothesisViolated("gw_tableau: u must have exactly one descent");
    int j = 1;
    while (du[j - 1] == 0) ++j;
    auto inv = inv_seq(u);
    int m = 1;
    while (m < k + 1 && inv[m] == inv[0]) ++m;
    // v_{m+1} ... v_{k+1} must be cyclically increasing
    std::vector<int> suffix(v.oneline.begin() + m, v.oneline.end());
    int drops = 0;
    for (size_t i = 0; i < suffix.size(); ++i)
        if (suffix[i] > suffix[(i + 1) % suffix.size()]) ++drops;
    if (suffix.size() > 1 && drops > 1)
        throw HypothesisViolated("gw_tableau: v-suffix is not cyclically increasing");

    Weight a = dtilde(d);
    a[j - 1] += 1;
    Weight dv = descent_vector(v), dw = descent_vector(w);
    for (int i = 0; i < k; ++i) a[i] += dv[i] - dw[i];
    auto lam = rect_compose({theta(w, k), a}, k);
    if (!lam) return 0;

    int r = k + 1 - j - inv[0];
    Partition tu = theta(u, k);
    CATFUN_ASSERT(int(tu.size()) == r, "theta(u) must have r parts for a single-descent u");
    Partition U(r, k + 1 - r);
    Partition Unu = U;
    {
        Partition tv = theta(v, k);
        Unu.insert(Unu.end(), tv.begin(), tv.end());
    }
    CATFUN_ASSERT(is_partition(Unu), "U theta(v) must be a partition under the hypotheses");
    mpz_class count = 0;
    for (const auto& T : ssyt_skew(U, tu, 1, r))
        for (const auto& S : strong_tableaux(creading(T), Unu, k))
            if (S.inside == *lam) ++count;
    return count;
}

}  // namespace catfun
