#pragma once

#include "kschur.hpp"
#include "vertexops.hpp"

namespace catfun {

// Hall-Littlewood H_mu as a k-Schur sum: the strong Pieri word of the
// superstandard filling of k^ell / mu applied to s^{(k)}_{k^ell}
inline SymFun hl_to_kschur(const Partition& mu, int k, int ell = -1) {
    if (!is_kbounded(mu, k)) throw NotInLambdaK("hl_to_kschur: mu_1 > k");
    if (ell < 0) ell = int(mu.size());
    Partition box(ell, k);
    std::vector<int> word = creading(superstandard(box, mu));
    SymFun f(Basis::kschur, k);
    f.add(box, TPoly(1));
    return pieri_u_word(f, word, k);
}

// all semistandard fillings of outer/inner with entries in [lo, hi]
inline std::vector<SkewFilling> ssyt_skew(const Partition& outer, const Partition& inner, int lo,
                                          int hi) {
    if (!contains(outer, inner)) throw std::invalid_argument("ssyt_skew: invalid skew shape");
    std::vector<SkewFilling> out;
    SkewFilling f{outer, inner, std::vector<std::vector<int>>(outer.size())};
    int rows = int(outer.size());
    auto cell = [&](auto&& self, int r, int c) -> void {
        if (r > rows) {
            out.push_back(f);
            return;
        }
        int rlo = (r <= int(inner.size()) ? inner[r - 1] : 0) + 1;
        if (c > outer[r - 1]) {
            self(self, r + 1, r < rows ? (r + 1 <= int(inner.size()) ? inner[r] : 0) + 1 : 1);
            return;
        }
        int from = lo;
        if (c > rlo) from = std::max(from, f.entries[r - 1][c - rlo - 1]);
        if (r > 1) {
            int plo = (r - 1 <= int(inner.size()) ? inner[r - 2] : 0) + 1;
            if (c >= plo && c <= outer[r - 2])
                from = std::max(from, f.entries[r - 2][c - plo] + 1);
        }
        for (int x = from; x <= hi; ++x) {
            f.entries[r - 1].push_back(x);
            self(self, r, c + 1);
            f.entries[r - 1].pop_back();
        }
    };
    cell(cell, 1, outer.empty() ? rows + 1 : (1 <= int(inner.size()) ? inner[0] : 0) + 1);
    return out;
}

// s_mu times s^{(k)}_nu as a k-Schur sum over SSYT of (k-r+1)^r / mu
inline SymFun schur_times_kschur(const Partition& mu, const Partition& nu, int k, int r = -1) {
    if (r < 0) r = int(mu.size());
    if (int(mu.size()) > r || !(mu.empty() || mu[0] <= k - r + 1))
        throw HypothesisViolated("schur_times_kschur: mu outside Par^{k-r+1}_r");
    Weight munu = padded(mu, r);
    munu.insert(munu.end(), nu.begin(), nu.end());
    if (!is_partition(munu))
        throw HypothesisViolated("schur_times_kschur: mu nu is not a partition");
    if (!is_kbounded(nu, k)) throw HypothesisViolated("schur_times_kschur: nu_1 > k");
    Partition U(r, k - r + 1), Unu = U;
    Unu.insert(Unu.end(), nu.begin(), nu.end());
    SymFun base(Basis::kschur, k);
    base.add(Unu, TPoly(1));
    SymFun out(Basis::kschur, k);
    for (const auto& T : ssyt_skew(U, mu, 1, r)) out += pieri_u_word(base, creading(T), k);
    return out;
}

// running minima
inline Weight crop(const Weight& beta) {
    Weight out = beta;
    for (size_t i = 1; i < out.size(); ++i) out[i] = std::min(out[i], out[i - 1]);
    return out;
}

// alpha_1 + r-1 >= alpha_2 + r-2 >= ... >= alpha_r, entries >= 0
inline bool is_pseudopartition(const Weight& alpha) {
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) return false;
        if (i + 1 < alpha.size() && alpha[i] + 1 < alpha[i + 1]) return false;
    }
    return true;
}

// right-justified filling of diagram(alpha) under flags n
struct FlaggedTableau {
    Weight alpha;
    std::vector<int> flags;
    std::vector<std::vector<int>> rows;  // rows[i]: entries left to right, length alpha_i

    std::vector<int> creading() const {
        int m = 0;
        for (int a : alpha) m = std::max(m, a);
        std::vector<int> word;
        for (int c = 1; c <= m; ++c)
            for (int i = int(alpha.size()); i >= 1; --i)
                if (c > m - alpha[i - 1]) word.push_back(rows[i - 1][c - (m - alpha[i - 1]) - 1]);
        return word;
    }
};

// all fillings of diagram(alpha): rows weakly increase, columns strictly
// increase, row i entries in [n_i, r], and a box with no box below it in the
// next row must be < n_{i+1}; alpha is any nonnegative vector
inline std::vector<FlaggedTableau> ctab(const Weight& alpha, const std::vector<int>& n) {
    int r = int(alpha.size());
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("ctab: negative row length");
    if (int(n.size()) != r) throw std::invalid_argument("ctab: flag length mismatch");
    for (int x : n)
        if (x < 1 || x > r) throw std::invalid_argument("ctab: flags must lie in [r]");
    int m = 0;
    for (int a : alpha) m = std::max(m, a);
    std::vector<FlaggedTableau> out;
    FlaggedTableau T{alpha, n, std::vector<std::vector<int>>(r)};
    auto cell = [&](auto&& self, int i, int c) -> void {  // c: absolute column in [1,m]
        if (i > r) {
            out.push_back(T);
            return;
        }
        int start = m - alpha[i - 1] + 1;
        if (alpha[i - 1] == 0 || c > m) {
            self(self, i + 1, i < r ? m - alpha[i] + 1 : 1);
            return;
        }
        int from = n[i - 1];
        if (c > start) from = std::max(from, T.rows[i - 1][c - start - 1]);
        if (i > 1 && c > m - alpha[i - 2])
            from = std::max(from, T.rows[i - 2][c - (m - alpha[i - 2]) - 1] + 1);
        int to = r;
        if (i < r && c <= m - alpha[i]) to = std::min(to, n[i] - 1);
        for (int x = from; x <= to; ++x) {
            T.rows[i - 1].push_back(x);
            self(self, i, c + 1);
            T.rows[i - 1].pop_back();
        }
    };
    cell(cell, 1, m - (r ? alpha[0] : 0) + 1);
    return out;
}

// k-Schur expansion of H(Psi; mu nu) via flagged tableaux
inline SymFun catalan_flagged_expand(const RootIdeal& psi, const Weight& mu, const Partition& nu,
                                     int k) {
    int r = int(mu.size()), ell = psi.ell;
    if (r < 1 || r > ell) throw HypothesisViolated("flagged expand: r outside [ell]");
    if (!is_pseudopartition(mu))
        throw HypothesisViolated("flagged expand: mu is not a pseudopartition");
    if (int(nu.size()) > ell - r || !is_kbounded(nu, k))
        throw HypothesisViolated("flagged expand: nu outside Par^k_{ell-r}");
    if (mu[r - 1] < (nu.empty() ? 0 : nu[0]))
        throw HypothesisViolated("flagged expand: mu_r < nu_1");
    for (int i = 1; i <= r; ++i)
        if (psi.nr[i - 1] < r - i)
            throw HypothesisViolated("flagged expand: nr(Psi)_i < r-i");
    Weight munu = mu;
    {
        Weight nupad = padded(nu, ell - r);
        munu.insert(munu.end(), nupad.begin(), nupad.end());
    }
    auto st = style(psi, munu);
    for (int i = 1; i <= ell; ++i) {
        if (i <= r && st[i - 1] > k)
            throw HypothesisViolated("flagged expand: style exceeds k in the mu block");
        if (i > r && st[i - 1] != std::min(k, ell - i + munu[i - 1]))
            throw HypothesisViolated("flagged expand: style not saturated in the nu block");
    }
    Weight zeta(r);
    for (int i = 0; i < r; ++i) zeta[i] = k - psi.nr[i];
    Weight lambda = crop(zeta);
    Weight alpha(r);
    std::vector<int> n(r);
    for (int i = 0; i < r; ++i) {
        alpha[i] = lambda[i] - mu[i];
        if (alpha[i] < 0) throw HypothesisViolated("flagged expand: lambda - mu has a negative entry");
        n[i] = i + 1 - (zeta[i] - lambda[i]);
    }
    Partition lanu(lambda.begin(), lambda.end());
    lanu.insert(lanu.end(), nu.begin(), nu.end());
    SymFun base(Basis::kschur, k);
    base.add(trimmed(lanu), TPoly(1));
    SymFun out(Basis::kschur, k);
    for (const auto& T : ctab(alpha, n)) out += pieri_u_word(base, T.creading(), k);
    return out;
}

// k-split of lambda: cut into blocks of length r_i = k - (block head) + 1,
// the last block zero-padded
struct KSplit {
    std::vector<Partition> pieces;
    std::vector<std::pair<int, int>> blocks;  // 1-based inclusive position intervals
};

inline KSplit ksplit(const Partition& lambda, int k) {
    if (!is_kbounded(lambda, k)) throw NotInLambdaK("ksplit: lambda_1 > k");
    KSplit out;
    int pos = 0, len = int(lambda.size());
    while (pos < len) {
        int ri = k - lambda[pos] + 1;
        Partition piece;
        for (int i = 0; i < ri && pos + i < len; ++i) piece.push_back(lambda[pos + i]);
        out.blocks.push_back({pos + 1, pos + ri});
        pos += int(piece.size());
        piece.resize(ri, 0);  // only the final block actually gains zeros
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

// G^{(k)}_lambda = b_{lambda^1} ( ... b_{lambda^{d-1}} ( s_{lambda^d} ))
inline SymFun ksplit_polynomial(const Partition& lambda, int k) {
    auto split = ksplit(lambda, k);
    int d = int(split.pieces.size());
    if (d == 0) return SymFun::one();
    SymFun f = SymFun::schur(trimmed(split.pieces[d - 1]));
    for (int i = d - 2; i >= 0; --i) f = sz_b(split.pieces[i], f);
    return f;
}

// G^{(k)}_lambda in the k-Schur basis: strong Pieri words of SSYT of the
// rectangle complements U^i / lambda^i, alphabets the position blocks N_i
inline SymFun ksplit_to_kschur(const Partition& lambda, int k) {
    auto split = ksplit(lambda, k);
    int d = int(split.pieces.size());
    Partition U;
    for (const auto& piece : split.pieces) {
        int ri = int(piece.size());
        U.insert(U.end(), ri, k - ri + 1);
    }
    SymFun f(Basis::kschur, k);
    f.add(U, TPoly(1));
    for (int i = d - 1; i >= 0; --i) {
        const auto& piece = split.pieces[i];
        int ri = int(piece.size());
        Partition box(ri, k - ri + 1);
        SymFun next(Basis::kschur, k);
        for (const auto& T : ssyt_skew(box, trimmed(piece), split.blocks[i].first,
                                       split.blocks[i].second))
            next += pieri_u_word(f, creading(T), k);
        f = std::move(next);
    }
    return f;
}

namespace detail {

inline const SymFun& gpoly_cached(const Partition& la, int k) {
    static std::map<std::pair<Partition, int>, SymFun> cache;
    auto key = std::make_pair(la, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, ksplit_polynomial(la, k)).first;
    return it->second;
}

}  // namespace detail

// expansion of f in the k-split basis {G^{(k)}_lambda}, by the same
// lex-smallest-first elimination used for the k-Schur basis
inline std::map<Partition, TPoly> gbasis_expand(SymFun f, int k) {
    if (f.basis != Basis::schur) throw BasisMismatch("gbasis_expand: expected Schur basis");
    std::map<Partition, TPoly> out;
    while (!f.terms.empty()) {
        Partition best = f.terms.begin()->first;
        CATFUN_ASSERT(is_kbounded(best, k), "k-split expansion hit a non-k-bounded leading term");
        TPoly c = f.coeff(best);
        const SymFun& g = detail::gpoly_cached(best, k);
        CATFUN_ASSERT(g.coeff(best) == TPoly(1), "k-split polynomial must be unitriangular");
        for (const auto& [la, d] : g.terms) {
            CATFUN_ASSERT(la >= best, "k-split polynomial support must be lex-minimal at lambda");
            f.add(la, -(c * d));
        }
        CATFUN_ASSERT(!f.terms.count(best), "k-split elimination failed to clear a term");
        out[best] = std::move(c);
    }
    return out;
}

// projection killing the G-components with leading part > d
inline SymFun project_pi(const SymFun& f, int k, int d) {
    SymFun out(Basis::schur);
    for (const auto& [la, c] : gbasis_expand(f, k))
        if (la.empty() || la[0] <= d) out += c * detail::gpoly_cached(la, k);
    return out;
}

// the recursively defined k-Schur candidate built from creation plus projection
inline SymFun atilde(const Partition& mu, int k) {
    if (!is_kbounded(mu, k)) throw NotInLambdaK("atilde: mu_1 > k");
    if (mu.empty()) return SymFun::one();
    Partition rest(mu.begin() + 1, mu.end());
    return project_pi(jing_b(mu[0], atilde(rest, k)), k, mu[0]);
}

}  // namespace catfun
