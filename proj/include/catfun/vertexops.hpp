#pragma once

#include "catalan.hpp"

namespace catfun {

// Garsia-Jing creation operator b_m f = sum_{i,j>=0} (-1)^i t^j h_{m+i+j} e_i-perp h_j-perp f.
// e_i-perp / h_j-perp kill everything beyond deg(f), so both loops are finite.
inline SymFun jing_b(int m, const SymFun& f) {
    if (f.basis != Basis::schur) throw BasisMismatch("jing_b requires Schur basis");
    SymFun out(Basis::schur);
    int d = f.degree();
    for (int j = 0; j <= d; ++j) {
        SymFun gj = perp(f, j, PerpKind::H);
        if (gj.is_zero()) continue;
        int dj = gj.degree();
        for (int i = 0; i <= dj; ++i) {
            SymFun gij = i == 0 ? gj : perp(gj, i, PerpKind::E);
            if (gij.is_zero()) continue;
            int n = m + i + j;
            if (n < 0) continue;
            TPoly fac = TPoly::t_power(j);
            if (i % 2) fac = -fac;
            for (const auto& [la, c] : gij.terms) {
                if (n == 0) {
                    out.add(la, fac * c);
                    continue;
                }
                std::vector<Partition> mus;
                detail::hstrips_up(la, n, mus);
                for (auto& mu : mus) out.add(std::move(mu), fac * c);
            }
        }
    }
    return out;
}

// iterated creation: b-tilde_alpha f = b_{alpha_1}( ... b_{alpha_l}(f) ... )
inline SymFun jing_b_seq(const Weight& alpha, SymFun f) {
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) f = jing_b(*it, std::move(f));
    return f;
}

// modified Hall-Littlewood polynomial H_mu = b_{mu_1} ... b_{mu_l} . 1
inline SymFun hall_littlewood(const Partition& mu) {
    if (!is_partition(mu)) throw std::invalid_argument("hall_littlewood: not a partition");
    SymFun f = jing_b_seq(mu, SymFun::one());
    CATFUN_ASSERT(f == catalan_function(RootIdeal::full(int(mu.size())), mu),
                  "Hall-Littlewood creation must match the full-ideal Catalan function");
    return f;
}

// expansion of prod_{(i,j) in Delta+ \ Psi} (1 - t R_ij) applied to b-tilde_gamma:
// a signed list of t^tpow b-tilde_alpha terms, 2^{#nonroots} of them
struct OperatorExpr {
    int ell = 0;
    std::vector<std::tuple<int, int, Weight>> terms;  // (sign, tpow, alpha)
};

inline OperatorExpr catalan_operator_expr(const RootIdeal& psi, const Weight& gamma) {
    if (int(gamma.size()) != psi.ell)
        throw std::invalid_argument("catalan_operator: length mismatch");
    std::vector<std::pair<int, int>> nonroots;
    for (int i = 1; i <= psi.ell; ++i)
        for (int j = i + 1; j <= psi.ell; ++j)
            if (!psi.has_root(i, j)) nonroots.push_back({i, j});
    OperatorExpr expr;
    expr.ell = psi.ell;
    Weight alpha = gamma;
    auto rec = [&](auto&& self, size_t idx, int sign, int tpow) -> void {
        if (idx == nonroots.size()) {
            expr.terms.push_back({sign, tpow, alpha});
            return;
        }
        self(self, idx + 1, sign, tpow);
        auto [i, j] = nonroots[idx];
        ++alpha[i - 1];
        --alpha[j - 1];
        self(self, idx + 1, -sign, tpow + 1);
        --alpha[i - 1];
        ++alpha[j - 1];
    };
    rec(rec, 0, 1, 0);
    return expr;
}

// apply an OperatorExpr to f; b-tilde applications share suffixes across terms
inline SymFun apply(const OperatorExpr& expr, const SymFun& f) {
    if (f.basis != Basis::schur) throw BasisMismatch("apply requires Schur basis");
    std::map<Weight, SymFun> suffix;  // key: (alpha_p, ..., alpha_ell)
    suffix[{}] = f;
    auto bseq = [&](auto&& self, const Weight& tail) -> const SymFun& {
        auto it = suffix.find(tail);
        if (it != suffix.end()) return it->second;
        Weight rest(tail.begin() + 1, tail.end());
        SymFun g = jing_b(tail[0], self(self, rest));
        return suffix.emplace(tail, std::move(g)).first->second;
    };
    SymFun out(Basis::schur);
    for (const auto& [sign, tpow, alpha] : expr.terms) {
        const SymFun& g = bseq(bseq, alpha);
        TPoly fac = TPoly::t_power(tpow);
        if (sign < 0) fac = -fac;
        for (const auto& [la, c] : g.terms) out.add(la, fac * c);
    }
    return out;
}

inline SymFun catalan_operator(const RootIdeal& psi, const Weight& gamma, const SymFun& f) {
    return apply(catalan_operator_expr(psi, gamma), f);
}

// Shimozono-Zabrocki operator b_alpha = H^{empty ideal}_alpha
inline SymFun sz_b(const Weight& alpha, const SymFun& f) {
    return catalan_operator(RootIdeal::empty(int(alpha.size())), alpha, f);
}

}  // namespace catfun
