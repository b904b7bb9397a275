#pragma once

#include <sstream>

#include "catalan.hpp"
#include "cores.hpp"

namespace catfun {

// s^{(k)}_mu = H(Delta^k(mu); mu), in the Schur basis
inline SymFun kschur(const Partition& mu, int k) {
    return catalan_function(delta_k(mu, k), mu);
}

// Schur expansion of a k-Schur-basis element
inline SymFun to_schur_basis(const SymFun& f) {
    if (f.basis != Basis::kschur) throw BasisMismatch("to_schur_basis: expected k-Schur basis");
    SymFun out(Basis::schur);
    for (const auto& [mu, c] : f.terms) {
        for (const auto& [la, d] : kschur(mu, f.k).terms) out.add(la, c * d);
    }
    return out;
}

// greedy unitriangular elimination: repeatedly strip the lex-smallest support
// partition (dominance-minimal, since s^{(k)}_mu = s_mu + strictly dominating
// terms and dominance refines lex); zero remainder iff f lies in Lambda^k
inline SymFun to_kschur_basis(SymFun f, int k) {
    if (f.basis != Basis::schur) throw BasisMismatch("to_kschur_basis: expected Schur basis");
    SymFun out(Basis::kschur, k);
    while (!f.terms.empty()) {
        Partition best = f.terms.begin()->first;  // map order = lex
        if (!is_kbounded(best, k)) {
            std::ostringstream msg;
            msg << "to_kschur_basis: support partition (";
            for (size_t i = 0; i < best.size(); ++i) msg << (i ? "," : "") << best[i];
            msg << ") is not " << k << "-bounded";
            throw NotInLambdaK(msg.str());
        }
        TPoly c = f.coeff(best);
        SymFun piece = kschur(best, k);
        if (!(piece.coeff(best) == TPoly(1)))
            throw NotInLambdaK("to_kschur_basis: elimination failed to clear a term");
        out.add(best, c);
        for (const auto& [la, d] : piece.terms) f.add(la, -(c * d));
        if (f.terms.count(best))
            throw NotInLambdaK("to_kschur_basis: elimination failed to clear a term");
    }
    return out;
}

// s^{(k)}_mu . u_p = sum over strong marked covers into p^{-1}(mu) with mark p
// of t^spin s^{(k)}_{p(inner)}, extended linearly
inline SymFun pieri_u_combinatorial(const SymFun& f, int p, int k) {
    if (f.basis != Basis::kschur || f.k != k)
        throw BasisMismatch("pieri_u_combinatorial: expected k-Schur basis at level k");
    SymFun out(Basis::kschur, k);
    for (const auto& [mu, c] : f.terms)
        for (const auto& cov : strong_marked_covers_down(core_of_partition(mu, k)))
            if (cov.mark == p) out.add(p_of_core(cov.inner), c.shifted(cov.spin));
    return out;
}

// apply u_{w_1} first, then u_{w_2}, ...
inline SymFun pieri_u_word(SymFun f, const std::vector<int>& word, int k) {
    for (int p : word) f = pieri_u_combinatorial(f, p, k);
    return f;
}

// s^{(k)}_mu . u_p = H(Delta^k(mu); mu - eps_p), in the Schur basis
inline SymFun pieri_u_catalan(const Partition& mu, int p, int k) {
    if (p < 1) throw std::invalid_argument("pieri_u_catalan: p out of range");
    int ell = std::max<int>(p, int(mu.size()));
    Weight w = padded(mu, ell);
    --w[p - 1];
    return catalan_function(delta_k(mu, k, ell), w);
}

struct KostkaTable {
    RootIdeal psi;
    Weight mu;
    int k = 0;
    std::map<Partition, TPoly> coeffs;
    bool positive = true;
};

// K^{Psi,k}_{lambda,mu}(t): k-Schur expansion of H(Psi;mu) with positivity flag
inline KostkaTable catalan_kostka(const RootIdeal& psi, const Weight& mu, int k) {
    KostkaTable table{psi, mu, k, {}, true};
    SymFun f = to_kschur_basis(catalan_function(psi, mu), k);
    for (const auto& [la, c] : f.terms) {
        table.coeffs[la] = c;
        if (!c.nonneg()) table.positive = false;
    }
    return table;
}

// f . e_ell-perp == f . u_ell u_{ell-1} ... u_1, for f spanned by Par^k_ell
inline bool u_eperp_identity_check(const SymFun& f, int ell, int k) {
    if (f.basis != Basis::kschur || f.k != k)
        throw BasisMismatch("u_eperp_identity_check: expected k-Schur basis at level k");
    for (const auto& [mu, c] : f.terms)
        if (!fits_box(mu, k, ell))
            throw std::invalid_argument("u_eperp_identity_check: support outside Par^k_ell");
    SymFun lhs = perp(to_schur_basis(f), ell, PerpKind::E);
    std::vector<int> word(ell);
    for (int i = 0; i < ell; ++i) word[i] = ell - i;
    SymFun rhs = to_schur_basis(pieri_u_word(f, word, k));
    return lhs == rhs;
}

}  // namespace catfun
