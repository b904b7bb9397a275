#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "root_ideal.hpp"
#include "symfun.hpp"

namespace catfun {

namespace detail {

// DFS expansion of prod_{(i,j) in Psi} (1 - t R_ij)^{-1} s_gamma.
// Roots are processed in decreasing column, then decreasing row, so once the
// cursor passes column j no remaining root can raise coordinate >= j; a state
// with w_c + ell - c < 0 for such c has a permanently zero Jacobi-Trudi row
// and is pruned.  Suffix results are memoized on (root index, weight).
struct CatalanDFS {
    int ell;
    std::vector<std::pair<int, int>> roots;  // sorted: j desc, then i desc
    std::map<std::pair<int, Weight>, SymFun> memo;

    explicit CatalanDFS(const RootIdeal& psi) : ell(psi.ell) {
        for (int j = ell; j >= 2; --j)
            for (int i = j - 1; i >= 1; --i)
                if (psi.has_root(i, j)) roots.push_back({i, j});
    }

    SymFun run(const Weight& w, size_t idx) {
        int jcur = idx < roots.size() ? roots[idx].second : 1;
        for (int c = jcur; c <= ell; ++c)
            if (w[c - 1] + ell - c < 0) return SymFun(Basis::schur);
        if (idx == roots.size()) {
            SymFun leaf(Basis::schur);
            auto [sg, la] = straighten_schur(w);
            if (sg != 0) leaf.add(la, TPoly(sg));
            return leaf;
        }
        auto key = std::make_pair(int(idx), w);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        auto [i, j] = roots[idx];
        SymFun acc(Basis::schur);
        Weight v = w;
        for (int m = 0; v[j - 1] + ell - j >= 0; ++m) {
            SymFun sub = run(v, idx + 1);
            for (const auto& [la, c] : sub.terms) acc.add(la, c.shifted(m));
            ++v[i - 1];
            --v[j - 1];
        }
        memo.emplace(std::move(key), acc);
        return acc;
    }
};

// process-wide memo on (nr, gamma), optionally persisted via CATALAN_CACHE_DIR
struct CatalanCache {
    std::map<std::pair<std::vector<int>, Weight>, SymFun> table;
    std::string file;

    CatalanCache() {
        if (const char* dir = std::getenv("CATALAN_CACHE_DIR")) {
            file = std::string(dir) + "/catalan_cache.txt";
            load();
        }
    }

    static std::string render_vec(const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    }
    static std::vector<int> parse_vec(const std::string& s) {
        std::vector<int> v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
        return v;
    }

    void load() {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) {
            // format: nr|gamma|la=coeffs;la=coeffs;...   coeffs ascending, comma separated
            std::stringstream ss(line);
            std::string nrs, gs, terms;
            if (!std::getline(ss, nrs, '|') || !std::getline(ss, gs, '|')) continue;
            std::getline(ss, terms, '|');
            SymFun f(Basis::schur);
            std::stringstream ts(terms);
            std::string term;
            while (std::getline(ts, term, ';')) {
                auto eq = term.find('=');
                if (eq == std::string::npos) continue;
                Partition la = parse_vec(term.substr(0, eq));
                TPoly c;
                for (auto& x : parse_vec(term.substr(eq + 1))) c.coeffs.push_back(x);
                c.trim();
                f.add(la, c);
            }
            table[{parse_vec(nrs), parse_vec(gs)}] = std::move(f);
        }
    }

    void persist(const std::vector<int>& nr, const Weight& gamma, const SymFun& f) {
        if (file.empty()) return;
        std::ofstream out(file, std::ios::app);
        out << render_vec(nr) << '|' << render_vec(gamma) << '|';
        bool first = true;
        for (const auto& [la, c] : f.terms) {
            if (!first) out << ';';
            first = false;
            out << render_vec(la) << '=';
            for (size_t i = 0; i < c.coeffs.size(); ++i)
                out << (i ? "," : "") << c.coeffs[i].get_str();
        }
        out << '\n';
    }

    static CatalanCache& instance() {
        static CatalanCache c;
        return c;
    }
};

}  // namespace detail

// H(Psi;gamma) in the Schur basis (Def. of Catalan functions)
inline SymFun catalan_function(const RootIdeal& psi, const Weight& gamma) {
    if (int(gamma.size()) != psi.ell)
        throw std::invalid_argument("catalan_function: length mismatch");
    auto& cache = detail::CatalanCache::instance();
    auto key = std::make_pair(psi.nr, gamma);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
    detail::CatalanDFS dfs(psi);
    SymFun f = dfs.run(gamma, 0);
    cache.table.emplace(key, f);
    cache.persist(psi.nr, gamma, f);
    return f;
}

struct DownpathTerm {
    int tpow;
    RootIdeal psi;
    Weight eta;
};

// H(Psi;eta) = sum over z in downpath(p) of t^{B(p,z)} H(Psi^z; eta+e_p-e_z),
// where Psi^z drops z's removable root except at the path bottom
inline std::vector<DownpathTerm> downpath_expand(const RootIdeal& psi, const Weight& eta, int p) {
    if (p < 1 || p > psi.ell) throw std::invalid_argument("downpath_expand: p out of range");
    BounceGraph bg(psi);
    auto path = bg.downpath(p);
    std::vector<DownpathTerm> out;
    for (size_t idx = 0; idx < path.size(); ++idx) {
        int z = path[idx];
        RootIdeal piece = psi;
        if (idx + 1 < path.size()) piece = remove_root(psi, z, *bg.down(z));
        Weight w = eta;
        ++w[p - 1];
        --w[z - 1];
        out.push_back({int(idx), std::move(piece), std::move(w)});
    }
    return out;
}

}  // namespace catfun
