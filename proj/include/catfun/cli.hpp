#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "expansions.hpp"
#include "quantum.hpp"

namespace catfun {
namespace cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- parsing

inline int parse_int(const std::string& s) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("expected an integer, got '" + s + "'");
    return v;
}

// "[2,2,1,1]" or "[2^2,1^2]" or "[]"
inline std::vector<int> parse_int_list(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw UsageError("expected a bracketed list, got '" + s + "'");
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            out.push_back(parse_int(tok));
        } else {
            int val = parse_int(tok.substr(0, caret));
            int rep = parse_int(tok.substr(caret + 1));
            if (rep < 0) throw UsageError("negative exponent in '" + tok + "'");
            out.insert(out.end(), rep, val);
        }
    }
    return out;
}

// "[[1,2],[1,3]]"
inline std::vector<std::pair<int, int>> parse_pair_list(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw UsageError("expected a bracketed pair list, got '" + s + "'");
    std::vector<std::pair<int, int>> out;
    std::string body = s.substr(1, s.size() - 2);
    size_t i = 0;
    while (i < body.size()) {
        if (body[i] == ',') {
            ++i;
            continue;
        }
        auto close = body.find(']', i);
        if (body[i] != '[' || close == std::string::npos)
            throw UsageError("malformed pair list '" + s + "'");
        auto xs = parse_int_list(body.substr(i, close - i + 1));
        if (xs.size() != 2) throw UsageError("each pair must have two entries in '" + s + "'");
        out.push_back({xs[0], xs[1]});
        i = close + 1;
    }
    return out;
}

// segment forms: nr=[..], pairs=[[..],..], deltak(k,[mu]); '+' joins segments by uplus.
// ell < 0 means "infer"; a pairs segment then needs ell from the caller.
inline RootIdeal parse_ideal(const std::string& spec, int ell = -1) {
    std::vector<std::string> segs;
    int depth = 0;
    std::string cur;
    for (char c : spec) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == '+' && depth == 0) {
            segs.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    segs.push_back(cur);

    std::vector<RootIdeal> parts;
    for (const auto& seg : segs) {
        if (seg.rfind("nr=", 0) == 0) {
            auto nr = parse_int_list(seg.substr(3));
            parts.push_back(RootIdeal(int(nr.size()), nr));
        } else if (seg.rfind("pairs=", 0) == 0) {
            if (segs.size() != 1 || ell < 0)
                throw UsageError("pairs=... needs a known length and cannot be joined with +");
            parts.push_back(make_root_ideal(ell, parse_pair_list(seg.substr(6))));
        } else if (seg.rfind("deltak(", 0) == 0 && seg.back() == ')') {
            std::string body = seg.substr(7, seg.size() - 8);
            auto comma = body.find(',');
            if (comma == std::string::npos) throw UsageError("deltak needs (k,[mu])");
            int k = parse_int(body.substr(0, comma));
            auto mu = parse_int_list(body.substr(comma + 1));
            parts.push_back(delta_k(mu, k));
        } else {
            throw UsageError("unrecognized ideal segment '" + seg + "'");
        }
    }
    RootIdeal psi = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) psi = uplus(psi, parts[i]);
    if (ell >= 0 && psi.ell != ell)
        throw std::invalid_argument("ideal length " + std::to_string(psi.ell) +
                                    " does not match weight length " + std::to_string(ell));
    return psi;
}

// "434321" (digits) or "[4,3,4,3,2,1]"
inline std::vector<int> parse_word(const std::string& s) {
    if (!s.empty() && s.front() == '[') return parse_int_list(s);
    std::vector<int> out;
    for (char c : s) {
        if (c < '1' || c > '9') throw UsageError("word must be digits 1-9 or a bracketed list");
        out.push_back(c - '0');
    }
    return out;
}

inline Permutation parse_perm(const std::string& s) {
    auto w = s.empty() || s.front() == '[' ? parse_int_list(s) : parse_word(s);
    try {
        return Permutation(w);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + ": '" + s + "'");
    }
}

// ---------------------------------------------------------------- output

inline std::string list_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

inline std::string coeff_json(const TPoly& c) {
    std::string s = "[";
    for (size_t i = 0; i < c.coeffs.size(); ++i)
        s += (i ? "," : "") + c.coeffs[i].get_str();
    return s + "]";
}

inline std::string term_str(const TPoly& c, const Partition& la, const std::string& sym) {
    std::string p = c.pretty();
    if (la.empty()) return p;
    if (p == "1") return sym + list_str(la);
    bool wrap = p.find_first_of("+-", 1) != std::string::npos;
    if (wrap) p = "(" + p + ")";
    return p + "*" + sym + list_str(la);
}

inline void print_symfun(std::ostream& out, const SymFun& f, bool json) {
    std::string sym = f.basis == Basis::kschur ? "sk" : "s";
    if (json) {
        out << "{\"basis\":\"" << (f.basis == Basis::kschur ? "kschur" : "schur")
            << "\",\"k\":" << f.k << ",\"terms\":[";
        bool first = true;
        for (const auto& [la, c] : f.terms) {
            if (!first) out << ",";
            first = false;
            out << "{\"lambda\":" << list_str(la) << ",\"coeff\":" << coeff_json(c)
                << ",\"pretty\":\"" << c.pretty() << "\"}";
        }
        out << "]}\n";
        return;
    }
    if (f.terms.empty()) {
        out << "0\n";
        return;
    }
    bool first = true;
    for (const auto& [la, c] : f.terms) {
        if (!first) out << " + ";
        first = false;
        out << term_str(c, la, sym);
    }
    out << "\n";
}

// ---------------------------------------------------------------- flags

struct Args {
    std::map<std::string, std::string> kv;

    bool has(const std::string& name) const { return kv.count(name) > 0; }
    std::string get(const std::string& name) const {
        auto it = kv.find(name);
        if (it == kv.end()) throw UsageError("missing required flag --" + name);
        return it->second;
    }
    std::string get_or(const std::string& name, const std::string& dflt) const {
        auto it = kv.find(name);
        return it == kv.end() ? dflt : it->second;
    }
};

inline Args parse_args(const std::vector<std::string>& argv, size_t from,
                       const std::set<std::string>& valued, const std::set<std::string>& flags) {
    Args a;
    for (size_t i = from; i < argv.size(); ++i) {
        const std::string& t = argv[i];
        if (t.rfind("--", 0) != 0) throw UsageError("expected a flag, got '" + t + "'");
        std::string name = t.substr(2);
        if (flags.count(name)) {
            a.kv[name] = "true";
        } else if (valued.count(name)) {
            if (i + 1 >= argv.size()) throw UsageError("flag --" + name + " needs a value");
            a.kv[name] = argv[++i];
        } else {
            throw UsageError("unknown flag --" + name);
        }
    }
    return a;
}

// ---------------------------------------------------------------- check suites

struct SuiteResult {
    long cases = 0;
    long failures = 0;
};

// operator route vs direct Catalan functions over all ideals of a fixed length
inline SuiteResult suite_operator_action(int ell, int kbound) {
    SuiteResult r;
    for (const auto& psi : all_root_ideals(ell))
        for (const auto& mu : park_ell(kbound, ell)) {
            Weight gamma = padded(mu, ell);
            ++r.cases;
            if (catalan_operator(psi, gamma, SymFun::one()) != catalan_function(psi, gamma))
                ++r.failures;
        }
    return r;
}

// combinatorial strong Pieri vs the Catalan-function route
inline SuiteResult suite_pieri(int maxk, int maxell) {
    SuiteResult r;
    for (int k = 1; k <= maxk; ++k)
        for (int ell = 1; ell <= maxell; ++ell)
            for (const auto& mu : park_ell(k, ell)) {
                if (mu.empty()) continue;
                for (int p = 1; p <= ell; ++p) {
                    ++r.cases;
                    SymFun f(Basis::kschur, k);
                    f.add(mu, TPoly(1));
                    if (to_schur_basis(pieri_u_combinatorial(f, p, k)) !=
                        pieri_u_catalan(mu, p, k))
                        ++r.failures;
                }
            }
    return r;
}

// e_ell-perp acts as u_ell ... u_1 on functions spanned by the k-bounded box
inline SuiteResult suite_eperp(int maxk, int maxell) {
    SuiteResult r;
    for (int k = 1; k <= maxk; ++k)
        for (int ell = 1; ell <= maxell; ++ell)
            for (const auto& mu : park_ell(k, ell)) {
                ++r.cases;
                SymFun f(Basis::kschur, k);
                f.add(mu, TPoly(1));
                if (!u_eperp_identity_check(f, ell, k)) ++r.failures;
            }
    return r;
}

// creation-operator Hall-Littlewood vs the full-ideal Catalan function
inline SuiteResult suite_hall_littlewood(int maxsize) {
    SuiteResult r;
    for (int n = 0; n <= maxsize; ++n)
        for (const auto& mu : partitions_of(n)) {
            ++r.cases;
            if (jing_b_seq(mu, SymFun::one()) !=
                catalan_function(RootIdeal::full(int(mu.size())), mu))
                ++r.failures;
        }
    return r;
}

// ceiling/wall zero lemma, multi-mirror zero lemma, removable-root equality
inline SuiteResult suite_lemmas(int maxell, int maxentry) {
    SuiteResult r;
    auto weights = [&](int ell) {
        std::vector<Weight> out;
        Weight w(ell, 0);
        while (true) {
            out.push_back(w);
            int i = 0;
            while (i < ell && w[i] == maxentry) w[i++] = 0;
            if (i == ell) break;
            ++w[i];
        }
        return out;
    };
    for (int ell = 2; ell <= maxell; ++ell)
        for (const auto& psi : all_root_ideals(ell)) {
            BounceGraph bg(psi);
            for (int z = 1; z < ell; ++z) {
                if (!(has_ceiling(psi, z) && has_wall(psi, z))) continue;
                auto delta = removable_root_in_row(psi, z + 1);
                for (const auto& eta : weights(ell)) {
                    if (eta[z - 1] == eta[z] - 1) {
                        ++r.cases;
                        if (!catalan_function(psi, eta).is_zero()) ++r.failures;
                    }
                    if (delta && eta[z - 1] == eta[z]) {
                        ++r.cases;
                        RootIdeal smaller = remove_root(psi, delta->first, delta->second);
                        if (catalan_function(psi, eta) != catalan_function(smaller, eta))
                            ++r.failures;
                    }
                }
            }
            for (int y = 1; y < ell; ++y) {
                if (!has_ceiling(psi, y)) continue;
                for (int w : bg.downpath(y)) {
                    if (w >= ell || w < y || !has_wall(psi, w)) continue;
                    auto path = bg.bpath(y, w);
                    bool mirrors = true;
                    for (int x : path)
                        if (x != w && !has_mirror(psi, x)) mirrors = false;
                    if (!mirrors) continue;
                    for (int z : path)
                        for (const auto& eta : weights(ell)) {
                            bool ok = eta[z - 1] == eta[z] - 1;
                            for (int x : path)
                                if (x != z && eta[x - 1] != eta[x]) ok = false;
                            if (!ok) continue;
                            ++r.cases;
                            if (!catalan_function(psi, eta).is_zero()) ++r.failures;
                        }
                }
            }
        }
    return r;
}

// b_U s^{(k)}_mu = t^d s^{(k)}_{U cup mu}
inline SuiteResult suite_krectangle(int maxk, int maxsize) {
    SuiteResult r;
    for (int k = 2; k <= maxk; ++k)
        for (int rr = 1; rr <= k; ++rr)
            for (int n = 0; n <= maxsize; ++n)
                for (const auto& mu : partitions_of(n, k)) {
                    ++r.cases;
                    Weight U(rr, k - rr + 1);
                    int d = 0;
                    for (int part : mu) d += std::max(0, part - (k - rr + 1));
                    Partition merged = mu;
                    merged.insert(merged.end(), U.begin(), U.end());
                    std::sort(merged.rbegin(), merged.rend());
                    if (sz_b(U, kschur(mu, k)) != TPoly::t_power(d) * kschur(merged, k))
                        ++r.failures;
                }
    return r;
}

// tableau-count route vs Kostka route for quantum structure constants
inline SuiteResult suite_gw_tableau(int maxk) {
    SuiteResult r;
    for (int k = 2; k <= maxk; ++k) {
        std::vector<int> base(k + 1);
        std::iota(base.begin(), base.end(), 1);
        std::vector<Permutation> perms;
        {
            auto w = base;
            do {
                perms.push_back(Permutation(w));
            } while (std::next_permutation(w.begin(), w.end()));
        }
        for (const auto& u : perms) {
            Weight du = descent_vector(u);
            if (psum(du) != 1) continue;
            auto inv = inv_seq(u);
            int m = 1;
            while (m < k + 1 && inv[m] == inv[0]) ++m;
            for (const auto& v : perms) {
                std::vector<int> suffix(v.oneline.begin() + m, v.oneline.end());
                int drops = 0;
                for (size_t i = 0; i < suffix.size(); ++i)
                    if (suffix[i] > suffix[(i + 1) % suffix.size()]) ++drops;
                if (suffix.size() > 1 && drops > 1) continue;
                // every nonzero term of the product, plus degree-shifted zeros
                QuantumClass p = quantum_product(u, v, k);
                for (const auto& [key, c] : p.terms) {
                    Permutation w(key.first);
                    ++r.cases;
                    if (gw_tableau(u, v, w, key.second, k) != c) ++r.failures;
                    Weight d2 = key.second;
                    d2[0] += 1;
                    ++r.cases;
                    if (gw_tableau(u, v, w, d2, k) != gw_invariant(u, v, w, d2, k))
                        ++r.failures;
                }
            }
        }
    }
    return r;
}

// commutativity, unit, associativity at k = 3
inline SuiteResult suite_quantum_axioms() {
    SuiteResult r;
    int k = 3;
    std::vector<Permutation> perms;
    {
        std::vector<int> w = {1, 2, 3, 4};
        do {
            perms.push_back(Permutation(w));
        } while (std::next_permutation(w.begin(), w.end()));
    }
    auto mul_sigma = [&](const QuantumClass& qc, const Permutation& x) {
        QuantumClass out;
        out.k = k;
        for (const auto& [key, c] : qc.terms) {
            QuantumClass piece = quantum_product(Permutation(key.first), x, k);
            for (const auto& [key2, c2] : piece.terms) {
                Weight d = key.second;
                for (int i = 0; i < k; ++i) d[i] += key2.second[i];
                out.terms[{key2.first, d}] += c * c2;
            }
        }
        return out;
    };
    for (const auto& v : perms) {
        ++r.cases;
        QuantumClass want;
        want.k = k;
        want.terms[{v.oneline, Weight(k, 0)}] = 1;
        if (quantum_product(perm_identity(4), v, k) != want) ++r.failures;
    }
    for (const auto& u : perms)
        for (const auto& v : perms) {
            ++r.cases;
            if (quantum_product(u, v, k) != quantum_product(v, u, k)) ++r.failures;
        }
    for (const auto& u : perms)
        for (const auto& v : perms)
            for (const auto& x : perms) {
                ++r.cases;
                if (mul_sigma(quantum_product(u, v, k), x) !=
                    mul_sigma(quantum_product(v, x, k), u))
                    ++r.failures;
            }
    return r;
}

// ---------------------------------------------------------------- subcommands

inline int cmd_catalan(const Args& a, std::ostream& out) {
    auto gamma = parse_int_list(a.get("gamma"));
    RootIdeal psi = parse_ideal(a.get("ideal"), int(gamma.size()));
    SymFun f = catalan_function(psi, gamma);
    if (a.has("t1")) f = specialize_t(f, 1);
    print_symfun(out, f, a.has("json"));
    return 0;
}

inline int cmd_kschur(const Args& a, std::ostream& out) {
    print_symfun(out, kschur(parse_int_list(a.get("mu")), parse_int(a.get("k"))),
                 a.has("json"));
    return 0;
}

inline int cmd_hl(const Args& a, std::ostream& out) {
    auto mu = parse_int_list(a.get("mu"));
    SymFun f = a.has("k") ? hl_to_kschur(mu, parse_int(a.get("k"))) : hall_littlewood(mu);
    print_symfun(out, f, a.has("json"));
    return 0;
}

inline int cmd_hl2kschur(const Args& a, std::ostream& out) {
    print_symfun(out, hl_to_kschur(parse_int_list(a.get("mu")), parse_int(a.get("k"))),
                 a.has("json"));
    return 0;
}

inline int cmd_schur_x_kschur(const Args& a, std::ostream& out) {
    auto mu = parse_int_list(a.get("mu"));
    auto nu = parse_int_list(a.get("nu"));
    int k = parse_int(a.get("k"));
    int rr = a.has("r") ? parse_int(a.get("r")) : int(mu.size());
    print_symfun(out, schur_times_kschur(mu, nu, k, rr), a.has("json"));
    return 0;
}

inline int cmd_ksplit(const Args& a, std::ostream& out) {
    auto lambda = parse_int_list(a.get("lambda"));
    int k = parse_int(a.get("k"));
    auto sp = ksplit(lambda, k);
    bool json = a.has("json");
    if (json) {
        out << "{\"pieces\":[";
        for (size_t i = 0; i < sp.pieces.size(); ++i)
            out << (i ? "," : "") << list_str(sp.pieces[i]);
        out << "],\"blocks\":[";
        for (size_t i = 0; i < sp.blocks.size(); ++i)
            out << (i ? "," : "") << "[" << sp.blocks[i].first << "," << sp.blocks[i].second
                << "]";
        out << "]";
        if (a.has("expand")) {
            out << ",\"polynomial\":";
            std::ostringstream tmp;
            print_symfun(tmp, ksplit_polynomial(lambda, k), true);
            std::string t = tmp.str();
            t.pop_back();  // newline
            out << t;
        }
        out << "}\n";
        return 0;
    }
    out << "pieces:";
    for (const auto& piece : sp.pieces) out << " " << list_str(piece);
    out << "\nblocks:";
    for (const auto& b : sp.blocks) out << " [" << b.first << "," << b.second << "]";
    out << "\n";
    if (a.has("expand")) {
        out << "polynomial: ";
        print_symfun(out, ksplit_polynomial(lambda, k), false);
    }
    return 0;
}

inline void render_chain(std::ostream& out, const StrongTableau& t) {
    const auto& chain = t.chain;
    int m = int(chain.size()) - 1;
    const Partition& outer = chain.back().shape;
    for (int row = 1; row <= int(outer.size()); ++row) {
        for (int col = 1; col <= outer[row - 1]; ++col) {
            int step = 0;  // first chain index whose shape holds the cell
            for (int s2 = 0; s2 <= m; ++s2) {
                const Partition& sh = chain[s2].shape;
                if (row <= int(sh.size()) && col <= sh[row - 1]) {
                    step = s2;
                    break;
                }
            }
            if (step == 0) {
                out << "  . ";
            } else {
                int pos = m - step + 1;  // 1-based position in the word
                bool marked = t.word[pos - 1] == row &&
                              (col == 1 || !(row <= int(chain[step - 1].shape.size()) &&
                                             col - 1 <= chain[step - 1].shape[row - 1]));
                // mark only the leftmost new cell of the marked row at this step
                if (marked && col > 1) {
                    // a cell to the left added at the same step keeps the mark leftmost
                    const Partition& prev = chain[step - 1].shape;
                    int prevlen = row <= int(prev.size()) ? prev[row - 1] : 0;
                    marked = col - 1 == prevlen;
                }
                if (marked)
                    out << "(" << pos << ") ";
                else
                    out << " " << pos << "  ";
            }
        }
        out << "\n";
    }
}

inline int cmd_smt(const Args& a, std::ostream& out) {
    int k = parse_int(a.get("k"));
    auto word = parse_word(a.get("word"));
    auto outside = parse_int_list(a.get("outside"));
    auto tabs = strong_tableaux(word, outside, k);
    bool json = a.has("json");
    bool render = a.get_or("render", "") == "ascii";
    if (json) {
        out << "{\"count\":" << tabs.size() << ",\"tableaux\":[";
        for (size_t i = 0; i < tabs.size(); ++i) {
            const auto& t = tabs[i];
            out << (i ? "," : "") << "{\"inside\":" << list_str(t.inside)
                << ",\"spin\":" << t.spin << ",\"chain\":[";
            for (size_t j = 0; j < t.chain.size(); ++j)
                out << (j ? "," : "") << list_str(t.chain[j].shape);
            out << "]}";
        }
        out << "]}\n";
        return 0;
    }
    out << tabs.size() << " tableaux for word " << list_str(word) << " into "
        << list_str(outside) << "\n";
    for (const auto& t : tabs) {
        out << "inside " << list_str(t.inside) << "  spin " << t.spin << "  chain";
        for (const auto& c : t.chain) out << " " << list_str(c.shape);
        out << "\n";
        if (render) render_chain(out, t);
    }
    return 0;
}

inline int cmd_kostka(const Args& a, std::ostream& out) {
    int k = parse_int(a.get("k"));
    auto mu = parse_int_list(a.get("mu"));
    RootIdeal psi = parse_ideal(a.get("ideal"), int(mu.size()));
    KostkaTable table = catalan_kostka(psi, mu, k);
    if (a.has("json")) {
        out << "{\"k\":" << k << ",\"mu\":" << list_str(mu) << ",\"terms\":[";
        bool first = true;
        for (const auto& [la, c] : table.coeffs) {
            if (!first) out << ",";
            first = false;
            out << "{\"lambda\":" << list_str(la) << ",\"coeff\":" << coeff_json(c)
                << ",\"pretty\":\"" << c.pretty() << "\"}";
        }
        out << "],\"positive\":" << (table.positive ? "true" : "false") << "}\n";
    } else {
        for (const auto& [la, c] : table.coeffs)
            out << "K" << list_str(la) << " = " << c.pretty() << "\n";
        out << "positive: " << (table.positive ? "true" : "false") << "\n";
    }
    if (a.has("check-positive") && !table.positive) return 3;
    return 0;
}

inline int cmd_qprod(const Args& a, std::ostream& out) {
    int k = parse_int(a.get("k"));
    QuantumClass p = quantum_product(parse_perm(a.get("u")), parse_perm(a.get("v")), k);
    if (a.has("json")) {
        out << "{\"k\":" << k << ",\"terms\":[";
        bool first = true;
        for (const auto& [key, c] : p.terms) {
            if (!first) out << ",";
            first = false;
            out << "{\"w\":" << list_str(key.first) << ",\"d\":" << list_str(key.second)
                << ",\"coeff\":" << c.get_str() << "}";
        }
        out << "]}\n";
        return 0;
    }
    for (const auto& [key, c] : p.terms)
        out << "q^" << list_str(key.second) << " * sigma" << list_str(key.first) << " : "
            << c.get_str() << "\n";
    return 0;
}

inline int cmd_gw(const Args& a, std::ostream& out) {
    int k = parse_int(a.get("k"));
    Permutation u = parse_perm(a.get("u")), v = parse_perm(a.get("v")),
                w = parse_perm(a.get("w"));
    Weight d = parse_int_list(a.get("d"));
    std::string method = a.get_or("method", "kostka");
    if (method != "kostka" && method != "tableau" && method != "both")
        throw UsageError("--method must be kostka, tableau, or both");
    mpz_class val;
    if (method == "kostka") {
        val = gw_invariant(u, v, w, d, k);
    } else if (method == "tableau") {
        val = gw_tableau(u, v, w, d, k);
    } else {
        val = gw_invariant(u, v, w, d, k);
        mpz_class other = gw_tableau(u, v, w, d, k);
        CATFUN_ASSERT(val == other, "the two Gromov-Witten routes disagree");
    }
    if (a.has("json"))
        out << "{\"k\":" << k << ",\"coeff\":" << val.get_str() << "}\n";
    else
        out << val.get_str() << "\n";
    return 0;
}

inline int cmd_check(const Args& a, std::ostream& out) {
    int maxk = parse_int(a.get_or("max-k", "3"));
    int maxsize = parse_int(a.get_or("max-size", "7"));
    std::string which = a.get_or("suite", "all");
    std::map<std::string, SuiteResult> results;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    if (want("a")) results["a"] = suite_operator_action(std::min(5, maxsize), std::min(3, maxk));
    if (want("b")) results["b"] = suite_pieri(maxk, std::min(4, maxsize));
    if (want("c")) results["c"] = suite_eperp(std::min(3, maxk), std::min(4, maxsize));
    if (want("d")) results["d"] = suite_hall_littlewood(maxsize);
    if (want("e")) results["e"] = suite_lemmas(std::min(4, maxsize), 3);
    if (want("f")) results["f"] = suite_krectangle(maxk, std::min(6, maxsize));
    if (want("g")) results["g"] = suite_gw_tableau(maxk);
    if (want("h")) results["h"] = suite_quantum_axioms();
    if (results.empty()) throw UsageError("unknown suite '" + which + "'");
    long failures = 0;
    for (const auto& [name, r] : results) {
        out << "suite " << name << ": " << (r.failures ? "FAIL" : "OK") << " (" << r.cases
            << " cases, " << r.failures << " failures)\n";
        failures += r.failures;
    }
    return failures ? 1 : 0;
}

inline int cmd_conjecture_scan(const Args& a, std::ostream& out) {
    int maxk = parse_int(a.get_or("max-k", "4"));
    int maxell = parse_int(a.get_or("max-ell", "4"));
    std::string cursor = a.get_or("cursor", "");
    long done = 0;
    if (!cursor.empty()) {
        std::ifstream in(cursor);
        if (in) in >> done;
    }
    long index = 0, scanned = 0, findings = 0;
    for (int k = 1; k <= maxk; ++k)
        for (int ell = 1; ell <= maxell; ++ell)
            for (const auto& psi : all_root_ideals(ell))
                for (const auto& mu : park_ell(k, ell)) {
                    Weight gamma = padded(mu, ell);
                    auto st = style(psi, gamma);
                    bool inrange = true;
                    for (int sv : st)
                        if (sv > k) inrange = false;
                    if (!inrange) continue;
                    ++index;
                    if (index <= done) continue;
                    KostkaTable table = catalan_kostka(psi, gamma, k);
                    ++scanned;
                    if (!table.positive) {
                        ++findings;
                        for (const auto& [la, c] : table.coeffs)
                            if (!c.nonneg())
                                out << "NEGATIVE k=" << k << " ideal nr=" << list_str(psi.nr)
                                    << " mu=" << list_str(mu) << " lambda=" << list_str(la)
                                    << " coeff=" << c.pretty() << "\n";
                    }
                    if (!cursor.empty()) {
                        std::ofstream cf(cursor, std::ios::trunc);
                        cf << index << "\n";
                    }
                }
    out << "scanned " << scanned << " instances (" << done
        << " skipped via cursor), findings: " << findings << "\n";
    return findings ? 3 : 0;
}

// ---------------------------------------------------------------- driver

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        if (argv.empty()) throw UsageError(
            "expected a subcommand: catalan kschur hl hl2kschur schur-x-kschur ksplit smt "
            "kostka qprod gw check conjecture-scan");
        const std::string& cmd = argv[0];
        std::set<std::string> f0 = {"json"};
        if (cmd == "catalan")
            return cmd_catalan(parse_args(argv, 1, {"ideal", "gamma"}, {"t1", "json"}), out);
        if (cmd == "kschur") return cmd_kschur(parse_args(argv, 1, {"k", "mu"}, f0), out);
        if (cmd == "hl") return cmd_hl(parse_args(argv, 1, {"mu", "k"}, f0), out);
        if (cmd == "hl2kschur")
            return cmd_hl2kschur(parse_args(argv, 1, {"k", "mu"}, f0), out);
        if (cmd == "schur-x-kschur")
            return cmd_schur_x_kschur(parse_args(argv, 1, {"k", "mu", "nu", "r"}, f0), out);
        if (cmd == "ksplit")
            return cmd_ksplit(parse_args(argv, 1, {"k", "lambda"}, {"expand", "json"}), out);
        if (cmd == "smt")
            return cmd_smt(parse_args(argv, 1, {"k", "word", "outside", "render"}, f0), out);
        if (cmd == "kostka")
            return cmd_kostka(
                parse_args(argv, 1, {"k", "ideal", "mu"}, {"check-positive", "json"}), out);
        if (cmd == "qprod") return cmd_qprod(parse_args(argv, 1, {"k", "u", "v"}, f0), out);
        if (cmd == "gw")
            return cmd_gw(parse_args(argv, 1, {"k", "u", "v", "w", "d", "method"}, f0), out);
        if (cmd == "check")
            return cmd_check(parse_args(argv, 1, {"suite", "max-k", "max-size"}, {}), out);
        if (cmd == "conjecture-scan")
            return cmd_conjecture_scan(parse_args(argv, 1, {"max-k", "max-ell", "cursor"}, {}),
                                       out);
        throw UsageError("unknown subcommand '" + cmd + "'");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace catfun
