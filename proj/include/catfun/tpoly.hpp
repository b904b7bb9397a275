#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace catfun {

// Z[t] with arbitrary-precision coefficients.
// coeffs[i] = coefficient of t^i; empty vector means 0, otherwise back() != 0.
struct TPoly {
    std::vector<mpz_class> coeffs;

    TPoly() = default;
    explicit TPoly(long c) { if (c != 0) coeffs.assign(1, mpz_class(c)); }
    explicit TPoly(mpz_class c) { if (c != 0) coeffs.assign(1, std::move(c)); }

    static TPoly t_power(int e, mpz_class c = 1) {
        TPoly p;
        if (c != 0) {
            p.coeffs.assign(e + 1, mpz_class(0));
            p.coeffs[e] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return int(coeffs.size()) - 1; }  // -1 for 0

    mpz_class coeff(int i) const {
        if (i < 0 || i >= int(coeffs.size())) return 0;
        return coeffs[i];
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    TPoly& operator+=(const TPoly& o) {
        if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), mpz_class(0));
        for (size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        trim();
        return *this;
    }
    TPoly& operator-=(const TPoly& o) {
        if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), mpz_class(0));
        for (size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        trim();
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { a += b; return a; }
    friend TPoly operator-(TPoly a, const TPoly& b) { a -= b; return a; }
    TPoly operator-() const {
        TPoly r = *this;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, mpz_class(0));
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            for (size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        return r;
    }
    TPoly& operator*=(const TPoly& o) { *this = *this * o; return *this; }

    friend TPoly operator*(const mpz_class& c, TPoly p) {
        if (c == 0) return TPoly();
        for (auto& x : p.coeffs) x *= c;
        return p;
    }

    // multiply by t^e
    TPoly shifted(int e) const {
        if (is_zero() || e == 0) return *this;
        TPoly r;
        r.coeffs.assign(coeffs.size() + e, mpz_class(0));
        for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i + e] = coeffs[i];
        return r;
    }

    mpz_class eval(const mpz_class& t0) const {
        mpz_class r = 0;
        for (size_t i = coeffs.size(); i-- > 0;) r = r * t0 + coeffs[i];
        return r;
    }

    bool nonneg() const {
        for (const auto& c : coeffs)
            if (c < 0) return false;
        return true;
    }

    bool operator==(const TPoly& o) const { return coeffs == o.coeffs; }
    bool operator!=(const TPoly& o) const { return coeffs != o.coeffs; }

    // "t^4+2*t+1" style, descending powers
    std::string pretty() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = coeffs.size(); i-- > 0;) {
            const mpz_class& c = coeffs[i];
            if (c == 0) continue;
            mpz_class a = abs(c);
            if (s.empty()) {
                if (c < 0) s += "-";
            } else {
                s += (c < 0) ? "-" : "+";
            }
            if (i == 0) {
                s += a.get_str();
            } else {
                if (a != 1) { s += a.get_str(); s += "*"; }
                s += "t";
                if (i >= 2) { s += "^"; s += std::to_string(i); }
            }
        }
        return s;
    }
};

}  // namespace catfun
