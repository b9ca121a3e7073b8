// Multivariate polynomials with rational coefficients: the desk-scale model
// of smooth functions on a chart. Derivatives are formal.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace latk {

class Poly {
public:
    using Exponents = std::vector<int>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational& c) {
        Poly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static Poly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
        Poly p(nvars);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.add_term(e, Rational(1));
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("exponent tuple length mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_vars(b);
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& a) {
        Poly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Formal partial derivative with respect to variable i.
    Poly derivative(int i) const {
        if (i < 0 || i >= nvars_) throw std::invalid_argument("derivative variable out of range");
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d = e;
            d[i] -= 1;
            r.add_term(d, Rational(e[i]) * c);
        }
        return r;
    }

    /// Canonical text form, terms in lexicographic exponent order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out += c.str();
            else if (c.is_one()) out += mono;
            else out += c.str() + "*" + mono;
        }
        return out;
    }

private:
    void check_vars(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
    }

    int nvars_;
    std::map<Exponents, Rational> terms_;
};

} // namespace latk
