#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hypcheck/rational.hpp"

namespace hypcheck {

// Dense univariate polynomial over Rational in the indeterminate t.
// Coefficients are stored ascending by degree with trailing zeros trimmed;
// the zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational c) {
        if (!c.is_zero()) coef_.push_back(std::move(c));
    }
    explicit Polynomial(std::vector<Rational> coef) : coef_(std::move(coef)) { trim(); }

    // The monomial t.
    static Polynomial t() { return Polynomial(std::vector<Rational>{0, 1}); }

    const std::vector<Rational>& coefficients() const { return coef_; }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.size() <= 1; }

    Rational coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(coef_.size())) return 0;
        return coef_[static_cast<size_t>(k)];
    }
    const Rational& leading() const { return coef_.back(); }  // requires nonzero

    // Index of the lowest nonzero coefficient: the multiplicity of the root
    // t = 0. Returns -1 for the zero polynomial.
    int low_order() const {
        for (size_t k = 0; k < coef_.size(); ++k)
            if (!coef_[k].is_zero()) return static_cast<int>(k);
        return -1;
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (size_t k = coef_.size(); k-- > 0;) acc = acc * x + coef_[k];
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
        for (size_t k = 0; k < c.size(); ++k) {
            if (k < a.coef_.size()) c[k] += a.coef_[k];
            if (k < b.coef_.size()) c[k] += b.coef_[k];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coef_.size() + b.coef_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coef_.size(); ++i)
            for (size_t j = 0; j < b.coef_.size(); ++j)
                c[i + j] += a.coef_[i] * b.coef_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        return a * Polynomial(s);
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) {
        return a * Polynomial(s);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division by a nonzero divisor: returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw ZeroDenominatorError("polynomial division by zero");
        Polynomial q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Rational factor = r.leading() / d.leading();
            std::vector<Rational> mono(static_cast<size_t>(shift) + 1, Rational(0));
            mono.back() = factor;
            Polynomial m(std::move(mono));
            q = q + m;
            r = r - m * d;
        }
        return {q, r};
    }

    // Divided by the leading coefficient; zero stays zero.
    Polynomial monic() const {
        if (is_zero()) return {};
        Polynomial r = *this;
        Rational lead = r.leading();
        for (auto& c : r.coef_) c /= lead;
        return r;
    }

    // Monic gcd via the Euclidean algorithm.
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Polynomial pow(long e) const {
        Polynomial base = *this, acc = Polynomial(Rational(1));
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Human-readable form, ascending powers: "3/2 + t - 5*t^2"; "0" when zero.
    std::string str() const;

private:
    std::vector<Rational> coef_;

    void trim() {
        while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
    }
};

} // namespace hypcheck
