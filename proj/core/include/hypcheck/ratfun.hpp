#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "hypcheck/polynomial.hpp"

namespace hypcheck {

// Degree cap for rational-function arithmetic. The catalog's symbolic work
// stays far below this; hitting it means a composition ran away.
inline constexpr int ratfun_degree_bound = 512;

// A pole of known order at t = 0.
struct PoleAtZero {
    int order = 0;
    friend bool operator==(const PoleAtZero&, const PoleAtZero&) = default;
};

// Either a finite limit value or a pole of some order.
using LimitResult = std::variant<Rational, PoleAtZero>;

// Rational function of t in canonical form: numerator and denominator
// coprime and the denominator monic. Canonical form is restored after every
// operation, so equality is componentwise. Elements of Q embed as constants.
class RatFun {
public:
    RatFun() : num_(Rational(0)), den_(Rational(1)) {}
    RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFun(int v) : RatFun(Rational(v)) {}
    RatFun(long v) : RatFun(Rational(v)) {}
    RatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroDenominatorError("zero denominator polynomial");
        normalize();
    }
    explicit RatFun(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}

    // The indeterminate t.
    static RatFun t() { return RatFun(Polynomial::t()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == Polynomial(Rational(1)); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    std::optional<Rational> as_rational() const {
        if (!is_constant()) return std::nullopt;
        if (num_.is_zero()) return Rational(0);
        return num_.coefficient(0) / den_.coefficient(0);
    }
    std::optional<BigInt> as_integer() const {
        auto r = as_rational();
        if (!r) return std::nullopt;
        return r->as_integer();
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw ZeroDenominatorError("division by zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw ZeroDenominatorError("zero raised to a negative power");
            return RatFun(den_, num_).pow(-e);
        }
        return RatFun(num_.pow(e), den_.pow(e));
    }

    // Limit as t -> 0. In canonical form num and den share no root, so the
    // limit is finite exactly when den(0) != 0; otherwise the pole order is
    // the multiplicity of t in the denominator.
    LimitResult limit_at_zero() const {
        Rational d0 = den_.eval(0);
        if (!d0.is_zero()) return num_.eval(0) / d0;
        return PoleAtZero{den_.low_order()};
    }

    // "(num)/(den)" with constant denominators folded in; see parse.cpp.
    std::string str() const;

private:
    Polynomial num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            den_ = den_ * (Rational(1) / lead);
            num_ = num_ * (Rational(1) / lead);
        }
        if (num_.degree() > ratfun_degree_bound || den_.degree() > ratfun_degree_bound)
            throw DegreeBoundError(std::max(num_.degree(), den_.degree()));
    }
};

} // namespace hypcheck
