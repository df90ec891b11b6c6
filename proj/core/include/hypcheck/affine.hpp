#pragma once

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hypcheck/scalar.hpp"

namespace hypcheck {

class AffineMap;

// Degree-one expression c0 + cn*n + sum_i c_i * p_i in the parameters p_i of
// an identity and the formal order symbol n. All coefficients are rational;
// n stays symbolic until evaluation.
class AffineExpr {
public:
    explicit AffineExpr(int arity) : coef_(static_cast<size_t>(arity), Rational(0)) {}

    static AffineExpr constant(int arity, Rational c) {
        AffineExpr e(arity);
        e.const_ = std::move(c);
        return e;
    }
    static AffineExpr param(int arity, int index) {
        AffineExpr e(arity);
        e.coef_.at(static_cast<size_t>(index)) = 1;
        return e;
    }
    static AffineExpr n_term(int arity, Rational coeff = 1) {
        AffineExpr e(arity);
        e.ncoef_ = std::move(coeff);
        return e;
    }

    int arity() const { return static_cast<int>(coef_.size()); }
    const Rational& coef(int i) const { return coef_.at(static_cast<size_t>(i)); }
    const Rational& n_coef() const { return ncoef_; }
    const Rational& constant_term() const { return const_; }
    bool is_constant() const {
        if (!ncoef_.is_zero()) return false;
        for (const auto& c : coef_)
            if (!c.is_zero()) return false;
        return true;
    }

    AffineExpr operator-() const {
        AffineExpr e = *this;
        for (auto& c : e.coef_) c = -c;
        e.ncoef_ = -e.ncoef_;
        e.const_ = -e.const_;
        return e;
    }
    AffineExpr& operator+=(const AffineExpr& o) {
        require_same_arity(o);
        for (size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
        ncoef_ += o.ncoef_;
        const_ += o.const_;
        return *this;
    }
    AffineExpr& operator-=(const AffineExpr& o) { return *this += -o; }
    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
    friend AffineExpr operator*(const Rational& s, AffineExpr a) {
        for (auto& c : a.coef_) c *= s;
        a.ncoef_ *= s;
        a.const_ *= s;
        return a;
    }
    friend AffineExpr operator+(AffineExpr a, const Rational& c) {
        a.const_ += c;
        return a;
    }
    friend AffineExpr operator-(AffineExpr a, const Rational& c) {
        a.const_ -= c;
        return a;
    }
    friend AffineExpr operator+(const Rational& c, AffineExpr a) { return a + c; }
    friend AffineExpr operator-(const Rational& c, const AffineExpr& a) { return (-a) + c; }

    friend bool operator==(const AffineExpr&, const AffineExpr&) = default;

    template <ScalarField S>
    S evaluate(const std::vector<S>& params, long n) const {
        if (static_cast<int>(params.size()) != arity()) throw ArityMismatchError();
        S acc = S(const_ + ncoef_ * Rational(n));
        for (size_t i = 0; i < coef_.size(); ++i) {
            if (coef_[i].is_zero()) continue;
            acc = acc + S(coef_[i]) * params[i];
        }
        return acc;
    }

    // Composition with a parameter substitution: the result reads its inputs
    // through the rows of m.
    AffineExpr substitute(const AffineMap& m) const;

    // Rendering like "(1 + a - b)/2": integer coefficients over a common
    // denominator, parameters named by the caller.
    std::string str(std::span<const std::string> names) const;

private:
    std::vector<Rational> coef_;
    Rational ncoef_ = 0;
    Rational const_ = 0;

    void require_same_arity(const AffineExpr& o) const {
        if (arity() != o.arity()) throw ArityMismatchError();
    }
};

// Affine substitution of identity parameters: out_arity expressions, each in
// the in_arity input parameters and n. Symmetry relations, reparameterizing
// maps and their composites all live here.
class AffineMap {
public:
    explicit AffineMap(std::vector<AffineExpr> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw ArityMismatchError("affine map needs at least one row");
        for (const auto& r : rows_)
            if (r.arity() != rows_.front().arity()) throw ArityMismatchError();
    }

    static AffineMap identity(int arity) {
        std::vector<AffineExpr> rows;
        for (int i = 0; i < arity; ++i) rows.push_back(AffineExpr::param(arity, i));
        return AffineMap(std::move(rows));
    }
    // image[i] is the input slot that lands in output slot i.
    static AffineMap permutation(const std::vector<int>& image) {
        int arity = static_cast<int>(image.size());
        std::vector<AffineExpr> rows;
        for (int i : image) rows.push_back(AffineExpr::param(arity, i));
        return AffineMap(std::move(rows));
    }

    int in_arity() const { return rows_.front().arity(); }
    int out_arity() const { return static_cast<int>(rows_.size()); }
    const std::vector<AffineExpr>& rows() const { return rows_; }
    const AffineExpr& row(int i) const { return rows_.at(static_cast<size_t>(i)); }

    template <ScalarField S>
    std::vector<S> apply(const std::vector<S>& params, long n) const {
        std::vector<S> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(r.template evaluate<S>(params, n));
        return out;
    }

    // compose(f, g)(x) = f(g(x)): g is applied first.
    friend AffineMap compose(const AffineMap& f, const AffineMap& g) {
        if (f.in_arity() != g.out_arity()) throw ArityMismatchError();
        std::vector<AffineExpr> rows;
        rows.reserve(f.rows_.size());
        for (const auto& r : f.rows_) rows.push_back(r.substitute(g));
        return AffineMap(std::move(rows));
    }

    // Inverse of a square map; Error when singular.
    AffineMap inverse() const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;

    // "(a, b, 1 + a - c)" over the given input parameter names.
    std::string str(std::span<const std::string> names) const {
        std::string out = "(";
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) out += ", ";
            out += rows_[i].str(names);
        }
        return out + ")";
    }

private:
    std::vector<AffineExpr> rows_;
};

inline AffineExpr AffineExpr::substitute(const AffineMap& m) const {
    if (arity() != m.out_arity()) throw ArityMismatchError();
    AffineExpr out = AffineExpr::constant(m.in_arity(), const_);
    out += AffineExpr::n_term(m.in_arity(), ncoef_);
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i].is_zero()) continue;
        out += coef_[i] * m.row(static_cast<int>(i));
    }
    return out;
}

inline AffineMap AffineMap::inverse() const {
    int k = out_arity();
    if (k != in_arity()) throw ArityMismatchError("only square maps can be inverted");
    // Gaussian elimination on [M | I], tracking the offsets separately:
    // y = M x + u + v n  =>  x = M^-1 y - M^-1 u - (M^-1 v) n.
    std::vector<std::vector<Rational>> m(static_cast<size_t>(k));
    std::vector<std::vector<Rational>> inv(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        m[i].resize(static_cast<size_t>(k));
        inv[i].assign(static_cast<size_t>(k), Rational(0));
        inv[i][static_cast<size_t>(i)] = 1;
        for (int j = 0; j < k; ++j) m[i][static_cast<size_t>(j)] = rows_[static_cast<size_t>(i)].coef(j);
    }
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("affine map is singular");
        std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(pivot)]);
        std::swap(inv[static_cast<size_t>(col)], inv[static_cast<size_t>(pivot)]);
        Rational p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int j = 0; j < k; ++j) {
            m[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
            inv[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
        }
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
                inv[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * inv[static_cast<size_t>(col)][static_cast<size_t>(j)];
            }
        }
    }
    std::vector<AffineExpr> rows;
    for (int i = 0; i < k; ++i) {
        AffineExpr e(k);
        Rational uc = 0, un = 0;  // -(M^-1 u), -(M^-1 v) accumulators
        for (int j = 0; j < k; ++j) {
            e += inv[static_cast<size_t>(i)][static_cast<size_t>(j)] * AffineExpr::param(k, j);
            uc -= inv[static_cast<size_t>(i)][static_cast<size_t>(j)] * rows_[static_cast<size_t>(j)].constant_term();
            un -= inv[static_cast<size_t>(i)][static_cast<size_t>(j)] * rows_[static_cast<size_t>(j)].n_coef();
        }
        e += AffineExpr::constant(k, uc);
        e += AffineExpr::n_term(k, un);
        rows.push_back(std::move(e));
    }
    return AffineMap(std::move(rows));
}

} // namespace hypcheck
