#include "hypcheck/parse.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "hypcheck/affine.hpp"

namespace hypcheck {

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        Rational c = coefficient(k);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        std::string term;
        if (k == 0) {
            term = c.str();
        } else {
            term = (k == 1) ? "t" : "t^" + std::to_string(k);
            if (!c.is_one()) term = c.str() + "*" + term;
        }
        if (first) {
            out = neg ? "-" + term : term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

std::string RatFun::str() const {
    if (den_.is_constant()) return num_.str();  // canonical form makes it 1
    std::string n = num_.str();
    std::string d = den_.str();
    // Multi-term operands need parentheses; single terms survive the
    // left-associative '/' unharmed.
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    if (d.find(' ') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

std::string AffineExpr::str(std::span<const std::string> names) const {
    if (static_cast<int>(names.size()) != arity())
        throw ArityMismatchError("parameter name count does not match expression arity");
    BigInt common = 1;
    for (const auto& c : coef_) common = boost::multiprecision::lcm(common, c.den());
    common = boost::multiprecision::lcm(common, ncoef_.den());
    common = boost::multiprecision::lcm(common, const_.den());
    const Rational scale{common};

    std::string out;
    bool first = true;
    int terms = 0;
    auto add_term = [&](const Rational& coeff, const std::string& symbol) {
        if (coeff.is_zero()) return;
        ++terms;
        BigInt v = (coeff * scale).num();
        bool neg = v < 0;
        BigInt mag = neg ? BigInt(-v) : v;
        std::string body;
        if (symbol.empty())
            body = mag.str();
        else
            body = (mag == 1) ? symbol : mag.str() + "*" + symbol;
        if (first) {
            out = neg ? "-" + body : body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    };
    add_term(const_, "");
    for (size_t i = 0; i < coef_.size(); ++i) add_term(coef_[i], names[i]);
    add_term(ncoef_, "n");
    if (out.empty()) return "0";
    if (common == 1) return out;
    if (terms > 1) out = "(" + out + ")";
    return out + "/" + common.str();
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}

    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }

    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(s_) + "\"");
    }

    RatFun parse_expression() {
        RatFun v = parse_term();
        for (;;) {
            if (consume('+'))
                v = v + parse_term();
            else if (consume('-'))
                v = v - parse_term();
            else
                return v;
        }
    }

    // Count prefix of the pFq form, a bare digit run.
    long parse_count() {
        skip_ws();
        if (pos_ >= s_.size() || !is_digit(s_[pos_])) fail("expected a parameter count");
        return digits().convert_to<long>();
    }

    void expect_series_f() {
        if (pos_ < s_.size() && (s_[pos_] == 'F' || s_[pos_] == 'f')) {
            ++pos_;
            return;
        }
        fail("expected 'F'");
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    RatFun parse_term() {
        RatFun v = parse_factor();
        for (;;) {
            if (consume('*')) {
                v = v * parse_factor();
            } else if (consume('/')) {
                RatFun d = parse_factor();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFun parse_factor() {
        if (consume('-')) return -parse_factor();
        if (consume('+')) return parse_factor();
        RatFun v = parse_primary();
        if (consume('^')) {
            long e = parse_exponent();
            if (e < 0 && v.is_zero()) fail("zero raised to a negative power");
            v = v.pow(e);
        }
        return v;
    }

    RatFun parse_primary() {
        skip_ws();
        if (consume('(')) {
            RatFun v = parse_expression();
            expect(')');
            return v;
        }
        if (pos_ < s_.size() && s_[pos_] == 't' && !is_word_char(pos_ + 1)) {
            ++pos_;
            return RatFun::t();
        }
        if (pos_ < s_.size() && is_digit(s_[pos_])) return RatFun(Rational(digits()));
        fail("expected a number, 't', or a parenthesized expression");
    }

    bool is_word_char(size_t i) const {
        return i < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i])) != 0 || s_[i] == '_');
    }

    long parse_exponent() {
        skip_ws();
        bool neg = consume('-');
        skip_ws();
        if (pos_ >= s_.size() || !is_digit(s_[pos_])) fail("expected an integer exponent");
        BigInt d = digits();
        if (d > ratfun_degree_bound) fail("exponent exceeds the degree bound");
        long e = d.convert_to<long>();
        return neg ? -e : e;
    }

    BigInt digits() {
        size_t start = pos_;
        while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }
};

} // namespace

RatFun parse_scalar(std::string_view text) {
    Scanner sc(text);
    RatFun v = sc.parse_expression();
    if (!sc.at_end()) sc.fail("unexpected trailing characters");
    return v;
}

Rational parse_rational(std::string_view text) {
    auto r = parse_scalar(text).as_rational();
    if (!r) throw ParseError("expected a rational constant: \"" + std::string(text) + "\"");
    return *r;
}

SeriesSpec<RatFun> parse_series(std::string_view text) {
    Scanner sc(text);
    long p = sc.parse_count();
    sc.expect_series_f();
    long q = sc.parse_count();
    sc.expect('(');
    SeriesSpec<RatFun> s;
    for (long i = 0; i < p; ++i) {
        if (i) sc.expect(',');
        s.numerators.push_back(sc.parse_expression());
    }
    sc.expect(';');
    for (long j = 0; j < q; ++j) {
        if (j) sc.expect(',');
        s.denominators.push_back(sc.parse_expression());
    }
    sc.expect(';');
    s.argument = sc.parse_expression();
    sc.expect(')');
    if (!sc.at_end()) sc.fail("unexpected trailing characters");
    return s;
}

} // namespace hypcheck
