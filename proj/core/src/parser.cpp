#include <cctype>
#include <string>

#include "quatimage/polynomial.hpp"

namespace quatimage {

namespace {

constexpr int kMaxVarIndex = 100000;

// Recursive-descent parser over the polynomial grammar (see polynomial.hpp).
// Positions in errors are 0-based character offsets into the input text.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Polynomial run() {
        Polynomial p = parse_poly();
        skip_ws();
        if (pos_ != text_.size()) {
            throw SyntaxError("unexpected trailing input", pos_);
        }
        return p;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) {
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    bool at_digit() {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    // Digits only; magnitude unbounded (BigInt).
    BigInt parse_nat() {
        skip_ws();
        if (!at_digit()) {
            throw SyntaxError("expected a number", pos_);
        }
        BigInt value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    int parse_small_nat(const char* what) {
        const std::size_t at = pos_;
        const BigInt value = parse_nat();
        if (value > kMaxVarIndex) {
            throw SyntaxError(std::string(what) + " too large", at);
        }
        return static_cast<int>(value);
    }

    BigRational parse_rational() {
        BigInt num = parse_nat();
        if (peek() == '/') {
            ++pos_;
            const std::size_t at = pos_;
            BigInt den = parse_nat();
            if (den == 0) {
                throw SyntaxError("zero denominator", at);
            }
            return BigRational(std::move(num), std::move(den));
        }
        return BigRational(std::move(num));
    }

    bool at_factor_start() {
        const char c = peek();
        return c == 'x' || c == 's' || c == '(' || c == '[' ||
               (std::isalpha(static_cast<unsigned char>(c)) != 0);
    }

    Polynomial parse_poly() {
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
        }
        Polynomial acc = parse_term();
        if (negative) acc = poly_neg(std::move(acc));
        while (true) {
            const char op = peek();
            if (op != '+' && op != '-') break;
            ++pos_;
            Polynomial rhs = parse_term();
            acc = (op == '+') ? poly_add(acc, rhs) : poly_sub(acc, rhs);
        }
        return acc;
    }

    Polynomial parse_term() {
        BigRational coeff(1);
        bool have_coeff = false;
        bool star_after_coeff = false;
        if (at_digit()) {
            coeff = parse_rational();
            have_coeff = true;
            if (peek() == '*') {
                ++pos_;
                star_after_coeff = true;
            }
        }
        if (!at_factor_start()) {
            if (star_after_coeff) {
                throw SyntaxError("expected a factor after '*'", pos_);
            }
            if (!have_coeff) {
                throw SyntaxError("expected a term", pos_);
            }
            Polynomial constant;
            if (!coeff.is_zero()) {
                constant.monomials.push_back(Monomial{std::move(coeff), {}});
            }
            return constant;
        }
        Polynomial acc = parse_factor();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                acc = poly_mul(acc, parse_factor());
            } else if (at_factor_start()) {
                acc = poly_mul(acc, parse_factor());
            } else {
                break;
            }
        }
        if (have_coeff) acc = poly_scale(coeff, std::move(acc));
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_primary();
        while (peek() == '^') {
            ++pos_;
            const int e = parse_small_nat("exponent");
            base = poly_pow(base, e);
        }
        return base;
    }

    Polynomial parse_primary() {
        const char c = peek();
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_poly();
            expect(')');
            return inner;
        }
        if (c == '[') {
            ++pos_;
            Polynomial lhs = parse_poly();
            expect(',');
            Polynomial rhs = parse_poly();
            expect(']');
            return poly_sub(poly_mul(lhs, rhs), poly_mul(rhs, lhs));
        }
        if (c == 'x') {
            ++pos_;
            if (!at_digit()) {
                throw SyntaxError("expected a variable index after 'x'", pos_);
            }
            const int idx = parse_small_nat("variable index");
            if (idx < 1) {
                throw VariableIndexOutOfRangeError(
                    "variable index must be at least 1", at);
            }
            Polynomial p;
            p.num_vars = idx;
            p.monomials.push_back(Monomial{BigRational(1), {idx}});
            return p;
        }
        if (c == 's') {
            ++pos_;
            if (!at_digit()) {
                throw UnknownBuiltinError("s", at);
            }
            const int n = parse_small_nat("builtin index");
            return std_poly(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            throw UnknownBuiltinError(std::string(1, c), at);
        }
        throw SyntaxError("expected a factor", pos_);
    }
};

}  // namespace

Polynomial parse(const std::string& text) {
    return Parser(text).run();
}

}  // namespace quatimage
