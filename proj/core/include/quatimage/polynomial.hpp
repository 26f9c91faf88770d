#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatimage/quaternion.hpp"

namespace quatimage {

/// coeff * x_{w[0]} * x_{w[1]} * ... with 1-based variable indices.
/// The empty word is the constant monomial.
struct Monomial {
    BigRational coeff;
    std::vector<int> word;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Length-lexicographic order on words; the canonical monomial order.
bool word_less(const std::vector<int>& a, const std::vector<int>& b);

/// A polynomial in non-commuting variables x1..x{num_vars} with rational
/// coefficients. Canonical form: monomials sorted by word_less, no repeated
/// words, no zero coefficients. All operations below return canonical
/// polynomials; `canonicalize` repairs arbitrary monomial lists.
struct Polynomial {
    int num_vars = 0;
    std::vector<Monomial> monomials;

    bool is_zero() const { return monomials.empty(); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial canonicalize(Polynomial p);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(Polynomial a);
Polynomial poly_scale(const BigRational& c, Polynomial a);
/// Concatenates words pairwise (non-commutative product).
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// e >= 0; p^0 is the constant 1.
Polynomial poly_pow(const Polynomial& a, long long e);

/// Round-trip printable canonical text, e.g. "2*x1*x2 - x2*x1".
std::string to_string(const Polynomial& p);

/// Parses the grammar
///   poly    := ['-'] term (('+'|'-') term)*
///   term    := rational | [rational '*'?] factor ('*'? factor)*
///   factor  := var | '(' poly ')' | '[' poly ',' poly ']'
///            | factor '^' nat | builtin
///   var     := 'x' nat ;  rational := nat ['/' nat] ;  builtin := 's' nat
/// Whitespace is insignificant; juxtaposition multiplies; '[a,b]' is the
/// commutator ab - ba; signs come from the +/- separators. Throws
/// SyntaxError / UnknownBuiltinError / VariableIndexOutOfRangeError with a
/// 0-based character position.
Polynomial parse(const std::string& text);

/// Substitutes args[t-1] for x_t and sums coeff-weighted Hamilton word
/// products. Throws ArityMismatchError unless args.size() == num_vars.
Quaternion evaluate(const Polynomial& p, const std::vector<Quaternion>& args);

/// The common per-variable degree vector of all monomials, when they agree;
/// absent otherwise (and absent for the zero polynomial).
std::optional<std::vector<int>> multidegree(const Polynomial& p);

/// True iff multidegree(p) == (1, 1, ..., 1) with num_vars >= 1.
bool is_multilinear(const Polynomial& p);

/// Integer weights w and weighted degree d with deg_w(monomial) = d for
/// every monomial.
struct WeightVector {
    std::vector<BigInt> weights;
    BigInt degree = 0;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// All semihomogeneity certificates of a polynomial: an integer basis of the
/// rational solution space of {exponents(h) . w = d for all monomials h},
/// whether any solution has d != 0, and one such certificate when it exists
/// (small positive weights preferred).
struct WeightAnalysis {
    std::vector<WeightVector> basis;
    bool has_nonzero_degree = false;
    std::optional<WeightVector> certificate;
};

/// Throws ZeroPolynomialError on the zero polynomial.
WeightAnalysis infer_weights(const Polynomial& p);

/// True iff w certifies p: every monomial has weighted degree w.degree.
bool certifies(const Polynomial& p, const WeightVector& w);

/// Standard polynomial: sum over permutations sigma of {1..n} of
/// sgn(sigma) * x_{sigma(1)} ... x_{sigma(n)}. Throws CapExceededError
/// unless 1 <= n <= cap.
Polynomial std_poly(int n, int cap = 6);

}  // namespace quatimage
