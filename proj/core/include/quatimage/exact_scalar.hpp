#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "quatimage/errors.hpp"

namespace quatimage {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// An exact real number from a tower of quadratic extensions of the rationals.
///
/// A value is either a plain rational (lowest terms, positive denominator)
/// or `a + b*sqrt(n)` where `a`, `b` are values over a common base tower and
/// `n` is a positive base-tower element that is not a perfect square there.
/// `sqrt` always denotes the nonnegative root.
///
/// Canonical form: an extension node with `b == 0` is never stored and a
/// radicand that is a perfect square of a tower element is collapsed when it
/// is produced. Equality, sign, and all four field operations are exact;
/// no floating point is involved anywhere.
class ExactScalar {
public:
    /// Zero.
    ExactScalar() : rat_(0) {}
    ExactScalar(long long v) : rat_(v) {}  // NOLINT: implicit by design
    ExactScalar(BigInt v) : rat_(std::move(v)) {}
    ExactScalar(BigRational v) : rat_(std::move(v)) {}

    /// num/den with den != 0; sign is normalized onto the numerator.
    static ExactScalar rational(BigInt num, BigInt den);

    /// a + b*sqrt(n). Collapses to `a` when b == 0. Callers must pass a
    /// positive non-square radicand; arithmetic preserves that invariant.
    static ExactScalar ext(ExactScalar a, ExactScalar b, ExactScalar n);

    bool is_rational() const noexcept { return ext_ == nullptr; }
    /// pre: is_rational().
    const BigRational& rational_value() const;
    /// pre: !is_rational().
    const ExactScalar& ext_a() const;
    const ExactScalar& ext_b() const;
    const ExactScalar& ext_n() const;

    bool is_zero() const;
    /// -1, 0, or +1; decided exactly on the tower.
    int sign() const;
    /// 0 for rationals, 1 + height of the deepest constituent otherwise.
    int tower_height() const;

    ExactScalar operator-() const;
    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
    /// Throws DivisionByZeroError when y == 0.
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);

    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
    ExactScalar& operator/=(const ExactScalar& y) { return *this = *this / y; }

    /// Exact value equality (robust to representation differences).
    friend bool operator==(const ExactScalar& x, const ExactScalar& y);
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    ExactScalar inverse() const;

    /// Human-readable text, e.g. "-3/2" or "(1 + 1/2*sqrt(2))".
    std::string str() const;
    /// Canonical ordering key (height-tagged structural serialization).
    std::string key() const;

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
        return os << x.str();
    }

private:
    struct ExtPart;

    BigRational rat_;                       // value when ext_ == nullptr
    std::shared_ptr<const ExtPart> ext_;    // a + b*sqrt(n) when set
};

struct ExactScalar::ExtPart {
    ExactScalar a, b, n;
};

inline int sign(const ExactScalar& x) { return x.sign(); }
inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }

/// Exact square root of a nonnegative tower element. Returns an existing
/// tower element when s is a perfect square, otherwise extends the tower by
/// one level (rational radicands are reduced to square-free integers first).
/// Throws NegativeRadicandError when s < 0.
ExactScalar scalar_sqrt(const ExactScalar& s);

/// Returns sqrt(s) when s >= 0 is a perfect square of a tower element.
std::optional<ExactScalar> try_exact_sqrt(const ExactScalar& s);

/// base^e for integer e (e < 0 requires base != 0).
ExactScalar pow(const ExactScalar& base, long long e);

}  // namespace quatimage
