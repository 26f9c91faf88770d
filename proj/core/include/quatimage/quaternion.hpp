#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "quatimage/exact_scalar.hpp"

namespace quatimage {

/// The four Hamilton basis directions (E is the scalar unit 1).
enum class BasisAxis : std::uint8_t { E = 0, I = 1, J = 2, K = 3 };

constexpr std::array<BasisAxis, 4> kAllAxes{BasisAxis::E, BasisAxis::I,
                                            BasisAxis::J, BasisAxis::K};

constexpr int axis_index(BasisAxis a) { return static_cast<int>(a); }
char axis_char(BasisAxis a);

/// One of the eight elements of the quaternion group Q8: +-1, +-i, +-j, +-k.
struct SignedBasis {
    int sign = 1;  // +1 or -1
    BasisAxis axis = BasisAxis::E;

    friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

/// Hamilton product on Q8 (i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i,
/// ki = -ik = j). Total, exact, and the fast path of the classifier.
SignedBasis q8_mul(SignedBasis a, SignedBasis b);

/// A Hamilton quaternion re + ci*i + cj*j + ck*k with exact coordinates.
/// Immutable value type; every operation is a pure function.
struct Quaternion {
    ExactScalar re, ci, cj, ck;

    Quaternion() = default;
    explicit Quaternion(ExactScalar scalar) : re(std::move(scalar)) {}
    Quaternion(ExactScalar r, ExactScalar i, ExactScalar j, ExactScalar k)
        : re(std::move(r)), ci(std::move(i)), cj(std::move(j)), ck(std::move(k)) {}

    static Quaternion zero() { return Quaternion(); }
    static Quaternion one() { return Quaternion(ExactScalar(1)); }
    static Quaternion unit(BasisAxis axis);
    static Quaternion from_basis(SignedBasis b);

    const ExactScalar& coord(BasisAxis axis) const;
    ExactScalar& coord(BasisAxis axis);

    bool is_zero() const;
    /// ci = cj = ck = 0 (the real line, including 0).
    bool is_scalar() const;
    /// re = 0 (the vector space V, including 0).
    bool is_vector() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << q.str();
    }
};

bool operator==(const Quaternion& a, const Quaternion& b);
inline bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

Quaternion q_add(const Quaternion& a, const Quaternion& b);
Quaternion q_sub(const Quaternion& a, const Quaternion& b);
Quaternion q_neg(const Quaternion& a);
Quaternion q_scale(const ExactScalar& s, const Quaternion& a);
/// Hamilton product, bilinear extension of q8_mul. Skips zero coordinates,
/// so products of near-basis quaternions stay cheap.
Quaternion q_mul(const Quaternion& a, const Quaternion& b);
/// Quaternion conjugate (negated vector part).
Quaternion q_conj(const Quaternion& a);
/// Multiplicative inverse q_conj(a)/norm_sq(a); throws DivisionByZeroError
/// on zero.
Quaternion q_inv(const Quaternion& a);

/// Squared Euclidean norm re^2+ci^2+cj^2+ck^2; multiplicative, and zero only
/// on the zero quaternion. The square keeps values inside the exact field.
ExactScalar norm_sq(const Quaternion& a);
ExactScalar re_part(const Quaternion& a);
Quaternion ve_part(const Quaternion& a);

/// h q h^{-1}; preserves re_part and norm_sq. Throws DivisionByZeroError
/// when h = 0.
Quaternion conjugate_by(const Quaternion& q, const Quaternion& h);

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) { return q_add(a, b); }
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) { return q_sub(a, b); }
inline Quaternion operator-(const Quaternion& a) { return q_neg(a); }
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return q_mul(a, b); }

}  // namespace quatimage
