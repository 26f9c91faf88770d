#include "quatimage/quaternion.hpp"

#include <stdexcept>

namespace quatimage {

namespace {

// Hamilton table for the positive basis elements, axis and sign separately.
// Row = left factor, column = right factor, order E, I, J, K.
constexpr BasisAxis kAxisTable[4][4] = {
    {BasisAxis::E, BasisAxis::I, BasisAxis::J, BasisAxis::K},
    {BasisAxis::I, BasisAxis::E, BasisAxis::K, BasisAxis::J},
    {BasisAxis::J, BasisAxis::K, BasisAxis::E, BasisAxis::I},
    {BasisAxis::K, BasisAxis::J, BasisAxis::I, BasisAxis::E},
};

constexpr int kSignTable[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
};

}  // namespace

char axis_char(BasisAxis a) {
    switch (a) {
        case BasisAxis::E: return 'e';
        case BasisAxis::I: return 'i';
        case BasisAxis::J: return 'j';
        case BasisAxis::K: return 'k';
    }
    throw std::logic_error("invalid BasisAxis");
}

SignedBasis q8_mul(SignedBasis a, SignedBasis b) {
    const int ia = axis_index(a.axis);
    const int ib = axis_index(b.axis);
    return SignedBasis{a.sign * b.sign * kSignTable[ia][ib],
                       kAxisTable[ia][ib]};
}

Quaternion Quaternion::unit(BasisAxis axis) {
    Quaternion q;
    q.coord(axis) = ExactScalar(1);
    return q;
}

Quaternion Quaternion::from_basis(SignedBasis b) {
    Quaternion q;
    q.coord(b.axis) = ExactScalar(b.sign);
    return q;
}

const ExactScalar& Quaternion::coord(BasisAxis axis) const {
    switch (axis) {
        case BasisAxis::E: return re;
        case BasisAxis::I: return ci;
        case BasisAxis::J: return cj;
        case BasisAxis::K: return ck;
    }
    throw std::logic_error("invalid BasisAxis");
}

ExactScalar& Quaternion::coord(BasisAxis axis) {
    switch (axis) {
        case BasisAxis::E: return re;
        case BasisAxis::I: return ci;
        case BasisAxis::J: return cj;
        case BasisAxis::K: return ck;
    }
    throw std::logic_error("invalid BasisAxis");
}

bool Quaternion::is_zero() const {
    return re.is_zero() && ci.is_zero() && cj.is_zero() && ck.is_zero();
}

bool Quaternion::is_scalar() const {
    return ci.is_zero() && cj.is_zero() && ck.is_zero();
}

bool Quaternion::is_vector() const { return re.is_zero(); }

std::string Quaternion::str() const {
    std::string out;
    for (BasisAxis axis : kAllAxes) {
        const ExactScalar& c = coord(axis);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        const bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (axis != BasisAxis::E) {
            if (cs == "1") {
                cs.clear();
            } else {
                cs += "*";
            }
            cs += axis_char(axis);
        }
        if (out.empty()) {
            out = negative ? "-" + cs : cs;
        } else {
            out += negative ? " - " : " + ";
            out += cs;
        }
    }
    return out.empty() ? "0" : out;
}

bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.re == b.re && a.ci == b.ci && a.cj == b.cj && a.ck == b.ck;
}

Quaternion q_add(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.re + b.re, a.ci + b.ci, a.cj + b.cj, a.ck + b.ck);
}

Quaternion q_sub(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.re - b.re, a.ci - b.ci, a.cj - b.cj, a.ck - b.ck);
}

Quaternion q_neg(const Quaternion& a) {
    return Quaternion(-a.re, -a.ci, -a.cj, -a.ck);
}

Quaternion q_scale(const ExactScalar& s, const Quaternion& a) {
    return Quaternion(s * a.re, s * a.ci, s * a.cj, s * a.ck);
}

Quaternion q_mul(const Quaternion& a, const Quaternion& b) {
    Quaternion out;
    for (BasisAxis ax : kAllAxes) {
        const ExactScalar& ca = a.coord(ax);
        if (ca.is_zero()) continue;
        for (BasisAxis bx : kAllAxes) {
            const ExactScalar& cb = b.coord(bx);
            if (cb.is_zero()) continue;
            const SignedBasis prod = q8_mul({+1, ax}, {+1, bx});
            ExactScalar term = ca * cb;
            ExactScalar& slot = out.coord(prod.axis);
            slot = (prod.sign > 0) ? slot + term : slot - term;
        }
    }
    return out;
}

Quaternion q_conj(const Quaternion& a) {
    return Quaternion(a.re, -a.ci, -a.cj, -a.ck);
}

Quaternion q_inv(const Quaternion& a) {
    const ExactScalar n = norm_sq(a);
    if (n.is_zero()) {
        throw DivisionByZeroError("inverse of zero quaternion");
    }
    return q_scale(n.inverse(), q_conj(a));
}

ExactScalar norm_sq(const Quaternion& a) {
    return a.re * a.re + a.ci * a.ci + a.cj * a.cj + a.ck * a.ck;
}

ExactScalar re_part(const Quaternion& a) { return a.re; }

Quaternion ve_part(const Quaternion& a) {
    return Quaternion(ExactScalar(0), a.ci, a.cj, a.ck);
}

Quaternion conjugate_by(const Quaternion& q, const Quaternion& h) {
    return q_mul(q_mul(h, q), q_inv(h));
}

}  // namespace quatimage
