#include "quatimage/exact_scalar.hpp"

#include <stdexcept>
#include <utility>

namespace quatimage {

namespace {

// Trial-division bound for pulling square factors out of integer radicands.
// Radicands are normalized best-effort; correctness never depends on full
// square-free factorization, only on "not a perfect square".
constexpr long kSquarePartBound = 1000;

}  // namespace

ExactScalar ExactScalar::rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return ExactScalar(BigRational(std::move(num), std::move(den)));
}

ExactScalar ExactScalar::ext(ExactScalar a, ExactScalar b, ExactScalar n) {
    if (b.is_zero()) {
        return a;
    }
    ExactScalar out;
    out.ext_ = std::make_shared<const ExtPart>(
        ExtPart{std::move(a), std::move(b), std::move(n)});
    return out;
}

const BigRational& ExactScalar::rational_value() const {
    if (ext_) {
        throw std::logic_error("rational_value() on extension element");
    }
    return rat_;
}

const ExactScalar& ExactScalar::ext_a() const {
    if (!ext_) throw std::logic_error("ext_a() on rational element");
    return ext_->a;
}

const ExactScalar& ExactScalar::ext_b() const {
    if (!ext_) throw std::logic_error("ext_b() on rational element");
    return ext_->b;
}

const ExactScalar& ExactScalar::ext_n() const {
    if (!ext_) throw std::logic_error("ext_n() on rational element");
    return ext_->n;
}

bool ExactScalar::is_zero() const {
    return sign() == 0;
}

int ExactScalar::sign() const {
    if (!ext_) {
        return rat_.sign();
    }
    // a + b*sqrt(n) with sqrt(n) > 0: compare |a| against |b|*sqrt(n) by
    // squaring; the recursion only touches radicands of strictly smaller key.
    const ExactScalar& a = ext_->a;
    const ExactScalar& b = ext_->b;
    const ExactScalar& n = ext_->n;
    const int sa = a.sign();
    const int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const int cmp = (a * a - b * b * n).sign();
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

int ExactScalar::tower_height() const {
    if (!ext_) return 0;
    int h = ext_->a.tower_height();
    h = std::max(h, ext_->b.tower_height());
    h = std::max(h, ext_->n.tower_height());
    return 1 + h;
}

ExactScalar ExactScalar::operator-() const {
    if (!ext_) {
        ExactScalar out;
        out.rat_ = -rat_;
        return out;
    }
    return ext(-ext_->a, -ext_->b, ext_->n);
}

namespace {

// Orders radicands for the nesting direction of mixed-tower operations:
// the larger key goes on the outside. Structurally identical radicands
// (and only those) compare equal, which is exactly when the componentwise
// same-radicand formulas apply.
int radicand_compare(const ExactScalar& m, const ExactScalar& n) {
    const int hm = m.tower_height();
    const int hn = n.tower_height();
    if (hm != hn) return hm < hn ? -1 : 1;
    const std::string km = m.key();
    const std::string kn = n.key();
    if (km != kn) return km < kn ? -1 : 1;
    return 0;
}

}  // namespace

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    if (!x.ext_ && !y.ext_) {
        ExactScalar out;
        out.rat_ = x.rat_ + y.rat_;
        return out;
    }
    if (!x.ext_) return y + x;
    if (!y.ext_) {
        return ExactScalar::ext(x.ext_->a + y, x.ext_->b, x.ext_->n);
    }
    const int cmp = radicand_compare(x.ext_->n, y.ext_->n);
    if (cmp == 0) {
        return ExactScalar::ext(x.ext_->a + y.ext_->a, x.ext_->b + y.ext_->b,
                                x.ext_->n);
    }
    if (cmp < 0) return y + x;
    return ExactScalar::ext(x.ext_->a + y, x.ext_->b, x.ext_->n);
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return x + (-y);
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    if (!x.ext_ && !y.ext_) {
        ExactScalar out;
        out.rat_ = x.rat_ * y.rat_;
        return out;
    }
    if (!x.ext_) return y * x;
    if (!y.ext_) {
        if (y.rat_.is_zero()) return ExactScalar();
        return ExactScalar::ext(x.ext_->a * y, x.ext_->b * y, x.ext_->n);
    }
    const int cmp = radicand_compare(x.ext_->n, y.ext_->n);
    if (cmp == 0) {
        const ExactScalar& a1 = x.ext_->a;
        const ExactScalar& b1 = x.ext_->b;
        const ExactScalar& a2 = y.ext_->a;
        const ExactScalar& b2 = y.ext_->b;
        const ExactScalar& n = x.ext_->n;
        return ExactScalar::ext(a1 * a2 + b1 * b2 * n, a1 * b2 + a2 * b1, n);
    }
    if (cmp < 0) return y * x;
    return ExactScalar::ext(x.ext_->a * y, x.ext_->b * y, x.ext_->n);
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
    return x * y.inverse();
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
    if (!x.ext_ && !y.ext_) return x.rat_ == y.rat_;
    return (x - y).is_zero();
}

ExactScalar ExactScalar::inverse() const {
    if (!ext_) {
        if (rat_.is_zero()) {
            throw DivisionByZeroError("inverse of zero");
        }
        ExactScalar out;
        out.rat_ = BigRational(1) / rat_;
        return out;
    }
    const ExactScalar& a = ext_->a;
    const ExactScalar& b = ext_->b;
    const ExactScalar& n = ext_->n;
    const ExactScalar d = a * a - b * b * n;
    if (d.is_zero()) {
        // a^2 == b^2*n with a + b*sqrt(n) != 0 forces sqrt(n) == a/b, so the
        // stored form is redundant and the value is the base element 2a.
        if (a.is_zero()) {
            throw DivisionByZeroError("inverse of zero");
        }
        return (a + a).inverse();
    }
    return ext(a / d, -(b / d), n);
}

std::string ExactScalar::str() const {
    if (!ext_) {
        return rat_.str();
    }
    const ExactScalar& a = ext_->a;
    const ExactScalar& b = ext_->b;
    const ExactScalar& n = ext_->n;
    const std::string root = "sqrt(" + n.str() + ")";
    std::string bpart;
    bool b_negative = false;
    if (!b.ext_) {
        BigRational babs = b.rat_;
        if (babs < 0) {
            b_negative = true;
            babs = -babs;
        }
        bpart = (babs == 1) ? root : BigRational(babs).str() + "*" + root;
    } else {
        bpart = b.str() + "*" + root;
    }
    if (a.is_zero()) {
        return b_negative ? "-" + bpart : bpart;
    }
    return "(" + a.str() + (b_negative ? " - " : " + ") + bpart + ")";
}

std::string ExactScalar::key() const {
    if (!ext_) {
        return "r" + rat_.str();
    }
    return "x(" + ext_->a.key() + "," + ext_->b.key() + "," + ext_->n.key() +
           ")";
}

std::optional<ExactScalar> try_exact_sqrt(const ExactScalar& s) {
    const int sg = s.sign();
    if (sg < 0) return std::nullopt;
    if (sg == 0) return ExactScalar(0);
    if (s.is_rational()) {
        const BigRational& r = s.rational_value();
        const BigInt p = numerator(r);
        const BigInt q = denominator(r);
        const BigInt rp = boost::multiprecision::sqrt(p);
        if (rp * rp != p) return std::nullopt;
        const BigInt rq = boost::multiprecision::sqrt(q);
        if (rq * rq != q) return std::nullopt;
        return ExactScalar::rational(rp, rq);
    }
    // sqrt(a + b*sqrt(n)) = x + y*sqrt(n) requires x^2 + y^2*n = a and
    // 2xy = b, so x^2 is a root of t^2 - a*t + b^2*n/4.
    const ExactScalar& a = s.ext_a();
    const ExactScalar& b = s.ext_b();
    const ExactScalar& n = s.ext_n();
    const auto disc_root = try_exact_sqrt(a * a - b * b * n);
    if (!disc_root) return std::nullopt;
    const ExactScalar half = ExactScalar::rational(1, 2);
    for (const ExactScalar& t :
         {(a + *disc_root) * half, (a - *disc_root) * half}) {
        if (t.sign() <= 0) continue;
        const auto x = try_exact_sqrt(t);
        if (!x) continue;
        const ExactScalar y = b / (*x + *x);
        ExactScalar cand = ExactScalar::ext(*x, y, n);
        if (cand.sign() < 0) cand = -cand;
        if (cand * cand == s) return cand;
    }
    return std::nullopt;
}

namespace {

// m > 0. Returns (f, r) with m == f^2 * r, pulling out squares of small
// factors only. r keeps any large square factors but that cannot make it a
// perfect square when m is not one.
std::pair<BigInt, BigInt> extract_square_part(BigInt m) {
    BigInt f = 1;
    for (long d = 2; d <= kSquarePartBound; ++d) {
        const BigInt dd = BigInt(d) * d;
        if (dd > m) break;
        while (m % dd == 0) {
            m /= dd;
            f *= d;
        }
    }
    return {f, m};
}

}  // namespace

ExactScalar scalar_sqrt(const ExactScalar& s) {
    if (s.sign() < 0) {
        throw NegativeRadicandError("square root of negative value " + s.str());
    }
    if (auto root = try_exact_sqrt(s)) {
        return *root;
    }
    if (s.is_rational()) {
        // sqrt(p/q) = sqrt(p*q)/q; normalize the integer radicand so equal
        // roots produced along different routes usually share one node.
        const BigRational& r = s.rational_value();
        const BigInt q = denominator(r);
        auto [f, rad] = extract_square_part(numerator(r) * q);
        return ExactScalar::ext(ExactScalar(0),
                                ExactScalar::rational(std::move(f), q),
                                ExactScalar(std::move(rad)));
    }
    return ExactScalar::ext(ExactScalar(0), ExactScalar(1), s);
}

ExactScalar pow(const ExactScalar& base, long long e) {
    if (e < 0) {
        return pow(base.inverse(), -e);
    }
    ExactScalar acc(1);
    ExactScalar sq = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
        if (k & 1ULL) acc = acc * sq;
        k >>= 1ULL;
        if (k > 0) sq = sq * sq;
    }
    return acc;
}

}  // namespace quatimage
