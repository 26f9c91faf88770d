#include "quatimage/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace quatimage {

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Polynomial canonicalize(Polynomial p) {
    std::sort(p.monomials.begin(), p.monomials.end(),
              [](const Monomial& x, const Monomial& y) {
                  return word_less(x.word, y.word);
              });
    std::vector<Monomial> merged;
    for (Monomial& m : p.monomials) {
        if (!merged.empty() && merged.back().word == m.word) {
            merged.back().coeff += m.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else if (!m.coeff.is_zero()) {
            merged.push_back(std::move(m));
        }
    }
    p.monomials = std::move(merged);
    return p;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.num_vars = std::max(a.num_vars, b.num_vars);
    out.monomials.reserve(a.monomials.size() + b.monomials.size());
    out.monomials.insert(out.monomials.end(), a.monomials.begin(),
                         a.monomials.end());
    out.monomials.insert(out.monomials.end(), b.monomials.begin(),
                         b.monomials.end());
    return canonicalize(std::move(out));
}

Polynomial poly_neg(Polynomial a) {
    for (Monomial& m : a.monomials) m.coeff = -m.coeff;
    return a;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    return poly_add(a, poly_neg(b));
}

Polynomial poly_scale(const BigRational& c, Polynomial a) {
    if (c.is_zero()) {
        a.monomials.clear();
        return a;
    }
    for (Monomial& m : a.monomials) m.coeff *= c;
    return a;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.num_vars = std::max(a.num_vars, b.num_vars);
    out.monomials.reserve(a.monomials.size() * b.monomials.size());
    for (const Monomial& ma : a.monomials) {
        for (const Monomial& mb : b.monomials) {
            Monomial m;
            m.coeff = ma.coeff * mb.coeff;
            m.word = ma.word;
            m.word.insert(m.word.end(), mb.word.begin(), mb.word.end());
            out.monomials.push_back(std::move(m));
        }
    }
    return canonicalize(std::move(out));
}

Polynomial poly_pow(const Polynomial& a, long long e) {
    Polynomial acc;
    acc.num_vars = a.num_vars;
    acc.monomials.push_back(Monomial{BigRational(1), {}});
    Polynomial sq = a;
    while (e > 0) {
        if (e & 1) acc = poly_mul(acc, sq);
        e >>= 1;
        if (e > 0) sq = poly_mul(sq, sq);
    }
    return acc;
}

std::string to_string(const Polynomial& p) {
    if (p.monomials.empty()) return "0";
    std::string out;
    for (const Monomial& m : p.monomials) {
        BigRational c = m.coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (out.empty()) {
            if (negative) out = "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit_coeff = (c == 1) && !m.word.empty();
        if (!unit_coeff) out += c.str();
        for (std::size_t t = 0; t < m.word.size(); ++t) {
            if (t > 0 || !unit_coeff) out += "*";
            out += "x" + std::to_string(m.word[t]);
        }
    }
    return out;
}

Quaternion evaluate(const Polynomial& p, const std::vector<Quaternion>& args) {
    if (static_cast<int>(args.size()) != p.num_vars) {
        throw ArityMismatchError(
            "evaluate: expected " + std::to_string(p.num_vars) +
            " arguments, got " + std::to_string(args.size()));
    }
    Quaternion acc;
    for (const Monomial& m : p.monomials) {
        Quaternion prod = Quaternion::one();
        for (int idx : m.word) {
            prod = q_mul(prod, args[static_cast<std::size_t>(idx - 1)]);
        }
        acc = q_add(acc, q_scale(ExactScalar(BigRational(m.coeff)), prod));
    }
    return acc;
}

namespace {

std::vector<int> exponent_vector(const Monomial& m, int num_vars) {
    std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
    for (int idx : m.word) ++e[static_cast<std::size_t>(idx - 1)];
    return e;
}

}  // namespace

std::optional<std::vector<int>> multidegree(const Polynomial& p) {
    if (p.monomials.empty()) return std::nullopt;
    std::vector<int> common = exponent_vector(p.monomials.front(), p.num_vars);
    for (std::size_t t = 1; t < p.monomials.size(); ++t) {
        if (exponent_vector(p.monomials[t], p.num_vars) != common) {
            return std::nullopt;
        }
    }
    return common;
}

bool is_multilinear(const Polynomial& p) {
    if (p.num_vars < 1) return false;
    const auto deg = multidegree(p);
    if (!deg) return false;
    return std::all_of(deg->begin(), deg->end(), [](int d) { return d == 1; });
}

bool certifies(const Polynomial& p, const WeightVector& w) {
    if (static_cast<int>(w.weights.size()) != p.num_vars) return false;
    for (const Monomial& m : p.monomials) {
        BigInt acc = 0;
        for (int idx : m.word) acc += w.weights[static_cast<std::size_t>(idx - 1)];
        if (acc != w.degree) return false;
    }
    return true;
}

namespace {

// Integer-scales a rational vector: clears denominators, divides by the
// numerator gcd, and points the d component (else the first nonzero entry)
// positive.
std::vector<BigInt> normalize_to_integers(const std::vector<BigRational>& v) {
    BigInt mult = 1;
    for (const BigRational& x : v) {
        mult = lcm(mult, denominator(x));
    }
    std::vector<BigInt> out;
    out.reserve(v.size());
    BigInt g = 0;
    for (const BigRational& x : v) {
        BigInt scaled = numerator(x * BigRational(mult));
        g = gcd(g, scaled);
        out.push_back(std::move(scaled));
    }
    if (g > 1) {
        for (BigInt& x : out) x /= g;
    }
    int flip = 0;
    if (!out.empty() && out.back() != 0) {
        flip = out.back() < 0 ? -1 : 1;
    } else {
        for (const BigInt& x : out) {
            if (x != 0) {
                flip = x < 0 ? -1 : 1;
                break;
            }
        }
    }
    if (flip < 0) {
        for (BigInt& x : out) x = -x;
    }
    return out;
}

WeightVector to_weight_vector(std::vector<BigInt> v) {
    WeightVector w;
    w.degree = v.back();
    v.pop_back();
    w.weights = std::move(v);
    return w;
}

// Searches s*v0 + sum c_k*u_k for a certificate with every weight >= 1,
// preferring small s and small |c|. Returns v0 unchanged when nothing small
// works or there are too many free directions to scan.
WeightVector beautify_certificate(const WeightVector& v0,
                                  const std::vector<WeightVector>& zeros) {
    const std::size_t m = v0.weights.size();
    const auto all_positive = [m](const std::vector<BigInt>& w) {
        for (std::size_t t = 0; t < m; ++t) {
            if (w[t] < 1) return false;
        }
        return true;
    };
    if (all_positive(v0.weights)) return v0;
    if (zeros.size() > 3) return v0;

    const long kMaxScale = 6;
    const long kMaxCoeff = 6;
    std::vector<long> c(zeros.size(), 0);
    for (long s = 1; s <= kMaxScale; ++s) {
        for (long radius = 0; radius <= kMaxCoeff; ++radius) {
            // Enumerate c vectors with max |c_k| == radius, lexicographically.
            std::fill(c.begin(), c.end(), -radius);
            while (true) {
                const bool on_shell =
                    radius == 0 ||
                    std::any_of(c.begin(), c.end(), [radius](long v) {
                        return std::labs(v) == radius;
                    });
                if (on_shell) {
                    std::vector<BigInt> w(m);
                    for (std::size_t t = 0; t < m; ++t) {
                        w[t] = v0.weights[t] * s;
                        for (std::size_t k = 0; k < zeros.size(); ++k) {
                            w[t] += zeros[k].weights[t] * c[k];
                        }
                    }
                    if (all_positive(w)) {
                        return WeightVector{std::move(w), v0.degree * s};
                    }
                }
                std::size_t pos = 0;
                while (pos < c.size() && c[pos] == radius) {
                    c[pos] = -radius;
                    ++pos;
                }
                if (pos == c.size()) break;
                ++c[pos];
            }
            if (zeros.empty()) break;
        }
    }
    return v0;
}

}  // namespace

WeightAnalysis infer_weights(const Polynomial& p) {
    if (p.is_zero()) {
        throw ZeroPolynomialError("infer_weights on the zero polynomial");
    }
    const std::size_t m = static_cast<std::size_t>(p.num_vars);
    const std::size_t cols = m + 1;  // unknowns w_1..w_m, d

    std::set<std::vector<int>> distinct;
    for (const Monomial& mono : p.monomials) {
        distinct.insert(exponent_vector(mono, p.num_vars));
    }
    std::vector<std::vector<BigRational>> rows;
    rows.reserve(distinct.size());
    for (const std::vector<int>& e : distinct) {
        std::vector<BigRational> row(cols);
        for (std::size_t t = 0; t < m; ++t) row[t] = e[t];
        row[m] = -1;
        rows.push_back(std::move(row));
    }

    // Exact row echelon form; pivots scan weights before d.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const BigRational inv_lead = BigRational(1) / rows[r][col];
        for (std::size_t t = col; t < cols; ++t) rows[r][t] *= inv_lead;
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == r || rows[other][col].is_zero()) continue;
            const BigRational factor = rows[other][col];
            for (std::size_t t = col; t < cols; ++t) {
                rows[other][t] -= factor * rows[r][t];
            }
        }
        pivot_cols.push_back(col);
        ++r;
    }

    WeightAnalysis out;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t col : pivot_cols) is_pivot[col] = true;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<BigRational> v(cols);
        v[free_col] = 1;
        for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
            v[pivot_cols[t]] = -rows[t][free_col];
        }
        out.basis.push_back(to_weight_vector(normalize_to_integers(v)));
    }

    const WeightVector* with_degree = nullptr;
    std::vector<WeightVector> degree_zero;
    for (const WeightVector& w : out.basis) {
        if (w.degree != 0) {
            with_degree = &w;
        } else {
            degree_zero.push_back(w);
        }
    }
    out.has_nonzero_degree = with_degree != nullptr;
    if (with_degree) {
        out.certificate = beautify_certificate(*with_degree, degree_zero);
    }
    return out;
}

Polynomial std_poly(int n, int cap) {
    if (n < 1 || n > cap) {
        throw CapExceededError("std_poly index " + std::to_string(n) +
                               " outside [1, " + std::to_string(cap) + "]");
    }
    Polynomial p;
    p.num_vars = n;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a) {
            for (std::size_t b = a + 1; b < perm.size(); ++b) {
                if (perm[a] > perm[b]) ++inversions;
            }
        }
        p.monomials.push_back(
            Monomial{BigRational(inversions % 2 == 0 ? 1 : -1), perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return canonicalize(std::move(p));
}

}  // namespace quatimage
