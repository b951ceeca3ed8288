#include "simplexgauss/projective.hpp"

namespace simplexgauss {

IMat imat_identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? 1 : 0;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    if (a.cols() != b.rows()) throw std::domain_error("imat_mul: dimension mismatch");
    IMat r(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            Integer acc = 0;
            for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

IMat imat_pow(const IMat& a, long e) {
    if (e < 0) throw std::domain_error("imat_pow: negative exponent");
    IMat r = imat_identity(static_cast<int>(a.rows()));
    IMat base = a;
    while (e) {
        if (e & 1) r = imat_mul(r, base);
        base = imat_mul(base, base);
        e >>= 1;
    }
    return r;
}

Integer det(const IMat& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det: not square");
    int n = static_cast<int>(m.rows());
    if (n == 0) return 1;
    IMat a = m;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (is_zero(a(k, k))) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(a(i, k))) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

static Integer minor_det(const IMat& m, int row, int col) {
    int n = static_cast<int>(m.rows());
    IMat sub(n - 1, n - 1);
    for (int i = 0, si = 0; i < n; ++i) {
        if (i == row) continue;
        for (int j = 0, sj = 0; j < n; ++j) {
            if (j == col) continue;
            sub(si, sj) = m(i, j);
            ++sj;
        }
        ++si;
    }
    return det(sub);
}

IMat adjugate(const IMat& m) {
    if (m.rows() != m.cols()) throw std::domain_error("adjugate: not square");
    int n = static_cast<int>(m.rows());
    if (n == 1) {
        IMat r(1, 1);
        r(0, 0) = 1;
        return r;
    }
    IMat adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Integer c = minor_det(m, j, i);
            adj(i, j) = ((i + j) % 2 == 0) ? c : Integer(-c);
        }
    return adj;
}

IMat unimodular_inverse(const IMat& m) {
    Integer d = det(m);
    if (d != 1 && d != -1)
        throw std::domain_error("unimodular_inverse: determinant is " + d.get_str());
    IMat adj = adjugate(m);
    if (d == -1)
        for (Eigen::Index i = 0; i < adj.rows(); ++i)
            for (Eigen::Index j = 0; j < adj.cols(); ++j) adj(i, j) = -adj(i, j);
    return adj;
}

bool imat_equal(const IMat& a, const IMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

QVec canonicalize(const QVec& p) {
    int last = last_nonzero_index(p);
    if (last < 0) throw std::domain_error("canonicalize: zero vector");
    // clear denominators
    Integer lcm = 1;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p[i].get_den().get_mpz_t());
    IVec z(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        Rational v = p[i] * Rational(lcm);
        z[i] = v.get_num();  // denominator is 1 now
    }
    // divide by content
    Integer content = 0;
    for (Eigen::Index i = 0; i < z.size(); ++i)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    if (content > 1)
        for (Eigen::Index i = 0; i < z.size(); ++i)
            mpz_divexact(z[i].get_mpz_t(), z[i].get_mpz_t(), content.get_mpz_t());
    // last nonzero coordinate positive
    if (z[last] < 0)
        for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = -z[i];
    QVec out(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) out[i] = Rational(z[i]);
    return out;
}

NVec canonicalize(const NVec& p) {
    int last = last_nonzero_index(p);
    if (last < 0) throw std::domain_error("canonicalize: zero vector");
    NFElement inv = p[last].inverse();
    NVec out(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) out[i] = p[i] * inv;
    return out;
}

bool is_canonical(const QVec& p) {
    int last = last_nonzero_index(p);
    if (last < 0) return false;
    Integer content = 0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p[i].get_den() != 1) return false;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), p[i].get_num().get_mpz_t());
    }
    return content == 1 && sgn(p[last]) > 0;
}

QVec qvec_from_integers(const std::vector<long>& entries) {
    QVec v(static_cast<Eigen::Index>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) v[static_cast<Eigen::Index>(i)] = Rational(entries[i]);
    return v;
}

IVec integer_coords(const QVec& canonical_p) {
    IVec z(canonical_p.size());
    for (Eigen::Index i = 0; i < canonical_p.size(); ++i) {
        if (canonical_p[i].get_den() != 1)
            throw std::domain_error("integer_coords: point is not in canonical integer form");
        z[i] = canonical_p[i].get_num();
    }
    return z;
}

}  // namespace simplexgauss
