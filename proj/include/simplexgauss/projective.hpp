#pragma once

#include <optional>
#include <string>

#include "simplexgauss/eigen_support.hpp"

namespace simplexgauss {

// ---- integer matrix kernel -------------------------------------------------

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_pow(const IMat& a, long e);  // e >= 0

// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IMat& m);

// Adjugate matrix: adj(M) * M = det(M) * I.
IMat adjugate(const IMat& m);

// Inverse of a matrix with det = +-1 (integer entries). Throws otherwise.
IMat unimodular_inverse(const IMat& m);

inline bool is_unimodular(const IMat& m) {
    Integer d = det(m);
    return d == 1 || d == -1;
}

bool imat_equal(const IMat& a, const IMat& b);

// ---- projective points -----------------------------------------------------

// Points are homogeneous columns of n+1 exact scalars, all Rational or all
// NFElement over one shared field. Canonical forms:
//   rational     — integer entries, content 1, last nonzero entry positive
//   number field — divided by the last nonzero coordinate
// Equal projective points have identical canonical forms.
QVec canonicalize(const QVec& p);
NVec canonicalize(const NVec& p);

bool is_canonical(const QVec& p);

// M * p, canonicalized. Throws on a zero result (corrupt input).
template <class S>
Vec<S> apply_matrix(const IMat& m, const Vec<S>& p) {
    if (m.cols() != p.size()) throw std::domain_error("apply_matrix: dimension mismatch");
    Vec<S> out(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        S acc(0);
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (is_zero(m(i, j))) continue;
            acc += S(Rational(m(i, j))) * p[j];
        }
        out[i] = acc;
    }
    return canonicalize(out);
}

// Stable text key of a canonical point, for revisit detection.
template <class S>
std::string state_key(const Vec<S>& canonical_p) {
    std::string k;
    for (Eigen::Index i = 0; i < canonical_p.size(); ++i) {
        k += to_string(canonical_p[i]);
        k += '|';
    }
    return k;
}

enum class BoundaryPolicy { Closed, Open };

// Exact barycentric membership: p in simplex(S) iff adj(S) * p has entries
// of one common sign (strictly positive for Open). The simplex matrix must
// be nonsingular.
template <class S>
bool simplex_contains(const IMat& simplex, const Vec<S>& p,
                      BoundaryPolicy policy = BoundaryPolicy::Closed) {
    Integer d = det(simplex);
    if (is_zero(d)) throw std::domain_error("simplex_contains: singular simplex");
    IMat adj = adjugate(simplex);
    int pos = 0, neg = 0, zero = 0;
    for (Eigen::Index i = 0; i < adj.rows(); ++i) {
        S acc(0);
        for (Eigen::Index j = 0; j < adj.cols(); ++j) {
            if (is_zero(adj(i, j))) continue;
            acc += S(Rational(adj(i, j))) * p[j];
        }
        int s = sgn(acc);
        if (s > 0) ++pos;
        else if (s < 0) ++neg;
        else ++zero;
    }
    if (policy == BoundaryPolicy::Open) return (pos == 0) != (neg == 0) && zero == 0;
    return pos == 0 || neg == 0;
}

// First index (from the end) of a nonzero coordinate; -1 if all zero.
template <class S>
int last_nonzero_index(const Vec<S>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!is_zero(p[i])) return i;
    return -1;
}

QVec qvec_from_integers(const std::vector<long>& entries);
IVec integer_coords(const QVec& canonical_p);  // entries of a rational canonical point

}  // namespace simplexgauss
