#ifndef CHANNELSCOPE_NUMERICS_HPP
#define CHANNELSCOPE_NUMERICS_HPP

#include <array>
#include <vector>

#include "channelscope/matrix.hpp"

namespace chs {

/// Eigendecomposition of a Hermitian matrix: values sorted descending,
/// vectors stored as orthonormal columns of V (M = V diag(values) V^dagger).
struct EigenSystem {
    std::vector<double> values;
    CMat vectors;
};

/// Cyclic complex Jacobi eigensolver. Input must be Hermitian to within
/// 1e-12 elementwise; it is symmetrized before iterating. Converges when the
/// off-diagonal Frobenius mass drops below 1e-13.
EigenSystem herm_eig(const CMat& m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const CMat& m);

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

Vec3 mat3_apply(const Mat3& m, const Vec3& v);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat3 mat3_transpose(const Mat3& m);
Mat3 mat3_identity();

/// Polar-style decomposition A = V * diag(d) * U with U, V orthogonal and
/// d nonnegative. Built from a Jacobi sweep on A^T A; zero singular
/// directions get V columns completed by orthogonalization.
struct Polar3 {
    Mat3 v;
    Vec3 d;
    Mat3 u;
};

Polar3 polar_3x3(const Mat3& a);

}  // namespace chs

#endif
