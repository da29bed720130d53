#include "channelscope/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chs {

namespace {

double offdiag_mass(const CMat& m) {
    double s = 0.0;
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem herm_eig(const CMat& input) {
    const double defect = input.hermiticity_defect();
    if (defect > 1e-12) {
        std::ostringstream os;
        os << "herm_eig: input not Hermitian, max asymmetry " << defect;
        throw std::invalid_argument(os.str());
    }

    const std::size_t n = input.dim();
    CMat a = input.hermitized();
    CMat v = CMat::identity(n);

    // Cyclic Jacobi sweeps. Each off-diagonal entry a_pq is annihilated by a
    // unitary rotation in the (p,q) plane carrying the phase of a_pq.
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_mass(a) < 1e-13) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();

                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // G columns: col p = (c, -s*conj(phase)); col q = (s*phase, c)
                const cplx gpq = s * phase;
                const cplx gqp = -s * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * gqp;
                    a(k, q) = akp * gpq + akq * c;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(c) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(c) * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * c;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = CMat(n);
    for (std::size_t j = 0; j < n; ++j) {
        es.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, j) = v(i, order[j]);
    }
    return es;
}

double trace_norm(const CMat& m) {
    const EigenSystem es = herm_eig(m);
    double s = 0.0;
    for (double x : es.values) s += std::abs(x);
    return s;
}

Vec3 mat3_apply(const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
    return r;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Mat3 mat3_transpose(const Mat3& m) {
    Mat3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

Mat3 mat3_identity() {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = 1.0;
    return m;
}

namespace {

// Jacobi on a real symmetric 3x3; returns eigenvalues and orthonormal
// eigenvector columns.
void sym3_eig(Mat3 a, Vec3& vals, Mat3& vecs) {
    vecs = mat3_identity();
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) off += a[i][j] * a[i][j];
        if (off < 1e-28) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = vecs[k][p], vkq = vecs[k][q];
                    vecs[k][p] = c * vkp - s * vkq;
                    vecs[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    for (int i = 0; i < 3; ++i) vals[i] = a[i][i];
}

double norm3(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

Polar3 polar_3x3(const Mat3& a) {
    // A^T A = U^T D^2 U, so the eigenvectors of A^T A are the rows of U.
    Mat3 ata{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) ata[i][j] += a[k][i] * a[k][j];

    Vec3 vals;
    Mat3 evecs;
    sym3_eig(ata, vals, evecs);

    Polar3 r;
    for (int i = 0; i < 3; ++i) r.d[i] = std::sqrt(std::max(vals[i], 0.0));
    // U rows = eigenvectors of A^T A.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.u[i][j] = evecs[j][i];

    // V columns: A u_i / d_i where available, then complete to a frame.
    bool have[3] = {false, false, false};
    for (int i = 0; i < 3; ++i) {
        if (r.d[i] < 1e-12) continue;
        Vec3 ui = {r.u[i][0], r.u[i][1], r.u[i][2]};
        Vec3 col = mat3_apply(a, ui);
        for (int k = 0; k < 3; ++k) r.v[k][i] = col[k] / r.d[i];
        have[i] = true;
    }
    for (int i = 0; i < 3; ++i) {
        if (have[i]) continue;
        // Gram-Schmidt a coordinate axis against the columns already placed.
        for (int trial = 0; trial < 3; ++trial) {
            Vec3 w{};
            w[trial] = 1.0;
            for (int j = 0; j < 3; ++j) {
                if (!have[j]) continue;
                double dot = 0.0;
                for (int k = 0; k < 3; ++k) dot += w[k] * r.v[k][j];
                for (int k = 0; k < 3; ++k) w[k] -= dot * r.v[k][j];
            }
            const double nw = norm3(w);
            if (nw > 1e-6) {
                for (int k = 0; k < 3; ++k) r.v[k][i] = w[k] / nw;
                have[i] = true;
                break;
            }
        }
    }
    return r;
}

}  // namespace chs
