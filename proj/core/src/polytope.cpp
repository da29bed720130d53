#include "channelscope/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace chs {

VertexSet fw_vertices(std::size_t m, std::size_t n, std::size_t d) {
    if (m < 1 || n < 1 || d < 1)
        throw std::invalid_argument("fw_vertices: m, n, d must be positive");
    double total = 1.0;
    for (std::size_t i = 0; i < m; ++i) total *= static_cast<double>(n);
    if (total > 1e6) throw std::invalid_argument("fw_vertices: n^m exceeds enumeration guard");

    VertexSet vs;
    vs.m = m;
    vs.n = n;
    std::vector<std::size_t> map(m, 0);
    while (true) {
        std::set<std::size_t> image(map.begin(), map.end());
        if (image.size() <= d) {
            Correlation q(m, n);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) q(i, j) = (map[i] == j) ? 1.0 : 0.0;
            vs.vertices.push_back(q);
        }
        // next map in base n
        std::size_t pos = 0;
        while (pos < m && ++map[pos] == n) map[pos++] = 0;
        if (pos == m) break;
    }
    return vs;
}

VertexSet trace_class_vertices(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("trace_class_vertices: m, n must be positive");
    VertexSet vs;
    vs.m = m;
    vs.n = n;
    for (std::size_t j0 = 0; j0 < n; ++j0) {
        Correlation q(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) q(i, j) = (j == j0) ? 1.0 : 0.0;
        vs.vertices.push_back(q);
    }
    return vs;
}

HullResult hull_membership(const VertexSet& vs, const Correlation& p) {
    if (p.m() != vs.m || p.n() != vs.n)
        throw std::invalid_argument("hull_membership: dimension mismatch");
    if (vs.vertices.empty()) throw std::invalid_argument("hull_membership: empty vertex set");

    const std::size_t rows = vs.m * vs.n + 1;  // entry equalities + weight sum
    const std::size_t K = vs.vertices.size();
    const double eps = 1e-11;

    // Phase-one simplex: min sum of artificials s.t. [V; 1] t + s = [p; 1].
    std::vector<std::vector<double>> T(rows, std::vector<double>(K + rows, 0.0));
    std::vector<double> rhs(rows);
    for (std::size_t k = 0; k < K; ++k) {
        const Correlation& q = vs.vertices[k];
        for (std::size_t i = 0; i < vs.m; ++i)
            for (std::size_t j = 0; j < vs.n; ++j) T[i * vs.n + j][k] = q(i, j);
        T[rows - 1][k] = 1.0;
    }
    for (std::size_t i = 0; i < vs.m; ++i)
        for (std::size_t j = 0; j < vs.n; ++j) rhs[i * vs.n + j] = p(i, j);
    rhs[rows - 1] = 1.0;
    for (std::size_t r = 0; r < rows; ++r) T[r][K + r] = 1.0;

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = K + r;

    auto cost_of = [&](std::size_t col) { return col >= K ? 1.0 : 0.0; };

    while (true) {
        // reduced costs r_j = c_j - sum_i c_B[i] T[i][j]; Bland: smallest
        // negative index enters.
        std::size_t enter = K + rows;
        for (std::size_t j = 0; j < K + rows; ++j) {
            double r = cost_of(j);
            for (std::size_t i = 0; i < rows; ++i)
                if (cost_of(basis[i]) != 0.0) r -= T[i][j];
            if (r < -eps) {
                enter = j;
                break;
            }
        }
        if (enter == K + rows) break;

        std::size_t leave = rows;
        double best = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (T[i][enter] <= eps) continue;
            const double ratio = rhs[i] / T[i][enter];
            if (leave == rows || ratio < best - 1e-15 ||
                (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) throw std::runtime_error("hull_membership: unbounded phase one");

        // pivot
        const double piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        rhs[leave] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave) continue;
            const double f = T[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < K + rows; ++j) T[i][j] -= f * T[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= K) objective += rhs[i];

    HullResult res;
    if (objective <= 1e-9) {
        res.inside = true;
        res.weights.assign(K, 0.0);
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] < K) res.weights[basis[i]] = std::max(rhs[i], 0.0);
        return res;
    }

    // Farkas certificate: y_i = sum_r c_B[r] (B^{-1})_{r,i}, read from the
    // artificial columns. Then y.A_k <= 0 for all vertices and y.b > 0.
    std::vector<double> y(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t r = 0; r < rows; ++r)
            if (cost_of(basis[r]) != 0.0) y[i] += T[r][K + i];

    res.inside = false;
    res.witness.assign(y.begin(), y.end() - 1);
    double pw = 0.0;
    for (std::size_t i = 0; i < vs.m; ++i)
        for (std::size_t j = 0; j < vs.n; ++j) pw += p(i, j) * res.witness[i * vs.n + j];
    double best_vertex = -1e300;
    for (const auto& q : vs.vertices) {
        double qw = 0.0;
        for (std::size_t i = 0; i < vs.m; ++i)
            for (std::size_t j = 0; j < vs.n; ++j) qw += q(i, j) * res.witness[i * vs.n + j];
        best_vertex = std::max(best_vertex, qw);
    }
    res.separation = pw - best_vertex;
    return res;
}

double trace_class_threshold(const std::vector<std::vector<double>>& w) {
    if (w.empty() || w[0].empty())
        throw std::invalid_argument("trace_class_threshold: empty witness");
    const std::size_t n = w[0].size();
    double best = -1e300;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (const auto& row : w) {
            if (row.size() != n)
                throw std::invalid_argument("trace_class_threshold: ragged witness");
            col += row[j];
        }
        best = std::max(best, col);
    }
    return best;
}

}  // namespace chs
