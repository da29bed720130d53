#ifndef CHANNELSCOPE_POLYTOPE_HPP
#define CHANNELSCOPE_POLYTOPE_HPP

#include <vector>

#include "channelscope/compat.hpp"

namespace chs {

/// Deterministic-correlation vertex set; every entry is exactly 0 or 1.
struct VertexSet {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Correlation> vertices;
};

/// All deterministic maps [m] -> [n] whose image has at most d elements
/// (the vertex characterization of the d-dimensional correlation polytope).
/// Guard: n^m <= 10^6.
VertexSet fw_vertices(std::size_t m, std::size_t n, std::size_t d);

/// The n constant maps (no-communication polytope).
VertexSet trace_class_vertices(std::size_t m, std::size_t n);

struct HullResult {
    bool inside = false;
    std::vector<double> weights;   // convex weights over vertices when inside
    std::vector<double> witness;   // m*n row-major separating witness otherwise
    double separation = 0.0;       // p.w - max_vertex q.w (> 0 when outside)
};

/// Convex-combination membership via a dense two-phase simplex (phase one
/// with Bland's rule); the separating witness comes from the Farkas
/// multipliers of the infeasible program.
HullResult hull_membership(const VertexSet& vs, const Correlation& p);

/// W(T, w) = max_j sum_i w_{i,j} for the trace-class polytope.
double trace_class_threshold(const std::vector<std::vector<double>>& w);

}  // namespace chs

#endif
