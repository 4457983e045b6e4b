#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyangle/geometry.hpp"

namespace polyangle {

// One sweep insertion: point `point` replaced edge (edge_a, edge_b) while the
// chain already held `chain_len_before` inner points. `beta` is the subtended
// angle of the chosen edge at the point; the construction keeps it at least
// 2pi / ((chain_len_before + 1) * m).
struct InsertionRecord {
    int point = -1;
    int edge_a = -1;
    int edge_b = -1;
    double beta = 0.0;
    int chain_len_before = 0;
};

// Completed sweep over one hull edge.
struct SweepState {
    std::pair<int, int> edge{-1, -1};       // hull chord (c1, c2)
    double measure = 0.0;                   // arc measure of the last met point
    std::vector<int> chain;                 // met inner points in chain order, c1 side first
    std::vector<int> pending;               // empty once the sweep completed
    std::vector<InsertionRecord> insertions;
};

// Builds the chain polygon (c1, s_1, ..., s_k, c2) over the points assigned
// to one hull edge, inserting them in order of increasing arc measure, each
// time splitting the visible chain edge with the largest subtended angle.
// `m` is the hull edge count that fixes beta_max. Throws NoVisibleEdge on
// geometric breakdown (never for valid input).
//
// Runs on its own state only; concurrent sweeps on distinct inputs are safe.
SweepState sweep_arc_chain(std::pair<int, int> edge, std::vector<int> pts, int m,
                           const PointSet& s);

enum class BoundKind { RTimesM, DTimesM };

struct BoundReport {
    BoundKind kind = BoundKind::RTimesM;
    int k = 0; // r or d
    int m = 0;
    double bound_value = 0.0; // 2pi - 2pi/(k*m); pi when k == 0 (convex case)
    double max_angle = 0.0;
    std::optional<double> theta_note; // oracle theta, when one was run

    bool satisfied() const { return max_angle <= bound_value + kAngleTol; }
};

// 2pi - 2pi/(k*m), with the k == 0 convention of pi (a convex polygon's
// interior angles stay below pi).
double angle_bound(int k, int m);

// Rounds of the concurrent sweep: layers[t] lists (hull edge index, point
// index) claims of round t. depth() is d.
struct OnionPeeling {
    std::vector<std::vector<std::pair<int, int>>> layers;

    int depth() const { return static_cast<int>(layers.size()); }
    std::vector<int> claims_of_edge(int j) const;
};

// PerEdge: every active arc advances to its own next unclaimed point each
// round (the reading the depth bound is proved for). GlobalHit: one claim per
// round, the single globally smallest measure; exposed for comparison only.
enum class OnionMode { PerEdge, GlobalHit };

struct EdgewiseResult {
    Hull hull;
    Polygon polygon;
    BoundReport report;
    std::vector<SweepState> sweeps; // one per hull edge; unused edges keep empty chains
};

// Sequential per-edge construction: hull edges in order each claim all still
// unclaimed inner points of their beta_max segment and sweep them into a
// chain; chains are spliced into the hull cycle. Max interior angle is at
// most 2pi - 2pi/(r*m).
//
// The per-edge sweeps share the pool of unclaimed points and must run in
// hull-edge order; do not parallelize them. Distinct calls are independent.
EdgewiseResult polygonize_edgewise(const PointSet& s);

struct OnionResult {
    Hull hull;
    Polygon polygon;
    OnionPeeling peeling;
    BoundReport report;
    std::vector<SweepState> sweeps;
};

// Concurrent construction: all arcs expand in rounds, each edge claiming at
// most one point per round, so every chain has length at most d and the max
// interior angle is below 2pi - 2pi/(d*m).
OnionResult polygonize_onion(const PointSet& s, OnionMode mode = OnionMode::PerEdge);

// The peeling alone: same claims as polygonize_onion, no polygon built.
OnionPeeling onion_depth(const PointSet& s, OnionMode mode = OnionMode::PerEdge);

// Hull edge whose beta_max segment contains x, chosen as the edge with the
// largest subtended angle (ties: lowest index). That angle is at least 2pi/m
// for any strictly interior x. Throws NotInterior otherwise.
int find_covering_edge(const Hull& hull, const PointSet& s, const Point& x);

struct AlphaResult {
    bool feasible = false;
    double bound = 0.0; // 2pi - 2pi/(d*m)
    std::optional<Polygon> polygon;
};

// Existence wrapper: for alpha above the depth bound the onion polygon has
// all interior angles at most alpha. Below the bound nothing is claimed
// (infeasibility is not proven, only not guaranteed).
AlphaResult alpha_polygon(const PointSet& s, double alpha);

struct CoverageResult {
    bool feasible = false;
    double bound = 0.0;
    std::optional<Polygon> tour;
};

// A robot whose rotation limit exceeds the depth bound can tour all points.
CoverageResult coverage_path_feasible(const PointSet& s, double max_turn);

} // namespace polyangle
