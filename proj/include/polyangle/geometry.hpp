#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polyangle/errors.hpp"

namespace polyangle {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Validated input set: at least 3 points, finite coordinates, no exact
// duplicates. Indices into `points` are the vertex ids used everywhere else.
struct PointSet {
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
    const Point& operator[](int i) const { return points[static_cast<size_t>(i)]; }
};

// Throws ParseError / DuplicatePoint / DegenerateInput.
PointSet make_point_set(std::vector<Point> pts);

enum class Orient { Right = -1, Collinear = 0, Left = 1 };

// Sign of the cross product (b-a) x (c-a). Exact: a fast floating-point
// filter falls back to rational arithmetic, so Collinear is returned only
// when the determinant is exactly zero.
Orient orientation(const Point& a, const Point& b, const Point& c);

// True if c lies on the closed segment ab. Exact.
bool on_segment(const Point& a, const Point& b, const Point& c);

// True if c lies strictly between a and b on the segment (collinear,
// excluding endpoints). Exact.
bool strictly_between(const Point& a, const Point& b, const Point& c);

// Closed segments pq and rs share at least one point. Exact.
bool segments_intersect(const Point& p, const Point& q, const Point& r, const Point& s);

// Convex hull of the set, counter-clockwise and strictly convex: points on
// open hull edges are classified as inner points, so m + r = n always.
struct Hull {
    std::vector<int> vertices; // counter-clockwise corner indices
    std::vector<int> inner;    // everything else, in input order

    int m() const { return static_cast<int>(vertices.size()); }
    int r() const { return static_cast<int>(inner.size()); }
    std::pair<int, int> edge(int j) const {
        int mm = m();
        return {vertices[static_cast<size_t>(j)], vertices[static_cast<size_t>((j + 1) % mm)]};
    }
};

// Throws DegenerateInput if all points are collinear.
Hull convex_hull(const PointSet& s);

// Undirected angle at x between rays x->a and x->b, in [0, pi].
// Throws CoincidentPoint if x equals a or b.
double subtended_angle(const Point& a, const Point& x, const Point& b);

// A simple closed chain of point indices, counter-clockwise.
struct Polygon {
    std::vector<int> chain;

    int size() const { return static_cast<int>(chain.size()); }
    int vertex(int i) const {
        int k = size();
        return chain[static_cast<size_t>(((i % k) + k) % k)];
    }
};

double polygon_signed_area(const Polygon& p, const PointSet& s);

// Reverses the chain if its signed area is negative.
Polygon ensure_ccw(Polygon p, const PointSet& s);

// Interior angle at chain position i of a counter-clockwise simple polygon,
// in (0, 2pi). Reflex vertices give values above pi.
double interior_angle(const Polygon& p, const PointSet& s, int i);

double max_interior_angle(const Polygon& p, const PointSet& s);

// True iff no two non-adjacent edges share a point and adjacent edges share
// only their common endpoint. Exact predicates throughout.
bool is_simple(const Polygon& p, const PointSet& s);

enum class ChordSide { Left, Right };

// Circular-segment region on chord (a, b): the points that see the chord at
// an inscribed angle above pi - beta/2, on the bulge side. For hull edges
// taken in counter-clockwise order the bulge side is Left (the interior).
struct MajorSegment {
    Point a;
    Point b;
    double beta = 0.0;              // arc measure in (0, 2pi)
    ChordSide side = ChordSide::Left;
};

// Strict on the bounding arc, inclusive on the open chord.
bool in_major_segment(const MajorSegment& seg, const Point& x);

// Arc measure at which the sweep arc on chord (a, b) meets x:
// 2 * (pi - subtended_angle(a, x, b)). The sweep side is Left of a->b.
// Throws WrongSide for points the sweep can never meet (strictly on the
// right side, or on the chord line outside the open chord).
double arc_measure_of(const Point& a, const Point& b, const Point& x);

// Classical edge visibility: the closed triangle (a, x, b) meets no edge of
// p other than ab itself (touching allowed only at a and b) and contains no
// other vertex of p. True guarantees that replacing edge ab by ax, xb keeps
// the polygon simple. `edge_pos` is the chain position of a; b follows it.
bool triangle_visible(const Polygon& p, const PointSet& s, int edge_pos, const Point& x);

// Sweep-construction variant: the edge at `chord_pos` (the closing hull
// chord) may additionally overlap the candidate edge itself. That overlap is
// benign and occurs exactly when input points lie on the open chord.
bool triangle_visible_chord(const Polygon& p, const PointSet& s, int edge_pos, const Point& x,
                            int chord_pos);

// Largest arc measure used by the sweep constructions: 2pi - 4pi/m.
double beta_max(int m);

inline constexpr double kAngleTol = 1e-9;

} // namespace polyangle
