#include "polyangle/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include <gmpxx.h>

namespace polyangle {

namespace {

constexpr double kPi = std::numbers::pi;

// Forward error bound for the orient2d filter (Shewchuk's A-bound).
constexpr double kEps = 1.1102230246251565e-16; // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;

int orient_exact(const Point& a, const Point& b, const Point& c) {
    // Doubles convert to rationals exactly, so this sign is exact.
    const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const mpq_class det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return sgn(det);
}

} // namespace

Orient orientation(const Point& a, const Point& b, const Point& c) {
    const double detleft = (b.x - a.x) * (c.y - a.y);
    const double detright = (b.y - a.y) * (c.x - a.x);
    const double det = detleft - detright;
    const double detsum = std::fabs(detleft) + std::fabs(detright);
    const double errbound = kCcwErrBound * detsum;
    if (det > errbound) return Orient::Left;
    if (det < -errbound) return Orient::Right;
    // Uncertain (also covers overflow to inf/nan): decide exactly.
    switch (orient_exact(a, b, c)) {
        case 1: return Orient::Left;
        case -1: return Orient::Right;
        default: return Orient::Collinear;
    }
}

namespace {

// Assumes collinearity has been established.
bool between_coords(const Point& a, const Point& b, const Point& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

} // namespace

bool on_segment(const Point& a, const Point& b, const Point& c) {
    return orientation(a, b, c) == Orient::Collinear && between_coords(a, b, c);
}

bool strictly_between(const Point& a, const Point& b, const Point& c) {
    return !(c == a) && !(c == b) && on_segment(a, b, c);
}

bool segments_intersect(const Point& p, const Point& q, const Point& r, const Point& s) {
    const Orient o1 = orientation(p, q, r);
    const Orient o2 = orientation(p, q, s);
    const Orient o3 = orientation(r, s, p);
    const Orient o4 = orientation(r, s, q);

    if (((o1 == Orient::Left && o2 == Orient::Right) || (o1 == Orient::Right && o2 == Orient::Left)) &&
        ((o3 == Orient::Left && o4 == Orient::Right) || (o3 == Orient::Right && o4 == Orient::Left)))
        return true;

    if (o1 == Orient::Collinear && between_coords(p, q, r)) return true;
    if (o2 == Orient::Collinear && between_coords(p, q, s)) return true;
    if (o3 == Orient::Collinear && between_coords(r, s, p)) return true;
    if (o4 == Orient::Collinear && between_coords(r, s, q)) return true;
    return false;
}

PointSet make_point_set(std::vector<Point> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw DegenerateInput("point set needs at least 3 points, got " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(pts[static_cast<size_t>(i)].x) || !std::isfinite(pts[static_cast<size_t>(i)].y))
            throw ParseError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const Point& a = pts[static_cast<size_t>(i)];
        const Point& b = pts[static_cast<size_t>(j)];
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    for (int i = 0; i + 1 < n; ++i) {
        if (pts[static_cast<size_t>(order[static_cast<size_t>(i)])] ==
            pts[static_cast<size_t>(order[static_cast<size_t>(i + 1)])]) {
            const int lo = std::min(order[static_cast<size_t>(i)], order[static_cast<size_t>(i + 1)]);
            const int hi = std::max(order[static_cast<size_t>(i)], order[static_cast<size_t>(i + 1)]);
            throw DuplicatePoint("point " + std::to_string(hi) + " duplicates point " + std::to_string(lo));
        }
    }
    return PointSet{std::move(pts)};
}

Hull convex_hull(const PointSet& s) {
    const int n = s.size();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (s[i].x != s[j].x) return s[i].x < s[j].x;
        return s[i].y < s[j].y;
    });

    // Monotone chain, strict left turns only: collinear points on hull edges
    // are popped and end up classified as inner points.
    std::vector<int> h;
    h.reserve(static_cast<size_t>(2 * n));
    for (int idx : order) {
        while (h.size() >= 2 &&
               orientation(s[h[h.size() - 2]], s[h[h.size() - 1]], s[idx]) != Orient::Left)
            h.pop_back();
        h.push_back(idx);
    }
    const size_t lower = h.size();
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
        while (h.size() > lower &&
               orientation(s[h[h.size() - 2]], s[h[h.size() - 1]], s[*it]) != Orient::Left)
            h.pop_back();
        h.push_back(*it);
    }
    h.pop_back();

    if (h.size() < 3) throw DegenerateInput("all points are collinear");

    std::vector<bool> on_hull(static_cast<size_t>(n), false);
    for (int idx : h) on_hull[static_cast<size_t>(idx)] = true;
    Hull hull;
    hull.vertices = std::move(h);
    for (int i = 0; i < n; ++i)
        if (!on_hull[static_cast<size_t>(i)]) hull.inner.push_back(i);
    return hull;
}

double subtended_angle(const Point& a, const Point& x, const Point& b) {
    if (x == a || x == b) throw CoincidentPoint("subtended_angle: apex coincides with a chord endpoint");
    // Exact straight angle for points interior to the chord.
    if (orientation(a, b, x) == Orient::Collinear && between_coords(a, b, x)) return kPi;
    const double ux = a.x - x.x, uy = a.y - x.y;
    const double vx = b.x - x.x, vy = b.y - x.y;
    return std::atan2(std::fabs(ux * vy - uy * vx), ux * vx + uy * vy);
}

double polygon_signed_area(const Polygon& p, const PointSet& s) {
    const int k = p.size();
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
        const Point& u = s[p.vertex(i)];
        const Point& v = s[p.vertex(i + 1)];
        sum += u.x * v.y - v.x * u.y;
    }
    return 0.5 * sum;
}

Polygon ensure_ccw(Polygon p, const PointSet& s) {
    if (polygon_signed_area(p, s) < 0.0) std::reverse(p.chain.begin(), p.chain.end());
    return p;
}

double interior_angle(const Polygon& p, const PointSet& s, int i) {
    const Point& prev = s[p.vertex(i - 1)];
    const Point& v = s[p.vertex(i)];
    const Point& next = s[p.vertex(i + 1)];
    const double ax = next.x - v.x, ay = next.y - v.y;
    const double bx = prev.x - v.x, by = prev.y - v.y;
    double ang = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    if (ang <= 0.0) ang += 2.0 * kPi;
    return ang;
}

double max_interior_angle(const Polygon& p, const PointSet& s) {
    double best = 0.0;
    for (int i = 0; i < p.size(); ++i) best = std::max(best, interior_angle(p, s, i));
    return best;
}

namespace {

struct EdgeBox {
    double xmin, xmax, ymin, ymax;
};

EdgeBox edge_box(const Point& a, const Point& b) {
    return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

bool boxes_overlap(const EdgeBox& a, const EdgeBox& b) {
    return a.xmin <= b.xmax && b.xmin <= a.xmax && a.ymin <= b.ymax && b.ymin <= a.ymax;
}

// Adjacent edges meeting at v, with far endpoints u and w: they overlap
// beyond v exactly when u, w lie on one ray out of v.
bool adjacent_edges_overlap(const Point& v, const Point& u, const Point& w) {
    if (orientation(v, u, w) != Orient::Collinear) return false;
    return (u.x - v.x) * (w.x - v.x) + (u.y - v.y) * (w.y - v.y) > 0.0;
}

} // namespace

bool is_simple(const Polygon& p, const PointSet& s) {
    const int k = p.size();
    if (k < 3) return false;

    std::vector<int> sorted = p.chain;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    std::vector<EdgeBox> boxes;
    boxes.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) boxes.push_back(edge_box(s[p.vertex(i)], s[p.vertex(i + 1)]));

    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
            if (adjacent) {
                const int shared = (j == i + 1) ? j : 0;
                const Point& v = s[p.vertex(shared)];
                const Point& u = s[p.vertex(shared == j ? i : j)];
                const Point& w = s[p.vertex(shared == j ? j + 1 : 1)];
                if (adjacent_edges_overlap(v, u, w)) return false;
            } else {
                if (!boxes_overlap(boxes[static_cast<size_t>(i)], boxes[static_cast<size_t>(j)])) continue;
                if (segments_intersect(s[p.vertex(i)], s[p.vertex(i + 1)],
                                       s[p.vertex(j)], s[p.vertex(j + 1)]))
                    return false;
            }
        }
    }
    return true;
}

bool in_major_segment(const MajorSegment& seg, const Point& x) {
    if (x == seg.a || x == seg.b) return false;
    const Orient o = orientation(seg.a, seg.b, x);
    if (o == Orient::Collinear) return between_coords(seg.a, seg.b, x);
    const Orient bulge = seg.side == ChordSide::Left ? Orient::Left : Orient::Right;
    if (o != bulge) return false;
    return subtended_angle(seg.a, x, seg.b) > kPi - 0.5 * seg.beta;
}

double arc_measure_of(const Point& a, const Point& b, const Point& x) {
    if (x == a || x == b) throw CoincidentPoint("arc_measure_of: point coincides with a chord endpoint");
    const Orient o = orientation(a, b, x);
    if (o == Orient::Collinear) {
        if (between_coords(a, b, x)) return 0.0;
        throw WrongSide("arc_measure_of: point on the chord line outside the open chord");
    }
    if (o == Orient::Right) throw WrongSide("arc_measure_of: point on the non-sweep side of the chord");
    return 2.0 * (kPi - subtended_angle(a, x, b));
}

namespace {

// Does the closed segment uv meet the closed segment cd at any point other
// than the allowed endpoints of cd? Exact.
bool seg_meets_outside(const Point& u, const Point& v, const Point& c, const Point& d,
                       const Point* allow0, const Point* allow1) {
    const Orient o1 = orientation(c, d, u);
    const Orient o2 = orientation(c, d, v);
    const Orient o3 = orientation(u, v, c);
    const Orient o4 = orientation(u, v, d);

    const bool straddle_uv = (o1 == Orient::Left && o2 == Orient::Right) ||
                             (o1 == Orient::Right && o2 == Orient::Left);
    const bool straddle_cd = (o3 == Orient::Left && o4 == Orient::Right) ||
                             (o3 == Orient::Right && o4 == Orient::Left);
    if (straddle_uv && straddle_cd) return true; // crossing interior to both

    auto allowed = [&](const Point& q) {
        return (allow0 && *allow0 == q) || (allow1 && *allow1 == q);
    };

    if (o1 == Orient::Collinear && o2 == Orient::Collinear) {
        // All four points on one line: 1-D interval overlap.
        const bool use_x = c.x != d.x || u.x != v.x;
        auto coord = [&](const Point& q) { return use_x ? q.x : q.y; };
        const double lo = std::max(std::min(coord(u), coord(v)), std::min(coord(c), coord(d)));
        const double hi = std::min(std::max(coord(u), coord(v)), std::max(coord(c), coord(d)));
        if (lo > hi) return false;
        if (lo < hi) return true; // overlap segment, infinitely many points
        for (const Point* q : {&u, &v, &c, &d}) {
            if (coord(*q) == lo && between_coords(u, v, *q) && between_coords(c, d, *q))
                return !allowed(*q);
        }
        return false; // unreachable
    }

    // Touch cases: each contact is an endpoint of one segment on the other.
    if (o1 == Orient::Collinear && between_coords(c, d, u) && !allowed(u)) return true;
    if (o2 == Orient::Collinear && between_coords(c, d, v) && !allowed(v)) return true;
    if (o3 == Orient::Collinear && between_coords(u, v, c) && !allowed(c)) return true;
    if (o4 == Orient::Collinear && between_coords(u, v, d) && !allowed(d)) return true;
    return false;
}

bool strictly_in_triangle(const Point& a, const Point& b, const Point& c, Orient tri, const Point& p) {
    return orientation(a, b, p) == tri && orientation(b, c, p) == tri && orientation(c, a, p) == tri;
}

} // namespace

namespace {

bool triangle_visible_impl(const Polygon& p, const PointSet& s, int edge_pos, const Point& x,
                           int chord_pos) {
    const int k = p.size();
    const int ia = p.vertex(edge_pos);
    const int ib = p.vertex(edge_pos + 1);
    const Point& a = s[ia];
    const Point& b = s[ib];
    const Orient tri = orientation(a, x, b);

    if (tri == Orient::Collinear) {
        // x on the line of ab: only a split at an interior chord point can
        // keep the polygon simple; beyond the endpoints the new edges would
        // overlap each other.
        if (!strictly_between(a, b, x)) return false;
        for (int i = 0; i < k; ++i) {
            if (i == edge_pos || i == (edge_pos + 1) % k) continue;
            if (on_segment(a, b, s[p.vertex(i)])) return false;
        }
        for (int e = 0; e < k; ++e) {
            if (e == edge_pos || e == chord_pos) continue;
            if (seg_meets_outside(s[p.vertex(e)], s[p.vertex(e + 1)], a, b, &a, &b)) return false;
        }
        return true;
    }

    for (int i = 0; i < k; ++i) {
        if (i == edge_pos || i == (edge_pos + 1) % k) continue;
        if (strictly_in_triangle(a, x, b, tri, s[p.vertex(i)])) return false;
    }
    for (int e = 0; e < k; ++e) {
        if (e == edge_pos) continue;
        const Point& u = s[p.vertex(e)];
        const Point& v = s[p.vertex(e + 1)];
        if (seg_meets_outside(u, v, a, x, &a, nullptr)) return false;
        if (seg_meets_outside(u, v, x, b, nullptr, &b)) return false;
        if (e == chord_pos) continue; // chord may lie along the candidate edge
        if (seg_meets_outside(u, v, a, b, &a, &b)) return false;
    }
    return true;
}

} // namespace

bool triangle_visible(const Polygon& p, const PointSet& s, int edge_pos, const Point& x) {
    return triangle_visible_impl(p, s, edge_pos, x, -1);
}

bool triangle_visible_chord(const Polygon& p, const PointSet& s, int edge_pos, const Point& x,
                            int chord_pos) {
    return triangle_visible_impl(p, s, edge_pos, x, chord_pos);
}

double beta_max(int m) {
    return 2.0 * kPi - 4.0 * kPi / static_cast<double>(m);
}

} // namespace polyangle
