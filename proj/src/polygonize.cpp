#include "polyangle/polygonize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace polyangle {

namespace {

constexpr double kPi = std::numbers::pi;

double dist2(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Arc measure at which edge (A, B)'s sweep meets x, or nothing if the sweep
// never claims it: wrong side, on the chord line outside the chord, or past
// beta_max. Points on the open chord are met immediately at measure 0.
std::optional<double> claim_measure(const Point& A, const Point& B, const Point& x, double bmax) {
    const Orient o = orientation(A, B, x);
    if (o == Orient::Right) return std::nullopt;
    if (o == Orient::Collinear) {
        if (!strictly_between(A, B, x)) return std::nullopt;
        return 0.0;
    }
    const double mu = 2.0 * (kPi - subtended_angle(A, x, B));
    if (mu <= bmax + kAngleTol) return mu;
    return std::nullopt;
}

struct Cand {
    int idx;
    double mu;
    double d2mid;
};

// Meeting order of the sweep: increasing arc measure, ties broken by
// distance to the chord midpoint, then input index.
void sort_by_measure(std::vector<Cand>& cands) {
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.mu != b.mu) return a.mu < b.mu;
        if (a.d2mid != b.d2mid) return a.d2mid < b.d2mid;
        return a.idx < b.idx;
    });
}

Polygon assemble(const Hull& hull, const std::vector<SweepState>& sweeps) {
    Polygon p;
    p.chain.reserve(static_cast<size_t>(hull.m()));
    for (int j = 0; j < hull.m(); ++j) {
        p.chain.push_back(hull.vertices[static_cast<size_t>(j)]);
        const auto& chain = sweeps[static_cast<size_t>(j)].chain;
        p.chain.insert(p.chain.end(), chain.begin(), chain.end());
    }
    return p;
}

} // namespace

double angle_bound(int k, int m) {
    if (k <= 0) return kPi;
    return 2.0 * kPi - 2.0 * kPi / (static_cast<double>(k) * static_cast<double>(m));
}

std::vector<int> OnionPeeling::claims_of_edge(int j) const {
    std::vector<int> out;
    for (const auto& layer : layers)
        for (const auto& [e, p] : layer)
            if (e == j) out.push_back(p);
    return out;
}

SweepState sweep_arc_chain(std::pair<int, int> edge, std::vector<int> pts, int m,
                           const PointSet& s) {
    SweepState st;
    st.edge = edge;
    if (pts.empty()) return st;

    const Point& c1 = s[edge.first];
    const Point& c2 = s[edge.second];
    const Point mid{0.5 * (c1.x + c2.x), 0.5 * (c1.y + c2.y)};

    std::vector<Cand> cands;
    cands.reserve(pts.size());
    for (int idx : pts) cands.push_back({idx, arc_measure_of(c1, c2, s[idx]), dist2(s[idx], mid)});
    sort_by_measure(cands);
    for (const Cand& c : cands) st.pending.push_back(c.idx);

    Polygon poly;
    poly.chain = {edge.first, edge.second};

    std::vector<std::pair<double, int>> ranked; // (subtended angle, edge position)
    for (const Cand& c : cands) {
        const Point& xp = s[c.idx];
        const int len = poly.size();
        const int t = len - 2;
        int pos = -1;
        double beta = 0.0;

        if (t == 0) {
            pos = 0;
            beta = subtended_angle(c1, xp, c2);
        } else {
            // Rank chain-side edges by subtended angle; the best visible one
            // is the argmax over visible edges. Position len-1 is the closing
            // hull chord, never a candidate but always an obstacle.
            ranked.clear();
            for (int e = 0; e + 1 < len; ++e)
                ranked.emplace_back(subtended_angle(s[poly.chain[static_cast<size_t>(e)]], xp,
                                                    s[poly.chain[static_cast<size_t>(e + 1)]]),
                                    e);
            std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            for (const auto& [bj, e] : ranked) {
                if (triangle_visible_chord(poly, s, e, xp, len - 1)) {
                    pos = e;
                    beta = bj;
                    break;
                }
            }
            if (pos < 0)
                throw NoVisibleEdge("sweep on chord (" + std::to_string(edge.first) + "," +
                                    std::to_string(edge.second) + "): no chain edge visible from point " +
                                    std::to_string(c.idx) + " at chain length " + std::to_string(t));
        }

        st.insertions.push_back({c.idx, poly.chain[static_cast<size_t>(pos)],
                                 poly.chain[static_cast<size_t>(pos + 1)], beta, t});
        poly.chain.insert(poly.chain.begin() + pos + 1, c.idx);
        st.pending.erase(st.pending.begin());
        st.measure = c.mu;
    }

    st.chain.assign(poly.chain.begin() + 1, poly.chain.end() - 1);
    return st;
}

EdgewiseResult polygonize_edgewise(const PointSet& s) {
    EdgewiseResult res;
    res.hull = convex_hull(s);
    const Hull& hull = res.hull;
    const int m = hull.m();
    const double bmax = beta_max(m);

    // Hull order is load-bearing: each edge claims every still unclaimed
    // point of its segment before the next edge looks.
    std::vector<char> taken(static_cast<size_t>(s.size()), 0);
    std::vector<std::vector<int>> claims(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const auto [ia, ib] = hull.edge(j);
        for (int idx : hull.inner) {
            if (taken[static_cast<size_t>(idx)]) continue;
            if (claim_measure(s[ia], s[ib], s[idx], bmax)) {
                claims[static_cast<size_t>(j)].push_back(idx);
                taken[static_cast<size_t>(idx)] = 1;
            }
        }
    }
    for (int idx : hull.inner)
        if (!taken[static_cast<size_t>(idx)])
            throw UnclaimedPoint("inner point " + std::to_string(idx) +
                                 " lies in no hull edge's sweep segment");

    res.sweeps.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        if (claims[static_cast<size_t>(j)].empty()) {
            SweepState empty;
            empty.edge = hull.edge(j);
            res.sweeps.push_back(std::move(empty));
        } else {
            res.sweeps.push_back(sweep_arc_chain(hull.edge(j), claims[static_cast<size_t>(j)], m, s));
        }
    }

    res.polygon = assemble(hull, res.sweeps);
    res.report = BoundReport{BoundKind::RTimesM, hull.r(), m, angle_bound(hull.r(), m),
                             max_interior_angle(res.polygon, s), std::nullopt};
    return res;
}

namespace {

struct EdgeQueue {
    std::vector<Cand> cands; // sorted by meeting order
    size_t cursor = 0;
};

OnionPeeling peel_rounds(const Hull& hull, const PointSet& s, OnionMode mode) {
    const int m = hull.m();
    const double bmax = beta_max(m);

    std::vector<EdgeQueue> queues(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const auto [ia, ib] = hull.edge(j);
        const Point mid{0.5 * (s[ia].x + s[ib].x), 0.5 * (s[ia].y + s[ib].y)};
        for (int idx : hull.inner) {
            if (auto mu = claim_measure(s[ia], s[ib], s[idx], bmax))
                queues[static_cast<size_t>(j)].cands.push_back({idx, *mu, dist2(s[idx], mid)});
        }
        sort_by_measure(queues[static_cast<size_t>(j)].cands);
    }

    std::vector<char> taken(static_cast<size_t>(s.size()), 0);
    int remaining = hull.r();
    OnionPeeling peel;

    struct Prop {
        double mu;
        int j;
        int idx;
    };
    std::vector<Prop> props;
    while (remaining > 0) {
        props.clear();
        for (int j = 0; j < m; ++j) {
            EdgeQueue& q = queues[static_cast<size_t>(j)];
            while (q.cursor < q.cands.size() && taken[static_cast<size_t>(q.cands[q.cursor].idx)])
                ++q.cursor;
            if (q.cursor < q.cands.size())
                props.push_back({q.cands[q.cursor].mu, j, q.cands[q.cursor].idx});
        }
        if (props.empty())
            throw UnclaimedPoint(std::to_string(remaining) + " inner points claimable by no arc");

        std::vector<std::pair<int, int>> layer;
        if (mode == OnionMode::GlobalHit) {
            const Prop* best = &props.front();
            for (const Prop& p : props)
                if (p.mu < best->mu || (p.mu == best->mu && p.j < best->j)) best = &p;
            layer.emplace_back(best->j, best->idx);
        } else {
            // Several arcs may propose the same point; the one meeting it at
            // the smaller measure wins (ties: lower edge index). Losing arcs
            // claim nothing this round.
            std::sort(props.begin(), props.end(), [](const Prop& a, const Prop& b) {
                if (a.idx != b.idx) return a.idx < b.idx;
                if (a.mu != b.mu) return a.mu < b.mu;
                return a.j < b.j;
            });
            for (size_t i = 0; i < props.size(); ++i) {
                if (i > 0 && props[i].idx == props[i - 1].idx) continue;
                layer.emplace_back(props[i].j, props[i].idx);
            }
            std::sort(layer.begin(), layer.end());
        }

        for (const auto& [j, idx] : layer) taken[static_cast<size_t>(idx)] = 1;
        remaining -= static_cast<int>(layer.size());
        peel.layers.push_back(std::move(layer));
    }
    return peel;
}

} // namespace

OnionPeeling onion_depth(const PointSet& s, OnionMode mode) {
    return peel_rounds(convex_hull(s), s, mode);
}

OnionResult polygonize_onion(const PointSet& s, OnionMode mode) {
    OnionResult res;
    res.hull = convex_hull(s);
    const int m = res.hull.m();
    res.peeling = peel_rounds(res.hull, s, mode);

    res.sweeps.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        auto claimed = res.peeling.claims_of_edge(j);
        if (claimed.empty()) {
            SweepState empty;
            empty.edge = res.hull.edge(j);
            res.sweeps.push_back(std::move(empty));
        } else {
            res.sweeps.push_back(sweep_arc_chain(res.hull.edge(j), claimed, m, s));
        }
    }

    res.polygon = assemble(res.hull, res.sweeps);
    const int d = res.peeling.depth();
    res.report = BoundReport{BoundKind::DTimesM, d, m, angle_bound(d, m),
                             max_interior_angle(res.polygon, s), std::nullopt};
    return res;
}

int find_covering_edge(const Hull& hull, const PointSet& s, const Point& x) {
    const int m = hull.m();
    for (int j = 0; j < m; ++j) {
        const auto [ia, ib] = hull.edge(j);
        if (orientation(s[ia], s[ib], x) != Orient::Left)
            throw NotInterior("point is not strictly inside the hull");
    }
    int best = 0;
    double best_angle = -1.0;
    for (int j = 0; j < m; ++j) {
        const auto [ia, ib] = hull.edge(j);
        const double ang = subtended_angle(s[ia], x, s[ib]);
        if (ang > best_angle) {
            best_angle = ang;
            best = j;
        }
    }
    return best;
}

AlphaResult alpha_polygon(const PointSet& s, double alpha) {
    OnionResult r = polygonize_onion(s);
    AlphaResult out;
    out.bound = r.report.bound_value;
    if (alpha > out.bound) {
        out.feasible = true;
        out.polygon = std::move(r.polygon);
    }
    return out;
}

CoverageResult coverage_path_feasible(const PointSet& s, double max_turn) {
    OnionResult r = polygonize_onion(s);
    CoverageResult out;
    out.bound = r.report.bound_value;
    if (max_turn > out.bound) {
        out.feasible = true;
        out.tour = std::move(r.polygon);
    }
    return out;
}

} // namespace polyangle
