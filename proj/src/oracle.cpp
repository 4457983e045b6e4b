#include "polyangle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace polyangle {

namespace {

// Search state for the canonical-order DFS. Edges of a partial chain can
// only cross if their index pairs are disjoint (shared indices mean chain
// adjacency), so a precomputed pair table answers every crossing query.
struct Search {
    const PointSet& s;
    int n;
    std::uint64_t cap;
    std::uint64_t nodes = 0;
    bool capped = false;

    std::vector<char> cross;  // [seg(i,j)][seg(k,l)] closed segments meet
    std::vector<int> chain;
    std::vector<char> used;
    PolygonizationEnumeration out;

    explicit Search(const PointSet& ps, std::uint64_t cap_limit)
        : s(ps), n(ps.size()), cap(cap_limit) {
        const size_t segs = static_cast<size_t>(n) * static_cast<size_t>(n);
        cross.assign(segs * segs, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = i; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        if (k == i || k == j || l == i || l == j) continue;
                        const bool hit = segments_intersect(s[i], s[j], s[k], s[l]);
                        cross[seg(i, j) * segs + seg(k, l)] = hit;
                        cross[seg(k, l) * segs + seg(i, j)] = hit;
                    }
    }

    size_t seg(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j);
    }

    bool edge_crosses_prefix(int pos, int v) const {
        // New edge (chain[pos-1], v) against all earlier non-adjacent edges.
        const size_t segs = static_cast<size_t>(n) * static_cast<size_t>(n);
        const size_t e = seg(chain[static_cast<size_t>(pos - 1)], v);
        for (int i = 0; i + 1 < pos - 1; ++i)
            if (cross[e * segs + seg(chain[static_cast<size_t>(i)], chain[static_cast<size_t>(i + 1)])])
                return true;
        // Adjacent edge: may not fold back onto itself.
        if (pos >= 2) {
            const Point& v0 = s[chain[static_cast<size_t>(pos - 1)]];
            const Point& u = s[chain[static_cast<size_t>(pos - 2)]];
            const Point& w = s[v];
            if (orientation(v0, u, w) == Orient::Collinear &&
                (u.x - v0.x) * (w.x - v0.x) + (u.y - v0.y) * (w.y - v0.y) > 0.0)
                return true;
        }
        return false;
    }

    void leaf() {
        Polygon p;
        p.chain = chain;
        p = ensure_ccw(std::move(p), s);
        const double gamma = max_interior_angle(p, s);
        ++out.count;
        if (out.count == 1 || gamma < out.theta) {
            out.theta = gamma;
            Polygon canon;
            canon.chain = chain;
            out.best = std::move(canon);
        }
    }

    void dfs(int pos) {
        if (capped) return;
        if (++nodes > cap) {
            capped = true;
            return;
        }
        if (pos == n) {
            // Reflection canonicality, then the closing edge.
            if (chain[1] >= chain[static_cast<size_t>(n - 1)]) return;
            const size_t segs = static_cast<size_t>(n) * static_cast<size_t>(n);
            const size_t e = seg(chain[static_cast<size_t>(n - 1)], chain[0]);
            for (int i = 1; i + 1 < n - 1; ++i)
                if (cross[e * segs + seg(chain[static_cast<size_t>(i)], chain[static_cast<size_t>(i + 1)])])
                    return;
            const Point& c0 = s[chain[0]];
            const Point& cl = s[chain[static_cast<size_t>(n - 1)]];
            if (orientation(cl, s[chain[static_cast<size_t>(n - 2)]], c0) == Orient::Collinear &&
                (s[chain[static_cast<size_t>(n - 2)]].x - cl.x) * (c0.x - cl.x) +
                        (s[chain[static_cast<size_t>(n - 2)]].y - cl.y) * (c0.y - cl.y) >
                    0.0)
                return;
            if (orientation(c0, cl, s[chain[1]]) == Orient::Collinear &&
                (cl.x - c0.x) * (s[chain[1]].x - c0.x) + (cl.y - c0.y) * (s[chain[1]].y - c0.y) > 0.0)
                return;
            leaf();
            return;
        }
        for (int v = 1; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (pos > 1 && edge_crosses_prefix(pos, v)) continue;
            chain[static_cast<size_t>(pos)] = v;
            used[static_cast<size_t>(v)] = 1;
            dfs(pos + 1);
            used[static_cast<size_t>(v)] = 0;
            if (capped) return;
        }
    }
};

std::string describe_instance(const PointSet& s) {
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < s.size(); ++i) os << s[i].x << "," << s[i].y << "\n";
    return os.str();
}

} // namespace

PolygonizationEnumeration enumerate_polygonizations(const PointSet& s, std::uint64_t cap) {
    const int n = s.size();
    if (n > 10)
        throw TooLarge("enumeration limited to 10 points, got " + std::to_string(n));

    Search search(s, cap);
    search.chain.assign(static_cast<size_t>(n), 0);
    search.used.assign(static_cast<size_t>(n), 0);
    search.chain[0] = 0;
    search.used[0] = 1;
    search.dfs(1);
    search.out.explored = search.nodes;
    search.out.complete = !search.capped;
    if (search.out.complete && search.out.count == 0)
        throw Error("no simple polygonization found; input should have been rejected earlier");
    return search.out;
}

CertificationReport certify_bounds(const PointSet& s) {
    if (s.size() > 10)
        throw TooLarge("certification limited to 10 points, got " + std::to_string(s.size()));

    const auto enumer = enumerate_polygonizations(s);
    if (!enumer.complete)
        throw CertificationFailure("enumeration hit its cap; partial results cannot certify");

    const auto edgewise = polygonize_edgewise(s);
    const auto onion = polygonize_onion(s);

    CertificationReport rep;
    rep.n = s.size();
    rep.m = edgewise.hull.m();
    rep.r = edgewise.hull.r();
    rep.d = onion.peeling.depth();
    rep.count = enumer.count;
    rep.theta = enumer.theta;
    rep.rm_bound = angle_bound(rep.r, rep.m);
    rep.dm_bound = angle_bound(rep.d, rep.m);
    rep.edgewise_max = edgewise.report.max_angle;
    rep.onion_max = onion.report.max_angle;

    auto fail = [&](const std::string& what) {
        throw CertificationFailure(what + "\ninstance:\n" + describe_instance(s));
    };
    if (rep.theta > rep.rm_bound + kAngleTol) fail("theta exceeds the r*m bound");
    if (rep.theta > rep.dm_bound + kAngleTol) fail("theta exceeds the d*m bound");
    if (rep.edgewise_max < rep.theta - kAngleTol) fail("edgewise output beat the optimum");
    if (rep.onion_max < rep.theta - kAngleTol) fail("onion output beat the optimum");
    if (!edgewise.report.satisfied()) fail("edgewise output violates its r*m bound");
    if (!onion.report.satisfied()) fail("onion output violates its d*m bound");
    if (rep.d > rep.r) fail("onion depth exceeds the inner point count");
    return rep;
}

} // namespace polyangle
