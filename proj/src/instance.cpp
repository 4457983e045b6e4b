#include "polyangle/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace polyangle {

namespace {

constexpr double kPi = std::numbers::pi;

// 53 random bits into [0, 1); keeps generation independent of the standard
// library's distribution implementations.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Point sample_box(std::mt19937_64& rng, const BoundingBox& box) {
    const double x = box.xmin + unit_double(rng) * (box.xmax - box.xmin);
    const double y = box.ymin + unit_double(rng) * (box.ymax - box.ymin);
    return {x, y};
}

std::vector<Point> regular_ring(int k, const BoundingBox& box) {
    const double cx = 0.5 * (box.xmin + box.xmax);
    const double cy = 0.5 * (box.ymin + box.ymax);
    const double radius = 0.45 * std::min(box.xmax - box.xmin, box.ymax - box.ymin);
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(k);
        pts.push_back({cx + radius * std::cos(a), cy + radius * std::sin(a)});
    }
    return pts;
}

bool strictly_inside_ring(const std::vector<Point>& ring, const Point& p) {
    const int k = static_cast<int>(ring.size());
    for (int j = 0; j < k; ++j)
        if (orientation(ring[static_cast<size_t>(j)], ring[static_cast<size_t>((j + 1) % k)], p) !=
            Orient::Left)
            return false;
    return true;
}

} // namespace

PointSet generate(const InstanceSpec& spec) {
    if (spec.n < 3) throw DegenerateInput("generator needs n >= 3, got " + std::to_string(spec.n));
    if (spec.box.xmax <= spec.box.xmin || spec.box.ymax <= spec.box.ymin)
        throw ParseError("generator bounding box is empty");

    std::mt19937_64 rng(spec.seed);
    std::vector<Point> pts;
    std::set<std::pair<double, double>> seen;
    auto push_unique = [&](const Point& p) {
        if (!seen.insert({p.x, p.y}).second) return false;
        pts.push_back(p);
        return true;
    };

    switch (spec.shape) {
        case Shape::RandomUniform: {
            while (static_cast<int>(pts.size()) < spec.n) push_unique(sample_box(rng, spec.box));
            break;
        }
        case Shape::RegularPlusCenter: {
            const int k = spec.n - 1;
            if (k < 3)
                throw DegenerateInput("regular-center needs n >= 4, got " + std::to_string(spec.n));
            for (const Point& p : regular_ring(k, spec.box)) push_unique(p);
            push_unique({0.5 * (spec.box.xmin + spec.box.xmax), 0.5 * (spec.box.ymin + spec.box.ymax)});
            break;
        }
        case Shape::RegularPlusRandomInterior: {
            const int k = spec.hull_k > 0 ? spec.hull_k : std::max(3, spec.n / 2);
            if (k < 3 || k > spec.n)
                throw DegenerateInput("regular-random needs 3 <= hull corners <= n");
            const auto ring = regular_ring(k, spec.box);
            for (const Point& p : ring) push_unique(p);
            while (static_cast<int>(pts.size()) < spec.n) {
                const Point p = sample_box(rng, spec.box);
                if (strictly_inside_ring(ring, p)) push_unique(p);
            }
            break;
        }
    }
    return make_point_set(std::move(pts));
}

namespace {

bool parse_double(const std::string& tok, double& out) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

PointSet parse_points_csv(const std::string& text) {
    std::vector<Point> pts;
    std::map<std::pair<double, double>, int> first_line;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t comma = t.find(',');
        if (comma == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected \"x,y\"");
        double x = 0.0, y = 0.0;
        if (!parse_double(trim(t.substr(0, comma)), x) || !parse_double(trim(t.substr(comma + 1)), y))
            throw ParseError("line " + std::to_string(lineno) + ": malformed coordinate");
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError("line " + std::to_string(lineno) + ": non-finite coordinate");
        const auto [it, fresh] = first_line.insert({{x, y}, lineno});
        if (!fresh)
            throw DuplicatePoint("line " + std::to_string(lineno) + " duplicates line " +
                                 std::to_string(it->second));
        pts.push_back({x, y});
    }
    return make_point_set(std::move(pts));
}

PointSet parse_points_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("expected a JSON array of [x, y] pairs");
    std::vector<Point> pts;
    for (size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw ParseError("element " + std::to_string(i) + " is not an [x, y] pair");
        pts.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return make_point_set(std::move(pts));
}

PointSet read_points(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return json ? parse_points_json(buf.str()) : parse_points_csv(buf.str());
}

std::string to_csv(const PointSet& s) {
    std::string out;
    char buf[80];
    for (int i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", s[i].x, s[i].y);
        out += buf;
    }
    return out;
}

std::string to_json_points(const PointSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < s.size(); ++i) arr.push_back({s[i].x, s[i].y});
    return arr.dump();
}

void write_points(const PointSet& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    out << (json ? to_json_points(s) : to_csv(s));
}

} // namespace polyangle
