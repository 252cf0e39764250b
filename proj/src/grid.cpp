#include "gridresolve/grid.hpp"

#include "gridresolve/errors.hpp"

namespace gridresolve {

std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Corner: return "corner";
        case VertexClass::Side: return "side";
        case VertexClass::Interior: return "interior";
    }
    return "?";
}

const char* to_string(Region r) {
    switch (r) {
        case Region::Origin: return "origin";
        case Region::AxisEast: return "axis-east";
        case Region::AxisNorth: return "axis-north";
        case Region::AxisWest: return "axis-west";
        case Region::AxisSouth: return "axis-south";
        case Region::QuadNE: return "quad-ne";
        case Region::QuadNW: return "quad-nw";
        case Region::QuadSW: return "quad-sw";
        case Region::QuadSE: return "quad-se";
    }
    return "?";
}

const char* to_string(Symmetry s) {
    switch (s) {
        case Symmetry::Identity: return "identity";
        case Symmetry::FlipHorizontal: return "flip-horizontal";
        case Symmetry::FlipVertical: return "flip-vertical";
        case Symmetry::Rotate180: return "rotate-180";
        case Symmetry::Rotate90: return "rotate-90";
        case Symmetry::Rotate270: return "rotate-270";
        case Symmetry::Transpose: return "transpose";
        case Symmetry::AntiTranspose: return "anti-transpose";
    }
    return "?";
}

bool is_axis(Region r) {
    return r == Region::AxisEast || r == Region::AxisNorth || r == Region::AxisWest ||
           r == Region::AxisSouth;
}

bool is_quadrant(Region r) {
    return r == Region::QuadNE || r == Region::QuadNW || r == Region::QuadSW || r == Region::QuadSE;
}

Region opposite_quadrant(Region quad) {
    switch (quad) {
        case Region::QuadNE: return Region::QuadSW;
        case Region::QuadSW: return Region::QuadNE;
        case Region::QuadNW: return Region::QuadSE;
        case Region::QuadSE: return Region::QuadNW;
        default: throw InputError("opposite_quadrant: not a quadrant");
    }
}

bool quadrants_opposite(Region a, Region b) {
    return is_quadrant(a) && is_quadrant(b) && opposite_quadrant(a) == b;
}

bool quadrants_adjacent(Region a, Region b) {
    return is_quadrant(a) && is_quadrant(b) && a != b && !quadrants_opposite(a, b);
}

bool axis_bounds_quadrant(Region axis, Region quad) {
    switch (quad) {
        case Region::QuadNE: return axis == Region::AxisNorth || axis == Region::AxisEast;
        case Region::QuadNW: return axis == Region::AxisNorth || axis == Region::AxisWest;
        case Region::QuadSW: return axis == Region::AxisSouth || axis == Region::AxisWest;
        case Region::QuadSE: return axis == Region::AxisSouth || axis == Region::AxisEast;
        default: return false;
    }
}

Grid::Grid(int width, int height) : width_(width), height_(height) {
    if (width < 2 || height < 2) {
        throw InputError("grid dimensions must be at least 2x2, got " + std::to_string(width) + "x" +
                         std::to_string(height));
    }
}

void Grid::require_contains(const Vertex& v) const {
    if (!contains(v)) {
        throw InputError("vertex " + to_string(v) + " outside " + gridresolve::to_string(*this) + " grid");
    }
}

void Grid::require_characterizable() const {
    if (n() < 3) {
        throw InputError("characterisation requires min(width, height) >= 3, got " +
                         gridresolve::to_string(*this));
    }
}

std::vector<Vertex> Grid::vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int x = 0; x < width_; ++x) {
        for (int y = 0; y < height_; ++y) out.push_back({x, y});
    }
    return out;
}

std::vector<Vertex> Grid::neighbours(const Vertex& v) const {
    std::vector<Vertex> out;
    out.reserve(4);
    const Vertex candidates[4] = {{v.x + 1, v.y}, {v.x, v.y + 1}, {v.x - 1, v.y}, {v.x, v.y - 1}};
    for (const auto& c : candidates) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

bool Grid::allows(Symmetry s) const noexcept {
    switch (s) {
        case Symmetry::Identity:
        case Symmetry::FlipHorizontal:
        case Symmetry::FlipVertical:
        case Symmetry::Rotate180: return true;
        default: return is_square();
    }
}

std::vector<Symmetry> Grid::symmetries() const {
    std::vector<Symmetry> out;
    for (auto s : kAllSymmetries) {
        if (allows(s)) out.push_back(s);
    }
    return out;
}

std::string to_string(const Grid& g) {
    return std::to_string(g.width()) + "x" + std::to_string(g.height());
}

int dist(const Grid& g, const Vertex& a, const Vertex& b) {
    g.require_contains(a);
    g.require_contains(b);
    return manhattan(a, b);
}

VertexClass classify_vertex(const Grid& g, const Vertex& v) {
    g.require_contains(v);
    const int extremal = static_cast<int>(g.on_west(v) || g.on_east(v)) +
                         static_cast<int>(g.on_south(v) || g.on_north(v));
    if (extremal == 2) return VertexClass::Corner;
    if (extremal == 1) return VertexClass::Side;
    return VertexClass::Interior;
}

Region region_of(const Grid& g, const Vertex& origin, const Vertex& v) {
    g.require_contains(origin);
    g.require_contains(v);
    const int sx = (v.x > origin.x) - (v.x < origin.x);
    const int sy = (v.y > origin.y) - (v.y < origin.y);
    if (sx == 0 && sy == 0) return Region::Origin;
    if (sy == 0) return sx > 0 ? Region::AxisEast : Region::AxisWest;
    if (sx == 0) return sy > 0 ? Region::AxisNorth : Region::AxisSouth;
    if (sx > 0) return sy > 0 ? Region::QuadNE : Region::QuadSE;
    return sy > 0 ? Region::QuadNW : Region::QuadSW;
}

bool resolves(const Grid& g, const Vertex& w, const Vertex& u, const Vertex& v) {
    g.require_contains(w);
    g.require_contains(u);
    g.require_contains(v);
    if (u == v) throw InputError("resolves: u and v must differ, both are " + to_string(u));
    return manhattan(w, u) != manhattan(w, v);
}

Vertex apply_symmetry(const Grid& g, Symmetry s, const Vertex& v) {
    if (!g.allows(s)) {
        throw InputError(std::string("symmetry ") + to_string(s) + " needs a square grid, got " +
                         to_string(g));
    }
    g.require_contains(v);
    const int w = g.width() - 1;
    const int h = g.height() - 1;
    switch (s) {
        case Symmetry::Identity: return v;
        case Symmetry::FlipHorizontal: return {w - v.x, v.y};
        case Symmetry::FlipVertical: return {v.x, h - v.y};
        case Symmetry::Rotate180: return {w - v.x, h - v.y};
        case Symmetry::Rotate90: return {h - v.y, v.x};
        case Symmetry::Rotate270: return {v.y, w - v.x};
        case Symmetry::Transpose: return {v.y, v.x};
        case Symmetry::AntiTranspose: return {h - v.y, w - v.x};
    }
    return v;
}

bool on_opposite_horizontal_sides(const Grid& g, const Vertex& a, const Vertex& b) {
    return (g.on_south(a) && g.on_north(b)) || (g.on_north(a) && g.on_south(b));
}

bool on_opposite_sides(const Grid& g, const Vertex& a, const Vertex& b) {
    return on_opposite_horizontal_sides(g, a, b) || (g.on_west(a) && g.on_east(b)) ||
           (g.on_east(a) && g.on_west(b));
}

}  // namespace gridresolve
