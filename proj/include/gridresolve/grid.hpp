#pragma once

// Grid graph P_w x P_h with closed-form geometry.
//
// Coordinates: x grows eastward in [0, width), y grows northward in
// [0, height). The NW corner is (0, height-1).

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gridresolve {

struct Vertex {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

enum class VertexClass { Corner, Side, Interior };

/// Position of a vertex in the quadrant frame centred on an origin vertex.
enum class Region {
    Origin,
    AxisEast,
    AxisNorth,
    AxisWest,
    AxisSouth,
    QuadNE,
    QuadNW,
    QuadSW,
    QuadSE,
};

const char* to_string(VertexClass c);
const char* to_string(Region r);

bool is_axis(Region r);
bool is_quadrant(Region r);
/// NE/SW and NW/SE are opposite; every other pair of distinct quadrants is adjacent.
bool quadrants_opposite(Region a, Region b);
bool quadrants_adjacent(Region a, Region b);
/// True when half-axis `axis` is one of the two boundary rays of quadrant `quad`.
bool axis_bounds_quadrant(Region axis, Region quad);
Region opposite_quadrant(Region quad);

/// The dihedral maps of the rectangle. The last four need width == height.
enum class Symmetry {
    Identity,
    FlipHorizontal,  // x -> w-1-x
    FlipVertical,    // y -> h-1-y
    Rotate180,
    Rotate90,        // counter-clockwise
    Rotate270,
    Transpose,       // (x, y) -> (y, x)
    AntiTranspose,   // (x, y) -> (h-1-y, w-1-x)
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::Identity,  Symmetry::FlipHorizontal, Symmetry::FlipVertical, Symmetry::Rotate180,
    Symmetry::Rotate90,  Symmetry::Rotate270,      Symmetry::Transpose,    Symmetry::AntiTranspose,
};

const char* to_string(Symmetry s);

class Grid {
public:
    /// Throws InputError unless width >= 2 and height >= 2.
    Grid(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    /// min(width, height)
    int n() const noexcept { return width_ < height_ ? width_ : height_; }
    /// max(width, height)
    int m() const noexcept { return width_ < height_ ? height_ : width_; }
    int size() const noexcept { return width_ * height_; }
    bool is_square() const noexcept { return width_ == height_; }

    bool contains(const Vertex& v) const noexcept {
        return v.x >= 0 && v.x < width_ && v.y >= 0 && v.y < height_;
    }
    void require_contains(const Vertex& v) const;
    /// Characterisation results assume min(width, height) >= 3.
    void require_characterizable() const;

    /// Index in canonical (x, y) lexicographic order.
    int index(const Vertex& v) const noexcept { return v.x * height_ + v.y; }
    Vertex vertex(int index) const noexcept { return {index / height_, index % height_}; }
    std::vector<Vertex> vertices() const;

    bool on_west(const Vertex& v) const noexcept { return v.x == 0; }
    bool on_east(const Vertex& v) const noexcept { return v.x == width_ - 1; }
    bool on_south(const Vertex& v) const noexcept { return v.y == 0; }
    bool on_north(const Vertex& v) const noexcept { return v.y == height_ - 1; }
    bool on_boundary(const Vertex& v) const noexcept {
        return on_west(v) || on_east(v) || on_south(v) || on_north(v);
    }

    /// Neighbours in E, N, W, S order, skipping those outside the grid.
    std::vector<Vertex> neighbours(const Vertex& v) const;

    Grid transposed() const noexcept { return Grid(height_, width_, Unchecked{}); }

    /// Symmetries valid on this grid: 8 when square, otherwise the first 4.
    std::vector<Symmetry> symmetries() const;
    bool allows(Symmetry s) const noexcept;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    struct Unchecked {};
    Grid(int width, int height, Unchecked) noexcept : width_(width), height_(height) {}

    int width_;
    int height_;
};

std::string to_string(const Grid& g);

/// Manhattan distance; throws InputError for out-of-bounds vertices.
int dist(const Grid& g, const Vertex& a, const Vertex& b);

/// Manhattan distance without bounds checks, for inner loops.
constexpr int manhattan(const Vertex& a, const Vertex& b) noexcept {
    int dx = a.x - b.x;
    int dy = a.y - b.y;
    return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
}

VertexClass classify_vertex(const Grid& g, const Vertex& v);
Region region_of(const Grid& g, const Vertex& origin, const Vertex& v);

/// True iff w resolves u and v. Throws InputError when u == v.
bool resolves(const Grid& g, const Vertex& w, const Vertex& u, const Vertex& v);

/// Image of a single vertex. Throws InputError if the symmetry needs a square grid.
Vertex apply_symmetry(const Grid& g, Symmetry s, const Vertex& v);

/// Two vertices lie on opposite sides (W/E or S/N) of the grid.
bool on_opposite_sides(const Grid& g, const Vertex& a, const Vertex& b);
/// Opposite sides and both on the south/north pair.
bool on_opposite_horizontal_sides(const Grid& g, const Vertex& a, const Vertex& b);

}  // namespace gridresolve
