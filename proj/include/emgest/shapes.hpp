#pragma once

// Gesture domains: unions of axis-aligned unit cubes on an integer lattice,
// centered at their centroid, plus voxelization into a refractive-index
// contrast field.  See docs/shapes.md for the preset catalogue and the
// on-disk schema.

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "emgest/core.hpp"

namespace emgest {

using Anchor = std::array<int, 3>;

// A union of cubes [a, a+1]^3 * size over anchors a, shifted so the centroid
// of the union sits at the origin.
struct ShapeSpec {
    std::string id;
    std::vector<Anchor> anchors;
    double size = 1.0;
    Vec3 shift;  // applied to lattice coordinates: world = (lattice - shift_raw) * size

    size_t cube_count() const { return anchors.size(); }
    double volume() const { return double(anchors.size()) * size * size * size; }

    // Cube corners in centered world coordinates.
    std::vector<Vec3> corners() const {
        std::vector<Vec3> out;
        out.reserve(anchors.size() * 8);
        for (const Anchor& a : anchors)
            for (int c = 0; c < 8; ++c)
                out.push_back(lattice_to_world({a[0] + (c & 1 ? 1.0 : 0.0),
                                                a[1] + (c & 2 ? 1.0 : 0.0),
                                                a[2] + (c & 4 ? 1.0 : 0.0)}));
        return out;
    }

    Vec3 lattice_to_world(const Vec3& lattice) const { return (lattice + shift) * size; }

    double diameter() const {
        const auto pts = corners();
        double d = 0.0;
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, norm(pts[i] - pts[j]));
        return d;
    }

    double max_radius() const {
        double r = 0.0;
        for (const Vec3& p : corners()) r = std::max(r, norm(p));
        return r;
    }

    // Closed-set membership test in centered world coordinates.
    bool contains(const Vec3& x) const {
        const Vec3 l = x / size - shift;
        for (const Anchor& a : anchors)
            if (l.x >= a[0] && l.x <= a[0] + 1 && l.y >= a[1] && l.y <= a[1] + 1 &&
                l.z >= a[2] && l.z <= a[2] + 1)
                return true;
        return false;
    }

    // Euclidean distance from x to the union (0 inside).
    double distance(const Vec3& x) const {
        const Vec3 l = x / size - shift;
        double best = std::numeric_limits<double>::max();
        for (const Anchor& a : anchors) {
            const double dx = std::max({a[0] - l.x, 0.0, l.x - (a[0] + 1)});
            const double dy = std::max({a[1] - l.y, 0.0, l.y - (a[1] + 1)});
            const double dz = std::max({a[2] - l.z, 0.0, l.z - (a[2] + 1)});
            best = std::min(best, std::sqrt(dx * dx + dy * dy + dz * dz));
        }
        return best * size;
    }
};

namespace detail {

inline void check_connectivity_and_voids(const std::vector<Anchor>& anchors,
                                         const std::string& id) {
    std::set<Anchor> cubes(anchors.begin(), anchors.end());
    if (cubes.size() != anchors.size())
        throw std::invalid_argument("shape '" + id + "': duplicate cube anchors");

    // face connectivity (edge/corner contact does not count)
    const std::array<Anchor, 6> steps = {
        Anchor{1, 0, 0}, Anchor{-1, 0, 0}, Anchor{0, 1, 0},
        Anchor{0, -1, 0}, Anchor{0, 0, 1}, Anchor{0, 0, -1}};
    std::set<Anchor> seen;
    std::queue<Anchor> todo;
    todo.push(anchors[0]);
    seen.insert(anchors[0]);
    while (!todo.empty()) {
        const Anchor c = todo.front();
        todo.pop();
        for (const Anchor& s : steps) {
            const Anchor n{c[0] + s[0], c[1] + s[1], c[2] + s[2]};
            if (cubes.count(n) && !seen.count(n)) {
                seen.insert(n);
                todo.push(n);
            }
        }
    }
    if (seen.size() != cubes.size())
        throw std::invalid_argument("shape '" + id +
                                    "': cubes must form one face-connected component");

    // no enclosed voids: flood-fill the complement from outside the bounding
    // box; any unreachable complement cell is an interior cavity
    Anchor lo = anchors[0], hi = anchors[0];
    for (const Anchor& a : anchors)
        for (int c = 0; c < 3; ++c) {
            lo[c] = std::min(lo[c], a[c]);
            hi[c] = std::max(hi[c], a[c]);
        }
    for (int c = 0; c < 3; ++c) {
        lo[c] -= 1;
        hi[c] += 1;
    }
    std::set<Anchor> outside;
    todo.push(lo);
    outside.insert(lo);
    while (!todo.empty()) {
        const Anchor c = todo.front();
        todo.pop();
        for (const Anchor& s : steps) {
            const Anchor n{c[0] + s[0], c[1] + s[1], c[2] + s[2]};
            bool in_box = true;
            for (int ax = 0; ax < 3; ++ax)
                if (n[ax] < lo[ax] || n[ax] > hi[ax]) in_box = false;
            if (in_box && !cubes.count(n) && !outside.count(n)) {
                outside.insert(n);
                todo.push(n);
            }
        }
    }
    long long box = 1;
    for (int c = 0; c < 3; ++c) box *= (hi[c] - lo[c] + 1);
    if (static_cast<long long>(outside.size() + cubes.size()) != box)
        throw std::invalid_argument("shape '" + id + "': union encloses an interior void");
}

}  // namespace detail

inline ShapeSpec build_shape(const std::string& id, std::vector<Anchor> anchors,
                             double size = 1.0) {
    if (id.empty()) throw std::invalid_argument("shape id must be non-empty");
    if (anchors.empty()) throw std::invalid_argument("shape '" + id + "': no cubes");
    if (anchors.size() > 4096) throw std::invalid_argument("shape '" + id + "': too many cubes");
    if (!(size > 0.0)) throw std::invalid_argument("shape '" + id + "': size must be positive");

    detail::check_connectivity_and_voids(anchors, id);

    ShapeSpec s;
    s.id = id;
    s.anchors = std::move(anchors);
    s.size = size;
    Vec3 centroid{0, 0, 0};
    for (const Anchor& a : s.anchors) centroid = centroid + Vec3{a[0] + 0.5, a[1] + 0.5, a[2] + 0.5};
    s.shift = -(centroid / double(s.anchors.size()));

    if (!s.contains({0, 0, 0}))
        throw std::invalid_argument("shape '" + id +
                                    "': centered union does not contain the origin; "
                                    "rearrange cubes so the centroid lies inside the union");
    return s;
}

// ---------------------------------------------------------------------------
// Preset catalogue: six cube-union gestures of four to eight cubes.
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& preset_shape_ids() {
    static const std::vector<std::string> ids = {"D1", "D2", "D3", "D4", "D5", "D6"};
    return ids;
}

inline ShapeSpec preset_shape(const std::string& id) {
    static const std::map<std::string, std::vector<Anchor>> layouts = {
        // slab facing the x1 axis (2x2 in the x2x3-plane)
        {"D1", {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}}},
        // rod along x3
        {"D2", {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 0, 4}}},
        // S-bend in the x2x3-plane
        {"D3", {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 2, 1}, {0, 2, 2}}},
        // T with an out-of-plane bump
        {"D4", {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 1, 1}}},
        // ascending staircase
        {"D5", {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 1, 0}, {2, 1, 1}, {2, 2, 1}, {3, 2, 1}}},
        // plus sign with a spine along x3
        {"D6",
         {{1, 1, 0}, {0, 1, 0}, {2, 1, 0}, {1, 0, 0}, {1, 2, 0}, {1, 1, 1}, {1, 1, 2}, {1, 1, -1}}},
    };
    const auto it = layouts.find(id);
    if (it == layouts.end())
        throw std::out_of_range("unknown preset shape '" + id + "' (presets: D1..D6)");
    return build_shape(id, it->second);
}

// Loads user shapes from a JSON file; see docs/shapes.md for the schema.
inline std::vector<ShapeSpec> load_shapes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IntegrityError("cannot open shape file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IntegrityError("shape file " + path + ": " + e.what());
    }
    if (!j.contains("shapes") || !j["shapes"].is_array())
        throw IntegrityError("shape file " + path + ": missing top-level 'shapes' array");
    std::vector<ShapeSpec> out;
    for (const auto& js : j["shapes"]) {
        const std::string id = js.at("id").get<std::string>();
        std::vector<Anchor> anchors;
        for (const auto& a : js.at("cubes")) {
            if (!a.is_array() || a.size() != 3)
                throw IntegrityError("shape '" + id + "': cube anchors must be integer triples");
            anchors.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<int>()});
        }
        out.push_back(build_shape(id, std::move(anchors), js.value("size", 1.0)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Placement and voxelization
// ---------------------------------------------------------------------------

struct PlacedShape {
    ShapeSpec shape;
    Vec3 z;  // translation: world domain = shape + z
};

// Voxel contrast sampled on an axis-aligned lattice aligned with the cube
// faces.  n holds the refraction coefficient per voxel (1 outside), m = 1 - n.
struct ContrastField {
    std::string shape_id;
    Vec3 origin;                  // world position of the low corner of voxel (0,0,0)
    double cell = 0.0;            // voxel edge length
    std::array<int, 3> dims{};    // voxels per axis
    Complex n_inside{1.0, 0.0};
    double rho = 0.0;             // boundary smoothing width
    int resolution = 0;           // voxels per unit cube edge
    std::vector<Complex> n;       // size dims[0]*dims[1]*dims[2]
    std::vector<Complex> m;       // 1 - n

    size_t index(int i, int j, int l) const {
        return (size_t(l) * dims[1] + j) * dims[0] + i;
    }
    size_t voxel_count() const { return n.size(); }
    Vec3 center(int i, int j, int l) const {
        return origin + Vec3{(i + 0.5) * cell, (j + 0.5) * cell, (l + 0.5) * cell};
    }
    double support_volume() const {
        size_t cnt = 0;
        for (const Complex& mv : m)
            if (mv != Complex{}) ++cnt;
        return double(cnt) * cell * cell * cell;
    }
};

// Rasterizes a centered shape.  With rho = 0 the voxel lattice aligns exactly
// with the cube faces, so interior voxels carry exactly n_inside and voxels
// outside the union exactly 1.  With rho > 0 the index blends linearly from
// n_inside at the boundary to 1 at distance rho outside, and the lattice is
// padded so the blend reaches 1 inside the box.
inline ContrastField rasterize(const ShapeSpec& shape, Complex n_inside, int resolution,
                               double rho = 0.0) {
    if (resolution < 2) throw std::invalid_argument("rasterize: resolution must be >= 2");
    if (!(n_inside.real() > 0.0))
        throw std::invalid_argument("rasterize: Re(n) must be positive");
    if (n_inside.imag() < 0.0)
        throw std::invalid_argument("rasterize: Im(n) must be non-negative (passive medium)");
    if (rho < 0.0 || !std::isfinite(rho)) throw std::invalid_argument("rasterize: bad rho");

    ContrastField f;
    f.shape_id = shape.id;
    f.cell = shape.size / double(resolution);
    f.n_inside = n_inside;
    f.rho = rho;
    f.resolution = resolution;

    // lattice bounds of the anchors
    Anchor lo = shape.anchors[0], hi = shape.anchors[0];
    for (const Anchor& a : shape.anchors)
        for (int c = 0; c < 3; ++c) {
            lo[c] = std::min(lo[c], a[c]);
            hi[c] = std::max(hi[c], a[c] + 1);
        }
    const int pad = rho > 0.0 ? int(std::ceil(rho / f.cell)) + 1 : 0;
    for (int c = 0; c < 3; ++c) f.dims[c] = (hi[c] - lo[c]) * resolution + 2 * pad;
    f.origin = shape.lattice_to_world({double(lo[0]), double(lo[1]), double(lo[2])}) -
               Vec3{pad * f.cell, pad * f.cell, pad * f.cell};

    f.n.resize(size_t(f.dims[0]) * f.dims[1] * f.dims[2]);
    f.m.resize(f.n.size());
    for (int l = 0; l < f.dims[2]; ++l)
        for (int j = 0; j < f.dims[1]; ++j)
            for (int i = 0; i < f.dims[0]; ++i) {
                const Vec3 c = f.center(i, j, l);
                Complex nv{1.0, 0.0};
                if (rho == 0.0) {
                    if (shape.contains(c)) nv = n_inside;
                } else {
                    const double d = shape.distance(c);
                    if (d < rho) nv = n_inside + (Complex{1.0, 0.0} - n_inside) * (d / rho);
                }
                const size_t idx = f.index(i, j, l);
                f.n[idx] = nv;
                f.m[idx] = Complex{1.0, 0.0} - nv;
            }
    return f;
}

}  // namespace emgest
