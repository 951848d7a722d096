#pragma once

// Lebedev quadrature grids on the unit sphere.  The node/weight tables live
// in lebedev_data.hpp (see scripts/gen_lebedev_tables.py and
// docs/quadrature.md for provenance and verification).

#include <memory>
#include <vector>

#include "emgest/core.hpp"
#include "emgest/lebedev_data.hpp"

namespace emgest {

struct SphereGrid {
    int point_count = 0;  // 6, 26, 110 or 590
    int degree = 0;       // algebraic degree of exactness
    std::vector<Vec3> nodes;
    std::vector<double> weights;

    size_t size() const { return nodes.size(); }
};

inline std::vector<int> lebedev_point_counts() { return {6, 26, 110, 590}; }

// Returns the shared grid instance for a supported point count.  Grids are
// immutable and cached, so pointer equality identifies a grid.
inline std::shared_ptr<const SphereGrid> lebedev_grid(int point_count) {
    auto make = [](int count, int degree, const detail::LebedevNode* tab) {
        auto g = std::make_shared<SphereGrid>();
        g->point_count = count;
        g->degree = degree;
        g->nodes.reserve(count);
        g->weights.reserve(count);
        for (int i = 0; i < count; ++i) {
            g->nodes.push_back({tab[i].x, tab[i].y, tab[i].z});
            g->weights.push_back(tab[i].w);
        }
        return g;
    };
    static const std::shared_ptr<const SphereGrid> g6 = make(6, 3, detail::kLebedev6);
    static const std::shared_ptr<const SphereGrid> g26 = make(26, 7, detail::kLebedev26);
    static const std::shared_ptr<const SphereGrid> g110 = make(110, 17, detail::kLebedev110);
    static const std::shared_ptr<const SphereGrid> g590 = make(590, 41, detail::kLebedev590);
    switch (point_count) {
        case 6: return g6;
        case 26: return g26;
        case 110: return g110;
        case 590: return g590;
        default:
            throw std::out_of_range("lebedev_grid: unsupported point count " +
                                    std::to_string(point_count) +
                                    " (supported: 6, 26, 110, 590)");
    }
}

}  // namespace emgest
