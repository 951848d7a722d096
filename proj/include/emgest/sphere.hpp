#pragma once

// Tangential vector fields sampled on a sphere grid, the weighted L^2 inner
// product, polar-cap aperture masks, and the degree-1 vector spherical
// harmonic basis used by the location stage.

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "emgest/lebedev.hpp"

namespace emgest {

struct TangentialFieldOnSphere {
    std::shared_ptr<const SphereGrid> grid;
    double k = 0.0;  // wavenumber the samples belong to (0 = not tied to one)
    std::vector<CVec3> samples;

    size_t size() const { return samples.size(); }

    void validate() const {
        if (!grid) throw std::invalid_argument("field has no grid");
        if (samples.size() != grid->size())
            throw std::invalid_argument("field sample count does not match grid");
    }
};

inline bool same_grid(const SphereGrid& a, const SphereGrid& b) {
    if (&a == &b) return true;
    return a.point_count == b.point_count && a.nodes == b.nodes;
}

inline void require_same_grid(const TangentialFieldOnSphere& f, const TangentialFieldOnSphere& g) {
    f.validate();
    g.validate();
    if (!same_grid(*f.grid, *g.grid))
        throw std::invalid_argument("fields are sampled on different sphere grids");
}

// Node mask for a partial aperture.  Realized as a polar cap: keep nodes with
// node . axis >= cos(half_angle).
struct ApertureMask {
    std::shared_ptr<const SphereGrid> grid;
    std::vector<std::uint8_t> keep;

    static ApertureMask polar_cap(std::shared_ptr<const SphereGrid> grid, const Vec3& axis,
                                  double half_angle) {
        if (!grid) throw std::invalid_argument("polar_cap: null grid");
        if (!(half_angle > 0.0)) throw std::invalid_argument("polar_cap: angle must be positive");
        const Vec3 a = normalized(axis);
        const double c = std::cos(half_angle);
        ApertureMask m;
        m.grid = grid;
        m.keep.resize(grid->size());
        size_t count = 0;
        for (size_t i = 0; i < grid->size(); ++i) {
            m.keep[i] = dot(grid->nodes[i], a) >= c ? 1 : 0;
            count += m.keep[i];
        }
        if (count == 0) throw std::invalid_argument("polar_cap: aperture keeps no grid nodes");
        return m;
    }

    size_t active_count() const {
        size_t n = 0;
        for (auto v : keep) n += v;
        return n;
    }
};

// Weighted T^2 inner product sum_i w_i f_i . conj(g_i), optionally restricted
// to a node mask.
inline Complex inner_product(const TangentialFieldOnSphere& f, const TangentialFieldOnSphere& g,
                             const ApertureMask* mask = nullptr) {
    require_same_grid(f, g);
    if (mask) {
        if (!same_grid(*mask->grid, *f.grid))
            throw std::invalid_argument("aperture mask grid does not match field grid");
        if (mask->keep.size() != f.size())
            throw std::invalid_argument("aperture mask size does not match grid");
    }
    Complex s{};
    for (size_t i = 0; i < f.size(); ++i) {
        if (mask && !mask->keep[i]) continue;
        s += f.grid->weights[i] * hdot(f.samples[i], g.samples[i]);
    }
    return s;
}

inline double field_norm(const TangentialFieldOnSphere& f, const ApertureMask* mask = nullptr) {
    return std::sqrt(std::max(0.0, inner_product(f, f, mask).real()));
}

// Largest radial component |x^ . f| over the nodes, for tangency checks.
inline double max_radial_component(const TangentialFieldOnSphere& f) {
    f.validate();
    double worst = 0.0;
    for (size_t i = 0; i < f.size(); ++i)
        worst = std::max(worst, std::abs(dot(f.grid->nodes[i], f.samples[i])));
    return worst;
}

// ---------------------------------------------------------------------------
// Degree-1 vector spherical harmonics
// ---------------------------------------------------------------------------
//
// With the orthonormal (Condon-Shortley) degree-1 harmonics Y_1^m written as
// Y_1^m(x^) = v_m . x^ for constant complex vectors v_m, the two tangential
// families are
//     U_m ~ Grad Y_1^m       = v_m - (x^ . v_m) x^
//     V_m ~ x^ x Grad Y_1^m  = x^ x v_m.
// Each field is scaled to unit norm in the discrete inner product of its
// grid, which also makes the six fields exactly orthonormal there (the Gram
// integrands are polynomials of degree <= 2, integrated exactly by every
// shipped rule).

struct VSHBasis {
    std::shared_ptr<const SphereGrid> grid;
    // Order: U_{-1}, U_0, U_{+1}, V_{-1}, V_0, V_{+1}.
    std::array<TangentialFieldOnSphere, 6> fields;
};

inline VSHBasis vsh_basis(std::shared_ptr<const SphereGrid> grid) {
    if (!grid) throw std::invalid_argument("vsh_basis: null grid");
    const double c0 = std::sqrt(3.0 / (4.0 * kPi));
    const double c1 = std::sqrt(3.0 / (8.0 * kPi));
    // v_m with Y_1^m = v_m . x^:  m = -1, 0, +1.
    const std::array<CVec3, 3> v = {
        CVec3{Complex(c1, 0.0), Complex(0.0, -c1), 0.0},
        CVec3{0.0, 0.0, Complex(c0, 0.0)},
        CVec3{Complex(-c1, 0.0), Complex(0.0, -c1), 0.0},
    };

    VSHBasis basis;
    basis.grid = grid;
    for (int j = 0; j < 6; ++j) {
        const CVec3& vm = v[j % 3];
        TangentialFieldOnSphere f;
        f.grid = grid;
        f.samples.resize(grid->size());
        for (size_t i = 0; i < grid->size(); ++i) {
            const Vec3& n = grid->nodes[i];
            if (j < 3) {
                const Complex radial = dot(n, vm);
                f.samples[i] = vm - CVec3(n) * radial;
            } else {
                f.samples[i] = cross(n, vm);
            }
        }
        const double nrm = field_norm(f);
        for (auto& s : f.samples) s = s * (1.0 / nrm);
        basis.fields[j] = std::move(f);
    }
    return basis;
}

}  // namespace emgest
