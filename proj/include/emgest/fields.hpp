#pragma once

// Closed-form incident fields: outgoing point-source kernel, electric dipole,
// and plane wave.  Everything here satisfies curl E = ikH, curl H = -ikE away
// from the source for the exp(-i*omega*t) convention.

#include <vector>

#include "emgest/core.hpp"

namespace emgest {

// e^{ik|x-y|} / (4*pi*|x-y|).  Rejects (near-)coincident points instead of
// returning overflow garbage.
inline Complex fundamental_solution(double k, const Vec3& x, const Vec3& y) {
    const double r = norm(x - y);
    const double scale = std::max(1.0, norm(y));
    if (r < 1e-12 * scale)
        throw std::invalid_argument("fundamental_solution: evaluation point coincides with source");
    return std::exp(kImag * (k * r)) / (4.0 * kPi * r);
}

// grad_x of the kernel: (ik - 1/r) * Phi * rhat.
inline CVec3 grad_fundamental_solution(double k, const Vec3& x, const Vec3& y) {
    const double r = norm(x - y);
    const double scale = std::max(1.0, norm(y));
    if (r < 1e-12 * scale)
        throw std::invalid_argument("grad_fundamental_solution: evaluation point coincides with source");
    const Complex phi = std::exp(kImag * (k * r)) / (4.0 * kPi * r);
    const Vec3 rhat = (x - y) / r;
    return CVec3(rhat) * (phi * (kImag * k - 1.0 / r));
}

struct EHField {
    CVec3 E, H;
};

// Electric dipole at y with moment p:
//   E = (i/k) curl curl [p Phi_k],   H = curl [p Phi_k].
// Expanded in closed form using curl curl (p Phi) = grad(grad Phi . p) + k^2 Phi p
// away from the source:
//   E = (i/k) Phi [ (k^2 + ik/r - 1/r^2) p + (-k^2 - 3ik/r + 3/r^2) (rhat.p) rhat ]
//   H = (ik - 1/r) Phi rhat x p
inline EHField dipole_field(double k, const Vec3& y, const Vec3& p, const Vec3& x) {
    const double r = norm(x - y);
    const double scale = std::max(1.0, norm(y));
    if (r < 1e-12 * scale)
        throw std::invalid_argument("dipole_field: evaluation point coincides with source");
    const Vec3 rhat = (x - y) / r;
    const Complex phi = std::exp(kImag * (k * r)) / (4.0 * kPi * r);
    const Complex ik_r = kImag * k / r;
    const Complex inv_r2 = Complex(1.0 / (r * r), 0.0);
    const Complex cp = k * k + ik_r - inv_r2;
    const Complex cr = -k * k - 3.0 * ik_r + 3.0 * inv_r2;
    const double a = dot(rhat, p);
    EHField f;
    f.E = (kImag / k * phi) * (CVec3(p) * cp + CVec3(rhat) * (cr * a));
    f.H = (phi * (kImag * k - 1.0 / r)) * CVec3(cross(rhat, p));
    return f;
}

// Plane wave with unit propagation direction d and polarization p:
//   E = ik (d x p) x d e^{ik x.d},   H = ik d x p e^{ik x.d}.
// p need not be orthogonal to d; only its transverse part radiates.
inline EHField plane_wave(double k, const Vec3& d, const Vec3& p, const Vec3& x) {
    if (std::abs(norm(d) - 1.0) > 1e-12)
        throw std::invalid_argument("plane_wave: direction must be a unit vector");
    const Complex phase = std::exp(kImag * (k * dot(d, x)));
    const Vec3 p_perp = p - d * dot(d, p);  // (d x p) x d
    EHField f;
    f.E = (kImag * k * phase) * CVec3(p_perp);
    f.H = (kImag * k * phase) * CVec3(cross(d, p));
    return f;
}

// One or more point dipoles sharing a polarization (several emitters of the
// same device).  The incident field is the sum of the individual fields.
struct SourceConfig {
    std::vector<Vec3> positions{Vec3{0.0, 0.0, 0.0}};
    Vec3 polarization{0.0, 0.0, 1.0};

    void validate() const {
        if (positions.empty()) throw std::invalid_argument("SourceConfig: no source positions");
        if (norm(polarization) == 0.0)
            throw std::invalid_argument("SourceConfig: zero polarization");
    }
};

inline CVec3 incident_field(double k, const SourceConfig& src, const Vec3& x) {
    CVec3 sum;
    for (const Vec3& y : src.positions) sum += dipole_field(k, y, src.polarization, x).E;
    return sum;
}

}  // namespace emgest
