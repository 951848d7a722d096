#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "emgest/fields.hpp"
#include "oracles.hpp"

using namespace emgest;

namespace {

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vec3 v{g(rng), g(rng), g(rng)};
    while (norm(v) < 1e-3) v = {g(rng), g(rng), g(rng)};
    return normalized(v);
}

Vec3 random_in_box(std::mt19937_64& rng, double half) {
    std::uniform_real_distribution<double> u(-half, half);
    return {u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_CASE("fundamental solution basics", "[fields]") {
    const Vec3 y{0.2, -0.1, 0.4};
    const Vec3 x{1.2, 0.9, -0.4};
    const double r = norm(x - y);
    const double k = 1.7;

    const Complex phi = fundamental_solution(k, x, y);
    CHECK(std::abs(std::abs(phi) - 1.0 / (4.0 * kPi * r)) < 1e-14);
    CHECK(std::abs(std::arg(phi) - std::remainder(k * r, 2.0 * kPi)) < 1e-12);

    // symmetric in x <-> y
    CHECK(std::abs(phi - fundamental_solution(k, y, x)) < 1e-16);

    // coincidence rejected
    CHECK_THROWS_AS(fundamental_solution(k, y, y), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_solution(k, y + Vec3{1e-14, 0, 0}, y), std::invalid_argument);
}

TEST_CASE("gradient of fundamental solution matches finite differences", "[fields]") {
    std::mt19937_64 rng(11);
    const double k = 2.3;
    const Vec3 y{0.1, 0.2, -0.3};
    for (int t = 0; t < 20; ++t) {
        Vec3 x = y + random_unit(rng) * (1.0 + 2.0 * t / 20.0);
        const CVec3 g = grad_fundamental_solution(k, x, y);
        for (int axis = 0; axis < 3; ++axis) {
            Vec3 e{axis == 0 ? 1.0 : 0.0, axis == 1 ? 1.0 : 0.0, axis == 2 ? 1.0 : 0.0};
            const double h = 1e-5;
            const Complex fd =
                (fundamental_solution(k, x + e * h, y) - fundamental_solution(k, x - e * h, y)) /
                (2.0 * h);
            CHECK(std::abs(g[axis] - fd) < 1e-7 * std::abs(fd) + 1e-12);
        }
    }
}

TEST_CASE("dipole field satisfies the Maxwell pair away from the source", "[fields]") {
    std::mt19937_64 rng(42);
    const double k = 1.7;
    const Vec3 y{0.0, 0.0, 0.0};
    const Vec3 p{0.3, -0.2, 0.9};
    const double h = 1e-4;

    auto Efield = [&](const Vec3& x) { return dipole_field(k, y, p, x).E; };
    auto Hfield = [&](const Vec3& x) { return dipole_field(k, y, p, x).H; };

    for (int t = 0; t < 50; ++t) {
        const Vec3 x = random_unit(rng) * (1.0 + 2.0 * std::generate_canonical<double, 53>(rng));
        const EHField f = dipole_field(k, y, p, x);

        const CVec3 curlE = oracles::fd_curl(Efield, x, h);
        const CVec3 curlH = oracles::fd_curl(Hfield, x, h);
        const CVec3 r1 = curlE - kImag * k * f.H;
        const CVec3 r2 = curlH + kImag * k * f.E;
        CHECK(norm(r1) <= 1e-5 * norm(curlE));
        CHECK(norm(r2) <= 1e-5 * norm(curlH));

        // div E = 0 away from the source
        const Complex divE = oracles::fd_div(Efield, x, h);
        CHECK(std::abs(divE) <= 1e-5 * k * norm(f.E));
    }
}

TEST_CASE("plane wave satisfies the Maxwell pair and transversality", "[fields]") {
    std::mt19937_64 rng(7);
    const double k = 2.0;
    const Vec3 d = normalized({1.0, 2.0, -0.5});
    const Vec3 p{0.0, 0.0, 1.0};
    const double h = 1e-4;

    auto Efield = [&](const Vec3& x) { return plane_wave(k, d, p, x).E; };
    auto Hfield = [&](const Vec3& x) { return plane_wave(k, d, p, x).H; };

    for (int t = 0; t < 20; ++t) {
        const Vec3 x = random_in_box(rng, 2.0);
        const EHField f = plane_wave(k, d, p, x);
        CHECK(std::abs(dot(d, f.E)) < 1e-12 * norm(f.E));  // transversal

        const CVec3 r1 = oracles::fd_curl(Efield, x, h) - kImag * k * f.H;
        const CVec3 r2 = oracles::fd_curl(Hfield, x, h) + kImag * k * f.E;
        CHECK(norm(r1) <= 1e-5 * k * k * norm(p));
        CHECK(norm(r2) <= 1e-5 * k * k * norm(p));
    }

    // amplitude |E| = k |p_perp|
    const EHField f0 = plane_wave(k, d, p, {0, 0, 0});
    const Vec3 pp = p - d * dot(d, p);
    CHECK(std::abs(norm(f0.E) - k * norm(pp)) < 1e-12);

    // degenerate polarization: p parallel to d radiates nothing
    const EHField fz = plane_wave(k, d, d * 2.0, {0.3, 0.1, 0.2});
    CHECK(norm(fz.E) == 0.0);

    CHECK_THROWS_AS(plane_wave(k, {1.0, 1.0, 0.0}, p, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("dipole field transitions to a plane wave at large offsets", "[fields]") {
    // |E_dipole(x + R zhat, y) - (e^{ikR - ik zhat.y} / (4 pi R)) E_plane(zhat, p; x)|
    // normalized by the leading 1/(4 pi R) amplitude decays like 1/R.
    std::mt19937_64 rng(2024);
    const double k = 1.3;

    for (int trial = 0; trial < 10; ++trial) {
        const Vec3 zhat = random_unit(rng);
        const Vec3 y = random_in_box(rng, 0.5);
        const Vec3 x = random_in_box(rng, 1.0);
        Vec3 p = random_unit(rng);
        if (norm(p - zhat * dot(zhat, p)) < 0.3) p = normalized(cross(zhat, Vec3{0.31, 0.77, 0.1}));

        std::vector<double> radii, residuals;
        for (double R = 50.0; R <= 500.0; R *= 1.5) {
            const CVec3 exact = dipole_field(k, y, p, x + zhat * R).E;
            const Complex factor =
                std::exp(kImag * (k * (R - dot(zhat, y)))) / (4.0 * kPi * R);
            const CVec3 limit = factor * plane_wave(k, zhat, p, x).E;
            radii.push_back(R);
            residuals.push_back(norm(exact - limit) * (4.0 * kPi * R));
        }
        const double slope = oracles::loglog_slope(radii, residuals);
        CHECK(slope == Catch::Approx(-1.0).margin(0.2));
    }
}

TEST_CASE("incident field is the sum over sources", "[fields]") {
    SourceConfig two;
    two.positions = {{0.0, 0.0, 0.0}, {0.5, 0.2, -0.1}};
    two.polarization = {0.0, 0.0, 1.0};
    two.validate();

    SourceConfig a = two, b = two;
    a.positions = {two.positions[0]};
    b.positions = {two.positions[1]};

    const double k = 0.9;
    const Vec3 x{3.0, -2.0, 1.0};
    const CVec3 sum = incident_field(k, a, x) + incident_field(k, b, x);
    const CVec3 both = incident_field(k, two, x);
    CHECK(norm(both - sum) < 1e-12 * norm(both));

    SourceConfig bad;
    bad.positions.clear();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
