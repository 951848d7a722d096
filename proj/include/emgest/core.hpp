#pragma once

// Basic numeric types shared across the library: real/complex 3-vectors and
// the wavenumber wrapper.  Time convention is exp(-i*omega*t); fields with
// e^{ikr}/r dependence are outgoing.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace emgest {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kImag{0.0, 1.0};

// ---------------------------------------------------------------------------
// Real 3-vector
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
    return v / n;
}

// ---------------------------------------------------------------------------
// Complex 3-vector
// ---------------------------------------------------------------------------

struct CVec3 {
    Complex x{}, y{}, z{};

    CVec3() = default;
    CVec3(Complex cx, Complex cy, Complex cz) : x(cx), y(cy), z(cz) {}
    explicit CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

    CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    CVec3 operator-() const { return {-x, -y, -z}; }
    CVec3 operator*(Complex s) const { return {x * s, y * s, z * s}; }
    CVec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    CVec3& operator+=(const CVec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }

    Complex operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline CVec3 operator*(Complex s, const CVec3& v) { return v * s; }
inline CVec3 operator*(double s, const CVec3& v) { return v * s; }

// Bilinear dot (no conjugation).
inline Complex dot(const CVec3& a, const CVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Complex dot(const Vec3& a, const CVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Hermitian dot: sum_i a_i * conj(b_i).
inline Complex hdot(const CVec3& a, const CVec3& b) {
    return a.x * std::conj(b.x) + a.y * std::conj(b.y) + a.z * std::conj(b.z);
}

inline CVec3 cross(const Vec3& a, const CVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const CVec3& v) { return std::norm(v.x) + std::norm(v.y) + std::norm(v.z); }
inline double norm(const CVec3& v) { return std::sqrt(norm2(v)); }

// ---------------------------------------------------------------------------
// Wavenumber
// ---------------------------------------------------------------------------

// Strong wrapper so wavenumbers and wavelengths cannot be mixed up at call
// sites.  Constructed from k directly or from a wavelength.
struct WaveNumber {
    double k = 0.0;

    explicit WaveNumber(double value) : k(value) {
        if (!(value > 0.0) || !std::isfinite(value))
            throw std::invalid_argument("wavenumber must be positive and finite");
    }
    static WaveNumber from_wavelength(double lambda) {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("wavelength must be positive and finite");
        return WaveNumber(2.0 * kPi / lambda);
    }
    double wavelength() const { return 2.0 * kPi / k; }
};

// Thrown when an iterative solve fails to reach its tolerance.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed or corrupted files (bad magic, checksum mismatch, ...).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace emgest
