#pragma once

// Two-stage recognizer.  Stage one scans a sampling box with a low frequency
// indicator that projects the measured far field onto phase-modulated
// degree-1 vector spherical harmonics; its argmax is the located position.
// Stage two correlates the measurement against dictionary entries (far field
// or receiver-patch near field) and identifies the shape by the largest
// normalized match.  The measurement noise model and CSV table export live
// here as well.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "emgest/dictionary.hpp"
#include "emgest/sphere.hpp"

namespace emgest {

struct LayoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Probe fields and the location indicator
// ---------------------------------------------------------------------------

// Probe attached to candidate position z~: the basis field modulated by the
// plane-phase factor a source at z~ would imprint on a far field,
//     (e^{ik|z~|} / (4 pi |z~|)) e^{-ik x^.z~} B(x^).
inline TangentialFieldOnSphere probe_field(const Vec3& ztilde, double k,
                                           const TangentialFieldOnSphere& basis_field) {
    basis_field.validate();
    if (!(k > 0.0)) throw std::invalid_argument("probe_field: wavenumber must be positive");
    const double r = norm(ztilde);
    if (r == 0.0) throw std::invalid_argument("probe_field: probe point cannot be the origin");

    const Complex pre = std::exp(Complex(0.0, k * r)) / (4.0 * kPi * r);
    TangentialFieldOnSphere out;
    out.grid = basis_field.grid;
    out.k = k;
    out.samples.resize(basis_field.size());
    for (size_t i = 0; i < basis_field.size(); ++i) {
        const Complex phase = std::exp(Complex(0.0, -k * dot(basis_field.grid->nodes[i], ztilde)));
        out.samples[i] = basis_field.samples[i] * (pre * phase);
    }
    return out;
}

// I(z~) = sqrt(sum_b |<E, probe_b(z~)>|^2) / (||E|| / (4 pi |z~|)), inner
// products over the full sphere grid or a node mask.  The probe prefactor has
// modulus 1/(4 pi |z~|), so it cancels against the denominator and the
// computation below works with the bare weighted projections.
//
// The value never exceeds 1: on the full grid the six basis fields are
// orthonormal, and a mask only removes positive-weight nodes, so the probe
// Gram matrix stays dominated by the identity.
inline double location_indicator(const TangentialFieldOnSphere& field, const Vec3& ztilde,
                                 const VSHBasis& basis, const ApertureMask* mask = nullptr) {
    field.validate();
    if (!basis.grid || !same_grid(*basis.grid, *field.grid))
        throw std::invalid_argument("location_indicator: basis grid does not match field grid");
    if (!(field.k > 0.0))
        throw std::invalid_argument("location_indicator: field carries no wavenumber");
    if (norm(ztilde) == 0.0)
        throw std::invalid_argument("location_indicator: probe point cannot be the origin");

    const double denom = field_norm(field, mask);
    if (denom == 0.0)
        throw std::invalid_argument(
            "location_indicator: zero-norm measurement on the selected aperture");

    const SphereGrid& g = *field.grid;
    double acc = 0.0;
    for (const TangentialFieldOnSphere& b : basis.fields) {
        Complex c{};
        for (size_t i = 0; i < g.size(); ++i) {
            if (mask && !mask->keep[i]) continue;
            const Complex phase = std::exp(Complex(0.0, field.k * dot(g.nodes[i], ztilde)));
            c += g.weights[i] * phase * hdot(field.samples[i], b.samples[i]);
        }
        acc += std::norm(c);
    }
    return std::sqrt(acc) / denom;
}

// ---------------------------------------------------------------------------
// Sampling grid and locate
// ---------------------------------------------------------------------------

struct SamplingGrid {
    Vec3 center{};
    std::array<int, 3> counts{9, 9, 9};
    Vec3 spacing{0.5, 0.5, 0.5};

    size_t size() const {
        return size_t(counts[0]) * size_t(counts[1]) * size_t(counts[2]);
    }

    size_t index(int i, int j, int l) const {
        return (size_t(l) * counts[1] + size_t(j)) * counts[0] + size_t(i);
    }

    Vec3 point(int i, int j, int l) const {
        return {center.x + (i - 0.5 * (counts[0] - 1)) * spacing.x,
                center.y + (j - 0.5 * (counts[1] - 1)) * spacing.y,
                center.z + (l - 0.5 * (counts[2] - 1)) * spacing.z};
    }

    void validate() const {
        for (int c : counts)
            if (c < 1) throw std::invalid_argument("sampling grid needs at least one point per axis");
        const double s[3] = {spacing.x, spacing.y, spacing.z};
        for (int a = 0; a < 3; ++a)
            if (counts[a] > 1 && !(s[a] > 0.0))
                throw std::invalid_argument("sampling grid spacing must be positive");
    }
};

struct LocationResult {
    Vec3 position{};        // final answer (refined if requested)
    double indicator = 0.0; // indicator value at position
    Vec3 grid_argmax{};     // coarse maximizer before refinement
    double k = 0.0;
    bool refined = false;
    bool on_boundary = false;   // coarse argmax sits on a face of the box
    std::vector<Vec3> ties;     // all coarse maximizers within relative 1e-9
    std::vector<double> map;    // indicator over the grid (kept on request)
};

struct LocateOptions {
    bool refine = true;
    bool keep_map = false;
    const ApertureMask* mask = nullptr;
    int threads = 1;  // grid evaluations are independent; the reduction stays serial
};

namespace detail {

// Golden-section maximization of f on [a, b], returns the best abscissa.
template <class F>
double golden_max(F&& f, double a, double b, int steps) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int s = 0; s < steps; ++s) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = f(x2);
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = f(x1);
        }
    }
    return f1 > f2 ? x1 : x2;
}

}  // namespace detail

// Coarse argmax of the indicator over the sampling grid, with optional
// coordinate-descent refinement (golden section per axis, bracket one cell
// around the coarse maximizer).  Grid evaluations may run on several threads;
// the argmax is always taken by one serial scan in index order, so the result
// does not depend on the thread count.
inline LocationResult locate(const TangentialFieldOnSphere& field, const SamplingGrid& S,
                             const LocateOptions& opt = {}) {
    field.validate();
    S.validate();
    if (!(field.k > 0.0)) throw std::invalid_argument("locate: field carries no wavenumber");

    const VSHBasis basis = vsh_basis(field.grid);
    auto eval = [&](const Vec3& z) { return location_indicator(field, z, basis, opt.mask); };

    std::vector<double> map(S.size());
    auto fill = [&](size_t lo, size_t hi) {
        for (size_t idx = lo; idx < hi; ++idx) {
            const int i = int(idx % size_t(S.counts[0]));
            const int j = int((idx / size_t(S.counts[0])) % size_t(S.counts[1]));
            const int l = int(idx / (size_t(S.counts[0]) * size_t(S.counts[1])));
            map[idx] = eval(S.point(i, j, l));
        }
    };
    const int workers = std::max(1, opt.threads);
    if (workers == 1 || S.size() < 64) {
        fill(0, S.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (S.size() + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            const size_t lo = std::min(S.size(), size_t(t) * chunk);
            const size_t hi = std::min(S.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(fill, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    size_t best = 0;
    for (size_t idx = 1; idx < map.size(); ++idx)
        if (map[idx] > map[best]) best = idx;

    LocationResult res;
    res.k = field.k;
    const int bi = int(best % size_t(S.counts[0]));
    const int bj = int((best / size_t(S.counts[0])) % size_t(S.counts[1]));
    const int bl = int(best / (size_t(S.counts[0]) * size_t(S.counts[1])));
    res.grid_argmax = S.point(bi, bj, bl);
    res.position = res.grid_argmax;
    res.indicator = map[best];
    const int bidx[3] = {bi, bj, bl};
    for (int a = 0; a < 3; ++a)
        if (S.counts[a] > 1 && (bidx[a] == 0 || bidx[a] == S.counts[a] - 1))
            res.on_boundary = true;

    const double cut = map[best] * (1.0 - 1e-9);
    for (int l = 0; l < S.counts[2]; ++l)
        for (int j = 0; j < S.counts[1]; ++j)
            for (int i = 0; i < S.counts[0]; ++i)
                if (map[S.index(i, j, l)] >= cut) res.ties.push_back(S.point(i, j, l));

    if (opt.refine) {
        Vec3 z = res.position;
        double h[3] = {S.spacing.x, S.spacing.y, S.spacing.z};
        for (int sweep = 0; sweep < 2; ++sweep) {
            for (int a = 0; a < 3; ++a) {
                if (S.counts[a] == 1) continue;
                double* comp = a == 0 ? &z.x : a == 1 ? &z.y : &z.z;
                const double c = *comp;
                *comp = detail::golden_max(
                    [&](double t) {
                        Vec3 p = z;
                        (a == 0 ? p.x : a == 1 ? p.y : p.z) = t;
                        return eval(p);
                    },
                    c - h[a], c + h[a], 24);
            }
            for (double& step : h) step *= 0.125;
        }
        const double refined_value = eval(z);
        if (refined_value >= res.indicator) {
            res.position = z;
            res.indicator = refined_value;
            res.refined = true;
        }
    }

    if (opt.keep_map) res.map = std::move(map);
    return res;
}

// ---------------------------------------------------------------------------
// Noise model
// ---------------------------------------------------------------------------

struct NoiseSpec {
    double delta = 0.0;   // relative level
    std::uint64_t seed = 0;
};

namespace detail {

// Uniform draw on [-1, 1) from the top 53 bits, identical on every platform
// (std::uniform_real_distribution leaves the algorithm unspecified).
inline double unit_symmetric(std::mt19937_64& rng) {
    return 2.0 * (double(rng() >> 11) * 0x1p-53) - 1.0;
}

}  // namespace detail

// Point-wise corruption E + delta zeta1 M exp(i 2 pi zeta2) with independent
// zeta1, zeta2 ~ U(-1,1) per sample point and Cartesian component, where M is
// the largest Euclidean sample magnitude over the whole set.
inline std::vector<CVec3> add_noise(const std::vector<CVec3>& samples, const NoiseSpec& spec) {
    if (spec.delta < 0.0) throw std::invalid_argument("noise level must be nonnegative");
    if (spec.delta == 0.0 || samples.empty()) return samples;

    double peak = 0.0;
    for (const CVec3& s : samples) peak = std::max(peak, norm(s));
    if (peak == 0.0) return samples;

    std::mt19937_64 rng(spec.seed);
    std::vector<CVec3> out(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        Complex comp[3] = {samples[i].x, samples[i].y, samples[i].z};
        for (Complex& c : comp) {
            const double z1 = detail::unit_symmetric(rng);
            const double z2 = detail::unit_symmetric(rng);
            c += spec.delta * z1 * peak * std::exp(Complex(0.0, 2.0 * kPi * z2));
        }
        out[i] = {comp[0], comp[1], comp[2]};
    }
    return out;
}

inline TangentialFieldOnSphere add_noise(const TangentialFieldOnSphere& field,
                                         const NoiseSpec& spec) {
    TangentialFieldOnSphere out = field;
    out.samples = add_noise(field.samples, spec);
    return out;
}

// ---------------------------------------------------------------------------
// Shape indicators and identification
// ---------------------------------------------------------------------------

// Far-field correlation against a dictionary entry re-centered at the located
// position: the entry is modulated by e^{-ik x^.z°} (the translation phase)
// and the match is |<meas, entry~>| / (||meas|| ||entry~||) over the sphere.
// The scalar prefactor e^{ik|z°|}/(4 pi |z°|) has no effect on a normalized
// correlation and is omitted.
inline double shape_indicator_far(const TangentialFieldOnSphere& meas,
                                  const TangentialFieldOnSphere& entry_far, const Vec3& zring) {
    require_same_grid(meas, entry_far);
    if (norm(zring) == 0.0)
        throw std::invalid_argument("shape_indicator_far: located position cannot be the origin");
    const double k = meas.k > 0.0 ? meas.k : entry_far.k;
    if (!(k > 0.0)) throw std::invalid_argument("shape_indicator_far: no wavenumber");

    const SphereGrid& g = *meas.grid;
    Complex num{};
    double meas2 = 0.0, ent2 = 0.0;
    for (size_t i = 0; i < g.size(); ++i) {
        const Complex phase = std::exp(Complex(0.0, -k * dot(g.nodes[i], zring)));
        const CVec3 shifted = entry_far.samples[i] * phase;
        num += g.weights[i] * hdot(meas.samples[i], shifted);
        meas2 += g.weights[i] * norm2(meas.samples[i]);
        ent2 += g.weights[i] * norm2(shifted);
    }
    if (meas2 == 0.0) throw std::invalid_argument("shape_indicator_far: zero-norm measurement");
    if (ent2 == 0.0) return 0.0;  // a legitimately dark entry matches nothing
    return std::abs(num) / std::sqrt(meas2 * ent2);
}

// Near-field correlation over the receiver patch.  The dictionary stores the
// entry's scattered field at the receiver offsets x - R d, which stand in for
// x - z° once z° is close to R d; the layout check enforces that closeness.
// Uniform receiver-cell weights cancel in the normalized quotient, as does
// the e^{ik|z°|}/(4 pi |z°|) prefactor.
inline double shape_indicator_near(const std::vector<CVec3>& meas,
                                   const std::vector<CVec3>& entry_near) {
    if (meas.size() != entry_near.size() || meas.empty())
        throw LayoutError("shape_indicator_near: receiver sample counts do not match");
    Complex num{};
    double meas2 = 0.0, ent2 = 0.0;
    for (size_t i = 0; i < meas.size(); ++i) {
        num += hdot(meas[i], entry_near[i]);
        meas2 += norm2(meas[i]);
        ent2 += norm2(entry_near[i]);
    }
    if (meas2 == 0.0) throw std::invalid_argument("shape_indicator_near: zero-norm measurement");
    if (ent2 == 0.0) return 0.0;
    return std::abs(num) / std::sqrt(meas2 * ent2);
}

enum class MatchMode { kFar, kNear };

struct IdentifyOptions {
    MatchMode mode = MatchMode::kNear;
    // Near mode: require |z° - R d_snap| below this before trusting the
    // stored receiver offsets.  Negative means half the wavelength.
    double layout_tolerance = -1.0;
    double tie_relative = 1e-9;
};

struct IdentifyResult {
    std::vector<std::string> shape_ids;  // dictionary order
    std::vector<double> raw;             // J per shape, in [0, 1]
    std::vector<double> normalized;      // raw / max(raw)
    size_t best = 0;
    std::vector<size_t> maximizers;      // all argmax indices within tie_relative
    bool tie = false;
    Vec3 snapped_direction{};
    double direction_gap = 0.0;
};

inline IdentifyResult identify(const TangentialFieldOnSphere& far_meas,
                               const std::vector<CVec3>& near_meas, double k,
                               const Dictionary& dict, const Vec3& zring,
                               const IdentifyOptions& opt = {}) {
    if (dict.shapes.empty()) throw std::invalid_argument("identify: dictionary has no shapes");
    const double r = norm(zring);
    if (r == 0.0) throw std::invalid_argument("identify: located position cannot be the origin");
    const Vec3 zhat = zring * (1.0 / r);

    IdentifyResult res;
    for (const ShapeSpec& shape : dict.shapes) {
        const DirectionMatch m = nearest_direction_entry(dict, shape.id, k, zhat);
        res.snapped_direction = m.entry->key.d;
        res.direction_gap = m.angular_gap;

        double value = 0.0;
        if (opt.mode == MatchMode::kFar) {
            value = shape_indicator_far(far_meas, m.entry->far, zring);
        } else {
            const double tol =
                opt.layout_tolerance >= 0.0 ? opt.layout_tolerance : kPi / k;  // half a wavelength
            const Vec3 anchor = m.entry->key.d * dict.reference_radius;
            if (norm(zring - anchor) > tol)
                throw LayoutError(
                    "identify: located position is too far from the dictionary receiver layout "
                    "anchor for shape '" + shape.id + "'");
            if (near_meas.size() != m.entry->near.size())
                throw LayoutError("identify: measurement and dictionary receiver counts differ");
            value = shape_indicator_near(near_meas, m.entry->near);
        }
        res.shape_ids.push_back(shape.id);
        res.raw.push_back(value);
    }

    for (size_t i = 1; i < res.raw.size(); ++i)
        if (res.raw[i] > res.raw[res.best]) res.best = i;
    const double top = res.raw[res.best];
    res.normalized.resize(res.raw.size());
    for (size_t i = 0; i < res.raw.size(); ++i)
        res.normalized[i] = top > 0.0 ? res.raw[i] / top : 0.0;
    for (size_t i = 0; i < res.raw.size(); ++i)
        if (res.raw[i] >= top * (1.0 - opt.tie_relative)) res.maximizers.push_back(i);
    res.tie = res.maximizers.size() > 1;
    return res;
}

inline IdentifyResult identify(const Measurement& meas, const Dictionary& dict, const Vec3& zring,
                               const IdentifyOptions& opt = {}) {
    return identify(meas.far, meas.near, meas.k, dict, zring, opt);
}

// ---------------------------------------------------------------------------
// Match table and CSV export
// ---------------------------------------------------------------------------

struct MatchTable {
    std::vector<std::string> row_ids;     // truth label per measured row
    std::vector<std::string> column_ids;  // dictionary shape order
    std::vector<std::vector<double>> raw;
    std::vector<std::vector<double>> normalized;  // each row divided by its max
    std::vector<size_t> identified;               // argmax per row
    std::vector<bool> tie;
};

inline MatchTable make_match_table(const std::vector<std::string>& row_ids,
                                   const std::vector<IdentifyResult>& rows) {
    if (row_ids.size() != rows.size())
        throw std::invalid_argument("match table needs one label per row");
    MatchTable t;
    t.row_ids = row_ids;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r == 0)
            t.column_ids = rows[r].shape_ids;
        else if (rows[r].shape_ids != t.column_ids)
            throw std::invalid_argument("match table rows disagree on dictionary shapes");
        t.raw.push_back(rows[r].raw);
        t.normalized.push_back(rows[r].normalized);
        t.identified.push_back(rows[r].best);
        t.tie.push_back(rows[r].tie);
    }
    return t;
}

namespace detail {

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

// CSV with '#' comment header lines, a label header row, then one row per
// measurement.  Values are printed with full round-trip precision so reruns
// can be compared byte for byte.
inline std::string match_table_csv(const MatchTable& table,
                                   const std::vector<std::string>& comments,
                                   bool normalized_values) {
    std::string out;
    for (const std::string& c : comments) out += "# " + c + "\n";
    out += "measured";
    for (const std::string& id : table.column_ids) out += "," + id;
    out += ",identified,tie\n";
    const auto& values = normalized_values ? table.normalized : table.raw;
    for (size_t r = 0; r < values.size(); ++r) {
        out += table.row_ids[r];
        for (double v : values[r]) out += "," + detail::format_g17(v);
        out += "," + table.column_ids[table.identified[r]];
        out += table.tie[r] ? ",yes\n" : ",no\n";
    }
    return out;
}

inline std::string location_csv(const LocationResult& res,
                                const std::vector<std::string>& comments) {
    std::string out;
    for (const std::string& c : comments) out += "# " + c + "\n";
    out += "x,y,z,indicator,k,refined,on_boundary,ties\n";
    out += detail::format_g17(res.position.x) + "," + detail::format_g17(res.position.y) + "," +
           detail::format_g17(res.position.z) + "," + detail::format_g17(res.indicator) + "," +
           detail::format_g17(res.k) + "," + (res.refined ? "yes" : "no") + "," +
           (res.on_boundary ? "yes" : "no") + "," + std::to_string(res.ties.size()) + "\n";
    return out;
}

}  // namespace emgest
