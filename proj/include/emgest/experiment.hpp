#pragma once

// Experiment driver behind the CLI: structured config with desk-scale
// defaults, the versioned measurement file format, the four pipeline stages
// (dictionary build, measurement simulation, location, identification), and
// the orchestrated end-to-end run.  Every artifact lands under
// <out>/results/ and is byte-identical across reruns of the same config;
// wall-clock timing goes to <out>/timing.txt, outside the deterministic tree.

#include <array>
#include <cctype>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "emgest/dictionary.hpp"
#include "emgest/io.hpp"
#include "emgest/recognition.hpp"

namespace emgest {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

struct NoiseSweep {
    std::vector<double> levels{0.0, 0.01, 0.05, 0.1};
    std::uint64_t seed = 7;
};

// Optional polar-cap restriction of the location stage to a partial aperture.
struct ApertureSpec {
    bool enabled = false;
    Vec3 axis{-1.0, 0.0, 0.0};
    double half_angle = 1.5;
};

struct ExperimentConfig {
    std::vector<ShapeSpec> shapes;
    Complex n_inside{5.0, 0.0};
    double rho = 0.0;
    int resolution = 4;
    double k_low = 2.0 * kPi / 20.0;   // location wavelength 20
    double k_high = 2.0 * kPi / 2.0;   // identification wavelength 2
    Vec3 placement{40.0, 0.0, 0.0};
    SourceConfig source{{Vec3{0.0, 0.0, 0.0}}, Vec3{0.0, 0.0, 1.0}};
    int receiver_count = 11;
    // The patch must subtend a solid angle comparable to the far-field lobe
    // width 1/(k a) or the receivers see a rank-one field and cannot tell
    // shapes apart; at |z| = 40 and wavelength 2 that calls for side ~ 20.
    double receiver_side = 20.0;
    int sphere_grid = 110;
    SamplingGrid sampling{{40.0, 0.0, 0.0}, {9, 9, 9}, {0.5, 0.5, 0.5}};
    bool refine = true;
    ApertureSpec aperture;
    int dictionary_directions = 26;
    double reference_radius = -1.0;  // negative: use |placement|
    bool store_near = true;
    MatchMode match_mode = MatchMode::kNear;
    double layout_tolerance = -1.0;  // negative: half the identification wavelength
    FarFieldMode far_mode = FarFieldMode::kTrue;
    NoiseSweep noise;
    SolverOptions solver;
    int threads = 0;  // 0: one worker per core, capped at 8

    double wavelength_low() const { return 2.0 * kPi / k_low; }
    double wavelength_high() const { return 2.0 * kPi / k_high; }
    double dictionary_radius() const {
        return reference_radius > 0.0 ? reference_radius : norm(placement);
    }

    void validate() const {
        if (shapes.empty()) throw ConfigError("config: no shapes");
        for (size_t i = 0; i < shapes.size(); ++i)
            for (size_t j = i + 1; j < shapes.size(); ++j)
                if (shapes[i].id == shapes[j].id)
                    throw ConfigError("config: duplicate shape id '" + shapes[i].id + "'");
        if (!(k_low > 0.0) || !(k_high > 0.0))
            throw ConfigError("config: wavenumbers must be positive");
        if (k_low >= k_high)
            throw ConfigError("config: the location wavelength must exceed the "
                              "identification wavelength");
        if (resolution < 1) throw ConfigError("config: resolution must be at least 1");
        if (!(rho >= 0.0)) throw ConfigError("config: rho must be nonnegative");
        if (norm(placement) == 0.0)
            throw ConfigError("config: placement cannot be the origin (the device sits there)");
        if (receiver_count < 2) throw ConfigError("config: need at least 2 receivers per side");
        if (!(receiver_side > 0.0)) throw ConfigError("config: receiver side must be positive");
        if (dictionary_directions != 6 && dictionary_directions != 26)
            throw ConfigError("config: direction set must be 6 or 26");
        if (aperture.enabled &&
            (!(aperture.half_angle > 0.0) || aperture.half_angle > kPi))
            throw ConfigError("config: aperture half-angle must lie in (0, pi]");
        if (noise.levels.empty()) throw ConfigError("config: noise sweep needs at least one level");
        for (double d : noise.levels)
            if (!(d >= 0.0)) throw ConfigError("config: noise levels must be nonnegative");
        if (!(solver.tolerance > 0.0)) throw ConfigError("config: solver tolerance must be positive");
        if (solver.max_iterations < 1 || solver.restart < 1)
            throw ConfigError("config: solver iteration limits must be positive");
        if (threads < 0) throw ConfigError("config: threads must be nonnegative");
        try {
            sampling.validate();
            source.validate();
            lebedev_grid(sphere_grid);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derived_seed(std::uint64_t base, const std::string& tag) {
    return splitmix64(base ^ io::fnv1a64(tag));
}

// vec3_json lives in dictionary.hpp's detail block and is shared here

inline Vec3 vec3_from(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError(std::string("config: ") + what + " must be a 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

// Resolve "wavelength_x" xor "k_x" into a wavenumber.
inline double band_wavenumber(const nlohmann::json& j, const std::string& band,
                              double fallback_k) {
    const std::string wkey = "wavelength_" + band;
    const std::string kkey = "k_" + band;
    if (j.contains(wkey) && j.contains(kkey))
        throw ConfigError("config: give either " + wkey + " or " + kkey + ", not both");
    if (j.contains(wkey)) {
        const double w = j.at(wkey).get<double>();
        if (!(w > 0.0)) throw ConfigError("config: " + wkey + " must be positive");
        return 2.0 * kPi / w;
    }
    if (j.contains(kkey)) {
        const double k = j.at(kkey).get<double>();
        if (!(k > 0.0)) throw ConfigError("config: " + kkey + " must be positive");
        return k;
    }
    return fallback_k;
}

inline ShapeSpec shape_from_json(const nlohmann::json& j) {
    try {
        if (j.is_string()) return preset_shape(j.get<std::string>());
        if (!j.is_object() || !j.contains("id") || !j.contains("cubes"))
            throw ConfigError("config: custom shapes need 'id' and 'cubes'");
        std::vector<Anchor> cubes;
        for (const auto& c : j.at("cubes")) {
            if (!c.is_array() || c.size() != 3)
                throw ConfigError("config: cube anchors must be integer triples");
            cubes.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
        }
        return build_shape(j.at("id").get<std::string>(), cubes, j.value("size", 1.0));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config: root must be an object");
    ExperimentConfig cfg;

    try {
        if (j.contains("shapes")) {
            const nlohmann::json& s = j.at("shapes");
            cfg.shapes.clear();
            if (s.is_string()) {
                try {
                    cfg.shapes = load_shapes(s.get<std::string>());
                } catch (const std::exception& e) {
                    throw ConfigError(std::string("config: ") + e.what());
                }
            } else {
                for (const auto& e : s) cfg.shapes.push_back(detail::shape_from_json(e));
            }
        } else {
            for (const char* id : {"D1", "D2", "D3"}) cfg.shapes.push_back(preset_shape(id));
        }

        if (j.contains("contrast")) {
            const nlohmann::json& c = j.at("contrast");
            if (c.is_number())
                cfg.n_inside = Complex(c.get<double>(), 0.0);
            else
                cfg.n_inside = Complex(c.value("re", 1.0), c.value("im", 0.0));
        }
        cfg.rho = j.value("rho", cfg.rho);
        cfg.resolution = j.value("resolution", cfg.resolution);
        cfg.k_low = detail::band_wavenumber(j, "low", cfg.k_low);
        cfg.k_high = detail::band_wavenumber(j, "high", cfg.k_high);
        if (j.contains("placement")) cfg.placement = detail::vec3_from(j.at("placement"), "placement");

        if (j.contains("source")) {
            const nlohmann::json& s = j.at("source");
            cfg.source.positions.clear();
            for (const auto& p : s.at("positions"))
                cfg.source.positions.push_back(detail::vec3_from(p, "source position"));
            cfg.source.polarization = detail::vec3_from(s.at("polarization"), "polarization");
        }

        if (j.contains("receivers")) {
            const nlohmann::json& r = j.at("receivers");
            cfg.receiver_count = r.value("count", cfg.receiver_count);
            cfg.receiver_side = r.value("side", cfg.receiver_side);
        }
        cfg.sphere_grid = j.value("sphere_grid", cfg.sphere_grid);

        cfg.sampling.center = cfg.placement;
        cfg.sampling.spacing = Vec3{1.0, 1.0, 1.0} * (cfg.wavelength_low() / 40.0);
        if (j.contains("sampling")) {
            const nlohmann::json& s = j.at("sampling");
            if (s.contains("center")) cfg.sampling.center = detail::vec3_from(s.at("center"), "sampling center");
            if (s.contains("counts")) {
                const auto& c = s.at("counts");
                if (!c.is_array() || c.size() != 3)
                    throw ConfigError("config: sampling counts must be an integer triple");
                cfg.sampling.counts = {c[0].get<int>(), c[1].get<int>(), c[2].get<int>()};
            }
            if (s.contains("spacing")) {
                if (s.at("spacing").is_number()) {
                    const double h = s.at("spacing").get<double>();
                    cfg.sampling.spacing = {h, h, h};
                } else {
                    cfg.sampling.spacing = detail::vec3_from(s.at("spacing"), "sampling spacing");
                }
            }
            cfg.refine = s.value("refine", cfg.refine);
        }

        if (j.contains("aperture") && !j.at("aperture").is_null()) {
            const nlohmann::json& a = j.at("aperture");
            cfg.aperture.enabled = true;
            if (a.contains("axis")) cfg.aperture.axis = detail::vec3_from(a.at("axis"), "aperture axis");
            cfg.aperture.half_angle = a.value("half_angle", cfg.aperture.half_angle);
        }

        if (j.contains("dictionary")) {
            const nlohmann::json& d = j.at("dictionary");
            cfg.dictionary_directions = d.value("directions", cfg.dictionary_directions);
            cfg.reference_radius = d.value("reference_radius", cfg.reference_radius);
            cfg.store_near = d.value("store_near", cfg.store_near);
        }

        if (j.contains("match_mode")) {
            const std::string m = j.at("match_mode").get<std::string>();
            if (m == "near")
                cfg.match_mode = MatchMode::kNear;
            else if (m == "far")
                cfg.match_mode = MatchMode::kFar;
            else
                throw ConfigError("config: match_mode must be 'near' or 'far'");
        }
        cfg.layout_tolerance = j.value("layout_tolerance", cfg.layout_tolerance);

        if (j.contains("far_field_mode")) {
            const std::string m = j.at("far_field_mode").get<std::string>();
            if (m == "true")
                cfg.far_mode = FarFieldMode::kTrue;
            else if (m == "rescaled10")
                cfg.far_mode = FarFieldMode::kRescaled10;
            else
                throw ConfigError("config: far_field_mode must be 'true' or 'rescaled10'");
        }

        if (j.contains("noise")) {
            const nlohmann::json& n = j.at("noise");
            if (n.contains("levels"))
                cfg.noise.levels = n.at("levels").get<std::vector<double>>();
            cfg.noise.seed = n.value("seed", cfg.noise.seed);
        }

        if (j.contains("solver")) {
            const nlohmann::json& s = j.at("solver");
            cfg.solver.tolerance = s.value("tolerance", cfg.solver.tolerance);
            cfg.solver.max_iterations = s.value("max_iterations", cfg.solver.max_iterations);
            cfg.solver.restart = s.value("restart", cfg.solver.restart);
        }
        cfg.threads = j.value("threads", cfg.threads);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    cfg.validate();
    return cfg;
}

inline ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw ConfigError("config file does not exist: " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(io::read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config: " + path.string() + ": " + e.what());
    }
    return parse_experiment_config(j);
}

// Canonical normalized form: every field explicit, keys sorted by the JSON
// object itself.  This is what gets hashed and what round-trips losslessly.
inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    nlohmann::json shapes = nlohmann::json::array();
    for (const ShapeSpec& s : cfg.shapes) {
        nlohmann::json cubes = nlohmann::json::array();
        for (const auto& a : s.anchors) cubes.push_back({a[0], a[1], a[2]});
        shapes.push_back({{"id", s.id}, {"cubes", cubes}, {"size", s.size}});
    }
    j["shapes"] = shapes;
    j["contrast"] = {{"re", cfg.n_inside.real()}, {"im", cfg.n_inside.imag()}};
    j["rho"] = cfg.rho;
    j["resolution"] = cfg.resolution;
    j["k_low"] = cfg.k_low;
    j["k_high"] = cfg.k_high;
    j["placement"] = detail::vec3_json(cfg.placement);
    nlohmann::json pos = nlohmann::json::array();
    for (const Vec3& p : cfg.source.positions) pos.push_back(detail::vec3_json(p));
    j["source"] = {{"positions", pos}, {"polarization", detail::vec3_json(cfg.source.polarization)}};
    j["receivers"] = {{"count", cfg.receiver_count}, {"side", cfg.receiver_side}};
    j["sphere_grid"] = cfg.sphere_grid;
    j["sampling"] = {{"center", detail::vec3_json(cfg.sampling.center)},
                     {"counts", {cfg.sampling.counts[0], cfg.sampling.counts[1],
                                 cfg.sampling.counts[2]}},
                     {"spacing", detail::vec3_json(cfg.sampling.spacing)},
                     {"refine", cfg.refine}};
    if (cfg.aperture.enabled)
        j["aperture"] = {{"axis", detail::vec3_json(cfg.aperture.axis)},
                         {"half_angle", cfg.aperture.half_angle}};
    else
        j["aperture"] = nullptr;
    j["dictionary"] = {{"directions", cfg.dictionary_directions},
                       {"reference_radius", cfg.dictionary_radius()},
                       {"store_near", cfg.store_near}};
    j["match_mode"] = cfg.match_mode == MatchMode::kNear ? "near" : "far";
    j["layout_tolerance"] = cfg.layout_tolerance;
    j["far_field_mode"] = cfg.far_mode == FarFieldMode::kTrue ? "true" : "rescaled10";
    j["noise"] = {{"levels", cfg.noise.levels}, {"seed", cfg.noise.seed}};
    j["solver"] = {{"tolerance", cfg.solver.tolerance},
                   {"max_iterations", cfg.solver.max_iterations},
                   {"restart", cfg.solver.restart}};
    j["threads"] = cfg.threads;
    return j;
}

// Identifies the result-determining content: the worker count is forced to
// zero because parallel runs produce the same bytes as serial ones.
inline std::string config_hash(const ExperimentConfig& cfg) {
    ExperimentConfig c = cfg;
    c.threads = 0;
    return io::hex16(io::fnv1a64(config_to_json(c).dump()));
}

// Non-fatal observations the CLI prints to stderr.
inline std::vector<std::string> config_advisories(const ExperimentConfig& cfg) {
    std::vector<std::string> notes;
    double diameter = 0.0;
    for (const ShapeSpec& s : cfg.shapes) {
        int lo[3] = {INT_MAX, INT_MAX, INT_MAX}, hi[3] = {INT_MIN, INT_MIN, INT_MIN};
        for (const auto& a : s.anchors)
            for (int c = 0; c < 3; ++c) {
                lo[c] = std::min(lo[c], a[c]);
                hi[c] = std::max(hi[c], a[c] + 1);
            }
        double d2 = 0.0;
        for (int c = 0; c < 3; ++c) d2 += double(hi[c] - lo[c]) * double(hi[c] - lo[c]);
        diameter = std::max(diameter, s.size * std::sqrt(d2));
    }
    if (cfg.wavelength_low() < 2.0 * diameter)
        notes.push_back("location wavelength " + detail::format_g17(cfg.wavelength_low()) +
                        " is below twice the largest shape diameter " +
                        detail::format_g17(diameter) +
                        "; the low-frequency location analysis may not apply");
    const Vec3 c = cfg.sampling.center;
    const Vec3 h{0.5 * (cfg.sampling.counts[0] - 1) * cfg.sampling.spacing.x,
                 0.5 * (cfg.sampling.counts[1] - 1) * cfg.sampling.spacing.y,
                 0.5 * (cfg.sampling.counts[2] - 1) * cfg.sampling.spacing.z};
    if (std::abs(cfg.placement.x - c.x) > h.x || std::abs(cfg.placement.y - c.y) > h.y ||
        std::abs(cfg.placement.z - c.z) > h.z)
        notes.push_back("the sampling box does not contain the configured placement; "
                        "the located position will sit on the box boundary");
    return notes;
}

// ---------------------------------------------------------------------------
// Measurement files
// ---------------------------------------------------------------------------

inline constexpr char kMeasurementMagic[8] = {'E', 'M', 'G', 'M', 'E', 'A', 'S', '\x01'};

inline std::string serialize_measurement(const Measurement& m,
                                         const std::vector<Vec3>& receivers,
                                         const std::string& band, const std::string& hash) {
    m.far.validate();
    nlohmann::json h;
    h["format"] = "gesture-measurement";
    h["version"] = 1;
    h["config"] = hash;
    h["shape"] = m.shape_id;
    h["band"] = band;
    h["k"] = m.k;
    h["placement"] = detail::vec3_json(m.z);
    h["grid_points"] = int(m.far.grid->point_count);
    h["far_radial_residual"] = m.far_radial_residual;
    nlohmann::json rec = nlohmann::json::array();
    for (const Vec3& r : receivers) rec.push_back(detail::vec3_json(r));
    h["receivers"] = rec;
    h["stats"] = {{"iterations", m.stats.iterations},
                  {"residual", m.stats.residual},
                  {"converged", m.stats.converged}};
    const std::string header = h.dump();

    io::ByteWriter w;
    w.put_bytes(std::string_view(kMeasurementMagic, 8));
    w.put_u32le(static_cast<std::uint32_t>(header.size()));
    w.put_bytes(header);
    for (const CVec3& s : m.far.samples) {
        w.put_complex_f64le(s.x);
        w.put_complex_f64le(s.y);
        w.put_complex_f64le(s.z);
    }
    for (const CVec3& s : m.near) {
        w.put_complex_f64le(s.x);
        w.put_complex_f64le(s.y);
        w.put_complex_f64le(s.z);
    }
    std::string out = w.str();
    io::ByteWriter t;
    t.put_u32le(io::crc32(out));
    return out + t.str();
}

struct MeasurementFile {
    Measurement measurement;
    std::vector<Vec3> receivers;
    std::string band;
    std::string config;
};

inline MeasurementFile deserialize_measurement(std::string_view bytes) {
    if (bytes.size() < 16) throw IntegrityError("measurement file: too short");
    {
        io::ByteReader crc_r(bytes.substr(bytes.size() - 4));
        if (crc_r.get_u32le() != io::crc32(bytes.substr(0, bytes.size() - 4)))
            throw IntegrityError("measurement file: checksum mismatch");
    }
    io::ByteReader r(bytes.substr(0, bytes.size() - 4));
    if (r.get_bytes(8) != std::string_view(kMeasurementMagic, 8))
        throw IntegrityError("measurement file: bad magic");
    const std::uint32_t hlen = r.get_u32le();
    nlohmann::json h;
    try {
        h = nlohmann::json::parse(r.get_bytes(hlen));
    } catch (const nlohmann::json::exception&) {
        throw IntegrityError("measurement file: malformed header");
    }

    MeasurementFile f;
    try {
        if (h.at("format").get<std::string>() != "gesture-measurement" ||
            h.at("version").get<int>() != 1)
            throw IntegrityError("measurement file: unsupported format or version");
        f.band = h.at("band").get<std::string>();
        f.config = h.at("config").get<std::string>();
        Measurement& m = f.measurement;
        m.shape_id = h.at("shape").get<std::string>();
        m.k = h.at("k").get<double>();
        m.z = detail::vec3_from(h.at("placement"), "placement");
        m.far_radial_residual = h.at("far_radial_residual").get<double>();
        m.stats.iterations = h.at("stats").at("iterations").get<int>();
        m.stats.residual = h.at("stats").at("residual").get<double>();
        m.stats.converged = h.at("stats").at("converged").get<bool>();
        m.far.grid = lebedev_grid(h.at("grid_points").get<int>());
        m.far.k = m.k;
        for (const auto& p : h.at("receivers"))
            f.receivers.push_back(detail::vec3_from(p, "receiver"));
    } catch (const nlohmann::json::exception&) {
        throw IntegrityError("measurement file: incomplete header");
    } catch (const ConfigError& e) {
        throw IntegrityError(std::string("measurement file: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw IntegrityError(std::string("measurement file: ") + e.what());
    }

    Measurement& m = f.measurement;
    m.far.samples.resize(m.far.grid->size());
    for (CVec3& s : m.far.samples) {
        s.x = r.get_complex_f64le();
        s.y = r.get_complex_f64le();
        s.z = r.get_complex_f64le();
    }
    m.near.resize(f.receivers.size());
    for (CVec3& s : m.near) {
        s.x = r.get_complex_f64le();
        s.y = r.get_complex_f64le();
        s.z = r.get_complex_f64le();
    }
    if (r.remaining() != 0) throw IntegrityError("measurement file: trailing bytes");
    return f;
}

inline void save_measurement(const Measurement& m, const std::vector<Vec3>& receivers,
                             const std::string& band, const std::string& hash,
                             const std::filesystem::path& path) {
    io::atomic_write_file(path, serialize_measurement(m, receivers, band, hash));
}

inline MeasurementFile load_measurement(const std::filesystem::path& path) {
    return deserialize_measurement(io::read_file(path));
}

// ---------------------------------------------------------------------------
// Stage runners
// ---------------------------------------------------------------------------

namespace detail {

inline int effective_threads(const ExperimentConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(std::min(hc, 8u)) : 1;
}

inline std::string sanitize_id(const std::string& id) {
    std::string out;
    for (char c : id)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return out;
}

inline std::string delta_tag(double level) {
    std::string s = "d";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", level);
    for (const char* p = buf; *p; ++p) s += *p == '.' ? 'p' : *p;
    return s;
}

inline std::filesystem::path results_dir(const std::filesystem::path& out) {
    return out / "results";
}

inline std::filesystem::path measurement_path(const std::filesystem::path& out,
                                              const std::string& shape_id,
                                              const std::string& band) {
    return results_dir(out) / "measurements" / (sanitize_id(shape_id) + "_" + band + ".bin");
}

}  // namespace detail

inline Dictionary run_build_dict(const ExperimentConfig& cfg, const std::filesystem::path& out) {
    const std::string hash = config_hash(cfg);
    DictionaryBuildConfig bc;
    bc.n_inside = cfg.n_inside;
    bc.resolution = cfg.resolution;
    bc.rho = cfg.rho;
    bc.grid = lebedev_grid(cfg.sphere_grid);
    bc.receivers = make_receiver_grid(cfg.receiver_count, cfg.receiver_side).positions;
    bc.reference_radius = cfg.dictionary_radius();
    bc.store_near = cfg.store_near;
    bc.solver = cfg.solver;
    bc.threads = detail::effective_threads(cfg);

    const Dictionary dict =
        build_dictionary(cfg.shapes, {cfg.k_high}, direction_set(cfg.dictionary_directions),
                         cfg.source.polarization, bc);
    save_dictionary(dict, detail::results_dir(out) / "dictionary.bin");

    std::string report = "# config " + hash + "\n";
    report += "shape,k,dx,dy,dz,iterations,residual\n";
    for (const DictionaryEntry& e : dict.entries) {
        report += e.key.shape_id + "," + detail::format_g17(e.key.k) + "," +
                  detail::format_g17(e.key.d.x) + "," + detail::format_g17(e.key.d.y) + "," +
                  detail::format_g17(e.key.d.z) + "," + std::to_string(e.meta.iterations) + "," +
                  detail::format_g17(e.meta.residual) + "\n";
    }
    io::atomic_write_file(detail::results_dir(out) / "build_report.csv", report);
    return dict;
}

// One measurement per shape and band.  Files land under results/measurements.
inline std::vector<std::array<Measurement, 2>> run_simulate(const ExperimentConfig& cfg,
                                                            const std::filesystem::path& out) {
    const std::string hash = config_hash(cfg);
    auto grid = lebedev_grid(cfg.sphere_grid);
    const std::vector<Vec3> receivers =
        make_receiver_grid(cfg.receiver_count, cfg.receiver_side).positions;

    std::vector<std::array<Measurement, 2>> all;
    for (const ShapeSpec& shape : cfg.shapes) {
        std::array<Measurement, 2> pair = {
            simulate_measurement({shape, cfg.placement}, cfg.n_inside, cfg.resolution, cfg.rho,
                                 cfg.k_low, cfg.source, grid, receivers, cfg.solver, cfg.far_mode),
            simulate_measurement({shape, cfg.placement}, cfg.n_inside, cfg.resolution, cfg.rho,
                                 cfg.k_high, cfg.source, grid, receivers, cfg.solver,
                                 cfg.far_mode)};
        save_measurement(pair[0], receivers, "low", hash,
                         detail::measurement_path(out, shape.id, "low"));
        save_measurement(pair[1], receivers, "high", hash,
                         detail::measurement_path(out, shape.id, "high"));
        all.push_back(std::move(pair));
    }
    return all;
}

struct LocationRow {
    std::string shape;
    double delta = 0.0;
    LocationResult result;
    double error = 0.0;  // |z° - placement|
};

struct LocateReport {
    std::vector<LocationRow> rows;  // shape-major, then noise level
    bool any_boundary = false;
    bool any_tie = false;
};

// Location stage over in-memory low-band measurements, one run per noise
// level, with per-level derived seeds.  Writes the location tables and the
// indicator maps.
inline LocateReport locate_stage(const ExperimentConfig& cfg,
                                 const std::vector<Measurement>& low,
                                 const std::filesystem::path& out) {
    const std::string hash = config_hash(cfg);
    LocateReport report;

    ApertureMask mask;
    if (cfg.aperture.enabled)
        mask = ApertureMask::polar_cap(lebedev_grid(cfg.sphere_grid), cfg.aperture.axis,
                                       cfg.aperture.half_angle);

    LocateOptions opt;
    opt.refine = cfg.refine;
    opt.keep_map = true;
    opt.mask = cfg.aperture.enabled ? &mask : nullptr;
    opt.threads = detail::effective_threads(cfg);

    for (size_t li = 0; li < cfg.noise.levels.size(); ++li) {
        const double delta = cfg.noise.levels[li];
        std::string csv = "# config " + hash + "\n# delta " + detail::format_g17(delta) +
                          "\n# k " + detail::format_g17(cfg.k_low) + "\n";
        csv += "shape,x,y,z,indicator,error,on_boundary,ties\n";
        for (const Measurement& m : low) {
            TangentialFieldOnSphere field = m.far;
            if (delta > 0.0) {
                const NoiseSpec ns{delta, detail::derived_seed(
                                              cfg.noise.seed,
                                              m.shape_id + "/low/" + std::to_string(li))};
                field = add_noise(field, ns);
            }
            LocationRow row;
            row.shape = m.shape_id;
            row.delta = delta;
            row.result = locate(field, cfg.sampling, opt);
            row.error = norm(row.result.position - cfg.placement);
            report.any_boundary = report.any_boundary || row.result.on_boundary;
            report.any_tie = report.any_tie || row.result.ties.size() > 1;

            csv += row.shape + "," + detail::format_g17(row.result.position.x) + "," +
                   detail::format_g17(row.result.position.y) + "," +
                   detail::format_g17(row.result.position.z) + "," +
                   detail::format_g17(row.result.indicator) + "," +
                   detail::format_g17(row.error) + "," +
                   (row.result.on_boundary ? "yes" : "no") + "," +
                   std::to_string(row.result.ties.size()) + "\n";

            std::string map = "# config " + hash + "\n# shape " + row.shape + "\n# delta " +
                              detail::format_g17(delta) + "\n";
            map += "i,j,l,x,y,z,indicator\n";
            for (int l = 0; l < cfg.sampling.counts[2]; ++l)
                for (int jj = 0; jj < cfg.sampling.counts[1]; ++jj)
                    for (int i = 0; i < cfg.sampling.counts[0]; ++i) {
                        const Vec3 p = cfg.sampling.point(i, jj, l);
                        map += std::to_string(i) + "," + std::to_string(jj) + "," +
                               std::to_string(l) + "," + detail::format_g17(p.x) + "," +
                               detail::format_g17(p.y) + "," + detail::format_g17(p.z) + "," +
                               detail::format_g17(row.result.map[cfg.sampling.index(i, jj, l)]) +
                               "\n";
                    }
            io::atomic_write_file(detail::results_dir(out) /
                                      ("indicator_map_" + detail::sanitize_id(row.shape) + "_" +
                                       detail::delta_tag(delta) + ".csv"),
                                  map);
            report.rows.push_back(std::move(row));
        }
        io::atomic_write_file(
            detail::results_dir(out) / ("location_" + detail::delta_tag(delta) + ".csv"), csv);
    }
    return report;
}

namespace detail {

inline Measurement load_stage_measurement(const ExperimentConfig& cfg,
                                          const std::filesystem::path& out,
                                          const std::string& shape_id, const std::string& band) {
    MeasurementFile f = load_measurement(measurement_path(out, shape_id, band));
    if (f.config != config_hash(cfg))
        throw LayoutError("measurement " + f.measurement.shape_id + "/" + f.band +
                          " was produced by a different config (hash " + f.config + ")");
    return std::move(f.measurement);
}

}  // namespace detail

// Standalone locate: reads the measurement files a prior simulate wrote.
inline LocateReport run_locate(const ExperimentConfig& cfg, const std::filesystem::path& out) {
    std::vector<Measurement> low;
    for (const ShapeSpec& shape : cfg.shapes)
        low.push_back(detail::load_stage_measurement(cfg, out, shape.id, "low"));
    return locate_stage(cfg, low, out);
}

struct IdentifyReport {
    std::vector<double> levels;
    std::vector<MatchTable> tables;  // one per level
    bool all_correct = true;
    bool any_tie = false;
    double match_seconds = 0.0;  // time inside the inner-product matcher alone
};

// Identification stage: per noise level, corrupt the stage-2 measurement,
// take z° from the matching location row, and correlate against the
// dictionary.  Writes raw and normalized tables per level.
inline IdentifyReport identify_stage(const ExperimentConfig& cfg, const Dictionary& dict,
                                     const std::vector<Measurement>& high,
                                     const LocateReport& locations,
                                     const std::filesystem::path& out) {
    const std::string hash = config_hash(cfg);
    IdentifyReport report;

    IdentifyOptions opt;
    opt.mode = cfg.match_mode;
    opt.layout_tolerance = cfg.layout_tolerance >= 0.0 ? cfg.layout_tolerance
                                                       : kPi / cfg.k_high;

    for (size_t li = 0; li < cfg.noise.levels.size(); ++li) {
        const double delta = cfg.noise.levels[li];
        std::vector<IdentifyResult> rows;
        std::vector<std::string> labels;
        for (size_t si = 0; si < high.size(); ++si) {
            const Measurement& m = high[si];
            Measurement noisy = m;
            if (delta > 0.0) {
                const NoiseSpec ns{delta, detail::derived_seed(
                                              cfg.noise.seed,
                                              m.shape_id + "/high/" + std::to_string(li))};
                noisy.far = add_noise(m.far, ns);
                noisy.near = add_noise(m.near, {delta, detail::splitmix64(ns.seed)});
            }
            // the located position for this shape at this noise level
            const LocationRow& loc = locations.rows[li * high.size() + si];

            const auto t0 = std::chrono::steady_clock::now();
            rows.push_back(identify(noisy, dict, loc.result.position, opt));
            const auto t1 = std::chrono::steady_clock::now();
            report.match_seconds += std::chrono::duration<double>(t1 - t0).count();

            labels.push_back(m.shape_id);
            report.any_tie = report.any_tie || rows.back().tie;
            if (rows.back().shape_ids[rows.back().best] != m.shape_id)
                report.all_correct = false;
        }
        MatchTable table = make_match_table(labels, rows);
        const std::vector<std::string> comments = {
            "config " + hash, "delta " + detail::format_g17(delta),
            "seed " + std::to_string(cfg.noise.seed), "k " + detail::format_g17(cfg.k_high),
            std::string("mode ") + (cfg.match_mode == MatchMode::kNear ? "near" : "far")};
        io::atomic_write_file(
            detail::results_dir(out) / ("identify_raw_" + detail::delta_tag(delta) + ".csv"),
            match_table_csv(table, comments, false));
        io::atomic_write_file(
            detail::results_dir(out) /
                ("identify_normalized_" + detail::delta_tag(delta) + ".csv"),
            match_table_csv(table, comments, true));
        report.levels.push_back(delta);
        report.tables.push_back(std::move(table));
    }
    return report;
}

// Standalone identify: loads the dictionary and measurement files, and
// re-runs the (cheap) location stage to get z° per shape and level.
inline IdentifyReport run_identify(const ExperimentConfig& cfg,
                                   const std::filesystem::path& out) {
    const Dictionary dict = load_dictionary(detail::results_dir(out) / "dictionary.bin");
    std::vector<Measurement> low, high;
    for (const ShapeSpec& shape : cfg.shapes) {
        low.push_back(detail::load_stage_measurement(cfg, out, shape.id, "low"));
        high.push_back(detail::load_stage_measurement(cfg, out, shape.id, "high"));
    }
    const LocateReport locations = locate_stage(cfg, low, out);
    return identify_stage(cfg, dict, high, locations, out);
}

struct ExperimentReport {
    std::string hash;
    LocateReport location;
    IdentifyReport identification;
    double build_seconds = 0.0;
    double simulate_seconds = 0.0;
    double locate_seconds = 0.0;
    double identify_seconds = 0.0;
    double total_seconds = 0.0;
};

// The full pipeline: dictionary, measurements, location sweep, identification
// sweep, summary artifacts, timing.  Everything under results/ is a pure
// function of the config; timing.txt is the only nondeterministic output.
inline ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                       const std::filesystem::path& out) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    auto seconds_since = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    ExperimentReport report;
    report.hash = config_hash(cfg);

    auto t = clock::now();
    const Dictionary dict = run_build_dict(cfg, out);
    report.build_seconds = seconds_since(t);

    t = clock::now();
    const std::vector<std::array<Measurement, 2>> meas = run_simulate(cfg, out);
    report.simulate_seconds = seconds_since(t);

    std::vector<Measurement> low, high;
    for (const auto& pair : meas) {
        low.push_back(pair[0]);
        high.push_back(pair[1]);
    }

    t = clock::now();
    report.location = locate_stage(cfg, low, out);
    report.locate_seconds = seconds_since(t);

    t = clock::now();
    report.identification = identify_stage(cfg, dict, high, report.location, out);
    report.identify_seconds = seconds_since(t);

    // noise sweep summary: location error and identification accuracy per level
    std::string sweep = "# config " + report.hash + "\n";
    sweep += "delta,mean_location_error,max_location_error,identification_accuracy\n";
    for (size_t li = 0; li < cfg.noise.levels.size(); ++li) {
        double mean_err = 0.0, max_err = 0.0;
        for (size_t si = 0; si < cfg.shapes.size(); ++si) {
            const double e = report.location.rows[li * cfg.shapes.size() + si].error;
            mean_err += e;
            max_err = std::max(max_err, e);
        }
        mean_err /= double(cfg.shapes.size());
        const MatchTable& table = report.identification.tables[li];
        int correct = 0;
        for (size_t r = 0; r < table.row_ids.size(); ++r)
            if (table.column_ids[table.identified[r]] == table.row_ids[r]) ++correct;
        sweep += detail::format_g17(cfg.noise.levels[li]) + "," +
                 detail::format_g17(mean_err) + "," + detail::format_g17(max_err) + "," +
                 detail::format_g17(double(correct) / double(table.row_ids.size())) + "\n";
    }
    io::atomic_write_file(detail::results_dir(out) / "noise_sweep.csv", sweep);

    nlohmann::json summary;
    ExperimentConfig canon = cfg;
    canon.threads = 0;  // results do not depend on the worker count
    summary["config"] = config_to_json(canon);
    summary["config_hash"] = report.hash;
    summary["dictionary_entries"] = dict.entries.size();
    nlohmann::json loc = nlohmann::json::array();
    for (const LocationRow& row : report.location.rows)
        loc.push_back({{"shape", row.shape},
                       {"delta", row.delta},
                       {"position", detail::vec3_json(row.result.position)},
                       {"indicator", row.result.indicator},
                       {"error", row.error},
                       {"on_boundary", row.result.on_boundary},
                       {"ties", row.result.ties.size()}});
    summary["location"] = loc;
    nlohmann::json ident = nlohmann::json::array();
    for (size_t li = 0; li < report.identification.tables.size(); ++li) {
        const MatchTable& table = report.identification.tables[li];
        nlohmann::json rows = nlohmann::json::array();
        for (size_t r = 0; r < table.row_ids.size(); ++r)
            rows.push_back({{"measured", table.row_ids[r]},
                            {"identified", table.column_ids[table.identified[r]]},
                            {"tie", static_cast<bool>(table.tie[r])}});
        ident.push_back({{"delta", report.identification.levels[li]}, {"rows", rows}});
    }
    summary["identification"] = ident;
    io::atomic_write_file(detail::results_dir(out) / "summary.json", summary.dump(2) + "\n");

    report.total_seconds = seconds_since(started);
    char timing[512];
    std::snprintf(timing, sizeof(timing),
                  "build_dict   %10.3f s\n"
                  "simulate     %10.3f s\n"
                  "locate       %10.3f s\n"
                  "identify     %10.3f s\n"
                  "total        %10.3f s\n"
                  "stage-2 matching (inner products only): %.6f s, %.4f%% of total\n",
                  report.build_seconds, report.simulate_seconds, report.locate_seconds,
                  report.identify_seconds, report.total_seconds,
                  report.identification.match_seconds,
                  100.0 * report.identification.match_seconds /
                      std::max(report.total_seconds, 1e-12));
    io::atomic_write_file(out / "timing.txt", timing);
    return report;
}

}  // namespace emgest
