#pragma once

// Precomputed gesture dictionary: per (shape, wavenumber, incidence
// direction, polarization) it stores the plane-wave far-field pattern and,
// optionally, the scattered near field sampled at receiver offsets relative
// to a reference placement.  Entries are built with the forward solver, are
// immutable once built, and persist in a versioned checksummed binary file
// (see docs/dictionary-format.md).

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

#include "emgest/forward.hpp"
#include "emgest/io.hpp"
#include "emgest/lebedev.hpp"

namespace emgest {

struct EntryKey {
    std::string shape_id;
    double k = 0.0;
    Vec3 d;  // incidence direction, unit
    Vec3 p;  // nominal polarization (the transverse part drives the wave)

    bool operator==(const EntryKey& o) const {
        return shape_id == o.shape_id && k == o.k && d == o.d && p == o.p;
    }
};

struct EntryMeta {
    int resolution = 0;
    double rho = 0.0;
    Complex n_inside;
    double tolerance = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

struct DictionaryEntry {
    EntryKey key;
    TangentialFieldOnSphere far;
    std::vector<CVec3> near;  // at receivers[i] - reference_radius * d, shape-local
    EntryMeta meta;
};

struct Dictionary {
    int version = 1;
    std::shared_ptr<const SphereGrid> grid;
    std::vector<Vec3> receivers;      // device receiver positions (world frame)
    double reference_radius = 0.0;    // |z| the near-field offsets were built for
    std::vector<ShapeSpec> shapes;
    std::vector<DictionaryEntry> entries;  // sorted by (shape, k, direction)

    const ShapeSpec& shape(const std::string& id) const {
        for (const ShapeSpec& s : shapes)
            if (s.id == id) return s;
        throw std::out_of_range("dictionary has no shape '" + id + "'");
    }

    const DictionaryEntry* find(const EntryKey& key) const {
        for (const DictionaryEntry& e : entries)
            if (e.key == key) return &e;
        return nullptr;
    }
};

// Deterministic coarse direction sets on the unit sphere: 6 axis directions
// or the 26 nonzero sign patterns of {-1,0,1}^3, in lexicographic order.
inline std::vector<Vec3> direction_set(int count) {
    std::vector<Vec3> dirs;
    if (count == 6) {
        dirs = {{-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}, {0, 0, -1}, {0, 0, 1}};
    } else if (count == 26) {
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                for (int l = -1; l <= 1; ++l) {
                    if (i == 0 && j == 0 && l == 0) continue;
                    dirs.push_back(normalized(Vec3{double(i), double(j), double(l)}));
                }
    } else {
        throw std::out_of_range("direction_set: supported sizes are 6 and 26");
    }
    return dirs;
}

struct DictionaryBuildConfig {
    Complex n_inside{5.0, 0.0};
    int resolution = 4;
    double rho = 0.0;
    std::shared_ptr<const SphereGrid> grid;
    std::vector<Vec3> receivers;     // world receiver positions (near-field store)
    double reference_radius = 40.0;  // nominal |z| for the near-field offsets
    bool store_near = true;
    SolverOptions solver;
    int threads = 0;  // 0: hardware concurrency
};

// Solves every (shape, k, direction) plane-wave problem and collects the
// results.  Work splits across (shape, k) pairs so each thread reuses one
// assembled operator for all directions; entry slots are preallocated, so
// the output order never depends on scheduling.
inline Dictionary build_dictionary(const std::vector<ShapeSpec>& shapes,
                                   const std::vector<double>& k_values,
                                   const std::vector<Vec3>& directions, const Vec3& p,
                                   const DictionaryBuildConfig& cfg) {
    if (shapes.empty()) throw std::invalid_argument("build_dictionary: no shapes");
    if (k_values.empty()) throw std::invalid_argument("build_dictionary: no wavenumbers");
    if (directions.empty()) throw std::invalid_argument("build_dictionary: no directions");
    if (!cfg.grid) throw std::invalid_argument("build_dictionary: no sphere grid");
    for (const Vec3& d : directions)
        if (std::abs(norm(d) - 1.0) > 1e-12)
            throw std::invalid_argument("build_dictionary: directions must be unit vectors");

    Dictionary dict;
    dict.grid = cfg.grid;
    dict.receivers = cfg.store_near ? cfg.receivers : std::vector<Vec3>{};
    dict.reference_radius = cfg.reference_radius;
    dict.shapes = shapes;
    dict.entries.resize(shapes.size() * k_values.size() * directions.size());

    struct WorkItem {
        size_t shape_idx, k_idx;
    };
    std::vector<WorkItem> items;
    for (size_t s = 0; s < shapes.size(); ++s)
        for (size_t ki = 0; ki < k_values.size(); ++ki) items.push_back({s, ki});

    std::atomic<size_t> next{0};
    std::vector<std::string> failures(items.size());

    auto worker = [&]() {
        for (;;) {
            const size_t w = next.fetch_add(1);
            if (w >= items.size()) return;
            const WorkItem item = items[w];
            const ShapeSpec& shape = shapes[item.shape_idx];
            const double k = k_values[item.k_idx];
            try {
                auto contrast = std::make_shared<const ContrastField>(
                    rasterize(shape, cfg.n_inside, cfg.resolution, cfg.rho));
                DiscreteSystem sys(contrast, k);
                for (size_t di = 0; di < directions.size(); ++di) {
                    const Vec3& d = directions[di];
                    std::vector<CVec3> Ei(contrast->voxel_count());
                    for (int l = 0; l < contrast->dims[2]; ++l)
                        for (int j = 0; j < contrast->dims[1]; ++j)
                            for (int i = 0; i < contrast->dims[0]; ++i)
                                Ei[contrast->index(i, j, l)] =
                                    plane_wave(k, d, p, contrast->center(i, j, l)).E;
                    const VolumeSolution sol = solve(sys, std::move(Ei), cfg.solver);

                    DictionaryEntry entry;
                    entry.key = {shape.id, k, d, p};
                    entry.far = far_field(sol, cfg.grid).field;
                    if (cfg.store_near) {
                        entry.near.reserve(cfg.receivers.size());
                        for (const Vec3& x : cfg.receivers)
                            entry.near.push_back(
                                scattered_field_at(sol, x - d * cfg.reference_radius));
                    }
                    entry.meta = {cfg.resolution,          cfg.rho,
                                  cfg.n_inside,            cfg.solver.tolerance,
                                  sol.stats.iterations,    sol.stats.residual};
                    const size_t slot =
                        (item.shape_idx * k_values.size() + item.k_idx) * directions.size() + di;
                    dict.entries[slot] = std::move(entry);
                }
            } catch (const std::exception& e) {
                failures[w] = shape.id + " at k=" + std::to_string(k) + ": " + e.what();
            }
        }
    };

    int nthreads = cfg.threads > 0 ? cfg.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(items.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::string error;
    for (const std::string& f : failures)
        if (!f.empty()) error += (error.empty() ? "" : "; ") + f;
    if (!error.empty()) throw SolverError("dictionary build failed: " + error);
    return dict;
}

struct DirectionMatch {
    const DictionaryEntry* entry = nullptr;
    double angular_gap = 0.0;  // radians between requested and stored direction
};

// Picks the stored entry whose incidence direction is closest to zhat.  The
// returned gap feeds the caller's error budget; above about 5 degrees the
// snapped entry is a questionable stand-in and callers should warn.
inline DirectionMatch nearest_direction_entry(const Dictionary& dict,
                                              const std::string& shape_id, double k,
                                              const Vec3& zhat) {
    const Vec3 want = normalized(zhat);
    DirectionMatch best;
    double best_dot = -2.0;
    for (const DictionaryEntry& e : dict.entries) {
        if (e.key.shape_id != shape_id) continue;
        if (std::abs(e.key.k - k) > 1e-12 * std::max(1.0, std::abs(k))) continue;
        const double c = dot(e.key.d, want);
        if (c > best_dot) {
            best_dot = c;
            best.entry = &e;
        }
    }
    if (!best.entry)
        throw std::out_of_range("dictionary has no entries for shape '" + shape_id +
                                "' at k=" + std::to_string(k));
    best.angular_gap = std::acos(std::clamp(best_dot, -1.0, 1.0));
    return best;
}

// ---------------------------------------------------------------------------
// Persistence: magic, u32 header length, JSON header, raw little-endian f64
// payload, CRC32 trailer over everything before it.
// ---------------------------------------------------------------------------

namespace detail {

constexpr char kDictMagic[9] = "EMGDICT\x01";  // 8 significant bytes

inline nlohmann::json vec3_json(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

inline Vec3 vec3_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw IntegrityError("malformed vector in header");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace detail

inline std::string serialize_dictionary(const Dictionary& dict) {
    if (dict.entries.empty()) throw std::invalid_argument("cannot save an empty dictionary");

    nlohmann::json header;
    header["format"] = "gesture-dictionary";
    header["version"] = dict.version;
    header["grid_points"] = static_cast<int>(dict.grid->size());
    header["reference_radius"] = dict.reference_radius;
    {
        nlohmann::json recv = nlohmann::json::array();
        for (const Vec3& x : dict.receivers) recv.push_back(detail::vec3_json(x));
        header["receivers"] = std::move(recv);
    }
    {
        nlohmann::json shapes = nlohmann::json::array();
        for (const ShapeSpec& s : dict.shapes) {
            nlohmann::json js;
            js["id"] = s.id;
            js["size"] = s.size;
            nlohmann::json cubes = nlohmann::json::array();
            for (const Anchor& a : s.anchors)
                cubes.push_back(nlohmann::json::array({a[0], a[1], a[2]}));
            js["cubes"] = std::move(cubes);
            shapes.push_back(std::move(js));
        }
        header["shapes"] = std::move(shapes);
    }
    {
        nlohmann::json entries = nlohmann::json::array();
        for (const DictionaryEntry& e : dict.entries) {
            nlohmann::json je;
            je["shape"] = e.key.shape_id;
            je["k"] = e.key.k;
            je["direction"] = detail::vec3_json(e.key.d);
            je["polarization"] = detail::vec3_json(e.key.p);
            je["near_count"] = static_cast<int>(e.near.size());
            je["meta"] = {{"resolution", e.meta.resolution},
                          {"rho", e.meta.rho},
                          {"n_inside", nlohmann::json::array(
                                           {e.meta.n_inside.real(), e.meta.n_inside.imag()})},
                          {"tolerance", e.meta.tolerance},
                          {"iterations", e.meta.iterations},
                          {"residual", e.meta.residual}};
            entries.push_back(std::move(je));
        }
        header["entries"] = std::move(entries);
    }

    const std::string header_text = header.dump();

    io::ByteWriter w;
    w.put_bytes(std::string_view(detail::kDictMagic, 8));
    w.put_u32le(static_cast<uint32_t>(header_text.size()));
    w.put_bytes(header_text);
    for (const DictionaryEntry& e : dict.entries) {
        if (e.far.samples.size() != dict.grid->size())
            throw std::invalid_argument("entry far-field size mismatch while saving");
        for (const CVec3& s : e.far.samples) {
            w.put_complex_f64le(s.x);
            w.put_complex_f64le(s.y);
            w.put_complex_f64le(s.z);
        }
        for (const CVec3& s : e.near) {
            w.put_complex_f64le(s.x);
            w.put_complex_f64le(s.y);
            w.put_complex_f64le(s.z);
        }
    }
    io::ByteWriter out;
    out.put_bytes(w.str());
    out.put_u32le(io::crc32(w.str()));
    return out.str();
}

inline void save_dictionary(const Dictionary& dict, const std::filesystem::path& path) {
    io::atomic_write_file(path, serialize_dictionary(dict));
}

inline Dictionary deserialize_dictionary(std::string_view data) {
    if (data.size() < 16) throw IntegrityError("dictionary file too short");
    const std::string_view body = data.substr(0, data.size() - 4);
    io::ByteReader trailer(data.substr(data.size() - 4));
    if (trailer.get_u32le() != io::crc32(body))
        throw IntegrityError("dictionary checksum mismatch: file is corrupted");

    io::ByteReader r(body);
    if (r.get_bytes(8) != std::string_view(detail::kDictMagic, 8))
        throw IntegrityError("not a gesture-dictionary file (bad magic or version byte)");
    const uint32_t header_len = r.get_u32le();
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(r.get_bytes(header_len));
    } catch (const nlohmann::json::exception& e) {
        throw IntegrityError(std::string("malformed dictionary header: ") + e.what());
    }

    try {
        Dictionary dict;
        dict.version = header.at("version").get<int>();
        if (header.at("format").get<std::string>() != "gesture-dictionary" || dict.version != 1)
            throw IntegrityError("unsupported dictionary format or version");
        dict.grid = lebedev_grid(header.at("grid_points").get<int>());
        dict.reference_radius = header.at("reference_radius").get<double>();
        for (const auto& jr : header.at("receivers"))
            dict.receivers.push_back(detail::vec3_from_json(jr));
        for (const auto& js : header.at("shapes")) {
            std::vector<Anchor> anchors;
            for (const auto& jc : js.at("cubes"))
                anchors.push_back({jc[0].get<int>(), jc[1].get<int>(), jc[2].get<int>()});
            dict.shapes.push_back(
                build_shape(js.at("id").get<std::string>(), anchors, js.at("size").get<double>()));
        }
        for (const auto& je : header.at("entries")) {
            DictionaryEntry e;
            e.key.shape_id = je.at("shape").get<std::string>();
            e.key.k = je.at("k").get<double>();
            e.key.d = detail::vec3_from_json(je.at("direction"));
            e.key.p = detail::vec3_from_json(je.at("polarization"));
            const auto& jm = je.at("meta");
            e.meta.resolution = jm.at("resolution").get<int>();
            e.meta.rho = jm.at("rho").get<double>();
            e.meta.n_inside = {jm.at("n_inside")[0].get<double>(),
                               jm.at("n_inside")[1].get<double>()};
            e.meta.tolerance = jm.at("tolerance").get<double>();
            e.meta.iterations = jm.at("iterations").get<int>();
            e.meta.residual = jm.at("residual").get<double>();
            e.far.grid = dict.grid;
            e.far.k = e.key.k;
            e.far.samples.resize(dict.grid->size());
            for (CVec3& s : e.far.samples) {
                s.x = r.get_complex_f64le();
                s.y = r.get_complex_f64le();
                s.z = r.get_complex_f64le();
            }
            e.near.resize(je.at("near_count").get<int>());
            for (CVec3& s : e.near) {
                s.x = r.get_complex_f64le();
                s.y = r.get_complex_f64le();
                s.z = r.get_complex_f64le();
            }
            dict.entries.push_back(std::move(e));
        }
        if (r.remaining() != 0)
            throw IntegrityError("dictionary payload longer than the header declares");
        if (dict.entries.empty()) throw IntegrityError("dictionary holds no entries");
        return dict;
    } catch (const nlohmann::json::exception& e) {
        throw IntegrityError(std::string("malformed dictionary header: ") + e.what());
    }
}

inline Dictionary load_dictionary(const std::filesystem::path& path) {
    return deserialize_dictionary(io::read_file(path));
}

}  // namespace emgest
