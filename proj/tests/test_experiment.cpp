#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <map>
#include <string>

#include "emgest/experiment.hpp"

using namespace emgest;
namespace fs = std::filesystem;

namespace {

// Tiny but complete config: two easily separable shapes, coarse voxels,
// the 26-point sphere rule, and a two-level noise sweep.
nlohmann::json tiny_json() {
    nlohmann::json j;
    j["shapes"] = nlohmann::json::array();
    j["shapes"].push_back("D1");
    j["shapes"].push_back({{"id", "B2"}, {"cubes", {{0, 0, 0}, {0, 0, 1}}}});
    j["resolution"] = 2;
    j["sphere_grid"] = 26;
    j["receivers"] = {{"count", 5}, {"side", 20.0}};
    j["sampling"] = {{"counts", {3, 3, 3}}, {"spacing", 0.5}};
    j["dictionary"] = {{"directions", 6}};
    j["noise"] = {{"levels", {0.0, 0.05}}, {"seed", 7}};
    j["threads"] = 2;
    return j;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("emgest_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::map<std::string, std::string> slurp_tree(const fs::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file())
            files[fs::relative(e.path(), root).generic_string()] = io::read_file(e.path());
    return files;
}

}  // namespace

TEST_CASE("config defaults describe the desk-scale experiment", "[experiment]") {
    const ExperimentConfig cfg = parse_experiment_config(nlohmann::json::object());

    REQUIRE(cfg.shapes.size() == 3);
    CHECK(cfg.shapes[0].id == "D1");
    CHECK(cfg.shapes[2].id == "D3");
    CHECK(cfg.n_inside == Complex(5.0, 0.0));
    CHECK(cfg.resolution == 4);
    CHECK(cfg.k_low == Catch::Approx(2.0 * kPi / 20.0));
    CHECK(cfg.k_high == Catch::Approx(kPi));
    CHECK(cfg.placement == Vec3{40.0, 0.0, 0.0});
    CHECK(cfg.receiver_count == 11);
    CHECK(cfg.receiver_side == 20.0);
    CHECK(cfg.sphere_grid == 110);
    CHECK(cfg.sampling.center == cfg.placement);
    CHECK(cfg.sampling.counts == std::array<int, 3>{9, 9, 9});
    CHECK(cfg.sampling.spacing.x == Catch::Approx(0.5));  // location wavelength / 40
    CHECK(cfg.refine);
    CHECK_FALSE(cfg.aperture.enabled);
    CHECK(cfg.dictionary_directions == 26);
    CHECK(cfg.dictionary_radius() == Catch::Approx(40.0));
    CHECK(cfg.match_mode == MatchMode::kNear);
    CHECK(cfg.noise.levels == std::vector<double>{0.0, 0.01, 0.05, 0.1});
    CHECK(cfg.noise.seed == 7);
    CHECK(cfg.threads == 0);
}

TEST_CASE("wavelength and wavenumber keys are exclusive aliases", "[experiment]") {
    nlohmann::json j = nlohmann::json::object();
    j["wavelength_low"] = 10.0;
    CHECK(parse_experiment_config(j).k_low == Catch::Approx(2.0 * kPi / 10.0));

    j = nlohmann::json::object();
    j["k_low"] = 0.4;
    CHECK(parse_experiment_config(j).k_low == Catch::Approx(0.4));

    j["wavelength_low"] = 10.0;  // both present
    CHECK_THROWS_AS(parse_experiment_config(j), ConfigError);

    j = nlohmann::json::object();
    j["wavelength_high"] = -2.0;
    CHECK_THROWS_AS(parse_experiment_config(j), ConfigError);
}

TEST_CASE("config round-trips through its canonical form", "[experiment]") {
    const ExperimentConfig cfg = parse_experiment_config(tiny_json());
    const nlohmann::json canonical = config_to_json(cfg);
    const ExperimentConfig back = parse_experiment_config(canonical);

    CHECK(config_to_json(back).dump() == canonical.dump());
    CHECK(config_hash(back) == config_hash(cfg));

    // the hash tracks result-determining fields only
    ExperimentConfig threaded = cfg;
    threaded.threads = 7;
    CHECK(config_hash(threaded) == config_hash(cfg));

    ExperimentConfig finer = cfg;
    finer.resolution = 3;
    CHECK(config_hash(finer) != config_hash(cfg));

    ExperimentConfig reseeded = cfg;
    reseeded.noise.seed = 8;
    CHECK(config_hash(reseeded) != config_hash(cfg));
}

TEST_CASE("config validation rejects inconsistent inputs", "[experiment]") {
    auto with = [](const char* key, nlohmann::json value) {
        nlohmann::json j = nlohmann::json::object();
        j[key] = std::move(value);
        return j;
    };

    CHECK_THROWS_AS(parse_experiment_config(with("shapes", nlohmann::json::array())), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("shapes", {"D1", "D1"})), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("shapes", {"D99"})), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("shapes", "no/such/file.json")), ConfigError);
    // disconnected custom shape
    nlohmann::json split = nlohmann::json::object();
    split["shapes"] = nlohmann::json::array();
    split["shapes"].push_back({{"id", "X"}, {"cubes", {{0, 0, 0}, {5, 5, 5}}}});
    CHECK_THROWS_AS(parse_experiment_config(split), ConfigError);

    CHECK_THROWS_AS(parse_experiment_config(with("resolution", 0)), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("rho", -0.1)), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("k_low", 4.0)), ConfigError);  // above k_high
    CHECK_THROWS_AS(parse_experiment_config(with("placement", {0.0, 0.0, 0.0})), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("sphere_grid", 50)), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("dictionary", {{"directions", 7}})), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("match_mode", "fuzzy")), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("far_field_mode", "bogus")), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("noise", {{"levels", {0.0, -0.1}}})), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("noise", {{"levels", nlohmann::json::array()}})),
                    ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("receivers", {{"count", 1}})), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("solver", {{"tolerance", 0.0}})), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(with("aperture", {{"half_angle", -1.0}})), ConfigError);
    CHECK_THROWS_AS(parse_experiment_config(nlohmann::json::array()), ConfigError);
}

TEST_CASE("advisories flag regime violations without failing", "[experiment]") {
    CHECK(config_advisories(parse_experiment_config(nlohmann::json::object())).empty());

    // oversized shape: the location wavelength no longer dominates the geometry
    nlohmann::json big = nlohmann::json::object();
    big["shapes"] = nlohmann::json::array();
    big["shapes"].push_back({{"id", "slab"}, {"cubes", {{0, 0, 0}, {0, 1, 0}}}, {"size", 8.0}});
    const auto notes_big = config_advisories(parse_experiment_config(big));
    REQUIRE(notes_big.size() == 1);
    CHECK(notes_big[0].find("wavelength") != std::string::npos);

    // sampling box that misses the placement
    nlohmann::json off = nlohmann::json::object();
    off["sampling"] = {{"center", {0.0, 0.0, 0.0}}};
    const auto notes_off = config_advisories(parse_experiment_config(off));
    REQUIRE(notes_off.size() == 1);
    CHECK(notes_off[0].find("sampling box") != std::string::npos);
}

TEST_CASE("derived noise seeds are stable and tag-separated", "[experiment]") {
    // first output of the reference splitmix64 sequence seeded with zero
    CHECK(detail::splitmix64(0) == 0xe220a8397b1dcdafull);

    CHECK(detail::derived_seed(7, "D1/low/0") == detail::derived_seed(7, "D1/low/0"));
    CHECK(detail::derived_seed(7, "D1/low/0") != detail::derived_seed(7, "D1/low/1"));
    CHECK(detail::derived_seed(7, "D1/low/0") != detail::derived_seed(7, "D2/low/0"));
    CHECK(detail::derived_seed(7, "D1/low/0") != detail::derived_seed(8, "D1/low/0"));

    CHECK(detail::delta_tag(0.0) == "d0");
    CHECK(detail::delta_tag(0.05) == "d0p05");
}

TEST_CASE("measurement files round-trip bit for bit", "[experiment]") {
    auto grid = lebedev_grid(26);
    const std::vector<Vec3> receivers = make_receiver_grid(3, 1.0).positions;
    const SourceConfig source{{Vec3{0.0, 0.0, 0.0}}, Vec3{0.0, 0.0, 1.0}};
    const Measurement m = simulate_measurement({preset_shape("D1"), {12.0, 0.0, 0.0}},
                                               Complex(2.0, 0.0), 2, 0.0, 0.3, source, grid,
                                               receivers);

    const std::string blob = serialize_measurement(m, receivers, "low", "cafebabe01234567");
    const MeasurementFile f = deserialize_measurement(blob);

    CHECK(f.band == "low");
    CHECK(f.config == "cafebabe01234567");
    CHECK(f.measurement.shape_id == m.shape_id);
    CHECK(f.measurement.k == m.k);
    CHECK(f.measurement.z == m.z);
    CHECK(f.measurement.stats.iterations == m.stats.iterations);
    CHECK(f.measurement.stats.residual == m.stats.residual);
    CHECK(f.measurement.far_radial_residual == m.far_radial_residual);
    REQUIRE(f.receivers.size() == receivers.size());
    REQUIRE(f.measurement.far.samples.size() == m.far.samples.size());
    REQUIRE(f.measurement.near.size() == m.near.size());
    bool far_equal = true, near_equal = true;
    for (size_t i = 0; i < m.far.samples.size(); ++i)
        far_equal = far_equal && m.far.samples[i].x == f.measurement.far.samples[i].x &&
                    m.far.samples[i].y == f.measurement.far.samples[i].y &&
                    m.far.samples[i].z == f.measurement.far.samples[i].z;
    for (size_t i = 0; i < m.near.size(); ++i)
        near_equal = near_equal && m.near[i].x == f.measurement.near[i].x &&
                     m.near[i].y == f.measurement.near[i].y &&
                     m.near[i].z == f.measurement.near[i].z;
    CHECK(far_equal);
    CHECK(near_equal);

    // a second serialization is byte-identical
    CHECK(serialize_measurement(f.measurement, f.receivers, f.band, f.config) == blob);

    SECTION("corruption is detected") {
        std::string bad = blob;
        bad[bad.size() / 2] = char(bad[bad.size() / 2] ^ 0x20);
        CHECK_THROWS_AS(deserialize_measurement(bad), IntegrityError);
        CHECK_THROWS_AS(deserialize_measurement(std::string_view(blob).substr(0, 64)),
                        IntegrityError);
        std::string magic = blob;
        magic[0] = 'X';
        CHECK_THROWS_AS(deserialize_measurement(magic), IntegrityError);
        CHECK_THROWS_AS(deserialize_measurement("short"), IntegrityError);
    }
}

TEST_CASE("zero contrast simulates to files of zeros", "[experiment]") {
    nlohmann::json j = tiny_json();
    j["contrast"] = 1.0;
    const ExperimentConfig cfg = parse_experiment_config(j);

    const TempDir out("zero");
    const auto meas = run_simulate(cfg, out.path);
    REQUIRE(meas.size() == 2);
    for (const auto& pair : meas)
        for (const Measurement& m : pair) {
            double total = 0.0;
            for (const CVec3& s : m.far.samples) total += norm(s);
            for (const CVec3& s : m.near) total += norm(s);
            CHECK(total == 0.0);
        }

    // the files exist and reload to the same zeros
    const MeasurementFile f =
        load_measurement(out.path / "results" / "measurements" / "D1_low.bin");
    double total = 0.0;
    for (const CVec3& s : f.measurement.far.samples) total += norm(s);
    CHECK(total == 0.0);
}

TEST_CASE("experiment runs are deterministic and composable", "[experiment]") {
    const ExperimentConfig cfg = parse_experiment_config(tiny_json());
    const TempDir out_a("exp_a"), out_b("exp_b");

    const ExperimentReport rep = run_experiment(cfg, out_a.path);
    run_experiment(cfg, out_b.path);

    CHECK(rep.hash == config_hash(cfg));

    SECTION("the results tree is a pure function of the config") {
        const auto tree_a = slurp_tree(out_a.path / "results");
        const auto tree_b = slurp_tree(out_b.path / "results");
        REQUIRE(tree_a.size() == tree_b.size());
        CHECK(tree_a == tree_b);

        // expected artifacts, named after the noise levels
        for (const char* name :
             {"dictionary.bin", "build_report.csv", "measurements/D1_low.bin",
              "measurements/D1_high.bin", "measurements/B2_low.bin", "measurements/B2_high.bin",
              "location_d0.csv", "location_d0p05.csv", "indicator_map_D1_d0.csv",
              "indicator_map_B2_d0p05.csv", "identify_raw_d0.csv", "identify_normalized_d0.csv",
              "identify_raw_d0p05.csv", "identify_normalized_d0p05.csv", "noise_sweep.csv",
              "summary.json"})
            CHECK(tree_a.count(name) == 1);

        // timing is wall-clock and lives outside the deterministic tree
        CHECK(fs::exists(out_a.path / "timing.txt"));
        CHECK(tree_a.count("timing.txt") == 0);
    }

    SECTION("the report covers every shape and noise level") {
        REQUIRE(rep.location.rows.size() == 4);  // 2 shapes x 2 levels, level-major
        for (size_t i = 0; i < 2; ++i) {  // noise-free rows
            CHECK_FALSE(rep.location.rows[i].result.on_boundary);
            CHECK(rep.location.rows[i].result.ties.size() == 1);
            CHECK(rep.location.rows[i].error <= 0.5 + 1e-12);
        }
        for (size_t i = 2; i < 4; ++i)  // noisy rows may drift within the small box
            CHECK(rep.location.rows[i].error <= 1.5);
        REQUIRE(rep.identification.tables.size() == 2);
        for (const MatchTable& t : rep.identification.tables) {
            REQUIRE(t.row_ids.size() == 2);
            for (size_t r = 0; r < t.row_ids.size(); ++r)
                CHECK(t.column_ids[t.identified[r]] == t.row_ids[r]);
        }
        CHECK(rep.identification.all_correct);
    }

    SECTION("summary and sweep files carry the config hash") {
        const nlohmann::json summary =
            nlohmann::json::parse(io::read_file(out_a.path / "results" / "summary.json"));
        CHECK(summary.at("config_hash").get<std::string>() == rep.hash);
        CHECK(summary.at("location").size() == 4);
        CHECK(summary.at("identification").size() == 2);
        CHECK(summary.at("dictionary_entries").get<int>() == 12);  // 2 shapes x 6 directions

        const std::string sweep = io::read_file(out_a.path / "results" / "noise_sweep.csv");
        CHECK(sweep.find("# config " + rep.hash) == 0);
        CHECK(sweep.find("delta,mean_location_error,max_location_error,"
                         "identification_accuracy") != std::string::npos);
    }

    SECTION("standalone stages reuse the artifacts on disk") {
        const LocateReport loc = run_locate(cfg, out_a.path);
        REQUIRE(loc.rows.size() == rep.location.rows.size());
        for (size_t i = 0; i < loc.rows.size(); ++i) {
            CHECK(loc.rows[i].result.position == rep.location.rows[i].result.position);
            CHECK(loc.rows[i].result.indicator == rep.location.rows[i].result.indicator);
        }

        const IdentifyReport ident = run_identify(cfg, out_a.path);
        REQUIRE(ident.tables.size() == rep.identification.tables.size());
        for (size_t li = 0; li < ident.tables.size(); ++li)
            CHECK(ident.tables[li].raw == rep.identification.tables[li].raw);
    }

    SECTION("artifacts from a different config are refused") {
        ExperimentConfig other = cfg;
        other.resolution = 3;
        CHECK_THROWS_AS(run_locate(other, out_a.path), LayoutError);
        CHECK_THROWS_AS(run_identify(other, out_a.path), LayoutError);
    }
}
