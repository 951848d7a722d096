#include <catch2/catch_amalgamated.hpp>

#include "emgest/recognition.hpp"

// End-to-end runs at desk scale: dipole source at the origin, scatterer about
// 40 length units away, low frequency for the location stage and regular
// frequency for the dictionary stage.

using namespace emgest;

namespace {

SourceConfig origin_dipole() {
    SourceConfig src;
    src.positions = {Vec3{0.0, 0.0, 0.0}};
    src.polarization = {0.0, 0.0, 1.0};
    return src;
}

}  // namespace

TEST_CASE("low frequency measurement locates the scatterer", "[pipeline]") {
    const double k_low = kPi / 10.0;  // wavelength 20
    auto grid = lebedev_grid(110);
    const ReceiverGrid rec = make_receiver_grid(11, 1.0);

    // true position deliberately off the sampling lattice
    const Vec3 z_true{40.2, 0.15, -0.1};
    const Measurement meas =
        simulate_measurement({preset_shape("D1"), z_true}, {5.0, 0.0}, 4, 0.0, k_low,
                             origin_dipole(), grid, rec.positions);

    SamplingGrid S;
    S.center = {40.0, 0.0, 0.0};
    S.counts = {9, 9, 9};
    S.spacing = {0.5, 0.5, 0.5};

    LocateOptions coarse;
    coarse.refine = false;
    const LocationResult res = locate(meas.far, S, coarse);
    CHECK_FALSE(res.on_boundary);
    CHECK(res.ties.size() == 1);
    CHECK(res.indicator > 0.9);
    CHECK(res.indicator <= 1.0 + 1e-6);
    // argmax within one grid cell of the true position, per axis
    CHECK(std::abs(res.position.x - z_true.x) <= S.spacing.x);
    CHECK(std::abs(res.position.y - z_true.y) <= S.spacing.y);
    CHECK(std::abs(res.position.z - z_true.z) <= S.spacing.z);
    CHECK(norm(res.position - z_true) <= 0.5);

    // refinement moves off the lattice and does not lose accuracy
    const LocationResult fine = locate(meas.far, S);
    CHECK(fine.indicator >= res.indicator);
    CHECK(norm(fine.position - z_true) <= 0.5);

    // 5% measurement noise costs at most a cell of accuracy
    TangentialFieldOnSphere noisy = add_noise(meas.far, {0.05, 424242u});
    const LocationResult res_noisy = locate(noisy, S, coarse);
    CHECK(norm(res_noisy.position - z_true) <= 1.0);
}

TEST_CASE("dictionary matching identifies the measured shape", "[pipeline]") {
    const double k = kPi;  // wavelength 2
    auto grid = lebedev_grid(110);
    // a receiver patch this size subtends about half a radian from the
    // scatterer, enough to resolve the far-field lobes that tell shapes
    // apart; a much smaller patch sees a rank-one field and cannot
    const ReceiverGrid rec = make_receiver_grid(11, 20.0);
    const Vec3 z{40.0, 0.0, 0.0};

    DictionaryBuildConfig cfg;
    cfg.n_inside = {5.0, 0.0};
    cfg.resolution = 4;
    cfg.grid = grid;
    cfg.receivers = rec.positions;
    cfg.reference_radius = norm(z);
    const std::vector<ShapeSpec> shapes = {preset_shape("D1"), preset_shape("D2"),
                                           preset_shape("D3")};
    const Dictionary dict =
        build_dictionary(shapes, {k}, {Vec3{1.0, 0.0, 0.0}}, {0.0, 0.0, 1.0}, cfg);

    // entries must be genuinely distinct before diagonal dominance means much
    for (size_t i = 0; i < dict.entries.size(); ++i)
        for (size_t j = i + 1; j < dict.entries.size(); ++j)
            CHECK(shape_indicator_near(dict.entries[i].near, dict.entries[j].near) < 1.0 - 1e-6);

    std::vector<IdentifyResult> near_rows, far_rows, noisy_rows;
    std::vector<std::string> labels;
    for (const ShapeSpec& shape : shapes) {
        const Measurement meas = simulate_measurement({shape, z}, cfg.n_inside, cfg.resolution,
                                                      cfg.rho, k, origin_dipole(), grid,
                                                      rec.positions);
        labels.push_back(shape.id);

        IdentifyOptions near_opt;
        near_opt.mode = MatchMode::kNear;
        near_rows.push_back(identify(meas, dict, z, near_opt));

        IdentifyOptions far_opt;
        far_opt.mode = MatchMode::kFar;
        far_rows.push_back(identify(meas, dict, z, far_opt));

        Measurement noisy = meas;
        noisy.near = add_noise(meas.near, {0.05, 1717u});
        noisy_rows.push_back(identify(noisy, dict, z, near_opt));
    }

    const MatchTable near_table = make_match_table(labels, near_rows);
    const MatchTable far_table = make_match_table(labels, far_rows);
    const MatchTable noisy_table = make_match_table(labels, noisy_rows);
    for (size_t r = 0; r < labels.size(); ++r) {
        CHECK(near_table.identified[r] == r);
        CHECK_FALSE(near_table.tie[r]);
        CHECK(far_table.identified[r] == r);
        CHECK(noisy_table.identified[r] == r);
        for (size_t c = 0; c < labels.size(); ++c) {
            CHECK(near_table.raw[r][c] >= 0.0);
            CHECK(near_table.raw[r][c] <= 1.0 + 1e-12);
            if (c != r) {
                // strict diagonal dominance with a visible margin
                CHECK(near_table.normalized[r][c] < 1.0 - 0.005);
                CHECK(far_table.normalized[r][c] < 1.0 - 0.005);
                CHECK(noisy_table.normalized[r][c] < 1.0 - 0.005);
            }
        }
        // the self-match is strong in absolute terms as well
        CHECK(near_table.raw[r][r] > 0.9);
    }
}
