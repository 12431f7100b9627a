// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/half_angle.hpp>
#include <slicecast/image.hpp>
#include <slicecast/light_buffer.hpp>
#include <slicecast/raycaster.hpp>
#include <slicecast/transfer_function.hpp>
#include <slicecast/volume.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slicecast {

/// What produces a frame: the ray caster in one of its shading modes, or the
/// half-angle slicing baseline.
enum class render_method { none, phong, sbrc, shell, cone, extinction, has };

std::string_view to_string( render_method m );
/// Accepts the names above plus "sbrc_shadow". Throws parameter_error.
render_method parse_render_method( std::string_view s );
bool uses_buffer( render_method m );

struct dataset_source {
    enum class kind { synthetic, file, id };
    kind type = kind::synthetic;
    std::string synthetic = "sphere-blob";
    int size = 64;
    std::uint64_t seed = 1;
    std::filesystem::path raw;
    std::filesystem::path descriptor;
    std::string id; // resolved against a data directory by the caller
};

struct tf_source {
    std::string preset = "blob";
    std::filesystem::path path;
    std::vector<control_point> points; // inline points win over path and preset
};

/// One scene: everything needed to produce a frame. Every field has a
/// default, so "{}" is a valid config.
///
/// JSON keys: dataset, tf, camera {position, target, up, fov}, light
/// {direction, color}, shading, step, viewport [w,h], early_termination_alpha,
/// ambient_floor, lookup, n_slices, buffer_resolution (n or [w,h]),
/// compensation_n, phong, shell {radii_voxels, weights}, cone, threads,
/// output. Unknown keys are rejected.
struct scene_config {
    dataset_source dataset;
    tf_source tf;
    render_method method = render_method::sbrc;
    camera cam;
    light_source light{ normalize( vec3{ 0.5, -0.7, -0.5 } ), { 1, 1, 1 } };
    double step = 1.0 / 256.0;
    int width = 512;
    int height = 512;
    double early_termination_alpha = 0.99;
    double ambient_floor = 0.0;
    lookup_mode lookup = lookup_mode::linear;
    phong_params phong;
    std::vector<double> shell_radii_voxels{ 1.0, 2.0, 3.0 };
    std::vector<double> shell_weights{ 0.5, 0.3, 0.2 };
    cone_kernel cone;
    int n_slices = 128;
    int buffer_width = 256;
    int buffer_height = 256;
    int compensation_n = 0;
    double reference_spacing = 1.0 / 256.0;
    int threads = 0;
    std::filesystem::path output;

    /// Relative file paths resolve against `base_dir`. Throws format_error
    /// for malformed JSON and parameter_error for bad values.
    static scene_config from_json( std::string_view text, const std::filesystem::path& base_dir = {} );
    static scene_config load( const std::filesystem::path& path );
    std::string to_json() const;

    /// Throws parameter_error on out-of-range numbers.
    void validate() const;
};

volume_dataset load_scene_volume( const scene_config& cfg );
transfer_function load_scene_tf( const scene_config& cfg );

/// Ray-caster settings for `cfg` on volume `v` (shell radii scale with the
/// voxel size).
render_settings make_render_settings( const scene_config& cfg, const volume_dataset& v );

/// Light camera and slice stack derived from the config's light and buffer
/// fields.
attenuation_buffer build_scene_buffer( const volume_dataset& v, const transfer_function& tf,
                                       const scene_config& cfg );

struct frame_result {
    image img;
    double build_ms = 0.0;
    double render_ms = 0.0;
    int pass_count = 0;
};

/// Renders one frame. Buffer-based methods build a buffer unless `buffer`
/// is given, in which case build_ms is 0. pass_count is 1 for plain ray
/// casting, n_slices + 1 with a buffer and 2 n_slices for half-angle.
frame_result run_frame( const volume_dataset& v, const transfer_function& tf, const scene_config& cfg,
                        const attenuation_buffer* buffer = nullptr );

struct bench_record {
    std::string method;
    int n_slices = 0;
    int buffer_width = 0;
    int buffer_height = 0;
    double sample_step = 0.0;
    double build_ms = 0.0;
    double render_ms = 0.0;
    double total_ms = 0.0;
    int pass_count = 0;
    std::uint64_t image_hash = 0;

    friend bool operator==( const bench_record&, const bench_record& ) = default;
};

struct bench_sweep {
    std::vector<render_method> methods{ render_method::sbrc };
    std::vector<int> slices{ 64, 128, 256 };
    std::vector<int> resolutions{ 128, 256, 512 }; // square buffers
    int repeats = 3;
};

/// Runs every (method, slices, resolution) combination repeats + 1 times,
/// discards the first run and averages the rest. Throws parameter_error for
/// empty lists or repeats < 3, and error if repeated runs disagree on the
/// image.
std::vector<bench_record> run_bench( const volume_dataset& v, const transfer_function& tf, const scene_config& base,
                                     const bench_sweep& sweep,
                                     const std::function<void( const bench_record& )>& on_row = {} );

/// Header: method,n_slices,buffer_resolution,sample_step,build_ms,render_ms,
/// total_ms,pass_count,image_hash. Resolutions are written as WxH, hashes as
/// 16 hex digits and reals in shortest round-trip form.
void write_bench_csv( std::ostream& out, const std::vector<bench_record>& rows );
std::string bench_csv_header();
std::string to_csv_row( const bench_record& r );
/// Inverse of write_bench_csv; throws format_error on malformed input.
std::vector<bench_record> parse_bench_csv( std::istream& in );

} // namespace slicecast
