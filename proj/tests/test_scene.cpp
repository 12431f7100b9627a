// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include "test_support.hpp"

#include <slicecast/error.hpp>
#include <slicecast/scene.hpp>
#include <slicecast/synthetic.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace slicecast;
using slicecast::testing::temp_dir;

TEST( SceneConfig, EmptyObjectIsValid ) {
    const scene_config c = scene_config::from_json( "{}" );
    EXPECT_EQ( c.method, render_method::sbrc );
    EXPECT_EQ( c.n_slices, 128 );
    EXPECT_EQ( c.width, 512 );
    EXPECT_NO_THROW( c.validate() );
}

TEST( SceneConfig, ParsesFields ) {
    const scene_config c = scene_config::from_json( R"({
        "dataset": {"synthetic": "random-blobs", "size": 24, "seed": 9},
        "tf": "bone",
        "camera": {"position": [2, 0.5, 0.5], "target": [0.5, 0.5, 0.5], "up": [0, 0, 1], "fov": 40},
        "light": {"direction": [0, 0, 2], "color": [1, 0.5, 0.25]},
        "shading": "shell",
        "step": 0.005,
        "viewport": [320, 200],
        "lookup": "nearest",
        "n_slices": 64,
        "buffer_resolution": [128, 96],
        "compensation_n": 2,
        "shell": {"radii_voxels": [1, 3], "weights": [0.6, 0.4]},
        "threads": 2
    })" );
    EXPECT_EQ( c.dataset.synthetic, "random-blobs" );
    EXPECT_EQ( c.dataset.size, 24 );
    EXPECT_EQ( c.dataset.seed, 9u );
    EXPECT_EQ( c.tf.preset, "bone" );
    EXPECT_EQ( c.cam.fov_y_degrees, 40.0 );
    EXPECT_NEAR( normalize( c.light.direction ).z, 1.0, 1e-15 );
    EXPECT_EQ( c.light.color.y, 0.5 );
    EXPECT_EQ( c.method, render_method::shell );
    EXPECT_EQ( c.width, 320 );
    EXPECT_EQ( c.height, 200 );
    EXPECT_EQ( c.lookup, lookup_mode::nearest );
    EXPECT_EQ( c.buffer_width, 128 );
    EXPECT_EQ( c.buffer_height, 96 );
    EXPECT_EQ( c.compensation_n, 2 );
    EXPECT_EQ( c.shell_weights.size(), 2u );
    EXPECT_EQ( c.threads, 2 );
}

TEST( SceneConfig, JsonRoundTrip ) {
    scene_config c;
    c.method = render_method::cone;
    c.n_slices = 33;
    c.width = 100;
    c.light.color = { 0.3, 0.2, 0.1 };
    const scene_config back = scene_config::from_json( c.to_json() );
    EXPECT_EQ( back.to_json(), c.to_json() );
    EXPECT_EQ( back.method, render_method::cone );
    EXPECT_EQ( back.n_slices, 33 );
}

TEST( SceneConfig, Errors ) {
    EXPECT_THROW( scene_config::from_json( "{" ), format_error );
    EXPECT_THROW( scene_config::from_json( "[]" ), format_error );
    EXPECT_THROW( scene_config::from_json( R"({"colour": 1})" ), parameter_error );
    EXPECT_THROW( scene_config::from_json( R"({"shading": "toon"})" ), parameter_error );
    EXPECT_THROW( scene_config::from_json( R"({"n_slices": 0})" ), parameter_error );
    EXPECT_THROW( scene_config::from_json( R"({"viewport": [10]})" ), parameter_error );
    EXPECT_THROW( scene_config::from_json( R"({"light": {"direction": [0, 0, 0]}})" ), parameter_error );
    EXPECT_THROW( scene_config::from_json( R"({"step": -1})" ), parameter_error );
}

TEST( SceneConfig, RelativePathsResolveAgainstBase ) {
    const scene_config c = scene_config::from_json( R"({"dataset": {"raw": "vol/a.raw"}})", "/data" );
    EXPECT_EQ( c.dataset.raw, std::filesystem::path( "/data/vol/a.raw" ) );
    EXPECT_EQ( c.dataset.descriptor, std::filesystem::path( "/data/vol/a.json" ) );
}

TEST( SceneConfig, LoadsFileDataset ) {
    temp_dir dir;
    save_raw( dir / "blob.raw", synthetic::sphere_blob( 12 ) );
    slicecast::testing::write_file( dir / "scene.json", R"({"dataset": {"raw": "blob.raw"}})" );
    const volume_dataset v = load_scene_volume( scene_config::load( dir / "scene.json" ) );
    EXPECT_EQ( v.dims(), ( volume_dims{ 12, 12, 12 } ) );
    scene_config by_id;
    by_id.dataset.type = dataset_source::kind::id;
    by_id.dataset.id = "blob";
    EXPECT_THROW( load_scene_volume( by_id ), configuration_error );
}

TEST( RenderMethod, Names ) {
    for( render_method m : { render_method::none, render_method::phong, render_method::sbrc, render_method::shell,
                             render_method::cone, render_method::extinction, render_method::has } )
        EXPECT_EQ( parse_render_method( to_string( m ) ), m );
    EXPECT_EQ( parse_render_method( "sbrc_shadow" ), render_method::sbrc );
    EXPECT_FALSE( uses_buffer( render_method::has ) );
    EXPECT_TRUE( uses_buffer( render_method::extinction ) );
}

TEST( RunFrame, PassCounts ) {
    scene_config c;
    c.dataset.size = 12;
    c.width = c.height = 16;
    c.n_slices = 20;
    c.buffer_width = c.buffer_height = 32;
    const volume_dataset v = load_scene_volume( c );
    const transfer_function tf = load_scene_tf( c );
    c.method = render_method::none;
    EXPECT_EQ( run_frame( v, tf, c ).pass_count, 1 );
    c.method = render_method::sbrc;
    const frame_result built = run_frame( v, tf, c );
    EXPECT_EQ( built.pass_count, 21 );
    const attenuation_buffer b = build_scene_buffer( v, tf, c );
    const frame_result cached = run_frame( v, tf, c, &b );
    EXPECT_EQ( cached.build_ms, 0.0 );
    EXPECT_EQ( cached.img.hash(), built.img.hash() );
    c.method = render_method::has;
    EXPECT_EQ( run_frame( v, tf, c ).pass_count, 40 );
}

TEST( Bench, SweepShapeAndDeterminism ) {
    scene_config c;
    c.dataset.size = 12;
    c.width = c.height = 16;
    const volume_dataset v = load_scene_volume( c );
    const transfer_function tf = load_scene_tf( c );
    bench_sweep sweep;
    sweep.slices = { 8, 16, 24 };
    sweep.resolutions = { 8, 16, 32 };
    int streamed = 0;
    const auto rows = run_bench( v, tf, c, sweep, [&]( const bench_record& ) { ++streamed; } );
    ASSERT_EQ( rows.size(), 9u );
    EXPECT_EQ( streamed, 9 );
    for( const auto& r : rows ) {
        EXPECT_EQ( r.method, "sbrc" );
        EXPECT_EQ( r.pass_count, r.n_slices + 1 );
        EXPECT_EQ( r.sample_step, c.step );
        EXPECT_GE( r.build_ms, 0.0 );
        EXPECT_NEAR( r.total_ms, r.build_ms + r.render_ms, 1e-9 );
    }
    const auto again = run_bench( v, tf, c, sweep );
    for( std::size_t i = 0; i < rows.size(); ++i )
        EXPECT_EQ( rows[i].image_hash, again[i].image_hash );
    sweep.repeats = 2;
    EXPECT_THROW( run_bench( v, tf, c, sweep ), parameter_error );
}

TEST( BenchCsv, RoundTrip ) {
    std::vector<bench_record> rows{ { "sbrc", 64, 128, 128, 1.0 / 256, 1.25, 3.5, 4.75, 65, 0x0123456789abcdefull },
                                    { "has", 256, 512, 256, 0.1, 0.0, 17.0 / 3.0, 17.0 / 3.0, 512, 42 } };
    std::stringstream ss;
    write_bench_csv( ss, rows );
    const std::string text = ss.str();
    EXPECT_EQ( text.substr( 0, text.find( '\n' ) ), bench_csv_header() );
    EXPECT_NE( text.find( "128x128" ), std::string::npos );
    EXPECT_NE( text.find( "0123456789abcdef" ), std::string::npos );
    EXPECT_EQ( parse_bench_csv( ss ), rows );
}

TEST( BenchCsv, Malformed ) {
    std::stringstream wrong_header( "a,b\n" );
    EXPECT_THROW( parse_bench_csv( wrong_header ), format_error );
    std::stringstream short_row( bench_csv_header() + "\nsbrc,1\n" );
    EXPECT_THROW( parse_bench_csv( short_row ), format_error );
    std::stringstream bad_res( bench_csv_header() + "\nsbrc,1,12,0.1,1,1,2,2,00000000000000ff\n" );
    EXPECT_THROW( parse_bench_csv( bad_res ), format_error );
}
