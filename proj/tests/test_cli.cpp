// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include "test_support.hpp"

#include <slicecast/image.hpp>
#include <slicecast/scene.hpp>
#include <slicecast/volume.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace slicecast;
using slicecast::testing::temp_dir;

namespace {

struct run_result {
    int exit_code = -1;
    std::string output;
};

run_result run_cli( const std::string& args ) {
    const std::string cmd = std::string( SLICECAST_CLI ) + " " + args + " 2>&1";
    run_result r;
    FILE* pipe = popen( cmd.c_str(), "r" );
    if( !pipe )
        return r;
    std::array<char, 4096> buf{};
    while( std::fgets( buf.data(), static_cast<int>( buf.size() ), pipe ) )
        r.output += buf.data();
    const int status = pclose( pipe );
    r.exit_code = WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
    return r;
}

std::string q( const std::filesystem::path& p ) { return "'" + p.string() + "'"; }

image solid( int size, double value ) {
    image img( size, size );
    for( int y = 0; y < size; ++y )
        for( int x = 0; x < size; ++x )
            img.set( x, y, { value, value, value }, 1.0 );
    return img;
}

} // namespace

TEST( Cli, RenderMinimalConfig ) {
    temp_dir dir;
    slicecast::testing::write_file( dir / "scene.json",
                                    R"({"dataset": {"synthetic": "constant", "size": 8}, "tf": "transparent",
                                        "n_slices": 16, "buffer_resolution": 32})" );
    const run_result r = run_cli( "render --config " + q( dir / "scene.json" ) + " --out " + q( dir / "out.png" ) );
    ASSERT_EQ( r.exit_code, 0 ) << r.output;
    EXPECT_NE( r.output.find( "pass_count=17" ), std::string::npos ) << r.output;
    const image img = read_image( dir / "out.png" );
    EXPECT_EQ( img.width(), 512 );
    EXPECT_EQ( img.height(), 512 );
    for( float f : img.pixels() )
        ASSERT_EQ( f, 0.0f );
}

TEST( Cli, RenderOverridesAndLayer ) {
    temp_dir dir;
    const run_result r = run_cli( "render --shading shell --n-slices 8 --buffer-res 16 --viewport 32 24 --out " +
                                  q( dir / "o.ppm" ) + " --layer-out " + q( dir / "layer.png" ) + " --layer 3" );
    ASSERT_EQ( r.exit_code, 0 ) << r.output;
    EXPECT_NE( r.output.find( "method=shell" ), std::string::npos );
    EXPECT_EQ( read_image( dir / "o.ppm" ).width(), 32 );
    EXPECT_EQ( read_image( dir / "layer.png" ).width(), 16 );
}

TEST( Cli, UsageErrors ) {
    temp_dir dir;
    EXPECT_NE( run_cli( "render --shading toon --out " + q( dir / "x.png" ) ).exit_code, 0 );
    EXPECT_NE( run_cli( "render --config " + q( dir / "missing.json" ) ).exit_code, 0 );
    EXPECT_NE( run_cli( "frobnicate" ).exit_code, 0 );
    EXPECT_NE( run_cli( "bench --repeats 1 --out " + q( dir / "b.csv" ) ).exit_code, 0 );
    EXPECT_FALSE( std::filesystem::exists( dir / "x.png" ) );
}

TEST( Cli, Diff ) {
    temp_dir dir;
    write_png( dir / "white.png", solid( 8, 1.0 ) );
    write_png( dir / "black.png", solid( 8, 0.0 ) );
    const run_result same = run_cli( "diff " + q( dir / "white.png" ) + " " + q( dir / "white.png" ) );
    EXPECT_EQ( same.exit_code, 0 ) << same.output;
    const run_result differ = run_cli( "diff " + q( dir / "white.png" ) + " " + q( dir / "black.png" ) );
    EXPECT_EQ( differ.exit_code, 0 ); // no thresholds given
    EXPECT_NE( differ.output.find( "max_abs=1 " ), std::string::npos ) << differ.output;
    const run_result strict =
        run_cli( "diff " + q( dir / "white.png" ) + " " + q( dir / "black.png" ) + " --max-abs 0.5" );
    EXPECT_EQ( strict.exit_code, 1 ) << strict.output;
    const run_result loose =
        run_cli( "diff " + q( dir / "white.png" ) + " " + q( dir / "black.png" ) + " --max-abs 1 --mean-abs 1" );
    EXPECT_EQ( loose.exit_code, 0 ) << loose.output;
}

TEST( Cli, GenDatasetAndBench ) {
    temp_dir dir;
    const run_result g = run_cli( "gen-dataset --kind sphere-blob --size 10 --type u16 --out " + q( dir / "b.raw" ) );
    ASSERT_EQ( g.exit_code, 0 ) << g.output;
    const volume_dataset v = load_raw( dir / "b.raw", dir / "b.json" );
    EXPECT_EQ( v.dims(), ( volume_dims{ 10, 10, 10 } ) );
    EXPECT_EQ( v.source_type(), scalar_type::u16 );

    slicecast::testing::write_file( dir / "s.json", R"({"dataset": {"raw": "b.raw"}, "viewport": [16, 16]})" );
    const run_result b = run_cli( "bench --config " + q( dir / "s.json" ) +
                                  " --methods sbrc,has --slices 4,8 --resolutions 8 --repeats 3 --out " +
                                  q( dir / "b.csv" ) );
    ASSERT_EQ( b.exit_code, 0 ) << b.output;
    std::ifstream in( dir / "b.csv" );
    const auto rows = parse_bench_csv( in );
    ASSERT_EQ( rows.size(), 4u );
    EXPECT_EQ( rows[0].method, "sbrc" );
    EXPECT_EQ( rows[3].method, "has" );
    EXPECT_EQ( rows[3].pass_count, 16 );
}
