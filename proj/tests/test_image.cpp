// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include "test_support.hpp"

#include <slicecast/error.hpp>
#include <slicecast/image.hpp>

#include <gtest/gtest.h>

using namespace slicecast;
using slicecast::testing::temp_dir;

namespace {

image gradient_image( int w, int h ) {
    image img( w, h );
    for( int y = 0; y < h; ++y )
        for( int x = 0; x < w; ++x ) {
            const double a = ( x + y ) % 3 == 0 ? 1.0 : 0.5;
            img.set( x, y, vec3{ double( x ) / w, double( y ) / h, 0.25 } * a, a );
        }
    return img;
}

} // namespace

TEST( Image, PngRoundTrip ) {
    temp_dir dir;
    const image img = gradient_image( 23, 17 );
    write_png( dir / "a.png", img );
    const image back = read_image( dir / "a.png" );
    ASSERT_EQ( back.width(), 23 );
    ASSERT_EQ( back.height(), 17 );
    EXPECT_LE( diff_images( img, back ).max_abs, 1.5 / 255.0 );
    EXPECT_EQ( decode_png( encode_png( img ) ).hash(), back.hash() );
}

TEST( Image, PpmRoundTrip ) {
    temp_dir dir;
    image img( 5, 4 );
    for( int y = 0; y < 4; ++y )
        for( int x = 0; x < 5; ++x )
            img.set( x, y, { x / 4.0, y / 3.0, 1.0 }, 1.0 );
    write_image( dir / "a.ppm", img );
    const image back = read_image( dir / "a.ppm" );
    EXPECT_LE( diff_images( img, back ).max_abs, 0.5 / 255.0 + 1e-7 );
}

TEST( Image, Errors ) {
    temp_dir dir;
    EXPECT_THROW( write_image( dir / "a.bmp", image( 2, 2 ) ), format_error );
    slicecast::testing::write_file( dir / "junk.png", "not an image" );
    EXPECT_THROW( read_image( dir / "junk.png" ), format_error );
    EXPECT_THROW( read_image( dir / "missing.png" ), io_error );
    EXPECT_THROW( diff_images( image( 2, 2 ), image( 3, 2 ) ), parameter_error );
}

TEST( Image, DiffExamples ) {
    image white( 4, 4 ), black( 4, 4 );
    for( int y = 0; y < 4; ++y )
        for( int x = 0; x < 4; ++x )
            white.set( x, y, { 1, 1, 1 }, 1 );
    EXPECT_EQ( diff_images( white, white ).max_abs, 0.0 );
    const image_diff d = diff_images( white, black );
    EXPECT_EQ( d.max_abs, 1.0 );
    EXPECT_EQ( d.mean_abs, 1.0 );
    black.set( 0, 0, { 1, 1, 1 }, 1 );
    EXPECT_NEAR( diff_images( white, black ).mean_abs, 15.0 / 16.0, 1e-12 );
}

TEST( Image, HashSeesSingleBit ) {
    image a( 3, 3 );
    const std::uint64_t h = a.hash();
    a.set( 2, 2, { 0, 0, 1e-30 }, 0 );
    EXPECT_NE( a.hash(), h );
}
