// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include "test_support.hpp"

#include <slicecast/error.hpp>
#include <slicecast/raycaster.hpp>
#include <slicecast/synthetic.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace slicecast;
using slicecast::testing::constant_volume;

namespace {

render_settings small_settings( shading_mode mode, int size = 48 ) {
    render_settings s;
    s.width = size;
    s.height = size;
    s.mode = mode;
    s.light = { normalize( vec3{ 0.5, -0.7, -0.5 } ), { 1, 1, 1 } };
    return s;
}

attenuation_buffer buffer_for( const volume_dataset& v, const transfer_function& tf, const render_settings& s,
                               int n = 64, int res = 64 ) {
    const light_camera cam = make_light_camera( s.light.direction, s.light.color, res, res );
    return build_attenuation_buffer( v, tf, cam, make_slice_stack( cam.light_dir, n ) );
}

} // namespace

TEST( ShadingMode, Names ) {
    for( shading_mode m : { shading_mode::none, shading_mode::phong, shading_mode::sbrc_shadow, shading_mode::shell,
                            shading_mode::cone, shading_mode::extinction } )
        EXPECT_EQ( parse_shading_mode( to_string( m ) ), m );
    EXPECT_EQ( parse_shading_mode( "sbrc" ), shading_mode::sbrc_shadow );
    EXPECT_THROW( parse_shading_mode( "toon" ), parameter_error );
    EXPECT_FALSE( needs_buffer( shading_mode::phong ) );
    EXPECT_TRUE( needs_buffer( shading_mode::cone ) );
}

TEST( Camera, CenterRayHitsTarget ) {
    const camera c;
    const vec3 d = c.ray_direction( 1.0, 1.0, 2, 2 );
    const vec3 mid = c.ray_direction( 0, 0, 1, 1 ); // the only pixel's center is the image center
    EXPECT_NEAR( mid.x, 0.0, 1e-12 );
    EXPECT_NEAR( mid.z, -1.0, 1e-12 );
    EXPECT_NEAR( length( d ), 1.0, 1e-12 );
    // Row 0 is the top.
    EXPECT_GT( c.ray_direction( 0, 0, 9, 9 ).y, 0.0 );
}

TEST( Render, TransparentVolumeIsEmpty ) {
    const image img = render( synthetic::sphere_blob( 16 ), transfer_function::preset( "transparent" ),
                              small_settings( shading_mode::none ) );
    for( float f : img.pixels() )
        ASSERT_EQ( f, 0.0f );
}

TEST( Render, OpaqueSilhouette ) {
    const render_settings s = small_settings( shading_mode::none );
    const image img = render( constant_volume( 8, 0.0f ), transfer_function::preset( "opaque" ), s );
    EXPECT_EQ( img.alpha( 24, 24 ), 1.0 );
    EXPECT_EQ( img.color( 24, 24 ), ( vec3{ 1, 1, 1 } ) );
    // The cube covers less than the full field of view at distance 2.5.
    EXPECT_EQ( img.alpha( 0, 0 ), 0.0 );
    EXPECT_EQ( img.alpha( 47, 47 ), 0.0 );
}

TEST( Render, UnitLightFieldMatchesUnshaded ) {
    const volume_dataset v = synthetic::sphere_blob( 24 );
    const transfer_function tf = transfer_function::preset( "blob" );
    const render_settings plain = small_settings( shading_mode::none );
    const render_settings shadow = small_settings( shading_mode::sbrc_shadow );
    // A buffer built from an empty volume transmits everything.
    const attenuation_buffer b = buffer_for( constant_volume( 4, 0.0f ), tf, shadow );
    EXPECT_EQ( render( v, tf, plain ).hash(), render( v, tf, shadow, &b ).hash() );
}

TEST( Render, ShadowsDarken ) {
    const volume_dataset v = synthetic::sphere_blob( 24 );
    const transfer_function tf = transfer_function::preset( "blob" );
    const render_settings s = small_settings( shading_mode::sbrc_shadow );
    const attenuation_buffer b = buffer_for( v, tf, s );
    const image lit = render( v, tf, small_settings( shading_mode::none ) );
    const image shadowed = render( v, tf, s, &b );
    double sum_lit = 0, sum_shadowed = 0;
    for( int y = 0; y < lit.height(); ++y )
        for( int x = 0; x < lit.width(); ++x ) {
            EXPECT_LE( shadowed.color( x, y ).x, lit.color( x, y ).x + 1e-6 );
            EXPECT_EQ( shadowed.alpha( x, y ), lit.alpha( x, y ) );
            sum_lit += lit.color( x, y ).x;
            sum_shadowed += shadowed.color( x, y ).x;
        }
    EXPECT_LT( sum_shadowed, 0.9 * sum_lit );
}

TEST( Render, EarlyTerminationBound ) {
    const volume_dataset v = constant_volume( 8, 0.5f );
    const transfer_function tf = transfer_function::preset( "ramp" );
    render_settings s = small_settings( shading_mode::none, 16 );
    s.early_termination_alpha = 0.9;
    const image cut = render( v, tf, s );
    s.early_termination_alpha = 1.0;
    const image full = render( v, tf, s );
    // Opacity 0.5 per step: termination lands in [0.9, 0.95).
    EXPECT_GE( cut.alpha( 8, 8 ), 0.9 );
    EXPECT_LT( cut.alpha( 8, 8 ), 0.95 );
    for( int y = 0; y < 16; ++y )
        for( int x = 0; x < 16; ++x ) {
            EXPECT_LE( std::abs( full.alpha( x, y ) - cut.alpha( x, y ) ), 0.1 + 1e-6 );
            EXPECT_LE( std::abs( full.color( x, y ).x - cut.color( x, y ).x ), 0.1 + 1e-6 );
        }
}

TEST( Render, ThreadCountDoesNotChangeImage ) {
    const volume_dataset v = synthetic::random_blobs( 24, 5 );
    const transfer_function tf = transfer_function::preset( "blob" );
    for( shading_mode m : { shading_mode::phong, shading_mode::shell, shading_mode::cone } ) {
        render_settings s = small_settings( m, 32 );
        const attenuation_buffer b = buffer_for( v, tf, s, 32, 32 );
        const attenuation_buffer* bp = needs_buffer( m ) ? &b : nullptr;
        s.threads = 1;
        const std::uint64_t h1 = render( v, tf, s, bp ).hash();
        s.threads = 4;
        EXPECT_EQ( render( v, tf, s, bp ).hash(), h1 ) << to_string( m );
    }
}

TEST( Render, ExtinctionMatchesShadow ) {
    const volume_dataset v = synthetic::sphere_blob( 24 );
    const transfer_function tf = transfer_function::preset( "blob" );
    const render_settings a = small_settings( shading_mode::sbrc_shadow );
    const render_settings e = small_settings( shading_mode::extinction );
    const attenuation_buffer b = buffer_for( v, tf, a );
    const image_diff d = diff_images( render( v, tf, a, &b ), render( v, tf, e, &b ) );
    EXPECT_LT( d.max_abs, 1e-4 );
}

TEST( Render, ConfigurationErrors ) {
    const volume_dataset v = constant_volume( 4, 0.5f );
    const transfer_function tf = transfer_function::preset( "ramp" );
    const render_settings shadow = small_settings( shading_mode::sbrc_shadow, 8 );
    const attenuation_buffer b = buffer_for( v, tf, shadow, 8, 8 );
    EXPECT_THROW( render( v, tf, shadow ), configuration_error );
    EXPECT_THROW( render( v, tf, small_settings( shading_mode::phong, 8 ), &b ), configuration_error );
    render_settings turned = shadow;
    turned.light.direction = { 0, 0, 1 };
    EXPECT_THROW( render( v, tf, turned, &b ), configuration_error );
}

TEST( Render, ParameterErrors ) {
    const volume_dataset v = constant_volume( 4, 0.5f );
    const transfer_function tf = transfer_function::preset( "ramp" );
    render_settings s = small_settings( shading_mode::none, 8 );
    s.width = 0;
    EXPECT_THROW( render( v, tf, s ), parameter_error );
    s = small_settings( shading_mode::none, 8 );
    s.step = 0.0;
    EXPECT_THROW( render( v, tf, s ), parameter_error );
    s = small_settings( shading_mode::none, 8 );
    s.early_termination_alpha = 1.5;
    EXPECT_THROW( render( v, tf, s ), parameter_error );
}
