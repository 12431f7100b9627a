// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include "test_support.hpp"

#include <slicecast/error.hpp>
#include <slicecast/slicing.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace slicecast;

namespace {

/// Every edge-plane intersection of the unit cube, built from scratch by
/// enumerating vertex pairs that differ in exactly one coordinate.
std::vector<vec3> brute_force_hits( const vec3& n, double offset ) {
    std::vector<vec3> hits;
    for( int a = 0; a < 8; ++a )
        for( int b = a + 1; b < 8; ++b ) {
            const int diff = a ^ b;
            if( diff != 1 && diff != 2 && diff != 4 )
                continue;
            const vec3 pa{ double( a & 1 ), double( ( a >> 1 ) & 1 ), double( ( a >> 2 ) & 1 ) };
            const vec3 pb{ double( b & 1 ), double( ( b >> 1 ) & 1 ), double( ( b >> 2 ) & 1 ) };
            const double da = dot( n, pa ) - offset;
            const double db = dot( n, pb ) - offset;
            if( ( da > 0 && db > 0 ) || ( da < 0 && db < 0 ) || da == db )
                continue;
            const vec3 p = pa + ( pb - pa ) * ( da / ( da - db ) );
            bool dup = false;
            for( const vec3& q : hits )
                dup = dup || length( q - p ) < 1e-7;
            if( !dup )
                hits.push_back( p );
        }
    return hits;
}

bool same_vertex_set( const std::vector<vec3>& a, const std::vector<vec3>& b, double tol ) {
    if( a.size() != b.size() )
        return false;
    for( const vec3& p : a ) {
        bool found = false;
        for( const vec3& q : b )
            found = found || length( p - q ) < tol;
        if( !found )
            return false;
    }
    return true;
}

double on_cube_residual( const vec3& p ) {
    double outside = 0.0;
    double face = 1.0;
    for( int c = 0; c < 3; ++c ) {
        outside = std::max( { outside, -p[c], p[c] - 1.0 } );
        face = std::min( { face, std::abs( p[c] ), std::abs( p[c] - 1.0 ) } );
    }
    return std::max( outside, face );
}

/// True if consecutive fan edges all turn the same way about `n`.
bool convex_order( const std::vector<vec3>& v, const vec3& n ) {
    const std::size_t m = v.size();
    int sign = 0;
    for( std::size_t i = 0; i < m; ++i ) {
        const vec3 e0 = v[( i + 1 ) % m] - v[i];
        const vec3 e1 = v[( i + 2 ) % m] - v[( i + 1 ) % m];
        const double t = dot( cross( e0, e1 ), n );
        if( std::abs( t ) < 1e-12 )
            return false;
        const int s = t > 0 ? 1 : -1;
        if( sign != 0 && s != sign )
            return false;
        sign = s;
    }
    return true;
}

} // namespace

TEST( SliceStack, AxisAligned ) {
    for( int n : { 1, 4, 17 } ) {
        const slice_stack_spec s = make_slice_stack( { 0, 0, 1 }, n );
        EXPECT_DOUBLE_EQ( s.d_min, 0.0 );
        EXPECT_DOUBLE_EQ( s.d_max, 1.0 );
        EXPECT_EQ( s.plane_offsets.size(), static_cast<std::size_t>( n ) );
    }
}

TEST( SliceStack, Diagonal ) {
    const slice_stack_spec s = make_slice_stack( { 1, 1, 1 }, 8 );
    EXPECT_NEAR( s.d_min, 0.0, 1e-15 );
    EXPECT_NEAR( s.d_max, std::sqrt( 3.0 ), 1e-12 );
    EXPECT_NEAR( length( s.light_dir ), 1.0, 1e-12 );
}

TEST( SliceStack, CenteredOffsets ) {
    const slice_stack_spec s = make_slice_stack( { 0, 0, 1 }, 4 );
    const double expected[4] = { 0.125, 0.375, 0.625, 0.875 };
    for( int k = 0; k < 4; ++k )
        EXPECT_DOUBLE_EQ( s.plane_offsets[static_cast<std::size_t>( k )], expected[k] );
}

TEST( SliceStack, Errors ) {
    EXPECT_THROW( make_slice_stack( { 0, 0, 0 }, 4 ), parameter_error );
    EXPECT_THROW( make_slice_stack( { 0, 0, 1 }, 0 ), parameter_error );
}

TEST( SlicePolygon, AxisAlignedSquare ) {
    const slice_polygon p = intersect_unit_cube( { 0, 0, 1 }, 0.5 );
    ASSERT_FALSE( p.degenerate );
    EXPECT_EQ( p.vertices.size(), 4u );
    EXPECT_EQ( p.triangle_count(), 2 );
    EXPECT_TRUE( same_vertex_set( p.vertices, { { 0, 0, .5 }, { 1, 0, .5 }, { 1, 1, .5 }, { 0, 1, .5 } }, 1e-12 ) );
    EXPECT_NEAR( polygon_area( p ), 1.0, 1e-12 );
}

TEST( SlicePolygon, DiagonalHexagon ) {
    const vec3 n = normalize( { 1, 1, 1 } );
    const slice_polygon p = intersect_unit_cube( n, std::sqrt( 3.0 ) / 2.0 );
    ASSERT_EQ( p.vertices.size(), 6u );
    EXPECT_TRUE( same_vertex_set( p.vertices, brute_force_hits( n, std::sqrt( 3.0 ) / 2.0 ), 1e-9 ) );
    // Regular: every vertex equidistant from the cube center.
    for( const vec3& v : p.vertices )
        EXPECT_NEAR( length( v - vec3{ 0.5, 0.5, 0.5 } ), std::sqrt( 0.5 ), 1e-12 );
}

TEST( SlicePolygon, CornerTriangle ) {
    const vec3 n = normalize( { 1, 1, 1 } );
    const slice_polygon p = intersect_unit_cube( n, 0.1 );
    ASSERT_EQ( p.vertices.size(), 3u );
    EXPECT_TRUE( same_vertex_set( p.vertices, brute_force_hits( n, 0.1 ), 1e-9 ) );
    for( const vec3& v : p.vertices )
        EXPECT_LT( length( v ), 0.2 );
}

TEST( SlicePolygon, DegenerateGrazing ) {
    // Touches only the corner (0,0,0).
    const slice_polygon corner = intersect_unit_cube( normalize( { 1, 1, 1 } ), 0.0 );
    EXPECT_TRUE( corner.degenerate );
    EXPECT_TRUE( corner.vertices.empty() );
    // Misses the cube entirely.
    const slice_polygon miss = intersect_unit_cube( { 0, 0, 1 }, 2.0 );
    EXPECT_TRUE( miss.degenerate );
}

TEST( SlicePolygon, IndexOutOfRange ) {
    const slice_stack_spec s = make_slice_stack( { 0, 0, 1 }, 4 );
    EXPECT_THROW( make_slice_polygon( s, -1 ), parameter_error );
    EXPECT_THROW( make_slice_polygon( s, 4 ), parameter_error );
    EXPECT_EQ( make_slice_polygon( s, 3 ).slice_index, 3 );
}

TEST( SlicePolygon, TriangulationCoversArea ) {
    const vec3 n = normalize( { 0.3, 0.8, -0.5 } );
    const slice_polygon p = intersect_unit_cube( n, 0.2 );
    double area = 0.0;
    for( const auto& t : triangulate( p ) )
        area += 0.5 * length( cross( t[1] - t[0], t[2] - t[0] ) );
    EXPECT_NEAR( area, polygon_area( p ), 1e-12 );
    EXPECT_EQ( static_cast<int>( triangulate( p ).size() ), p.triangle_count() );
}

TEST( SlicePolygon, RandomPlanesMatchBruteForce ) {
    std::mt19937_64 rng( 42 );
    std::normal_distribution<double> g;
    for( int i = 0; i < 1000; ++i ) {
        const vec3 n = normalize( { g( rng ), g( rng ), g( rng ) } );
        const slice_stack_spec s = make_slice_stack( n, 1 );
        const double offset = slicecast::testing::uniform( rng, s.d_min, s.d_max );
        const slice_polygon p = intersect_unit_cube( n, offset );
        ASSERT_FALSE( p.degenerate ) << i;
        ASSERT_GE( p.vertices.size(), 3u );
        ASSERT_LE( p.vertices.size(), 6u );
        for( const vec3& v : p.vertices ) {
            EXPECT_LT( std::abs( dot( n, v ) - offset ), 1e-6 );
            EXPECT_LT( on_cube_residual( v ), 1e-6 );
        }
        EXPECT_TRUE( same_vertex_set( p.vertices, brute_force_hits( n, offset ), 1e-6 ) ) << i;
        EXPECT_TRUE( convex_order( p.vertices, n ) ) << i;
    }
}

TEST( SlicePolygon, AreaContinuousInOffset ) {
    const vec3 n = normalize( { 0.2, 0.5, 0.9 } );
    const slice_stack_spec s = make_slice_stack( n, 1 );
    double prev = polygon_area( intersect_unit_cube( n, s.d_min + 1e-4 ) );
    for( double t = s.d_min + 2e-4; t < s.d_max - 1e-4; t += 1e-4 ) {
        const double a = polygon_area( intersect_unit_cube( n, t ) );
        EXPECT_LT( std::abs( a - prev ), 1e-2 );
        prev = a;
    }
}

TEST( SliceIndex, Examples ) {
    const slice_stack_spec s = make_slice_stack( { 0, 0, 1 }, 4 );
    EXPECT_DOUBLE_EQ( slice_index( s, { 0.3, 0.7, 0.0 } ), 0.0 );
    EXPECT_DOUBLE_EQ( slice_index( s, { 0.3, 0.7, 0.5 } ), 2.0 );
    EXPECT_DOUBLE_EQ( slice_index( s, { 0.3, 0.7, 1.0 } ), 4.0 );
    // Discrete mode clamps the upper bound to n - 1.
    EXPECT_EQ( std::min( static_cast<int>( slice_index( s, { 0, 0, 1 } ) ), s.n_slices - 1 ), 3 );
}

TEST( SliceIndex, PlaneKMapsToKPlusHalf ) {
    const slice_stack_spec s = make_slice_stack( { 0.4, -0.3, 0.8 }, 37 );
    for( int k = 0; k < s.n_slices; ++k ) {
        const slice_polygon p = make_slice_polygon( s, k );
        for( const vec3& v : p.vertices )
            EXPECT_NEAR( slice_index( s, v ), k + 0.5, 1e-9 );
    }
}
