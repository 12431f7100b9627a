// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/slicing.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace slicecast {

slice_stack_spec make_slice_stack( const vec3& light_dir, int n_slices ) {
    const double len = length( light_dir );
    if( !( len > 0.0 ) || !std::isfinite( len ) )
        throw parameter_error( "slice direction must be a nonzero finite vector" );
    if( n_slices < 1 )
        throw parameter_error( "n_slices must be >= 1" );

    slice_stack_spec spec;
    spec.light_dir = light_dir / len;
    spec.n_slices = n_slices;
    spec.d_min = std::numeric_limits<double>::infinity();
    spec.d_max = -std::numeric_limits<double>::infinity();
    for( const vec3& v : unit_cube_vertices ) {
        const double d = dot( spec.light_dir, v );
        spec.d_min = std::min( spec.d_min, d );
        spec.d_max = std::max( spec.d_max, d );
    }
    const double step = spec.spacing();
    spec.plane_offsets.resize( static_cast<std::size_t>( n_slices ) );
    for( int k = 0; k < n_slices; ++k )
        spec.plane_offsets[static_cast<std::size_t>( k )] = spec.d_min + ( k + 0.5 ) * step;
    return spec;
}

slice_polygon intersect_unit_cube( const vec3& normal, double offset ) {
    slice_polygon poly;
    std::vector<vec3> hits;
    hits.reserve( 12 );

    for( const auto& e : unit_cube_edges ) {
        const vec3& a = unit_cube_vertices[static_cast<std::size_t>( e[0] )];
        const vec3& b = unit_cube_vertices[static_cast<std::size_t>( e[1] )];
        const double da = dot( normal, a ) - offset;
        const double db = dot( normal, b ) - offset;
        if( ( da > 0.0 && db > 0.0 ) || ( da < 0.0 && db < 0.0 ) )
            continue;
        const double denom = da - db;
        vec3 p;
        if( denom == 0.0 ) {
            // Edge lies in the plane; its endpoints are picked up by the
            // neighbouring edges.
            continue;
        }
        const double t = std::clamp( da / denom, 0.0, 1.0 );
        p = a + ( b - a ) * t;

        const bool dup = std::any_of( hits.begin(), hits.end(), [&]( const vec3& q ) {
            return length( q - p ) <= slice_vertex_merge_distance;
        } );
        if( !dup )
            hits.push_back( p );
    }

    if( hits.size() < 3 )
        return poly;

    vec3 centroid;
    for( const vec3& h : hits )
        centroid += h;
    centroid = centroid / static_cast<double>( hits.size() );

    // In-plane basis: any axis not parallel to the normal.
    const vec3 helper = std::abs( normal.x ) < 0.9 ? vec3{ 1, 0, 0 } : vec3{ 0, 1, 0 };
    const vec3 e1 = normalize( cross( normal, helper ) );
    const vec3 e2 = cross( normal, e1 );

    std::vector<std::pair<double, vec3>> keyed;
    keyed.reserve( hits.size() );
    for( const vec3& h : hits ) {
        const vec3 d = h - centroid;
        keyed.emplace_back( std::atan2( dot( d, e2 ), dot( d, e1 ) ), h );
    }
    std::sort( keyed.begin(), keyed.end(), []( const auto& l, const auto& r ) { return l.first < r.first; } );

    poly.vertices.reserve( keyed.size() );
    for( const auto& kv : keyed )
        poly.vertices.push_back( kv.second );

    // Collinear hits (plane touching only an edge) give zero area.
    if( polygon_area( poly ) <= 1e-12 ) {
        poly.vertices.clear();
        return poly;
    }
    poly.degenerate = false;
    return poly;
}

slice_polygon make_slice_polygon( const slice_stack_spec& spec, int k ) {
    if( k < 0 || k >= spec.n_slices )
        throw parameter_error( "slice index " + std::to_string( k ) + " out of range [0, " +
                               std::to_string( spec.n_slices ) + ")" );
    slice_polygon poly = intersect_unit_cube( spec.light_dir, spec.plane_offsets[static_cast<std::size_t>( k )] );
    poly.slice_index = k;
    return poly;
}

std::vector<std::array<vec3, 3>> triangulate( const slice_polygon& poly ) {
    std::vector<std::array<vec3, 3>> tris;
    for( std::size_t i = 1; i + 1 < poly.vertices.size(); ++i )
        tris.push_back( { poly.vertices[0], poly.vertices[i], poly.vertices[i + 1] } );
    return tris;
}

double polygon_area( const slice_polygon& poly ) {
    vec3 sum;
    for( const auto& t : triangulate( poly ) )
        sum += cross( t[1] - t[0], t[2] - t[0] );
    return 0.5 * length( sum );
}

} // namespace slicecast
