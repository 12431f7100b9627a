// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/synthetic.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace slicecast::synthetic {

namespace {

template <class F>
volume_dataset generate( int n, F&& f ) {
    if( n < 2 )
        throw parameter_error( "synthetic volume size must be >= 2" );
    std::vector<float> data( static_cast<std::size_t>( n ) * n * n );
    std::size_t i = 0;
    for( int z = 0; z < n; ++z )
        for( int y = 0; y < n; ++y )
            for( int x = 0; x < n; ++x ) {
                const vec3 p{ ( x + 0.5 ) / n, ( y + 0.5 ) / n, ( z + 0.5 ) / n };
                data[i++] = static_cast<float>( std::clamp( f( p ), 0.0, 1.0 ) );
            }
    return volume_dataset::from_normalized( { n, n, n }, std::move( data ) );
}

// Uniform double in [0,1) from the top 53 bits; independent of the standard
// library's distribution implementation.
double uniform01( std::mt19937_64& rng ) { return static_cast<double>( rng() >> 11 ) * 0x1.0p-53; }

} // namespace

volume_dataset constant( int n, float value ) {
    return generate( n, [value]( const vec3& ) { return static_cast<double>( value ); } );
}

volume_dataset linear_ramp( int n, int axis ) {
    if( axis < 0 || axis > 2 )
        throw parameter_error( "ramp axis must be 0, 1 or 2" );
    return generate( n, [axis]( const vec3& p ) { return p[axis]; } );
}

volume_dataset sphere_blob( int n ) {
    return generate( n, []( const vec3& p ) {
        const double r = length( p - vec3{ 0.5, 0.5, 0.5 } );
        return std::exp( -( r * r ) / ( 2.0 * 0.16 * 0.16 ) );
    } );
}

volume_dataset slab( int n, double z0, double z1, float value ) {
    return generate( n, [=]( const vec3& p ) { return p.z >= z0 && p.z <= z1 ? static_cast<double>( value ) : 0.0; } );
}

volume_dataset engine_block( int n ) {
    return generate( n, []( const vec3& p ) {
        const bool in_block = p.x > 0.15 && p.x < 0.85 && p.y > 0.25 && p.y < 0.75 && p.z > 0.2 && p.z < 0.8;
        if( !in_block )
            return 0.0;
        // Two bores along z and one along x.
        for( double cx : { 0.35, 0.65 } ) {
            const double dx = p.x - cx;
            const double dy = p.y - 0.5;
            if( dx * dx + dy * dy < 0.1 * 0.1 )
                return 0.0;
        }
        const double dy = p.y - 0.5;
        const double dz = p.z - 0.5;
        if( dy * dy + dz * dz < 0.06 * 0.06 )
            return 0.0;
        const double core = length( vec3{ p.x - 0.5, 0.0, p.z - 0.5 } ) < 0.12 ? 0.35 : 0.0;
        return 0.55 + core;
    } );
}

volume_dataset random_blobs( int n, std::uint64_t seed, int count ) {
    struct blob {
        vec3 c;
        double r;
        double a;
    };
    std::mt19937_64 rng( seed );
    std::vector<blob> blobs;
    for( int i = 0; i < count; ++i ) {
        blob b;
        b.c = { 0.2 + 0.6 * uniform01( rng ), 0.2 + 0.6 * uniform01( rng ), 0.2 + 0.6 * uniform01( rng ) };
        b.r = 0.06 + 0.12 * uniform01( rng );
        b.a = 0.4 + 0.6 * uniform01( rng );
        blobs.push_back( b );
    }
    return generate( n, [&]( const vec3& p ) {
        double v = 0.0;
        for( const auto& b : blobs ) {
            const vec3 d = p - b.c;
            v += b.a * std::exp( -dot( d, d ) / ( 2.0 * b.r * b.r ) );
        }
        return v;
    } );
}

volume_dataset make( std::string_view kind, int n, std::uint64_t seed ) {
    if( kind == "constant" )
        return constant( n, 0.5f );
    if( kind == "sphere-blob" )
        return sphere_blob( n );
    if( kind == "slab" )
        return slab( n, 0.3, 0.5 );
    if( kind == "engine" )
        return engine_block( n );
    if( kind == "random-blob" )
        return random_blobs( n, seed );
    throw parameter_error( "unknown synthetic dataset kind '" + std::string( kind ) + "'" );
}

std::vector<std::string> kinds() { return { "constant", "sphere-blob", "slab", "engine", "random-blob" }; }

} // namespace slicecast::synthetic
