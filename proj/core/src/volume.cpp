// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/volume.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

namespace slicecast {

std::string_view to_string( scalar_type t ) {
    switch( t ) {
    case scalar_type::u8:
        return "u8";
    case scalar_type::u16:
        return "u16";
    case scalar_type::f32:
        return "f32";
    }
    return "u8";
}

scalar_type parse_scalar_type( std::string_view s ) {
    if( s == "u8" )
        return scalar_type::u8;
    if( s == "u16" )
        return scalar_type::u16;
    if( s == "f32" )
        return scalar_type::f32;
    throw format_error( "unsupported scalar_type '" + std::string( s ) + "' (expected u8, u16 or f32)" );
}

std::size_t scalar_size( scalar_type t ) {
    switch( t ) {
    case scalar_type::u8:
        return 1;
    case scalar_type::u16:
        return 2;
    case scalar_type::f32:
        return 4;
    }
    return 1;
}

dataset_descriptor dataset_descriptor::from_json( std::string_view text ) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse( text );
    } catch( const nlohmann::json::exception& e ) {
        throw descriptor_error( std::string( "descriptor is not valid JSON: " ) + e.what() );
    }
    if( !j.is_object() )
        throw descriptor_error( "descriptor must be a JSON object" );

    dataset_descriptor d;
    try {
        const auto& dims = j.at( "dims" );
        if( !dims.is_array() || dims.size() != 3 )
            throw descriptor_error( "descriptor 'dims' must be an array of three integers" );
        for( std::size_t i = 0; i < 3; ++i ) {
            if( !dims[i].is_number_integer() )
                throw descriptor_error( "descriptor 'dims' must be an array of three integers" );
            d.dims[i] = dims[i].get<int>();
            if( d.dims[i] < 2 )
                throw descriptor_error( "descriptor dims must all be >= 2" );
        }
        if( !j.at( "scalar_type" ).is_string() )
            throw descriptor_error( "descriptor 'scalar_type' must be a string" );
        d.type = parse_scalar_type( j.at( "scalar_type" ).get<std::string>() );
        if( j.contains( "spacing" ) ) {
            const auto& sp = j.at( "spacing" );
            if( !sp.is_array() || sp.size() != 3 )
                throw descriptor_error( "descriptor 'spacing' must be an array of three numbers" );
            for( int i = 0; i < 3; ++i ) {
                d.spacing[i] = sp[static_cast<std::size_t>( i )].get<double>();
                if( !( d.spacing[i] > 0.0 ) || !std::isfinite( d.spacing[i] ) )
                    throw descriptor_error( "descriptor spacing must be positive" );
            }
        }
    } catch( const nlohmann::json::exception& e ) {
        throw descriptor_error( std::string( "malformed descriptor: " ) + e.what() );
    }
    return d;
}

dataset_descriptor dataset_descriptor::load( const std::filesystem::path& path ) {
    std::ifstream in( path, std::ios::binary );
    if( !in )
        throw io_error( "cannot open descriptor " + path.string() );
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json( ss.str() );
}

std::string dataset_descriptor::to_json() const {
    nlohmann::json j;
    j["dims"] = { dims[0], dims[1], dims[2] };
    j["scalar_type"] = std::string( to_string( type ) );
    j["spacing"] = { spacing.x, spacing.y, spacing.z };
    return j.dump();
}

std::size_t dataset_descriptor::voxel_count() const {
    return static_cast<std::size_t>( dims[0] ) * static_cast<std::size_t>( dims[1] ) *
           static_cast<std::size_t>( dims[2] );
}

volume_dataset::volume_dataset( volume_dims dims, vec3 spacing, std::vector<float> normalized,
                                scalar_type source_type, std::pair<double, double> value_range )
    : m_dims( dims )
    , m_spacing( spacing )
    , m_type( source_type )
    , m_range( value_range )
    , m_data( std::move( normalized ) ) {
    for( int d : m_dims )
        if( d < 2 )
            throw parameter_error( "volume dims must all be >= 2" );
    for( int i = 0; i < 3; ++i )
        if( !( m_spacing[i] > 0.0 ) )
            throw parameter_error( "volume spacing must be positive" );
    const std::size_t expected = static_cast<std::size_t>( dims[0] ) * static_cast<std::size_t>( dims[1] ) *
                                 static_cast<std::size_t>( dims[2] );
    if( m_data.size() != expected )
        throw parameter_error( "volume data length does not match dims" );
    for( float f : m_data )
        if( !( f >= 0.0f && f <= 1.0f ) )
            throw parameter_error( "normalized volume values must lie in [0,1]" );

    vec3 extent;
    for( int i = 0; i < 3; ++i )
        extent[i] = m_dims[i] * m_spacing[i];
    const double longest = std::max( { extent.x, extent.y, extent.z } );
    for( int i = 0; i < 3; ++i ) {
        m_box_size[i] = extent[i] / longest;
        m_box_min[i] = 0.5 * ( 1.0 - m_box_size[i] );
        m_world_to_voxel[i] = m_dims[i] / m_box_size[i];
    }
}

volume_dataset volume_dataset::from_normalized( volume_dims dims, std::vector<float> normalized, vec3 spacing ) {
    std::pair<double, double> range{ 0.0, 0.0 };
    if( !normalized.empty() ) {
        const auto [lo, hi] = std::minmax_element( normalized.begin(), normalized.end() );
        range = { *lo, *hi };
    }
    return volume_dataset( dims, spacing, std::move( normalized ), scalar_type::f32, range );
}

vec3 volume_dataset::voxel_size() const {
    return { m_box_size.x / m_dims[0], m_box_size.y / m_dims[1], m_box_size.z / m_dims[2] };
}

vec3 volume_dataset::voxel_center( int x, int y, int z ) const {
    const vec3 vs = voxel_size();
    return { m_box_min.x + ( x + 0.5 ) * vs.x, m_box_min.y + ( y + 0.5 ) * vs.y, m_box_min.z + ( z + 0.5 ) * vs.z };
}

double volume_dataset::sample( const vec3& p ) const {
    const vec3 rel = p - m_box_min;
    if( rel.x < 0.0 || rel.y < 0.0 || rel.z < 0.0 || rel.x > m_box_size.x || rel.y > m_box_size.y ||
        rel.z > m_box_size.z )
        return 0.0;

    int i0[3];
    double f[3];
    for( int a = 0; a < 3; ++a ) {
        const int n = m_dims[a];
        double u = rel[a] * m_world_to_voxel[a] - 0.5;
        u = std::clamp( u, 0.0, static_cast<double>( n - 1 ) );
        int i = static_cast<int>( u );
        if( i > n - 2 )
            i = n - 2;
        i0[a] = i;
        f[a] = u - i;
    }

    const std::size_t sx = 1;
    const std::size_t sy = static_cast<std::size_t>( m_dims[0] );
    const std::size_t sz = sy * static_cast<std::size_t>( m_dims[1] );
    const float* c = m_data.data() + index( i0[0], i0[1], i0[2] );

    const double c00 = c[0] + ( c[sx] - c[0] ) * f[0];
    const double c10 = c[sy] + ( c[sy + sx] - c[sy] ) * f[0];
    const double c01 = c[sz] + ( c[sz + sx] - c[sz] ) * f[0];
    const double c11 = c[sz + sy] + ( c[sz + sy + sx] - c[sz + sy] ) * f[0];
    const double c0 = c00 + ( c10 - c00 ) * f[1];
    const double c1 = c01 + ( c11 - c01 ) * f[1];
    return c0 + ( c1 - c0 ) * f[2];
}

vec3 volume_dataset::gradient( const vec3& p ) const {
    const vec3 vs = voxel_size();
    vec3 lo_center;
    vec3 hi_center;
    for( int a = 0; a < 3; ++a ) {
        lo_center[a] = m_box_min[a] + 0.5 * vs[a];
        hi_center[a] = m_box_min[a] + m_box_size[a] - 0.5 * vs[a];
    }
    const vec3 q = max( lo_center, min( p, hi_center ) );

    vec3 g;
    for( int a = 0; a < 3; ++a ) {
        vec3 fwd = q;
        vec3 bwd = q;
        fwd[a] = std::min( q[a] + vs[a], hi_center[a] );
        bwd[a] = std::max( q[a] - vs[a], lo_center[a] );
        const double h = fwd[a] - bwd[a];
        g[a] = h > 0.0 ? ( sample( fwd ) - sample( bwd ) ) / h : 0.0;
    }
    return g;
}

namespace {

template <class T>
T read_le( const unsigned char* p ) {
    T v;
    if constexpr( std::endian::native == std::endian::little ) {
        std::memcpy( &v, p, sizeof( T ) );
    } else {
        unsigned char tmp[sizeof( T )];
        for( std::size_t i = 0; i < sizeof( T ); ++i )
            tmp[i] = p[sizeof( T ) - 1 - i];
        std::memcpy( &v, tmp, sizeof( T ) );
    }
    return v;
}

template <class T>
void write_le( std::ostream& out, T v ) {
    unsigned char tmp[sizeof( T )];
    std::memcpy( tmp, &v, sizeof( T ) );
    if constexpr( std::endian::native != std::endian::little )
        std::reverse( std::begin( tmp ), std::end( tmp ) );
    out.write( reinterpret_cast<const char*>( tmp ), sizeof( T ) );
}

} // namespace

volume_dataset load_raw( const std::filesystem::path& path, const dataset_descriptor& meta ) {
    for( int d : meta.dims )
        if( d < 2 )
            throw descriptor_error( "descriptor dims must all be >= 2" );

    std::ifstream in( path, std::ios::binary | std::ios::ate );
    if( !in )
        throw io_error( "cannot open raw file " + path.string() );
    const auto file_size = static_cast<std::size_t>( in.tellg() );
    if( file_size != meta.byte_size() )
        throw descriptor_error( "raw file " + path.string() + " has " + std::to_string( file_size ) +
                                " bytes but descriptor implies " + std::to_string( meta.byte_size() ) );
    in.seekg( 0 );
    std::vector<unsigned char> bytes( file_size );
    if( !in.read( reinterpret_cast<char*>( bytes.data() ), static_cast<std::streamsize>( file_size ) ) )
        throw io_error( "failed reading raw file " + path.string() );

    const std::size_t n = meta.voxel_count();
    std::vector<float> data( n );
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    switch( meta.type ) {
    case scalar_type::u8:
        for( std::size_t i = 0; i < n; ++i ) {
            const double raw = bytes[i];
            lo = std::min( lo, raw );
            hi = std::max( hi, raw );
            data[i] = static_cast<float>( raw / 255.0 );
        }
        break;
    case scalar_type::u16:
        for( std::size_t i = 0; i < n; ++i ) {
            const double raw = read_le<std::uint16_t>( bytes.data() + 2 * i );
            lo = std::min( lo, raw );
            hi = std::max( hi, raw );
            data[i] = static_cast<float>( raw / 65535.0 );
        }
        break;
    case scalar_type::f32: {
        std::vector<float> raw( n );
        for( std::size_t i = 0; i < n; ++i ) {
            raw[i] = read_le<float>( bytes.data() + 4 * i );
            if( !std::isfinite( raw[i] ) )
                throw format_error( "f32 raw file contains non-finite values" );
            lo = std::min( lo, static_cast<double>( raw[i] ) );
            hi = std::max( hi, static_cast<double>( raw[i] ) );
        }
        const double span = hi - lo;
        for( std::size_t i = 0; i < n; ++i )
            data[i] = span > 0.0 ? static_cast<float>( std::clamp( ( raw[i] - lo ) / span, 0.0, 1.0 ) ) : 0.0f;
        break;
    }
    }
    return volume_dataset( meta.dims, meta.spacing, std::move( data ), meta.type, { lo, hi } );
}

volume_dataset load_raw( const std::filesystem::path& path, const std::filesystem::path& descriptor_path ) {
    return load_raw( path, dataset_descriptor::load( descriptor_path ) );
}

void save_raw( const std::filesystem::path& path, const volume_dataset& v, scalar_type type ) {
    std::ofstream out( path, std::ios::binary );
    if( !out )
        throw io_error( "cannot write raw file " + path.string() );
    for( float f : v.data() ) {
        switch( type ) {
        case scalar_type::u8:
            out.put( static_cast<char>( static_cast<unsigned char>( std::lround( f * 255.0 ) ) ) );
            break;
        case scalar_type::u16:
            write_le( out, static_cast<std::uint16_t>( std::lround( f * 65535.0 ) ) );
            break;
        case scalar_type::f32:
            write_le( out, f );
            break;
        }
    }
    if( !out )
        throw io_error( "failed writing raw file " + path.string() );

    dataset_descriptor d;
    d.dims = v.dims();
    d.type = type;
    d.spacing = v.spacing();
    auto meta_path = path;
    meta_path.replace_extension( ".json" );
    std::ofstream meta( meta_path );
    if( !meta )
        throw io_error( "cannot write descriptor " + meta_path.string() );
    meta << d.to_json() << '\n';
}

} // namespace slicecast
