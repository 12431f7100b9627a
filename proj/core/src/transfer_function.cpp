// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/transfer_function.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace slicecast {

transfer_function::transfer_function( std::vector<control_point> points )
    : m_points( std::move( points ) ) {
    if( m_points.size() < 2 )
        throw parameter_error( "transfer function needs at least two control points" );
    if( m_points.front().x != 0.0 || m_points.back().x != 1.0 )
        throw parameter_error( "transfer function control points must start at 0 and end at 1" );
    for( std::size_t i = 0; i < m_points.size(); ++i ) {
        if( i > 0 && !( m_points[i].x > m_points[i - 1].x ) )
            throw parameter_error( "transfer function control points must be strictly increasing" );
        for( double c : m_points[i].rgba )
            if( !( c >= 0.0 && c <= 1.0 ) )
                throw parameter_error( "transfer function components must lie in [0,1]" );
    }

    std::size_t seg = 0;
    for( int k = 0; k < lut_size; ++k ) {
        const double x = static_cast<double>( k ) / ( lut_size - 1 );
        while( seg + 2 < m_points.size() && x > m_points[seg + 1].x )
            ++seg;
        const auto& a = m_points[seg];
        const auto& b = m_points[seg + 1];
        const double t = std::clamp( ( x - a.x ) / ( b.x - a.x ), 0.0, 1.0 );
        for( std::size_t c = 0; c < 4; ++c )
            m_lut[static_cast<std::size_t>( k )][c] = static_cast<float>( a.rgba[c] + ( b.rgba[c] - a.rgba[c] ) * t );
    }
}

transfer_function transfer_function::from_json( std::string_view text ) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse( text );
    } catch( const nlohmann::json::exception& e ) {
        throw format_error( std::string( "transfer function is not valid JSON: " ) + e.what() );
    }
    if( !j.is_array() )
        throw format_error( "transfer function must be a JSON array of control points" );
    std::vector<control_point> pts;
    try {
        for( const auto& e : j ) {
            control_point cp;
            cp.x = e.at( "x" ).get<double>();
            const auto& rgba = e.at( "rgba" );
            if( !rgba.is_array() || rgba.size() != 4 )
                throw format_error( "control point 'rgba' must have four components" );
            for( std::size_t c = 0; c < 4; ++c )
                cp.rgba[c] = rgba[c].get<double>();
            pts.push_back( cp );
        }
    } catch( const nlohmann::json::exception& e ) {
        throw format_error( std::string( "malformed transfer function: " ) + e.what() );
    }
    return transfer_function( std::move( pts ) );
}

transfer_function transfer_function::load( const std::filesystem::path& path ) {
    std::ifstream in( path );
    if( !in )
        throw io_error( "cannot open transfer function " + path.string() );
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json( ss.str() );
}

std::string transfer_function::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for( const auto& p : m_points )
        j.push_back( { { "x", p.x }, { "rgba", p.rgba } } );
    return j.dump();
}

transfer_function transfer_function::preset( std::string_view name ) {
    using cp = control_point;
    if( name == "ramp" )
        return transfer_function( { cp{ 0.0, { 0, 0, 0, 0 } }, cp{ 1.0, { 1, 1, 1, 1 } } } );
    if( name == "transparent" )
        return transfer_function( { cp{ 0.0, { 0, 0, 0, 0 } }, cp{ 1.0, { 1, 1, 1, 0 } } } );
    if( name == "opaque" )
        return transfer_function( { cp{ 0.0, { 1, 1, 1, 1 } }, cp{ 1.0, { 1, 1, 1, 1 } } } );
    if( name == "engine" )
        return transfer_function( { cp{ 0.0, { 0, 0, 0, 0 } },
                                    cp{ 0.25, { 0.75, 0.45, 0.25, 0.0 } },
                                    cp{ 0.35, { 0.85, 0.55, 0.3, 0.08 } },
                                    cp{ 0.65, { 0.9, 0.8, 0.7, 0.25 } },
                                    cp{ 1.0, { 1.0, 0.98, 0.95, 0.7 } } } );
    if( name == "blob" )
        return transfer_function( { cp{ 0.0, { 0, 0, 0, 0 } },
                                    cp{ 0.15, { 0.9, 0.6, 0.4, 0.0 } },
                                    cp{ 0.6, { 0.95, 0.8, 0.6, 0.15 } },
                                    cp{ 1.0, { 1.0, 0.95, 0.9, 0.5 } } } );
    if( name == "bone" )
        return transfer_function( { cp{ 0.0, { 0, 0, 0, 0 } },
                                    cp{ 0.3, { 0.8, 0.7, 0.6, 0.0 } },
                                    cp{ 0.5, { 0.95, 0.9, 0.85, 0.6 } },
                                    cp{ 1.0, { 1.0, 1.0, 1.0, 0.95 } } } );
    throw parameter_error( "unknown transfer function preset '" + std::string( name ) + "'" );
}

std::vector<std::string> transfer_function::preset_names() {
    return { "ramp", "engine", "blob", "bone", "opaque", "transparent" };
}

double correct_opacity( double alpha, double ratio ) {
    if( alpha <= 0.0 )
        return 0.0;
    if( alpha >= 1.0 )
        return 1.0;
    if( ratio == 1.0 )
        return alpha;
    return 1.0 - std::pow( 1.0 - alpha, ratio );
}

classified_sample correct_sample( const classified_sample& s, double ratio ) {
    if( s.opacity <= 0.0 )
        return { {}, 0.0 };
    const double a = correct_opacity( s.opacity, ratio );
    return { s.emission * ( a / s.opacity ), a };
}

} // namespace slicecast
