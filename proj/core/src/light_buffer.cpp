// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/image.hpp>
#include <slicecast/light_buffer.hpp>
#include <slicecast/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace slicecast {

light_camera make_light_camera( const vec3& light_dir, const vec3& light_color, int width, int height ) {
    const double len = length( light_dir );
    if( !( len > 0.0 ) || !std::isfinite( len ) )
        throw parameter_error( "light direction must be a nonzero finite vector" );
    if( width < 1 || height < 1 )
        throw parameter_error( "light buffer resolution must be at least 1x1" );
    for( int c = 0; c < 3; ++c )
        if( !( light_color[c] >= 0.0 ) || !std::isfinite( light_color[c] ) )
            throw parameter_error( "light color components must be finite and >= 0" );

    light_camera cam;
    cam.light_dir = light_dir / len;
    cam.light_color = light_color;
    cam.width = width;
    cam.height = height;

    const vec3& f = cam.light_dir;
    const vec3 world_up = std::abs( f.y ) < 0.99 ? vec3{ 0, 1, 0 } : vec3{ 0, 0, 1 };
    cam.right = normalize( cross( world_up, f ) );
    cam.up = cross( f, cam.right );

    const vec3 eye = cam.center - f * 2.0;
    double hx = 0.0;
    double hy = 0.0;
    double near_d = std::numeric_limits<double>::infinity();
    double far_d = -std::numeric_limits<double>::infinity();
    for( const vec3& v : unit_cube_vertices ) {
        hx = std::max( hx, std::abs( dot( cam.right, v - cam.center ) ) );
        hy = std::max( hy, std::abs( dot( cam.up, v - cam.center ) ) );
        const double d = dot( f, v - eye );
        near_d = std::min( near_d, d );
        far_d = std::max( far_d, d );
    }
    near_d -= 0.01;
    far_d += 0.01;
    cam.half_width = hx;
    cam.half_height = hy;

    mat4 view = mat4::identity();
    const vec3 back = -f;
    for( int c = 0; c < 3; ++c ) {
        view( 0, c ) = cam.right[c];
        view( 1, c ) = cam.up[c];
        view( 2, c ) = back[c];
    }
    view( 0, 3 ) = -dot( cam.right, eye );
    view( 1, 3 ) = -dot( cam.up, eye );
    view( 2, 3 ) = -dot( back, eye );
    cam.view = view;

    mat4 proj;
    proj( 0, 0 ) = 1.0 / hx;
    proj( 1, 1 ) = 1.0 / hy;
    proj( 2, 2 ) = -2.0 / ( far_d - near_d );
    proj( 2, 3 ) = -( far_d + near_d ) / ( far_d - near_d );
    proj( 3, 3 ) = 1.0;
    cam.proj = proj;
    return cam;
}

light_uv world_to_light_uv( const mat4& m, const vec3& p ) {
    const vec4 c = m * vec4{ p.x, p.y, p.z, 1.0 };
    return { 0.5 * ( c.x / c.w + 1.0 ), 0.5 * ( c.y / c.w + 1.0 ) };
}

attenuation_buffer::attenuation_buffer( slice_stack_spec spec, light_camera camera, buffer_options options )
    : m_spec( std::move( spec ) )
    , m_camera( std::move( camera ) )
    , m_options( options )
    , m_shadow( m_camera.proj * m_camera.view ) {
    if( m_camera.width < 1 || m_camera.height < 1 )
        throw parameter_error( "light buffer resolution must be at least 1x1" );
    if( m_spec.n_slices < 1 )
        throw parameter_error( "n_slices must be >= 1" );
    if( options.compensation_n < 0 )
        throw parameter_error( "compensation_n must be >= 0" );
    if( !( options.reference_spacing > 0.0 ) )
        throw parameter_error( "reference spacing must be positive" );
    m_layers.assign( static_cast<std::size_t>( m_spec.n_slices ) * static_cast<std::size_t>( m_camera.width ) *
                         static_cast<std::size_t>( m_camera.height ),
                     1.0f );
}

std::span<const float> attenuation_buffer::layer( int k ) const {
    const std::size_t n = static_cast<std::size_t>( m_camera.width ) * static_cast<std::size_t>( m_camera.height );
    return { m_layers.data() + static_cast<std::size_t>( k ) * n, n };
}

std::span<float> attenuation_buffer::layer( int k ) {
    const std::size_t n = static_cast<std::size_t>( m_camera.width ) * static_cast<std::size_t>( m_camera.height );
    return { m_layers.data() + static_cast<std::size_t>( k ) * n, n };
}

double attenuation_buffer::sample_layer( int k, double u, double v ) const {
    const int w = m_camera.width;
    const int h = m_camera.height;
    const double fx = std::clamp( u * w - 0.5, 0.0, static_cast<double>( w - 1 ) );
    const double fy = std::clamp( v * h - 0.5, 0.0, static_cast<double>( h - 1 ) );
    const int x0 = static_cast<int>( fx );
    const int y0 = static_cast<int>( fy );
    const int x1 = std::min( x0 + 1, w - 1 );
    const int y1 = std::min( y0 + 1, h - 1 );
    const double tx = fx - x0;
    const double ty = fy - y0;
    const float* base = m_layers.data() + static_cast<std::size_t>( k ) * static_cast<std::size_t>( w ) *
                                              static_cast<std::size_t>( h );
    const double a = base[y0 * w + x0];
    const double b = base[y0 * w + x1];
    const double c = base[y1 * w + x0];
    const double d = base[y1 * w + x1];
    const double top = a + ( b - a ) * tx;
    const double bottom = c + ( d - c ) * tx;
    return top + ( bottom - top ) * ty;
}

double attenuation_buffer::lookup_factor( const vec3& p, lookup_mode mode ) const {
    const light_uv uv = world_to_light_uv( m_shadow, p );
    if( !uv.inside() )
        return 1.0;
    double idx = slice_index( m_spec, p );
    if( !( idx >= 0.0 ) )
        return 1.0;
    const int last = m_spec.n_slices - 1;
    idx = std::min( idx, static_cast<double>( last ) );
    const int k0 = static_cast<int>( idx );
    if( mode == lookup_mode::nearest )
        return sample_layer( k0, uv.u, uv.v );
    const double f = idx - k0;
    const double a = sample_layer( k0, uv.u, uv.v );
    if( f == 0.0 || k0 == last )
        return a;
    const double b = sample_layer( k0 + 1, uv.u, uv.v );
    return a + ( b - a ) * f;
}

attenuation_buffer build_attenuation_buffer( const volume_dataset& v, const transfer_function& tf,
                                             const light_camera& cam, const slice_stack_spec& spec,
                                             const buffer_options& options ) {
    if( cam.width < 1 || cam.height < 1 )
        throw parameter_error( "light buffer resolution must be at least 1x1" );
    if( length( spec.light_dir - cam.light_dir ) > 1e-9 )
        throw parameter_error( "slice stack and light camera directions differ" );

    attenuation_buffer buf( spec, cam, options );
    const int w = cam.width;
    const int h = cam.height;
    const int n = spec.n_slices;
    const double ratio = spec.spacing() / options.reference_spacing;
    const int comp = options.compensation_n;

    struct texel_bounds {
        int x0 = 0, x1 = -1, y0 = 0, y1 = -1;
    };
    std::vector<texel_bounds> bounds( static_cast<std::size_t>( n ) );
    for( int k = 0; k < n; ++k ) {
        const slice_polygon poly = make_slice_polygon( spec, k );
        if( poly.degenerate )
            continue;
        double umin = 1.0, umax = 0.0, vmin = 1.0, vmax = 0.0;
        for( const vec3& p : poly.vertices ) {
            const light_uv uv = world_to_light_uv( buf.shadow_matrix(), p );
            umin = std::min( umin, uv.u );
            umax = std::max( umax, uv.u );
            vmin = std::min( vmin, uv.v );
            vmax = std::max( vmax, uv.v );
        }
        auto& b = bounds[static_cast<std::size_t>( k )];
        b.x0 = std::max( 0, static_cast<int>( std::floor( umin * w ) ) - 1 );
        b.x1 = std::min( w - 1, static_cast<int>( std::ceil( umax * w ) ) );
        b.y0 = std::max( 0, static_cast<int>( std::floor( vmin * h ) ) - 1 );
        b.y1 = std::min( h - 1, static_cast<int>( std::ceil( vmax * h ) ) );
    }

    const vec3 dx = cam.right * ( 2.0 * cam.half_width / w );

    parallel_for_blocks( h, options.threads, [&]( int row0, int row1 ) {
        std::vector<double> transmittance( static_cast<std::size_t>( row1 - row0 ) * static_cast<std::size_t>( w ),
                                           1.0 );
        for( int k = 0; k < n; ++k ) {
            float* out_layer = buf.layer( k ).data();
            const auto& b = bounds[static_cast<std::size_t>( k )];
            const double offset = spec.plane_offsets[static_cast<std::size_t>( k )];
            for( int y = row0; y < row1; ++y ) {
                double* t_row = transmittance.data() + static_cast<std::size_t>( y - row0 ) * static_cast<std::size_t>( w );
                float* out = out_layer + static_cast<std::size_t>( y ) * static_cast<std::size_t>( w );
                for( int x = 0; x < w; ++x )
                    out[x] = static_cast<float>( t_row[x] );
                if( y < b.y0 || y > b.y1 )
                    continue;

                const vec3 p0 = cam.uv_to_world( ( b.x0 + 0.5 ) / w, ( y + 0.5 ) / h, offset );
                for( int x = b.x0; x <= b.x1; ++x ) {
                    const vec3 p = p0 + dx * static_cast<double>( x - b.x0 );
                    if( !inside_unit_cube( p, 1e-12 ) )
                        continue;
                    const double a_tf = tf.opacity( v.sample( p ) );
                    if( a_tf <= 0.0 )
                        continue;
                    const double a = correct_opacity( a_tf, ratio );
                    if( comp > 0 )
                        out[x] = static_cast<float>( t_row[x] * std::pow( 1.0 + a, comp ) );
                    t_row[x] *= 1.0 - a;
                }
            }
        }
    } );
    return buf;
}

image layer_image( const attenuation_buffer& b, int k ) {
    if( k < 0 || k >= b.n_slices() )
        throw parameter_error( "layer index out of range" );
    image img( b.width(), b.height() );
    for( int y = 0; y < b.height(); ++y )
        for( int x = 0; x < b.width(); ++x ) {
            const vec3 c = b.texel( k, x, y );
            img.set( x, b.height() - 1 - y, c, 1.0 );
        }
    return img;
}

} // namespace slicecast
