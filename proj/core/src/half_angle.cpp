// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/half_angle.hpp>
#include <slicecast/light_buffer.hpp>
#include <slicecast/parallel.hpp>
#include <slicecast/slicing.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace slicecast {

half_angle_axis choose_half_angle_axis( const vec3& view_dir, const vec3& light_dir ) {
    const vec3 v = normalize( view_dir );
    const vec3 l = normalize( light_dir );
    const bool front_to_back = dot( v, l ) >= 0.0;
    const vec3 h = front_to_back ? v + l : l - v;
    if( length( h ) < 1e-9 )
        return { l, front_to_back };
    return { normalize( h ), front_to_back };
}

namespace {

struct pixel_box {
    int x0 = 0, x1 = -1, y0 = 0, y1 = -1;
};

pixel_box clamp_box( double xmin, double xmax, double ymin, double ymax, int w, int h ) {
    pixel_box b;
    b.x0 = std::max( 0, static_cast<int>( std::floor( xmin ) ) - 1 );
    b.x1 = std::min( w - 1, static_cast<int>( std::ceil( xmax ) ) + 1 );
    b.y0 = std::max( 0, static_cast<int>( std::floor( ymin ) ) - 1 );
    b.y1 = std::min( h - 1, static_cast<int>( std::ceil( ymax ) ) + 1 );
    return b;
}

double sample_grid( const std::vector<float>& grid, int w, int h, const light_uv& uv ) {
    if( !uv.inside() )
        return 1.0;
    const double fx = std::clamp( uv.u * w - 0.5, 0.0, static_cast<double>( w - 1 ) );
    const double fy = std::clamp( uv.v * h - 0.5, 0.0, static_cast<double>( h - 1 ) );
    const int x0 = static_cast<int>( fx );
    const int y0 = static_cast<int>( fy );
    const int x1 = std::min( x0 + 1, w - 1 );
    const int y1 = std::min( y0 + 1, h - 1 );
    const double tx = fx - x0;
    const double ty = fy - y0;
    const double a = grid[static_cast<std::size_t>( y0 * w + x0 )];
    const double b = grid[static_cast<std::size_t>( y0 * w + x1 )];
    const double c = grid[static_cast<std::size_t>( y1 * w + x0 )];
    const double d = grid[static_cast<std::size_t>( y1 * w + x1 )];
    const double top = a + ( b - a ) * tx;
    const double bottom = c + ( d - c ) * tx;
    return top + ( bottom - top ) * ty;
}

} // namespace

half_angle_result render_half_angle( const volume_dataset& v, const transfer_function& tf,
                                     const render_settings& settings, const half_angle_options& options ) {
    settings.validate();
    if( options.n_slices < 1 )
        throw parameter_error( "half-angle slicing needs at least one slice" );

    const camera& cam = settings.cam;
    const vec3 eye = cam.position;
    const vec3 f = cam.forward();
    const half_angle_axis ha = choose_half_angle_axis( f, settings.light.direction );
    const vec3 s = ha.axis;
    const slice_stack_spec stack = make_slice_stack( s, options.n_slices );
    const light_camera lcam =
        make_light_camera( settings.light.direction, settings.light.color, options.light_width, options.light_height );
    const mat4 shadow = lcam.proj * lcam.view;
    const vec3 l = lcam.light_dir;
    const double s_dot_l = dot( s, l );
    const double ds = stack.spacing();

    // Screen basis matching camera::ray_direction.
    vec3 r = cross( f, cam.up );
    if( length( r ) < 1e-12 )
        r = cross( f, std::abs( f.y ) < 0.9 ? vec3{ 0, 1, 0 } : vec3{ 0, 0, 1 } );
    r = normalize( r );
    const vec3 u = cross( r, f );
    const double tan_half = std::tan( 0.5 * cam.fov_y_degrees * std::numbers::pi / 180.0 );
    const int w = settings.width;
    const int h = settings.height;
    const double aspect = static_cast<double>( w ) / h;

    const int lw = lcam.width;
    const int lh = lcam.height;
    std::vector<float> light_accum( static_cast<std::size_t>( lw ) * static_cast<std::size_t>( lh ), 1.0f );
    std::vector<compositing_state> eye_accum( static_cast<std::size_t>( w ) * static_cast<std::size_t>( h ) );

    half_angle_result result;
    result.slice_axis = s;
    result.front_to_back = ha.front_to_back;

    for( int k = 0; k < stack.n_slices; ++k ) {
        result.pass_count += 2;
        const slice_polygon poly = make_slice_polygon( stack, k );
        if( poly.degenerate )
            continue;
        const double offset = stack.plane_offsets[static_cast<std::size_t>( k )];

        // Eye pass.
        pixel_box eb{ 0, w - 1, 0, h - 1 };
        {
            double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
            bool all_in_front = true;
            for( const vec3& q : poly.vertices ) {
                const vec3 rel = q - eye;
                const double z = dot( rel, f );
                if( z <= 1e-9 ) {
                    all_in_front = false;
                    break;
                }
                const double px = dot( rel, r ) / z / ( tan_half * aspect );
                const double py = dot( rel, u ) / z / tan_half;
                const double sx = 0.5 * ( px + 1.0 ) * w - 0.5;
                const double sy = 0.5 * ( 1.0 - py ) * h - 0.5;
                xmin = std::min( xmin, sx );
                xmax = std::max( xmax, sx );
                ymin = std::min( ymin, sy );
                ymax = std::max( ymax, sy );
            }
            if( all_in_front )
                eb = clamp_box( xmin, xmax, ymin, ymax, w, h );
        }
        const double s_dot_e = dot( s, eye );
        parallel_for_blocks( eb.y1 - eb.y0 + 1, settings.threads, [&]( int begin, int end ) {
            for( int y = eb.y0 + begin; y < eb.y0 + end; ++y ) {
                for( int x = eb.x0; x <= eb.x1; ++x ) {
                    const vec3 d = cam.ray_direction( x, y, w, h );
                    const double sd = dot( s, d );
                    if( std::abs( sd ) < 1e-12 )
                        continue;
                    const double t = ( offset - s_dot_e ) / sd;
                    if( t <= 0.0 )
                        continue;
                    const vec3 p = eye + d * t;
                    if( !inside_unit_cube( p, 1e-12 ) )
                        continue;
                    const classified_sample raw = tf.classify( v.sample( p ) );
                    if( raw.opacity <= 0.0 )
                        continue;
                    classified_sample c = correct_sample( raw, ds / std::abs( sd ) / settings.reference_spacing );
                    const double light = sample_grid( light_accum, lw, lh, world_to_light_uv( shadow, p ) );
                    c.emission = hadamard( c.emission, lcam.light_color * light );
                    compositing_state& acc = eye_accum[static_cast<std::size_t>( y * w + x )];
                    acc = ha.front_to_back ? composite_front_to_back( acc, c ) : composite_back_to_front( acc, c );
                }
            }
        } );

        // Light pass.
        double umin = HUGE_VAL, umax = -HUGE_VAL, vmin = HUGE_VAL, vmax = -HUGE_VAL;
        for( const vec3& q : poly.vertices ) {
            const light_uv uv = world_to_light_uv( shadow, q );
            umin = std::min( umin, uv.u );
            umax = std::max( umax, uv.u );
            vmin = std::min( vmin, uv.v );
            vmax = std::max( vmax, uv.v );
        }
        const pixel_box lb = clamp_box( umin * lw - 0.5, umax * lw - 0.5, vmin * lh - 0.5, vmax * lh - 0.5, lw, lh );
        const double light_ratio = ds / s_dot_l / settings.reference_spacing;
        parallel_for_blocks( lb.y1 - lb.y0 + 1, settings.threads, [&]( int begin, int end ) {
            for( int y = lb.y0 + begin; y < lb.y0 + end; ++y ) {
                for( int x = lb.x0; x <= lb.x1; ++x ) {
                    const vec3 q0 = lcam.uv_to_world( ( x + 0.5 ) / lw, ( y + 0.5 ) / lh, 0.0 );
                    const double t = ( offset - dot( s, q0 ) ) / s_dot_l;
                    const vec3 p = q0 + l * t;
                    if( !inside_unit_cube( p, 1e-12 ) )
                        continue;
                    const double a = correct_opacity( tf.opacity( v.sample( p ) ), light_ratio );
                    if( a > 0.0 ) {
                        float& T = light_accum[static_cast<std::size_t>( y * lw + x )];
                        T = static_cast<float>( T * ( 1.0 - a ) );
                    }
                }
            }
        } );
    }

    result.img = image( w, h );
    for( int y = 0; y < h; ++y )
        for( int x = 0; x < w; ++x ) {
            const compositing_state& acc = eye_accum[static_cast<std::size_t>( y * w + x )];
            result.img.set( x, y, acc.color, acc.alpha );
        }
    return result;
}

} // namespace slicecast
