// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/parallel.hpp>
#include <slicecast/raycaster.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace slicecast {

std::string_view to_string( shading_mode m ) {
    switch( m ) {
    case shading_mode::none:
        return "none";
    case shading_mode::phong:
        return "phong";
    case shading_mode::sbrc_shadow:
        return "sbrc_shadow";
    case shading_mode::shell:
        return "shell";
    case shading_mode::cone:
        return "cone";
    case shading_mode::extinction:
        return "extinction";
    }
    return "none";
}

shading_mode parse_shading_mode( std::string_view s ) {
    if( s == "none" )
        return shading_mode::none;
    if( s == "phong" )
        return shading_mode::phong;
    if( s == "sbrc_shadow" || s == "sbrc" || s == "shadow" )
        return shading_mode::sbrc_shadow;
    if( s == "shell" )
        return shading_mode::shell;
    if( s == "cone" )
        return shading_mode::cone;
    if( s == "extinction" )
        return shading_mode::extinction;
    throw parameter_error( "unknown shading mode '" + std::string( s ) + "'" );
}

bool needs_buffer( shading_mode m ) {
    return m == shading_mode::sbrc_shadow || m == shading_mode::shell || m == shading_mode::cone ||
           m == shading_mode::extinction;
}

vec3 camera::ray_direction( double x, double y, int width, int height ) const {
    const vec3 f = forward();
    vec3 r = cross( f, up );
    if( length( r ) < 1e-12 )
        r = cross( f, std::abs( f.y ) < 0.9 ? vec3{ 0, 1, 0 } : vec3{ 0, 0, 1 } );
    r = normalize( r );
    const vec3 u = cross( r, f );
    const double tan_half = std::tan( 0.5 * fov_y_degrees * std::numbers::pi / 180.0 );
    const double aspect = static_cast<double>( width ) / height;
    const double sx = ( 2.0 * ( x + 0.5 ) / width - 1.0 ) * tan_half * aspect;
    const double sy = ( 1.0 - 2.0 * ( y + 0.5 ) / height ) * tan_half;
    return normalize( f + r * sx + u * sy );
}

void render_settings::validate() const {
    if( width < 1 || height < 1 )
        throw parameter_error( "viewport dimensions must be >= 1" );
    if( !( step > 0.0 ) )
        throw parameter_error( "sample step must be positive" );
    if( !( early_termination_alpha > 0.0 && early_termination_alpha <= 1.0 ) )
        throw parameter_error( "early termination threshold must be in (0,1]" );
    if( !( ambient_floor >= 0.0 && ambient_floor <= 1.0 ) )
        throw parameter_error( "ambient floor must be in [0,1]" );
    if( !( cam.fov_y_degrees > 0.0 && cam.fov_y_degrees < 180.0 ) )
        throw parameter_error( "camera field of view must be in (0,180) degrees" );
    if( length( cam.target - cam.position ) == 0.0 )
        throw parameter_error( "camera position and target coincide" );
    if( !( reference_spacing > 0.0 ) )
        throw parameter_error( "reference spacing must be positive" );
    if( length( light.direction ) == 0.0 )
        throw parameter_error( "light direction must be nonzero" );
    if( shell )
        shell->validate();
    cone.validate();
}

namespace {

struct sample_shader {
    const volume_dataset& v;
    const render_settings& s;
    const attenuation_buffer* buffer;
    shell_kernel shell;

    vec3 factor( const vec3& p ) const {
        switch( s.mode ) {
        case shading_mode::none:
            return { 1, 1, 1 };
        case shading_mode::phong:
            return shade_phong( p, v, s.phong, s.light, s.cam.position );
        case shading_mode::sbrc_shadow:
        case shading_mode::extinction:
            return hadamard( buffer->light_color(), shade_sbrc_shadow( p, *buffer, s.lookup, s.ambient_floor ).a );
        case shading_mode::shell:
            return hadamard( buffer->light_color(), shade_shell( p, *buffer, shell, s.lookup, s.ambient_floor ).a );
        case shading_mode::cone:
            return hadamard( buffer->light_color(),
                             shade_cone( p, *buffer, s.cone, s.light, s.cam.position, s.lookup, s.ambient_floor ).a );
        }
        return { 1, 1, 1 };
    }
};

} // namespace

image render( const volume_dataset& v, const transfer_function& tf, const render_settings& settings,
              const attenuation_buffer* buffer ) {
    settings.validate();
    if( needs_buffer( settings.mode ) && !buffer )
        throw configuration_error( "shading mode '" + std::string( to_string( settings.mode ) ) +
                                   "' needs an attenuation buffer" );
    if( !needs_buffer( settings.mode ) && buffer )
        throw configuration_error( "shading mode '" + std::string( to_string( settings.mode ) ) +
                                   "' does not use an attenuation buffer" );
    if( buffer && length( buffer->spec().light_dir - normalize( settings.light.direction ) ) > 1e-9 )
        throw configuration_error( "attenuation buffer was built for a different light direction" );

    const sample_shader shader{ v, settings, buffer, settings.shell ? *settings.shell : shell_kernel::for_volume( v ) };
    const double dt = settings.step;
    const double ratio = dt / settings.reference_spacing;
    const bool extinction = settings.mode == shading_mode::extinction;
    const vec3 eye = settings.cam.position;

    image out( settings.width, settings.height );
    parallel_for_blocks( settings.height, settings.threads, [&]( int row_begin, int row_end ) {
        for( int y = row_begin; y < row_end; ++y ) {
            for( int x = 0; x < settings.width; ++x ) {
                const vec3 dir = settings.cam.ray_direction( x, y, settings.width, settings.height );
                const ray_interval span = ray_unit_cube( eye, dir );
                if( !span.hit() || span.t_exit <= 0.0 ) {
                    out.set( x, y, {}, 0.0 );
                    continue;
                }
                const double t0 = std::max( 0.0, span.t_enter );
                compositing_state state;
                double optical_depth = 0.0;
                for( int i = 0;; ++i ) {
                    const double t = t0 + ( i + 0.5 ) * dt;
                    if( t > span.t_exit )
                        break;
                    const vec3 p = eye + dir * t;
                    const classified_sample raw = tf.classify( v.sample( p ) );
                    if( raw.opacity <= 0.0 )
                        continue;
                    classified_sample c = correct_sample( raw, ratio );
                    c.emission = hadamard( c.emission, shader.factor( p ) );
                    if( extinction ) {
                        // View transmittance from the summed optical depth rather than a (1 - alpha) product.
                        const double transmittance = std::exp( -optical_depth );
                        state.color += c.emission * transmittance;
                        optical_depth += extinction_from_alpha( c.opacity, dt ) * dt;
                        state.alpha = 1.0 - std::exp( -optical_depth );
                    } else {
                        state = composite_front_to_back( state, c );
                    }
                    if( state.alpha >= settings.early_termination_alpha )
                        break;
                }
                out.set( x, y, state.color, state.alpha );
            }
        }
    } );
    return out;
}

} // namespace slicecast
