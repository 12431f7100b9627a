// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/shading.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slicecast {

vec3 phong_factor( const vec3& normal, const vec3& to_light, const vec3& to_eye, const phong_params& params,
                   const vec3& light_color ) {
    if( dot( normal, normal ) == 0.0 )
        return light_color * params.ambient;
    const double n_dot_l = dot( normal, to_light );
    double k = params.ambient + params.diffuse * std::max( 0.0, n_dot_l );
    if( params.specular > 0.0 && n_dot_l > 0.0 ) {
        const vec3 r = normal * ( 2.0 * n_dot_l ) - to_light;
        k += params.specular * std::pow( std::max( 0.0, dot( r, to_eye ) ), params.shininess );
    }
    return light_color * k;
}

vec3 shade_phong( const vec3& p, const volume_dataset& v, const phong_params& params, const light_source& light,
                  const vec3& eye ) {
    const vec3 g = v.gradient( p );
    const double len = length( g );
    const vec3 normal = len > 1e-12 ? -g / len : vec3{};
    return phong_factor( normal, -normalize( light.direction ), normalize( eye - p ), params, light.color );
}

shadow_factor shade_sbrc_shadow( const vec3& p, const attenuation_buffer& b, lookup_mode mode, double ambient_floor ) {
    const double f = std::max( b.lookup_factor( p, mode ), ambient_floor );
    return { { f, f, f } };
}

shell_kernel shell_kernel::for_volume( const volume_dataset& v ) {
    const vec3 vs = v.voxel_size();
    const double voxel = std::max( { vs.x, vs.y, vs.z } );
    shell_kernel k;
    k.radii = { voxel, 2.0 * voxel, 3.0 * voxel };
    return k;
}

void shell_kernel::validate() const {
    if( radii.empty() || radii.size() != weights.size() )
        throw parameter_error( "shell kernel needs one weight per radius" );
    double sum = 0.0;
    for( std::size_t i = 0; i < radii.size(); ++i ) {
        if( !( radii[i] > 0.0 ) || ( i > 0 && !( radii[i] > radii[i - 1] ) ) )
            throw parameter_error( "shell radii must be positive and strictly increasing" );
        if( !( weights[i] >= 0.0 ) )
            throw parameter_error( "shell weights must be non-negative" );
        sum += weights[i];
    }
    if( std::abs( sum - 1.0 ) > 1e-9 )
        throw parameter_error( "shell weights must sum to 1" );
}

shadow_factor shade_shell( const vec3& p, const attenuation_buffer& b, const shell_kernel& kernel, lookup_mode mode,
                           double ambient_floor ) {
    static constexpr vec3 axes[3] = { { 1, 0, 0 }, { 0, 1, 0 }, { 0, 0, 1 } };
    double total = 0.0;
    for( std::size_t s = 0; s < kernel.radii.size(); ++s ) {
        const double r = kernel.radii[s];
        double shell = 0.0;
        for( const vec3& axis : axes ) {
            shell += b.lookup_factor( p + axis * r, mode );
            shell += b.lookup_factor( p - axis * r, mode );
        }
        total += kernel.weights[s] * ( shell / 6.0 );
    }
    const double f = std::max( total, ambient_floor );
    return { { f, f, f } };
}

vec3 rodrigues_rotate( const vec3& base, const vec3& axis, double theta ) {
    const double c = std::cos( theta );
    const double s = std::sin( theta );
    return base * c + cross( axis, base ) * s + axis * ( dot( axis, base ) * ( 1.0 - c ) );
}

vec3 cone_project( const vec3& c, const vec3& axis ) {
    const double aa = dot( axis, axis );
    if( !( aa > 0.0 ) )
        throw parameter_error( "cone projection axis must be nonzero" );
    return axis * ( dot( c, axis ) / aa );
}

void cone_kernel::validate() const {
    if( axis_samples < 1 )
        throw parameter_error( "cone kernel needs at least one axis sample" );
    if( !( spread >= 0.0 ) )
        throw parameter_error( "cone spread must be >= 0" );
    if( !( step_length >= 0.0 ) )
        throw parameter_error( "cone step length must be >= 0" );
    if( angles.empty() )
        throw parameter_error( "cone kernel needs at least one ring angle" );
}

vec3 cone_projection_base( const vec3& light_dir, const vec3& to_eye ) {
    const vec3 perp = to_eye - cone_project( to_eye, light_dir );
    const double len = length( perp );
    if( len > 1e-9 )
        return perp / len;
    const vec3 helper = std::abs( light_dir.x ) < 0.9 ? vec3{ 1, 0, 0 } : vec3{ 0, 1, 0 };
    return normalize( cross( light_dir, helper ) );
}

shadow_factor shade_cone( const vec3& p, const attenuation_buffer& b, const cone_kernel& kernel,
                          const light_source& light, const vec3& eye, lookup_mode mode, double ambient_floor ) {
    const vec3 l_dir = normalize( light.direction );
    const vec3 to_light = -l_dir;
    const double step = kernel.step_length > 0.0 ? kernel.step_length : b.spec().spacing();
    const vec3 base = cone_projection_base( l_dir, normalize( eye - p ) );

    double sum = 0.0;
    int count = 0;
    for( int j = 1; j <= kernel.axis_samples; ++j ) {
        const double dist = j * step;
        const vec3 axis_point = p + to_light * dist;
        const double radius = kernel.spread * dist;
        for( double theta : kernel.angles ) {
            const vec3 rotated = rodrigues_rotate( base, l_dir, theta );
            const vec3 offset = normalize( rotated - cone_project( rotated, l_dir ) );
            sum += b.lookup_factor( axis_point + offset * radius, mode );
            ++count;
        }
    }
    const double f = std::max( sum / count, ambient_floor );
    return { { f, f, f } };
}

double shadow_oracle( const volume_dataset& v, const transfer_function& tf, const vec3& p, const vec3& light_dir,
                      double oracle_step, double reference_spacing ) {
    if( !( oracle_step > 0.0 ) )
        throw parameter_error( "oracle step must be positive" );
    const vec3 to_light = -normalize( light_dir );
    const ray_interval span = ray_unit_cube( p, to_light );
    if( !span.hit() || span.t_exit <= 0.0 )
        return 1.0;
    const double start = std::max( 0.0, span.t_enter );
    const double ratio = oracle_step / reference_spacing;
    double transmittance = 1.0;
    for( int i = 0;; ++i ) {
        const double t = start + ( i + 0.5 ) * oracle_step;
        if( t > span.t_exit )
            break;
        const double a = tf.opacity( v.sample( p + to_light * t ) );
        if( a > 0.0 )
            transmittance *= 1.0 - correct_opacity( a, ratio );
    }
    return transmittance;
}

} // namespace slicecast
