// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/slicing.hpp>
#include <slicecast/transfer_function.hpp>
#include <slicecast/vec.hpp>
#include <slicecast/volume.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace slicecast {

class image;

/// Orthographic camera looking down a directional light.
///
/// The view transform sends the light direction to -z; its x and y axes are
/// `right` and `up`. The projection is the tightest symmetric box around the
/// unit cube's footprint, so every cube corner projects into [0,1]^2.
struct light_camera {
    vec3 light_dir;                 // unit, direction light travels
    vec3 light_color{ 1, 1, 1 };    // incident intensity
    vec3 center{ 0.5, 0.5, 0.5 };
    vec3 right;
    vec3 up;
    double half_width = 0.5;
    double half_height = 0.5;
    mat4 view;
    mat4 proj;
    int width = 0;
    int height = 0;

    /// World position of light-space (u,v) on the plane light_dir.p = offset.
    vec3 uv_to_world( double u, double v, double plane_offset ) const {
        const double x = ( 2.0 * u - 1.0 ) * half_width;
        const double y = ( 2.0 * v - 1.0 ) * half_height;
        const double t = plane_offset - dot( light_dir, center );
        return center + right * x + up * y + light_dir * t;
    }
};

/// Throws parameter_error for a zero direction or a zero resolution.
light_camera make_light_camera( const vec3& light_dir, const vec3& light_color, int width, int height );

struct light_uv {
    double u = 0.0;
    double v = 0.0;

    bool inside() const { return u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0; }
};

/// Shadow-matrix lookup: clip = proj * view * p, divide by w, remap to [0,1].
light_uv world_to_light_uv( const mat4& shadow_matrix, const vec3& p );

enum class lookup_mode { nearest, linear };

struct buffer_options {
    /// Exponent n of the (1 + alpha)^n brightening applied to stored layers;
    /// 0 disables it.
    int compensation_n = 0;
    /// Opacities in the transfer function are defined for this spacing.
    double reference_spacing = 1.0 / 256.0;
    int threads = 0;
};

/// Light arriving at each slice of a light-aligned stack.
///
/// Opacity only ever scales the incident color, so each layer is stored as a
/// scalar transmittance factor and multiplied by the light color on lookup.
/// Layer k holds the light reaching plane k after slices 0..k-1.
class attenuation_buffer {
  public:
    attenuation_buffer( slice_stack_spec spec, light_camera camera, buffer_options options );

    const slice_stack_spec& spec() const { return m_spec; }
    const light_camera& camera() const { return m_camera; }
    const mat4& shadow_matrix() const { return m_shadow; }
    int compensation_n() const { return m_options.compensation_n; }
    const buffer_options& options() const { return m_options; }
    int n_slices() const { return m_spec.n_slices; }
    int width() const { return m_camera.width; }
    int height() const { return m_camera.height; }
    const vec3& light_color() const { return m_camera.light_color; }

    std::span<const float> layer( int k ) const;
    std::span<float> layer( int k );
    float factor( int k, int x, int y ) const {
        return m_layers[( static_cast<std::size_t>( k ) * static_cast<std::size_t>( m_camera.height ) +
                          static_cast<std::size_t>( y ) ) *
                            static_cast<std::size_t>( m_camera.width ) +
                        static_cast<std::size_t>( x )];
    }
    vec3 texel( int k, int x, int y ) const { return m_camera.light_color * factor( k, x, y ); }

    /// Bilinear, clamp-to-edge sample of layer k at texel-space (u,v).
    double sample_layer( int k, double u, double v ) const;

    /// Transmittance factor at p (light intensity divided by light color).
    double lookup_factor( const vec3& p, lookup_mode mode ) const;

    std::size_t memory_bytes() const { return m_layers.size() * sizeof( float ); }

  private:
    slice_stack_spec m_spec;
    light_camera m_camera;
    buffer_options m_options;
    mat4 m_shadow;
    std::vector<float> m_layers;
};

/// Renders the slice stack into light space, nearest slice first.
///
/// Throws parameter_error when the stack and camera directions differ.
attenuation_buffer build_attenuation_buffer( const volume_dataset& v, const transfer_function& tf,
                                             const light_camera& cam, const slice_stack_spec& spec,
                                             const buffer_options& options = {} );

inline light_uv world_to_light_uv( const attenuation_buffer& b, const vec3& p ) {
    return world_to_light_uv( b.shadow_matrix(), p );
}

/// Light intensity at p. Points outside the light footprint or in front of
/// slice 0 receive the unattenuated light color.
inline vec3 lookup_light( const attenuation_buffer& b, const vec3& p, lookup_mode mode = lookup_mode::linear ) {
    return b.light_color() * b.lookup_factor( p, mode );
}

/// Layer k as a grayscale image (row 0 at the top, i.e. largest v).
image layer_image( const attenuation_buffer& b, int k );

} // namespace slicecast
