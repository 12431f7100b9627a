// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/light_buffer.hpp>
#include <slicecast/vec.hpp>
#include <slicecast/volume.hpp>

#include <numbers>
#include <vector>

namespace slicecast {

struct light_source {
    vec3 direction{ 0, 0, 1 }; // direction light travels
    vec3 color{ 1, 1, 1 };
};

struct phong_params {
    double ambient = 0.2;
    double diffuse = 0.6;
    double specular = 0.2;
    double shininess = 24.0;
};

/// Local illumination factor ambient + diffuse (N.L) + specular (R.V)^s,
/// scaled by the light color. N is the negated, normalized gradient; samples
/// with zero gradient get the ambient term only.
vec3 shade_phong( const vec3& p, const volume_dataset& v, const phong_params& params, const light_source& light,
                  const vec3& eye );

/// Same, for an already known surface normal.
vec3 phong_factor( const vec3& normal, const vec3& to_light, const vec3& to_eye, const phong_params& params,
                   const vec3& light_color );

/// Per-sample attenuation weight applied to emission.
struct shadow_factor {
    vec3 a{ 1, 1, 1 };
};

/// Buffer lookup divided by the light color, floored at `ambient_floor`.
shadow_factor shade_sbrc_shadow( const vec3& p, const attenuation_buffer& b, lookup_mode mode = lookup_mode::linear,
                                 double ambient_floor = 0.0 );

/// Concentric cuboid shells of axis-aligned lookups around the sample.
struct shell_kernel {
    std::vector<double> radii{ 1.0, 2.0, 3.0 }; // world units once scaled
    std::vector<double> weights{ 0.5, 0.3, 0.2 };

    /// Radii of 1, 2 and 3 voxels of `v` (largest voxel extent).
    static shell_kernel for_volume( const volume_dataset& v );
    /// Throws parameter_error unless radii strictly increase and the
    /// non-negative weights sum to 1.
    void validate() const;
};

shadow_factor shade_shell( const vec3& p, const attenuation_buffer& b, const shell_kernel& kernel,
                           lookup_mode mode = lookup_mode::linear, double ambient_floor = 0.0 );

/// Rodrigues rotation of `base` about the unit axis `axis` by `theta`.
vec3 rodrigues_rotate( const vec3& base, const vec3& axis, double theta );

/// Projection of c onto the line spanned by `axis`; throws parameter_error
/// for a zero axis.
vec3 cone_project( const vec3& c, const vec3& axis );

/// Rings of lookups on a cone opening toward the light.
struct cone_kernel {
    int axis_samples = 2;
    /// Ring radius per unit distance travelled toward the light.
    double spread = 1.0;
    /// Distance between rings; 0 uses the buffer's slice spacing.
    double step_length = 0.0;
    std::vector<double> angles{ 0.0, 0.5 * std::numbers::pi, std::numbers::pi, 1.5 * std::numbers::pi };

    void validate() const;
    int sample_count() const { return axis_samples * static_cast<int>( angles.size() ); }
};

/// Unit vector perpendicular to `light_dir` lying in the plane of the light
/// direction and the direction toward the eye; an arbitrary fixed
/// perpendicular when those are parallel.
vec3 cone_projection_base( const vec3& light_dir, const vec3& to_eye );

shadow_factor shade_cone( const vec3& p, const attenuation_buffer& b, const cone_kernel& kernel,
                          const light_source& light, const vec3& eye, lookup_mode mode = lookup_mode::linear,
                          double ambient_floor = 0.0 );

/// Brute-force transmittance from p toward the light: marches at
/// `oracle_step` (sample midpoints) until leaving the unit cube and multiplies
/// (1 - alpha) with opacities corrected to the step.
double shadow_oracle( const volume_dataset& v, const transfer_function& tf, const vec3& p, const vec3& light_dir,
                      double oracle_step, double reference_spacing = 1.0 / 256.0 );

} // namespace slicecast
