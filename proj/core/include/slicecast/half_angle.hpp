// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/image.hpp>
#include <slicecast/raycaster.hpp>
#include <slicecast/transfer_function.hpp>
#include <slicecast/volume.hpp>

namespace slicecast {

struct half_angle_options {
    int n_slices = 128;
    int light_width = 256;
    int light_height = 256;
};

struct half_angle_result {
    image img;
    int pass_count = 0;
    vec3 slice_axis;
    bool front_to_back = true;
};

/// Slicing axis and traversal order for a view direction `view_dir` (eye
/// into the scene) and light travel direction `light_dir`.
///
/// With the light behind the viewer the axis is the half vector of the two
/// and slices are composited front to back; otherwise the view direction is
/// negated and slices go back to front. Either way slices are visited in
/// the order light reaches them. A degenerate half vector falls back to the
/// light direction.
struct half_angle_axis {
    vec3 axis;
    bool front_to_back = true;
};
half_angle_axis choose_half_angle_axis( const vec3& view_dir, const vec3& light_dir );

/// Half-angle slicing: for every slice an eye pass composites the slice,
/// shadowed by the running light-space transmittance, then a light pass
/// attenuates that transmittance by the slice. Uses the camera, viewport,
/// light, reference spacing and thread count of `settings`; the shading
/// mode is ignored.
half_angle_result render_half_angle( const volume_dataset& v, const transfer_function& tf,
                                     const render_settings& settings, const half_angle_options& options );

} // namespace slicecast
