// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/vec.hpp>

#include <array>
#include <vector>

namespace slicecast {

/// Planes perpendicular to a direction, spread over the unit cube.
///
/// The range [d_min, d_max] of L.V over the cube corners is split into
/// n_slices equal bins and one plane is centered in each bin, so plane k sits
/// at d_min + (k + 0.5) * spacing().
struct slice_stack_spec {
    vec3 light_dir; // unit, the direction light travels
    int n_slices = 0;
    double d_min = 0.0;
    double d_max = 0.0;
    std::vector<double> plane_offsets;

    double spacing() const { return ( d_max - d_min ) / n_slices; }
};

/// Throws parameter_error for a zero direction or n_slices < 1.
slice_stack_spec make_slice_stack( const vec3& light_dir, int n_slices );

/// Convex cross-section of the unit cube, vertices in fan order.
struct slice_polygon {
    int slice_index = -1;
    std::vector<vec3> vertices;
    bool degenerate = true; // fewer than three distinct intersection points

    int triangle_count() const { return vertices.size() >= 3 ? static_cast<int>( vertices.size() ) - 2 : 0; }
};

/// Coincident edge hits closer than this are merged.
inline constexpr double slice_vertex_merge_distance = 1e-9;

/// Intersects {p : normal.p = offset} with the 12 cube edges and orders the
/// hits by angle around their centroid. `normal` must be unit length.
slice_polygon intersect_unit_cube( const vec3& normal, double offset );

/// Cross-section for plane k of `spec`; throws parameter_error if k is out
/// of range.
slice_polygon make_slice_polygon( const slice_stack_spec& spec, int k );

/// Continuous slice coordinate n (L.p - d_min) / (d_max - d_min). A point on
/// plane k maps to k + 0.5; callers clamp and floor or interpolate.
inline double slice_index( const slice_stack_spec& spec, const vec3& p ) {
    return spec.n_slices * ( dot( spec.light_dir, p ) - spec.d_min ) / ( spec.d_max - spec.d_min );
}

/// Triangle fan (0, i, i+1) over the polygon's vertices.
std::vector<std::array<vec3, 3>> triangulate( const slice_polygon& poly );

double polygon_area( const slice_polygon& poly );

} // namespace slicecast
