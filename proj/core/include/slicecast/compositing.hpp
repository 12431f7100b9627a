// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/transfer_function.hpp>
#include <slicecast/vec.hpp>

#include <span>

namespace slicecast {

/// Accumulated premultiplied color and opacity along a ray.
struct compositing_state {
    vec3 color;
    double alpha = 0.0;
};

/// Front-to-back "under" operator:
///   C_dst += (1 - a_dst) C_src,  a_dst += (1 - a_dst) a_src.
constexpr compositing_state composite_front_to_back( const compositing_state& dst, const classified_sample& src ) {
    const double t = 1.0 - dst.alpha;
    return { dst.color + src.emission * t, dst.alpha + t * src.opacity };
}

/// Back-to-front "over" operator: C_dst = (1 - a_src) C_dst + C_src.
constexpr vec3 composite_back_to_front( const vec3& behind, const classified_sample& src ) {
    return behind * ( 1.0 - src.opacity ) + src.emission;
}

/// Back-to-front including the opacity channel.
constexpr compositing_state composite_back_to_front( const compositing_state& behind, const classified_sample& src ) {
    return { composite_back_to_front( behind.color, src ), src.opacity + ( 1.0 - src.opacity ) * behind.alpha };
}

struct extinction_sample {
    double tau = 0.0; // extinction coefficient, per world unit
    double dt = 0.0;  // segment length
};

/// Opacities at or above 1 are clamped to this before converting to
/// extinction, keeping tau finite.
inline constexpr double max_extinction_alpha = 1.0 - 1e-6;

/// tau such that exp(-tau dt) = 1 - alpha, with alpha clamped to
/// max_extinction_alpha.
double extinction_from_alpha( double alpha, double dt );

/// exp(-sum dt_i tau_i). The terms are summed in sorted order, so any
/// permutation of `samples` gives a bitwise identical result.
double sum_extinction( std::span<const extinction_sample> samples );

} // namespace slicecast
