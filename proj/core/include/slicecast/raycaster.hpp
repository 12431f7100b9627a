// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/compositing.hpp>
#include <slicecast/image.hpp>
#include <slicecast/light_buffer.hpp>
#include <slicecast/shading.hpp>
#include <slicecast/transfer_function.hpp>
#include <slicecast/volume.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace slicecast {

enum class shading_mode { none, phong, sbrc_shadow, shell, cone, extinction };

std::string_view to_string( shading_mode m );
/// Throws parameter_error for unknown names.
shading_mode parse_shading_mode( std::string_view s );
/// Modes that read an attenuation buffer.
bool needs_buffer( shading_mode m );

/// Pinhole camera; image row 0 is the top of the view.
struct camera {
    vec3 position{ 0.5, 0.5, 3.0 };
    vec3 target{ 0.5, 0.5, 0.5 };
    vec3 up{ 0, 1, 0 };
    double fov_y_degrees = 30.0;

    /// Unit direction through the center of pixel (x, y).
    vec3 ray_direction( double x, double y, int width, int height ) const;
    vec3 forward() const { return normalize( target - position ); }
};

struct render_settings {
    camera cam;
    int width = 512;
    int height = 512;
    double step = 1.0 / 256.0;
    shading_mode mode = shading_mode::none;
    double early_termination_alpha = 0.99;
    double ambient_floor = 0.0;
    lookup_mode lookup = lookup_mode::linear;
    light_source light;
    phong_params phong;
    /// Unset means shell_kernel::for_volume of the rendered volume.
    std::optional<shell_kernel> shell;
    cone_kernel cone;
    double reference_spacing = 1.0 / 256.0;
    int threads = 0;

    /// Throws parameter_error on invalid numbers.
    void validate() const;
};

/// Front-to-back ray casting through the unit cube.
///
/// Every sample is classified, opacity-corrected to the step, weighted by
/// the mode's light factor and composited. `buffer` must be non-null exactly
/// when needs_buffer(settings.mode); otherwise configuration_error is thrown.
image render( const volume_dataset& v, const transfer_function& tf, const render_settings& settings,
              const attenuation_buffer* buffer = nullptr );

} // namespace slicecast
