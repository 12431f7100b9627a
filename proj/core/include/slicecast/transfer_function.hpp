// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/vec.hpp>

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace slicecast {

struct control_point {
    double x = 0.0;
    std::array<double, 4> rgba{}; // straight (not premultiplied) color plus opacity
};

/// Classified optical properties of one sample. Emission is always stored
/// premultiplied by opacity.
struct classified_sample {
    static constexpr bool premultiplied = true;

    vec3 emission;
    double opacity = 0.0;
};

/// Piecewise-linear scalar -> rgba mapping resolved into a 256-entry table.
class transfer_function {
  public:
    static constexpr int lut_size = 256;

    /// Control points must be strictly increasing in x, start at 0 and end
    /// at 1, with all components in [0,1]. Throws parameter_error otherwise.
    explicit transfer_function( std::vector<control_point> points );

    const std::vector<control_point>& control_points() const { return m_points; }
    const std::array<std::array<float, 4>, lut_size>& lut() const { return m_lut; }

    /// Looks up `s` (clamped to [0,1]) with linear interpolation between the
    /// two nearest table entries, then premultiplies.
    classified_sample classify( double s ) const {
        const double pos = ( s <= 0.0 ? 0.0 : ( s >= 1.0 ? 1.0 : s ) ) * ( lut_size - 1 );
        int i = static_cast<int>( pos );
        if( i > lut_size - 2 )
            i = lut_size - 2;
        const double f = pos - i;
        const auto& a = m_lut[static_cast<std::size_t>( i )];
        const auto& b = m_lut[static_cast<std::size_t>( i + 1 )];
        const double alpha = a[3] + ( b[3] - a[3] ) * f;
        return { vec3{ a[0] + ( b[0] - a[0] ) * f, a[1] + ( b[1] - a[1] ) * f, a[2] + ( b[2] - a[2] ) * f } * alpha,
                 alpha };
    }

    /// Opacity only, for passes that never need color.
    double opacity( double s ) const {
        const double pos = ( s <= 0.0 ? 0.0 : ( s >= 1.0 ? 1.0 : s ) ) * ( lut_size - 1 );
        int i = static_cast<int>( pos );
        if( i > lut_size - 2 )
            i = lut_size - 2;
        const double f = pos - i;
        const double a = m_lut[static_cast<std::size_t>( i )][3];
        const double b = m_lut[static_cast<std::size_t>( i + 1 )][3];
        return a + ( b - a ) * f;
    }

    /// [{"x":0.0,"rgba":[r,g,b,a]}, ...]
    static transfer_function from_json( std::string_view text );
    static transfer_function load( const std::filesystem::path& path );
    std::string to_json() const;

    /// Built-in presets: "ramp", "engine", "blob", "bone", "opaque", "transparent".
    static transfer_function preset( std::string_view name );
    static std::vector<std::string> preset_names();

  private:
    std::vector<control_point> m_points;
    std::array<std::array<float, 4>, lut_size> m_lut{};
};

inline classified_sample classify( const transfer_function& tf, double s ) { return tf.classify( s ); }

/// Opacity for a sample spacing of `ratio` reference spacings:
/// 1 - (1 - alpha)^ratio.
double correct_opacity( double alpha, double ratio );

/// Rescales a classified sample to a new spacing, keeping its straight color.
classified_sample correct_sample( const classified_sample& s, double ratio );

} // namespace slicecast
