// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/vec.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace slicecast {

/// RGBA float image with premultiplied color, row 0 at the top.
class image {
  public:
    image() = default;
    image( int width, int height );

    int width() const { return m_width; }
    int height() const { return m_height; }
    bool empty() const { return m_pixels.empty(); }

    void set( int x, int y, const vec3& color, double alpha ) {
        float* p = &m_pixels[offset( x, y )];
        p[0] = static_cast<float>( color.x );
        p[1] = static_cast<float>( color.y );
        p[2] = static_cast<float>( color.z );
        p[3] = static_cast<float>( alpha );
    }
    vec3 color( int x, int y ) const {
        const float* p = &m_pixels[offset( x, y )];
        return { p[0], p[1], p[2] };
    }
    double alpha( int x, int y ) const { return m_pixels[offset( x, y ) + 3]; }

    std::span<const float> pixels() const { return m_pixels; }
    std::span<float> pixels() { return m_pixels; }

    /// FNV-1a over the raw float bytes; equal hashes mean bit-identical images.
    std::uint64_t hash() const;

  private:
    std::size_t offset( int x, int y ) const {
        return ( static_cast<std::size_t>( y ) * static_cast<std::size_t>( m_width ) + static_cast<std::size_t>( x ) ) * 4;
    }

    int m_width = 0;
    int m_height = 0;
    std::vector<float> m_pixels;
};

/// Binary P6; color composited over black.
void write_ppm( const std::filesystem::path& path, const image& img );

/// 8-bit RGBA PNG with straight (un-premultiplied) alpha.
std::vector<std::uint8_t> encode_png( const image& img );
void write_png( const std::filesystem::path& path, const image& img );

/// Picks PNG or PPM from the extension (".png" / ".ppm"); throws
/// format_error otherwise.
void write_image( const std::filesystem::path& path, const image& img );

/// Reads P6 PPM or PNG by content. PNG alpha is converted back to
/// premultiplied color; PPM alpha is 1.
image read_image( const std::filesystem::path& path );
image decode_png( std::span<const std::uint8_t> bytes );

struct image_diff {
    double max_abs = 0.0;
    double mean_abs = 0.0;
    std::array<double, 4> channel_max_abs{};
    std::array<double, 4> channel_mean_abs{};
};

/// Per-channel absolute differences over RGBA; throws parameter_error if the
/// dimensions differ.
image_diff diff_images( const image& a, const image& b );

} // namespace slicecast
