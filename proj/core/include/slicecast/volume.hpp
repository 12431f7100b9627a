// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/vec.hpp>

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slicecast {

enum class scalar_type { u8, u16, f32 };

std::string_view to_string( scalar_type t );
/// Throws format_error for anything other than "u8", "u16" or "f32".
scalar_type parse_scalar_type( std::string_view s );
std::size_t scalar_size( scalar_type t );

using volume_dims = std::array<int, 3>;

/// Sidecar metadata for a .raw payload.
struct dataset_descriptor {
    volume_dims dims{};
    scalar_type type = scalar_type::u8;
    vec3 spacing{ 1.0, 1.0, 1.0 };

    /// Parses {"dims":[nx,ny,nz],"scalar_type":"u8|u16|f32","spacing":[sx,sy,sz]}.
    static dataset_descriptor from_json( std::string_view text );
    static dataset_descriptor load( const std::filesystem::path& path );
    std::string to_json() const;

    std::size_t voxel_count() const;
    std::size_t byte_size() const { return voxel_count() * scalar_size( type ); }
};

/// Scalar grid normalized to [0,1], placed inside the unit cube.
///
/// The longest physical axis spans [0,1]; the other axes are scaled in
/// proportion and centered. Samples are cell-centered: voxel i along an axis
/// of n voxels sits at box_min + (i + 0.5) / n * box_size.
class volume_dataset {
  public:
    volume_dataset( volume_dims dims, vec3 spacing, std::vector<float> normalized, scalar_type source_type,
                    std::pair<double, double> value_range );

    /// Wraps already-normalized data; the value range is taken from the data.
    static volume_dataset from_normalized( volume_dims dims, std::vector<float> normalized,
                                           vec3 spacing = { 1.0, 1.0, 1.0 } );

    const volume_dims& dims() const { return m_dims; }
    const vec3& spacing() const { return m_spacing; }
    scalar_type source_type() const { return m_type; }
    std::pair<double, double> value_range() const { return m_range; }
    std::span<const float> data() const { return m_data; }
    std::size_t voxel_count() const { return m_data.size(); }

    std::size_t index( int x, int y, int z ) const {
        return static_cast<std::size_t>( x ) +
               static_cast<std::size_t>( m_dims[0] ) *
                   ( static_cast<std::size_t>( y ) + static_cast<std::size_t>( m_dims[1] ) * static_cast<std::size_t>( z ) );
    }
    float voxel( int x, int y, int z ) const { return m_data[index( x, y, z )]; }

    /// World-space bounding box of the data inside the unit cube.
    const vec3& box_min() const { return m_box_min; }
    const vec3& box_size() const { return m_box_size; }
    /// World-space extent of one voxel per axis.
    vec3 voxel_size() const;
    vec3 voxel_center( int x, int y, int z ) const;

    double sample( const vec3& p ) const;
    vec3 gradient( const vec3& p ) const;

  private:
    volume_dims m_dims;
    vec3 m_spacing;
    scalar_type m_type;
    std::pair<double, double> m_range;
    std::vector<float> m_data;
    vec3 m_box_min;
    vec3 m_box_size;
    vec3 m_world_to_voxel; // voxels per world unit along each axis
};

/// Reads a tightly packed little-endian, x-fastest .raw file.
volume_dataset load_raw( const std::filesystem::path& path, const dataset_descriptor& meta );

/// Loads `path` using the sidecar descriptor at `descriptor_path`.
volume_dataset load_raw( const std::filesystem::path& path, const std::filesystem::path& descriptor_path );

/// Writes `v` quantized to `type`, plus a sidecar descriptor next to it.
void save_raw( const std::filesystem::path& path, const volume_dataset& v, scalar_type type = scalar_type::u8 );

/// Trilinear reconstruction with clamp-to-edge addressing inside the data
/// box; positions outside the box return 0.
inline double sample_trilinear( const volume_dataset& v, const vec3& p ) { return v.sample( p ); }

/// Central differences one voxel apart, one-sided where that would leave
/// the data box. Units are normalized value per world unit.
inline vec3 gradient( const volume_dataset& v, const vec3& p ) { return v.gradient( p ); }

} // namespace slicecast
