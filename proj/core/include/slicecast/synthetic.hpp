// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/volume.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slicecast::synthetic {

volume_dataset constant( int n, float value );

/// f(x,y,z) = coordinate `axis` of each voxel center, i.e. a unit-slope ramp.
volume_dataset linear_ramp( int n, int axis = 0 );

/// Smooth radial falloff centered in the cube.
volume_dataset sphere_blob( int n );

/// `value` wherever the voxel center's z lies in [z0, z1], 0 elsewhere.
volume_dataset slab( int n, double z0, double z1, float value = 1.0f );

/// Solid block with bored holes and a denser core, loosely engine-like.
volume_dataset engine_block( int n );

/// Sum of `count` seeded Gaussian blobs, clamped to [0,1].
volume_dataset random_blobs( int n, std::uint64_t seed, int count = 8 );

/// Dispatches on "constant", "sphere-blob", "slab", "engine", "random-blob".
volume_dataset make( std::string_view kind, int n, std::uint64_t seed = 1 );
std::vector<std::string> kinds();

} // namespace slicecast::synthetic
