// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/volume.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace slicecast::testing {

/// Fresh directory under the system temp dir, removed on destruction.
class temp_dir {
  public:
    temp_dir() {
        std::random_device rd;
        const auto base = std::filesystem::temp_directory_path();
        for( ;; ) {
            m_path = base / ( "slicecast-test-" + std::to_string( rd() ) );
            if( std::filesystem::create_directory( m_path ) )
                break;
        }
    }
    ~temp_dir() {
        std::error_code ec;
        std::filesystem::remove_all( m_path, ec );
    }
    temp_dir( const temp_dir& ) = delete;
    temp_dir& operator=( const temp_dir& ) = delete;

    const std::filesystem::path& path() const { return m_path; }
    std::filesystem::path operator/( const std::string& name ) const { return m_path / name; }

  private:
    std::filesystem::path m_path;
};

inline void write_file( const std::filesystem::path& p, const std::string& text ) {
    std::ofstream( p, std::ios::binary ) << text;
}

inline void write_bytes( const std::filesystem::path& p, const std::vector<std::uint8_t>& bytes ) {
    std::ofstream out( p, std::ios::binary );
    out.write( reinterpret_cast<const char*>( bytes.data() ), static_cast<std::streamsize>( bytes.size() ) );
}

inline volume_dataset constant_volume( int n, float value ) {
    return volume_dataset::from_normalized( { n, n, n },
                                            std::vector<float>( static_cast<std::size_t>( n ) * n * n, value ) );
}

/// Uniform double in [lo, hi) from a 64-bit engine.
inline double uniform( std::mt19937_64& rng, double lo = 0.0, double hi = 1.0 ) {
    return std::uniform_real_distribution<double>( lo, hi )( rng );
}

} // namespace slicecast::testing
