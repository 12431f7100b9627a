// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/image.hpp>

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace slicecast {

image::image( int width, int height )
    : m_width( width )
    , m_height( height ) {
    if( width < 1 || height < 1 )
        throw parameter_error( "image dimensions must be at least 1x1" );
    m_pixels.assign( static_cast<std::size_t>( width ) * static_cast<std::size_t>( height ) * 4, 0.0f );
}

std::uint64_t image::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h]( const unsigned char* p, std::size_t n ) {
        for( std::size_t i = 0; i < n; ++i ) {
            h ^= p[i];
            h *= 0x100000001b3ull;
        }
    };
    const int dims[2] = { m_width, m_height };
    mix( reinterpret_cast<const unsigned char*>( dims ), sizeof( dims ) );
    mix( reinterpret_cast<const unsigned char*>( m_pixels.data() ), m_pixels.size() * sizeof( float ) );
    return h;
}

namespace {

std::uint8_t to_byte( double v ) { return static_cast<std::uint8_t>( std::lround( std::clamp( v, 0.0, 1.0 ) * 255.0 ) ); }

} // namespace

void write_ppm( const std::filesystem::path& path, const image& img ) {
    std::ofstream out( path, std::ios::binary );
    if( !out )
        throw io_error( "cannot write " + path.string() );
    out << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
    std::vector<char> row( static_cast<std::size_t>( img.width() ) * 3 );
    for( int y = 0; y < img.height(); ++y ) {
        for( int x = 0; x < img.width(); ++x ) {
            const vec3 c = img.color( x, y );
            row[static_cast<std::size_t>( x ) * 3 + 0] = static_cast<char>( to_byte( c.x ) );
            row[static_cast<std::size_t>( x ) * 3 + 1] = static_cast<char>( to_byte( c.y ) );
            row[static_cast<std::size_t>( x ) * 3 + 2] = static_cast<char>( to_byte( c.z ) );
        }
        out.write( row.data(), static_cast<std::streamsize>( row.size() ) );
    }
    if( !out )
        throw io_error( "failed writing " + path.string() );
}

std::vector<std::uint8_t> encode_png( const image& img ) {
    std::vector<std::uint8_t> rgba( static_cast<std::size_t>( img.width() ) * static_cast<std::size_t>( img.height() ) * 4 );
    std::size_t i = 0;
    for( int y = 0; y < img.height(); ++y )
        for( int x = 0; x < img.width(); ++x ) {
            const double a = std::clamp( img.alpha( x, y ), 0.0, 1.0 );
            const vec3 c = img.color( x, y );
            const vec3 straight = a > 0.0 ? c / a : vec3{};
            rgba[i++] = to_byte( straight.x );
            rgba[i++] = to_byte( straight.y );
            rgba[i++] = to_byte( straight.z );
            rgba[i++] = to_byte( a );
        }

    png_image desc;
    std::memset( &desc, 0, sizeof( desc ) );
    desc.version = PNG_IMAGE_VERSION;
    desc.width = static_cast<png_uint_32>( img.width() );
    desc.height = static_cast<png_uint_32>( img.height() );
    desc.format = PNG_FORMAT_RGBA;

    png_alloc_size_t size = 0;
    if( !png_image_write_to_memory( &desc, nullptr, &size, 0, rgba.data(), 0, nullptr ) )
        throw format_error( std::string( "png sizing failed: " ) + desc.message );
    std::vector<std::uint8_t> out( size );
    if( !png_image_write_to_memory( &desc, out.data(), &size, 0, rgba.data(), 0, nullptr ) )
        throw format_error( std::string( "png encoding failed: " ) + desc.message );
    out.resize( size );
    return out;
}

void write_png( const std::filesystem::path& path, const image& img ) {
    const auto bytes = encode_png( img );
    std::ofstream out( path, std::ios::binary );
    if( !out )
        throw io_error( "cannot write " + path.string() );
    out.write( reinterpret_cast<const char*>( bytes.data() ), static_cast<std::streamsize>( bytes.size() ) );
    if( !out )
        throw io_error( "failed writing " + path.string() );
}

void write_image( const std::filesystem::path& path, const image& img ) {
    std::string ext = path.extension().string();
    std::transform( ext.begin(), ext.end(), ext.begin(), []( unsigned char c ) { return static_cast<char>( std::tolower( c ) ); } );
    if( ext == ".png" )
        write_png( path, img );
    else if( ext == ".ppm" )
        write_ppm( path, img );
    else
        throw format_error( "unsupported image extension '" + ext + "' (use .png or .ppm)" );
}

image decode_png( std::span<const std::uint8_t> bytes ) {
    png_image desc;
    std::memset( &desc, 0, sizeof( desc ) );
    desc.version = PNG_IMAGE_VERSION;
    if( !png_image_begin_read_from_memory( &desc, bytes.data(), bytes.size() ) )
        throw format_error( std::string( "png decoding failed: " ) + desc.message );
    desc.format = PNG_FORMAT_RGBA;
    std::vector<std::uint8_t> rgba( PNG_IMAGE_SIZE( desc ) );
    if( !png_image_finish_read( &desc, nullptr, rgba.data(), 0, nullptr ) ) {
        png_image_free( &desc );
        throw format_error( std::string( "png decoding failed: " ) + desc.message );
    }
    image img( static_cast<int>( desc.width ), static_cast<int>( desc.height ) );
    std::size_t i = 0;
    for( int y = 0; y < img.height(); ++y )
        for( int x = 0; x < img.width(); ++x ) {
            const double a = rgba[i + 3] / 255.0;
            img.set( x, y, vec3{ rgba[i] / 255.0, rgba[i + 1] / 255.0, rgba[i + 2] / 255.0 } * a, a );
            i += 4;
        }
    return img;
}

namespace {

image decode_ppm( const std::vector<std::uint8_t>& bytes ) {
    std::size_t pos = 2;
    auto next_int = [&]() {
        while( pos < bytes.size() ) {
            if( bytes[pos] == '#' ) {
                while( pos < bytes.size() && bytes[pos] != '\n' )
                    ++pos;
            } else if( std::isspace( bytes[pos] ) ) {
                ++pos;
            } else {
                break;
            }
        }
        int v = 0;
        bool any = false;
        while( pos < bytes.size() && std::isdigit( bytes[pos] ) ) {
            v = v * 10 + ( bytes[pos++] - '0' );
            any = true;
        }
        if( !any )
            throw format_error( "malformed PPM header" );
        return v;
    };
    const int w = next_int();
    const int h = next_int();
    const int maxval = next_int();
    if( maxval != 255 || w < 1 || h < 1 )
        throw format_error( "only 8-bit P6 PPM images are supported" );
    ++pos; // single whitespace after maxval
    const std::size_t need = static_cast<std::size_t>( w ) * static_cast<std::size_t>( h ) * 3;
    if( bytes.size() < pos + need )
        throw format_error( "truncated PPM payload" );
    image img( w, h );
    for( int y = 0; y < h; ++y )
        for( int x = 0; x < w; ++x ) {
            const std::uint8_t* p = bytes.data() + pos + ( static_cast<std::size_t>( y ) * w + x ) * 3;
            img.set( x, y, { p[0] / 255.0, p[1] / 255.0, p[2] / 255.0 }, 1.0 );
        }
    return img;
}

} // namespace

image read_image( const std::filesystem::path& path ) {
    std::ifstream in( path, std::ios::binary );
    if( !in )
        throw io_error( "cannot open image " + path.string() );
    std::vector<std::uint8_t> bytes( ( std::istreambuf_iterator<char>( in ) ), std::istreambuf_iterator<char>() );
    if( bytes.size() >= 8 && bytes[0] == 0x89 && bytes[1] == 'P' && bytes[2] == 'N' && bytes[3] == 'G' )
        return decode_png( bytes );
    if( bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6' )
        return decode_ppm( bytes );
    throw format_error( "unrecognized image format: " + path.string() );
}

image_diff diff_images( const image& a, const image& b ) {
    if( a.width() != b.width() || a.height() != b.height() )
        throw parameter_error( "image dimensions differ: " + std::to_string( a.width() ) + "x" +
                               std::to_string( a.height() ) + " vs " + std::to_string( b.width() ) + "x" +
                               std::to_string( b.height() ) );
    image_diff d;
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    std::array<double, 4> sums{};
    for( std::size_t i = 0; i < pa.size(); ++i ) {
        const double e = std::abs( static_cast<double>( pa[i] ) - static_cast<double>( pb[i] ) );
        const std::size_t c = i % 4;
        sums[c] += e;
        d.channel_max_abs[c] = std::max( d.channel_max_abs[c], e );
    }
    const double pixels = static_cast<double>( pa.size() / 4 );
    double total = 0.0;
    for( std::size_t c = 0; c < 4; ++c ) {
        d.channel_mean_abs[c] = pixels > 0 ? sums[c] / pixels : 0.0;
        d.max_abs = std::max( d.max_abs, d.channel_max_abs[c] );
        total += sums[c];
    }
    d.mean_abs = pixels > 0 ? total / ( pixels * 4.0 ) : 0.0;
    return d;
}

} // namespace slicecast
