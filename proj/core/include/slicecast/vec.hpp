// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>

namespace slicecast {

struct vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr vec3() = default;
    constexpr vec3( double x_, double y_, double z_ )
        : x( x_ )
        , y( y_ )
        , z( z_ ) {}

    constexpr double operator[]( int i ) const { return i == 0 ? x : ( i == 1 ? y : z ); }
    constexpr double& operator[]( int i ) { return i == 0 ? x : ( i == 1 ? y : z ); }

    constexpr vec3& operator+=( const vec3& o ) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr vec3& operator-=( const vec3& o ) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr vec3& operator*=( double s ) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend constexpr bool operator==( const vec3&, const vec3& ) = default;
};

constexpr vec3 operator+( vec3 a, const vec3& b ) { return a += b; }
constexpr vec3 operator-( vec3 a, const vec3& b ) { return a -= b; }
constexpr vec3 operator-( const vec3& a ) { return { -a.x, -a.y, -a.z }; }
constexpr vec3 operator*( vec3 a, double s ) { return a *= s; }
constexpr vec3 operator*( double s, vec3 a ) { return a *= s; }
constexpr vec3 operator/( const vec3& a, double s ) { return { a.x / s, a.y / s, a.z / s }; }

/// Componentwise product.
constexpr vec3 hadamard( const vec3& a, const vec3& b ) { return { a.x * b.x, a.y * b.y, a.z * b.z }; }

constexpr double dot( const vec3& a, const vec3& b ) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr vec3 cross( const vec3& a, const vec3& b ) {
    return { a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x };
}

inline double length( const vec3& a ) { return std::sqrt( dot( a, a ) ); }

/// Returns the zero vector unchanged.
inline vec3 normalize( const vec3& a ) {
    const double len = length( a );
    return len > 0.0 ? a / len : a;
}

constexpr vec3 lerp( const vec3& a, const vec3& b, double t ) { return a + ( b - a ) * t; }

constexpr vec3 min( const vec3& a, const vec3& b ) {
    return { a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y, a.z < b.z ? a.z : b.z };
}
constexpr vec3 max( const vec3& a, const vec3& b ) {
    return { a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y, a.z > b.z ? a.z : b.z };
}

struct vec4 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double w = 0.0;
};

/// Row-major 4x4 matrix acting on column vectors.
struct mat4 {
    std::array<double, 16> m{};

    static constexpr mat4 identity() {
        mat4 r;
        r.m[0] = r.m[5] = r.m[10] = r.m[15] = 1.0;
        return r;
    }

    constexpr double operator()( int row, int col ) const { return m[static_cast<std::size_t>( row * 4 + col )]; }
    constexpr double& operator()( int row, int col ) { return m[static_cast<std::size_t>( row * 4 + col )]; }
};

constexpr mat4 operator*( const mat4& a, const mat4& b ) {
    mat4 r;
    for( int i = 0; i < 4; ++i )
        for( int j = 0; j < 4; ++j ) {
            double s = 0.0;
            for( int k = 0; k < 4; ++k )
                s += a( i, k ) * b( k, j );
            r( i, j ) = s;
        }
    return r;
}

constexpr vec4 operator*( const mat4& a, const vec4& v ) {
    return { a( 0, 0 ) * v.x + a( 0, 1 ) * v.y + a( 0, 2 ) * v.z + a( 0, 3 ) * v.w,
             a( 1, 0 ) * v.x + a( 1, 1 ) * v.y + a( 1, 2 ) * v.z + a( 1, 3 ) * v.w,
             a( 2, 0 ) * v.x + a( 2, 1 ) * v.y + a( 2, 2 ) * v.z + a( 2, 3 ) * v.w,
             a( 3, 0 ) * v.x + a( 3, 1 ) * v.y + a( 3, 2 ) * v.z + a( 3, 3 ) * v.w };
}

/// The eight corners of [0,1]^3, bit i of the index selecting axis i.
inline constexpr std::array<vec3, 8> unit_cube_vertices = {
    vec3{ 0, 0, 0 }, vec3{ 1, 0, 0 }, vec3{ 0, 1, 0 }, vec3{ 1, 1, 0 },
    vec3{ 0, 0, 1 }, vec3{ 1, 0, 1 }, vec3{ 0, 1, 1 }, vec3{ 1, 1, 1 } };

/// Cube edges as index pairs into unit_cube_vertices.
inline constexpr std::array<std::array<int, 2>, 12> unit_cube_edges = { {
    { 0, 1 }, { 2, 3 }, { 4, 5 }, { 6, 7 }, // along x
    { 0, 2 }, { 1, 3 }, { 4, 6 }, { 5, 7 }, // along y
    { 0, 4 }, { 1, 5 }, { 2, 6 }, { 3, 7 }, // along z
} };

inline bool inside_unit_cube( const vec3& p, double eps = 0.0 ) {
    return p.x >= -eps && p.x <= 1.0 + eps && p.y >= -eps && p.y <= 1.0 + eps && p.z >= -eps && p.z <= 1.0 + eps;
}

struct ray_interval {
    double t_enter = 0.0;
    double t_exit = -1.0;

    bool hit() const { return t_exit >= t_enter; }
};

/// Slab test of origin + t dir against [0,1]^3.
inline ray_interval ray_unit_cube( const vec3& origin, const vec3& dir ) {
    double t0 = -HUGE_VAL;
    double t1 = HUGE_VAL;
    for( int a = 0; a < 3; ++a ) {
        if( dir[a] == 0.0 ) {
            if( origin[a] < 0.0 || origin[a] > 1.0 )
                return {};
            continue;
        }
        const double inv = 1.0 / dir[a];
        double ta = ( 0.0 - origin[a] ) * inv;
        double tb = ( 1.0 - origin[a] ) * inv;
        if( ta > tb ) {
            const double tmp = ta;
            ta = tb;
            tb = tmp;
        }
        t0 = ta > t0 ? ta : t0;
        t1 = tb < t1 ? tb : t1;
    }
    if( t0 > t1 )
        return {};
    return { t0, t1 };
}

} // namespace slicecast
