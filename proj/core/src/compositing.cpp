// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/compositing.hpp>
#include <slicecast/error.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace slicecast {

double extinction_from_alpha( double alpha, double dt ) {
    if( !( dt > 0.0 ) )
        throw parameter_error( "extinction segment length must be positive" );
    const double a = std::clamp( alpha, 0.0, max_extinction_alpha );
    return -std::log1p( -a ) / dt;
}

double sum_extinction( std::span<const extinction_sample> samples ) {
    std::vector<double> terms;
    terms.reserve( samples.size() );
    for( const extinction_sample& s : samples ) {
        if( !( s.tau >= 0.0 ) )
            throw parameter_error( "extinction coefficients must be non-negative" );
        terms.push_back( s.tau * s.dt );
    }
    std::sort( terms.begin(), terms.end() );

    // Neumaier summation over the sorted terms.
    double sum = 0.0;
    double carry = 0.0;
    for( double t : terms ) {
        const double next = sum + t;
        if( std::abs( sum ) >= std::abs( t ) )
            carry += ( sum - next ) + t;
        else
            carry += ( t - next ) + sum;
        sum = next;
    }
    return std::exp( -( sum + carry ) );
}

} // namespace slicecast
