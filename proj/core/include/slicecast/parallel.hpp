// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace slicecast {

/// 0 means "one worker per hardware thread".
inline int resolve_thread_count( int requested ) {
    if( requested > 0 )
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>( hw ) : 1;
}

/// Splits [0, count) into contiguous blocks, one per worker, and calls
/// body(begin, end) for each. Work items must be independent; the result
/// is then identical for any worker count.
template <class Body>
void parallel_for_blocks( int count, int threads, Body&& body ) {
    const int workers = std::clamp( resolve_thread_count( threads ), 1, std::max( count, 1 ) );
    if( workers <= 1 ) {
        body( 0, count );
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors( static_cast<std::size_t>( workers ) );
    pool.reserve( static_cast<std::size_t>( workers ) );
    for( int w = 0; w < workers; ++w ) {
        const int begin = static_cast<int>( static_cast<long long>( count ) * w / workers );
        const int end = static_cast<int>( static_cast<long long>( count ) * ( w + 1 ) / workers );
        pool.emplace_back( [&, begin, end, w] {
            try {
                body( begin, end );
            } catch( ... ) {
                errors[static_cast<std::size_t>( w )] = std::current_exception();
            }
        } );
    }
    for( auto& t : pool )
        t.join();
    for( auto& e : errors )
        if( e )
            std::rethrow_exception( e );
}

} // namespace slicecast
