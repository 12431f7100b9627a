// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <slicecast/light_buffer.hpp>
#include <slicecast/scene.hpp>

#include <array>
#include <atomic>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slicecast {

struct service_options {
    std::filesystem::path data_dir;
    /// Renders allowed at once; further requests get 503. 0 means one per
    /// hardware thread.
    int max_concurrency = 0;
    std::size_t cache_entries = 8;
    int max_viewport = 1024; // per side
    int max_slices = 2048;
    int max_buffer_resolution = 2048;
    /// Worker threads used inside a single render.
    int render_threads = 0;
    /// Optional directory served at "/".
    std::filesystem::path static_dir;
    std::function<void( std::string_view )> warn; // defaults to stderr
};

struct http_response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
    std::vector<std::pair<std::string, std::string>> headers;

    std::optional<std::string> header( std::string_view name ) const;
};

struct dataset_info {
    std::string id;
    std::array<int, 3> dims{};
    scalar_type type = scalar_type::u8;
};

/// Request handling without any transport. Thread safe.
class render_service {
  public:
    explicit render_service( service_options options );
    ~render_service();
    render_service( const render_service& ) = delete;
    render_service& operator=( const render_service& ) = delete;

    /// POST /render. The body is a scene config whose dataset is an id from
    /// the data directory and whose transfer function is a preset or inline
    /// points. Answers 200 with a PNG, 400 for invalid requests, 404 for
    /// unknown datasets and 503 when max_concurrency renders are running.
    http_response handle_render( std::string_view body );
    /// GET /datasets: [{"id", "dims", "scalar_type"}], sorted by id.
    http_response handle_datasets() const;
    /// GET /health: {"status": "ok", "version": ...}.
    http_response handle_health() const;

    /// Raw + descriptor pairs in the data directory. Malformed entries are
    /// skipped with a warning.
    std::vector<dataset_info> list_datasets() const;

    /// A render slot; handle_render answers 503 while all slots are held.
    class slot {
      public:
        explicit slot( std::atomic<int>& counter )
            : m_counter( &counter ) {}
        slot( slot&& o ) noexcept
            : m_counter( std::exchange( o.m_counter, nullptr ) ) {}
        slot& operator=( slot&& ) = delete;
        ~slot() {
            if( m_counter )
                m_counter->fetch_sub( 1 );
        }

      private:
        std::atomic<int>* m_counter;
    };
    std::optional<slot> try_acquire_slot();

    struct cache_stats {
        std::size_t hits = 0;
        std::size_t misses = 0;
        std::size_t entries = 0;
    };
    cache_stats buffer_cache_stats() const;

    const service_options& options() const { return m_options; }

  private:
    struct state;
    service_options m_options;
    std::unique_ptr<state> m_state;
};

/// HTTP/1.1 front end for render_service.
class http_server {
  public:
    explicit http_server( render_service& service );
    ~http_server();
    http_server( const http_server& ) = delete;
    http_server& operator=( const http_server& ) = delete;

    /// Binds host:port; port 0 picks a free port. Returns the bound port.
    /// Throws io_error on failure.
    int bind( const std::string& host, int port );
    /// Serves until stop(); call after bind().
    void listen();
    /// listen() on a background thread.
    void start();
    /// Stops accepting connections and joins the background thread.
    void stop();
    bool running() const;

  private:
    struct impl;
    std::unique_ptr<impl> m_impl;
};

} // namespace slicecast
