// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/image.hpp>
#include <slicecast/parallel.hpp>
#include <slicecast/service.hpp>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <future>
#include <iostream>
#include <list>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace slicecast {

std::optional<std::string> http_response::header( std::string_view name ) const {
    for( const auto& [k, v] : headers )
        if( k == name )
            return v;
    return std::nullopt;
}

namespace {

using json = nlohmann::json;
using buffer_ptr = std::shared_ptr<const attenuation_buffer>;
using volume_ptr = std::shared_ptr<const volume_dataset>;

http_response error_response( int status, std::string_view message ) {
    http_response r;
    r.status = status;
    r.body = json{ { "error", message } }.dump();
    return r;
}

std::string format_double( double d ) {
    char buf[64];
    const auto res = std::to_chars( buf, buf + sizeof( buf ), d );
    return std::string( buf, res.ptr );
}

bool valid_dataset_id( std::string_view id ) {
    if( id.empty() || id.size() > 128 || id.front() == '.' )
        return false;
    return std::all_of( id.begin(), id.end(), []( char c ) {
        return ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || ( c >= '0' && c <= '9' ) || c == '-' ||
               c == '_' || c == '.';
    } );
}

std::string buffer_key( const std::string& dataset, const transfer_function& tf, const scene_config& c ) {
    const vec3 d = normalize( c.light.direction );
    std::string key = dataset + '|' + tf.to_json() + '|';
    for( double x : { d.x, d.y, d.z, c.light.color.x, c.light.color.y, c.light.color.z, c.reference_spacing } )
        key += format_double( x ) + ',';
    key += std::to_string( c.n_slices ) + '|' + std::to_string( c.buffer_width ) + 'x' +
           std::to_string( c.buffer_height ) + '|' + std::to_string( c.compensation_n );
    return key;
}

} // namespace

struct render_service::state {
    std::atomic<int> in_flight{ 0 };
    int max_concurrency = 1;

    // Buffer LRU: the front of `order` is the most recently used key.
    mutable std::mutex cache_mutex;
    std::list<std::string> order;
    struct entry {
        std::shared_future<buffer_ptr> value;
        std::list<std::string>::iterator pos;
    };
    std::unordered_map<std::string, entry> buffers;
    std::size_t hits = 0;
    std::size_t misses = 0;

    std::mutex volume_mutex;
    std::map<std::string, std::shared_future<volume_ptr>> volumes;
};

render_service::render_service( service_options options )
    : m_options( std::move( options ) )
    , m_state( std::make_unique<state>() ) {
    if( m_options.max_concurrency < 0 )
        throw parameter_error( "max concurrency must be >= 0" );
    if( m_options.cache_entries < 1 )
        throw parameter_error( "buffer cache needs at least one entry" );
    if( !m_options.warn )
        m_options.warn = []( std::string_view msg ) { std::cerr << "warning: " << msg << '\n'; };
    m_state->max_concurrency = resolve_thread_count( m_options.max_concurrency );
}

render_service::~render_service() = default;

std::optional<render_service::slot> render_service::try_acquire_slot() {
    int cur = m_state->in_flight.load();
    while( cur < m_state->max_concurrency ) {
        if( m_state->in_flight.compare_exchange_weak( cur, cur + 1 ) )
            return slot( m_state->in_flight );
    }
    return std::nullopt;
}

render_service::cache_stats render_service::buffer_cache_stats() const {
    std::lock_guard lock( m_state->cache_mutex );
    return { m_state->hits, m_state->misses, m_state->buffers.size() };
}

std::vector<dataset_info> render_service::list_datasets() const {
    std::vector<dataset_info> out;
    std::error_code ec;
    if( m_options.data_dir.empty() || !std::filesystem::is_directory( m_options.data_dir, ec ) )
        return out;
    for( const auto& e : std::filesystem::directory_iterator( m_options.data_dir, ec ) ) {
        if( !e.is_regular_file() || e.path().extension() != ".json" )
            continue;
        const std::string id = e.path().stem().string();
        std::filesystem::path raw = e.path();
        raw.replace_extension( ".raw" );
        if( !std::filesystem::exists( raw ) )
            continue; // a sidecar without payload is not a dataset
        if( !valid_dataset_id( id ) ) {
            m_options.warn( "skipping dataset with unusable id '" + id + "'" );
            continue;
        }
        try {
            const dataset_descriptor d = dataset_descriptor::load( e.path() );
            const auto size = std::filesystem::file_size( raw );
            if( size != d.byte_size() ) {
                m_options.warn( "skipping dataset '" + id + "': raw size " + std::to_string( size ) +
                                " does not match descriptor (" + std::to_string( d.byte_size() ) + ")" );
                continue;
            }
            out.push_back( { id, d.dims, d.type } );
        } catch( const std::exception& ex ) {
            m_options.warn( "skipping dataset '" + id + "': " + ex.what() );
        }
    }
    std::sort( out.begin(), out.end(), []( const dataset_info& a, const dataset_info& b ) { return a.id < b.id; } );
    return out;
}

http_response render_service::handle_datasets() const {
    json arr = json::array();
    for( const dataset_info& d : list_datasets() )
        arr.push_back( { { "id", d.id }, { "dims", d.dims }, { "scalar_type", std::string( to_string( d.type ) ) } } );
    http_response r;
    r.body = arr.dump();
    return r;
}

http_response render_service::handle_health() const {
    http_response r;
    r.body = json{ { "status", "ok" }, { "version", SLICECAST_VERSION } }.dump();
    return r;
}

http_response render_service::handle_render( std::string_view body ) {
    scene_config cfg;
    try {
        cfg = scene_config::from_json( body );
    } catch( const error& e ) {
        return error_response( 400, e.what() );
    }
    if( cfg.dataset.type != dataset_source::kind::id )
        return error_response( 400, "dataset must be an id from GET /datasets" );
    if( !valid_dataset_id( cfg.dataset.id ) )
        return error_response( 400, "invalid dataset id" );
    if( !cfg.tf.path.empty() )
        return error_response( 400, "transfer functions must be a preset or inline points" );
    if( !cfg.output.empty() )
        return error_response( 400, "output is not accepted by the service" );
    if( cfg.width > m_options.max_viewport || cfg.height > m_options.max_viewport )
        return error_response( 400, "viewport exceeds " + std::to_string( m_options.max_viewport ) + " pixels per side" );
    if( cfg.n_slices > m_options.max_slices )
        return error_response( 400, "n_slices exceeds " + std::to_string( m_options.max_slices ) );
    if( cfg.buffer_width > m_options.max_buffer_resolution || cfg.buffer_height > m_options.max_buffer_resolution )
        return error_response( 400, "buffer resolution exceeds " + std::to_string( m_options.max_buffer_resolution ) );

    std::optional<transfer_function> tf;
    try {
        tf.emplace( load_scene_tf( cfg ) );
    } catch( const error& e ) {
        return error_response( 400, e.what() );
    }

    const std::filesystem::path raw = m_options.data_dir / ( cfg.dataset.id + ".raw" );
    const std::filesystem::path desc = m_options.data_dir / ( cfg.dataset.id + ".json" );
    if( m_options.data_dir.empty() || !std::filesystem::exists( raw ) || !std::filesystem::exists( desc ) )
        return error_response( 404, "unknown dataset '" + cfg.dataset.id + "'" );

    std::optional<slot> held = try_acquire_slot();
    if( !held )
        return error_response( 503, "server is at capacity, retry later" );

    try {
        cfg.threads = m_options.render_threads;

        // Volumes are loaded once per id.
        std::shared_future<volume_ptr> vol_future;
        bool load_volume = false;
        std::promise<volume_ptr> vol_promise;
        {
            std::lock_guard lock( m_state->volume_mutex );
            auto it = m_state->volumes.find( cfg.dataset.id );
            if( it == m_state->volumes.end() ) {
                if( m_state->volumes.size() >= m_options.cache_entries )
                    m_state->volumes.clear();
                vol_future = vol_promise.get_future().share();
                m_state->volumes.emplace( cfg.dataset.id, vol_future );
                load_volume = true;
            } else {
                vol_future = it->second;
            }
        }
        if( load_volume ) {
            try {
                vol_promise.set_value( std::make_shared<const volume_dataset>( load_raw( raw, desc ) ) );
            } catch( ... ) {
                vol_promise.set_exception( std::current_exception() );
                std::lock_guard lock( m_state->volume_mutex );
                m_state->volumes.erase( cfg.dataset.id );
            }
        }
        const volume_ptr volume = vol_future.get();

        buffer_ptr buffer;
        double build_ms = 0.0;
        bool cache_hit = false;
        if( uses_buffer( cfg.method ) ) {
            const std::string key = buffer_key( cfg.dataset.id, *tf, cfg );
            std::shared_future<buffer_ptr> fut;
            std::promise<buffer_ptr> promise;
            bool build = false;
            {
                std::lock_guard lock( m_state->cache_mutex );
                auto it = m_state->buffers.find( key );
                if( it != m_state->buffers.end() ) {
                    m_state->order.splice( m_state->order.begin(), m_state->order, it->second.pos );
                    fut = it->second.value;
                    ++m_state->hits;
                    cache_hit = true;
                } else {
                    while( m_state->buffers.size() >= m_options.cache_entries ) {
                        m_state->buffers.erase( m_state->order.back() );
                        m_state->order.pop_back();
                    }
                    m_state->order.push_front( key );
                    fut = promise.get_future().share();
                    m_state->buffers.emplace( key, state::entry{ fut, m_state->order.begin() } );
                    ++m_state->misses;
                    build = true;
                }
            }
            if( build ) {
                const auto start = std::chrono::steady_clock::now();
                try {
                    promise.set_value( std::make_shared<const attenuation_buffer>(
                        build_scene_buffer( *volume, *tf, cfg ) ) );
                } catch( ... ) {
                    promise.set_exception( std::current_exception() );
                    std::lock_guard lock( m_state->cache_mutex );
                    auto it = m_state->buffers.find( key );
                    if( it != m_state->buffers.end() ) {
                        m_state->order.erase( it->second.pos );
                        m_state->buffers.erase( it );
                    }
                }
                build_ms = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
            }
            buffer = fut.get();
        }

        const frame_result frame = run_frame( *volume, *tf, cfg, buffer.get() );
        const std::vector<std::uint8_t> png = encode_png( frame.img );

        http_response r;
        r.content_type = "image/png";
        r.body.assign( png.begin(), png.end() );
        r.headers.emplace_back( "X-Build-Ms", format_double( build_ms ) );
        r.headers.emplace_back( "X-Render-Ms", format_double( frame.render_ms ) );
        r.headers.emplace_back( "X-Pass-Count", std::to_string( frame.pass_count ) );
        if( uses_buffer( cfg.method ) )
            r.headers.emplace_back( "X-Buffer-Cache", cache_hit ? "hit" : "miss" );
        return r;
    } catch( const parameter_error& e ) {
        return error_response( 400, e.what() );
    } catch( const configuration_error& e ) {
        return error_response( 400, e.what() );
    } catch( const std::exception& e ) {
        return error_response( 500, e.what() );
    }
}

struct http_server::impl {
    render_service& service;
    httplib::Server server;
    std::thread thread;
    bool bound = false;

    explicit impl( render_service& s )
        : service( s ) {}
};

namespace {

void send( httplib::Response& res, const http_response& r ) {
    res.status = r.status;
    for( const auto& [k, v] : r.headers )
        res.set_header( k, v );
    res.set_content( r.body, r.content_type );
}

} // namespace

http_server::http_server( render_service& service )
    : m_impl( std::make_unique<impl>( service ) ) {
    httplib::Server& svr = m_impl->server;
    render_service& svc = m_impl->service;

    svr.set_default_headers( { { "Access-Control-Allow-Origin", "*" },
                               { "Access-Control-Expose-Headers", "X-Build-Ms, X-Render-Ms, X-Pass-Count, X-Buffer-Cache" } } );
    svr.Options( ".*", []( const httplib::Request&, httplib::Response& res ) {
        res.set_header( "Access-Control-Allow-Methods", "GET, POST, OPTIONS" );
        res.set_header( "Access-Control-Allow-Headers", "Content-Type" );
        res.status = 204;
    } );
    svr.Post( "/render", [&svc]( const httplib::Request& req, httplib::Response& res ) {
        send( res, svc.handle_render( req.body ) );
    } );
    svr.Get( "/datasets", [&svc]( const httplib::Request&, httplib::Response& res ) { send( res, svc.handle_datasets() ); } );
    svr.Get( "/health", [&svc]( const httplib::Request&, httplib::Response& res ) { send( res, svc.handle_health() ); } );
    if( !svc.options().static_dir.empty() && !svr.set_mount_point( "/", svc.options().static_dir.string() ) )
        throw io_error( "static directory " + svc.options().static_dir.string() + " does not exist" );
}

http_server::~http_server() { stop(); }

int http_server::bind( const std::string& host, int port ) {
    httplib::Server& svr = m_impl->server;
    if( port == 0 ) {
        const int p = svr.bind_to_any_port( host );
        if( p < 0 )
            throw io_error( "cannot bind " + host );
        port = p;
    } else if( !svr.bind_to_port( host, port ) ) {
        throw io_error( "cannot bind " + host + ":" + std::to_string( port ) );
    }
    m_impl->bound = true;
    return port;
}

void http_server::listen() {
    if( !m_impl->bound )
        throw configuration_error( "http_server::listen called before bind" );
    m_impl->server.listen_after_bind();
}

void http_server::start() {
    if( !m_impl->bound )
        throw configuration_error( "http_server::start called before bind" );
    m_impl->thread = std::thread( [this] { m_impl->server.listen_after_bind(); } );
    m_impl->server.wait_until_ready();
}

void http_server::stop() {
    if( m_impl->bound )
        m_impl->server.stop();
    if( m_impl->thread.joinable() )
        m_impl->thread.join();
}

bool http_server::running() const { return m_impl->server.is_running(); }

} // namespace slicecast
