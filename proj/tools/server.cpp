// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
//
// slicecast-server: HTTP render service.

#include <slicecast/service.hpp>

#include <CLI11.hpp>

#include <csignal>
#include <iostream>

namespace {

slicecast::http_server* g_server = nullptr;

void on_signal( int ) {
    if( g_server )
        g_server->stop();
}

} // namespace

int main( int argc, char** argv ) {
    CLI::App app{ "slicecast-server: HTTP front end for the slicecast renderer" };
    std::string host = "127.0.0.1";
    int port = 8080;
    slicecast::service_options opt;
    std::string data_dir = ".";
    std::string static_dir;
    app.add_option( "--host", host, "Address to bind" )->capture_default_str();
    app.add_option( "--port", port, "Port (0 picks a free one)" )->capture_default_str()->check( CLI::Range( 0, 65535 ) );
    app.add_option( "--data-dir", data_dir, "Directory of <id>.raw + <id>.json datasets" )
        ->capture_default_str()
        ->check( CLI::ExistingDirectory );
    app.add_option( "--max-concurrency", opt.max_concurrency, "Concurrent renders before 503 (0 = cores)" )
        ->capture_default_str()
        ->check( CLI::NonNegativeNumber );
    app.add_option( "--cache-entries", opt.cache_entries, "Attenuation buffers kept" )->capture_default_str();
    app.add_option( "--render-threads", opt.render_threads, "Threads per render (0 = cores)" )->capture_default_str();
    app.add_option( "--static-dir", static_dir, "Serve this directory at /" )->check( CLI::ExistingDirectory );
    CLI11_PARSE( app, argc, argv );

    opt.data_dir = data_dir;
    opt.static_dir = static_dir;
    try {
        slicecast::render_service service( opt );
        slicecast::http_server server( service );
        const int bound = server.bind( host, port );
        g_server = &server;
        std::signal( SIGINT, on_signal );
        std::signal( SIGTERM, on_signal );
        std::cout << "listening on http://" << host << ":" << bound << std::endl;
        server.listen();
        g_server = nullptr;
    } catch( const std::exception& e ) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
