// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
//
// slicecast: render frames, run benchmark sweeps, compare images and write
// synthetic datasets.

#include <slicecast/error.hpp>
#include <slicecast/image.hpp>
#include <slicecast/scene.hpp>
#include <slicecast/synthetic.hpp>

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace slicecast;

struct common_flags {
    std::string config;
    std::string out;
    std::optional<int> threads;
    std::optional<std::uint64_t> seed;
};

void add_common( CLI::App* cmd, common_flags& f ) {
    cmd->add_option( "--config", f.config, "Scene config (JSON)" )->check( CLI::ExistingFile );
    cmd->add_option( "--threads", f.threads, "Worker threads (0 = all cores)" )->check( CLI::NonNegativeNumber );
    cmd->add_option( "--seed", f.seed, "Seed for synthetic datasets" );
}

scene_config load_config( const common_flags& f ) {
    scene_config cfg = f.config.empty() ? scene_config{} : scene_config::load( f.config );
    if( f.threads )
        cfg.threads = *f.threads;
    if( f.seed )
        cfg.dataset.seed = *f.seed;
    return cfg;
}

std::vector<std::string> split_list( const std::string& s ) {
    std::vector<std::string> out;
    std::string cur;
    for( char c : s ) {
        if( c == ',' ) {
            out.push_back( cur );
            cur.clear();
        } else {
            cur += c;
        }
    }
    if( !cur.empty() )
        out.push_back( cur );
    return out;
}

std::vector<int> parse_int_list( const std::string& s, const char* what ) {
    std::vector<int> out;
    for( const std::string& item : split_list( s ) ) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi( item, &used );
        } catch( const std::exception& ) {
            used = 0;
        }
        if( used != item.size() || v < 1 )
            throw parameter_error( std::string( what ) + " must be a comma-separated list of positive integers" );
        out.push_back( v );
    }
    if( out.empty() )
        throw parameter_error( std::string( what ) + " must not be empty" );
    return out;
}

int cmd_render( const common_flags& f, const std::optional<std::string>& shading, const std::optional<int>& slices,
                const std::optional<int>& resolution, const std::optional<double>& step,
                const std::optional<std::vector<int>>& viewport, const std::string& layer_out, int layer ) {
    scene_config cfg = load_config( f );
    if( shading )
        cfg.method = parse_render_method( *shading );
    if( slices )
        cfg.n_slices = *slices;
    if( resolution )
        cfg.buffer_width = cfg.buffer_height = *resolution;
    if( step )
        cfg.step = *step;
    if( viewport ) {
        cfg.width = ( *viewport )[0];
        cfg.height = ( *viewport )[1];
    }
    if( !f.out.empty() )
        cfg.output = f.out;
    if( cfg.output.empty() )
        cfg.output = "out.png";
    cfg.validate();

    const volume_dataset v = load_scene_volume( cfg );
    const transfer_function tf = load_scene_tf( cfg );

    frame_result frame;
    if( uses_buffer( cfg.method ) ) {
        const auto start = std::chrono::steady_clock::now();
        const attenuation_buffer buffer = build_scene_buffer( v, tf, cfg );
        const double build_ms =
            std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
        frame = run_frame( v, tf, cfg, &buffer );
        frame.build_ms = build_ms;
        if( !layer_out.empty() ) {
            const int k = layer < 0 ? buffer.n_slices() + layer : layer;
            if( k < 0 || k >= buffer.n_slices() )
                throw parameter_error( "--layer is out of range" );
            write_image( layer_out, layer_image( buffer, k ) );
        }
    } else {
        if( !layer_out.empty() )
            throw parameter_error( "--layer-out needs a buffer-based shading method" );
        frame = run_frame( v, tf, cfg );
    }
    write_image( cfg.output, frame.img );
    std::printf( "method=%s size=%dx%d build_ms=%.3f render_ms=%.3f pass_count=%d hash=%016" PRIx64 " out=%s\n",
                 std::string( to_string( cfg.method ) ).c_str(), frame.img.width(), frame.img.height(), frame.build_ms,
                 frame.render_ms, frame.pass_count, frame.img.hash(), cfg.output.string().c_str() );
    return 0;
}

int cmd_bench( const common_flags& f, const std::string& methods, const std::string& slices,
               const std::string& resolutions, int repeats ) {
    const scene_config cfg = load_config( f );
    bench_sweep sweep;
    sweep.methods.clear();
    for( const std::string& m : split_list( methods ) )
        sweep.methods.push_back( parse_render_method( m ) );
    sweep.slices = parse_int_list( slices, "--slices" );
    sweep.resolutions = parse_int_list( resolutions, "--resolutions" );
    sweep.repeats = repeats;

    const volume_dataset v = load_scene_volume( cfg );
    const transfer_function tf = load_scene_tf( cfg );

    std::ofstream file;
    if( !f.out.empty() ) {
        file.open( f.out );
        if( !file )
            throw io_error( "cannot write " + f.out );
    }
    std::ostream& out = f.out.empty() ? std::cout : file;
    out << bench_csv_header() << '\n';
    run_bench( v, tf, cfg, sweep, [&]( const bench_record& r ) {
        out << to_csv_row( r ) << '\n';
        out.flush();
        if( !f.out.empty() )
            std::cerr << to_csv_row( r ) << '\n';
    } );
    return 0;
}

int cmd_diff( const std::string& a, const std::string& b, std::optional<double> max_abs,
              std::optional<double> mean_abs ) {
    const image_diff d = diff_images( read_image( a ), read_image( b ) );
    std::printf( "max_abs=%.9g mean_abs=%.9g\n", d.max_abs, d.mean_abs );
    static const char* names[4] = { "r", "g", "b", "a" };
    for( int c = 0; c < 4; ++c )
        std::printf( "%s: max_abs=%.9g mean_abs=%.9g\n", names[c], d.channel_max_abs[static_cast<std::size_t>( c )],
                     d.channel_mean_abs[static_cast<std::size_t>( c )] );
    const bool ok = ( !max_abs || d.max_abs <= *max_abs ) && ( !mean_abs || d.mean_abs <= *mean_abs );
    return ok ? 0 : 1;
}

int cmd_gen( const std::string& kind, int size, std::uint64_t seed, const std::string& type, const std::string& out ) {
    const volume_dataset v = synthetic::make( kind, size, seed );
    save_raw( out, v, parse_scalar_type( type ) );
    std::printf( "wrote %s (%dx%dx%d %s)\n", out.c_str(), size, size, size, type.c_str() );
    return 0;
}

} // namespace

int main( int argc, char** argv ) {
    CLI::App app{ "slicecast: slice-based ray casting volume renderer" };
    app.require_subcommand( 1 );
    app.set_version_flag( "--version", SLICECAST_VERSION );

    common_flags render_flags;
    std::optional<std::string> shading;
    std::optional<int> n_slices;
    std::optional<int> resolution;
    std::optional<double> step;
    std::optional<std::vector<int>> viewport;
    std::string layer_out;
    int layer = -1;
    CLI::App* render = app.add_subcommand( "render", "Render one frame" );
    add_common( render, render_flags );
    render->add_option( "--out", render_flags.out, "Output image (.png or .ppm)" );
    render->add_option( "--shading", shading, "none|phong|sbrc|shell|cone|extinction|has" );
    render->add_option( "--n-slices", n_slices, "Attenuation buffer slices" )->check( CLI::PositiveNumber );
    render->add_option( "--buffer-res", resolution, "Square attenuation buffer resolution" )
        ->check( CLI::PositiveNumber );
    render->add_option( "--step", step, "Ray sample spacing" )->check( CLI::PositiveNumber );
    render->add_option( "--viewport", viewport, "Viewport width and height" )->expected( 2 );
    render->add_option( "--layer-out", layer_out, "Also write one attenuation buffer layer as an image" );
    render->add_option( "--layer", layer, "Layer for --layer-out; negative counts from the end" );

    common_flags bench_flags;
    std::string methods = "sbrc,has";
    std::string slices = "64,128,256";
    std::string resolutions = "128,256,512";
    int repeats = 3;
    CLI::App* bench = app.add_subcommand( "bench", "Sweep slices x buffer resolutions and write CSV" );
    add_common( bench, bench_flags );
    bench->add_option( "--out", bench_flags.out, "CSV output (default stdout)" );
    bench->add_option( "--methods", methods, "Comma-separated methods" )->capture_default_str();
    bench->add_option( "--slices", slices, "Comma-separated slice counts" )->capture_default_str();
    bench->add_option( "--resolutions", resolutions, "Comma-separated square buffer resolutions" )
        ->capture_default_str();
    bench->add_option( "--repeats", repeats, "Timed repeats after one warm-up run (>= 3)" )->capture_default_str();

    std::string image_a;
    std::string image_b;
    std::optional<double> max_abs;
    std::optional<double> mean_abs;
    CLI::App* diff = app.add_subcommand( "diff", "Compare two images" );
    diff->add_option( "a", image_a, "First image" )->required()->check( CLI::ExistingFile );
    diff->add_option( "b", image_b, "Second image" )->required()->check( CLI::ExistingFile );
    diff->add_option( "--max-abs", max_abs, "Fail (exit 1) above this max abs difference" );
    diff->add_option( "--mean-abs", mean_abs, "Fail (exit 1) above this mean abs difference" );

    std::string kind = "sphere-blob";
    int size = 64;
    std::uint64_t gen_seed = 1;
    std::string type = "u8";
    std::string gen_out;
    CLI::App* gen = app.add_subcommand( "gen-dataset", "Write a synthetic dataset as .raw plus .json descriptor" );
    gen->add_option( "--kind", kind, "constant|sphere-blob|slab|engine|random-blob" )->capture_default_str();
    gen->add_option( "--size", size, "Voxels per side" )->capture_default_str()->check( CLI::Range( 2, 1024 ) );
    gen->add_option( "--seed", gen_seed, "Seed for random kinds" )->capture_default_str();
    gen->add_option( "--type", type, "u8|u16|f32" )->capture_default_str();
    gen->add_option( "--out", gen_out, "Output .raw path" )->required();

    try {
        app.parse( argc, argv );
    } catch( const CLI::ParseError& e ) {
        return app.exit( e );
    }

    try {
        if( *render )
            return cmd_render( render_flags, shading, n_slices, resolution, step, viewport, layer_out, layer );
        if( *bench )
            return cmd_bench( bench_flags, methods, slices, resolutions, repeats );
        if( *diff )
            return cmd_diff( image_a, image_b, max_abs, mean_abs );
        if( *gen )
            return cmd_gen( kind, size, gen_seed, type, gen_out );
    } catch( const slicecast::parameter_error& e ) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch( const std::exception& e ) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
