// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/error.hpp>
#include <slicecast/scene.hpp>
#include <slicecast/synthetic.hpp>

#include <nlohmann/json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace slicecast {

std::string_view to_string( render_method m ) {
    switch( m ) {
    case render_method::none:
        return "none";
    case render_method::phong:
        return "phong";
    case render_method::sbrc:
        return "sbrc";
    case render_method::shell:
        return "shell";
    case render_method::cone:
        return "cone";
    case render_method::extinction:
        return "extinction";
    case render_method::has:
        return "has";
    }
    return "none";
}

render_method parse_render_method( std::string_view s ) {
    if( s == "none" )
        return render_method::none;
    if( s == "phong" )
        return render_method::phong;
    if( s == "sbrc" || s == "sbrc_shadow" )
        return render_method::sbrc;
    if( s == "shell" )
        return render_method::shell;
    if( s == "cone" )
        return render_method::cone;
    if( s == "extinction" )
        return render_method::extinction;
    if( s == "has" )
        return render_method::has;
    throw parameter_error( "unknown shading method '" + std::string( s ) +
                           "' (expected none, phong, sbrc, shell, cone, extinction or has)" );
}

bool uses_buffer( render_method m ) {
    return m == render_method::sbrc || m == render_method::shell || m == render_method::cone ||
           m == render_method::extinction;
}

namespace {

using json = nlohmann::json;

shading_mode to_shading_mode( render_method m ) {
    switch( m ) {
    case render_method::phong:
        return shading_mode::phong;
    case render_method::sbrc:
        return shading_mode::sbrc_shadow;
    case render_method::shell:
        return shading_mode::shell;
    case render_method::cone:
        return shading_mode::cone;
    case render_method::extinction:
        return shading_mode::extinction;
    default:
        return shading_mode::none;
    }
}

vec3 read_vec3( const json& j, const char* what ) {
    if( !j.is_array() || j.size() != 3 )
        throw parameter_error( std::string( what ) + " must be an array of three numbers" );
    vec3 r;
    for( int i = 0; i < 3; ++i ) {
        if( !j[static_cast<std::size_t>( i )].is_number() )
            throw parameter_error( std::string( what ) + " must be an array of three numbers" );
        r[i] = j[static_cast<std::size_t>( i )].get<double>();
    }
    return r;
}

json write_vec3( const vec3& v ) { return json::array( { v.x, v.y, v.z } ); }

double read_number( const json& j, const char* what ) {
    if( !j.is_number() )
        throw parameter_error( std::string( what ) + " must be a number" );
    return j.get<double>();
}

int read_int( const json& j, const char* what ) {
    if( !j.is_number_integer() )
        throw parameter_error( std::string( what ) + " must be an integer" );
    const auto v = j.get<long long>();
    if( v < -( 1LL << 30 ) || v > ( 1LL << 30 ) )
        throw parameter_error( std::string( what ) + " is out of range" );
    return static_cast<int>( v );
}

std::string read_string( const json& j, const char* what ) {
    if( !j.is_string() )
        throw parameter_error( std::string( what ) + " must be a string" );
    return j.get<std::string>();
}

std::vector<double> read_numbers( const json& j, const char* what ) {
    if( !j.is_array() )
        throw parameter_error( std::string( what ) + " must be an array of numbers" );
    std::vector<double> out;
    for( const json& e : j )
        out.push_back( read_number( e, what ) );
    return out;
}

void check_keys( const json& obj, std::initializer_list<std::string_view> allowed, const char* what ) {
    for( auto it = obj.begin(); it != obj.end(); ++it ) {
        bool ok = false;
        for( std::string_view a : allowed )
            ok = ok || it.key() == a;
        if( !ok )
            throw parameter_error( std::string( "unknown key '" ) + it.key() + "' in " + what );
    }
}

std::filesystem::path resolve( const std::filesystem::path& base, const std::string& p ) {
    const std::filesystem::path path( p );
    return path.is_relative() && !base.empty() ? base / path : path;
}

std::vector<control_point> read_points( const json& j ) {
    // Reuse the transfer function parser for validation.
    return transfer_function::from_json( j.dump() ).control_points();
}

void read_dataset( const json& j, dataset_source& d, const std::filesystem::path& base ) {
    if( j.is_string() ) {
        d.type = dataset_source::kind::id;
        d.id = j.get<std::string>();
        return;
    }
    if( !j.is_object() )
        throw parameter_error( "dataset must be an id string or an object" );
    check_keys( j, { "synthetic", "size", "seed", "raw", "descriptor", "id" }, "dataset" );
    if( j.contains( "raw" ) ) {
        d.type = dataset_source::kind::file;
        d.raw = resolve( base, read_string( j["raw"], "dataset.raw" ) );
        if( j.contains( "descriptor" ) )
            d.descriptor = resolve( base, read_string( j["descriptor"], "dataset.descriptor" ) );
        else
            d.descriptor = std::filesystem::path( d.raw ).replace_extension( ".json" );
    } else if( j.contains( "id" ) ) {
        d.type = dataset_source::kind::id;
        d.id = read_string( j["id"], "dataset.id" );
    } else {
        d.type = dataset_source::kind::synthetic;
        if( j.contains( "synthetic" ) )
            d.synthetic = read_string( j["synthetic"], "dataset.synthetic" );
        if( j.contains( "size" ) )
            d.size = read_int( j["size"], "dataset.size" );
        if( j.contains( "seed" ) ) {
            if( !j["seed"].is_number_unsigned() )
                throw parameter_error( "dataset.seed must be a non-negative integer" );
            d.seed = j["seed"].get<std::uint64_t>();
        }
    }
}

void read_tf( const json& j, tf_source& t, const std::filesystem::path& base ) {
    if( j.is_string() ) {
        t.preset = j.get<std::string>();
        return;
    }
    if( j.is_array() ) {
        t.points = read_points( j );
        return;
    }
    if( !j.is_object() )
        throw parameter_error( "tf must be a preset name, an object or an array of control points" );
    check_keys( j, { "preset", "path", "points" }, "tf" );
    if( j.contains( "preset" ) )
        t.preset = read_string( j["preset"], "tf.preset" );
    if( j.contains( "path" ) )
        t.path = resolve( base, read_string( j["path"], "tf.path" ) );
    if( j.contains( "points" ) )
        t.points = read_points( j["points"] );
}

} // namespace

scene_config scene_config::from_json( std::string_view text, const std::filesystem::path& base_dir ) {
    json j;
    try {
        j = json::parse( text );
    } catch( const json::exception& e ) {
        throw format_error( std::string( "scene config is not valid JSON: " ) + e.what() );
    }
    if( !j.is_object() )
        throw format_error( "scene config must be a JSON object" );
    check_keys( j,
                { "dataset", "tf", "camera", "light", "shading", "step", "viewport", "early_termination_alpha",
                  "ambient_floor", "lookup", "n_slices", "buffer_resolution", "compensation_n", "phong", "shell",
                  "cone", "reference_spacing", "threads", "output" },
                "scene config" );

    scene_config c;
    if( j.contains( "dataset" ) )
        read_dataset( j["dataset"], c.dataset, base_dir );
    if( j.contains( "tf" ) )
        read_tf( j["tf"], c.tf, base_dir );
    if( j.contains( "camera" ) ) {
        const json& cam = j["camera"];
        if( !cam.is_object() )
            throw parameter_error( "camera must be an object" );
        check_keys( cam, { "position", "target", "up", "fov" }, "camera" );
        if( cam.contains( "position" ) )
            c.cam.position = read_vec3( cam["position"], "camera.position" );
        if( cam.contains( "target" ) )
            c.cam.target = read_vec3( cam["target"], "camera.target" );
        if( cam.contains( "up" ) )
            c.cam.up = read_vec3( cam["up"], "camera.up" );
        if( cam.contains( "fov" ) )
            c.cam.fov_y_degrees = read_number( cam["fov"], "camera.fov" );
    }
    if( j.contains( "light" ) ) {
        const json& l = j["light"];
        if( !l.is_object() )
            throw parameter_error( "light must be an object" );
        check_keys( l, { "direction", "color" }, "light" );
        if( l.contains( "direction" ) )
            c.light.direction = read_vec3( l["direction"], "light.direction" );
        if( l.contains( "color" ) )
            c.light.color = read_vec3( l["color"], "light.color" );
    }
    if( j.contains( "shading" ) )
        c.method = parse_render_method( read_string( j["shading"], "shading" ) );
    if( j.contains( "step" ) )
        c.step = read_number( j["step"], "step" );
    if( j.contains( "viewport" ) ) {
        const json& vp = j["viewport"];
        if( !vp.is_array() || vp.size() != 2 )
            throw parameter_error( "viewport must be [width, height]" );
        c.width = read_int( vp[0], "viewport width" );
        c.height = read_int( vp[1], "viewport height" );
    }
    if( j.contains( "early_termination_alpha" ) )
        c.early_termination_alpha = read_number( j["early_termination_alpha"], "early_termination_alpha" );
    if( j.contains( "ambient_floor" ) )
        c.ambient_floor = read_number( j["ambient_floor"], "ambient_floor" );
    if( j.contains( "lookup" ) ) {
        const std::string m = read_string( j["lookup"], "lookup" );
        if( m == "linear" )
            c.lookup = lookup_mode::linear;
        else if( m == "nearest" )
            c.lookup = lookup_mode::nearest;
        else
            throw parameter_error( "lookup must be 'linear' or 'nearest'" );
    }
    if( j.contains( "n_slices" ) )
        c.n_slices = read_int( j["n_slices"], "n_slices" );
    if( j.contains( "buffer_resolution" ) ) {
        const json& r = j["buffer_resolution"];
        if( r.is_array() && r.size() == 2 ) {
            c.buffer_width = read_int( r[0], "buffer width" );
            c.buffer_height = read_int( r[1], "buffer height" );
        } else {
            c.buffer_width = c.buffer_height = read_int( r, "buffer_resolution" );
        }
    }
    if( j.contains( "compensation_n" ) )
        c.compensation_n = read_int( j["compensation_n"], "compensation_n" );
    if( j.contains( "phong" ) ) {
        const json& p = j["phong"];
        if( !p.is_object() )
            throw parameter_error( "phong must be an object" );
        check_keys( p, { "ambient", "diffuse", "specular", "shininess" }, "phong" );
        if( p.contains( "ambient" ) )
            c.phong.ambient = read_number( p["ambient"], "phong.ambient" );
        if( p.contains( "diffuse" ) )
            c.phong.diffuse = read_number( p["diffuse"], "phong.diffuse" );
        if( p.contains( "specular" ) )
            c.phong.specular = read_number( p["specular"], "phong.specular" );
        if( p.contains( "shininess" ) )
            c.phong.shininess = read_number( p["shininess"], "phong.shininess" );
    }
    if( j.contains( "shell" ) ) {
        const json& s = j["shell"];
        if( !s.is_object() )
            throw parameter_error( "shell must be an object" );
        check_keys( s, { "radii_voxels", "weights" }, "shell" );
        if( s.contains( "radii_voxels" ) )
            c.shell_radii_voxels = read_numbers( s["radii_voxels"], "shell.radii_voxels" );
        if( s.contains( "weights" ) )
            c.shell_weights = read_numbers( s["weights"], "shell.weights" );
    }
    if( j.contains( "cone" ) ) {
        const json& k = j["cone"];
        if( !k.is_object() )
            throw parameter_error( "cone must be an object" );
        check_keys( k, { "axis_samples", "spread", "step_length", "angles" }, "cone" );
        if( k.contains( "axis_samples" ) )
            c.cone.axis_samples = read_int( k["axis_samples"], "cone.axis_samples" );
        if( k.contains( "spread" ) )
            c.cone.spread = read_number( k["spread"], "cone.spread" );
        if( k.contains( "step_length" ) )
            c.cone.step_length = read_number( k["step_length"], "cone.step_length" );
        if( k.contains( "angles" ) )
            c.cone.angles = read_numbers( k["angles"], "cone.angles" );
    }
    if( j.contains( "reference_spacing" ) )
        c.reference_spacing = read_number( j["reference_spacing"], "reference_spacing" );
    if( j.contains( "threads" ) )
        c.threads = read_int( j["threads"], "threads" );
    if( j.contains( "output" ) )
        c.output = resolve( base_dir, read_string( j["output"], "output" ) );
    c.validate();
    return c;
}

scene_config scene_config::load( const std::filesystem::path& path ) {
    std::ifstream in( path, std::ios::binary );
    if( !in )
        throw io_error( "cannot open scene config " + path.string() );
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json( ss.str(), path.parent_path() );
}

std::string scene_config::to_json() const {
    json j;
    switch( dataset.type ) {
    case dataset_source::kind::synthetic:
        j["dataset"] = { { "synthetic", dataset.synthetic }, { "size", dataset.size }, { "seed", dataset.seed } };
        break;
    case dataset_source::kind::file:
        j["dataset"] = { { "raw", dataset.raw.string() }, { "descriptor", dataset.descriptor.string() } };
        break;
    case dataset_source::kind::id:
        j["dataset"] = dataset.id;
        break;
    }
    if( !tf.points.empty() )
        j["tf"] = json::parse( transfer_function( tf.points ).to_json() );
    else if( !tf.path.empty() )
        j["tf"] = { { "path", tf.path.string() } };
    else
        j["tf"] = tf.preset;
    j["camera"] = { { "position", write_vec3( cam.position ) },
                    { "target", write_vec3( cam.target ) },
                    { "up", write_vec3( cam.up ) },
                    { "fov", cam.fov_y_degrees } };
    j["light"] = { { "direction", write_vec3( light.direction ) }, { "color", write_vec3( light.color ) } };
    j["shading"] = std::string( to_string( method ) );
    j["step"] = step;
    j["viewport"] = { width, height };
    j["early_termination_alpha"] = early_termination_alpha;
    j["ambient_floor"] = ambient_floor;
    j["lookup"] = lookup == lookup_mode::linear ? "linear" : "nearest";
    j["n_slices"] = n_slices;
    j["buffer_resolution"] = { buffer_width, buffer_height };
    j["compensation_n"] = compensation_n;
    j["phong"] = { { "ambient", phong.ambient },
                   { "diffuse", phong.diffuse },
                   { "specular", phong.specular },
                   { "shininess", phong.shininess } };
    j["shell"] = { { "radii_voxels", shell_radii_voxels }, { "weights", shell_weights } };
    j["cone"] = { { "axis_samples", cone.axis_samples },
                  { "spread", cone.spread },
                  { "step_length", cone.step_length },
                  { "angles", cone.angles } };
    j["reference_spacing"] = reference_spacing;
    j["threads"] = threads;
    if( !output.empty() )
        j["output"] = output.string();
    return j.dump( 2 );
}

void scene_config::validate() const {
    if( width < 1 || height < 1 )
        throw parameter_error( "viewport dimensions must be >= 1" );
    if( !( step > 0.0 ) )
        throw parameter_error( "step must be positive" );
    if( n_slices < 1 )
        throw parameter_error( "n_slices must be >= 1" );
    if( buffer_width < 1 || buffer_height < 1 )
        throw parameter_error( "buffer resolution must be >= 1" );
    if( compensation_n < 0 )
        throw parameter_error( "compensation_n must be >= 0" );
    if( threads < 0 )
        throw parameter_error( "threads must be >= 0" );
    if( dataset.type == dataset_source::kind::synthetic && dataset.size < 2 )
        throw parameter_error( "synthetic dataset size must be >= 2" );
    if( length( light.direction ) == 0.0 )
        throw parameter_error( "light direction must be nonzero" );
    shell_kernel sk{ shell_radii_voxels, shell_weights };
    sk.validate();
    render_settings rs;
    rs.cam = cam;
    rs.width = width;
    rs.height = height;
    rs.step = step;
    rs.early_termination_alpha = early_termination_alpha;
    rs.ambient_floor = ambient_floor;
    rs.cone = cone;
    rs.reference_spacing = reference_spacing;
    rs.light = light;
    rs.validate();
}

volume_dataset load_scene_volume( const scene_config& cfg ) {
    switch( cfg.dataset.type ) {
    case dataset_source::kind::synthetic:
        return synthetic::make( cfg.dataset.synthetic, cfg.dataset.size, cfg.dataset.seed );
    case dataset_source::kind::file:
        return load_raw( cfg.dataset.raw, cfg.dataset.descriptor );
    case dataset_source::kind::id:
        break;
    }
    throw configuration_error( "dataset id '" + cfg.dataset.id + "' needs a data directory to resolve" );
}

transfer_function load_scene_tf( const scene_config& cfg ) {
    if( !cfg.tf.points.empty() )
        return transfer_function( cfg.tf.points );
    if( !cfg.tf.path.empty() )
        return transfer_function::load( cfg.tf.path );
    return transfer_function::preset( cfg.tf.preset );
}

render_settings make_render_settings( const scene_config& cfg, const volume_dataset& v ) {
    render_settings rs;
    rs.cam = cfg.cam;
    rs.width = cfg.width;
    rs.height = cfg.height;
    rs.step = cfg.step;
    rs.mode = to_shading_mode( cfg.method );
    rs.early_termination_alpha = cfg.early_termination_alpha;
    rs.ambient_floor = cfg.ambient_floor;
    rs.lookup = cfg.lookup;
    rs.light = { normalize( cfg.light.direction ), cfg.light.color };
    rs.phong = cfg.phong;
    const vec3 vs = v.voxel_size();
    const double voxel = std::max( { vs.x, vs.y, vs.z } );
    shell_kernel sk{ cfg.shell_radii_voxels, cfg.shell_weights };
    for( double& r : sk.radii )
        r *= voxel;
    rs.shell = sk;
    rs.cone = cfg.cone;
    rs.reference_spacing = cfg.reference_spacing;
    rs.threads = cfg.threads;
    return rs;
}

attenuation_buffer build_scene_buffer( const volume_dataset& v, const transfer_function& tf,
                                       const scene_config& cfg ) {
    const light_camera cam = make_light_camera( cfg.light.direction, cfg.light.color, cfg.buffer_width,
                                                cfg.buffer_height );
    const slice_stack_spec spec = make_slice_stack( cam.light_dir, cfg.n_slices );
    buffer_options opt;
    opt.compensation_n = cfg.compensation_n;
    opt.reference_spacing = cfg.reference_spacing;
    opt.threads = cfg.threads;
    return build_attenuation_buffer( v, tf, cam, spec, opt );
}

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since( clock_type::time_point start ) {
    return std::chrono::duration<double, std::milli>( clock_type::now() - start ).count();
}

} // namespace

frame_result run_frame( const volume_dataset& v, const transfer_function& tf, const scene_config& cfg,
                        const attenuation_buffer* buffer ) {
    cfg.validate();
    const render_settings rs = make_render_settings( cfg, v );
    frame_result r;
    if( cfg.method == render_method::has ) {
        half_angle_options opt{ cfg.n_slices, cfg.buffer_width, cfg.buffer_height };
        const auto start = clock_type::now();
        half_angle_result h = render_half_angle( v, tf, rs, opt );
        r.render_ms = ms_since( start );
        r.img = std::move( h.img );
        r.pass_count = h.pass_count;
        return r;
    }
    if( !uses_buffer( cfg.method ) ) {
        const auto start = clock_type::now();
        r.img = render( v, tf, rs );
        r.render_ms = ms_since( start );
        r.pass_count = 1;
        return r;
    }
    std::optional<attenuation_buffer> built;
    if( !buffer ) {
        const auto start = clock_type::now();
        built.emplace( build_scene_buffer( v, tf, cfg ) );
        r.build_ms = ms_since( start );
        buffer = &*built;
    }
    const auto start = clock_type::now();
    r.img = render( v, tf, rs, buffer );
    r.render_ms = ms_since( start );
    r.pass_count = buffer->n_slices() + 1;
    return r;
}

std::vector<bench_record> run_bench( const volume_dataset& v, const transfer_function& tf, const scene_config& base,
                                     const bench_sweep& sweep,
                                     const std::function<void( const bench_record& )>& on_row ) {
    if( sweep.methods.empty() || sweep.slices.empty() || sweep.resolutions.empty() )
        throw parameter_error( "bench sweep lists must be non-empty" );
    if( sweep.repeats < 3 )
        throw parameter_error( "bench needs at least 3 repeats" );

    std::vector<bench_record> rows;
    for( render_method m : sweep.methods ) {
        for( int n : sweep.slices ) {
            for( int res : sweep.resolutions ) {
                scene_config cfg = base;
                cfg.method = m;
                cfg.n_slices = n;
                cfg.buffer_width = cfg.buffer_height = res;

                bench_record rec;
                rec.method = std::string( to_string( m ) );
                rec.n_slices = n;
                rec.buffer_width = res;
                rec.buffer_height = res;
                rec.sample_step = cfg.step;
                for( int i = 0; i <= sweep.repeats; ++i ) {
                    const frame_result f = run_frame( v, tf, cfg );
                    const std::uint64_t h = f.img.hash();
                    if( i == 0 ) {
                        rec.image_hash = h;
                        rec.pass_count = f.pass_count;
                        continue; // warm-up
                    }
                    if( h != rec.image_hash )
                        throw error( "repeated bench runs produced different images" );
                    rec.build_ms += f.build_ms;
                    rec.render_ms += f.render_ms;
                }
                rec.build_ms /= sweep.repeats;
                rec.render_ms /= sweep.repeats;
                rec.total_ms = rec.build_ms + rec.render_ms;
                rows.push_back( rec );
                if( on_row )
                    on_row( rec );
            }
        }
    }
    return rows;
}

namespace {

std::string format_double( double d ) {
    char buf[64];
    const auto res = std::to_chars( buf, buf + sizeof( buf ), d );
    return std::string( buf, res.ptr );
}

double parse_double( std::string_view s ) {
    double d = 0.0;
    const auto res = std::from_chars( s.data(), s.data() + s.size(), d );
    if( res.ec != std::errc() || res.ptr != s.data() + s.size() )
        throw format_error( "bad number '" + std::string( s ) + "' in bench CSV" );
    return d;
}

template <class Int>
Int parse_integer( std::string_view s, int base = 10 ) {
    Int v = 0;
    const auto res = std::from_chars( s.data(), s.data() + s.size(), v, base );
    if( s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() )
        throw format_error( "bad integer '" + std::string( s ) + "' in bench CSV" );
    return v;
}

} // namespace

std::string bench_csv_header() {
    return "method,n_slices,buffer_resolution,sample_step,build_ms,render_ms,total_ms,pass_count,image_hash";
}

std::string to_csv_row( const bench_record& r ) {
    char hash[17];
    std::snprintf( hash, sizeof( hash ), "%016llx", static_cast<unsigned long long>( r.image_hash ) );
    return r.method + "," + std::to_string( r.n_slices ) + "," + std::to_string( r.buffer_width ) + "x" +
           std::to_string( r.buffer_height ) + "," + format_double( r.sample_step ) + "," +
           format_double( r.build_ms ) + "," + format_double( r.render_ms ) + "," + format_double( r.total_ms ) +
           "," + std::to_string( r.pass_count ) + "," + hash;
}

void write_bench_csv( std::ostream& out, const std::vector<bench_record>& rows ) {
    out << bench_csv_header() << '\n';
    for( const bench_record& r : rows )
        out << to_csv_row( r ) << '\n';
}

std::vector<bench_record> parse_bench_csv( std::istream& in ) {
    std::string line;
    if( !std::getline( in, line ) || line != bench_csv_header() )
        throw format_error( "bench CSV header missing or unexpected" );
    std::vector<bench_record> rows;
    while( std::getline( in, line ) ) {
        if( line.empty() )
            continue;
        std::vector<std::string_view> f;
        std::string_view rest( line );
        for( std::size_t pos; ( pos = rest.find( ',' ) ) != std::string_view::npos; rest.remove_prefix( pos + 1 ) )
            f.push_back( rest.substr( 0, pos ) );
        f.push_back( rest );
        if( f.size() != 9 )
            throw format_error( "bench CSV row needs 9 fields: " + line );
        bench_record r;
        r.method = std::string( f[0] );
        r.n_slices = parse_integer<int>( f[1] );
        const auto x = f[2].find( 'x' );
        if( x == std::string_view::npos )
            throw format_error( "buffer_resolution must be WxH: " + line );
        r.buffer_width = parse_integer<int>( f[2].substr( 0, x ) );
        r.buffer_height = parse_integer<int>( f[2].substr( x + 1 ) );
        r.sample_step = parse_double( f[3] );
        r.build_ms = parse_double( f[4] );
        r.render_ms = parse_double( f[5] );
        r.total_ms = parse_double( f[6] );
        r.pass_count = parse_integer<int>( f[7] );
        r.image_hash = parse_integer<std::uint64_t>( f[8], 16 );
        rows.push_back( r );
    }
    return rows;
}

} // namespace slicecast
