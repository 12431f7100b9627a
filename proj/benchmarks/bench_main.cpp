// Copyright 2026 The slicecast Authors
// SPDX-License-Identifier: Apache-2.0
#include <slicecast/half_angle.hpp>
#include <slicecast/light_buffer.hpp>
#include <slicecast/raycaster.hpp>
#include <slicecast/slicing.hpp>
#include <slicecast/synthetic.hpp>

#include <benchmark/benchmark.h>

using namespace slicecast;

namespace {

const vec3 light_dir = normalize( vec3{ 0.5, -0.7, -0.5 } );

const volume_dataset& scene_volume() {
    static const volume_dataset v = synthetic::sphere_blob( 64 );
    return v;
}

const transfer_function& scene_tf() {
    static const transfer_function tf = transfer_function::preset( "blob" );
    return tf;
}

attenuation_buffer scene_buffer( int n_slices, int res ) {
    const light_camera cam = make_light_camera( light_dir, { 1, 1, 1 }, res, res );
    buffer_options opt;
    opt.threads = 1;
    return build_attenuation_buffer( scene_volume(), scene_tf(), cam, make_slice_stack( cam.light_dir, n_slices ), opt );
}

render_settings view( int size, shading_mode mode ) {
    render_settings s;
    s.width = s.height = size;
    s.mode = mode;
    s.light = { light_dir, { 1, 1, 1 } };
    s.threads = 1;
    return s;
}

void BM_SlicePolygon( benchmark::State& state ) {
    const slice_stack_spec s = make_slice_stack( light_dir, 256 );
    int k = 0;
    for( auto _ : state ) {
        benchmark::DoNotOptimize( make_slice_polygon( s, k ) );
        k = ( k + 1 ) % s.n_slices;
    }
}
BENCHMARK( BM_SlicePolygon );

void BM_BufferBuild( benchmark::State& state ) {
    const int n = static_cast<int>( state.range( 0 ) );
    const int res = static_cast<int>( state.range( 1 ) );
    for( auto _ : state )
        benchmark::DoNotOptimize( scene_buffer( n, res ) );
    state.SetItemsProcessed( state.iterations() * n * res * res );
}
BENCHMARK( BM_BufferBuild )
    ->ArgsProduct( { { 64, 128, 256 }, { 128, 256, 512 } } )
    ->Unit( benchmark::kMillisecond );

void BM_RenderSbrc( benchmark::State& state ) {
    const attenuation_buffer b = scene_buffer( static_cast<int>( state.range( 0 ) ), 256 );
    const render_settings s = view( 256, shading_mode::sbrc_shadow );
    for( auto _ : state )
        benchmark::DoNotOptimize( render( scene_volume(), scene_tf(), s, &b ) );
}
BENCHMARK( BM_RenderSbrc )->Arg( 64 )->Arg( 256 )->Unit( benchmark::kMillisecond );

void BM_RenderMode( benchmark::State& state ) {
    const auto mode = static_cast<shading_mode>( state.range( 0 ) );
    const attenuation_buffer b = scene_buffer( 128, 256 );
    const render_settings s = view( 128, mode );
    state.SetLabel( std::string( to_string( mode ) ) );
    for( auto _ : state )
        benchmark::DoNotOptimize( render( scene_volume(), scene_tf(), s, needs_buffer( mode ) ? &b : nullptr ) );
}
BENCHMARK( BM_RenderMode )
    ->DenseRange( static_cast<int>( shading_mode::none ), static_cast<int>( shading_mode::extinction ) )
    ->Unit( benchmark::kMillisecond );

void BM_HalfAngle( benchmark::State& state ) {
    const render_settings s = view( 256, shading_mode::none );
    const half_angle_options opt{ static_cast<int>( state.range( 0 ) ), 256, 256 };
    for( auto _ : state )
        benchmark::DoNotOptimize( render_half_angle( scene_volume(), scene_tf(), s, opt ) );
}
BENCHMARK( BM_HalfAngle )->Arg( 64 )->Arg( 256 )->Unit( benchmark::kMillisecond );

} // namespace

BENCHMARK_MAIN();
