#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypergraph.hpp"
#include "setfam.hpp"
#include "theorem.hpp"

namespace hypercolor {

/// Identifier written into generated corpus files. Random families draw
/// from std::mt19937_64 seeded per attempt with splitmix64(seed + attempt *
/// 0x9e3779b97f4a7c15); bounded integers use rejection on the raw 64-bit
/// output so the stream is identical on every standard library.
inline constexpr std::string_view prng_id = "mt19937_64/splitmix64/reject-mod";

inline std::uint64_t splitmix64( std::uint64_t x )
{
    x += 0x9e3779b97f4a7c15ULL;
    x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ULL;
    x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebULL;
    return x ^ ( x >> 31 );
}

inline std::uint64_t attempt_seed( std::uint64_t seed, std::uint64_t attempt )
{
    return splitmix64( seed + attempt * 0x9e3779b97f4a7c15ULL );
}

/// Uniform in [0, bound).
inline std::uint64_t uniform_below( std::mt19937_64& rng, std::uint64_t bound )
{
    const std::uint64_t threshold = ( 0 - bound ) % bound;
    for ( ;; ) {
        const std::uint64_t r = rng();
        if ( r >= threshold )
            return r % bound;
    }
}

inline Hypergraph gen_complete_uniform( std::size_t n, std::size_t k )
{
    if ( k < 1 || k > n || n > 20 )
        throw std::invalid_argument( "complete-uniform needs 1 <= k <= n <= 20" );
    std::vector< Edge > edges;
    std::vector< bool > pick( n, false );
    std::fill( pick.begin(), pick.begin() + static_cast< std::ptrdiff_t >( k ), true );
    do {
        Edge e;
        for ( std::size_t i = 0; i < n; ++i )
            if ( pick[i] )
                e.push_back( static_cast< Vertex >( i + 1 ) );
        edges.push_back( std::move( e ) );
    } while ( std::prev_permutation( pick.begin(), pick.end() ) );
    std::vector< Vertex > ground( n );
    std::iota( ground.begin(), ground.end(), Vertex{ 1 } );
    return Hypergraph( std::move( ground ), std::move( edges ) );
}

/// Core {1..core_size} plus `petals` disjoint petals numbered after it.
/// With zero petals this is an error unless `allow_empty`, which yields
/// the bare core with no edges.
inline Hypergraph gen_sunflower( std::size_t core_size, std::size_t petals, std::size_t petal_size,
                                 bool allow_empty = false )
{
    if ( core_size < 2 || petal_size < 1 )
        throw std::invalid_argument( "sunflower needs core_size >= 2 and petal_size >= 1" );
    if ( core_size + petals * petal_size > 256 )
        throw std::invalid_argument( "sunflower exceeds 256 vertices" );
    std::vector< Vertex > core( core_size );
    std::iota( core.begin(), core.end(), Vertex{ 1 } );
    if ( petals == 0 ) {
        if ( !allow_empty )
            throw std::invalid_argument( "sunflower with zero petals has no edges" );
        return Hypergraph( core, {} );
    }
    std::vector< Edge > edges;
    auto next = static_cast< Vertex >( core_size + 1 );
    for ( std::size_t p = 0; p < petals; ++p ) {
        Edge e = core;
        for ( std::size_t i = 0; i < petal_size; ++i )
            e.push_back( next++ );
        edges.push_back( std::move( e ) );
    }
    return Hypergraph::from_edges( std::move( edges ) );
}

/// Every edge {a, b} of the complete graph on {1..k+1}, extended by the
/// common vertex 0.
inline Hypergraph gen_apex_clique( std::size_t k )
{
    if ( k < 2 || k > 8 )
        throw std::invalid_argument( "apex-clique needs 2 <= k <= 8" );
    std::vector< Edge > edges;
    for ( Vertex a = 1; a <= k + 1; ++a )
        for ( Vertex b = a + 1; b <= k + 1; ++b )
            edges.push_back( { 0, a, b } );
    return Hypergraph::from_edges( std::move( edges ) );
}

struct RandomFamilyParams
{
    std::size_t n = 10;
    std::size_t m = 8;
    std::size_t min_size = 5;
    std::size_t max_size = 7;
    std::size_t max_n = 16;
    std::size_t max_attempts = 100'000;
};

namespace detail {

inline void check_random_params( const RandomFamilyParams& p, std::size_t smallest_edge )
{
    if ( p.n < 1 || p.n > p.max_n )
        throw std::invalid_argument( "random family needs 1 <= n <= " + std::to_string( p.max_n ) );
    if ( p.m < 1 )
        throw std::invalid_argument( "random family needs m >= 1" );
    if ( p.min_size < smallest_edge || p.min_size > p.max_size || p.max_size > p.n )
        throw std::invalid_argument( "random family needs " + std::to_string( smallest_edge )
                                     + " <= min_size <= max_size <= n" );
}

inline std::vector< Edge > draw_family( const RandomFamilyParams& p, std::uint64_t seed )
{
    std::mt19937_64 rng( seed );
    std::vector< Vertex > pool( p.n );
    std::vector< Edge > edges;
    for ( std::size_t i = 0; i < p.m; ++i ) {
        std::iota( pool.begin(), pool.end(), Vertex{ 1 } );
        const std::size_t size = p.min_size + uniform_below( rng, p.max_size - p.min_size + 1 );
        for ( std::size_t j = 0; j < size; ++j )
            std::swap( pool[j], pool[j + uniform_below( rng, p.n - j )] );
        edges.emplace_back( pool.begin(), pool.begin() + static_cast< std::ptrdiff_t >( size ) );
    }
    return edges;
}

template < typename Accept >
Hypergraph rejection_sample( const RandomFamilyParams& p, std::uint64_t seed, std::size_t t, Accept&& accept )
{
    std::vector< Vertex > ground( p.n );
    std::iota( ground.begin(), ground.end(), Vertex{ 1 } );
    for ( std::size_t attempt = 0; attempt < p.max_attempts; ++attempt ) {
        Hypergraph h( ground, draw_family( p, attempt_seed( seed, attempt ) ) );
        if ( h.edge_count() == p.m && is_t_intersecting( h, t ) && accept( h ) )
            return h;
    }
    throw AttemptBudgetExhausted( "no acceptable family in " + std::to_string( p.max_attempts )
                                  + " attempts; loosen the parameters (larger edges or fewer of them)" );
}

} // namespace detail

/// m distinct random edges over {1..n}, sizes uniform in [min_size,
/// max_size], resampled as a whole until every pair meets in >= 2 vertices.
inline Hypergraph gen_random_2_intersecting( const RandomFamilyParams& p, std::uint64_t seed )
{
    detail::check_random_params( p, 2 );
    return detail::rejection_sample( p, seed, 2, []( const Hypergraph& ) { return true; } );
}

/// Same sampler with pairwise intersections >= 1 and no singleton edges.
inline Hypergraph gen_random_intersecting( const RandomFamilyParams& p, std::uint64_t seed )
{
    detail::check_random_params( p, 2 );
    return detail::rejection_sample( p, seed, 1, []( const Hypergraph& ) { return true; } );
}

enum class Family
{
    complete_uniform,
    sunflower,
    apex_clique,
    random_2_intersecting,
    random_intersecting,
};

struct GeneratorSpec
{
    Family family = Family::complete_uniform;
    std::vector< std::size_t > parameters;
    std::uint64_t seed = 0;
};

inline std::optional< Family > parse_family( std::string_view name )
{
    if ( name == "complete-uniform" ) return Family::complete_uniform;
    if ( name == "sunflower" ) return Family::sunflower;
    if ( name == "apex-clique" ) return Family::apex_clique;
    if ( name == "random-2-intersecting" ) return Family::random_2_intersecting;
    if ( name == "random-intersecting" ) return Family::random_intersecting;
    return std::nullopt;
}

inline std::string_view to_string( Family f )
{
    switch ( f ) {
    case Family::complete_uniform: return "complete-uniform";
    case Family::sunflower: return "sunflower";
    case Family::apex_clique: return "apex-clique";
    case Family::random_2_intersecting: return "random-2-intersecting";
    case Family::random_intersecting: return "random-intersecting";
    }
    return "?";
}

/// Parameters: complete-uniform n k; sunflower core petals petal_size;
/// apex-clique k; random families n m min_size max_size.
inline Hypergraph generate( const GeneratorSpec& spec )
{
    const auto& a = spec.parameters;
    auto want = [&]( std::size_t count ) {
        if ( a.size() != count )
            throw std::invalid_argument( std::string( to_string( spec.family ) ) + " takes "
                                         + std::to_string( count ) + " parameters" );
    };
    switch ( spec.family ) {
    case Family::complete_uniform:
        want( 2 );
        return gen_complete_uniform( a[0], a[1] );
    case Family::sunflower:
        want( 3 );
        return gen_sunflower( a[0], a[1], a[2] );
    case Family::apex_clique:
        want( 1 );
        return gen_apex_clique( a[0] );
    case Family::random_2_intersecting:
    case Family::random_intersecting: {
        want( 4 );
        RandomFamilyParams p;
        p.n = a[0];
        p.m = a[1];
        p.min_size = a[2];
        p.max_size = a[3];
        return spec.family == Family::random_2_intersecting ? gen_random_2_intersecting( p, spec.seed )
                                                            : gen_random_intersecting( p, spec.seed );
    }
    }
    throw std::invalid_argument( "unknown family" );
}

enum class BranchTarget
{
    trivial,
    size_two_minimal,
    lemma,
    case1,
    case2,
    case3,
    case4,
    case3_swap,
};

inline std::optional< BranchTarget > parse_branch_target( std::string_view name )
{
    if ( name == "trivial" ) return BranchTarget::trivial;
    if ( name == "size2-minimal" ) return BranchTarget::size_two_minimal;
    if ( name == "lemma" ) return BranchTarget::lemma;
    if ( name == "1" ) return BranchTarget::case1;
    if ( name == "2" ) return BranchTarget::case2;
    if ( name == "3" ) return BranchTarget::case3;
    if ( name == "4" ) return BranchTarget::case4;
    if ( name == "case3-swap" ) return BranchTarget::case3_swap;
    return std::nullopt;
}

inline bool trace_matches( const Trace& t, BranchTarget target )
{
    switch ( target ) {
    case BranchTarget::trivial: return t.path == Path::trivial;
    case BranchTarget::size_two_minimal: return t.path == Path::size_two_minimal;
    case BranchTarget::lemma: return t.path == Path::lemma;
    case BranchTarget::case1: return t.path == Path::triple && t.case_id == 1;
    case BranchTarget::case2: return t.path == Path::triple && t.case_id == 2;
    case BranchTarget::case3: return t.path == Path::triple && t.case_id == 3;
    case BranchTarget::case4: return t.path == Path::triple && t.case_id == 4;
    case BranchTarget::case3_swap: return t.path == Path::triple && t.swapped;
    }
    return false;
}

/// Searches for a 2-intersecting instance whose theorem_coloring trace hits
/// `target`: first seeded random families over 4..14 vertices with edge
/// sizes near the (n+3)/2 threshold where pairs always meet twice, then all
/// three-edge families on {1..7} in lexicographic order. Every instance
/// tried counts against `budget`. `exhaustive_only` skips the random phase.
inline std::optional< Hypergraph > find_branch_witness( BranchTarget target, std::size_t budget, std::uint64_t seed,
                                                        bool exhaustive_only = false )
{
    std::size_t spent = 0;
    auto hits = [&]( const Hypergraph& h ) {
        ++spent;
        return trace_matches( theorem_coloring( h ).report.trace, target );
    };

    const std::size_t random_share = exhaustive_only ? 0 : budget - budget / 4;
    for ( std::uint64_t round = 0; spent < random_share; ++round ) {
        std::mt19937_64 rng( attempt_seed( seed, round ) );
        RandomFamilyParams p;
        p.n = 4 + uniform_below( rng, 11 );
        const std::size_t safe = ( p.n + 3 ) / 2;
        p.m = 1 + uniform_below( rng, 12 );
        const std::size_t slack = uniform_below( rng, 3 );
        p.min_size = std::max< std::size_t >( 2, safe > slack ? safe - slack : 2 );
        p.max_size = std::min( p.n, p.min_size + uniform_below( rng, 3 ) );
        p.max_attempts = 50;
        try {
            Hypergraph h = gen_random_2_intersecting( p, rng() );
            if ( hits( h ) )
                return h;
        }
        catch ( const AttemptBudgetExhausted& ) {
            ++spent;
        }
    }

    constexpr std::size_t n = 7;
    std::vector< Edge > subsets;
    for ( std::uint32_t bits = 1; bits < ( 1U << n ); ++bits ) {
        Edge e;
        for ( std::uint32_t i = 0; i < n; ++i )
            if ( bits >> i & 1U )
                e.push_back( i + 1 );
        if ( e.size() >= 2 )
            subsets.push_back( std::move( e ) );
    }
    for ( std::size_t a = 0; a < subsets.size(); ++a )
        for ( std::size_t b = a + 1; b < subsets.size(); ++b ) {
            if ( set_intersection( subsets[a], subsets[b] ).size() < 2 )
                continue;
            for ( std::size_t c = b + 1; c < subsets.size(); ++c ) {
                if ( spent >= budget )
                    return std::nullopt;
                if ( set_intersection( subsets[a], subsets[c] ).size() < 2
                     || set_intersection( subsets[b], subsets[c] ).size() < 2 )
                    continue;
                Hypergraph h = Hypergraph::from_edges( { subsets[a], subsets[b], subsets[c] } );
                if ( hits( h ) )
                    return h;
            }
        }
    return std::nullopt;
}

} // namespace hypercolor
