#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coloring.hpp"
#include "setfam.hpp"

namespace hypercolor {

namespace detail {

// Colors `ground` from {1..t+1} so every edge e of `family` (all subsets of
// `ground`) sees min(|e|, t) colors, and `ground` itself, if it is an edge,
// sees min(|ground|, t+1). Requires the family to have property P_t.
inline void lemma_color( const std::vector< Vertex >& ground, std::vector< Edge > family, std::size_t t,
                         Coloring& out )
{
    std::sort( family.begin(), family.end(), canonical_less );
    family.erase( std::unique( family.begin(), family.end() ), family.end() );
    const auto top = static_cast< Color >( t + 1 );

    if ( family.empty() ) {
        for ( Vertex v : ground )
            out[v] = 1;
        return;
    }

    const Edge& e0 = family.front(); // canonical first edge is containment-minimal
    const Edge outside = set_difference( ground, e0 );
    for ( Vertex v : outside )
        out[v] = top;

    if ( family.size() == 1 ) {
        const std::size_t palette = std::min( e0.size(), t + 1 );
        for ( std::size_t i = 0; i < e0.size(); ++i )
            out[e0[i]] = static_cast< Color >( i % palette + 1 );
        return;
    }

    if ( t == 2 ) {
        out[e0.front()] = 1;
        for ( std::size_t i = 1; i < e0.size(); ++i )
            out[e0[i]] = 2;
        if ( e0.size() == 1 && !outside.empty() ) {
            out[outside.front()] = 2;
            for ( std::size_t i = 1; i < outside.size(); ++i )
                out[outside[i]] = 3;
        }
        return;
    }

    std::vector< Edge > traces;
    traces.reserve( family.size() );
    for ( const Edge& h : family )
        traces.push_back( set_intersection( h, e0 ) );
    lemma_color( e0, std::move( traces ), t - 1, out );
}

} // namespace detail

/// t-strong coloring with at most t+1 colors for a hypergraph with property
/// P_t, built by recursing on the traces of a minimal edge.
///
/// Throws PreconditionError (witness: the offending edge tuple) when P_t
/// fails, std::invalid_argument for t < 2, and VerificationError if the
/// result does not check out.
inline Coloring lemma_coloring( const Hypergraph& h, std::size_t t )
{
    if ( t < 2 )
        throw std::invalid_argument( "lemma_coloring requires t >= 2" );
    if ( auto bad = property_pt_witness( h, t ) ) {
        std::vector< Edge > witness;
        for ( std::size_t i : *bad )
            witness.push_back( h.edge( i ) );
        throw PreconditionError( "hypergraph lacks property P_" + std::to_string( t ), std::move( witness ) );
    }

    Coloring c;
    detail::lemma_color( h.vertices(), h.edges(), t, c );

    const ColoringReport report = verify_strong( h, c, t );
    if ( !report.valid )
        throw VerificationError( "lemma coloring is not " + std::to_string( t ) + "-strong",
                                 report.failing_edges.front().edge, report.failing_edges.front().distinct );
    if ( report.colors_used > t + 1 )
        throw VerificationError( "lemma coloring uses too many colors", {}, report.colors_used );
    return c;
}

} // namespace hypercolor
