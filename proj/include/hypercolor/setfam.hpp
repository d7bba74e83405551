#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypergraph.hpp"

namespace hypercolor {

inline Edge set_intersection( const Edge& a, const Edge& b )
{
    Edge out;
    std::set_intersection( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
    return out;
}

inline Edge set_union( const Edge& a, const Edge& b )
{
    Edge out;
    std::set_union( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
    return out;
}

inline Edge set_difference( const Edge& a, const Edge& b )
{
    Edge out;
    std::set_difference( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
    return out;
}

/// First pair of distinct edges (canonical order) meeting in fewer than `t`
/// vertices.
inline std::optional< std::pair< std::size_t, std::size_t > > intersection_witness( const Hypergraph& h,
                                                                                     std::size_t t )
{
    for ( std::size_t i = 0; i < h.edge_count(); ++i )
        for ( std::size_t j = i + 1; j < h.edge_count(); ++j )
            if ( h.mask( i ).intersection_count( h.mask( j ) ) < t )
                return std::pair{ i, j };
    return std::nullopt;
}

inline bool is_t_intersecting( const Hypergraph& h, std::size_t t )
{
    return !intersection_witness( h, t ).has_value();
}

namespace detail {

// DFS over increasing edge-index tuples of length 2..t. A tuple of length i
// must have a common intersection of at least t+1-i vertices.
inline bool pt_search( const Hypergraph& h, std::size_t t, std::vector< std::size_t >& chosen,
                       const VertexMask& common )
{
    const std::size_t depth = chosen.size();
    if ( depth >= 2 && common.count() + depth < t + 1 )
        return false;
    if ( depth == t )
        return true;
    const std::size_t start = depth == 0 ? 0 : chosen.back() + 1;
    for ( std::size_t next = start; next < h.edge_count(); ++next ) {
        chosen.push_back( next );
        const bool ok = depth == 0 ? pt_search( h, t, chosen, h.mask( next ) )
                                   : pt_search( h, t, chosen, common & h.mask( next ) );
        if ( !ok )
            return false;
        chosen.pop_back();
    }
    return true;
}

} // namespace detail

/// Smallest (in DFS order) tuple of edge indices violating property P_t,
/// i.e. i edges, 2 <= i <= t, whose common intersection has fewer than
/// t+1-i vertices.
inline std::optional< std::vector< std::size_t > > property_pt_witness( const Hypergraph& h, std::size_t t )
{
    if ( t < 2 )
        throw std::invalid_argument( "property P_t requires t >= 2" );
    std::vector< std::size_t > chosen;
    if ( detail::pt_search( h, t, chosen, VertexMask( h.vertex_count() ) ) )
        return std::nullopt;
    return chosen;
}

inline bool has_property_pt( const Hypergraph& h, std::size_t t )
{
    return !property_pt_witness( h, t ).has_value();
}

/// Containment-minimal edges over the same ground set.
inline Hypergraph minimal_edges( const Hypergraph& h )
{
    std::vector< Edge > kept;
    for ( std::size_t i = 0; i < h.edge_count(); ++i ) {
        bool minimal = true;
        // Canonical order puts every proper subset before its superset.
        for ( std::size_t j = 0; j < i && minimal; ++j )
            if ( h.edge( j ).size() < h.edge( i ).size() && h.mask( j ).subset_of( h.mask( i ) ) )
                minimal = false;
        if ( minimal )
            kept.push_back( h.edge( i ) );
    }
    return h.with_edges( std::move( kept ) );
}

inline bool is_antichain( const Hypergraph& h )
{
    for ( std::size_t i = 0; i < h.edge_count(); ++i )
        for ( std::size_t j = 0; j < h.edge_count(); ++j )
            if ( i != j && h.mask( i ).subset_of( h.mask( j ) ) )
                return false;
    return true;
}

/// Three edges with empty common intersection, in role order.
/// intersections = { e0∩e1, e0∩e2, e1∩e2 }.
struct Triple
{
    std::array< std::size_t, 3 > index{};
    std::array< Edge, 3 > edges;
    Edge union_;
    std::array< Edge, 3 > intersections;
    std::array< Edge, 3 > privates;

    friend bool operator==( const Triple&, const Triple& ) = default;
};

/// Vertices of each edge covered by neither of the other two.
inline std::array< Edge, 3 > private_parts( const Triple& t )
{
    const auto& [a, b, c] = t.edges;
    return { set_difference( a, set_union( b, c ) ), set_difference( b, set_union( a, c ) ),
             set_difference( c, set_union( a, b ) ) };
}

/// Builds the triple of edges a, b, c of `h` in that role order.
inline Triple make_triple( const Hypergraph& h, std::size_t a, std::size_t b, std::size_t c )
{
    Triple t;
    t.index = { a, b, c };
    t.edges = { h.edge( a ), h.edge( b ), h.edge( c ) };
    t.union_ = set_union( set_union( t.edges[0], t.edges[1] ), t.edges[2] );
    t.intersections = { set_intersection( t.edges[0], t.edges[1] ), set_intersection( t.edges[0], t.edges[2] ),
                        set_intersection( t.edges[1], t.edges[2] ) };
    t.privates = private_parts( t );
    return t;
}

/// Among all triples of edges with empty common intersection, the one with
/// the fewest vertices in its union; ties go to the lexicographically
/// smallest index triple. Absent when every three edges share a vertex.
inline std::optional< Triple > find_min_union_empty_triple( const Hypergraph& h )
{
    const std::size_t m = h.edge_count();
    std::size_t best = std::numeric_limits< std::size_t >::max();
    std::array< std::size_t, 3 > best_idx{};
    for ( std::size_t i = 0; i < m; ++i ) {
        if ( h.mask( i ).count() >= best )
            continue;
        for ( std::size_t j = i + 1; j < m; ++j ) {
            const VertexMask uij = h.mask( i ) | h.mask( j );
            if ( uij.count() >= best )
                continue;
            const VertexMask cij = h.mask( i ) & h.mask( j );
            for ( std::size_t k = j + 1; k < m; ++k ) {
                if ( cij.intersects( h.mask( k ) ) )
                    continue;
                const std::size_t size = uij.union_count( h.mask( k ) );
                if ( size < best ) {
                    best = size;
                    best_idx = { i, j, k };
                }
            }
        }
    }
    if ( best == std::numeric_limits< std::size_t >::max() )
        return std::nullopt;
    return make_triple( h, best_idx[0], best_idx[1], best_idx[2] );
}

} // namespace hypercolor
