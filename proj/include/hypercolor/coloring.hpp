#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "hypergraph.hpp"

namespace hypercolor {

using Color = std::uint32_t;

/// Vertex -> color (>= 1). Total over the ground set once an algorithm
/// returns; partial while one is being built.
using Coloring = std::map< Vertex, Color >;

enum class Path
{
    trivial,
    size_two_minimal,
    lemma,
    triple,
};

constexpr std::string_view to_string( Path p )
{
    switch ( p ) {
    case Path::trivial: return "trivial";
    case Path::size_two_minimal: return "size2-minimal";
    case Path::lemma: return "lemma";
    case Path::triple: return "triple";
    }
    return "?";
}

/// How a coloring was produced. `case_id` is the case of the first triple
/// chosen; `final_case_id` differs from it only after a Case 3 swap.
struct Trace
{
    Path path = Path::trivial;
    std::optional< int > case_id;
    std::optional< int > final_case_id;
    bool swapped = false;
    std::optional< std::array< Edge, 3 > > chosen_triple;

    friend bool operator==( const Trace&, const Trace& ) = default;
};

struct FailingEdge
{
    Edge edge;
    std::size_t distinct = 0;

    friend bool operator==( const FailingEdge&, const FailingEdge& ) = default;
};

struct ColoringReport
{
    bool valid = false;
    std::size_t strength = 0;
    std::size_t colors_used = 0;
    std::vector< FailingEdge > failing_edges;
    Trace trace;

    friend bool operator==( const ColoringReport&, const ColoringReport& ) = default;
};

inline std::size_t distinct_colors( const Coloring& c )
{
    std::set< Color > seen;
    for ( const auto& [v, col] : c )
        seen.insert( col );
    return seen.size();
}

/// Checks that every edge sees at least min(|e|, strength) distinct colors.
/// Throws MissingVertexError if `c` does not cover the ground set.
inline ColoringReport verify_strong( const Hypergraph& h, const Coloring& c, std::size_t strength )
{
    ColoringReport report;
    report.strength = strength;

    std::vector< Color > by_position;
    by_position.reserve( h.vertex_count() );
    for ( Vertex v : h.vertices() ) {
        auto it = c.find( v );
        if ( it == c.end() )
            throw MissingVertexError( v );
        by_position.push_back( it->second );
    }
    {
        std::vector< Color > palette = by_position;
        std::sort( palette.begin(), palette.end() );
        report.colors_used = static_cast< std::size_t >(
            std::unique( palette.begin(), palette.end() ) - palette.begin() );
    }

    std::vector< Color > seen;
    for ( std::size_t i = 0; i < h.edge_count(); ++i ) {
        const Edge& e = h.edge( i );
        seen.clear();
        for ( Vertex v : e )
            seen.push_back( by_position[h.position( v )] );
        std::sort( seen.begin(), seen.end() );
        const auto distinct = static_cast< std::size_t >( std::unique( seen.begin(), seen.end() ) - seen.begin() );
        if ( distinct < std::min( e.size(), strength ) )
            report.failing_edges.push_back( { e, distinct } );
    }
    report.valid = report.failing_edges.empty();
    return report;
}

} // namespace hypercolor
