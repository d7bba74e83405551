#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_mask.hpp"

namespace hypercolor {

/// Size first, then lexicographic. This is the order every edge family is
/// stored in, and it fixes all tie-breaks downstream.
inline bool canonical_less( const Edge& a, const Edge& b )
{
    if ( a.size() != b.size() )
        return a.size() < b.size();
    return a < b;
}

/// Ground set plus a deduplicated, canonically ordered family of non-empty
/// edges. Immutable after construction.
class Hypergraph
{
public:
    Hypergraph() = default;

    Hypergraph( std::vector< Vertex > ground, std::vector< Edge > edges )
        : vertices_( std::move( ground ) )
    {
        std::sort( vertices_.begin(), vertices_.end() );
        vertices_.erase( std::unique( vertices_.begin(), vertices_.end() ), vertices_.end() );

        for ( Edge& e : edges ) {
            std::sort( e.begin(), e.end() );
            e.erase( std::unique( e.begin(), e.end() ), e.end() );
            if ( e.empty() )
                throw std::invalid_argument( "hypergraph edges must be non-empty" );
            for ( Vertex v : e )
                if ( !std::binary_search( vertices_.begin(), vertices_.end(), v ) )
                    throw std::invalid_argument( "edge " + format_edge( e ) + " uses vertex "
                                                 + std::to_string( v ) + " outside the ground set" );
        }
        std::sort( edges.begin(), edges.end(), canonical_less );
        edges.erase( std::unique( edges.begin(), edges.end() ), edges.end() );
        edges_ = std::move( edges );

        masks_.reserve( edges_.size() );
        for ( const Edge& e : edges_ )
            masks_.push_back( mask_of( e ) );
    }

    /// Ground set is the union of the edges plus `extra`.
    static Hypergraph from_edges( std::vector< Edge > edges, std::vector< Vertex > extra = {} )
    {
        for ( const Edge& e : edges )
            extra.insert( extra.end(), e.begin(), e.end() );
        return Hypergraph( std::move( extra ), std::move( edges ) );
    }

    static Hypergraph from_edges( std::initializer_list< std::initializer_list< Vertex > > edges )
    {
        std::vector< Edge > es;
        for ( auto e : edges )
            es.emplace_back( e );
        return from_edges( std::move( es ) );
    }

    const std::vector< Vertex >& vertices() const { return vertices_; }
    const std::vector< Edge >& edges() const { return edges_; }
    const Edge& edge( std::size_t i ) const { return edges_[i]; }
    const VertexMask& mask( std::size_t i ) const { return masks_[i]; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex( Vertex v ) const { return std::binary_search( vertices_.begin(), vertices_.end(), v ); }

    /// Position of `v` in the sorted ground set. `v` must be present.
    std::size_t position( Vertex v ) const
    {
        return static_cast< std::size_t >( std::lower_bound( vertices_.begin(), vertices_.end(), v )
                                           - vertices_.begin() );
    }

    VertexMask mask_of( std::span< const Vertex > vs ) const
    {
        VertexMask m( vertices_.size() );
        for ( Vertex v : vs )
            m.set( position( v ) );
        return m;
    }

    Edge vertices_of( const VertexMask& m ) const
    {
        Edge out;
        m.for_each( [&]( std::size_t pos ) { out.push_back( vertices_[pos] ); } );
        return out;
    }

    /// Same ground set, different edge family.
    Hypergraph with_edges( std::vector< Edge > edges ) const { return Hypergraph( vertices_, std::move( edges ) ); }

    friend bool operator==( const Hypergraph& a, const Hypergraph& b )
    {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector< Vertex > vertices_;
    std::vector< Edge > edges_;
    std::vector< VertexMask > masks_;
};

} // namespace hypercolor
