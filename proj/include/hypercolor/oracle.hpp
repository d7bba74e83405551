#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "hypergraph.hpp"

namespace hypercolor {

struct OracleConfig
{
    std::size_t max_vertices = 16;
    std::uint64_t node_budget = 100'000'000;
};

enum class SearchStatus
{
    found,
    absent,
    budget_exhausted,
};

struct SearchResult
{
    SearchStatus status = SearchStatus::absent;
    std::optional< Coloring > witness;
    std::uint64_t explored = 0;
};

/// The search hit its node budget before deciding. Never a proof of absence.
class OracleBudgetExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

class StrongColoringSearch
{
public:
    StrongColoringSearch( const Hypergraph& h, std::size_t strength, std::size_t k, std::uint64_t budget )
        : h_( h )
        , k_( k )
        , budget_( budget )
        , incident_( h.vertex_count() )
        , color_of_( h.vertex_count(), 0 )
        , counts_( h.edge_count() * ( k + 1 ), 0 )
        , distinct_( h.edge_count(), 0 )
        , uncolored_( h.edge_count(), 0 )
        , need_( h.edge_count(), 0 )
    {
        for ( std::size_t i = 0; i < h.edge_count(); ++i ) {
            uncolored_[i] = h.edge( i ).size();
            need_[i] = std::min( h.edge( i ).size(), strength );
            for ( Vertex v : h.edge( i ) )
                incident_[h.position( v )].push_back( i );
        }
        // Highest edge degree first so constrained vertices fail early.
        for ( std::size_t p = 0; p < h.vertex_count(); ++p )
            if ( !incident_[p].empty() )
                order_.push_back( p );
        std::stable_sort( order_.begin(), order_.end(), [&]( std::size_t a, std::size_t b ) {
            return incident_[a].size() > incident_[b].size();
        } );
    }

    SearchResult run()
    {
        SearchResult result;
        bool feasible = true;
        for ( std::size_t i = 0; i < h_.edge_count(); ++i )
            feasible = feasible && edge_feasible( i );
        if ( feasible && descend( 0, 0 ) ) {
            Coloring c;
            for ( std::size_t p = 0; p < h_.vertex_count(); ++p )
                c[h_.vertices()[p]] = color_of_[p] == 0 ? 1 : color_of_[p];
            result.status = SearchStatus::found;
            result.witness = std::move( c );
        }
        else {
            result.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::absent;
        }
        result.explored = nodes_;
        return result;
    }

private:
    bool edge_feasible( std::size_t e ) const
    {
        const std::size_t fresh = std::min( uncolored_[e], k_ - distinct_[e] );
        return distinct_[e] + fresh >= need_[e];
    }

    void assign( std::size_t pos, Color c )
    {
        color_of_[pos] = c;
        for ( std::size_t e : incident_[pos] ) {
            --uncolored_[e];
            if ( counts_[e * ( k_ + 1 ) + c]++ == 0 )
                ++distinct_[e];
        }
    }

    void unassign( std::size_t pos )
    {
        const Color c = color_of_[pos];
        for ( std::size_t e : incident_[pos] ) {
            ++uncolored_[e];
            if ( --counts_[e * ( k_ + 1 ) + c] == 0 )
                --distinct_[e];
        }
        color_of_[pos] = 0;
    }

    bool descend( std::size_t depth, Color max_used )
    {
        if ( depth == order_.size() )
            return true;
        const std::size_t pos = order_[depth];
        // A fresh color is interchangeable with any other unused one, so
        // only max_used + 1 is tried.
        const Color limit = static_cast< Color >( std::min< std::size_t >( k_, max_used + 1 ) );
        for ( Color c = 1; c <= limit; ++c ) {
            if ( ++nodes_ > budget_ ) {
                exhausted_ = true;
                return false;
            }
            assign( pos, c );
            bool ok = true;
            for ( std::size_t e : incident_[pos] )
                if ( !edge_feasible( e ) ) {
                    ok = false;
                    break;
                }
            if ( ok && descend( depth + 1, std::max( max_used, c ) ) )
                return true;
            unassign( pos );
            if ( exhausted_ )
                return false;
        }
        return false;
    }

    const Hypergraph& h_;
    std::size_t k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector< std::vector< std::size_t > > incident_;
    std::vector< std::size_t > order_;
    std::vector< Color > color_of_;
    std::vector< std::uint32_t > counts_;
    std::vector< std::size_t > distinct_;
    std::vector< std::size_t > uncolored_;
    std::vector< std::size_t > need_;
};

inline void check_oracle_bounds( const Hypergraph& h, std::size_t k, const OracleConfig& config )
{
    if ( k < 1 )
        throw std::invalid_argument( "oracle needs at least one color" );
    if ( h.vertex_count() > config.max_vertices )
        throw OracleSizeError( "ground set has " + std::to_string( h.vertex_count() ) + " vertices; oracle limit is "
                               + std::to_string( config.max_vertices ) );
}

} // namespace detail

/// Exhaustive backtracking for a `strength`-strong coloring with at most
/// `k` colors. Reports budget exhaustion separately from absence.
inline SearchResult oracle_search( const Hypergraph& h, std::size_t strength, std::size_t k,
                                   const OracleConfig& config = {} )
{
    detail::check_oracle_bounds( h, k, config );
    return detail::StrongColoringSearch( h, strength, k, config.node_budget ).run();
}

/// Witness coloring with at most `k` colors, or nullopt when none exists.
/// Throws OracleBudgetExhausted rather than guess.
inline std::optional< Coloring > oracle_exists_coloring( const Hypergraph& h, std::size_t strength, std::size_t k,
                                                         const OracleConfig& config = {} )
{
    SearchResult r = oracle_search( h, strength, k, config );
    if ( r.status == SearchStatus::budget_exhausted )
        throw OracleBudgetExhausted( "oracle node budget exhausted at k=" + std::to_string( k ) );
    return std::move( r.witness );
}

struct OracleResult
{
    std::size_t strength = 0;
    std::optional< std::size_t > min_colors;
    std::optional< Coloring > witness;
    std::uint64_t explored = 0;
    bool budget_exhausted = false;
};

/// Smallest k <= max_colors admitting a witness, found by trying k = 1, 2, ...
inline OracleResult oracle_min_colors( const Hypergraph& h, std::size_t strength, std::size_t max_colors,
                                       const OracleConfig& config = {} )
{
    OracleResult out;
    out.strength = strength;
    detail::check_oracle_bounds( h, std::max< std::size_t >( max_colors, 1 ), config );
    for ( std::size_t k = 1; k <= max_colors; ++k ) {
        SearchResult r = oracle_search( h, strength, k, config );
        out.explored += r.explored;
        if ( r.status == SearchStatus::budget_exhausted ) {
            out.budget_exhausted = true;
            break;
        }
        if ( r.status == SearchStatus::found ) {
            out.min_colors = k;
            out.witness = std::move( r.witness );
            break;
        }
    }
    return out;
}

} // namespace hypercolor
