#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "lemma.hpp"
#include "setfam.hpp"

namespace hypercolor {

/// A triple with its edges placed in the roles e1, e2, e3 required by the
/// case analysis. `positions[r]` is the slot of the input triple now
/// playing role r.
struct LabeledTriple
{
    Triple triple;
    int case_id = 0;
    std::array< std::size_t, 3 > positions{ 0, 1, 2 };
};

namespace detail {

inline Triple reorder( const Triple& t, const std::array< std::size_t, 3 >& positions )
{
    Triple r;
    for ( std::size_t role = 0; role < 3; ++role ) {
        r.index[role] = t.index[positions[role]];
        r.edges[role] = t.edges[positions[role]];
    }
    r.union_ = t.union_;
    r.intersections = { set_intersection( r.edges[0], r.edges[1] ), set_intersection( r.edges[0], r.edges[2] ),
                        set_intersection( r.edges[1], r.edges[2] ) };
    r.privates = private_parts( r );
    return r;
}

} // namespace detail

/// Case 1: all three private parts non-empty. Case 2: exactly two, and the
/// private-less edge goes to role e2. Case 3: exactly one, and its owner
/// goes to role e2. Case 4: none. Unassigned roles take the remaining edges
/// in ascending edge-index order.
inline LabeledTriple relabel_triple( const Triple& t )
{
    std::array< std::size_t, 3 > by_index{ 0, 1, 2 };
    std::sort( by_index.begin(), by_index.end(),
               [&]( std::size_t a, std::size_t b ) { return t.index[a] < t.index[b]; } );

    const auto privates = private_parts( t );
    std::size_t nonempty = 0;
    for ( const Edge& p : privates )
        nonempty += p.empty() ? 0 : 1;

    LabeledTriple l;
    l.case_id = static_cast< int >( 4 - nonempty );
    l.positions = by_index;

    auto pin_middle = [&]( bool want_empty ) {
        std::size_t middle = 3;
        for ( std::size_t slot : by_index )
            if ( privates[slot].empty() == want_empty ) {
                middle = slot;
                break;
            }
        std::array< std::size_t, 3 > roles{};
        std::size_t r = 0;
        for ( std::size_t slot : by_index )
            if ( slot != middle ) {
                roles[r == 0 ? 0 : 2] = slot;
                ++r;
            }
        roles[1] = middle;
        l.positions = roles;
    };
    if ( l.case_id == 2 )
        pin_middle( true );
    else if ( l.case_id == 3 )
        pin_middle( false );

    l.triple = detail::reorder( t, l.positions );
    return l;
}

/// Colors exactly the union X of the labeled triple: private parts 1, 2, 3;
/// e1∩e3 gets one 1 (smallest vertex) and 3 elsewhere; e1∩e2 gets one 2
/// and 4 elsewhere; e2∩e3 is all 5.
inline Coloring color_X( const LabeledTriple& l )
{
    const auto& t = l.triple;
    const Edge& e1e2 = t.intersections[0];
    const Edge& e1e3 = t.intersections[1];
    const Edge& e2e3 = t.intersections[2];
    if ( e1e3.size() < 2 )
        throw PreconditionError( "e1 and e3 meet in fewer than 2 vertices", { t.edges[0], t.edges[2] } );
    if ( e1e2.size() < 2 )
        throw PreconditionError( "e1 and e2 meet in fewer than 2 vertices", { t.edges[0], t.edges[1] } );

    Coloring c;
    for ( Color role = 0; role < 3; ++role )
        for ( Vertex v : t.privates[role] )
            c[v] = role + 1;
    for ( std::size_t i = 0; i < e1e3.size(); ++i )
        c[e1e3[i]] = i == 0 ? 1 : 3;
    for ( std::size_t i = 0; i < e1e2.size(); ++i )
        c[e1e2[i]] = i == 0 ? 2 : 4;
    for ( Vertex v : e2e3 )
        c[v] = 5;
    return c;
}

/// Case 1 rule for the vertices outside X, taken in ascending id order: w
/// gets color 1 if some edge through w is already fully colored from {2,3}
/// apart from w, and color 2 otherwise.
inline Coloring greedy_outside_case1( const Hypergraph& h, Coloring partial, const Edge& x )
{
    std::vector< std::vector< std::size_t > > incident( h.vertex_count() );
    for ( std::size_t i = 0; i < h.edge_count(); ++i )
        for ( Vertex v : h.edge( i ) )
            incident[h.position( v )].push_back( i );

    auto only_two_three = [&]( const Edge& f, Vertex w ) {
        for ( Vertex u : f ) {
            if ( u == w )
                continue;
            auto it = partial.find( u );
            if ( it == partial.end() || ( it->second != 2 && it->second != 3 ) )
                return false;
        }
        return true;
    };

    for ( Vertex w : set_difference( h.vertices(), x ) ) {
        bool forced = false;
        for ( std::size_t f : incident[h.position( w )] )
            if ( only_two_three( h.edge( f ), w ) ) {
                forced = true;
                break;
            }
        partial[w] = forced ? 1 : 2;
    }
    return partial;
}

/// Case 3: looks for an edge colored entirely from {2,3}. If one exists,
/// returns the triple (f, e2, e3), which has the same union as the current
/// triple but at least two private parts.
inline std::optional< Triple > case3_detect_swap( const Hypergraph& h, const LabeledTriple& l, const Coloring& c )
{
    std::optional< std::size_t > found;
    for ( std::size_t i = 0; i < h.edge_count() && !found; ++i ) {
        const bool inside = std::all_of( h.edge( i ).begin(), h.edge( i ).end(), [&]( Vertex v ) {
            auto it = c.find( v );
            return it != c.end() && ( it->second == 2 || it->second == 3 );
        } );
        if ( inside )
            found = i;
    }
    if ( !found )
        return std::nullopt;

    std::array< std::size_t, 3 > idx{ *found, l.triple.index[1], l.triple.index[2] };
    std::sort( idx.begin(), idx.end() );
    Triple swapped = make_triple( h, idx[0], idx[1], idx[2] );

    const Edge& f = h.edge( *found );
    if ( !set_intersection( swapped.intersections[0], swapped.edges[2] ).empty() )
        throw VerificationError( "swapped triple has a common vertex", f, 0 );
    if ( swapped.union_ != l.triple.union_ )
        throw VerificationError( "swapped triple changes the union", f, 0 );
    const auto nonempty = std::count_if( swapped.privates.begin(), swapped.privates.end(),
                                         []( const Edge& p ) { return !p.empty(); } );
    if ( nonempty < 2 )
        throw VerificationError( "swapped triple has fewer than two private parts", f, 0 );
    return swapped;
}

struct TheoremResult
{
    Coloring coloring;
    ColoringReport report;
};

namespace detail {

inline void fill_outside( const Hypergraph& h, Coloring& c, const Edge& x, Color color )
{
    for ( Vertex v : set_difference( h.vertices(), x ) )
        c[v] = color;
}

// `g` is the antichain of minimal edges.
inline Coloring color_from_triple( const Hypergraph& g, const Triple& t, Trace& trace, bool first )
{
    const LabeledTriple l = relabel_triple( t );
    if ( first )
        trace.case_id = l.case_id;
    trace.final_case_id = l.case_id;
    trace.chosen_triple = l.triple.edges;

    Coloring c = color_X( l );
    const Edge& x = l.triple.union_;
    switch ( l.case_id ) {
    case 1:
        return greedy_outside_case1( g, std::move( c ), x );
    case 2:
        fill_outside( g, c, x, 2 );
        return c;
    case 3:
        fill_outside( g, c, x, 1 );
        if ( auto swapped = case3_detect_swap( g, l, c ) ) {
            if ( !first )
                throw VerificationError( "second Case 3 swap", swapped->edges[0], 0 );
            trace.swapped = true;
            return color_from_triple( g, *swapped, trace, false );
        }
        return c;
    default:
        fill_outside( g, c, x, 1 );
        return c;
    }
}

} // namespace detail

/// 3-strong coloring with at most five colors for a 2-intersecting
/// hypergraph (a family with at most one edge is accepted as well).
///
/// Pipeline: trivial families; a size-2 minimal edge; otherwise reduce to
/// the minimal edges and either apply lemma_coloring at t = 3 (every three
/// edges share a vertex) or run the four-case construction on a
/// minimum-union triple with empty intersection. The result is always
/// re-verified against `h`; a failed check throws VerificationError.
inline TheoremResult theorem_coloring( const Hypergraph& h )
{
    if ( auto bad = intersection_witness( h, 2 ) )
        throw PreconditionError( "hypergraph is not 2-intersecting", { h.edge( bad->first ), h.edge( bad->second ) } );

    TheoremResult result;
    Trace& trace = result.report.trace;
    Coloring& c = result.coloring;

    if ( h.edge_count() <= 1 ) {
        trace.path = Path::trivial;
        for ( Vertex v : h.vertices() )
            c[v] = 1;
        if ( h.edge_count() == 1 ) {
            const Edge& e = h.edge( 0 );
            const std::size_t palette = std::min< std::size_t >( e.size(), 3 );
            for ( std::size_t i = 0; i < e.size(); ++i )
                c[e[i]] = static_cast< Color >( i % palette + 1 );
        }
    }
    else {
        const Hypergraph g = minimal_edges( h );
        if ( g.edge( 0 ).size() == 2 ) {
            // Any other minimal edge would meet this one in 2 vertices and
            // so contain it; the edge is the only minimal one.
            trace.path = Path::size_two_minimal;
            for ( Vertex v : h.vertices() )
                c[v] = 3;
            c[g.edge( 0 )[0]] = 1;
            c[g.edge( 0 )[1]] = 2;
        }
        else if ( auto t = find_min_union_empty_triple( g ) ) {
            trace.path = Path::triple;
            c = detail::color_from_triple( g, *t, trace, true );
        }
        else {
            trace.path = Path::lemma;
            c = lemma_coloring( g, 3 );
        }
    }

    Trace kept = trace;
    result.report = verify_strong( h, c, 3 );
    result.report.trace = std::move( kept );
    if ( !result.report.valid )
        throw VerificationError( "theorem coloring is not 3-strong", result.report.failing_edges.front().edge,
                                 result.report.failing_edges.front().distinct );
    const std::size_t bound = result.report.trace.path == Path::lemma ? 4 : 5;
    if ( result.report.colors_used > bound )
        throw VerificationError( "theorem coloring uses " + std::to_string( result.report.colors_used ) + " colors",
                                 {}, result.report.colors_used );
    return result;
}

} // namespace hypercolor
