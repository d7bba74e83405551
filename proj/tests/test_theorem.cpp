#include <gtest/gtest.h>

#include "hypercolor/generators.hpp"
#include "hypercolor/theorem.hpp"

#include "corpus.hpp"
#include "naive_oracle.hpp"

using namespace hypercolor;

namespace {

Triple triple_of( std::initializer_list< std::initializer_list< Vertex > > edges )
{
    const auto h = Hypergraph::from_edges( edges );
    return make_triple( h, 0, 1, 2 );
}

} // namespace

TEST( RelabelTriple, CaseOneKeepsOrder )
{
    const auto t = triple_of( { { 1, 2, 3, 4, 7 }, { 1, 2, 5, 6, 8 }, { 3, 4, 5, 6, 9 } } );
    const auto l = relabel_triple( t );
    EXPECT_EQ( l.case_id, 1 );
    EXPECT_EQ( l.positions, ( std::array< std::size_t, 3 >{ 0, 1, 2 } ) );
    EXPECT_EQ( l.triple.privates, ( std::array< Edge, 3 >{ Edge{ 7 }, Edge{ 8 }, Edge{ 9 } } ) );
}

TEST( RelabelTriple, CaseTwoMiddleAlreadyPrivateLess )
{
    Triple t;
    t.index = { 0, 1, 2 };
    t.edges = { Edge{ 1, 2, 3, 5, 7 }, Edge{ 1, 2, 4, 6 }, Edge{ 3, 4, 5, 6, 9 } };
    t.union_ = { 1, 2, 3, 4, 5, 6, 7, 9 };
    t.privates = private_parts( t );
    ASSERT_EQ( t.privates, ( std::array< Edge, 3 >{ Edge{ 7 }, Edge{}, Edge{ 9 } } ) );
    const auto l = relabel_triple( t );
    EXPECT_EQ( l.case_id, 2 );
    EXPECT_EQ( l.positions, ( std::array< std::size_t, 3 >{ 0, 1, 2 } ) );
}

TEST( RelabelTriple, CaseTwoMovesPrivateLessEdgeToMiddle )
{
    Triple t;
    t.index = { 0, 1, 2 };
    t.edges = { Edge{ 1, 2, 4, 6 }, Edge{ 1, 2, 3, 5, 7 }, Edge{ 3, 4, 5, 6, 9 } };
    const auto l = relabel_triple( t );
    EXPECT_EQ( l.case_id, 2 );
    EXPECT_EQ( l.positions, ( std::array< std::size_t, 3 >{ 1, 0, 2 } ) );
    EXPECT_EQ( l.triple.edges[1], ( Edge{ 1, 2, 4, 6 } ) );
    EXPECT_TRUE( l.triple.privates[1].empty() );
    EXPECT_EQ( l.triple.index, ( std::array< std::size_t, 3 >{ 1, 0, 2 } ) );
}

TEST( RelabelTriple, CaseThreeMovesPrivateOwnerToMiddle )
{
    Triple t;
    t.index = { 0, 1, 2 };
    t.edges = { Edge{ 1, 2, 3, 4 }, Edge{ 3, 4, 5, 6 }, Edge{ 1, 2, 5, 6, 7 } };
    const auto l = relabel_triple( t );
    EXPECT_EQ( l.case_id, 3 );
    EXPECT_EQ( l.positions, ( std::array< std::size_t, 3 >{ 0, 2, 1 } ) );
    EXPECT_EQ( l.triple.privates[1], ( Edge{ 7 } ) );
}

TEST( RelabelTriple, CaseFour )
{
    const auto l = relabel_triple( triple_of( { { 1, 2, 3, 4 }, { 1, 2, 5, 6 }, { 3, 4, 5, 6 } } ) );
    EXPECT_EQ( l.case_id, 4 );
    EXPECT_EQ( l.positions, ( std::array< std::size_t, 3 >{ 0, 1, 2 } ) );
}

TEST( RelabelTriple, RemainingRolesFollowEdgeIndex )
{
    Triple t;
    t.index = { 5, 2, 9 };
    t.edges = { Edge{ 1, 2, 3, 5, 7 }, Edge{ 3, 4, 5, 6, 9 }, Edge{ 1, 2, 4, 6 } };
    const auto l = relabel_triple( t );
    EXPECT_EQ( l.case_id, 2 );
    // e2 is the private-less slot 2; slots 1 (index 2) and 0 (index 5)
    // fill e1 and e3 by ascending index.
    EXPECT_EQ( l.positions, ( std::array< std::size_t, 3 >{ 1, 2, 0 } ) );
    EXPECT_EQ( l.triple.index, ( std::array< std::size_t, 3 >{ 2, 9, 5 } ) );
}

TEST( ColorX, CaseFourCompleteUniform )
{
    const auto l = relabel_triple( triple_of( { { 1, 2, 3, 4 }, { 1, 2, 5, 6 }, { 3, 4, 5, 6 } } ) );
    EXPECT_EQ( color_X( l ), ( Coloring{ { 1, 2 }, { 2, 4 }, { 3, 1 }, { 4, 3 }, { 5, 5 }, { 6, 5 } } ) );
}

TEST( ColorX, PrivatesAndIntersections )
{
    const auto l = relabel_triple( triple_of( { { 1, 2, 3, 5, 7 }, { 1, 2, 4, 6, 8 }, { 3, 4, 5, 6, 9 } } ) );
    ASSERT_EQ( l.case_id, 1 );
    const Coloring c = color_X( l );
    const Coloring expected{ { 1, 2 }, { 2, 4 }, { 3, 1 }, { 4, 5 }, { 5, 3 }, { 6, 5 }, { 7, 1 }, { 8, 2 }, { 9, 3 } };
    EXPECT_EQ( c, expected );
}

TEST( ColorX, RejectsThinIntersection )
{
    Triple t;
    t.index = { 0, 1, 2 };
    t.edges = { Edge{ 1, 2, 3, 7 }, Edge{ 1, 2, 4, 8 }, Edge{ 3, 4, 9 } };
    t.union_ = { 1, 2, 3, 4, 7, 8, 9 };
    t.intersections = { Edge{ 1, 2 }, Edge{ 3 }, Edge{ 4 } };
    t.privates = private_parts( t );
    LabeledTriple l{ t, 1, { 0, 1, 2 } };
    try {
        color_X( l );
        FAIL() << "expected PreconditionError";
    }
    catch ( const PreconditionError& e ) {
        EXPECT_EQ( e.witness(), ( std::vector< Edge >{ { 1, 2, 3, 7 }, { 3, 4, 9 } } ) );
    }
}

TEST( ColorX, OneAndTwoUsedOnceInIntersections )
{
    const auto l = relabel_triple( triple_of( { { 1, 2, 3, 4 }, { 1, 2, 5, 6 }, { 3, 4, 5, 6 } } ) );
    const Coloring c = color_X( l );
    auto count = [&]( const Edge& part, Color col ) {
        return std::count_if( part.begin(), part.end(), [&]( Vertex v ) { return c.at( v ) == col; } );
    };
    EXPECT_EQ( count( l.triple.intersections[1], 1 ), 1 );
    EXPECT_EQ( count( l.triple.intersections[0], 2 ), 1 );
    EXPECT_EQ( c.size(), l.triple.union_.size() );
}

TEST( GreedyOutside, ForcedToOne )
{
    // X = {1..6}; 1 has color 2 and 4 has color 3, so 9 completes {1,4,9}.
    const auto h = Hypergraph::from_edges( { { 1, 4, 9 }, { 2, 9 } } );
    const Coloring partial{ { 1, 2 }, { 2, 4 }, { 3, 1 }, { 4, 3 } };
    const Coloring c = greedy_outside_case1( h, partial, { 1, 2, 3, 4 } );
    EXPECT_EQ( c.at( 9 ), 1u );
}

TEST( GreedyOutside, DefaultsToTwo )
{
    const auto h = Hypergraph::from_edges( { { 2, 4, 9 }, { 1, 2, 9 } } );
    const Coloring partial{ { 1, 2 }, { 2, 4 }, { 3, 1 }, { 4, 3 } };
    const Coloring c = greedy_outside_case1( h, partial, { 1, 2, 3, 4 } );
    EXPECT_EQ( c.at( 9 ), 2u );
}

TEST( GreedyOutside, UsesEarlierOutsideVertices )
{
    // 8 gets 2 first, after which {1, 8, 9} is {2,2}+9 and forces 9 to 1.
    const auto h = Hypergraph::from_edges( { { 1, 8, 9 }, { 2, 8 } } );
    const Coloring partial{ { 1, 2 }, { 2, 4 } };
    const Coloring c = greedy_outside_case1( h, partial, { 1, 2 } );
    EXPECT_EQ( c.at( 8 ), 2u );
    EXPECT_EQ( c.at( 9 ), 1u );
}

TEST( GreedyOutside, EmptyOutside )
{
    const auto h = Hypergraph::from_edges( { { 1, 2 } } );
    const Coloring partial{ { 1, 2 }, { 2, 4 } };
    EXPECT_EQ( greedy_outside_case1( h, partial, { 1, 2 } ), partial );
}

TEST( Case3DetectSwap, NoneWhenNothingInsideTwoThree )
{
    const auto g = corpus::case3_instance();
    const auto t = find_min_union_empty_triple( g );
    ASSERT_TRUE( t );
    const auto l = relabel_triple( *t );
    ASSERT_EQ( l.case_id, 3 );
    Coloring c = color_X( l );
    EXPECT_FALSE( case3_detect_swap( g, l, c ) );
}

TEST( Case3DetectSwap, SwapKeepsUnionAndGainsPrivates )
{
    const auto g = corpus::case3_swap_instance();
    const auto t = find_min_union_empty_triple( g );
    ASSERT_TRUE( t );
    const auto l = relabel_triple( *t );
    ASSERT_EQ( l.case_id, 3 );
    const Coloring c = color_X( l );
    const auto swapped = case3_detect_swap( g, l, c );
    ASSERT_TRUE( swapped );
    EXPECT_EQ( swapped->union_, l.triple.union_ );

    // New private parts: color-4 vertices of e2 and the color-1 vertex of e3.
    Edge color4_in_e2, color1_in_e3;
    for ( Vertex v : l.triple.edges[1] )
        if ( c.at( v ) == 4 )
            color4_in_e2.push_back( v );
    for ( Vertex v : l.triple.edges[2] )
        if ( c.at( v ) == 1 )
            color1_in_e3.push_back( v );
    std::vector< Edge > privates( swapped->privates.begin(), swapped->privates.end() );
    EXPECT_NE( std::find( privates.begin(), privates.end(), color4_in_e2 ), privates.end() );
    EXPECT_NE( std::find( privates.begin(), privates.end(), color1_in_e3 ), privates.end() );

    const auto relabeled = relabel_triple( *swapped );
    EXPECT_EQ( relabeled.case_id, 2 );
}

TEST( TheoremColoring, CompleteUniformCaseFour )
{
    const auto h = gen_complete_uniform( 6, 4 );
    const auto r = theorem_coloring( h );
    EXPECT_TRUE( r.report.valid );
    EXPECT_EQ( r.report.colors_used, 5u );
    EXPECT_EQ( r.report.trace.path, Path::triple );
    EXPECT_EQ( r.report.trace.case_id, 4 );
    EXPECT_FALSE( r.report.trace.swapped );
    EXPECT_TRUE( naive::is_strong( h, r.coloring, 3 ) );
}

TEST( TheoremColoring, SunflowerTakesLemmaPath )
{
    const auto h = gen_sunflower( 2, 3, 1 );
    const auto r = theorem_coloring( h );
    EXPECT_TRUE( r.report.valid );
    EXPECT_LE( r.report.colors_used, 4u );
    EXPECT_EQ( r.report.trace.path, Path::lemma );
    EXPECT_FALSE( r.report.trace.case_id );
}

TEST( TheoremColoring, SingleEdge )
{
    const auto r = theorem_coloring( Hypergraph::from_edges( { { 1, 2, 3, 4 } } ) );
    EXPECT_EQ( r.coloring, ( Coloring{ { 1, 1 }, { 2, 2 }, { 3, 3 }, { 4, 1 } } ) );
    EXPECT_EQ( r.report.trace.path, Path::trivial );
}

TEST( TheoremColoring, NoEdges )
{
    const auto r = theorem_coloring( Hypergraph( { 3, 4 }, {} ) );
    EXPECT_EQ( r.coloring, ( Coloring{ { 3, 1 }, { 4, 1 } } ) );
    EXPECT_TRUE( r.report.valid );
}

TEST( TheoremColoring, SizeTwoMinimalEdge )
{
    const auto h = corpus::size2_minimal_instance();
    const auto r = theorem_coloring( h );
    EXPECT_EQ( r.report.trace.path, Path::size_two_minimal );
    EXPECT_EQ( r.coloring, ( Coloring{ { 1, 1 }, { 2, 2 }, { 3, 3 }, { 4, 3 } } ) );
    EXPECT_TRUE( naive::is_strong( h, r.coloring, 3 ) );
}

TEST( TheoremColoring, EachCase )
{
    struct Row
    {
        Hypergraph h;
        int case_id;
        int final_case;
        bool swapped;
    };
    const std::vector< Row > rows{
        { corpus::case1_instance(), 1, 1, false },     { corpus::case2_instance(), 2, 2, false },
        { corpus::case3_instance(), 3, 3, false },     { corpus::case3_swap_instance(), 3, 2, true },
        { corpus::case4_instance(), 4, 4, false },
    };
    for ( const auto& row : rows ) {
        const auto r = theorem_coloring( row.h );
        EXPECT_TRUE( r.report.valid );
        EXPECT_LE( r.report.colors_used, 5u );
        EXPECT_EQ( r.report.trace.path, Path::triple );
        EXPECT_EQ( r.report.trace.case_id, row.case_id );
        EXPECT_EQ( r.report.trace.final_case_id, row.final_case );
        EXPECT_EQ( r.report.trace.swapped, row.swapped );
        EXPECT_TRUE( naive::is_strong( row.h, r.coloring, 3 ) );
    }
}

TEST( TheoremColoring, CaseTwoColorsOutsideWithTwo )
{
    const auto r = theorem_coloring( corpus::case2_instance() );
    EXPECT_EQ( r.coloring.at( 10 ), 2u );
    EXPECT_EQ( r.coloring.at( 11 ), 2u );
}

TEST( TheoremColoring, NonMinimalEdgesStillCovered )
{
    auto h = corpus::case4_instance();
    auto edges = h.edges();
    edges.push_back( { 1, 2, 3, 4, 7 } );
    edges.push_back( { 1, 2, 5, 6, 7, 8 } );
    h = Hypergraph::from_edges( edges );
    const auto r = theorem_coloring( h );
    EXPECT_TRUE( r.report.valid );
    EXPECT_EQ( r.report.trace.case_id, 4 );
}

TEST( TheoremColoring, RejectsNonTwoIntersecting )
{
    try {
        theorem_coloring( Hypergraph::from_edges( { { 1, 2, 3 }, { 3, 4, 5 } } ) );
        FAIL() << "expected PreconditionError";
    }
    catch ( const PreconditionError& e ) {
        EXPECT_EQ( e.witness(), ( std::vector< Edge >{ { 1, 2, 3 }, { 3, 4, 5 } } ) );
    }
}

TEST( TheoremColoring, Deterministic )
{
    for ( const auto& inst : corpus::two_intersecting() ) {
        const auto a = theorem_coloring( inst.h );
        const auto b = theorem_coloring( inst.h );
        EXPECT_EQ( a.coloring, b.coloring ) << inst.name;
        EXPECT_EQ( a.report, b.report ) << inst.name;
    }
}
