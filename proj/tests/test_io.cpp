#include <filesystem>

#include <gtest/gtest.h>

#include "hypercolor/io.hpp"
#include "hypercolor/json_report.hpp"
#include "hypercolor/theorem.hpp"

#include "corpus.hpp"

using namespace hypercolor;

TEST( ParseHypergraph, CommentsBlanksAndHeader )
{
    const auto h = parse_hypergraph( "# sample\n"
                                     "vertices: 0 1 2 3 4 9\n"
                                     "\n"
                                     "1 2 3   # first edge\n"
                                     "\t3 2 1\n"
                                     "0 4\n" );
    EXPECT_EQ( h.vertices(), ( std::vector< Vertex >{ 0, 1, 2, 3, 4, 9 } ) );
    EXPECT_EQ( h.edges(), ( std::vector< Edge >{ { 0, 4 }, { 1, 2, 3 } } ) );
}

TEST( ParseHypergraph, ErrorsCarryLineNumber )
{
    try {
        parse_hypergraph( "1 2\n\n1 x 3\n" );
        FAIL() << "expected ParseError";
    }
    catch ( const ParseError& e ) {
        EXPECT_EQ( e.line(), 3u );
    }
    EXPECT_THROW( parse_hypergraph( "1 -2\n" ), ParseError );
    EXPECT_THROW( parse_hypergraph( "vertices: 1\nvertices: 2\n" ), ParseError );
    EXPECT_THROW( parse_hypergraph( "99999999999\n" ), ParseError );
}

TEST( SerializeHypergraph, HeaderOnlyForIsolatedVertices )
{
    EXPECT_EQ( serialize_hypergraph( Hypergraph::from_edges( { { 2, 1 }, { 1, 2, 3 } } ) ), "1 2\n1 2 3\n" );
    EXPECT_EQ( serialize_hypergraph( Hypergraph( { 1, 2, 5 }, { { 1, 2 } } ) ), "vertices: 1 2 5\n1 2\n" );
    EXPECT_EQ( serialize_hypergraph( Hypergraph( { 7 }, {} ) ), "vertices: 7\n" );
}

TEST( RoundTrip, WholeCorpus )
{
    std::vector< Hypergraph > all;
    for ( const auto& inst : corpus::two_intersecting() )
        all.push_back( inst.h );
    for ( const auto& inst : corpus::random_2_intersecting( 40 ) )
        all.push_back( inst.h );
    for ( const auto& entry : std::filesystem::recursive_directory_iterator( corpus::data_path( "" ) ) )
        if ( entry.path().extension() == ".hg" )
            all.push_back( parse_hypergraph( corpus::read_text( entry.path().string() ) ) );

    for ( const auto& h : all ) {
        const std::string text = serialize_hypergraph( h );
        const auto again = parse_hypergraph( text );
        EXPECT_EQ( again, h );
        EXPECT_EQ( serialize_hypergraph( again ), text );
    }
}

TEST( ColoringFile, ParseAndSerialize )
{
    const Coloring c = parse_coloring( "# v c\n1 2\n 3 1 \n\n2 5\n" );
    EXPECT_EQ( c, ( Coloring{ { 1, 2 }, { 2, 5 }, { 3, 1 } } ) );
    EXPECT_EQ( serialize_coloring( c ), "1 2\n2 5\n3 1\n" );
    EXPECT_EQ( parse_coloring( serialize_coloring( c ) ), c );
}

TEST( ColoringFile, Errors )
{
    EXPECT_THROW( parse_coloring( "1 2 3\n" ), ParseError );
    EXPECT_THROW( parse_coloring( "1 0\n" ), ParseError );
    try {
        parse_coloring( "1 1\n2 2\n1 3\n" );
        FAIL() << "expected ParseError";
    }
    catch ( const ParseError& e ) {
        EXPECT_EQ( e.line(), 3u );
    }
}

TEST( JsonReport, MirrorsReport )
{
    const auto r = theorem_coloring( corpus::case3_swap_instance() );
    const auto j = report_to_json( r.report, &r.coloring );
    EXPECT_EQ( j["kind"], "coloring-report" );
    EXPECT_EQ( j["valid"], true );
    EXPECT_EQ( j["strength"], 3 );
    EXPECT_EQ( j["trace"]["path"], "triple" );
    EXPECT_EQ( j["trace"]["case_id"], 3 );
    EXPECT_EQ( j["trace"]["final_case_id"], 2 );
    EXPECT_EQ( j["trace"]["swapped"], true );
    EXPECT_EQ( j["trace"]["chosen_triple"].size(), 3u );
    EXPECT_EQ( j["coloring"].size(), r.coloring.size() );
    EXPECT_EQ( j["coloring"]["1"], r.coloring.at( 1 ) );
}

TEST( JsonReport, LemmaTraceHasNulls )
{
    const auto r = theorem_coloring( gen_sunflower( 2, 3, 1 ) );
    const auto j = report_to_json( r.report );
    EXPECT_TRUE( j["trace"]["case_id"].is_null() );
    EXPECT_TRUE( j["trace"]["chosen_triple"].is_null() );
    EXPECT_FALSE( j.contains( "coloring" ) );
}
