#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coloring.hpp"
#include "hypergraph.hpp"

namespace hypercolor {

namespace detail {

inline std::string_view strip_comment( std::string_view line )
{
    if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
        line = line.substr( 0, hash );
    const auto first = line.find_first_not_of( " \t\r" );
    if ( first == std::string_view::npos )
        return {};
    const auto last = line.find_last_not_of( " \t\r" );
    return line.substr( first, last - first + 1 );
}

inline std::vector< std::string_view > split_ws( std::string_view s )
{
    std::vector< std::string_view > out;
    std::size_t i = 0;
    while ( i < s.size() ) {
        while ( i < s.size() && ( s[i] == ' ' || s[i] == '\t' ) )
            ++i;
        const std::size_t start = i;
        while ( i < s.size() && s[i] != ' ' && s[i] != '\t' )
            ++i;
        if ( i > start )
            out.push_back( s.substr( start, i - start ) );
    }
    return out;
}

inline std::uint32_t parse_uint( std::string_view token, std::size_t line )
{
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
    if ( ec != std::errc{} || ptr != token.data() + token.size() )
        throw ParseError( line, "expected a non-negative integer, got '" + std::string( token ) + "'" );
    return value;
}

} // namespace detail

/// One edge per line, vertices separated by whitespace. '#' starts a
/// comment; blank lines are skipped. A "vertices: ..." line declares
/// ground-set vertices, including ones in no edge.
inline Hypergraph parse_hypergraph( std::istream& in )
{
    std::vector< Vertex > declared;
    std::vector< Edge > edges;
    bool have_header = false;
    std::string raw;
    for ( std::size_t line = 1; std::getline( in, raw ); ++line ) {
        std::string_view body = detail::strip_comment( raw );
        if ( body.empty() )
            continue;
        constexpr std::string_view header = "vertices:";
        if ( body.starts_with( header ) ) {
            if ( have_header )
                throw ParseError( line, "duplicate vertices: header" );
            have_header = true;
            for ( auto tok : detail::split_ws( body.substr( header.size() ) ) )
                declared.push_back( detail::parse_uint( tok, line ) );
            continue;
        }
        Edge e;
        for ( auto tok : detail::split_ws( body ) )
            e.push_back( detail::parse_uint( tok, line ) );
        edges.push_back( std::move( e ) );
    }
    return Hypergraph::from_edges( std::move( edges ), std::move( declared ) );
}

inline Hypergraph parse_hypergraph( const std::string& text )
{
    std::istringstream in( text );
    return parse_hypergraph( in );
}

/// Canonical text form. The header line appears only when some vertex is
/// covered by no edge.
inline std::string serialize_hypergraph( const Hypergraph& h )
{
    std::vector< bool > covered( h.vertex_count(), false );
    for ( const Edge& e : h.edges() )
        for ( Vertex v : e )
            covered[h.position( v )] = true;

    std::ostringstream os;
    if ( std::find( covered.begin(), covered.end(), false ) != covered.end() ) {
        os << "vertices:";
        for ( Vertex v : h.vertices() )
            os << ' ' << v;
        os << '\n';
    }
    for ( const Edge& e : h.edges() ) {
        for ( std::size_t i = 0; i < e.size(); ++i )
            os << ( i ? " " : "" ) << e[i];
        os << '\n';
    }
    return os.str();
}

/// "vertex color" per line, same comment rules as hypergraph files.
inline Coloring parse_coloring( std::istream& in )
{
    Coloring c;
    std::string raw;
    for ( std::size_t line = 1; std::getline( in, raw ); ++line ) {
        std::string_view body = detail::strip_comment( raw );
        if ( body.empty() )
            continue;
        const auto tokens = detail::split_ws( body );
        if ( tokens.size() != 2 )
            throw ParseError( line, "expected 'vertex color'" );
        const Vertex v = detail::parse_uint( tokens[0], line );
        const Color col = detail::parse_uint( tokens[1], line );
        if ( col == 0 )
            throw ParseError( line, "colors start at 1" );
        if ( !c.emplace( v, col ).second )
            throw ParseError( line, "vertex " + std::to_string( v ) + " colored twice" );
    }
    return c;
}

inline Coloring parse_coloring( const std::string& text )
{
    std::istringstream in( text );
    return parse_coloring( in );
}

inline std::string serialize_coloring( const Coloring& c )
{
    std::ostringstream os;
    for ( const auto& [v, col] : c )
        os << v << ' ' << col << '\n';
    return os.str();
}

} // namespace hypercolor
