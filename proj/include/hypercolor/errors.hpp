#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercolor {

using Vertex = std::uint32_t;
using Edge = std::vector< Vertex >;

inline std::string format_edge( const Edge& e )
{
    std::ostringstream os;
    os << '{';
    for ( std::size_t i = 0; i < e.size(); ++i )
        os << ( i ? "," : "" ) << e[i];
    os << '}';
    return os.str();
}

/// An algorithm's input contract does not hold. `witness` holds the edges
/// that demonstrate the violation (for example a pair meeting in too few
/// vertices).
class PreconditionError : public std::invalid_argument
{
public:
    PreconditionError( const std::string& what, std::vector< Edge > witness )
        : std::invalid_argument( describe( what, witness ) )
        , witness_( std::move( witness ) )
    {}

    const std::vector< Edge >& witness() const { return witness_; }

private:
    static std::string describe( const std::string& what, const std::vector< Edge >& witness )
    {
        std::string s = what;
        if ( !witness.empty() ) {
            s += "; witness:";
            for ( const Edge& e : witness )
                s += " " + format_edge( e );
        }
        return s;
    }

    std::vector< Edge > witness_;
};

/// A constructed coloring failed its own post-check. Signals a defect in
/// the implementation, never a property of the input.
class VerificationError : public std::logic_error
{
public:
    VerificationError( const std::string& what, Edge edge, std::size_t distinct )
        : std::logic_error( what + ": edge " + format_edge( edge ) + " has " + std::to_string( distinct )
                            + " distinct colors" )
        , edge_( std::move( edge ) )
        , distinct_( distinct )
    {}

    const Edge& edge() const { return edge_; }
    std::size_t distinct() const { return distinct_; }

private:
    Edge edge_;
    std::size_t distinct_;
};

class MissingVertexError : public std::out_of_range
{
public:
    explicit MissingVertexError( Vertex v )
        : std::out_of_range( "coloring has no color for vertex " + std::to_string( v ) )
        , vertex_( v )
    {}

    Vertex vertex() const { return vertex_; }

private:
    Vertex vertex_;
};

/// Ground set too large for exhaustive search.
class OracleSizeError : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// Rejection sampling ran out of attempts.
class AttemptBudgetExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error
{
public:
    ParseError( std::size_t line, const std::string& what )
        : std::runtime_error( "line " + std::to_string( line ) + ": " + what )
        , line_( line )
    {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace hypercolor
