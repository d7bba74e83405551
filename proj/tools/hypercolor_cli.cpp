#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercolor/hypercolor.hpp"
#include "hypercolor/json_report.hpp"

namespace {

using namespace hypercolor;

// Stable exit codes.
enum Exit : int
{
    ok = 0,
    io_or_parse = 1,
    precondition = 2,
    internal_verification = 3,
    invalid_coloring = 4,
    budget = 5,
};

std::string read_file( const std::string& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw std::runtime_error( "cannot open " + path );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output( const std::string& path, const std::string& text )
{
    if ( path.empty() || path == "-" ) {
        std::cout << text;
        return;
    }
    std::ofstream out( path, std::ios::binary );
    if ( !out )
        throw std::runtime_error( "cannot write " + path );
    out << text;
}

// Text coloring file, or the "coloring" object of a JSON report.
Coloring load_coloring( const std::string& path )
{
    const std::string text = read_file( path );
    const auto first = text.find_first_not_of( " \t\r\n" );
    if ( first != std::string::npos && text[first] == '{' ) {
        const auto doc = nlohmann::json::parse( text );
        Coloring c;
        for ( const auto& [key, value] : doc.at( "coloring" ).items() )
            c[static_cast< Vertex >( std::stoul( key ) )] = value.get< Color >();
        return c;
    }
    return parse_coloring( text );
}

std::string describe_trace( const Trace& t )
{
    std::ostringstream os;
    os << "path=" << to_string( t.path );
    if ( t.case_id )
        os << " case=" << *t.case_id;
    if ( t.swapped )
        os << " swapped final_case=" << *t.final_case_id;
    return os.str();
}

std::uint64_t oracle_budget_from_env()
{
    if ( const char* env = std::getenv( "HYPERCOLOR_ORACLE_BUDGET" ) )
        return std::stoull( env );
    return OracleConfig{}.node_budget;
}

std::string yes_no( bool b ) { return b ? "yes" : "no"; }

std::string predicate_summary( const Hypergraph& h )
{
    std::ostringstream os;
    os << "vertices=" << h.vertex_count() << " edges=" << h.edge_count()
       << " intersecting=" << yes_no( is_t_intersecting( h, 1 ) )
       << " 2-intersecting=" << yes_no( is_t_intersecting( h, 2 ) )
       << " P3=" << yes_no( has_property_pt( h, 3 ) ) << '\n';
    return os.str();
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Strong colorings of intersecting hypergraphs" };
    app.require_subcommand( 1 );

    std::string format = "text";

    auto* color = app.add_subcommand( "color", "Color a hypergraph file" );
    std::string color_file;
    std::string algorithm = "theorem";
    std::size_t lemma_t = 2;
    color->add_option( "file", color_file, "Hypergraph file" )->required();
    color->add_option( "--algorithm", algorithm, "theorem or lemma" )->check( CLI::IsMember( { "theorem", "lemma" } ) );
    color->add_option( "--t", lemma_t, "Strength for --algorithm lemma" );
    color->add_option( "--format", format, "text or json" )->check( CLI::IsMember( { "text", "json" } ) );

    auto* check = app.add_subcommand( "check", "Check a coloring against a hypergraph" );
    std::string check_graph, check_coloring;
    std::size_t check_strength = 3;
    check->add_option( "hypergraph", check_graph, "Hypergraph file" )->required();
    check->add_option( "coloring", check_coloring, "Coloring file (text or JSON report)" )->required();
    check->add_option( "--strength", check_strength, "Required strength c" );
    check->add_option( "--format", format, "text or json" )->check( CLI::IsMember( { "text", "json" } ) );

    auto* oracle = app.add_subcommand( "oracle", "Exact minimum number of colors" );
    std::string oracle_file;
    std::size_t oracle_strength = 3;
    std::size_t max_colors = 6;
    std::size_t max_vertices = OracleConfig{}.max_vertices;
    oracle->add_option( "file", oracle_file, "Hypergraph file" )->required();
    oracle->add_option( "--strength", oracle_strength, "Required strength c" );
    oracle->add_option( "--max-colors", max_colors, "Largest palette to try" );
    oracle->add_option( "--max-vertices", max_vertices, "Refuse larger ground sets" );
    oracle->add_option( "--format", format, "text or json" )->check( CLI::IsMember( { "text", "json" } ) );

    auto* gen = app.add_subcommand( "gen", "Generate an instance" );
    std::string family;
    std::vector< std::size_t > params;
    std::uint64_t seed = 0;
    std::string out_file;
    gen->add_option( "family", family,
                     "complete-uniform | sunflower | apex-clique | random-2-intersecting | random-intersecting" )
        ->required();
    gen->add_option( "params", params, "Family parameters" );
    gen->add_option( "--seed", seed, "Seed for random families" );
    gen->add_option( "--out", out_file, "Output file (default stdout)" );

    auto* witness = app.add_subcommand( "witness", "Search for an instance reaching a pipeline branch" );
    std::string target_name;
    std::size_t witness_budget = 20000;
    witness->add_option( "target", target_name, "1 | 2 | 3 | 4 | case3-swap | size2-minimal | lemma | trivial" )
        ->required();
    witness->add_option( "--budget", witness_budget, "Instances to try" );
    witness->add_option( "--seed", seed, "Search seed" );
    witness->add_option( "--out", out_file, "Output file (default stdout)" );

    CLI11_PARSE( app, argc, argv );
    const bool json = format == "json";

    try {
        if ( *color ) {
            const Hypergraph h = parse_hypergraph( read_file( color_file ) );
            Coloring c;
            ColoringReport report;
            if ( algorithm == "theorem" ) {
                auto result = theorem_coloring( h );
                c = std::move( result.coloring );
                report = std::move( result.report );
            }
            else {
                c = lemma_coloring( h, lemma_t );
                report = verify_strong( h, c, lemma_t );
                report.trace.path = Path::lemma;
            }
            if ( json ) {
                std::cout << report_to_json( report, &c ).dump( 2 ) << '\n';
            }
            else {
                std::cout << "# algorithm: " << algorithm << '\n'
                          << "# " << describe_trace( report.trace ) << '\n'
                          << "# strength: " << report.strength << '\n'
                          << "# colors_used: " << report.colors_used << '\n'
                          << "# valid: " << yes_no( report.valid ) << '\n'
                          << serialize_coloring( c );
            }
            return Exit::ok;
        }

        if ( *check ) {
            const Hypergraph h = parse_hypergraph( read_file( check_graph ) );
            const Coloring c = load_coloring( check_coloring );
            const ColoringReport report = verify_strong( h, c, check_strength );
            if ( json ) {
                std::cout << report_to_json( report ).dump( 2 ) << '\n';
            }
            else {
                std::cout << ( report.valid ? "valid" : "invalid" ) << ' ' << check_strength
                          << "-strong coloring, colors_used=" << report.colors_used << '\n';
                for ( const auto& f : report.failing_edges )
                    std::cout << "failing edge " << format_edge( f.edge ) << " distinct=" << f.distinct << '\n';
            }
            return report.valid ? Exit::ok : Exit::invalid_coloring;
        }

        if ( *oracle ) {
            const Hypergraph h = parse_hypergraph( read_file( oracle_file ) );
            OracleConfig config;
            config.max_vertices = max_vertices;
            config.node_budget = oracle_budget_from_env();
            const OracleResult r = oracle_min_colors( h, oracle_strength, max_colors, config );
            if ( json ) {
                std::cout << oracle_to_json( r, max_colors ).dump( 2 ) << '\n';
            }
            else if ( r.budget_exhausted ) {
                std::cout << "undecided: node budget exhausted after " << r.explored << " nodes\n";
            }
            else if ( r.min_colors ) {
                std::cout << "min_colors " << *r.min_colors << '\n' << serialize_coloring( *r.witness );
            }
            else {
                std::cout << "none <= " << max_colors << '\n';
            }
            return r.budget_exhausted ? Exit::budget : Exit::ok;
        }

        if ( *gen ) {
            const auto fam = parse_family( family );
            if ( !fam ) {
                std::cerr << "unknown family '" << family << "'\n";
                return Exit::io_or_parse;
            }
            GeneratorSpec spec{ *fam, params, seed };
            const Hypergraph h = generate( spec );
            std::string text;
            if ( *fam == Family::random_2_intersecting || *fam == Family::random_intersecting ) {
                text += "# generator: " + std::string( to_string( *fam ) );
                for ( std::size_t p : params )
                    text += ' ' + std::to_string( p );
                text += "\n# seed: " + std::to_string( seed ) + "\n# prng: " + std::string( prng_id ) + '\n';
            }
            text += serialize_hypergraph( h );
            write_output( out_file, text );
            ( out_file.empty() ? std::cerr : std::cout ) << predicate_summary( h );
            return Exit::ok;
        }

        if ( *witness ) {
            const auto target = parse_branch_target( target_name );
            if ( !target ) {
                std::cerr << "unknown target '" << target_name << "'\n";
                return Exit::io_or_parse;
            }
            const auto found = find_branch_witness( *target, witness_budget, seed );
            if ( !found ) {
                std::cerr << "no witness for " << target_name << " within " << witness_budget << " instances\n";
                return Exit::budget;
            }
            write_output( out_file, serialize_hypergraph( *found ) );
            ( out_file.empty() ? std::cerr : std::cout )
                << describe_trace( theorem_coloring( *found ).report.trace ) << '\n';
            return Exit::ok;
        }
    }
    catch ( const PreconditionError& e ) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return Exit::precondition;
    }
    catch ( const VerificationError& e ) {
        std::cerr << "internal verification failed: " << e.what() << '\n';
        return Exit::internal_verification;
    }
    catch ( const OracleBudgetExhausted& e ) {
        std::cerr << e.what() << '\n';
        return Exit::budget;
    }
    catch ( const AttemptBudgetExhausted& e ) {
        std::cerr << e.what() << '\n';
        return Exit::io_or_parse;
    }
    catch ( const std::exception& e ) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::io_or_parse;
    }
    return Exit::ok;
}
