#pragma once

#include <string>

#include <json.hpp>

#include "coloring.hpp"
#include "oracle.hpp"

namespace hypercolor {

inline nlohmann::json coloring_to_json( const Coloring& c )
{
    nlohmann::json out = nlohmann::json::object();
    for ( const auto& [v, col] : c )
        out[std::to_string( v )] = col;
    return out;
}

/// Shape is described by schema/report.schema.json ("coloring-report").
inline nlohmann::json report_to_json( const ColoringReport& r, const Coloring* coloring = nullptr )
{
    nlohmann::json failing = nlohmann::json::array();
    for ( const auto& f : r.failing_edges )
        failing.push_back( { { "edge", f.edge }, { "distinct", f.distinct } } );

    const Trace& t = r.trace;
    nlohmann::json trace = {
        { "path", std::string( to_string( t.path ) ) },
        { "case_id", t.case_id ? nlohmann::json( *t.case_id ) : nlohmann::json() },
        { "final_case_id", t.final_case_id ? nlohmann::json( *t.final_case_id ) : nlohmann::json() },
        { "swapped", t.swapped },
        { "chosen_triple", t.chosen_triple ? nlohmann::json( *t.chosen_triple ) : nlohmann::json() },
    };

    nlohmann::json out = {
        { "kind", "coloring-report" },
        { "valid", r.valid },
        { "strength", r.strength },
        { "colors_used", r.colors_used },
        { "failing_edges", failing },
        { "trace", trace },
    };
    if ( coloring )
        out["coloring"] = coloring_to_json( *coloring );
    return out;
}

/// Shape is described by schema/report.schema.json ("oracle-result").
inline nlohmann::json oracle_to_json( const OracleResult& r, std::size_t max_colors )
{
    return {
        { "kind", "oracle-result" },
        { "strength", r.strength },
        { "max_colors", max_colors },
        { "min_colors", r.min_colors ? nlohmann::json( *r.min_colors ) : nlohmann::json() },
        { "witness", r.witness ? coloring_to_json( *r.witness ) : nlohmann::json() },
        { "explored", r.explored },
        { "budget_exhausted", r.budget_exhausted },
    };
}

} // namespace hypercolor
