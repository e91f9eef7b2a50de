// Copyright 2026 The pastctl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pctl/cli.hpp>

#include <pctl/fuzz.hpp>
#include <pctl/io.hpp>

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

namespace pctl::cli
{

namespace
{

const std::map<std::string, std::string> presets{
    {"backup-made", "EP b"},
    {"always-functional", "AH f"},
    {"backup-since-functional", "(EP b) S (AH f)"},
};

EventStructure load_structure( const std::string& path )
{
  json j;
  try
  {
    j = json::parse( read_file( path ) );
  }
  catch ( const json::parse_error& e )
  {
    throw FormatError( path + ": " + e.what() );
  }
  auto es = event_structure_from_json( j );
  require_valid( es );
  return es;
}

ScenarioConfig load_config( const std::string& path )
{
  json j;
  try
  {
    j = json::parse( read_file( path ) );
  }
  catch ( const json::parse_error& e )
  {
    throw FormatError( path + ": " + e.what() );
  }
  return scenario_config_from_json( j );
}

void emit( const std::string& path, const std::string& content, std::ostream& out )
{
  if ( path.empty() || path == "-" )
  {
    out << content;
  }
  else
  {
    write_file( path, content );
  }
}

/// Runs `body`, mapping input errors to status 2.
template <class Body>
int guarded( Streams io, Body&& body )
{
  try
  {
    return body();
  }
  catch ( const ParseError& e )
  {
    io.err << "error: " << e.what() << '\n';
  }
  catch ( const FormulaError& e )
  {
    io.err << "error: " << e.what() << '\n';
  }
  catch ( const EventError& e )
  {
    io.err << "error: " << e.what() << '\n';
  }
  catch ( const ConfigError& e )
  {
    io.err << "error: invalid config: " << e.what() << '\n';
  }
  catch ( const FormatError& e )
  {
    io.err << "error: " << e.what() << '\n';
  }
  catch ( const MonitorError& e )
  {
    io.err << "error: " << e.what() << '\n';
  }
  catch ( const json::exception& e )
  {
    io.err << "error: " << e.what() << '\n';
  }
  return UsageError;
}

std::string dot_escape( const std::string& s )
{
  std::string out;
  for ( const char c : s )
  {
    if ( c == '"' || c == '\\' )
    {
      out += '\\';
    }
    out += c;
  }
  return out;
}

std::string dot_style( bool v )
{
  return std::string( "color=\"" ) + ( v ? "green" : "red" ) + "\", style=\"solid\"";
}

std::string dot_style( TruthValue6 v )
{
  const char* colour = to_bool( v ) ? "green" : "red";
  const char* border = is_global_final( v )                                              ? "bold"
                       : ( v == TruthValue6::TrueDevice || v == TruthValue6::FalseDevice ) ? "solid"
                                                                                         : "dashed";
  return std::string( "color=\"" ) + colour + "\", style=\"" + border + "\"";
}

template <class V>
bool first_mismatch( const char* what, const VerdictMap<V>& expected, const VerdictMap<V>& actual, Streams io )
{
  for ( const auto& [id, v] : expected.values )
  {
    const auto it = actual.values.find( id );
    if ( it == actual.values.end() || it->second != v )
    {
      io.out << "MISMATCH " << what << " at event " << id << ": expected " << verdict_token( v ) << ", got "
             << ( it == actual.values.end() ? std::string( "nothing" ) : verdict_token( it->second ) ) << '\n';
      return true;
    }
  }
  return false;
}

} // namespace

std::string resolve_preset( const std::string& formula_or_alias )
{
  const auto it = presets.find( formula_or_alias );
  return it == presets.end() ? formula_or_alias : it->second;
}

template <class V>
std::string export_dot( const EventStructure& es, const VerdictMap<V>& verdicts )
{
  for ( const auto& e : es.events() )
  {
    if ( verdicts.values.count( e.id ) == 0 )
    {
      throw FormatError( "export_dot: no verdict for event " + e.id );
    }
  }
  if ( es.size() == 0 )
  {
    return "digraph events {\n}\n";
  }
  const auto order = topological_order( es );
  std::ostringstream out;
  out << "digraph events {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=box];\n";
  for ( const auto& id : order )
  {
    const V v = verdicts.at( id );
    out << "  \"" << dot_escape( id ) << "\" [label=\"" << dot_escape( id + ":" + verdict_token( v ) ) << "\", "
        << dot_style( v ) << "];\n";
  }
  for ( const auto& id : order )
  {
    for ( const auto& edge : es.at( id ).preds )
    {
      out << "  \"" << dot_escape( edge.event ) << "\" -> \"" << dot_escape( id ) << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

template std::string export_dot( const EventStructure&, const VerdictMap<bool>& );
template std::string export_dot( const EventStructure&, const VerdictMap<TruthValue6>& );

int cmd_scenario( const std::string& config_path, std::uint64_t seed, const std::string& out_path, Streams io )
{
  return guarded( io, [&] {
    const auto es = generate( load_config( config_path ), seed );
    emit( out_path, to_json( es ).dump( 2 ) + "\n", io.out );
    return Ok;
  } );
}

namespace
{

template <class V>
int run_mode( const RunOptions& opts, const EventStructure& es, const CoreFormula& core, Streams io )
{
  const auto program = compile( core, mode_of<V> );
  RunState<V> state;
  advance( program, es, state );
  const auto m = verdicts( program, state );
  if ( opts.format == "json" )
  {
    emit( opts.out_path, verdicts_to_json( es, m ).dump( 2 ) + "\n", io.out );
  }
  else
  {
    emit( opts.out_path, verdicts_to_csv( es, m ), io.out );
  }
  if ( !opts.dot_path.empty() )
  {
    write_file( opts.dot_path, export_dot( es, m ) );
  }
  if ( !opts.trace_path.empty() )
  {
    write_file( opts.trace_path, trace_to_json( es, state ).dump( 2 ) + "\n" );
  }
  return Ok;
}

} // namespace

int cmd_run( const RunOptions& opts, Streams io )
{
  return guarded( io, [&] {
    if ( opts.format != "csv" && opts.format != "json" )
    {
      throw FormatError( "unknown output format '" + opts.format + "' (csv or json)" );
    }
    const auto core = expand( parse( resolve_preset( opts.formula ) ) );
    const auto es = load_structure( opts.events_path );
    return opts.mode == Mode::TwoValued ? run_mode<bool>( opts, es, core, io )
                                        : run_mode<TruthValue6>( opts, es, core, io );
  } );
}

int cmd_compile( const std::string& formula, Mode mode, const std::string& emit_as, Streams io )
{
  return guarded( io, [&] {
    const auto program = compile( expand( parse( resolve_preset( formula ) ) ), mode );
    if ( emit_as == "json" )
    {
      io.out << to_json( program ).dump( 2 ) << '\n';
    }
    else if ( emit_as == "text" )
    {
      io.out << "formula: " << render( program.formula.formula() ) << '\n';
      io.out << "mode: " << mode_name( program.mode ) << '\n';
      for ( std::size_t i = 0; i < program.nodes.size(); ++i )
      {
        const auto& n = program.nodes[i];
        io.out << "  " << i << ": " << node_kind_name( n.kind );
        if ( n.kind == NodeKind::Const )
        {
          io.out << ' ' << ( n.value ? "true" : "false" );
        }
        else if ( n.kind == NodeKind::Atom )
        {
          io.out << ' ' << n.atom;
        }
        for ( const auto c : n.children )
        {
          io.out << ' ' << c;
        }
        io.out << ( i == program.root ? "  (root)" : "" ) << '\n';
      }
      io.out << "payload: " << payload_size( program ) << " value(s)\n";
    }
    else
    {
      throw FormatError( "unknown emit format '" + emit_as + "' (json or text)" );
    }
    return Ok;
  } );
}

int cmd_check( const std::string& formula, const std::string& events_path, Streams io, const FaultInjector& inject )
{
  return guarded( io, [&] {
    const auto text = resolve_preset( formula );
    const auto core = expand( parse( text ) );
    const auto es = load_structure( events_path );

    const auto o2 = eval2( es, core );
    const auto o6 = eval6( es, core );
    auto m2 = run<bool>( compile( core, Mode::TwoValued ), es );
    auto m6 = run<TruthValue6>( compile( core, Mode::SixValued ), es );
    if ( inject )
    {
      inject( m2, m6 );
    }

    for ( const auto& d : declarative_divergences( es, core ) )
    {
      io.out << "warning: divergence at " << d.event << " in " << render( d.subformula ) << ": rule "
             << token( d.rule_value ) << ", translation " << token( d.translation_value ) << '\n';
    }

    bool failed = first_mismatch( "monitor/oracle (two-valued)", o2, m2, io ) ||
                  first_mismatch( "monitor/oracle (six-valued)", o6, m6, io ) ||
                  first_mismatch( "collapse coherence (oracle)", o2, collapse( o6 ), io ) ||
                  first_mismatch( "collapse coherence (monitor)", m2, collapse( m6 ), io );
    if ( !failed && es.size() <= bruteforce_event_limit )
    {
      failed = first_mismatch( "brute-force agreement", eval2_bruteforce( es, core ), o2, io );
    }
    if ( failed )
    {
      return CheckFailed;
    }
    io.out << "ok: " << text << " on " << es.size() << " events, all checks passed\n";
    return Ok;
  } );
}

int cmd_fuzz( const FuzzOptions& opts, Streams io )
{
  return guarded( io, [&] {
    if ( opts.max_events < 1 || opts.max_devices < 1 || opts.max_depth < 1 )
    {
      throw ConfigError( "fuzz bounds must be positive" );
    }
    fuzz::Bounds bounds;
    bounds.max_events = opts.max_events;
    bounds.max_devices = opts.max_devices;
    bounds.max_depth = opts.max_depth;
    const auto start = std::chrono::steady_clock::now();
    const auto report = fuzz::run_campaign( opts.iterations, opts.seed, bounds );
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    for ( const auto& [seed, v] : report.violations )
    {
      io.out << "VIOLATION seed " << seed << ": " << fuzz::describe( v ) << '\n';
    }
    io.out << "fuzz: " << report.iterations << " iterations, " << report.checks << " checks, "
           << report.violations.size() << " violations, " << elapsed.count() << " s\n";
    if ( !report.violations.empty() )
    {
      io.out << "replay: pctl fuzz --iterations 1 --seed " << report.violations.front().first << " --max-events "
             << opts.max_events << " --max-devices " << opts.max_devices << " --max-depth " << opts.max_depth << '\n';
      return CheckFailed;
    }
    return Ok;
  } );
}

int cmd_extend( const std::string& events_path, const std::string& config_path, std::uint64_t seed, int rounds,
                const std::string& out_path, Streams io )
{
  return guarded( io, [&] {
    const auto base = load_structure( events_path );
    const auto ext = extend( base, load_config( config_path ), seed, rounds );
    emit( out_path, to_json( ext ).dump( 2 ) + "\n", io.out );
    return Ok;
  } );
}

} // namespace pctl::cli
