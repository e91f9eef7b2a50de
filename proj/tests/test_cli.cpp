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
#include <pctl/io.hpp>

#include <doctest.h>

#include <filesystem>
#include <regex>
#include <sstream>

using namespace pctl;
using namespace pctl::cli;

namespace
{

std::string data( const std::string& name ) { return std::string( PCTL_TEST_DATA ) + "/" + name; }

std::string scratch( const std::string& name )
{
  const auto dir = std::filesystem::temp_directory_path() / "pctl_test_cli";
  std::filesystem::create_directories( dir );
  return ( dir / name ).string();
}

struct Captured
{
  std::ostringstream out;
  std::ostringstream err;
  Streams io() { return {out, err}; }
};

std::size_t count( const std::string& text, const std::string& needle )
{
  std::size_t n = 0;
  for ( auto pos = text.find( needle ); pos != std::string::npos; pos = text.find( needle, pos + 1 ) )
  {
    ++n;
  }
  return n;
}

} // namespace

TEST_CASE( "scenario" )
{
  Captured a;
  Captured b;
  CHECK( cmd_scenario( data( "churn_config.json" ), 42, "", a.io() ) == Ok );
  CHECK( cmd_scenario( data( "churn_config.json" ), 42, "", b.io() ) == Ok );
  CHECK( a.out.str() == b.out.str() );
  CHECK( event_structure_from_json( json::parse( a.out.str() ) ).size() > 0 );

  const auto path = scratch( "bk_generated.json" );
  Captured c;
  CHECK( cmd_scenario( data( "bk_config.json" ), 1, path, c.io() ) == Ok );
  CHECK( c.out.str().empty() );
  CHECK( event_structure_from_json( json::parse( read_file( path ) ) ) ==
         event_structure_from_json( json::parse( read_file( data( "bk.json" ) ) ) ) );

  auto j = json::parse( read_file( data( "bk_config.json" ) ) );
  j["rounds"] = 0;
  write_file( scratch( "bad_config.json" ), j.dump() );
  Captured d;
  CHECK( cmd_scenario( scratch( "bad_config.json" ), 1, "", d.io() ) == UsageError );
  CHECK( d.err.str().find( "rounds" ) != std::string::npos );
  Captured e;
  CHECK( cmd_scenario( data( "missing.json" ), 1, "", e.io() ) == UsageError );
}

TEST_CASE( "run: csv and json" )
{
  Captured c;
  RunOptions opts;
  opts.formula = "EP b";
  opts.events_path = data( "bk.json" );
  CHECK( cmd_run( opts, c.io() ) == Ok );
  CHECK( c.out.str() == "event,device,seq,verdict,rank\n"
                        "A1,A,1,F.,2\nB1,B,1,F.,2\nA2,A,2,F.,2\nB2,B,2,T.,3\n"
                        "A3,A,3,T,5\nB3,B,3,T,5\nA4,A,4,T,5\nB4,B,4,T,5\n" );

  Captured j;
  opts.formula = "always-functional";
  opts.format = "json";
  CHECK( cmd_run( opts, j.io() ) == Ok );
  const auto doc = json::parse( j.out.str() );
  CHECK( doc["mode"] == "six" );
  CHECK( doc["verdicts"].size() == 8 );
  CHECK( doc["verdicts"][4]["event"] == "A3" );
  CHECK( doc["verdicts"][4]["verdict"] == "F." );
  CHECK( doc["verdicts"][7]["verdict"] == "F" );

  Captured two;
  opts.format = "csv";
  opts.formula = "b";
  opts.mode = Mode::TwoValued;
  CHECK( cmd_run( opts, two.io() ) == Ok );
  CHECK( two.out.str().find( "B2,B,2,true,1\n" ) != std::string::npos );
  CHECK( count( two.out.str(), ",false,0\n" ) == 7 );

  Captured bad;
  opts.formula = "b &";
  CHECK( cmd_run( opts, bad.io() ) == UsageError );
  CHECK( bad.err.str().find( "offset 3" ) != std::string::npos );
  opts.formula = "b";
  opts.format = "xml";
  CHECK( cmd_run( opts, bad.io() ) == UsageError );
}

TEST_CASE( "run: dot and trace outputs" )
{
  RunOptions opts;
  opts.formula = "backup-since-functional";
  opts.events_path = data( "bk.json" );
  opts.dot_path = scratch( "bk.dot" );
  opts.trace_path = scratch( "bk_trace.json" );
  Captured c;
  REQUIRE( cmd_run( opts, c.io() ) == Ok );

  const auto dot = read_file( opts.dot_path );
  CHECK( dot.rfind( "digraph events {\n", 0 ) == 0 );
  CHECK( dot.substr( dot.size() - 2 ) == "}\n" );
  const std::regex node( R"re(^  "[A-Z]+[0-9]+" \[label="[A-Z]+[0-9]+:(T|F)(-|\.)?", color="(red|green)", style="(bold|solid|dashed)"\];$)re" );
  const std::regex edge( R"re(^  "[A-Z]+[0-9]+" -> "[A-Z]+[0-9]+";$)re" );
  std::istringstream lines( dot );
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for ( std::string line; std::getline( lines, line ); )
  {
    nodes += std::regex_match( line, node );
    edges += std::regex_match( line, edge );
  }
  CHECK( nodes == 8 );
  CHECK( edges == 12 );
  CHECK( dot.find( "\"A3\" [label=\"A3:T-\", color=\"green\", style=\"solid\"]" ) != std::string::npos );

  const auto trace = json::parse( read_file( opts.trace_path ) );
  REQUIRE( trace.size() == 8 );
  CHECK( trace[0]["event"] == "A1" );
  CHECK( trace[0]["inbox"].empty() );
  CHECK( trace[7]["payload"].size() == 3 );
  CHECK( trace[7]["verdict"] == "T-" );

  CHECK( export_dot( EventStructure{}, VerdictMap6{expand( parse( "true" ) ), {}} ) == "digraph events {\n}\n" );
  const auto bk = event_structure_from_json( json::parse( read_file( data( "bk.json" ) ) ) );
  CHECK_THROWS_AS( export_dot( bk, VerdictMap2{expand( parse( "true" ) ), {{"A1", true}}} ), FormatError );
}

TEST_CASE( "compile" )
{
  Captured j;
  CHECK( cmd_compile( "backup-since-functional", Mode::SixValued, "json", j.io() ) == Ok );
  const auto doc = json::parse( j.out.str() );
  CHECK( doc["payload_size"] == 3 );
  CHECK( doc["nodes"].size() == 9 );
  CHECK( doc["mode"] == "six" );

  Captured t;
  CHECK( cmd_compile( "Y q", Mode::TwoValued, "text", t.io() ) == Ok );
  CHECK( t.out.str().find( "payload: 1 value(s)" ) != std::string::npos );
  Captured bad;
  CHECK( cmd_compile( "Y q", Mode::TwoValued, "yaml", bad.io() ) == UsageError );
}

TEST_CASE( "check" )
{
  Captured bk;
  CHECK( cmd_check( "backup-since-functional", data( "bk.json" ), bk.io() ) == Ok );
  CHECK( bk.out.str().find( "ok: (EP b) S (AH f) on 8 events" ) != std::string::npos );

  Captured bk2;
  CHECK( cmd_check( "backup-since-functional", data( "bk2.json" ), bk2.io() ) == Ok );
  CHECK( count( bk2.out.str(), "warning: divergence at " ) == 2 );
  CHECK( bk2.out.str().find( "warning: divergence at B4" ) != std::string::npos );

  Captured broken;
  const auto flip = []( VerdictMap2&, VerdictMap6& m6 ) { m6.values.at( "A3" ) = TruthValue6::True; };
  CHECK( cmd_check( "backup-since-functional", data( "bk.json" ), broken.io(), flip ) == CheckFailed );
  CHECK( broken.out.str().find( "MISMATCH monitor/oracle (six-valued) at event A3" ) != std::string::npos );

  Captured two;
  const auto flip2 = []( VerdictMap2& m2, VerdictMap6& ) { m2.values.at( "B1" ) = !m2.values.at( "B1" ); };
  CHECK( cmd_check( "EP b", data( "bk.json" ), two.io(), flip2 ) == CheckFailed );
  CHECK( two.out.str().find( "at event B1" ) != std::string::npos );
}

TEST_CASE( "fuzz" )
{
  FuzzOptions opts;
  opts.iterations = 0;
  Captured none;
  CHECK( cmd_fuzz( opts, none.io() ) == Ok );
  CHECK( none.out.str().find( "fuzz: 0 iterations, 0 checks, 0 violations" ) == 0 );

  opts.iterations = 20;
  opts.seed = 99;
  Captured a;
  CHECK( cmd_fuzz( opts, a.io() ) == Ok );
  CHECK( a.out.str().find( "fuzz: 20 iterations" ) == 0 );

  opts.max_events = 0;
  Captured bad;
  CHECK( cmd_fuzz( opts, bad.io() ) == UsageError );
}

TEST_CASE( "extend" )
{
  Captured c;
  CHECK( cmd_extend( data( "bk.json" ), data( "bk_config.json" ), 3, 2, "", c.io() ) == Ok );
  const auto base = event_structure_from_json( json::parse( read_file( data( "bk.json" ) ) ) );
  const auto ext = event_structure_from_json( json::parse( c.out.str() ) );
  CHECK( ext.size() == 12 );
  CHECK( is_extension( base, ext ) );
}

TEST_CASE( "presets" )
{
  CHECK( resolve_preset( "backup-made" ) == "EP b" );
  CHECK( resolve_preset( "always-functional" ) == "AH f" );
  CHECK( resolve_preset( "p S q" ) == "p S q" );
}
