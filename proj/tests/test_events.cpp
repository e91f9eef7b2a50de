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

#include <pctl/events.hpp>
#include <pctl/fuzz.hpp>
#include <pctl/io.hpp>

#include <doctest.h>

#include <algorithm>

using namespace pctl;

namespace
{

EventStructure load( const std::string& name )
{
  return event_structure_from_json( json::parse( read_file( std::string( PCTL_TEST_DATA ) + "/" + name ) ) );
}

ScenarioConfig load_config( const std::string& name )
{
  return scenario_config_from_json( json::parse( read_file( std::string( PCTL_TEST_DATA ) + "/" + name ) ) );
}

Event ev( EventId id, DeviceId d, int seq, std::vector<Edge> preds, bool q = false )
{
  return {std::move( id ), std::move( d ), seq, std::move( preds ), {{"q", q}}};
}

bool has_issue( const EventStructure& es, IssueKind k )
{
  const auto issues = validate( es );
  return std::any_of( issues.begin(), issues.end(), [&]( const Issue& i ) { return i.kind == k; } );
}

} // namespace

TEST_CASE( "validation rejects broken structures" )
{
  SUBCASE( "cycle" )
  {
    const EventStructure es( {"A", "B"}, {"q"},
                             {ev( "A1", "A", 1, {{"B", "B1"}} ), ev( "B1", "B", 1, {{"A", "A1"}} )} );
    CHECK( has_issue( es, IssueKind::Cycle ) );
    CHECK_THROWS_WITH_AS( require_valid( es ), doctest::Contains( "cycle" ), EventError );
  }
  SUBCASE( "missing self edge" )
  {
    const EventStructure es( {"A"}, {"q"}, {ev( "A1", "A", 1, {} ), ev( "A2", "A", 2, {} )} );
    CHECK( has_issue( es, IssueKind::BrokenChain ) );
  }
  SUBCASE( "gap in the device chain" )
  {
    const EventStructure es( {"A"}, {"q"}, {ev( "A1", "A", 1, {} ), ev( "A3", "A", 3, {{"A", "A1"}} )} );
    CHECK( has_issue( es, IssueKind::BrokenChain ) );
  }
  SUBCASE( "sender does not own the event" )
  {
    const EventStructure es( {"A", "B"}, {"q"},
                             {ev( "A1", "A", 1, {} ), ev( "B1", "B", 1, {} ), ev( "B2", "B", 2, {{"A", "B1"}} )} );
    CHECK( has_issue( es, IssueKind::SenderMismatch ) );
  }
  SUBCASE( "duplicates, unknowns, partial observations" )
  {
    Event partial = ev( "A2", "A", 2, {{"A", "A1"}, {"B", "B9"}} );
    partial.obs.clear();
    const EventStructure es( {"A"}, {"q"}, {ev( "A1", "A", 1, {} ), ev( "A1", "A", 1, {} ), partial} );
    CHECK( has_issue( es, IssueKind::DuplicateId ) );
    CHECK( has_issue( es, IssueKind::UnknownEvent ) );
    CHECK( has_issue( es, IssueKind::PartialObs ) );
  }
  SUBCASE( "the empty structure is valid" )
  {
    CHECK( validate( EventStructure{} ).empty() );
    CHECK( topological_order( EventStructure{} ).empty() );
  }
}

TEST_CASE( "BK fixture: order, causal past, device chains" )
{
  const auto bk = load( "bk.json" );
  CHECK( validate( bk ).empty() );
  CHECK( bk.size() == 8 );
  CHECK( topological_order( bk ) == std::vector<EventId>{"A1", "B1", "A2", "B2", "A3", "B3", "A4", "B4"} );
  CHECK( causal_past( bk, "A3" ) == std::vector<EventId>{"A1", "A2", "B1", "B2"} );
  CHECK( causal_past( bk, "A1" ).empty() );
  CHECK( device_predecessor( bk, "A3" ) == EventId( "A2" ) );
  CHECK_FALSE( device_predecessor( bk, "B1" ) );
  CHECK_THROWS_AS( device_predecessor( bk, "Z9" ), EventError );
  CHECK( bk.at( "B2" ).pred_from( "A" )->event == "A1" );
  CHECK( bk.at( "B1" ).pred_from( "A" ) == nullptr );

  const CausalOrder causal( bk );
  CHECK( causal.before( bk.index_of( "A1" ), bk.index_of( "B4" ) ) );
  CHECK_FALSE( causal.before( bk.index_of( "A2" ), bk.index_of( "B2" ) ) );
  CHECK_FALSE( causal.before( bk.index_of( "A3" ), bk.index_of( "A3" ) ) );
}

TEST_CASE( "scenario generation" )
{
  SUBCASE( "the BK config reproduces the fixture" )
  {
    CHECK( generate( load_config( "bk_config.json" ), 7 ) == load( "bk.json" ) );
    CHECK( generate( load_config( "bk2_config.json" ), 7 ) == load( "bk2.json" ) );
  }
  SUBCASE( "churn" )
  {
    const auto es = generate( load_config( "churn_config.json" ), 3 );
    CHECK( validate( es ).empty() );
    // C is alive in rounds 2..4 only; ids count its own rounds
    CHECK( std::count_if( es.events().begin(), es.events().end(),
                          []( const Event& e ) { return e.device == "C"; } ) == 3 );
    CHECK( es.at( "C1" ).pred_from( "C" ) == nullptr );
    CHECK_FALSE( es.contains( "C4" ) );
  }
  SUBCASE( "determinism" )
  {
    const auto cfg = load_config( "churn_config.json" );
    CHECK( generate( cfg, 11 ) == generate( cfg, 11 ) );
    CHECK( to_json( generate( cfg, 11 ) ).dump() == to_json( generate( cfg, 11 ) ).dump() );
  }
  SUBCASE( "config errors" )
  {
    auto cfg = load_config( "bk_config.json" );
    cfg.rounds = 0;
    CHECK_THROWS_AS( generate( cfg, 1 ), ConfigError );
    cfg = load_config( "bk_config.json" );
    cfg.devices = {"A", "A"};
    CHECK_THROWS_AS( generate( cfg, 1 ), ConfigError );
    cfg = load_config( "bk_config.json" );
    cfg.drop_prob = 1.5;
    CHECK_THROWS_AS( generate( cfg, 1 ), ConfigError );
    cfg = load_config( "bk_config.json" );
    cfg.churn["A"] = {3, 2};
    CHECK_THROWS_AS( generate( cfg, 1 ), ConfigError );
  }
  SUBCASE( "random configs always yield valid structures" )
  {
    const fuzz::Bounds bounds;
    for ( std::uint64_t s = 0; s < 500; ++s )
    {
      const auto es = fuzz::random_structure( s, bounds );
      INFO( "seed " << s );
      CHECK( validate( es ).empty() );
      CHECK( es.size() <= static_cast<std::size_t>( bounds.max_events ) );
    }
  }
  CHECK( ScenarioConfig::device_names( 28 ).back() == "AB" );
}

TEST_CASE( "extensions" )
{
  const auto bk = load( "bk.json" );
  const auto cfg = load_config( "bk_config.json" );
  CHECK( extend( bk, cfg, 5, 0 ) == bk );
  const auto ext = extend( bk, cfg, 5, 2 );
  CHECK( validate( ext ).empty() );
  CHECK( ext.size() == 12 );
  CHECK( ext.at( "A5" ).pred_from( "B" )->event == "B4" );
  CHECK( is_extension( bk, ext ) );
  CHECK( is_extension( bk, bk ) );
  CHECK_FALSE( is_extension( ext, bk ) );

  const auto further = extend( ext, cfg, 6, 1 );
  CHECK( is_extension( ext, further ) );
  CHECK( is_extension( bk, further ) );

  // an added edge into an old event is not an extension
  auto events = ext.events();
  for ( auto& e : events )
  {
    if ( e.id == "B3" )
    {
      e.preds.push_back( {"C", "C1"} );
    }
  }
  events.push_back( {"C1", "C", 1, {}, {{"b", false}, {"f", true}}} );
  auto devices = ext.devices();
  devices.push_back( "C" );
  CHECK_FALSE( is_extension( bk, EventStructure( devices, ext.atoms(), events ) ) );

  auto missing = cfg;
  missing.atom_models.pop_back();
  CHECK_THROWS_AS( extend( bk, missing, 1, 1 ), ConfigError );
}

TEST_CASE( "topological order respects causality on random structures" )
{
  const fuzz::Bounds bounds;
  for ( std::uint64_t s = 0; s < 100; ++s )
  {
    const auto it = fuzz::make_iteration( s, bounds );
    for ( const auto* es : {&it.structure, &it.extension} )
    {
      const auto order = topological_order( *es );
      REQUIRE( order.size() == es->size() );
      std::map<EventId, std::size_t> pos;
      for ( std::size_t i = 0; i < order.size(); ++i )
      {
        pos[order[i]] = i;
      }
      for ( const auto& e : es->events() )
      {
        for ( const auto& p : causal_past( *es, e.id ) )
        {
          CHECK( pos[p] < pos[e.id] );
        }
      }
    }
    CHECK( is_extension( it.structure, it.extension ) );
  }
}

TEST_CASE( "json round trip" )
{
  const auto es = generate( load_config( "churn_config.json" ), 9 );
  CHECK( event_structure_from_json( to_json( es ) ) == es );
  const auto cfg = load_config( "churn_config.json" );
  CHECK( scenario_config_from_json( to_json( cfg ) ) == cfg );
  CHECK_THROWS_AS( event_structure_from_json( json::parse( R"({"devices":[]})" ) ), FormatError );
}
