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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <pctl/fuzz.hpp>
#include <pctl/io.hpp>
#include <pctl/monitor.hpp>
#include <pctl/oracle.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

using namespace pctl;
using V = TruthValue6;
using Clock = std::chrono::steady_clock;

namespace
{

int failures = 0;
std::map<int, std::string> lines;

void report( int n, const char* what, bool ok, const std::string& detail )
{
  std::ostringstream line;
  line << ( ok ? "PASS" : "FAIL" ) << " criterion " << n << ": " << what << " (" << detail << ")";
  lines[n] = line.str();
  failures += !ok;
}

double seconds_since( Clock::time_point start )
{
  return std::chrono::duration<double>( Clock::now() - start ).count();
}

template <class M>
std::size_t mismatches( const M& a, const M& b )
{
  std::size_t n = a.values.size() == b.values.size() ? 0 : 1;
  for ( const auto& [id, v] : a.values )
  {
    const auto it = b.values.find( id );
    n += it == b.values.end() || it->second != v;
  }
  return n;
}

std::string data( const std::string& name ) { return std::string( PCTL_TEST_DATA ) + "/" + name; }

EventStructure load( const std::string& name )
{
  return event_structure_from_json( json::parse( read_file( data( name ) ) ) );
}

std::string fmt( double s )
{
  char buf[32];
  std::snprintf( buf, sizeof buf, "%.2f s", s );
  return buf;
}

// criteria 1, 2, 6 share the fuzz corpus
void corpus_criteria()
{
  const fuzz::Bounds bounds;
  const std::size_t iterations = 1000;
  std::size_t equivalence = 0;
  std::size_t coherence = 0;
  std::size_t complexity = 0;
  std::size_t events = 0;
  const auto start = Clock::now();
  for ( std::uint64_t s = 1; s <= iterations; ++s )
  {
    const auto it = fuzz::make_iteration( s, bounds );
    const auto& es = it.structure;
    events += es.size();
    const auto p2 = compile( it.core, Mode::TwoValued );
    const auto p6 = compile( it.core, Mode::SixValued );
    const auto o2 = eval2( es, it.core );
    const auto o6 = eval6( es, it.core );
    const auto m2 = run<bool>( p2, es );
    const auto m6 = run<V>( p6, es );
    equivalence += mismatches( o2, m2 ) + mismatches( o6, m6 );
    coherence += mismatches( o2, collapse( o6 ) ) + mismatches( m2, collapse( m6 ) );

    const auto& f = it.core.formula();
    for ( const auto* p : {&p2, &p6} )
    {
      complexity += p->nodes.size() > connective_count( f ) + leaf_count( f );
      complexity += payload_size( *p ) != temporal_count( f );
    }
  }
  const double elapsed = seconds_since( start );
  std::ostringstream d1;
  d1 << iterations << " iterations, " << events << " events, " << equivalence << " mismatches, " << fmt( elapsed );
  report( 1, "monitor/oracle equivalence, both modes", equivalence == 0 && elapsed < 60.0, d1.str() );
  report( 2, "collapse coherence of oracle and monitor", coherence == 0,
          std::to_string( coherence ) + " mismatches over the same corpus" );
  report( 6, "node count and payload proportional to connectives", complexity == 0,
          std::to_string( iterations ) + " formulas, " + std::to_string( complexity ) + " violations" );
}

void bruteforce_criterion()
{
  fuzz::Bounds bounds;
  bounds.max_events = 10;
  std::vector<CoreFormula> templates;
  for ( const char* t : {"p S q", "p AS q", "p ES q", "Y p", "EY p"} )
  {
    templates.push_back( expand( parse( t ) ) );
  }
  std::size_t bad = 0;
  std::size_t compared = 0;
  for ( std::uint64_t s = 1; s <= 200; ++s )
  {
    const auto es = fuzz::random_structure( s, bounds );
    auto formulas = templates;
    formulas.push_back( expand( random_formula( 2 * s, 4, bounds.atoms ) ) );
    formulas.push_back( expand( random_formula( 2 * s + 1, 4, bounds.atoms ) ) );
    for ( const auto& f : formulas )
    {
      bad += es.size() > 10 || mismatches( eval2_bruteforce( es, f ), eval2( es, f ) ) != 0;
      ++compared;
    }
  }
  report( 3, "path enumeration agrees with the recursive oracle", bad == 0,
          "200 structures, " + std::to_string( compared ) + " formula runs, " + std::to_string( bad ) +
              " disagreements" );
}

void prediction_criterion()
{
  const fuzz::Bounds bounds;
  std::size_t violations = 0;
  std::string first;
  for ( std::uint64_t s = 1; s <= 300; ++s )
  {
    const auto it = fuzz::make_iteration( 100000 + s, bounds );
    const auto found = fuzz::check_prediction( it.structure, it.extension, it.core );
    violations += found.size();
    if ( !found.empty() && first.empty() )
    {
      first = "; first: " + fuzz::describe( found.front() );
    }
  }
  report( 4, "final verdicts persist into extensions", violations == 0,
          "300 triples, " + std::to_string( violations ) + " violations" + first );
}

void timeline_criterion()
{
  const auto golden = json::parse( read_file( data( "golden_traces.json" ) ) );
  std::size_t bad = 0;
  std::size_t traces = 0;
  for ( const auto& t : golden.at( "traces" ) )
  {
    const auto es = load( t.at( "structure" ) );
    const auto f = expand( parse( t.at( "formula" ).get<std::string>() ) );
    const bool six = t.at( "mode" ) == "six";
    for ( const auto& [id, expected] : t.at( "verdicts" ).items() )
    {
      const std::string want = expected.get<std::string>();
      if ( six )
      {
        bad += verdict_token( eval6( es, f ).at( id ) ) != want;
        bad += verdict_token( run<V>( compile( f, Mode::SixValued ), es ).at( id ) ) != want;
      }
      else
      {
        bad += verdict_token( eval2( es, f ).at( id ) ) != want;
        bad += verdict_token( run<bool>( compile( f, Mode::TwoValued ), es ).at( id ) ) != want;
      }
    }
    ++traces;
  }

  // the shape of the timelines, independently of the frozen data
  const auto bk = load( "bk.json" );
  const auto bk2 = load( "bk2.json" );
  const auto ep = eval6( bk, expand( parse( "EP b" ) ) );
  const auto ah = eval6( bk, expand( parse( "AH f" ) ) );
  const auto since = expand( parse( "(EP b) S (AH f)" ) );
  const CausalOrder causal( bk );
  const auto witness = bk.index_of( "B2" );
  const auto failure = bk.index_of( "A3" );
  bool shape = ep.at( "B2" ) == V::TrueNow && ah.at( "A3" ) == V::FalseNow;
  for ( std::size_t i = 0; i < bk.size(); ++i )
  {
    const auto& id = bk.events()[i].id;
    if ( causal.before( witness, i ) )
    {
      shape = shape && ep.at( id ) == V::True;
    }
    else if ( i != witness )
    {
      shape = shape && ep.at( id ) == V::FalseNow;
    }
    if ( causal.before( failure, i ) )
    {
      shape = shape && ah.at( id ) == V::False;
    }
    else if ( i != failure )
    {
      shape = shape && ah.at( id ) == V::TrueNow;
    }
  }
  shape = shape && eval6( bk, since ).at( "A4" ) == V::TrueDevice && eval6( bk2, since ).at( "A4" ) == V::FalseDevice;
  report( 5, "BK and BK2 timelines match the golden traces", bad == 0 && shape,
          std::to_string( traces ) + " traces, " + std::to_string( bad ) + " differing verdicts, timeline shape " +
              ( shape ? "as described" : "differs" ) );
}

void lattice_criterion()
{
  const auto start = Clock::now();
  std::size_t bad = 0;
  std::size_t checked = 0;
  for ( const auto a : all_truth_values )
  {
    bad += neg( neg( a ) ) != a;
    bad += to_bool( neg( a ) ) != !to_bool( a );
    ++checked;
    for ( const auto b : all_truth_values )
    {
      bad += neg( conj( a, b ) ) != disj( neg( a ), neg( b ) );
      bad += neg( disj( a, b ) ) != conj( neg( a ), neg( b ) );
      bad += conj( a, disj( a, b ) ) != a;
      bad += disj( a, conj( a, b ) ) != a;
      bad += to_bool( conj( a, b ) ) != ( to_bool( a ) && to_bool( b ) );
      bad += to_bool( disj( a, b ) ) != ( to_bool( a ) || to_bool( b ) );
      ++checked;
      for ( const auto c : all_truth_values )
      {
        bad += conj( a, conj( b, c ) ) != conj( conj( a, b ), c );
        bad += disj( a, disj( b, c ) ) != disj( disj( a, b ), c );
        bad += conj( a, disj( b, c ) ) != disj( conj( a, b ), conj( a, c ) );
        bad += disj( a, conj( b, c ) ) != conj( disj( a, b ), disj( a, c ) );
        ++checked;
      }
    }
  }
  const double elapsed = seconds_since( start );
  report( 7, "lattice laws on all value tuples", bad == 0 && elapsed < 1.0,
          std::to_string( checked ) + " tuples, " + std::to_string( bad ) + " failures, " + fmt( elapsed ) );
}

} // namespace

int main()
{
  try
  {
    corpus_criteria();
    bruteforce_criterion();
    prediction_criterion();
    timeline_criterion();
    lattice_criterion();
  }
  catch ( const std::exception& e )
  {
    std::cout << "FAIL acceptance run aborted: " << e.what() << '\n';
    return 1;
  }
  for ( const auto& [n, line] : lines )
  {
    std::cout << line << '\n';
  }
  return failures == 0 ? 0 : 1;
}
