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

#include <pctl/fuzz.hpp>

#include <pctl/io.hpp>
#include <pctl/monitor.hpp>
#include <pctl/oracle.hpp>

#include <algorithm>
#include <random>

namespace pctl::fuzz
{

namespace
{

class Draw
{
public:
  explicit Draw( std::uint64_t seed ) : engine_( seed ) {}

  int between( int lo, int hi )
  {
    return lo + static_cast<int>( engine_() % static_cast<std::uint64_t>( hi - lo + 1 ) );
  }
  double uniform() { return static_cast<double>( engine_() >> 11 ) * 0x1.0p-53; }
  bool chance( double p ) { return uniform() < p; }

private:
  std::mt19937_64 engine_;
};

std::vector<std::pair<std::string, AtomModel>> random_models( Draw& draw, const std::vector<std::string>& atoms )
{
  std::vector<std::pair<std::string, AtomModel>> models;
  for ( const auto& a : atoms )
  {
    if ( draw.chance( 0.15 ) )
    {
      models.emplace_back( a, AtomModel::constant( draw.chance( 0.5 ) ) );
    }
    else
    {
      models.emplace_back( a, AtomModel::bernoulli( 0.15 + 0.7 * draw.uniform() ) );
    }
  }
  return models;
}

void random_links( Draw& draw, ScenarioConfig& cfg )
{
  switch ( draw.between( 0, 2 ) )
  {
  case 0:
    cfg.connectivity = Connectivity::Complete;
    break;
  case 1:
    cfg.connectivity = Connectivity::Random;
    cfg.link_probability = 0.2 + 0.7 * draw.uniform();
    break;
  default:
    cfg.connectivity = Connectivity::Chain;
    break;
  }
  cfg.drop_prob = draw.chance( 0.5 ) ? 0.0 : 0.5 * draw.uniform();
}

// splitmix64 finalizer, to decorrelate the seeds of one iteration
std::uint64_t mix( std::uint64_t seed, std::uint64_t salt )
{
  std::uint64_t z = seed + salt * 0x9E3779B97F4A7C15ull;
  z = ( z ^ ( z >> 30 ) ) * 0xBF58476D1CE4E5B9ull;
  z = ( z ^ ( z >> 27 ) ) * 0x94D049BB133111EBull;
  return z ^ ( z >> 31 );
}

template <class V>
void compare( const char* check, const CoreFormula& f, const VerdictMap<V>& expected, const VerdictMap<V>& actual,
              std::vector<Violation>& out )
{
  for ( const auto& [id, v] : expected.values )
  {
    const auto it = actual.values.find( id );
    if ( it == actual.values.end() || it->second != v )
    {
      const std::string got = it == actual.values.end() ? "missing" : verdict_token( it->second );
      out.push_back( {check, render( f.formula() ), id, "expected " + verdict_token( v ) + ", got " + got} );
      return;
    }
  }
  if ( actual.values.size() != expected.values.size() )
  {
    out.push_back( {check, render( f.formula() ), {}, "verdict maps cover different events"} );
  }
}

} // namespace

ScenarioConfig random_config( std::uint64_t seed, const Bounds& bounds )
{
  Draw draw( seed );
  ScenarioConfig cfg;
  const int devices = draw.between( 1, std::max( 1, std::min( bounds.max_devices, bounds.max_events ) ) );
  cfg.devices = ScenarioConfig::device_names( devices );
  cfg.rounds = draw.between( 1, std::max( 1, bounds.max_events / devices ) );
  random_links( draw, cfg );
  for ( const auto& d : cfg.devices )
  {
    if ( draw.chance( 0.25 ) )
    {
      const int join = draw.between( 1, cfg.rounds );
      cfg.churn[d] = {join, draw.between( join, cfg.rounds )};
    }
  }
  cfg.atom_models = random_models( draw, bounds.atoms );
  return cfg;
}

EventStructure random_structure( std::uint64_t seed, const Bounds& bounds )
{
  return generate( random_config( seed, bounds ), mix( seed, 1 ) );
}

ScenarioConfig random_extension_config( std::uint64_t seed, const EventStructure& base )
{
  Draw draw( seed );
  ScenarioConfig cfg;
  cfg.devices = base.devices();
  if ( draw.chance( 0.3 ) )
  {
    // a newcomer, named past the existing devices
    auto names = ScenarioConfig::device_names( static_cast<int>( cfg.devices.size() ) + 8 );
    for ( const auto& n : names )
    {
      if ( std::find( cfg.devices.begin(), cfg.devices.end(), n ) == cfg.devices.end() )
      {
        cfg.devices.push_back( n );
        break;
      }
    }
  }
  cfg.rounds = 1;
  random_links( draw, cfg );
  cfg.atom_models = random_models( draw, base.atoms() );
  return cfg;
}

std::string describe( const Violation& v )
{
  std::string s = v.check + ": formula " + v.formula;
  if ( !v.event.empty() )
  {
    s += " at event " + v.event;
  }
  return s + ": " + v.detail;
}

std::vector<Violation> check_equivalence( const EventStructure& es, const CoreFormula& f )
{
  std::vector<Violation> out;
  const auto o2 = eval2( es, f );
  const auto o6 = eval6( es, f );
  const auto m2 = run<bool>( compile( f, Mode::TwoValued ), es );
  const auto m6 = run<TruthValue6>( compile( f, Mode::SixValued ), es );
  compare( "monitor/oracle (two-valued)", f, o2, m2, out );
  compare( "monitor/oracle (six-valued)", f, o6, m6, out );
  compare( "collapse coherence (oracle)", f, o2, collapse( o6 ), out );
  compare( "collapse coherence (monitor)", f, m2, collapse( m6 ), out );
  return out;
}

std::vector<Violation> check_bruteforce( const EventStructure& es, const CoreFormula& f )
{
  std::vector<Violation> out;
  compare( "brute-force agreement", f, eval2_bruteforce( es, f ), eval2( es, f ), out );
  return out;
}

std::vector<Violation> check_prediction( const EventStructure& base, const EventStructure& ext, const CoreFormula& f )
{
  std::vector<Violation> out;
  const auto text = render( f.formula() );
  const auto before = eval6( base, f );
  const auto after6 = eval6( ext, f );
  const auto after2 = eval2( ext, f );
  const CausalOrder causal( ext );

  for ( const auto& e : base.events() )
  {
    const auto v = before.at( e.id );
    if ( after6.at( e.id ) != v )
    {
      out.push_back( {"prediction: stable past", text, e.id,
                      "was " + verdict_token( v ) + ", became " + verdict_token( after6.at( e.id ) )} );
    }
    const auto i = ext.index_of( e.id );
    for ( std::size_t j = 0; j < ext.size(); ++j )
    {
      const auto& later = ext.events()[j];
      const bool successor = j == i || causal.before( i, j );
      const bool same_device = later.device == e.device && later.seq >= e.seq;
      const auto w6 = after6.at( later.id );
      const bool w2 = after2.at( later.id );
      std::string failed;
      if ( v == TruthValue6::True && successor && !( w6 == TruthValue6::True && w2 ) )
      {
        failed = "T";
      }
      else if ( v == TruthValue6::False && successor && !( w6 == TruthValue6::False && !w2 ) )
      {
        failed = "F";
      }
      else if ( v == TruthValue6::TrueDevice && same_device && !( w6 >= TruthValue6::TrueDevice && w2 ) )
      {
        failed = "T-";
      }
      else if ( v == TruthValue6::FalseDevice && same_device && !( w6 <= TruthValue6::FalseDevice && !w2 ) )
      {
        failed = "F-";
      }
      if ( !failed.empty() )
      {
        out.push_back( {"prediction: " + failed + " persists", text, e.id,
                        "successor " + later.id + " has " + verdict_token( w6 ) + " / " + verdict_token( w2 )} );
      }
    }
  }
  return out;
}

std::vector<Violation> check_never_both( const EventStructure& es, const CoreFormula& f )
{
  const auto m = eval6( es, f );
  EventId top;
  EventId bottom;
  for ( const auto& [id, v] : m.values )
  {
    if ( v == TruthValue6::True && top.empty() )
    {
      top = id;
    }
    if ( v == TruthValue6::False && bottom.empty() )
    {
      bottom = id;
    }
  }
  if ( !top.empty() && !bottom.empty() )
  {
    return {{"never both T and F", render( f.formula() ), top, "T here, F at " + bottom}};
  }
  return {};
}

std::vector<Violation> check_online( const EventStructure& base, const EventStructure& ext, const CoreFormula& f )
{
  std::vector<Violation> out;
  const auto p2 = compile( f, Mode::TwoValued );
  const auto p6 = compile( f, Mode::SixValued );
  RunState<bool> s2;
  RunState<TruthValue6> s6;
  advance( p2, base, s2 );
  advance( p6, base, s6 );
  advance( p2, ext, s2 );
  advance( p6, ext, s6 );
  compare( "online continuation (two-valued)", f, run<bool>( p2, ext ), verdicts( p2, s2 ), out );
  compare( "online continuation (six-valued)", f, run<TruthValue6>( p6, ext ), verdicts( p6, s6 ), out );
  return out;
}

Iteration make_iteration( std::uint64_t seed, const Bounds& bounds )
{
  Iteration it;
  it.seed = seed;
  it.structure = random_structure( seed, bounds );
  it.formula = random_formula( mix( seed, 2 ), bounds.max_depth, bounds.atoms );
  it.core = expand( it.formula );
  Draw draw( mix( seed, 3 ) );
  it.extension = extend( it.structure, random_extension_config( mix( seed, 4 ), it.structure ), mix( seed, 5 ),
                         draw.between( 1, 3 ) );
  return it;
}

Report run_campaign( std::size_t iterations, std::uint64_t seed, const Bounds& bounds )
{
  Report report;
  for ( std::size_t k = 0; k < iterations; ++k )
  {
    const auto s = seed + k;
    const auto it = make_iteration( s, bounds );
    std::vector<Violation> found = check_equivalence( it.structure, it.core );
    report.checks += 4;
    if ( it.structure.size() <= bruteforce_event_limit )
    {
      auto more = check_bruteforce( it.structure, it.core );
      found.insert( found.end(), more.begin(), more.end() );
      ++report.checks;
    }
    for ( auto&& more : {check_prediction( it.structure, it.extension, it.core ),
                         check_online( it.structure, it.extension, it.core ),
                         check_never_both( it.extension, it.core )} )
    {
      found.insert( found.end(), more.begin(), more.end() );
    }
    report.checks += 3;
    ++report.iterations;
    for ( auto& v : found )
    {
      report.violations.emplace_back( s, std::move( v ) );
    }
  }
  return report;
}

} // namespace pctl::fuzz
