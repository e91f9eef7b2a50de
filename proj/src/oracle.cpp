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

#include <pctl/oracle.hpp>

#include <algorithm>
#include <functional>

namespace pctl
{

namespace
{

using T6 = TruthValue6;

/// Index view of a valid structure.
struct Frame
{
  explicit Frame( const EventStructure& es ) : es( es ), order( topological_indices( es ) )
  {
    const auto n = es.size();
    preds.resize( n );
    self.assign( n, -1 );
    for ( std::size_t i = 0; i < n; ++i )
    {
      const auto& ev = es.events()[i];
      for ( const auto& edge : ev.preds )
      {
        const auto p = es.index_of( edge.event );
        preds[i].push_back( p );
        if ( edge.sender == ev.device )
        {
          self[i] = static_cast<long>( p );
        }
      }
    }
  }

  bool first_round( std::size_t i ) const { return self[i] < 0; }

  const EventStructure& es;
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> preds;
  std::vector<long> self;
};

// ---------------------------------------------------------------------------
// two-valued recursion

std::vector<char> table2( const Frame& fr, const Formula& f )
{
  const auto n = fr.es.size();
  std::vector<char> out( n, 0 );
  switch ( f.op )
  {
  case Op::False:
    return out;
  case Op::True:
    out.assign( n, 1 );
    return out;
  case Op::Atom:
    for ( std::size_t i = 0; i < n; ++i )
    {
      out[i] = fr.es.events()[i].obs.at( f.name );
    }
    return out;
  default:
    break;
  }

  const auto a = table2( fr, f.lhs() );
  const auto b = f.args.size() > 1 ? table2( fr, f.rhs() ) : std::vector<char>{};
  for ( const auto i : fr.order )
  {
    const auto& ps = fr.preds[i];
    switch ( f.op )
    {
    case Op::Not:
      out[i] = !a[i];
      break;
    case Op::And:
      out[i] = a[i] && b[i];
      break;
    case Op::Or:
      out[i] = a[i] || b[i];
      break;
    case Op::Y:
      out[i] = fr.first_round( i ) ? 0 : a[fr.self[i]];
      break;
    case Op::EY:
      out[i] = std::any_of( ps.begin(), ps.end(), [&]( auto p ) { return a[p] != 0; } );
      break;
    case Op::S:
      out[i] = b[i] || ( a[i] && !fr.first_round( i ) && out[fr.self[i]] );
      break;
    case Op::AS:
    {
      // the first-round fold carries the default false for the device itself
      const bool all = !fr.first_round( i ) &&
                       std::all_of( ps.begin(), ps.end(), [&]( auto p ) { return out[p] != 0; } );
      out[i] = b[i] || ( a[i] && all );
      break;
    }
    case Op::ES:
      out[i] = b[i] || ( a[i] && std::any_of( ps.begin(), ps.end(), [&]( auto p ) { return out[p] != 0; } ) );
      break;
    default:
      throw FormulaError( "eval2: not a core connective: " + std::string( op_name( f.op ) ) );
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// six-valued recursion

std::vector<T6> table6( const Frame& fr, const Formula& f )
{
  const auto n = fr.es.size();
  switch ( f.op )
  {
  case Op::False:
    return std::vector<T6>( n, T6::False );
  case Op::True:
    return std::vector<T6>( n, T6::True );
  case Op::Atom:
  {
    std::vector<T6> out( n );
    for ( std::size_t i = 0; i < n; ++i )
    {
      out[i] = from_bool( fr.es.events()[i].obs.at( f.name ) );
    }
    return out;
  }
  default:
    break;
  }

  std::vector<T6> out( n, T6::FalseNow );
  const auto a = table6( fr, f.lhs() );
  const auto b = f.args.size() > 1 ? table6( fr, f.rhs() ) : std::vector<T6>{};
  const auto fold = [&]( std::size_t i, const std::vector<T6>& vals, auto combine ) {
    // first round: the construct default F. stands in for the device itself
    T6 acc = fr.first_round( i ) ? T6::FalseNow : vals[fr.preds[i].front()];
    for ( const auto p : fr.preds[i] )
    {
      acc = combine( acc, vals[p] );
    }
    return acc;
  };
  const auto max6 = []( T6 x, T6 y ) { return disj( x, y ); };
  const auto min6 = []( T6 x, T6 y ) { return conj( x, y ); };

  for ( const auto i : fr.order )
  {
    switch ( f.op )
    {
    case Op::Not:
      out[i] = neg( a[i] );
      break;
    case Op::And:
      out[i] = conj( a[i], b[i] );
      break;
    case Op::Or:
      out[i] = disj( a[i], b[i] );
      break;
    case Op::Y:
    {
      const T6 prev = fr.first_round( i ) ? T6::FalseNow : a[fr.self[i]];
      out[i] = prev >= T6::TrueNow ? disj( T6::TrueNow, conj( a[i], T6::TrueDevice ) )
                                   : disj( T6::FalseDevice, conj( a[i], T6::FalseNow ) );
      break;
    }
    case Op::EY:
      out[i] = fold( i, a, max6 ) >= T6::TrueNow ? disj( T6::TrueNow, a[i] ) : T6::FalseNow;
      break;
    case Op::S:
    {
      const T6 prev = fr.first_round( i ) ? T6::FalseNow : out[fr.self[i]];
      out[i] = disj( b[i], conj( a[i], prev >= T6::TrueNow ? T6::TrueDevice : T6::FalseDevice ) );
      break;
    }
    case Op::AS:
      out[i] = disj( b[i], conj( a[i], fold( i, out, min6 ) >= T6::TrueNow ? T6::TrueNow : T6::False ) );
      break;
    case Op::ES:
      out[i] = disj( b[i], conj( a[i], fold( i, out, max6 ) >= T6::TrueNow ? T6::True : T6::FalseNow ) );
      break;
    default:
      throw FormulaError( "eval6: not a core connective: " + std::string( op_name( f.op ) ) );
    }
  }
  return out;
}

template <class V, class Table>
VerdictMap<V> to_map( const EventStructure& es, const CoreFormula& f, const Table& t )
{
  VerdictMap<V> m{f, {}};
  for ( std::size_t i = 0; i < es.size(); ++i )
  {
    m.values.emplace( es.events()[i].id, static_cast<V>( t[i] ) );
  }
  return m;
}

// ---------------------------------------------------------------------------
// path enumeration

class PathOracle
{
public:
  explicit PathOracle( const EventStructure& es ) : es_( es ) {}

  std::vector<char> eval( const Formula& f ) const
  {
    const auto n = es_.size();
    std::vector<char> out( n, 0 );
    switch ( f.op )
    {
    case Op::False:
      return out;
    case Op::True:
      return std::vector<char>( n, 1 );
    case Op::Atom:
      for ( std::size_t i = 0; i < n; ++i )
      {
        out[i] = es_.events()[i].obs.at( f.name );
      }
      return out;
    default:
      break;
    }
    const auto a = eval( f.lhs() );
    const auto b = f.args.size() > 1 ? eval( f.rhs() ) : std::vector<char>{};
    for ( std::size_t i = 0; i < n; ++i )
    {
      switch ( f.op )
      {
      case Op::Not:
        out[i] = !a[i];
        break;
      case Op::And:
        out[i] = a[i] && b[i];
        break;
      case Op::Or:
        out[i] = a[i] || b[i];
        break;
      case Op::Y:
      {
        const auto prev = chain_before( i );
        out[i] = !prev.empty() && a[prev.back()];
        break;
      }
      case Op::EY:
      {
        const auto& preds = es_.events()[i].preds;
        out[i] = std::any_of( preds.begin(), preds.end(),
                              [&]( const Edge& e ) { return a[es_.index_of( e.event )] != 0; } );
        break;
      }
      case Op::S:
      {
        auto chain = chain_before( i );
        chain.push_back( i );
        out[i] = witnessed( chain, a, b );
        break;
      }
      case Op::AS:
      {
        bool all = true;
        for_each_path( i, [&]( const std::vector<std::size_t>& path ) {
          if ( es_.events()[path.front()].seq == 1 && !witnessed( path, a, b ) )
          {
            all = false;
          }
        } );
        out[i] = all;
        break;
      }
      case Op::ES:
      {
        bool any = false;
        for_each_path( i, [&]( const std::vector<std::size_t>& path ) { any = any || witnessed( path, a, b ); } );
        out[i] = any;
        break;
      }
      default:
        throw FormulaError( "eval2_bruteforce: not a core connective" );
      }
    }
    return out;
  }

private:
  /// Same-device events with smaller seq, in chain order.
  std::vector<std::size_t> chain_before( std::size_t i ) const
  {
    const auto& ev = es_.events()[i];
    std::vector<std::size_t> chain;
    for ( int seq = 1; seq < ev.seq; ++seq )
    {
      for ( std::size_t j = 0; j < es_.size(); ++j )
      {
        if ( es_.events()[j].device == ev.device && es_.events()[j].seq == seq )
        {
          chain.push_back( j );
        }
      }
    }
    return chain;
  }

  /// Some position carries f2 and every later position carries f1.
  static bool witnessed( const std::vector<std::size_t>& path, const std::vector<char>& f1,
                         const std::vector<char>& f2 )
  {
    for ( std::size_t k = path.size(); k-- > 0; )
    {
      if ( f2[path[k]] )
      {
        return true;
      }
      if ( !f1[path[k]] )
      {
        return false;
      }
    }
    return false;
  }

  /// Every message path ending at `target`, as a sequence from its first event.
  void for_each_path( std::size_t target, const std::function<void( const std::vector<std::size_t>& )>& visit ) const
  {
    std::vector<std::size_t> rev{target};
    const std::function<void()> grow = [&] {
      visit( std::vector<std::size_t>( rev.rbegin(), rev.rend() ) );
      for ( const auto& edge : es_.events()[rev.back()].preds )
      {
        rev.push_back( es_.index_of( edge.event ) );
        grow();
        rev.pop_back();
      }
    };
    grow();
  }

  const EventStructure& es_;
};

// ---------------------------------------------------------------------------
// declarative rules

struct RuleTables
{
  std::map<const Formula*, std::vector<char>> two;
  std::map<const Formula*, std::vector<T6>> six;
};

void fill_tables( const Frame& fr, const Formula& f, RuleTables& t )
{
  for ( const auto& g : f.args )
  {
    fill_tables( fr, g, t );
  }
  t.two.emplace( &f, table2( fr, f ) );
  t.six.emplace( &f, table6( fr, f ) );
}

void post_order( const Formula& f, std::vector<const Formula*>& out )
{
  for ( const auto& g : f.args )
  {
    post_order( g, out );
  }
  out.push_back( &f );
}

std::optional<T6> rule_value( const Formula& f, std::size_t i, const RuleTables& t )
{
  const bool holds = t.two.at( &f )[i] != 0;
  const auto sem = [&]( const Formula& g ) { return t.six.at( &g )[i]; };
  switch ( f.op )
  {
  case Op::AS:
    if ( sem( f.rhs() ) <= T6::FalseDevice && !holds )
      return sem( f.rhs() );
    return std::nullopt;
  case Op::ES:
    if ( sem( f.lhs() ) >= T6::TrueDevice && holds )
      return sem( f.lhs() );
    return std::nullopt;
  case Op::S:
    if ( sem( f.rhs() ) <= T6::FalseDevice && !holds )
      return T6::FalseDevice;
    if ( sem( f.rhs() ) >= T6::TrueDevice && holds )
      return T6::TrueDevice;
    return std::nullopt;
  case Op::EY:
    if ( sem( f.lhs() ) >= T6::TrueDevice && holds )
      return sem( f.lhs() );
    return std::nullopt;
  case Op::Y:
    if ( sem( f.lhs() ) <= T6::FalseDevice && !holds )
      return T6::FalseDevice;
    if ( sem( f.lhs() ) >= T6::TrueDevice && holds )
      return T6::TrueDevice;
    return std::nullopt;
  case Op::Not:
  {
    // AY g is spelled !EY!g in the core
    const Formula& inner = f.lhs();
    if ( inner.op != Op::EY || inner.lhs().op != Op::Not )
      return std::nullopt;
    const Formula& g = inner.lhs().lhs();
    if ( sem( g ) <= T6::FalseDevice && !holds )
      return sem( g );
    return std::nullopt;
  }
  default:
    return std::nullopt;
  }
}

} // namespace

VerdictMap2 eval2( const EventStructure& es, const CoreFormula& f )
{
  require_valid( es );
  const Frame fr( es );
  return to_map<bool>( es, f, table2( fr, f.formula() ) );
}

VerdictMap2 eval2_bruteforce( const EventStructure& es, const CoreFormula& f )
{
  if ( es.size() > bruteforce_event_limit )
  {
    throw EventError( "eval2_bruteforce: structure has " + std::to_string( es.size() ) + " events, limit is " +
                      std::to_string( bruteforce_event_limit ) );
  }
  require_valid( es );
  return to_map<bool>( es, f, PathOracle( es ).eval( f.formula() ) );
}

VerdictMap6 eval6( const EventStructure& es, const CoreFormula& f )
{
  require_valid( es );
  const Frame fr( es );
  return to_map<T6>( es, f, table6( fr, f.formula() ) );
}

std::vector<Divergence> declarative_divergences( const EventStructure& es, const CoreFormula& f )
{
  require_valid( es );
  const Frame fr( es );
  const CausalOrder causal( es );
  RuleTables tables;
  fill_tables( fr, f.formula(), tables );
  std::vector<const Formula*> nodes;
  post_order( f.formula(), nodes );

  std::vector<Divergence> out;
  for ( const Formula* node : nodes )
  {
    const auto& six = tables.six.at( node );
    for ( const auto i : fr.order )
    {
      // rules only speak about events not already decided by a final past verdict
      bool decided = false;
      for ( std::size_t j = 0; j < es.size() && !decided; ++j )
      {
        if ( !causal.before( j, i ) )
        {
          continue;
        }
        const bool same_device = es.events()[j].device == es.events()[i].device;
        decided = is_global_final( six[j] ) ||
                  ( same_device && ( six[j] == T6::TrueDevice || six[j] == T6::FalseDevice ) );
      }
      if ( decided )
      {
        continue;
      }
      const auto rule = rule_value( *node, i, tables );
      if ( rule && *rule != six[i] )
      {
        out.push_back( {es.events()[i].id, *node, *rule, six[i]} );
      }
    }
  }
  return out;
}

VerdictMap2 collapse( const VerdictMap6& m )
{
  VerdictMap2 out{m.formula, {}};
  for ( const auto& [id, v] : m.values )
  {
    out.values.emplace( id, to_bool( v ) );
  }
  return out;
}

} // namespace pctl
