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

#include <pctl/monitor.hpp>

#include <algorithm>
#include <set>

namespace pctl
{

std::string_view mode_name( Mode m ) noexcept
{
  return m == Mode::TwoValued ? "two" : "six";
}

std::string_view node_kind_name( NodeKind k ) noexcept
{
  switch ( k )
  {
  case NodeKind::Const:
    return "Const";
  case NodeKind::Atom:
    return "Atom";
  case NodeKind::Not:
    return "Not";
  case NodeKind::And:
    return "And";
  case NodeKind::Or:
    return "Or";
  case NodeKind::Y:
    return "Y";
  case NodeKind::EY:
    return "EY";
  case NodeKind::S:
    return "S";
  case NodeKind::AS:
    return "AS";
  case NodeKind::ES:
    return "ES";
  }
  return "?";
}

std::vector<std::string> MonitorProgram::atoms() const
{
  std::vector<std::string> out;
  for ( const auto& n : nodes )
  {
    if ( n.kind == NodeKind::Atom && std::find( out.begin(), out.end(), n.atom ) == out.end() )
    {
      out.push_back( n.atom );
    }
  }
  return out;
}

namespace
{

bool is_temporal( NodeKind k )
{
  return k == NodeKind::Y || k == NodeKind::EY || k == NodeKind::S || k == NodeKind::AS || k == NodeKind::ES;
}

NodeKind kind_of( Op op )
{
  switch ( op )
  {
  case Op::False:
  case Op::True:
    return NodeKind::Const;
  case Op::Atom:
    return NodeKind::Atom;
  case Op::Not:
    return NodeKind::Not;
  case Op::And:
    return NodeKind::And;
  case Op::Or:
    return NodeKind::Or;
  case Op::Y:
    return NodeKind::Y;
  case Op::EY:
    return NodeKind::EY;
  case Op::S:
    return NodeKind::S;
  case Op::AS:
    return NodeKind::AS;
  case Op::ES:
    return NodeKind::ES;
  default:
    throw MonitorError( "compile: derived connective " + std::string( op_name( op ) ) );
  }
}

std::size_t emit( const Formula& f, std::vector<MonitorNode>& nodes )
{
  MonitorNode node;
  node.kind = kind_of( f.op );
  node.value = f.op == Op::True;
  node.atom = f.name;
  for ( const auto& g : f.args )
  {
    node.children.push_back( emit( g, nodes ) );
  }
  nodes.push_back( std::move( node ) );
  return nodes.size() - 1;
}

// ---------------------------------------------------------------------------
// node equations per verdict domain

template <class V>
struct Domain;

template <>
struct Domain<bool>
{
  static bool constant( bool v ) { return v; }
  static bool observe( bool v ) { return v; }
  static bool negate( bool v ) { return !v; }
  static bool meet( bool a, bool b ) { return a && b; }
  static bool join( bool a, bool b ) { return a || b; }
  static constexpr bool fallback = false; // nbr/share default

  static bool yesterday( bool loc, bool ) { return loc; }
  static bool exists_yesterday( bool any, bool ) { return any; }
  static bool since( bool f1, bool f2, bool loc ) { return f2 || ( f1 && loc ); }
  static bool all_since( bool f1, bool f2, bool all ) { return f2 || ( f1 && all ); }
  static bool exists_since( bool f1, bool f2, bool any ) { return f2 || ( f1 && any ); }
};

template <>
struct Domain<TruthValue6>
{
  using V = TruthValue6;
  static V constant( bool v ) { return v ? V::True : V::False; }
  static V observe( bool v ) { return from_bool( v ); }
  static V negate( V v ) { return neg( v ); }
  static V meet( V a, V b ) { return conj( a, b ); }
  static V join( V a, V b ) { return disj( a, b ); }
  static constexpr V fallback = V::FalseNow;

  static V yesterday( V loc, V now )
  {
    return loc >= V::TrueNow ? disj( V::TrueNow, conj( now, V::TrueDevice ) )
                             : disj( V::FalseDevice, conj( now, V::FalseNow ) );
  }
  static V exists_yesterday( V any, V now ) { return any >= V::TrueNow ? disj( V::TrueNow, now ) : V::FalseNow; }
  static V since( V f1, V f2, V loc )
  {
    return disj( f2, conj( f1, loc >= V::TrueNow ? V::TrueDevice : V::FalseDevice ) );
  }
  static V all_since( V f1, V f2, V all ) { return disj( f2, conj( f1, all >= V::TrueNow ? V::TrueNow : V::False ) ); }
  static V exists_since( V f1, V f2, V any )
  {
    return disj( f2, conj( f1, any >= V::TrueNow ? V::True : V::FalseNow ) );
  }
};

} // namespace

MonitorProgram compile( const CoreFormula& f, Mode mode )
{
  MonitorProgram p;
  p.mode = mode;
  p.formula = f;
  p.root = emit( f.formula(), p.nodes );
  for ( std::size_t i = 0; i < p.nodes.size(); ++i )
  {
    if ( is_temporal( p.nodes[i].kind ) )
    {
      p.broadcast_layout.push_back( i );
    }
  }
  return p;
}

std::size_t payload_size( const MonitorProgram& p ) noexcept
{
  return p.broadcast_layout.size();
}

template <class V>
StepResult<V> step( const MonitorProgram& p, const Inbox<V>& inbox, const Observation& obs )
{
  using D = Domain<V>;
  if ( p.mode != mode_of<V> )
  {
    throw MonitorError( "step: program is " + std::string( mode_name( p.mode ) ) + "-valued, inbox is " +
                        std::string( mode_name( mode_of<V> ) ) + "-valued" );
  }
  const auto width = p.broadcast_layout.size();
  for ( const auto& [device, payload] : inbox.entries )
  {
    if ( payload.values.size() != width )
    {
      throw MonitorError( "step: payload from " + device + " has " + std::to_string( payload.values.size() ) +
                          " values, layout has " + std::to_string( width ) );
    }
  }
  const auto own = inbox.entries.find( inbox.self );
  const Payload<V>* self = own == inbox.entries.end() ? nullptr : &own->second;

  std::vector<V> value( p.nodes.size(), D::fallback );
  Payload<V> out;
  out.values.reserve( width );
  std::size_t slot = 0;
  for ( std::size_t i = 0; i < p.nodes.size(); ++i )
  {
    const auto& node = p.nodes[i];
    const auto child = [&]( std::size_t k ) { return value[node.children[k]]; };
    // hood folds over the slot; the default stands in for a missing self entry
    const auto loc_hood = [&] { return self ? self->values[slot] : D::fallback; };
    const auto fold = [&]( auto combine ) {
      V acc = self ? self->values[slot] : D::fallback;
      for ( const auto& [device, payload] : inbox.entries )
      {
        acc = combine( acc, payload.values[slot] );
      }
      return acc;
    };
    switch ( node.kind )
    {
    case NodeKind::Const:
      value[i] = D::constant( node.value );
      break;
    case NodeKind::Atom:
    {
      const auto it = obs.find( node.atom );
      if ( it == obs.end() )
      {
        throw MonitorError( "step: missing observation for atom " + node.atom );
      }
      value[i] = D::observe( it->second );
      break;
    }
    case NodeKind::Not:
      value[i] = D::negate( child( 0 ) );
      break;
    case NodeKind::And:
      value[i] = D::meet( child( 0 ), child( 1 ) );
      break;
    case NodeKind::Or:
      value[i] = D::join( child( 0 ), child( 1 ) );
      break;
    case NodeKind::Y:
      value[i] = D::yesterday( loc_hood(), child( 0 ) );
      out.values.push_back( child( 0 ) );
      break;
    case NodeKind::EY:
      value[i] = D::exists_yesterday( fold( D::join ), child( 0 ) );
      out.values.push_back( child( 0 ) );
      break;
    case NodeKind::S:
      value[i] = D::since( child( 0 ), child( 1 ), loc_hood() );
      out.values.push_back( value[i] );
      break;
    case NodeKind::AS:
      value[i] = D::all_since( child( 0 ), child( 1 ), fold( D::meet ) );
      out.values.push_back( value[i] );
      break;
    case NodeKind::ES:
      value[i] = D::exists_since( child( 0 ), child( 1 ), fold( D::join ) );
      out.values.push_back( value[i] );
      break;
    }
    if ( is_temporal( node.kind ) )
    {
      ++slot;
    }
  }
  return {value[p.root], std::move( out )};
}

template <class V>
void advance( const MonitorProgram& p, const EventStructure& es, RunState<V>& state, std::span<const EventId> order )
{
  require_valid( es );
  for ( const auto& atom : p.atoms() )
  {
    if ( std::find( es.atoms().begin(), es.atoms().end(), atom ) == es.atoms().end() )
    {
      throw MonitorError( "run: structure does not observe atom " + atom );
    }
  }
  std::vector<EventId> topo;
  if ( order.empty() )
  {
    topo = topological_order( es );
    order = topo;
  }
  else
  {
    std::set<EventId> listed( order.begin(), order.end() );
    if ( listed.size() != order.size() || listed.size() != es.size() ||
         !std::all_of( listed.begin(), listed.end(), [&]( const EventId& id ) { return es.contains( id ); } ) )
    {
      throw MonitorError( "run: order is not a permutation of the events" );
    }
  }

  for ( const auto& id : order )
  {
    if ( state.results.count( id ) != 0 )
    {
      continue;
    }
    const auto& ev = es.at( id );
    Inbox<V> inbox{ev.device, {}};
    for ( const auto& edge : ev.preds )
    {
      const auto it = state.results.find( edge.event );
      if ( it == state.results.end() )
      {
        throw MonitorError( "run: " + id + " is scheduled before its predecessor " + edge.event );
      }
      inbox.entries.emplace( edge.sender, it->second.payload );
    }
    state.results.emplace( id, step( p, inbox, ev.obs ) );
  }
}

template <class V>
VerdictMap<V> verdicts( const MonitorProgram& p, const RunState<V>& state )
{
  VerdictMap<V> m{p.formula, {}};
  for ( const auto& [id, r] : state.results )
  {
    m.values.emplace( id, r.verdict );
  }
  return m;
}

template StepResult<bool> step( const MonitorProgram&, const Inbox<bool>&, const Observation& );
template StepResult<TruthValue6> step( const MonitorProgram&, const Inbox<TruthValue6>&, const Observation& );
template void advance( const MonitorProgram&, const EventStructure&, RunState<bool>&, std::span<const EventId> );
template void advance( const MonitorProgram&, const EventStructure&, RunState<TruthValue6>&,
                       std::span<const EventId> );
template VerdictMap<bool> verdicts( const MonitorProgram&, const RunState<bool>& );
template VerdictMap<TruthValue6> verdicts( const MonitorProgram&, const RunState<TruthValue6>& );

} // namespace pctl
