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

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace pctl
{

const Edge* Event::pred_from( const DeviceId& sender ) const
{
  for ( const auto& e : preds )
  {
    if ( e.sender == sender )
    {
      return &e;
    }
  }
  return nullptr;
}

EventStructure::EventStructure( std::vector<DeviceId> devices, std::vector<std::string> atoms,
                                std::vector<Event> events )
    : devices_( std::move( devices ) ), atoms_( std::move( atoms ) ), events_( std::move( events ) )
{
  for ( auto& e : events_ )
  {
    std::stable_sort( e.preds.begin(), e.preds.end(),
                      []( const Edge& a, const Edge& b ) { return a.sender < b.sender; } );
  }
  index_.reserve( events_.size() );
  for ( std::size_t i = 0; i < events_.size(); ++i )
  {
    index_.emplace( events_[i].id, i );
  }
}

std::size_t EventStructure::index_of( const EventId& id ) const
{
  const auto it = index_.find( id );
  if ( it == index_.end() )
  {
    throw EventError( "unknown event id '" + id + "'" );
  }
  return it->second;
}

std::string_view issue_name( IssueKind kind ) noexcept
{
  switch ( kind )
  {
  case IssueKind::DuplicateId:
    return "duplicate id";
  case IssueKind::UnknownDevice:
    return "unknown device";
  case IssueKind::UnknownEvent:
    return "unknown event";
  case IssueKind::SenderMismatch:
    return "sender mismatch";
  case IssueKind::DuplicateSender:
    return "duplicate sender";
  case IssueKind::BrokenChain:
    return "broken chain";
  case IssueKind::Cycle:
    return "cycle";
  case IssueKind::PartialObs:
    return "partial obs";
  }
  return "unknown";
}

namespace
{

void check_chains( const EventStructure& es, std::vector<Issue>& issues )
{
  std::map<DeviceId, std::vector<std::pair<int, EventId>>> chains;
  for ( const auto& e : es.events() )
  {
    chains[e.device].emplace_back( e.seq, e.id );
  }
  // device -> seq -> id
  std::map<DeviceId, std::map<int, EventId>> by_seq;
  for ( auto& [device, chain] : chains )
  {
    std::sort( chain.begin(), chain.end() );
    for ( std::size_t i = 0; i < chain.size(); ++i )
    {
      const int expected = static_cast<int>( i ) + 1;
      if ( chain[i].first != expected )
      {
        issues.push_back( {IssueKind::BrokenChain,
                           "device " + device + ": expected seq " + std::to_string( expected ) + " but found " +
                               std::to_string( chain[i].first ) + " at " + chain[i].second,
                           {chain[i].second}} );
        break;
      }
    }
    for ( const auto& [seq, id] : chain )
    {
      by_seq[device].emplace( seq, id );
    }
  }

  for ( const auto& e : es.events() )
  {
    const Edge* self = e.pred_from( e.device );
    if ( e.seq == 1 )
    {
      if ( self != nullptr )
      {
        issues.push_back( {IssueKind::BrokenChain, e.id + ": first-round event has a self edge", {e.id}} );
      }
      continue;
    }
    const auto& seqs = by_seq[e.device];
    const auto prev = seqs.find( e.seq - 1 );
    if ( self == nullptr )
    {
      issues.push_back( {IssueKind::BrokenChain, e.id + ": missing self edge to the device predecessor", {e.id}} );
    }
    else if ( prev == seqs.end() || prev->second != self->event )
    {
      issues.push_back(
          {IssueKind::BrokenChain, e.id + ": self edge does not point to the device predecessor", {e.id, self->event}} );
    }
  }
}

std::vector<EventId> cycle_witness( const EventStructure& es, const std::vector<char>& remaining )
{
  // every remaining event has a remaining predecessor, so walking preds must revisit
  std::size_t cur = 0;
  while ( !remaining[cur] )
  {
    ++cur;
  }
  std::vector<std::size_t> path;
  std::vector<long> seen_at( es.size(), -1 );
  while ( seen_at[cur] < 0 )
  {
    seen_at[cur] = static_cast<long>( path.size() );
    path.push_back( cur );
    for ( const auto& edge : es.events()[cur].preds )
    {
      if ( es.contains( edge.event ) && remaining[es.index_of( edge.event )] )
      {
        cur = es.index_of( edge.event );
        break;
      }
    }
  }
  std::vector<EventId> ids;
  for ( auto i = static_cast<std::size_t>( seen_at[cur] ); i < path.size(); ++i )
  {
    ids.push_back( es.events()[path[i]].id );
  }
  std::reverse( ids.begin(), ids.end() );
  return ids;
}

struct Linearization
{
  std::vector<std::size_t> order;
  std::vector<char> remaining; ///< events stuck on a cycle
};

Linearization linearize( const EventStructure& es )
{
  const auto& events = es.events();
  const std::size_t n = events.size();
  std::vector<std::size_t> indegree( n, 0 );
  std::vector<std::vector<std::size_t>> succ( n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( const auto& edge : events[i].preds )
    {
      if ( !es.contains( edge.event ) )
      {
        continue;
      }
      succ[es.index_of( edge.event )].push_back( i );
      ++indegree[i];
    }
  }
  const auto key = [&]( std::size_t i ) { return std::tie( events[i].seq, events[i].device, events[i].id ); };
  const auto later = [&]( std::size_t a, std::size_t b ) { return key( a ) > key( b ); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype( later )> ready( later );
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( indegree[i] == 0 )
    {
      ready.push( i );
    }
  }
  Linearization lin;
  lin.order.reserve( n );
  while ( !ready.empty() )
  {
    const auto i = ready.top();
    ready.pop();
    lin.order.push_back( i );
    for ( const auto j : succ[i] )
    {
      if ( --indegree[j] == 0 )
      {
        ready.push( j );
      }
    }
  }
  lin.remaining.assign( n, 1 );
  for ( const auto i : lin.order )
  {
    lin.remaining[i] = 0;
  }
  return lin;
}

} // namespace

std::vector<Issue> validate( const EventStructure& es )
{
  std::vector<Issue> issues;
  const std::set<DeviceId> devices( es.devices().begin(), es.devices().end() );
  const std::set<std::string> atoms( es.atoms().begin(), es.atoms().end() );

  std::set<EventId> ids;
  for ( const auto& e : es.events() )
  {
    if ( !ids.insert( e.id ).second )
    {
      issues.push_back( {IssueKind::DuplicateId, "duplicate event id " + e.id, {e.id}} );
    }
    if ( devices.count( e.device ) == 0 )
    {
      issues.push_back( {IssueKind::UnknownDevice, e.id + ": unknown device " + e.device, {e.id}} );
    }
    std::set<DeviceId> senders;
    for ( const auto& edge : e.preds )
    {
      if ( !senders.insert( edge.sender ).second )
      {
        issues.push_back( {IssueKind::DuplicateSender, e.id + ": two edges from device " + edge.sender, {e.id}} );
      }
      if ( !es.contains( edge.event ) )
      {
        issues.push_back( {IssueKind::UnknownEvent, e.id + ": predecessor " + edge.event + " does not exist", {e.id}} );
      }
      else if ( es.at( edge.event ).device != edge.sender )
      {
        issues.push_back( {IssueKind::SenderMismatch,
                           e.id + ": edge keyed by " + edge.sender + " points to " + edge.event + " on device " +
                               es.at( edge.event ).device,
                           {e.id, edge.event}} );
      }
    }
    std::set<std::string> keys;
    for ( const auto& [name, value] : e.obs )
    {
      keys.insert( name );
    }
    if ( keys != atoms )
    {
      issues.push_back( {IssueKind::PartialObs, e.id + ": observations do not match the atom set", {e.id}} );
    }
  }

  check_chains( es, issues );

  const auto lin = linearize( es );
  if ( lin.order.size() != es.size() )
  {
    auto witness = cycle_witness( es, lin.remaining );
    std::string msg = "cycle through";
    for ( const auto& id : witness )
    {
      msg += " " + id;
    }
    issues.push_back( {IssueKind::Cycle, std::move( msg ), std::move( witness )} );
  }
  return issues;
}

void require_valid( const EventStructure& es )
{
  const auto issues = validate( es );
  if ( !issues.empty() )
  {
    throw EventError( "invalid event structure: " + std::string( issue_name( issues.front().kind ) ) + ": " +
                      issues.front().message );
  }
}

std::vector<std::size_t> topological_indices( const EventStructure& es )
{
  auto lin = linearize( es );
  if ( lin.order.size() != es.size() )
  {
    throw EventError( "event structure has a cycle" );
  }
  return std::move( lin.order );
}

std::vector<EventId> topological_order( const EventStructure& es )
{
  std::vector<EventId> ids;
  for ( const auto i : topological_indices( es ) )
  {
    ids.push_back( es.events()[i].id );
  }
  return ids;
}

std::vector<EventId> causal_past( const EventStructure& es, const EventId& e )
{
  std::set<EventId> seen;
  std::vector<std::size_t> stack{es.index_of( e )};
  while ( !stack.empty() )
  {
    const auto i = stack.back();
    stack.pop_back();
    for ( const auto& edge : es.events()[i].preds )
    {
      if ( seen.insert( edge.event ).second )
      {
        stack.push_back( es.index_of( edge.event ) );
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<EventId> device_predecessor( const EventStructure& es, const EventId& e )
{
  const auto& ev = es.at( e );
  if ( const Edge* self = ev.pred_from( ev.device ) )
  {
    return self->event;
  }
  return std::nullopt;
}

CausalOrder::CausalOrder( const EventStructure& es ) : past_( es.size(), std::vector<char>( es.size(), 0 ) )
{
  for ( const auto i : topological_indices( es ) )
  {
    for ( const auto& edge : es.events()[i].preds )
    {
      const auto p = es.index_of( edge.event );
      past_[i][p] = 1;
      for ( std::size_t k = 0; k < es.size(); ++k )
      {
        past_[i][k] |= past_[p][k];
      }
    }
  }
}

bool is_extension( const EventStructure& base, const EventStructure& ext )
{
  for ( const auto& d : base.devices() )
  {
    if ( std::find( ext.devices().begin(), ext.devices().end(), d ) == ext.devices().end() )
    {
      return false;
    }
  }
  for ( const auto& a : base.atoms() )
  {
    if ( std::find( ext.atoms().begin(), ext.atoms().end(), a ) == ext.atoms().end() )
    {
      return false;
    }
  }
  for ( const auto& e : base.events() )
  {
    if ( !ext.contains( e.id ) )
    {
      return false;
    }
    const auto& f = ext.at( e.id );
    // preds equality also rules out new edges into old events
    if ( f.device != e.device || f.seq != e.seq || f.preds != e.preds )
    {
      return false;
    }
    for ( const auto& [atom, value] : e.obs )
    {
      const auto it = f.obs.find( atom );
      if ( it == f.obs.end() || it->second != value )
      {
        return false;
      }
    }
  }
  return true;
}

} // namespace pctl
