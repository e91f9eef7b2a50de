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
#include <random>
#include <set>

namespace pctl
{

std::vector<DeviceId> ScenarioConfig::device_names( int count )
{
  std::vector<DeviceId> names;
  for ( int i = 0; i < count; ++i )
  {
    std::string name;
    for ( int k = i + 1; k > 0; k = ( k - 1 ) / 26 )
    {
      name.insert( name.begin(), static_cast<char>( 'A' + ( k - 1 ) % 26 ) );
    }
    names.push_back( std::move( name ) );
  }
  return names;
}

void check_config( const ScenarioConfig& cfg )
{
  const auto probability = []( double p ) { return p >= 0.0 && p <= 1.0; };
  if ( cfg.devices.empty() )
  {
    throw ConfigError( "at least one device is required" );
  }
  if ( std::set<DeviceId>( cfg.devices.begin(), cfg.devices.end() ).size() != cfg.devices.size() )
  {
    throw ConfigError( "device ids must be distinct" );
  }
  if ( cfg.rounds < 1 )
  {
    throw ConfigError( "rounds must be at least 1" );
  }
  if ( !probability( cfg.link_probability ) )
  {
    throw ConfigError( "link probability must lie in [0,1]" );
  }
  if ( !probability( cfg.drop_prob ) )
  {
    throw ConfigError( "drop_prob must lie in [0,1]" );
  }
  for ( const auto& [device, window] : cfg.churn )
  {
    if ( std::find( cfg.devices.begin(), cfg.devices.end(), device ) == cfg.devices.end() )
    {
      throw ConfigError( "churn refers to unknown device " + device );
    }
    if ( window.join_round < 1 || window.join_round > window.leave_round || window.leave_round > cfg.rounds )
    {
      throw ConfigError( "churn window of " + device + " must satisfy 1 <= join_round <= leave_round <= rounds" );
    }
  }
  std::set<std::string> seen;
  for ( const auto& [atom, model] : cfg.atom_models )
  {
    if ( !seen.insert( atom ).second )
    {
      throw ConfigError( "atom " + atom + " is modelled twice" );
    }
    switch ( model.kind )
    {
    case AtomModel::Kind::Const:
      break;
    case AtomModel::Kind::Bernoulli:
      if ( !probability( model.probability ) )
      {
        throw ConfigError( "bernoulli probability of " + atom + " must lie in [0,1]" );
      }
      break;
    case AtomModel::Kind::Pulse:
      if ( std::find( cfg.devices.begin(), cfg.devices.end(), model.device ) == cfg.devices.end() ||
           model.round < 1 || model.round > cfg.rounds )
      {
        throw ConfigError( "pulse of " + atom + " must target an existing device and round" );
      }
      break;
    }
  }
}

namespace
{

/// Reproducible across standard libraries: only the engine is from <random>.
class Rng
{
public:
  explicit Rng( std::uint64_t seed ) : engine_( seed ) {}

  double uniform() { return static_cast<double>( engine_() >> 11 ) * 0x1.0p-53; }
  bool chance( double p ) { return uniform() < p; }

private:
  std::mt19937_64 engine_;
};

/// Shared round builder for `generate` and `extend`.
class RoundBuilder
{
public:
  RoundBuilder( const ScenarioConfig& cfg, std::vector<DeviceId> devices, std::vector<std::string> atoms,
                std::uint64_t seed )
      : cfg_( cfg ), devices_( std::move( devices ) ), atoms_( std::move( atoms ) ), rng_( seed )
  {
  }

  /// Resume after existing events; `previous_round` are the events of the
  /// last round that may still send cross edges.
  void seed_history( const EventStructure& base, const std::map<DeviceId, std::size_t>& previous_round )
  {
    events_ = base.events();
    for ( std::size_t i = 0; i < events_.size(); ++i )
    {
      auto& last = last_event_[events_[i].device];
      if ( !last || events_[*last].seq < events_[i].seq )
      {
        last = i;
      }
    }
    previous_round_ = previous_round;
  }

  bool alive( const DeviceId& d, int round ) const
  {
    const auto it = cfg_.churn.find( d );
    if ( it == cfg_.churn.end() )
    {
      return true;
    }
    return round >= it->second.join_round && round <= it->second.leave_round;
  }

  void add_round( int round )
  {
    const std::size_t n = devices_.size();
    std::vector<std::vector<char>> linked( n, std::vector<char>( n, 0 ) );
    for ( std::size_t i = 0; i < n; ++i )
    {
      for ( std::size_t j = i + 1; j < n; ++j )
      {
        bool link = false;
        switch ( cfg_.connectivity )
        {
        case Connectivity::Complete:
          link = true;
          break;
        case Connectivity::Random:
          link = rng_.chance( cfg_.link_probability );
          break;
        case Connectivity::Chain:
          link = j == i + 1;
          break;
        }
        linked[i][j] = linked[j][i] = link;
      }
    }

    std::map<DeviceId, std::size_t> this_round;
    for ( std::size_t i = 0; i < n; ++i )
    {
      const auto& d = devices_[i];
      if ( !alive( d, round ) )
      {
        continue;
      }
      Event ev;
      ev.device = d;
      if ( const auto last = last_event_.find( d ); last != last_event_.end() && last->second )
      {
        // the device chain is local memory and is never dropped
        const auto& prev = events_[*last->second];
        ev.seq = prev.seq + 1;
        ev.preds.push_back( {d, prev.id} );
      }
      ev.id = d + std::to_string( ev.seq );
      for ( std::size_t j = 0; j < n; ++j )
      {
        const auto& other = devices_[j];
        if ( j == i || !linked[i][j] )
        {
          continue;
        }
        const auto sender = previous_round_.find( other );
        if ( sender == previous_round_.end() )
        {
          continue;
        }
        if ( rng_.chance( cfg_.drop_prob ) )
        {
          continue;
        }
        ev.preds.push_back( {other, events_[sender->second].id} );
      }
      std::sort( ev.preds.begin(), ev.preds.end(),
                 []( const Edge& a, const Edge& b ) { return a.sender < b.sender; } );
      for ( const auto& atom : atoms_ )
      {
        ev.obs[atom] = observe( atom, d, round );
      }
      this_round[d] = events_.size();
      last_event_[d] = events_.size();
      events_.push_back( std::move( ev ) );
    }
    previous_round_ = std::move( this_round );
  }

  EventStructure finish() { return EventStructure( devices_, atoms_, std::move( events_ ) ); }

private:
  bool observe( const std::string& atom, const DeviceId& d, int round )
  {
    const auto it = std::find_if( cfg_.atom_models.begin(), cfg_.atom_models.end(),
                                  [&]( const auto& m ) { return m.first == atom; } );
    const AtomModel& model = it->second;
    switch ( model.kind )
    {
    case AtomModel::Kind::Const:
      return model.value;
    case AtomModel::Kind::Bernoulli:
      return rng_.chance( model.probability );
    case AtomModel::Kind::Pulse:
      return ( d == model.device && round == model.round ) ? model.value : !model.value;
    }
    return false;
  }

  const ScenarioConfig& cfg_;
  std::vector<DeviceId> devices_;
  std::vector<std::string> atoms_;
  Rng rng_;
  std::vector<Event> events_;
  std::map<DeviceId, std::optional<std::size_t>> last_event_;
  std::map<DeviceId, std::size_t> previous_round_;
};

} // namespace

EventStructure generate( const ScenarioConfig& cfg, std::uint64_t seed )
{
  check_config( cfg );
  std::vector<std::string> atoms;
  for ( const auto& [atom, model] : cfg.atom_models )
  {
    atoms.push_back( atom );
  }
  RoundBuilder builder( cfg, cfg.devices, atoms, seed );
  for ( int round = 1; round <= cfg.rounds; ++round )
  {
    builder.add_round( round );
  }
  return builder.finish();
}

EventStructure extend( const EventStructure& base, const ScenarioConfig& cfg, std::uint64_t seed, int extra_rounds )
{
  require_valid( base );
  check_config( cfg );
  if ( extra_rounds < 0 )
  {
    throw ConfigError( "extra_rounds must be non-negative" );
  }
  for ( const auto& atom : base.atoms() )
  {
    const bool modelled = std::any_of( cfg.atom_models.begin(), cfg.atom_models.end(),
                                       [&]( const auto& m ) { return m.first == atom; } );
    if ( !modelled )
    {
      throw ConfigError( "config has no model for atom " + atom );
    }
  }
  if ( extra_rounds == 0 )
  {
    return base;
  }

  std::vector<DeviceId> devices = base.devices();
  for ( const auto& d : cfg.devices )
  {
    if ( std::find( devices.begin(), devices.end(), d ) == devices.end() )
    {
      devices.push_back( d );
    }
  }

  // the base ends at global round max(seq); a device sends cross edges into
  // the first new round from its latest event if the config has it alive then
  int last_round = 0;
  for ( const auto& e : base.events() )
  {
    last_round = std::max( last_round, e.seq );
  }
  RoundBuilder builder( cfg, devices, base.atoms(), seed );
  std::map<DeviceId, std::size_t> previous_round;
  for ( std::size_t i = 0; i < base.size(); ++i )
  {
    const auto& e = base.events()[i];
    if ( !builder.alive( e.device, last_round ) )
    {
      continue;
    }
    const auto it = previous_round.find( e.device );
    if ( it == previous_round.end() || base.events()[it->second].seq < e.seq )
    {
      previous_round[e.device] = i;
    }
  }
  builder.seed_history( base, previous_round );
  for ( int k = 1; k <= extra_rounds; ++k )
  {
    builder.add_round( last_round + k );
  }
  return builder.finish();
}

} // namespace pctl
