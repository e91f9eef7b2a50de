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

#include <pctl/io.hpp>

#include <array>
#include <fstream>
#include <sstream>

namespace pctl
{

namespace
{

const json& field( const json& j, const char* key, const char* what )
{
  if ( !j.is_object() || !j.contains( key ) )
  {
    throw FormatError( std::string( what ) + ": missing field '" + key + "'" );
  }
  return j.at( key );
}

template <class T>
T get_as( const json& j, const std::string& what )
{
  try
  {
    return j.get<T>();
  }
  catch ( const json::exception& )
  {
    throw FormatError( what + ": wrong type (" + j.dump() + ")" );
  }
}

constexpr std::array<std::string_view, op_count> json_ops{
    "false", "true", "atom", "not", "and", "or", "implies", "iff", "Y", "AY",
    "EY",    "P",    "AP",   "EP",  "H",   "AH", "EH",      "S",   "AS", "ES"};

} // namespace

json to_json( const EventStructure& es )
{
  json events = json::array();
  for ( const auto& e : es.events() )
  {
    json preds = json::object();
    for ( const auto& edge : e.preds )
    {
      preds[edge.sender] = edge.event;
    }
    json obs = json::object();
    for ( const auto& [atom, value] : e.obs )
    {
      obs[atom] = value;
    }
    events.push_back( {{"id", e.id}, {"device", e.device}, {"seq", e.seq}, {"preds", preds}, {"obs", obs}} );
  }
  return {{"devices", es.devices()}, {"atoms", es.atoms()}, {"events", events}};
}

EventStructure event_structure_from_json( const json& j )
{
  const auto devices = get_as<std::vector<DeviceId>>( field( j, "devices", "event structure" ), "devices" );
  const auto atoms = get_as<std::vector<std::string>>( field( j, "atoms", "event structure" ), "atoms" );
  const auto& list = field( j, "events", "event structure" );
  if ( !list.is_array() )
  {
    throw FormatError( "event structure: 'events' must be an array" );
  }
  std::vector<Event> events;
  for ( const auto& item : list )
  {
    Event e;
    e.id = get_as<std::string>( field( item, "id", "event" ), "event id" );
    e.device = get_as<std::string>( field( item, "device", "event" ), "event device" );
    e.seq = get_as<int>( field( item, "seq", "event" ), "event seq" );
    const auto& preds = field( item, "preds", "event" );
    if ( !preds.is_object() )
    {
      throw FormatError( "event " + e.id + ": 'preds' must be an object" );
    }
    for ( const auto& [sender, id] : preds.items() )
    {
      e.preds.push_back( {sender, get_as<std::string>( id, "event " + e.id + " pred" )} );
    }
    const auto& obs = field( item, "obs", "event" );
    if ( !obs.is_object() )
    {
      throw FormatError( "event " + e.id + ": 'obs' must be an object" );
    }
    for ( const auto& [atom, value] : obs.items() )
    {
      e.obs[atom] = get_as<bool>( value, "event " + e.id + " obs" );
    }
    events.push_back( std::move( e ) );
  }
  return EventStructure( devices, atoms, std::move( events ) );
}

json to_json( const ScenarioConfig& cfg )
{
  json j;
  j["devices"] = cfg.devices;
  j["rounds"] = cfg.rounds;
  switch ( cfg.connectivity )
  {
  case Connectivity::Complete:
    j["connectivity"] = "complete";
    break;
  case Connectivity::Chain:
    j["connectivity"] = "chain";
    break;
  case Connectivity::Random:
    j["connectivity"] = {{"random", cfg.link_probability}};
    break;
  }
  j["drop_prob"] = cfg.drop_prob;
  json churn = json::object();
  for ( const auto& [d, w] : cfg.churn )
  {
    churn[d] = {{"join_round", w.join_round}, {"leave_round", w.leave_round}};
  }
  j["churn"] = churn;
  json models = json::object();
  for ( const auto& [atom, m] : cfg.atom_models )
  {
    switch ( m.kind )
    {
    case AtomModel::Kind::Const:
      models[atom] = {{"const", m.value}};
      break;
    case AtomModel::Kind::Bernoulli:
      models[atom] = {{"bernoulli", m.probability}};
      break;
    case AtomModel::Kind::Pulse:
      models[atom] = {{"pulse", {{"device", m.device}, {"round", m.round}, {"value", m.value}}}};
      break;
    }
  }
  j["atom_models"] = models;
  return j;
}

ScenarioConfig scenario_config_from_json( const json& j )
{
  ScenarioConfig cfg;
  const auto& devices = field( j, "devices", "config" );
  if ( devices.is_number_integer() )
  {
    cfg.devices = ScenarioConfig::device_names( devices.get<int>() );
  }
  else
  {
    cfg.devices = get_as<std::vector<DeviceId>>( devices, "config devices" );
  }
  cfg.rounds = get_as<int>( field( j, "rounds", "config" ), "config rounds" );
  if ( j.contains( "connectivity" ) )
  {
    const auto& c = j.at( "connectivity" );
    if ( c == "complete" )
    {
      cfg.connectivity = Connectivity::Complete;
    }
    else if ( c == "chain" )
    {
      cfg.connectivity = Connectivity::Chain;
    }
    else if ( c.is_object() && c.contains( "random" ) )
    {
      cfg.connectivity = Connectivity::Random;
      cfg.link_probability = get_as<double>( c.at( "random" ), "connectivity random" );
    }
    else
    {
      throw FormatError( "config: connectivity must be \"complete\", \"chain\" or {\"random\": p}" );
    }
  }
  if ( j.contains( "drop_prob" ) )
  {
    cfg.drop_prob = get_as<double>( j.at( "drop_prob" ), "config drop_prob" );
  }
  if ( j.contains( "churn" ) )
  {
    for ( const auto& [d, w] : j.at( "churn" ).items() )
    {
      cfg.churn[d] = {get_as<int>( field( w, "join_round", "churn" ), "join_round" ),
                      get_as<int>( field( w, "leave_round", "churn" ), "leave_round" )};
    }
  }
  if ( j.contains( "atom_models" ) )
  {
    for ( const auto& [atom, m] : j.at( "atom_models" ).items() )
    {
      if ( m.contains( "const" ) )
      {
        cfg.atom_models.emplace_back( atom, AtomModel::constant( get_as<bool>( m.at( "const" ), atom ) ) );
      }
      else if ( m.contains( "bernoulli" ) )
      {
        cfg.atom_models.emplace_back( atom, AtomModel::bernoulli( get_as<double>( m.at( "bernoulli" ), atom ) ) );
      }
      else if ( m.contains( "pulse" ) )
      {
        const auto& p = m.at( "pulse" );
        cfg.atom_models.emplace_back(
            atom, AtomModel::pulse( get_as<std::string>( field( p, "device", "pulse" ), "pulse device" ),
                                    get_as<int>( field( p, "round", "pulse" ), "pulse round" ),
                                    p.contains( "value" ) ? get_as<bool>( p.at( "value" ), "pulse value" ) : true ) );
      }
      else
      {
        throw FormatError( "config: atom model of " + atom + " must be const, bernoulli or pulse" );
      }
    }
  }
  return cfg;
}

json to_json( const Formula& f )
{
  json j{{"op", json_ops[static_cast<std::size_t>( f.op )]}};
  if ( f.op == Op::Atom )
  {
    j["name"] = f.name;
  }
  if ( !f.args.empty() )
  {
    json args = json::array();
    for ( const auto& g : f.args )
    {
      args.push_back( to_json( g ) );
    }
    j["args"] = args;
  }
  return j;
}

Formula formula_from_json( const json& j )
{
  const auto name = get_as<std::string>( field( j, "op", "formula" ), "formula op" );
  const auto it = std::find( json_ops.begin(), json_ops.end(), name );
  if ( it == json_ops.end() )
  {
    throw FormatError( "formula: unknown op '" + name + "'" );
  }
  const auto op = static_cast<Op>( it - json_ops.begin() );
  if ( op == Op::Atom )
  {
    return Formula::atom( get_as<std::string>( field( j, "name", "atom" ), "atom name" ) );
  }
  if ( arity( op ) == 0 )
  {
    return Formula::constant( op == Op::True );
  }
  const auto& args = field( j, "args", "formula" );
  if ( !args.is_array() || static_cast<int>( args.size() ) != arity( op ) )
  {
    throw FormatError( "formula: op '" + name + "' takes " + std::to_string( arity( op ) ) + " arguments" );
  }
  if ( arity( op ) == 1 )
  {
    return Formula::unary( op, formula_from_json( args[0] ) );
  }
  return Formula::binary( op, formula_from_json( args[0] ), formula_from_json( args[1] ) );
}

json to_json( const MonitorProgram& p )
{
  json nodes = json::array();
  for ( std::size_t i = 0; i < p.nodes.size(); ++i )
  {
    const auto& n = p.nodes[i];
    json node{{"index", i}, {"kind", node_kind_name( n.kind )}};
    if ( n.kind == NodeKind::Const )
    {
      node["value"] = n.value;
    }
    else if ( n.kind == NodeKind::Atom )
    {
      node["atom"] = n.atom;
    }
    else
    {
      node["children"] = n.children;
    }
    nodes.push_back( node );
  }
  return {{"formula", render( p.formula.formula() )},
          {"mode", mode_name( p.mode )},
          {"root", p.root},
          {"payload_size", payload_size( p )},
          {"nodes", nodes},
          {"broadcast_layout", p.broadcast_layout}};
}

json payload_to_json( const Payload<bool>& p )
{
  json j = json::array();
  for ( const bool v : p.values )
  {
    j.push_back( v );
  }
  return j;
}

json payload_to_json( const Payload<TruthValue6>& p )
{
  json j = json::array();
  for ( const auto v : p.values )
  {
    j.push_back( rank( v ) );
  }
  return j;
}

std::string verdict_token( bool v ) { return v ? "true" : "false"; }
std::string verdict_token( TruthValue6 v ) { return std::string( token( v ) ); }
int verdict_rank( bool v ) { return v ? 1 : 0; }
int verdict_rank( TruthValue6 v ) { return rank( v ); }

template <class V>
std::string verdicts_to_csv( const EventStructure& es, const VerdictMap<V>& m )
{
  std::ostringstream out;
  out << "event,device,seq,verdict,rank\n";
  for ( const auto& id : topological_order( es ) )
  {
    const auto& e = es.at( id );
    const V v = m.at( id );
    out << id << ',' << e.device << ',' << e.seq << ',' << verdict_token( v ) << ',' << verdict_rank( v ) << '\n';
  }
  return out.str();
}

template <class V>
json verdicts_to_json( const EventStructure& es, const VerdictMap<V>& m )
{
  json rows = json::array();
  for ( const auto& id : topological_order( es ) )
  {
    const auto& e = es.at( id );
    const V v = m.at( id );
    rows.push_back(
        {{"event", id}, {"device", e.device}, {"seq", e.seq}, {"verdict", verdict_token( v )}, {"rank", verdict_rank( v )}} );
  }
  return {{"formula", render( m.formula.formula() )}, {"mode", mode_name( mode_of<V> )}, {"verdicts", rows}};
}

template <class V>
json trace_to_json( const EventStructure& es, const RunState<V>& state )
{
  json rows = json::array();
  for ( const auto& id : topological_order( es ) )
  {
    const auto& e = es.at( id );
    json inbox = json::object();
    for ( const auto& edge : e.preds )
    {
      inbox[edge.sender] = payload_to_json( state.results.at( edge.event ).payload );
    }
    const auto& r = state.results.at( id );
    rows.push_back( {{"event", id},
                     {"device", e.device},
                     {"inbox", inbox},
                     {"payload", payload_to_json( r.payload )},
                     {"verdict", verdict_token( r.verdict )}} );
  }
  return rows;
}

template std::string verdicts_to_csv( const EventStructure&, const VerdictMap<bool>& );
template std::string verdicts_to_csv( const EventStructure&, const VerdictMap<TruthValue6>& );
template json verdicts_to_json( const EventStructure&, const VerdictMap<bool>& );
template json verdicts_to_json( const EventStructure&, const VerdictMap<TruthValue6>& );
template json trace_to_json( const EventStructure&, const RunState<bool>& );
template json trace_to_json( const EventStructure&, const RunState<TruthValue6>& );

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw FormatError( "cannot read " + path );
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file( const std::string& path, const std::string& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw FormatError( "cannot write " + path );
  }
  out << content;
}

} // namespace pctl
