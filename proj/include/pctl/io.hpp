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

#pragma once

#include <pctl/events.hpp>
#include <pctl/formula.hpp>
#include <pctl/monitor.hpp>
#include <pctl/oracle.hpp>

#include <json.hpp>

#include <string>

namespace pctl
{

using json = nlohmann::json;

class FormatError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Event structures: {"devices":[...], "atoms":[...], "events":[{"id","device","seq","preds":{dev:id},"obs":{atom:bool}}]}
json to_json( const EventStructure& es );
/// Throws FormatError on schema violations. Does not validate the invariants.
EventStructure event_structure_from_json( const json& j );

// Scenario configs, field names as in ScenarioConfig.
json to_json( const ScenarioConfig& cfg );
ScenarioConfig scenario_config_from_json( const json& j );

// Formulas as nested {"op": ..., "args": [...]}; atoms carry "name".
json to_json( const Formula& f );
Formula formula_from_json( const json& j );

json to_json( const MonitorProgram& p );

/// Payload wire format: booleans, or ranks 0..5, in layout order.
json payload_to_json( const Payload<bool>& p );
json payload_to_json( const Payload<TruthValue6>& p );

std::string verdict_token( bool v );
std::string verdict_token( TruthValue6 v );
int verdict_rank( bool v );
int verdict_rank( TruthValue6 v );

/// Columns: event, device, seq, verdict, rank; rows in topological order.
template <class V>
std::string verdicts_to_csv( const EventStructure& es, const VerdictMap<V>& m );

template <class V>
json verdicts_to_json( const EventStructure& es, const VerdictMap<V>& m );

/// Per-event inbox, payload and verdict of a monitor run, in topological order.
template <class V>
json trace_to_json( const EventStructure& es, const RunState<V>& state );

std::string read_file( const std::string& path );
void write_file( const std::string& path, const std::string& content );

} // namespace pctl
