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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pctl
{

using DeviceId = std::string;
using EventId = std::string;

/// Incoming message edge: `event` (on `sender`) ⇝ the owning event.
struct Edge
{
  DeviceId sender;
  EventId event;

  friend bool operator==( const Edge&, const Edge& ) = default;
  friend auto operator<=>( const Edge&, const Edge& ) = default;
};

/// One round of one device.
struct Event
{
  EventId id;
  DeviceId device;
  int seq = 1;                      ///< round index on the device, from 1
  std::vector<Edge> preds;          ///< sorted by sender; includes the self edge
  std::map<std::string, bool> obs;  ///< atom valuation

  /// The edge from `sender`, if any.
  const Edge* pred_from( const DeviceId& sender ) const;

  friend bool operator==( const Event&, const Event& ) = default;
};

class EventError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Finite set of events with an acyclic neighbouring relation.
///
/// The structure is immutable once built. Construction does not check the
/// structural invariants, so that `validate` can report on arbitrary input;
/// queries other than `validate` assume a valid structure.
class EventStructure
{
public:
  EventStructure() = default;
  EventStructure( std::vector<DeviceId> devices, std::vector<std::string> atoms, std::vector<Event> events );

  const std::vector<DeviceId>& devices() const noexcept { return devices_; }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<Event>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }

  bool contains( const EventId& id ) const { return index_.count( id ) != 0; }
  /// Throws EventError for unknown ids.
  std::size_t index_of( const EventId& id ) const;
  const Event& at( const EventId& id ) const { return events_[index_of( id )]; }

  friend bool operator==( const EventStructure& a, const EventStructure& b )
  {
    return a.devices_ == b.devices_ && a.atoms_ == b.atoms_ && a.events_ == b.events_;
  }

private:
  std::vector<DeviceId> devices_;
  std::vector<std::string> atoms_;
  std::vector<Event> events_;
  std::unordered_map<EventId, std::size_t> index_; // first occurrence of each id
};

enum class IssueKind
{
  DuplicateId,
  UnknownDevice,
  UnknownEvent,
  SenderMismatch,
  DuplicateSender,
  BrokenChain,
  Cycle,
  PartialObs,
};

std::string_view issue_name( IssueKind kind ) noexcept;

struct Issue
{
  IssueKind kind;
  std::string message;
  std::vector<EventId> events; ///< witnesses
};

/// Every violated invariant; empty means valid.
std::vector<Issue> validate( const EventStructure& es );
/// Throws EventError carrying the first issue.
void require_valid( const EventStructure& es );

/// Linearization with ties broken by (seq, device, id).
std::vector<EventId> topological_order( const EventStructure& es );
/// Same, as indices into `events()`.
std::vector<std::size_t> topological_indices( const EventStructure& es );

/// Strict causal past (transitive closure of ⇝), sorted by id.
std::vector<EventId> causal_past( const EventStructure& es, const EventId& e );

std::optional<EventId> device_predecessor( const EventStructure& es, const EventId& e );

/// Reachability over ⇝ in both directions, by event index.
class CausalOrder
{
public:
  explicit CausalOrder( const EventStructure& es );

  /// a < b (strict)
  bool before( std::size_t a, std::size_t b ) const { return past_[b][a] != 0; }

private:
  std::vector<std::vector<char>> past_;
};

/// Old events, their edges and observables unchanged, and no edge into an
/// old event.
bool is_extension( const EventStructure& base, const EventStructure& ext );

// ---------------------------------------------------------------------------
// scenario generation

enum class Connectivity
{
  Complete,
  Random,
  Chain,
};

struct ChurnWindow
{
  int join_round = 1;
  int leave_round = 1;

  friend bool operator==( const ChurnWindow&, const ChurnWindow& ) = default;
};

struct AtomModel
{
  enum class Kind
  {
    Const,
    Bernoulli,
    Pulse,
  };
  Kind kind = Kind::Const;
  bool value = false;     ///< Const value, or the value at the pulse event
  double probability = 0; ///< Bernoulli
  DeviceId device;        ///< Pulse target
  int round = 1;          ///< Pulse target

  static AtomModel constant( bool v ) { return {Kind::Const, v, 0, {}, 1}; }
  static AtomModel bernoulli( double p ) { return {Kind::Bernoulli, false, p, {}, 1}; }
  /// `v` at (device, round), `!v` everywhere else.
  static AtomModel pulse( DeviceId d, int r, bool v = true ) { return {Kind::Pulse, v, 0, std::move( d ), r}; }

  friend bool operator==( const AtomModel&, const AtomModel& ) = default;
};

struct ScenarioConfig
{
  std::vector<DeviceId> devices;
  int rounds = 1;
  Connectivity connectivity = Connectivity::Complete;
  double link_probability = 1.0; ///< Random connectivity only
  double drop_prob = 0.0;
  std::map<DeviceId, ChurnWindow> churn;
  std::vector<std::pair<std::string, AtomModel>> atom_models;

  /// "A", "B", ..., "Z", "AA", "AB", ...
  static std::vector<DeviceId> device_names( int count );

  friend bool operator==( const ScenarioConfig&, const ScenarioConfig& ) = default;
};

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError describing the first violated constraint.
void check_config( const ScenarioConfig& cfg );

/// Event of device d at round r receives its own previous round plus the
/// round r-1 events of connected, alive neighbours, each cross edge dropped
/// independently with `drop_prob`.
EventStructure generate( const ScenarioConfig& cfg, std::uint64_t seed );

/// Appends `extra_rounds` rounds after the last round of `base`.
EventStructure extend( const EventStructure& base, const ScenarioConfig& cfg, std::uint64_t seed, int extra_rounds );

} // namespace pctl
