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
#include <pctl/logic6.hpp>
#include <pctl/oracle.hpp>

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace pctl
{

enum class Mode
{
  TwoValued,
  SixValued,
};

std::string_view mode_name( Mode m ) noexcept;

template <class V>
inline constexpr Mode mode_of = std::is_same_v<V, bool> ? Mode::TwoValued : Mode::SixValued;

enum class NodeKind
{
  Const,
  Atom,
  Not,
  And,
  Or,
  Y,
  EY,
  S,
  AS,
  ES,
};

std::string_view node_kind_name( NodeKind k ) noexcept;

struct MonitorNode
{
  NodeKind kind = NodeKind::Const;
  bool value = false; ///< Const: true for T/⊤, false for F/⊥
  std::string atom;   ///< Atom
  std::vector<std::size_t> children;

  friend bool operator==( const MonitorNode&, const MonitorNode& ) = default;
};

/// Compiled per-device monitor. Children precede parents; `broadcast_layout`
/// lists the temporal nodes in node order.
struct MonitorProgram
{
  Mode mode = Mode::TwoValued;
  CoreFormula formula{Formula::constant( true )};
  std::vector<MonitorNode> nodes;
  std::size_t root = 0;
  std::vector<std::size_t> broadcast_layout;

  std::vector<std::string> atoms() const;
};

MonitorProgram compile( const CoreFormula& f, Mode mode );

/// Values broadcast after a round, one per `broadcast_layout` slot: the
/// child's current value for Y/EY (what `nbr` shares) and the node's own
/// output for S/AS/ES (what `share` broadcasts).
template <class V>
struct Payload
{
  std::vector<V> values;

  friend bool operator==( const Payload&, const Payload& ) = default;
};

/// Latest payload of every device with an edge into the current event.
template <class V>
struct Inbox
{
  DeviceId self;                        ///< the receiving device
  std::map<DeviceId, Payload<V>> entries; ///< includes `self` unless first round
};

template <class V>
struct StepResult
{
  V verdict;
  Payload<V> payload;
};

class MonitorError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

using Observation = std::map<std::string, bool>;

/// One round on one device. Pure: all state travels in payloads.
template <class V>
StepResult<V> step( const MonitorProgram& p, const Inbox<V>& inbox, const Observation& obs );

/// Retained per-event payloads of a run, for online continuation.
template <class V>
struct RunState
{
  std::map<EventId, StepResult<V>> results;
};

/// Process the events of `es` not yet in `state`, in `order` (a
/// linearization of `es`; topological order when empty).
template <class V>
void advance( const MonitorProgram& p, const EventStructure& es, RunState<V>& state,
              std::span<const EventId> order = {} );

template <class V>
VerdictMap<V> verdicts( const MonitorProgram& p, const RunState<V>& state );

/// Message-passing execution over a whole structure.
template <class V>
VerdictMap<V> run( const MonitorProgram& p, const EventStructure& es, std::span<const EventId> order = {} )
{
  RunState<V> state;
  advance( p, es, state, order );
  return verdicts( p, state );
}

std::size_t payload_size( const MonitorProgram& p ) noexcept;

} // namespace pctl
