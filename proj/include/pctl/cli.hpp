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
#include <pctl/monitor.hpp>
#include <pctl/oracle.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace pctl::cli
{

/// Exit statuses.
enum Status : int
{
  Ok = 0,
  CheckFailed = 1,
  UsageError = 2,
};

struct Streams
{
  std::ostream& out;
  std::ostream& err;
};

/// Named example formulas; anything else is returned unchanged.
///   backup-made             EP b
///   always-functional       AH f
///   backup-since-functional (EP b) S (AH f)
std::string resolve_preset( const std::string& formula_or_alias );

int cmd_scenario( const std::string& config_path, std::uint64_t seed, const std::string& out_path, Streams io );

struct RunOptions
{
  std::string formula;
  std::string events_path;
  Mode mode = Mode::SixValued;
  std::string format = "csv"; ///< csv | json
  std::string out_path;       ///< stdout when empty
  std::string dot_path;
  std::string trace_path;     ///< per-event payload dump (JSON)
};

int cmd_run( const RunOptions& opts, Streams io );

/// emit: json | text
int cmd_compile( const std::string& formula, Mode mode, const std::string& emit, Streams io );

/// Test hook applied to the monitor verdicts before comparison.
using FaultInjector = std::function<void( VerdictMap2&, VerdictMap6& )>;

int cmd_check( const std::string& formula, const std::string& events_path, Streams io,
               const FaultInjector& inject = {} );

struct FuzzOptions
{
  std::size_t iterations = 1000;
  std::uint64_t seed = 1;
  int max_events = 40;
  int max_devices = 6;
  int max_depth = 5;
};

int cmd_fuzz( const FuzzOptions& opts, Streams io );

int cmd_extend( const std::string& events_path, const std::string& config_path, std::uint64_t seed, int rounds,
                const std::string& out_path, Streams io );

/// Event DAG with events coloured by verdict: red for the false side, green
/// for the true side; border style shows finality.
template <class V>
std::string export_dot( const EventStructure& es, const VerdictMap<V>& verdicts );

} // namespace pctl::cli
