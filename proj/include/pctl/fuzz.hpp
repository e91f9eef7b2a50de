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

#include <cstdint>
#include <string>
#include <vector>

namespace pctl::fuzz
{

struct Bounds
{
  int max_events = 40;
  int max_devices = 6;
  int max_depth = 5;
  std::vector<std::string> atoms{"p", "q", "r"};
};

/// Random valid scenario with at most `max_events` events.
ScenarioConfig random_config( std::uint64_t seed, const Bounds& bounds );
EventStructure random_structure( std::uint64_t seed, const Bounds& bounds );

/// Config for appending rounds to `base`: its devices, perhaps one newcomer,
/// fresh link and observation models.
ScenarioConfig random_extension_config( std::uint64_t seed, const EventStructure& base );

struct Violation
{
  std::string check;
  std::string formula;
  EventId event;
  std::string detail;
};

std::string describe( const Violation& v );

/// run(compile(f, mode)) against eval2/eval6, both modes; collapse coherence
/// of the oracle and of the monitors.
std::vector<Violation> check_equivalence( const EventStructure& es, const CoreFormula& f );

/// eval2 against path enumeration; `es` must be small enough.
std::vector<Violation> check_bruteforce( const EventStructure& es, const CoreFormula& f );

/// Final verdicts on `base` survive in `ext`, and past verdicts are stable.
std::vector<Violation> check_prediction( const EventStructure& base, const EventStructure& ext, const CoreFormula& f );

/// No event evaluates to T while another evaluates to F.
std::vector<Violation> check_never_both( const EventStructure& es, const CoreFormula& f );

/// Continuing a run on `ext` from the payloads of `base` equals a fresh run.
std::vector<Violation> check_online( const EventStructure& base, const EventStructure& ext, const CoreFormula& f );

struct Iteration
{
  std::uint64_t seed = 0;
  EventStructure structure;
  EventStructure extension;
  Formula formula;
  CoreFormula core{Formula::constant( true )};
};

/// Deterministic corpus entry for `seed`.
Iteration make_iteration( std::uint64_t seed, const Bounds& bounds );

struct Report
{
  std::size_t iterations = 0;
  std::size_t checks = 0;
  std::vector<std::pair<std::uint64_t, Violation>> violations;
};

/// Iteration i uses seed + i.
Report run_campaign( std::size_t iterations, std::uint64_t seed, const Bounds& bounds );

} // namespace pctl::fuzz
