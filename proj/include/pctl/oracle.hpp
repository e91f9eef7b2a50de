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

#include <map>
#include <string>
#include <vector>

namespace pctl
{

/// Verdict of one formula at every event of a structure.
template <class V>
struct VerdictMap
{
  CoreFormula formula;
  std::map<EventId, V> values;

  const V& at( const EventId& id ) const { return values.at( id ); }

  friend bool operator==( const VerdictMap&, const VerdictMap& ) = default;
};

using VerdictMap2 = VerdictMap<bool>;
using VerdictMap6 = VerdictMap<TruthValue6>;

/// Two-valued past-CTL by one topological pass per subformula.
VerdictMap2 eval2( const EventStructure& es, const CoreFormula& f );

inline constexpr std::size_t bruteforce_event_limit = 12;

/// Two-valued semantics by explicit enumeration of message paths.
/// Exponential; refuses structures above `bruteforce_event_limit` events.
VerdictMap2 eval2_bruteforce( const EventStructure& es, const CoreFormula& f );

/// Six-valued semantics: the predictive translation recursion evaluated
/// directly on the structure.
VerdictMap6 eval6( const EventStructure& es, const CoreFormula& f );

/// Place where the itemized refinement rules and the translation disagree.
struct Divergence
{
  EventId event;
  Formula subformula;
  TruthValue6 rule_value;
  TruthValue6 translation_value;
};

/// Diagnostic: evaluates the declarative refinement rules for every temporal
/// subformula at every event where they apply and lists the disagreements with
/// `eval6`. `eval6` stays normative.
std::vector<Divergence> declarative_divergences( const EventStructure& es, const CoreFormula& f );

/// Collapse a six-valued map to Booleans.
VerdictMap2 collapse( const VerdictMap6& m );

} // namespace pctl
