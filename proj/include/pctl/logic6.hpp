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

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace pctl
{

/// Six-valued verdict chain F < F- < F. < T. < T- < T.
///
/// Dotted values state the current truth only. Minus values are final for
/// every later event of the same device. Bare F and T are final for the
/// whole causal future.
enum class TruthValue6 : std::uint8_t
{
  False = 0,       ///< F : false at every causal successor
  FalseDevice = 1, ///< F-: false at every later event of this device
  FalseNow = 2,    ///< F.: false here, no prediction
  TrueNow = 3,     ///< T.
  TrueDevice = 4,  ///< T-
  True = 5,        ///< T
};

inline constexpr std::array<TruthValue6, 6> all_truth_values{
    TruthValue6::False,   TruthValue6::FalseDevice, TruthValue6::FalseNow,
    TruthValue6::TrueNow, TruthValue6::TrueDevice,  TruthValue6::True};

constexpr int rank( TruthValue6 v ) noexcept { return static_cast<int>( v ); }

/// Throws std::out_of_range outside 0..5.
TruthValue6 from_rank( int r );

constexpr TruthValue6 conj( TruthValue6 a, TruthValue6 b ) noexcept { return std::min( a, b ); }
constexpr TruthValue6 disj( TruthValue6 a, TruthValue6 b ) noexcept { return std::max( a, b ); }
constexpr TruthValue6 neg( TruthValue6 a ) noexcept
{
  return static_cast<TruthValue6>( 5 - rank( a ) );
}

constexpr TruthValue6 implies( TruthValue6 a, TruthValue6 b ) noexcept { return disj( neg( a ), b ); }
constexpr TruthValue6 iff( TruthValue6 a, TruthValue6 b ) noexcept
{
  return conj( implies( a, b ), implies( b, a ) );
}

constexpr bool to_bool( TruthValue6 a ) noexcept { return rank( a ) >= 3; }

/// Observations carry no prediction, so they land on the dotted values.
constexpr TruthValue6 from_bool( bool b ) noexcept
{
  return b ? TruthValue6::TrueNow : TruthValue6::FalseNow;
}

/// Final for the whole causal future (F or T).
constexpr bool is_global_final( TruthValue6 a ) noexcept
{
  return a == TruthValue6::False || a == TruthValue6::True;
}

/// ASCII token: F, F-, F., T., T-, T.
std::string_view token( TruthValue6 v ) noexcept;
std::optional<TruthValue6> parse_token( std::string_view text ) noexcept;

} // namespace pctl
