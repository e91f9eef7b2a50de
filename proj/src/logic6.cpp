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

#include <pctl/logic6.hpp>

#include <stdexcept>
#include <string>

namespace pctl
{

namespace
{
constexpr std::array<std::string_view, 6> tokens{"F", "F-", "F.", "T.", "T-", "T"};
}

TruthValue6 from_rank( int r )
{
  if ( r < 0 || r > 5 )
  {
    throw std::out_of_range( "truth value rank out of range: " + std::to_string( r ) );
  }
  return static_cast<TruthValue6>( r );
}

std::string_view token( TruthValue6 v ) noexcept
{
  return tokens[static_cast<std::size_t>( rank( v ) )];
}

std::optional<TruthValue6> parse_token( std::string_view text ) noexcept
{
  for ( std::size_t i = 0; i < tokens.size(); ++i )
  {
    if ( tokens[i] == text )
    {
      return static_cast<TruthValue6>( i );
    }
  }
  return std::nullopt;
}

} // namespace pctl
