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

#include <doctest.h>

using namespace pctl;
using V = TruthValue6;

TEST_CASE( "ranks and tokens" )
{
  CHECK( all_truth_values.size() == 6 );
  for ( int r = 0; r < 6; ++r )
  {
    CHECK( rank( from_rank( r ) ) == r );
    CHECK( parse_token( token( from_rank( r ) ) ) == from_rank( r ) );
  }
  CHECK( token( V::False ) == "F" );
  CHECK( token( V::FalseDevice ) == "F-" );
  CHECK( token( V::FalseNow ) == "F." );
  CHECK( token( V::TrueNow ) == "T." );
  CHECK( token( V::TrueDevice ) == "T-" );
  CHECK( token( V::True ) == "T" );
  CHECK_FALSE( parse_token( "X" ) );
  CHECK_THROWS_AS( from_rank( 6 ), std::out_of_range );
  CHECK_THROWS_AS( from_rank( -1 ), std::out_of_range );
}

TEST_CASE( "conj and disj are min and max on the chain" )
{
  CHECK( conj( V::True, V::TrueNow ) == V::TrueNow );
  CHECK( conj( V::FalseDevice, V::TrueDevice ) == V::FalseDevice );
  CHECK( disj( V::FalseNow, V::FalseDevice ) == V::FalseNow );
  CHECK( disj( V::TrueNow, V::TrueDevice ) == V::TrueDevice );
  for ( const auto v : all_truth_values )
  {
    CHECK( conj( v, V::True ) == v );
    CHECK( disj( v, V::False ) == v );
  }
}

TEST_CASE( "negation and the Boolean collapse" )
{
  CHECK( neg( V::FalseNow ) == V::TrueNow );
  CHECK( neg( V::TrueDevice ) == V::FalseDevice );
  CHECK( to_bool( V::TrueNow ) );
  CHECK_FALSE( to_bool( V::FalseDevice ) );
  CHECK( from_bool( true ) == V::TrueNow );
  CHECK( from_bool( false ) == V::FalseNow );
  for ( const bool b : {false, true} )
  {
    CHECK( to_bool( from_bool( b ) ) == b );
  }
  for ( const auto v : all_truth_values )
  {
    CHECK( neg( neg( v ) ) == v );
    CHECK( rank( neg( v ) ) == 5 - rank( v ) );
    CHECK( to_bool( neg( v ) ) == !to_bool( v ) );
    CHECK( to_bool( v ) == ( rank( v ) >= 3 ) );
  }
}

TEST_CASE( "implication and equivalence expand through negation" )
{
  for ( const auto a : all_truth_values )
  {
    for ( const auto b : all_truth_values )
    {
      CHECK( implies( a, b ) == disj( neg( a ), b ) );
      CHECK( iff( a, b ) == conj( disj( neg( a ), b ), disj( neg( b ), a ) ) );
      CHECK( to_bool( implies( a, b ) ) == ( !to_bool( a ) || to_bool( b ) ) );
      CHECK( to_bool( iff( a, b ) ) == ( to_bool( a ) == to_bool( b ) ) );
    }
  }
}

TEST_CASE( "finality classes" )
{
  CHECK( is_global_final( V::True ) );
  CHECK( is_global_final( V::False ) );
  CHECK_FALSE( is_global_final( V::TrueDevice ) );
  CHECK_FALSE( is_global_final( V::FalseNow ) );
}
