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

#include <pctl/formula.hpp>

#include <algorithm>
#include <array>
#include <random>

namespace pctl
{

namespace
{

constexpr std::array<std::string_view, op_count> op_names{
    "false", "true", "atom", "!", "&", "|", "->", "<->", "Y", "AY",
    "EY",    "P",    "AP",   "EP", "H", "AH", "EH",  "S",  "AS", "ES"};

constexpr std::array<std::string_view, 14> keywords{
    "true", "false", "Y", "AY", "EY", "P", "AP", "EP", "H", "AH", "EH", "S", "AS", "ES"};

} // namespace

int arity( Op op ) noexcept
{
  switch ( op )
  {
  case Op::False:
  case Op::True:
  case Op::Atom:
    return 0;
  case Op::And:
  case Op::Or:
  case Op::Implies:
  case Op::Iff:
  case Op::S:
  case Op::AS:
  case Op::ES:
    return 2;
  default:
    return 1;
  }
}

std::string_view op_name( Op op ) noexcept
{
  return op_names[static_cast<std::size_t>( op )];
}

std::optional<Op> op_from_name( std::string_view name ) noexcept
{
  for ( std::size_t i = 0; i < op_names.size(); ++i )
  {
    if ( op_names[i] == name )
    {
      return static_cast<Op>( i );
    }
  }
  return std::nullopt;
}

bool is_core( Op op ) noexcept
{
  switch ( op )
  {
  case Op::Implies:
  case Op::Iff:
  case Op::AY:
  case Op::P:
  case Op::AP:
  case Op::EP:
  case Op::H:
  case Op::AH:
  case Op::EH:
    return false;
  default:
    return true;
  }
}

bool is_temporal_core( Op op ) noexcept
{
  return op == Op::Y || op == Op::EY || op == Op::S || op == Op::AS || op == Op::ES;
}

bool is_keyword( std::string_view word ) noexcept
{
  return std::find( keywords.begin(), keywords.end(), word ) != keywords.end();
}

bool is_valid_atom_name( std::string_view name ) noexcept
{
  if ( name.empty() || name[0] < 'a' || name[0] > 'z' || is_keyword( name ) )
  {
    return false;
  }
  return std::all_of( name.begin(), name.end(), []( char c ) {
    return ( c >= 'a' && c <= 'z' ) || ( c >= '0' && c <= '9' ) || c == '_';
  } );
}

Formula Formula::constant( bool value )
{
  return Formula{value ? Op::True : Op::False, {}, {}};
}

Formula Formula::atom( std::string name )
{
  if ( is_keyword( name ) )
  {
    throw FormulaError( "reserved word '" + name + "' cannot be used as an atom" );
  }
  if ( !is_valid_atom_name( name ) )
  {
    throw FormulaError( "invalid atom name '" + name + "'" );
  }
  return Formula{Op::Atom, std::move( name ), {}};
}

Formula Formula::unary( Op op, Formula arg )
{
  if ( arity( op ) != 1 )
  {
    throw FormulaError( "connective " + std::string( op_name( op ) ) + " is not unary" );
  }
  Formula f{op, {}, {}};
  f.args.push_back( std::move( arg ) );
  return f;
}

Formula Formula::binary( Op op, Formula lhs, Formula rhs )
{
  if ( arity( op ) != 2 )
  {
    throw FormulaError( "connective " + std::string( op_name( op ) ) + " is not binary" );
  }
  Formula f{op, {}, {}};
  f.args.reserve( 2 );
  f.args.push_back( std::move( lhs ) );
  f.args.push_back( std::move( rhs ) );
  return f;
}

Formula operator!( Formula f ) { return Formula::unary( Op::Not, std::move( f ) ); }
Formula operator&( Formula a, Formula b ) { return Formula::binary( Op::And, std::move( a ), std::move( b ) ); }
Formula operator|( Formula a, Formula b ) { return Formula::binary( Op::Or, std::move( a ), std::move( b ) ); }

bool is_core( const Formula& f )
{
  return is_core( f.op ) &&
         std::all_of( f.args.begin(), f.args.end(), []( const Formula& g ) { return is_core( g ); } );
}

CoreFormula::CoreFormula( Formula f ) : formula_( std::move( f ) )
{
  if ( !is_core( formula_ ) )
  {
    throw FormulaError( "formula uses derived connectives; expand it first" );
  }
}

namespace
{

Formula expand_rec( const Formula& f )
{
  const auto top = [] { return Formula::constant( true ); };
  const auto sub = [&]( std::size_t i ) { return expand_rec( f.args[i] ); };
  switch ( f.op )
  {
  case Op::False:
  case Op::True:
  case Op::Atom:
    return f;
  case Op::Implies:
    return ( !sub( 0 ) ) | sub( 1 );
  case Op::Iff:
  {
    auto a = sub( 0 );
    auto b = sub( 1 );
    return ( ( !a ) | b ) & ( ( !b ) | a );
  }
  case Op::AY:
    return !Formula::unary( Op::EY, !sub( 0 ) );
  case Op::P:
    return Formula::binary( Op::S, top(), sub( 0 ) );
  case Op::AP:
    return Formula::binary( Op::AS, top(), sub( 0 ) );
  case Op::EP:
    return Formula::binary( Op::ES, top(), sub( 0 ) );
  // negation swaps the path quantifier: AH = !EP!, EH = !AP!
  case Op::H:
    return !Formula::binary( Op::S, top(), !sub( 0 ) );
  case Op::AH:
    return !Formula::binary( Op::ES, top(), !sub( 0 ) );
  case Op::EH:
    return !Formula::binary( Op::AS, top(), !sub( 0 ) );
  default:
  {
    Formula g{f.op, {}, {}};
    g.args.reserve( f.args.size() );
    for ( std::size_t i = 0; i < f.args.size(); ++i )
    {
      g.args.push_back( sub( i ) );
    }
    return g;
  }
  }
}

} // namespace

CoreFormula expand( const Formula& f )
{
  return CoreFormula( expand_rec( f ) );
}

std::size_t connective_count( const Formula& f )
{
  std::size_t n = f.args.empty() ? 0u : 1u;
  for ( const auto& g : f.args )
  {
    n += connective_count( g );
  }
  return n;
}

std::size_t leaf_count( const Formula& f )
{
  if ( f.args.empty() )
  {
    return 1;
  }
  std::size_t n = 0;
  for ( const auto& g : f.args )
  {
    n += leaf_count( g );
  }
  return n;
}

std::size_t temporal_count( const Formula& f )
{
  std::size_t n = is_temporal_core( f.op ) ? 1u : 0u;
  for ( const auto& g : f.args )
  {
    n += temporal_count( g );
  }
  return n;
}

std::size_t depth( const Formula& f )
{
  std::size_t d = 0;
  for ( const auto& g : f.args )
  {
    d = std::max( d, depth( g ) );
  }
  return d + 1;
}

namespace
{
void collect_atoms( const Formula& f, std::vector<std::string>& out )
{
  if ( f.op == Op::Atom && std::find( out.begin(), out.end(), f.name ) == out.end() )
  {
    out.push_back( f.name );
  }
  for ( const auto& g : f.args )
  {
    collect_atoms( g, out );
  }
}
} // namespace

std::vector<std::string> atoms_of( const Formula& f )
{
  std::vector<std::string> out;
  collect_atoms( f, out );
  return out;
}

namespace
{

class FormulaSampler
{
public:
  FormulaSampler( std::uint64_t seed, const std::vector<std::string>& atoms ) : rng_( seed ), atoms_( atoms ) {}

  Formula sample( int depth_left )
  {
    if ( depth_left <= 1 || below( 4 ) == 0 )
    {
      return leaf();
    }
    // every non-leaf connective, uniformly
    const auto op = static_cast<Op>( 3 + below( op_count - 3 ) );
    if ( arity( op ) == 1 )
    {
      return Formula::unary( op, sample( depth_left - 1 ) );
    }
    auto lhs = sample( depth_left - 1 );
    auto rhs = sample( depth_left - 1 );
    return Formula::binary( op, std::move( lhs ), std::move( rhs ) );
  }

private:
  Formula leaf()
  {
    const auto r = below( 10 );
    if ( r == 0 )
    {
      return Formula::constant( false );
    }
    if ( r == 1 )
    {
      return Formula::constant( true );
    }
    return Formula::atom( atoms_[below( atoms_.size() )] );
  }

  // modulo reduction of a 64-bit draw; the bias is negligible for our ranges
  std::size_t below( std::size_t n ) { return static_cast<std::size_t>( rng_() % n ); }

  std::mt19937_64 rng_;
  const std::vector<std::string>& atoms_;
};

} // namespace

Formula random_formula( std::uint64_t seed, int max_depth, const std::vector<std::string>& atoms )
{
  if ( max_depth < 1 )
  {
    throw FormulaError( "random_formula: max_depth must be at least 1" );
  }
  if ( atoms.empty() )
  {
    throw FormulaError( "random_formula: atom list is empty" );
  }
  return FormulaSampler( seed, atoms ).sample( max_depth );
}

} // namespace pctl
