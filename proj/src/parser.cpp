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

#include <cctype>

namespace pctl
{

ParseError::ParseError( std::string message, std::size_t offset, std::vector<std::string> expected )
    : FormulaError( std::move( message ) ), offset_( offset ), expected_( std::move( expected ) )
{
}

namespace
{

enum class Tok
{
  End,
  LParen,
  RParen,
  Bang,
  Amp,
  Bar,
  Arrow,
  DoubleArrow,
  Word,
};

struct Token
{
  Tok kind = Tok::End;
  std::string_view text;
  std::size_t offset = 0;
};

class Lexer
{
public:
  explicit Lexer( std::string_view src ) : src_( src ) {}

  Token next()
  {
    while ( pos_ < src_.size() && std::isspace( static_cast<unsigned char>( src_[pos_] ) ) )
    {
      ++pos_;
    }
    const auto start = pos_;
    if ( pos_ == src_.size() )
    {
      return {Tok::End, {}, start};
    }
    const char c = src_[pos_];
    const auto single = [&]( Tok k ) {
      ++pos_;
      return Token{k, src_.substr( start, 1 ), start};
    };
    switch ( c )
    {
    case '(':
      return single( Tok::LParen );
    case ')':
      return single( Tok::RParen );
    case '!':
      return single( Tok::Bang );
    case '&':
      return single( Tok::Amp );
    case '|':
      return single( Tok::Bar );
    default:
      break;
    }
    if ( src_.substr( pos_, 2 ) == "->" )
    {
      pos_ += 2;
      return {Tok::Arrow, src_.substr( start, 2 ), start};
    }
    if ( src_.substr( pos_, 3 ) == "<->" )
    {
      pos_ += 3;
      return {Tok::DoubleArrow, src_.substr( start, 3 ), start};
    }
    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      while ( pos_ < src_.size() &&
              ( std::isalnum( static_cast<unsigned char>( src_[pos_] ) ) || src_[pos_] == '_' ) )
      {
        ++pos_;
      }
      return {Tok::Word, src_.substr( start, pos_ - start ), start};
    }
    throw ParseError( "syntax error at offset " + std::to_string( start ) + ": unexpected character '" +
                          std::string( 1, c ) + "'",
                      start, {} );
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

std::optional<Op> unary_keyword( std::string_view w )
{
  if ( w == "Y" ) return Op::Y;
  if ( w == "AY" ) return Op::AY;
  if ( w == "EY" ) return Op::EY;
  if ( w == "P" ) return Op::P;
  if ( w == "AP" ) return Op::AP;
  if ( w == "EP" ) return Op::EP;
  if ( w == "H" ) return Op::H;
  if ( w == "AH" ) return Op::AH;
  if ( w == "EH" ) return Op::EH;
  return std::nullopt;
}

std::optional<Op> since_keyword( std::string_view w )
{
  if ( w == "S" ) return Op::S;
  if ( w == "AS" ) return Op::AS;
  if ( w == "ES" ) return Op::ES;
  return std::nullopt;
}

const std::vector<std::string> operand_start{"(", "!", "Y", "AY", "EY", "P", "AP", "EP", "H", "AH", "EH",
                                             "true", "false", "<atom>"};

class Parser
{
public:
  explicit Parser( std::string_view src ) : lex_( src ) { advance(); }

  Formula parse_all()
  {
    auto f = parse_iff();
    if ( cur_.kind != Tok::End )
    {
      fail( {"&", "|", "S", "AS", "ES", "->", "<->", "<end>"} );
    }
    return f;
  }

private:
  void advance() { cur_ = lex_.next(); }

  [[noreturn]] void fail( std::vector<std::string> expected ) const
  {
    std::string msg = "syntax error at offset " + std::to_string( cur_.offset ) + ": expected one of";
    for ( std::size_t i = 0; i < expected.size(); ++i )
    {
      msg += ( i == 0 ? " " : ", " ) + expected[i];
    }
    msg += cur_.kind == Tok::End ? "; found end of input" : "; found '" + std::string( cur_.text ) + "'";
    throw ParseError( std::move( msg ), cur_.offset, std::move( expected ) );
  }

  Formula parse_iff()
  {
    auto lhs = parse_implies();
    while ( cur_.kind == Tok::DoubleArrow )
    {
      advance();
      lhs = Formula::binary( Op::Iff, std::move( lhs ), parse_implies() );
    }
    return lhs;
  }

  Formula parse_implies()
  {
    auto lhs = parse_since();
    if ( cur_.kind == Tok::Arrow )
    {
      advance();
      return Formula::binary( Op::Implies, std::move( lhs ), parse_implies() );
    }
    return lhs;
  }

  Formula parse_since()
  {
    auto lhs = parse_or();
    while ( cur_.kind == Tok::Word )
    {
      const auto op = since_keyword( cur_.text );
      if ( !op )
      {
        break;
      }
      advance();
      lhs = Formula::binary( *op, std::move( lhs ), parse_or() );
    }
    return lhs;
  }

  Formula parse_or()
  {
    auto lhs = parse_and();
    while ( cur_.kind == Tok::Bar )
    {
      advance();
      lhs = lhs | parse_and();
    }
    return lhs;
  }

  Formula parse_and()
  {
    auto lhs = parse_unary();
    while ( cur_.kind == Tok::Amp )
    {
      advance();
      lhs = lhs & parse_unary();
    }
    return lhs;
  }

  Formula parse_unary()
  {
    if ( cur_.kind == Tok::Bang )
    {
      advance();
      return !parse_unary();
    }
    if ( cur_.kind == Tok::Word )
    {
      if ( const auto op = unary_keyword( cur_.text ) )
      {
        advance();
        return Formula::unary( *op, parse_unary() );
      }
    }
    return parse_primary();
  }

  Formula parse_primary()
  {
    if ( cur_.kind == Tok::LParen )
    {
      advance();
      auto f = parse_iff();
      if ( cur_.kind != Tok::RParen )
      {
        fail( {")"} );
      }
      advance();
      return f;
    }
    if ( cur_.kind != Tok::Word )
    {
      fail( operand_start );
    }
    const std::string word( cur_.text );
    if ( word == "true" || word == "false" )
    {
      advance();
      return Formula::constant( word == "true" );
    }
    if ( is_keyword( word ) )
    {
      throw ParseError( "syntax error at offset " + std::to_string( cur_.offset ) + ": reserved word '" + word +
                            "' cannot be used as an atom",
                        cur_.offset, operand_start );
    }
    if ( !is_valid_atom_name( word ) )
    {
      throw ParseError( "syntax error at offset " + std::to_string( cur_.offset ) + ": invalid atom name '" +
                            word + "' (atoms match [a-z][a-z0-9_]*)",
                        cur_.offset, operand_start );
    }
    advance();
    return Formula::atom( word );
  }

  Lexer lex_;
  Token cur_;
};

// binding strength, loosest first
enum Level : int
{
  LvIff = 1,
  LvImplies,
  LvSince,
  LvOr,
  LvAnd,
  LvUnary,
  LvLeaf,
};

int level( Op op )
{
  switch ( op )
  {
  case Op::Iff:
    return LvIff;
  case Op::Implies:
    return LvImplies;
  case Op::S:
  case Op::AS:
  case Op::ES:
    return LvSince;
  case Op::Or:
    return LvOr;
  case Op::And:
    return LvAnd;
  case Op::False:
  case Op::True:
  case Op::Atom:
    return LvLeaf;
  default:
    return LvUnary;
  }
}

bool is_modal_unary( Op op )
{
  return level( op ) == LvUnary && op != Op::Not;
}

void render_into( const Formula& f, std::string& out );

void render_operand( const Formula& f, int min_level, bool bracket_modal, std::string& out )
{
  const bool parens = level( f.op ) < min_level || ( bracket_modal && is_modal_unary( f.op ) );
  if ( parens )
  {
    out += '(';
  }
  render_into( f, out );
  if ( parens )
  {
    out += ')';
  }
}

void render_into( const Formula& f, std::string& out )
{
  switch ( f.op )
  {
  case Op::False:
    out += "false";
    return;
  case Op::True:
    out += "true";
    return;
  case Op::Atom:
    out += f.name;
    return;
  case Op::Not:
    out += '!';
    render_operand( f.lhs(), LvUnary, false, out );
    return;
  default:
    break;
  }
  const int lv = level( f.op );
  if ( lv == LvUnary )
  {
    out += op_name( f.op );
    out += ' ';
    render_operand( f.lhs(), LvUnary, false, out );
    return;
  }
  // implication is right-associative, everything else left-associative
  const bool right_assoc = f.op == Op::Implies;
  render_operand( f.lhs(), right_assoc ? lv + 1 : lv, true, out );
  out += ' ';
  out += op_name( f.op );
  out += ' ';
  render_operand( f.rhs(), right_assoc ? lv : lv + 1, true, out );
}

} // namespace

Formula parse( std::string_view text )
{
  return Parser( text ).parse_all();
}

std::string render( const Formula& f )
{
  std::string out;
  render_into( f, out );
  return out;
}

} // namespace pctl
