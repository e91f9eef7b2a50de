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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pctl
{

/// Connectives of past-CTL.
///
/// Y/S are device-local; the A and E variants quantify over message paths.
/// P (previously) and H (historically) are derived from S-family operators.
enum class Op : std::uint8_t
{
  False,
  True,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Y,
  AY,
  EY,
  P,
  AP,
  EP,
  H,
  AH,
  EH,
  S,
  AS,
  ES,
};

inline constexpr int op_count = 20;

int arity( Op op ) noexcept;
std::string_view op_name( Op op ) noexcept;
std::optional<Op> op_from_name( std::string_view name ) noexcept;

bool is_core( Op op ) noexcept;
/// Y, EY, S, AS, ES: the connectives that read neighbour state.
bool is_temporal_core( Op op ) noexcept;

/// Source keywords reserved from atom names.
bool is_keyword( std::string_view word ) noexcept;
bool is_valid_atom_name( std::string_view name ) noexcept;

class FormulaError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Past-CTL syntax tree with value semantics.
struct Formula
{
  Op op = Op::True;
  std::string name;          ///< atom name, empty otherwise
  std::vector<Formula> args; ///< 0, 1 or 2 operands

  static Formula constant( bool value );
  /// Throws FormulaError for keywords and names outside [a-z][a-z0-9_]*.
  static Formula atom( std::string name );
  static Formula unary( Op op, Formula arg );
  static Formula binary( Op op, Formula lhs, Formula rhs );

  const Formula& lhs() const { return args.at( 0 ); }
  const Formula& rhs() const { return args.at( 1 ); }

  friend bool operator==( const Formula&, const Formula& ) = default;
};

// shorthands
Formula operator!( Formula f );
Formula operator&( Formula a, Formula b );
Formula operator|( Formula a, Formula b );

/// A formula that only uses the primitive connectives.
class CoreFormula
{
public:
  /// Throws FormulaError if `f` contains a derived connective.
  explicit CoreFormula( Formula f );

  const Formula& formula() const noexcept { return formula_; }
  Op op() const noexcept { return formula_.op; }

  friend bool operator==( const CoreFormula&, const CoreFormula& ) = default;

private:
  Formula formula_;
};

bool is_core( const Formula& f );

/// Rewrites derived connectives into Y, EY, S, AS, ES and the Boolean core.
CoreFormula expand( const Formula& f );

std::size_t connective_count( const Formula& f );
std::size_t leaf_count( const Formula& f );
std::size_t temporal_count( const Formula& f );
std::size_t depth( const Formula& f );
/// Atom names in first-occurrence order.
std::vector<std::string> atoms_of( const Formula& f );

/// Deterministic random formula of depth at most `max_depth`.
/// Every connective has positive probability at depth >= 2.
Formula random_formula( std::uint64_t seed, int max_depth, const std::vector<std::string>& atoms );

// ---------------------------------------------------------------------------
// concrete syntax

class ParseError : public FormulaError
{
public:
  ParseError( std::string message, std::size_t offset, std::vector<std::string> expected );

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Precedence, tightest first: unary, &, |, S/AS/ES (left), -> (right), <-> (left).
Formula parse( std::string_view text );

/// Minimal parentheses, except that operands of binary connectives which are
/// temporal unary applications are bracketed: "(EP b) S (AH f)".
std::string render( const Formula& f );

} // namespace pctl
