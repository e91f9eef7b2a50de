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

#include <pctl/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

int main( int argc, char** argv )
{
  using namespace pctl;
  CLI::App app{"pctl: past-CTL runtime monitors with predictive verdicts"};
  app.require_subcommand( 1 );
  const cli::Streams io{std::cout, std::cerr};
  int status = cli::Ok;

  const std::map<std::string, Mode> modes{{"two", Mode::TwoValued}, {"six", Mode::SixValued}};

  std::string config_path;
  std::string events_path;
  std::string out_path;
  std::uint64_t seed = 1;

  auto* scenario = app.add_subcommand( "scenario", "generate an event structure from a scenario config" );
  scenario->add_option( "--config", config_path, "scenario config (JSON)" )->required();
  scenario->add_option( "--seed", seed, "random seed" );
  scenario->add_option( "--out", out_path, "output file (stdout if omitted)" );
  scenario->callback( [&] { status = cli::cmd_scenario( config_path, seed, out_path, io ); } );

  cli::RunOptions run_opts;
  auto* run = app.add_subcommand( "run", "execute the synthesized monitor over an event structure" );
  run->add_option( "--formula", run_opts.formula, "formula text or preset name" )->required();
  run->add_option( "--events", run_opts.events_path, "event structure (JSON)" )->required();
  run->add_option( "--mode", run_opts.mode, "two | six" )
      ->transform( CLI::CheckedTransformer( modes, CLI::ignore_case ) );
  run->add_option( "--format", run_opts.format, "csv | json" );
  run->add_option( "--out", run_opts.out_path, "verdict table file (stdout if omitted)" );
  run->add_option( "--dot", run_opts.dot_path, "write the event DAG coloured by verdict" );
  run->add_option( "--trace", run_opts.trace_path, "write per-event inboxes and payloads (JSON)" );
  run->callback( [&] { status = cli::cmd_run( run_opts, io ); } );

  std::string formula;
  Mode mode = Mode::SixValued;
  std::string emit = "json";
  auto* compile = app.add_subcommand( "compile", "compile a formula into a monitor program" );
  compile->add_option( "--formula", formula, "formula text or preset name" )->required();
  compile->add_option( "--mode", mode, "two | six" )->transform( CLI::CheckedTransformer( modes, CLI::ignore_case ) );
  compile->add_option( "--emit", emit, "json | text" );
  compile->callback( [&] { status = cli::cmd_compile( formula, mode, emit, io ); } );

  auto* check = app.add_subcommand( "check", "cross-check monitors against the oracles" );
  check->add_option( "--formula", formula, "formula text or preset name" )->required();
  check->add_option( "--events", events_path, "event structure (JSON)" )->required();
  check->callback( [&] { status = cli::cmd_check( formula, events_path, io ); } );

  cli::FuzzOptions fuzz_opts;
  auto* fuzz = app.add_subcommand( "fuzz", "random structures and formulas against every invariant" );
  fuzz->add_option( "--iterations", fuzz_opts.iterations, "number of iterations" );
  fuzz->add_option( "--seed", fuzz_opts.seed, "base seed; iteration i uses seed + i" );
  fuzz->add_option( "--max-events", fuzz_opts.max_events, "events per structure" )->check( CLI::PositiveNumber );
  fuzz->add_option( "--max-devices", fuzz_opts.max_devices, "devices per structure" )->check( CLI::PositiveNumber );
  fuzz->add_option( "--max-depth", fuzz_opts.max_depth, "formula depth" )->check( CLI::PositiveNumber );
  fuzz->callback( [&] { status = cli::cmd_fuzz( fuzz_opts, io ); } );

  int rounds = 1;
  auto* extend = app.add_subcommand( "extend", "append rounds to an event structure" );
  extend->add_option( "--events", events_path, "event structure (JSON)" )->required();
  extend->add_option( "--config", config_path, "scenario config (JSON)" )->required();
  extend->add_option( "--seed", seed, "random seed" );
  extend->add_option( "--rounds", rounds, "rounds to append" );
  extend->add_option( "--out", out_path, "output file (stdout if omitted)" );
  extend->callback( [&] { status = cli::cmd_extend( events_path, config_path, seed, rounds, out_path, io ); } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? cli::Ok : cli::UsageError;
  }
  return status;
}
