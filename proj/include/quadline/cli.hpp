#pragma once

#include <string>
#include <variant>
#include <vector>

#include "quadline/transform.hpp"

namespace quadline::cli {

// Exit statuses of the command-line tool.
enum ExitCode : int
{
  ExitOk = 0,
  ExitDomainError = 1,
  ExitUsage = 2,
  ExitCheckFailed = 3,
  ExitInternal = 70,
};

using Operand = std::variant<Cycle, ProjPoint, OrthMap, MobiusMap>;

struct Command
{
  std::string name;
  FieldSpec field = FieldSpec::rational();
  bool json = false;
  std::vector<std::string> literals;  // operands as typed
  std::vector<Operand> operands;      // the same, parsed
};

// Thrown by parse_args for --help; carries the help text.
struct HelpRequested
{
  std::string text;
};

// Throws ParseError with a one-line reason for unknown commands, malformed
// literals, wrong operand counts and invalid fields.
Command parse_args(int argc, const char* const* argv);

struct Outcome
{
  int exit_code = ExitOk;
  std::string out;
  std::string err;
};

Outcome execute(const Command& cmd);

// parse_args + execute, mapping parse failures to ExitUsage.
Outcome run(int argc, const char* const* argv);

}  // namespace quadline::cli
