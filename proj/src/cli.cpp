#include "quadline/cli.hpp"

#include <algorithm>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadline/errors.hpp"
#include "quadline/invariants.hpp"
#include "quadline/verify.hpp"

namespace quadline::cli {

namespace {

using nlohmann::ordered_json;

enum class Kind
{
  Cycle,
  Point,
  Orth,
  Mobius,
  Matrix,          // 3x3 or 2x2, told apart by the row count
  CycleOrPoint,
};

struct Signature
{
  const char* name;
  const char* help;
  std::vector<Kind> operands;
};

const std::vector<Signature>& signatures()
{
  static const std::vector<Signature> table{
      {"pair", "cycle pairing of two cycles", {Kind::Cycle, Kind::Cycle}},
      {"norm", "norm (discriminant) of a cycle", {Kind::Cycle}},
      {"zeros", "zero points of a cycle", {Kind::Cycle}},
      {"reflect", "reflection matrix of a nonisotropic cycle", {Kind::Cycle}},
      {"involution", "involution of the line attached to a cycle", {Kind::Cycle}},
      {"apply", "apply a 3x3 or 2x2 matrix to a cycle or point", {Kind::Matrix, Kind::CycleOrPoint}},
      {"so2pgl", "projective map induced by an orthogonal matrix", {Kind::Orth}},
      {"pgl2so", "special orthogonal matrix of a projective map", {Kind::Mobius}},
      {"decompose", "two reflections (3x3) or two involutions (2x2)", {Kind::Matrix}},
      {"crossratio", "classical cross ratio [x,y;z,t]", {Kind::Point, Kind::Point, Kind::Point, Kind::Point}},
      {"qcrossratio", "cross ratio on the quadric", {Kind::Point, Kind::Point, Kind::Point, Kind::Point}},
      {"stabinv", "<x,p><y,p>/<x,y> for points x, y and cycle p", {Kind::Point, Kind::Point, Kind::Cycle}},
      {"verify", "exhaustive finite-field certificate (needs --field f<q>, q <= 13)", {}},
  };
  return table;
}

Operand parse_operand(const FieldSpec& field, Kind kind, const std::string& text)
{
  switch (kind)
  {
    case Kind::Cycle: return parse_cycle(field, text);
    case Kind::Point: return parse_point(field, text);
    case Kind::Orth: return parse_orth(field, text);
    case Kind::Mobius: return parse_mobius(field, text);
    case Kind::Matrix:
      if (std::count(text.begin(), text.end(), ';') == 2)
        return parse_orth(field, text);
      return parse_mobius(field, text);
    case Kind::CycleOrPoint:
      if (text.find(',') != std::string::npos)
        return parse_cycle(field, text);
      return parse_point(field, text);
  }
  throw ParseError("unknown operand kind");
}

std::string points_text(const std::vector<ProjPoint>& points)
{
  std::string out;
  for (const auto& p : points)
    out += (out.empty() ? "" : " ") + p.to_string();
  return out;
}

ordered_json points_json(const std::vector<ProjPoint>& points)
{
  auto arr = ordered_json::array();
  for (const auto& p : points)
    arr.push_back(p.to_string());
  return arr;
}

// Result of a command: its text rendering and its JSON value.
struct Value
{
  std::string text;
  ordered_json json;
};

Value scalar_value(const Scalar& s)
{
  return {s.to_string(), s.to_string()};
}

Value literal_value(const std::string& s)
{
  return {s, s};
}

class InternalFault : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

Value decompose_value(const Operand& operand)
{
  if (const auto* t = std::get_if<OrthMap>(&operand))
  {
    const auto pq = decompose_two_reflections(*t);
    if (!pq)
      return literal_value("identity");
    if (!(reflection(pq->first) * reflection(pq->second) == *t))
      throw InternalFault("decomposition of " + t->to_string() + " does not recompose");
    return {pq->first.to_string() + " " + pq->second.to_string(),
            ordered_json::array({pq->first.to_string(), pq->second.to_string()})};
  }
  const auto& m = std::get<MobiusMap>(operand);
  const auto pq = mobius_as_two_involutions(m);
  if (!pq)
    return literal_value("identity");
  if (!(involution(pq->first) * involution(pq->second) == m))
    throw InternalFault("decomposition of " + m.to_string() + " does not recompose");
  return {pq->first.to_string() + " " + pq->second.to_string(),
          ordered_json::array({pq->first.to_string(), pq->second.to_string()})};
}

Value apply_value(const Operand& matrix, const Operand& target)
{
  if (const auto* t = std::get_if<OrthMap>(&matrix))
  {
    if (const auto* c = std::get_if<Cycle>(&target))
      return literal_value(apply_orth(*t, *c).to_string());
    return literal_value(act_on_point(*t, std::get<ProjPoint>(target)).to_string());
  }
  const auto& m = std::get<MobiusMap>(matrix);
  if (std::holds_alternative<Cycle>(target))
    throw DomainError("a 2x2 matrix acts on points, not cycles");
  return literal_value(apply_mobius(m, std::get<ProjPoint>(target)).to_string());
}

Value evaluate(const Command& cmd, int& exit_code)
{
  const auto& ops = cmd.operands;
  const auto& name = cmd.name;
  auto cycle = [&](std::size_t i) -> const Cycle& { return std::get<Cycle>(ops[i]); };
  auto point = [&](std::size_t i) -> const ProjPoint& { return std::get<ProjPoint>(ops[i]); };

  if (name == "pair")
    return scalar_value(pair(cycle(0), cycle(1)));
  if (name == "norm")
    return scalar_value(norm(cycle(0)));
  if (name == "zeros")
  {
    const auto zs = zero_points(cycle(0));
    return {points_text(zs), points_json(zs)};
  }
  if (name == "reflect")
    return literal_value(reflection(cycle(0)).to_string());
  if (name == "involution")
    return literal_value(involution(cycle(0)).to_string());
  if (name == "apply")
    return apply_value(ops[0], ops[1]);
  if (name == "so2pgl")
    return literal_value(so_to_pgl(std::get<OrthMap>(ops[0])).to_string());
  if (name == "pgl2so")
    return literal_value(pgl_to_so(std::get<MobiusMap>(ops[0])).to_string());
  if (name == "decompose")
    return decompose_value(ops[0]);
  if (name == "crossratio")
    return scalar_value(classical_cross_ratio(point(0), point(1), point(2), point(3)));
  if (name == "qcrossratio")
    return scalar_value(quadric_cross_ratio(point(0), point(1), point(2), point(3)));
  if (name == "stabinv")
    return scalar_value(stabilizer_invariant(point(0), point(1), cycle(2)));
  if (name == "verify")
  {
    const auto report = verify::run_all(cmd.field.characteristic());
    if (!report.passed())
      exit_code = ExitCheckFailed;
    auto text = verify::to_text(report);
    if (!text.empty() && text.back() == '\n')
      text.pop_back();
    return {text, ordered_json::parse(verify::to_json(report))};
  }
  throw ParseError("unknown command '" + name + "'");
}

ordered_json inputs_json(const Command& cmd)
{
  return {{"field", cmd.field.to_string()}, {"operands", cmd.literals}};
}

}  // namespace

Command parse_args(int argc, const char* const* argv)
{
  CLI::App app{"Exact cycle-space geometry of the projective line", "quadline"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field_text = "rational";
  bool json = false;
  app.add_option("--field", field_text, "coordinate field: rational (default) or f<p>");
  app.add_flag("--json", json, "print a single JSON object");

  std::vector<std::string> literals;
  for (const auto& sig : signatures())
  {
    auto* sub = app.add_subcommand(sig.name, sig.help);
    if (!sig.operands.empty())
      sub->add_option("operands", literals, "operand literals");
  }

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp&)
  {
    throw HelpRequested{app.help()};
  }
  catch (const CLI::CallForAllHelp&)
  {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  }
  catch (const CLI::ParseError& e)
  {
    throw ParseError(e.what());
  }

  Command cmd;
  cmd.name = app.get_subcommands().front()->get_name();
  cmd.field = FieldSpec::parse(field_text);
  cmd.json = json;
  cmd.literals = literals;

  const auto& sig = *std::find_if(signatures().begin(), signatures().end(),
                                  [&](const Signature& s) { return cmd.name == s.name; });
  if (literals.size() != sig.operands.size())
    throw ParseError(cmd.name + " expects " + std::to_string(sig.operands.size()) +
                     " operand(s), got " + std::to_string(literals.size()));
  for (std::size_t i = 0; i < literals.size(); ++i)
    cmd.operands.push_back(parse_operand(cmd.field, sig.operands[i], literals[i]));

  if (cmd.name == "verify")
  {
    const auto q = cmd.field.characteristic();
    if (cmd.field.is_rational() || q > verify::max_exhaustive_q)
      throw ParseError("verify needs --field f<q> with q an odd prime <= " +
                       std::to_string(verify::max_exhaustive_q));
  }
  if (cmd.name == "apply" && std::holds_alternative<MobiusMap>(cmd.operands[0]) &&
      std::holds_alternative<Cycle>(cmd.operands[1]))
    throw ParseError("a 2x2 matrix acts on points, not cycles");
  return cmd;
}

Outcome execute(const Command& cmd)
{
  Outcome outcome;
  ordered_json doc{{"command", cmd.name}, {"inputs", inputs_json(cmd)}};
  try
  {
    int exit_code = ExitOk;
    const auto value = evaluate(cmd, exit_code);
    outcome.exit_code = exit_code;
    doc["result"] = value.json;
    outcome.out = cmd.json ? doc.dump() + "\n" : value.text + "\n";
    return outcome;
  }
  catch (const InternalFault& e)
  {
    outcome.exit_code = ExitInternal;
    doc["error"] = std::string("internal: ") + e.what();
    outcome.err = std::string("internal error: ") + e.what() + "\n";
  }
  catch (const ParseError& e)
  {
    outcome.exit_code = ExitUsage;
    doc["error"] = e.what();
    outcome.err = std::string("error: ") + e.what() + "\n";
  }
  catch (const Error& e)
  {
    outcome.exit_code = ExitDomainError;
    doc["error"] = e.what();
    outcome.err = std::string("error: ") + e.what() + "\n";
  }
  if (cmd.json)
  {
    outcome.out = doc.dump() + "\n";
    outcome.err.clear();
  }
  return outcome;
}

Outcome run(int argc, const char* const* argv)
{
  try
  {
    return execute(parse_args(argc, argv));
  }
  catch (const HelpRequested& help)
  {
    return {ExitOk, help.text, ""};
  }
  catch (const ParseError& e)
  {
    return {ExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
  catch (const Error& e)
  {
    return {ExitDomainError, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace quadline::cli
