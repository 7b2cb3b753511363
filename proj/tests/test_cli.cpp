#include <doctest.h>

#include <json.hpp>

#include "quadline/cli.hpp"
#include "quadline/errors.hpp"

using namespace quadline;
using namespace quadline::cli;

namespace {

Outcome call(std::vector<std::string> args)
{
  args.insert(args.begin(), "quadline");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

std::string out(std::vector<std::string> args)
{
  auto o = call(std::move(args));
  REQUIRE(o.exit_code == ExitOk);
  if (!o.out.empty() && o.out.back() == '\n')
    o.out.pop_back();
  return o.out;
}

}  // namespace

TEST_CASE("scalar results")
{
  CHECK(out({"pair", "1,0,0", "0,0,1"}) == "-2");
  CHECK(out({"norm", "1,1,-6"}) == "25");
  CHECK(out({"crossratio", "7", "1", "0", "inf"}) == "7");
  CHECK(out({"qcrossratio", "2", "1", "0", "inf"}) == "4");
  CHECK(out({"stabinv", "1", "-1", "0,1,0"}) == "1/2");
  CHECK(out({"--field", "f5", "pair", "1,2,3", "4,0,1"}) == "4");
}

TEST_CASE("structured results")
{
  CHECK(out({"zeros", "1,0,-1"}) == "-1 1");
  CHECK(out({"zeros", "1,0,1"}).empty());
  CHECK(out({"zeros", "0,1,0"}) == "0 inf");
  CHECK(out({"involution", "1,0,-1"}) == "0,1;1,0");
  CHECK(out({"apply", "1,1;0,1", "inf"}) == "inf");
  CHECK(out({"apply", "1,1;0,1", "2"}) == "3");
  CHECK(out({"decompose", "1,0,0;0,1,0;0,0,1"}) == "identity");
  CHECK(out({"decompose", "1,0;0,1"}) == "identity");
}

TEST_CASE("outputs re-parse and recompose")
{
  const auto t = out({"--field", "f5", "pgl2so", "1,1;0,1"});
  CHECK(out({"--field", "f5", "so2pgl", t}) == "1,1;0,1");

  const auto f5 = FieldSpec::prime(5);
  const auto pq = out({"--field", "f5", "decompose", t});
  const auto space = pq.find(' ');
  REQUIRE(space != std::string::npos);
  const auto p = parse_cycle(f5, pq.substr(0, space));
  const auto q = parse_cycle(f5, pq.substr(space + 1));
  CHECK(reflection(p) * reflection(q) == parse_orth(f5, t));

  const auto inv = out({"decompose", "2,1;1,3"});
  const auto sp = inv.find(' ');
  const auto Q = FieldSpec::rational();
  CHECK(involution(parse_cycle(Q, inv.substr(0, sp))) *
            involution(parse_cycle(Q, inv.substr(sp + 1))) ==
        parse_mobius(Q, "2,1;1,3"));

  const auto r = out({"reflect", "1,3,-2"});
  CHECK(parse_orth(Q, r) == reflection(parse_cycle(Q, "1,3,-2")));
}

TEST_CASE("domain errors exit 1")
{
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"involution", "1,-2,1"},
           {"reflect", "0,0,1"},
           {"crossratio", "1", "1", "0", "inf"},
           {"so2pgl", "1,1,0;0,1,0;0,0,1"},
           {"stabinv", "1", "1", "0,1,0"},
           {"zeros", "0,0,0"},
       })
  {
    INFO(args.front());
    const auto o = call(args);
    CHECK(o.exit_code == ExitDomainError);
    CHECK(o.out.empty());
    CHECK(o.err.rfind("error: ", 0) == 0);
  }
}

TEST_CASE("usage errors exit 2")
{
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"pair", "1,0,0"},
           {"pair", "1,0", "0,0,1"},
           {"--field", "f4", "norm", "1,0,0"},
           {"--field", "f5", "norm", "1/2,0,0"},
           {"verify"},
           {"--field", "f17", "verify"},
           {"apply", "1,0;0,1", "1,0,0"},
           {"crossratio", "1", "2", "3", "x"},
       })
  {
    const auto o = call(args);
    CHECK(o.exit_code == ExitUsage);
    CHECK_FALSE(o.err.empty());
  }
}

TEST_CASE("help exits 0")
{
  const auto o = call({"--help"});
  CHECK(o.exit_code == ExitOk);
  CHECK(o.out.find("decompose") != std::string::npos);
}

TEST_CASE("json output")
{
  const auto o = call({"--json", "qcrossratio", "2", "1", "0", "inf"});
  CHECK(o.exit_code == ExitOk);
  CHECK(o.out ==
        "{\"command\":\"qcrossratio\",\"inputs\":{\"field\":\"rational\",\"operands\":"
        "[\"2\",\"1\",\"0\",\"inf\"]},\"result\":\"4\"}\n");

  const auto z = nlohmann::json::parse(call({"--json", "zeros", "1,0,-1"}).out);
  CHECK(z["result"] == nlohmann::json::array({"-1", "1"}));

  const auto e = call({"--json", "involution", "1,-2,1"});
  CHECK(e.exit_code == ExitDomainError);
  CHECK(e.err.empty());
  const auto doc = nlohmann::json::parse(e.out);
  CHECK(doc["error"].is_string());
  CHECK_FALSE(doc.contains("result"));
}

TEST_CASE("verify command")
{
  const auto o = call({"--field", "f3", "verify"});
  CHECK(o.exit_code == ExitOk);
  CHECK(o.out.find("group_orders") != std::string::npos);

  const auto a = call({"--field", "f3", "--json", "verify"});
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["result"]["counts"]["so_size"] == 24);
  CHECK(doc["result"]["elapsed"].is_number());
}
