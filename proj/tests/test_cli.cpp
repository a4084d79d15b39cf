#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hv/cli.hpp"
#include "hv/errors.hpp"
#include "hv/parse.hpp"

using namespace hv;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "hvcheck-tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "[L(2), L(-2)]"});
  CHECK(r.code == 0);
  CHECK(r.out == "4*L(0) + 1/2*C1\n");
  CHECK(run({"eval", "[L(2), L(-2)]", "--product", "lie-w00"}).out == "4*L(0)\n");
  CHECK(run({"eval", "L(1) o L(1)", "--epsilon", "(1+i)"}).out == "(-8/13+1/13i)*L(2)\n");
  CHECK(run({"eval", "2*[L(1), I(-1)] - (C1 + C1)"}).out == "2*I(0) - 4*C2 - 2*C1\n");
  CHECK(run({"eval", "L(1) o L(1)"}).code == 2);
  CHECK(run({"eval", "L(x)"}).code == 2);
  CHECK(run({"eval", "L(1) o L(1)", "--epsilon", "1"}).code == 2);
}

TEST_CASE("expressions") {
  ExpressionContext ctx;
  ctx.leftsym = LeftSymParams{Scalar(0), Scalar(0), Scalar(mpq_class(1), mpq_class(1))};
  CHECK(parse_expression("I(2) o I(-2)", ctx) == Element::C3(-1));
  CHECK(parse_expression("[L(1), [L(2), L(-3)]] + [L(2), [L(-3), L(1)]] + [L(-3), [L(1), L(2)]]").is_zero());
  CHECK(parse_expression("0") == Element());
  CHECK(parse_expression("-(L(1) + I(2))") == -(Element::L(1) + Element::I(2)));
  CHECK_THROWS_AS(parse_expression("[L(1), L(2)"), ParseError);
  CHECK_THROWS_AS(parse_expression("L(1) L(2)"), ParseError);
}

TEST_CASE("format and parse round trip on a corpus") {
  const std::vector<std::pair<std::string, std::string>> corpus = {
      {"L(1)", "L(1)"},
      {"  2 * L( -3 )", "2*L(-3)"},
      {"C1 + L(0)", "L(0) + C1"},
      {"3/2*L(-1) + (1+2i)*I(0) - C1", "3/2*L(-1) + (1+2i)*I(0) - C1"},
      {"L(1) - L(1)", "0"},
      {"-i*I(4) + 4/8*C3", "-i*I(4) + 1/2*C3"},
      {"(0+1i)*L(2)", "i*L(2)"},
      {"(3-0i)*C2 + C2", "4*C2"},
      {"-(1-i)*L(5)", "(-1+i)*L(5)"},
  };
  for (const auto& [text, canonical] : corpus) {
    CHECK(format_element(parse_element(text)) == canonical);
    CHECK(format_element(parse_element(canonical)) == canonical);
  }
}

TEST_CASE("check exit codes") {
  auto romega = write_temp("romega.bmap", "@romega { 0: 1 }\n");
  auto w = run({"check", "biderivation", "--map", romega, "--product", "lie-w00", "--window", "5"});
  CHECK(w.code == 0);
  auto hv = run({"check", "biderivation", "--map", romega, "--product", "lie-hv", "--window", "5"});
  CHECK(hv.code == 0);

  auto pl = run({"check", "postlie", "--product", romega, "--window", "3"});
  CHECK(pl.code == 1);
  CHECK(pl.out.find("(L(2), L(1), L(3)) post-lie-left: I(6)") != std::string::npos);

  auto id = write_temp("id.map", "@id 1\n");
  CHECK(run({"check", "derivation", "--map", id, "--window", "2"}).code == 1);
  auto inner = write_temp("inner.map", "@inner L(1) + 2*I(-1)\n");
  CHECK(run({"check", "derivation", "--map", inner, "--window", "3"}).code == 0);
  auto comm = write_temp("comm.map", "@id 2\n@central L(0) -> C1\n");
  CHECK(run({"check", "commuting", "--map", comm, "--window", "3"}).code == 0);
  CHECK(run({"check", "postlie", "--product", "@romega { }", "--window", "2"}).code == 0);

  auto partial = write_temp("partial.map", "L(0) -> C1\n");
  auto gap = run({"check", "commuting", "--map", partial, "--window", "2"});
  CHECK(gap.code == 3);
  CHECK(gap.err.find("domain not covered") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"check", "derivation", "--window", "2"}).code == 2);
  CHECK(run({"check", "derivation", "--map", "/nonexistent/file", "--window", "2"}).code == 2);
  auto m = write_temp("bad.map", "L(1) -> I(1)\nL(2) => I(2)\n");
  auto r = run({"check", "derivation", "--map", m, "--window", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("2:6") != std::string::npos);
  CHECK(run({"solve", "biderivations", "--window", "3", "--outbound", "5"}).code == 2);
  CHECK(run({"check", "commuting", "--map", m, "--window", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve and report commands") {
  auto s = run({"solve", "biderivations", "--product", "lie-w00", "--window", "3", "--outbound", "8", "--degree",
                "1", "--interior", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("interior: dimension 1") != std::string::npos);
  CHECK(s.out.find("classified-span: equal") != std::string::npos);
  CHECK(s.out.find("f(L(1),L(2)) : I(4) = ") != std::string::npos);

  auto q = run({"solve", "biderivations", "--algebra", "leftsym-quotient", "--epsilon", "(1+i)", "--window", "2",
                "--outbound", "4", "--degree", "0", "--interior", "1"});
  CHECK(q.code == 0);
  CHECK(q.out.find("interior: dimension 0") != std::string::npos);

  auto c = run({"solve", "commuting", "--window", "2", "--interior", "1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("generator-span: equal") != std::string::npos);

  auto l = run({"report", "leftsym", "--alpha", "1", "--beta", "2", "--epsilon", "(1+i)", "--window", "2"});
  CHECK(l.code == 0);
  CHECK(l.out.find("C3 stratum nonzero") != std::string::npos);

  auto d = write_temp("d.map", "@inner L(2)\n@d1 3\n");
  auto dec = run({"decompose", "--map", d, "--window", "5"});
  CHECK(dec.code == 0);
  CHECK(dec.out.find("inner: L(2)\na: 3\nb: 0\nc: 0\n") != std::string::npos);
}

TEST_CASE("reports are byte-identical across thread counts") {
  auto romega = write_temp("romega2.bmap", "@romega { 0: 1, 2: -1/3 }\n");
  const std::vector<std::vector<std::string>> commands = {
      {"check", "biderivation", "--map", romega, "--product", "lie-hv", "--window", "3"},
      {"check", "postlie", "--product", romega, "--window", "3", "--format", "machine"},
      {"solve", "biderivations", "--product", "lie-hv", "--window", "3", "--outbound", "8", "--degree", "0",
       "--interior", "2"},
      {"report", "leftsym", "--alpha", "1", "--beta", "2", "--epsilon", "(1+i)", "--window", "3"},
  };
  for (auto args : commands) {
    auto one = run(args);
    auto again = run(args);
    args.insert(args.end(), {"--threads", "4"});
    auto four = run(args);
    CHECK(one.out == again.out);
    CHECK(one.out == four.out);
    CHECK(one.code == four.code);
  }
}

TEST_CASE("machine format is one JSON record per line") {
  auto r = run({"check", "derivation", "--map", write_temp("id2.map", "@id 1\n"), "--window", "1", "--format",
                "machine"});
  CHECK(r.code == 1);
  std::istringstream in(r.out);
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(in, line)) records.push_back(nlohmann::json::parse(line));
  REQUIRE(records.size() >= 4);
  CHECK(records.front()["record"] == "run");
  CHECK(records[1]["record"] == "check");
  CHECK(records[2]["record"] == "counterexample");
  CHECK(records.back()["record"] == "exit");
  CHECK(records.back()["status"] == 1);
  CHECK(records[1]["counterexamples"].get<std::size_t>() == records.size() - 3);
}

TEST_CASE("the executable returns the documented exit codes") {
  auto status = [](const std::string& args) {
    std::string cmd = std::string(HVCHECK_PATH) + " " + args + " > /dev/null 2>&1";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("eval '[L(2), L(-2)]'") == 0);
  CHECK(status("check derivation --map " + write_temp("id3.map", "@id 1\n") + " --window 1") == 1);
  CHECK(status("eval 'L(x)'") == 2);
  CHECK(status("check commuting --map " + write_temp("p3.map", "L(0) -> C1\n") + " --window 1") == 3);
}
