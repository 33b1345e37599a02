#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "slie/cli.hpp"
#include "slie/io.hpp"
#include "support.hpp"

using namespace slie;
using namespace slie::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/slie_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("parse the three-dimensional Heisenberg algebra") {
  auto a = parse_algebra("superalgebra H10\neven x1 x2 z\nodd\n[x1,x2] = z\n");
  CHECK(a.name() == "H10");
  CHECK(a.dim() == GradedDim{3, 0});
  CHECK(recognize(a) == FamilyDescriptor::even_heisenberg(1, 0));
  CHECK(a.structure(1, 0) == vec({0, 0, -1}));
}

TEST_CASE("parse rational combinations") {
  auto a = parse_algebra(
      "superalgebra L9\neven x1 x2\nodd x3 x4\n[x3,x3]=x1\n[x4,x4]=x2\n[x3,x4]= 1/2 x1 + 1/2 x2\n");
  auto l9 = entry("L9_2_2");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(a.structure(i, j) == l9.structure(i, j));
}

TEST_CASE("parse accepts signs, comments and repeated terms") {
  auto a = parse_algebra(
      "# comment\nsuperalgebra S  # trailing\neven a b c\nodd\n\n[a,b] = -c\n[a,c] = 0\n[b,c] = 2 a - a + -1 a\n");
  CHECK(a.structure(0, 1) == vec({0, 0, -1}));
  CHECK(is_zero(a.structure(1, 2)));
}

TEST_CASE("parse errors name the line") {
  auto fails = [](const std::string& doc, const std::string& needle) {
    try {
      parse_algebra(doc);
    } catch (const ParseError& ex) {
      CAPTURE(ex.what());
      CHECK(std::string(ex.what()).find(needle) != std::string::npos);
      return;
    }
    FAIL("no error for: " << doc);
  };
  const std::string head = "superalgebra T\neven x1 x2 x3\nodd y\n";
  fails(head + "[x1,x2]=x3\n[x2,x1]=x3\n", "line 5: skew-symmetry");
  fails(head + "[x1,x2]=x3\n[x1,x2]=x3\n", "line 5: duplicate bracket");
  fails(head + "[x1,q]=x3\n", "line 4: unknown basis name 'q'");
  fails(head + "[x1,x2]=1/0 x3\n", "zero denominator");
  fails(head + "[x1,x2]=1/2/3 x3\n", "malformed rational");
  fails(head + "[x1,x2]=y\n", "line 4: grading");
  fails(head + "[x1,x1]=x2\n", "line 4: skew-symmetry");
  fails(head + "x1 x2\n", "line 4: expected '[a,b] = ...'");
  fails("even x1\n", "expected 'superalgebra' line");
  fails("superalgebra T\neven x x\nodd\n", "duplicate");
}

TEST_CASE("lenient parsing keeps violations for inspection") {
  const std::string doc = "superalgebra T\neven x1\nodd y1 y2\n[y1,y2]=y1\n";
  CHECK_THROWS_AS(parse_algebra(doc), ParseError);
  auto a = parse_algebra(doc, ParseMode::Lenient);
  CHECK(validate(a).front().axiom == "grading");
}

TEST_CASE("print then parse is the identity on the catalog") {
  for (const auto& e : load_catalog()) {
    CAPTURE(e.id);
    const auto text = print_algebra(e.algebra);
    auto back = parse_algebra(text, ParseMode::Lenient);
    CHECK(back == e.algebra);
    CHECK(print_algebra(back) == text);
  }
}

TEST_CASE("canonical printing") {
  CHECK(print_algebra(entry("L9_2_2")) ==
        "superalgebra L9_2_2\neven x1 x2\nodd x3 x4\n[x3,x3] = x1\n[x3,x4] = 1/2 x1 + 1/2 x2\n[x4,x4] = x2\n");
  CHECK(print_algebra(entry("L22_4_1")).find("[x2,x4] = -1 x1") != std::string::npos);
}

TEST_CASE("parse_vector forms") {
  auto a = entry("L9_2_2");
  CHECK(parse_vector(a, "x1 + 1/2 x2") == Vector{Scalar(1), Scalar(1, 2), Scalar(0), Scalar(0)});
  CHECK(parse_vector(a, "0, -1, 2/3, 0") == Vector{Scalar(0), Scalar(-1), Scalar(2, 3), Scalar(0)});
  CHECK_THROWS_AS(parse_vector(a, "1, 2"), ParseError);
}

TEST_CASE("multiplier command") {
  auto r = cli({"multiplier", "catalog:L27_3_2", "--method", "all"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "dim_total: 4"));
  CHECK(has_line(r.out, "agree: yes"));
  CHECK(has_line(r.out, "tags_free_generators: m2[x1,x3], m3[x1,x4], m7[x2,x5], m12[x5,x5]"));

  auto f = cli({"multiplier", "catalog:L7_3_1", "--method", "formula"});
  CHECK(f.code == 0);
  CHECK(has_line(f.out, "dim: (1|2)"));
  CHECK(has_line(f.out, "family: H(1,1)"));
  CHECK(cli({"multiplier", "catalog:L27_3_2", "--method", "formula"}).code == 1);
  CHECK(cli({"multiplier", "catalog:L27_3_2", "--method", "bogus"}).code == 2);
}

TEST_CASE("capability command") {
  auto r = cli({"capability", "catalog:L2_3_0"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "status: Capable"));
  CHECK(has_line(r.out, "rule: heisenberg-even-m1n0"));

  auto w = cli({"capability", "catalog:L10_2_2", "--grid", "1"});
  CHECK(has_line(w.out, "status: NonCapable"));
  CHECK(has_line(w.out, "rule: epicenter-witness"));
  CHECK(has_line(w.out, "witness: x1"));
  CHECK(has_line(w.out, "grid_bound: 1"));

  auto l9 = cli({"capability", "catalog:L9_2_2"});
  CHECK(has_line(l9.out, "status: Capable"));
  CHECK(has_line(l9.out, "cross_check: exact epicenter (0|0) -> Capable"));

  auto l22 = cli({"capability", "catalog:L22_4_1"});
  CHECK(l22.code == 1);
  CHECK(l22.err.find("not nilpotent") != std::string::npos);
}

TEST_CASE("validate and invariants commands") {
  CHECK(cli({"validate", "catalog:L44_2_3"}).code == 0);
  auto bad = cli({"validate", "catalog:L39_1_4"});
  CHECK(bad.code == 1);
  CHECK(has_line(bad.out, "status: FAIL"));
  auto inv = cli({"invariants", "catalog:L45_2_3"});
  CHECK(inv.code == 0);
  CHECK(has_line(inv.out, "nilpotency_class: 3"));
  CHECK(has_line(inv.out, "lcs_3: (0|1)"));
  CHECK(has_line(inv.out, "center_basis: x2; x3"));
  auto nn = cli({"invariants", "catalog:L22_4_1"});
  CHECK(has_line(nn.out, "nilpotency_class: not nilpotent"));
}

TEST_CASE("quotient and dsum commands") {
  auto q = cli({"quotient", "catalog:L24_3_2", "--ideal", "x3"});
  CHECK(q.code == 0);
  auto qa = parse_algebra(q.out);
  CHECK(recognize(qa) == FamilyDescriptor::heisenberg_plus_abelian(FamilyDescriptor::odd_heisenberg(1), {1, 0}));
  auto q2 = cli({"quotient", "catalog:L9_2_2", "--ideal", "1,0,0,0; 0,1,0,0"});
  CHECK(parse_algebra(q2.out).is_abelian());
  CHECK(cli({"quotient", "catalog:L24_3_2", "--ideal", "x1"}).code == 1);

  const auto h = temp_file("h.alg", "superalgebra H\neven x1 x2 z\nodd\n[x1,x2] = z\n");
  auto s = cli({"dsum", h, "catalog:L1_1_1"});
  CHECK(s.code == 0);
  auto sa = parse_algebra(s.out);
  CHECK(sa.dim() == GradedDim{4, 1});
  CHECK(derived(sa).dim().total() == 2);
  std::remove(h.c_str());
}

TEST_CASE("catalog commands") {
  auto list = cli({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("L44_2_3: dim (2|3), group 3, expected Capable, multiplier 4") != std::string::npos);
  auto show = cli({"catalog", "show", "L1p_1_2"});
  CHECK(show.code == 0);
  CHECK(parse_algebra(show.out) == entry("L1p_2_1"));
  CHECK(cli({"catalog", "show", "nope"}).code == 1);
  auto one = cli({"catalog", "verify", "--id", "L27_3_2"});
  CHECK(one.code == 1);
  CHECK(has_line(one.out, "status: FAIL"));
  auto ok = cli({"catalog", "verify", "--id", "L24_3_2"});
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "passed: 1"));
}

TEST_CASE("usage and input errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"validate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  auto missing = cli({"validate", "/nonexistent/file.alg"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("cannot read") != std::string::npos);
  CHECK(cli({"validate", "catalog:L99_9_9"}).code == 1);
}

TEST_CASE("reports are deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"catalog", "verify"},
                                        {"capability", "catalog:L37_2_3"},
                                        {"multiplier", "catalog:L46_2_3", "--method", "all"},
                                        {"invariants", "catalog:L9_2_2"}}) {
    auto a = cli(args), b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
