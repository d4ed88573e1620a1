#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

using namespace reesgor;
using namespace reesgor::testing;

namespace {

std::string corpus_path(const std::string& name) { return std::string(REESGOR_CORPUS_DIR) + "/" + name + ".ring"; }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("reesgor_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

}  // namespace

TEST(Document, RoundTripOnCorpus) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    std::string text = slurp(corpus_path(name));
    ASSERT_FALSE(text.empty());
    auto doc = parse_document(text);
    EXPECT_EQ(print_document(doc), text);
    EXPECT_EQ(parse_document(print_document(doc)), doc);
  }
}

TEST(Document, WhitespaceAndComments) {
  auto doc = parse_document("# a comment\n\nring  r\nvars x:1   y:2\n  char 7\nideal x^2*y ,y^2\nparams x, y\npower 3\nmode both shimoda\n");
  EXPECT_EQ(doc.name, "r");
  EXPECT_EQ(doc.vars, (std::vector<std::pair<std::string, int>>{{"x", 1}, {"y", 2}}));
  EXPECT_EQ(doc.characteristic, 7u);
  ASSERT_EQ(doc.ideal.size(), 2u);
  EXPECT_EQ(doc.ideal[0].text, "x^2*y");
  EXPECT_EQ(doc.ideal[1].column, 14);
  EXPECT_EQ(doc.power, 3);
  EXPECT_EQ(doc.mode, (std::vector<std::string>{"both", "shimoda"}));
  EXPECT_EQ(parse_document(print_document(doc)), doc);
}

TEST(Document, ErrorsCarryPositions) {
  auto expect_at = [](const std::string& text, int line, int col) {
    try {
      parse_document(text);
      FAIL() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_EQ(e.column(), col) << e.what();
    }
  };
  expect_at("ring r\nvars x y\nfoo 1\nparams x, y\n", 3, 1);
  expect_at("ring r\nvars x:z\nparams x\n", 2, 8);
  expect_at("ring r\nvars x\nparams x,, x\n", 3, 10);
  expect_at("ring r\nvars x\n", 3, 1);
  expect_at("ring r\nvars x x\nparams x\n", 2, 8);

  // Polynomial errors are located when the ring is built.
  auto doc = parse_document("ring r\nvars x y\nideal x*y, x + z\nparams x, y\n");
  try {
    build_instance(doc, PrimeField());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 16);
  }
  auto inh = parse_document("ring r\nvars x y\nideal x^2 + y\nparams x, y\n");
  try {
    build_instance(inh, PrimeField());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 7);
  }
}

TEST(Examples, RegenerateCorpusByteForByte) {
  for (const auto& name : corpus_names()) {
    SCOPED_TRACE(name);
    auto r = run({"examples", name});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, slurp(corpus_path(name)));
  }
}

TEST(Constructors, Relations) {
  auto hr = build_instance(parse_document(slurp(corpus_path("hochster_roberts"))), PrimeField());
  EXPECT_TRUE(hr.ring->is_zero(poly(hr.ring->ring(), "a*d - b*c")));
  EXPECT_EQ(hr.ring->dim(), 2);

  auto b = make_ring(F{}, {"x", "y"}, {1, 1});
  auto xy = build_idealization<F>("i", b, polys(b, {"x", "y"}));
  auto amb = polynomial_ring(xy.ring->ring());
  EXPECT_TRUE(ideals_equal(Ideal<F>(amb, xy.ring->relations()),
                           Ideal<F>(amb, polys(xy.ring->ring(), {"u^2", "u*v", "v^2", "x*v - y*u"}))));
  auto x2y3 = build_idealization<F>("i", b, polys(b, {"x^2", "y^3"}));
  auto amb2 = polynomial_ring(x2y3.ring->ring());
  EXPECT_TRUE(ideals_equal(Ideal<F>(amb2, x2y3.ring->relations()),
                           Ideal<F>(amb2, polys(x2y3.ring->ring(), {"u^2", "u*v", "v^2", "y^3*u - x^2*v"}))));
  EXPECT_EQ(x2y3.ring->ring()->weights(), (std::vector<int>{1, 1, 2, 3}));
  try {
    build_idealization<F>("i", b, polys(b, {"x", "x*y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotParameters);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", corpus_path("hochster_roberts")}).code, 0);
  EXPECT_EQ(run({"check", corpus_path("regular_base")}).code, 2);
  EXPECT_EQ(run({"check", corpus_path("regular_base"), "--mode", "oracle"}).code, 1);
  EXPECT_EQ(run({"check", corpus_path("regular_base"), "--mode", "both"}).code, 1);
  EXPECT_EQ(run({"check", corpus_path("two_planes_squares")}).code, 1);
  EXPECT_EQ(run({"buchsbaum", corpus_path("regular_base")}).code, 2);
  EXPECT_EQ(run({"buchsbaum", corpus_path("two_planes"), "--assume-buchsbaum"}).code, 0);

  auto bad = temp_file("bad.ring", "ring bad\nvars x y\nideal x*y\nparams x, (y\n");
  auto r = run({"check", bad});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;

  EXPECT_EQ(run({"check", "/nonexistent/file.ring"}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);

  // Resolution cap.
  EXPECT_EQ(run({"oracle", corpus_path("hochster_roberts"), "--resolution-cap", "1"}).code, 4);

  // Power other than d: the criteria do not apply, the oracle does.
  auto p3 = temp_file("hr3.ring", slurp(corpus_path("hochster_roberts")) + "power 3\n");
  EXPECT_EQ(run({"check", p3}).code, 2);
  EXPECT_EQ(run({"check", p3, "--mode", "oracle"}).code, 1);
  EXPECT_EQ(run({"oracle", p3}).code, 1);
}

TEST(Cli, RationalCoefficients) {
  auto r = run({"check", corpus_path("hochster_roberts"), "--char", "0", "--mode", "both"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ReportDocument::parse(r.out).get("verdict"), "true");
  auto t = run({"check", corpus_path("two_planes"), "--char", "0"});
  EXPECT_EQ(t.code, 0) << t.err;
}

TEST(Cli, ReportsConsistentWithExitCodes) {
  for (const auto& name : corpus_names()) {
    for (const std::string cmd : {"check", "oracle", "shimoda", "buchsbaum"}) {
      SCOPED_TRACE(name + " " + cmd);
      auto r = run({cmd, corpus_path(name), "--mode", cmd == "check" ? "both" : "criteria"});
      auto rep = ReportDocument::parse(r.out);
      EXPECT_EQ(ReportDocument::parse(rep.str()).str(), r.out);
      EXPECT_EQ(rep.get("exit_code"), std::to_string(r.code));
      if (r.code <= 1) {
        ASSERT_TRUE(rep.get("verdict").has_value());
        EXPECT_EQ(*rep.get("verdict"), r.code == 0 ? "true" : "false");
      } else {
        EXPECT_FALSE(rep.get("verdict").has_value());
        EXPECT_TRUE(rep.get("error").has_value());
      }
      for (const auto& [k, v] : rep.entries()) {
        if (k.ends_with("verdict") || k.ends_with(".cm") || k.ends_with(".gorenstein")) {
          EXPECT_TRUE(v == "true" || v == "false") << k;
        }
      }
    }
  }
}

TEST(Cli, ModeFromFile) {
  auto f = temp_file("tp_mode.ring", slurp(corpus_path("two_planes")) + "mode both shimoda buchsbaum\n");
  auto r = run({"check", f});
  EXPECT_EQ(r.code, 0) << r.err;
  auto rep = ReportDocument::parse(r.out);
  EXPECT_EQ(rep.get("mode"), "both");
  EXPECT_EQ(rep.get("oracle.gorenstein"), "true");
  EXPECT_EQ(rep.get("shimoda.verdict"), "true");
  EXPECT_EQ(rep.get("buchsbaum.verdict"), "true");
}

TEST(Cli, S2AndInvariants) {
  auto s = ReportDocument::parse(run({"s2", corpus_path("two_planes")}).out);
  EXPECT_EQ(s.get("presentation.connected"), "false");
  EXPECT_EQ(s.get("h1_length"), "1");
  auto h = ReportDocument::parse(run({"s2", corpus_path("hochster_roberts")}).out);
  EXPECT_EQ(h.get("presentation.connected"), "true");
  EXPECT_EQ(h.get("presentation.variables"), "5");
  auto inv = ReportDocument::parse(run({"invariants", corpus_path("hochster_roberts")}).out);
  EXPECT_EQ(inv.get("depth"), "1");
  EXPECT_EQ(inv.get("dim"), "2");
  EXPECT_EQ(inv.get("e_q"), "2");
}

TEST(Cli, OutFile) {
  auto p = (std::filesystem::temp_directory_path() / "reesgor_out.txt").string();
  std::filesystem::remove(p);
  auto r = run({"check", corpus_path("two_planes"), "--out", p});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(ReportDocument::parse(slurp(p)).get("verdict"), "true");
}
