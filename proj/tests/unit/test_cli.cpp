#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polycontact/cli/commands.hpp"
#include "polycontact/cli/evaluator.hpp"
#include "polycontact/render.hpp"
#include "polycontact/susy.hpp"

using namespace polycontact;
using namespace polycontact::cli;

namespace {

const Workspace& ws() { return Workspace::shared(); }

std::string eval_plain(const std::string& text) { return render(evaluate(text, ws())); }

std::vector<std::string> corpus() {
  std::ifstream in(POLYCONTACT_CORPUS);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("lexer") {
  auto toks = tokenize("i_(D1, 3/4*dth1)^2 @x0");
  std::vector<TokenKind> kinds;
  for (const auto& t : toks) kinds.push_back(t.kind);
  CHECK(kinds == std::vector<TokenKind>{TokenKind::ident, TokenKind::lparen, TokenKind::ident, TokenKind::comma,
                                        TokenKind::number, TokenKind::star, TokenKind::ident, TokenKind::rparen,
                                        TokenKind::caret, TokenKind::number, TokenKind::frame, TokenKind::end});
  CHECK(toks[4].text == "3/4");
  CHECK(toks[10].text == "x0");
  CHECK(toks[10].span.column == 20);
  CHECK_THROWS_AS(tokenize("x0 $ x1"), SyntaxError);
  try {
    tokenize("x0 +\n  2/ ");
    FAIL("expected a lexical error");
  } catch (const SyntaxError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 3);
  }
}

TEST_CASE("parser precedence") {
  auto tree = [](const char* s) { return print(*parse_expression(s, ws())); };
  CHECK(tree("x0 + x1*x2^2") == "x0 + x1*x2^2");
  CHECK(tree("(x0 + x1)*x2") == "(x0 + x1)*x2");
  CHECK(tree("-x0*x1") == "-x0*x1");
  CHECK(tree("(-x0)*x1") == "(-x0)*x1");
  CHECK(tree("x0 - (x1 - x2)") == "x0 - (x1 - x2)");
  CHECK(tree("((x0 - x1)) - x2") == "x0 - x1 - x2");
  CHECK(tree("r^(-1)") == "r^(-1)");
  CHECK(tree("r^-2") == "r^(-2)");
  CHECK(tree("exp(2*l)") == "exp(2*l)");
  CHECK(tree("[Q1,Qb1]") == "[Q1, Qb1]");
  CHECK(tree("i_(D1,alpha)") == "i_(D1, alpha)");
  CHECK(parse_expression("-x0*x1", ws())->kind == NodeKind::negate);
  CHECK(parse_expression("x0^2*x1", ws())->kind == NodeKind::product);
  CHECK(parse_expression("dth1 * thb1", ws())->kind == NodeKind::product);
  CHECK(parse_expression("i_(D1, alpha)", ws())->kind == NodeKind::interior);
  CHECK(parse_expression("[Q1, Qb1]", ws())->kind == NodeKind::bracket);
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const char* s) -> Span {
    try {
      parse_expression(s, ws());
    } catch (const SyntaxError& e) {
      return e.span();
    }
    FAIL("no error for " << s);
    return {};
  };
  CHECK(error_at("x0 + foo").column == 6);
  CHECK(error_at("x0 x1").column == 4);      // juxtaposition is not a product
  CHECK(error_at("x0 * -x1").column == 6);   // negative factors need parentheses
  CHECK(error_at("i_(D1 alpha)").column == 7);
  CHECK(error_at("@q").column == 1);
  CHECK(error_at("x0^1/2").column == 4);
  CHECK(error_at("(x0 + x1").column == 9);
  CHECK(error_at("x0 +\n  bogus").line == 2);
}

TEST_CASE("evaluation examples") {
  const Chart& c = ws().chart();
  CHECK(std::get<SuperPoly>(evaluate("dth1 * thb1", ws())) == c.var("dth1") * c.var("thb1"));
  CHECK(eval_plain("i_(D1, alpha)") == "0");
  CHECK(eval_plain("[Q1, Qb1]") == "2*I*@x0 + 2*I*@x3");
  CHECK(eval_plain("[Q1, Qb2]") == "2*I*@x1 + 2*@x2");
  CHECK(eval_plain("[Q1, Qb1] + [D1, Db1]") == "0");
  CHECK(eval_plain("2*I*dth1") == "2*I*dth1");
  CHECK(eval_plain("th2*th1") == "-th1*th2");
  CHECK(eval_plain("exp(l)*exp(l)") == "exp(2*l)");
  CHECK(eval_plain("exp(0*l)") == "1");
  CHECK(eval_plain("r*r^(-1)") == "1");
  CHECK(eval_plain("d(d(x0*th1))") == "0");
  CHECK(eval_plain("d(dx2 + x0*dx1)") == "dx0*dx1");
  CHECK(eval_plain("L_(@x0, x0)") == "1");
  CHECK(eval_plain("L_(Q1, alpha)") == "0");
  CHECK(eval_plain("i_(P2, alpha)") == "@x2");
  CHECK(eval_plain("(1/2 + 3*I)*x1") == "(1/2+3*I)*x1");
  CHECK(eval_plain("0*@x0 + th1") == "th1");
}

TEST_CASE("evaluation errors carry the operator span") {
  auto fails = [](const char* s) -> Span {
    try {
      evaluate(s, ws());
    } catch (const EvalError& e) {
      return e.span();
    }
    FAIL("no evaluation error for " << s);
    return {};
  };
  CHECK(fails("th1 + @x0").column == 1);
  CHECK(fails("x0 + th1*@x0 + @x1").column == 1);  // function + vector field
  CHECK(fails("th1*@x0 + @x1").column == 1);       // odd + even vector fields
  CHECK(fails("x1 + i_(x0, alpha)").column == 9);
  CHECK(fails("@x0*x0").column == 1);
  CHECK(fails("exp(th1*th2)").column == 5);
  CHECK(fails("x0^(-1)").column == 1);
}

TEST_CASE("ASTs survive print and reparse") {
  for (const auto& line : corpus()) {
    CAPTURE(line);
    NodePtr a = parse_expression(line, ws());
    NodePtr b = parse_expression(print(*a), ws());
    CHECK(same_tree(*a, *b));
  }
}

TEST_CASE("rendered values parse back to themselves") {
  for (const auto& line : corpus()) {
    CAPTURE(line);
    Value v = evaluate(line, ws());
    const std::string text = render(v);
    CAPTURE(text);
    CHECK(same_value(evaluate(text, ws()), v));
    NodePtr tree = parse_expression(text, ws());
    CHECK(same_tree(*tree, *parse_expression(print(*tree), ws())));
  }
}

TEST_CASE("show and latex rendering") {
  std::ostringstream out, err;
  CHECK(run_show("alpha", true, out, err) == kExitPass);
  CHECK(out.str().find("dx^{\\mu}") != std::string::npos);
  CHECK(out.str().find("\\sigma^{\\mu}") != std::string::npos);
  CHECK(render_latex(ws().chart().zero()) == "0");
  CHECK(render_plain(ws().chart().zero()) == "0");
  CHECK(latex_template("Qb2").value().find("\\dot{2}") != std::string::npos);
  CHECK(latex_template("D1").value().find("\\mathbb{D}_{1}") != std::string::npos);
  CHECK_FALSE(latex_template("x0").has_value());
  std::ostringstream o2, e2;
  CHECK(run_show("nothing", false, o2, e2) == kExitUsage);
  CHECK(e2.str().find("alpha") != std::string::npos);
  std::ostringstream o3, e3;
  CHECK(run_show("Q1", false, o3, e3) == kExitPass);
  CHECK(o3.str() == "I*thb1*@x0 + I*thb2*@x1 + thb2*@x2 + I*thb1*@x3 + @th1\n");
}

TEST_CASE("eval command exit codes") {
  std::ostringstream out, err;
  CHECK(run_eval("[Q1, Qb1]", false, out, err) == kExitPass);
  CHECK(out.str() == "2*I*@x0 + 2*I*@x3\n");
  std::ostringstream o2, e2;
  CHECK(run_eval("x0 + ", false, o2, e2) == kExitUsage);
  CHECK(e2.str().find("1:6") != std::string::npos);
  std::ostringstream o3, e3;
  CHECK(run_eval("th1 + @x0", false, o3, e3) == kExitFail);
}

TEST_CASE("check selection") {
  CHECK(select_checks({"all"}).size() == 15);
  CHECK(select_checks({"reeb,cone", "reeb"}).size() == 2);
  CHECK(select_checks({"cone", "all"}).front()->id == "cone");
  CHECK_THROWS_AS(select_checks({"bogus"}), UsageError);
  CHECK_THROWS_AS(select_checks({""}), UsageError);
  std::ostringstream out, err;
  CHECK(run_verify({"bogus"}, ReportFormat::text, std::nullopt, out, err) == kExitUsage);
  CHECK(out.str().empty());
}

TEST_CASE("structured reports") {
  std::ostringstream out, err;
  CHECK(run_verify({"reeb", "algebra-table"}, ReportFormat::structured, std::nullopt, out, err) == kExitPass);
  std::istringstream lines(out.str());
  std::vector<std::string> ids;
  for (std::string line; std::getline(lines, line);) {
    auto j = nlohmann::ordered_json::parse(line);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"check_id", "statement", "status", "witness", "elapsed_ms"});
    CHECK(j["status"] == "pass");
    CHECK(j["witness"].is_null());
    CHECK(j["elapsed_ms"].is_number());
    ids.push_back(j["check_id"]);
  }
  CHECK(ids == std::vector<std::string>{"reeb", "algebra-table"});

  CheckReport failed{"x", "claim", CheckStatus::fail, "w", 1.5, {}};
  auto j = nlohmann::json::parse(structured_record(failed));
  CHECK(j["status"] == "fail");
  CHECK(j["witness"] == "w");
  CHECK(text_record(failed).find("witness: w") != std::string::npos);
}

TEST_CASE("xdeg is applied to the ansatz solves") {
  std::ostringstream out, err;
  CHECK(run_verify({"kernel-theorem", "reeb"}, ReportFormat::text, 0, out, err) == kExitPass);
  CHECK(out.str().find("2/2 checks passed") != std::string::npos);
  std::ostringstream o2, e2;
  CHECK(run_verify({"reeb"}, ReportFormat::text, -1, o2, e2) == kExitUsage);
}
