// Command-line front end. Exit codes: 0 ok, 1 parse/validation error, 2 invariant breach.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mptheta/commands.hpp"

namespace {

using mptheta::cli::Outcome;
using mptheta::json;

Outcome run_guarded(const std::function<Outcome()>& f) {
  Outcome o;
  try {
    return f();
  } catch (const mptheta::ParseError& e) {
    o.exit_code = 1;
    o.body = {{"error", e.what()}, {"position", e.position()}};
    o.text = std::string("error: ") + e.what();
  } catch (const mptheta::ValidationError& e) {
    o.exit_code = 1;
    o.body = {{"error", e.what()}};
    o.text = std::string("error: ") + e.what();
  } catch (const mptheta::InvariantError& e) {
    o.exit_code = 2;
    o.body = {{"error", std::string("invariant breach: ") + e.what()}};
    o.text = std::string("invariant breach: ") + e.what();
  } catch (const std::exception& e) {
    o.exit_code = 2;
    o.body = {{"error", std::string("internal error: ") + e.what()}};
    o.text = std::string("internal error: ") + e.what();
  }
  return o;
}

void emit(const Outcome& o, bool text, const std::string& input = {}) {
  if (text) {
    std::ostream& out = o.exit_code == 0 ? std::cout : std::cerr;
    out << o.text << "\n";
    return;
  }
  json body = o.body;
  if (!input.empty() && !body.contains("input")) body["input"] = input;
  if (o.exit_code != 0) body["exit_code"] = o.exit_code;
  std::cout << body.dump() << "\n";
}

/// One expression, or every non-empty stdin line when expr is "-" or omitted (NDJSON).
int for_each_expr(const std::string& expr, bool text, const std::function<Outcome(const std::string&)>& f) {
  if (!expr.empty() && expr != "-") {
    Outcome o = run_guarded([&] { return f(expr); });
    emit(o, text, expr);
    return o.exit_code;
  }
  int worst = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Outcome o = run_guarded([&] { return f(line); });
    emit(o, text, line);
    worst = std::max(worst, o.exit_code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic representations of metaplectic groups and their theta lifts"};
  app.require_subcommand(1);
  app.fallthrough();  // --format is accepted after the subcommand too
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string expr, chi, tower, level, kind, at;
  int depth = 2;
  std::vector<std::string> args;

  auto* classify = app.add_subcommand("classify", "Genericity (both routes), reducibility, witnesses");
  classify->add_option("expr", expr, "Datum; '-' or omitted reads one per stdin line");

  auto* occurrence = app.add_subcommand("occurrence", "First occurrence indices");
  occurrence->add_option("expr", expr, "Datum; '-' or omitted reads stdin");
  occurrence->add_option("--chi", chi, "Discriminant character label (default trivial)");

  auto* lift = app.add_subcommand("lift", "Langlands datum of one theta lift");
  lift->add_option("expr", expr, "Datum; '-' or omitted reads stdin");
  lift->add_option("--tower", tower, "split | nonsplit | chi:LABEL[:split|:nonsplit]")->required();
  lift->add_option("--level", level, "Even l, or m=<odd>")->required();

  auto* table = app.add_subcommand("table", "Lifts from first occurrence down both branches");
  table->add_option("expr", expr, "Datum; '-' or omitted reads stdin");
  table->add_option("--depth", depth, "Levels below first occurrence")->check(CLI::Range(0, 64));
  table->add_option("--chi", chi, "Discriminant character label (default trivial)");

  auto* gamma = app.add_subcommand("gamma-ord", "Order of a gamma factor with per-factor breakdown");
  gamma->add_option("kind", kind, "std | rs | sym2 | param | coeff")->required();
  gamma->add_option("args", args, "Segments / parameter / tempered (and mode for coeff)");
  gamma->add_option("--at", at, "Point u0 (half-integer)")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the enumeration properties");
  selftest->add_option("--depth", depth, "Lift depth")->check(CLI::Range(0, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // usage errors count as parse errors
  }
  bool text = format == "text";
  namespace c = mptheta::cli;

  if (*classify) return for_each_expr(expr, text, [](const std::string& e) { return c::classify(e); });
  if (*occurrence) return for_each_expr(expr, text, [&](const std::string& e) { return c::occurrence(e, chi); });
  if (*lift) return for_each_expr(expr, text, [&](const std::string& e) { return c::lift(e, tower, level); });
  if (*table) return for_each_expr(expr, text, [&](const std::string& e) { return c::table(e, chi, depth); });
  if (*gamma) {
    Outcome o = run_guarded([&] { return c::gamma_ord(kind, args, at); });
    emit(o, text);
    return o.exit_code;
  }
  if (*selftest) {
    if (!app.get_subcommand("selftest")->count("--depth")) depth = 4;
    Outcome o = run_guarded([&] { return c::selftest(depth); });
    emit(o, text);
    return o.exit_code;
  }
  return 1;
}
