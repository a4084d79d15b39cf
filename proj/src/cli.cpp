#include "hv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "hv/biderivations.hpp"
#include "hv/commuting.hpp"
#include "hv/errors.hpp"
#include "hv/parse.hpp"
#include "hv/postlie.hpp"
#include "hv/report.hpp"

namespace hv {

namespace {

struct Options {
  std::string expr;
  std::string map;
  std::string product = "lie-hv";
  std::string alpha = "0";
  std::string beta = "0";
  std::string epsilon;
  std::string format = "text";
  std::int64_t window = 0;
  std::optional<std::int64_t> outbound;
  std::optional<std::int64_t> degree;
  std::optional<std::int64_t> interior;
  unsigned threads = 1;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LeftSymParams leftsym_params(const Options& o) {
  if (o.epsilon.empty()) throw InvalidArgument("left-symmetric products need --epsilon");
  LeftSymParams p{parse_scalar(o.alpha), parse_scalar(o.beta), parse_scalar(o.epsilon)};
  if (!params_valid(p)) throw InvalidArgument("inadmissible epsilon " + o.epsilon);
  return p;
}

ProductKind product_kind(const Options& o) {
  if (o.product == "lie-hv") return ProductKind::lie_hv();
  if (o.product == "lie-w00") return ProductKind::lie_w00();
  if (o.product == "leftsym") return ProductKind::left_sym(leftsym_params(o));
  if (o.product == "leftsym-quotient") return ProductKind::left_sym_quotient(leftsym_params(o));
  throw InvalidArgument("unknown product " + o.product);
}

AlgebraKind inner_kind(const ProductKind& pk) {
  return pk.tag == ProductKind::Tag::LieW00 || pk.tag == ProductKind::Tag::LeftSymQuotient ? AlgebraKind::W00
                                                                                         : AlgebraKind::HV;
}

// Command echo without the parallelism flag, so reports match across thread counts.
std::string echo(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--threads") {
      ++i;
      continue;
    }
    if (args[i].rfind("--threads=", 0) == 0) continue;
    if (!s.empty()) s += ' ';
    s += args[i];
  }
  return s;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    fmt_ = o.format == "machine" ? Format::Machine : Format::Text;
  }

  int eval() {
    ExpressionContext ctx;
    if (o_.product == "lie-w00") ctx.bracket = AlgebraKind::W00;
    if (!o_.epsilon.empty()) ctx.leftsym = leftsym_params(o_);
    Element x = parse_expression(o_.expr, ctx);
    if (fmt_ == Format::Machine)
      write_value(out_, "value", format_element(x), fmt_);
    else
      out_ << format_element(x) << '\n';
    return kPassed;
  }

  int check_derivation() {
    ProductKind pk = product_kind(o_);
    LinearMap m = parse_linear_map(read_file(o_.map), inner_kind(pk));
    return finish(is_derivation(m, pk, window()), "derivation");
  }

  int check_biderivation() {
    ProductKind pk = product_kind(o_);
    BilinearMap f = parse_bilinear_map(read_file(o_.map));
    return finish(is_biderivation(f, pk, window()), "biderivation");
  }

  int check_commuting() {
    LinearMap phi = parse_linear_map(read_file(o_.map));
    return finish(is_commuting(phi, window()), "commuting");
  }

  int check_postlie() {
    std::string text = !o_.product.empty() && o_.product.front() == '@' ? o_.product : read_file(o_.product);
    return finish(is_commutative_postlie(parse_bilinear_map(text), window()), "commutative-post-lie");
  }

  int solve_biderivations() {
    ProductKind pk = product_kind(o_);
    BiderivationSolve req;
    req.product = pk;
    req.window = window();
    req.out_bound = o_.outbound.value_or(2 * o_.window);
    req.degree = o_.degree;
    GradedSpace s = hv::solve_biderivations(req);
    write_value(out_, "constraints", std::to_string(s.constraint_rows), fmt_);
    write_space(out_, "solution", s.space, fmt_);
    if (o_.interior) {
      GradedSpace in = interior_projection(s, Window{*o_.interior});
      write_space(out_, "interior", in.space, fmt_);
      if (pk.tag == ProductKind::Tag::LieHV || pk.tag == ProductKind::Tag::LieW00) {
        std::set<std::int64_t> offsets(s.layout.degrees.begin(), s.layout.degrees.end());
        GradedSpace cl = classified_span(in, pk, offsets, true);
        write_comparison(out_, "classified-span", span_equal(cl.space, in.space), cl.space, fmt_);
      }
    }
    return kPassed;
  }

  int solve_commuting() {
    GradedSpace s = hv::solve_commuting(window());
    write_value(out_, "constraints", std::to_string(s.constraint_rows), fmt_);
    write_space(out_, "solution", s.space, fmt_);
    if (o_.interior) {
      Window iw{*o_.interior};
      GradedSpace in = commuting_interior(s, iw);
      write_space(out_, "interior", in.space, fmt_);
      GradedSpace gen = commuting_generator_span(in);
      write_comparison(out_, "generator-span", span_equal(gen.space, in.space), gen.space, fmt_);
      write_value(out_, "expected-dimension", std::to_string(expected_commuting_dimension(iw)), fmt_);
    }
    return kPassed;
  }

  int report_leftsym() {
    LeftSymParams p = leftsym_params(o_);
    CheckReport ls = is_left_symmetric(p, window());
    write_check(out_, "left-symmetric", ls, fmt_);
    bool noncentral_ok = true;
    for (const auto& c : ls.counterexamples)
      if (!split_strata(c.residual).noncentral.is_zero()) noncentral_ok = false;
    auto rows = subadjacent_residual(p, window());
    write_strata(out_, rows, fmt_);
    bool sub_ok = true;
    for (const auto& r : rows)
      if (!r.residual.noncentral.is_zero() || !r.residual.c1.is_zero()) sub_ok = false;
    write_value(out_, "left-symmetric L/I stratum", noncentral_ok ? "passed" : "failed", fmt_);
    write_value(out_, "subadjacent L/I and C1 strata", sub_ok ? "passed" : "failed", fmt_);
    return noncentral_ok && sub_ok ? kPassed : kFailed;
  }

  int decompose() {
    LinearMap m = parse_linear_map(read_file(o_.map), AlgebraKind::W00);
    Window w = window();
    TabularMap tab = tabulate(m, window_basis(w, false));
    auto d = decompose_derivation(tab, w);
    if (!d) {
      write_value(out_, "decomposition", "none", fmt_);
      return kFailed;
    }
    write_value(out_, "inner", format_element(d->inner), fmt_);
    write_value(out_, "a", format_scalar(d->a), fmt_);
    write_value(out_, "b", format_scalar(d->b), fmt_);
    write_value(out_, "c", format_scalar(d->c), fmt_);
    return kPassed;
  }

 private:
  Window window() const { return Window{o_.window}; }

  int finish(const CheckReport& r, const std::string& name) {
    write_check(out_, name, r, fmt_);
    return r.passed ? kPassed : kFailed;
  }

  const Options& o_;
  std::ostream& out_;
  Format fmt_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for the twisted Heisenberg-Virasoro algebra", "hvcheck"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto common = [&](CLI::App* sub, bool needs_window) {
    sub->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--threads", o.threads, "worker threads, 0 = hardware");
    sub->add_flag("--timing", o.timing, "print elapsed time to stderr");
    if (needs_window) sub->add_option("--window", o.window, "window N")->required()->check(CLI::PositiveNumber);
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "left-symmetric alpha");
    sub->add_option("--beta", o.beta, "left-symmetric beta");
    sub->add_option("--epsilon", o.epsilon, "left-symmetric epsilon");
  };
  auto products = CLI::IsMember({"lie-hv", "lie-w00", "leftsym", "leftsym-quotient"});

  std::string chosen;
  auto leaf = [&](CLI::App* sub, std::string name) { sub->callback([&chosen, name] { chosen = name; }); };

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", o.expr, "expression")->required();
  eval->add_option("--product", o.product, "bracket used by [x, y]")->check(CLI::IsMember({"lie-hv", "lie-w00"}));
  params(eval);
  common(eval, false);
  leaf(eval, "eval");

  auto* check = app.add_subcommand("check", "check a map on a window");
  check->require_subcommand(1);
  for (const char* what : {"derivation", "biderivation"}) {
    auto* sub = check->add_subcommand(what);
    sub->add_option("--map", o.map, "map file")->required();
    sub->add_option("--product", o.product)->check(products);
    params(sub);
    common(sub, true);
    leaf(sub, std::string("check-") + what);
  }
  auto* commuting = check->add_subcommand("commuting");
  commuting->add_option("--map", o.map, "map file")->required();
  common(commuting, true);
  leaf(commuting, "check-commuting");
  auto* postlie = check->add_subcommand("postlie");
  postlie->add_option("--product", o.product, "bilinear map file or inline directive")->required();
  common(postlie, true);
  leaf(postlie, "check-postlie");

  auto* solve = app.add_subcommand("solve", "solve for maps on a window");
  solve->require_subcommand(1);
  auto* sbi = solve->add_subcommand("biderivations");
  sbi->add_option("--product,--algebra", o.product)->check(products);
  sbi->add_option("--outbound", o.outbound, "output index bound M, default 2N");
  sbi->add_option("--degree", o.degree, "graded degree");
  sbi->add_option("--interior", o.interior, "interior window")->check(CLI::PositiveNumber);
  params(sbi);
  common(sbi, true);
  leaf(sbi, "solve-biderivations");
  auto* scm = solve->add_subcommand("commuting");
  scm->add_option("--interior", o.interior, "interior window")->check(CLI::PositiveNumber);
  common(scm, true);
  leaf(scm, "solve-commuting");

  auto* report = app.add_subcommand("report", "stratified reports");
  report->require_subcommand(1);
  auto* rls = report->add_subcommand("leftsym");
  params(rls);
  common(rls, true);
  leaf(rls, "report-leftsym");

  auto* decompose = app.add_subcommand("decompose", "split a W(0,0) derivation into inner and outer parts");
  decompose->add_option("--map", o.map, "map file")->required();
  common(decompose, true);
  leaf(decompose, "decompose");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPassed : kUsage;
  }

  set_thread_count(o.threads);
  const auto start = std::chrono::steady_clock::now();
  const Format fmt = o.format == "machine" ? Format::Machine : Format::Text;
  std::ostringstream body;
  int status = kPassed;
  try {
    Runner r(o, body);
    if (chosen == "eval") {
      status = r.eval();
      out << body.str();
      return status;
    }
    if (chosen == "check-derivation") status = r.check_derivation();
    else if (chosen == "check-biderivation") status = r.check_biderivation();
    else if (chosen == "check-commuting") status = r.check_commuting();
    else if (chosen == "check-postlie") status = r.check_postlie();
    else if (chosen == "solve-biderivations") status = r.solve_biderivations();
    else if (chosen == "solve-commuting") status = r.solve_commuting();
    else if (chosen == "report-leftsym") status = r.report_leftsym();
    else if (chosen == "decompose") status = r.decompose();
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const DomainNotCovered& e) {
    err << "domain not covered: " << e.what() << '\n';
    return kDomainNotCovered;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (fmt == Format::Machine) {
    out << nlohmann::ordered_json{{"record", "run"}, {"version", kVersion}, {"command", echo(args)}}.dump() << '\n';
    out << body.str();
    out << nlohmann::ordered_json{{"record", "exit"}, {"status", status}}.dump() << '\n';
  } else {
    out << "hvcheck " << kVersion << '\n';
    out << "command: " << echo(args) << '\n';
    out << body.str();
    out << "exit: " << status << '\n';
  }
  if (o.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    err << "elapsed: " << ms.count() << " ms\n";
  }
  return status;
}

}  // namespace hv
