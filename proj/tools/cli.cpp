#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "rankmatch/errors.hpp"
#include "rankmatch/suites.hpp"
#include "rankmatch/theorem.hpp"

namespace rankmatch::cli {

namespace {

struct Config {
  std::string file;
  std::string suite;
  std::string quantity;
  int n = 0;
  int k = 0;
  int p = 0;
  int d = 0;
  std::int64_t trials = 200;
  std::uint64_t seed = 42;
  std::uint64_t cap = kDefaultOracleCap;
  unsigned workers = 1;
  bool json = false;
};

class BadInvocation : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw BadInvocation("--file is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInvocation("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> content_tokens(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::int64_t to_int(const std::string& tok, int line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

// "field p", then "n N" (square) or "shape R C", then the rows. A space file
// is accepted too, in which case its base matrix is used.
Matrix parse_matrix_file(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  std::istringstream is(text);
  int number = 0;
  for (std::string line; std::getline(is, line);) {
    ++number;
    auto toks = content_tokens(line);
    if (!toks.empty()) lines.emplace_back(number, std::move(toks));
  }
  for (const auto& [no, toks] : lines)
    if (toks[0] == "kind") return parse_space(text).base();
  std::size_t pos = 0;
  auto next = [&]() -> const std::pair<int, std::vector<std::string>>& {
    if (pos >= lines.size()) throw ParseError(number, "unexpected end of file");
    return lines[pos++];
  };
  const auto& [fline, field] = next();
  if (field.size() != 2 || field[0] != "field") throw ParseError(fline, "expected 'field p'");
  const auto p = to_int(field[1], fline);
  if (p < 2 || p > 0xFFFFFFFFLL) throw ParseError(fline, "invalid modulus " + field[1]);
  std::optional<FieldSpec> spec;
  try {
    spec.emplace(static_cast<std::uint32_t>(p));
  } catch (const DomainError& e) {
    throw ParseError(fline, e.what());
  }
  const auto& [sline, shape] = next();
  std::int64_t rows = 0, cols = 0;
  if (shape.size() == 2 && shape[0] == "n") {
    rows = cols = to_int(shape[1], sline);
  } else if (shape.size() == 3 && shape[0] == "shape") {
    rows = to_int(shape[1], sline);
    cols = to_int(shape[2], sline);
  } else {
    throw ParseError(sline, "expected 'n N' or 'shape R C'");
  }
  if (rows < 0 || cols < 0 || rows > 64 || cols > 64) throw ParseError(sline, "dimensions must be in [0, 64]");
  Matrix m(*spec, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto& [rline, row] = next();
    if (static_cast<std::int64_t>(row.size()) != cols)
      throw ParseError(rline, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    for (std::int64_t j = 0; j < cols; ++j) {
      const auto v = to_int(row[j], rline);
      if (v < 0 || v >= p) throw ParseError(rline, "entry " + row[j] + " outside [0, " + field[1] + ")");
      m.set(i, j, v);
    }
  }
  if (pos != lines.size()) throw ParseError(lines[pos].first, "trailing content");
  return m;
}

int cmd_info(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto s = parse_space(read_file(cfg.file));
  const auto dim = dimension(s);
  if (dim < s.basis().size())
    err << "warning: basis is linearly dependent (" << s.basis().size() << " elements, dim " << dim << ")\n";
  const auto g = leading_graph(s);
  const auto n = static_cast<int>(s.order());

  std::optional<WitnessResult> witness;
  const bool alternating = s.kind() == SpaceKind::alternating && is_alternating(s.base());
  if (alternating) witness = witness_search_alt(s);
  else if (s.spec().modulus() >= 3 && s.kind() != SpaceKind::general) witness = witness_search_ws(s);

  out << "dim=" << dim << " G=" << format_edges(g.edges()) << " nu=" << nu(g) << " mu=" << mu(g);
  if (member_count(s) <= cfg.cap) {
    const auto best = max_rank_member(s, cfg.cap);
    out << " rho=" << best.rank << "\n";
    if (witness && witness->found) {
      out << "witness rank=" << witness->achieved_rank << "\n" << witness->matrix.to_string();
    } else {
      out << "maximizer rank=" << best.rank << "\n" << best.member.to_string();
    }
    return kOk;
  }
  const auto lower = witness && witness->found ? witness->achieved_rank : rank(s.base());
  out << " rho>=" << lower << " rho<=" << std::min<std::size_t>(term_rank_bound(s), static_cast<std::size_t>(n))
      << "\n";
  if (witness && witness->found) out << "witness rank=" << witness->achieved_rank << "\n" << witness->matrix.to_string();
  else out << "base rank=" << lower << "\n" << s.base().to_string();
  return kOk;
}

int cmd_verify(const Config& cfg, const CLI::App& sub, std::ostream& out) {
  if (!is_suite_id(cfg.suite)) throw BadInvocation("unknown suite '" + cfg.suite + "'");
  SuiteParams params = default_params(cfg.suite);
  if (sub.count("--n")) params.n = cfg.n;
  if (sub.count("--k")) params.k = cfg.k;
  if (sub.count("--p")) params.p = cfg.p;
  if (sub.count("--d")) params.d = cfg.d;
  params.trials = cfg.trials;
  params.seed = cfg.seed;
  params.cap = cfg.cap;
  params.workers = cfg.workers;
  if (params.trials < 0) throw BadInvocation("--trials must be nonnegative");
  if (params.workers < 1) throw BadInvocation("--workers must be at least 1");

  const auto reports = run_suite(cfg.suite, params);
  std::int64_t failures = 0;
  for (const auto& r : reports) failures += r.fail;
  if (cfg.json) {
    out << (reports.size() == 1 ? to_json(reports.front()) : to_json(reports)) << "\n";
  } else {
    for (const auto& r : reports) out << to_text(r);
    out << (failures == 0 ? "PASS" : "FAIL") << " (" << reports.size() << " report"
        << (reports.size() == 1 ? "" : "s") << ", " << failures << " failure" << (failures == 1 ? "" : "s") << ")\n";
  }
  return failures == 0 ? kOk : kSuiteFailure;
}

int cmd_compute(const Config& cfg, const CLI::App& sub, std::ostream& out) {
  const auto& q = cfg.quantity;
  if (q == "ua" || q == "us") {
    if (!sub.count("--n") || !sub.count("--k")) throw BadInvocation("compute " + q + " needs --n and --k");
    out << (q == "ua" ? u_a(cfg.n, cfg.k) : u_s(cfg.n, cfg.k)) << "\n";
    return kOk;
  }
  if (q == "mu" || q == "nu") {
    const auto g = parse_graph(read_file(cfg.file));
    out << (q == "mu" ? mu(g) : nu(g)) << "\n";
    return kOk;
  }
  const auto m = parse_matrix_file(read_file(cfg.file));
  if (q == "rank") {
    out << rank(m) << "\n";
  } else if (q == "det") {
    if (!m.is_square()) throw BadInvocation("det needs a square matrix");
    out << det(m).value() << "\n";
  } else {
    if (!m.is_square()) throw BadInvocation("pf needs a square matrix");
    out << pfaffian_elimination(m).value() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Rank and matching verification over GF(p)", "rankmatch"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "Summarize a space file: dim, G_S, nu, mu, rho and a witness");
  info->add_option("--file", cfg.file, "Space file")->required();
  info->add_option("--cap", cfg.cap, "Largest member count enumerated by the rank oracle");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "counterexamples, thm1, thm2, cor3, thm4, thm5, erdos-gallai or all")
      ->required();
  verify->add_option("--n", cfg.n, "Matrix order / graph order");
  verify->add_option("--k", cfg.k, "Rank (thm4, thm5)");
  verify->add_option("--p", cfg.p, "Field modulus");
  verify->add_option("--d", cfg.d, "Space dimension");
  verify->add_option("--trials", cfg.trials, "Random trials per suite")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Root seed")->capture_default_str();
  verify->add_option("--cap", cfg.cap, "Largest member count enumerated by the rank oracle")->capture_default_str();
  verify->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  verify->add_flag("--json", cfg.json, "Emit JSON");

  auto* compute = app.add_subcommand("compute", "Compute a single quantity");
  compute->add_option("quantity", cfg.quantity, "rank, det, pf, mu, nu, ua or us")
      ->required()
      ->check(CLI::IsMember({"rank", "det", "pf", "mu", "nu", "ua", "us"}));
  compute->add_option("--file", cfg.file, "Matrix, space or graph file");
  compute->add_option("--n", cfg.n, "Order");
  compute->add_option("--k", cfg.k, "Matching / rank parameter");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInvocation;
  }

  try {
    if (info->parsed()) return cmd_info(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, *verify, out);
    return cmd_compute(cfg, *compute, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    if (!e.detail().empty()) err << e.detail() << (e.detail().back() == '\n' ? "" : "\n");
    return kHypothesisViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInvocation;
  }
}

}  // namespace rankmatch::cli
