#include "permclass/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "permclass/errors.hpp"
#include "permclass/io.hpp"

namespace permclass {

namespace {

struct Common {
  std::string format = "text";
  std::size_t jobs = 0;
  bool timings = false;
  unsigned long seed = 0; // reserved
};

bool json(const Common &c) { return c.format == "json"; }

std::optional<std::size_t> env_cap() {
  const char *raw = std::getenv("PERMCLASS_MAX_N");
  if (raw == nullptr || *raw == '\0')
    return std::nullopt;
  char *end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0)
    return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split_csv(const std::string &csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

int exit_for(Status s) {
  switch (s) {
  case Status::Holds:
    return kExitOk;
  case Status::Fails:
    return kExitFailed;
  case Status::Skipped:
    return kExitResource;
  }
  return kExitFailed;
}

void print_report_text(std::ostream &out, const Report &report) {
  for (const auto &v : report.results) {
    out << "n=" << v.order << ' ' << status_name(v.status);
    for (const auto &w : v.witness)
      out << ' ' << w.str();
    if (!v.note.empty())
      out << " (" << v.note << ')';
    out << '\n';
  }
  out << status_name(report.status());
  if (report.status() == Status::Holds)
    out << " (verified up to n=" << report.verified_up_to() << ')';
  out << '\n';
}

void print_factorization_text(std::ostream &out, const Factorization &f) {
  out << f.target.str() << " =";
  for (std::size_t i = 0; i < f.factors.size(); ++i)
    out << (i ? " o " : " ") << f.factors[i].perm.str();
  out << '\n';
  for (const auto &factor : f.factors)
    out << "  " << factor.perm.str() << " in " << factor.cls.render() << '\n';
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Permutation class composition workbench", "permclass"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", common.jobs, "Worker threads (0: all cores)");
  app.add_option("--seed", common.seed, "Reserved; exhaustive modes ignore it");
  app.add_flag("--timings", common.timings, "Include timings in JSON reports");

  std::string cls_text, perm_text, lhs_text, rhs_text, names = "all", method;
  std::size_t n = 0, max_n = 0, min_n = 1, max_len = 0;
  int k = 2, l = 2, beta_len = 1;
  std::string alpha = "1", gamma = "1";
  std::vector<std::string> perms;

  auto *member = app.add_subcommand("member", "Decide class membership");
  member->add_option("--class", cls_text)->required();
  member->add_option("--perm", perm_text)->required();

  auto *enumerate = app.add_subcommand("enumerate", "List a slice");
  enumerate->add_option("--class", cls_text)->required();
  enumerate->add_option("-n", n)->required();

  auto *count = app.add_subcommand("count", "Slice sizes for n = 1..max");
  count->add_option("--class", cls_text)->required();
  count->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);

  auto *basis = app.add_subcommand("basis", "Minimal non-members");
  basis->add_option("--class", cls_text)->required();
  basis->add_option("--max-len", max_len)->required()->check(CLI::PositiveNumber);

  auto *compose_cmd = app.add_subcommand("compose-perms", "Compose left to right");
  compose_cmd->add_option("perms", perms)->required()->expected(1, -1);

  auto *decompose = app.add_subcommand("decompose", "Constructive factorization");
  decompose->add_option("--method", method)
      ->required()
      ->check(CLI::IsMember({"vkhk", "ikil", "l4", "thm52"}));
  decompose->add_option("--perm", perm_text)->required();
  decompose->add_option("-k", k, "k (vkhk, ikil, l4)");
  decompose->add_option("-l", l, "l (ikil)");
  decompose->add_option("--alpha", alpha, "alpha (thm52)");
  decompose->add_option("--beta-len", beta_len, "length of beta (thm52)");
  decompose->add_option("--gamma", gamma, "gamma (thm52)");

  auto *include = app.add_subcommand("include", "Finite-order inclusion check");
  include->add_option("--lhs", lhs_text)->required();
  include->add_option("--rhs", rhs_text)->required();
  include->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
  include->add_option("--min-n", min_n)->check(CLI::PositiveNumber);

  auto *suite = app.add_subcommand("suite", "Run registered checks");
  suite->add_option("--names", names, "Comma-separated names or 'all'");
  suite->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  suite->add_flag("--list", "List registered names");

  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const ClassEngine engine(EngineOptions{Limits::from_env(), true,
                                         ComposeStrategy::Rightmost});
  try {
    if (member->parsed()) {
      const ClassExpr cls = ClassExpr::parse(cls_text);
      const Permutation p = Permutation::parse(perm_text);
      const bool in = engine.member(cls, p);
      if (json(common))
        out << Json{{"class", cls.render()}, {"perm", to_json(p)}, {"member", in}}
                   .dump()
            << '\n';
      else
        out << (in ? "true" : "false") << '\n';
      return kExitOk;
    }
    if (enumerate->parsed()) {
      const ClassSlice s = engine.enumerate(ClassExpr::parse(cls_text), n);
      if (json(common))
        write_json_lines(out, *s.members);
      else
        write_text_lines(out, *s.members);
      return kExitOk;
    }
    if (count->parsed()) {
      const ClassExpr cls = ClassExpr::parse(cls_text);
      const auto counts = engine.count(cls, max_n);
      if (json(common)) {
        out << Json{{"class", cls.render()}, {"counts", counts}}.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < counts.size(); ++i)
          out << i + 1 << ' ' << counts[i] << '\n';
      }
      return kExitOk;
    }
    if (basis->parsed()) {
      const ClassExpr cls = ClassExpr::parse(cls_text);
      const auto found = engine.basis_up_to(cls, max_len);
      if (json(common)) {
        Json list = Json::array();
        for (const auto &p : found)
          list.push_back(to_json(p));
        out << Json{{"class", cls.render()}, {"max_len", max_len}, {"basis", list}}
                   .dump()
            << '\n';
      } else {
        write_text_lines(out, found);
      }
      return kExitOk;
    }
    if (compose_cmd->parsed()) {
      std::vector<Permutation> ps;
      for (const auto &t : perms)
        ps.push_back(Permutation::parse(t));
      Permutation product = ps.front();
      for (std::size_t i = 1; i < ps.size(); ++i)
        product = compose(product, ps[i]);
      if (json(common)) {
        Json factors = Json::array();
        for (const auto &p : ps)
          factors.push_back(to_json(p));
        out << Json{{"factors", factors}, {"product", to_json(product)}}.dump()
            << '\n';
      } else {
        out << product.str() << '\n';
      }
      return kExitOk;
    }
    if (decompose->parsed()) {
      const Permutation p = Permutation::parse(perm_text);
      Factorization f;
      if (method == "vkhk")
        f = decompose_vk_hk(engine, p, k);
      else if (method == "ikil")
        f = decompose_ik_il(engine, p, k, l);
      else if (method == "l4")
        f = decompose_layered(engine, p, k);
      else
        f = decompose_sum_avoider(engine, p, Permutation::parse(alpha), beta_len,
                                  Permutation::parse(gamma));
      if (json(common))
        out << to_json(f).dump() << '\n';
      else
        print_factorization_text(out, f);
      return kExitOk;
    }
    if (include->parsed()) {
      const Report report =
          check_inclusion(engine, ClassExpr::parse(lhs_text),
                          ClassExpr::parse(rhs_text), {min_n, max_n},
                          VerifyOptions{common.jobs});
      if (json(common))
        out << to_json(report, common.timings).dump() << '\n';
      else
        print_report_text(out, report);
      return exit_for(report.status());
    }
    if (suite->parsed()) {
      if (suite->count("--list") > 0) {
        for (const auto &name : registry_names())
          out << name << '\n';
        return kExitOk;
      }
      SuiteOptions options;
      options.jobs = common.jobs;
      options.limits = Limits::from_env();
      if (max_n > 0)
        options.max_n = max_n;
      else
        options.max_n = env_cap();
      const auto results = run_suite(split_csv(names), options);
      Status overall = Status::Holds;
      for (const auto &r : results) {
        if (r.status() == Status::Fails)
          overall = Status::Fails;
        else if (r.status() == Status::Skipped && overall == Status::Holds)
          overall = Status::Skipped;
      }
      if (json(common)) {
        Json list = Json::array();
        for (const auto &r : results)
          list.push_back(to_json(r, common.timings));
        out << Json{{"status", suite_status_name(overall)}, {"checks", list}}.dump(2)
            << '\n';
      } else {
        for (const auto &r : results) {
          out << suite_status_name(r.status()) << "  " << r.name << "  ["
              << r.parameters << ']';
          if (common.timings)
            out << "  " << r.seconds << 's';
          out << '\n';
          for (const auto &rec : r.records)
            if (rec.status != Status::Holds) {
              out << "    " << status_name(rec.status) << ": " << rec.what;
              for (const auto &w : rec.witness)
                out << " [" << w << ']';
              out << '\n';
            }
        }
        out << "overall: " << suite_status_name(overall) << '\n';
      }
      return exit_for(overall);
    }
  } catch (const ParseError &e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownCheck &e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError &e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const LengthMismatch &e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitExceeded &e) {
    err << e.what() << '\n';
    return kExitResource;
  } catch (const Error &e) {
    err << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

} // namespace permclass
