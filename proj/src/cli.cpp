#include "ckrtm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ckrtm/error.hpp"
#include "ckrtm/harmonic.hpp"
#include "ckrtm/hopf.hpp"
#include "ckrtm/limits.hpp"
#include "ckrtm/mzv.hpp"
#include "ckrtm/rtm.hpp"
#include "ckrtm/serialize.hpp"
#include "ckrtm/verify.hpp"

namespace ckrtm::cli {

namespace {

struct Config {
  std::size_t max_degree = kDefaultMaxDegree;
  bool json = false;
  bool timing = true;
  int terms = mzv::kDefaultTerms;
  double tolerance = mzv::kDefaultTolerance;
  unsigned jobs = 1;
};

template <class T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    std::size_t used = 0;
    try {
      value = static_cast<T>(std::stod(text, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw PreconditionError("invalid number for " + what + ": " + text);
  } else {
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw PreconditionError("invalid number for " + what + ": " + text);
    }
  }
  return value;
}

void apply_setting(Config& cfg, const std::string& key, const std::string& value) {
  if (key == "max_degree") {
    cfg.max_degree = parse_number<std::size_t>(value, key);
  } else if (key == "format") {
    if (value != "text" && value != "json") throw PreconditionError("format must be text or json");
    cfg.json = value == "json";
  } else if (key == "terms") {
    cfg.terms = parse_number<int>(value, key);
  } else if (key == "tolerance") {
    cfg.tolerance = parse_number<double>(value, key);
  } else if (key == "jobs") {
    cfg.jobs = parse_number<unsigned>(value, key);
  } else if (key == "timing") {
    cfg.timing = value == "true" || value == "1" || value == "on";
  } else {
    throw PreconditionError("unknown config key: " + key);
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// Flat key=value lines; '#' starts a comment.
void load_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw PreconditionError("config line without '=': " + line);
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void load_environment(Config& cfg) {
  if (const char* v = std::getenv("CKRTM_MAX_DEGREE")) apply_setting(cfg, "max_degree", v);
  if (const char* v = std::getenv("CKRTM_JOBS")) apply_setting(cfg, "jobs", v);
}

std::size_t word_degree(const WordSum& p) {
  std::size_t n = 0;
  for (const auto& [w, c] : p) n = std::max(n, w.degree());
  return n;
}

Forest read_forest(const std::string& text) {
  Forest f = parse_forest(text);
  require_degree(f.degree(), "input forest");
  return f;
}

WordSum read_poly(const std::string& text) {
  WordSum p = parse_word(text);
  require_degree(word_degree(p), "input polynomial");
  return p;
}

void print_report_text(std::ostream& out, const VerificationReport& r, bool timing) {
  out << (r.passed ? "pass" : "FAIL") << "  " << r.identity;
  for (const auto& [k, v] : r.bounds) out << "  " << k << '=' << v;
  out << "  checked=" << r.checked;
  if (timing) out << "  " << r.millis << " ms";
  out << '\n';
  if (r.counterexample) {
    for (const auto& [k, v] : *r.counterexample) out << "    " << k << ": " << v << '\n';
  }
}

std::string index_sum(const WordSum& lhs) {
  std::string out;
  for (const auto& [w, c] : lhs) {
    const std::string idx = mzv::render(mzv::word_index(w));
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + " ";
    out += "Z" + idx;
  }
  return out.empty() ? "0" : out;
}

struct Options {
  std::string config_path;
  std::optional<std::size_t> max_degree;
  std::optional<unsigned> jobs;
  bool json = false;
  bool no_timing = false;

  int degree = 0;
  std::string forest, word, op, lhs, rhs, identity, seed, index;
  int max_forest_degree = -1;
  int max_word_length = -1;
  int random_cases = -1;
  std::uint64_t random_seed = Bounds{}.seed;
  bool numeric = false;
  std::optional<double> tol;
  std::optional<int> terms;
};

int run(CLI::App& app, const Options& o, const Config& cfg, std::ostream& out) {
  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  if (name == "forests") {
    require_degree(static_cast<std::size_t>(o.degree), "forest degree");
    const auto& fs = enumerate_forests(static_cast<std::size_t>(o.degree));
    if (cfg.json) {
      Json arr = Json::array();
      for (const auto& f : fs) arr.push_back(render_forest_label(f));
      out << arr.dump(2) << '\n';
    } else {
      for (const auto& f : fs) out << render_forest_label(f) << '\n';
    }
    return kOk;
  }
  if (name == "coproduct") {
    const auto t = coproduct(read_forest(o.forest));
    out << (cfg.json ? to_json(t).dump(2) : render(t)) << '\n';
    return kOk;
  }
  if (name == "antipode" || name == "fpoly" || name == "gpoly") {
    const Forest f = read_forest(o.forest);
    if (name == "antipode") {
      const auto s = antipode(f);
      out << (cfg.json ? to_json(s).dump(2) : render(s)) << '\n';
    } else {
      const auto p = name == "fpoly" ? f_poly(f) : g_poly(f);
      out << (cfg.json ? to_json(p).dump(2) : render(p)) << '\n';
    }
    return kOk;
  }
  if (name == "rtm") {
    const Forest f = read_forest(o.forest);
    const WordSum w = read_poly(o.word);
    require_degree(f.degree() + word_degree(w), "output degree");
    const auto p = rtm_apply(f, w);
    out << (cfg.json ? to_json(p).dump(2) : render(p)) << '\n';
    return kOk;
  }
  if (name == "product") {
    const WordSum a = read_poly(o.lhs);
    const WordSum b = read_poly(o.rhs);
    require_degree(word_degree(a) + word_degree(b), "product degree");
    WordSum p;
    if (o.op == "star" || o.op == "harub") {
      if (!in_A1(a) || !in_A1(b)) throw DomainError(o.op + " is defined on A1 (words starting with y, or 1)");
      p = o.op == "star" ? star(a, b) : harub(a, b);
    } else {
      p = diamond(a, b);
    }
    out << (cfg.json ? to_json(p).dump(2) : render(p)) << '\n';
    return kOk;
  }
  if (name == "check") {
    std::vector<Identity> ids;
    if (o.identity == "all") {
      for (const auto& info : identities()) ids.push_back(info.id);
    } else if (auto id = identity_from_name(o.identity)) {
      ids.push_back(*id);
    } else {
      throw PreconditionError("unknown identity: " + o.identity);
    }
    Bounds bounds;
    bounds.forest_degree = o.max_forest_degree;
    bounds.word_length = o.max_word_length;
    bounds.random_cases = o.random_cases;
    bounds.seed = o.random_seed;
    bounds.jobs = cfg.jobs;
    bool all_passed = true;
    Json reports = Json::array();
    for (Identity id : ids) {
      auto report = verify_identity(id, bounds);
      if (!cfg.timing) report.millis = 0;
      all_passed = all_passed && report.passed;
      if (cfg.json) {
        reports.push_back(to_json(report));
      } else {
        print_report_text(out, report, cfg.timing);
      }
    }
    if (cfg.json) out << (o.identity == "all" ? reports : reports.front()).dump(2) << '\n';
    return all_passed ? kOk : kCheckFailed;
  }
  if (name == "relations") {
    require_degree(static_cast<std::size_t>(o.degree), "forest degree");
    const WordSum seed_poly = read_poly(o.seed);
    if (seed_poly.size() != 1 || seed_poly.begin()->second != 1) {
      throw PreconditionError("--seed must be a single word");
    }
    const Word seed = seed_poly.begin()->first;
    require_degree(static_cast<std::size_t>(o.degree) + seed.degree(), "relation weight");
    const double tol = o.tol.value_or(cfg.tolerance);
    const int terms = o.terms.value_or(cfg.terms);
    bool all_passed = true;
    Json arr = Json::array();
    for (const auto& f : enumerate_forests(static_cast<std::size_t>(o.degree))) {
      const auto rel = mzv::relation_from_rtm(ForestSum(f), seed);
      if (rel.lhs.is_zero()) continue;
      std::optional<mzv::Real> residual;
      if (o.numeric) {
        const auto check = mzv::verify_relation_numeric(rel, tol, terms);
        residual = check.residual;
        all_passed = all_passed && check.passed;
      }
      if (cfg.json) {
        arr.push_back(to_json(rel, residual));
      } else {
        out << render_forest_label(f) << "  " << render(seed) << "  " << render(rel.lhs) << "  =>  "
            << index_sum(rel.lhs) << " = 0";
        if (residual) out << "  residual=" << mzv::format_real(*residual, 3);
        out << '\n';
      }
    }
    if (cfg.json) out << arr.dump(2) << '\n';
    return all_passed ? kOk : kCheckFailed;
  }
  if (name == "rank") {
    if (o.degree < 1) throw PreconditionError("--degree must be >= 1");
    require_degree(static_cast<std::size_t>(o.degree), "rank degree");
    const auto r = span_rank(static_cast<std::size_t>(o.degree));
    if (cfg.json) {
      out << Json{{"degree", o.degree}, {"rank", r.rank}, {"expected", r.expected}}.dump(2) << '\n';
    } else {
      out << "degree " << o.degree << ": rank " << r.rank << ", expected " << r.expected << '\n';
    }
    return r.rank == r.expected ? kOk : kCheckFailed;
  }
  if (name == "zeta") {
    const auto idx = mzv::parse_index(o.index);
    if (static_cast<std::size_t>(idx.weight()) > 4 * max_degree()) {
      throw ResourceLimitError("index weight exceeds 4 * max_degree");
    }
    const auto value = mzv::zeta_numeric(idx, o.terms.value_or(cfg.terms));
    if (cfg.json) {
      out << Json{{"index", idx.parts()}, {"value", mzv::format_real(value)}}.dump(2) << '\n';
    } else {
      out << mzv::format_real(value) << '\n';
    }
    return kOk;
  }
  throw InternalError("unhandled subcommand " + name);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Hopf algebra of rooted trees and rooted tree maps"};
  app.name("ckrtm");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config_path, "Flat key=value config file");
  app.add_option("--max-degree", o.max_degree, "Degree cap (default 8)");
  app.add_option("--jobs", o.jobs, "Worker threads for verification sweeps");
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_flag("--no-timing", o.no_timing, "Report 0 ms for reproducible output");

  auto* forests = app.add_subcommand("forests", "List canonical forests of a degree");
  forests->add_option("--degree", o.degree)->required();

  for (const auto& [n, what] : {std::pair{"coproduct", "Coproduct of a forest"}, std::pair{"antipode", "Antipode of a forest"},
                                std::pair{"fpoly", "The polynomial F_f"}, std::pair{"gpoly", "The polynomial G_f"}}) {
    app.add_subcommand(n, what)->add_option("forest", o.forest)->required();
  }

  auto* rtm = app.add_subcommand("rtm", "Apply the rooted tree map of a forest to a polynomial");
  rtm->add_option("forest", o.forest)->required();
  rtm->add_option("word", o.word)->required();

  auto* product = app.add_subcommand("product", "Harmonic-type product of two polynomials");
  product->add_option("--op", o.op)->required()->check(CLI::IsMember({"star", "harub", "diamond"}));
  product->add_option("lhs", o.lhs)->required();
  product->add_option("rhs", o.rhs)->required();

  auto* check = app.add_subcommand("check", "Verify an identity (or all) on bounded degrees");
  check->add_option("identity", o.identity)->required();
  check->add_option("--max-forest-degree", o.max_forest_degree);
  check->add_option("--max-word-length", o.max_word_length);
  check->add_option("--random-cases", o.random_cases);
  check->add_option("--seed", o.random_seed);

  auto* relations = app.add_subcommand("relations", "MZV relations f~(w) for forests of one degree");
  relations->add_option("--forest-degree", o.degree)->required();
  relations->add_option("--seed", o.seed)->required();
  relations->add_flag("--numeric", o.numeric);
  relations->add_option("--tol", o.tol);
  relations->add_option("--terms", o.terms);

  auto* rank = app.add_subcommand("rank", "Rank of {F_f : deg f = n}");
  rank->add_option("--degree", o.degree)->required();

  auto* zeta = app.add_subcommand("zeta", "Numeric multiple zeta value");
  zeta->add_option("index", o.index)->required();
  zeta->add_option("--terms", o.terms);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  // Precedence: defaults < config file < environment < flags.
  Config cfg;
  try {
    if (!o.config_path.empty()) load_config_file(cfg, o.config_path);
    load_environment(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (o.max_degree) cfg.max_degree = *o.max_degree;
  if (o.jobs) cfg.jobs = *o.jobs;
  if (o.json) cfg.json = true;
  if (o.no_timing) cfg.timing = false;

  const std::size_t previous_cap = max_degree();
  set_max_degree(cfg.max_degree);
  int code = kOk;
  try {
    code = run(app, o, cfg, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    code = kResourceLimit;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    code = kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  }
  set_max_degree(previous_cap);
  out.flush();
  return code;
}

}  // namespace ckrtm::cli
