// lie_degrees: degrees, verification sweeps and bound tables from the shell.
//
// Exit status: 0 when every asserted check passes, 1 when one fails,
// 2 for usage, configuration or I/O errors.

#include "suite.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace lie_degrees;
using suite::SuiteConfig;
using suite::SuiteReport;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  long a, b;
  if (dots == std::string::npos) {
    a = b = parse_long(s, "--n");
  } else {
    a = parse_long(s.substr(0, dots), "--n");
    b = parse_long(s.substr(dots + 2), "--n");
  }
  if (a < 0 || b < a) throw ConfigError("--n range must be non-empty: '" + s + "'");
  return {static_cast<int>(a), static_cast<int>(b)};
}

std::vector<long> parse_q_list(const std::string& s) {
  std::vector<long> out;
  for (const std::string& t : split(s, ',')) {
    long q = parse_long(t, "--q");
    if (q < 2) throw ConfigError("q must be at least 2");
    out.push_back(q);
  }
  return out;
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    if (r.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad rational '" + s + "'");
  }
}

Partition parse_partition(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != '(' && c != ')') t += c;
  std::vector<int> parts;
  if (!t.empty())
    for (const std::string& x : split(t, ',')) parts.push_back(static_cast<int>(parse_long(x, "partition part")));
  return Partition(parts);
}

Symbol parse_symbol(const std::string& s) {
  auto rows = split(s, ';');
  if (rows.size() != 2) throw ConfigError("symbol must look like \"1,2;0\"");
  auto row = [](const std::string& r) {
    std::vector<int> v;
    std::string t;
    for (char c : r)
      if (c != '(' && c != ')') t += c;
    if (!t.empty())
      for (const std::string& x : split(t, ',')) v.push_back(static_cast<int>(parse_long(x, "symbol entry")));
    return v;
  };
  return Symbol(row(rows[0]), row(rows[1]));
}

struct Options {
  std::string families = "GL";
  std::string n = "1..10";
  std::string q = "2,3";
  int m = kDefaultTruncation;
  unsigned threads = 0;
  std::string format = "text";
  std::string out;
  bool timings = false;
  std::string partition;
  std::string symbol;
  std::string S = "2,1,1/2";
  std::string delta;
  long q_max = 16;
};

SuiteConfig make_config(const Options& o) {
  SuiteConfig c;
  c.families = split(o.families, ',');
  std::tie(c.n_min, c.n_max) = parse_range(o.n);
  c.q_list = parse_q_list(o.q);
  if (o.m < 1) throw ConfigError("--m must be positive");
  c.m = o.m;
  c.threads = thread_count(o.threads);
  c.format = o.format;
  c.out = o.out;
  c.timings = o.timings;
  return c;
}

KeyValues describe(const SuiteConfig& c) {
  std::string qs;
  for (long q : c.q_list) qs += (qs.empty() ? "" : ",") + std::to_string(q);
  std::string fs;
  for (const auto& f : c.families) fs += (fs.empty() ? "" : ",") + f;
  // Thread count is left out so reports do not depend on it.
  return {{"families", fs}, {"n", std::to_string(c.n_min) + ".." + std::to_string(c.n_max)}, {"q", qs},
          {"m", std::to_string(c.m)}};
}

SuiteReport degree_table(const std::string& kind, const SuiteConfig& cfg, const Options& o) {
  SuiteReport rep;
  auto row = [&](const std::string& label, KeyValues params, const BigInt& d) {
    CheckRecord r;
    r.id = "degree_" + kind;
    r.asserted = false;
    params.emplace_back("character", label);
    r.params = std::move(params);
    r.values = {{"degree", to_string(d)}};
    rep.records.push_back(std::move(r));
  };

  if (kind == "sym") {
    if (!o.partition.empty()) {
      Partition p = parse_partition(o.partition);
      row(to_string(p), {{"n", std::to_string(p.size())}}, sym_degree(p));
    } else {
      for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for_each_partition(n, [&](const Partition& p) { row(to_string(p), {{"n", std::to_string(n)}}, sym_degree(p)); });
    }
  } else if (kind == "gl" || kind == "gu") {
    const bool unitary = kind == "gu";
    for (long q : cfg.q_list) {
      if (!o.partition.empty()) {
        Partition p = parse_partition(o.partition);
        row(to_string(p), {{"n", std::to_string(p.size())}, {"q", std::to_string(q)}},
            unitary ? degree_gu(p, q) : degree_gl(p, q));
        continue;
      }
      for (int n = std::max(cfg.n_min, 1); n <= cfg.n_max; ++n) {
        HookDegreeTable t(n, q, unitary);
        for_each_partition(n, [&](const Partition& p) {
          row(to_string(p), {{"n", std::to_string(n)}, {"q", std::to_string(q)}}, t.degree(p));
        });
      }
    }
  } else {  // symbol
    for (long q : cfg.q_list) {
      if (!o.symbol.empty()) {
        Symbol s = parse_symbol(o.symbol);
        row(to_string(s),
            {{"family", to_string(symbol_family(s))}, {"n", std::to_string(symbol_rank(s))}, {"q", std::to_string(q)}},
            degree_symbol(s, q));
        continue;
      }
      for (const std::string& name : cfg.families) {
        Family f = parse_family(name);
        if (!is_symbol_family(f)) throw ConfigError("degree symbol needs --family B, C, D or 2D");
        for (int n = std::max(cfg.n_min, 1); n <= cfg.n_max; ++n) {
          if ((f == Family::D || f == Family::D2) && n < 2) continue;
          for (const SymbolClass& sc : enumerate_symbols(n, f))
            row(to_string(sc.symbol),
                {{"family", to_string(f)}, {"n", std::to_string(n)}, {"q", std::to_string(q)}},
                degree_symbol(sc.symbol, q));
        }
      }
    }
  }
  if (cfg.timings) rep.wall_ms.assign(rep.records.size(), 0.0);
  return rep;
}

int emit(SuiteReport rep, const SuiteConfig& cfg) {
  rep.config = describe(cfg);
  std::string text = suite::render(rep, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text << std::flush;
  } else {
    suite::write_atomically(cfg.out, text);
  }
  const long failed = rep.failed();
  if (failed) std::cerr << failed << " asserted check(s) failed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character degrees of symmetric, alternating and finite classical groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", o.families, "families, comma separated (GL, GU, BC, D, 2D; or A, 2A, B, C, D, 2D)");
    sub->add_option("--n", o.n, "n or range a..b");
    sub->add_option("--q", o.q, "comma separated q values");
    sub->add_option("--m", o.m, "product truncation");
    sub->add_option("--threads", o.threads, "worker threads (LIE_DEGREES_THREADS overrides)");
    sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "output file (written atomically)");
    sub->add_flag("--timings", o.timings, "add per-record wall time");
  };

  auto* degree = app.add_subcommand("degree", "unipotent or symmetric-group degrees");
  degree->require_subcommand(1);
  std::string degree_kind;
  for (const char* kind : {"sym", "gl", "gu", "symbol"}) {
    auto* s = degree->add_subcommand(kind, std::string("degree table: ") + kind);
    common(s);
    s->add_option("--partition", o.partition, "single partition, e.g. 3,2,1");
    if (std::string(kind) == "symbol") s->add_option("--symbol", o.symbol, "single symbol \"X;Y\", e.g. \"1,2;0\"");
    s->callback([&degree_kind, kind] { degree_kind = kind; });
  }

  auto* verify = app.add_subcommand("verify", "verification sweeps");
  verify->require_subcommand(1);
  auto* v_st = verify->add_subcommand("steinberg", "Steinberg character has the unique largest unipotent degree");
  auto* v_props = verify->add_subcommand("props", "first-column, dominance and GL >= GU comparisons");
  auto* v_lem = verify->add_subcommand("lemmas", "certified q-product constants");
  common(v_st);
  common(v_props);
  common(v_lem);
  v_lem->add_option("--q-max", o.q_max, "largest q for the product bounds");

  auto* bmax = app.add_subcommand("bmax", "largest irreducible degree");
  bmax->require_subcommand(1);
  auto* bmax_gl = bmax->add_subcommand("gl", "b(GL_n(q)) with witness centralizer type");
  common(bmax_gl);

  auto* bounds = app.add_subcommand("bounds", "lower and upper brackets for c = b/|G|_p");
  common(bounds);

  auto* eps = app.add_subcommand("epsilon", "epsilon tables and certificates");
  eps->require_subcommand(1);
  auto* eps_an = eps->add_subcommand("an", "epsilon for alternating groups");
  auto* eps_cert = eps->add_subcommand("cert", "epsilon > 1 certificates for groups of Lie type");
  common(eps_an);
  common(eps_cert);

  auto* ratio = app.add_subcommand("ratio-search", "degree-ratio witnesses over all partitions of n");
  common(ratio);
  ratio->add_option("--S", o.S, "excluded ratios, comma separated");
  ratio->add_option("--delta", o.delta, "smallest acceptable ratio (default 9/16 min(S)^2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    SuiteConfig cfg = make_config(o);
    SuiteReport rep;
    if (!degree_kind.empty()) {
      rep = degree_table(degree_kind, cfg, o);
      rep.command = "degree " + degree_kind;
    } else if (*v_st) {
      rep = suite::verify_steinberg(cfg);
      rep.command = "verify steinberg";
    } else if (*v_props) {
      rep = suite::verify_props(cfg);
      rep.command = "verify props";
    } else if (*v_lem) {
      if (o.q_max < 2) throw ConfigError("--q-max must be at least 2");
      rep = suite::verify_lemmas(cfg, o.q_max);
      rep.command = "verify lemmas";
    } else if (*bmax_gl) {
      if (cfg.n_min < 1) throw ConfigError("bmax needs n >= 1");
      rep = suite::bmax_gl(cfg);
      rep.command = "bmax gl";
    } else if (*bounds) {
      if (cfg.n_min < 1) throw ConfigError("bounds needs n >= 1");
      rep = suite::bounds(cfg);
      rep.command = "bounds";
    } else if (*eps_an) {
      rep = suite::epsilon_an(cfg);
      rep.command = "epsilon an";
    } else if (*eps_cert) {
      if (cfg.n_min < 1) throw ConfigError("epsilon cert needs n >= 1");
      rep = suite::epsilon_cert(cfg);
      rep.command = "epsilon cert";
    } else {
      std::vector<Rational> S;
      if (!o.S.empty())
        for (const std::string& t : split(o.S, ',')) S.push_back(parse_rational(t));
      Rational delta;
      if (!o.delta.empty()) {
        delta = parse_rational(o.delta);
      } else {
        Rational lo = S.empty() ? Rational(1) : *std::min_element(S.begin(), S.end());
        delta = Rational(9, 16) * lo * lo;
      }
      rep = suite::ratio_search(cfg, S, delta);
      rep.command = "ratio-search";
    }
    return emit(std::move(rep), cfg);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
