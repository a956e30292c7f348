#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chevdv/dv.hpp"
#include "chevdv/errors.hpp"
#include "chevdv/random.hpp"
#include "chevdv/stability.hpp"
#include "chevdv/unimodular.hpp"
#include "json_io.hpp"

namespace chevdv::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string system;
  std::string ring = "Z";
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::size_t samples = 5;
  std::string word_file;
  std::size_t random_len = 0;
  std::string column;
  std::string mode = "simple";
  bool json = false;
  bool timings = false;
  bool inject_fault = false;
  std::string out;
};

struct Report {
  Json doc;
  std::ostringstream text;
  bool ok = true;
  std::optional<Json> counterexample;

  void fail(const Json& entry) {
    if (ok) counterexample = entry;
    ok = false;
  }
};

SystemPtr load_system(const std::string& name) {
  try {
    return ChevalleySystem::parse(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Ring load_ring(const std::string& spec) {
  try {
    return Ring::parse(spec);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<SteinbergWord> load_word(const Options& o, SystemPtr sys, const Ring& R) {
  if (o.word_file.empty()) {
    if (o.random_len == 0) throw UsageError("one of --word <file> or --random <len> is required");
    return std::nullopt;
  }
  std::ifstream in(o.word_file);
  if (!in) throw UsageError("cannot read word file '" + o.word_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_word(std::move(sys), R, buf.str());
  } catch (const Error& e) {
    throw UsageError(std::string("word file: ") + e.what());
  }
}

Json error_json(const Error& e) { return Json{{"error", to_string(e.code())}, {"message", e.what()}}; }

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string root_name(const RootSystem& rs, RootId a) { return to_string(rs.root(a)); }

void cmd_roots(const Options& o, Report& r) {
  SystemPtr sys = load_system(o.system);
  const RootSystem& rs = sys->roots();
  r.doc = roots_json(rs);
  r.text << rs.name() << ": " << rs.size() << " roots\n";
  for (RootId a = 0; a < static_cast<RootId>(rs.size()); ++a) r.text << root_name(rs, a) << "\n";
}

void cmd_constants(const Options& o, Report& r) {
  SystemPtr sys = load_system(o.system);
  r.doc = constants_json(*sys);
  r.text << sys->roots().name() << ": " << r.doc["terms"].size() << " commutator terms\n";
  for (const auto& t : r.doc["terms"])
    r.text << t["alpha"].dump() << " " << t["beta"].dump() << " p=" << t["p"] << " q=" << t["q"] << " N=" << t["N"]
           << "\n";
}

void cmd_rep(const Options& o, Report& r) {
  SystemPtr sys = load_system(o.system);
  r.doc = diagram_json(*sys);
  const WeightDiagram& d = sys->rep().diagram();
  r.text << sys->roots().name() << ": dimension " << d.size() << ", " << d.edges.size() << " edges\n";
  for (const auto& [k, c] : r.doc["edge_counts"].items()) r.text << "label " << k << ": " << c << " edges\n";
  for (const auto& e : d.edges)
    r.text << d.display_label(e.from) << " -" << e.simple << "-> " << d.display_label(e.to) << "\n";
}

std::vector<Int> sample_params(std::size_t n, Rng& rng, const Ring& R) {
  std::vector<Int> grid = {-2, -1, 0, 1, 2};
  std::vector<Int> out(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(n, grid.size())));
  while (out.size() < n) out.push_back(random_element(rng, R, 100));
  return out;
}

void cmd_verify_r2(const Options& o, Report& r) {
  SystemPtr sys = load_system(o.system);
  Ring R = load_ring(o.ring);
  if (o.samples == 0) throw UsageError("--samples must be positive");
  Rng rng(o.seed);
  std::vector<Int> params = sample_params(o.samples, rng, R);
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  auto failure = verify_commutator_formula(sys, R, params, &checked);
  r.doc = header("verify-r2");
  r.doc["system"] = sys->roots().name();
  r.doc["ring"] = R.name();
  r.doc["params"] = params;
  r.doc["checked"] = checked;
  r.doc["certified"] = !failure;
  if (o.timings) r.doc["elapsed_ms"] = elapsed_ms(t0);
  if (failure) {
    const RootSystem& rs = sys->roots();
    r.fail(Json{{"alpha", root_json(rs.root(failure->a))},
                {"beta", root_json(rs.root(failure->b))},
                {"s", failure->s},
                {"t", failure->t}});
  }
  r.text << "verify-r2 " << sys->roots().name() << " over " << R.name() << ": " << checked << " instances, "
         << (failure ? "FAILED" : "certified") << "\n";
}

void cmd_factorize(const Options& o, Report& r) {
  SystemPtr sys = load_system(o.system);
  Ring R = load_ring(o.ring);
  auto fixed = load_word(o, sys, R);
  const RootSystem& rs = sys->roots();
  r.doc = header("factorize");
  r.doc["system"] = rs.name();
  r.doc["ring"] = R.name();
  r.doc["seed"] = o.seed;
  r.doc["within_hypotheses"] = within_hypotheses(rs, R);
  Json trials = Json::array();
  std::size_t certified = 0;
  const Rng base(o.seed);
  for (std::size_t t = 0; t < o.trials; ++t) {
    Rng rng = base.split(t);
    SteinbergWord w = fixed ? *fixed : random_word(rng, sys, R, o.random_len);
    auto t0 = std::chrono::steady_clock::now();
    Json entry;
    try {
      DVDecomposition d = factorize_dv(w);
      if (o.inject_fault && t == 0) d.u.append(rs.highest(), 1);
      std::string why;
      bool ok = certify(d, w, &why) && d.reduced;
      entry = decomposition_json(w, d, ok);
      if (!ok) entry["reason"] = why.empty() ? "not reduced" : why;
    } catch (const Error& e) {
      entry = Json{{"input_word", word_json(w)}, {"certified", false}};
      entry.update(error_json(e));
    }
    entry["trial"] = t;
    if (o.timings) entry["elapsed_ms"] = elapsed_ms(t0);
    if (entry["certified"].get<bool>())
      ++certified;
    else
      r.fail(entry);
    r.text << "trial " << t << ": " << (entry["certified"].get<bool>() ? "certified" : "FAILED");
    if (entry.contains("u"))
      r.text << " |u|=" << entry["u"].size() << " |v|=" << entry["v"].size() << " |a|=" << entry["a"].size()
             << " |p|=" << entry["p"].size();
    if (entry.contains("message")) r.text << " " << entry["message"].get<std::string>();
    r.text << "\n";
    trials.push_back(entry);
  }
  r.doc["trials"] = trials;
  r.doc["certified"] = certified;
  r.doc["total"] = o.trials;
  r.text << certified << "/" << o.trials << " certified\n";
}

bool certify_split(const SteinbergWord& w, const KernelSplit& ks, int i, int j) {
  return classify(ks.a).L(i) && classify(ks.b).L(j) && evaluate(ks.a) * evaluate(ks.b) == evaluate(w) &&
         in_intersection_image(w, evaluate(ks.a));
}

void cmd_dv_reduce(const Options& o, Report& r) {
  SystemPtr sys = load_system(o.system);
  Ring R = load_ring(o.ring);
  auto fixed = load_word(o, sys, R);
  const RootSystem& rs = sys->roots();
  ParabolicPair pp;
  try {
    pp = parabolic_pair(rs);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  r.doc = header("dv-reduce");
  r.doc["system"] = rs.name();
  r.doc["ring"] = R.name();
  r.doc["seed"] = o.seed;
  Json trials = Json::array();
  std::size_t certified = 0;
  const Rng base(o.seed);
  auto levi_j = [&](RootId a) { return rs.coeff(a, pp.j) == 0; };
  for (std::size_t t = 0; t < o.trials; ++t) {
    Rng rng = base.split(t);
    SteinbergWord w = fixed ? *fixed : random_relator(rng, sys, R) * random_word(rng, sys, R, o.random_len, levi_j);
    auto t0 = std::chrono::steady_clock::now();
    Json entry{{"input_word", word_json(w)}};
    try {
      KernelSplit ks = stab_kernel_express(w);
      if (o.inject_fault && t == 0) ks.b.append(rs.simple(pp.j == 1 ? 2 : 1), 1);
      entry["a"] = word_json(ks.a);
      entry["b"] = word_json(ks.b);
      entry["certified"] = certify_split(w, ks, pp.i, pp.j);
    } catch (const Error& e) {
      entry["certified"] = false;
      entry.update(error_json(e));
    }
    entry["trial"] = t;
    if (o.timings) entry["elapsed_ms"] = elapsed_ms(t0);
    bool ok = entry["certified"].get<bool>();
    if (ok)
      ++certified;
    else
      r.fail(entry);
    r.text << "trial " << t << ": " << (ok ? "certified" : "FAILED");
    if (entry.contains("a")) r.text << " |a|=" << entry["a"].size() << " |b|=" << entry["b"].size();
    if (entry.contains("message")) r.text << " " << entry["message"].get<std::string>();
    r.text << "\n";
    trials.push_back(entry);
  }
  r.doc["trials"] = trials;
  r.doc["certified"] = certified;
  r.doc["total"] = o.trials;
  r.text << certified << "/" << o.trials << " certified\n";
}

Vec parse_column(const std::string& text, const Ring& R) {
  std::vector<Int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --column entry '" + item + "'");
    }
  }
  if (values.empty()) throw UsageError("--column is empty");
  return Vec(R, values);
}

/// Checks the shapes and the vanishing pattern of a reduction pair.
bool certify_pair(const Vec& v, const UnipotentPair& p, bool asr) {
  const std::size_t n = v.size();
  const Vec w = p.y * (p.x * v);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Int d = r == c ? 1 : 0;
      const bool upper = asr ? (r < n / 2 && c >= n / 2) : c == n - 1;
      const bool lower = asr ? (r >= n / 2 && c < n / 2) : r == n - 1;
      if (!upper && p.x(r, c) != d) return false;
      if (!lower && p.y(r, c) != d) return false;
    }
  if (asr) {
    for (std::size_t k = n / 2; k < n; ++k)
      if (w[k] != 0) return false;
    return preserves_split_form(p.x) && preserves_split_form(p.y) && is_unimodular(w);
  }
  return w[n - 1] == 0 && is_unimodular(w.slice(0, n - 1));
}

void cmd_reduce_column(const Options& o, Report& r) {
  Ring R = load_ring(o.ring);
  if (o.mode != "simple" && o.mode != "asr") throw UsageError("--mode must be simple or asr");
  const bool asr = o.mode == "asr";
  if (o.column.empty() && o.random_len == 0) throw UsageError("one of --column or --random <height> is required");
  if (asr && o.column.empty() && o.random_len % 2 != 0) throw UsageError("asr columns have even height");
  r.doc = header("reduce-column");
  r.doc["ring"] = R.name();
  r.doc["mode"] = o.mode;
  r.doc["seed"] = o.seed;
  Json trials = Json::array();
  std::size_t certified = 0;
  const Rng base(o.seed);
  for (std::size_t t = 0; t < o.trials; ++t) {
    Rng rng = base.split(t);
    Vec v = !o.column.empty() ? parse_column(o.column, R)
            : asr             ? random_isotropic(rng, R, o.random_len / 2)
                              : random_unimodular(rng, R, o.random_len);
    auto t0 = std::chrono::steady_clock::now();
    Json entry{{"column", vec_json(v)}};
    try {
      UnipotentPair p = asr ? asr_reduce(v) : simple_lemma_reduce(v);
      if (o.inject_fault && t == 0) p.x.add_to(v.size() - 1, 0, 1);
      entry["x"] = mat_json(p.x);
      entry["y"] = mat_json(p.y);
      entry["image"] = vec_json(p.y * (p.x * v));
      entry["certified"] = certify_pair(v, p, asr);
    } catch (const Error& e) {
      entry["certified"] = false;
      entry.update(error_json(e));
    }
    entry["trial"] = t;
    if (o.timings) entry["elapsed_ms"] = elapsed_ms(t0);
    bool ok = entry["certified"].get<bool>();
    if (ok)
      ++certified;
    else
      r.fail(entry);
    r.text << "trial " << t << ": " << v.to_string() << " " << (ok ? "certified" : "FAILED");
    if (entry.contains("image")) r.text << " -> " << entry["image"].dump();
    if (entry.contains("message")) r.text << " " << entry["message"].get<std::string>();
    r.text << "\n";
    trials.push_back(entry);
  }
  r.doc["trials"] = trials;
  r.doc["certified"] = certified;
  r.doc["total"] = o.trials;
  r.text << certified << "/" << o.trials << " certified\n";
}

// A fixed campaign over every module. Reports carry no timings so that equal
// seeds give equal bytes.
void cmd_selftest(const Options& o, Report& r) {
  r.doc = header("selftest");
  r.doc["seed"] = o.seed;
  Json checks = Json::array();
  const Rng base(o.seed);
  std::uint64_t tag = 0;
  auto record = [&](const std::string& name, std::size_t passed, std::size_t total, const Json& detail) {
    Json c{{"check", name}, {"passed", passed}, {"total", total}, {"ok", passed == total}};
    if (!detail.is_null()) c["first_failure"] = detail;
    if (passed != total) r.fail(c);
    r.text << (passed == total ? "PASS " : "FAIL ") << name << " " << passed << "/" << total << "\n";
    checks.push_back(c);
  };

  for (std::string s : {"A2", "B2", "B3", "C3", "D4", "E6"}) {
    std::size_t n = 0;
    auto f = verify_commutator_formula(ChevalleySystem::parse(s), Ring::integers(), {-2, -1, 0, 1, 2}, &n);
    record("verify-r2 " + s + "/Z", f ? 0 : n, n, f ? Json{{"s", f->s}, {"t", f->t}} : Json());
  }

  const std::size_t per = o.trials > 1 ? o.trials : 5;
  const std::vector<std::pair<std::string, std::string>> systems = {{"B3", "F5"}, {"C3", "F7"}, {"B4", "Z/8"}, {"E6", "F2"}};
  for (const auto& [s, ring] : systems) {
    SystemPtr sys = ChevalleySystem::parse(s);
    Ring R = Ring::parse(ring);
    std::size_t ok = 0;
    Json first;
    for (std::size_t t = 0; t < per; ++t) {
      Rng rng = base.split(tag++);
      SteinbergWord w = random_word(rng, sys, R, 16);
      bool pass = false;
      try {
        DVDecomposition d = factorize_dv(w);
        pass = certify(d, w) && d.reduced;
      } catch (const Error&) {
      }
      if (pass)
        ++ok;
      else if (first.is_null())
        first = Json{{"input_word", word_json(w)}};
    }
    record("factorize " + s + "/" + ring, ok, per, first);
  }

  for (const auto& [s, ring] : systems) {
    SystemPtr sys = ChevalleySystem::parse(s);
    Ring R = Ring::parse(ring);
    const RootSystem& rs = sys->roots();
    ParabolicPair pp = parabolic_pair(rs);
    std::size_t ok = 0;
    Json first;
    for (std::size_t t = 0; t < per; ++t) {
      Rng rng = base.split(tag++);
      SteinbergWord w = random_relator(rng, sys, R) *
                        random_word(rng, sys, R, 8, [&](RootId a) { return rs.coeff(a, pp.j) == 0; });
      bool pass = false;
      try {
        pass = certify_split(w, stab_kernel_express(w), pp.i, pp.j);
      } catch (const Error&) {
      }
      if (pass)
        ++ok;
      else if (first.is_null())
        first = Json{{"input_word", word_json(w)}};
    }
    record("dv-reduce " + s + "/" + ring, ok, per, first);
  }

  for (std::string ring : {"F5", "Z/12", "Z"}) {
    Ring R = Ring::parse(ring);
    std::size_t ok = 0, total = 0;
    Json first;
    for (std::size_t t = 0; t < per; ++t) {
      Rng rng = base.split(tag++);
      for (std::size_t h = 3; h <= 5; ++h, ++total) {
        Vec v = random_unimodular(rng, R, h);
        bool pass = false;
        try {
          pass = certify_pair(v, simple_lemma_reduce(v), false);
        } catch (const Error&) {
        }
        if (pass)
          ++ok;
        else if (first.is_null())
          first = Json{{"column", vec_json(v)}};
      }
      for (std::size_t l = R.is_finite() ? 2 : 3; l <= 3; ++l, ++total) {
        Vec v = random_isotropic(rng, R, l);
        bool pass = false;
        try {
          pass = certify_pair(v, asr_reduce(v), true);
        } catch (const Error&) {
        }
        if (pass)
          ++ok;
        else if (first.is_null())
          first = Json{{"column", vec_json(v)}};
      }
    }
    record("reduce-column " + ring, ok, total, first);
  }

  for (std::string ring : {"Z/9", "F7"}) {
    Ring R = Ring::parse(ring);
    std::size_t ok = 0, total = 0;
    for (std::size_t t = 0; t < per; ++t) {
      Rng rng = base.split(tag++);
      for (std::size_t n = 1; n <= 3; ++n) {
        Mat x(R, n, n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) x.set(a, b, random_element(rng, R));
        Int xi = random_element(rng, R);
        try {
          TildeGenerator g = tilde_E_generator(x, RingValue(R, xi));
          ++total;
          ok += g.verify() && (n > 1 || g.g.is_identity()) ? 1 : 0;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotInvertible) ++total;
        }
      }
    }
    record("tilde-generator " + ring, ok, total, Json());
  }

  r.doc["checks"] = checks;
  r.doc["ok"] = r.ok;
}

void add_common(CLI::App* sub, Options& o, bool system, bool ring) {
  if (system) sub->add_option("system", o.system, "Root system, e.g. B3, E6")->required();
  if (ring) sub->add_option("--ring", o.ring, "Z, Z/<n> or F<p>");
  sub->add_flag("--json", o.json, "Emit JSON");
  sub->add_option("--out", o.out, "Write the report to a file");
}

void add_trials(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "PRNG seed");
  auto* trials = sub->add_option("--trials", o.trials, "Number of trials");
  trials->check(CLI::PositiveNumber);
  sub->add_flag("--timings", o.timings, "Include wall-clock timings");
  sub->add_flag("--inject-fault", o.inject_fault, "Corrupt the first result (exit code testing)")->group("");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Chevalley groups: Steinberg words, stability reductions and DV factorization", "chevdv"};
  app.require_subcommand(1);

  auto* roots = app.add_subcommand("roots", "List the roots of a system");
  add_common(roots, o, true, false);
  auto* constants = app.add_subcommand("constants", "Dump the commutator constants");
  add_common(constants, o, true, false);
  auto* rep = app.add_subcommand("rep", "Weight diagram of the basic representation");
  add_common(rep, o, true, false);

  auto* r2 = app.add_subcommand("verify-r2", "Check the commutator formula in the representation");
  add_common(r2, o, true, true);
  r2->add_option("--samples", o.samples, "Sample points per variable");
  r2->add_option("--seed", o.seed, "PRNG seed for points beyond the grid");
  r2->add_flag("--timings", o.timings, "Include wall-clock timings");

  auto* fact = app.add_subcommand("factorize", "Factor words as u v a p");
  auto* dvr = app.add_subcommand("dv-reduce", "Split kernel words as a b");
  for (auto* sub : {fact, dvr}) {
    add_common(sub, o, true, true);
    add_trials(sub, o);
    auto* word = sub->add_option("--word", o.word_file, "Word file, one 'coeffs;param' per line");
    auto* random = sub->add_option("--random", o.random_len, "Random word length");
    word->excludes(random);
  }

  auto* col = app.add_subcommand("reduce-column", "Stable range reduction of a unimodular column");
  add_common(col, o, false, true);
  add_trials(col, o);
  auto* column = col->add_option("--column", o.column, "Comma separated entries");
  auto* random = col->add_option("--random", o.random_len, "Random column height");
  column->excludes(random);
  col->add_option("--mode", o.mode, "simple or asr");

  auto* self = app.add_subcommand("selftest", "Deterministic campaign over all modules");
  self->add_option("--seed", o.seed, "PRNG seed");
  self->add_option("--trials", o.trials, "Trials per check (default 5)");
  self->add_flag("--json", o.json, "Emit JSON");
  self->add_option("--out", o.out, "Write the report to a file");

  std::vector<std::string> owned{"chevdv"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Report report;
  try {
    if (roots->parsed()) cmd_roots(o, report);
    else if (constants->parsed()) cmd_constants(o, report);
    else if (rep->parsed()) cmd_rep(o, report);
    else if (r2->parsed()) cmd_verify_r2(o, report);
    else if (fact->parsed()) cmd_factorize(o, report);
    else if (dvr->parsed()) cmd_dv_reduce(o, report);
    else if (col->parsed()) cmd_reduce_column(o, report);
    else if (self->parsed()) cmd_selftest(o, report);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kCertificationFailure;
  }

  if (report.counterexample) {
    report.doc["counterexample"] = *report.counterexample;
    err << "certification failed; first counterexample:\n" << report.counterexample->dump() << "\n";
  }
  std::string body = o.json ? report.doc.dump(2) + "\n" : report.text.str();
  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "cannot write '" << o.out << "'\n";
      return kUsage;
    }
    file << body;
  } else {
    out << body;
  }
  return report.ok ? kOk : kCertificationFailure;
}

}  // namespace chevdv::cli
