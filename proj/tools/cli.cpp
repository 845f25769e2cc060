// Copyright 2026 The ctsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ctsynth/diagonal.hpp"
#include "ctsynth/pipeline.hpp"
#include "ctsynth/synth.hpp"

namespace ctsynth::cli {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommonFlags {
  std::string epsilon = "1e-10";
  long precision_bits = 0;
  std::uint64_t seed = 1;
  int max_k = 0;
  std::string format = "text";
  std::string eps0;
  std::string eps_tilde;
};

struct Settings {
  Real epsilon;
  long precision_bits;
  RandomSeed seed;
  int max_k;
  bool json;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--epsilon", f.epsilon, "Target accuracy in (0, 1/2)")->capture_default_str();
  app->add_option("--precision-bits", f.precision_bits, "Working precision (default 4 log2(1/eps) + 64)");
  app->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  app->add_option("--max-k", f.max_k, "Largest denominator exponent searched");
  app->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app->add_option("--eps0", f.eps0, "Constant eps0 in (0, 1)");
  app->add_option("--eps-tilde", f.eps_tilde, "Constant eps_tilde in (0, 1/2)");
}

Real parse_real(const std::string& text, long prec, const std::string& what) {
  try {
    return Real::parse(text, prec);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed " + what + ": '" + text + "'");
  }
}

Settings resolve(const CommonFlags& f) {
  Real eps = parse_real(f.epsilon, 128, "epsilon");
  if (!(eps.sign() > 0) || !(eps < Real(0.5, 128))) throw UsageError("epsilon must lie in (0, 1/2)");
  if (f.precision_bits != 0 && f.precision_bits < 64) throw UsageError("precision-bits must be at least 64");
  if (f.max_k < 0) throw UsageError("max-k must be positive");
  long prec = f.precision_bits > 0 ? f.precision_bits : default_precision_bits(eps);
  return {parse_real(f.epsilon, prec, "epsilon"), prec, RandomSeed{f.seed}, f.max_k, f.format == "json"};
}

LemmaConstants constants(const CommonFlags& f, const Settings& s) {
  LemmaConstants d = LemmaConstants::defaults_for(s.epsilon);
  Real eps_tilde = f.eps_tilde.empty() ? d.eps_tilde : parse_real(f.eps_tilde, s.precision_bits, "eps-tilde");
  Real eps0 = f.eps0.empty() ? d.eps0 : parse_real(f.eps0, s.precision_bits, "eps0");
  try {
    LemmaConstants c = LemmaConstants::make(eps_tilde, eps0);
    lemma_bound(c, s.epsilon);
    return c;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct TargetArgs {
  std::string alpha_re, alpha_im, beta_re, beta_im;
};

void add_target(CLI::App* app, TargetArgs& t) {
  app->add_option("alpha_re", t.alpha_re, "Re(alpha)")->required();
  app->add_option("alpha_im", t.alpha_im, "Im(alpha)")->required();
  app->add_option("beta_re", t.beta_re, "Re(beta)")->required();
  app->add_option("beta_im", t.beta_im, "Im(beta)")->required();
}

UnitaryTarget parse_target(const TargetArgs& t, long prec) {
  try {
    return UnitaryTarget::from_components(parse_real(t.alpha_re, prec, "number"), parse_real(t.alpha_im, prec, "number"),
                                          parse_real(t.beta_re, prec, "number"), parse_real(t.beta_im, prec, "number"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json target_json(const TargetArgs& t) {
  return {{"alpha", {t.alpha_re, t.alpha_im}}, {"beta", {t.beta_re, t.beta_im}}};
}

std::string digits(const Real& x) { return x.to_string(6); }

json t_counts_json(const TCounts& t) {
  return {{"left", t.left}, {"middle", t.middle}, {"right", t.right}, {"total", t.total}};
}

int cmd_approx(const CommonFlags& f, const TargetArgs& t, std::ostream& out) {
  Settings s = resolve(f);
  LemmaConstants c = constants(f, s);
  UnitaryTarget target = parse_target(t, s.precision_bits);
  ApproxResult r = approximate(target, s.epsilon, c, s.seed, {s.max_k, s.precision_bits});
  if (s.json) {
    json j = {{"target", target_json(t)},
              {"epsilon", f.epsilon},
              {"branch", to_string(r.branch)},
              {"word", r.word.str()},
              {"word_left", r.word_left.str()},
              {"word_middle", r.word_middle.str()},
              {"word_right", r.word_right.str()},
              {"k", r.k},
              {"t_counts", t_counts_json(r.t_counts)},
              {"distance", digits(r.achieved_distance)},
              {"bound", digits(r.bound)},
              {"gamma", r.gamma ? to_json(*r.gamma) : json(nullptr)}};
    if (r.angles) {
      j["theta1"] = r.angles->theta1.theta.to_string(30);
      j["theta2"] = r.angles->theta2.theta.to_string(30);
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "word: " << r.word.str() << '\n'
      << "branch: " << to_string(r.branch) << '\n'
      << "k: " << r.k << '\n'
      << "t_count: left=" << r.t_counts.left << " middle=" << r.t_counts.middle << " right=" << r.t_counts.right
      << " total=" << r.t_counts.total << '\n'
      << "distance: " << digits(r.achieved_distance) << '\n'
      << "bound: " << digits(r.bound) << '\n';
  return kOk;
}

int cmd_diag(const CommonFlags& f, const std::string& theta_text, std::ostream& out) {
  Settings s = resolve(f);
  Real theta = parse_real(theta_text, s.precision_bits, "theta");
  DiagonalApproxRequest req{{theta}, s.epsilon, s.seed, s.max_k > 0 ? s.max_k : default_diagonal_max_k(s.epsilon),
                            s.precision_bits};
  auto r = approximate_diagonal(req);
  if (!r) throw NonHaltingError("diagonal approximation exceeded max_k = " + std::to_string(req.max_k));
  if (s.json) {
    auto u = r->gate.to_exact_unitary();
    json j = {{"theta", theta_text},   {"epsilon", f.epsilon},         {"word", r->word.str()},
              {"k", r->k},             {"t_count", r->word.t_count()}, {"distance", digits(r->distance)},
              {"unitary", u ? to_json(*u) : json(nullptr)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "word: " << r->word.str() << '\n'
      << "k: " << r->k << '\n'
      << "t_count: " << r->word.t_count() << '\n'
      << "distance: " << digits(r->distance) << '\n';
  return kOk;
}

std::string read_source(const std::string& source) {
  if (source.empty() || source[0] != '@') return source;
  std::ifstream in(source.substr(1));
  if (!in) throw UsageError("cannot read " + source.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_synth(const CommonFlags& f, const std::string& source, std::ostream& out) {
  ExactUnitary u;
  try {
    u = exact_unitary_from_json(json::parse(read_source(source)));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed exact unitary: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  GateWord w = exact_synthesize(u);
  if (f.format == "json") {
    out << json({{"word", w.str()}, {"t_count", w.t_count()}}).dump(2) << '\n';
  } else {
    out << "word: " << w.str() << '\n' << "t_count: " << w.t_count() << '\n';
  }
  return kOk;
}

int cmd_verify(const CommonFlags& f, const std::string& word_text, const TargetArgs& t, std::ostream& out) {
  Settings s = resolve(f);
  GateWord w;
  try {
    w = GateWord(word_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Verification v = verify(parse_target(t, s.precision_bits), w, s.precision_bits);
  if (s.json) {
    out << json({{"distance", digits(v.distance)}, {"t_count", v.t_count}}).dump(2) << '\n';
  } else {
    out << "distance: " << digits(v.distance) << '\n' << "t_count: " << v.t_count << '\n';
  }
  return kOk;
}

int cmd_bench(const CommonFlags& f, long n, std::optional<double> alpha_max, std::ostream& out,
              std::ostream& err) {
  Settings s = resolve(f);
  if (n < 1) throw UsageError("bench needs at least one target");
  BenchmarkOptions opts;
  opts.alpha_max = alpha_max;
  if (!f.eps0.empty() || !f.eps_tilde.empty()) opts.consts = constants(f, s);
  opts.approx = {s.max_k, s.precision_bits};
  BenchmarkSummary b = benchmark(static_cast<std::size_t>(n), s.epsilon, s.seed, opts);
  if (s.json) {
    json rows = json::array();
    for (const BenchmarkRow& r : b.rows) {
      json row = {{"target_index", r.target_index}, {"success", r.success}, {"millis", r.millis}};
      if (r.completed) {
        row["branch"] = to_string(r.branch);
        row["k"] = r.k;
        row["t_counts"] = t_counts_json(r.t_counts);
        row["distance"] = digits(r.distance);
        row["bound"] = digits(r.bound);
      }
      if (!r.error.empty()) row["error"] = r.error;
      rows.push_back(row);
    }
    json summary = {{"success_rate", b.success_rate}, {"mean_t_count", b.mean_t_count},
                    {"median_t_count", b.median_t_count}, {"mean_k", b.mean_k},
                    {"median_k", b.median_k}, {"wall_millis", b.wall_millis}};
    out << json({{"rows", rows}, {"summary", summary}}).dump(2) << '\n';
    return kOk;
  }
  out << to_csv(b);
  err << "success_rate: " << b.success_rate << '\n'
      << "mean_t_count: " << b.mean_t_count << '\n'
      << "median_t_count: " << b.median_t_count << '\n'
      << "mean_k: " << b.mean_k << '\n'
      << "median_k: " << b.median_k << '\n'
      << "wall_millis: " << static_cast<long>(b.wall_millis) << '\n';
  return kOk;
}

json coefficient(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class coefficient_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed integer " + j.dump());
    return z;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

json to_json(const ZRoot2& x) { return json::array({coefficient(x.a()), coefficient(x.b())}); }

ZRoot2 zroot2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [a, b], got " + j.dump());
  return ZRoot2(coefficient_from_json(j[0]), coefficient_from_json(j[1]));
}

json to_json(const ExactUnitary& u) {
  json xs = json::array();
  for (const ZRoot2& x : u.x) xs.push_back(to_json(x));
  return {{"x", xs}, {"k", u.k}};
}

ExactUnitary exact_unitary_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("k")) {
    throw std::invalid_argument("expected {\"x\": [...], \"k\": k}");
  }
  const json& xs = j.at("x");
  if (!xs.is_array() || xs.size() != 4) throw std::invalid_argument("\"x\" must hold four elements");
  if (!j.at("k").is_number_integer()) throw std::invalid_argument("\"k\" must be an integer");
  return make_exact_unitary(zroot2_from_json(xs[0]), zroot2_from_json(xs[1]), zroot2_from_json(xs[2]),
                            zroot2_from_json(xs[3]), j.at("k").get<int>());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford+T approximation of single-qubit gates", "ctsynth"};
  app.require_subcommand(1);

  CommonFlags f;
  TargetArgs target;
  std::string theta, source, word;
  long n = 0;
  std::optional<double> alpha_max;

  CLI::App* approx = app.add_subcommand("approx", "Approximate u(alpha, beta)");
  add_common(approx, f);
  add_target(approx, target);

  CLI::App* diag = app.add_subcommand("diag", "Approximate the diagonal rotation u(theta)");
  add_common(diag, f);
  diag->add_option("theta", theta, "Angle in radians")->required();

  CLI::App* synth = app.add_subcommand("synth", "Exact synthesis of an exact unitary given as JSON");
  add_common(synth, f);
  synth->add_option("unitary", source, "JSON text, or @path")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Distance between a word and u(alpha, beta)");
  add_common(verify_cmd, f);
  verify_cmd->add_option("word", word, "Gate word over {H, S, T}")->required();
  add_target(verify_cmd, target);

  CLI::App* bench = app.add_subcommand("bench", "Benchmark on Haar-random targets (CSV)");
  add_common(bench, f);
  bench->add_option("n", n, "Number of targets")->required();
  bench->add_option("--alpha-max", alpha_max, "Resample targets with |alpha| above this");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*approx) return cmd_approx(f, target, out);
    if (*diag) return cmd_diag(f, theta, out);
    if (*synth) return cmd_synth(f, source, out);
    if (*verify_cmd) return cmd_verify(f, word, target, out);
    return cmd_bench(f, n, alpha_max, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonHaltingError& e) {
    err << "error: " << e.what() << '\n';
    return kNonHalting;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace ctsynth::cli
