// Copyright 2026 The nctorus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "nctorus/serialization.hpp"
#include "nctorus/suites.hpp"
#include "theta_expr.hpp"

namespace nctorus::cli {

namespace {

struct RunConfig {
  std::string theta_text = "0.2";
  std::string nm_text = "1,2";
  std::string kl_text = "1,3";
  std::string tau_text = "0,-1";
  std::string c1_text = "0,0";
  std::string c2_text = "0,0";
  std::string bezout_nm_text;
  std::string bezout_kl_text;
  double tol = 1e-9;
  int qmax = kDefaultQmax;
  std::uint64_t seed = 1;
  int instances = 20;
  std::string output;
  std::string format = "json";

  // Resolved by resolve().
  double theta = 0.0;
  int n = 1, m = 1, k = 1, l = 1;
  std::optional<BezoutPair> bezout_nm, bezout_kl;
  ComplexStructure cs;
};

struct TensorOptions {
  double z = 0.0;
  int delta = 0;
  int alpha = 0;
  int beta = 0;
  bool zero_inputs = false;
  std::string sigma1_text, sigma2_text, gauss_c1_text, gauss_c2_text;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

[[noreturn]] void parse_fail(const std::string& flag, const std::string& text, const std::string& expected) {
  throw Error(ErrorKind::ParseError, flag + " \"" + text + "\": expected " + expected);
}

int parse_int(const std::string& flag, const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) parse_fail(flag, text, "an integer");
  return value;
}

std::pair<int, int> parse_int_pair(const std::string& flag, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) parse_fail(flag, text, "a pair \"p,q\"");
  return {parse_int(flag, parts[0]), parse_int(flag, parts[1])};
}

double parse_real(const std::string& flag, const std::string& text) {
  try {
    const double value = evaluate_expression(text);
    if (!std::isfinite(value)) parse_fail(flag, text, "a finite number");
    return value;
  } catch (const Error&) {
    parse_fail(flag, text, "a number");
  }
}

// "re,im" or a bare real.
Complex parse_complex(const std::string& flag, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(flag, parts[0]), 0.0};
  if (parts.size() != 2) parse_fail(flag, text, "a complex number \"re,im\"");
  return {parse_real(flag, parts[0]), parse_real(flag, parts[1])};
}

void resolve(RunConfig& cfg) {
  cfg.theta = parse_real("--theta", cfg.theta_text);
  std::tie(cfg.n, cfg.m) = parse_int_pair("--nm", cfg.nm_text);
  std::tie(cfg.k, cfg.l) = parse_int_pair("--kl", cfg.kl_text);
  if (cfg.m < 1) throw Error(ErrorKind::NotCoprime, "--nm: m must be positive, got " + std::to_string(cfg.m));
  if (cfg.l < 1) throw Error(ErrorKind::NotCoprime, "--kl: l must be positive, got " + std::to_string(cfg.l));
  if (!cfg.bezout_nm_text.empty()) {
    const auto [a, b] = parse_int_pair("--bezout-nm", cfg.bezout_nm_text);
    cfg.bezout_nm = bezout_from(a, b, cfg.n, cfg.m);
  } else {
    cfg.bezout_nm = bezout(cfg.n, cfg.m);
  }
  if (!cfg.bezout_kl_text.empty()) {
    const auto [c, d] = parse_int_pair("--bezout-kl", cfg.bezout_kl_text);
    cfg.bezout_kl = bezout_from(c, d, cfg.k, cfg.l);
  } else {
    cfg.bezout_kl = bezout(cfg.k, cfg.l);
  }
  cfg.cs.tau = parse_complex("--tau", cfg.tau_text);
  cfg.cs.c1 = parse_complex("--c1", cfg.c1_text);
  cfg.cs.c2 = parse_complex("--c2", cfg.c2_text);
  validate(cfg.cs);
  if (!(cfg.tol > 0.0)) throw Error(ErrorKind::ParseError, "--tol must be positive");
  if (cfg.qmax < 1) throw Error(ErrorKind::ParseError, "--qmax must be positive");
  if (cfg.instances < 1) throw Error(ErrorKind::ParseError, "--instances must be positive");
}

ProductParams product_params(const RunConfig& cfg) {
  return ProductParams::make(cfg.n, cfg.m, cfg.k, cfg.l, cfg.theta, cfg.bezout_nm, cfg.bezout_kl);
}

SuiteConfig suite_config(const RunConfig& cfg) {
  SuiteConfig s;
  s.theta = cfg.theta;
  s.n = cfg.n;
  s.m = cfg.m;
  s.k = cfg.k;
  s.l = cfg.l;
  s.bezout_nm = cfg.bezout_nm;
  s.bezout_kl = cfg.bezout_kl;
  s.cs = cfg.cs;
  s.tol = cfg.tol;
  s.qmax = cfg.qmax;
  s.seed = cfg.seed;
  s.instances = cfg.instances;
  return s;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

Json config_json(const RunConfig& cfg, const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  Json c;
  c["theta"] = cfg.theta;
  c["theta_expr"] = cfg.theta_text;
  c["nm"] = Json::array({cfg.n, cfg.m});
  c["kl"] = Json::array({cfg.k, cfg.l});
  c["bezout_nm"] = to_json(*cfg.bezout_nm);
  c["bezout_kl"] = to_json(*cfg.bezout_kl);
  c["complex_structure"] = to_json(cfg.cs);
  c["tol"] = cfg.tol;
  c["qmax"] = cfg.qmax;
  c["seed"] = cfg.seed;
  j["config"] = std::move(c);
  return j;
}

Json checks_json(const std::vector<CheckResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json e;
    e["name"] = r.name;
    e["residual"] = r.residual;
    e["tol"] = r.tol;
    e["status"] = std::string(to_string(r.status));
    if (!r.note.empty()) e["note"] = r.note;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string checks_csv(const std::vector<CheckResult>& results) {
  std::string s = "check,residual,tol,status\n";
  for (const auto& r : results) {
    s += r.name + "," + format_number(r.residual) + "," + format_number(r.tol) + "," +
         std::string(to_string(r.status)) + "\n";
  }
  return s;
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void emit(const Json& doc, const std::string& csv) const {
    const std::string text = cfg_.format == "csv" ? csv : doc.dump(2) + "\n";
    if (cfg_.output.empty() || cfg_.output == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(cfg_.output, std::ios::binary);
    if (!file) throw Error(ErrorKind::ParseError, "--output: cannot open \"" + cfg_.output + "\"");
    file << text;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

int status_of(const std::vector<CheckResult>& results) {
  return all_passed(results) ? kOk : kResidualFailure;
}

int cmd_algebra_check(const RunConfig& cfg, const Emitter& emitter) {
  const auto results = algebra_suite(suite_config(cfg));
  Json doc = config_json(cfg, "algebra-check");
  doc["checks"] = checks_json(results);
  doc["passed"] = all_passed(results);
  emitter.emit(doc, checks_csv(results));
  return status_of(results);
}

int cmd_theta_basis(const RunConfig& cfg, const std::string& side, const Emitter& emitter) {
  const ModuleTag tag = side == "left" ? ModuleTag::left(cfg.k, cfg.l, cfg.theta, cfg.bezout_kl)
                                       : ModuleTag::right(cfg.n, cfg.m, cfg.theta, cfg.bezout_nm);
  const auto basis = holomorphic_basis(tag, cfg.cs);
  Json doc = config_json(cfg, "theta-basis");
  doc["module"] = to_json(tag);
  Json vectors = Json::array();
  std::string csv = "index,mu,sigma_re,sigma_im,c_re,c_im,dbar_residual\n";
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const PolyGaussTerm& term = basis[i].terms().front();
    const double residual = dbar_residual(basis[i], tag, cfg.cs);
    worst = std::max(worst, residual);
    Json e;
    e["index"] = i;
    e["mu"] = term.mu;
    e["sigma"] = to_json(term.sigma);
    e["c"] = to_json(term.c);
    e["dbar_residual"] = residual;
    vectors.push_back(std::move(e));
    csv += std::to_string(i) + "," + std::to_string(term.mu) + "," + format_number(term.sigma.real()) + "," +
           format_number(term.sigma.imag()) + "," + format_number(term.c.real()) + "," +
           format_number(term.c.imag()) + "," + format_number(residual) + "\n";
  }
  doc["vectors"] = std::move(vectors);
  doc["max_dbar_residual"] = worst;
  doc["passed"] = worst <= cfg.tol;
  emitter.emit(doc, csv);
  return worst <= cfg.tol ? kOk : kResidualFailure;
}

int cmd_tensor(const RunConfig& cfg, const TensorOptions& opt, const Emitter& emitter) {
  const ProductParams p = product_params(cfg);
  if (opt.alpha < 0 || opt.alpha >= p.m) {
    throw Error(ErrorKind::IndexOutOfRange, "--alpha must lie in [0, " + std::to_string(p.m) + ")");
  }
  if (opt.beta < 0 || opt.beta >= p.l) {
    throw Error(ErrorKind::IndexOutOfRange, "--beta must lie in [0, " + std::to_string(p.l) + ")");
  }
  if (opt.delta < 0 || opt.delta >= p.M()) {
    throw Error(ErrorKind::IndexOutOfRange, "--delta must lie in [0, " + std::to_string(p.M()) + ")");
  }

  PolyGaussVector f(p.m), g(p.l);
  Complex closed{};
  std::string source;
  if (opt.zero_inputs) {
    source = "zero";
  } else {
    Complex sigma1, c1, sigma2, c2;
    if (!opt.sigma1_text.empty() || !opt.sigma2_text.empty()) {
      if (opt.sigma1_text.empty() || opt.sigma2_text.empty()) {
        throw Error(ErrorKind::ParseError, "--sigma1 and --sigma2 must be given together");
      }
      source = "gaussian";
      sigma1 = parse_complex("--sigma1", opt.sigma1_text);
      sigma2 = parse_complex("--sigma2", opt.sigma2_text);
      c1 = opt.gauss_c1_text.empty() ? Complex{} : parse_complex("--gauss-c1", opt.gauss_c1_text);
      c2 = opt.gauss_c2_text.empty() ? Complex{} : parse_complex("--gauss-c2", opt.gauss_c2_text);
      f = PolyGaussVector::gaussian(p.m, opt.alpha, sigma1, c1);
      g = PolyGaussVector::gaussian(p.l, opt.beta, sigma2, c2);
    } else {
      source = "theta_basis";
      const Complex offset = holomorphic_offset(cfg.cs);
      f = right_factor_basis(p, cfg.cs.tau, offset)[static_cast<std::size_t>(opt.alpha)];
      g = left_factor_basis(p, cfg.cs.tau, offset)[static_cast<std::size_t>(opt.beta)];
      sigma1 = f.terms().front().sigma;
      c1 = f.terms().front().c;
      sigma2 = g.terms().front().sigma;
      c2 = g.terms().front().c;
    }
    closed = tensor_gaussian_closed(opt.alpha, opt.beta, sigma1, c1, sigma2, c2, p).evaluate(opt.z, opt.delta);
  }
  const Complex direct = tensor_direct(f, g, p, opt.z, opt.delta, cfg.qmax);
  const double diff = std::abs(direct - closed);
  const bool passed = diff <= cfg.tol * (1.0 + std::abs(direct));

  Json doc = config_json(cfg, "tensor");
  doc["inputs"] = {{"source", source}, {"alpha", opt.alpha}, {"beta", opt.beta}, {"f", to_json(f)},
                   {"g", to_json(g)}};
  doc["z"] = opt.z;
  doc["delta"] = opt.delta;
  doc["direct"] = to_json(direct);
  doc["closed_form"] = to_json(closed);
  doc["abs_diff"] = diff;
  doc["passed"] = passed;
  const std::string csv = "z,delta,direct_re,direct_im,closed_form_re,closed_form_im,abs_diff\n" +
                          format_number(opt.z) + "," + std::to_string(opt.delta) + "," +
                          format_number(direct.real()) + "," + format_number(direct.imag()) + "," +
                          format_number(closed.real()) + "," + format_number(closed.imag()) + "," +
                          format_number(diff) + "\n";
  emitter.emit(doc, csv);
  return passed ? kOk : kResidualFailure;
}

int cmd_structure_constants(const RunConfig& cfg, const Emitter& emitter) {
  const ProductParams p = product_params(cfg);
  const Complex offset = holomorphic_offset(cfg.cs);
  const StructureConstants sc = structure_constants(p, cfg.cs.tau, offset, offset);
  const auto checks = structure_checks(p, cfg.cs, cfg.tol, cfg.qmax);

  Json doc = config_json(cfg, "structure-constants");
  doc["structure_constants"] = structure_constants_json(sc, p, cfg.cs.tau, offset, offset);
  doc["cross_validation"] = checks_json(checks);
  doc["passed"] = all_passed(checks);

  std::string csv = "alpha,beta,gamma,re,im,q0\n";
  for (int alpha = 0; alpha < sc.m; ++alpha) {
    for (int beta = 0; beta < sc.l; ++beta) {
      for (int gamma = 0; gamma < sc.M; ++gamma) {
        const StructureEntry& e = sc.at(alpha, beta, gamma);
        csv += std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(gamma) + "," +
               format_number(e.value.real()) + "," + format_number(e.value.imag()) + "," +
               (e.q0 ? std::to_string(*e.q0) : std::string()) + "\n";
      }
    }
  }
  csv += "\n" + checks_csv(checks);
  emitter.emit(doc, csv);
  return status_of(checks);
}

int cmd_verify_all(const RunConfig& cfg, const Emitter& emitter) {
  const auto results = verification_suite(suite_config(cfg));
  Json doc = config_json(cfg, "verify-all");
  doc["profile"] = to_json(product_params(cfg).profile);
  doc["checks"] = checks_json(results);
  doc["passed"] = all_passed(results);
  emitter.emit(doc, checks_csv(results));
  return status_of(results);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--theta", cfg.theta_text, "Deformation parameter; accepts expressions such as sqrt2-1")
      ->capture_default_str();
  sub->add_option("--nm", cfg.nm_text, "Right module E_{n,m} as \"n,m\"")->capture_default_str();
  sub->add_option("--kl", cfg.kl_text, "Left module E'_{k,l} as \"k,l\"")->capture_default_str();
  sub->add_option("--tau", cfg.tau_text, "Complex structure tau as \"re,im\"")->capture_default_str();
  sub->add_option("--c1", cfg.c1_text, "Connection constant c1 as \"re,im\"")->capture_default_str();
  sub->add_option("--c2", cfg.c2_text, "Connection constant c2 as \"re,im\"")->capture_default_str();
  sub->add_option("--bezout-nm", cfg.bezout_nm_text, "Bezout pair \"a,b\" with a n - b m = 1");
  sub->add_option("--bezout-kl", cfg.bezout_kl_text, "Bezout pair \"c,d\" with c k - d l = 1");
  sub->add_option("--tol", cfg.tol, "Residual tolerance")->capture_default_str();
  sub->add_option("--qmax", cfg.qmax, "Cap on the q-summation window")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
  sub->add_option("--instances", cfg.instances, "Random instances per check")->capture_default_str();
  sub->add_option("-o,--output", cfg.output, "Write results to this file instead of stdout");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theta vectors and tensor products of modules over the noncommutative torus", "nctorus"};
  app.require_subcommand(1);
  RunConfig cfg;
  TensorOptions topt;
  std::string side = "right";

  auto* algebra = app.add_subcommand("algebra-check", "Algebra and module invariant suites");
  add_common(algebra, cfg);
  auto* basis = app.add_subcommand("theta-basis", "Holomorphic basis of a module");
  add_common(basis, cfg);
  basis->add_option("--side", side, "right uses --nm, left uses --kl")
      ->check(CLI::IsMember({"right", "left"}))
      ->capture_default_str();
  auto* tensor = app.add_subcommand("tensor", "Product map at one point: direct sum against closed form");
  add_common(tensor, cfg);
  tensor->add_option("--z", topt.z, "Evaluation point")->capture_default_str();
  tensor->add_option("--delta", topt.delta, "Component index in [0, M)")->capture_default_str();
  tensor->add_option("--alpha", topt.alpha, "Component of the right factor")->capture_default_str();
  tensor->add_option("--beta", topt.beta, "Component of the left factor")->capture_default_str();
  tensor->add_flag("--zero-inputs", topt.zero_inputs, "Use zero vectors for both factors");
  tensor->add_option("--sigma1", topt.sigma1_text, "Gaussian width of the right factor");
  tensor->add_option("--sigma2", topt.sigma2_text, "Gaussian width of the left factor");
  tensor->add_option("--gauss-c1", topt.gauss_c1_text, "Linear exponent of the right factor");
  tensor->add_option("--gauss-c2", topt.gauss_c2_text, "Linear exponent of the left factor");
  auto* structure = app.add_subcommand("structure-constants", "Expansion of products of theta vectors");
  add_common(structure, cfg);
  auto* verify = app.add_subcommand("verify-all", "Product identities, oracle and theta-basis checks");
  add_common(verify, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return kPreconditionError;
  }

  try {
    resolve(cfg);
    const Emitter emitter(cfg, out);
    if (algebra->parsed()) return cmd_algebra_check(cfg, emitter);
    if (basis->parsed()) return cmd_theta_basis(cfg, side, emitter);
    if (tensor->parsed()) return cmd_tensor(cfg, topt, emitter);
    if (structure->parsed()) return cmd_structure_constants(cfg, emitter);
    return cmd_verify_all(cfg, emitter);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionError;
  }
}

}  // namespace nctorus::cli
