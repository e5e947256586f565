// Batch driver: verifies series files against named relations, builds the
// associator and grt fixtures, prints dimension tables and theorem reports.
// Output is line-oriented "key: value" text ending in a VERDICT line; exit
// code 0 when every requested check holds, 1 when one fails, 2 on usage or
// input errors. Reports are byte-identical across runs.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "assoc/field.hpp"
#include "assoc/io.hpp"
#include "assoc/relations.hpp"
#include "assoc/series.hpp"
#include "assoc/solver.hpp"

namespace {

using namespace assoc;

void print_terms(const char* key, const Series& s) {
  std::cout << key << "s: " << s.terms().size() << "\n";
  const AlphabetPtr& a = s.alphabet();
  for (const auto& [w, c] : s.terms())
    std::cout << key << ": " << a->word_str(w) << ' ' << scalar_str(c) << "\n";
}

void print_residual_block(const std::string& name, int truncation, const Residual& r) {
  std::cout << "relation: " << name << "\n";
  std::cout << "truncation: " << truncation << "\n";
  std::cout << "holds: " << (r.holds ? "yes" : "no") << "\n";
  if (!r.holds) {
    if (r.first_failing_degree)
      std::cout << "first_failing_degree: " << *r.first_failing_degree << "\n";
    print_terms("residual_term", r.residual);
  }
}

void print_check(const std::string& name, const Residual& r) {
  std::cout << "check: " << name << (r.holds ? " holds" : " fails");
  if (!r.holds && r.first_failing_degree)
    std::cout << " first_failing_degree=" << *r.first_failing_degree;
  std::cout << "\n";
  if (!r.holds) print_terms("residual_term", r.residual);
}

int verdict(bool pass) {
  std::cout << "VERDICT: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

Scalar parse_scalar_flag(const std::string& text, const char* flag) {
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string(flag) + ": " + e.what());
  }
}

// Every computation in this binary runs on a single worker, so reports stay
// byte-identical whatever the cap; the variable is validated and honored
// trivially.
void check_thread_cap() {
  const char* v = std::getenv("ASSOC_THREADS");
  if (!v) return;
  std::string s(v);
  if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos ||
      s == std::string(s.size(), '0'))
    throw std::runtime_error("ASSOC_THREADS must be a positive integer");
}

// Reads a series file and promotes it to a verified associator pair; mu is
// recovered from the quadratic coefficient.
MPair load_assoc(const std::string& path, int N) {
  Series phi = series_from_text(read_text_file(path));
  MPair pair = verify_mpair(mu_from_c2(phi).first, phi, N);
  if (!mpair_verified(pair, N))
    throw std::runtime_error("associator file fails pentagon or hexagon verification at degree " +
                             std::to_string(N) + ": " + path);
  return pair;
}

struct VerifyOpts {
  std::string relation, input, mu, lambda, assoc;
  int degree = 0;
};

int run_verify(const VerifyOpts& o) {
  const std::set<std::string> known{kPentagon, kHexagonA, kHexagonB, k5Cycle,
                                    k2Cycle,   k3Cycle,   kSpecial3Cycle,
                                    kSDA5,     kSDA3,     kSDA2,
                                    kGT2,      kGT3,      kGT5};
  if (!known.count(o.relation)) throw std::runtime_error("unknown relation: " + o.relation);
  bool needs_mu = o.relation == kHexagonA || o.relation == kHexagonB || o.relation == k3Cycle;
  bool needs_lambda = o.relation == kGT3;
  bool needs_assoc = o.relation == kGT5;
  if (needs_mu && o.mu.empty())
    throw std::runtime_error("relation " + o.relation + " requires --mu");
  if (!needs_mu && !o.mu.empty())
    throw std::runtime_error("--mu is not used by relation " + o.relation);
  if (needs_lambda && o.lambda.empty())
    throw std::runtime_error("relation " + o.relation + " requires --lambda");
  if (!needs_lambda && !o.lambda.empty())
    throw std::runtime_error("--lambda is not used by relation " + o.relation);
  if (needs_assoc && o.assoc.empty())
    throw std::runtime_error("relation " + o.relation + " requires --assoc");
  if (!needs_assoc && !o.assoc.empty())
    throw std::runtime_error("--assoc is not used by relation " + o.relation);

  std::string text = read_text_file(o.input);
  bool lie_input = o.relation == kSDA5 || o.relation == kSDA3 || o.relation == kSDA2;
  std::optional<Residual> res;
  if (lie_input) {
    LiePolynomial psi = lie_from_text(text);
    if (o.relation == kSDA5) res = check_sda5(psi, o.degree);
    if (o.relation == kSDA3) res = check_sda3(psi, o.degree);
    if (o.relation == kSDA2) res = check_sda2(psi, o.degree);
  } else {
    Series phi = series_from_text(text);
    if (o.relation == kPentagon) res = check_pentagon(phi, o.degree);
    if (o.relation == kHexagonA)
      res = check_hexagons(parse_scalar_flag(o.mu, "--mu"), phi, o.degree).first;
    if (o.relation == kHexagonB)
      res = check_hexagons(parse_scalar_flag(o.mu, "--mu"), phi, o.degree).second;
    if (o.relation == k5Cycle) res = check_5cycle(phi, o.degree);
    if (o.relation == k2Cycle) res = check_2cycle(phi, o.degree);
    if (o.relation == k3Cycle)
      res = check_3cycle(parse_scalar_flag(o.mu, "--mu"), phi, o.degree);
    if (o.relation == kSpecial3Cycle) res = check_special_3cycle(phi, o.degree);
    if (o.relation == kGT2) res = check_gt2(phi, o.degree);
    if (o.relation == kGT3)
      res = check_gt3(parse_scalar_flag(o.lambda, "--lambda"), phi, o.degree);
    if (o.relation == kGT5) res = check_gt5(phi, o.degree, load_assoc(o.assoc, o.degree));
  }

  std::cout << "command: verify\n";
  std::cout << "input: " << o.input << "\n";
  print_residual_block(o.relation, o.degree, *res);
  return verdict(res->holds);
}

int run_theorem(const char* command, const char* scalar_name, const std::string& input,
                int degree, const TheoremReport& rep, const Scalar& quad_coeff) {
  std::cout << "command: " << command << "\n";
  std::cout << "input: " << input << "\n";
  std::cout << "truncation: " << degree << "\n";
  std::cout << "subject: " << rep.subject << "\n";
  print_check(rep.checks[0].first, rep.checks[0].second);
  if (rep.hypothesis_met) {
    std::cout << "c2: " << scalar_str(quad_coeff) << "\n";
    std::cout << "d: " << rep.d.get_str() << "\n";
    if (rep.degenerate_zero) {
      std::cout << scalar_name << ": 0\n";
      std::cout << scalar_name << "_unique: yes\n";
    } else {
      std::cout << scalar_name << "_plus: " << scalar_str(rep.value_plus) << "\n";
      std::cout << scalar_name << "_minus: " << scalar_str(rep.value_minus) << "\n";
    }
    for (size_t i = 1; i < rep.checks.size(); ++i)
      print_check(rep.checks[i].first, rep.checks[i].second);
  }
  return verdict(rep.all_hold);
}

int run_theorem1(const std::string& input, int degree) {
  Series phi = series_from_text(read_text_file(input));
  TheoremReport rep = theorem1_run(phi, degree);
  return run_theorem("theorem1", "mu", input, degree, rep, c2(phi));
}

int run_theorem2(const std::string& input, int degree, const std::string& assoc_path) {
  Series f = series_from_text(read_text_file(input));
  MPair assoc = load_assoc(assoc_path, degree);
  TheoremReport rep = theorem2_run(f, degree, assoc);
  return run_theorem("theorem2", "lambda", input, degree, rep, c2(f));
}

int run_grt_dims(int max_degree) {
  if (max_degree < 2 || max_degree > kMaxCheckDegree)
    throw std::runtime_error("--max-degree out of range, expected 2.." +
                             std::to_string(kMaxCheckDegree));
  std::vector<int> dims;
  for (int n = 2; n <= max_degree; ++n) dims.push_back(grt1_dim(n));
  std::cout << "command: grt-dims\n";
  std::cout << "max_degree: " << max_degree << "\n";
  for (int n = 2; n <= max_degree; ++n) std::cout << "dim: " << n << ' ' << dims[n - 2] << "\n";
  return verdict(true);
}

int run_proof_steps(int degree) {
  if (degree < 2 || degree > kMaxCheckDegree)
    throw std::runtime_error("--degree out of range, expected 2.." +
                             std::to_string(kMaxCheckDegree));
  SolutionSpace space = sda5_solution_space(degree);
  std::vector<ProofCertificate> certs;
  for (const LiePolynomial& psi : space.basis) certs.push_back(proof_identity_verify(psi, degree));
  std::cout << "command: proof-steps\n";
  std::cout << "degree: " << degree << "\n";
  std::cout << "basis_dim: " << space.basis.size() << "\n";
  bool all = true;
  for (const ProofCertificate& cert : certs) {
    for (const ProofStep& st : cert.steps)
      std::cout << "step: " << st.name << (st.holds ? " holds" : " fails") << "\n";
    std::cout << "ad_coefficient: " << scalar_str(cert.ad_coefficient) << "\n";
    std::cout << "r_vanishes: " << (cert.r_vanishes ? "yes" : "no") << "\n";
    all = all && cert.passed;
  }
  return verdict(all);
}

void print_build_log(const BuildLog& log, const AlphabetPtr& alpha) {
  for (const DegreeRecord& r : log.records) {
    std::cout << "record: degree=" << r.degree << " unknowns=" << r.unknowns
              << " equations=" << r.equations << " rank=" << r.rank << "\n";
    for (const Word& w : r.free_words) std::cout << "free: " << alpha->word_str(w) << "\n";
    for (const auto& [w, c] : r.solved)
      std::cout << "solved: " << alpha->word_str(w) << ' ' << scalar_str(c) << "\n";
  }
}

int run_build_associator(const std::string& mu_text, int degree,
                         const std::string& output) {
  Scalar mu = parse_scalar_flag(mu_text, "--mu");
  BuildLog log;
  MPair m = build_associator(mu, degree, &log);
  std::cout << "command: build-associator\n";
  std::cout << "mu: " << scalar_str(mu) << "\n";
  std::cout << "degree: " << degree << "\n";
  print_build_log(log, m.phi.alphabet());
  std::cout << "c2: " << scalar_str(c2(m.phi)) << "\n";
  for (const auto& [name, at] : m.verified_at)
    std::cout << "verified: " << name << ' ' << at << "\n";
  if (!output.empty()) {
    write_text_file(output, series_to_text(m.phi));
    std::cout << "output: " << output << "\n";
  } else {
    print_terms("series_term", m.phi);
  }
  return verdict(true);
}

int run_build_grt(const std::string& seed_path, int degree, const std::string& output,
                  const std::string& act_on) {
  LiePolynomial seed = lie_from_text(read_text_file(seed_path));
  BuildLog log;
  Series g = build_grt1_element(seed, degree, &log);
  Residual cycle5 = check_5cycle(g, degree);
  Residual cycle2 = check_2cycle(g, degree);
  Residual special3 = check_special_3cycle(g, degree);
  std::optional<Series> twisted;
  std::optional<Residual> twisted_pentagon;
  if (!act_on.empty()) {
    Series base = series_from_text(read_text_file(act_on));
    twisted = grt_action(base, g);
    twisted_pentagon = check_pentagon(*twisted, twisted->truncation());
  }

  std::cout << "command: build-grt\n";
  std::cout << "seed: " << seed_path << "\n";
  std::cout << "degree: " << degree << "\n";
  print_build_log(log, g.alphabet());
  print_check(k5Cycle, cycle5);
  print_check(k2Cycle, cycle2);
  print_check(kSpecial3Cycle, special3);
  bool all = cycle5.holds && cycle2.holds && special3.holds;
  const Series* payload = &g;
  if (twisted) {
    std::cout << "acted_on: " << act_on << "\n";
    std::cout << "twisted_c2: " << scalar_str(c2(*twisted)) << "\n";
    print_check(kPentagon, *twisted_pentagon);
    all = all && twisted_pentagon->holds;
    payload = &*twisted;
  }
  if (!output.empty()) {
    write_text_file(output, series_to_text(*payload));
    std::cout << "output: " << output << "\n";
  } else {
    print_terms("series_term", *payload);
  }
  return verdict(all);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks and builders for associator-type relations on truncated series"};
  app.require_subcommand(1);

  VerifyOpts vo;
  CLI::App* v = app.add_subcommand("verify", "check one relation on a series file");
  v->add_option("--relation", vo.relation, "relation name")->required();
  v->add_option("--input", vo.input, "series file to check")->required();
  v->add_option("--degree", vo.degree, "truncation to check at")->required();
  v->add_option("--mu", vo.mu, "scalar for hexagon-a, hexagon-b and 3cycle");
  v->add_option("--lambda", vo.lambda, "scalar for gt3");
  v->add_option("--assoc", vo.assoc, "associator series file, required by gt5");

  std::string ba_mu, ba_output;
  int ba_degree = 0;
  CLI::App* ba = app.add_subcommand("build-associator",
                                    "solve the pentagon and hexagons degree by degree");
  ba->add_option("--mu", ba_mu, "hexagon scalar, nonzero")->required();
  ba->add_option("--degree", ba_degree, "target truncation")->required();
  ba->add_option("--output", ba_output, "write the series here instead of printing it");

  std::string bg_seed, bg_output, bg_act;
  int bg_degree = 0;
  CLI::App* bg = app.add_subcommand("build-grt",
                                    "extend a seed through the cycle relations");
  bg->add_option("--seed", bg_seed, "lyndon-basis seed file")->required();
  bg->add_option("--degree", bg_degree, "target truncation")->required();
  bg->add_option("--act-on", bg_act,
                 "act on this associator series and emit the twisted series");
  bg->add_option("--output", bg_output, "write the result here instead of printing it");

  int gd_max = 0;
  CLI::App* gd = app.add_subcommand("grt-dims", "kernel dimensions of the cycle relations");
  gd->add_option("--max-degree", gd_max, "table runs over degrees 2..N")->required();

  std::string t1_input;
  int t1_degree = 0;
  CLI::App* t1 = app.add_subcommand("theorem1", "pentagon input: extract mu, check hexagons");
  t1->add_option("--input", t1_input, "series file")->required();
  t1->add_option("--degree", t1_degree, "truncation")->required();

  std::string t2_input, t2_assoc = "data/fixture.series";
  int t2_degree = 0;
  CLI::App* t2 = app.add_subcommand("theorem2",
                                    "five-term input: extract lambda, check group relations");
  t2->add_option("--input", t2_input, "series file")->required();
  t2->add_option("--degree", t2_degree, "truncation")->required();
  t2->add_option("--assoc", t2_assoc, "associator series file")->capture_default_str();

  int ps_degree = 0;
  CLI::App* ps = app.add_subcommand("proof-steps",
                                    "replay the rearrangement argument on the kernel basis");
  ps->add_option("--degree", ps_degree, "homogeneous degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    check_thread_cap();
    if (v->parsed()) return run_verify(vo);
    if (ba->parsed()) return run_build_associator(ba_mu, ba_degree, ba_output);
    if (bg->parsed()) return run_build_grt(bg_seed, bg_degree, bg_output, bg_act);
    if (gd->parsed()) return run_grt_dims(gd_max);
    if (t1->parsed()) return run_theorem1(t1_input, t1_degree);
    if (t2->parsed()) return run_theorem2(t2_input, t2_degree, t2_assoc);
    if (ps->parsed()) return run_proof_steps(ps_degree);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cout << "error: " << e.what() << "\n";
    return verdict(false);
  }
  return 2;
}
