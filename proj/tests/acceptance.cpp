// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "tdga/attack.hpp"
#include "tdga/circulant.hpp"
#include "tdga/protocol.hpp"
#include "tdga/twisted_algebra.hpp"

namespace {

using namespace tdga;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("violated: ") + what;
    }
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

FieldVector avec(const AlgebraElement& u) { return FieldVector(u.avec().begin(), u.avec().end()); }
FieldVector bvec(const AlgebraElement& u) { return FieldVector(u.bvec().begin(), u.bvec().end()); }

const std::vector<std::uint64_t> kProposed{19, 23, 31, 41};
constexpr std::uint64_t kSeed = 20261014;

AlgebraParams proposed_algebra(std::uint64_t q, std::uint64_t seed) { return gen_params(q, q, seed).algebra; }

Verdict worked_instances() {
  Verdict v;
  cli::RunConfig config;
  config.command = "verify-paper-examples";
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cli::run(config, out, err);
  const double elapsed = seconds_since(start);
  const std::string text = out.str();
  std::size_t passes = 0;
  for (std::size_t pos = 0; (pos = text.find(" PASS\n", pos)) != std::string::npos; ++pos) ++passes;
  v.require(code == cli::kExitOk, "exit code 0");
  v.require(passes == 3, "three instances pass");
  v.require(elapsed < 1.0, "runtime < 1 s");
  v.note(std::to_string(passes) + "/3 instances, " + fmt(elapsed, 3) + " s");
  return v;
}

Verdict protocol_correctness() {
  Verdict v;
  std::uint64_t failures = 0, sessions = 0;
  for (std::uint64_t q : kProposed) {
    for (std::uint64_t k = 0; k < 1000; ++k) {
      Rng rng(stream_seed(kSeed + q, k));
      const auto params = gen_params(q, q, rng.next());
      const auto alice = keygen(params, rng);
      const auto bob = keygen(params, rng);
      ++sessions;
      if (derive_key(alice, compute_pk(bob, params), params) != derive_key(bob, compute_pk(alice, params), params)) {
        ++failures;
      }
    }
  }
  v.require(failures == 0, "K_A == K_B in every session");
  v.note(std::to_string(sessions) + " sessions, " + std::to_string(failures) + " failures");
  return v;
}

Verdict success_rate() {
  Verdict v;
  for (std::uint64_t q : {19u, 41u}) {
    const auto start = Clock::now();
    const auto rate = attack_success_rate(q, q, 10000, kSeed);
    const double elapsed = seconds_since(start);
    const auto band = binomial_band(rate.predicted(), rate.trials);
    v.require(band.contains(rate.fraction()), "q=" + std::to_string(q) + " inside 95% band");
    if (q == 19) v.require(rate.fraction() > 0.89, "q=19 rate > 0.89");
    v.require(elapsed < 60.0, "q=" + std::to_string(q) + " runtime < 60 s");
    v.require(rate.verification_failures == 0 && rate.formula_disagreements == 0,
              "q=" + std::to_string(q) + " every success verifies");
    v.note("q=" + std::to_string(q) + ": " + fmt(rate.fraction()) + " vs " + fmt(rate.predicted()) + " band [" +
           fmt(band.low) + ", " + fmt(band.high) + "], " + fmt(elapsed, 2) + " s");
  }
  return v;
}

Verdict completeness() {
  Verdict v;
  for (std::uint64_t q : kProposed) {
    const auto rate = attack_success_rate(q, q, 1000, kSeed + 1, {true});
    v.require(rate.successes == rate.trials, "q=" + std::to_string(q) + " 100% success");
    v.note("q=" + std::to_string(q) + ": " + std::to_string(rate.successes) + "/" + std::to_string(rate.trials));
  }
  return v;
}

Verdict circulant_exactness() {
  Verdict v;
  const FieldParams f19(19);
  const BigRational p = prob_invertible(19, f19);
  v.require(p == BigRational(18, 19), "prob_invertible(19,19) = 18/19");
  v.note("prob(19,19)=" + p.str());
  for (const auto& [n, q] : std::vector<std::pair<std::size_t, std::uint64_t>>{{2, 3}, {3, 3}, {3, 5}}) {
    const FieldParams f(q);
    const BigInt fast = count_invertible(n, f);
    const std::uint64_t slow = oracle::count_invertible_exhaustive(n, f);
    v.require(fast == slow, "count (" + std::to_string(n) + "," + std::to_string(q) + ") matches enumeration");
    v.note("count(" + std::to_string(n) + "," + std::to_string(q) + ")=" + fast.str());
  }
  std::uint64_t disagreements = 0;
  for (std::uint64_t k = 0; k < 10000; ++k) {
    Rng rng(stream_seed(kSeed + 5, k));
    FieldVector col;
    for (int i = 0; i < 19; ++i) col.push_back(sample_element(f19, rng));
    const Circulant c(f19, col);
    if (circ_is_invertible(c) != oracle::invertible_by_elimination(c)) ++disagreements;
  }
  v.require(disagreements == 0, "gcd and elimination agree");
  v.note("10000 random (19,19) tests, " + std::to_string(disagreements) + " disagreements");
  return v;
}

Verdict algebra_equivalence() {
  Verdict v;
  std::uint64_t oracle_bad = 0, assoc_bad = 0, comm_bad = 0, adj_bad = 0, closure_bad = 0;
  for (std::uint64_t q : kProposed) {
    const auto a = proposed_algebra(q, kSeed + q);
    Rng rng(kSeed ^ q);
    for (int i = 0; i < 1000; ++i) {
      const auto u = sample_algebra_element(a, rng);
      const auto w = sample_algebra_element(a, rng);
      const auto z = sample_algebra_element(a, rng);
      if (alg_mul(u, w) != oracle::basis_expansion_mul(u, w)) ++oracle_bad;
      if (alg_mul(alg_mul(u, w), z) != alg_mul(u, alg_mul(w, z))) ++assoc_bad;
      const auto s1 = sample_rotation(a, rng), s2 = sample_rotation(a, rng);
      if (alg_mul(s1, s2) != alg_mul(s2, s1)) ++comm_bad;
      const auto t1 = sample_reversible(a, rng), t2 = sample_reversible(a, rng);
      if (alg_mul(t1, adjunct(t2)) != alg_mul(t2, adjunct(t1))) ++adj_bad;
      if (!alg_mul(t1, t2).in_rotation_part() || !alg_mul(psi(t1), t2).in_reflection_part() ||
          !alg_mul(s1, t1).in_reflection_part() || !adjunct(s1).in_rotation_part() ||
          !adjunct(t1).in_reflection_part()) {
        ++closure_bad;
      }
    }
  }
  v.require(oracle_bad == 0, "closed form equals basis expansion");
  v.require(assoc_bad == 0, "associativity");
  v.require(comm_bad == 0, "C_n part commutes");
  v.require(adj_bad == 0, "t1 adj(t2) = t2 adj(t1)");
  v.require(closure_bad == 0, "closure of the subspaces");
  v.note("4 parameter sets x 1000 probes, violations: oracle " + std::to_string(oracle_bad) + ", assoc " +
         std::to_string(assoc_bad) + ", comm " + std::to_string(comm_bad) + ", adjunct " + std::to_string(adj_bad) +
         ", closure " + std::to_string(closure_bad));
  return v;
}

FieldVector scaled(FieldVector x, FieldElement c) {
  for (auto& e : x) e = e * c;
  return x;
}

Verdict reduction_identities() {
  Verdict v;
  std::uint64_t z_bad = 0, equation_bad = 0, formula_bad = 0, successes = 0;
  const FieldParams f19(19);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    Rng rng(stream_seed(kSeed + 7, k));
    FieldVector b, c;
    for (int i = 0; i < 19; ++i) b.push_back(sample_element(f19, rng));
    for (int i = 0; i < 19; ++i) c.push_back(sample_element(f19, rng));
    if (expand(Circulant(f19, z_vector(b, c))) !=
        oracle::dense_matmul(expand(Circulant(f19, c)), expand(Circulant(f19, b)))) {
      ++z_bad;
    }

    const std::uint64_t q = kProposed[k % kProposed.size()];
    const auto params = gen_params(q, q, rng.next());
    const auto sk = keygen(params, rng);
    const DPDInstance inst(params, compute_pk(sk, params).pk);
    const auto vecs = extract_vectors(inst);
    const auto a = avec(sk.s), bb = bvec(sk.t);
    // s h t = gamma  <=>  w = M_c M_b a  and  v = lambda M_d M_b a.
    const auto mb_a = circ_matvec(Circulant(params.algebra.field(), bb), a);
    if (vecs.w != circ_matvec(Circulant(params.algebra.field(), vecs.c), mb_a) ||
        vecs.v != scaled(circ_matvec(Circulant(params.algebra.field(), vecs.d), mb_a), params.algebra.lambda())) {
      ++equation_bad;
    }
    const auto outcome = dpd_attack(inst, rng);
    if (outcome.status == AttackStatus::success) {
      ++successes;
      if (outcome.rotation->from_w != outcome.rotation->from_v) ++formula_bad;
    }
  }
  v.require(z_bad == 0, "M_z(b,c) = M_c M_b");
  v.require(equation_bad == 0, "public key equations");
  v.require(formula_bad == 0, "both solution formulas agree");
  v.note("1000 instances; " + std::to_string(successes) + " successful attacks, " + std::to_string(formula_bad) +
         " formula disagreements");
  return v;
}

Verdict reversible_invertibility() {
  Verdict v;
  const auto est = estimate_prob_invertible(19, FieldParams(19), 100000, kSeed, ColumnDistribution::reversible);
  const double target = 18.0 / 19.0;
  v.require(std::abs(est.fraction() - target) <= 0.02, "within 0.02 of 18/19");
  v.note("reversible rate " + fmt(est.fraction()) + " vs " + fmt(target) + " over " + std::to_string(est.trials) +
         " samples (the hypothesis is only asserted approximately)");
  return v;
}

Verdict determinism() {
  Verdict v;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tdga_acceptance_determinism";
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
  };
  auto twice = [&](cli::RunConfig config, const std::string& label) {
    std::string runs[2];
    for (auto& r : runs) {
      std::ostringstream out, err;
      const int code = cli::run(config, out, err);
      r = std::to_string(code) + "\n" + out.str();
      if (config.output) r += slurp(*config.output);
    }
    v.require(runs[0] == runs[1], label + " byte-identical");
  };

  cli::RunConfig params;
  params.command = "params";
  params.seed = kSeed;
  params.output = (dir / "params.txt").string();
  twice(params, "params");
  cli::RunConfig keygen;
  keygen.command = "keygen";
  keygen.seed = kSeed + 1;
  keygen.inputs = {*params.output};
  keygen.output = (dir / "sk.txt").string();
  twice(keygen, "keygen");
  cli::RunConfig pk;
  pk.command = "pk";
  pk.inputs = {*params.output, *keygen.output};
  pk.output = (dir / "pk.txt").string();
  twice(pk, "pk");
  cli::RunConfig exchange;
  exchange.command = "exchange";
  exchange.inputs = {*params.output};
  twice(exchange, "exchange");
  cli::RunConfig attack;
  attack.command = "attack";
  attack.inputs = {*params.output, *pk.output};
  twice(attack, "attack");
  cli::RunConfig bench;
  bench.command = "bench";
  bench.trials = 500;
  twice(bench, "bench");
  cli::RunConfig stats;
  stats.command = "circulant-stats";
  stats.trials = 2000;
  twice(stats, "circulant-stats");
  cli::RunConfig examples;
  examples.command = "verify-paper-examples";
  twice(examples, "verify-paper-examples");
  fs::remove_all(dir);
  v.note("8 commands run twice in process; the CLI binary is also compared by ctest");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"worked instance reproduction", worked_instances},
      {"protocol correctness", protocol_correctness},
      {"attack success rate", success_rate},
      {"completeness on invertible h", completeness},
      {"circulant exactness", circulant_exactness},
      {"algebra oracle equivalence", algebra_equivalence},
      {"reduction identities", reduction_identities},
      {"reversible invertibility rate", reversible_invertibility},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) ++failed;
    std::cout << "[PRIMARY] criterion " << i + 1 << " " << criteria[i].first << ": " << (v.pass ? "PASS" : "FAIL")
              << " (" << v.detail << ")" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
