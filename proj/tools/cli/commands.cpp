#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tdga/attack.hpp"
#include "tdga/circulant.hpp"
#include "tdga/errors.hpp"
#include "tdga/io.hpp"
#include "tdga/polynomial.hpp"
#include "tdga/protocol.hpp"

namespace tdga::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

const std::string& input(const RunConfig& config, std::size_t index, std::string_view what) {
  if (config.inputs.size() <= index) {
    throw UsageError(config.command + " needs --in <" + std::string(what) + "> (input " + std::to_string(index + 1) +
                     ")");
  }
  return config.inputs[index];
}

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return is;
}

PublicParams load_params(const RunConfig& config) {
  auto is = open_input(input(config, 0, "params file"));
  return read_params(is);
}

/// Writes file contents to --out (reporting the path on `out`) or to `out`.
void emit(const RunConfig& config, const std::string& contents, std::ostream& out) {
  if (!config.output) {
    out << contents;
    return;
  }
  std::ofstream os(*config.output);
  if (!os) throw Error("cannot write " + *config.output);
  os << contents;
  out << "wrote " << *config.output << '\n';
}

std::string seed_comment(std::uint64_t seed) { return "# seed=" + std::to_string(seed) + '\n'; }

std::string profile_string(const FactorProfile& profile) {
  std::string out;
  for (const auto& cls : profile.classes) {
    if (!out.empty()) out += ' ';
    out += "(d=" + std::to_string(cls.degree) + ",a=" + std::to_string(cls.multiplicity) + ")x" +
           std::to_string(cls.count);
  }
  return out;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int cmd_params(const RunConfig& config, std::ostream& out, std::ostream&) {
  ParamsOverrides overrides;
  if (config.lambda) {
    validate_dimensions(config.n, config.q);
    const FieldParams field(config.q);
    const FieldElement lambda(field, *config.lambda);
    if (*config.lambda >= config.q || lambda.is_zero() || is_square(lambda)) {
      throw UsageError("lambda = " + std::to_string(*config.lambda) + " is not a non-square in F_" +
                       std::to_string(config.q));
    }
    overrides.lambda = config.lambda;
  }
  const PublicParams params = gen_params(config.n, config.q, config.seed, overrides);
  std::ostringstream file;
  file << seed_comment(config.seed);
  write_params(file, params);
  emit(config, file.str(), out);
  return kExitOk;
}

int cmd_keygen(const RunConfig& config, std::ostream& out, std::ostream&) {
  const PublicParams params = load_params(config);
  Rng rng(config.seed);
  const SecretKey sk = keygen(params, rng);
  std::ostringstream file;
  file << seed_comment(config.seed);
  write_secret_key(file, params, sk);
  emit(config, file.str(), out);
  return kExitOk;
}

int cmd_pk(const RunConfig& config, std::ostream& out, std::ostream&) {
  const PublicParams params = load_params(config);
  auto is = open_input(input(config, 1, "secret key file"));
  const SecretKey sk = read_secret_key(is, params);
  std::ostringstream file;
  write_public_key(file, params, compute_pk(sk, params));
  emit(config, file.str(), out);
  return kExitOk;
}

int cmd_exchange(const RunConfig& config, std::ostream& out, std::ostream&, const ExchangeHooks& hooks) {
  const PublicParams params = load_params(config);
  Rng rng(config.seed);
  const SecretKey alice = keygen(params, rng);
  const SecretKey bob = keygen(params, rng);
  const PublicKey pk_a = compute_pk(alice, params);
  PublicKey pk_b = compute_pk(bob, params);

  PublicKey pk_b_received = pk_b;
  if (hooks.corrupt_peer_key) {
    const GroupElement g{0, false};
    pk_b_received.pk.set_coefficient(g, pk_b.pk.coefficient(g) + FieldElement::one(params.algebra.field()));
  }

  const SharedKey k_a = derive_key(alice, pk_b_received, params);
  const SharedKey k_b = derive_key(bob, pk_a, params);
  const bool match = k_a == k_b;

  out << "seed=" << config.seed << '\n'
      << format_header(params.algebra) << '\n'
      << "pk_A=" << format_element(pk_a.pk) << '\n'
      << "pk_B=" << format_element(pk_b.pk) << '\n'
      << "K_A=" << format_element(k_a.k) << '\n'
      << "K_B=" << format_element(k_b.k) << '\n'
      << "verdict=" << (match ? "MATCH" : "MISMATCH") << '\n';
  return match ? kExitOk : kExitError;
}

int cmd_attack(const RunConfig& config, std::ostream& out, std::ostream&) {
  const PublicParams params = load_params(config);
  auto is = open_input(input(config, 1, "public key file"));
  const PublicKey pk = read_public_key(is, params);
  const DPDInstance inst(params, pk.pk);

  out << "seed=" << config.seed << '\n' << format_header(params.algebra) << '\n';
  Rng rng(config.seed);
  AttackOutcome outcome;
  try {
    outcome = dpd_attack(inst, rng);
  } catch (const InconsistentInstance& e) {
    out << "verdict=INCONSISTENT\n";
    throw;
  }
  out << "c_invertible=" << yes_no(outcome.c_invertible) << '\n'
      << "d_invertible=" << yes_no(outcome.d_invertible) << '\n';
  if (outcome.status != AttackStatus::success) {
    out << "verdict=FAIL\n";
    return kExitAttackFail;
  }
  const bool verified = verify_solution(inst, *outcome.solution);
  out << "verdict=SUCCESS\n"
      << "b_samples=" << outcome.b_samples << '\n'
      << "s_tilde=" << format_element(outcome.solution->s_tilde) << '\n'
      << "t_tilde=" << format_element(outcome.solution->t_tilde) << '\n'
      << "verified=" << yes_no(verified) << '\n';
  return verified ? kExitOk : kExitError;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const SuccessRate rate = attack_success_rate(config.n, config.q, config.trials, config.seed);
  const double elapsed = seconds_since(start);

  const Interval ci = rate.interval();
  const Interval band = binomial_band(rate.predicted(), rate.trials);
  out << "seed=" << rate.seed << '\n'
      << "n=" << rate.n << " q=" << rate.q << " trials=" << rate.trials << '\n'
      << "successes=" << rate.successes << '\n'
      << "singular=" << rate.singular << '\n'
      << "verification_failures=" << rate.verification_failures << '\n'
      << "empirical=" << fixed(rate.fraction(), 6) << '\n'
      << "predicted=" << fixed(rate.predicted(), 6) << '\n'
      << "interval95=[" << fixed(ci.low, 6) << ", " << fixed(ci.high, 6) << "]\n"
      << "prediction_band95=[" << fixed(band.low, 6) << ", " << fixed(band.high, 6) << "]\n"
      << "within_band=" << yes_no(band.contains(rate.fraction())) << '\n'
      << "mean_b_samples=" << fixed(rate.mean_b_samples(), 6) << '\n';
  err << "wall_time_s=" << fixed(elapsed, 3) << '\n';
  return kExitOk;
}

int cmd_circulant_stats(const RunConfig& config, std::ostream& out, std::ostream&) {
  const FieldParams field(config.q);
  const FactorProfile profile = factor_profile_xn_minus_1(config.n, field);
  const BigRational exact = prob_invertible(config.n, field);
  const auto uniform = estimate_prob_invertible(config.n, field, config.trials, config.seed, ColumnDistribution::uniform);
  const auto reversible =
      estimate_prob_invertible(config.n, field, config.trials, config.seed, ColumnDistribution::reversible);

  out << "seed=" << config.seed << '\n'
      << "n=" << config.n << " q=" << config.q << " trials=" << config.trials << '\n'
      << "factor_profile=" << profile_string(profile) << '\n'
      << "count_invertible=" << count_invertible(config.n, field) << '\n'
      << "prob_invertible=" << exact << " (" << fixed(static_cast<double>(exact), 6) << ")\n"
      << "estimate_uniform=" << fixed(uniform.fraction(), 6) << " (" << uniform.invertible << "/" << uniform.trials
      << ")\n"
      << "estimate_reversible=" << fixed(reversible.fraction(), 6) << " (" << reversible.invertible << "/"
      << reversible.trials << ")\n";
  return kExitOk;
}

int cmd_verify_paper_examples(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, std::string>> sources;
  if (config.inputs.empty()) {
    for (const auto& e : embedded_instances()) sources.emplace_back(e.name, e.contents);
  } else {
    for (const auto& path : config.inputs) {
      auto is = open_input(path);
      std::ostringstream buf;
      buf << is.rdbuf();
      sources.emplace_back(path, buf.str());
    }
  }

  const auto start = Clock::now();
  bool all_pass = true;
  for (const auto& [name, contents] : sources) {
    std::istringstream is(contents);
    const WorkedExample ex = read_worked_example(is);
    const AlgebraElement gamma = alg_mul(alg_mul(ex.s, ex.h), ex.t);
    const AlgebraElement gamma_tilde = alg_mul(alg_mul(ex.s_tilde, ex.h), ex.t_tilde);
    const bool same_key = gamma == gamma_tilde;
    const bool keys_valid = ex.s.in_rotation_part() && ex.s_tilde.in_rotation_part() && is_reversible(ex.t) &&
                            is_reversible(ex.t_tilde);
    const bool distinct = ex.s != ex.s_tilde && ex.t != ex.t_tilde;
    const bool pass = same_key && keys_valid;
    all_pass = all_pass && pass;
    out << name << ": " << format_header(ex.algebra) << " sht_equal=" << yes_no(same_key)
        << " keys_valid=" << yes_no(keys_valid) << " distinct_keys=" << yes_no(distinct) << ' '
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  err << "wall_time_s=" << fixed(seconds_since(start), 3) << '\n';
  return all_pass ? kExitOk : kExitError;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "params") return cmd_params(config, out, err);
    if (config.command == "keygen") return cmd_keygen(config, out, err);
    if (config.command == "pk") return cmd_pk(config, out, err);
    if (config.command == "exchange") return cmd_exchange(config, out, err);
    if (config.command == "attack") return cmd_attack(config, out, err);
    if (config.command == "bench") return cmd_bench(config, out, err);
    if (config.command == "circulant-stats") return cmd_circulant_stats(config, out, err);
    if (config.command == "verify-paper-examples") return cmd_verify_paper_examples(config, out, err);
    err << "unknown command '" << config.command << "'\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace tdga::cli
