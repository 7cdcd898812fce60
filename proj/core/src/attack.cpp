#include "tdga/attack.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "tdga/errors.hpp"

namespace tdga {

DPDInstance::DPDInstance(PublicParams params_, AlgebraElement gamma_)
    : params(std::move(params_)), gamma(std::move(gamma_)) {
  if (gamma.params() != params.algebra) throw ParameterMismatch("public key belongs to a different algebra");
}

InstanceVectors extract_vectors(const DPDInstance& inst) {
  const auto& h = inst.params.h;
  const auto& g = inst.gamma;
  return {FieldVector(h.avec().begin(), h.avec().end()), FieldVector(h.bvec().begin(), h.bvec().end()),
          FieldVector(g.avec().begin(), g.avec().end()), FieldVector(g.bvec().begin(), g.bvec().end())};
}

namespace {

FieldVector scaled(FieldVector v, FieldElement c) {
  for (auto& x : v) x = x * c;
  return v;
}

}  // namespace

bool consistency_check(const FieldVector& c, const FieldVector& d, const FieldVector& v, const FieldVector& w,
                       FieldElement lambda) {
  const FieldParams field = lambda.field();
  const FieldVector lhs = scaled(circ_solve(Circulant(field, d), v), inv(lambda));
  const FieldVector rhs = circ_solve(Circulant(field, c), w);
  return lhs == rhs;
}

RecoveredRotation recover_rotation(const InstanceVectors& vecs, const FieldVector& b, FieldElement lambda) {
  const FieldParams field = lambda.field();
  const Circulant mb(field, b);
  // M_z(b, c) = M_c M_b, so M_z^-1 = M_b^-1 M_c^-1.
  FieldVector from_w = circ_solve(mb, circ_solve(Circulant(field, vecs.c), vecs.w));
  FieldVector from_v = scaled(circ_solve(mb, circ_solve(Circulant(field, vecs.d), vecs.v)), inv(lambda));
  return {std::move(from_w), std::move(from_v)};
}

AttackOutcome dpd_attack(const DPDInstance& inst, Rng& rng) {
  const AlgebraParams& algebra = inst.params.algebra;
  const FieldParams& field = algebra.field();
  InstanceVectors vecs = extract_vectors(inst);

  AttackOutcome out;
  out.c_invertible = circ_is_invertible(Circulant(field, vecs.c));
  out.d_invertible = circ_is_invertible(Circulant(field, vecs.d));
  if (!out.c_invertible || !out.d_invertible) return out;

  AlgebraElement t(algebra);
  for (;;) {
    if (out.b_samples == kMaxBSamples) {
      throw Error("no invertible reversible circulant after " + std::to_string(kMaxBSamples) + " draws");
    }
    ++out.b_samples;
    t = sample_reversible(algebra, rng);
    if (circ_is_invertible(Circulant(field, FieldVector(t.bvec().begin(), t.bvec().end())))) break;
  }

  RecoveredRotation rot = recover_rotation(vecs, FieldVector(t.bvec().begin(), t.bvec().end()), algebra.lambda());
  if (rot.from_w != rot.from_v) {
    throw InconsistentInstance("lambda^-1 M_d^-1 v != M_c^-1 w: gamma is not a public key for this h");
  }
  AlgebraElement s(algebra, rot.from_w, FieldVector(algebra.n(), FieldElement::zero(field)));

  out.status = AttackStatus::success;
  out.solution = DPDSolution{std::move(s), std::move(t)};
  out.rotation = std::move(rot);
  return out;
}

bool verify_solution(const DPDInstance& inst, const DPDSolution& sol) {
  const AlgebraParams& algebra = inst.params.algebra;
  if (sol.s_tilde.params() != algebra || sol.t_tilde.params() != algebra) return false;
  if (!sol.s_tilde.in_rotation_part() || !is_reversible(sol.t_tilde)) return false;
  return alg_mul(alg_mul(sol.s_tilde, inst.params.h), sol.t_tilde) == inst.gamma;
}

Interval wald_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double p = static_cast<double>(successes) / static_cast<double>(trials);
  const double half = z * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return {p - half, p + half};
}

Interval binomial_band(double p, std::uint64_t trials, double z) {
  const double half = z * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return {p - half, p + half};
}

double predicted_success_rate(std::uint64_t q) {
  const double r = 1.0 - 1.0 / static_cast<double>(q);
  return r * r;
}

double SuccessRate::fraction() const {
  return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
}

double SuccessRate::mean_b_samples() const {
  return successes == 0 ? 0.0 : static_cast<double>(b_samples_total) / static_cast<double>(successes);
}

namespace {

bool halves_invertible(const PublicParams& params) {
  const auto& h = params.h;
  const FieldParams& field = params.algebra.field();
  return circ_is_invertible(Circulant(field, FieldVector(h.avec().begin(), h.avec().end()))) &&
         circ_is_invertible(Circulant(field, FieldVector(h.bvec().begin(), h.bvec().end())));
}

}  // namespace

SuccessRate attack_success_rate(std::size_t n, std::uint64_t q, std::uint64_t trials, std::uint64_t seed,
                                const SuccessRateOptions& options) {
  if (trials == 0) throw std::invalid_argument("success rate needs at least one trial");
  validate_dimensions(n, q);

  SuccessRate rate;
  rate.n = n;
  rate.q = q;
  rate.seed = seed;
  rate.trials = trials;
  for (std::uint64_t k = 0; k < trials; ++k) {
    Rng rng(stream_seed(seed, k));
    PublicParams params = gen_params(n, q, rng.next());
    while (options.condition_on_invertible && !halves_invertible(params)) params = gen_params(n, q, rng.next());

    const SecretKey sk = keygen(params, rng);
    const DPDInstance inst(params, compute_pk(sk, params).pk);
    AttackOutcome outcome;
    try {
      outcome = dpd_attack(inst, rng);
    } catch (const InconsistentInstance&) {
      ++rate.formula_disagreements;
      continue;
    }
    if (outcome.status != AttackStatus::success) {
      ++rate.singular;
      continue;
    }
    rate.b_samples_total += outcome.b_samples;
    if (outcome.rotation->from_w != outcome.rotation->from_v) ++rate.formula_disagreements;
    if (verify_solution(inst, *outcome.solution)) {
      ++rate.successes;
    } else {
      ++rate.verification_failures;
    }
  }
  return rate;
}

std::optional<InjectivityWitness> non_injectivity_witness(const PublicParams& params, Rng& rng) {
  SecretKey original = keygen(params, rng);
  PublicKey pk = compute_pk(original, params);
  const DPDInstance inst(params, pk.pk);
  for (std::size_t attempt = 1; attempt <= kMaxBSamples; ++attempt) {
    AttackOutcome outcome = dpd_attack(inst, rng);
    if (outcome.status != AttackStatus::success) return std::nullopt;
    SecretKey recovered(std::move(outcome.solution->s_tilde), std::move(outcome.solution->t_tilde));
    if (recovered != original) {
      return InjectivityWitness{std::move(original), std::move(recovered), std::move(pk), attempt};
    }
  }
  throw Error("attack kept returning the original key");
}

}  // namespace tdga
