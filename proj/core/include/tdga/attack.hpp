#pragma once

#include <cstdint>
#include <optional>

#include "tdga/circulant.hpp"
#include "tdga/protocol.hpp"
#include "tdga/rng.hpp"

namespace tdga {

/// An observed public key gamma together with the public parameters it was
/// allegedly produced from.
struct DPDInstance {
  PublicParams params;
  AlgebraElement gamma;

  /// Throws ParameterMismatch if gamma lives in a different algebra.
  DPDInstance(PublicParams params, AlgebraElement gamma);
};

/// Candidate secret (s~, t~) with s~ h t~ == gamma.
struct DPDSolution {
  AlgebraElement s_tilde;
  AlgebraElement t_tilde;
};

/// Coefficient vectors of h = c + d y and gamma = v + w y.
struct InstanceVectors {
  FieldVector c;
  FieldVector d;
  FieldVector v;
  FieldVector w;
};

InstanceVectors extract_vectors(const DPDInstance& inst);

/// Necessary condition for gamma to be a public key: lambda^-1 M_d^-1 v == M_c^-1 w.
/// Throws SingularCirculant if M_c or M_d is singular.
bool consistency_check(const FieldVector& c, const FieldVector& d, const FieldVector& v, const FieldVector& w,
                       FieldElement lambda);

/// a recovered two ways for a fixed reversible b with M_b invertible:
/// from the y half, a = M_b^-1 M_c^-1 w, and from the C_n half,
/// a = lambda^-1 M_b^-1 M_d^-1 v.
struct RecoveredRotation {
  FieldVector from_w;
  FieldVector from_v;
};

/// Throws SingularCirculant if any of M_b, M_c, M_d is singular.
RecoveredRotation recover_rotation(const InstanceVectors& vecs, const FieldVector& b, FieldElement lambda);

enum class AttackStatus {
  success,
  singular_public_element,  // M_c or M_d not invertible; the algorithm gives up
};

struct AttackOutcome {
  AttackStatus status = AttackStatus::singular_public_element;
  bool c_invertible = false;
  bool d_invertible = false;
  /// Reversible b vectors drawn until M_b was invertible (0 on early failure).
  std::size_t b_samples = 0;
  std::optional<DPDSolution> solution;
  std::optional<RecoveredRotation> rotation;
};

/// Draws of reversible b allowed before dpd_attack reports an internal error.
inline constexpr std::size_t kMaxBSamples = 64;

/// Linear-algebra attack on the two-sided decomposition problem.
///
/// 1. c, d, v, w from h and gamma.
/// 2. Give up if M_c or M_d is singular.
/// 3. Draw reversible b until M_b is invertible.
/// 4. Solve for a both ways (see recover_rotation); they must agree.
/// 5. Return s~ = sum a_i x^i, t~ = sum b_i x^i y.
///
/// Throws InconsistentInstance when the two solutions for a disagree, which
/// means gamma is not s h t for any key. Throws Error after kMaxBSamples
/// singular draws of b.
AttackOutcome dpd_attack(const DPDInstance& inst, Rng& rng);

/// s~ rotation-supported, t~ reversible, and s~ h t~ == gamma.
bool verify_solution(const DPDInstance& inst, const DPDSolution& sol);

struct Interval {
  double low = 0.0;
  double high = 0.0;

  bool contains(double x) const { return low <= x && x <= high; }
};

inline constexpr double kZ95 = 1.959963984540054;

/// Normal-approximation interval around the empirical rate successes/trials.
Interval wald_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);
/// p +- z sqrt(p (1 - p) / trials): where an empirical rate from `trials`
/// draws with true rate p falls with ~95% probability.
Interval binomial_band(double p, std::uint64_t trials, double z = kZ95);

/// (1 - 1/q)^2: both random circulants M_c and M_d invertible when q | n.
double predicted_success_rate(std::uint64_t q);

struct SuccessRateOptions {
  /// Redraw h until M_c and M_d are invertible.
  bool condition_on_invertible = false;
};

struct SuccessRate {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t singular = 0;
  /// Successful attacks whose output failed verify_solution. Expected 0.
  std::uint64_t verification_failures = 0;
  /// Successful attacks where the two solutions for a differed. Expected 0.
  std::uint64_t formula_disagreements = 0;
  std::uint64_t b_samples_total = 0;

  double fraction() const;
  double mean_b_samples() const;
  Interval interval() const { return wald_interval(successes, trials); }
  double predicted() const { return predicted_success_rate(q); }
};

/// Runs `trials` independent pipelines gen_params -> keygen -> compute_pk ->
/// dpd_attack -> verify_solution. Trial k uses only stream_seed(seed, k).
/// Throws std::invalid_argument for trials == 0.
SuccessRate attack_success_rate(std::size_t n, std::uint64_t q, std::uint64_t trials, std::uint64_t seed,
                                const SuccessRateOptions& options = {});

struct InjectivityWitness {
  SecretKey original;
  SecretKey recovered;
  PublicKey pk;
  std::size_t attempts = 0;
};

/// Two distinct secret keys with the same public key under params: a fresh key
/// and a key recovered from its public key by dpd_attack. Returns nullopt when
/// M_c or M_d is singular.
std::optional<InjectivityWitness> non_injectivity_witness(const PublicParams& params, Rng& rng);

}  // namespace tdga
