#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/torus.hpp"

namespace hardy::unwind {

inline constexpr double kDefaultStopTol = 1e-10;
inline constexpr std::size_t kDefaultMaxTerms = 64;
/// Tolerance for the Moebius closed-form cross-check of g_n.
inline constexpr double kClosedFormTol = 1e-8;

/// Projects onto v_n H^2 with a prescribed inner v_n, cycling through the list.
struct FixedInner {
  using Inner = std::variant<blaschke::DiskBlaschke, torus::GridFunction>;
  std::vector<Inner> inners;
};

/// v_n(z) = (z - a_n) / (1 - conj(a_n) z); the expansion ends when the points run out.
struct Moebius {
  std::vector<Complex> points;
};

/// At each step v is the single Moebius factor whose g_n has the largest energy
/// |f_n(a)| sqrt(1 - |a|^2) among the candidates. Ties go to the lowest index.
struct GreedyAfd {
  std::vector<Complex> candidates;

  /// 0 followed by rings k r_max / rings (k = 1..rings) at angles 2 pi m / angles.
  static GreedyAfd polar_grid(int rings = 16, int angles = 64, double r_max = 0.98);
};

/// Variant recursion c_n = f_n(z_n), f_n - c_n = u_{n+1} f_{n+1}; points are cycled.
struct ConstantSubtract {
  std::vector<Complex> points;
};

using Strategy = std::variant<FixedInner, Moebius, GreedyAfd, ConstantSubtract>;

struct StepResult {
  torus::GridFunction g;
  torus::GridFunction u_next;
  torus::GridFunction f_next;
  bool stopped = false;
  /// max | H_v(u_next) - u_next |: how far u_next is from being divisible by v.
  double divisibility_defect = 0.0;
};

/// One step of the recursion: h = H_v f, g = f - h, (u_next, f_next) = inner/outer of h.
/// Stops (u_next = 1, f_next = h) when ||h||_2 <= stop_tol * reference_norm; a
/// reference_norm of 0 means ||f||_2. A nonempty h_denominator q promises that
/// h q is a polynomial, and h is then factored through its roots.
StepResult unwind_step(const torus::GridFunction& f, const torus::GridFunction& v,
                       double stop_tol = kDefaultStopTol, double reference_norm = 0.0,
                       double floor_eps = torus::kDefaultFloorEps,
                       std::span<const Complex> h_denominator = {});

struct Term {
  torus::GridFunction g;
  /// U_n = u_1 ... u_n, with U_0 = 1.
  torus::GridFunction cumulative_inner;
  /// Moebius / greedy point used to build v_{n+1}, or the constant-subtract point z_n.
  std::optional<Complex> point;
};

/// f = sum_n U_n g_n + residual_inner * residual.
struct UnwindExpansion {
  std::vector<Term> terms;
  torus::GridFunction residual;
  torus::GridFunction residual_inner;
  bool stopped = false;
  /// Largest divisibility defect over the steps (fixed and Moebius strategies).
  double max_divisibility_defect = 0.0;
};

/// Polynomial inputs stay rational through the recursion with a known
/// denominator: a step with a finite Blaschke v adds the factors 1 - conj(a) z
/// of v's zeros not already present (an lcm, since the projection only creates
/// simple poles there). Every factorization then goes through polynomial roots;
/// inner functions given as grid samples switch to the cepstral method.
UnwindExpansion unwind(const torus::GridFunction& f, const Strategy& strategy,
                       std::size_t max_terms = kDefaultMaxTerms, double stop_tol = kDefaultStopTol,
                       double floor_eps = torus::kDefaultFloorEps);

/// sum_{n < count} U_n g_n.
torus::GridFunction partial_sum(const UnwindExpansion& e, std::size_t count);

struct ConvergenceReport {
  std::vector<double> p_values;
  /// errors[n - 1][k] = || f - partial_sum(e, n) ||_{p_k}, n = 1..terms.
  std::vector<std::vector<double>> errors;
  /// L^2 errors are non-increasing within 1e-12.
  bool l2_monotone = true;
  /// || f - partial_sum(all) - residual_inner * residual ||_2 / ||f||_2
  double reconstruction_error = 0.0;
};

ConvergenceReport convergence_report(const UnwindExpansion& e, const torus::GridFunction& f,
                                     const std::vector<double>& p_values);

/// sum_k c_k z^k from a coefficient vector in DFT slot order (k < N/2).
Complex eval_power_series(std::span<const Complex> coefficients, Complex z);

}  // namespace hardy::unwind
