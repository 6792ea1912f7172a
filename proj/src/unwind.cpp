#include "hardy/unwind.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy::unwind {
namespace {

using torus::GridFunction;

constexpr double kCandidateMargin = 1e-6;
constexpr double kEvaluationRadius = 0.99;

double l2(const GridFunction& f) { return torus::lp_norm(f, 2.0); }

GridFunction moebius_on_grid(Complex a, std::size_t n) {
  return GridFunction::sample(n, [a](Complex z) { return blaschke::moebius(a, z); });
}

GridFunction inner_on_grid(const FixedInner::Inner& inner, std::size_t n) {
  if (const auto* b = std::get_if<blaschke::DiskBlaschke>(&inner)) return blaschke::sample(*b, n);
  const auto& grid = std::get<GridFunction>(inner);
  if (grid.size() != n) {
    throw GridMismatchError("fixed inner function sampled on " + std::to_string(grid.size()) +
                            " points, expected " + std::to_string(n));
  }
  return grid;
}

using Poly = std::vector<Complex>;

// prod (1 - conj(a) z) over the given zeros.
Poly conjugate_factor_product(std::span<const Complex> zeros) {
  Poly q{1.0};
  for (const Complex& a : zeros) {
    Poly next(q.size() + 1, 0.0);
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k] += q[k];
      next[k + 1] -= std::conj(a) * q[k];
    }
    q = std::move(next);
  }
  return q;
}

// Least common multiple of two factor lists: each zero keeps its larger multiplicity.
void merge_zeros(std::vector<Complex>& into, std::span<const Complex> more) {
  constexpr double kSame = 1e-14;
  auto count = [](std::span<const Complex> list, Complex a) {
    return std::count_if(list.begin(), list.end(),
                         [&](const Complex& b) { return std::abs(a - b) <= kSame; });
  };
  std::vector<Complex> extra;
  for (const Complex& a : more) {
    if (count(extra, a) > 0) continue;
    for (auto k = count(into, a); k < count(more, a); ++k) extra.push_back(a);
  }
  into.insert(into.end(), extra.begin(), extra.end());
}

// |f(a)| sqrt(1 - |a|^2) for every candidate, Horner run across candidates so it vectorizes.
std::vector<double> candidate_energies(std::span<const Complex> coefficients,
                                       std::span<const Complex> candidates) {
  const std::size_t m = candidates.size();
  std::vector<double> ar(m), ai(m), vr(m, 0.0), vi(m, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    ar[c] = candidates[c].real();
    ai[c] = candidates[c].imag();
  }
  for (std::size_t k = coefficients.size() / 2; k-- > 0;) {
    const double cr = coefficients[k].real(), ci = coefficients[k].imag();
    for (std::size_t c = 0; c < m; ++c) {
      const double r = vr[c] * ar[c] - vi[c] * ai[c] + cr;
      vi[c] = vr[c] * ai[c] + vi[c] * ar[c] + ci;
      vr[c] = r;
    }
  }
  std::vector<double> energy(m);
  for (std::size_t c = 0; c < m; ++c) {
    energy[c] = std::hypot(vr[c], vi[c]) * std::sqrt(1.0 - std::norm(candidates[c]));
  }
  return energy;
}

// Re-raises a factorization failure with the step index in the message.
template <class Fn>
auto at_step(std::size_t step, Fn&& fn) {
  const std::string prefix = "step " + std::to_string(step) + ": ";
  try {
    return fn();
  } catch (const IllConditionedError& e) {
    throw IllConditionedError(prefix + e.what(), e.deviation());
  } catch (const ZeroFunctionError& e) {
    throw ZeroFunctionError(prefix + e.what());
  } catch (const NotInnerError& e) {
    throw NotInnerError(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  }
}

struct Walker {
  double stop_tol;
  double floor_eps;
  double f_norm;
  UnwindExpansion out;
  GridFunction current;
  GridFunction cumulative;
  /// current * prod (1 - conj(a) z) over these zeros is a polynomial, when known.
  /// Each projection removes a model-space part whose poles are simple in v's
  /// zeros, so the denominator grows as an lcm and not as a product.
  bool denominator_known = false;
  std::vector<Complex> denominator_zeros;
  Poly denominator() const { return denominator_known ? conjugate_factor_product(denominator_zeros) : Poly{}; }

  Walker(const GridFunction& f_in, double stop_tol_in, double floor_eps_in)
      : stop_tol(stop_tol_in),
        floor_eps(floor_eps_in),
        f_norm(l2(f_in)),
        out{{}, f_in, GridFunction::constant(f_in.size(), 1.0)},
        current(f_in),
        cumulative(GridFunction::constant(f_in.size(), 1.0)) {
    denominator_known = torus::polynomial_degree(f_in) >= 0;
  }

  // Applies one projection step; returns false once the recursion has stopped.
  // `v_zeros` are the zeros of v when it is a finite Blaschke product.
  bool advance(const GridFunction& v, std::optional<std::span<const Complex>> v_zeros,
               std::optional<Complex> point, std::size_t step) {
    if (!v_zeros) denominator_known = false;
    if (denominator_known) merge_zeros(denominator_zeros, *v_zeros);
    const Poly q = denominator();
    auto r = at_step(step, [&] { return unwind_step(current, v, stop_tol, f_norm, floor_eps, q); });
    out.terms.push_back({r.g, cumulative, point});
    if (r.stopped) {
      out.stopped = true;
      out.residual = r.f_next;
      out.residual_inner = cumulative;
      return false;
    }
    out.max_divisibility_defect = std::max(out.max_divisibility_defect, r.divisibility_defect);
    cumulative = cumulative * r.u_next;
    current = r.f_next;
    out.residual = current;
    out.residual_inner = cumulative;
    return true;
  }
};

// g_n(z) = f_n(a) (1 - |a|^2) / (1 - conj(a) z)
void check_moebius_closed_form(const GridFunction& g, const GridFunction& f_n, Complex a,
                               std::size_t step) {
  const auto coeffs = f_n.coefficients();
  const Complex value = eval_power_series(coeffs, a);
  const double scale = 1.0 - std::norm(a);
  double worst = 0.0;
  for (std::size_t k = 0; k < f_n.size(); ++k) {
    const Complex z = GridFunction::point(f_n.size(), k);
    worst = std::max(worst, std::abs(g[k] - value * scale / (1.0 - std::conj(a) * z)));
  }
  if (worst > kClosedFormTol * std::max(1.0, f_n.max_abs())) {
    throw ConsistencyError("step " + std::to_string(step) +
                           ": Moebius closed form for g_n disagrees with the projection by " +
                           detail::sci(worst));
  }
}

}  // namespace

GreedyAfd GreedyAfd::polar_grid(int rings, int angles, double r_max) {
  if (rings < 1 || angles < 1) throw DomainError("polar_grid: rings and angles must be positive");
  if (!(r_max > 0.0) || r_max > 1.0 - kCandidateMargin) {
    throw DomainError("polar_grid: r_max must lie in (0, 1 - 1e-6]");
  }
  GreedyAfd grid;
  grid.candidates.push_back(0.0);
  for (int k = 1; k <= rings; ++k) {
    const double radius = r_max * k / rings;
    for (int m = 0; m < angles; ++m) {
      grid.candidates.push_back(std::polar(radius, 2.0 * kPi * m / angles));
    }
  }
  return grid;
}

Complex eval_power_series(std::span<const Complex> coefficients, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = coefficients.size() / 2; k-- > 0;) acc = acc * z + coefficients[k];
  return acc;
}

StepResult unwind_step(const GridFunction& f, const GridFunction& v, double stop_tol,
                       double reference_norm, double floor_eps, std::span<const Complex> h_denominator) {
  if (!f.is_analytic()) throw DomainError("unwind_step: f has negative-frequency content");
  const GridFunction h = torus::project_invariant(f, v);
  const double reference = reference_norm > 0.0 ? reference_norm : l2(f);
  const std::size_t n = f.size();
  if (l2(h) <= stop_tol * reference) {
    return {f - h, GridFunction::constant(n, 1.0), h, true, 0.0};
  }
  auto pair = h_denominator.empty() ? torus::inner_outer_factor(h, floor_eps)
                                    : torus::inner_outer_factor_rational(h, h_denominator, floor_eps);
  StepResult r{f - h, pair.inner, pair.outer, false, 0.0};
  const GridFunction projected = torus::project_invariant(r.u_next, v);
  double defect = 0.0;
  for (std::size_t k = 0; k < n; ++k) defect = std::max(defect, std::abs(projected[k] - r.u_next[k]));
  r.divisibility_defect = defect;
  return r;
}

UnwindExpansion unwind(const GridFunction& f, const Strategy& strategy, std::size_t max_terms,
                       double stop_tol, double floor_eps) {
  if (f.max_abs() < 1e-300) throw ZeroFunctionError("unwind: zero function");
  if (!f.is_analytic()) throw DomainError("unwind: f has negative-frequency content");
  const std::size_t n = f.size();
  Walker walk(f, stop_tol, floor_eps);

  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, FixedInner>) {
          if (s.inners.empty()) throw DomainError("fixed_inner strategy without inner functions");
          std::vector<GridFunction> sampled;
          std::vector<std::optional<std::span<const Complex>>> zeros;
          for (const auto& inner : s.inners) {
            sampled.push_back(inner_on_grid(inner, n));
            if (const auto* b = std::get_if<blaschke::DiskBlaschke>(&inner)) {
              zeros.emplace_back(b->zeros());
            } else {
              zeros.emplace_back(std::nullopt);
            }
          }
          for (std::size_t step = 0; step < max_terms; ++step) {
            const std::size_t k = step % sampled.size();
            if (!walk.advance(sampled[k], zeros[k], std::nullopt, step)) break;
          }
        } else if constexpr (std::is_same_v<S, Moebius>) {
          for (const Complex& a : s.points) {
            if (!(std::abs(a) <= 1.0 - 1e-12)) throw DomainError("Moebius point outside the disk");
          }
          const std::size_t steps = std::min(max_terms, s.points.size());
          for (std::size_t step = 0; step < steps; ++step) {
            const Complex a = s.points[step];
            const GridFunction f_n = walk.current;
            const bool more = walk.advance(moebius_on_grid(a, n), std::span(&a, 1), a, step);
            check_moebius_closed_form(walk.out.terms.back().g, f_n, a, step);
            if (!more) break;
          }
        } else if constexpr (std::is_same_v<S, GreedyAfd>) {
          if (s.candidates.empty()) throw DomainError("greedy_afd strategy without candidates");
          for (const Complex& a : s.candidates) {
            if (std::abs(a) > 1.0 - kCandidateMargin) {
              throw DomainError("greedy_afd candidate with |a| > 1 - 1e-6");
            }
          }
          for (std::size_t step = 0; step < max_terms; ++step) {
            const auto energy = candidate_energies(walk.current.coefficients(), s.candidates);
            // First maximum wins ties.
            const auto best = static_cast<std::size_t>(
                std::max_element(energy.begin(), energy.end()) - energy.begin());
            const Complex a = s.candidates[best];
            if (!walk.advance(moebius_on_grid(a, n), std::span(&a, 1), a, step)) break;
          }
        } else {
          if (s.points.empty()) throw DomainError("constant_subtract strategy without points");
          for (const Complex& z : s.points) {
            if (std::abs(z) > kEvaluationRadius) {
              throw DomainError("constant_subtract point with |z| > 0.99");
            }
          }
          for (std::size_t step = 0; step < max_terms; ++step) {
            const Complex z = s.points[step % s.points.size()];
            const GridFunction& f_n = walk.current;
            const Complex c = eval_power_series(f_n.coefficients(), z);
            const GridFunction rest = f_n - GridFunction::constant(n, c);
            walk.out.terms.push_back({GridFunction::constant(n, c), walk.cumulative, z});
            if (l2(rest) <= stop_tol * walk.f_norm) {
              walk.out.stopped = true;
              walk.out.residual = rest;
              walk.out.residual_inner = walk.cumulative;
              break;
            }
            const Poly q = walk.denominator();
            auto pair = at_step(step, [&] {
              return q.empty() ? torus::inner_outer_factor(rest, floor_eps)
                               : torus::inner_outer_factor_rational(rest, q, floor_eps);
            });
            walk.cumulative = walk.cumulative * pair.inner;
            walk.current = pair.outer;
            walk.out.residual = walk.current;
            walk.out.residual_inner = walk.cumulative;
          }
        }
      },
      strategy);
  return walk.out;
}

GridFunction partial_sum(const UnwindExpansion& e, std::size_t count) {
  if (count > e.terms.size()) {
    throw IndexError("partial_sum: only " + std::to_string(e.terms.size()) + " terms available");
  }
  const std::size_t n = e.residual.size();
  std::vector<Complex> acc(n, 0.0);
  for (std::size_t t = 0; t < count; ++t) {
    const auto& term = e.terms[t];
    for (std::size_t k = 0; k < n; ++k) acc[k] += term.cumulative_inner[k] * term.g[k];
  }
  return GridFunction(std::move(acc));
}

ConvergenceReport convergence_report(const UnwindExpansion& e, const GridFunction& f,
                                     const std::vector<double>& p_values) {
  for (double p : p_values) {
    if (!(p > 1.0) || !std::isfinite(p)) {
      throw DomainError("convergence_report: p must lie in (1, inf)");
    }
  }
  ConvergenceReport report;
  report.p_values = p_values;
  double previous_l2 = l2(f);
  const std::size_t n = f.size();
  std::vector<Complex> acc(n, 0.0);
  for (const auto& term : e.terms) {
    for (std::size_t k = 0; k < n; ++k) acc[k] += term.cumulative_inner[k] * term.g[k];
    const GridFunction error = f - GridFunction(acc);
    std::vector<double> row;
    for (double p : p_values) row.push_back(torus::lp_norm(error, p));
    report.errors.push_back(std::move(row));
    const double current_l2 = l2(error);
    if (current_l2 > previous_l2 + 1e-12) report.l2_monotone = false;
    previous_l2 = current_l2;
  }
  const GridFunction rebuilt = GridFunction(acc) + e.residual_inner * e.residual;
  report.reconstruction_error = l2(f - rebuilt) / std::max(l2(f), 1e-300);
  return report;
}

}  // namespace hardy::unwind
