#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tropcurv/patchwork.hpp"
#include "tropcurv/tropical.hpp"

namespace tropcurv {

/// One-parameter real coefficient family: term a gets coefficient
/// sign_a * t^{-valuation_a}, so the coefficient valuations realize the
/// tropical polynomial as t -> 0.
struct FamilyTerm {
  LatticeVector exponent;
  int sign = +1;
  Rational valuation = 0;
};

struct RealFamily {
  int ambient_dim = 0;
  std::vector<FamilyTerm> terms;
};

RealFamily make_family(const TropicalPolynomial& f, const SignDistribution& theta);

inline constexpr double kMinFamilyT = 1e-4;

/// Evaluator of F_t in log_t coordinates X (plane curves only). The value
/// is F_t(x) rescaled by the positive factor t^{max tropical term}, which
/// keeps magnitudes near 1 for any valuation size; signs and zeros match
/// F_t at x_i = q_i t^{X_i} for quadrant signs q. Works in log space, so
/// large valuations never overflow.
class FamilyField {
 public:
  /// Throws InvalidT unless kMinFamilyT <= t < 1, NotPlaneCurve if d != 2.
  FamilyField(const RealFamily& fam, double t);

  double t() const { return t_; }
  double value(const Orthant& q, double X, double Y) const;
  /// Gradient of value(); piecewise smooth (regional dominant term).
  std::array<double, 2> gradient(const Orthant& q, double X, double Y) const;

 private:
  struct Term {
    double e0, e1;      // exponent
    int par0, par1;     // exponent parities, for quadrant signs
    double val;         // valuation
    double base_sign;
  };
  std::vector<Term> terms_;
  double t_ = 0;
  double log_t_ = 0;
};

FamilyField evaluate_family(const RealFamily& fam, double t);

using Point2 = std::array<double, 2>;

struct Polyline {
  std::vector<Point2> pts;
};

struct QuadrantTrace {
  Orthant quadrant;
  std::vector<Polyline> components;
};

/// Marching-squares trace of { F_t = 0 } per quadrant in log_t coordinates,
/// over the window spanned by the tropical vertex positions and their
/// reflections, padded by 10 / |log t|. Segment endpoints are Newton-refined
/// onto the zero set to residual < 1e-10. Empty quadrants yield no
/// components.
struct TracedCurve {
  double t = 0;
  int grid = 0;                       // cells per axis
  std::array<double, 4> window{};     // x0, y0, x1, y1
  std::vector<QuadrantTrace> quadrants;
};

TracedCurve trace_real_curve(const RealFamily& fam, double t, int grid = 512,
                             std::optional<Orthant> only_quadrant = std::nullopt);

/// Total curvature of the traced curve: total variation of the segment
/// direction angle along each polyline, angle steps unwrapped to (-pi, pi].
double amoeba_total_curvature(const TracedCurve& tc);

/// Traces at `grid` and at the doubled grid; accepts when the two totals
/// differ by less than 1% (relative), returning the finer value.
/// Throws InsufficientResolution otherwise.
double converged_total_curvature(const RealFamily& fam, double t, int grid = 512,
                                 std::optional<Orthant> only_quadrant = std::nullopt);

struct ConvergenceRow {
  double t = 0;
  int grid = 0;
  double curvature = 0;
  double target = 0;
  double rel_error = 0;
};

struct ConvergenceTable {
  double target = 0;  // r * pi for the non-singular input
  std::vector<ConvergenceRow> rows;
};

/// Runs the tracer over a decreasing list of t values against the expected
/// limit r * pi. Requires a non-singular plane curve (NotNonSingular).
ConvergenceTable convergence_experiment(const TropicalPolynomial& f,
                                        const SignDistribution& theta,
                                        const std::vector<double>& t_values,
                                        int grid = 512);

}  // namespace tropcurv
