#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqgln/l_operator.hpp"
#include "uqgln/qsym.hpp"

namespace uqgln {

enum class Route { trace, tv_x, tv_y, w, w_hat };

const char* route_name(Route r);
std::optional<Route> route_from_name(const std::string& name);

/// One off-shell Bethe-vector computation: a module with attached
/// L-operators, a variable assignment, and the deformation parameter.
struct BetheTask {
  Composition comp;
  ModuleWithL module;
  Rational q;
  VariableAssignment t;
  long max_cells = 200000;

  std::string fingerprint() const;
};

struct BetheVector {
  Route route = Route::trace;
  std::vector<Rational> coords;
  std::string fingerprint;
};

/// Trace construction: the ordered monodromy product against the ordered
/// R-product, contracted with E_{21}^{⊗n_1} ⊗ ... ⊗ E_{N,N-1}^{⊗n_{N-1}},
/// auxiliary trace, rational prefactor, applied to the singular vector.
BetheVector bethe_trace(const BetheTask& task);

/// Closed combinatorial form over admissible s-matrices (single evaluation
/// modules only).
BetheVector bethe_tv_x(const BetheTask& task);
BetheVector bethe_tv_x_detail(const BetheTask& task, std::vector<std::string>* breakdown);

/// Closed combinatorial form over admissible m-matrices (single evaluation
/// modules only).
BetheVector bethe_tv_y(const BetheTask& task);
BetheVector bethe_tv_y_detail(const BetheTask& task, std::vector<std::string>* breakdown);

/// Weight-function form over admissible m-matrices with ordered L^+ entries.
BetheVector weight_fn_w(const BetheTask& task);

/// Mirrored weight-function form over admissible s-matrices.
BetheVector weight_fn_w_hat(const BetheTask& task);

BetheVector compute_route(const BetheTask& task, Route r);

/// E_{a,a} vec = q^{Lambda_a + n_{a-1} - n_a} vec for all a (n_0 = n_N = 0),
/// or vec = 0.
bool weight_check(const BetheVector& vec, const BetheTask& task);

struct RouteReport {
  std::vector<BetheVector> vectors;  // in the order requested
  bool agree = true;
  bool weight_ok = true;
  std::string first_mismatch;  // empty when agree
  /// Per-admissible-matrix scalar breakdown of the combinatorial routes;
  /// filled on disagreement to isolate per-matrix prefactor issues.
  std::vector<std::string> breakdown;
};

/// Computes every selected route and asserts pairwise exact equality.
RouteReport cross_validate(const BetheTask& task, const std::vector<Route>& routes);

}  // namespace uqgln
