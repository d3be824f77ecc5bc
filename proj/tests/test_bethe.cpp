#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgln/bethe.hpp"
#include "uqgln/errors.hpp"
#include "uqgln/rmatrix.hpp"
#include "uqgln/rng.hpp"

using namespace uqgln;

namespace {

BetheTask make_eval_task(int N, const std::vector<int>& n, const Rational& q, const Rational& z,
                         const std::vector<std::vector<Rational>>& t) {
  BetheTask task;
  task.comp = Composition{N, n};
  task.q = q;
  task.module = make_evaluation_module(N, q, z);
  task.t.t = t;
  return task;
}

std::vector<Rational> scaled_basis(int dim, int at, const Rational& c) {
  std::vector<Rational> v(static_cast<size_t>(dim));
  v[static_cast<size_t>(at)] = c;
  return v;
}

}  // namespace

TEST_CASE("N=2, n=(1): every route gives (q - q^{-1}) e_2, independent of t and z") {
  const Rational q(3, 2);
  const BetheTask task = make_eval_task(2, {1}, q, Rational(5, 7), {{Rational(11, 4)}});
  const std::vector<Rational> want = scaled_basis(2, 1, q - q.inverse());
  for (Route r : {Route::trace, Route::tv_x, Route::tv_y, Route::w, Route::w_hat}) {
    INFO("route ", route_name(r));
    CHECK(compute_route(task, r).coords == want);
  }
  // independence of t and z
  const BetheTask other = make_eval_task(2, {1}, q, Rational(19), {{Rational(2, 9)}});
  CHECK(bethe_trace(other).coords == want);
}

TEST_CASE("N=2, n=(2) on the vector representation vanishes (E_{21}^2 = 0)") {
  const Rational q(7, 4);
  const BetheTask task =
      make_eval_task(2, {2}, q, Rational(3), {{Rational(2), Rational(5, 3)}});
  for (Route r : {Route::trace, Route::tv_x, Route::tv_y, Route::w, Route::w_hat}) {
    INFO("route ", route_name(r));
    CHECK(vec_is_zero(compute_route(task, r).coords));
  }
}

TEST_CASE("empty variable set returns the singular vector on every route") {
  const Rational q(5, 2);
  const BetheTask task = make_eval_task(3, {0, 0}, q, Rational(4, 3), {{}, {}});
  for (Route r : {Route::trace, Route::tv_x, Route::tv_y, Route::w, Route::w_hat}) {
    INFO("route ", route_name(r));
    const BetheVector v = compute_route(task, r);
    CHECK(v.coords == task.module.rep.singular);
    CHECK(weight_check(v, task));
  }
}

TEST_CASE("N=3, n=(1,1): frozen closed form (q-q^{-1})^2 (y-z)/(y-x) e_3") {
  // Hand contraction of the M=2 trace: only the L_{13}L_{22} term survives on
  // the vector representation.
  const Rational q(3), z(5), x(2), y(7);
  const BetheTask task = make_eval_task(3, {1, 1}, q, z, {{x}, {y}});
  const Rational coef = (q - q.inverse()).pow(2) * (y - z) / (y - x);
  const std::vector<Rational> want = scaled_basis(3, 2, coef);
  for (Route r : {Route::trace, Route::tv_x, Route::tv_y, Route::w, Route::w_hat}) {
    INFO("route ", route_name(r));
    CHECK(compute_route(task, r).coords == want);
  }
}

TEST_CASE("route agreement at random samples, N=2 and N=3") {
  Sampler s(83);
  const std::vector<Route> all = {Route::trace, Route::tv_x, Route::tv_y, Route::w, Route::w_hat};
  for (int rep = 0; rep < 3; ++rep) {
    for (const Composition& c : {Composition{2, {1}}, Composition{2, {2}}, Composition{3, {1, 1}},
                                 Composition{3, {2, 1}}}) {
      const Rational q = s.generic_q();
      const Rational z = s.positive_rational();
      BetheTask task;
      task.comp = c;
      task.q = q;
      task.module = make_evaluation_module(c.N, q, z);
      task.t = sample_assignment(c, q, {z}, s);
      const RouteReport rr = cross_validate(task, all);
      INFO(rr.first_mismatch);
      for (const auto& line : rr.breakdown) INFO(line);
      CHECK(rr.agree);
      CHECK(rr.weight_ok);
    }
  }
}

TEST_CASE("tensor modules: trace = w = w_hat") {
  Sampler s(89);
  for (int rep = 0; rep < 2; ++rep) {
    const Rational q = s.generic_q();
    const std::vector<Rational> zs = {s.positive_rational(), s.positive_rational()};
    for (const Composition& c : {Composition{2, {1}}, Composition{2, {2}}, Composition{3, {1, 1}}}) {
      BetheTask task;
      task.comp = c;
      task.q = q;
      task.module = make_tensor_module(c.N, q, zs);
      task.t = sample_assignment(c, q, zs, s);
      const RouteReport rr = cross_validate(task, {Route::trace, Route::w, Route::w_hat});
      INFO(rr.first_mismatch);
      CHECK(rr.agree);
      CHECK(rr.weight_ok);
      CHECK_FALSE(vec_is_zero(rr.vectors[0].coords));  // generic samples stay nonzero
    }
  }
}

TEST_CASE("tv routes reject tensor modules") {
  Sampler s(97);
  const Rational q = s.generic_q();
  BetheTask task;
  task.comp = Composition{2, {1}};
  task.q = q;
  task.module = make_tensor_module(2, q, {Rational(2), Rational(3)});
  task.t.t = {{Rational(7, 2)}};
  CHECK_THROWS_AS(bethe_tv_x(task), ConfigError);
  CHECK_THROWS_AS(bethe_tv_y(task), ConfigError);
}

TEST_CASE("weight property: direct diagonal action") {
  const Rational q(3, 2);
  const BetheTask task = make_eval_task(2, {1}, q, Rational(5, 7), {{Rational(11, 4)}});
  const BetheVector v = bethe_trace(task);
  // e_2 carries E_{11}-eigenvalue q^{1-1} and E_{22}-eigenvalue q^{0+1}.
  CHECK(weight_check(v, task));
  BetheVector wrong = v;
  wrong.coords = scaled_basis(2, 0, Rational(1));  // e_1 is not the Bethe weight for n=(1)
  CHECK_FALSE(weight_check(wrong, task));
  BetheVector zero = v;
  zero.coords = scaled_basis(2, 0, Rational(0));
  CHECK(weight_check(zero, task));
}

TEST_CASE("dimension cap refuses oversized trace constructions") {
  const Rational q(3, 2);
  BetheTask task = make_eval_task(2, {3}, q, Rational(5, 7),
                                  {{Rational(2), Rational(3), Rational(5)}});
  task.max_cells = 8;
  CHECK_THROWS_AS(bethe_trace(task), ConfigError);
}

TEST_CASE("per-admissible-matrix breakdown isolates each scalar contribution") {
  const Rational q(3), z(5), x(2), y(7);
  const BetheTask task = make_eval_task(3, {1, 1}, q, z, {{x}, {y}});
  std::vector<std::string> lines;
  bethe_tv_x_detail(task, &lines);
  bethe_tv_y_detail(task, &lines);
  REQUIRE(lines.size() == 4);  // two admissible matrices per family
  for (const auto& line : lines) {
    CHECK(line.find("scalar=") != std::string::npos);
    CHECK(line.find("opvec=") != std::string::npos);
  }
  CHECK(lines[0].rfind("tv_x s[", 0) == 0);
  CHECK(lines[2].rfind("tv_y m[", 0) == 0);
}

TEST_CASE("trace route agrees with the literal monodromy-trace construction") {
  // Build T = L^{(1)}(u_1) ... L^{(M)}(u_M) R-product as one dense matrix on
  // (C^N)^{⊗M} ⊗ V, right-multiply by the E-monomial, take the auxiliary
  // trace, and apply to the singular vector.
  Sampler s(103);
  for (const Composition& c : {Composition{2, {1}}, Composition{2, {2}}, Composition{3, {1, 1}}}) {
    const int N = c.N;
    const Rational q = s.generic_q();
    const Rational z = s.positive_rational();
    BetheTask task;
    task.comp = c;
    task.q = q;
    task.module = make_evaluation_module(N, q, z);
    task.t = sample_assignment(c, q, {z}, s);

    std::vector<Rational> us;
    std::vector<int> types;
    for (int a = 1; a <= N - 1; ++a)
      for (int l = 1; l <= c.count(a); ++l) {
        us.push_back(task.t.at(a, l));
        types.push_back(a);
      }
    const int M = static_cast<int>(us.size());
    long aux = 1;
    for (int k = 0; k < M; ++k) aux *= N;
    const int dim = task.module.rep.dim;
    const int total = static_cast<int>(aux) * dim;

    auto embed_leg = [&](const BlockGrid& g, int leg) {  // leg 0-based
      OpMatrix out(total, total);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (g.at(i, j).is_zero()) continue;
          OpMatrix unit(N, N);
          unit.at(i, j) = Rational(1);
          OpMatrix factor = OpMatrix::identity(1);
          for (int k = 0; k < M; ++k)
            factor = tensor_product(factor, k == leg ? unit : OpMatrix::identity(N));
          out += tensor_product(factor, g.at(i, j));
        }
      return out;
    };

    OpMatrix big = OpMatrix::identity(total);
    for (int k = 1; k <= M; ++k)
      big = big * embed_leg(task.module.lplus.eval_grid(us[static_cast<size_t>(k - 1)]), k - 1);
    for (auto [j, i] : r_product_pair_order(M))
      big = big * tensor_product(r_on_legs(N, M, j, i, us[static_cast<size_t>(j - 1)],
                                           us[static_cast<size_t>(i - 1)], q),
                                 OpMatrix::identity(dim));
    // E_{21}^{⊗ n_1} ⊗ ... ⊗ E_{N,N-1}^{⊗ n_{N-1}} ⊗ 1
    OpMatrix emon = OpMatrix::identity(1);
    for (int k = 0; k < M; ++k) {
      OpMatrix unit(N, N);
      unit.at(types[static_cast<size_t>(k)], types[static_cast<size_t>(k)] - 1) = Rational(1);
      emon = tensor_product(emon, unit);
    }
    big = big * tensor_product(emon, OpMatrix::identity(dim));
    const OpMatrix reduced = partial_trace_aux(big, std::vector<int>(static_cast<size_t>(M), N), dim);
    std::vector<Rational> got = reduced.apply(task.module.rep.singular);
    Rational pref(1);
    for (int a = 1; a <= N - 1; ++a)
      for (int b = a + 1; b <= N - 1; ++b)
        for (int j = 1; j <= c.count(b); ++j)
          for (int i = 1; i <= c.count(a); ++i)
            pref *= (q * task.t.at(b, j) - q.inverse() * task.t.at(a, i)) /
                    (task.t.at(b, j) - task.t.at(a, i));
    for (auto& x : got) x *= pref;
    CHECK(got == bethe_trace(task).coords);
  }
}

TEST_CASE("determinism: two runs produce identical coordinates") {
  Sampler s(101);
  const Rational q = s.generic_q();
  const Rational z = s.positive_rational();
  BetheTask task;
  task.comp = Composition{3, {1, 1}};
  task.q = q;
  task.module = make_evaluation_module(3, q, z);
  task.t = sample_assignment(task.comp, q, {z}, s);
  const RouteReport a = cross_validate(task, {Route::trace, Route::w});
  const RouteReport b = cross_validate(task, {Route::trace, Route::w});
  CHECK(a.vectors[0].coords == b.vectors[0].coords);
  CHECK(a.vectors[1].coords == b.vectors[1].coords);
}
