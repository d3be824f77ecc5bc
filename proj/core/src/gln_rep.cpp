#include "uqgln/gln_rep.hpp"

#include "uqgln/errors.hpp"

namespace uqgln {

ModuleRep vector_rep(int N, const Rational& q) {
  if (N < 2) throw DimensionError("vector_rep needs N >= 2");
  if (q.is_zero() || q == Rational(1) || q == Rational(-1))
    throw ConfigError("q must be nonzero, not +-1");
  ModuleRep m;
  m.N = N;
  m.dim = N;
  m.q = q;
  for (int a = 1; a <= N; ++a) {
    OpMatrix d(N, N), dinv(N, N);
    for (int b = 0; b < N; ++b) {
      d.at(b, b) = (b == a - 1) ? q : Rational(1);
      dinv.at(b, b) = (b == a - 1) ? q.inverse() : Rational(1);
    }
    m.cart.push_back(std::move(d));
    m.cart_inv.push_back(std::move(dinv));
  }
  for (int a = 1; a <= N - 1; ++a) {
    OpMatrix up(N, N), dn(N, N);
    up.at(a - 1, a) = Rational(1);  // e_a <e_{a+1}|
    dn.at(a, a - 1) = Rational(1);  // e_{a+1} <e_a|
    m.raise.push_back(std::move(up));
    m.lower.push_back(std::move(dn));
  }
  m.singular.assign(static_cast<size_t>(N), Rational(0));
  m.singular[0] = Rational(1);
  m.weights.assign(static_cast<size_t>(N), 0);
  m.weights[0] = 1;
  return m;
}

ModuleRep tensor_module(const ModuleRep& m1, const ModuleRep& m2) {
  if (m1.N != m2.N) throw DimensionError("tensor_module: rank mismatch");
  if (m1.q != m2.q) throw DimensionError("tensor_module: deformation parameter mismatch");
  ModuleRep m;
  m.N = m1.N;
  m.dim = m1.dim * m2.dim;
  m.q = m1.q;
  const OpMatrix i1 = OpMatrix::identity(m1.dim);
  const OpMatrix i2 = OpMatrix::identity(m2.dim);
  for (int a = 1; a <= m.N; ++a) {
    m.cart.push_back(tensor_product(m1.cartan(a), m2.cartan(a)));
    m.cart_inv.push_back(tensor_product(m1.cartan_inv(a), m2.cartan_inv(a)));
  }
  for (int a = 1; a <= m.N - 1; ++a) {
    // Delta E_{a,a+1} = E_{a,a+1} ⊗ 1 + E_{a,a}^{-1}E_{a+1,a+1} ⊗ E_{a,a+1}
    m.raise.push_back(tensor_product(m1.raising(a), i2) +
                      tensor_product(m1.cartan_inv(a) * m1.cartan(a + 1), m2.raising(a)));
    // Delta E_{a+1,a} = 1 ⊗ E_{a+1,a} + E_{a+1,a} ⊗ E_{a,a}E_{a+1,a+1}^{-1}
    m.lower.push_back(tensor_product(i1, m2.lowering(a)) +
                      tensor_product(m1.lowering(a), m2.cartan(a) * m2.cartan_inv(a + 1)));
  }
  m.singular.assign(static_cast<size_t>(m.dim), Rational(0));
  for (int i = 0; i < m1.dim; ++i)
    for (int j = 0; j < m2.dim; ++j) {
      const Rational prod = m1.singular[static_cast<size_t>(i)] * m2.singular[static_cast<size_t>(j)];
      if (!prod.is_zero()) m.singular[static_cast<size_t>(i * m2.dim + j)] = prod;
    }
  for (int a = 0; a < m.N; ++a)
    m.weights.push_back(m1.weights[static_cast<size_t>(a)] + m2.weights[static_cast<size_t>(a)]);
  return m;
}

OpMatrix composed_lowering_via(const ModuleRep& m, int c, int a, int b) {
  if (!(1 <= a && a < b && b < c && c <= m.N)) throw DimensionError("composed_lowering_via: need a < b < c");
  const OpMatrix ecb = composed_lowering(m, c, b);
  const OpMatrix eba = composed_lowering(m, b, a);
  return ecb * eba - m.q.inverse() * (eba * ecb);
}

OpMatrix composed_lowering(const ModuleRep& m, int c, int a) {
  if (!(1 <= a && a < c && c <= m.N)) throw DimensionError("composed_lowering: need a < c <= N");
  if (c == a + 1) return m.lowering(a);
  return composed_lowering_via(m, c, a, a + 1);
}

OpMatrix composed_raising_via(const ModuleRep& m, int a, int c, int b) {
  if (!(1 <= a && a < b && b < c && c <= m.N)) throw DimensionError("composed_raising_via: need a < b < c");
  const OpMatrix eab = composed_raising(m, a, b);
  const OpMatrix ebc = composed_raising(m, b, c);
  return eab * ebc - m.q * (ebc * eab);
}

OpMatrix composed_raising(const ModuleRep& m, int a, int c) {
  if (!(1 <= a && a < c && c <= m.N)) throw DimensionError("composed_raising: need a < c <= N");
  if (c == a + 1) return m.raising(a);
  return composed_raising_via(m, a, c, a + 1);
}

OpMatrix gen_entry(const ModuleRep& m, int r, int c) {
  if (r == c) return m.cartan(r);
  if (r > c) return composed_lowering(m, r, c);
  return composed_raising(m, r, c);
}

CheckResult check_cartan_conjugation(const ModuleRep& m) {
  for (int a = 1; a <= m.N; ++a) {
    for (int g = 1; g <= m.N - 1; ++g) {
      struct Item {
        const OpMatrix* mat;
        int row, col;
      };
      const Item items[2] = {{&m.raising(g), g, g + 1}, {&m.lowering(g), g + 1, g}};
      for (const auto& it : items) {
        const long e = (a == it.row ? 1 : 0) - (a == it.col ? 1 : 0);
        const OpMatrix lhs = m.cartan(a) * (*it.mat) * m.cartan_inv(a);
        const OpMatrix rhs = m.q.pow(e) * (*it.mat);
        if (lhs != rhs)
          return {false, "cartan conjugation failed at a=" + std::to_string(a) + ", generator (" +
                             std::to_string(it.row) + "," + std::to_string(it.col) + ")"};
      }
    }
  }
  return {};
}

CheckResult check_chevalley_bracket(const ModuleRep& m) {
  const Rational denom = m.q - m.q.inverse();
  for (int a = 1; a <= m.N - 1; ++a)
    for (int b = 1; b <= m.N - 1; ++b) {
      const OpMatrix lhs = m.raising(a) * m.lowering(b) - m.lowering(b) * m.raising(a);
      OpMatrix rhs(m.dim, m.dim);
      if (a == b)
        rhs = denom.inverse() *
              (m.cartan(a) * m.cartan_inv(a + 1) - m.cartan_inv(a) * m.cartan(a + 1));
      if (lhs != rhs)
        return {false,
                "Chevalley bracket failed at (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")"};
    }
  return {};
}

CheckResult check_serre(const ModuleRep& m) {
  const Rational qq = m.q + m.q.inverse();
  for (int x = 1; x <= m.N - 1; ++x)
    for (int y = 1; y <= m.N - 1; ++y) {
      if (x == y || (x - y != 1 && y - x != 1)) continue;
      const OpMatrix* pairs[2][2] = {{&m.lowering(x), &m.lowering(y)}, {&m.raising(x), &m.raising(y)}};
      for (const auto& p : pairs) {
        const OpMatrix& X = *p[0];
        const OpMatrix& Y = *p[1];
        const OpMatrix lhs = X * X * Y - qq * (X * Y * X) + Y * X * X;
        if (!lhs.is_zero())
          return {false, "Serre relation failed at (x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")"};
      }
    }
  return {};
}

CheckResult check_singular_vector(const ModuleRep& m) {
  for (int a = 1; a <= m.N - 1; ++a)
    if (!vec_is_zero(m.raising(a).apply(m.singular)))
      return {false, "singular vector not annihilated by E_{" + std::to_string(a) + "," + std::to_string(a + 1) + "}"};
  for (int a = 1; a <= m.N; ++a) {
    std::vector<Rational> want = m.singular;
    const Rational ev = m.q.pow(m.weights[static_cast<size_t>(a - 1)]);
    for (auto& x : want) x *= ev;
    if (m.cartan(a).apply(m.singular) != want)
      return {false, "singular vector is not an E_{a,a} eigenvector at a=" + std::to_string(a)};
  }
  return {};
}

CheckResult check_composed_root_independence(const ModuleRep& m) {
  for (int a = 1; a <= m.N; ++a)
    for (int c = a + 2; c <= m.N; ++c) {
      const OpMatrix low0 = composed_lowering_via(m, c, a, a + 1);
      const OpMatrix hi0 = composed_raising_via(m, a, c, a + 1);
      for (int b = a + 2; b < c; ++b) {
        if (composed_lowering_via(m, c, a, b) != low0)
          return {false, "E_{" + std::to_string(c) + "," + std::to_string(a) + "} depends on intermediate " +
                             std::to_string(b)};
        if (composed_raising_via(m, a, c, b) != hi0)
          return {false, "E_{" + std::to_string(a) + "," + std::to_string(c) + "} depends on intermediate " +
                             std::to_string(b)};
      }
    }
  return {};
}

CheckResult check_module(const ModuleRep& m) {
  for (auto* fn : {&check_cartan_conjugation, &check_chevalley_bracket, &check_serre,
                   &check_singular_vector, &check_composed_root_independence}) {
    CheckResult r = (*fn)(m);
    if (!r.ok) return r;
  }
  return {};
}

}  // namespace uqgln
