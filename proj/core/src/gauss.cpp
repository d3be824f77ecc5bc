#include "uqgln/gauss.hpp"

#include "uqgln/errors.hpp"

namespace uqgln {

namespace {

// Inverse of the corner built from the blocks of g, flattened to one exact
// matrix and inverted there. With `transposed` the arrangement L_{ji} is
// inverted instead: the first-flavor decomposition orders entry products as
// F k E, so its elimination contraction B_l W_{lk} C_k needs the inverse of
// the transposed arrangement (for commuting entries the readings coincide).
BlockGrid corner_inverse(const BlockGrid& g, const std::vector<int>& idx, bool transposed) {
  const int n = static_cast<int>(idx.size());
  const int d = g.inner_dim();
  if (n == 0) return BlockGrid(0, 0, d);  // empty elimination
  BlockGrid corner(n, n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int r = idx[static_cast<size_t>(transposed ? j : i)] - 1;
      const int c = idx[static_cast<size_t>(transposed ? i : j)] - 1;
      corner.at(i, j) = g.at(r, c);
    }
  OpMatrix inv;
  try {
    inv = invert(corner.flatten());
  } catch (const SingularError&) {
    throw ResampleError("singular corner block in Gauss extraction");
  }
  return BlockGrid::unflatten(inv, n, n);
}

OpMatrix invert_k(const OpMatrix& k) {
  try {
    return invert(k);
  } catch (const SingularError&) {
    throw ResampleError("singular diagonal Gauss coordinate");
  }
}

// First flavor, one sign: eliminate against the top-left corners.
GaussSample::Side extract_first(const BlockGrid& g) {
  const int N = g.block_rows();
  const int d = g.inner_dim();
  GaussSample::Side side;
  side.k.assign(static_cast<size_t>(N), OpMatrix(d, d));
  side.f.assign(static_cast<size_t>(N), std::vector<OpMatrix>());
  side.e.assign(static_cast<size_t>(N), std::vector<OpMatrix>());
  for (int r = 0; r < N; ++r) {
    side.f[static_cast<size_t>(r)].assign(static_cast<size_t>(N), OpMatrix(d, d));
    side.e[static_cast<size_t>(r)].assign(static_cast<size_t>(N), OpMatrix(d, d));
  }
  for (int m = 1; m <= N; ++m) {
    std::vector<int> idx;
    for (int i = 1; i < m; ++i) idx.push_back(i);
    const BlockGrid winv = corner_inverse(g, idx, /*transposed=*/true);
    // boxed quasideterminant D - sum_{k,l} B_l W_{lk} C_k for the box at
    // row `row`, column `col`, with B the column above the box, C the row
    // left of it, and W the inverse of the transposed corner.
    auto qdet = [&](int row, int col) {
      OpMatrix out = g.at(row - 1, col - 1);
      for (int k = 1; k < m; ++k)
        for (int l = 1; l < m; ++l) {
          const OpMatrix& b = g.at(l - 1, col - 1);
          const OpMatrix& c = g.at(row - 1, k - 1);
          if (b.is_zero() || c.is_zero()) continue;
          out -= b * winv.at(l - 1, k - 1) * c;
        }
      return out;
    };
    side.k[static_cast<size_t>(m - 1)] = qdet(m, m);
    const OpMatrix kinv = invert_k(side.k[static_cast<size_t>(m - 1)]);
    for (int b = m + 1; b <= N; ++b) {
      side.e[static_cast<size_t>(m - 1)][static_cast<size_t>(b - 1)] = kinv * qdet(b, m);
      side.f[static_cast<size_t>(b - 1)][static_cast<size_t>(m - 1)] = qdet(m, b) * kinv;
    }
  }
  return side;
}

// Second flavor, one sign: eliminate against the bottom-right corners.
GaussSample::Side extract_second(const BlockGrid& g) {
  const int N = g.block_rows();
  const int d = g.inner_dim();
  GaussSample::Side side;
  side.k.assign(static_cast<size_t>(N), OpMatrix(d, d));
  side.f.assign(static_cast<size_t>(N), std::vector<OpMatrix>());
  side.e.assign(static_cast<size_t>(N), std::vector<OpMatrix>());
  for (int r = 0; r < N; ++r) {
    side.f[static_cast<size_t>(r)].assign(static_cast<size_t>(N), OpMatrix(d, d));
    side.e[static_cast<size_t>(r)].assign(static_cast<size_t>(N), OpMatrix(d, d));
  }
  for (int m = N; m >= 1; --m) {
    std::vector<int> idx;
    for (int i = m + 1; i <= N; ++i) idx.push_back(i);
    const BlockGrid dinv = corner_inverse(g, idx, /*transposed=*/false);
    // boxed top-left quasideterminant A - B D^{-1} C with the box at
    // (row, col) and the corner strictly below/right of m.
    auto qdet = [&](int row, int col) {
      OpMatrix out = g.at(row - 1, col - 1);
      for (int i = m + 1; i <= N; ++i)
        for (int j = m + 1; j <= N; ++j) {
          const OpMatrix& b = g.at(row - 1, i - 1);
          const OpMatrix& c = g.at(j - 1, col - 1);
          if (b.is_zero() || c.is_zero()) continue;
          out -= b * dinv.at(i - m - 1, j - m - 1) * c;
        }
      return out;
    };
    side.k[static_cast<size_t>(m - 1)] = qdet(m, m);
    const OpMatrix kinv = invert_k(side.k[static_cast<size_t>(m - 1)]);
    for (int c = 1; c < m; ++c) {
      side.e[static_cast<size_t>(c - 1)][static_cast<size_t>(m - 1)] = kinv * qdet(m, c);
      side.f[static_cast<size_t>(m - 1)][static_cast<size_t>(c - 1)] = qdet(c, m) * kinv;
    }
  }
  return side;
}

}  // namespace

GaussSample gauss_extract(const LOperatorPoly& lplus, const LOperatorPoly& lminus, const Rational& t,
                          GaussFlavor flavor) {
  if (lplus.sign != LSign::plus || lminus.sign != LSign::minus || lplus.N != lminus.N ||
      lplus.dim != lminus.dim)
    throw DimensionError("gauss_extract: need matching L^+ and L^- over one module");
  GaussSample g;
  g.flavor = flavor;
  g.N = lplus.N;
  g.dim = lplus.dim;
  g.t = t;
  g.q = lplus.q;
  const BlockGrid gp = lplus.eval_grid(t);
  const BlockGrid gm = lminus.eval_grid(t);
  if (flavor == GaussFlavor::first) {
    g.plus = extract_first(gp);
    g.minus = extract_first(gm);
  } else {
    g.plus = extract_second(gp);
    g.minus = extract_second(gm);
  }
  return g;
}

BlockGrid reconstruct_l(const GaussSample& g, LSign sign) {
  const GaussSample::Side& s = g.side(sign);
  const OpMatrix eye = OpMatrix::identity(g.dim);
  BlockGrid out(g.N, g.N, g.dim);
  for (int a = 1; a <= g.N; ++a)
    for (int b = 1; b <= g.N; ++b) {
      OpMatrix acc(g.dim, g.dim);
      if (g.flavor == GaussFlavor::first) {
        // L_{a,b} = sum_{m <= min(a,b)} F_{b,m} k_m E_{m,a}
        const int top = std::min(a, b);
        for (int m = 1; m <= top; ++m) {
          const OpMatrix& fpart = (m == b) ? eye : s.fc(b, m);
          const OpMatrix& epart = (m == a) ? eye : s.ec(m, a);
          acc += fpart * s.kc(m) * epart;
        }
      } else {
        // L_{a,b} = sum_{m >= max(a,b)} Fhat_{m,a} khat_m Ehat_{b,m}
        const int bot = std::max(a, b);
        for (int m = bot; m <= g.N; ++m) {
          const OpMatrix& fpart = (m == a) ? eye : s.fc(m, a);
          const OpMatrix& epart = (m == b) ? eye : s.ec(b, m);
          acc += fpart * s.kc(m) * epart;
        }
      }
      out.at(a - 1, b - 1) = std::move(acc);
    }
  return out;
}

OpMatrix current_f(const GaussSample& g, int i) {
  if (g.flavor != GaussFlavor::first) throw DimensionError("current_f needs a first-flavor sample");
  return g.plus.fc(i + 1, i) - g.minus.fc(i + 1, i);
}

OpMatrix current_e(const GaussSample& g, int i) {
  if (g.flavor != GaussFlavor::first) throw DimensionError("current_e needs a first-flavor sample");
  return g.plus.ec(i, i + 1) - g.minus.ec(i, i + 1);
}

OpMatrix current_f_hat(const GaussSample& g, int i) {
  if (g.flavor != GaussFlavor::second) throw DimensionError("current_f_hat needs a second-flavor sample");
  return g.plus.fc(i + 1, i) - g.minus.fc(i + 1, i);
}

OpMatrix current_e_hat(const GaussSample& g, int i) {
  if (g.flavor != GaussFlavor::second) throw DimensionError("current_e_hat needs a second-flavor sample");
  return g.plus.ec(i, i + 1) - g.minus.ec(i, i + 1);
}

OpMatrix composed_current_f(const GaussSample& g, int j, int i) {
  if (!(1 <= i && i < j && j <= g.N)) throw DimensionError("composed_current_f: need i < j <= N");
  OpMatrix out = (g.q - g.q.inverse()).pow(j - i - 1) * OpMatrix::identity(g.dim);
  for (int k = j - 1; k >= i; --k) out = out * current_f(g, k);
  return out;
}

OpMatrix composed_current_f_hat(const GaussSample& g, int j, int i) {
  if (!(1 <= i && i < j && j <= g.N)) throw DimensionError("composed_current_f_hat: need i < j <= N");
  OpMatrix out = (g.q - g.q.inverse()).pow(j - i - 1) * OpMatrix::identity(g.dim);
  for (int k = i; k <= j - 1; ++k) out = out * current_f_hat(g, k);
  return out;
}

OpMatrix current_f(const ModuleWithL& m, int i, const Rational& t) {
  return current_f(gauss_extract(m.lplus, m.lminus, t, GaussFlavor::first), i);
}

OpMatrix current_e(const ModuleWithL& m, int i, const Rational& t) {
  return current_e(gauss_extract(m.lplus, m.lminus, t, GaussFlavor::first), i);
}

OpMatrix current_f_hat(const ModuleWithL& m, int i, const Rational& t) {
  return current_f_hat(gauss_extract(m.lplus, m.lminus, t, GaussFlavor::second), i);
}

OpMatrix current_e_hat(const ModuleWithL& m, int i, const Rational& t) {
  return current_e_hat(gauss_extract(m.lplus, m.lminus, t, GaussFlavor::second), i);
}

OpMatrix composed_current_f(const ModuleWithL& m, int j, int i, const Rational& t) {
  return composed_current_f(gauss_extract(m.lplus, m.lminus, t, GaussFlavor::first), j, i);
}

OpMatrix composed_current_f_hat(const ModuleWithL& m, int j, int i, const Rational& t) {
  return composed_current_f_hat(gauss_extract(m.lplus, m.lminus, t, GaussFlavor::second), j, i);
}

namespace {

Rational safe_ratio(const Rational& num, const Rational& den) {
  if (den.is_zero()) throw ResampleError("coinciding sample points in a relation prefactor");
  return num / den;
}

RelationRecord relation(const std::string& name, const OpMatrix& lhs, const OpMatrix& rhs) {
  RelationRecord r;
  r.name = name;
  if (lhs != rhs) {
    r.ok = false;
    for (int i = 0; i < lhs.rows() && r.detail.empty(); ++i)
      for (int j = 0; j < lhs.cols(); ++j)
        if (lhs.at(i, j) != rhs.at(i, j)) {
          r.detail = "first mismatch at (" + std::to_string(i) + "," + std::to_string(j) +
                     "): lhs=" + lhs.at(i, j).str() + " rhs=" + rhs.at(i, j).str();
          break;
        }
  }
  return r;
}

}  // namespace

std::vector<RelationRecord> check_current_relations(const ModuleWithL& m, const Rational& z,
                                                    const Rational& w) {
  std::vector<RelationRecord> out;
  const Rational& q = m.rep.q;
  const Rational qi = q.inverse();
  const GaussSample g1z = gauss_extract(m.lplus, m.lminus, z, GaussFlavor::first);
  const GaussSample g1w = gauss_extract(m.lplus, m.lminus, w, GaussFlavor::first);
  const GaussSample g2z = gauss_extract(m.lplus, m.lminus, z, GaussFlavor::second);
  const GaussSample g2w = gauss_extract(m.lplus, m.lminus, w, GaussFlavor::second);
  const int N = m.rep.N;

  for (int i = 1; i <= N - 1; ++i) {
    const std::string si = std::to_string(i);
    {
      const OpMatrix fz = current_f(g1z, i), fw = current_f(g1w, i);
      out.push_back(relation("ff_same/i" + si, (qi * z - q * w) * (fz * fw), (q * z - qi * w) * (fw * fz)));
      const OpMatrix ez = current_e(g1z, i), ew = current_e(g1w, i);
      out.push_back(relation("ee_same/i" + si, (q * z - qi * w) * (ez * ew), (qi * z - q * w) * (ew * ez)));
      const OpMatrix fhz = current_f_hat(g2z, i), fhw = current_f_hat(g2w, i);
      out.push_back(
          relation("ffhat_same/i" + si, (q * z - qi * w) * (fhz * fhw), (qi * z - q * w) * (fhw * fhz)));
      const OpMatrix ehz = current_e_hat(g2z, i), ehw = current_e_hat(g2w, i);
      out.push_back(
          relation("eehat_same/i" + si, (qi * z - q * w) * (ehz * ehw), (q * z - qi * w) * (ehw * ehz)));
    }
    if (i + 1 <= N - 1) {
      const OpMatrix fz = current_f(g1z, i), fw1 = current_f(g1w, i + 1);
      out.push_back(relation("ff_adjacent/i" + si, (z - w) * (fz * fw1), (qi * z - q * w) * (fw1 * fz)));
      const OpMatrix ez = current_e(g1z, i), ew1 = current_e(g1w, i + 1);
      out.push_back(relation("ee_adjacent/i" + si, (qi * z - q * w) * (ez * ew1), (z - w) * (ew1 * ez)));
      const OpMatrix fhz = current_f_hat(g2z, i), fhw1 = current_f_hat(g2w, i + 1);
      out.push_back(
          relation("ffhat_adjacent/i" + si, (qi * z - q * w) * (fhz * fhw1), (z - w) * (fhw1 * fhz)));
      const OpMatrix ehz = current_e_hat(g2z, i), ehw1 = current_e_hat(g2w, i + 1);
      out.push_back(
          relation("eehat_adjacent/i" + si, (z - w) * (ehz * ehw1), (qi * z - q * w) * (ehw1 * ehz)));
    }
  }

  // Cartan conjugations, both signs, both realizations.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N - 1; ++j) {
      const std::string tag = "/k" + std::to_string(i) + "_j" + std::to_string(j);
      Rational f_ratio(1), e_ratio(1);
      if (i == j) {
        f_ratio = safe_ratio(qi * z - q * w, z - w);
        e_ratio = safe_ratio(z - w, qi * z - q * w);
      } else if (i == j + 1) {
        f_ratio = safe_ratio(q * z - qi * w, z - w);
        e_ratio = safe_ratio(z - w, q * z - qi * w);
      }
      for (LSign sgn : {LSign::plus, LSign::minus}) {
        const char* stag = sgn == LSign::plus ? "p" : "m";
        {
          const OpMatrix& k = g1z.side(sgn).kc(i);
          OpMatrix kin;
          try {
            kin = invert(k);
          } catch (const SingularError&) {
            throw ResampleError("singular Cartan current at sample point");
          }
          out.push_back(relation(std::string("kf_conj") + stag + tag, k * current_f(g1w, j) * kin,
                                 f_ratio * current_f(g1w, j)));
          out.push_back(relation(std::string("ke_conj") + stag + tag, k * current_e(g1w, j) * kin,
                                 e_ratio * current_e(g1w, j)));
        }
        {
          const OpMatrix& kh = g2z.side(sgn).kc(i);
          OpMatrix khin;
          try {
            khin = invert(kh);
          } catch (const SingularError&) {
            throw ResampleError("singular Cartan current at sample point");
          }
          out.push_back(relation(std::string("khfhat_conj") + stag + tag,
                                 kh * current_f_hat(g2w, j) * khin, f_ratio * current_f_hat(g2w, j)));
          out.push_back(relation(std::string("khehat_conj") + stag + tag,
                                 kh * current_e_hat(g2w, j) * khin, e_ratio * current_e_hat(g2w, j)));
        }
      }
    }
  return out;
}

std::vector<RelationRecord> check_current_serre(const ModuleWithL& m, const Rational& z1,
                                                const Rational& z2, const Rational& w) {
  std::vector<RelationRecord> out;
  const Rational qq = m.rep.q + m.rep.q.inverse();
  const int N = m.rep.N;
  const GaussSample a1 = gauss_extract(m.lplus, m.lminus, z1, GaussFlavor::first);
  const GaussSample b1 = gauss_extract(m.lplus, m.lminus, z2, GaussFlavor::first);
  const GaussSample c1 = gauss_extract(m.lplus, m.lminus, w, GaussFlavor::first);
  const GaussSample a2 = gauss_extract(m.lplus, m.lminus, z1, GaussFlavor::second);
  const GaussSample b2 = gauss_extract(m.lplus, m.lminus, z2, GaussFlavor::second);
  const GaussSample c2 = gauss_extract(m.lplus, m.lminus, w, GaussFlavor::second);

  auto serre_sym = [&](const OpMatrix& x1, const OpMatrix& x2, const OpMatrix& y) {
    // Sym_{z1,z2} (X(z1)X(z2)Y - (q+q^{-1}) X(z1)Y X(z2) + Y X(z1)X(z2))
    const OpMatrix t1 = x1 * x2 * y - qq * (x1 * y * x2) + y * (x1 * x2);
    const OpMatrix t2 = x2 * x1 * y - qq * (x2 * y * x1) + y * (x2 * x1);
    return t1 + t2;
  };

  const OpMatrix zero(m.rep.dim, m.rep.dim);
  for (int i = 1; i <= N - 1; ++i)
    for (int e : {-1, 1}) {
      const int j = i + e;
      if (j < 1 || j > N - 1) continue;
      const std::string tag = "/i" + std::to_string(i) + "_j" + std::to_string(j);
      out.push_back(relation("serre_f" + tag,
                             serre_sym(current_f(a1, i), current_f(b1, i), current_f(c1, j)), zero));
      out.push_back(relation("serre_e" + tag,
                             serre_sym(current_e(a1, i), current_e(b1, i), current_e(c1, j)), zero));
      out.push_back(relation(
          "serre_fhat" + tag,
          serre_sym(current_f_hat(a2, i), current_f_hat(b2, i), current_f_hat(c2, j)), zero));
      out.push_back(relation(
          "serre_ehat" + tag,
          serre_sym(current_e_hat(a2, i), current_e_hat(b2, i), current_e_hat(c2, j)), zero));
    }
  return out;
}

std::vector<RelationRecord> check_composed_current_relations(const ModuleWithL& m, const Rational& z,
                                                             const Rational& w) {
  std::vector<RelationRecord> out;
  const Rational& q = m.rep.q;
  const Rational qi = q.inverse();
  const int N = m.rep.N;
  const GaussSample gz = gauss_extract(m.lplus, m.lminus, z, GaussFlavor::first);
  const GaussSample gw = gauss_extract(m.lplus, m.lminus, w, GaussFlavor::first);
  const Rational ratio_zw = safe_ratio(qi - q * (z / w), Rational(1) - z / w);
  const Rational ratio_wz = safe_ratio(qi - q * (w / z), Rational(1) - w / z);

  auto tag3 = [](int i, int j, int k) {
    return "/i" + std::to_string(i) + "j" + std::to_string(j) + "k" + std::to_string(k);
  };
  for (int i = 3; i <= N; ++i)
    for (int j = 2; j < i; ++j)
      for (int k = 1; k < j; ++k) {
        out.push_back(relation("ffi2g" + tag3(i, j, k),
                               composed_current_f(gz, j, k) * composed_current_f(gw, i, k),
                               ratio_zw * (composed_current_f(gw, i, k) * composed_current_f(gz, j, k))));
        out.push_back(relation("ffi22g" + tag3(i, j, k),
                               composed_current_f(gz, i, k) * composed_current_f(gw, i, j),
                               ratio_zw * (composed_current_f(gw, i, j) * composed_current_f(gz, i, k))));
        for (int l = 1; l < k; ++l)
          out.push_back(relation("ffi3g" + tag3(i, j, k) + "l" + std::to_string(l),
                                 composed_current_f(gz, j, k) * composed_current_f(gw, i, l),
                                 composed_current_f(gw, i, l) * composed_current_f(gz, j, k)));
      }
  for (int i = 2; i <= N; ++i)
    for (int j = 1; j < i; ++j)
      out.push_back(relation("ffijij/i" + std::to_string(i) + "j" + std::to_string(j),
                             ratio_wz * (composed_current_f(gz, i, j) * composed_current_f(gw, i, j)),
                             ratio_zw * (composed_current_f(gw, i, j) * composed_current_f(gz, i, j))));
  return out;
}

}  // namespace uqgln
