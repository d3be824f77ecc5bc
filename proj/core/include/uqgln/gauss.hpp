#pragma once

#include <string>
#include <vector>

#include "uqgln/l_operator.hpp"
#include "uqgln/matrix.hpp"

namespace uqgln {

/// The two inequivalent Gauss decompositions: `first` eliminates against the
/// top-left corner of the L-operator, `second` against the bottom-right one.
enum class GaussFlavor { first, second };

/// Gauss coordinates of both L-operators at one sample point. Coordinates
/// are stored with their natural index patterns: k_c for c = 1..N,
/// F_{r,c} with r > c, E_{r,c} with r < c (1-based accessors).
struct GaussSample {
  GaussFlavor flavor = GaussFlavor::first;
  int N = 0;
  int dim = 0;
  Rational t;
  Rational q;

  struct Side {
    std::vector<OpMatrix> k;                // N entries
    std::vector<std::vector<OpMatrix>> f;   // f[r][c], r > c
    std::vector<std::vector<OpMatrix>> e;   // e[r][c], r < c

    const OpMatrix& kc(int c) const { return k[static_cast<size_t>(c - 1)]; }
    const OpMatrix& fc(int r, int c) const { return f[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
    const OpMatrix& ec(int r, int c) const { return e[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
  };
  Side plus;
  Side minus;

  const Side& side(LSign s) const { return s == LSign::plus ? plus : minus; }
};

/// Extracts all Gauss coordinates by the boxed-quasideterminant formulas,
/// implemented as exact block elimination on the flattened operator-entry
/// matrices. Throws SingularError ("resample") when a corner is singular.
GaussSample gauss_extract(const LOperatorPoly& lplus, const LOperatorPoly& lminus, const Rational& t,
                          GaussFlavor flavor);

/// Substitutes the coordinates back into the decomposition of the chosen
/// sign; a round trip must reproduce every L block exactly.
BlockGrid reconstruct_l(const GaussSample& g, LSign sign);

/// Total currents as sampled module operators.
OpMatrix current_f(const GaussSample& g, int i);      // flavor first: F^+_{i+1,i} - F^-_{i+1,i}
OpMatrix current_e(const GaussSample& g, int i);      // flavor first: E^+_{i,i+1} - E^-_{i,i+1}
OpMatrix current_f_hat(const GaussSample& g, int i);  // flavor second analogues
OpMatrix current_e_hat(const GaussSample& g, int i);

/// Composed currents by the residue-collapsed products:
/// F_{j,i}(t) = (q-q^{-1})^{j-i-1} F_{j-1}(t) ... F_i(t) and the mirrored
/// hatted product.
OpMatrix composed_current_f(const GaussSample& g, int j, int i);
OpMatrix composed_current_f_hat(const GaussSample& g, int j, int i);

/// Convenience forms extracting at t internally.
OpMatrix current_f(const ModuleWithL& m, int i, const Rational& t);
OpMatrix current_e(const ModuleWithL& m, int i, const Rational& t);
OpMatrix current_f_hat(const ModuleWithL& m, int i, const Rational& t);
OpMatrix current_e_hat(const ModuleWithL& m, int i, const Rational& t);
OpMatrix composed_current_f(const ModuleWithL& m, int j, int i, const Rational& t);
OpMatrix composed_current_f_hat(const ModuleWithL& m, int j, int i, const Rational& t);

/// One record per verified commutation relation.
struct RelationRecord {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Current-algebra relations at two sample points: the F-only, E-only and
/// Cartan-conjugation families for both realizations (the E-F delta-function
/// relation is a distributional identity and is not sampled).
std::vector<RelationRecord> check_current_relations(const ModuleWithL& m, const Rational& z,
                                                    const Rational& w);

/// Serre relations for total currents, symmetrized over z1, z2.
std::vector<RelationRecord> check_current_serre(const ModuleWithL& m, const Rational& z1,
                                                const Rational& z2, const Rational& w);

/// Composed-current commutation relations for all index tuples i>j>k(>l).
std::vector<RelationRecord> check_composed_current_relations(const ModuleWithL& m, const Rational& z,
                                                             const Rational& w);

}  // namespace uqgln
