#pragma once

#include <map>
#include <vector>

#include "cqs/quiver.hpp"
#include "cqs/region.hpp"

namespace cqs {

/*
 * Degreewise linear-algebra cross-check.  This half of the artifact never
 * looks at staircase regions: it builds the two-step graded free resolution
 * from the syzygy data, restricts the maps to a single degree, and computes
 * exact ranks over Q.  Agreement with the region-based answers is what the
 * oracle check suite and the acceptance run assert.
 */

struct GradedFreeModule {
  // Shift of each free summand: the summand is R[-shift].
  std::vector<LatticeVector> shifts;
};

// Sparse matrix whose (row, col) entry is coeff * x^exponent; all exponents
// lie in the dual cone.  Nonzero entries satisfy
//   source shift (col) = target shift (row) + exponent.
struct MonomialEntry {
  std::size_t row{0};
  std::size_t col{0};
  int coeff{0};
  LatticeVector exponent;
};

struct MonomialMatrix {
  std::size_t rows{0};
  std::size_t cols{0};
  std::vector<MonomialEntry> entries;
};

// F2 --d2--> F1 --d1--> F0 -->> sections of D.  F0 is spanned by mingens(D);
// each first-syzygy summand W^a maps in by x^g |-> x^{g-u^a} e_a -
// x^{g-u^{a-1}} e_{a-1}, and d2 repeats the construction one level down.
// The composite d1*d2 cancels symbolically; presentation() verifies that.
struct Presentation {
  GradedFreeModule f0, f1, f2;
  MonomialMatrix d1, d2;
};

Presentation presentation(const Cqs& c, const SyzygyQuiver& qv, const WeilDivisor& d);

// dim Ext^1(D, D')_u for every u in the window (zero entries omitted):
// cohomology of Hom(d1, D') and Hom(d2, D') in each degree.
std::map<LatticeVector, long> ext1_oracle(const Cqs& c, const SyzygyQuiver& qv,
                                          const WeilDivisor& d, const WeilDivisor& dp,
                                          const PairingWindow& window);

// dim Tor_1(D, D')_u for every u in the window: homology of d2 (x) D' and
// d1 (x) D' in each degree.
std::map<LatticeVector, long> tor1_oracle(const Cqs& c, const SyzygyQuiver& qv,
                                          const WeilDivisor& d, const WeilDivisor& dp,
                                          const PairingWindow& window);

// dim Hom(F, D')_u per summand is 0/1 by lattice membership; these expose
// the scalar matrices of the two complexes in one degree for exactness
// tests.
std::vector<std::vector<Int>> hom_matrix_at(const Cqs& c, const Presentation& p,
                                            const WeilDivisor& dp, const LatticeVector& u);
std::vector<std::vector<Int>> tensor_matrix_at(const Cqs& c, const MonomialMatrix& m,
                                               const std::vector<LatticeVector>& row_shifts,
                                               const std::vector<LatticeVector>& col_shifts,
                                               const WeilDivisor& dp, const LatticeVector& u);

// Exact rank over Q by fraction-free elimination.
long exact_rank(std::vector<std::vector<Int>> m);

}  // namespace cqs
