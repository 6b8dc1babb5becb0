#include "cqs/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace cqs {

namespace {

// Appends the two-term column x^g |-> x^{g-hi} e_hi - x^{g-lo} e_lo for the
// consecutive generator pair (lo, hi) at rows (row_lo, row_lo + 1).
void push_pair_column(MonomialMatrix& m, std::size_t row_lo, const LatticeVector& lo,
                      const LatticeVector& hi, const LatticeVector& g) {
  m.entries.push_back({row_lo + 1, m.cols, +1, g - hi});
  m.entries.push_back({row_lo, m.cols, -1, g - lo});
  ++m.cols;
}

void check_matrix(const Cqs& c, const MonomialMatrix& m,
                  const std::vector<LatticeVector>& row_shifts,
                  const std::vector<LatticeVector>& col_shifts) {
  for (const auto& e : m.entries) {
    if (!dual_cone_contains(c, e.exponent, false))
      throw std::logic_error("presentation: matrix exponent outside the dual cone");
    if (col_shifts[e.col] != row_shifts[e.row] + e.exponent)
      throw std::logic_error("presentation: matrix entry violates shift compatibility");
  }
}

void check_composite_vanishes(const MonomialMatrix& d1, const MonomialMatrix& d2) {
  // d1*d2 as a matrix of polynomials; every (row, col, exponent) bucket must
  // cancel.
  std::map<std::tuple<std::size_t, std::size_t, LatticeVector>, long> sums;
  std::vector<std::vector<const MonomialEntry*>> d1_by_col(d1.cols);
  for (const auto& e : d1.entries) d1_by_col[e.col].push_back(&e);
  for (const auto& e2 : d2.entries)
    for (const auto* e1 : d1_by_col[e2.row])
      sums[{e1->row, e2.col, e1->exponent + e2.exponent}] += e1->coeff * e2.coeff;
  for (const auto& [key, v] : sums)
    if (v != 0) throw std::logic_error("presentation: d1*d2 does not vanish");
}

}  // namespace

Presentation presentation(const Cqs& c, const SyzygyQuiver& qv, const WeilDivisor& d) {
  Presentation p;
  p.f0.shifts = mingens(c, d);
  p.d1.rows = p.f0.shifts.size();

  const auto first = incoming(c, qv, d);
  std::vector<std::size_t> f1_offset;  // start of each W^a block in F1
  std::vector<std::vector<LatticeVector>> wgens(first.size());
  for (std::size_t a = 0; a < first.size(); ++a) {
    f1_offset.push_back(p.f1.shifts.size());
    wgens[a] = mingens(c, divisor_of(c, first[a]));
    for (const auto& g : wgens[a]) {
      push_pair_column(p.d1, a, p.f0.shifts[a], p.f0.shifts[a + 1], g);
      p.f1.shifts.push_back(g);
    }
  }
  p.d2.rows = p.f1.shifts.size();

  for (std::size_t a = 0; a < first.size(); ++a) {
    const auto second = incoming(qv, first[a]);
    for (std::size_t b = 0; b < second.size(); ++b) {
      for (const auto& g : mingens(c, divisor_of(c, second[b]))) {
        push_pair_column(p.d2, f1_offset[a] + b, wgens[a][b], wgens[a][b + 1], g);
        p.f2.shifts.push_back(g);
      }
    }
  }

  check_matrix(c, p.d1, p.f0.shifts, p.f1.shifts);
  check_matrix(c, p.d2, p.f1.shifts, p.f2.shifts);
  check_composite_vanishes(p.d1, p.d2);
  return p;
}

namespace {

// Hom(R[-a], D')_u is one-dimensional iff u + a lies in P(D'); applying
// Hom(-, D') to mm : F_{k+1} -> F_k transposes it, so the result maps the
// active summands of F_k (cols) to the active summands of F_{k+1} (rows).
std::vector<std::vector<Int>> hom_matrix_of(const Cqs& c, const MonomialMatrix& mm,
                                            const std::vector<LatticeVector>& row_shifts,
                                            const std::vector<LatticeVector>& col_shifts,
                                            const WeilDivisor& dp, const LatticeVector& u) {
  std::vector<std::size_t> row_pos(col_shifts.size(), SIZE_MAX),
      col_pos(row_shifts.size(), SIZE_MAX);
  std::size_t nrows = 0, ncols = 0;
  for (std::size_t k = 0; k < row_shifts.size(); ++k)
    if (polyhedron_contains(c, dp, u + row_shifts[k])) col_pos[k] = ncols++;
  for (std::size_t l = 0; l < col_shifts.size(); ++l)
    if (polyhedron_contains(c, dp, u + col_shifts[l])) row_pos[l] = nrows++;
  std::vector<std::vector<Int>> m(nrows, std::vector<Int>(ncols, Int(0)));
  for (const auto& e : mm.entries)
    if (row_pos[e.col] != SIZE_MAX && col_pos[e.row] != SIZE_MAX)
      m[row_pos[e.col]][col_pos[e.row]] += e.coeff;
  return m;
}

}  // namespace

std::vector<std::vector<Int>> hom_matrix_at(const Cqs& c, const Presentation& p,
                                            const WeilDivisor& dp, const LatticeVector& u) {
  return hom_matrix_of(c, p.d1, p.f0.shifts, p.f1.shifts, dp, u);
}

std::vector<std::vector<Int>> tensor_matrix_at(const Cqs& c, const MonomialMatrix& mm,
                                               const std::vector<LatticeVector>& row_shifts,
                                               const std::vector<LatticeVector>& col_shifts,
                                               const WeilDivisor& dp, const LatticeVector& u) {
  // (R[-a] (x) D')_u is D'_{u-a}; the induced map keeps an entry exactly
  // when both endpoint degrees survive.
  std::vector<std::size_t> row_pos(row_shifts.size(), SIZE_MAX),
      col_pos(col_shifts.size(), SIZE_MAX);
  std::size_t nrows = 0, ncols = 0;
  for (std::size_t k = 0; k < row_shifts.size(); ++k)
    if (polyhedron_contains(c, dp, u - row_shifts[k])) row_pos[k] = nrows++;
  for (std::size_t l = 0; l < col_shifts.size(); ++l)
    if (polyhedron_contains(c, dp, u - col_shifts[l])) col_pos[l] = ncols++;
  std::vector<std::vector<Int>> m(nrows, std::vector<Int>(ncols, Int(0)));
  for (const auto& e : mm.entries)
    if (row_pos[e.row] != SIZE_MAX && col_pos[e.col] != SIZE_MAX)
      m[row_pos[e.row]][col_pos[e.col]] += e.coeff;
  return m;
}

long exact_rank(std::vector<std::vector<Int>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  // Bareiss fraction-free elimination: every division is exact.
  std::size_t r = 0;
  Int prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

std::map<LatticeVector, long> ext1_oracle(const Cqs& c, const SyzygyQuiver& qv,
                                          const WeilDivisor& d, const WeilDivisor& dp,
                                          const PairingWindow& window) {
  const Presentation p = presentation(c, qv, d);
  std::map<LatticeVector, long> out;
  for (const auto& u : window.degrees(c)) {
    long f1_dim = 0;
    for (const auto& b : p.f1.shifts)
      if (polyhedron_contains(c, dp, u + b)) ++f1_dim;
    const auto delta1 = hom_matrix_of(c, p.d1, p.f0.shifts, p.f1.shifts, dp, u);
    const auto delta2 = hom_matrix_of(c, p.d2, p.f1.shifts, p.f2.shifts, dp, u);
    const long dim = f1_dim - exact_rank(delta1) - exact_rank(delta2);
    if (dim < 0) throw std::logic_error("ext1_oracle: negative cohomology dimension");
    if (dim > 0) out[u] = dim;
  }
  return out;
}

std::map<LatticeVector, long> tor1_oracle(const Cqs& c, const SyzygyQuiver& qv,
                                          const WeilDivisor& d, const WeilDivisor& dp,
                                          const PairingWindow& window) {
  const Presentation p = presentation(c, qv, d);
  std::map<LatticeVector, long> out;
  for (const auto& u : window.degrees(c)) {
    long f1_dim = 0;
    for (const auto& b : p.f1.shifts)
      if (polyhedron_contains(c, dp, u - b)) ++f1_dim;
    const auto a1 = tensor_matrix_at(c, p.d1, p.f0.shifts, p.f1.shifts, dp, u);
    const auto a2 = tensor_matrix_at(c, p.d2, p.f1.shifts, p.f2.shifts, dp, u);
    const long dim = f1_dim - exact_rank(a1) - exact_rank(a2);
    if (dim < 0) throw std::logic_error("tor1_oracle: negative homology dimension");
    if (dim > 0) out[u] = dim;
  }
  return out;
}

}  // namespace cqs
