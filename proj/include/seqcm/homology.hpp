#pragma once

#include "presented_module.hpp"

namespace seqcm {

// Homogeneous matrix of a graded map F_src -> F_tgt; entry (r,c) has degree
// col_twists[c] - row_twists[r].
struct GradedMatrix {
  RingPtr ring;
  std::vector<int> row_twists, col_twists;
  std::vector<std::vector<Polynomial>> a;  // a[row][col]

  int rows() const { return static_cast<int>(row_twists.size()); }
  int cols() const { return static_cast<int>(col_twists.size()); }

  static GradedMatrix from_columns(const FreeModule& target,
                                   const std::vector<FreeElement>& columns);
  std::vector<FreeElement> to_columns() const;
  FreeModule target() const { return FreeModule(ring, row_twists); }
  FreeModule source() const { return FreeModule(ring, col_twists); }
  GradedMatrix transpose() const;
};

// Exact product; used to assert complexes compose to zero.
GradedMatrix multiply(const GradedMatrix& f, const GradedMatrix& g);
bool is_zero_matrix(const GradedMatrix& m);

// A free resolution F_0 <- F_1 <- ... <- F_L of M = coker(mats[0]).
// mats[k] is the matrix of phi_{k+1} : F_{k+1} -> F_k.
struct FreeResolution {
  FreeModule f0;
  std::vector<GradedMatrix> mats;
  bool minimal = false;

  int length() const { return static_cast<int>(mats.size()); }
  FreeModule module_at(int k) const {
    return k == 0 ? f0 : FreeModule(f0.ring, mats[k - 1].col_twists);
  }
};

// Schreyer tower: each level's syzygies are computed from the previous
// level's Groebner basis and come out as a basis for the induced order.
// With minimal=true, unit entries are pivoted away until none remain.
FreeResolution free_resolution(const PresentedModule& M, bool minimal = true);

// Pivot away unit entries of a presentation matrix (cokernel unchanged).
PresentedModule minimize_presentation(const PresentedModule& M);

// The family K^i(M) = Ext^{n-i}(M, S) for 0 <= i <= d = dim M. K^d is
// nonzero for nonzero M; dim K^i <= i throughout.
struct DeficiencyBattery {
  int n = 0;  // number of variables
  int d = -1; // dim M
  std::vector<PresentedModule> K;    // size d+1
  std::vector<char> nonzero;         // nonzero[i] <=> K[i] != 0
  std::vector<int> dims;             // dims[i] = dim K[i] (-1 if zero)

  int depth() const;  // min { i : K[i] != 0 }
};

DeficiencyBattery ext_battery(const PresentedModule& M);

// (dim, depth) from Ext vanishing; requires M nonzero.
std::pair<int, int> hom_dim_depth(const PresentedModule& M);

// dim == depth; the zero module counts as Cohen-Macaulay.
bool is_cohen_macaulay(const PresentedModule& M);
bool is_cohen_macaulay(const DeficiencyBattery& B);

// All local cohomology below the dimension has finite length:
// dim K^i <= 0 for every i < d.
bool is_generalized_cm(const PresentedModule& M);
bool is_generalized_cm(const DeficiencyBattery& B);

}  // namespace seqcm
