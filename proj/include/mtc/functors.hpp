// Copyright 2026 The mtc-cardy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "mtc/engine.hpp"

namespace mtc {

/**
 * The pair of categories C and C (x) C_- together with the functors
 * T : C (x) C_- -> C and R : C -> C (x) C_-.
 *
 * A label p of the product is the pair (p / rank, p % rank). An object of
 * the product with slots (k_s, l_s) is mapped by T to the concatenation of
 * the slots of U_{k_s} (x) U_{l_s}. R(A) is the concatenation over i of
 * box(A (x) U_i^v, U_i).
 */
class FunctorContext {
 public:
  explicit FunctorContext(CatPtr base);

  const Engine& C() const { return *c_; }
  const Engine& P() const { return *p_; }
  const DerivedData& derived() const { return d_; }
  cplx Dim() const { return d_.globalDim; }
  cplx sqrtDim() const { return d_.sqrtDim; }
  int rank() const { return c_->rank(); }
  int pair(int i, int j) const { return i * rank() + j; }
  int first(int p) const { return p / rank(); }
  int second(int p) const { return p % rank(); }

  // Deligne product of objects and morphisms of C.
  Obj box(const Obj& x, const Obj& y) const;
  Mor box(const Mor& f, const Mor& g) const;

  Obj T(const Obj& m) const;
  Mor T(const Mor& f) const;
  /// T(M) (x) T(N) -> T(M (x) N).
  Mor phi2T(const Obj& m, const Obj& n) const;
  Mor psi2T(const Obj& m, const Obj& n) const;
  /// 1 -> T(1x1) and its inverse.
  Mor phi0T() const;
  Mor psi0T() const;

  Obj R(const Obj& a) const;
  Mor R(const Mor& f) const;
  /// Offset of the summand i inside R(a).
  int r_offset(const Obj& a, int i) const;

  // Units and counits of the two adjunctions.
  Mor delta_hat(const Obj& m) const;    // M -> RT(M)
  Mor rho_hat(const Obj& a) const;      // TR(A) -> A
  Mor delta_check(const Obj& a) const;  // A -> TR(A)
  Mor rho_check(const Obj& m) const;    // RT(M) -> M

  /// f : T(M) -> A gives M -> R(A).
  Mor hat_chi(const Mor& f, const Obj& m) const;
  /// g : M -> R(A) gives T(M) -> A.
  Mor hat_chi_inv(const Mor& g, const Obj& a) const;
  /// g : A -> T(M) gives R(A) -> M.
  Mor check_chi(const Mor& g, const Obj& m) const;
  /// h : R(A) -> M gives A -> T(M).
  Mor check_chi_inv(const Mor& h, const Obj& a) const;

  Mor phi2R(const Obj& a, const Obj& b) const;  // R(A) (x) R(B) -> R(A (x) B)
  Mor psi2R(const Obj& a, const Obj& b) const;  // R(A (x) B) -> R(A) (x) R(B)
  Mor phi0R() const;                            // 1x1 -> R(1)
  Mor psi0R() const;                            // R(1) -> 1x1

  // Left inverses of f -> R(f) and g -> T(g).
  Mor Q_R(const Mor& f, const Obj& a, const Obj& b) const;
  Mor Q_T(const Mor& g, const Obj& m, const Obj& n) const;

  /// Slot permutation R(A) -> (A x 1) (x) R(1).
  Mor r_tensor_iso(const Obj& a) const;

 private:
  // Offsets of the T-blocks of the slots of m; size |m|+1.
  std::vector<int> t_offsets(const Obj& m) const;
  // (U_i (x) U_j) (x) (U_k (x) U_l) -> T(box(i,j) (x) box(k,l)).
  const Mor& phi_small(int p, int q) const;

  CatPtr base_;
  std::unique_ptr<Engine> c_, p_;
  DerivedData d_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, Mor> phi_cache_;
};

using FunctorPtr = std::shared_ptr<const FunctorContext>;

/// Residuals of the lax, colax and Frobenius diagrams of a functor.
struct FunctorDiagrams {
  double lax_assoc = 0, lax_unit_l = 0, lax_unit_r = 0;
  double colax_assoc = 0, colax_unit_l = 0, colax_unit_r = 0;
  double frob_1 = 0, frob_2 = 0;
  double max() const;
};

FunctorDiagrams check_T_diagrams(const FunctorContext& ctx, const Obj& a,
                                 const Obj& b, const Obj& c);
FunctorDiagrams check_R_diagrams(const FunctorContext& ctx, const Obj& a,
                                 const Obj& b, const Obj& c);

}  // namespace mtc
