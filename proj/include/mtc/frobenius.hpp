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

#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "mtc/engine.hpp"
#include "mtc/functors.hpp"

namespace mtc {

/// Algebra object with optional coalgebra data. Shapes are normalized so that
/// m : obj (x) obj -> obj, eta : 1 -> obj, delta : obj -> obj (x) obj and
/// eps : obj -> 1.
struct Algebra {
  Obj obj;
  Mor m, eta;
  std::optional<Mor> delta, eps;
  bool has_coalgebra() const { return delta.has_value() && eps.has_value(); }
};

Algebra make_algebra(const Engine& e, const Obj& obj, const Mor& m,
                     const Mor& eta, std::optional<Mor> delta = std::nullopt,
                     std::optional<Mor> eps = std::nullopt);

struct Flag {
  bool applicable = true;
  bool value = false;
  double residual = 0;
};

struct AlgebraCheck {
  Flag associative, unital;
  bool pass() const { return associative.value && unital.value; }
};

struct FrobeniusReport {
  Flag associative, unital, coassociative, counital, frobenius, commutative,
      symmetric, special, normalised_special, haploid, absolutely_simple,
      simple;
  cplx zeta = 0, xi = 0;
  int endo_dim = 0;
  double dim_l_minus_dim_r = 0;
  /// Flags in a fixed order with their report keys.
  std::vector<std::pair<std::string, const Flag*>> flags() const;
};

AlgebraCheck check_algebra(const Engine& e, const Algebra& a);
FrobeniusReport frobenius_report(const Engine& e, const Algebra& a);

/// Scalar c with x = c id, from the normalized inner product; nullopt if the
/// residual exceeds tol.
std::optional<cplx> scalar_of(const Mor& x, double tol, double* residual);

/// f : A -> B gives f* : B -> A.
Mor star(const Engine& e, const Algebra& a, const Algebra& b, const Mor& f);

/// max(|f m_A - m_B (f (x) f)|, |f eta_A - eta_B|) for f : A -> B.
double algebra_map_residual(const Engine& e, const Algebra& a,
                            const Algebra& b, const Mor& f);
/// max(|(f (x) f) Delta_A - Delta_B f|, |eps_B f - eps_A|).
double coalgebra_map_residual(const Engine& e, const Algebra& a,
                              const Algebra& b, const Mor& f);

/// m o c_{A,A} o (id (x) theta_A) o Delta. Its image obeys
/// m o c_{A,A} o (e (x) id) = m.
Mor P_left(const Engine& e, const Algebra& a);

struct Split {
  Obj image;
  Mor e;  // image -> source
  Mor r;  // source -> image
};

/// Splits an idempotent sector by sector. Throws InputError if p o p != p.
Split split_idempotent(const Engine& e, const Mor& p);

/// Image of zeta^{-1} P^l. Throws InputError if A is not special.
Split left_centre(const Engine& e, const Algebra& a);

/// Basis of Hom_{A|A}(A, A).
std::vector<Mor> bimodule_endos(const Engine& e, const Algebra& a,
                                std::vector<double>* singular = nullptr);
bool is_simple(const Engine& e, const Algebra& a);

struct Summand {
  Algebra alg;
  Mor e, r;
};

/// Splits A along the primitive idempotents of Hom_{A|A}(A, A).
std::vector<Summand> decompose_algebra(const Engine& e, const Algebra& a,
                                       std::uint64_t seed = 1);

/// Coproduct with counit eps determined by the pairing eps o m.
Mor frobenius_from_counit(const Engine& e, const Algebra& a, const Mor& eps);

/// Product structure on A (x) B; the coalgebra part is filled in when both
/// factors carry one.
Algebra tensor_algebra(const Engine& e, const Algebra& a, const Algebra& b);
/// (Delta, eps) of A (x) B.
std::pair<Mor, Mor> tensor_coalgebra(const Engine& e, const Algebra& a,
                                     const Algebra& b);

enum class Functor { kT, kR };

/// Structure of F(A) from the lax maps of F; the coalgebra part is filled in
/// from the colax maps when A carries one.
Algebra transport_algebra(const FunctorContext& ctx, Functor f,
                          const Algebra& a);
/// (Delta, eps) of F(A).
std::pair<Mor, Mor> transport_coalgebra(const FunctorContext& ctx, Functor f,
                                        const Algebra& a);

/// Algebra A x 1 in C (x) C_-.
Algebra box_unit(const FunctorContext& ctx, const Algebra& a);
/// box(X1,Y1) (x) box(X2,Y2) -> box(X1 (x) X2, Y1 (x) Y2).
Mor deligne_iso(const FunctorContext& ctx, const Obj& x1, const Obj& y1,
                const Obj& x2, const Obj& y2);

// Builders.
Algebra unit_algebra(const Engine& e);
/// C[x]/x^2 on 1+1 with eps(a x + b) = a.
Algebra cx2_algebra(const Engine& e);
/// n x n matrices on n^2 copies of 1 with eps = trace.
Algebra matrix_algebra(const Engine& e, int n);
/// C^n with pointwise product and eps = sum.
Algebra diagonal_algebra(const Engine& e, int n);
/// X (x) X^v normalized so that m o Delta = id and eps o eta = (dim X)^2.
Algebra endo_algebra(const Engine& e, const Obj& x);
/// Direct sum of algebras, block diagonal structure.
Algebra direct_sum(const Engine& e, const Algebra& a, const Algebra& b);

}  // namespace mtc
