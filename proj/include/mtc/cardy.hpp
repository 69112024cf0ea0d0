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

#include <string>
#include <utility>
#include <vector>

#include "mtc/frobenius.hpp"
#include "mtc/functors.hpp"

namespace mtc {

/// Raised when a morphism that must be an algebra map is not one.
class AlgebraMapError : public InputError {
 public:
  using InputError::InputError;
};

// ---------------------------------------------------------------------------
// Loops and the K / omega pair.

/// f : A (x) B -> B with the B line closed into a loop around W, giving
/// A (x) W -> W. The loop passes over W on top and under W at the bottom;
/// `inverse` swaps both crossings.
Mor encircle(const Engine& e, const Mor& f, const Obj& a, const Obj& b,
             const Obj& w, bool inverse = false);

/// K = sum of all U_i x U_j with omega = sum dim U_i dim U_j / Dim id.
struct KOmega {
  Obj K;
  Mor omega;
};
KOmega make_komega(const FunctorContext& ctx);
/// The K line weighted by omega as a loop around y, an endomorphism of y.
Mor komega_ring(const FunctorContext& ctx, const KOmega& k, const Obj& y);
/// Max residual of the loop identity over all pairs of simples.
double kloop_residual(const FunctorContext& ctx);

// ---------------------------------------------------------------------------
// Modular invariance.

/// Both forms of S-invariance of f : A (x) B -> B.
struct SInvariance {
  double residual = 0;    // basis form, per simple U_i x U_j
  double residual_k = 0;  // K / omega form on W = U_i x U_j
  bool pass = false, pass_k = false;
  bool agree() const { return pass == pass_k; }
};
SInvariance check_S_invariant(const FunctorContext& ctx, const Mor& f,
                              const Obj& a, const Obj& b);

/// Z_ij = dim Hom(U_i x U_j, A).
using TorusMatrix = Eigen::MatrixXi;
TorusMatrix torus_Z(const FunctorContext& ctx, const Obj& a);
/// max |S Z S^-1 - Z|.
double szs_residual(const FunctorContext& ctx, const TorusMatrix& z);

struct ModularInvariance {
  Flag twist_trivial;
  SInvariance s;
  TorusMatrix Z;
  double szs = 0;
  cplx dim = 0;
  /// theta = id with the K / omega form of S-invariance.
  bool invariant() const { return twist_trivial.value && s.pass_k; }
  /// theta = id with the basis form.
  bool invariant_basis() const { return twist_trivial.value && s.pass; }
};
ModularInvariance check_modular_invariant(const FunctorContext& ctx,
                                          const Algebra& a_cl);

// ---------------------------------------------------------------------------
// Full centre.

/// Component i of P^l_{R(A)}: an endomorphism of A (x) U_i^v computed in C.
Mor P_RA_component(const FunctorContext& ctx, const Algebra& a, int i);
/// For F : R(a) -> R(a) of the form f_i x id on each summand, the endo f_i
/// of a (x) U_i^v.
Mor left_factor(const FunctorContext& ctx, const Mor& F, const Obj& a, int i);

struct FullCentre {
  Algebra alg;  // Z(A)
  Mor e, r;     // Z(A) -> R(A), R(A) -> Z(A)
  cplx zeta = 1;
  Algebra RA;
};
/// Throws InputError unless A is special symmetric Frobenius.
FullCentre full_centre(const FunctorContext& ctx, const Algebra& a);

// ---------------------------------------------------------------------------
// Cardy triples.

struct CardyTriple {
  Algebra op;            // in C
  Algebra cl;            // in C (x) C_-
  Mor iota;              // cl -> R(op)
  Mor iota_tilde;        // T(cl) -> op
  Algebra r_op, t_cl;    // R(op) and T(cl)
};
CardyTriple make_triple(const FunctorContext& ctx, const Algebra& op,
                        const Algebra& cl, const Mor& iota);

struct CentreCheck {
  Flag iota_algebra, iota_tilde_algebra;
  Flag left_comm;  // in C (x) C_-
  Flag comm_C;     // per summand of cl, in C
  bool agree() const { return left_comm.value == comm_C.value; }
};
/// Throws AlgebraMapError if iota or iota_tilde is not an algebra map.
CentreCheck check_centre_condition(const FunctorContext& ctx,
                                   const CardyTriple& t);

struct CardyCheck {
  Flag cardy_CC;  // iota iota^* = P^l in C (x) C_-
  Flag cardy_C;   // per label i, in C
  std::vector<double> per_label;
  bool agree() const { return cardy_CC.value == cardy_C.value; }
};
CardyCheck check_cardy_condition(const FunctorContext& ctx,
                                 const CardyTriple& t);

/// Both definitions evaluated side by side.
struct CardyReport {
  // Shared by both definitions.
  Flag cl_frobenius, cl_commutative, cl_symmetric, op_frobenius, op_symmetric;
  // First definition.
  Flag cl_twist, cl_s_invariant_k, iota_algebra, left_comm, cardy_CC;
  // Second definition.
  Flag cl_s_invariant, iota_tilde_algebra, comm_C, cardy_C;
  std::string error;
  bool def_I() const;
  bool def_II() const;
  bool agree() const { return def_I() == def_II(); }
  std::vector<std::pair<std::string, const Flag*>> flags() const;
};
CardyReport check_cardy_algebra(const FunctorContext& ctx,
                                const CardyTriple& t);

/// (A | Z(A), e).
CardyTriple canonical_cardy(const FunctorContext& ctx, const Algebra& a,
                            FullCentre* centre = nullptr);

/// Pulls the closed algebra back along an automorphism g of its object:
/// g becomes a Frobenius isomorphism from the new closed algebra to the old
/// one, and iota becomes iota o g.
CardyTriple change_closed_basis(const FunctorContext& ctx,
                                const CardyTriple& t, const Mor& g);

struct Uniqueness {
  Mor f_cl;  // cl -> Z(op)
  FullCentre centre;
  double algebra = 0, coalgebra = 0, inverse = 0, diagram = 0;
  double max() const;
};
/// f_op = id, f_cl = r o iota. Throws InputError if cl is not simple, if
/// dim op = 0, or if op is not simple and special.
Uniqueness uniqueness_iso(const FunctorContext& ctx, const CardyTriple& t);

struct Existence {
  CardyTriple triple;
  std::vector<Summand> summands;  // of T(cl), in deterministic order
  std::vector<bool> special;      // per summand
  int chosen = -1;
  cplx xi = 0;           // dim A zeta_cl / zeta_A^2 before rescaling
  cplx xi_measured = 0;  // eps_Z f_cl = xi eps_cl before rescaling
  cplx lambda = 1;       // Delta_op -> lambda Delta_op, eps_op -> eps_op/lambda
  Mor f_cl;
  double iso_residual = 0;
};
/// Throws InputError if cl is not a simple modular invariant commutative
/// symmetric Frobenius algebra or no special summand exists.
Existence existence_construct(const FunctorContext& ctx, const Algebra& cl,
                              std::uint64_t seed = 1);

/// m_T o Gamma = m_T on T(cl) for commutative cl, as a residual.
double gamma_residual(const FunctorContext& ctx, const Algebra& cl);

// ---------------------------------------------------------------------------
// Modular group on oplus_i Hom(B (x) U_i, U_i).

std::vector<Mor> S_action(const Engine& e, const Obj& b,
                          const std::vector<Mor>& f);
std::vector<Mor> S_inv_action(const Engine& e, const Obj& b,
                              const std::vector<Mor>& f);

}  // namespace mtc
