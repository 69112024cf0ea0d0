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

#include "mtc/cardy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "mtc/linalg.hpp"

namespace mtc {

namespace {

Flag flag(double res, double tol) { return {true, res < tol, res}; }

Flag skipped() { return {false, false, 0}; }

cplx dim_of(const Engine& e, const Obj& x) { return e.trace(e.id(x)); }

const Mor& need(const std::optional<Mor>& m, const char* what) {
  if (!m) throw InputError(std::string("algebra has no ") + what);
  return *m;
}

// U_l (x) U_r for slot n of an object of C (x) C_-.
Obj slot_pair(const FunctorContext& ctx, const Obj& x, int n) {
  const Engine& C = ctx.C();
  const int p = x->labels[n];
  return C.tensor(C.simple(ctx.first(p)), C.simple(ctx.second(p)));
}

// U_l (x) U_r -> T(x) for slot n of x.
Mor t_slot_incl(const FunctorContext& ctx, const Obj& x, int n) {
  const Engine &C = ctx.C(), &P = ctx.P();
  Obj tp = ctx.T(P.simple(x->labels[n]));
  return C.compose(ctx.T(P.slot_incl(x, n)),
                   C.reshape(slot_pair(ctx, x, n), tp));
}

Mor t_slot_proj(const FunctorContext& ctx, const Obj& x, int n) {
  const Engine &C = ctx.C(), &P = ctx.P();
  Obj tp = ctx.T(P.simple(x->labels[n]));
  return C.compose(C.reshape(tp, slot_pair(ctx, x, n)),
                   ctx.T(P.slot_proj(x, n)));
}

}  // namespace

// ---------------------------------------------------------------------------

Mor encircle(const Engine& e, const Mor& f, const Obj& a, const Obj& b,
             const Obj& w, bool inverse) {
  Obj bd = e.dual(b);
  Mor ida = e.id(a), idb = e.id(b), idw = e.id(w), idbd = e.id(bd);
  Mor bottom = inverse ? e.braid(bd, w) : e.braid_inv(w, bd);
  Mor top = inverse ? e.braid_inv(w, b) : e.braid(b, w);
  Mor out = e.compose({
      e.tensor(idw, e.ev_r(b)),
      e.tensor(top, idbd),
      e.tensor(f, e.tensor(idw, idbd)),
      e.tensor(ida, e.tensor(idb, bottom)),
      e.tensor(ida, e.tensor(e.coev(b), idw)),
  });
  return e.coerce(out, e.tensor(a, w), w);
}

KOmega make_komega(const FunctorContext& ctx) {
  const Engine& P = ctx.P();
  std::vector<int> labels(P.rank());
  for (int p = 0; p < P.rank(); ++p) labels[p] = p;
  KOmega k;
  k.K = P.atom(labels);
  k.omega = P.zero(k.K, k.K);
  const auto& d = ctx.derived().dims;
  for (int p = 0; p < P.rank(); ++p)
    k.omega.blk[p](0, 0) = d[ctx.first(p)] * d[ctx.second(p)] / ctx.Dim();
  return k;
}

Mor komega_ring(const FunctorContext& ctx, const KOmega& k, const Obj& y) {
  const Engine& P = ctx.P();
  Obj u = P.unit();
  Mor f = P.coerce(k.omega, P.tensor(u, k.K), k.K);
  return P.coerce(encircle(P, f, u, k.K, y), y, y);
}

double kloop_residual(const FunctorContext& ctx) {
  const Engine& P = ctx.P();
  KOmega k = make_komega(ctx);
  const auto& d = ctx.derived().dims;
  double res = 0;
  for (int p = 0; p < P.rank(); ++p)
    for (int q = 0; q < P.rank(); ++q) {
      Obj w = P.simple(p), v = P.simple(q);
      Obj y = P.tensor(P.dual(v), w);
      Mor lhs = komega_ring(ctx, k, y);
      Mor rhs = P.zero(y, y);
      if (p == q) {
        cplx c = ctx.Dim() / (d[ctx.first(p)] * d[ctx.second(p)]);
        rhs = c * P.coerce(P.compose(P.coev_r(w), P.ev(w)), y, y);
      }
      res = std::max(res, P.diff(lhs, rhs));
    }
  return res;
}

// ---------------------------------------------------------------------------

SInvariance check_S_invariant(const FunctorContext& ctx, const Mor& f,
                              const Obj& a, const Obj& b) {
  const Engine& P = ctx.P();
  Mor fa = P.coerce(f, P.tensor(a, b), b);
  const auto& d = ctx.derived().dims;
  KOmega k = make_komega(ctx);
  Obj bd = P.dual(b);
  SInvariance out;
  for (int p = 0; p < P.rank(); ++p) {
    Obj w = P.simple(p);
    Obj aw = P.tensor(a, w);
    Mor lhs = encircle(P, fa, a, b, w);
    // Basis form: sum over slots of b with label p.
    Mor rhs = P.zero(aw, w);
    for (int s = 0; s < b->size(); ++s) {
      if (b->labels[s] != p) continue;
      rhs = rhs + P.coerce(P.compose({P.slot_proj(b, s), fa,
                                      P.tensor(P.id(a), P.slot_incl(b, s))}),
                           aw, w);
    }
    rhs = (ctx.Dim() / (d[ctx.first(p)] * d[ctx.second(p)])) * rhs;
    out.residual = std::max(out.residual, P.diff(lhs, rhs));
    // K / omega form: the ring around the returning B line and W.
    Mor ring = komega_ring(ctx, k, P.tensor(bd, w));
    Mor rk = P.compose({
        P.tensor(P.ev_r(b), P.id(w)),
        P.tensor(fa, P.tensor(P.id(bd), P.id(w))),
        P.tensor(P.id(a), P.tensor(P.id(b), ring)),
        P.tensor(P.id(a), P.tensor(P.coev(b), P.id(w))),
    });
    out.residual_k =
        std::max(out.residual_k, P.diff(lhs, P.coerce(rk, aw, w)));
  }
  const double tol = P.tol();
  out.pass = out.residual < tol;
  out.pass_k = out.residual_k < tol;
  return out;
}

TorusMatrix torus_Z(const FunctorContext& ctx, const Obj& a) {
  const int n = ctx.rank();
  TorusMatrix z = TorusMatrix::Zero(n, n);
  auto mult = ctx.P().multiplicities(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = mult[ctx.pair(i, j)];
  return z;
}

double szs_residual(const FunctorContext& ctx, const TorusMatrix& z) {
  const Mat& S = ctx.derived().S;
  Mat zc = z.cast<cplx>();
  return max_abs(S * zc * S.inverse() - zc);
}

ModularInvariance check_modular_invariant(const FunctorContext& ctx,
                                          const Algebra& a_cl) {
  const Engine& P = ctx.P();
  const double tol = P.tol();
  ModularInvariance r;
  r.twist_trivial = flag(P.diff(P.twist(a_cl.obj), P.id(a_cl.obj)), tol);
  r.s = check_S_invariant(ctx, a_cl.m, a_cl.obj, a_cl.obj);
  r.Z = torus_Z(ctx, a_cl.obj);
  r.szs = szs_residual(ctx, r.Z);
  r.dim = dim_of(P, a_cl.obj);
  return r;
}

// ---------------------------------------------------------------------------

Mor P_RA_component(const FunctorContext& ctx, const Algebra& a, int i) {
  const Engine& C = ctx.C();
  const Obj& A = a.obj;
  Obj ud = C.simple(C.cat().dual[i]);
  Mor ida = C.id(A), idu = C.id(ud);
  Mor pl = C.compose(C.braid(A, A), C.tensor(ida, C.twist(A)));
  Mor mono = C.compose(C.braid(ud, A), C.braid(A, ud));
  Mor out = C.compose({C.tensor(a.m, idu), C.tensor(pl, idu),
                       C.tensor(ida, mono),
                       C.tensor(need(a.delta, "coproduct"), idu)});
  Obj x = C.tensor(A, ud);
  return C.coerce(out, x, x);
}

Mor left_factor(const FunctorContext& ctx, const Mor& F, const Obj& a,
                int i) {
  const Engine& C = ctx.C();
  Obj x = C.tensor(a, C.simple(C.cat().dual[i]));
  Obj ra = ctx.R(a);
  const int off = ctx.r_offset(a, i);
  Mor g = C.zero(x, x);
  for (int k = 0; k < C.rank(); ++k) {
    std::vector<int> idx;
    for (int s = 0; s < x->size(); ++s)
      if (x->labels[s] == k) idx.push_back(off + s);
    const int p = ctx.pair(k, i);
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < idx.size(); ++c)
        g.blk[k](static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            F.blk[p](ra->copy[idx[r]], ra->copy[idx[c]]);
  }
  return g;
}

FullCentre full_centre(const FunctorContext& ctx, const Algebra& a) {
  const Engine &C = ctx.C(), &P = ctx.P();
  if (!a.has_coalgebra())
    throw InputError("full centre needs a Frobenius algebra");
  FrobeniusReport rep = frobenius_report(C, a);
  if (!rep.frobenius.value || !rep.symmetric.value || !rep.special.value)
    throw InputError(
        "full centre needs a special symmetric Frobenius algebra");
  FullCentre z;
  z.zeta = rep.zeta;
  z.RA = transport_algebra(ctx, Functor::kR, a);
  Split s = split_idempotent(P, (1.0 / z.zeta) * P_left(P, z.RA));
  z.e = s.e;
  z.r = s.r;
  const Algebra& R = z.RA;
  Mor m = P.compose({s.r, R.m, P.tensor(s.e, s.e)});
  Mor eta = P.compose(s.r, R.eta);
  Mor d = z.zeta * P.compose({P.tensor(s.r, s.r), *R.delta, s.e});
  Mor eps = (1.0 / z.zeta) * P.compose(*R.eps, s.e);
  z.alg = make_algebra(P, s.image, m, eta, d, eps);
  return z;
}

// ---------------------------------------------------------------------------

CardyTriple make_triple(const FunctorContext& ctx, const Algebra& op,
                        const Algebra& cl, const Mor& iota) {
  CardyTriple t;
  t.op = op;
  t.cl = cl;
  t.r_op = transport_algebra(ctx, Functor::kR, op);
  t.t_cl = transport_algebra(ctx, Functor::kT, cl);
  t.iota = ctx.P().coerce(iota, cl.obj, t.r_op.obj);
  t.iota_tilde = ctx.C().coerce(ctx.hat_chi_inv(t.iota, op.obj),
                                t.t_cl.obj, op.obj);
  return t;
}

CentreCheck check_centre_condition(const FunctorContext& ctx,
                                   const CardyTriple& t) {
  const Engine &C = ctx.C(), &P = ctx.P();
  const double tol = P.tol();
  CentreCheck r;
  r.iota_algebra =
      flag(algebra_map_residual(P, t.cl, t.r_op, t.iota), tol);
  r.iota_tilde_algebra =
      flag(algebra_map_residual(C, t.t_cl, t.op, t.iota_tilde), tol);
  if (!r.iota_algebra.value || !r.iota_tilde_algebra.value) {
    std::ostringstream os;
    os << "iota is not an algebra map (residual "
       << std::max(r.iota_algebra.residual, r.iota_tilde_algebra.residual)
       << ")";
    throw AlgebraMapError(os.str());
  }
  const Obj& R = t.r_op.obj;
  Mor ir = P.tensor(t.iota, P.id(R));
  r.left_comm = flag(P.diff(P.compose({t.r_op.m, P.braid(R, R), ir}),
                            P.compose(t.r_op.m, ir)),
                     tol);

  const Obj& A = t.op.obj;
  Mor ida = C.id(A);
  double res = 0;
  for (int n = 0; n < t.cl.obj->size(); ++n) {
    const int p = t.cl.obj->labels[n];
    Obj ul = C.simple(ctx.first(p)), ur = C.simple(ctx.second(p));
    Mor in = C.compose(t.iota_tilde, t_slot_incl(ctx, t.cl.obj, n));
    // The left factor passes A with c, the right factor with c^-1.
    Mor cross = C.compose(C.tensor(C.braid(ul, A), C.id(ur)),
                          C.tensor(C.id(ul), C.braid_inv(A, ur)));
    Mor lhs = C.compose({t.op.m, C.tensor(ida, in), cross});
    Mor rhs = C.compose(t.op.m, C.tensor(in, ida));
    res = std::max(res, C.diff(lhs, C.coerce(rhs, lhs.src, lhs.tgt)));
  }
  r.comm_C = flag(res, tol);
  return r;
}

CardyCheck check_cardy_condition(const FunctorContext& ctx,
                                 const CardyTriple& t) {
  const Engine &C = ctx.C(), &P = ctx.P();
  const double tol = P.tol();
  CardyCheck r;
  Mor istar = star(P, t.cl, t.r_op, t.iota);
  r.cardy_CC = flag(
      P.diff(P.compose(t.iota, istar), P_left(P, t.r_op)), tol);

  Mor itstar = star(C, t.t_cl, t.op, t.iota_tilde);
  const auto& d = ctx.derived().dims;
  const Obj& A = t.op.obj;
  double worst = 0;
  for (int i = 0; i < C.rank(); ++i) {
    Obj ui = C.simple(i), ud = C.dual(ui);
    Obj x = C.tensor(A, ud);
    Mor idu = C.id(ud);
    // Sum over a basis alpha of Hom(C^r_n, U_i) and its dual basis, with the
    // U_i line bent onto U_i^v.
    Mor bend = C.compose(C.coev(ui), C.ev_r(ui));
    Mor lhs = C.zero(x, x);
    for (int n = 0; n < t.cl.obj->size(); ++n) {
      const int p = t.cl.obj->labels[n];
      if (ctx.second(p) != i) continue;
      Obj ul = C.simple(ctx.first(p));
      Mor in = C.compose(t.iota_tilde, t_slot_incl(ctx, t.cl.obj, n));
      Mor out = C.compose(t_slot_proj(ctx, t.cl.obj, n), itstar);
      Mor term = C.compose({C.tensor(in, idu),
                            C.tensor(C.id(ul), bend),
                            C.tensor(out, idu)});
      lhs = lhs + C.coerce(term, x, x);
    }
    lhs = (ctx.Dim() / d[i]) * lhs;
    double res = C.diff(lhs, P_RA_component(ctx, t.op, i));
    r.per_label.push_back(res);
    worst = std::max(worst, res);
  }
  r.cardy_C = flag(worst, tol);
  return r;
}

bool CardyReport::def_I() const {
  return error.empty() && cl_frobenius.value && cl_commutative.value &&
         cl_symmetric.value && cl_twist.value && cl_s_invariant_k.value &&
         op_frobenius.value && op_symmetric.value && iota_algebra.value &&
         left_comm.value && cardy_CC.value;
}

bool CardyReport::def_II() const {
  return error.empty() && cl_frobenius.value && cl_commutative.value &&
         cl_symmetric.value && cl_s_invariant.value && op_frobenius.value &&
         op_symmetric.value && iota_tilde_algebra.value && comm_C.value &&
         cardy_C.value;
}

std::vector<std::pair<std::string, const Flag*>> CardyReport::flags() const {
  return {{"closed-frobenius", &cl_frobenius},
          {"closed-commutative", &cl_commutative},
          {"closed-symmetric", &cl_symmetric},
          {"closed-twist-trivial", &cl_twist},
          {"closed-s-invariant-k", &cl_s_invariant_k},
          {"closed-s-invariant", &cl_s_invariant},
          {"open-frobenius", &op_frobenius},
          {"open-symmetric", &op_symmetric},
          {"iota-algebra-map", &iota_algebra},
          {"iota-tilde-algebra-map", &iota_tilde_algebra},
          {"centre-left-comm", &left_comm},
          {"centre-comm-C", &comm_C},
          {"cardy-CC", &cardy_CC},
          {"cardy-C", &cardy_C}};
}

CardyReport check_cardy_algebra(const FunctorContext& ctx,
                                const CardyTriple& t) {
  const Engine &C = ctx.C(), &P = ctx.P();
  CardyReport r;
  FrobeniusReport cl = frobenius_report(P, t.cl);
  FrobeniusReport op = frobenius_report(C, t.op);
  auto frob = [](const FrobeniusReport& f) {
    const Flag* parts[] = {&f.associative, &f.unital, &f.coassociative,
                           &f.counital, &f.frobenius};
    Flag out{true, true, 0};
    for (const Flag* p : parts) {
      out.value = out.value && p->applicable && p->value;
      out.residual = std::max(out.residual, p->residual);
    }
    return out;
  };
  r.cl_frobenius = frob(cl);
  r.cl_commutative = cl.commutative;
  r.cl_symmetric = cl.symmetric;
  r.op_frobenius = frob(op);
  r.op_symmetric = op.symmetric;

  ModularInvariance mi = check_modular_invariant(ctx, t.cl);
  r.cl_twist = mi.twist_trivial;
  r.cl_s_invariant_k = {true, mi.s.pass_k, mi.s.residual_k};
  r.cl_s_invariant = {true, mi.s.pass, mi.s.residual};

  try {
    CentreCheck cc = check_centre_condition(ctx, t);
    r.iota_algebra = cc.iota_algebra;
    r.iota_tilde_algebra = cc.iota_tilde_algebra;
    r.left_comm = cc.left_comm;
    r.comm_C = cc.comm_C;
  } catch (const AlgebraMapError& e) {
    r.error = e.what();
    const double tol = P.tol();
    r.iota_algebra =
        flag(algebra_map_residual(P, t.cl, t.r_op, t.iota), tol);
    r.iota_tilde_algebra =
        flag(algebra_map_residual(C, t.t_cl, t.op, t.iota_tilde), tol);
    r.left_comm = r.comm_C = r.cardy_CC = r.cardy_C = skipped();
    return r;
  }
  if (t.op.has_coalgebra() && t.cl.has_coalgebra()) {
    CardyCheck ck = check_cardy_condition(ctx, t);
    r.cardy_CC = ck.cardy_CC;
    r.cardy_C = ck.cardy_C;
  } else {
    r.cardy_CC = r.cardy_C = skipped();
  }
  return r;
}

CardyTriple canonical_cardy(const FunctorContext& ctx, const Algebra& a,
                            FullCentre* centre) {
  FullCentre z = full_centre(ctx, a);
  CardyTriple t = make_triple(ctx, a, z.alg, z.e);
  if (centre) *centre = std::move(z);
  return t;
}

CardyTriple change_closed_basis(const FunctorContext& ctx,
                                const CardyTriple& t, const Mor& g) {
  const Engine& P = ctx.P();
  const Obj& X = t.cl.obj;
  Mor gc = P.coerce(g, X, X);
  Mor gi = inverse(gc);
  const Algebra& a = t.cl;
  Mor m = P.compose({gi, a.m, P.tensor(gc, gc)});
  Mor eta = P.compose(gi, a.eta);
  std::optional<Mor> d, ep;
  if (a.has_coalgebra()) {
    d = P.compose({P.tensor(gi, gi), *a.delta, gc});
    ep = P.compose(*a.eps, gc);
  }
  Algebra cl = make_algebra(P, X, m, eta, d, ep);
  return make_triple(ctx, t.op, cl, P.compose(t.iota, gc));
}

double Uniqueness::max() const {
  return std::max({algebra, coalgebra, inverse, diagram});
}

Uniqueness uniqueness_iso(const FunctorContext& ctx, const CardyTriple& t) {
  const Engine &C = ctx.C(), &P = ctx.P();
  const double tol = P.tol();
  if (!is_simple(P, t.cl))
    throw InputError("hypothesis violated: closed algebra is not simple");
  if (std::abs(dim_of(C, t.op.obj)) < tol)
    throw InputError("hypothesis violated: dim of the open algebra is 0");
  FrobeniusReport op = frobenius_report(C, t.op);
  if (!op.special.value || !op.simple.value)
    throw InputError(
        "hypothesis violated: open algebra is not simple and special");
  Uniqueness u;
  u.centre = full_centre(ctx, t.op);
  const FullCentre& z = u.centre;
  u.f_cl = P.compose(z.r, t.iota);
  u.algebra = algebra_map_residual(P, t.cl, z.alg, u.f_cl);
  u.coalgebra = coalgebra_map_residual(P, t.cl, z.alg, u.f_cl);
  Mor fstar = star(P, t.cl, z.alg, u.f_cl);
  u.inverse = std::max(P.diff(P.compose(u.f_cl, fstar), P.id(z.alg.obj)),
                       P.diff(P.compose(fstar, u.f_cl), P.id(t.cl.obj)));
  u.diagram = P.diff(P.compose(z.e, u.f_cl), t.iota);
  return u;
}

// ---------------------------------------------------------------------------

Existence existence_construct(const FunctorContext& ctx, const Algebra& cl,
                              std::uint64_t seed) {
  const Engine &C = ctx.C(), &P = ctx.P();
  const double tol = P.tol();
  if (!cl.has_coalgebra())
    throw InputError("closed algebra needs Frobenius data");
  FrobeniusReport rep = frobenius_report(P, cl);
  std::string bad;
  if (!rep.frobenius.value) bad = "Frobenius";
  else if (!rep.commutative.value) bad = "commutative";
  else if (!rep.symmetric.value) bad = "symmetric";
  else if (!rep.haploid.value) bad = "haploid";
  else if (!rep.special.value) bad = "special";
  else if (!rep.simple.value) bad = "simple";
  else if (!check_modular_invariant(ctx, cl).invariant())
    bad = "modular invariant";
  if (!bad.empty())
    throw InputError("closed algebra is not " + bad);

  Existence out;
  Algebra tcl = transport_algebra(ctx, Functor::kT, cl);
  out.summands = decompose_algebra(C, tcl, seed);
  // Deterministic order: by dimension, then by slot labels.
  std::vector<std::tuple<double, std::vector<int>, size_t>> keys;
  for (size_t i = 0; i < out.summands.size(); ++i) {
    const Obj& o = out.summands[i].alg.obj;
    keys.emplace_back(std::round(dim_of(C, o).real() * 1e6),
                      o->labels, i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Summand> sorted;
  for (auto& k : keys) sorted.push_back(out.summands[std::get<2>(k)]);
  out.summands = std::move(sorted);
  for (auto& s : out.summands) {
    bool sp = s.alg.has_coalgebra() && frobenius_report(C, s.alg).special.value;
    out.special.push_back(sp);
    if (sp && out.chosen < 0)
      out.chosen = static_cast<int>(out.special.size()) - 1;
  }
  if (out.chosen < 0) throw InputError("no special summand in T(A_cl)");

  Algebra a = out.summands[out.chosen].alg;
  const Mor& r0 = out.summands[out.chosen].r;
  Mor iota = ctx.hat_chi(r0, cl.obj);

  FrobeniusReport ra = frobenius_report(C, a);
  const cplx zeta_cl = ctx.Dim() / rep.xi;
  out.xi = dim_of(C, a.obj) * zeta_cl / (ra.zeta * ra.zeta);
  {
    FullCentre z = full_centre(ctx, a);
    Mor f = P.compose(z.r, iota);
    out.xi_measured = P.value(P.compose({*z.alg.eps, f, cl.eta})) /
                      P.value(P.compose(*cl.eps, cl.eta));
  }
  out.lambda = std::sqrt(out.xi);
  a.delta = out.lambda * *a.delta;
  a.eps = (1.0 / out.lambda) * *a.eps;

  out.triple = make_triple(ctx, a, cl, iota);
  FullCentre z = full_centre(ctx, a);
  out.f_cl = P.compose(z.r, out.triple.iota);
  Mor fstar = star(P, cl, z.alg, out.f_cl);
  out.iso_residual = std::max(
      {algebra_map_residual(P, cl, z.alg, out.f_cl),
       coalgebra_map_residual(P, cl, z.alg, out.f_cl),
       P.diff(P.compose(out.f_cl, fstar), P.id(z.alg.obj)),
       P.diff(P.compose(fstar, out.f_cl), P.id(cl.obj))});
  (void)tol;
  return out;
}

double gamma_residual(const FunctorContext& ctx, const Algebra& cl) {
  const Engine& C = ctx.C();
  Algebra t = transport_algebra(ctx, Functor::kT, cl);
  const Obj& X = cl.obj;
  double res = 0;
  for (int a = 0; a < X->size(); ++a)
    for (int b = 0; b < X->size(); ++b) {
      const int p = X->labels[a], q = X->labels[b];
      Obj lm = C.simple(ctx.first(p)), rm = C.simple(ctx.second(p));
      Obj ln = C.simple(ctx.first(q)), rn = C.simple(ctx.second(q));
      Mor g = C.compose({
          C.tensor(C.id(ln), C.tensor(C.braid(lm, rn), C.id(rm))),
          C.tensor(C.braid(lm, ln), C.braid_inv(rn, rm)),
          C.tensor(C.id(lm), C.tensor(C.braid_inv(ln, rm), C.id(rn))),
      });
      Mor ia = t_slot_incl(ctx, X, a), ib = t_slot_incl(ctx, X, b);
      Mor lhs = C.compose({t.m, C.tensor(ib, ia), g});
      Mor rhs = C.compose(t.m, C.tensor(ia, ib));
      res = std::max(res, C.diff(lhs, C.coerce(rhs, lhs.src, lhs.tgt)));
    }
  return res;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Mor> s_map(const Engine& e, const Obj& b,
                       const std::vector<Mor>& f, bool inverse) {
  const int n = e.rank();
  if (static_cast<int>(f.size()) != n)
    throw InputError("S action needs one morphism per label");
  cplx D = 0;
  for (auto d : e.dims()) D += d * d;
  const cplx sq = std::sqrt(D);
  std::vector<Mor> out;
  for (int j = 0; j < n; ++j) {
    Obj uj = e.simple(j);
    Mor acc = e.zero(e.tensor(b, uj), uj);
    for (int i = 0; i < n; ++i) {
      Obj ui = e.simple(i);
      Mor fi = e.coerce(f[i], e.tensor(b, ui), ui);
      acc = acc + encircle(e, fi, b, ui, uj, inverse);
    }
    out.push_back((e.dims()[j] / sq) * acc);
  }
  return out;
}

}  // namespace

std::vector<Mor> S_action(const Engine& e, const Obj& b,
                          const std::vector<Mor>& f) {
  return s_map(e, b, f, false);
}

std::vector<Mor> S_inv_action(const Engine& e, const Obj& b,
                              const std::vector<Mor>& f) {
  return s_map(e, b, f, true);
}

}  // namespace mtc
