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

#include <gtest/gtest.h>

#include <cmath>

#include "mtc/cardy.hpp"

namespace mtc {
namespace {

constexpr double kTol = 1e-9;
const char* kModular[] = {"vec", "vec_z2", "fibonacci", "ising"};

Algebra r_unit(const FunctorContext& ctx) {
  return transport_algebra(ctx, Functor::kR, unit_algebra(ctx.C()));
}

Algebra zero_algebra(const Engine& e) {
  Obj z = e.zero_obj();
  return make_algebra(e, z, e.zero(e.tensor(z, z), z), e.zero(e.unit(), z),
                      e.zero(z, e.tensor(z, z)), e.zero(z, e.unit()));
}

cplx counit_of_unit(const Engine& e, const Algebra& a) {
  return e.value(e.compose(*a.eps, a.eta));
}

TEST(Cardy, KOmegaLoop) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    EXPECT_LT(kloop_residual(ctx), kTol) << name;
  }
}

TEST(Cardy, SInvarianceExamples) {
  FunctorContext v(fixture("vec"));
  for (const Algebra& a : {matrix_algebra(v.C(), 2), cx2_algebra(v.C())}) {
    Algebra b = box_unit(v, a);
    SInvariance s = check_S_invariant(v, b.m, b.obj, b.obj);
    EXPECT_TRUE(s.pass && s.pass_k);
  }

  FunctorContext ctx(fixture("ising"));
  Algebra r1 = r_unit(ctx);
  SInvariance s = check_S_invariant(ctx, r1.m, r1.obj, r1.obj);
  EXPECT_TRUE(s.pass && s.pass_k);
  EXPECT_LT(s.residual, kTol);
  EXPECT_LT(s.residual_k, kTol);

  Algebra u = unit_algebra(ctx.P());
  Algebra uu = direct_sum(ctx.P(), u, u);
  SInvariance bad = check_S_invariant(ctx, uu.m, uu.obj, uu.obj);
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.pass_k);
}

TEST(Cardy, ModularInvarianceExamples) {
  FunctorContext v(fixture("vec"));
  Algebra cx = tensor_algebra(v.P(), box_unit(v, cx2_algebra(v.C())),
                              r_unit(v));
  ModularInvariance mv = check_modular_invariant(v, cx);
  EXPECT_TRUE(mv.invariant());
  EXPECT_TRUE(mv.invariant_basis());
  EXPECT_EQ(mv.Z(0, 0), 2);
  EXPECT_LT(std::abs(mv.dim - 2.0), kTol);

  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Category& c = ctx.C().cat();
    Algebra z1 = full_centre(ctx, unit_algebra(ctx.C())).alg;
    ModularInvariance m = check_modular_invariant(ctx, z1);
    EXPECT_TRUE(m.invariant()) << name;
    EXPECT_TRUE(m.invariant_basis()) << name;
    EXPECT_LT(m.szs, kTol);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j)
        EXPECT_EQ(m.Z(i, j), c.dual[j] == i ? 1 : 0) << name;
    EXPECT_LT(std::abs(m.dim - double(m.Z(0, 0)) * ctx.Dim()), kTol);

    TorusMatrix zu = torus_Z(ctx, unit_algebra(ctx.P()).obj);
    EXPECT_EQ(zu.sum(), 1);
    EXPECT_EQ(zu(0, 0), 1);
  }
}

TEST(Cardy, TorusMatrixResidual) {
  FunctorContext ctx(fixture("ising"));
  EXPECT_LT(szs_residual(ctx, TorusMatrix::Identity(3, 3)), kTol);
  TorusMatrix e00 = TorusMatrix::Zero(3, 3);
  e00(0, 0) = 1;
  EXPECT_GT(szs_residual(ctx, e00), 0.1);
}

TEST(Cardy, FullCentre) {
  FunctorContext v(fixture("vec"));
  FullCentre zv = full_centre(v, unit_algebra(v.C()));
  EXPECT_EQ(zv.alg.obj->size(), 1);
  EXPECT_LT(std::abs(counit_of_unit(v.P(), zv.alg) - 1.0), kTol);
  EXPECT_THROW(full_centre(v, cx2_algebra(v.C())), InputError);

  for (const char* name : {"ising", "fibonacci", "vec_z2"}) {
    FunctorContext ctx(fixture(name));
    const Engine &C = ctx.C(), &P = ctx.P();
    FullCentre z = full_centre(ctx, unit_algebra(C));
    EXPECT_EQ(z.alg.obj->size(), C.rank());
    EXPECT_LT(std::abs(P.trace(P.id(z.alg.obj)) - ctx.Dim()), kTol);
    EXPECT_LT(P.diff(P.compose(z.r, z.e), P.id(z.alg.obj)), kTol);
    FrobeniusReport r = frobenius_report(P, z.alg);
    EXPECT_TRUE(r.frobenius.value && r.commutative.value &&
                r.symmetric.value && r.haploid.value)
        << name;

    // eps o eta = zeta^{-2} dim A Dim C.
    Algebra en = endo_algebra(C, C.simple(1));
    FullCentre ze = full_centre(ctx, en);
    cplx dim_a = C.trace(C.id(en.obj));
    cplx want = dim_a * ctx.Dim() / (ze.zeta * ze.zeta);
    EXPECT_LT(std::abs(counit_of_unit(P, ze.alg) - want), kTol) << name;
  }
}

TEST(Cardy, CentreConditionExamples) {
  FunctorContext ctx(fixture("ising"));
  CardyTriple t = canonical_cardy(ctx, unit_algebra(ctx.C()));
  CentreCheck c = check_centre_condition(ctx, t);
  EXPECT_TRUE(c.left_comm.value && c.comm_C.value);

  FunctorContext v(fixture("vec"));
  Algebra m2 = matrix_algebra(v.C(), 2);
  CardyTriple tv = make_triple(v, m2, r_unit(v), v.R(m2.eta));
  CentreCheck cv = check_centre_condition(v, tv);
  EXPECT_TRUE(cv.iota_algebra.value);
  EXPECT_TRUE(cv.left_comm.value && cv.comm_C.value);

  // 1 goes to twice the idempotent (1, 0) of C (+) C.
  Algebra d2 = diagonal_algebra(v.C(), 2);
  Mor e1 = v.C().zero(v.C().unit(), d2.obj);
  e1.blk[0](0, 0) = 2.0;
  CardyTriple broken = make_triple(v, d2, r_unit(v), v.R(e1));
  EXPECT_THROW(check_centre_condition(v, broken), AlgebraMapError);
}

TEST(Cardy, LeftCommAndCommCAgreeOnNonCentralTriples) {
  for (const char* name : {"ising", "fibonacci"}) {
    FunctorContext ctx(fixture(name));
    Algebra en = endo_algebra(ctx.C(), ctx.C().simple(1));
    CardyTriple t = make_triple(ctx, en, r_unit(ctx), ctx.R(en.eta));
    CentreCheck c = check_centre_condition(ctx, t);
    EXPECT_FALSE(c.left_comm.value) << name;
    EXPECT_FALSE(c.comm_C.value) << name;
  }
}

TEST(Cardy, CardyConditionExamples) {
  FunctorContext v(fixture("vec"));
  Algebra u = unit_algebra(v.C());
  CardyTriple tv = make_triple(v, u, r_unit(v), v.R(u.eta));
  CardyCheck cv = check_cardy_condition(v, tv);
  EXPECT_TRUE(cv.cardy_CC.value && cv.cardy_C.value);

  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& P = ctx.P();
    for (const Algebra& a :
         {unit_algebra(ctx.C()),
          ctx.C().rank() > 1 ? endo_algebra(ctx.C(), ctx.C().simple(1))
                             : matrix_algebra(ctx.C(), 2)}) {
      FullCentre z;
      CardyTriple t = canonical_cardy(ctx, a, &z);
      // iota iota* = e (zeta r) = P^l.
      Mor ii = P.compose(t.iota, star(P, t.cl, t.r_op, t.iota));
      EXPECT_LT(P.diff(ii, z.zeta * P.compose(z.e, z.r)), kTol) << name;
      EXPECT_LT(P.diff(ii, P_left(P, t.r_op)), kTol) << name;
      CardyCheck c = check_cardy_condition(ctx, t);
      EXPECT_TRUE(c.cardy_CC.value && c.cardy_C.value) << name;
    }
  }

  FunctorContext ctx(fixture("ising"));
  const Engine& P = ctx.P();
  CardyTriple t = canonical_cardy(ctx, unit_algebra(ctx.C()));
  CardyTriple t2 = make_triple(ctx, t.op, t.cl, 2.0 * t.iota);
  Mor ii = P.compose(t2.iota, star(P, t2.cl, t2.r_op, t2.iota));
  Mor pl = P_left(P, t2.r_op);
  EXPECT_LT((ii.blk[0] - 4.0 * pl.blk[0]).cwiseAbs().maxCoeff(), kTol);
  EXPECT_LT(std::abs(pl.blk[0](0, 0) - 1.0), kTol);
  CardyCheck c2 = check_cardy_condition(ctx, t2);
  EXPECT_FALSE(c2.cardy_CC.value);
  EXPECT_FALSE(c2.cardy_C.value);
  EXPECT_NEAR(c2.per_label[0], 3.0, 1e-6);
  EXPECT_THROW(check_centre_condition(ctx, t2), AlgebraMapError);
}

TEST(Cardy, CanonicalTriplesPass) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    CardyTriple t = canonical_cardy(ctx, unit_algebra(ctx.C()));
    CardyReport r = check_cardy_algebra(ctx, t);
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.def_I()) << name;
    EXPECT_TRUE(r.def_II()) << name;
    for (const auto& [key, f] : r.flags()) EXPECT_TRUE(f->value) << key;
  }
  FunctorContext v(fixture("vec"));
  CardyTriple t0 = canonical_cardy(v, unit_algebra(v.C()));
  EXPECT_EQ(t0.cl.obj->size(), 1);
  CardyTriple tm = canonical_cardy(v, matrix_algebra(v.C(), 2));
  EXPECT_EQ(tm.cl.obj->size(), 1);
  EXPECT_TRUE(check_cardy_algebra(v, tm).def_I());

  FunctorContext is(fixture("ising"));
  CardyTriple ti = canonical_cardy(is, unit_algebra(is.C()));
  TorusMatrix z = torus_Z(is, ti.cl.obj);
  EXPECT_EQ(z, TorusMatrix::Identity(3, 3));  // every Ising label is self-dual
}

TEST(Cardy, DefinitionsAgreeOnFailingTriples) {
  for (const char* name : {"ising", "fibonacci"}) {
    FunctorContext ctx(fixture(name));
    Algebra en = endo_algebra(ctx.C(), ctx.C().simple(1));
    CardyTriple t = make_triple(ctx, en, r_unit(ctx), ctx.R(en.eta));
    CardyReport r = check_cardy_algebra(ctx, t);
    EXPECT_FALSE(r.def_I());
    EXPECT_FALSE(r.def_II());
    EXPECT_TRUE(r.agree());
    EXPECT_FALSE(r.cardy_CC.value);
    EXPECT_FALSE(r.cardy_C.value);

    CardyTriple c = canonical_cardy(ctx, unit_algebra(ctx.C()));
    CardyReport r2 = check_cardy_algebra(
        ctx, make_triple(ctx, c.op, c.cl, 2.0 * c.iota));
    EXPECT_FALSE(r2.error.empty());
    EXPECT_FALSE(r2.def_I() || r2.def_II());
  }
}

TEST(Cardy, SumOfTwoRUnitsWithProjection) {
  // The two projections are the only algebra maps to R(1). With either one
  // the triple satisfies every condition; only the uniqueness hypothesis
  // of a simple closed algebra fails.
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& P = ctx.P();
    Algebra r1 = r_unit(ctx);
    Algebra rr = direct_sum(P, r1, r1);
    Mor proj = P.coerce(P.proj({r1.obj, r1.obj}, 0), rr.obj, r1.obj);
    CardyTriple t = make_triple(ctx, unit_algebra(ctx.C()), rr, proj);
    CardyReport r = check_cardy_algebra(ctx, t);
    EXPECT_TRUE(r.def_I() && r.def_II()) << name;
    ModularInvariance m = check_modular_invariant(ctx, rr);
    EXPECT_TRUE(m.invariant() && m.invariant_basis()) << name;
    EXPECT_EQ(m.Z(0, 0), 2);
    EXPECT_LT(std::abs(m.dim - 2.0 * ctx.Dim()), kTol);
    EXPECT_THROW(uniqueness_iso(ctx, t), InputError);
    EXPECT_THROW(existence_construct(ctx, rr), InputError);
  }
}

TEST(Cardy, Uniqueness) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& P = ctx.P();
    CardyTriple t = canonical_cardy(ctx, unit_algebra(ctx.C()));
    Uniqueness u = uniqueness_iso(ctx, t);
    EXPECT_LT(u.max(), kTol);
    EXPECT_LT(P.diff(u.f_cl, P.id(t.cl.obj)), kTol);
    for (std::uint64_t seed : {3u, 17u}) {
      Mor g = P.random(t.cl.obj, t.cl.obj, seed);
      CardyTriple tg = change_closed_basis(ctx, t, g);
      EXPECT_TRUE(check_cardy_algebra(ctx, tg).def_I()) << name;
      Uniqueness ug = uniqueness_iso(ctx, tg);
      EXPECT_LT(ug.max(), kTol) << name;
      EXPECT_LT(P.diff(ug.f_cl, g), 1e-8) << name;
    }
  }
  FunctorContext v(fixture("vec"));
  Algebra z = zero_algebra(v.C());
  CardyTriple tz = make_triple(v, z, unit_algebra(v.P()),
                               v.P().zero(v.P().unit(), v.R(z.obj)));
  try {
    uniqueness_iso(v, tz);
    ADD_FAILURE() << "expected a hypothesis error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("hypothesis violated"),
              std::string::npos);
  }
}

TEST(Cardy, Existence) {
  FunctorContext v(fixture("vec"));
  Existence ev = existence_construct(v, unit_algebra(v.P()));
  EXPECT_EQ(ev.triple.op.obj->size(), 1);
  EXPECT_TRUE(check_cardy_algebra(v, ev.triple).def_I());

  for (const char* name : {"ising", "fibonacci"}) {
    FunctorContext ctx(fixture(name));
    const Engine& C = ctx.C();
    Algebra z1 = full_centre(ctx, unit_algebra(C)).alg;
    Existence ex = existence_construct(ctx, z1);
    CardyReport r = check_cardy_algebra(ctx, ex.triple);
    EXPECT_TRUE(r.def_I() && r.def_II()) << name;
    EXPECT_LT(ex.iso_residual, kTol) << name;
    EXPECT_LT(std::abs(ex.xi - ex.xi_measured), kTol) << name;
    // T(Z(1)) splits as the sum of End(U_i), of dimension dim U_i^2.
    ASSERT_EQ(static_cast<int>(ex.summands.size()), C.rank());
    std::vector<double> got, want;
    cplx total = 0;
    for (const Summand& s : ex.summands) {
      cplx d = C.trace(C.id(s.alg.obj));
      got.push_back(d.real());
      total += d;
    }
    for (cplx d : C.dims()) want.push_back((d * d).real());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], kTol);
    EXPECT_LT(std::abs(total - ctx.Dim()), kTol);
  }
}

TEST(Cardy, GammaOnCommutativeClosedAlgebras) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    EXPECT_LT(gamma_residual(ctx, r_unit(ctx)), kTol) << name;
    EXPECT_LT(gamma_residual(ctx, full_centre(ctx, unit_algebra(ctx.C())).alg),
              kTol)
        << name;
  }
}

TEST(Cardy, SAction) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& C = ctx.C();
    const Mat& S = ctx.derived().S;
    std::vector<Mor> f;
    std::vector<cplx> c;
    for (int i = 0; i < C.rank(); ++i) {
      c.push_back(cplx(1.0 + i, 0.5 * i));
      f.push_back(C.coerce(c.back() * C.id(C.simple(i)),
                           C.tensor(C.unit(), C.simple(i)), C.simple(i)));
    }
    std::vector<Mor> sf = S_action(C, C.unit(), f);
    for (int j = 0; j < C.rank(); ++j) {
      cplx want = 0;
      for (int i = 0; i < C.rank(); ++i) want += S(i, j) * c[i];
      EXPECT_LT(std::abs(C.value(C.coerce(sf[j], C.simple(j), C.simple(j))) -
                         want),
                kTol)
          << name;
    }
    Obj b = C.atom({0, C.rank() - 1});
    std::vector<Mor> g;
    for (int i = 0; i < C.rank(); ++i)
      g.push_back(C.random(C.tensor(b, C.simple(i)), C.simple(i), 40 + i));
    std::vector<Mor> back = S_inv_action(C, b, S_action(C, b, g));
    for (int i = 0; i < C.rank(); ++i)
      EXPECT_LT(C.diff(back[i], C.coerce(g[i], back[i].src, back[i].tgt)),
                kTol)
          << name;
  }
  FunctorContext v(fixture("vec"));
  Mor f = v.C().random(v.C().tensor(v.C().unit(), v.C().unit()),
                       v.C().unit(), 1);
  std::vector<Mor> out = S_action(v.C(), v.C().unit(), {f});
  EXPECT_LT(v.C().diff(out[0], v.C().coerce(f, out[0].src, out[0].tgt)), kTol);
}

TEST(Cardy, ProjectedProductOfRAIsSInvariant) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine &C = ctx.C(), &P = ctx.P();
    std::vector<Algebra> as{unit_algebra(C)};
    if (C.rank() == 1) {
      as.push_back(cx2_algebra(C));
      as.push_back(matrix_algebra(C, 2));
    } else {
      as.push_back(endo_algebra(C, C.simple(1)));
    }
    for (const Algebra& a : as) {
      Algebra ra = transport_algebra(ctx, Functor::kR, a);
      Mor pl = P_left(P, ra);
      Mor f = P.compose({pl, ra.m, P.tensor(pl, pl)});
      SInvariance s = check_S_invariant(ctx, f, ra.obj, ra.obj);
      EXPECT_LT(s.residual, 1e-8) << name;
      EXPECT_LT(s.residual_k, 1e-8) << name;
    }
  }
}

}  // namespace
}  // namespace mtc
