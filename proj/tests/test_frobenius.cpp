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
#include "mtc/frobenius.hpp"

namespace mtc {
namespace {

constexpr double kTol = 1e-9;
const char* kModular[] = {"vec", "vec_z2", "fibonacci", "ising"};

// Frobenius algebras in C used across the suite.
std::vector<Algebra> c_algebras(const Engine& e) {
  std::vector<Algebra> out{unit_algebra(e)};
  if (e.rank() == 1) {
    out.push_back(cx2_algebra(e));
    out.push_back(matrix_algebra(e, 2));
    out.push_back(diagonal_algebra(e, 2));
  } else {
    out.push_back(endo_algebra(e, e.simple(1)));
  }
  return out;
}

TEST(Frobenius, AlgebraAxioms) {
  Engine e(fixture("vec"));
  EXPECT_TRUE(check_algebra(e, unit_algebra(e)).pass());
  Algebra m2 = matrix_algebra(e, 2);
  EXPECT_TRUE(check_algebra(e, m2).pass());
  Algebra bad = m2;
  bad.m = bad.m + 0.1 * e.random(bad.m.src, bad.m.tgt, 3);
  AlgebraCheck c = check_algebra(e, bad);
  EXPECT_FALSE(c.associative.value);
  EXPECT_GT(c.associative.residual, e.tol());
}

TEST(Frobenius, UnitAlgebraFlags) {
  for (const char* name : kModular) {
    Engine e(fixture(name));
    FrobeniusReport r = frobenius_report(e, unit_algebra(e));
    for (const auto& [key, f] : r.flags())
      EXPECT_TRUE(f->applicable && f->value) << name << " " << key;
    EXPECT_LT(std::abs(r.zeta - 1.0), kTol);
    EXPECT_LT(std::abs(r.xi - 1.0), kTol);
  }
}

TEST(Frobenius, PolynomialAlgebraFlags) {
  Engine e(fixture("vec"));
  FrobeniusReport r = frobenius_report(e, cx2_algebra(e));
  EXPECT_TRUE(r.frobenius.value);
  EXPECT_TRUE(r.commutative.value);
  EXPECT_TRUE(r.symmetric.value);
  EXPECT_FALSE(r.special.value);
  EXPECT_FALSE(r.simple.value);
  EXPECT_EQ(decompose_algebra(e, cx2_algebra(e)).size(), 1u);
}

TEST(Frobenius, RUnitFlags) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    Algebra r1 = transport_algebra(ctx, Functor::kR, unit_algebra(ctx.C()));
    FrobeniusReport r = frobenius_report(ctx.P(), r1);
    EXPECT_TRUE(r.haploid.value) << name;
    EXPECT_TRUE(r.commutative.value) << name;
    EXPECT_TRUE(r.symmetric.value) << name;
    EXPECT_TRUE(r.normalised_special.value) << name;
    EXPECT_LT(std::abs(ctx.P().trace(ctx.P().id(r1.obj)) - ctx.Dim()), kTol);
  }
}

TEST(Frobenius, CounitDeterminesCoproduct) {
  Engine e(fixture("vec"));
  Algebra u = unit_algebra(e);
  EXPECT_LT(e.diff(e.coerce(frobenius_from_counit(e, u, e.id(e.unit())),
                            u.obj, e.tensor(u.obj, u.obj)),
                   *u.delta),
            kTol);
  Algebra cx = cx2_algebra(e);
  Mat d = cx.delta->blk[0];
  Mat want = Mat::Zero(4, 2);
  want(1, 0) = want(2, 0) = 1.0;  // 1 -> 1 (x) x + x (x) 1
  want(3, 1) = 1.0;               // x -> x (x) x
  EXPECT_LT((d - want).cwiseAbs().maxCoeff(), kTol);
  for (const char* name : kModular) {
    Engine c(fixture(name));
    for (const Algebra& a : c_algebras(c))
      EXPECT_LT(c.diff(frobenius_from_counit(c, a, *a.eps), *a.delta), kTol)
          << name;
  }
}

TEST(Frobenius, StarMap) {
  Engine e(fixture("vec"));
  Algebra a = matrix_algebra(e, 2), b = diagonal_algebra(e, 3),
          c = cx2_algebra(e);
  EXPECT_LT(e.diff(star(e, a, a, e.id(a.obj)), e.id(a.obj)), kTol);
  Mor f = e.random(a.obj, b.obj, 1), g = e.random(b.obj, c.obj, 2);
  Mor lhs = star(e, a, c, e.compose(g, f));
  Mor rhs = e.compose(star(e, a, b, f), star(e, b, c, g));
  EXPECT_LT(e.diff(lhs, rhs), kTol);
  // Symmetric algebras: the star map is an involution.
  EXPECT_LT(e.diff(star(e, b, a, star(e, a, b, f)), f), kTol);
  for (const char* name : {"ising", "fibonacci"}) {
    Engine x(fixture(name));
    Algebra en = endo_algebra(x, x.simple(1));
    EXPECT_LT(x.diff(star(x, en, en, x.id(en.obj)), x.id(en.obj)), kTol);
  }
}

TEST(Frobenius, FunctorsCommuteWithStar) {
  for (const char* name : {"vec", "ising", "fibonacci"}) {
    FunctorContext ctx(fixture(name));
    const Engine &C = ctx.C(), &P = ctx.P();
    auto as = c_algebras(C);
    const Algebra &a = as[0], &b = as[1];
    Mor f = C.random(a.obj, b.obj, 4);
    Algebra ra = transport_algebra(ctx, Functor::kR, a);
    Algebra rb = transport_algebra(ctx, Functor::kR, b);
    EXPECT_LT(P.diff(ctx.R(star(C, a, b, f)), star(P, ra, rb, ctx.R(f))),
              kTol)
        << name;
    Algebra r1 = ra;
    Algebra z = full_centre(ctx, unit_algebra(C)).alg;
    Mor g = P.random(z.obj, r1.obj, 5);
    Algebra tz = transport_algebra(ctx, Functor::kT, z);
    Algebra tr = transport_algebra(ctx, Functor::kT, r1);
    EXPECT_LT(C.diff(ctx.T(star(P, z, r1, g)), star(C, tz, tr, ctx.T(g))),
              kTol)
        << name;
  }
}

TEST(Frobenius, DeltaCheckStarIsRhoHat) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& C = ctx.C();
    for (const Algebra& a : c_algebras(C)) {
      Algebra tra = transport_algebra(
          ctx, Functor::kT, transport_algebra(ctx, Functor::kR, a));
      Mor s = star(C, a, tra, ctx.delta_check(a.obj));
      EXPECT_LT(C.diff(s, ctx.rho_hat(a.obj)), kTol) << name;
    }
  }
}

TEST(Frobenius, TransportPreservesStructure) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine &C = ctx.C(), &P = ctx.P();
    for (const Algebra& a : c_algebras(C)) {
      FrobeniusReport ra = frobenius_report(C, a);
      Algebra r = transport_algebra(ctx, Functor::kR, a);
      FrobeniusReport rr = frobenius_report(P, r);
      EXPECT_TRUE(rr.frobenius.value) << name;
      EXPECT_EQ(rr.symmetric.value, ra.symmetric.value) << name;
      EXPECT_EQ(rr.special.value, ra.special.value) << name;
      EXPECT_EQ(bimodule_endos(C, a).size(), bimodule_endos(P, r).size())
          << name;
    }
    Algebra u = unit_algebra(P);
    Algebra tu = transport_algebra(ctx, Functor::kT, u);
    EXPECT_EQ(tu.obj->size(), 1);
    EXPECT_LT(C.diff(C.coerce(tu.m, C.tensor(C.unit(), C.unit()), C.unit()),
                     C.coerce(unit_algebra(C).m,
                              C.tensor(C.unit(), C.unit()), C.unit())),
              kTol);
    Algebra r1 = transport_algebra(ctx, Functor::kR, unit_algebra(C));
    for (const Algebra& m : {r1, full_centre(ctx, unit_algebra(C)).alg}) {
      FrobeniusReport rm = frobenius_report(P, m);
      Algebra t = transport_algebra(ctx, Functor::kT, m);
      FrobeniusReport rt = frobenius_report(C, t);
      EXPECT_TRUE(rt.frobenius.value) << name;
      EXPECT_EQ(rt.symmetric.value, rm.symmetric.value) << name;
      EXPECT_EQ(rt.special.value, rm.special.value) << name;
    }
    Algebra tr1 = transport_algebra(ctx, Functor::kT, r1);
    EXPECT_LT(std::abs(C.trace(C.id(tr1.obj)) - ctx.Dim()), kTol);
  }
}

TEST(Frobenius, DimensionsAgreeForFrobenius) {
  for (const char* name : kModular) {
    Engine e(fixture(name));
    for (const Algebra& a : c_algebras(e))
      EXPECT_LT(frobenius_report(e, a).dim_l_minus_dim_r, kTol) << name;
  }
}

TEST(Frobenius, LeftCentreProjector) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine &C = ctx.C(), &P = ctx.P();
    Algebra u = unit_algebra(C);
    EXPECT_LT(C.diff(P_left(C, u), C.id(u.obj)), kTol);
    Algebra r1 = transport_algebra(ctx, Functor::kR, u);
    EXPECT_LT(P.diff(P_left(P, r1), P.id(r1.obj)), kTol) << name;
  }
  Engine v(fixture("vec"));
  Algebra m2 = matrix_algebra(v, 2);
  Split lc = left_centre(v, m2);
  EXPECT_EQ(lc.image->size(), 1);
  Algebra d2 = diagonal_algebra(v, 2);
  EXPECT_EQ(left_centre(v, d2).image->size(), 2);
  for (const char* name : {"ising", "fibonacci"}) {
    FunctorContext ctx(fixture(name));
    const Engine& P = ctx.P();
    Algebra ra = transport_algebra(ctx, Functor::kR,
                                   endo_algebra(ctx.C(), ctx.C().simple(1)));
    Split s = left_centre(P, ra);
    const Obj& A = ra.obj;
    Mor lhs = P.compose({ra.m, P.braid(A, A), P.tensor(s.e, P.id(A))});
    Mor rhs = P.compose(ra.m, P.tensor(s.e, P.id(A)));
    EXPECT_LT(P.diff(lhs, rhs), kTol) << name;
  }
}

TEST(Frobenius, PlOnRAComponentwise) {
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& C = ctx.C();
    for (const Algebra& a : c_algebras(C)) {
      Algebra ra = transport_algebra(ctx, Functor::kR, a);
      Mor pl = P_left(ctx.P(), ra);
      for (int i = 0; i < C.rank(); ++i) {
        Mor want = left_factor(ctx, pl, a.obj, i);
        Mor got = P_RA_component(ctx, a, i);
        EXPECT_LT(C.diff(C.coerce(got, want.src, want.tgt), want), kTol)
            << name << " " << i;
      }
    }
  }
}

TEST(Frobenius, SplitIdempotent) {
  Engine e(fixture("vec"));
  Obj x = e.atom({0, 0, 0});
  Split s = split_idempotent(e, e.id(x));
  EXPECT_EQ(s.image->size(), 3);
  EXPECT_LT(e.diff(e.compose(s.r, s.e), e.id(s.image)), kTol);
  EXPECT_EQ(split_idempotent(e, e.zero(x, x)).image->size(), 0);
  Mor v = e.random(e.unit(), x, 1), w = e.random(x, e.unit(), 2);
  cplx c = e.value(e.compose(w, v));
  Mor p = (1.0 / c) * e.compose(v, w);
  Split s1 = split_idempotent(e, p);
  EXPECT_EQ(s1.image->size(), 1);
  EXPECT_LT(e.diff(e.compose(s1.e, s1.r), p), kTol);
  EXPECT_THROW(split_idempotent(e, 2.0 * e.id(x)), InputError);
}

TEST(Frobenius, BimoduleEndomorphismsAndSimplicity) {
  Engine v(fixture("vec"));
  EXPECT_EQ(bimodule_endos(v, unit_algebra(v)).size(), 1u);
  EXPECT_TRUE(is_simple(v, unit_algebra(v)));
  EXPECT_EQ(bimodule_endos(v, diagonal_algebra(v, 2)).size(), 2u);
  EXPECT_FALSE(is_simple(v, diagonal_algebra(v, 2)));
  EXPECT_TRUE(is_simple(v, matrix_algebra(v, 2)));
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    Algebra r1 = transport_algebra(ctx, Functor::kR, unit_algebra(ctx.C()));
    Algebra z1 = full_centre(ctx, unit_algebra(ctx.C())).alg;
    Algebra uu = direct_sum(ctx.P(), unit_algebra(ctx.P()),
                            unit_algebra(ctx.P()));
    for (const Algebra& a : {r1, z1, uu}) {
      FrobeniusReport r = frobenius_report(ctx.P(), a);
      EXPECT_EQ(r.haploid.value, r.absolutely_simple.value) << name;
      EXPECT_EQ(r.haploid.value, r.simple.value) << name;
    }
  }
}

TEST(Frobenius, Decomposition) {
  Engine v(fixture("vec"));
  EXPECT_EQ(decompose_algebra(v, unit_algebra(v)).size(), 1u);
  EXPECT_EQ(decompose_algebra(v, matrix_algebra(v, 2)).size(), 1u);
  auto parts = decompose_algebra(v, diagonal_algebra(v, 2));
  ASSERT_EQ(parts.size(), 2u);
  for (const Summand& s : parts) {
    EXPECT_EQ(s.alg.obj->size(), 1);
    EXPECT_TRUE(check_algebra(v, s.alg).pass());
  }
}

TEST(Frobenius, TensorAlgebras) {
  Engine v(fixture("vec"));
  Algebra u = unit_algebra(v), b = matrix_algebra(v, 2);
  Algebra ub = tensor_algebra(v, u, b);
  EXPECT_LT(v.diff(v.coerce(ub.m, b.m.src, b.m.tgt), b.m), kTol);
  Algebra big = tensor_algebra(v, b, cx2_algebra(v));
  EXPECT_TRUE(check_algebra(v, big).pass());
  EXPECT_TRUE(frobenius_report(v, big).frobenius.value);
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& P = ctx.P();
    for (const Algebra& a : c_algebras(ctx.C())) {
      Algebra ra = transport_algebra(ctx, Functor::kR, a);
      Algebra r1 = transport_algebra(ctx, Functor::kR, unit_algebra(ctx.C()));
      Algebra bx = tensor_algebra(P, box_unit(ctx, a), r1);
      Mor iso = ctx.r_tensor_iso(a.obj);
      EXPECT_LT(P.diff(P.compose(iso, ra.m),
                       P.compose(bx.m, P.tensor(iso, iso))),
                kTol)
          << name;
      EXPECT_LT(P.diff(P.compose(iso, ra.eta), bx.eta), kTol);
      EXPECT_LT(P.diff(P.compose(P.tensor(iso, iso), *ra.delta),
                       P.compose(*bx.delta, iso)),
                kTol);
      EXPECT_LT(P.diff(*ra.eps, P.compose(*bx.eps, iso)), kTol);
    }
  }
}

TEST(Frobenius, EndomorphismAlgebraNormalisation) {
  for (const char* name : {"ising", "fibonacci"}) {
    Engine e(fixture(name));
    Algebra en = endo_algebra(e, e.simple(1));
    FrobeniusReport r = frobenius_report(e, en);
    EXPECT_TRUE(r.special.value && r.symmetric.value && r.simple.value);
    EXPECT_LT(std::abs(r.zeta - 1.0), kTol);
    cplx d = e.dims()[1];
    EXPECT_LT(std::abs(e.value(e.compose(*en.eps, en.eta)) - d * d), kTol);
  }
}

}  // namespace
}  // namespace mtc
