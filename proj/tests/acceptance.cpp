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

// Acceptance suite. Prints one line per criterion:
//
//   criterion <n> [PASS|FAIL|UNATTAINABLE] <name>: <measurements>
//
// The exit code is 0 when no line reads FAIL. An UNATTAINABLE line states a
// claim that the measured data contradicts, together with the numbers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mtc/cardy.hpp"
#include "mtc/io.hpp"

namespace mtc {
namespace {

const char* kModular[] = {"vec", "vec_z2", "fibonacci", "ising"};
constexpr double kTol = 1e-9;

enum class Status { kPass, kFail, kUnattainable };

struct Line {
  std::string id, name;
  Status status = Status::kPass;
  std::string detail;
};

// Collects measurements for one line; any failed expectation flips it.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      if (failures_.size() < 4) failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() ? "; " : "") << s; }
  void max(double& acc, double v) { acc = std::max(acc, v); }
  bool ok() const { return ok_; }
  std::string text() const {
    std::string out = notes_.str();
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + ("FAILED " + f);
    return out;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
  std::ostringstream notes_;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

std::string num(cplx z) {
  char buf[48];
  if (std::abs(z.imag()) < 1e-9)
    std::snprintf(buf, sizeof buf, "%.6g", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

// Verdicts of both forms of each two-form condition, across all criteria.
struct Agreement {
  int triples = 0, triple_disagree = 0;
  int algebras = 0, mi_disagree = 0;
  int centre_disagree = 0, cardy_disagree = 0;
  void triple(const CardyReport& r) {
    ++triples;
    if (!r.agree()) ++triple_disagree;
    if (r.error.empty()) {
      if (r.left_comm.value != r.comm_C.value) ++centre_disagree;
      if (r.cardy_CC.value != r.cardy_C.value) ++cardy_disagree;
    }
  }
  void modular(const ModularInvariance& m) {
    ++algebras;
    if (m.invariant() != m.invariant_basis()) ++mi_disagree;
  }
};
Agreement g_agree;

Algebra r_unit(const FunctorContext& ctx) {
  return transport_algebra(ctx, Functor::kR, unit_algebra(ctx.C()));
}

Obj random_object(const Engine& e, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 3), lab(0, e.rank() - 1);
  std::vector<int> labels;
  int n = len(rng);
  for (int i = 0; i < n; ++i) labels.push_back(lab(rng));
  std::sort(labels.begin(), labels.end());
  Obj x = e.atom(labels);
  if (rng() % 2) x = e.tensor(x, e.simple(lab(rng)));
  return x;
}

// 1. Fixture validity.
Line fixture_validity() {
  Probe p;
  for (const char* name : kModular) {
    CatPtr c = fixture(name);
    ValidationReport r = validate_category(c);
    double worst = 0;
    for (const auto& e : r.entries) {
      worst = std::max(worst, e.residual);
      p.expect(e.residual < kTol, std::string(name) + " " + e.name);
    }
    DerivedData d = derive(c);
    Mat ss = d.s * d.s;
    double orth = 0;
    for (int i = 0; i < c->rank; ++i)
      for (int j = 0; j < c->rank; ++j)
        orth = std::max(orth, std::abs(ss(i, j) - (i == c->dual[j]
                                                       ? d.globalDim
                                                       : cplx(0))));
    p.expect(orth < kTol, std::string(name) + " s orthogonality");
    p.note(std::string(name) + " max " + sci(std::max(worst, orth)));
  }
  return {"1", "fixture validity", p.ok() ? Status::kPass : Status::kFail,
          p.text()};
}

// 2. Adjunction identities on random objects.
Line adjunction() {
  Probe p;
  double worst_hat = 0, worst_check = 0;
  int objects = 0;
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine &C = ctx.C(), &P = ctx.P();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      std::mt19937_64 rng(seed);
      Obj m = random_object(P, rng), a = random_object(C, rng);
      double r1 = P.diff(P.compose(ctx.rho_check(m), ctx.delta_hat(m)),
                         ctx.Dim() * P.id(m));
      double r2 = C.diff(C.compose(ctx.rho_hat(a), ctx.delta_check(a)),
                         C.id(a));
      p.max(worst_hat, r1);
      p.max(worst_check, r2);
      objects += 2;
      p.expect(r1 < kTol && r2 < kTol,
               std::string(name) + " seed " + std::to_string(seed));
    }
  }
  p.note(std::to_string(objects) + " objects, rho_check delta_hat = Dim id " +
         sci(worst_hat) + ", rho_hat delta_check = id " + sci(worst_check));
  return {"2", "adjunction identities", p.ok() ? Status::kPass : Status::kFail,
          p.text()};
}

// 3. Lax, colax and Frobenius diagrams for T and R.
Line frobenius_functors() {
  Probe p;
  double wt = 0, wr = 0;
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine &C = ctx.C(), &P = ctx.P();
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 2; ++rep) {
      Obj a = random_object(P, rng), b = random_object(P, rng),
          c = random_object(P, rng);
      FunctorDiagrams t = check_T_diagrams(ctx, a, b, c);
      Obj x = random_object(C, rng), y = random_object(C, rng),
          z = random_object(C, rng);
      FunctorDiagrams r = check_R_diagrams(ctx, x, y, z);
      p.max(wt, t.max());
      p.max(wr, r.max());
      p.expect(t.max() < kTol, std::string(name) + " T");
      p.expect(r.max() < kTol, std::string(name) + " R");
    }
    FunctorDiagrams t1 = check_T_diagrams(ctx, P.unit(), P.unit(), P.unit());
    FunctorDiagrams r1 = check_R_diagrams(ctx, C.unit(), C.unit(), C.unit());
    p.max(wt, t1.max());
    p.max(wr, r1.max());
    p.expect(t1.max() < kTol && r1.max() < kTol, std::string(name) + " units");
  }
  p.note("T max " + sci(wt) + ", R max " + sci(wr));
  return {"3", "Frobenius functor diagrams",
          p.ok() ? Status::kPass : Status::kFail, p.text()};
}

// 4. R(1) properties.
Line r_unit_properties() {
  Probe p;
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    Algebra r1 = r_unit(ctx);
    FrobeniusReport r = frobenius_report(ctx.P(), r1);
    p.expect(r.haploid.value && r.commutative.value && r.symmetric.value &&
                 r.normalised_special.value,
             std::string(name) + " flags");
    cplx tr = ctx.P().trace(ctx.P().id(r1.obj));
    p.expect(std::abs(tr - ctx.Dim()) < kTol, std::string(name) + " trace");
    p.note(std::string(name) + " trace " + num(tr));
  }
  FunctorContext is(fixture("ising")), fib(fixture("fibonacci"));
  p.expect(std::abs(is.P().trace(is.P().id(r_unit(is).obj)) - 4.0) < kTol,
           "ising trace 4");
  p.expect(std::abs(fib.P().trace(fib.P().id(r_unit(fib).obj)) -
                    (5 + std::sqrt(5.0)) / 2) < kTol,
           "fibonacci trace (5+sqrt5)/2");
  return {"4", "R(1) properties", p.ok() ? Status::kPass : Status::kFail,
          p.text()};
}

// 5. Modular invariance versus dimension.
std::vector<Line> modular_invariance_dimension() {
  Probe pos, neg;
  int positive = 0;
  std::vector<std::string> contradicted;
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& P = ctx.P();
    Algebra u = unit_algebra(P), r1 = r_unit(ctx);
    Algebra z1 = full_centre(ctx, unit_algebra(ctx.C())).alg;
    const std::pair<const char*, Algebra> haploid[] = {
        {"1x1", u}, {"R(1)", r1}, {"Z(1)", z1}};
    for (const auto& [an, a] : haploid) {
      FrobeniusReport fr = frobenius_report(P, a);
      pos.expect(fr.haploid.value && fr.commutative.value &&
                     fr.symmetric.value && fr.frobenius.value,
                 std::string(name) + " " + an + " not in the test class");
      ModularInvariance m = check_modular_invariant(ctx, a);
      g_agree.modular(m);
      bool dim_ok = std::abs(m.dim - ctx.Dim()) < kTol;
      pos.expect(m.invariant() == dim_ok && m.invariant_basis() == dim_ok,
                 std::string(name) + " " + an);
      if (m.invariant()) {
        ++positive;
        pos.expect(m.szs < kTol, std::string(name) + " " + an + " S Z S^-1");
        pos.expect(fr.special.value, std::string(name) + " " + an + " special");
      }
    }
    const std::pair<const char*, Algebra> sums[] = {
        {"R(1)+R(1)", direct_sum(P, r1, r1)},
        {"(1x1)+(1x1)", direct_sum(P, u, u)}};
    for (const auto& [an, a] : sums) {
      ModularInvariance m = check_modular_invariant(ctx, a);
      g_agree.modular(m);
      bool dim_ok = std::abs(m.dim - ctx.Dim()) < kTol;
      bool mi = m.invariant() && m.invariant_basis();
      if (!mi) {
        neg.expect(m.invariant() == m.invariant_basis(),
                   std::string(name) + " " + an + " forms disagree");
        neg.note(std::string(name) + " " + an + " fails as claimed" +
                 (dim_ok ? " (dim = Dim C, not haploid)" : ""));
        continue;
      }
      // Measured modular invariant: check the bookkeeping that explains it.
      neg.expect(m.invariant() == m.invariant_basis(),
                 std::string(name) + " " + an + " forms disagree");
      neg.expect(std::abs(m.dim - double(m.Z(0, 0)) * ctx.Dim()) < kTol,
                 std::string(name) + " " + an + " dim != Z00 Dim");
      neg.expect(m.szs < kTol, std::string(name) + " " + an + " S Z S^-1");
      contradicted.push_back(std::string(name) + " " + an + " (S residual " +
                             sci(m.s.residual_k) + ", dim " + num(m.dim) +
                             " = Z00 " + std::to_string(m.Z(0, 0)) +
                             " x Dim " + num(ctx.Dim()) + ")");
    }
  }
  pos.note("haploid set {1x1, R(1), Z(1)} x 4 fixtures: verdict <=> dim = "
           "Dim C holds, " + std::to_string(positive) +
           " positive cases with S Z S^-1 = Z");
  std::vector<Line> out;
  out.push_back({"5", "modular invariance <=> dim = Dim C (haploid set)",
                 pos.ok() ? Status::kPass : Status::kFail, pos.text()});
  if (!neg.ok()) {
    out.push_back({"5", "negative set", Status::kFail, neg.text()});
  } else if (contradicted.empty()) {
    out.push_back({"5", "negative set", Status::kPass, neg.text()});
  } else {
    std::string d = "expected to fail modular invariance but measured "
                    "invariant:";
    for (const auto& c : contradicted) d += " " + c + ";";
    d += " S-invariance is additive over direct sums and these sums are not "
         "haploid, so the dimension criterion does not apply to them; "
         "dim = Z00 Dim C holds for each. " + neg.text();
    out.push_back({"5", "negative set", Status::kUnattainable, d});
  }
  return out;
}

// 6. Canonical Cardy algebras.
Line canonical_triples() {
  Probe p;
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    CardyReport r =
        check_cardy_algebra(ctx, canonical_cardy(ctx, unit_algebra(ctx.C())));
    g_agree.triple(r);
    p.expect(r.def_I() && r.def_II(), name);
  }
  FunctorContext v(fixture("vec"));
  FullCentre z;
  CardyTriple t = canonical_cardy(v, matrix_algebra(v.C(), 2), &z);
  CardyReport r = check_cardy_algebra(v, t);
  g_agree.triple(r);
  p.expect(r.def_I() && r.def_II(), "vec mat2");
  p.expect(z.alg.obj->size() == 1 && z.alg.obj->labels[0] == 0,
           "Z(mat2) = 1x1");
  p.note("(1 | Z(1), e) passes in 4 fixtures; Vec 2x2 matrices: Z(A) has " +
         std::to_string(z.alg.obj->size()) + " slot of label 1x1, passes");
  return {"6", "canonical Cardy algebras",
          p.ok() ? Status::kPass : Status::kFail, p.text()};
}

// 7. Uniqueness after a random change of splitting basis.
Line uniqueness() {
  Probe p;
  double worst = 0, worst_f = 0;
  int count = 0;
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine& P = ctx.P();
    std::vector<CardyTriple> ts{canonical_cardy(ctx, unit_algebra(ctx.C()))};
    if (ctx.C().rank() == 1)
      ts.push_back(canonical_cardy(ctx, matrix_algebra(ctx.C(), 2)));
    else
      ts.push_back(canonical_cardy(ctx, endo_algebra(ctx.C(), ctx.C().simple(1))));
    for (const CardyTriple& t : ts)
      for (std::uint64_t seed : {101u, 202u}) {
        Mor g = P.random(t.cl.obj, t.cl.obj, seed);
        CardyTriple tg = change_closed_basis(ctx, t, g);
        CardyReport r = check_cardy_algebra(ctx, tg);
        g_agree.triple(r);
        Uniqueness u = uniqueness_iso(ctx, tg);
        p.max(worst, u.max());
        p.max(worst_f, P.diff(u.f_cl, P.compose({u.centre.r, t.iota, g})));
        p.expect(r.def_I() && u.max() < kTol, name);
        ++count;
      }
  }
  p.note(std::to_string(count) + " perturbed triples; f_cl iso residual " +
         sci(worst) + "; distance from the basis change " + sci(worst_f));
  return {"7", "uniqueness of the closed algebra",
          p.ok() ? Status::kPass : Status::kFail, p.text()};
}

// 8. Reconstruction of the open algebra.
Line existence() {
  Probe p;
  for (const char* name : {"ising", "fibonacci"}) {
    FunctorContext ctx(fixture(name));
    const Engine& C = ctx.C();
    Algebra z1 = full_centre(ctx, unit_algebra(C)).alg;
    Existence ex = existence_construct(ctx, z1);
    CardyReport r = check_cardy_algebra(ctx, ex.triple);
    g_agree.triple(r);
    p.expect(r.def_I() && r.def_II(), std::string(name) + " triple");
    p.expect(ex.iso_residual < kTol, std::string(name) + " iso");
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
    bool book = got.size() == want.size() && C.rank() <= 3 &&
                std::abs(total - ctx.Dim()) < kTol;
    for (size_t i = 0; book && i < got.size(); ++i)
      book = std::abs(got[i] - want[i]) < kTol;
    p.expect(book, std::string(name) + " bookkeeping");
    std::string dims;
    for (double d : got) dims += (dims.empty() ? "" : ",") + num(d);
    p.note(std::string(name) + ": summands dims (" + dims + ") = dim(M)^2, " +
           "sum " + num(total) + " = Dim C, chosen " +
           std::to_string(ex.chosen) + ", xi " + num(ex.xi) + ", iso " +
           sci(ex.iso_residual));
  }
  FunctorContext v(fixture("vec"));
  Existence ev = existence_construct(v, unit_algebra(v.P()));
  p.expect(ev.triple.op.obj->size() == 1, "vec A_op = 1");
  return {"8", "existence round trip", p.ok() ? Status::kPass : Status::kFail,
          p.text()};
}

// 9. Projected product of R(A) is S-invariant.
Line lemma_projected_product() {
  Probe p;
  double worst = 0;
  for (const char* name : kModular) {
    FunctorContext ctx(fixture(name));
    const Engine &C = ctx.C(), &P = ctx.P();
    std::vector<std::pair<std::string, Algebra>> as{{"1", unit_algebra(C)}};
    if (C.rank() == 1) {
      as.push_back({"C[x]/x^2", cx2_algebra(C)});
      as.push_back({"2x2", matrix_algebra(C, 2)});
    }
    for (const auto& [an, a] : as) {
      Algebra ra = transport_algebra(ctx, Functor::kR, a);
      Mor pl = P_left(P, ra);
      SInvariance s = check_S_invariant(
          ctx, P.compose({pl, ra.m, P.tensor(pl, pl)}), ra.obj, ra.obj);
      double r = std::max(s.residual, s.residual_k);
      p.max(worst, r);
      p.expect(r < 1e-8, std::string(name) + " " + an);
    }
  }
  p.note("max residual " + sci(worst));
  return {"9", "P^l m (P^l x P^l) on R(A) is S-invariant",
          p.ok() ? Status::kPass : Status::kFail, p.text()};
}

// 11. C[x]/x^2 counter-example.
Line polynomial_counter_example() {
  Probe p;
  FunctorContext v(fixture("vec"));
  Algebra cx = cx2_algebra(v.C());
  Algebra emb = tensor_algebra(v.P(), box_unit(v, cx), r_unit(v));
  ModularInvariance m = check_modular_invariant(v, emb);
  g_agree.modular(m);
  FrobeniusReport fr = frobenius_report(v.C(), cx);
  size_t parts = decompose_algebra(v.C(), cx).size();
  p.expect(m.invariant() && m.invariant_basis(), "modular invariant");
  p.expect(!fr.special.value, "special");
  p.expect(!fr.simple.value, "simple");
  p.expect(parts == 1, "one summand");
  p.note(std::string("modular-invariant ") + (m.invariant() ? "YES" : "NO") +
         ", special " + (fr.special.value ? "YES" : "NO") + ", simple " +
         (fr.simple.value ? "YES" : "NO") + ", summands " +
         std::to_string(parts));
  return {"11", "C[x]/x^2 counter-example",
          p.ok() ? Status::kPass : Status::kFail, p.text()};
}

// 10. Cross-form agreement over everything above plus failing triples.
Line cross_form_agreement() {
  for (const char* name : {"ising", "fibonacci"}) {
    FunctorContext ctx(fixture(name));
    Algebra en = endo_algebra(ctx.C(), ctx.C().simple(1));
    g_agree.triple(
        check_cardy_algebra(ctx, make_triple(ctx, en, r_unit(ctx),
                                             ctx.R(en.eta))));
    CardyTriple c = canonical_cardy(ctx, unit_algebra(ctx.C()));
    g_agree.triple(check_cardy_algebra(
        ctx, make_triple(ctx, c.op, c.cl, 2.0 * c.iota)));
    g_agree.modular(check_modular_invariant(ctx, r_unit(ctx)));
  }
  Probe p;
  p.expect(g_agree.triple_disagree == 0, "definitions I and II");
  p.expect(g_agree.centre_disagree == 0, "left-comm vs comm-C");
  p.expect(g_agree.cardy_disagree == 0, "cardy-CC vs cardy-C");
  p.expect(g_agree.mi_disagree == 0, "modular invariance forms");
  p.note(std::to_string(g_agree.triples) + " triples, " +
         std::to_string(g_agree.triple_disagree) + " definition mismatches; " +
         std::to_string(g_agree.algebras) + " closed algebras, " +
         std::to_string(g_agree.mi_disagree) + " modular-invariance mismatches");
  return {"10", "cross-form agreement", p.ok() ? Status::kPass : Status::kFail,
          p.text()};
}

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kUnattainable: return "UNATTAINABLE";
  }
  return "?";
}

}  // namespace
}  // namespace mtc

int main() {
  using namespace mtc;
  using Clock = std::chrono::steady_clock;
  std::vector<std::function<std::vector<Line>()>> suite = {
      [] { return std::vector<Line>{fixture_validity()}; },
      [] { return std::vector<Line>{adjunction()}; },
      [] { return std::vector<Line>{frobenius_functors()}; },
      [] { return std::vector<Line>{r_unit_properties()}; },
      [] { return modular_invariance_dimension(); },
      [] { return std::vector<Line>{canonical_triples()}; },
      [] { return std::vector<Line>{uniqueness()}; },
      [] { return std::vector<Line>{existence()}; },
      [] { return std::vector<Line>{lemma_projected_product()}; },
      [] { return std::vector<Line>{polynomial_counter_example()}; },
      [] { return std::vector<Line>{cross_form_agreement()}; },
  };
  int fails = 0, unattainable = 0, passes = 0;
  for (auto& run : suite) {
    auto t0 = Clock::now();
    std::vector<Line> lines;
    try {
      lines = run();
    } catch (const std::exception& e) {
      lines = {{"?", "exception", Status::kFail, e.what()}};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    for (const Line& l : lines) {
      std::printf("criterion %s [%s] %s: %s (%.1fs)\n", l.id.c_str(),
                  status_name(l.status), l.name.c_str(), l.detail.c_str(),
                  secs);
      if (l.status == Status::kFail) ++fails;
      else if (l.status == Status::kUnattainable) ++unattainable;
      else ++passes;
    }
    std::fflush(stdout);
  }
  std::printf("summary: %d pass, %d fail, %d unattainable\n", passes, fails,
              unattainable);
  return fails ? 1 : 0;
}
