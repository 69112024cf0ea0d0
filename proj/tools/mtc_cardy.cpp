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

// Command-line front end. Every report is a list of `key: value` lines that
// ends with a `verdict:` line. Exit status: 0 pass, 1 check failed, 2 bad
// input.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mtc/io.hpp"

namespace {

using namespace mtc;
namespace fs = std::filesystem;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Options {
  double tolerance = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string fixture;
};

class Report {
 public:
  void kv(const std::string& k, const std::string& v) {
    os_ << k << ": " << v << "\n";
  }
  void flag(const std::string& k, const Flag& f) {
    kv(k, !f.applicable ? "N/A" : (f.value ? "YES" : "NO"));
    if (f.applicable) kv(k + ".residual", fmt_num(f.residual));
  }
  void check(const std::string& k, double res, double tol) {
    kv(k, res < tol ? "PASS" : "FAIL");
    kv(k + ".residual", fmt_num(res));
  }
  void raw(const std::string& s) { os_ << s; }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

std::string yes(bool b) { return b ? "YES" : "NO"; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int finish(const Report& r, bool pass) {
  std::cout << r.str();
  return pass ? kPass : kFail;
}

void write_out(const Options& o, const std::string& text) {
  if (o.out.empty()) return;
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

#ifndef MTC_FIXTURE_DIR
#define MTC_FIXTURE_DIR "fixtures"
#endif

// A file argument, tried as given, with .json appended, and in the bundled
// fixture directory. Empty when nothing matches.
std::string as_file(const std::string& ref) {
  for (const fs::path dir : {fs::path(), fs::path(MTC_FIXTURE_DIR)})
    for (const std::string ext : {"", ".json", ".triple"}) {
      fs::path p = dir / (ref + ext);
      if (fs::exists(p) && fs::is_regular_file(p)) return p.string();
    }
  return "";
}

std::string category_file(const std::string& ref) {
  std::string f = as_file(ref);
  return f.empty() ? ref : f;
}

std::string category_for(const std::string& algebra_ref, const Options& o) {
  if (!o.fixture.empty()) return o.fixture;
  std::string f = as_file(algebra_ref);
  if (f.empty())
    throw InputError("built-in algebra '" + algebra_ref +
                     "' needs --fixture to name its category");
  return algebra_category_ref(read_text(f));
}

NamedAlgebra load_alg(const FunctorContext& ctx, const std::string& ref) {
  std::string f = as_file(ref);
  return resolve_algebra(ctx, f.empty() ? ref : f);
}

/// Closed algebras given in C are embedded as (A x 1) (x) R(1).
NamedAlgebra closed_of(const FunctorContext& ctx, NamedAlgebra a, Report& r) {
  if (a.space == Space::kCC) return a;
  const Engine &C = ctx.C(), &P = ctx.P();
  r.kv("embedding", "(A x 1) (x) R(1)");
  a.alg = tensor_algebra(P, box_unit(ctx, a.alg),
                         transport_algebra(ctx, Functor::kR, unit_algebra(C)));
  a.space = Space::kCC;
  return a;
}

void header(Report& r, const std::string& cmd, const FunctorContext& ctx) {
  r.kv("command", cmd);
  r.kv("category", ctx.C().cat().name);
  r.kv("rank", std::to_string(ctx.rank()));
  r.kv("tolerance", fmt_num(ctx.C().tol()));
}

void frob_lines(Report& r, const Engine& e, const Algebra& a,
                const std::string& prefix) {
  FrobeniusReport f = frobenius_report(e, a);
  for (auto& [k, fl] : f.flags()) r.flag(prefix + k, *fl);
  r.kv(prefix + "dim", fmt_cplx(e.trace(e.id(a.obj))));
  if (a.has_coalgebra()) {
    r.kv(prefix + "zeta", fmt_cplx(f.zeta));
    r.kv(prefix + "xi", fmt_cplx(f.xi));
  }
}

void torus_lines(Report& r, const TorusMatrix& z) {
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    std::vector<int> row(z.cols());
    for (Eigen::Index j = 0; j < z.cols(); ++j) row[j] = z(i, j);
    r.kv("Z.row." + std::to_string(i), join(row));
  }
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& cat_ref, const Options& o) {
  CatPtr cat = load_category(category_file(cat_ref), o.tolerance);
  Report r;
  r.kv("command", "validate");
  r.kv("category", cat->name);
  r.kv("rank", std::to_string(cat->rank));
  r.kv("tolerance", fmt_num(cat->tolerance));
  ValidationReport v = validate_category(cat);
  for (auto& en : v.entries) {
    r.kv(en.name, en.pass ? "PASS" : "FAIL");
    r.kv(en.name + ".residual", fmt_num(en.residual));
  }
  if (v.pass()) {
    DerivedData d = derive(cat);
    std::string dims;
    for (size_t i = 0; i < d.dims.size(); ++i)
      dims += (i ? " " : "") + fmt_cplx(d.dims[i]);
    r.kv("dims", dims);
    r.kv("Dim", fmt_cplx(d.globalDim));
  }
  r.kv("verdict", v.pass() ? "PASS" : "FAIL");
  return finish(r, v.pass());
}

int cmd_algebra_report(const std::string& cat_ref, const std::string& alg,
                       const Options& o) {
  FunctorContext ctx(load_category(category_file(cat_ref), o.tolerance));
  Report r;
  header(r, "algebra-report", ctx);
  NamedAlgebra a = load_alg(ctx, alg);
  const Engine& e = a.space == Space::kC ? ctx.C() : ctx.P();
  r.kv("algebra", a.name);
  r.kv("space", space_name(a.space));
  r.kv("object", join(e.multiplicities(a.alg.obj)));
  frob_lines(r, e, a.alg, "");
  FrobeniusReport f = frobenius_report(e, a.alg);
  bool ok = f.associative.value && f.unital.value;
  if (a.alg.has_coalgebra())
    ok = ok && f.coassociative.value && f.counital.value && f.frobenius.value;
  if (a.space == Space::kC)
    r.kv("summands", std::to_string(decompose_algebra(e, a.alg, o.seed).size()));
  write_out(o, algebra_to_json(ctx, a, cat_ref));
  r.kv("verdict", ok ? "PASS" : "FAIL");
  return finish(r, ok);
}

int cmd_full_centre(const std::string& cat_ref, const std::string& alg,
                    const Options& o) {
  FunctorContext ctx(load_category(category_file(cat_ref), o.tolerance));
  const Engine &C = ctx.C(), &P = ctx.P();
  Report r;
  header(r, "full-centre", ctx);
  NamedAlgebra a = load_alg(ctx, alg);
  if (a.space != Space::kC)
    throw InputError("full-centre needs an algebra in C");
  r.kv("algebra", a.name);
  FullCentre z = full_centre(ctx, a.alg);
  const cplx dimA = C.trace(C.id(a.alg.obj));
  r.kv("zeta", fmt_cplx(z.zeta));
  r.kv("centre.object", join(P.multiplicities(z.alg.obj)));
  ModularInvariance mi = check_modular_invariant(ctx, z.alg);
  torus_lines(r, mi.Z);
  r.kv("centre.dim", fmt_cplx(mi.dim));
  const cplx epseta = P.value(P.compose(*z.alg.eps, z.alg.eta));
  const cplx expect = dimA * ctx.Dim() / (z.zeta * z.zeta);
  r.kv("centre.eps-eta", fmt_cplx(epseta));
  r.kv("centre.eps-eta.expected", fmt_cplx(expect));
  const double tol = P.tol();
  r.check("centre.counit-normalisation", std::abs(epseta - expect), tol);
  FrobeniusReport fr = frobenius_report(P, z.alg);
  for (auto* k : {"frobenius", "commutative", "symmetric"}) {
    for (auto& [name, fl] : fr.flags())
      if (name == k) r.flag("centre." + name, *fl);
  }
  r.flag("centre.twist-trivial", mi.twist_trivial);
  r.kv("centre.s-invariant", yes(mi.s.pass));
  r.kv("centre.s-invariant.residual", fmt_num(mi.s.residual));
  r.kv("centre.s-invariant-k", yes(mi.s.pass_k));
  r.kv("centre.s-invariant-k.residual", fmt_num(mi.s.residual_k));
  r.check("centre.SZS", mi.szs, tol);
  NamedAlgebra out{Space::kCC, z.alg, "Z(" + a.name + ")"};
  write_out(o, algebra_to_json(ctx, out, cat_ref));
  bool ok = fr.frobenius.value && fr.commutative.value && fr.symmetric.value &&
            mi.invariant() && mi.s.agree() &&
            std::abs(epseta - expect) < tol;
  r.kv("verdict", ok ? "PASS" : "FAIL");
  return finish(r, ok);
}

void cardy_lines(Report& r, const FunctorContext& ctx, const CardyTriple& t,
                 bool* pass) {
  CardyReport c = check_cardy_algebra(ctx, t);
  for (auto& [k, f] : c.flags()) r.flag(k, *f);
  if (!c.error.empty()) r.kv("error", c.error);
  if (c.error.empty() && t.op.has_coalgebra() && t.cl.has_coalgebra()) {
    CardyCheck ck = check_cardy_condition(ctx, t);
    for (size_t i = 0; i < ck.per_label.size(); ++i)
      r.kv("cardy-C.label." + ctx.C().cat().labels[i],
           fmt_num(ck.per_label[i]));
  }
  r.kv("definition-I", c.def_I() ? "PASS" : "FAIL");
  r.kv("definition-II", c.def_II() ? "PASS" : "FAIL");
  r.kv("definitions-agree", yes(c.agree()));
  std::string v = c.def_I() && c.def_II() ? "PASS" : "FAIL";
  if (!c.agree()) v = "DISAGREE";
  else v += " (defs I & II agree)";
  r.kv("verdict", v);
  *pass = c.def_I() && c.def_II();
}

int cmd_check_cardy(const std::string& arg, const Options& o) {
  const std::string triple = as_file(arg);
  if (triple.empty()) throw InputError("cannot find triple file " + arg);
  std::string cref = o.fixture.empty() ? triple_category_ref(triple) : o.fixture;
  FunctorContext ctx(load_category(category_file(cref), o.tolerance));
  Report r;
  header(r, "check-cardy", ctx);
  r.kv("triple", fs::path(triple).filename().string());
  CardyTriple t = load_triple(ctx, triple);
  r.kv("open.object", join(ctx.C().multiplicities(t.op.obj)));
  r.kv("closed.object", join(ctx.P().multiplicities(t.cl.obj)));
  bool pass = false;
  cardy_lines(r, ctx, t, &pass);
  return finish(r, pass);
}

int cmd_construct_open(const std::string& alg, const Options& o) {
  std::string cref = category_for(alg, o);
  FunctorContext ctx(load_category(category_file(cref), o.tolerance));
  const Engine& C = ctx.C();
  Report r;
  header(r, "construct-open", ctx);
  NamedAlgebra a = load_alg(ctx, alg);
  r.kv("closed", a.name);
  a = closed_of(ctx, a, r);
  Existence ex = existence_construct(ctx, a.alg, o.seed);
  r.kv("summands", std::to_string(ex.summands.size()));
  double sq = 0;
  for (size_t i = 0; i < ex.summands.size(); ++i) {
    const Algebra& s = ex.summands[i].alg;
    const cplx d = C.trace(C.id(s.obj));
    sq += d.real();
    r.kv("summand." + std::to_string(i) + ".object", join(C.multiplicities(s.obj)));
    r.kv("summand." + std::to_string(i) + ".dim", fmt_cplx(d));
    r.kv("summand." + std::to_string(i) + ".special", yes(ex.special[i]));
  }
  r.kv("summand-dims.sum", fmt_cplx(sq));
  r.kv("chosen", std::to_string(ex.chosen));
  r.kv("xi", fmt_cplx(ex.xi));
  r.kv("xi.measured", fmt_cplx(ex.xi_measured));
  r.kv("lambda", fmt_cplx(ex.lambda));
  const double tol = ctx.P().tol();
  r.check("closed-iso", ex.iso_residual, tol);
  r.kv("open.object", join(C.multiplicities(ex.triple.op.obj)));
  bool pass = false;
  cardy_lines(r, ctx, ex.triple, &pass);
  write_out(o, triple_to_json(ctx, ex.triple, cref));
  return finish(r, pass && ex.iso_residual < tol);
}

int cmd_torus_Z(const std::string& alg, const Options& o) {
  std::string cref = category_for(alg, o);
  FunctorContext ctx(load_category(category_file(cref), o.tolerance));
  Report r;
  header(r, "torus-Z", ctx);
  NamedAlgebra a = load_alg(ctx, alg);
  r.kv("closed", a.name);
  a = closed_of(ctx, a, r);
  ModularInvariance mi = check_modular_invariant(ctx, a.alg);
  torus_lines(r, mi.Z);
  const double tol = ctx.P().tol();
  const int z00 = mi.Z(0, 0);
  r.kv("Z_00", std::to_string(z00));
  r.kv("dim", fmt_cplx(mi.dim));
  r.kv("Dim", fmt_cplx(ctx.Dim()));
  const bool consistent = std::abs(mi.dim - cplx(z00) * ctx.Dim()) < tol;
  r.kv("dim-consistency", std::string("dim=") + fmt_cplx(mi.dim) + ", Z_00=" +
                              std::to_string(z00) + ", Dim=" +
                              fmt_cplx(ctx.Dim()) + " -> " +
                              (consistent ? "consistent" : "inconsistent"));
  r.check("SZS", mi.szs, tol);
  r.flag("twist-trivial", mi.twist_trivial);
  r.kv("s-invariant", yes(mi.s.pass));
  r.kv("s-invariant-k", yes(mi.s.pass_k));
  r.kv("modular-invariant", yes(mi.invariant()));
  r.kv("forms-agree", yes(mi.s.agree()));
  bool ok = mi.szs < tol && mi.s.agree();
  r.kv("verdict", ok ? "PASS" : "FAIL");
  return finish(r, ok);
}

int cmd_export_category(const std::string& cat_ref, const Options& o) {
  CatPtr cat = load_category(cat_ref, o.tolerance);
  std::string text = category_to_json(*cat);
  if (o.out.empty()) std::cout << text;
  else write_out(o, text);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skeletal modular tensor categories and Cardy algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--tolerance", o.tolerance, "Override the category tolerance");
    c->add_option("--seed", o.seed, "Seed for randomized steps");
    c->add_option("--out", o.out, "Write the produced document here");
    c->add_option("--fixture", o.fixture, "Category for built-in algebras");
  };
  std::string a1, a2;
  int rc = kPass;
  std::function<int()> run;

  auto* v = app.add_subcommand("validate", "Check the coherence data of a category");
  v->add_option("category", a1, "Fixture name or category file")->required();
  common(v);
  v->callback([&] { run = [&] { return cmd_validate(a1, o); }; });

  auto* ar = app.add_subcommand("algebra-report", "Frobenius properties of an algebra");
  ar->add_option("category", a1)->required();
  ar->add_option("algebra", a2, "Algebra file or built-in name")->required();
  common(ar);
  ar->callback([&] { run = [&] { return cmd_algebra_report(a1, a2, o); }; });

  auto* fc = app.add_subcommand("full-centre", "Full centre Z(A) of an algebra in C");
  fc->add_option("category", a1)->required();
  fc->add_option("algebra", a2)->required();
  common(fc);
  fc->callback([&] { run = [&] { return cmd_full_centre(a1, a2, o); }; });

  auto* cc = app.add_subcommand("check-cardy", "Check a Cardy triple under both definitions");
  cc->add_option("triple", a1, "Triple file")->required();
  common(cc);
  cc->callback([&] { run = [&] { return cmd_check_cardy(a1, o); }; });

  auto* co = app.add_subcommand("construct-open", "Build a Cardy triple from a closed algebra");
  co->add_option("closed", a1)->required();
  common(co);
  co->callback([&] { run = [&] { return cmd_construct_open(a1, o); }; });

  auto* tz = app.add_subcommand("torus-Z", "Torus matrix of a closed algebra");
  tz->add_option("closed", a1)->required();
  common(tz);
  tz->callback([&] { run = [&] { return cmd_torus_Z(a1, o); }; });

  auto* ec = app.add_subcommand("export-category", "Write a category document");
  ec->add_option("category", a1)->required();
  common(ec);
  ec->callback([&] { run = [&] { return cmd_export_category(a1, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }
  try {
    rc = run();
  } catch (const AlgebraMapError& e) {
    std::cout << "error: " << e.what() << "\nverdict: FAIL\n";
    return kFail;
  } catch (const InputError& e) {
    std::cout << "error: " << e.what() << "\nverdict: INPUT-ERROR\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\nverdict: INPUT-ERROR\n";
    return kInput;
  }
  return rc;
}
