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

#include "mtc/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include "mtc/linalg.hpp"

namespace mtc {

namespace {

Flag flag(double res, double tol) { return {true, res < tol, res}; }

Flag not_applicable() { return {false, false, 0}; }

// Concatenated entries of all blocks.
Eigen::VectorXcd vec(const Mor& f) {
  Eigen::Index n = 0;
  for (auto& b : f.blk) n += b.size();
  Eigen::VectorXcd v(n);
  Eigen::Index o = 0;
  for (auto& b : f.blk)
    for (Eigen::Index c = 0; c < b.cols(); ++c)
      for (Eigen::Index r = 0; r < b.rows(); ++r) v(o++) = b(r, c);
  return v;
}

Mor unvec(const Engine& e, const Obj& src, const Obj& tgt,
          const Eigen::VectorXcd& v) {
  Mor f = e.zero(src, tgt);
  Eigen::Index o = 0;
  for (auto& b : f.blk)
    for (Eigen::Index c = 0; c < b.cols(); ++c)
      for (Eigen::Index r = 0; r < b.rows(); ++r) b(r, c) = v(o++);
  return f;
}

// Unit basis of Hom(src, tgt).
std::vector<Mor> hom_basis(const Engine& e, const Obj& src, const Obj& tgt) {
  std::vector<Mor> out;
  Mor z = e.zero(src, tgt);
  for (int k = 0; k < e.rank(); ++k)
    for (Eigen::Index c = 0; c < z.blk[k].cols(); ++c)
      for (Eigen::Index r = 0; r < z.blk[k].rows(); ++r) {
        Mor f = z;
        f.blk[k](r, c) = 1.0;
        out.push_back(f);
      }
  return out;
}

// Swaps src/tgt for objects with the same slot labels.
Mor relabel(const Mor& f, const Obj& src, const Obj& tgt) {
  if (f.src->labels != src->labels || f.tgt->labels != tgt->labels)
    throw std::invalid_argument("relabel between different slot lists");
  Mor r = f;
  r.src = src;
  r.tgt = tgt;
  return r;
}

const Mor& need(const std::optional<Mor>& m, const char* what) {
  if (!m) throw InputError(std::string("algebra has no ") + what);
  return *m;
}

}  // namespace

std::vector<std::pair<std::string, const Flag*>> FrobeniusReport::flags()
    const {
  return {{"associative", &associative},
          {"unital", &unital},
          {"coassociative", &coassociative},
          {"counital", &counital},
          {"frobenius", &frobenius},
          {"commutative", &commutative},
          {"symmetric", &symmetric},
          {"special", &special},
          {"normalised-special", &normalised_special},
          {"haploid", &haploid},
          {"absolutely-simple", &absolutely_simple},
          {"simple", &simple}};
}

Algebra make_algebra(const Engine& e, const Obj& obj, const Mor& m,
                     const Mor& eta, std::optional<Mor> delta,
                     std::optional<Mor> eps) {
  Algebra a;
  a.obj = obj;
  Obj aa = e.tensor(obj, obj);
  a.m = e.coerce(m, aa, obj);
  a.eta = e.coerce(eta, e.unit(), obj);
  if (delta) a.delta = e.coerce(*delta, obj, aa);
  if (eps) a.eps = e.coerce(*eps, obj, e.unit());
  return a;
}

std::optional<cplx> scalar_of(const Mor& x, double tol, double* residual) {
  cplx num = 0;
  double den = 0;
  for (auto& b : x.blk) {
    if (b.rows() != b.cols())
      throw std::invalid_argument("scalar_of needs an endomorphism");
    num += b.trace();
    den += static_cast<double>(b.rows());
  }
  cplx c = den > 0 ? num / den : cplx(0);
  double res = 0;
  for (auto& b : x.blk)
    if (b.size())
      res = std::max(res, max_abs(b - c * Mat::Identity(b.rows(), b.cols())));
  if (residual) *residual = res;
  if (res < tol * std::max(1.0, std::abs(c))) return c;
  return std::nullopt;
}

AlgebraCheck check_algebra(const Engine& e, const Algebra& a) {
  const double tol = e.tol();
  const Obj& A = a.obj;
  Mor id = e.id(A);
  AlgebraCheck r;
  r.associative = flag(e.diff(e.compose(a.m, e.tensor(a.m, id)),
                              e.compose(a.m, e.tensor(id, a.m))),
                       tol);
  double u = std::max(e.diff(e.compose(a.m, e.tensor(a.eta, id)), id),
                      e.diff(e.compose(a.m, e.tensor(id, a.eta)), id));
  r.unital = flag(u, tol);
  return r;
}

FrobeniusReport frobenius_report(const Engine& e, const Algebra& a) {
  const double tol = e.tol();
  const Obj& A = a.obj;
  Mor id = e.id(A);
  FrobeniusReport r;
  AlgebraCheck ac = check_algebra(e, a);
  r.associative = ac.associative;
  r.unital = ac.unital;
  r.commutative = flag(e.diff(e.compose(a.m, e.braid(A, A)), a.m), tol);
  r.haploid = {true, A->count(0) == 1, 0};
  r.dim_l_minus_dim_r =
      std::abs(e.value(e.compose(e.ev(A), e.coev_r(A))) -
               e.value(e.compose(e.ev_r(A), e.coev(A))));

  std::vector<double> sv;
  auto endos = bimodule_endos(e, a, &sv);
  r.endo_dim = static_cast<int>(endos.size());
  r.absolutely_simple = {true, r.endo_dim == 1, 0};

  if (!a.has_coalgebra()) {
    r.coassociative = r.counital = r.frobenius = r.symmetric = r.special =
        r.normalised_special = not_applicable();
    r.simple = r.absolutely_simple;
    return r;
  }
  const Mor &d = *a.delta, &eps = *a.eps;
  r.coassociative = flag(e.diff(e.compose(e.tensor(d, id), d),
                                e.compose(e.tensor(id, d), d)),
                         tol);
  r.counital = flag(std::max(e.diff(e.compose(e.tensor(eps, id), d), id),
                             e.diff(e.compose(e.tensor(id, eps), d), id)),
                    tol);
  Mor dm = e.compose(d, a.m);
  r.frobenius =
      flag(std::max(e.diff(e.compose(e.tensor(id, a.m), e.tensor(d, id)), dm),
                    e.diff(e.compose(e.tensor(a.m, id), e.tensor(id, d)), dm)),
           tol);
  Mor em = e.compose(eps, a.m);
  Obj Ad = e.dual(A);
  Mor phi = e.compose(e.tensor(em, e.id(Ad)), e.tensor(id, e.coev(A)));
  Mor phi2 = e.compose(e.tensor(e.id(Ad), em), e.tensor(e.coev_r(A), id));
  r.symmetric = flag(e.diff(phi, phi2), tol);

  double zres = 0;
  auto zeta = scalar_of(e.compose(a.m, d), tol, &zres);
  cplx xi = e.value(e.compose(eps, a.eta));
  r.xi = xi;
  if (zeta) r.zeta = *zeta;
  const bool special = zeta && std::abs(*zeta) > tol && std::abs(xi) > tol;
  r.special = {true, special, zres};
  r.normalised_special = {true, special && std::abs(*zeta - 1.0) < tol,
                          zeta ? std::abs(*zeta - 1.0) : zres};
  // Simple and absolutely simple agree when the bimodule category is
  // semisimple, which holds for special algebras.
  r.simple = {true, r.endo_dim == 1 && special, 0};
  if (!special && r.endo_dim == 1) r.simple.applicable = false;
  return r;
}

Mor star(const Engine& e, const Algebra& a, const Algebra& b, const Mor& f) {
  const Obj &A = a.obj, &B = b.obj;
  Mor t1 = e.tensor(e.id(B), e.compose(need(a.delta, "coproduct"), a.eta));
  Mor t2 = e.tensor(e.id(B), e.tensor(f, e.id(A)));
  Mor t3 = e.tensor(e.compose(need(b.eps, "counit"), b.m), e.id(A));
  return e.coerce(e.compose({t3, t2, t1}), B, A);
}

double algebra_map_residual(const Engine& e, const Algebra& a,
                            const Algebra& b, const Mor& f) {
  return std::max(
      e.diff(e.compose(f, a.m), e.compose(b.m, e.tensor(f, f))),
      e.diff(e.compose(f, a.eta), b.eta));
}

double coalgebra_map_residual(const Engine& e, const Algebra& a,
                              const Algebra& b, const Mor& f) {
  const Mor &da = need(a.delta, "coproduct"), &db = need(b.delta, "coproduct");
  const Mor &ea = need(a.eps, "counit"), &eb = need(b.eps, "counit");
  return std::max(e.diff(e.compose(e.tensor(f, f), da), e.compose(db, f)),
                  e.diff(e.compose(eb, f), ea));
}

Mor P_left(const Engine& e, const Algebra& a) {
  const Obj& A = a.obj;
  return e.compose({a.m, e.braid(A, A), e.tensor(e.id(A), e.twist(A)),
                    need(a.delta, "coproduct")});
}

Split split_idempotent(const Engine& e, const Mor& p) {
  if (!same_shape(p.src, p.tgt) && p.src->labels != p.tgt->labels)
    throw InputError("idempotent must be an endomorphism");
  if (e.diff(e.compose(p, p), p) > e.tol() * std::max(1.0, norm_max(p)))
    throw InputError("morphism is not idempotent");
  std::vector<int> labels;
  std::vector<Mat> us(e.rank());
  for (int k = 0; k < e.rank(); ++k) {
    const Mat& b = p.blk[k];
    if (b.size() == 0) continue;
    Eigen::JacobiSVD<Mat> svd(b, Eigen::ComputeFullU);
    const auto& s = svd.singularValues();
    // Nonzero singular values of an idempotent are at least 1.
    int rk = 0;
    while (rk < s.size() && s(rk) > 0.5) ++rk;
    us[k] = svd.matrixU().leftCols(rk);
    for (int i = 0; i < rk; ++i) labels.push_back(k);
  }
  Split out;
  out.image = e.atom(labels);
  out.e = e.zero(out.image, p.tgt);
  out.r = e.zero(p.src, out.image);
  for (int k = 0; k < e.rank(); ++k) {
    if (us[k].size() == 0) continue;
    out.e.blk[k] = us[k];
    out.r.blk[k] = us[k].adjoint() * p.blk[k];
  }
  return out;
}

Split left_centre(const Engine& e, const Algebra& a) {
  double res = 0;
  auto zeta = scalar_of(e.compose(a.m, need(a.delta, "coproduct")), e.tol(),
                        &res);
  if (!zeta || std::abs(*zeta) < e.tol())
    throw InputError("left centre needs m o Delta = zeta id with zeta != 0");
  return split_idempotent(e, (1.0 / *zeta) * P_left(e, a));
}

std::vector<Mor> bimodule_endos(const Engine& e, const Algebra& a,
                                std::vector<double>* singular) {
  const Obj& A = a.obj;
  Mor id = e.id(A);
  auto basis = hom_basis(e, A, A);
  if (basis.empty()) return {};
  std::vector<Eigen::VectorXcd> cols;
  for (auto& f : basis) {
    Mor fm = e.compose(f, a.m);
    Eigen::VectorXcd l = vec(fm - e.compose(a.m, e.tensor(f, id)));
    Eigen::VectorXcd r = vec(fm - e.compose(a.m, e.tensor(id, f)));
    Eigen::VectorXcd c(l.size() + r.size());
    c << l, r;
    cols.push_back(c);
  }
  Mat M(cols[0].size(), static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) M.col(j) = cols[j];
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Eigen::Index n = M.cols();
  const double smax = s.size() ? s(0) : 0.0;
  const double thr = e.tol() * std::max(1.0, smax);
  if (singular) singular->assign(s.data(), s.data() + s.size());
  std::vector<Mor> out;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double sj = j < s.size() ? s(j) : 0.0;
    if (sj > thr) continue;
    Eigen::VectorXcd v = svd.matrixV().col(j);
    out.push_back(unvec(e, A, A, v));
  }
  return out;
}

bool is_simple(const Engine& e, const Algebra& a) {
  return bimodule_endos(e, a).size() == 1;
}

std::vector<Summand> decompose_algebra(const Engine& e, const Algebra& a,
                                       std::uint64_t seed) {
  const Obj& A = a.obj;
  Mor id = e.id(A);
  auto whole = [&]() {
    return std::vector<Summand>{{a, id, id}};
  };
  auto endos = bimodule_endos(e, a);
  const int d = static_cast<int>(endos.size());
  if (d <= 1) return whole();
  Mat B(vec(endos[0]).size(), d);
  for (int i = 0; i < d; ++i) B.col(i) = vec(endos[i]);
  Eigen::ColPivHouseholderQR<Mat> qr(B);

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 gen(seed + 7919 * attempt);
    std::normal_distribution<double> nd;
    Mor g = e.zero(A, A);
    for (int i = 0; i < d; ++i) g = g + cplx(nd(gen), nd(gen)) * endos[i];
    Mat L(d, d);
    for (int j = 0; j < d; ++j) L.col(j) = qr.solve(vec(e.compose(g, endos[j])));
    Eigen::ComplexEigenSolver<Mat> es(L);
    std::vector<cplx> reps;
    const auto& ev = es.eigenvalues();
    double scale = 1.0;
    for (int i = 0; i < d; ++i) scale = std::max(scale, std::abs(ev(i)));
    for (int i = 0; i < d; ++i) {
      bool found = false;
      for (auto& r : reps)
        if (std::abs(r - ev(i)) < 1e-6 * scale) found = true;
      if (!found) reps.push_back(ev(i));
    }
    if (reps.size() == 1) return whole();
    double gap = INFINITY;
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i + 1; j < reps.size(); ++j)
        gap = std::min(gap, std::abs(reps[i] - reps[j]));
    if (gap < 1e-3 * scale) continue;

    std::vector<Mor> idem;
    bool ok = true;
    for (size_t i = 0; i < reps.size() && ok; ++i) {
      Mor p = id;
      for (size_t j = 0; j < reps.size(); ++j) {
        if (j == i) continue;
        p = (1.0 / (reps[i] - reps[j])) * e.compose(g - reps[j] * id, p);
      }
      for (int it = 0; it < 200; ++it) {
        Mor p2 = e.compose(p, p);
        if (norm_max(p2 - p) < 1e-14) break;
        p = 3.0 * p2 - 2.0 * e.compose(p2, p);
      }
      if (norm_max(e.compose(p, p) - p) > e.tol()) ok = false;
      idem.push_back(p);
    }
    if (!ok) continue;
    std::vector<Summand> out;
    Mor sum = e.zero(A, A);
    for (auto& p : idem) {
      Split s = split_idempotent(e, p);
      Summand sm;
      sm.e = s.e;
      sm.r = s.r;
      Obj X = s.image;
      Mor m = e.compose({s.r, a.m, e.tensor(s.e, s.e)});
      Mor eta = e.compose(s.r, a.eta);
      std::optional<Mor> dl, ep;
      if (a.has_coalgebra()) {
        dl = e.compose({e.tensor(s.r, s.r), *a.delta, s.e});
        ep = e.compose(*a.eps, s.e);
      }
      sm.alg = make_algebra(e, X, m, eta, dl, ep);
      sum = sum + e.compose(s.e, s.r);
      out.push_back(sm);
    }
    if (e.diff(sum, id) > e.tol()) continue;
    return out;
  }
  throw InputError("decompose_algebra: no generic element found");
}

Mor frobenius_from_counit(const Engine& e, const Algebra& a, const Mor& eps) {
  const Obj& A = a.obj;
  Obj aa = e.tensor(A, A);
  Mor beta = e.compose(e.coerce(eps, A, e.unit()), a.m);
  Mor id = e.id(A);
  auto gb = hom_basis(e, e.unit(), aa);
  if (gb.empty()) throw InputError("degenerate pairing");
  Eigen::VectorXcd target = vec(id);
  Mat M(target.size(), static_cast<Eigen::Index>(gb.size()));
  for (size_t j = 0; j < gb.size(); ++j) {
    Mor z = e.compose(e.tensor(beta, id), e.tensor(id, gb[j]));
    M.col(j) = vec(e.coerce(z, A, A));
  }
  Eigen::ColPivHouseholderQR<Mat> qr(M);
  Eigen::VectorXcd x = qr.solve(target);
  if (qr.rank() < M.cols() || (M * x - target).cwiseAbs().maxCoeff() > e.tol())
    throw InputError("degenerate pairing");
  Mor gamma = unvec(e, e.unit(), aa, x);
  return e.coerce(e.compose(e.tensor(a.m, id), e.tensor(id, gamma)), A, aa);
}

Algebra tensor_algebra(const Engine& e, const Algebra& a, const Algebra& b) {
  const Obj &A = a.obj, &B = b.obj;
  Obj ab = e.tensor(A, B);
  Mor mid = e.tensor(e.id(A), e.tensor(e.braid_inv(A, B), e.id(B)));
  Mor m = e.compose(e.tensor(a.m, b.m), mid);
  Mor eta = e.tensor(a.eta, b.eta);
  std::optional<Mor> d, ep;
  if (a.has_coalgebra() && b.has_coalgebra()) {
    auto c = tensor_coalgebra(e, a, b);
    d = c.first;
    ep = c.second;
  }
  return make_algebra(e, ab, m, eta, d, ep);
}

std::pair<Mor, Mor> tensor_coalgebra(const Engine& e, const Algebra& a,
                                     const Algebra& b) {
  const Obj &A = a.obj, &B = b.obj;
  Obj ab = e.tensor(A, B);
  Mor mid = e.tensor(e.id(A), e.tensor(e.braid(A, B), e.id(B)));
  Mor d = e.compose(mid, e.tensor(need(a.delta, "coproduct"),
                                  need(b.delta, "coproduct")));
  Mor ep = e.tensor(need(a.eps, "counit"), need(b.eps, "counit"));
  return {e.coerce(d, ab, e.tensor(ab, ab)), e.coerce(ep, ab, e.unit())};
}

std::pair<Mor, Mor> transport_coalgebra(const FunctorContext& ctx, Functor f,
                                        const Algebra& a) {
  const Mor& d = need(a.delta, "coproduct");
  const Mor& ep = need(a.eps, "counit");
  if (f == Functor::kR) {
    const Engine& P = ctx.P();
    return {P.compose(ctx.psi2R(a.obj, a.obj), ctx.R(d)),
            P.compose(ctx.psi0R(), ctx.R(ep))};
  }
  const Engine& C = ctx.C();
  return {C.compose(ctx.psi2T(a.obj, a.obj), ctx.T(d)),
          C.compose(ctx.psi0T(), ctx.T(ep))};
}

Algebra transport_algebra(const FunctorContext& ctx, Functor f,
                          const Algebra& a) {
  std::optional<Mor> d, ep;
  if (a.has_coalgebra()) {
    auto c = transport_coalgebra(ctx, f, a);
    d = c.first;
    ep = c.second;
  }
  if (f == Functor::kR) {
    const Engine& P = ctx.P();
    Mor m = P.compose(ctx.R(a.m), ctx.phi2R(a.obj, a.obj));
    Mor eta = P.compose(ctx.R(a.eta), ctx.phi0R());
    return make_algebra(P, ctx.R(a.obj), m, eta, d, ep);
  }
  const Engine& C = ctx.C();
  Mor m = C.compose(ctx.T(a.m), ctx.phi2T(a.obj, a.obj));
  Mor eta = C.compose(ctx.T(a.eta), ctx.phi0T());
  return make_algebra(C, ctx.T(a.obj), m, eta, d, ep);
}

Mor deligne_iso(const FunctorContext& ctx, const Obj& x1, const Obj& y1,
                const Obj& x2, const Obj& y2) {
  const Engine &C = ctx.C(), &P = ctx.P();
  Obj b1 = ctx.box(x1, y1), b2 = ctx.box(x2, y2);
  Obj src = P.tensor(b1, b2);
  Obj x12 = C.tensor(x1, x2), y12 = C.tensor(y1, y2);
  Obj tgt = ctx.box(x12, y12);
  std::map<std::tuple<int, int, int, int, int, int, int>, int> where;
  for (int u = 0; u < x12->size(); ++u)
    for (int v = 0; v < y12->size(); ++v) {
      auto &pu = x12->parts[u], &pv = y12->parts[v];
      where[{tgt->labels[u * y12->size() + v], pu.l, pu.r, pu.mu, pv.l, pv.r,
             pv.mu}] = u * y12->size() + v;
    }
  const Category& c = C.cat();
  std::vector<int> map(src->size());
  for (int z = 0; z < src->size(); ++z) {
    auto& p = src->parts[z];
    const int a1 = p.l / y1->size(), bb1 = p.l % y1->size();
    const int a2 = p.r / y2->size(), bb2 = p.r % y2->size();
    const int n = ctx.second(src->labels[z]);
    const int n2 = c.n(y1->labels[bb1], y2->labels[bb2], n);
    map[z] = where.at(
        {src->labels[z], a1, a2, p.mu / n2, bb1, bb2, p.mu % n2});
  }
  return P.embed(src, tgt, map);
}

Algebra box_unit(const FunctorContext& ctx, const Algebra& a) {
  const Engine &C = ctx.C(), &P = ctx.P();
  Obj u = C.unit();
  Mor idu = C.id(u);
  Mor iso = deligne_iso(ctx, a.obj, u, a.obj, u);
  Mor m = P.compose(ctx.box(a.m, idu), relabel(iso, iso.src,
                                              ctx.box(a.m.src, u)));
  Mor eta = relabel(ctx.box(a.eta, idu), P.unit(), ctx.box(a.obj, u));
  std::optional<Mor> d, ep;
  if (a.has_coalgebra()) {
    Mor inv = inverse(iso);
    d = P.compose(relabel(inv, ctx.box(a.m.src, u), inv.tgt),
                  ctx.box(*a.delta, idu));
    ep = relabel(ctx.box(*a.eps, idu), ctx.box(a.obj, u), P.unit());
  }
  return make_algebra(P, ctx.box(a.obj, u), m, eta, d, ep);
}

Algebra unit_algebra(const Engine& e) {
  Obj u = e.unit();
  Obj uu = e.tensor(u, u);
  return make_algebra(e, u, e.reshape(uu, u), e.id(u), e.reshape(u, uu),
                      e.id(u));
}

Algebra cx2_algebra(const Engine& e) {
  Obj A = e.atom({0, 0});
  Obj aa = e.tensor(A, A);
  Mor m = e.zero(aa, A);
  // slots: 0 = 1, 1 = x; pair (a, b) sits at 2a + b.
  m.blk[0](0, 0) = 1.0;
  m.blk[0](1, 1) = 1.0;
  m.blk[0](1, 2) = 1.0;
  Mor eta = e.zero(e.unit(), A);
  eta.blk[0](0, 0) = 1.0;
  Mor eps = e.zero(A, e.unit());
  eps.blk[0](0, 1) = 1.0;
  Algebra a = make_algebra(e, A, m, eta);
  a.delta = frobenius_from_counit(e, a, eps);
  a.eps = eps;
  return a;
}

Algebra matrix_algebra(const Engine& e, int n) {
  const int N = n * n;
  Obj A = e.atom(std::vector<int>(N, 0));
  Obj aa = e.tensor(A, A);
  Mor m = e.zero(aa, A);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        m.blk[0](i * n + l, (i * n + j) * N + (j * n + l)) = 1.0;
  Mor eta = e.zero(e.unit(), A);
  Mor eps = e.zero(A, e.unit());
  for (int i = 0; i < n; ++i) {
    eta.blk[0](i * n + i, 0) = 1.0;
    eps.blk[0](0, i * n + i) = 1.0;
  }
  Algebra a = make_algebra(e, A, m, eta);
  a.delta = frobenius_from_counit(e, a, eps);
  a.eps = eps;
  return a;
}

Algebra diagonal_algebra(const Engine& e, int n) {
  Obj A = e.atom(std::vector<int>(n, 0));
  Obj aa = e.tensor(A, A);
  Mor m = e.zero(aa, A), d = e.zero(A, aa);
  Mor eta = e.zero(e.unit(), A), eps = e.zero(A, e.unit());
  for (int i = 0; i < n; ++i) {
    m.blk[0](i, i * n + i) = 1.0;
    d.blk[0](i * n + i, i) = 1.0;
    eta.blk[0](i, 0) = 1.0;
    eps.blk[0](0, i) = 1.0;
  }
  return make_algebra(e, A, m, eta, d, eps);
}

Algebra endo_algebra(const Engine& e, const Obj& x) {
  Obj xd = e.dual(x);
  Obj X = e.tensor(x, xd);
  Obj XX = e.tensor(X, X);
  Mor m = e.coerce(e.tensor(e.id(x), e.tensor(e.ev(x), e.id(xd))), XX, X);
  Mor eta = e.coev(x);
  const cplx dim = e.trace(e.id(x));
  Mor d = e.coerce((1.0 / dim) * e.tensor(e.id(x), e.tensor(e.coev_r(x),
                                                            e.id(xd))),
                   X, XX);
  Mor eps = dim * e.ev_r(x);
  Obj F = e.flat(X), FF = e.tensor(F, F);
  return make_algebra(e, F, relabel(m, FF, F), relabel(eta, e.unit(), F),
                      relabel(d, F, FF), relabel(eps, F, e.unit()));
}

Algebra direct_sum(const Engine& e, const Algebra& a, const Algebra& b) {
  std::vector<Obj> parts{a.obj, b.obj};
  Obj S = e.concat(parts);
  Mor ia = e.incl(parts, 0), ib = e.incl(parts, 1);
  Mor pa = e.proj(parts, 0), pb = e.proj(parts, 1);
  Mor m = e.compose({ia, a.m, e.tensor(pa, pa)}) +
          e.compose({ib, b.m, e.tensor(pb, pb)});
  Mor eta = e.compose(ia, a.eta) + e.compose(ib, b.eta);
  std::optional<Mor> d, ep;
  if (a.has_coalgebra() && b.has_coalgebra()) {
    d = e.compose({e.tensor(ia, ia), *a.delta, pa}) +
        e.compose({e.tensor(ib, ib), *b.delta, pb});
    ep = e.compose(*a.eps, pa) + e.compose(*b.eps, pb);
  }
  return make_algebra(e, S, m, eta, d, ep);
}

}  // namespace mtc
