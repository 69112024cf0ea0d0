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

#include "mtc/functors.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtc {

namespace {

std::vector<int> iota_map(int n, int off) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = off + i;
  return m;
}

// First slot of each (left, right) pair of a tensor object.
std::vector<int> pair_starts(const Obj& xy) {
  const int ny = xy->right->size();
  std::vector<int> st(static_cast<size_t>(xy->left->size()) * ny + 1, -1);
  for (int s = 0; s < xy->size(); ++s) {
    auto& p = xy->parts[s];
    if (st[p.l * ny + p.r] < 0) st[p.l * ny + p.r] = s;
  }
  return st;
}

}  // namespace

FunctorContext::FunctorContext(CatPtr base) : base_(std::move(base)) {
  c_ = std::make_unique<Engine>(base_);
  p_ = std::make_unique<Engine>(doubled_category(*base_));
  d_ = derive(base_);
}

Obj FunctorContext::box(const Obj& x, const Obj& y) const {
  std::vector<int> labels;
  for (int a : x->labels)
    for (int b : y->labels) labels.push_back(pair(a, b));
  return p_->atom(labels);
}

Mor FunctorContext::box(const Mor& f, const Mor& g) const {
  Mor out = p_->zero(box(f.src, g.src), box(f.tgt, g.tgt));
  for (int a = 0; a < rank(); ++a)
    for (int b = 0; b < rank(); ++b) {
      const Mat &x = f.blk[a], &y = g.blk[b];
      Mat& o = out.blk[pair(a, b)];
      for (int r1 = 0; r1 < x.rows(); ++r1)
        for (int c1 = 0; c1 < x.cols(); ++c1)
          o.block(r1 * y.rows(), c1 * y.cols(), y.rows(), y.cols()) =
              x(r1, c1) * y;
    }
  return out;
}

std::vector<int> FunctorContext::t_offsets(const Obj& m) const {
  std::vector<int> off(m->size() + 1, 0);
  const Category& c = c_->cat();
  for (int s = 0; s < m->size(); ++s) {
    const int i = first(m->labels[s]), j = second(m->labels[s]);
    int n = 0;
    for (int k = 0; k < rank(); ++k) n += c.n(i, j, k);
    off[s + 1] = off[s] + n;
  }
  return off;
}

Obj FunctorContext::T(const Obj& m) const {
  std::vector<int> labels;
  for (int p : m->labels) {
    Obj t = c_->tensor(c_->simple(first(p)), c_->simple(second(p)));
    labels.insert(labels.end(), t->labels.begin(), t->labels.end());
  }
  return c_->atom(labels);
}

Mor FunctorContext::T(const Mor& f) const {
  Obj ts = T(f.src), tt = T(f.tgt);
  auto os = t_offsets(f.src), ot = t_offsets(f.tgt);
  Mor out = c_->zero(ts, tt);
  for (int p = 0; p < p_->rank(); ++p) {
    const Mat& b = f.blk[p];
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) {
        const cplx v = b(r, c);
        if (v == 0.0) continue;
        const int s = f.src->slots[p][c], t = f.tgt->slots[p][r];
        for (int u = 0; u < os[s + 1] - os[s]; ++u) {
          const int k = ts->labels[os[s] + u];
          out.blk[k](tt->copy[ot[t] + u], ts->copy[os[s] + u]) += v;
        }
      }
  }
  return out;
}

const Mor& FunctorContext::phi_small(int p, int q) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = phi_cache_.find({p, q});
    if (it != phi_cache_.end()) return it->second;
  }
  const Engine& e = *c_;
  const Category& c = e.cat();
  const int i = first(p), j = second(p), k = first(q), l = second(q);
  Obj ui = e.simple(i), uj = e.simple(j), uk = e.simple(k), ul = e.simple(l);
  Obj x = e.tensor(e.tensor(ui, uj), e.tensor(uk, ul));
  Obj y = e.tensor(e.tensor(ui, uk), e.tensor(uj, ul));
  Mor mid = e.tensor(e.id(ui), e.tensor(e.braid_inv(uk, uj), e.id(ul)));
  Mor g = e.coerce(mid, x, y);

  // Interchange: slots of (U_i U_k)(U_j U_l) to T(box(i,j) box(k,l)).
  Obj pq = p_->tensor(p_->simple(p), p_->simple(q));
  Obj tpq = T(pq);
  auto off = t_offsets(pq);
  auto st = pair_starts(y);
  const int nr = y->right->size();
  std::vector<int> map(y->size());
  for (int s = 0; s < y->size(); ++s) {
    auto& pt = y->parts[s];
    const int m = y->left->labels[pt.l], n = y->right->labels[pt.r];
    const int mu1 = y->left->parts[pt.l].mu, mu2 = y->right->parts[pt.r].mu;
    const int mm = mu1 * c.n(j, l, n) + mu2;
    int w = -1;
    for (int z = 0; z < pq->size(); ++z)
      if (pq->labels[z] == pair(m, n) && pq->parts[z].mu == mm) w = z;
    if (w < 0) throw std::logic_error("interchange slot not found");
    map[s] = off[w] + (s - st[pt.l * nr + pt.r]);
  }
  Mor phi = e.compose(e.embed(y, tpq, map), g);
  std::lock_guard<std::mutex> lk(mu_);
  return phi_cache_.emplace(std::make_pair(p, q), std::move(phi)).first->second;
}

Mor FunctorContext::phi2T(const Obj& m, const Obj& n) const {
  const Engine& e = *c_;
  Obj tm = T(m), tn = T(n), mn = p_->tensor(m, n);
  Mor out = e.zero(e.tensor(tm, tn), T(mn));
  auto om = t_offsets(m), on = t_offsets(n), omn = t_offsets(mn);
  auto st = pair_starts(mn);
  for (int s = 0; s < m->size(); ++s)
    for (int t = 0; t < n->size(); ++t) {
      const Mor& sm = phi_small(m->labels[s], n->labels[t]);
      auto src = e.tensor_slot_map(sm.src, out.src,
                                   iota_map(om[s + 1] - om[s], om[s]),
                                   iota_map(on[t + 1] - on[t], on[t]));
      std::vector<int> tgt(sm.tgt->size());
      const int w0 = st[s * n->size() + t];
      for (int z = 0; z < sm.tgt->size(); ++z) tgt[z] = omn[w0] + z;
      e.accumulate(out, sm, src, tgt);
    }
  return out;
}

Mor FunctorContext::psi2T(const Obj& m, const Obj& n) const {
  const Engine& e = *c_;
  Obj tm = T(m), tn = T(n), mn = p_->tensor(m, n);
  Mor out = e.zero(T(mn), e.tensor(tm, tn));
  auto om = t_offsets(m), on = t_offsets(n), omn = t_offsets(mn);
  auto st = pair_starts(mn);
  for (int s = 0; s < m->size(); ++s)
    for (int t = 0; t < n->size(); ++t) {
      Mor inv = inverse(phi_small(m->labels[s], n->labels[t]));
      auto tgt = e.tensor_slot_map(inv.tgt, out.tgt,
                                   iota_map(om[s + 1] - om[s], om[s]),
                                   iota_map(on[t + 1] - on[t], on[t]));
      std::vector<int> src(inv.src->size());
      const int w0 = st[s * n->size() + t];
      for (int z = 0; z < inv.src->size(); ++z) src[z] = omn[w0] + z;
      e.accumulate(out, inv, src, tgt);
    }
  return out;
}

Mor FunctorContext::phi0T() const {
  return c_->reshape(c_->unit(), T(p_->unit()));
}

Mor FunctorContext::psi0T() const {
  return c_->reshape(T(p_->unit()), c_->unit());
}

Obj FunctorContext::R(const Obj& a) const {
  std::vector<int> labels;
  for (int i = 0; i < rank(); ++i) {
    Obj x = c_->tensor(a, c_->simple(c_->cat().dual[i]));
    for (int k : x->labels) labels.push_back(pair(k, i));
  }
  return p_->atom(labels);
}

int FunctorContext::r_offset(const Obj& a, int i) const {
  int off = 0;
  for (int j = 0; j < i; ++j)
    off += c_->tensor(a, c_->simple(c_->cat().dual[j]))->size();
  return off;
}

Mor FunctorContext::R(const Mor& f) const {
  Mor out = p_->zero(R(f.src), R(f.tgt));
  int os = 0, ot = 0;
  for (int i = 0; i < rank(); ++i) {
    Obj ud = c_->simple(c_->cat().dual[i]);
    Mor sm = box(c_->tensor(f, c_->id(ud)), c_->id(c_->simple(i)));
    p_->accumulate(out, sm, iota_map(sm.src->size(), os),
                   iota_map(sm.tgt->size(), ot));
    os += sm.src->size();
    ot += sm.tgt->size();
  }
  return out;
}

Mor FunctorContext::delta_hat(const Obj& m) const {
  const Engine& e = *c_;
  Obj tm = T(m);
  Mor out = p_->zero(m, R(tm));
  auto off = t_offsets(m);
  for (int s = 0; s < m->size(); ++s) {
    const int k = first(m->labels[s]), l = second(m->labels[s]);
    Obj uk = e.simple(k), ul = e.simple(l), uld = e.dual(ul);
    Obj kl_l = e.tensor(e.tensor(uk, ul), uld);
    Mor sc = e.coerce(e.compose(e.assoc(uk, ul, uld),
                                e.tensor(e.id(uk), e.coev(ul))),
                      uk, kl_l);
    Mor sm = box(sc, e.id(ul));
    auto xmap = e.tensor_slot_map(kl_l, e.tensor(tm, uld),
                                  iota_map(off[s + 1] - off[s], off[s]), {0});
    const int ro = r_offset(tm, l);
    for (auto& v : xmap) v += ro;
    p_->accumulate(out, sm, {s}, xmap);
  }
  return out;
}

Mor FunctorContext::rho_check(const Obj& m) const {
  const Engine& e = *c_;
  Obj tm = T(m);
  Mor out = p_->zero(R(tm), m);
  auto off = t_offsets(m);
  for (int s = 0; s < m->size(); ++s) {
    const int k = first(m->labels[s]), l = second(m->labels[s]);
    Obj uk = e.simple(k), ul = e.simple(l), uld = e.dual(ul);
    Obj kl_l = e.tensor(e.tensor(uk, ul), uld);
    Mor sc = e.coerce(e.compose(e.tensor(e.id(uk), e.ev_r(ul)),
                                e.assoc_inv(uk, ul, uld)),
                      kl_l, uk);
    sc = (Dim() / e.dims()[l]) * sc;
    Mor sm = box(sc, e.id(ul));
    auto xmap = e.tensor_slot_map(kl_l, e.tensor(tm, uld),
                                  iota_map(off[s + 1] - off[s], off[s]), {0});
    const int ro = r_offset(tm, l);
    for (auto& v : xmap) v += ro;
    p_->accumulate(out, sm, xmap, {s});
  }
  return out;
}

Mor FunctorContext::rho_hat(const Obj& a) const {
  const Engine& e = *c_;
  Obj ra = R(a);
  Mor out = e.zero(T(ra), a);
  auto off = t_offsets(ra);
  for (int i = 0; i < rank(); ++i) {
    Obj ui = e.simple(i), ud = e.dual(ui);
    Obj src = e.tensor(e.tensor(a, ud), ui);
    Mor sm = e.coerce(e.compose(e.tensor(e.id(a), e.ev(ui)),
                                e.assoc_inv(a, ud, ui)),
                      src, a);
    e.accumulate(out, sm, iota_map(src->size(), off[r_offset(a, i)]),
                 iota_map(a->size(), 0));
  }
  return out;
}

Mor FunctorContext::delta_check(const Obj& a) const {
  const Engine& e = *c_;
  Obj ra = R(a);
  Mor out = e.zero(a, T(ra));
  auto off = t_offsets(ra);
  for (int i = 0; i < rank(); ++i) {
    Obj ui = e.simple(i), ud = e.dual(ui);
    Obj tgt = e.tensor(e.tensor(a, ud), ui);
    Mor sm = e.coerce(e.compose(e.assoc(a, ud, ui),
                                e.tensor(e.id(a), e.coev_r(ui))),
                      a, tgt);
    sm = (e.dims()[i] / Dim()) * sm;
    e.accumulate(out, sm, iota_map(a->size(), 0),
                 iota_map(tgt->size(), off[r_offset(a, i)]));
  }
  return out;
}

Mor FunctorContext::hat_chi(const Mor& f, const Obj& m) const {
  return p_->compose(R(f), delta_hat(m));
}

Mor FunctorContext::hat_chi_inv(const Mor& g, const Obj& a) const {
  return c_->compose(rho_hat(a), T(g));
}

Mor FunctorContext::check_chi(const Mor& g, const Obj& m) const {
  return p_->compose(rho_check(m), R(g));
}

Mor FunctorContext::check_chi_inv(const Mor& h, const Obj& a) const {
  return c_->compose(T(h), delta_check(a));
}

Mor FunctorContext::phi2R(const Obj& a, const Obj& b) const {
  Obj ra = R(a), rb = R(b);
  return p_->compose({R(c_->tensor(rho_hat(a), rho_hat(b))),
                      R(psi2T(ra, rb)), delta_hat(p_->tensor(ra, rb))});
}

Mor FunctorContext::psi2R(const Obj& a, const Obj& b) const {
  Obj ra = R(a), rb = R(b);
  return p_->compose({rho_check(p_->tensor(ra, rb)), R(phi2T(ra, rb)),
                      R(c_->tensor(delta_check(a), delta_check(b)))});
}

Mor FunctorContext::phi0R() const {
  return p_->compose(R(psi0T()), delta_hat(p_->unit()));
}

Mor FunctorContext::psi0R() const {
  return p_->compose(rho_check(p_->unit()), R(phi0T()));
}

Mor FunctorContext::Q_R(const Mor& f, const Obj& a, const Obj& b) const {
  return c_->compose({rho_hat(b), T(f), delta_check(a)});
}

Mor FunctorContext::Q_T(const Mor& g, const Obj& m, const Obj& n) const {
  return (1.0 / Dim()) * p_->compose({rho_check(n), R(g), delta_hat(m)});
}

Mor FunctorContext::r_tensor_iso(const Obj& a) const {
  Obj ra = R(a), r1 = R(c_->unit());
  Obj tgt = p_->tensor(box(a, c_->unit()), r1);
  std::vector<int> map(ra->size(), -1);
  for (int i = 0; i < rank(); ++i) {
    Obj x = c_->tensor(a, c_->simple(c_->cat().dual[i]));
    const int ro = r_offset(a, i);
    for (int s = 0; s < x->size(); ++s) {
      auto& pt = x->parts[s];
      // R(1) has exactly one slot per summand.
      for (int z = 0; z < tgt->size(); ++z) {
        auto& q = tgt->parts[z];
        if (q.l == pt.l && q.r == i && tgt->labels[z] == ra->labels[ro + s] &&
            q.mu == pt.mu) {
          map[ro + s] = z;
          break;
        }
      }
      if (map[ro + s] < 0) throw std::logic_error("R tensor slot not found");
    }
  }
  return p_->embed(ra, tgt, map);
}

double FunctorDiagrams::max() const {
  return std::max({lax_assoc, lax_unit_l, lax_unit_r, colax_assoc,
                   colax_unit_l, colax_unit_r, frob_1, frob_2});
}

namespace {

// Shared driver: G is the functor on morphisms, Gobj on objects.
template <class Gmor, class Gobj, class Phi2, class Psi2>
FunctorDiagrams run_diagrams(const Engine& src, const Engine& dst, Gmor G,
                             Gobj Go, Phi2 phi2, Psi2 psi2, const Mor& phi0,
                             const Mor& psi0, const Obj& a, const Obj& b,
                             const Obj& c) {
  FunctorDiagrams r;
  Obj ga = Go(a), gb = Go(b), gc = Go(c);
  Obj ab = src.tensor(a, b), bc = src.tensor(b, c);
  Mor Galpha = G(src.assoc(a, b, c));
  Mor Galpha_inv = G(src.assoc_inv(a, b, c));

  Mor l1 = dst.compose({Galpha, phi2(a, bc), dst.tensor(dst.id(ga), phi2(b, c))});
  Mor r1 = dst.compose({phi2(ab, c), dst.tensor(phi2(a, b), dst.id(gc)),
                        dst.assoc(ga, gb, gc)});
  r.lax_assoc = dst.diff(l1, r1);

  Obj u = src.unit();
  Mor lu = dst.compose(phi2(u, a), dst.tensor(phi0, dst.id(ga)));
  r.lax_unit_l = dst.diff(lu, dst.coerce(dst.id(ga), lu.src, lu.tgt));
  Mor ru = dst.compose(phi2(a, u), dst.tensor(dst.id(ga), phi0));
  r.lax_unit_r = dst.diff(ru, dst.coerce(dst.id(ga), ru.src, ru.tgt));

  Mor l2 = dst.compose({dst.assoc(ga, gb, gc), dst.tensor(dst.id(ga), psi2(b, c)),
                        psi2(a, bc)});
  Mor r2 = dst.compose({dst.tensor(psi2(a, b), dst.id(gc)), psi2(ab, c), Galpha});
  r.colax_assoc = dst.diff(l2, r2);

  Mor lc = dst.compose(dst.tensor(psi0, dst.id(ga)), psi2(u, a));
  r.colax_unit_l = dst.diff(lc, dst.coerce(dst.id(ga), lc.src, lc.tgt));
  Mor rc = dst.compose(dst.tensor(dst.id(ga), psi0), psi2(a, u));
  r.colax_unit_r = dst.diff(rc, dst.coerce(dst.id(ga), rc.src, rc.tgt));

  Mor f1a = dst.compose({dst.tensor(phi2(a, b), dst.id(gc)), dst.assoc(ga, gb, gc),
                         dst.tensor(dst.id(ga), psi2(b, c))});
  Mor f1b = dst.compose({psi2(ab, c), Galpha, phi2(a, bc)});
  r.frob_1 = dst.diff(f1a, f1b);

  Mor f2a = dst.compose({dst.tensor(dst.id(ga), phi2(b, c)),
                         dst.assoc_inv(ga, gb, gc),
                         dst.tensor(psi2(a, b), dst.id(gc))});
  Mor f2b = dst.compose({psi2(a, bc), Galpha_inv, phi2(ab, c)});
  r.frob_2 = dst.diff(f2a, f2b);
  return r;
}

}  // namespace

FunctorDiagrams check_T_diagrams(const FunctorContext& ctx, const Obj& a,
                                 const Obj& b, const Obj& c) {
  return run_diagrams(
      ctx.P(), ctx.C(), [&](const Mor& f) { return ctx.T(f); },
      [&](const Obj& x) { return ctx.T(x); },
      [&](const Obj& x, const Obj& y) { return ctx.phi2T(x, y); },
      [&](const Obj& x, const Obj& y) { return ctx.psi2T(x, y); }, ctx.phi0T(),
      ctx.psi0T(), a, b, c);
}

FunctorDiagrams check_R_diagrams(const FunctorContext& ctx, const Obj& a,
                                 const Obj& b, const Obj& c) {
  return run_diagrams(
      ctx.C(), ctx.P(), [&](const Mor& f) { return ctx.R(f); },
      [&](const Obj& x) { return ctx.R(x); },
      [&](const Obj& x, const Obj& y) { return ctx.phi2R(x, y); },
      [&](const Obj& x, const Obj& y) { return ctx.psi2R(x, y); }, ctx.phi0R(),
      ctx.psi0R(), a, b, c);
}

}  // namespace mtc
