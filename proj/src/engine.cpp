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

#include "mtc/engine.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mtc/linalg.hpp"

namespace mtc {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0x100000001b3ULL;
}

void index_slots(ObjNode& n, int rank) {
  n.copy.assign(n.labels.size(), 0);
  n.slots.assign(rank, {});
  for (size_t s = 0; s < n.labels.size(); ++s) {
    const int k = n.labels[s];
    n.copy[s] = static_cast<int>(n.slots[k].size());
    n.slots[k].push_back(static_cast<int>(s));
  }
}

void check_same_src_tgt(const Mor& a, const Mor& b) {
  if (!same_shape(a.src, b.src) || !same_shape(a.tgt, b.tgt))
    throw std::invalid_argument("morphism shapes differ");
}

}  // namespace

bool same_shape(const Obj& a, const Obj& b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->tensor != b->tensor) return false;
  if (!a->tensor) return a->labels == b->labels;
  return same_shape(a->left, b->left) && same_shape(a->right, b->right);
}

Mor operator+(const Mor& a, const Mor& b) {
  check_same_src_tgt(a, b);
  Mor r = a;
  for (size_t k = 0; k < r.blk.size(); ++k) r.blk[k] += b.blk[k];
  return r;
}

Mor operator-(const Mor& a, const Mor& b) {
  check_same_src_tgt(a, b);
  Mor r = a;
  for (size_t k = 0; k < r.blk.size(); ++k) r.blk[k] -= b.blk[k];
  return r;
}

Mor operator*(cplx c, const Mor& a) {
  Mor r = a;
  for (auto& m : r.blk) m *= c;
  return r;
}

Mor inverse(const Mor& f) {
  Mor r{f.tgt, f.src, {}};
  for (const auto& m : f.blk) {
    if (m.rows() != m.cols())
      throw std::invalid_argument("inverse of a non-square sector block");
    if (m.size() == 0) {
      r.blk.push_back(m);
      continue;
    }
    Eigen::FullPivLU<Mat> lu(m);
    if (!lu.isInvertible())
      throw std::invalid_argument("morphism is not invertible");
    r.blk.push_back(lu.inverse());
  }
  return r;
}

double norm_max(const Mor& f) {
  double m = 0;
  for (const auto& b : f.blk) m = std::max(m, max_abs(b));
  return m;
}

Engine::Engine(CatPtr cat) : cat_(std::move(cat)) {
  const int r = rank();
  kappa_.assign(r, 1.0);
  kappa_r_.assign(r, 1.0);
  beta_r_.assign(r, 1.0);
  // Left duality: b_i fixed, d_i scaled so that the first zig-zag holds.
  for (int i = 0; i < r; ++i) {
    Obj u = simple(i);
    Mor z = compose(tensor(id(u), ev(u)), tensor(coev(u), id(u)));
    kappa_[i] = 1.0 / value(z);
  }
  // Right duality from the ribbon structure.
  for (int i = 0; i < r; ++i) {
    Obj u = simple(i), ud = dual(u);
    Mor bt = compose({tensor(id(ud), twist(u)), braid(u, ud), coev(u)});
    Mor dt = compose({ev(u), braid(u, ud), tensor(twist(u), id(ud))});
    beta_r_[i] = bt.blk[0](0, 0);
    kappa_r_[i] = dt.blk[0](0, 0);
  }
  dims_.resize(r);
  for (int i = 0; i < r; ++i) dims_[i] = kappa_[i] * beta_r_[i];
}

Obj Engine::simple(int k) const {
  if (k < 0 || k >= rank()) throw std::out_of_range("label out of range");
  return atom({k});
}

Obj Engine::atom(const std::vector<int>& labels) const {
  auto n = std::make_shared<ObjNode>();
  n->labels = labels;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int l : labels) {
    if (l < 0 || l >= rank()) throw std::out_of_range("label out of range");
    h = mix(h, static_cast<std::uint64_t>(l) + 1);
  }
  n->hash = mix(h, 0xa70a);
  index_slots(*n, rank());
  return n;
}

Obj Engine::tensor(const Obj& x, const Obj& y) const {
  auto n = std::make_shared<ObjNode>();
  n->tensor = true;
  n->left = x;
  n->right = y;
  const Category& c = cat();
  for (int a = 0; a < x->size(); ++a)
    for (int b = 0; b < y->size(); ++b) {
      const int la = x->labels[a], lb = y->labels[b];
      for (int k = 0; k < rank(); ++k)
        for (int mu = 0; mu < c.n(la, lb, k); ++mu) {
          n->labels.push_back(k);
          n->parts.push_back({a, b, mu});
        }
    }
  n->hash = mix(mix(x->hash, 0x7e450), y->hash);
  index_slots(*n, rank());
  return n;
}

Obj Engine::concat(const std::vector<Obj>& parts) const {
  std::vector<int> labels;
  for (auto& p : parts)
    labels.insert(labels.end(), p->labels.begin(), p->labels.end());
  return atom(labels);
}

Obj Engine::dual(const Obj& x) const {
  std::vector<int> labels;
  for (int l : x->labels) labels.push_back(cat().dual[l]);
  return atom(labels);
}

std::vector<int> Engine::multiplicities(const Obj& x) const {
  std::vector<int> m(rank());
  for (int k = 0; k < rank(); ++k) m[k] = x->count(k);
  return m;
}

Mor Engine::zero(const Obj& src, const Obj& tgt) const {
  Mor f{src, tgt, {}};
  for (int k = 0; k < rank(); ++k)
    f.blk.push_back(Mat::Zero(tgt->count(k), src->count(k)));
  return f;
}

Mor Engine::id(const Obj& x) const {
  Mor f{x, x, {}};
  for (int k = 0; k < rank(); ++k)
    f.blk.push_back(Mat::Identity(x->count(k), x->count(k)));
  return f;
}

Mor Engine::embed(const Obj& src, const Obj& tgt,
                  const std::vector<int>& map) const {
  Mor f = zero(src, tgt);
  for (int s = 0; s < src->size(); ++s) {
    const int t = map[s];
    const int k = src->labels[s];
    if (tgt->labels[t] != k) throw std::invalid_argument("embed label mismatch");
    f.blk[k](tgt->copy[t], src->copy[s]) = 1.0;
  }
  return f;
}

Mor Engine::project(const Obj& src, const Obj& tgt,
                    const std::vector<int>& map) const {
  Mor f = zero(src, tgt);
  for (int t = 0; t < tgt->size(); ++t) {
    const int s = map[t];
    const int k = tgt->labels[t];
    if (src->labels[s] != k)
      throw std::invalid_argument("project label mismatch");
    f.blk[k](tgt->copy[t], src->copy[s]) = 1.0;
  }
  return f;
}

Mor Engine::reshape(const Obj& from, const Obj& to) const {
  if (from->labels != to->labels)
    throw std::invalid_argument("reshape between objects with different slots");
  Mor f = id(from);
  f.tgt = to;
  return f;
}

Mor Engine::incl(const std::vector<Obj>& parts, size_t n) const {
  Obj c = concat(parts);
  int off = 0;
  for (size_t i = 0; i < n; ++i) off += parts[i]->size();
  std::vector<int> map(parts[n]->size());
  for (int s = 0; s < parts[n]->size(); ++s) map[s] = off + s;
  return embed(parts[n], c, map);
}

Mor Engine::proj(const std::vector<Obj>& parts, size_t n) const {
  Obj c = concat(parts);
  int off = 0;
  for (size_t i = 0; i < n; ++i) off += parts[i]->size();
  std::vector<int> map(parts[n]->size());
  for (int s = 0; s < parts[n]->size(); ++s) map[s] = off + s;
  return project(c, parts[n], map);
}

Mor Engine::slot_incl(const Obj& x, int s) const {
  return embed(simple(x->labels[s]), x, {s});
}

Mor Engine::slot_proj(const Obj& x, int s) const {
  return project(x, simple(x->labels[s]), {s});
}

void Engine::accumulate(Mor& big, const Mor& small,
                        const std::vector<int>& srcmap,
                        const std::vector<int>& tgtmap) const {
  for (int k = 0; k < rank(); ++k) {
    const Mat& b = small.blk[k];
    if (b.size() == 0) continue;
    const auto& ts = small.tgt->slots[k];
    const auto& ss = small.src->slots[k];
    for (size_t r = 0; r < ts.size(); ++r) {
      const int R = big.tgt->copy[tgtmap[ts[r]]];
      for (size_t c = 0; c < ss.size(); ++c)
        big.blk[k](R, big.src->copy[srcmap[ss[c]]]) += b(r, c);
    }
  }
}

std::vector<int> Engine::tensor_slot_map(const Obj& small, const Obj& big,
                                         const std::vector<int>& xmap,
                                         const std::vector<int>& ymap) const {
  const int ny = small->right->size(), nY = big->right->size();
  std::vector<int> sstart(static_cast<size_t>(small->left->size()) * ny, -1);
  std::vector<int> bstart(static_cast<size_t>(big->left->size()) * nY, -1);
  for (int s = 0; s < small->size(); ++s) {
    auto& p = small->parts[s];
    if (sstart[p.l * ny + p.r] < 0) sstart[p.l * ny + p.r] = s;
  }
  for (int s = 0; s < big->size(); ++s) {
    auto& p = big->parts[s];
    if (bstart[p.l * nY + p.r] < 0) bstart[p.l * nY + p.r] = s;
  }
  std::vector<int> out(small->size());
  for (int s = 0; s < small->size(); ++s) {
    auto& p = small->parts[s];
    const int b = bstart[xmap[p.l] * nY + ymap[p.r]];
    out[s] = b + (s - sstart[p.l * ny + p.r]);
    if (b < 0 || big->labels[out[s]] != small->labels[s])
      throw std::invalid_argument("tensor slot maps are inconsistent");
  }
  return out;
}

Mor Engine::scalar(cplx c) const { return c * id(unit()); }

cplx Engine::value(const Mor& f) const {
  for (int k = 0; k < rank(); ++k)
    if (f.blk[k].rows() == 1 && f.blk[k].cols() == 1) return f.blk[k](0, 0);
  throw std::invalid_argument("value() needs a morphism between simples");
}

void Engine::leaves(const Obj& x, std::vector<const ObjNode*>& out) const {
  if (x->tensor) {
    leaves(x->left, out);
    leaves(x->right, out);
  } else if (!x->is_unit()) {
    out.push_back(x.get());
  }
}

bool Engine::leaves_match(const Obj& a, const Obj& b) const {
  std::vector<const ObjNode*> la, lb;
  leaves(a, la);
  leaves(b, lb);
  if (la.size() != lb.size()) return false;
  for (size_t i = 0; i < la.size(); ++i)
    if (la[i]->labels != lb[i]->labels) return false;
  return true;
}

Mor Engine::ln_merge(const Obj& p, const Obj& q, Obj* out) const {
  Obj pq = tensor(p, q);
  if (q->is_unit()) {
    *out = p;
    return reshape(pq, p);
  }
  if (p->is_unit()) {
    *out = q;
    return reshape(pq, q);
  }
  if (!q->tensor) {
    *out = pq;
    return id(pq);
  }
  // p (x) (q1 (x) q2)  ->  (p (x) q1) (x) q2  ->  LN(p q1) (x) q2
  Mor a = assoc(p, q->left, q->right);
  Obj inner;
  Mor m = ln_merge(p, q->left, &inner);
  Mor t = tensor(m, id(q->right));
  *out = t.tgt;
  Mor r{pq, *out, {}};
  for (int k = 0; k < rank(); ++k) r.blk.push_back(t.blk[k] * a.blk[k]);
  return r;
}

Mor Engine::to_left_nested(const Obj& x, Obj* out) const {
  if (!x->tensor) {
    *out = x;
    return id(x);
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ln_cache_.find(x->hash);
    if (it != ln_cache_.end())
      for (auto& [o, m] : it->second)
        if (same_shape(o, x)) {
          *out = m.tgt;
          Mor r = m;
          r.src = x;
          return r;
        }
  }
  Obj l, r;
  Mor fl = to_left_nested(x->left, &l);
  Mor fr = to_left_nested(x->right, &r);
  Mor t = tensor(fl, fr);
  Mor m = ln_merge(l, r, out);
  Mor res{x, *out, {}};
  for (int k = 0; k < rank(); ++k) res.blk.push_back(m.blk[k] * t.blk[k]);
  std::lock_guard<std::mutex> lock(mu_);
  ln_cache_[x->hash].push_back({x, res});
  return res;
}

Mor Engine::reassociate(const Obj& from, const Obj& to) const {
  if (same_shape(from, to)) return id(from);
  if (!leaves_match(from, to))
    throw std::invalid_argument("cannot coerce " + describe(from) + " to " +
                                describe(to));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = reassoc_cache_.find({from->hash, to->hash});
    if (it != reassoc_cache_.end() && same_shape(it->second.src, from) &&
        same_shape(it->second.tgt, to)) {
      Mor r = it->second;
      r.src = from;
      r.tgt = to;
      return r;
    }
  }
  Obj l1, l2;
  Mor a = to_left_nested(from, &l1);
  Mor b = to_left_nested(to, &l2);
  Mor binv = inverse(b);
  Mor res{from, to, {}};
  for (int k = 0; k < rank(); ++k) res.blk.push_back(binv.blk[k] * a.blk[k]);
  std::lock_guard<std::mutex> lock(mu_);
  reassoc_cache_[{from->hash, to->hash}] = res;
  return res;
}

Mor Engine::compose(const Mor& g, const Mor& f) const {
  Mor r{f.src, g.tgt, {}};
  r.blk.reserve(rank());
  if (same_shape(f.tgt, g.src)) {
    for (int k = 0; k < rank(); ++k) r.blk.push_back(g.blk[k] * f.blk[k]);
    return r;
  }
  Mor c = reassociate(f.tgt, g.src);
  for (int k = 0; k < rank(); ++k)
    r.blk.push_back(g.blk[k] * (c.blk[k] * f.blk[k]));
  return r;
}

Mor Engine::compose(std::initializer_list<Mor> chain) const {
  if (chain.size() == 0) throw std::invalid_argument("empty composition");
  auto it = std::rbegin(chain);
  Mor acc = *it;
  for (++it; it != std::rend(chain); ++it) acc = compose(*it, acc);
  return acc;
}

Mor Engine::tensor(const Mor& f, const Mor& g) const {
  Obj src = tensor(f.src, g.src), tgt = tensor(f.tgt, g.tgt);
  Mor r = zero(src, tgt);
  const int R = rank();
  for (int k = 0; k < R; ++k) {
    const auto& ss = src->slots[k];
    const auto& ts = tgt->slots[k];
    if (ss.empty() || ts.empty()) continue;
    // group source slots by (label a, label b, mu)
    std::unordered_map<std::uint64_t, std::vector<int>> groups;
    for (int s : ss) {
      const auto& p = src->parts[s];
      std::uint64_t key = ((static_cast<std::uint64_t>(f.src->labels[p.l]) *
                                R + g.src->labels[p.r]) << 16) + p.mu;
      groups[key].push_back(s);
    }
    for (int t : ts) {
      const auto& q = tgt->parts[t];
      const int la = f.tgt->labels[q.l], lb = g.tgt->labels[q.r];
      std::uint64_t key =
          ((static_cast<std::uint64_t>(la) * R + lb) << 16) + q.mu;
      auto it = groups.find(key);
      if (it == groups.end()) continue;
      const Mat& fa = f.blk[la];
      const Mat& gb = g.blk[lb];
      for (int s : it->second) {
        const auto& p = src->parts[s];
        r.blk[k](tgt->copy[t], src->copy[s]) =
            fa(f.tgt->copy[q.l], f.src->copy[p.l]) *
            gb(g.tgt->copy[q.r], g.src->copy[p.r]);
      }
    }
  }
  return r;
}

Mor Engine::coerce(const Mor& f, const Obj& src, const Obj& tgt) const {
  Mor r = f;
  if (!same_shape(r.src, src)) r = compose(r, reassociate(src, r.src));
  if (!same_shape(r.tgt, tgt)) r = compose(reassociate(r.tgt, tgt), r);
  return r;
}

Mor Engine::add(const Mor& f, const Mor& g) const {
  return f + coerce(g, f.src, f.tgt);
}

double Engine::diff(const Mor& f, const Mor& g) const {
  return norm_max(f - coerce(g, f.src, f.tgt));
}

Mor Engine::assoc(const Obj& x, const Obj& y, const Obj& z) const {
  Obj yz = tensor(y, z), xy = tensor(x, y);
  Obj src = tensor(x, yz), tgt = tensor(xy, z);
  Mor r = zero(src, tgt);
  const Category& c = cat();
  const std::uint64_t ny = y->size(), nz = z->size();
  for (int l = 0; l < rank(); ++l) {
    if (src->slots[l].empty()) continue;
    std::unordered_map<std::uint64_t, std::vector<int>> by_leaf;
    for (int t : tgt->slots[l]) {
      const auto& q = tgt->parts[t];
      const auto& qq = xy->parts[q.l];
      by_leaf[(qq.l * ny + qq.r) * nz + q.r].push_back(t);
    }
    for (int s : src->slots[l]) {
      const auto& p = src->parts[s];
      const auto& pp = yz->parts[p.r];
      const int xs = p.l, ys = pp.l, zs = pp.r;
      const int a = x->labels[xs], b = y->labels[ys], d = z->labels[zs];
      const int nlab = yz->labels[p.r];
      const int col = c.right_pos(a, b, d, l, nlab, pp.mu, p.mu);
      const Mat& M = c.assoc_fwd[c.idx4(a, b, d, l)];
      auto it = by_leaf.find((xs * ny + ys) * nz + zs);
      if (it == by_leaf.end()) continue;
      for (int t : it->second) {
        const auto& q = tgt->parts[t];
        const auto& qq = xy->parts[q.l];
        const int row = c.left_pos(a, b, d, l, xy->labels[q.l], qq.mu, q.mu);
        r.blk[l](tgt->copy[t], src->copy[s]) = M(row, col);
      }
    }
  }
  return r;
}

Mor Engine::assoc_inv(const Obj& x, const Obj& y, const Obj& z) const {
  Obj yz = tensor(y, z), xy = tensor(x, y);
  Obj src = tensor(xy, z), tgt = tensor(x, yz);
  Mor r = zero(src, tgt);
  const Category& c = cat();
  const std::uint64_t ny = y->size(), nz = z->size();
  for (int l = 0; l < rank(); ++l) {
    if (src->slots[l].empty()) continue;
    std::unordered_map<std::uint64_t, std::vector<int>> by_leaf;
    for (int t : tgt->slots[l]) {
      const auto& q = tgt->parts[t];
      const auto& qq = yz->parts[q.r];
      by_leaf[(q.l * ny + qq.l) * nz + qq.r].push_back(t);
    }
    for (int s : src->slots[l]) {
      const auto& p = src->parts[s];
      const auto& pp = xy->parts[p.l];
      const int xs = pp.l, ys = pp.r, zs = p.r;
      const int a = x->labels[xs], b = y->labels[ys], d = z->labels[zs];
      const int col = c.left_pos(a, b, d, l, xy->labels[p.l], pp.mu, p.mu);
      const Mat& M = c.assoc_bwd[c.idx4(a, b, d, l)];
      auto it = by_leaf.find((xs * ny + ys) * nz + zs);
      if (it == by_leaf.end()) continue;
      for (int t : it->second) {
        const auto& q = tgt->parts[t];
        const auto& qq = yz->parts[q.r];
        const int row = c.right_pos(a, b, d, l, yz->labels[q.r], qq.mu, q.mu);
        r.blk[l](tgt->copy[t], src->copy[s]) = M(row, col);
      }
    }
  }
  return r;
}

Mor Engine::braid(const Obj& x, const Obj& y) const {
  Obj src = tensor(x, y), tgt = tensor(y, x);
  Mor r = zero(src, tgt);
  const Category& c = cat();
  const std::uint64_t nx = x->size();
  for (int k = 0; k < rank(); ++k) {
    if (src->slots[k].empty()) continue;
    std::unordered_map<std::uint64_t, std::vector<int>> by_pair;
    for (int t : tgt->slots[k]) {
      const auto& q = tgt->parts[t];
      by_pair[q.l * nx + q.r].push_back(t);  // (y slot, x slot)
    }
    for (int s : src->slots[k]) {
      const auto& p = src->parts[s];
      const Mat& Rm = c.Rblock(x->labels[p.l], y->labels[p.r], k);
      for (int t : by_pair[p.r * nx + p.l])
        r.blk[k](tgt->copy[t], src->copy[s]) = Rm(tgt->parts[t].mu, p.mu);
    }
  }
  return r;
}

Mor Engine::braid_inv(const Obj& x, const Obj& y) const {
  // inverse of c_{X,Y}: Y (x) X -> X (x) Y
  Obj src = tensor(y, x), tgt = tensor(x, y);
  Mor r = zero(src, tgt);
  const Category& c = cat();
  const std::uint64_t ny = y->size();
  for (int k = 0; k < rank(); ++k) {
    if (src->slots[k].empty()) continue;
    std::unordered_map<std::uint64_t, std::vector<int>> by_pair;
    for (int t : tgt->slots[k]) {
      const auto& q = tgt->parts[t];
      by_pair[q.l * ny + q.r].push_back(t);  // (x slot, y slot)
    }
    for (int s : src->slots[k]) {
      const auto& p = src->parts[s];  // (y slot, x slot)
      const Mat& Ri = c.Rinv[c.idx3(x->labels[p.r], y->labels[p.l], k)];
      for (int t : by_pair[p.r * ny + p.l])
        r.blk[k](tgt->copy[t], src->copy[s]) = Ri(tgt->parts[t].mu, p.mu);
    }
  }
  return r;
}

Mor Engine::twist(const Obj& x) const {
  Mor f = id(x);
  for (int k = 0; k < rank(); ++k) f.blk[k] *= cat().theta[k];
  return f;
}

Mor Engine::twist_inv(const Obj& x) const {
  Mor f = id(x);
  for (int k = 0; k < rank(); ++k) f.blk[k] /= cat().theta[k];
  return f;
}

Mor Engine::ev(const Obj& x) const {
  Obj src = tensor(dual(x), x);
  Mor f = zero(src, unit());
  for (int s : src->slots[0]) {
    const auto& p = src->parts[s];
    if (p.l == p.r) f.blk[0](0, src->copy[s]) = kappa_[x->labels[p.r]];
  }
  return f;
}

Mor Engine::coev(const Obj& x) const {
  Obj tgt = tensor(x, dual(x));
  Mor f = zero(unit(), tgt);
  for (int s : tgt->slots[0]) {
    const auto& p = tgt->parts[s];
    if (p.l == p.r) f.blk[0](tgt->copy[s], 0) = 1.0;
  }
  return f;
}

Mor Engine::ev_r(const Obj& x) const {
  Obj src = tensor(x, dual(x));
  Mor f = zero(src, unit());
  for (int s : src->slots[0]) {
    const auto& p = src->parts[s];
    if (p.l == p.r) f.blk[0](0, src->copy[s]) = kappa_r_[x->labels[p.l]];
  }
  return f;
}

Mor Engine::coev_r(const Obj& x) const {
  Obj tgt = tensor(dual(x), x);
  Mor f = zero(unit(), tgt);
  for (int s : tgt->slots[0]) {
    const auto& p = tgt->parts[s];
    if (p.l == p.r) f.blk[0](tgt->copy[s], 0) = beta_r_[x->labels[p.r]];
  }
  return f;
}

cplx Engine::trace(const Mor& f) const {
  Mor g = same_shape(f.src, f.tgt) ? f : coerce(f, f.src, f.src);
  cplx t = 0;
  for (int k = 0; k < rank(); ++k)
    if (g.blk[k].size()) t += dims_[k] * g.blk[k].trace();
  return t;
}

cplx Engine::trace_diagram(const Mor& f) const {
  Obj x = f.src;
  Mor g = coerce(f, x, x);
  Mor v = compose({ev_r(x), tensor(g, id(dual(x))), coev(x)});
  return v.blk[0](0, 0);
}

Mor Engine::ptrace_right(const Mor& f) const {
  if (!f.src->tensor || !f.tgt->tensor)
    throw std::invalid_argument("partial trace needs tensor shapes");
  Obj x = f.src->left, y = f.tgt->left, z = f.src->right;
  if (!same_shape(z, f.tgt->right))
    throw std::invalid_argument("partial trace over mismatched factors");
  Mor m = compose({tensor(id(y), ev_r(z)), tensor(f, id(dual(z))),
                   tensor(id(x), coev(z))});
  return coerce(m, x, y);
}

Mor Engine::ptrace_left(const Mor& f) const {
  if (!f.src->tensor || !f.tgt->tensor)
    throw std::invalid_argument("partial trace needs tensor shapes");
  Obj z = f.src->left, x = f.src->right, y = f.tgt->right;
  if (!same_shape(z, f.tgt->left))
    throw std::invalid_argument("partial trace over mismatched factors");
  Mor m = compose({tensor(ev(z), id(y)), tensor(id(dual(z)), f),
                   tensor(coev_r(z), id(x))});
  return coerce(m, x, y);
}

Mor Engine::random(const Obj& src, const Obj& tgt, std::uint64_t seed) const {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Mor f = zero(src, tgt);
  for (auto& b : f.blk)
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        double re = nd(gen);
        double im = nd(gen);
        b(i, j) = cplx(re, im);
      }
  return f;
}

std::string Engine::describe(const Obj& x) const {
  if (x->tensor)
    return "(" + describe(x->left) + "*" + describe(x->right) + ")";
  if (x->labels.size() == 1) return cat().labels[x->labels[0]];
  std::string s = "[";
  for (size_t i = 0; i < x->labels.size(); ++i) {
    if (i) s += ",";
    s += cat().labels[x->labels[i]];
  }
  return s + "]";
}

}  // namespace mtc
