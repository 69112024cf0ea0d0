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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mtc/category.hpp"

namespace mtc {

struct ObjNode;
using Obj = std::shared_ptr<const ObjNode>;

/**
 * An object of a skeletal category, realized as an ordered list of simple
 * "slots". Each slot is one copy of a simple U_k; the copies of U_k in slot
 * order give the basis of Hom(U_k, X). The shape tree records how the object
 * was built so that composition can insert associators automatically.
 *
 * For a tensor node the slots are enumerated as (left slot, right slot,
 * fusion channel k ascending, vertex multiplicity).
 */
struct ObjNode {
  struct Part {
    int l, r, mu;
  };
  bool tensor = false;
  std::vector<int> labels;
  Obj left, right;
  std::vector<Part> parts;
  std::vector<int> copy;
  std::vector<std::vector<int>> slots;
  std::uint64_t hash = 0;

  int size() const { return static_cast<int>(labels.size()); }
  int count(int k) const { return static_cast<int>(slots[k].size()); }
  bool is_unit() const {
    return !tensor && labels.size() == 1 && labels[0] == 0;
  }
};

bool same_shape(const Obj& a, const Obj& b);

/// Morphism in sector form: blk[k] maps Hom(U_k, src) to Hom(U_k, tgt).
struct Mor {
  Obj src, tgt;
  std::vector<Mat> blk;
};

Mor operator+(const Mor& a, const Mor& b);
Mor operator-(const Mor& a, const Mor& b);
Mor operator*(cplx c, const Mor& a);
Mor inverse(const Mor& f);
/// Max-abs entry over all blocks.
double norm_max(const Mor& f);

class Engine {
 public:
  explicit Engine(CatPtr cat);

  const Category& cat() const { return *cat_; }
  const CatPtr& cat_ptr() const { return cat_; }
  int rank() const { return cat_->rank; }
  double tol() const { return cat_->tolerance; }
  const std::vector<cplx>& dims() const { return dims_; }

  // objects
  Obj unit() const { return simple(0); }
  Obj simple(int k) const;
  Obj atom(const std::vector<int>& labels) const;
  Obj tensor(const Obj& x, const Obj& y) const;
  Obj concat(const std::vector<Obj>& parts) const;
  Obj flat(const Obj& x) const { return atom(x->labels); }
  Obj dual(const Obj& x) const;
  Obj zero_obj() const { return atom({}); }
  /// Multiplicity vector over simple labels.
  std::vector<int> multiplicities(const Obj& x) const;

  // basic morphisms
  Mor id(const Obj& x) const;
  Mor zero(const Obj& src, const Obj& tgt) const;
  /// Sends slot s of src to slot map[s] of tgt with coefficient 1.
  Mor embed(const Obj& src, const Obj& tgt, const std::vector<int>& map) const;
  /// Transpose of embed.
  Mor project(const Obj& src, const Obj& tgt,
              const std::vector<int>& map) const;
  /// Identity on slots between two objects with equal slot labels.
  Mor reshape(const Obj& from, const Obj& to) const;
  Mor incl(const std::vector<Obj>& parts, size_t n) const;
  Mor proj(const std::vector<Obj>& parts, size_t n) const;
  Mor slot_incl(const Obj& x, int s) const;
  Mor slot_proj(const Obj& x, int s) const;
  Mor scalar(cplx c) const;
  /// Adds small into big, sending slot s of small.src to srcmap[s] of big.src
  /// and slot t of small.tgt to tgtmap[t] of big.tgt.
  void accumulate(Mor& big, const Mor& small, const std::vector<int>& srcmap,
                  const std::vector<int>& tgtmap) const;
  /// Slot map small X(x)Y -> big X'(x)Y' induced by factor slot maps.
  std::vector<int> tensor_slot_map(const Obj& small, const Obj& big,
                                   const std::vector<int>& xmap,
                                   const std::vector<int>& ymap) const;
  /// Value of an endomorphism of the unit (or of a simple).
  cplx value(const Mor& f) const;

  // composition with automatic coercion
  Mor compose(const Mor& g, const Mor& f) const;
  Mor compose(std::initializer_list<Mor> chain) const;
  Mor tensor(const Mor& f, const Mor& g) const;
  Mor add(const Mor& f, const Mor& g) const;
  /// Coerce f to the given source/target shapes.
  Mor coerce(const Mor& f, const Obj& src, const Obj& tgt) const;
  double diff(const Mor& f, const Mor& g) const;
  bool equal(const Mor& f, const Mor& g) const {
    return diff(f, g) < tol_check();
  }
  double tol_check() const { return 1e-9; }

  // coherence
  Mor assoc(const Obj& x, const Obj& y, const Obj& z) const;
  Mor assoc_inv(const Obj& x, const Obj& y, const Obj& z) const;
  Mor reassociate(const Obj& from, const Obj& to) const;
  bool leaves_match(const Obj& a, const Obj& b) const;

  // braiding, twist, duality
  Mor braid(const Obj& x, const Obj& y) const;
  Mor braid_inv(const Obj& x, const Obj& y) const;
  Mor twist(const Obj& x) const;
  Mor twist_inv(const Obj& x) const;
  Mor ev(const Obj& x) const;       // d_X : X^v (x) X -> 1
  Mor coev(const Obj& x) const;     // b_X : 1 -> X (x) X^v
  Mor ev_r(const Obj& x) const;     // d~_X : X (x) X^v -> 1
  Mor coev_r(const Obj& x) const;   // b~_X : 1 -> X^v (x) X

  cplx trace(const Mor& f) const;
  cplx trace_diagram(const Mor& f) const;
  /// f : X (x) Z -> Y (x) Z  gives X -> Y.
  Mor ptrace_right(const Mor& f) const;
  /// f : Z (x) X -> Z (x) Y  gives X -> Y.
  Mor ptrace_left(const Mor& f) const;

  Mor random(const Obj& src, const Obj& tgt, std::uint64_t seed) const;

  std::string describe(const Obj& x) const;

 private:
  Mor to_left_nested(const Obj& x, Obj* out) const;
  Mor ln_merge(const Obj& p, const Obj& q, Obj* out) const;
  void leaves(const Obj& x, std::vector<const ObjNode*>& out) const;

  CatPtr cat_;
  std::vector<cplx> dims_;
  std::vector<cplx> kappa_, kappa_r_, beta_r_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::uint64_t, std::uint64_t>, Mor> reassoc_cache_;
  mutable std::map<std::uint64_t, std::vector<std::pair<Obj, Mor>>> ln_cache_;
};

/// Parenthesized tensor words over simple labels with optional dual markers.
struct Word {
  enum Kind { kEmpty, kLeaf, kTensor } kind = kEmpty;
  int label = 0;
  bool dual = false;
  std::shared_ptr<Word> l, r;
};

/// Grammar: word := '1' | name | name'^' | '(' word '*' word ')' ;
/// sum := word ('+' word)*. Names are category labels or indices.
Word parse_word(const Category& cat, const std::string& text);
std::vector<Word> parse_sum(const Category& cat, const std::string& text);
Obj realize(const Engine& e, const Word& w);
Obj realize_sum(const Engine& e, const std::vector<Word>& ws);
std::vector<int> word_leaves(const Category& cat, const Word& w);

struct FusionTree {
  std::vector<int> internal;  // labels after each fusion step
  std::vector<int> mult;      // vertex multiplicity indices
};

/// Left-nested splitting basis of Hom(U_k, word).
std::vector<FusionTree> splitting(const Engine& e, const Word& w, int k);
/// Columns express the left-nested basis in the basis of realize(w).
Mat splitting_transport(const Engine& e, const Word& w, int k);

}  // namespace mtc
