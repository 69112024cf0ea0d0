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

#include <cmath>
#include <map>
#include <mutex>

#include "mtc/category.hpp"

namespace mtc {

namespace {

const double kPi = std::acos(-1.0);

cplx phase(double frac) { return std::polar(1.0, kPi * frac); }

// Multiplicity-free builder: defaults every allowed 1x1 block to 1.
struct Builder {
  std::shared_ptr<Category> c = std::make_shared<Category>();

  Builder(std::string name, std::vector<std::string> labels,
          std::vector<int> dual) {
    c->name = std::move(name);
    c->rank = static_cast<int>(labels.size());
    c->labels = std::move(labels);
    c->dual = std::move(dual);
    c->N.assign(static_cast<size_t>(c->rank) * c->rank * c->rank, 0);
    for (int i = 0; i < c->rank; ++i) {
      c->N[c->idx3(0, i, i)] = 1;
      c->N[c->idx3(i, 0, i)] = 1;
    }
  }
  void fuse(int i, int j, int k) { c->N[c->idx3(i, j, k)] = 1; }
  void alloc() {
    const int r = c->rank;
    c->F.assign(static_cast<size_t>(r) * r * r * r, Mat());
    c->R.assign(static_cast<size_t>(r) * r * r, Mat());
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int x = 0; x < r; ++x)
          for (int d = 0; d < r; ++d) {
            auto n = c->left_basis(a, b, x, d).size();
            c->F[c->idx4(a, b, x, d)] = Mat::Ones(n, n);
          }
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int k = 0; k < r; ++k)
          c->R[c->idx3(a, b, k)] = Mat::Ones(c->n(b, a, k), c->n(a, b, k));
    c->theta.assign(r, 1.0);
  }
  void F(int a, int b, int x, int d, Mat m) { c->F[c->idx4(a, b, x, d)] = m; }
  void R(int a, int b, int k, cplx v) { c->R[c->idx3(a, b, k)](0, 0) = v; }
  CatPtr done(std::vector<cplx> dims) {
    c->dims_hint = std::move(dims);
    c->finalize();
    return c;
  }
};

CatPtr make_vec() {
  Builder b("vec", {"1"}, {0});
  b.alloc();
  return b.done({1.0});
}

// Z2 fusion rules with the non-trivial associator class: the only modular
// braided structure on Z2 fusion rules.
CatPtr make_vec_z2() {
  Builder b("vec_z2", {"1", "s"}, {0, 1});
  b.fuse(1, 1, 0);
  b.alloc();
  b.F(1, 1, 1, 1, Mat::Constant(1, 1, -1.0));
  b.R(1, 1, 0, cplx(0, 1));
  b.c->theta = {1.0, cplx(0, 1)};
  return b.done({1.0, 1.0});
}

CatPtr make_vec_z2_symmetric() {
  Builder b("vec_z2_symmetric", {"1", "g"}, {0, 1});
  b.fuse(1, 1, 0);
  b.alloc();
  return b.done({1.0, 1.0});
}

CatPtr make_fibonacci() {
  Builder b("fibonacci", {"1", "tau"}, {0, 1});
  b.fuse(1, 1, 0);
  b.fuse(1, 1, 1);
  b.alloc();
  const double phi = (1 + std::sqrt(5.0)) / 2;
  Mat f(2, 2);
  f << 1 / phi, 1 / std::sqrt(phi), 1 / std::sqrt(phi), -1 / phi;
  b.F(1, 1, 1, 1, f);
  b.R(1, 1, 0, phase(-4.0 / 5));
  b.R(1, 1, 1, phase(3.0 / 5));
  b.c->theta = {1.0, phase(4.0 / 5)};
  return b.done({1.0, phi});
}

CatPtr make_ising(bool broken) {
  Builder b(broken ? "ising-broken" : "ising", {"1", "sigma", "psi"},
            {0, 1, 2});
  b.fuse(1, 1, 0);
  b.fuse(1, 1, 2);
  b.fuse(1, 2, 1);
  b.fuse(2, 1, 1);
  b.fuse(2, 2, 0);
  b.alloc();
  const double h = 1 / std::sqrt(2.0);
  Mat f(2, 2);
  f << h, h, h, -h;
  b.F(1, 1, 1, 1, f);
  b.F(1, 2, 1, 2, Mat::Constant(1, 1, broken ? 1.0 : -1.0));
  b.F(2, 1, 2, 1, Mat::Constant(1, 1, -1.0));
  b.R(1, 1, 0, phase(-1.0 / 8));
  b.R(1, 1, 2, phase(3.0 / 8));
  b.R(1, 2, 1, cplx(0, -1));
  b.R(2, 1, 1, cplx(0, -1));
  b.R(2, 2, 0, -1.0);
  b.c->theta = {1.0, phase(1.0 / 8), -1.0};
  return b.done({1.0, std::sqrt(2.0), 1.0});
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"vec", "vec_z2", "vec_z2_symmetric", "fibonacci", "ising",
          "ising-broken"};
}

CatPtr fixture(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, CatPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  CatPtr c;
  if (name == "vec") c = make_vec();
  else if (name == "vec_z2") c = make_vec_z2();
  else if (name == "vec_z2_symmetric") c = make_vec_z2_symmetric();
  else if (name == "fibonacci") c = make_fibonacci();
  else if (name == "ising") c = make_ising(false);
  else if (name == "ising-broken") c = make_ising(true);
  else throw InputError("unknown fixture '" + name + "'");
  cache[name] = c;
  return c;
}

}  // namespace mtc
