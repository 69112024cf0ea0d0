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

#include "mtc/category.hpp"
#include "mtc/linalg.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace mtc {

using json = nlohmann::json;

std::vector<Tree3> Category::left_basis(int a, int b, int c, int d) const {
  std::vector<Tree3> out;
  for (int m = 0; m < rank; ++m)
    for (int x = 0; x < n(a, b, m); ++x)
      for (int y = 0; y < n(m, c, d); ++y) out.push_back({m, x, y});
  return out;
}

std::vector<Tree3> Category::right_basis(int a, int b, int c, int d) const {
  std::vector<Tree3> out;
  for (int m = 0; m < rank; ++m)
    for (int x = 0; x < n(b, c, m); ++x)
      for (int y = 0; y < n(a, m, d); ++y) out.push_back({m, x, y});
  return out;
}

int Category::find_label(const std::string& s) const {
  for (int i = 0; i < rank; ++i)
    if (labels[i] == s) return i;
  // numeric fallback
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size() && v >= 0 && v < rank) return v;
  } catch (...) {
  }
  return -1;
}

int Category::left_pos(int a, int b, int c, int d, int m, int x,
                       int y) const {
  const auto& bs = lbasis[idx4(a, b, c, d)];
  for (size_t i = 0; i < bs.size(); ++i)
    if (bs[i].mid == m && bs[i].v1 == x && bs[i].v2 == y)
      return static_cast<int>(i);
  return -1;
}

int Category::right_pos(int a, int b, int c, int d, int m, int x,
                        int y) const {
  const auto& bs = rbasis[idx4(a, b, c, d)];
  for (size_t i = 0; i < bs.size(); ++i)
    if (bs[i].mid == m && bs[i].v1 == x && bs[i].v2 == y)
      return static_cast<int>(i);
  return -1;
}

void Category::finalize() {
  const size_t r4 = static_cast<size_t>(rank) * rank * rank * rank;
  assoc_fwd.assign(r4, Mat());
  assoc_bwd.assign(r4, Mat());
  lbasis.assign(r4, {});
  rbasis.assign(r4, {});
  Rinv.assign(R.size(), Mat());
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b)
      for (int k = 0; k < rank; ++k) {
        const Mat& m = R[idx3(a, b, k)];
        if (m.size() == 0) {
          Rinv[idx3(a, b, k)] = Mat::Zero(m.cols(), m.rows());
          continue;
        }
        Eigen::FullPivLU<Mat> lu(m);
        if (m.rows() != m.cols() || !lu.isInvertible())
          throw InputError("singular R block");
        Rinv[idx3(a, b, k)] = lu.inverse();
      }
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b)
      for (int c = 0; c < rank; ++c)
        for (int d = 0; d < rank; ++d) {
          lbasis[idx4(a, b, c, d)] = left_basis(a, b, c, d);
          rbasis[idx4(a, b, c, d)] = right_basis(a, b, c, d);
          const Mat& f = F[idx4(a, b, c, d)];
          if (f.size() == 0) {
            assoc_fwd[idx4(a, b, c, d)] = f;
            assoc_bwd[idx4(a, b, c, d)] = f;
            continue;
          }
          // alpha maps right trees to left trees: M = (F^{-1})^T.
          Eigen::FullPivLU<Mat> lu(f);
          if (!lu.isInvertible())
            throw InputError("singular F block at (" + std::to_string(a) +
                             "," + std::to_string(b) + "," +
                             std::to_string(c) + "," + std::to_string(d) +
                             ")");
          assoc_fwd[idx4(a, b, c, d)] = lu.inverse().transpose();
          assoc_bwd[idx4(a, b, c, d)] = f.transpose();
        }
}

namespace {

cplx read_cplx(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number())
    throw InputError("complex numbers must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json write_cplx(cplx z) { return json::array({z.real(), z.imag()}); }

int read_index(const json& j, int bound, const char* what) {
  if (!j.is_number_integer())
    throw InputError(std::string("non-integer index in ") + what);
  int v = j.get<int>();
  if (v < 0 || v >= bound)
    throw InputError(std::string("index out of range in ") + what);
  return v;
}

// Allocate F/R blocks from N, defaulting unspecified 1x1 blocks to 1.
void allocate_blocks(Category& c, std::vector<char>& fset,
                     std::vector<char>& rset) {
  const int r = c.rank;
  c.F.assign(static_cast<size_t>(r) * r * r * r, Mat());
  c.R.assign(static_cast<size_t>(r) * r * r, Mat());
  fset.assign(c.F.size(), 0);
  rset.assign(c.R.size(), 0);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int cc = 0; cc < r; ++cc)
        for (int d = 0; d < r; ++d) {
          size_t dim = c.left_basis(a, b, cc, d).size();
          size_t dr = c.right_basis(a, b, cc, d).size();
          if (dim != dr)
            throw InputError("fusion rules are not associative");
          c.F[c.idx4(a, b, cc, d)] = Mat::Zero(dim, dim);
        }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int k = 0; k < r; ++k)
        c.R[c.idx3(a, b, k)] = Mat::Zero(c.n(b, a, k), c.n(a, b, k));
}

void default_unset(Category& c, const std::vector<char>& fset,
                   const std::vector<char>& rset) {
  for (size_t i = 0; i < c.F.size(); ++i)
    if (!fset[i] && c.F[i].rows() == 1) c.F[i](0, 0) = 1.0;
  for (size_t i = 0; i < c.R.size(); ++i)
    if (!rset[i] && c.R[i].rows() == 1 && c.R[i].cols() == 1)
      c.R[i](0, 0) = 1.0;
}

int tree_pos(const std::vector<Tree3>& basis, int m, int x, int y) {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].mid == m && basis[i].v1 == x && basis[i].v2 == y)
      return static_cast<int>(i);
  return -1;
}

}  // namespace

CatPtr load_category_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed category document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("category document must be an object");
  auto c = std::make_shared<Category>();
  if (!doc.contains("rank") || !doc["rank"].is_number_integer())
    throw InputError("missing integer field 'rank'");
  c->rank = doc["rank"].get<int>();
  if (c->rank < 1) throw InputError("rank must be positive");
  const int r = c->rank;
  c->name = doc.value("name", std::string("category"));
  if (doc.contains("labels")) {
    for (auto& l : doc["labels"]) c->labels.push_back(l.get<std::string>());
    if (static_cast<int>(c->labels.size()) != r)
      throw InputError("'labels' length differs from rank");
  } else {
    for (int i = 0; i < r; ++i) c->labels.push_back(std::to_string(i));
  }
  if (!doc.contains("dual") || !doc["dual"].is_array() ||
      static_cast<int>(doc["dual"].size()) != r)
    throw InputError("'dual' must be an array of length rank");
  for (auto& d : doc["dual"]) c->dual.push_back(read_index(d, r, "dual"));
  for (int i = 0; i < r; ++i)
    if (c->dual[c->dual[i]] != i) throw InputError("dual is not an involution");
  if (c->dual[0] != 0) throw InputError("dual must fix the unit label 0");

  c->N.assign(static_cast<size_t>(r) * r * r, 0);
  if (!doc.contains("N") || !doc["N"].is_array())
    throw InputError("missing array field 'N'");
  for (auto& e : doc["N"]) {
    if (!e.is_array() || e.size() != 4)
      throw InputError("N entries are [i,j,k,value]");
    int i = read_index(e[0], r, "N"), j = read_index(e[1], r, "N"),
        k = read_index(e[2], r, "N");
    if (!e[3].is_number_integer() || e[3].get<int>() < 0)
      throw InputError("N values must be non-negative integers");
    c->N[c->idx3(i, j, k)] = e[3].get<int>();
  }
  const bool has_braiding = doc.contains("R") && doc.contains("theta");
  if (!has_braiding) {
    if (doc.value("braided", true) == false)
      throw InputError(
          "braiding-free category documents are not supported for modular "
          "workflows");
    throw InputError("missing 'R' or 'theta'");
  }
  std::vector<char> fset, rset;
  allocate_blocks(*c, fset, rset);
  if (doc.contains("F")) {
    for (auto& e : doc["F"]) {
      if (!e.is_array() || (e.size() != 7 && e.size() != 11))
        throw InputError("F entries are [a,b,c,d,m,n,(al,be,ga,de,)[re,im]]");
      int a = read_index(e[0], r, "F"), b = read_index(e[1], r, "F"),
          cc = read_index(e[2], r, "F"), d = read_index(e[3], r, "F"),
          m = read_index(e[4], r, "F"), nn = read_index(e[5], r, "F");
      int al = 0, be = 0, ga = 0, de = 0;
      if (e.size() == 11) {
        al = e[6].get<int>();
        be = e[7].get<int>();
        ga = e[8].get<int>();
        de = e[9].get<int>();
      }
      int row = tree_pos(c->left_basis(a, b, cc, d), m, al, be);
      int col = tree_pos(c->right_basis(a, b, cc, d), nn, ga, de);
      if (row < 0 || col < 0)
        throw InputError("F entry refers to a vanishing fusion channel");
      c->F[c->idx4(a, b, cc, d)](row, col) = read_cplx(e.back());
      fset[c->idx4(a, b, cc, d)] = 1;
    }
  }
  for (auto& e : doc["R"]) {
    if (!e.is_array() || (e.size() != 4 && e.size() != 6))
      throw InputError("R entries are [a,b,k,(mu,nu,)[re,im]]");
    int a = read_index(e[0], r, "R"), b = read_index(e[1], r, "R"),
        k = read_index(e[2], r, "R");
    int mu = 0, nu = 0;
    if (e.size() == 6) {
      mu = e[3].get<int>();
      nu = e[4].get<int>();
    }
    Mat& blk = c->R[c->idx3(a, b, k)];
    if (mu < 0 || nu < 0 || nu >= blk.rows() || mu >= blk.cols())
      throw InputError("R entry refers to a vanishing fusion channel");
    blk(nu, mu) = read_cplx(e.back());
    rset[c->idx3(a, b, k)] = 1;
  }
  default_unset(*c, fset, rset);
  if (!doc["theta"].is_array() || static_cast<int>(doc["theta"].size()) != r)
    throw InputError("'theta' must have one entry per label");
  for (auto& t : doc["theta"]) c->theta.push_back(read_cplx(t));
  if (doc.contains("dims")) {
    std::vector<cplx> d;
    for (auto& x : doc["dims"]) d.push_back(read_cplx(x));
    if (static_cast<int>(d.size()) != r) throw InputError("'dims' length");
    c->dims_hint = d;
  }
  if (doc.contains("s")) {
    Mat s(r, r);
    if (static_cast<int>(doc["s"].size()) != r) throw InputError("'s' shape");
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(doc["s"][i].size()) != r)
        throw InputError("'s' shape");
      for (int j = 0; j < r; ++j) s(i, j) = read_cplx(doc["s"][i][j]);
    }
    c->s_hint = s;
  }
  if (doc.contains("tolerance")) {
    c->tolerance = doc["tolerance"].get<double>();
    if (!(c->tolerance > 0)) throw InputError("tolerance must be positive");
  }
  c->finalize();
  return c;
}

CatPtr load_category_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open category file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_category_json(ss.str());
}

std::string category_to_json(const Category& c) {
  json doc;
  doc["name"] = c.name;
  doc["rank"] = c.rank;
  doc["labels"] = c.labels;
  doc["dual"] = c.dual;
  json N = json::array();
  for (int i = 0; i < c.rank; ++i)
    for (int j = 0; j < c.rank; ++j)
      for (int k = 0; k < c.rank; ++k)
        if (c.n(i, j, k)) N.push_back({i, j, k, c.n(i, j, k)});
  doc["N"] = N;
  bool multi = false;
  for (int v : c.N) multi = multi || v > 1;
  json F = json::array();
  for (int a = 0; a < c.rank; ++a)
    for (int b = 0; b < c.rank; ++b)
      for (int cc = 0; cc < c.rank; ++cc)
        for (int d = 0; d < c.rank; ++d) {
          const Mat& f = c.Fblock(a, b, cc, d);
          if (f.size() == 0) continue;
          if (f.size() == 1 && std::abs(f(0, 0) - 1.0) == 0.0) continue;
          auto L = c.left_basis(a, b, cc, d);
          auto Rb = c.right_basis(a, b, cc, d);
          for (int x = 0; x < f.rows(); ++x)
            for (int y = 0; y < f.cols(); ++y) {
              if (f(x, y) == 0.0 && f.size() > 1) continue;
              json e = {a, b, cc, d, L[x].mid, Rb[y].mid};
              if (multi) {
                e.push_back(L[x].v1);
                e.push_back(L[x].v2);
                e.push_back(Rb[y].v1);
                e.push_back(Rb[y].v2);
              }
              e.push_back(write_cplx(f(x, y)));
              F.push_back(e);
            }
        }
  doc["F"] = F;
  json R = json::array();
  for (int a = 0; a < c.rank; ++a)
    for (int b = 0; b < c.rank; ++b)
      for (int k = 0; k < c.rank; ++k) {
        const Mat& m = c.Rblock(a, b, k);
        for (int nu = 0; nu < m.rows(); ++nu)
          for (int mu = 0; mu < m.cols(); ++mu) {
            json e = {a, b, k};
            if (multi) {
              e.push_back(mu);
              e.push_back(nu);
            }
            e.push_back(write_cplx(m(nu, mu)));
            R.push_back(e);
          }
      }
  doc["R"] = R;
  json th = json::array();
  for (auto t : c.theta) th.push_back(write_cplx(t));
  doc["theta"] = th;
  if (c.dims_hint) {
    json d = json::array();
    for (auto x : *c.dims_hint) d.push_back(write_cplx(x));
    doc["dims"] = d;
  }
  doc["tolerance"] = c.tolerance;
  return doc.dump(1);
}

CatPtr resolve_category(const std::string& s) {
  namespace fs = std::filesystem;
  if (fs::exists(s) && fs::is_regular_file(s)) return load_category_file(s);
  std::string base = fs::path(s).filename().string();
  if (base.size() > 5 && base.substr(base.size() - 5) == ".json")
    base = base.substr(0, base.size() - 5);
  for (auto& n : fixture_names())
    if (n == base) return fixture(n);
  throw InputError("unknown category '" + s + "'");
}

CatPtr reverse_category(const Category& c) {
  auto out = std::make_shared<Category>(c);
  out->name = c.name + "-rev";
  for (int a = 0; a < c.rank; ++a)
    for (int b = 0; b < c.rank; ++b)
      for (int k = 0; k < c.rank; ++k) {
        const Mat& rba = c.Rblock(b, a, k);
        out->R[c.idx3(a, b, k)] =
            rba.size() ? Mat(rba.inverse()) : Mat(c.Rblock(a, b, k));
      }
  for (auto& t : out->theta) t = 1.0 / t;
  if (c.s_hint) out->s_hint = c.s_hint->conjugate();
  out->finalize();
  return out;
}

CatPtr product_category(const Category& A, const Category& B) {
  auto c = std::make_shared<Category>();
  const int ra = A.rank, rb = B.rank, r = ra * rb;
  c->name = A.name + "x" + B.name;
  c->rank = r;
  c->tolerance = std::max(A.tolerance, B.tolerance);
  auto fst = [rb](int p) { return p / rb; };
  auto snd = [rb](int p) { return p % rb; };
  for (int p = 0; p < r; ++p) {
    c->labels.push_back(A.labels[fst(p)] + "|" + B.labels[snd(p)]);
    c->dual.push_back(A.dual[fst(p)] * rb + B.dual[snd(p)]);
    c->theta.push_back(A.theta[fst(p)] * B.theta[snd(p)]);
  }
  c->N.assign(static_cast<size_t>(r) * r * r, 0);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int s = 0; s < r; ++s)
        c->N[c->idx3(p, q, s)] = A.n(fst(p), fst(q), fst(s)) *
                                 B.n(snd(p), snd(q), snd(s));
  std::vector<char> fset, rset;
  allocate_blocks(*c, fset, rset);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int s = 0; s < r; ++s) {
        Mat& blk = c->R[c->idx3(p, q, s)];
        if (blk.size() == 0) continue;
        blk = kron(A.Rblock(fst(p), fst(q), fst(s)),
                   B.Rblock(snd(p), snd(q), snd(s)));
      }
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      for (int u = 0; u < r; ++u)
        for (int d = 0; d < r; ++d) {
          Mat& blk = c->F[c->idx4(p, q, u, d)];
          if (blk.size() == 0) continue;
          auto L = c->left_basis(p, q, u, d);
          auto Rr = c->right_basis(p, q, u, d);
          const int a1 = fst(p), b1 = fst(q), c1 = fst(u), d1 = fst(d);
          const int a2 = snd(p), b2 = snd(q), c2 = snd(u), d2 = snd(d);
          auto LA = A.left_basis(a1, b1, c1, d1);
          auto RA = A.right_basis(a1, b1, c1, d1);
          auto LB = B.left_basis(a2, b2, c2, d2);
          auto RB = B.right_basis(a2, b2, c2, d2);
          for (size_t x = 0; x < L.size(); ++x) {
            const int m1 = fst(L[x].mid), m2 = snd(L[x].mid);
            const int nab = B.n(a2, b2, m2), nmc = B.n(m2, c2, d2);
            const int lx = tree_pos(LA, m1, L[x].v1 / nab, L[x].v2 / nmc);
            const int ly = tree_pos(LB, m2, L[x].v1 % nab, L[x].v2 % nmc);
            for (size_t y = 0; y < Rr.size(); ++y) {
              const int n1 = fst(Rr[y].mid), n2 = snd(Rr[y].mid);
              const int nbc = B.n(b2, c2, n2), nan = B.n(a2, n2, d2);
              const int rx = tree_pos(RA, n1, Rr[y].v1 / nbc, Rr[y].v2 / nan);
              const int ry = tree_pos(RB, n2, Rr[y].v1 % nbc, Rr[y].v2 % nan);
              blk(x, y) = A.Fblock(a1, b1, c1, d1)(lx, rx) *
                          B.Fblock(a2, b2, c2, d2)(ly, ry);
            }
          }
        }
  if (A.dims_hint && B.dims_hint) {
    std::vector<cplx> d;
    for (int p = 0; p < r; ++p)
      d.push_back((*A.dims_hint)[fst(p)] * (*B.dims_hint)[snd(p)]);
    c->dims_hint = d;
  }
  c->finalize();
  return c;
}

CatPtr doubled_category(const Category& cat) {
  auto rev = reverse_category(cat);
  return product_category(cat, *rev);
}

bool ValidationReport::pass() const {
  for (auto& e : entries)
    if (!e.pass) return false;
  return true;
}

double ValidationReport::residual(const std::string& name) const {
  for (auto& e : entries)
    if (e.name == name) return e.residual;
  throw std::out_of_range("no check named " + name);
}

}  // namespace mtc
