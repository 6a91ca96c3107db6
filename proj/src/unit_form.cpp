#include "qv/unit_form.hpp"

#include <algorithm>
#include <numeric>

#include <boost/rational.hpp>

namespace qv {

using rational = boost::rational<long long>;

namespace {
// boost::rational's mixed-type comparisons recurse on int literals; keep
// every comparison on the numerator instead
bool is_zero(const rational& x) { return x.numerator() == 0; }
bool is_negative(const rational& x) { return x.numerator() < 0; }
}  // namespace

UnitForm::UnitForm(std::vector<std::string> vars,
                   std::vector<std::vector<int>> coeff)
    : vars_(std::move(vars)), coeff_(std::move(coeff)) {
  const auto n = vars_.size();
  if (coeff_.size() != n) throw error("coefficient matrix size mismatch");
  for (const auto& row : coeff_)
    if (row.size() != n) throw error("coefficient matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    if (coeff_[i][i] != 0) throw error("nonzero diagonal coefficient");
    for (size_t j = 0; j < n; ++j)
      if (coeff_[i][j] != coeff_[j][i])
        throw error("coefficient matrix is not symmetric");
  }
}

long long UnitForm::evaluate(const std::vector<long long>& x) const {
  if (static_cast<int>(x.size()) != size())
    throw error("vector length does not match form dimension");
  long long q = 0;
  for (int i = 0; i < size(); ++i) q += x[i] * x[i];
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) q += coeff_[i][j] * x[i] * x[j];
  return q;
}

UnitForm form_from_signed_graph(const SignedGraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    const int s = e.sign == EdgeSign::dotted ? e.mult : -e.mult;
    a[e.u][e.v] += s;
    a[e.v][e.u] += s;
  }
  return UnitForm(g.vertices(), std::move(a));
}

SignedGraph signed_graph_of(const UnitForm& f) {
  std::vector<SignedEdge> edges;
  for (int i = 0; i < f.size(); ++i)
    for (int j = i + 1; j < f.size(); ++j) {
      const int a = f.coefficient(i, j);
      if (a < 0) edges.push_back({i, j, EdgeSign::solid, -a});
      if (a > 0) edges.push_back({i, j, EdgeSign::dotted, a});
    }
  return SignedGraph(f.vars(), std::move(edges));
}

namespace {

// Gram matrix 2I + A of the doubled form, exact rationals.
std::vector<std::vector<rational>> gram(const UnitForm& f) {
  const int n = f.size();
  std::vector<std::vector<rational>> g(n, std::vector<rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = i == j ? 2 : f.coefficient(i, j);
  return g;
}

}  // namespace

Definiteness definiteness(const UnitForm& f) {
  auto g = gram(f);
  const int n = f.size();
  std::vector<int> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  int corank = 0;
  while (!alive.empty()) {
    const int p = alive.front();
    alive.erase(alive.begin());
    const rational d = g[p][p];
    if (is_negative(d)) return {Definiteness::indefinite, 0};
    if (is_zero(d)) {
      for (int j : alive)
        if (!is_zero(g[p][j])) return {Definiteness::indefinite, 0};
      ++corank;
      continue;
    }
    for (int r : alive) {
      const rational fac = g[r][p] / d;
      if (is_zero(fac)) continue;
      for (int c : alive) g[r][c] -= fac * g[p][c];
      g[r][p] = 0;
    }
  }
  if (corank == 0) return {Definiteness::positive_definite, 0};
  return {Definiteness::positive_semidefinite, corank};
}

RadicalVector radical_vector(const UnitForm& f) {
  const auto d = definiteness(f);
  if (d.kind != Definiteness::positive_semidefinite)
    throw error("form is not positive semidefinite");
  if (d.corank != 1) throw error("radical has rank != 1");

  // kernel of the Gram matrix by Gauss-Jordan
  auto g = gram(f);
  const int n = f.size();
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (!is_zero(g[r][col])) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(g[row], g[pr]);
    const rational inv = g[row][col];
    for (int c = 0; c < n; ++c) g[row][c] /= inv;
    for (int r = 0; r < n; ++r)
      if (r != row && !is_zero(g[r][col])) {
        const rational fac = g[r][col];
        for (int c = 0; c < n; ++c) g[r][c] -= fac * g[row][c];
      }
    pivot_col.push_back(col);
    ++row;
  }
  // exactly one free column
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_col = c;
  if (free_col < 0) throw error("radical has rank != 1");

  std::vector<rational> zr(n, 0);
  zr[free_col] = 1;
  for (size_t r = 0; r < pivot_col.size(); ++r)
    zr[pivot_col[r]] = -g[r][free_col];

  // clear denominators, make primitive
  long long lcm = 1;
  for (const auto& x : zr) lcm = std::lcm(lcm, x.denominator());
  std::vector<long long> z(n);
  for (int i = 0; i < n; ++i)
    z[i] = boost::rational_cast<long long>(zr[i] * rational(lcm));
  long long gcd = 0;
  for (long long x : z) gcd = std::gcd(gcd, x);
  for (auto& x : z) x /= gcd;

  long long sum = 0;
  for (long long x : z) sum += x;
  bool flip = sum < 0;
  if (sum == 0)
    for (long long x : z) {
      if (x == 0) continue;
      flip = x < 0;
      break;
    }
  if (flip)
    for (auto& x : z) x = -x;

  RadicalVector rv;
  rv.z = std::move(z);
  rv.sincere = std::all_of(rv.z.begin(), rv.z.end(),
                           [](long long x) { return x != 0; });
  rv.positive = std::all_of(rv.z.begin(), rv.z.end(),
                            [](long long x) { return x > 0; });
  return rv;
}

std::vector<std::vector<long long>> positive_roots(const UnitForm& f,
                                                   long long bound) {
  if (bound < 1) throw error("root search bound must be >= 1");
  const int n = f.size();
  std::vector<std::vector<long long>> roots;
  std::vector<long long> x(n, 0);
  // odometer with x[0] most significant gives lexicographic order
  while (true) {
    int i = n - 1;
    while (i >= 0 && x[i] == bound) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
    if (f.evaluate(x) == 1) roots.push_back(x);
  }
  return roots;
}

}  // namespace qv
