#pragma once

#include <string>
#include <vector>

#include "qv/signed_graph.hpp"

namespace qv {

// Integer quadratic form with unit diagonal:
//   q(x) = sum_i x_i^2 + sum_{i<j} a_ij x_i x_j.
class UnitForm {
 public:
  UnitForm() = default;
  UnitForm(std::vector<std::string> vars, std::vector<std::vector<int>> coeff);

  int size() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  int coefficient(int i, int j) const { return coeff_[i][j]; }
  const std::vector<std::vector<int>>& coefficients() const { return coeff_; }

  long long evaluate(const std::vector<long long>& x) const;

  friend bool operator==(const UnitForm&, const UnitForm&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<std::vector<int>> coeff_;  // symmetric, zero diagonal
};

// a_ij = (dotted multiplicity) - (solid multiplicity)
UnitForm form_from_signed_graph(const SignedGraph& g);

// inverse: |a_ij| solid edges when a_ij < 0, dotted when a_ij > 0
SignedGraph signed_graph_of(const UnitForm& f);

struct Definiteness {
  enum Kind { positive_definite, positive_semidefinite, indefinite };
  Kind kind = indefinite;
  int corank = 0;  // set for positive_semidefinite

  friend bool operator==(const Definiteness&, const Definiteness&) = default;
};

// Exact verdict via rational symmetric elimination of the Gram matrix
// 2I + A; no floating point.
Definiteness definiteness(const UnitForm& f);

struct RadicalVector {
  std::vector<long long> z;
  bool sincere = false;   // all coordinates nonzero
  bool positive = false;  // all coordinates positive
};

// Primitive integer generator of the radical of a positive semidefinite
// corank-1 form, sign-normalized to positive coordinate sum (positive first
// nonzero coordinate when the sum vanishes).  Throws qv::error otherwise.
RadicalVector radical_vector(const UnitForm& f);

// All x with 0 <= x_i <= bound, x != 0 and q(x) = 1, in lexicographic order.
std::vector<std::vector<long long>> positive_roots(const UnitForm& f,
                                                   long long bound);

}  // namespace qv
