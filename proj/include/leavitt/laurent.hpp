#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leavitt/algebra.hpp"

namespace leavitt {

// n x n matrix over R[x, x^-1]; each entry maps exponents to nonzero
// canonical coefficients.
class LaurentMatrix {
 public:
  using Entry = std::map<int, mpq_class>;

  LaurentMatrix(RingSpec ring, std::size_t n);
  // c * x^k * E_{ij}
  static LaurentMatrix unit(RingSpec ring, std::size_t n, std::size_t i, std::size_t j, int k,
                            const mpq_class& c = 1);

  std::size_t size() const noexcept { return n_; }
  const Entry& at(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j); }
  bool is_zero() const;

  LaurentMatrix operator+(const LaurentMatrix& o) const;
  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentMatrix scaled(const mpq_class& c) const;
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

  std::string to_string() const;

 private:
  void add_to(std::size_t i, std::size_t j, int k, const mpq_class& c);

  RingSpec ring_;
  std::size_t n_;
  std::vector<Entry> cells_;
};

struct LaurentReport {
  std::size_t cycle_length = 0;
  int degree_bound = 0;
  std::size_t monomials = 0;         // normal-form monomials within the bound
  std::size_t products_checked = 0;
  bool images_distinct = false;
  bool multiplicative = false;
  std::optional<std::string> first_failure;

  bool passed() const { return images_distinct && multiplicative; }
};

// For a graph that is a single cycle v_0 -> ... -> v_{n-1} -> v_0, sends
// v_i -> E_ii, e_i -> E_{i,i+1} (times x on the edge closing the cycle) and
// e_i^* to the transpose with x^-1. Checks that the images of normal-form
// monomials with |alpha|, |beta| <= d are distinct and that the map is
// multiplicative on all their pairwise products. Throws Argument when the
// graph is not a single cycle or d < 1.
LaurentReport laurent_matrix_check(const Algebra& a, int degree_bound);

// The image of an element under the correspondence above.
LaurentMatrix laurent_image(const Algebra& a, const Element& x);

}  // namespace leavitt
