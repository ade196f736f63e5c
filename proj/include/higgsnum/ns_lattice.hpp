#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "higgsnum/rational.hpp"

namespace higgsnum {

/// Integer divisor class in a fixed basis of NS(X).
struct NSVector {
  std::vector<std::int64_t> coords;

  NSVector() = default;
  explicit NSVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  static NSVector zero(std::size_t rank) { return NSVector(std::vector<std::int64_t>(rank, 0)); }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;

  NSVector& operator+=(const NSVector& o);
  NSVector& operator-=(const NSVector& o);
  friend NSVector operator+(NSVector a, const NSVector& b) { return a += b; }
  friend NSVector operator-(NSVector a, const NSVector& b) { return a -= b; }
  friend NSVector operator-(NSVector a);
  friend NSVector operator*(std::int64_t k, NSVector v);
  friend bool operator==(const NSVector&, const NSVector&) = default;
};

/// Rational divisor class; intermediate values before integrality checks.
struct QNSVector {
  std::vector<Rational> coords;

  QNSVector() = default;
  explicit QNSVector(std::vector<Rational> c) : coords(std::move(c)) {}
  QNSVector(const NSVector& v);  // NOLINT(google-explicit-constructor): Z ⊂ Q
  static QNSVector zero(std::size_t rank) { return QNSVector(std::vector<Rational>(rank, Rational(0))); }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;

  QNSVector& operator+=(const QNSVector& o);
  QNSVector& operator-=(const QNSVector& o);
  friend QNSVector operator+(QNSVector a, const QNSVector& b) { return a += b; }
  friend QNSVector operator-(QNSVector a, const QNSVector& b) { return a -= b; }
  friend QNSVector operator-(QNSVector a);
  friend QNSVector operator*(const Rational& k, QNSVector v);
  friend bool operator==(const QNSVector&, const QNSVector&) = default;
};

using GramMatrix = std::vector<std::vector<std::int64_t>>;

/// Counts of positive, negative and zero eigenvalues of a symmetric form.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia of a symmetric integer matrix by rational LDLᵀ with
/// symmetric pivoting. When every remaining diagonal entry vanishes but an
/// off-diagonal entry a_ij does not, the basis change e_i <- e_i + e_j makes
/// the new diagonal entry 2·a_ij nonzero. Throws InputError if the matrix is
/// not square or not symmetric.
Inertia inertia(const GramMatrix& gram);

/// (positive, negative) counts; throws ValidationError for degenerate forms.
std::pair<std::size_t, std::size_t> signature(const GramMatrix& gram);

/// Free lattice NS(X) ⊂ H²(X, Q) with its intersection form. Torsion in
/// Pic(X) is invisible here: only the image of c₁ in rational cohomology is
/// modelled. Construction enforces symmetry, nondegeneracy and the Hodge
/// index signature (1, ρ−1).
class NSLattice {
 public:
  NSLattice(GramMatrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.size(); }
  const GramMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }

  void check(const NSVector& v) const;
  void check(const QNSVector& v) const;

  friend bool operator==(const NSLattice&, const NSLattice&) = default;

 private:
  GramMatrix gram_;
  std::vector<std::string> labels_;
};

std::pair<std::size_t, std::size_t> signature(const NSLattice& lat);

/// vᵀ·gram·w.
Rational pair(const NSLattice& lat, const QNSVector& v, const QNSVector& w);
Integer pair(const NSLattice& lat, const NSVector& v, const NSVector& w);

/// The unique integral δ with r·δ = v, or nullopt if v/r is not integral.
std::optional<NSVector> divide(const NSLattice& lat, const QNSVector& v, std::int64_t r);

}  // namespace higgsnum
