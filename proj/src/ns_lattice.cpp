#include "higgsnum/ns_lattice.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace higgsnum {

namespace {

template <class Vec>
void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw InputError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

}  // namespace

bool NSVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

NSVector& NSVector::operator+=(const NSVector& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

NSVector& NSVector::operator-=(const NSVector& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

NSVector operator-(NSVector a) {
  for (auto& x : a.coords) x = -x;
  return a;
}

NSVector operator*(std::int64_t k, NSVector v) {
  for (auto& x : v.coords) x *= k;
  return v;
}

QNSVector::QNSVector(const NSVector& v) {
  coords.reserve(v.size());
  for (auto x : v.coords) coords.emplace_back(Integer(static_cast<long>(x)));
}

bool QNSVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

QNSVector& QNSVector::operator+=(const QNSVector& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

QNSVector& QNSVector::operator-=(const QNSVector& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

QNSVector operator-(QNSVector a) {
  for (auto& x : a.coords) x = -x;
  return a;
}

QNSVector operator*(const Rational& k, QNSVector v) {
  for (auto& x : v.coords) x *= k;
  return v;
}

Inertia inertia(const GramMatrix& gram) {
  const std::size_t n = gram.size();
  for (const auto& row : gram) {
    if (row.size() != n) throw InputError("gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) throw InputError("gram matrix is not symmetric");
    }
  }

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Integer(static_cast<long>(gram[i][j]));

  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    // pivot: first nonzero diagonal entry in the trailing block
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // all trailing diagonals vanish; look for an off-diagonal entry
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == n) {
        out.zero += n - k;
        return out;
      }
      // congruence by e_bi <- e_bi + e_bj: row and column bi gain row/column bj
      for (std::size_t t = k; t < n; ++t) a[bi][t] += a[bj][t];
      for (std::size_t t = k; t < n; ++t) a[t][bi] += a[t][bj];
      p = bi;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto& row : a) std::swap(row[p], row[k]);
    }
    const Rational pivot = a[k][k];
    if (pivot > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
  }
  return out;
}

std::pair<std::size_t, std::size_t> signature(const GramMatrix& gram) {
  const Inertia in = inertia(gram);
  if (in.zero != 0) throw ValidationError("gram matrix is degenerate");
  return {in.positive, in.negative};
}

NSLattice::NSLattice(GramMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (gram_.empty()) throw ValidationError("lattice rank must be positive");
  if (!labels_.empty() && labels_.size() != gram_.size()) {
    throw InputError("basis_labels length does not match lattice rank");
  }
  const auto [pos, neg] = signature(gram_);
  if (pos != 1 || neg != gram_.size() - 1) {
    throw ValidationError("gram signature is (" + std::to_string(pos) + "," + std::to_string(neg) +
                          "), Hodge index requires (1," + std::to_string(gram_.size() - 1) + ")");
  }
}

void NSLattice::check(const NSVector& v) const {
  if (v.size() != rank()) {
    throw InputError("vector of length " + std::to_string(v.size()) + " on lattice of rank " +
                     std::to_string(rank()));
  }
}

void NSLattice::check(const QNSVector& v) const {
  if (v.size() != rank()) {
    throw InputError("vector of length " + std::to_string(v.size()) + " on lattice of rank " +
                     std::to_string(rank()));
  }
}

std::pair<std::size_t, std::size_t> signature(const NSLattice& lat) { return signature(lat.gram()); }

Rational pair(const NSLattice& lat, const QNSVector& v, const QNSVector& w) {
  lat.check(v);
  lat.check(w);
  Rational sum = 0;
  const auto& g = lat.gram();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.coords[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (g[i][j] != 0) row += Integer(static_cast<long>(g[i][j])) * w.coords[j];
    }
    sum += v.coords[i] * row;
  }
  return sum;
}

Integer pair(const NSLattice& lat, const NSVector& v, const NSVector& w) {
  lat.check(v);
  lat.check(w);
  Integer sum = 0;
  const auto& g = lat.gram();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      sum += Integer(static_cast<long>(v.coords[i])) * static_cast<long>(g[i][j]) *
             static_cast<long>(w.coords[j]);
    }
  }
  return sum;
}

std::optional<NSVector> divide(const NSLattice& lat, const QNSVector& v, std::int64_t r) {
  lat.check(v);
  if (r < 1) throw InputError("divisor must be a positive integer");
  NSVector out = NSVector::zero(v.size());
  const Integer rr(static_cast<long>(r));
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational q = v.coords[i] / rr;
    if (!is_integer(q)) return std::nullopt;
    const Integer& z = q.get_num();
    if (!z.fits_slong_p()) throw InputError("coordinate exceeds 64-bit range");
    out.coords[i] = z.get_si();
  }
  return out;
}

}  // namespace higgsnum
