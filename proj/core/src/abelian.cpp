#include "cpg/abelian.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cpg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not agree");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << cpg::to_string((*this)(r, c));
    out << "]";
  }
  out << "]";
  return out.str();
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = v;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer AbelianInvariants::torsion_order() const {
  Integer order = 1;
  for (const Integer& d : torsion) order *= d;
  return order;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const Integer& d : torsion) {
    out << (first ? "" : " + ") << "Z_" << cpg::to_string(d);
    first = false;
  }
  if (free_rank > 0) {
    out << (first ? "" : " + ") << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

struct Elimination {
  IntMatrix a;
  IntMatrix u;
  IntMatrix v;

  void swap_rows(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  }
  void swap_cols(std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
  }
  void add_row(std::size_t t, std::size_t s, const Integer& f) {
    a.add_row(t, s, f);
    u.add_row(t, s, f);
  }
  void add_col(std::size_t t, std::size_t s, const Integer& f) {
    a.add_col(t, s, f);
    v.add_col(t, s, f);
  }
};

// Position of the smallest nonzero |entry| with row, col >= t.
std::optional<std::pair<std::size_t, std::size_t>> min_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      if (!best || mpz_cmpabs(a(r, c).get_mpz_t(), a(best->first, best->second).get_mpz_t()) < 0) best = {{r, c}};
    }
  }
  return best;
}

// Smallest nonzero |entry| in row t or column t beyond the pivot.
std::optional<std::pair<std::size_t, std::size_t>> min_in_cross(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  auto consider = [&](std::size_t r, std::size_t c) {
    if (a(r, c) == 0) return;
    if (!best || mpz_cmpabs(a(r, c).get_mpz_t(), a(best->first, best->second).get_mpz_t()) < 0) best = {{r, c}};
  };
  for (std::size_t r = t + 1; r < a.rows(); ++r) consider(r, t);
  for (std::size_t c = t + 1; c < a.cols(); ++c) consider(t, c);
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Elimination e{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pivot = min_entry(e.a, t);
    if (!pivot) break;
    e.swap_rows(t, pivot->first);
    e.swap_cols(t, pivot->second);
    while (true) {
      bool clear = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (e.a(r, t) == 0) continue;
        Integer q = e.a(r, t) / e.a(t, t);
        e.add_row(r, t, -q);
        if (e.a(r, t) != 0) clear = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (e.a(t, c) == 0) continue;
        Integer q = e.a(t, c) / e.a(t, t);
        e.add_col(c, t, -q);
        if (e.a(t, c) != 0) clear = false;
      }
      if (!clear) {
        auto next = min_in_cross(e.a, t);
        if (next->first != t) e.swap_rows(t, next->first);
        if (next->second != t) e.swap_cols(t, next->second);
        continue;
      }
      // The pivot must divide the rest of the block.
      std::optional<std::size_t> offender;
      for (std::size_t r = t + 1; r < m.rows() && !offender; ++r) {
        for (std::size_t c = t + 1; c < m.cols(); ++c) {
          if (!mpz_divisible_p(e.a(r, c).get_mpz_t(), e.a(t, t).get_mpz_t())) {
            offender = r;
            break;
          }
        }
      }
      if (!offender) break;
      e.add_row(t, *offender, 1);
    }
    if (e.a(t, t) < 0) {
      e.a.negate_row(t);
      e.u.negate_row(t);
    }
  }

  SmithForm out{e.a, e.u, e.v, {}, {}};
  for (std::size_t i = 0; i < t; ++i) out.factors.push_back(e.a(i, i));
  out.invariants = invariants_from_factors(out.factors, m.cols());
  return out;
}

AbelianInvariants invariants_from_factors(const std::vector<Integer>& factors, std::size_t generators) {
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const Integer& d : factors) {
    if (d == 0) continue;
    ++nonzero;
    Integer magnitude = abs(d);
    if (magnitude != 1) inv.torsion.push_back(magnitude);
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  inv.free_rank = static_cast<long>(generators - nonzero);
  return inv;
}

IntMatrix relation_matrix(long n, long k, long l) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  auto wrap = [n](long v) { return static_cast<std::size_t>(((v % n) + n) % n); };
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    std::size_t r = static_cast<std::size_t>(i);
    m(r, wrap(i)) += 1;
    m(r, wrap(i + k)) += 1;
    m(r, wrap(i + l)) += 1;
  }
  return m;
}

AbelianInvariants abelian_invariants(long n, long k, long l) {
  return smith_normal_form(relation_matrix(n, k, l)).invariants;
}

Integer cyclic_order(long n) {
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return n % 2 == 0 ? Integer(power - 1) : Integer(power + 1);
}

}  // namespace cpg
