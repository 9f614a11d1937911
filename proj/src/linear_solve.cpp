#include "planarop/linear_solve.hpp"

#include <utility>

#include "planarop/error.hpp"

namespace planarop {

namespace {

void swap_rows(Matrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

std::optional<std::size_t> pick_pivot(const Matrix& a, std::size_t col, std::size_t from) {
  std::optional<std::size_t> best;
  mpq_class best_mag;
  for (std::size_t r = from; r < a.rows(); ++r) {
    if (a(r, col).is_zero()) continue;
    mpq_class mag = a(r, col).l1();
    if (!best || mag > best_mag) {
      best = r;
      best_mag = std::move(mag);
    }
  }
  return best;
}

}  // namespace

std::optional<std::vector<GaussianRational>> solve_linear(Matrix a, std::vector<GaussianRational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error(Errc::precondition, "solve_linear needs a square system");
  for (std::size_t col = 0; col < n; ++col) {
    auto pivot = pick_pivot(a, col, col);
    if (!pivot) return std::nullopt;
    swap_rows(a, col, *pivot);
    std::swap(b[col], b[*pivot]);
    const GaussianRational inv = GaussianRational(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const GaussianRational factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  std::vector<GaussianRational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    GaussianRational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

std::size_t rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    auto pivot = pick_pivot(a, col, r);
    if (!pivot) continue;
    swap_rows(a, r, *pivot);
    const GaussianRational inv = GaussianRational(1) / a(r, col);
    for (std::size_t row = r + 1; row < a.rows(); ++row) {
      if (a(row, col).is_zero()) continue;
      const GaussianRational factor = a(row, col) * inv;
      for (std::size_t c = col; c < a.cols(); ++c) a(row, c) -= factor * a(r, c);
    }
    ++r;
  }
  return r;
}

std::vector<GaussianRational> leading_principal_minors(const Matrix& a) {
  // Each minor gets its own pivoted elimination; n is small here.
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<GaussianRational> minors;
  minors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix sub(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c <= k; ++c) sub(r, c) = a(r, c);
    GaussianRational det(1);
    for (std::size_t col = 0; col <= k && !det.is_zero(); ++col) {
      auto pivot = pick_pivot(sub, col, col);
      if (!pivot) {
        det = GaussianRational();
        break;
      }
      if (*pivot != col) {
        swap_rows(sub, col, *pivot);
        det = -det;
      }
      det *= sub(col, col);
      const GaussianRational inv = GaussianRational(1) / sub(col, col);
      for (std::size_t r = col + 1; r <= k; ++r) {
        if (sub(r, col).is_zero()) continue;
        const GaussianRational factor = sub(r, col) * inv;
        for (std::size_t c = col; c <= k; ++c) sub(r, c) -= factor * sub(col, c);
      }
    }
    minors.push_back(std::move(det));
  }
  return minors;
}

}  // namespace planarop
