#include "mackey/smith.hpp"

#include "mackey/cancel.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace mackey {

namespace {

thread_local const CancellationToken* current_token = nullptr;

}  // namespace

CancellationScope::CancellationScope(const CancellationToken& token) : previous_(current_token), token_(token) {
  current_token = &token_;
}

CancellationScope::~CancellationScope() { current_token = previous_; }

void throw_if_cancelled() {
  if (current_token != nullptr && current_token->cancelled()) throw Cancelled();
}

IntMatrix to_int64(const BigMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = to_int64(a(i, j));
  return out;
}

std::string to_string(const Integer& x) { return x.str(); }

namespace {

bool is_zero(const Checked64& x) { return x.is_zero(); }
bool is_zero(const Integer& x) { return x.is_zero(); }

template <typename S>
S abs_value(const S& x) {
  return x < S(0) ? S(-x) : x;
}

template <typename S>
bool is_unit(const S& x) {
  return x == S(1) || x == S(-1);
}

// Quotient rounded toward negative infinity.
template <typename S>
S floor_div(const S& a, const S& b) {
  S q = a / b;
  S r = a - q * b;
  if (!is_zero(r) && ((r < S(0)) != (b < S(0)))) q = q - S(1);
  return q;
}

template <typename S>
class Dense {
 public:
  Dense() = default;
  Dense(Eigen::Index rows, Eigen::Index cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  static Dense identity(Eigen::Index n) {
    Dense d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = S(1);
    return d;
  }

  template <typename Derived>
  static Dense from(const Eigen::MatrixBase<Derived>& a) {
    Dense d(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) d(i, j) = convert(a(i, j));
    return d;
  }

  S& operator()(Eigen::Index i, Eigen::Index j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const S& operator()(Eigen::Index i, Eigen::Index j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    for (Eigen::Index j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    for (Eigen::Index i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row_target -= q * row_source, over columns [from, cols)
  void axpy_row(Eigen::Index target, const S& q, Eigen::Index source, Eigen::Index from = 0) {
    for (Eigen::Index j = from; j < cols_; ++j) {
      const S& s = (*this)(source, j);
      if (!is_zero(s)) (*this)(target, j) = (*this)(target, j) - q * s;
    }
  }
  void negate_row(Eigen::Index r) {
    for (Eigen::Index j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  BigMatrix to_big_matrix(bool transpose = false) const {
    BigMatrix out(transpose ? cols_ : rows_, transpose ? rows_ : cols_);
    for (Eigen::Index i = 0; i < rows_; ++i)
      for (Eigen::Index j = 0; j < cols_; ++j) {
        if (transpose)
          out(j, i) = to_integer((*this)(i, j));
        else
          out(i, j) = to_integer((*this)(i, j));
      }
    return out;
  }

 private:
  static S convert(std::int64_t x) { return S(x); }
  static S convert(const Integer& x) {
    if constexpr (std::is_same_v<S, Integer>)
      return x;
    else
      return S(to_int64(x));
  }

  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<S> data_;
};

// Reduces A in place; U receives row operations, Vt receives column
// operations applied to V stored transposed.
template <typename S>
std::vector<Integer> smith_core(Dense<S>& a, Dense<S>* u, Dense<S>* vt) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  std::vector<Integer> diag;
  std::vector<Eigen::Index> support;

  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    a.swap_cols(i, j);
    if (vt) vt->swap_rows(i, j);
  };

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    throw_if_cancelled();
    Eigen::Index pi = -1, pj = -1;
    S best(0);
    for (Eigen::Index i = t; i < m && !(pi >= 0 && is_unit(best)); ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        const S& x = a(i, j);
        if (is_zero(x)) continue;
        S ax = abs_value(x);
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
          if (is_unit(ax)) break;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      const S p = a(t, t);
      support.clear();
      for (Eigen::Index j = t; j < n; ++j)
        if (!is_zero(a(t, j))) support.push_back(j);

      bool column_clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        const S x = a(i, t);
        if (is_zero(x)) continue;
        S q = x / p;
        if (!is_zero(q)) {
          for (Eigen::Index j : support) a(i, j) = a(i, j) - q * a(t, j);
          if (u) u->axpy_row(i, q, t);
        }
        if (!is_zero(a(i, t))) column_clean = false;
      }
      if (!column_clean) {
        Eigen::Index r = -1;
        for (Eigen::Index i = t + 1; i < m; ++i)
          if (!is_zero(a(i, t)) && (r < 0 || abs_value(a(i, t)) < abs_value(a(r, t)))) r = i;
        swap_rows(t, r);
        continue;
      }

      bool row_clean = true;
      for (Eigen::Index j = t + 1; j < n; ++j) {
        const S y = a(t, j);
        if (is_zero(y)) continue;
        S q = y / p;
        if (!is_zero(q)) {
          a(t, j) = a(t, j) - q * p;
          if (vt) vt->axpy_row(j, q, t);
        }
        if (!is_zero(a(t, j))) row_clean = false;
      }
      if (!row_clean) {
        Eigen::Index c = -1;
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (!is_zero(a(t, j)) && (c < 0 || abs_value(a(t, j)) < abs_value(a(t, c)))) c = j;
        swap_cols(t, c);
        continue;
      }

      if (!is_unit(p)) {
        Eigen::Index bad = -1;
        for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
          for (Eigen::Index j = t + 1; j < n; ++j)
            if (!is_zero(a(i, j) % p)) {
              bad = i;
              break;
            }
        if (bad >= 0) {
          a.axpy_row(t, S(-1), bad, t);
          if (u) u->axpy_row(t, S(-1), bad);
          continue;
        }
      }
      break;
    }
    if (a(t, t) < S(0)) {
      a(t, t) = -a(t, t);
      if (u) u->negate_row(t);
    }
    diag.push_back(to_integer(a(t, t)));
  }
  return diag;
}

template <typename S, typename Derived>
SmithForm smith_with(const Eigen::MatrixBase<Derived>& input, Transforms transforms) {
  SmithForm out;
  out.rows = input.rows();
  out.cols = input.cols();
  Dense<S> a = Dense<S>::from(input);
  const bool track = transforms == Transforms::both;
  Dense<S> u, vt;
  if (track) {
    u = Dense<S>::identity(out.rows);
    vt = Dense<S>::identity(out.cols);
  }
  out.invariant_factors = smith_core(a, track ? &u : nullptr, track ? &vt : nullptr);
  if (track) {
    out.U = u.to_big_matrix();
    out.V = vt.to_big_matrix(true);
  }
  return out;
}

template <typename Derived>
SmithForm smith_dispatch(const Eigen::MatrixBase<Derived>& a, Transforms transforms) {
  try {
    return smith_with<Checked64>(a, transforms);
  } catch (const OverflowError&) {
    return smith_with<Integer>(a, transforms);
  }
}

template <typename S>
HermiteForm hermite_core(Dense<S> a, bool with_transform) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  Dense<S> u;
  if (with_transform) u = Dense<S>::identity(m);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    throw_if_cancelled();
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < m; ++i)
        if (!is_zero(a(i, c)) && (best < 0 || abs_value(a(i, c)) < abs_value(a(best, c)))) best = i;
      if (best < 0) break;
      a.swap_rows(r, best);
      if (with_transform) u.swap_rows(r, best);
      bool done = true;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (is_zero(a(i, c))) continue;
        S q = a(i, c) / a(r, c);
        a.axpy_row(i, q, r, c);
        if (with_transform) u.axpy_row(i, q, r);
        if (!is_zero(a(i, c))) done = false;
      }
      if (done) break;
    }
    if (is_zero(a(r, c))) continue;
    if (a(r, c) < S(0)) {
      a.negate_row(r);
      if (with_transform) u.negate_row(r);
    }
    for (Eigen::Index k = 0; k < r; ++k) {
      if (is_zero(a(k, c))) continue;
      S q = floor_div(a(k, c), a(r, c));
      if (is_zero(q)) continue;
      a.axpy_row(k, q, r, c);
      if (with_transform) u.axpy_row(k, q, r);
    }
    ++r;
  }
  HermiteForm out;
  out.H = a.to_big_matrix();
  if (with_transform) out.U = u.to_big_matrix();
  out.rank = r;
  return out;
}

template <typename Derived>
HermiteForm hermite_dispatch(const Eigen::MatrixBase<Derived>& a, bool with_transform) {
  try {
    return hermite_core(Dense<Checked64>::from(a), with_transform);
  } catch (const OverflowError&) {
    return hermite_core(Dense<Integer>::from(a), with_transform);
  }
}

BigMatrix kernel_from_smith(const SmithForm& snf) {
  const Eigen::Index k = snf.cols - snf.rank();
  if (k == 0) return BigMatrix(snf.cols, 0);
  BigMatrix rows = snf.V.rightCols(k).transpose();
  HermiteForm h = hermite_normal_form(rows);
  return h.H.topRows(h.rank).transpose();
}

}  // namespace

BigMatrix SmithForm::diagonal() const {
  BigMatrix d = BigMatrix::Zero(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    auto k = static_cast<Eigen::Index>(i);
    d(k, k) = invariant_factors[i];
  }
  return d;
}

SmithForm smith_normal_form(const IntMatrix& a, Transforms transforms) { return smith_dispatch(a, transforms); }
SmithForm smith_normal_form(const BigMatrix& a, Transforms transforms) { return smith_dispatch(a, transforms); }

HermiteForm hermite_normal_form(const BigMatrix& a, bool with_transform) { return hermite_dispatch(a, with_transform); }
HermiteForm hermite_normal_form(const IntMatrix& a, bool with_transform) { return hermite_dispatch(a, with_transform); }

std::vector<Integer> invariant_factors(const IntMatrix& a) { return smith_normal_form(a).invariant_factors; }

Eigen::Index integer_rank(const IntMatrix& a) {
  if (a.size() == 0) return 0;
  return smith_normal_form(a).rank();
}

BigMatrix kernel_basis(const IntMatrix& a) { return kernel_from_smith(smith_normal_form(a, Transforms::both)); }
BigMatrix kernel_basis(const BigMatrix& a) { return kernel_from_smith(smith_normal_form(a, Transforms::both)); }

std::optional<BigMatrix> solve_integer(const SmithForm& snf, const BigMatrix& b) {
  if (!snf.has_transforms()) throw Error("solve_integer needs a Smith form with transforms");
  if (b.rows() != snf.rows) throw Error("solve_integer: right-hand side has wrong row count");
  BigMatrix c = snf.rows == 0 ? BigMatrix(0, b.cols()) : BigMatrix(snf.U * b);
  BigMatrix y = BigMatrix::Zero(snf.cols, b.cols());
  const Eigen::Index r = snf.rank();
  for (Eigen::Index i = 0; i < snf.rows; ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (i < r) {
        const Integer& d = snf.invariant_factors[static_cast<std::size_t>(i)];
        if (c(i, j) % d != 0) return std::nullopt;
        y(i, j) = c(i, j) / d;
      } else if (c(i, j) != 0) {
        return std::nullopt;
      }
    }
  if (snf.cols == 0) return y;
  return BigMatrix(snf.V * y);
}

std::optional<BigMatrix> solve_integer(const BigMatrix& a, const BigMatrix& b) {
  return solve_integer(smith_normal_form(a, Transforms::both), b);
}

bool in_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  return solve_integer(to_big(a), to_big(b)).has_value();
}

}  // namespace mackey
