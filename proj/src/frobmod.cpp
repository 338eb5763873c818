#include "ecq/frobmod.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ecq {

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix identity(size_t r) {
  Matrix I(r, std::vector<Int>(r, Int(0)));
  for (size_t i = 0; i < r; ++i) I[i][i] = 1;
  return I;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
  size_t r = A.size(), m = B[0].size(), k = B.size();
  Matrix C(r, std::vector<Int>(m, Int(0)));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t l = 0; l < k; ++l) C[i][j] += A[i][l] * B[l][j];
  return C;
}

Int det(Matrix A) {
  // fraction-free Gaussian elimination (Bareiss)
  size_t n = A.size();
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && A[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(A[k], A[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int num = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        A[i][j] = num / prev;  // exact by Bareiss
      }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

// column-style Hermite reduction; returns the nonzero columns
Matrix column_hnf(Matrix A) {
  if (A.empty()) return A;
  size_t rows = A.size(), cols = A[0].size();
  size_t pivot_col = 0;
  for (size_t row = 0; row < rows && pivot_col < cols; ++row) {
    // gcd out everything in this row to the pivot column
    for (size_t j = pivot_col + 1; j < cols; ++j) {
      while (A[row][j] != 0) {
        if (A[row][pivot_col] == 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(A[i][pivot_col], A[i][j]);
          continue;
        }
        Int q = A[row][j] / A[row][pivot_col];
        for (size_t i = 0; i < rows; ++i) A[i][j] -= q * A[i][pivot_col];
        if (A[row][j] != 0)
          for (size_t i = 0; i < rows; ++i) std::swap(A[i][pivot_col], A[i][j]);
      }
    }
    if (A[row][pivot_col] != 0) {
      if (A[row][pivot_col] < 0)
        for (size_t i = 0; i < rows; ++i) A[i][pivot_col] = -A[i][pivot_col];
      ++pivot_col;
    }
  }
  // drop zero columns
  Matrix out(rows);
  for (size_t j = 0; j < cols; ++j) {
    bool nonzero = false;
    for (size_t i = 0; i < rows; ++i)
      if (A[i][j] != 0) nonzero = true;
    if (nonzero)
      for (size_t i = 0; i < rows; ++i) out[i].push_back(A[i][j]);
  }
  return out;
}

// Smith normal form diagonal of an integer matrix (destructive).
std::vector<Int> snf_diagonal(Matrix A) {
  if (A.empty() || A[0].empty()) return {};
  size_t rows = A.size(), cols = A[0].size();
  size_t n = std::min(rows, cols);
  std::vector<Int> diag;
  size_t t = 0;
  while (t < n) {
    // find a nonzero pivot
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows && !found; ++i)
      for (size_t j = t; j < cols && !found; ++j)
        if (A[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(A[t], A[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(A[i][t], A[i][pj]);
    // clear row and column t
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i)
        while (A[i][t] != 0) {
          Int q = A[i][t] / A[t][t];
          for (size_t j = t; j < cols; ++j) A[i][j] -= q * A[t][j];
          if (A[i][t] != 0) std::swap(A[t], A[i]);
          clean = false;
        }
      for (size_t j = t + 1; j < cols; ++j)
        while (A[t][j] != 0) {
          Int q = A[t][j] / A[t][t];
          for (size_t i = t; i < rows; ++i) A[i][j] -= q * A[i][t];
          if (A[t][j] != 0)
            for (size_t i = 0; i < rows; ++i) std::swap(A[i][t], A[i][j]);
          clean = false;
        }
    }
    diag.push_back(abs(A[t][t]));
    ++t;
  }
  return diag;
}

// all elements of M as exponent tuples, littleanonical order
void for_each_element(const std::vector<long>& orders, long p,
                      const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> x(orders.size(), 0);
  std::vector<Int> caps;
  for (long e : orders) caps.push_back(power(Int(p), static_cast<unsigned long>(e)));
  for (;;) {
    fn(x);
    size_t i = 0;
    while (i < x.size()) {
      ++x[i];
      if (Int(x[i]) < caps[i]) break;
      x[i] = 0;
      ++i;
    }
    if (i == x.size()) return;
  }
}

std::vector<long> apply_reduced(const FiniteFrobeniusModule& M, const Matrix& F,
                                const std::vector<long>& x) {
  size_t r = M.cyclic_orders.size();
  std::vector<long> y(r, 0);
  for (size_t i = 0; i < r; ++i) {
    Int acc = 0;
    for (size_t j = 0; j < r; ++j) acc += F[i][j] * x[j];
    Int cap = power(Int(M.p), static_cast<unsigned long>(M.cyclic_orders[i]));
    y[i] = static_cast<long>(mod_reduce(acc, cap).get_si());
  }
  return y;
}

long plength_of_count(unsigned long count, long p) {
  long len = 0;
  while (count % static_cast<unsigned long>(p) == 0) {
    count /= static_cast<unsigned long>(p);
    ++len;
  }
  if (count != 1) throw Error(errc::internal, "group order is not a power of p");
  return len;
}

Matrix f_minus_one(const FiniteFrobeniusModule& M) {
  Matrix A = M.frobenius;
  for (size_t i = 0; i < A.size(); ++i) A[i][i] -= 1;
  return A;
}

Matrix relation_diag(const FiniteFrobeniusModule& M) {
  size_t r = M.cyclic_orders.size();
  Matrix R(r, std::vector<Int>(r, Int(0)));
  for (size_t i = 0; i < r; ++i)
    R[i][i] = power(Int(M.p), static_cast<unsigned long>(M.cyclic_orders[i]));
  return R;
}

long h1_by_snf(const FiniteFrobeniusModule& M) {
  // coker on M = Z^r / (im(F-1) + R)
  Matrix A = f_minus_one(M);
  Matrix R = relation_diag(M);
  size_t r = M.cyclic_orders.size();
  Matrix B(r, std::vector<Int>(2 * r, Int(0)));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) B[i][j] = A[i][j];
    B[i][r + i] = R[i][i];
  }
  std::vector<Int> d = snf_diagonal(std::move(B));
  if (d.size() != r) throw Error(errc::internal, "cokernel presentation lost rank");
  long len = 0;
  for (const Int& x : d) {
    if (x == 0) throw Error(errc::internal, "cokernel presentation lost rank");
    long v = x == 1 ? 0 : valuation_exact(x, Int(M.p));
    if (power(Int(M.p), static_cast<unsigned long>(v)) != x)
      throw Error(errc::internal, "cokernel order is not a p-power");
    len += v;
  }
  return len;
}

long h0_by_lattice(const FiniteFrobeniusModule& M) {
  // K = {x : (F-1)x in R Z^r} is the x-projection of ker[F-1 | -R];
  // lg ker(F-1 on M) = log_p [K : R] = total_exp - log_p [Z^r : K]
  Matrix A = f_minus_one(M);
  Matrix R = relation_diag(M);
  size_t r = M.cyclic_orders.size();
  // kernel of [A | -R] via column reduction of the stacked [top; identity]
  size_t cols = 2 * r;
  Matrix stacked(r + cols, std::vector<Int>(cols, Int(0)));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) stacked[i][j] = A[i][j];
    stacked[i][r + i] = -R[i][i];
  }
  for (size_t j = 0; j < cols; ++j) stacked[r + j][j] = 1;
  // column-reduce the top block; kernel columns are those with zero top
  {
    size_t pivot_col = 0;
    for (size_t row = 0; row < r && pivot_col < cols; ++row) {
      for (size_t j = pivot_col + 1; j < cols; ++j) {
        while (stacked[row][j] != 0) {
          if (stacked[row][pivot_col] == 0) {
            for (size_t i = 0; i < r + cols; ++i) std::swap(stacked[i][pivot_col], stacked[i][j]);
            continue;
          }
          Int q = stacked[row][j] / stacked[row][pivot_col];
          for (size_t i = 0; i < r + cols; ++i) stacked[i][j] -= q * stacked[i][pivot_col];
          if (stacked[row][j] != 0)
            for (size_t i = 0; i < r + cols; ++i) std::swap(stacked[i][pivot_col], stacked[i][j]);
        }
      }
      if (stacked[row][pivot_col] != 0) ++pivot_col;
    }
  }
  // collect x-parts (rows r..2r-1 of the identity block) of kernel columns
  Matrix gens(r);
  for (size_t j = 0; j < cols; ++j) {
    bool top_zero = true;
    for (size_t i = 0; i < r; ++i)
      if (stacked[i][j] != 0) top_zero = false;
    if (!top_zero) continue;
    for (size_t i = 0; i < r; ++i) gens[i].push_back(stacked[r + i][j]);
  }
  Matrix H = column_hnf(std::move(gens));
  if (H.empty() || H[0].size() != r)
    throw Error(errc::internal, "kernel lattice is not full rank");
  Int idx = abs(det(H));  // [Z^r : K]
  if (idx == 0) throw Error(errc::internal, "kernel lattice is degenerate");
  long total = M.total_exponent();
  long codim = valuation_exact(idx, Int(M.p));
  if (power(Int(M.p), static_cast<unsigned long>(codim)) != idx)
    throw Error(errc::internal, "kernel index is not a p-power");
  return total - codim;
}

}  // namespace

FiniteFrobeniusModule::FiniteFrobeniusModule(long p_, std::vector<long> orders,
                                             std::vector<std::vector<Int>> F)
    : p(p_), cyclic_orders(std::move(orders)), frobenius(std::move(F)) {
  if (!is_prime(Int(p))) throw Error(errc::non_prime, "module prime is not prime");
  if (cyclic_orders.empty()) throw Error(errc::invalid_module, "empty cyclic order list");
  long total = 0;
  for (size_t i = 0; i < cyclic_orders.size(); ++i) {
    if (cyclic_orders[i] < 1) throw Error(errc::invalid_module, "exponents must be >= 1");
    if (i > 0 && cyclic_orders[i] > cyclic_orders[i - 1])
      throw Error(errc::invalid_module, "exponents must be non-increasing");
    total += cyclic_orders[i];
  }
  if (total > 62) throw Error(errc::cap_exceeded, "module order beyond representable cap");
  size_t r = cyclic_orders.size();
  if (frobenius.size() != r) throw Error(errc::invalid_module, "matrix size mismatch");
  for (const auto& row : frobenius)
    if (row.size() != r) throw Error(errc::invalid_module, "matrix size mismatch");
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      long gap = cyclic_orders[i] - cyclic_orders[j];
      if (gap > 0 &&
          !mpz_divisible_p(frobenius[i][j].get_mpz_t(),
                           power(Int(p), static_cast<unsigned long>(gap)).get_mpz_t()))
        throw Error(errc::invalid_module, "column does not respect the order relations");
    }
  Int d = det(frobenius);
  if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)))
    throw Error(errc::invalid_module, "Frobenius is not invertible on M");
}

long FiniteFrobeniusModule::total_exponent() const {
  long t = 0;
  for (long e : cyclic_orders) t += e;
  return t;
}

long h0_length(const FiniteFrobeniusModule& M, long enumeration_cap) {
  Int order = power(Int(M.p), static_cast<unsigned long>(M.total_exponent()));
  if (order <= enumeration_cap) {
    Matrix A = f_minus_one(M);
    unsigned long count = 0;
    for_each_element(M.cyclic_orders, M.p, [&](const std::vector<long>& x) {
      auto y = apply_reduced(M, A, x);
      bool zero = true;
      for (long v : y)
        if (v != 0) zero = false;
      if (zero) ++count;
    });
    return plength_of_count(count, M.p);
  }
  return h0_by_lattice(M);
}

long h1_length(const FiniteFrobeniusModule& M, long enumeration_cap) {
  Int order = power(Int(M.p), static_cast<unsigned long>(M.total_exponent()));
  if (order <= enumeration_cap) {
    Matrix A = f_minus_one(M);
    std::set<std::vector<long>> image;
    unsigned long total = 0;
    for_each_element(M.cyclic_orders, M.p, [&](const std::vector<long>& x) {
      image.insert(apply_reduced(M, A, x));
      ++total;
    });
    return plength_of_count(total / image.size(), M.p);
  }
  return h1_by_snf(M);
}

AdditivityCheck verify_restriction_additivity(const FiniteFrobeniusModule& M,
                                              long enumeration_cap) {
  Matrix F2 = matmul(M.frobenius, M.frobenius);
  Matrix Fn = M.frobenius;
  for (auto& row : Fn)
    for (auto& x : row) x = -x;
  FiniteFrobeniusModule Msq(M.p, M.cyclic_orders, F2);
  FiniteFrobeniusModule Mneg(M.p, M.cyclic_orders, Fn);
  AdditivityCheck out;
  out.lhs = h1_length(Msq, enumeration_cap);
  out.rhs_a = h1_length(M, enumeration_cap);
  out.rhs_b = h1_length(Mneg, enumeration_cap);
  out.holds = out.lhs == out.rhs_a + out.rhs_b;
  return out;
}

ClauseVerdict tam_p_zero_check(const TatePeriodData& tate_data) {
  if (tate_data.ord_q < 1)
    throw Error(errc::not_multiplicative, "Tamagawa-at-p check needs multiplicative reduction");
  if (tate_data.not_finite_at_p)
    return ClauseVerdict::holds(
        "tam_p_zero", {{"ord_q", tate_data.ord_q},
                       {"reason", "E[p] not finite at p, so t(E/K_w) = 0 for w | p"}});
  return ClauseVerdict::inconclusive("tam_p_zero",
                                     "E[p] finite at p: the vanishing lemma is silent");
}

FiniteFrobeniusModule random_module(std::mt19937_64& rng, long p, long max_total_exp) {
  if (max_total_exp < 1) throw Error(errc::bad_input, "max_total_exp must be >= 1");
  auto pick = [&rng](long lo, long hi) {  // inclusive; raw modulo keeps runs byte-stable
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  for (;;) {
    long r = pick(1, std::min<long>(4, max_total_exp));
    std::vector<long> orders;
    long budget = max_total_exp;
    for (long i = 0; i < r; ++i) {
      long remaining_slots = r - i - 1;
      long hi = budget - remaining_slots;
      long cap = i == 0 ? hi : std::min(hi, orders.back());
      if (cap < 1) {
        orders.clear();
        break;
      }
      long e = pick(1, cap);
      orders.push_back(e);
      budget -= e;
    }
    if (orders.empty()) continue;
    std::sort(orders.rbegin(), orders.rend());
    size_t rr = orders.size();
    Matrix F(rr, std::vector<Int>(rr, Int(0)));
    for (size_t i = 0; i < rr; ++i)
      for (size_t j = 0; j < rr; ++j) {
        long gap = std::max<long>(0, orders[i] - orders[j]);
        Int base = power(Int(p), static_cast<unsigned long>(gap));
        Int range = power(Int(p), static_cast<unsigned long>(orders[i] - gap));
        Int coeff = mod_reduce(Int(static_cast<unsigned long>(rng())), range);
        F[i][j] = base * coeff;
      }
    try {
      return FiniteFrobeniusModule(p, orders, F);
    } catch (const Error&) {
      continue;  // singular draw; try again
    }
  }
}

}  // namespace ecq
