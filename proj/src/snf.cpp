#include "fspt/snf.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fspt {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 div_round(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (std::abs(r) * 2 > std::abs(b)) q += ((a < 0) == (b < 0)) ? 1 : -1;
  return q;
}

// row_i -= q * row_t
void row_op(IntMatrix& m, Eigen::Index i, Eigen::Index t, i64 q) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    m(i, c) = checked_sub(m(i, c), checked_mul(q, m(t, c)));
}
void col_op(IntMatrix& m, Eigen::Index j, Eigen::Index t, i64 q) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    m(r, j) = checked_sub(m(r, j), checked_mul(q, m(r, t)));
}

i64 mod_pos(i128 a, i64 m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

i64 mod_inverse(i64 a, i64 m) {
  // extended gcd; requires gcd(a, m) == 1
  i64 old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse of non-unit");
  return ((old_s % m) + m) % m;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SmithForm f;
  f.rows = m;
  f.cols = n;
  IntMatrix s = a;
  f.u = IntMatrix::Identity(m, m);
  f.u_inv = IntMatrix::Identity(m, m);
  f.v = IntMatrix::Identity(n, n);
  f.v_inv = IntMatrix::Identity(n, n);

  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    s.row(i).swap(s.row(j));
    f.u.row(i).swap(f.u.row(j));
    f.u_inv.col(i).swap(f.u_inv.col(j));
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    s.col(i).swap(s.col(j));
    f.v.col(i).swap(f.v.col(j));
    f.v_inv.row(i).swap(f.v_inv.row(j));
  };
  // row_i -= q row_t on s and u; inverse op on u_inv is col_t += q col_i
  auto do_row_op = [&](Eigen::Index i, Eigen::Index t, i64 q) {
    row_op(s, i, t, q);
    row_op(f.u, i, t, q);
    for (Eigen::Index r = 0; r < m; ++r)
      f.u_inv(r, t) = checked_add(f.u_inv(r, t), checked_mul(q, f.u_inv(r, i)));
  };
  auto do_col_op = [&](Eigen::Index j, Eigen::Index t, i64 q) {
    col_op(s, j, t, q);
    col_op(f.v, j, t, q);
    for (Eigen::Index c = 0; c < n; ++c)
      f.v_inv(t, c) = checked_add(f.v_inv(t, c), checked_mul(q, f.v_inv(j, c)));
  };

  Eigen::Index t = 0;
  const Eigen::Index bound = std::min(m, n);
  while (t < bound) {
    // smallest-magnitude nonzero pivot in the trailing block
    Eigen::Index pi = -1, pj = -1;
    i64 best = 0;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        const i64 x = s(i, j);
        if (x != 0 && (pi < 0 || std::abs(x) < best)) {
          best = std::abs(x);
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        const i64 q = div_round(s(i, t), s(t, t));
        if (q != 0) do_row_op(i, t, q);
        if (s(i, t) != 0) {
          swap_rows(t, i);  // strictly smaller |pivot|
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        const i64 q = div_round(s(t, j), s(t, t));
        if (q != 0) do_col_op(j, t, q);
        if (s(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      Eigen::Index bad_i = -1;
      for (Eigen::Index i = t + 1; i < m && bad_i < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad_i = i;
            break;
          }
      if (bad_i < 0) break;
      do_row_op(t, bad_i, -1);  // row_t += row_bad
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      f.u.row(t) = -f.u.row(t);
      f.u_inv.col(t) = -f.u_inv.col(t);
    }
    f.divisors.push_back(s(t, t));
    ++t;
  }
  return f;
}

TorusSolveResult solve_torus(const SmithForm& f, const IntVector& num, std::int64_t den) {
  if (num.size() != f.rows) throw std::invalid_argument("torus solve: size mismatch");
  TorusSolveResult out;
  const Eigen::Index r = f.rank();
  // y = u * num, exact in 128-bit
  std::vector<i128> y(static_cast<std::size_t>(f.rows), 0);
  for (Eigen::Index i = 0; i < f.rows; ++i) {
    i128 acc = 0;
    for (Eigen::Index j = 0; j < f.rows; ++j)
      acc += static_cast<i128>(f.u(i, j)) * num(j);
    y[static_cast<std::size_t>(i)] = acc;
  }
  for (Eigen::Index i = r; i < f.rows; ++i) {
    const i64 rem = mod_pos(y[static_cast<std::size_t>(i)], den);
    if (rem != 0) {
      out.member = false;
      out.witness_row = f.u.row(i).transpose();
      out.witness_value = Phase::fraction(rem, den);
      return out;
    }
  }
  out.member = true;
  // z_i = y_i / (den * s_i); common denominator L = den * lcm(divisors)
  i64 l = 1;
  for (i64 s : f.divisors) l = lcm_checked(l, s);
  const i64 big = checked_mul(den, l);
  std::vector<i64> z(static_cast<std::size_t>(r), 0);
  for (Eigen::Index i = 0; i < r; ++i) {
    // z_i = y_i * (big / (den * s_i)) mod big
    const i64 scale = l / f.divisors[static_cast<std::size_t>(i)];
    const i128 zi = static_cast<i128>(mod_pos(y[static_cast<std::size_t>(i)], big)) * scale;
    z[static_cast<std::size_t>(i)] = mod_pos(zi, big);
  }
  IntVector sol = IntVector::Zero(f.cols);
  for (Eigen::Index j = 0; j < f.cols; ++j) {
    i128 acc = 0;
    for (Eigen::Index i = 0; i < r; ++i)
      acc += mod_pos(static_cast<i128>(f.v(j, i)) * z[static_cast<std::size_t>(i)], big);
    sol(j) = mod_pos(acc, big);
  }
  out.den_out = big;
  out.solution_num = std::move(sol);
  return out;
}

ModNSolveResult solve_mod_n(const SmithForm& f, const IntVector& w, std::int64_t n) {
  if (w.size() != f.rows) throw std::invalid_argument("mod-n solve: size mismatch");
  ModNSolveResult out;
  const Eigen::Index r = f.rank();
  std::vector<i64> y(static_cast<std::size_t>(f.rows), 0);
  for (Eigen::Index i = 0; i < f.rows; ++i) {
    i128 acc = 0;
    for (Eigen::Index j = 0; j < f.rows; ++j) acc += static_cast<i128>(f.u(i, j)) * w(j);
    y[static_cast<std::size_t>(i)] = mod_pos(acc, n);
  }
  for (Eigen::Index i = r; i < f.rows; ++i)
    if (y[static_cast<std::size_t>(i)] != 0) return out;  // unsolvable
  std::vector<i64> z(static_cast<std::size_t>(f.cols), 0);
  for (Eigen::Index i = 0; i < r; ++i) {
    const i64 s = f.divisors[static_cast<std::size_t>(i)];
    const i64 g = std::gcd(s, n);
    const i64 yi = y[static_cast<std::size_t>(i)];
    if (yi % g != 0) return out;  // unsolvable
    const i64 nn = n / g;
    const i64 zi = static_cast<i64>((static_cast<i128>(yi / g) * mod_inverse(s / g, nn)) % nn);
    z[static_cast<std::size_t>(i)] = zi;
  }
  out.solvable = true;
  out.particular = IntVector::Zero(f.cols);
  for (Eigen::Index j = 0; j < f.cols; ++j) {
    i128 acc = 0;
    for (Eigen::Index i = 0; i < f.cols; ++i)
      acc += mod_pos(static_cast<i128>(f.v(j, i)) * z[static_cast<std::size_t>(i)], n);
    out.particular(j) = mod_pos(acc, n);
  }
  // kernel generators: v.col(i) * (n / gcd(s_i, n)) for pivot coords, v.col(i)
  // for free coords
  for (Eigen::Index i = 0; i < f.cols; ++i) {
    i64 scale = 1;
    if (i < r) {
      const i64 g = std::gcd(f.divisors[static_cast<std::size_t>(i)], n);
      if (g == 1) continue;  // trivial generator
      scale = n / g;
    }
    IntVector gen = IntVector::Zero(f.cols);
    bool nonzero = false;
    for (Eigen::Index j = 0; j < f.cols; ++j) {
      gen(j) = mod_pos(static_cast<i128>(f.v(j, i)) * scale, n);
      nonzero |= gen(j) != 0;
    }
    if (nonzero) out.kernel_gens.push_back(std::move(gen));
  }
  return out;
}

namespace {

// extended gcd: returns g and writes u, v with u*a + v*b = g
i64 ext_gcd(i64 a, i64 b, i64& u, i64& v) {
  i64 old_r = a, r = b, old_u = 1, uu = 0, old_v = 0, vv = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * uu;
    old_u = uu;
    uu = t;
    t = old_v - q * vv;
    old_v = vv;
    vv = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  u = old_u;
  v = old_v;
  return old_r;
}

}  // namespace

IntMatrix hnf_lattice_basis(const IntMatrix& gens, std::int64_t n, Eigen::Index dim) {
  if (gens.rows() != 0 && gens.rows() != dim)
    throw std::invalid_argument("hnf_lattice_basis: dimension mismatch");
  if (n == 1) return IntMatrix::Identity(dim, dim);
  // Howell-style echelonization of the subgroup of Z_n^dim generated by the
  // columns; every value stays in [0, n), so nothing can overflow. The
  // saturation step (pushing (n/p) times each pivot column back into the
  // pool) makes the mixed-radix transversal property hold for quotients.
  std::vector<IntVector> pool;
  for (Eigen::Index c = 0; c < gens.cols(); ++c) {
    IntVector v(dim);
    bool nonzero = false;
    for (Eigen::Index r = 0; r < dim; ++r) {
      v(r) = floor_mod(gens(r, c), n);
      nonzero |= v(r) != 0;
    }
    if (nonzero) pool.push_back(std::move(v));
  }

  IntMatrix basis = IntMatrix::Zero(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    // concentrate the row gcd of the pool into one accumulator column
    std::optional<IntVector> acc;
    std::vector<IntVector> rest;
    for (auto& col : pool) {
      if (col(row) == 0) {
        rest.push_back(std::move(col));
        continue;
      }
      if (!acc) {
        acc = std::move(col);
        continue;
      }
      i64 u, v;
      const i64 g = ext_gcd((*acc)(row), col(row), u, v);
      const i64 s = col(row) / g, t = (*acc)(row) / g;
      IntVector combined(dim), complement(dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        const __int128 c1 = static_cast<__int128>(u) * (*acc)(r) +
                            static_cast<__int128>(v) * col(r);
        const __int128 c2 = static_cast<__int128>(s) * (*acc)(r) -
                            static_cast<__int128>(t) * col(r);
        combined(r) = static_cast<i64>(((c1 % n) + n) % n);
        complement(r) = static_cast<i64>(((c2 % n) + n) % n);
      }
      acc = std::move(combined);
      if (!complement.isZero()) rest.push_back(std::move(complement));
    }
    pool = std::move(rest);
    if (!acc) {
      basis(row, row) = n;
      continue;
    }
    // fold in the implicit n*e_row generator: pivot = gcd(value, n)
    i64 u, v;
    const i64 p = ext_gcd((*acc)(row), n, u, v);
    IntVector pivot_col(dim);
    for (Eigen::Index r = 0; r < dim; ++r)
      pivot_col(r) = static_cast<i64>(((static_cast<__int128>(u) * (*acc)(r)) % n + n) % n);
    pivot_col(row) = p;  // u*value = p mod n; force the exact representative
    // saturation: (n/p) * pivot column vanishes at this row, keep its tail
    IntVector sat(dim);
    bool sat_nonzero = false;
    for (Eigen::Index r = 0; r < dim; ++r) {
      sat(r) = static_cast<i64>((static_cast<__int128>(n / p) * pivot_col(r)) % n);
      sat_nonzero |= sat(r) != 0;
    }
    if (sat_nonzero) pool.push_back(std::move(sat));
    basis.col(row) = pivot_col;
  }
  return basis;
}

IntVector reduce_lex_least(const IntMatrix& b, IntVector x, std::int64_t n) {
  const Eigen::Index d = b.rows();
  // all arithmetic mod n; subtracting multiples of n*e_r stays in the coset
  for (Eigen::Index i = 0; i < d; ++i) x(i) = floor_mod(x(i), n);
  for (Eigen::Index i = 0; i < d; ++i) {
    const i64 q = x(i) / b(i, i);
    if (q != 0)
      for (Eigen::Index r = i; r < d; ++r)
        x(r) = floor_mod(x(r) - q * b(r, i), n);
  }
  return x;
}

bool lattice_contains(const IntMatrix& b, const IntVector& x, std::int64_t n) {
  return reduce_lex_least(b, x, n).isZero();
}

LatticeQuotient lattice_quotient(const IntMatrix& ker_basis, const IntMatrix& sub_basis,
                                 std::int64_t n) {
  const Eigen::Index d = ker_basis.rows();
  LatticeQuotient q;
  for (Eigen::Index c = 0; c < d; ++c)
    if (!lattice_contains(ker_basis, sub_basis.col(c), n))
      throw std::logic_error("lattice_quotient: sub-lattice not contained in kernel lattice");
  for (Eigen::Index i = 0; i < d; ++i) {
    const i64 pk = ker_basis(i, i), pm = sub_basis(i, i);
    if (pm % pk != 0)
      throw std::logic_error("lattice_quotient: pivot divisibility violated");
    const i64 ratio = pm / pk;
    if (ratio == 1) continue;
    q.order = static_cast<std::uint64_t>(checked_mul(static_cast<i64>(q.order), ratio));
    q.cyclic_orders.push_back(ratio);
    q.generators.push_back(ker_basis.col(i));
  }
  return q;
}

}  // namespace fspt
