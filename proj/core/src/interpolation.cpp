#include <fatpoints/interpolation.hpp>

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>

#include <fatpoints/prime_field.hpp>
#include <fatpoints/splitmix64.hpp>

namespace fatpoints::interpolation {

namespace {

using u64 = std::uint64_t;

// Entry-count guard for dense matrices (10^8 entries = 800 MB).
constexpr std::size_t kMaxMatrixEntries = 100000000;

void monomials_rec(unsigned nvars, unsigned degree, std::vector<unsigned>& prefix,
                   std::vector<std::vector<unsigned>>& out) {
  if (nvars == 1) {
    prefix.push_back(degree);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned first = degree + 1; first-- > 0;) {
    prefix.push_back(first);
    monomials_rec(nvars - 1, degree - first, prefix, out);
    prefix.pop_back();
  }
}

// Multi-indices over `nvars` variables with total degree 0..max_total,
// degree-ascending, lex-descending within each degree (graded-lex).
std::vector<std::vector<unsigned>> multi_indices_up_to(unsigned nvars,
                                                       unsigned max_total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  for (unsigned t = 0; t <= max_total; ++t) {
    monomials_rec(nvars, t, prefix, out);
  }
  return out;
}

void check_point_set(const PointSet& points) {
  if (points.n < 1) {
    throw std::invalid_argument("PointSet: n must be >= 1");
  }
  if (points.points.empty()) {
    throw std::invalid_argument("PointSet: must contain at least one point");
  }
  for (const auto& pt : points.points) {
    if (pt.coords.size() != points.n + 1 || pt.coords[0] != 1) {
      throw std::invalid_argument(
          "PointSet: every point needs n+1 coordinates with coords[0] = 1");
    }
  }
}

}  // namespace

PrimeModulus PrimeModulus::checked(u64 p) {
  if (p < 3 || p >= gf::kMaxModulus) {
    throw std::invalid_argument("PrimeModulus: need 3 <= p < 2^62");
  }
  if (!gf::is_prime_u64(p)) {
    throw std::invalid_argument("PrimeModulus: " + std::to_string(p) +
                                " is not prime");
  }
  return PrimeModulus(p);
}

PointSet sample_points(unsigned n, const BigInt& s, const PrimeModulus& prime,
                       u64 seed) {
  if (n < 1) {
    throw std::invalid_argument("sample_points: n must be >= 1");
  }
  if (s < 1) {
    throw std::invalid_argument("sample_points: s must be >= 1");
  }
  const u64 p = prime.value();
  if (s > exactnum::pow_big(BigInt(static_cast<unsigned long>(p)), n)) {
    throw std::invalid_argument(
        "sample_points: s exceeds the number of distinct chart points p^n");
  }
  if (s.fits_ulong_p() == 0) {
    throw std::invalid_argument("sample_points: s too large to materialize");
  }
  const unsigned long count = s.get_ui();

  SplitMix64 rng{seed};
  // Unbiased reduction: reject raw values at or above the largest multiple
  // of p representable in 64 bits, then take the remainder.
  const u64 mod64 = ((~0ULL % p) + 1) % p;  // 2^64 mod p
  const u64 reject_from = 0ULL - mod64;     // 2^64 - mod64 when mod64 > 0
  const auto draw = [&]() {
    u64 u = rng.next();
    if (mod64 != 0) {
      while (u >= reject_from) {
        u = rng.next();
      }
    }
    return u % p;
  };

  PointSet out;
  out.n = n;
  out.prime = p;
  std::set<std::vector<u64>> seen;
  while (out.points.size() < count) {
    std::vector<u64> affine(n);
    for (unsigned i = 0; i < n; ++i) {
      affine[i] = draw();
    }
    if (!seen.insert(affine).second) {
      continue;  // collision: resample the whole point
    }
    ProjectivePoint pt;
    pt.coords.reserve(n + 1);
    pt.coords.push_back(1);
    pt.coords.insert(pt.coords.end(), affine.begin(), affine.end());
    out.points.push_back(std::move(pt));
  }
  return out;
}

std::vector<std::vector<unsigned>> monomial_basis(unsigned n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  monomials_rec(n + 1, d, prefix, out);
  return out;
}

std::vector<std::vector<u64>> condition_rows(
    const ProjectivePoint& point, unsigned m, unsigned d,
    const std::vector<std::vector<unsigned>>& basis, u64 p) {
  if (m < 1) {
    throw std::invalid_argument("condition_rows: m must be >= 1");
  }
  if (point.coords.size() < 2 || point.coords[0] != 1) {
    throw std::invalid_argument(
        "condition_rows: point must be normalized with coords[0] = 1");
  }
  const unsigned n = static_cast<unsigned>(point.coords.size()) - 1;
  if (!basis.empty() && basis.front().size() != n + 1) {
    throw std::invalid_argument("condition_rows: basis/point dimension mismatch");
  }

  // Pascal triangle mod p: C(a, b) for 0 <= b <= a <= d.
  std::vector<std::vector<u64>> choose(d + 1);
  for (unsigned a = 0; a <= d; ++a) {
    choose[a].assign(a + 1, 1);
    for (unsigned b = 1; b < a; ++b) {
      choose[a][b] = gf::add(choose[a - 1][b - 1], choose[a - 1][b], p);
    }
  }
  // Coordinate powers: pw[i][e] = point_i^e for the n affine coordinates.
  std::vector<std::vector<u64>> pw(n);
  for (unsigned i = 0; i < n; ++i) {
    pw[i].resize(d + 1);
    pw[i][0] = 1;
    const u64 c = point.coords[i + 1] % p;
    for (unsigned e = 1; e <= d; ++e) {
      pw[i][e] = gf::mul(pw[i][e - 1], c, p);
    }
  }

  const auto betas = multi_indices_up_to(n, m - 1);
  std::vector<std::vector<u64>> rows;
  rows.reserve(betas.size());
  for (const auto& beta : betas) {
    std::vector<u64> row(basis.size(), 0);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto& mono = basis[c];
      u64 entry = 1;
      for (unsigned i = 0; i < n; ++i) {
        const unsigned a = mono[i + 1];
        const unsigned b = beta[i];
        if (b > a) {
          entry = 0;
          break;
        }
        entry = gf::mul(entry, choose[a][b], p);
        entry = gf::mul(entry, pw[i][a - b], p);
      }
      row[c] = entry;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ConditionMatrix build_matrix(const PointSet& points, unsigned m, unsigned d) {
  check_point_set(points);
  if (m < 1) {
    throw std::invalid_argument("build_matrix: m must be >= 1");
  }
  const auto basis = monomial_basis(points.n, d);

  const BigInt rows_big =
      BigInt(static_cast<unsigned long>(points.points.size())) *
      exactnum::binomial(BigInt(m - 1) + points.n, points.n);
  const BigInt entries_big = rows_big * BigInt(static_cast<unsigned long>(basis.size()));
  if (entries_big > BigInt(static_cast<unsigned long>(kMaxMatrixEntries))) {
    throw std::invalid_argument("build_matrix: matrix would exceed the size guard");
  }

  ConditionMatrix mat;
  mat.prime = points.prime;
  mat.cols = basis.size();
  mat.rows = static_cast<std::size_t>(rows_big.get_ui());
  mat.data.assign(mat.rows * mat.cols, 0);

  std::size_t r = 0;
  for (const auto& pt : points.points) {
    for (auto& row : condition_rows(pt, m, d, basis, mat.prime)) {
      std::copy(row.begin(), row.end(), mat.data.begin() + r * mat.cols);
      ++r;
    }
  }
  return mat;
}

std::size_t rank_gf(ConditionMatrix mat) {
  const u64 p = mat.prime;
  if (p < 3) {
    throw std::invalid_argument("rank_gf: matrix carries no valid modulus");
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < mat.cols && rank < mat.rows; ++col) {
    std::size_t piv = rank;
    while (piv < mat.rows && mat.at(piv, col) == 0) {
      ++piv;
    }
    if (piv == mat.rows) {
      continue;
    }
    if (piv != rank) {
      std::swap_ranges(mat.data.begin() + piv * mat.cols + col,
                       mat.data.begin() + (piv + 1) * mat.cols,
                       mat.data.begin() + rank * mat.cols + col);
    }
    const u64 scale = gf::inv(mat.at(rank, col), p);
    for (std::size_t c = col; c < mat.cols; ++c) {
      mat.at(rank, c) = gf::mul(mat.at(rank, c), scale, p);
    }
    for (std::size_t r = rank + 1; r < mat.rows; ++r) {
      const u64 factor = mat.at(r, col);
      if (factor == 0) {
        continue;
      }
      for (std::size_t c = col; c < mat.cols; ++c) {
        mat.at(r, c) = gf::sub(mat.at(r, c), gf::mul(factor, mat.at(rank, c), p), p);
      }
    }
    ++rank;
  }
  return rank;
}

bool has_kernel(const PointSet& points, unsigned m, unsigned d) {
  return has_kernel(build_matrix(points, m, d));
}

bool has_kernel(ConditionMatrix matrix) {
  const std::size_t cols = matrix.cols;
  return rank_gf(std::move(matrix)) < cols;
}

AlphaResult alpha_of(const PointSet& points, unsigned m, unsigned cap) {
  check_point_set(points);
  if (m < 1) {
    throw std::invalid_argument("alpha_of: m must be >= 1");
  }
  if (cap < 1) {
    throw std::invalid_argument("alpha_of: cap must be >= 1");
  }
  AlphaResult out;
  for (unsigned d = 1; d <= cap; ++d) {
    ConditionMatrix mat = build_matrix(points, m, d);
    const std::size_t cols = mat.cols;
    const std::size_t rk = rank_gf(std::move(mat));
    out.ranks.emplace_back(d, rk);
    if (rk < cols) {
      out.alpha = d;
      return out;
    }
  }
  throw CapExceeded("alpha_of: no kernel found up to degree cap " +
                    std::to_string(cap));
}

unsigned default_degree_cap(unsigned n, const BigInt& s, unsigned m) {
  if (n < 1 || s < 1 || m < 1) {
    throw std::invalid_argument("default_degree_cap: need n, s, m >= 1");
  }
  const BigInt t = BigInt(m) + n - 1;
  const BigInt k = exactnum::int_nth_root(s, n);
  const BigInt guarded = k * t - (n - 1) + n;  // conclusion bound plus slack
  const BigInt delta = exactnum::floor_mul_nth_root(t, s, n) - (n - 1);
  const BigInt cap = std::max(guarded, delta);
  if (cap.fits_ulong_p() == 0 ||
      cap.get_ui() > std::numeric_limits<unsigned>::max()) {
    throw std::invalid_argument("default_degree_cap: cap exceeds machine range");
  }
  return static_cast<unsigned>(cap.get_ui());
}

std::vector<SequenceRow> waldschmidt_sequence(const PointSet& points,
                                              unsigned max_mult, unsigned cap) {
  check_point_set(points);
  if (max_mult < 1) {
    throw std::invalid_argument("waldschmidt_sequence: max_mult must be >= 1");
  }
  const BigInt s(static_cast<unsigned long>(points.points.size()));
  std::vector<SequenceRow> rows;
  rows.reserve(max_mult);
  for (unsigned m = 1; m <= max_mult; ++m) {
    const unsigned use_cap = cap != 0 ? cap : default_degree_cap(points.n, s, m);
    const AlphaResult res = alpha_of(points, m, use_cap);
    Rational ratio(res.alpha, m);
    ratio.canonicalize();
    rows.push_back(SequenceRow{m, res.alpha, std::move(ratio)});
  }
  return rows;
}

PointSet read_point_set(std::istream& in) {
  unsigned long long n_in = 0;
  unsigned long long s_in = 0;
  unsigned long long p_in = 0;
  if (!(in >> n_in >> s_in >> p_in)) {
    throw std::invalid_argument("point file: malformed header (expected: n s p)");
  }
  if (n_in < 1 || n_in > std::numeric_limits<unsigned>::max()) {
    throw std::invalid_argument("point file: n out of range");
  }
  if (s_in < 1) {
    throw std::invalid_argument("point file: s must be >= 1");
  }
  const PrimeModulus prime = PrimeModulus::checked(p_in);

  PointSet out;
  out.n = static_cast<unsigned>(n_in);
  out.prime = prime.value();
  std::set<std::vector<u64>> seen;
  for (unsigned long long r = 0; r < s_in; ++r) {
    std::vector<u64> affine(out.n);
    for (unsigned i = 0; i < out.n; ++i) {
      unsigned long long c = 0;
      if (!(in >> c)) {
        throw std::invalid_argument("point file: truncated point row");
      }
      affine[i] = static_cast<u64>(c % out.prime);
    }
    if (!seen.insert(affine).second) {
      throw std::invalid_argument("point file: duplicate point");
    }
    ProjectivePoint pt;
    pt.coords.reserve(out.n + 1);
    pt.coords.push_back(1);
    pt.coords.insert(pt.coords.end(), affine.begin(), affine.end());
    out.points.push_back(std::move(pt));
  }
  return out;
}

void write_point_set(std::ostream& out, const PointSet& points) {
  check_point_set(points);
  out << points.n << ' ' << points.points.size() << ' ' << points.prime << '\n';
  for (const auto& pt : points.points) {
    for (unsigned i = 1; i <= points.n; ++i) {
      out << pt.coords[i] << (i == points.n ? '\n' : ' ');
    }
  }
}

}  // namespace fatpoints::interpolation
