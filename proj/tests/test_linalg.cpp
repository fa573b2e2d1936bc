#include <doctest.h>

#include <random>

#include "cmlattice/cochain.hpp"
#include "cmlattice/error.hpp"
#include "cmlattice/linalg.hpp"
#include "oracle.hpp"

using namespace cmlattice;

namespace {

const Field Q = Field::rationals();

Matrix random_int_matrix(std::mt19937& rng, const Field& f, std::size_t r, std::size_t c, int lo, int hi) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::int64_t>(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1))));
  return m;
}

oracle::Rows to_rows(const Matrix& m) {
  oracle::Rows rows(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num().get_si();
  return rows;
}

}  // namespace

TEST_CASE("field construction and arithmetic") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("p:7").characteristic() == 7);
  CHECK_THROWS_AS(Field::prime(8), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_THROWS_AS(Field::prime(2147483659LL), Error);
  CHECK_THROWS_AS(Field::parse("z"), Error);
  const Field f7 = Field::prime(7);
  CHECK(f7.promote(-1) == 6);
  CHECK(f7.mul(3, f7.inverse(3)) == 1);
  CHECK(f7.promote(mpq_class(1, 2)) == 4);
  CHECK_THROWS(f7.promote(mpq_class(1, 7)));
  CHECK(Q.inverse(mpq_class(2, 3)) == mpq_class(3, 2));
}

TEST_CASE("rank: identity, zero, and characteristic-dependent example") {
  CHECK(rank(Matrix::identity(Q, 2)) == 2);
  CHECK(rank(Matrix(Q, 3, 4)) == 0);
  CHECK(rank(Matrix::from_rows(Q, {{2, 4}, {1, 2}})) == 1);
  CHECK(rank(Matrix::from_rows(Q, {{2, 4}, {4, 6}})) == 2);
  CHECK(rank(Matrix::from_rows(Field::prime(2), {{2, 4}, {4, 6}})) == 0);
  CHECK(rank(Matrix(Q, 0, 5)) == 0);
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(Matrix::identity(Q, 3)).cols() == 0);
  const Matrix z(Q, 2, 3);
  const Matrix kz = kernel_basis(z);
  CHECK(kz.cols() == 3);
  CHECK(rank(kz) == 3);
  const Matrix row = Matrix::from_rows(Q, {{1, 1}});
  const Matrix k = kernel_basis(row);
  REQUIRE(k.cols() == 1);
  CHECK((row * k).is_zero());
  CHECK(k(0, 0) == -k(1, 0));
}

TEST_CASE("fraction-free elimination stays exact on Hilbert matrices") {
  // det of the n x n Hilbert matrix is 1/c_n with c_n = 12, 2160, 6048000 for n = 2, 3, 4.
  const std::vector<mpz_class> inverse_dets = {1, 12, 2160, 6048000};
  for (std::size_t n = 1; n <= 4; ++n) {
    Matrix h(Q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h.set(i, j, mpq_class(1, static_cast<unsigned long>(i + j + 1)));
    CHECK(rank(h) == n);
    CHECK(determinant(h) == mpq_class(mpz_class(1), inverse_dets[n - 1]));
    const RowReduction rr = row_reduce(h);
    CHECK(rr.reduced == Matrix::identity(Q, n));
  }
}

TEST_CASE("row reduction is idempotent and solve reproduces the right-hand side") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = random_int_matrix(rng, Q, 4, 5, -3, 3);
    const RowReduction rr = row_reduce(a);
    CHECK(row_reduce(rr.reduced).reduced == rr.reduced);
    const Matrix x = random_int_matrix(rng, Q, 5, 2, -2, 2);
    const Matrix b = a * x;
    const SolveResult s = solve(a, b);
    REQUIRE(s.solvable);
    CHECK(a * s.solution == b);
  }
  const SolveResult none = solve(Matrix::from_rows(Q, {{1, 0}, {0, 0}}), Matrix::from_rows(Q, {{0}, {1}}));
  CHECK_FALSE(none.solvable);
}

TEST_CASE("property: rank-nullity and rank of the transpose") {
  std::mt19937 rng(11);
  for (const Field& f : {Q, Field::prime(2), Field::prime(32003)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      const Matrix m = random_int_matrix(rng, f, r, c, -2, 2);
      const Matrix k = kernel_basis(m);
      CHECK(rank(m) + k.cols() == c);
      CHECK((m * k).is_zero());
      CHECK(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("property: rational rank agrees with the int64 oracle modulo random large primes") {
  std::mt19937 rng(13);
  const std::vector<std::int64_t> primes = {1000003, 998244353, 2147483647};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 2 + rng() % 5, c = 2 + rng() % 5;
    const Matrix m = random_int_matrix(rng, Q, r, c, -4, 4);
    int votes = 0;
    for (auto p : primes) {
      if (oracle::rank_mod(to_rows(m), p) == rank(m)) ++votes;
      Matrix mp(Field::prime(p), r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) mp.set(i, j, m(i, j));
      CHECK(rank(mp) == oracle::rank_mod(to_rows(m), p));
    }
    CHECK(votes >= 2);
  }
}

TEST_CASE("cohomology examples") {
  const CochainComplex iso(Q, 0, {1, 1}, {Matrix::identity(Q, 1)});
  const CohomologyProfile h_iso = cohomology(iso);
  CHECK(h_iso.dim(0) == 0);
  CHECK(h_iso.dim(1) == 0);

  const CochainComplex two(Q, 0, {2, 1}, {Matrix::from_rows(Q, {{1, -1}})});
  const CohomologyProfile h2 = cohomology(two);
  CHECK(h2.dim(0) == 1);
  CHECK(h2.dim(1) == 0);
  CHECK(h2.euler_characteristic() == two.euler_characteristic());

  // Boundary of a square: vertices 0..3, edges (0,1),(1,2),(2,3),(3,0).
  const Matrix d0 = Matrix::from_rows(Q, {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {1, 0, 0, -1}});
  CHECK(oracle::rank_mod(to_rows(d0), oracle::kBigPrime) == 3);
  const CohomologyProfile circle = cohomology(CochainComplex(Q, 0, {4, 4}, {d0}));
  CHECK(circle.dim(0) == 1);
  CHECK(circle.dim(1) == 1);
}

TEST_CASE("malformed complexes are rejected") {
  CHECK_THROWS_AS(CochainComplex(Q, 0, {2, 1}, {Matrix::identity(Q, 2)}), Error);
  CHECK_THROWS_AS(CochainComplex(Q, 0, {1, 1, 1}, {Matrix::identity(Q, 1), Matrix::identity(Q, 1)}), Error);
  CHECK_THROWS_AS(CochainComplex(Q, 0, {1, 1}, {}), Error);
  try {
    CochainComplex(Q, 0, {1, 1, 1}, {Matrix::identity(Q, 1), Matrix::identity(Q, 1)});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedComplex);
  }
}

TEST_CASE("induced maps on cohomology") {
  const CochainComplex c(Q, 0, {2, 1}, {Matrix::from_rows(Q, {{1, -1}})});
  const ChainMap id(c, c, {Matrix::identity(Q, 2), Matrix::identity(Q, 1)});
  CHECK(induced_map_on_cohomology(id, 0) == Matrix::identity(Q, 1));
  CHECK(induced_map_on_cohomology(id, 1).rows() == 0);

  const ChainMap zero(c, c, {Matrix(Q, 2, 2), Matrix(Q, 1, 1)});
  CHECK(induced_map_on_cohomology(zero, 0).is_zero());

  // The second coordinate spans a subcomplex 0 -> K -> K -> 0 with d = [-1];
  // its inclusion induces the (rank 0) map from H^0 = 0.
  const CochainComplex sub(Q, 0, {1, 1}, {Matrix::from_rows(Q, {{-1}})});
  const ChainMap incl(sub, c, {Matrix::from_rows(Q, {{0}, {1}}), Matrix::identity(Q, 1)});
  const Matrix h0 = induced_map_on_cohomology(incl, 0);
  CHECK(h0.rows() == 1);
  CHECK(h0.cols() == 0);
  CHECK(rank(h0) == 0);

  // The coordinate projection onto that piece does not commute.
  CHECK_THROWS_AS(ChainMap(c, sub, {Matrix::from_rows(Q, {{0, 1}}), Matrix::identity(Q, 1)}), Error);
}

TEST_CASE("induced maps compose along a chain of coordinate projections") {
  const CochainComplex big(Q, 0, {3, 1}, {Matrix::from_rows(Q, {{1, 0, 0}})});
  const CochainComplex mid(Q, 0, {2, 1}, {Matrix::from_rows(Q, {{1, 0}})});
  const CochainComplex small(Q, 0, {1, 0}, {Matrix(Q, 0, 1)});
  const ChainMap f(big, mid, {Matrix::from_rows(Q, {{1, 0, 0}, {0, 0, 1}}), Matrix::identity(Q, 1)});
  const ChainMap g(mid, small, {Matrix::from_rows(Q, {{0, 1}}), Matrix(Q, 0, 1)});
  const ChainMap gf(big, small, {g.component(0) * f.component(0), Matrix(Q, 0, 1)});
  CHECK(induced_map_on_cohomology(g, 0) * induced_map_on_cohomology(f, 0) == induced_map_on_cohomology(gf, 0));
}
