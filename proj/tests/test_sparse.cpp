#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "fracpow/eigen_oracle.hpp"
#include "fracpow/harness.hpp"
#include "fracpow/sparse.hpp"

using namespace fracpow;

TEST(Sparse, Assemble1D) {
  GridSpec grid(1, 3);  // h = 1/4, scale = 16
  SparseSymMatrix A = assemble_laplacian(grid);
  EXPECT_EQ(A.n, 3);
  EXPECT_EQ(A.nnz(), 7);
  EXPECT_DOUBLE_EQ(A.diagonal(0), 32.0);
  EXPECT_DOUBLE_EQ(A.diagonal(1), 32.0);
  GridFunction y = A.multiply(GridFunction{1.0, 1.0, 1.0});
  EXPECT_DOUBLE_EQ(y[0], 16.0);  // 32 - 16
  EXPECT_DOUBLE_EQ(y[1], 0.0);   // -16 + 32 - 16
  EXPECT_DOUBLE_EQ(y[2], 16.0);
}

TEST(Sparse, Assemble2D) {
  GridSpec grid(2, 3);  // h = 1/4
  SparseSymMatrix A = assemble_laplacian(grid);
  EXPECT_EQ(A.n, 9);
  for (int i = 0; i < 9; ++i) EXPECT_DOUBLE_EQ(A.diagonal(i), 64.0);
  // interior row (center node) has four -16 neighbors
  GridFunction e(9, 0.0);
  e[4] = 1.0;
  GridFunction y = A.multiply(e);
  EXPECT_DOUBLE_EQ(y[4], 64.0);
  EXPECT_DOUBLE_EQ(y[1], -16.0);
  EXPECT_DOUBLE_EQ(y[3], -16.0);
  EXPECT_DOUBLE_EQ(y[5], -16.0);
  EXPECT_DOUBLE_EQ(y[7], -16.0);
  EXPECT_DOUBLE_EQ(y[0], 0.0);
}

TEST(Sparse, InfNormClosedForm) {
  for (int dim : {1, 2}) {
    GridSpec grid(dim, 31);
    SparseSymMatrix A = assemble_laplacian(grid);
    EXPECT_DOUBLE_EQ(matrix_inf_norm(A), grid_matrix_norm(grid));
  }
}

TEST(Sparse, EigenOracleConsistency) {
  for (int dim : {1, 2}) {
    GridSpec grid(dim, 15);
    SparseSymMatrix A = assemble_laplacian(grid);
    for (EigenIndex idx : {EigenIndex{1, 1}, EigenIndex{3, 5}, EigenIndex{15, 15}}) {
      if (dim == 1) idx.j = 1;
      EigenPair ep = eigen_oracle(grid, idx);
      EXPECT_NEAR(norm2(ep.psi), 1.0, 1e-12);
      GridFunction Ap = A.multiply(ep.psi);
      double err = 0;
      for (std::size_t p = 0; p < Ap.size(); ++p)
        err = std::max(err, std::abs(Ap[p] - ep.lambda * ep.psi[p]));
      EXPECT_LT(err, 1e-9 * ep.lambda);
    }
  }
  EXPECT_THROW(eigen_oracle(GridSpec(1, 15), {16, 1}), std::out_of_range);
}

TEST(Sparse, DiagonalReaction) {
  GridSpec grid(1, 3);
  SparseSymMatrix A = assemble_laplacian(grid);
  SparseSymMatrix B = add_diagonal_reaction(A, GridFunction{1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(B.diagonal(0), 33.0);
  EXPECT_DOUBLE_EQ(B.diagonal(2), 35.0);
  EXPECT_THROW(add_diagonal_reaction(A, GridFunction{-1.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(add_diagonal_reaction(A, GridFunction{1.0}), std::invalid_argument);
}

TEST(Sparse, MatrixMarketExport) {
  GridSpec grid(1, 3);
  SparseSymMatrix A = assemble_laplacian(grid);
  std::ostringstream os;
  write_matrix_market(os, A);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "%%MatrixMarket matrix coordinate real general");
  std::getline(is, line);
  EXPECT_EQ(line, "3 3 7");
  int entries = 0;
  while (std::getline(is, line)) ++entries;
  EXPECT_EQ(entries, 7);
}
