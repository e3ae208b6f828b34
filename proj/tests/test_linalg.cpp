#include "mforge/linalg.hpp"

#include <gtest/gtest.h>

using namespace mforge;

TEST(Matrix, MultiplyAndIdentity) {
    Matrix a(2, 3);
    a(0, 0) = 1;
    a(0, 2) = 2;
    a(1, 1) = Rational(1) / 2;
    Matrix id = Matrix::identity(3);
    EXPECT_EQ(a * id, a);
    EXPECT_TRUE(Matrix::zero(2, 2).is_zero());
    EXPECT_TRUE(Matrix::identity(4).is_identity());
}

TEST(Matrix, RankAndKernel) {
    // rank-1 matrix 2x3
    Matrix m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(1, 2) = 6;
    EXPECT_EQ(rank(m), 1);
    Matrix ker = kernel_basis(m);
    EXPECT_EQ(ker.cols(), 2);
    EXPECT_TRUE((m * ker).is_zero());
}

TEST(Matrix, ExactInverse) {
    Matrix m(3, 3);
    int v = 1;
    // a small invertible integer matrix
    m(0, 0) = 2; m(0, 1) = 1; m(0, 2) = 0;
    m(1, 0) = 1; m(1, 1) = 3; m(1, 2) = 1;
    m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 4;
    (void)v;
    Matrix inv = inverse(m);
    EXPECT_TRUE((m * inv).is_identity());
    EXPECT_TRUE((inv * m).is_identity());

    Matrix sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    EXPECT_THROW(inverse(sing), std::invalid_argument);
}

TEST(Matrix, RationalEntriesStayExact) {
    // inverse of a Hilbert-like matrix has exact integer entries
    const int n = 5;
    Matrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = Rational(1) / (i + j + 1);
    Matrix inv = inverse(h);
    EXPECT_TRUE((h * inv).is_identity());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) EXPECT_EQ(denominator(inv(i, j)), BigInt(1));
}
