#pragma once

// Dense exact linear algebra over a prime field F_p. Everything downstream
// (Hom spaces, kernels, cokernels, exact-sequence checks) reduces to the
// handful of operations declared here. Dimensions in this project never
// exceed a few dozen, so the implementation favors determinism over speed:
// every subspace basis is returned in reduced column echelon form, which
// makes "same subspace" the same thing as "same matrix".

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qrec/errors.hpp"

namespace qrec {

/// A single residue mod a prime. Mostly used at API boundaries (relation
/// coefficients); matrices store raw residues and share one modulus.
struct Fp {
    unsigned value = 0;
    unsigned modulus = 2;

    Fp() = default;
    Fp(long long v, unsigned p);

    bool operator==(const Fp&) const = default;
};

/// True iff p is prime (trial division; moduli here are small).
bool is_prime(unsigned p);

/// Row-major dense matrix over F_p. Immutable in spirit: operations return
/// new matrices. A 0xN or Nx0 matrix is a legitimate value.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, unsigned p);
    Matrix(std::initializer_list<std::initializer_list<long long>> rows, unsigned p);

    static Matrix identity(std::size_t n, unsigned p);
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows,
                            std::size_t cols, unsigned p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned modulus() const { return p_; }

    unsigned at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, long long v);

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& other) const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix scaled(long long s) const;
    Matrix transposed() const;

    Matrix column(std::size_t c) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    unsigned p_ = 2;
    std::vector<unsigned> data_;

    void check_same_shape(const Matrix& other) const;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(std::span<const Matrix> blocks, unsigned p);

/// Rank over F_p by Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Reduced row echelon form.
Matrix reduced_row_echelon(const Matrix& m);

/// Reduced column echelon form with zero columns dropped: the canonical
/// basis matrix of the column space. Equal subspaces give equal matrices.
Matrix reduced_column_echelon(const Matrix& m);

/// Canonical basis of ker(m), as columns. m * result == 0 and
/// cols(result) == cols(m) - rank(m).
Matrix nullspace_basis(const Matrix& m);

/// Canonical basis of im(m), as columns.
Matrix column_space_basis(const Matrix& m);

/// Some solution x of a*x = b (free variables set to zero), or nullopt if
/// the system is inconsistent. Throws InputError on a row-count mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// A surjection q: F_p^ambient -> F_p^(ambient - k) whose kernel is exactly
/// the span of the given k independent columns. Realizes quotient spaces.
/// Throws InputError if the columns are dependent or ambient_dim too small.
Matrix quotient_map(const Matrix& subspace_basis, std::size_t ambient_dim);

/// True iff the column spans coincide.
bool same_column_space(const Matrix& a, const Matrix& b);

} // namespace qrec
