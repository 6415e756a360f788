#include "qrec/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace qrec {

namespace {

std::atomic<unsigned> g_last_verified_prime{2};

void require_prime(unsigned p) {
    if (p == g_last_verified_prime.load(std::memory_order_relaxed)) return;
    if (!is_prime(p)) {
        std::ostringstream os;
        os << "modulus " << p << " is not prime";
        throw InputError(os.str());
    }
    g_last_verified_prime.store(p, std::memory_order_relaxed);
}

unsigned reduce(long long v, unsigned p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<unsigned>(r);
}

unsigned mul(unsigned a, unsigned b, unsigned p) {
    return static_cast<unsigned>((static_cast<std::uint64_t>(a) * b) % p);
}

unsigned add(unsigned a, unsigned b, unsigned p) { return (a + b) % p; }

unsigned sub(unsigned a, unsigned b, unsigned p) { return (a + p - b) % p; }

unsigned inv(unsigned a, unsigned p) {
    // Fermat: a^(p-2) mod p.
    unsigned result = 1;
    unsigned base = a % p;
    unsigned e = p - 2;
    while (e > 0) {
        if (e & 1u) result = mul(result, base, p);
        base = mul(base, base, p);
        e >>= 1u;
    }
    return result;
}

// In-place Gauss-Jordan on the rows of m, eliminating only within the first
// lead_cols columns (the rest ride along as an augmented part). Returns the
// pivot columns in order.
std::vector<std::size_t> rref_in_place(std::vector<std::vector<unsigned>>& m,
                                       std::size_t lead_cols, unsigned p) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t nrows = m.size();
    for (std::size_t col = 0; col < lead_cols && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && m[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[row]);
        const unsigned piv_inv = inv(m[row][col], p);
        for (auto& v : m[row]) v = mul(v, piv_inv, p);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const unsigned factor = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c)
                m[r][c] = sub(m[r][c], mul(factor, m[row][c], p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<unsigned>> to_rows(const Matrix& m) {
    std::vector<std::vector<unsigned>> rows(m.rows(), std::vector<unsigned>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    return rows;
}

Matrix from_row_vectors(const std::vector<std::vector<unsigned>>& rows,
                        std::size_t cols, unsigned p) {
    Matrix out(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rows[r][c]);
    return out;
}

} // namespace

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Fp::Fp(long long v, unsigned p) : modulus(p) {
    require_prime(p);
    value = reduce(v, p);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    require_prime(p);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long long>> rows, unsigned p)
    : p_(p) {
    require_prime(p);
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.assign(rows_ * cols_, 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InputError("ragged matrix literal");
        std::size_t c = 0;
        for (long long v : row) data_[r * cols_ + c++] = reduce(v, p_);
        ++r;
    }
}

Matrix Matrix::identity(std::size_t n, unsigned p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows,
                         std::size_t cols, unsigned p) {
    Matrix m(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

unsigned Matrix::at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, long long v) {
    data_[r * cols_ + c] = reduce(v, p_);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](unsigned v) { return v == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1u : 0u)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && p_ == other.p_ &&
           data_ == other.data_;
}

void Matrix::check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || p_ != other.p_)
        throw InputError("matrix shape/modulus mismatch");
}

Matrix Matrix::operator+(const Matrix& other) const {
    check_same_shape(other);
    Matrix out(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = add(data_[i], other.data_[i], p_);
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    check_same_shape(other);
    Matrix out(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = sub(data_[i], other.data_[i], p_);
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_ || p_ != other.p_)
        throw InputError("matrix product shape/modulus mismatch");
    Matrix out(rows_, other.cols_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const unsigned a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                out.data_[r * other.cols_ + c] =
                    add(out.data_[r * other.cols_ + c], mul(a, other.at(k, c), p_), p_);
        }
    return out;
}

Matrix Matrix::scaled(long long s) const {
    Matrix out(rows_, cols_, p_);
    const unsigned f = reduce(s, p_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = mul(data_[i], f, p_);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size(), p_);
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t r = 0; r < rows_; ++r) out.set(r, j, at(r, idx[j]));
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.modulus() != b.modulus())
        throw InputError("hstack shape/modulus mismatch");
    Matrix out(a.rows(), a.cols() + b.cols(), a.modulus());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || a.modulus() != b.modulus())
        throw InputError("vstack shape/modulus mismatch");
    Matrix out(a.rows() + b.rows(), a.cols(), a.modulus());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b.at(r, c));
    return out;
}

Matrix block_diag(std::span<const Matrix> blocks, unsigned p) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(rows, cols, p);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out.set(r0 + r, c0 + c, b.at(r, c));
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    auto rows = to_rows(m);
    return rref_in_place(rows, m.cols(), m.modulus()).size();
}

Matrix reduced_row_echelon(const Matrix& m) {
    auto rows = to_rows(m);
    rref_in_place(rows, m.cols(), m.modulus());
    return from_row_vectors(rows, m.cols(), m.modulus());
}

Matrix reduced_column_echelon(const Matrix& m) {
    auto rows = to_rows(m.transposed());
    const auto pivots = rref_in_place(rows, m.rows(), m.modulus());
    rows.resize(pivots.size()); // drop zero rows
    return from_row_vectors(rows, m.rows(), m.modulus()).transposed();
}

Matrix nullspace_basis(const Matrix& m) {
    auto rows = to_rows(m);
    const auto pivots = rref_in_place(rows, m.cols(), m.modulus());
    const unsigned p = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(m.cols(), free_cols.size(), p);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t fc = free_cols[j];
        basis.set(fc, j, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.set(pivots[i], j, static_cast<long long>(p) - rows[i][fc]);
    }
    return reduced_column_echelon(basis);
}

Matrix column_space_basis(const Matrix& m) { return reduced_column_echelon(m); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.modulus() != b.modulus())
        throw InputError("solve: row count or modulus mismatch");
    const unsigned p = a.modulus();
    auto aug = to_rows(hstack(a, b));
    const auto pivots = rref_in_place(aug, a.cols(), p);

    // Consistent iff no row is zero on the coefficient side but nonzero on
    // the augmented side.
    for (std::size_t r = pivots.size(); r < aug.size(); ++r)
        for (std::size_t c = a.cols(); c < a.cols() + b.cols(); ++c)
            if (aug[r][c] != 0) return std::nullopt;

    Matrix x(a.cols(), b.cols(), p);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c)
            x.set(pivots[i], c, aug[i][a.cols() + c]);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.rows(), m.modulus()));
}

Matrix quotient_map(const Matrix& subspace_basis, std::size_t ambient_dim) {
    const unsigned p = subspace_basis.modulus();
    const std::size_t k = subspace_basis.cols();
    if (subspace_basis.rows() != ambient_dim && k > 0)
        throw InputError("quotient_map: basis rows do not match ambient dimension");
    if (k > ambient_dim) throw InputError("quotient_map: too many basis columns");
    if (rank(subspace_basis) != k)
        throw InputError("quotient_map: basis columns are dependent");

    // Pivot rows of the basis, then complete with standard vectors on the
    // complementary rows; the quotient map is the bottom of the inverse.
    auto rows = to_rows(subspace_basis.transposed());
    const auto pivots = rref_in_place(rows, ambient_dim, p);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto r : pivots) is_pivot[r] = true;

    Matrix completion(ambient_dim, ambient_dim, p);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < ambient_dim; ++r)
            completion.set(r, c, subspace_basis.at(r, c));
    std::size_t col = k;
    for (std::size_t r = 0; r < ambient_dim; ++r)
        if (!is_pivot[r]) completion.set(r, col++, 1);

    const auto inv_opt = inverse(completion);
    if (!inv_opt) throw InvariantError("quotient_map: completion not invertible");

    Matrix q(ambient_dim - k, ambient_dim, p);
    for (std::size_t r = 0; r < ambient_dim - k; ++r)
        for (std::size_t c = 0; c < ambient_dim; ++c)
            q.set(r, c, inv_opt->at(k + r, c));
    return q;
}

bool same_column_space(const Matrix& a, const Matrix& b) {
    return reduced_column_echelon(a) == reduced_column_echelon(b);
}

} // namespace qrec
