#include "a1kit/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace a1kit {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}
}  // namespace

GF2Vector::GF2Vector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

GF2Vector GF2Vector::unit(std::size_t size, std::size_t index) {
    GF2Vector v(size);
    v.set(index, true);
    return v;
}

GF2Vector GF2Vector::from_bits(std::initializer_list<int> bits) {
    GF2Vector v(bits.size());
    std::size_t i = 0;
    for (int b : bits)
        v.set(i++, b != 0);
    return v;
}

bool GF2Vector::get(std::size_t i) const {
    if (i >= size_)
        throw std::invalid_argument("GF2Vector::get: index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void GF2Vector::set(std::size_t i, bool value) {
    if (i >= size_)
        throw std::invalid_argument("GF2Vector::set: index out of range");
    std::uint64_t mask = std::uint64_t(1) << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

bool GF2Vector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w)
            return false;
    return true;
}

std::size_t GF2Vector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += std::popcount(w);
    return n;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
    if (size_ != other.size_)
        throw std::invalid_argument("GF2Vector::operator^=: size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

std::vector<std::size_t> GF2Vector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            out.push_back(i);
    return out;
}

std::string GF2Vector::str() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i)
        s.push_back(get(i) ? '1' : '0');
    return s;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    GF2Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("GF2Matrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (int b : row)
            m.set(i, j++, b != 0);
        ++i;
    }
    return m;
}

GF2Matrix GF2Matrix::from_row_vectors(std::size_t cols, const std::vector<GF2Vector>& rows) {
    GF2Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.set_row(i, rows[i]);
    return m;
}

bool GF2Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::invalid_argument("GF2Matrix::get: index out of range");
    return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_)
        throw std::invalid_argument("GF2Matrix::set: index out of range");
    std::uint64_t mask = std::uint64_t(1) << (c % kWordBits);
    if (value)
        data_[r * wpr_ + c / kWordBits] |= mask;
    else
        data_[r * wpr_ + c / kWordBits] &= ~mask;
}

GF2Vector GF2Matrix::row(std::size_t r) const {
    if (r >= rows_)
        throw std::invalid_argument("GF2Matrix::row: index out of range");
    GF2Vector v(cols_);
    std::copy(data_.begin() + r * wpr_, data_.begin() + (r + 1) * wpr_, v.words_.begin());
    return v;
}

void GF2Matrix::set_row(std::size_t r, const GF2Vector& v) {
    if (r >= rows_)
        throw std::invalid_argument("GF2Matrix::set_row: index out of range");
    if (v.size() != cols_)
        throw std::invalid_argument("GF2Matrix::set_row: length mismatch");
    std::copy(v.words_.begin(), v.words_.end(), data_.begin() + r * wpr_);
}

void GF2Matrix::xor_row(std::size_t r, std::size_t s) {
    for (std::size_t w = 0; w < wpr_; ++w)
        data_[r * wpr_ + w] ^= data_[s * wpr_ + w];
}

void GF2Matrix::swap_rows(std::size_t r, std::size_t s) {
    if (r == s)
        return;
    for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(data_[r * wpr_ + w], data_[s * wpr_ + w]);
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t word = data_[r * wpr_ + w];
            while (word) {
                std::size_t c = w * kWordBits + std::countr_zero(word);
                t.set(c, r, true);
                word &= word - 1;
            }
        }
    return t;
}

bool GF2Matrix::is_zero() const {
    for (std::uint64_t w : data_)
        if (w)
            return false;
    return true;
}

GF2Matrix operator*(const GF2Matrix& lhs, const GF2Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_)
        throw std::invalid_argument("GF2Matrix product: dimension mismatch");
    GF2Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t r = 0; r < lhs.rows_; ++r)
        for (std::size_t w = 0; w < lhs.wpr_; ++w) {
            std::uint64_t word = lhs.data_[r * lhs.wpr_ + w];
            while (word) {
                std::size_t k = w * kWordBits + std::countr_zero(word);
                for (std::size_t ww = 0; ww < out.wpr_; ++ww)
                    out.data_[r * out.wpr_ + ww] ^= rhs.data_[k * rhs.wpr_ + ww];
                word &= word - 1;
            }
        }
    return out;
}

GF2Matrix operator+(const GF2Matrix& lhs, const GF2Matrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
        throw std::invalid_argument("GF2Matrix sum: dimension mismatch");
    GF2Matrix out = lhs;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] ^= rhs.data_[i];
    return out;
}

GF2Vector GF2Matrix::apply(const GF2Vector& x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("GF2Matrix::apply: dimension mismatch");
    GF2Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < wpr_; ++w)
            acc ^= data_[r * wpr_ + w] & x.words_[w];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

std::string GF2Matrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            os << (get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

RrefResult rref(const GF2Matrix& m) {
    GF2Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && !r.get(piv, col))
            ++piv;
        if (piv == r.rows())
            continue;
        r.swap_rows(lead, piv);
        for (std::size_t i = 0; i < r.rows(); ++i)
            if (i != lead && r.get(i, col))
                r.xor_row(i, lead);
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const GF2Matrix& m) {
    return rref(m).pivots.size();
}

GF2Matrix kernel_basis(const GF2Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    GF2Matrix basis(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t f = free_cols[i];
        basis.set(i, f, true);
        for (std::size_t p = 0; p < rr.pivots.size(); ++p)
            if (rr.reduced.get(p, f))
                basis.set(i, rr.pivots[p], true);
    }
    return basis;
}

std::optional<GF2Vector> solve(const GF2Matrix& m, const GF2Vector& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: rhs length must equal row count");
    GF2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        GF2Vector row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (row.get(c))
                aug.set(r, c, true);
        if (b.get(r))
            aug.set(r, m.cols(), true);
    }
    RrefResult rr = rref(aug);
    GF2Vector x(m.cols());
    for (std::size_t p = 0; p < rr.pivots.size(); ++p) {
        if (rr.pivots[p] == m.cols())
            return std::nullopt;  // pivot in the augmented column
        if (rr.reduced.get(p, m.cols()))
            x.set(rr.pivots[p], true);
    }
    return x;
}

RowSpace::RowSpace(std::size_t ambient) : ambient_(ambient) {}

RowSpace::RowSpace(const GF2Matrix& m) : ambient_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        insert(m.row(r));
}

bool RowSpace::insert(GF2Vector v) {
    if (v.size() != ambient_)
        throw std::invalid_argument("RowSpace::insert: ambient dimension mismatch");
    v = reduce(std::move(v));
    if (v.is_zero())
        return false;
    std::size_t pivot = v.ones().front();
    // keep existing rows reduced against the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(pivot))
            rows_[i] ^= v;
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

bool RowSpace::contains(const GF2Vector& v) const {
    return reduce(v).is_zero();
}

GF2Vector RowSpace::reduce(GF2Vector v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("RowSpace::reduce: ambient dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i]))
            v ^= rows_[i];
    return v;
}

std::vector<std::size_t> RowSpace::free_coords() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_)
        is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient_; ++c)
        if (!is_pivot[c])
            out.push_back(c);
    return out;
}

std::optional<GF2Vector> RowSpace::coords_in_basis(const GF2Vector& v) const {
    if (!contains(v))
        return std::nullopt;
    GF2Vector coords(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        coords.set(i, v.get(pivots_[i]));
    return coords;
}

GF2Vector RowSpace::quotient_coords(const GF2Vector& v) const {
    GF2Vector red = reduce(v);
    std::vector<std::size_t> free = free_coords();
    GF2Vector out(free.size());
    for (std::size_t i = 0; i < free.size(); ++i)
        out.set(i, red.get(free[i]));
    return out;
}

GF2Matrix RowSpace::basis_matrix() const {
    return GF2Matrix::from_row_vectors(ambient_, rows_);
}

bool same_row_space(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols() != b.cols())
        return false;
    return RowSpace(a).basis_matrix() == RowSpace(b).basis_matrix();
}

}  // namespace a1kit
