#include "sturmkit/modules.hpp"

#include <algorithm>
#include <sstream>

namespace sturmkit {

namespace {

// In-place row Hermite normal form (integer rows): echelon with positive
// pivots, entries above each pivot reduced into [0, pivot). Canonical for a
// given row lattice. Zero rows are dropped.
void hnf_inplace(std::vector<std::vector<Int>>& rows, int cols) {
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        // gcd-eliminate column c below row r
        size_t pivot = rows.size();
        for (size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            while (rows[i][c] != 0) {
                Int q = floor_div(rows[r][c], rows[i][c]);
                for (int j = 0; j < cols; ++j) rows[r][j] -= q * rows[i][j];
                std::swap(rows[r], rows[i]);
            }
        }
        if (rows[r][c] < 0)
            for (int j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
        // reduce entries above the pivot
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(rows[i][c], rows[r][c]);
            if (q != 0)
                for (int j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<Int>& row) {
                                  return std::all_of(row.begin(), row.end(),
                                                     [](const Int& x) { return x == 0; });
                              }),
               rows.end());
}

void rref_inplace(std::vector<std::vector<Rat>>& rows, int cols) {
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        size_t pivot = rows.size();
        for (size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rat inv = Rat(1) / rows[r][c];
        for (int j = 0; j < cols; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<Rat>& row) {
                                  return std::all_of(row.begin(), row.end(),
                                                     [](const Rat& x) { return x == 0; });
                              }),
               rows.end());
}

}  // namespace

ZModule::ZModule(BasisPtr basis, Int denominator, std::vector<std::vector<Int>> hnf_rows)
    : basis_(std::move(basis)), den_(std::move(denominator)), rows_(std::move(hnf_rows)) {}

ZModule zmodule_of(const BasisPtr& basis, const std::vector<RealValue>& values) {
    const int cols = basis->rank();
    Int den = 1;
    for (const RealValue& v : values) {
        if (!same_basis(v.basis(), basis)) throw BasisMismatch();
        for (const Rat& c : v.coords()) den = lcm(den, c.get_den());
    }
    std::vector<std::vector<Int>> rows;
    rows.reserve(values.size());
    for (const RealValue& v : values) {
        std::vector<Int> row(cols);
        for (int j = 0; j < cols; ++j) {
            const Rat& c = v.coord(j);
            row[j] = c.get_num() * (den / c.get_den());
        }
        rows.push_back(std::move(row));
    }
    hnf_inplace(rows, cols);
    // joint normalization: gcd of all entries and the denominator is 1
    Int g = den;
    for (const auto& row : rows)
        for (const Int& x : row) g = gcd(g, x);
    if (g > 1) {
        den /= g;
        for (auto& row : rows)
            for (Int& x : row) x /= g;
    }
    return ZModule(basis, den, std::move(rows));
}

bool ZModule::contains(const RealValue& v) const {
    if (!same_basis(v.basis(), basis_)) throw BasisMismatch();
    const int cols = basis_->rank();
    // v * den must be integral
    std::vector<Int> target(cols);
    for (int j = 0; j < cols; ++j) {
        Rat scaled = v.coord(j) * Rat(den_);
        if (scaled.get_den() != 1) return false;
        target[j] = scaled.get_num();
    }
    size_t row = 0;
    for (int c = 0; c < cols; ++c) {
        if (row < rows_.size() && rows_[row][c] != 0) {
            Int q = floor_div(target[c], rows_[row][c]);
            if (target[c] % rows_[row][c] != 0) return false;
            for (int j = 0; j < cols; ++j) target[j] -= q * rows_[row][j];
            ++row;
        } else if (target[c] != 0) {
            return false;
        }
    }
    return std::all_of(target.begin(), target.end(), [](const Int& x) { return x == 0; });
}

bool ZModule::operator==(const ZModule& o) const {
    return same_basis(basis_, o.basis_) && den_ == o.den_ && rows_ == o.rows_;
}

std::vector<RealValue> ZModule::generators() const {
    std::vector<RealValue> gens;
    for (const auto& row : rows_) {
        std::vector<Rat> coords;
        coords.reserve(row.size());
        for (const Int& x : row) coords.push_back(make_rat(x, den_));
        gens.push_back(RealValue::make(basis_, std::move(coords)));
    }
    return gens;
}

std::string ZModule::str() const {
    std::ostringstream out;
    out << "1/" << den_.get_str() << "*{";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << "; ";
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ",";
            out << rows_[i][j].get_str();
        }
    }
    out << "}";
    return out.str();
}

QSpan::QSpan(BasisPtr basis, std::vector<std::vector<Rat>> rref_rows)
    : basis_(std::move(basis)), rows_(std::move(rref_rows)) {}

QSpan qspan_of(const BasisPtr& basis, const std::vector<RealValue>& values) {
    const int cols = basis->rank();
    std::vector<std::vector<Rat>> rows;
    rows.reserve(values.size());
    for (const RealValue& v : values) {
        if (!same_basis(v.basis(), basis)) throw BasisMismatch();
        rows.push_back(v.coords());
    }
    rref_inplace(rows, cols);
    return QSpan(basis, std::move(rows));
}

bool QSpan::contains(const RealValue& v) const {
    if (!same_basis(v.basis(), basis_)) throw BasisMismatch();
    std::vector<Rat> target = v.coords();
    const int cols = basis_->rank();
    size_t row = 0;
    for (int c = 0; c < cols; ++c) {
        if (row < rows_.size() && rows_[row][c] != 0) {
            Rat f = target[c];  // pivot is 1
            if (f != 0)
                for (int j = 0; j < cols; ++j) target[j] -= f * rows_[row][j];
            ++row;
        } else if (target[c] != 0) {
            return false;
        }
    }
    return std::all_of(target.begin(), target.end(), [](const Rat& x) { return x == 0; });
}

bool QSpan::operator==(const QSpan& o) const {
    return same_basis(basis_, o.basis_) && rows_ == o.rows_;
}

std::string QSpan::str() const {
    std::ostringstream out;
    out << "span{";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << "; ";
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ",";
            out << rat_str(rows_[i][j]);
        }
    }
    out << "}";
    return out.str();
}

WedgeValue::WedgeValue(BasisPtr basis, std::vector<std::vector<Rat>> antisym)
    : basis_(std::move(basis)), m_(std::move(antisym)) {
    const size_t r = static_cast<size_t>(basis_->rank());
    if (m_.size() != r) throw RankMismatch();
    for (size_t i = 0; i < r; ++i) {
        if (m_[i].size() != r) throw RankMismatch();
        for (size_t j = 0; j <= i; ++j)
            if (m_[i][j] != -m_[j][i]) throw Error("WedgeValue: matrix not antisymmetric");
    }
}

WedgeValue WedgeValue::zero(const BasisPtr& basis) {
    const size_t r = static_cast<size_t>(basis->rank());
    return WedgeValue(basis, std::vector<std::vector<Rat>>(r, std::vector<Rat>(r, Rat(0))));
}

bool WedgeValue::is_zero() const {
    for (const auto& row : m_)
        for (const Rat& x : row)
            if (x != 0) return false;
    return true;
}

WedgeValue WedgeValue::operator+(const WedgeValue& o) const {
    if (!same_basis(basis_, o.basis_)) throw BasisMismatch();
    auto m = m_;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) m[i][j] += o.m_[i][j];
    return WedgeValue(basis_, std::move(m));
}

WedgeValue WedgeValue::operator-(const WedgeValue& o) const {
    return *this + (o * Rat(-1));
}

WedgeValue WedgeValue::operator*(const Rat& q) const {
    auto m = m_;
    for (auto& row : m)
        for (Rat& x : row) x *= q;
    return WedgeValue(basis_, std::move(m));
}

bool WedgeValue::operator==(const WedgeValue& o) const {
    return same_basis(basis_, o.basis_) && m_ == o.m_;
}

WedgeValue WedgeValue::projective_canonical() const {
    std::vector<Rat> entries;
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = i + 1; j < m_.size(); ++j) entries.push_back(m_[i][j]);
    Rat content = rat_content(entries);
    if (content == 0) return *this;
    Rat scale = Rat(1) / content;
    for (size_t i = 0; i < m_.size(); ++i) {
        bool done = false;
        for (size_t j = i + 1; j < m_.size(); ++j) {
            if (m_[i][j] != 0) {
                if (m_[i][j] < 0) scale = -scale;
                done = true;
                break;
            }
        }
        if (done) break;
    }
    return *this * scale;
}

std::string WedgeValue::str() const {
    std::ostringstream out;
    out << "wedge{";
    bool first = true;
    for (size_t i = 0; i < m_.size(); ++i)
        for (size_t j = i + 1; j < m_.size(); ++j) {
            if (!first) out << ",";
            out << rat_str(m_[i][j]);
            first = false;
        }
    out << "}";
    return out.str();
}

WedgeValue wedge(const RealValue& x, const RealValue& y) {
    require_same_basis(x, y);
    const size_t r = x.coords().size();
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r, Rat(0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) m[i][j] = x.coord(i) * y.coord(j) - x.coord(j) * y.coord(i);
    return WedgeValue(x.basis(), std::move(m));
}

}  // namespace sturmkit
