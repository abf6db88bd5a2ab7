#pragma once

#include <vector>

#include "sturmkit/real.hpp"

namespace sturmkit {

// Finitely generated Z-submodule of the ambient space, held in a canonical
// form: a single global denominator plus the row Hermite normal form of the
// integer coordinate matrix. Equal modules yield identical stored data.
class ZModule {
public:
    ZModule(BasisPtr basis, Int denominator, std::vector<std::vector<Int>> hnf_rows);

    const BasisPtr& basis() const { return basis_; }
    const Int& denominator() const { return den_; }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    bool contains(const RealValue& v) const;
    bool operator==(const ZModule& o) const;
    bool operator!=(const ZModule& o) const { return !(*this == o); }

    std::vector<RealValue> generators() const;
    std::string str() const;

private:
    BasisPtr basis_;
    Int den_;
    std::vector<std::vector<Int>> rows_;
};

ZModule zmodule_of(const BasisPtr& basis, const std::vector<RealValue>& values);

// Q-subspace in reduced row echelon form (canonical).
class QSpan {
public:
    QSpan(BasisPtr basis, std::vector<std::vector<Rat>> rref_rows);

    const BasisPtr& basis() const { return basis_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    bool contains(const RealValue& v) const;
    bool operator==(const QSpan& o) const;
    bool operator!=(const QSpan& o) const { return !(*this == o); }
    std::string str() const;

private:
    BasisPtr basis_;
    std::vector<std::vector<Rat>> rows_;
};

QSpan qspan_of(const BasisPtr& basis, const std::vector<RealValue>& values);

// Element of R wedge_Q R restricted to the declared basis: an antisymmetric
// rational matrix over the basis coordinates. For quadratic bases this is the
// single coefficient of 1 ^ sqrt(D).
class WedgeValue {
public:
    WedgeValue(BasisPtr basis, std::vector<std::vector<Rat>> antisym);

    static WedgeValue zero(const BasisPtr& basis);

    const BasisPtr& basis() const { return basis_; }
    const std::vector<std::vector<Rat>>& matrix() const { return m_; }
    const Rat& entry(size_t i, size_t j) const { return m_[i][j]; }
    // coefficient of 1 ^ sqrt(D) on a quadratic basis
    const Rat& quadratic_coeff() const { return m_[0][1]; }

    bool is_zero() const;
    WedgeValue operator+(const WedgeValue& o) const;
    WedgeValue operator-(const WedgeValue& o) const;
    WedgeValue operator*(const Rat& q) const;
    bool operator==(const WedgeValue& o) const;
    bool operator!=(const WedgeValue& o) const { return !(*this == o); }

    // Canonical representative of the class modulo multiplication by positive
    // rationals: entries scaled to coprime integers, first nonzero entry made
    // positive (sign normalization identifies the +- classes).
    WedgeValue projective_canonical() const;
    std::string str() const;

private:
    BasisPtr basis_;
    std::vector<std::vector<Rat>> m_;
};

WedgeValue wedge(const RealValue& x, const RealValue& y);

}  // namespace sturmkit
