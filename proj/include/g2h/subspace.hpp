#pragma once

#include "g2h/matrix.hpp"

namespace g2h {

/// A linear subspace given by its reduced-echelon basis. The basis is
/// canonical, so subspace equality is plain data comparison.
class Subspace {
public:
    explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim) {}
    static Subspace span(size_t ambient_dim, const std::vector<Vec>& vectors);
    static Subspace full(size_t ambient_dim);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the reduced basis, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    size_t ambient_;
    std::vector<Vec> basis_;  // rows of an rref matrix, zero rows dropped
};

/// Null space of m as a canonical Subspace of dimension cols - rank.
Subspace kernel(const Matrix& m);

}  // namespace g2h
