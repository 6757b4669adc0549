#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2h/matrix.hpp"
#include "g2h/subspace.hpp"

namespace g2h {

/// Alternating k-form, stored sparsely over strictly increasing index
/// tuples (0-based). Evaluation follows the determinant convention
/// (b^j ^ b^k)(x,y) = b^j(x) b^k(y) - b^j(y) b^k(x), no 1/k! factors.
class KForm {
public:
    using Key = std::vector<size_t>;

    KForm(size_t degree, size_t dim) : degree_(degree), dim_(dim) {}

    size_t degree() const { return degree_; }
    size_t dim() const { return dim_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * b^{indices}; indices may come in any order and are
    /// normalized with the sign of the sorting permutation.
    void add_term(Key indices, const Scalar& c);
    Scalar coefficient(const Key& sorted_indices) const;

    friend KForm operator+(const KForm& a, const KForm& b);
    friend KForm operator-(const KForm& a, const KForm& b);
    friend KForm operator*(const Scalar& c, const KForm& a);
    friend bool operator==(const KForm& a, const KForm& b) {
        return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    KForm wedge(const KForm& other) const;
    Scalar evaluate(const std::vector<Vec>& vectors) const;

    /// Prints in b^{i...} notation with 1-based indices.
    std::string str() const;

private:
    size_t degree_, dim_;
    std::map<Key, Scalar> terms_;
};

/// One of the stock (omega, metric, basis) setups.
struct Convention {
    std::string name;  // "C1", "C2" or "C3"
    KForm omega;       // degree-3 form on a 7-dim space
    Matrix gram;       // 7x7 symmetric, signature (4,3), invertible
    Matrix gram_inv;
};

const Convention& convention_C1();
const Convention& convention_C2();
const Convention& convention_C3();
const Convention& convention_by_name(const std::string& name);

/// The unique x with <x, w> = omega(u, v, w) for all w.
Vec cross(const Convention& conv, const Vec& u, const Vec& v);

/// hat-E(b) = { v : v x b = 0 }, the kernel of v -> cross(v, b).
Subspace hat_E(const Convention& conv, const Vec& b);

/// Derivation action of an endomorphism on a k-form:
/// (A . f)(x1..xk) = sum_i f(x1, .., A xi, .., xk).
KForm derivation_action(const Matrix& a, const KForm& f);

}  // namespace g2h
