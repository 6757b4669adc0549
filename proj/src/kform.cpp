#include "g2h/kform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2h {

namespace {

// sorts indices in place, returns the permutation sign, 0 on repeats
int normalize_key(KForm::Key& k) {
    int sign = 1;
    for (size_t i = 1; i < k.size(); ++i)
        for (size_t j = i; j > 0 && k[j] <= k[j - 1]; --j) {
            if (k[j] == k[j - 1]) return 0;
            std::swap(k[j], k[j - 1]);
            sign = -sign;
        }
    return sign;
}

Scalar small_det(const std::vector<Vec>& cols, const std::vector<size_t>& row_idx) {
    size_t k = cols.size();
    if (k == 0) return Scalar(1);
    if (k == 1) return cols[0][row_idx[0]];
    // Laplace expansion along the first column; k is at most 4 in practice
    Scalar det;
    int sign = 1;
    for (size_t r = 0; r < k; ++r) {
        const Scalar& a = cols[0][row_idx[r]];
        if (!a.is_zero()) {
            std::vector<size_t> sub;
            for (size_t i = 0; i < k; ++i)
                if (i != r) sub.push_back(row_idx[i]);
            std::vector<Vec> rest(cols.begin() + 1, cols.end());
            Scalar minor = small_det(rest, sub);
            det += Scalar(sign) * a * minor;
        }
        sign = -sign;
    }
    return det;
}

}  // namespace

void KForm::add_term(Key indices, const Scalar& c) {
    if (indices.size() != degree_) throw std::invalid_argument("KForm::add_term: wrong arity");
    for (size_t i : indices)
        if (i >= dim_) throw std::invalid_argument("KForm::add_term: index out of range");
    if (c.is_zero()) return;
    int sign = normalize_key(indices);
    if (sign == 0) return;
    Scalar& slot = terms_[indices];
    slot += Scalar(sign) * c;
    if (slot.is_zero()) terms_.erase(indices);
}

Scalar KForm::coefficient(const Key& sorted_indices) const {
    auto it = terms_.find(sorted_indices);
    return it == terms_.end() ? Scalar(0) : it->second;
}

KForm operator+(const KForm& a, const KForm& b) {
    if (a.degree_ != b.degree_ || a.dim_ != b.dim_)
        throw std::invalid_argument("KForm add: degree/dim mismatch");
    KForm r = a;
    for (const auto& [k, c] : b.terms_) {
        Scalar& slot = r.terms_[k];
        slot += c;
        if (slot.is_zero()) r.terms_.erase(k);
    }
    return r;
}

KForm operator-(const KForm& a, const KForm& b) { return a + Scalar(-1) * b; }

KForm operator*(const Scalar& c, const KForm& a) {
    KForm r(a.degree_, a.dim_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) r.terms_[k] = c * v;
    return r;
}

KForm KForm::wedge(const KForm& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("wedge: ambient dim mismatch");
    KForm r(degree_ + other.degree_, dim_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : other.terms_) {
            Key merged = ka;
            merged.insert(merged.end(), kb.begin(), kb.end());
            r.add_term(std::move(merged), ca * cb);
        }
    return r;
}

Scalar KForm::evaluate(const std::vector<Vec>& vectors) const {
    if (vectors.size() != degree_) throw std::invalid_argument("KForm::evaluate: arity mismatch");
    for (const auto& v : vectors)
        if (v.size() != dim_) throw std::invalid_argument("KForm::evaluate: bad vector length");
    Scalar total;
    for (const auto& [key, c] : terms_) total += c * small_det(vectors, key);
    return total;
}

std::string KForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") b^{";
        for (size_t i : key) os << i + 1;
        os << "}";
    }
    return os.str();
}

KForm derivation_action(const Matrix& a, const KForm& f) {
    KForm r(f.degree(), f.dim());
    for (const auto& [key, c] : f.terms())
        for (size_t slot = 0; slot < key.size(); ++slot)
            for (size_t j = 0; j < f.dim(); ++j) {
                // b^i composed with A contributes A(i, j) b^j in this slot
                const Scalar& aij = a(key[slot], j);
                if (aij.is_zero()) continue;
                KForm::Key k2 = key;
                k2[slot] = j;
                r.add_term(std::move(k2), c * aij);
            }
    return r;
}

namespace {

Matrix split_g2_gram(std::array<std::pair<size_t, size_t>, 3> pairs) {
    Matrix g(7, 7);
    for (auto [i, j] : pairs) {
        g(i, j) = Scalar(1);
        g(j, i) = Scalar(1);
    }
    g(3, 3) = Scalar(-1);
    return g;
}

Convention make_convention(std::string name, KForm omega, Matrix gram) {
    Matrix inv = inverse(gram);
    return Convention{std::move(name), std::move(omega), std::move(gram), std::move(inv)};
}

}  // namespace

const Convention& convention_C1() {
    static const Convention c = [] {
        // omega = r2 (b^167 + b^235) - b^4 ^ (b^15 - b^26 - b^37)
        KForm w(3, 7);
        w.add_term({0, 5, 6}, Scalar::sqrt2());
        w.add_term({1, 2, 4}, Scalar::sqrt2());
        w.add_term({0, 3, 4}, Scalar(1));
        w.add_term({1, 3, 5}, Scalar(-1));
        w.add_term({2, 3, 6}, Scalar(-1));
        return make_convention("C1", w, split_g2_gram({{{0, 4}, {1, 5}, {2, 6}}}));
    }();
    return c;
}

const Convention& convention_C2() {
    static const Convention c = [] {
        // omega = r2 (-b^157 + b^236) - b^4 ^ (b^16 - b^27 - b^35)
        KForm w(3, 7);
        w.add_term({0, 4, 6}, -Scalar::sqrt2());
        w.add_term({1, 2, 5}, Scalar::sqrt2());
        w.add_term({0, 3, 5}, Scalar(1));
        w.add_term({1, 3, 6}, Scalar(-1));
        w.add_term({2, 3, 4}, Scalar(-1));
        return make_convention("C2", w, split_g2_gram({{{0, 5}, {1, 6}, {2, 4}}}));
    }();
    return c;
}

const Convention& convention_C3() {
    static const Convention c = [] {
        // omega = r2 (b^127 + b^356) - b^4 ^ (b^15 + b^26 - b^37)
        KForm w(3, 7);
        w.add_term({0, 1, 6}, Scalar::sqrt2());
        w.add_term({2, 4, 5}, Scalar::sqrt2());
        w.add_term({0, 3, 4}, Scalar(1));
        w.add_term({1, 3, 5}, Scalar(1));
        w.add_term({2, 3, 6}, Scalar(-1));
        return make_convention("C3", w, split_g2_gram({{{0, 4}, {1, 5}, {2, 6}}}));
    }();
    return c;
}

const Convention& convention_by_name(const std::string& name) {
    if (name == "C1") return convention_C1();
    if (name == "C2") return convention_C2();
    if (name == "C3") return convention_C3();
    throw std::invalid_argument("unknown convention: " + name);
}

Vec cross(const Convention& conv, const Vec& u, const Vec& v) {
    Vec f(7);
    for (size_t k = 0; k < 7; ++k) f[k] = conv.omega.evaluate({u, v, basis_vec(7, k)});
    return conv.gram_inv.apply(f);
}

Subspace hat_E(const Convention& conv, const Vec& b) {
    Matrix m(7, 7);
    for (size_t j = 0; j < 7; ++j) {
        Vec cj = cross(conv, basis_vec(7, j), b);
        for (size_t i = 0; i < 7; ++i) m(i, j) = cj[i];
    }
    return kernel(m);
}

}  // namespace g2h
