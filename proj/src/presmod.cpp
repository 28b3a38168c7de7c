#include "divmod/presmod.hpp"

#include <algorithm>
#include <map>

#include "divmod/errors.hpp"

namespace divmod {

namespace {

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (a.get() == b.get()) return;
    if (a->same_vars(*b) && a->order() == b->order()) return;
    throw MathError(std::string(what) + " constructed over a different ring");
}

}  // namespace

EmbeddedModule::EmbeddedModule(PolyMatrix generators, std::string label)
    : gens_(std::move(generators)),
      rank_(generic_rank(gens_, 0)),
      label_(std::move(label)) {}

FreeModuleElement EmbeddedModule::generator(std::size_t j) const {
    return FreeModuleElement(ring(), gens_.column(j));
}

std::vector<FreeModuleElement> EmbeddedModule::generator_list() const {
    std::vector<FreeModuleElement> out;
    out.reserve(gens_.cols());
    for (std::size_t j = 0; j < gens_.cols(); ++j) out.push_back(generator(j));
    return out;
}

PresentedModule::PresentedModule(RingPtr ring, std::size_t generator_count,
                                 PolyMatrix relations)
    : n_(generator_count), phi_(std::move(relations)) {
    check_same_ring(ring, phi_.ring(), "relation matrix");
    if (phi_.rows() != n_)
        throw MathError("relation matrix row count does not match generator count");
    rank_ = n_ - generic_rank(phi_, 0);
}

PresentedModule::PresentedModule(PolyMatrix witness, PolyMatrix relations)
    : n_(witness.cols()), phi_(std::move(relations)), witness_(std::move(witness)) {
    check_same_ring(witness_->ring(), phi_.ring(), "relation matrix");
    if (phi_.rows() != n_)
        throw MathError("relation matrix row count does not match generator count");
    PolyMatrix prod = *witness_ * phi_;
    for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t c = 0; c < prod.cols(); ++c)
            if (!prod.at(r, c).is_zero())
                throw MathError("embedding witness does not annihilate the relations");
    rank_ = n_ - generic_rank(phi_, 0);
}

const PolyMatrix& PresentedModule::witness() const {
    if (!witness_) throw MathError("module carries no embedding witness");
    return *witness_;
}

PresentedModule presentation_of_embedded(const EmbeddedModule& e) {
    if (e.generator_count() == 0)
        return PresentedModule(e.generators(), PolyMatrix(e.ring(), 0, 0));
    PolyMatrix phi = syzygies(e.generator_list());
    return PresentedModule(e.generators(), std::move(phi));
}

Ideal fitting_ideal(const PresentedModule& m, std::size_t i) {
    std::size_t n = m.generator_count();
    if (i >= n) return Ideal::unit(m.ring());
    std::size_t t = n - i;
    const PolyMatrix& phi = m.relations();
    if (t > std::min(phi.rows(), phi.cols())) return Ideal::zero(m.ring());
    return Ideal(m.ring(), phi.minors(t));
}

std::size_t mu_local(const PresentedModule& m) {
    return m.generator_count() -
           scalar_rank(m.relations().evaluate_at_origin(), m.ring()->field());
}

PresentedModule quotient_by_generators(const PresentedModule& m,
                                       std::vector<std::size_t> kill) {
    std::size_t n = m.generator_count();
    std::sort(kill.begin(), kill.end());
    kill.erase(std::unique(kill.begin(), kill.end()), kill.end());
    if (!kill.empty() && kill.back() >= n)
        throw MathError("generator index out of range");
    std::vector<std::size_t> keep;
    {
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (k < kill.size() && kill[k] == i) { ++k; continue; }
            keep.push_back(i);
        }
    }
    // Killing generator i appends the relation e_i; cancelling the rest of
    // row i against that unit column and pruning the pair (row i, e_i)
    // leaves the surviving rows of the original columns.  Columns that end
    // up identically zero are dropped.
    const PolyMatrix& phi = m.relations();
    std::vector<std::vector<Polynomial>> cols;
    for (std::size_t c = 0; c < phi.cols(); ++c) {
        std::vector<Polynomial> col;
        col.reserve(keep.size());
        bool nonzero = false;
        for (std::size_t r : keep) {
            if (!phi.at(r, c).is_zero()) nonzero = true;
            col.push_back(phi.at(r, c));
        }
        if (nonzero) cols.push_back(std::move(col));
    }
    PolyMatrix out(m.ring(), keep.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < keep.size(); ++r)
            out.set(r, c, std::move(cols[c][r]));
    return PresentedModule(m.ring(), keep.size(), std::move(out));
}

PresentedModule exterior_power(const PresentedModule& m, std::size_t k) {
    std::size_t n = m.generator_count();
    if (k < 1 || k > n) throw MathError("exterior power index out of range");
    auto gens = k_subsets(n, k);
    auto vsets = k_subsets(n, k - 1);
    std::map<std::vector<std::size_t>, std::size_t> row_of;
    for (std::size_t a = 0; a < gens.size(); ++a) row_of[gens[a]] = a;
    const PolyMatrix& phi = m.relations();
    PolyMatrix out(m.ring(), gens.size(), vsets.size() * phi.cols());
    std::size_t c = 0;
    for (const auto& v : vsets) {
        for (std::size_t u = 0; u < phi.cols(); ++u, ++c) {
            // relation x_v ∧ phi(column u), expanded on the subset basis
            for (std::size_t i = 0; i < n; ++i) {
                if (std::find(v.begin(), v.end(), i) != v.end()) continue;
                const Polynomial& entry = phi.at(i, u);
                if (entry.is_zero()) continue;
                std::size_t swaps = 0;
                for (std::size_t j : v)
                    if (j > i) ++swaps;
                std::vector<std::size_t> h = v;
                h.push_back(i);
                std::sort(h.begin(), h.end());
                out.set(row_of[h], c, swaps % 2 ? -entry : entry);
            }
        }
    }
    return PresentedModule(m.ring(), gens.size(), std::move(out));
}

namespace {

// Multivector on the subset basis: sorted index subsets with coefficients.
using Multivector = std::map<std::vector<std::size_t>, Polynomial>;

// a ∧ v for a vector v = sum v_i x_i wedged on from the right.
Multivector wedge_append(const Multivector& a, const std::vector<Polynomial>& v) {
    Multivector out;
    for (const auto& [set, coeff] : a) {
        if (coeff.is_zero()) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (std::binary_search(set.begin(), set.end(), i)) continue;
            std::size_t swaps = 0;  // x_i crosses every larger index in set
            for (std::size_t j : set)
                if (j > i) ++swaps;
            std::vector<std::size_t> merged = set;
            merged.push_back(i);
            std::sort(merged.begin(), merged.end());
            Polynomial term = coeff * v[i];
            if (swaps % 2) term = -term;
            auto it = out.find(merged);
            if (it == out.end())
                out.emplace(std::move(merged), std::move(term));
            else
                it->second = it->second + term;
        }
    }
    return out;
}

// x_i ∧ b wedged on from the left.
Multivector wedge_prepend(std::size_t i, const Multivector& b) {
    Multivector out;
    for (const auto& [set, coeff] : b) {
        if (coeff.is_zero()) continue;
        if (std::binary_search(set.begin(), set.end(), i)) continue;
        std::size_t swaps = 0;  // x_i crosses every smaller index in set
        for (std::size_t j : set)
            if (j < i) ++swaps;
        std::vector<std::size_t> merged = set;
        merged.push_back(i);
        std::sort(merged.begin(), merged.end());
        out.emplace(std::move(merged), swaps % 2 ? -coeff : coeff);
    }
    return out;
}

}  // namespace

Ideal theta_image(const PolyMatrix& psi) {
    std::size_t n = psi.rows(), w = psi.cols();
    if (n < w) throw MathError("matrix must have at least as many rows as columns");
    RingPtr ring = psi.ring();
    Multivector omega;
    omega[{}] = Polynomial::from_integer(1, ring);
    for (std::size_t c = 0; c < w; ++c) omega = wedge_append(omega, psi.column(c));

    std::vector<Polynomial> dets = psi.minors(w);
    auto row_sets = k_subsets(n, w);
    std::vector<std::size_t> full(n);
    for (std::size_t i = 0; i < n; ++i) full[i] = i;

    std::vector<Polynomial> out;
    for (const auto& h : k_subsets(n, n - w)) {
        // wedge path: x_h ∧ omega lands on the top basis element
        Multivector acc = omega;
        for (std::size_t t = h.size(); t-- > 0;) acc = wedge_prepend(h[t], acc);
        Polynomial from_wedge = Polynomial::zero(ring);
        if (auto it = acc.find(full); it != acc.end()) from_wedge = it->second;

        // minor path: signed determinant of the complementary rows
        std::vector<bool> in_h(n, false);
        for (std::size_t i : h) in_h[i] = true;
        std::vector<std::size_t> comp;
        for (std::size_t i = 0; i < n; ++i)
            if (!in_h[i]) comp.push_back(i);
        std::size_t eps = 0;
        for (std::size_t i : h)
            for (std::size_t j : comp)
                if (i > j) ++eps;
        std::size_t pos =
            std::lower_bound(row_sets.begin(), row_sets.end(), comp) - row_sets.begin();
        Polynomial from_minor = eps % 2 ? -dets[pos] : dets[pos];
        if (!(from_wedge == from_minor))
            throw InternalError("wedge and minor paths disagree in theta image");
        out.push_back(std::move(from_wedge));
    }
    return Ideal(ring, std::move(out));
}

EmbeddedModule image_in_free(const PresentedModule& m) {
    return EmbeddedModule(m.witness());
}

}  // namespace divmod
