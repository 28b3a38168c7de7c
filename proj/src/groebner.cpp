#include "divmod/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

namespace divmod {

namespace {

class Budget {
public:
    Budget() {
        if (const char* env = std::getenv("DIVMOD_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) limit_ = v;
        }
    }
    void charge() {
        if (++used_ > limit_)
            throw BudgetError("reduction step budget exceeded (limit " +
                              std::to_string(limit_) + ")");
    }

private:
    unsigned long long used_ = 0;
    unsigned long long limit_ = 1000000;
};

struct ModTerm {
    std::size_t pos;
    Monomial mono;
    Scalar coeff;
};

std::optional<ModTerm> lead_term(const FreeModuleElement& v) {
    for (std::size_t p = 0; p < v.rank(); ++p)
        if (!v.comp(p).is_zero())
            return ModTerm{p, v.comp(p).leading_monomial(), v.comp(p).leading_coeff()};
    return std::nullopt;
}

// +1 when a > b under position-over-term (lower position dominates).
int compare_mod(const Ring& ring, const ModTerm& a, const ModTerm& b) {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return ring.compare(a.mono, b.mono);
}

FreeModuleElement divide_full(FreeModuleElement rem,
                              const std::vector<FreeModuleElement>& basis, Budget& budget) {
    RingPtr rp = rem.ring();
    std::size_t g = rem.rank();
    FreeModuleElement out = FreeModuleElement::zero(rp, g);
    while (true) {
        auto lt = lead_term(rem);
        if (!lt) break;
        bool reduced = false;
        for (const auto& b : basis) {
            auto bl = lead_term(b);
            if (!bl || bl->pos != lt->pos || !bl->mono.divides(lt->mono)) continue;
            Monomial q = bl->mono.quotient_of(lt->mono);
            rem = rem - b.times_term(q, lt->coeff / bl->coeff);
            budget.charge();
            reduced = true;
            break;
        }
        if (!reduced) {
            FreeModuleElement t = FreeModuleElement::single(
                rp, g, lt->pos, Polynomial::term(lt->mono, lt->coeff, rp));
            out = out + t;
            rem = rem - t;
            budget.charge();
        }
    }
    return out;
}

std::vector<FreeModuleElement> reduced_module_basis(const RingPtr& ring, std::size_t g,
                                                    const std::vector<FreeModuleElement>& gens,
                                                    Budget& budget) {
    std::vector<FreeModuleElement> G;
    std::vector<ModTerm> leads;
    for (const auto& v : gens) {
        if (v.is_zero()) continue;
        auto lt = lead_term(v);
        G.push_back(v.scaled(lt->coeff.inverse()));
        lt->coeff = Scalar::one(ring->field());
        leads.push_back(*lt);
    }
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (leads[i].pos == leads[j].pos) pending.insert({i, j});

    while (!pending.empty()) {
        // pick the pair with the smallest (degree, order) lcm
        auto best = pending.begin();
        Monomial best_lcm = leads[best->first].mono.lcm(leads[best->second].mono);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = leads[it->first].mono.lcm(leads[it->second].mono);
            if (l.degree() < best_lcm.degree() ||
                (l.degree() == best_lcm.degree() && ring->compare(l, best_lcm) < 0)) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        // coprime-lead criterion is only sound in ambient rank one
        if (g == 1 && leads[i].mono.coprime_with(leads[j].mono)) continue;

        Monomial lcm_ij = leads[i].mono.lcm(leads[j].mono);
        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == i || k == j || leads[k].pos != leads[i].pos) continue;
            if (!leads[k].mono.divides(lcm_ij)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                chained = true;
        }
        if (chained) continue;

        Scalar one = Scalar::one(ring->field());
        FreeModuleElement s = G[i].times_term(leads[i].mono.quotient_of(lcm_ij), one) -
                              G[j].times_term(leads[j].mono.quotient_of(lcm_ij), one);
        FreeModuleElement r = divide_full(std::move(s), G, budget);
        if (r.is_zero()) continue;
        auto lr = lead_term(r);
        r = r.scaled(lr->coeff.inverse());
        lr->coeff = one;
        std::size_t idx = G.size();
        for (std::size_t k = 0; k < idx; ++k)
            if (leads[k].pos == lr->pos) pending.insert({k, idx});
        G.push_back(std::move(r));
        leads.push_back(*lr);
    }

    // minimalize: drop elements whose lead another kept lead divides
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j] || leads[j].pos != leads[i].pos) continue;
            if (!leads[j].mono.divides(leads[i].mono)) continue;
            if (leads[j].mono == leads[i].mono && j > i) continue;
            keep[i] = false;
        }
    }
    std::vector<FreeModuleElement> H;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) H.push_back(G[i]);
    std::sort(H.begin(), H.end(), [&](const FreeModuleElement& a, const FreeModuleElement& b) {
        return compare_mod(*ring, *lead_term(a), *lead_term(b)) > 0;
    });

    // tail reduction; leads are fixed, so this stabilizes after one pass
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < H.size(); ++i) {
            std::vector<FreeModuleElement> others;
            others.reserve(H.size() - 1);
            for (std::size_t j = 0; j < H.size(); ++j)
                if (j != i) others.push_back(H[j]);
            FreeModuleElement r = divide_full(H[i], others, budget);
            if (!(r == H[i])) {
                H[i] = std::move(r);
                changed = true;
            }
        }
    }
    return H;
}

std::vector<FreeModuleElement> wrap_rank1(const RingPtr& ring,
                                          const std::vector<Polynomial>& gens) {
    std::vector<FreeModuleElement> out;
    out.reserve(gens.size());
    for (const auto& p : gens) out.push_back(FreeModuleElement(ring, {p}));
    return out;
}

std::vector<Polynomial> reduced_ideal_basis(const RingPtr& ring,
                                            const std::vector<Polynomial>& gens,
                                            Budget& budget) {
    auto basis = reduced_module_basis(ring, 1, wrap_rank1(ring, gens), budget);
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(b.comp(0));
    return out;
}

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

void check_poly_ring(const RingPtr& ring, const Polynomial& p) {
    if (p.ring() == ring) return;
    if (!p.ring() || !p.ring()->same_vars(*ring) || !(p.ring()->order() == ring->order()))
        throw InternalError("polynomial does not belong to the ideal's ring");
}

}  // namespace

// ---------- FreeModuleElement ----------

FreeModuleElement::FreeModuleElement(RingPtr ring, std::vector<Polynomial> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {
    if (comps_.empty()) throw InternalError("module element needs positive rank");
    for (const auto& c : comps_) check_poly_ring(ring_, c);
}

FreeModuleElement FreeModuleElement::zero(RingPtr ring, std::size_t rank) {
    std::vector<Polynomial> c(rank, Polynomial::zero(ring));
    return FreeModuleElement(std::move(ring), std::move(c));
}

FreeModuleElement FreeModuleElement::unit(RingPtr ring, std::size_t rank, std::size_t pos) {
    return single(ring, rank, pos, Polynomial::from_integer(1, ring));
}

FreeModuleElement FreeModuleElement::single(RingPtr ring, std::size_t rank, std::size_t pos,
                                            Polynomial p) {
    if (pos >= rank) throw InternalError("module position out of range");
    std::vector<Polynomial> c(rank, Polynomial::zero(ring));
    c[pos] = std::move(p);
    return FreeModuleElement(std::move(ring), std::move(c));
}

bool FreeModuleElement::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

FreeModuleElement FreeModuleElement::operator+(const FreeModuleElement& o) const {
    if (rank() != o.rank()) throw InternalError("module rank mismatch");
    std::vector<Polynomial> c;
    c.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) c.push_back(comps_[i] + o.comps_[i]);
    return FreeModuleElement(ring_, std::move(c));
}

FreeModuleElement FreeModuleElement::operator-(const FreeModuleElement& o) const {
    return *this + (-o);
}

FreeModuleElement FreeModuleElement::operator-() const {
    std::vector<Polynomial> c;
    c.reserve(rank());
    for (const auto& p : comps_) c.push_back(-p);
    return FreeModuleElement(ring_, std::move(c));
}

FreeModuleElement FreeModuleElement::scaled(const Scalar& s) const {
    std::vector<Polynomial> c;
    c.reserve(rank());
    for (const auto& p : comps_) c.push_back(p.scaled(s));
    return FreeModuleElement(ring_, std::move(c));
}

FreeModuleElement FreeModuleElement::times_term(const Monomial& m, const Scalar& s) const {
    std::vector<Polynomial> c;
    c.reserve(rank());
    for (const auto& p : comps_) c.push_back(p.times_term(m, s));
    return FreeModuleElement(ring_, std::move(c));
}

FreeModuleElement FreeModuleElement::times(const Polynomial& p) const {
    std::vector<Polynomial> c;
    c.reserve(rank());
    for (const auto& q : comps_) c.push_back(q * p);
    return FreeModuleElement(ring_, std::move(c));
}

std::string FreeModuleElement::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << ", ";
        os << comps_[i].str();
    }
    os << ")";
    return os.str();
}

// ---------- Ideal ----------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_) check_poly_ring(ring_, g);
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
    Polynomial one = Polynomial::from_integer(1, ring);
    return Ideal(std::move(ring), {one});
}

Ideal Ideal::principal(Polynomial p) {
    RingPtr r = p.ring();
    return Ideal(std::move(r), {std::move(p)});
}

const std::vector<Polynomial>& Ideal::groebner() const {
    const OrderSpec& o = ring_->order();
    std::pair<int, std::size_t> key{static_cast<int>(o.kind), o.block_size};
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return it->second;
    Budget budget;
    auto basis = reduced_ideal_basis(ring_, gens_, budget);
    return cache_->by_order.emplace(key, std::move(basis)).first->second;
}

std::vector<Polynomial> Ideal::groebner(const OrderSpec& order) const {
    if (order == ring_->order()) return groebner();
    std::pair<int, std::size_t> key{static_cast<int>(order.kind), order.block_size};
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->by_order.find(key);
        if (it != cache_->by_order.end()) return it->second;
    }
    RingPtr sibling = Ring::make(ring_->field(), ring_->vars(), order);
    auto id_map = identity_map(ring_->nvars());
    std::vector<Polynomial> mapped;
    mapped.reserve(gens_.size());
    for (const auto& g : gens_) mapped.push_back(g.map_to(sibling, id_map));
    Budget budget;
    auto basis = reduced_ideal_basis(sibling, mapped, budget);
    std::vector<Polynomial> back;
    back.reserve(basis.size());
    for (const auto& b : basis) back.push_back(b.map_to(ring_, id_map));
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->by_order.emplace(key, std::move(back)).first->second;
}

Ideal Ideal::map_to(RingPtr target, const std::vector<std::size_t>& var_map) const {
    std::vector<Polynomial> mapped;
    mapped.reserve(gens_.size());
    for (const auto& g : gens_) mapped.push_back(g.map_to(target, var_map));
    return Ideal(std::move(target), std::move(mapped));
}

// ---------- Submodule ----------

Submodule::Submodule(RingPtr ring, std::size_t ambient_rank,
                     std::vector<FreeModuleElement> gens)
    : ring_(std::move(ring)), rank_(ambient_rank), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
    if (rank_ == 0) throw InternalError("submodule needs positive ambient rank");
    for (const auto& g : gens_)
        if (g.rank() != rank_) throw MathError("ambient rank mismatch");
}

Submodule Submodule::from_columns(const PolyMatrix& m) {
    std::vector<FreeModuleElement> gens;
    gens.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        gens.push_back(FreeModuleElement(m.ring(), m.column(c)));
    return Submodule(m.ring(), m.rows(), std::move(gens));
}

const std::vector<FreeModuleElement>& Submodule::groebner() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->ready) {
        Budget budget;
        cache_->basis = reduced_module_basis(ring_, rank_, gens_, budget);
        cache_->ready = true;
    }
    return cache_->basis;
}

// ---------- operations ----------

Polynomial normal_form(const Polynomial& f, const Ideal& i) {
    Budget budget;
    FreeModuleElement v(i.ring(), {f});
    auto r = divide_full(std::move(v), wrap_rank1(i.ring(), i.groebner()), budget);
    return r.comp(0);
}

bool ideal_contains(const Ideal& i, const Polynomial& f) { return normal_form(f, i).is_zero(); }

bool ideal_contains(const Ideal& i, const Ideal& j) {
    for (const auto& g : j.generators())
        if (!ideal_contains(i, g)) return false;
    return true;
}

bool ideal_equal(const Ideal& i, const Ideal& j) {
    if (!i.ring()->same_vars(*j.ring())) throw MathError("ideal ring mismatch");
    Ideal j2 = j.ring() == i.ring() ? j : j.map_to(i.ring(), identity_map(i.ring()->nvars()));
    const auto& a = i.groebner();
    const auto& b = j2.groebner();
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

bool is_zero_ideal(const Ideal& i) { return i.groebner().empty(); }

bool is_unit_ideal(const Ideal& i) {
    const auto& b = i.groebner();
    return b.size() == 1 && b[0].is_constant();
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
    std::vector<Polynomial> gens = i.generators();
    for (const auto& g : j.generators()) gens.push_back(g);
    return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
    std::vector<Polynomial> gens;
    for (const auto& a : i.generators())
        for (const auto& b : j.generators()) gens.push_back(a * b);
    return Ideal(i.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& i, const std::vector<std::size_t>& keep_in) {
    RingPtr ring = i.ring();
    std::size_t d = ring->nvars();
    std::vector<bool> kept(d, false);
    for (auto k : keep_in) {
        if (k >= d) throw InternalError("eliminate: variable index out of range");
        kept[k] = true;
    }
    std::vector<std::size_t> keep, elim;
    for (std::size_t v = 0; v < d; ++v) (kept[v] ? keep : elim).push_back(v);

    if (elim.empty()) return i;
    if (keep.empty())
        return is_unit_ideal(i) ? Ideal::unit(ring) : Ideal::zero(ring);

    std::vector<std::string> names;
    names.reserve(d);
    std::vector<std::size_t> var_map(d);  // old index -> sibling index
    for (std::size_t k = 0; k < elim.size(); ++k) {
        names.push_back(ring->var(elim[k]));
        var_map[elim[k]] = k;
    }
    for (std::size_t k = 0; k < keep.size(); ++k) {
        names.push_back(ring->var(keep[k]));
        var_map[keep[k]] = elim.size() + k;
    }
    RingPtr sibling = Ring::make(ring->field(), names, OrderSpec{OrderKind::block, elim.size()});
    Ideal mapped = i.map_to(sibling, var_map);

    std::vector<std::size_t> back_map(d);  // sibling index -> old index
    for (std::size_t v = 0; v < d; ++v) back_map[var_map[v]] = v;

    std::vector<Polynomial> out;
    for (const auto& g : mapped.groebner()) {
        bool pure = true;
        for (const auto& t : g.terms()) {
            for (std::size_t v = 0; v < elim.size() && pure; ++v)
                if (t.mono.exp(v) > 0) pure = false;
            if (!pure) break;
        }
        if (pure) out.push_back(g.map_to(ring, back_map));
    }
    return Ideal(ring, std::move(out));
}

Ideal intersect(const Ideal& i, const Ideal& j) {
    RingPtr ring = i.ring();
    if (!ring->same_vars(*j.ring())) throw MathError("ideal ring mismatch");
    std::size_t d = ring->nvars();
    std::vector<std::string> names;
    names.push_back("t");
    while (ring->var_index(names[0])) names[0] += "_";  // avoid capture
    for (const auto& v : ring->vars()) names.push_back(v);
    RingPtr ext = Ring::make(ring->field(), names, OrderSpec{OrderKind::block, 1});
    std::vector<std::size_t> var_map(d);
    for (std::size_t v = 0; v < d; ++v) var_map[v] = v + 1;

    Polynomial t = Polynomial::variable(0, ext);
    Polynomial one_minus_t = Polynomial::from_integer(1, ext) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : i.generators()) gens.push_back(t * g.map_to(ext, var_map));
    for (const auto& g : j.generators()) gens.push_back(one_minus_t * g.map_to(ext, var_map));

    std::vector<std::size_t> keep(d);
    for (std::size_t v = 0; v < d; ++v) keep[v] = v + 1;
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), keep);

    std::vector<std::size_t> back(d + 1, 0);  // index 0 unused by construction
    for (std::size_t v = 0; v < d; ++v) back[v + 1] = v;
    std::vector<Polynomial> out;
    for (const auto& g : elim.generators()) out.push_back(g.map_to(ring, back));
    return Ideal(ring, std::move(out));
}

Ideal quotient(const Ideal& i, const Ideal& j) {
    RingPtr ring = i.ring();
    std::vector<Polynomial> divisors;
    for (const auto& g : j.generators())
        if (!g.is_zero()) divisors.push_back(g);
    if (divisors.empty()) return Ideal::unit(ring);

    bool first = true;
    Ideal acc = Ideal::unit(ring);
    for (const auto& f : divisors) {
        Ideal cap = intersect(i, Ideal::principal(f));
        std::vector<Polynomial> colon_gens;
        for (const auto& g : cap.groebner()) colon_gens.push_back(g.exact_divide(f));
        Ideal colon(ring, std::move(colon_gens));
        acc = first ? colon : intersect(acc, colon);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& i, const Polynomial& f) {
    if (f.is_zero()) throw MathError("saturation by the zero polynomial");
    RingPtr ring = i.ring();
    std::size_t d = ring->nvars();
    std::vector<std::string> names;
    names.push_back("t");
    while (ring->var_index(names[0])) names[0] += "_";
    for (const auto& v : ring->vars()) names.push_back(v);
    RingPtr ext = Ring::make(ring->field(), names, OrderSpec{OrderKind::block, 1});
    std::vector<std::size_t> var_map(d);
    for (std::size_t v = 0; v < d; ++v) var_map[v] = v + 1;

    std::vector<Polynomial> gens;
    for (const auto& g : i.generators()) gens.push_back(g.map_to(ext, var_map));
    Polynomial t = Polynomial::variable(0, ext);
    gens.push_back(Polynomial::from_integer(1, ext) - t * f.map_to(ext, var_map));

    std::vector<std::size_t> keep(d);
    for (std::size_t v = 0; v < d; ++v) keep[v] = v + 1;
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), keep);

    std::vector<std::size_t> back(d + 1, 0);
    for (std::size_t v = 0; v < d; ++v) back[v + 1] = v;
    std::vector<Polynomial> out;
    for (const auto& g : elim.generators()) out.push_back(g.map_to(ring, back));
    return Ideal(ring, std::move(out));
}

std::size_t dimension(const Ideal& i) {
    if (is_unit_ideal(i))
        throw MathError("dimension of the empty scheme (unit ideal)");
    std::size_t d = i.ring()->nvars();
    std::vector<Monomial> leads;
    for (const auto& g : i.groebner()) leads.push_back(g.leading_monomial());
    for (std::size_t k = d;; --k) {
        for (const auto& subset : k_subsets(d, k)) {
            std::vector<bool> in_set(d, false);
            for (auto v : subset) in_set[v] = true;
            bool independent = true;
            for (const auto& m : leads) {
                bool supported = true;
                for (std::size_t v = 0; v < d && supported; ++v)
                    if (m.exp(v) > 0 && !in_set[v]) supported = false;
                if (supported) {
                    independent = false;
                    break;
                }
            }
            if (independent) return k;
        }
        if (k == 0) break;
    }
    throw InternalError("dimension search exhausted");
}

std::pair<std::size_t, std::size_t> height_and_grade(const Ideal& i) {
    if (is_zero_ideal(i)) throw MathError("height of the zero ideal");
    if (is_unit_ideal(i)) throw MathError("height of the unit ideal");
    std::size_t h = i.ring()->nvars() - dimension(i);
    return {h, h};
}

PolyMatrix syzygies(const std::vector<FreeModuleElement>& gens) {
    if (gens.empty()) throw MathError("syzygies of an empty generator list");
    RingPtr ring = gens[0].ring();
    std::size_t g = gens[0].rank();
    for (const auto& v : gens)
        if (v.rank() != g) throw MathError("ambient rank mismatch");
    std::size_t k = gens.size();

    std::vector<FreeModuleElement> ext;
    ext.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<Polynomial> comps = gens[c].comps();
        for (std::size_t e = 0; e < k; ++e)
            comps.push_back(e == c ? Polynomial::from_integer(1, ring)
                                   : Polynomial::zero(ring));
        ext.push_back(FreeModuleElement(ring, std::move(comps)));
    }
    Budget budget;
    auto basis = reduced_module_basis(ring, g + k, ext, budget);

    std::vector<std::vector<Polynomial>> cols;
    for (const auto& b : basis) {
        bool first_block_zero = true;
        for (std::size_t p = 0; p < g && first_block_zero; ++p)
            if (!b.comp(p).is_zero()) first_block_zero = false;
        if (!first_block_zero) continue;
        std::vector<Polynomial> col(b.comps().begin() + static_cast<long>(g), b.comps().end());
        cols.push_back(std::move(col));
    }

    PolyMatrix phi(ring, k, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < k; ++r) phi.set(r, c, cols[c][r]);

    // exactness insurance: [gens] * phi must vanish identically
    for (std::size_t c = 0; c < phi.cols(); ++c) {
        FreeModuleElement acc = FreeModuleElement::zero(ring, g);
        for (std::size_t r = 0; r < k; ++r) acc = acc + gens[r].times(phi.at(r, c));
        if (!acc.is_zero()) throw InternalError("syzygy verification failed");
    }
    return phi;
}

FreeModuleElement module_normal_form(const FreeModuleElement& v, const Submodule& m) {
    if (v.rank() != m.ambient_rank()) throw MathError("ambient rank mismatch");
    Budget budget;
    return divide_full(v, m.groebner(), budget);
}

bool submodule_membership(const FreeModuleElement& v, const Submodule& m) {
    return module_normal_form(v, m).is_zero();
}

}  // namespace divmod
