#include "lpa/ideal.hpp"

#include <algorithm>
#include <map>

#include "lpa/classify.hpp"
#include "lpa/factorize.hpp"

namespace lpa {

bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
    return a.H.subset_of(b.H) && a.S.subset_of(b.H | b.S);
}

void check_admissible(const Graph& g, const AdmissiblePair& p) {
    if (!is_hereditary(g, p.H) || !is_saturated(g, p.H)) {
        throw std::invalid_argument("pair not admissible: H is not hereditary saturated");
    }
    if (!p.S.subset_of(breaking_vertices(g, p.H))) {
        throw std::invalid_argument("pair not admissible: S exceeds the breaking vertices of H");
    }
}

std::vector<AdmissiblePair> all_admissible_pairs(const Graph& g, int bound) {
    std::vector<AdmissiblePair> out;
    for (const auto& h : all_hs_subsets(g, bound)) {
        std::vector<int> b = breaking_vertices(g, h).to_vector();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << b.size()); ++m) {
            VertexSet s;
            for (size_t i = 0; i < b.size(); ++i) {
                if ((m >> i) & 1) s.add(b[i]);
            }
            out.push_back({h, s});
        }
    }
    return out;
}

bool CanonicalIdeal::canonical_less(const Graph& g, const CanonicalIdeal& a,
                                    const CanonicalIdeal& b) {
    auto key = [&](const CanonicalIdeal& i) {
        return std::tuple(i.pair_.H.count(), i.pair_.H.to_vector(), i.pair_.S.to_vector());
    };
    auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    if (a.cycles_.size() != b.cycles_.size()) return a.cycles_.size() < b.cycles_.size();
    for (size_t i = 0; i < a.cycles_.size(); ++i) {
        if (!(a.cycles_[i].first == b.cycles_[i].first)) {
            return a.cycles_[i].first < b.cycles_[i].first;
        }
        if (a.cycles_[i].second != b.cycles_[i].second) {
            return a.cycles_[i].second < b.cycles_[i].second;
        }
    }
    (void)g;
    return false;
}

namespace {

bool cycle_listed(const std::vector<CycleId>& list, const CycleId& c) {
    return std::find(list.begin(), list.end(), c) != list.end();
}

// Closure of H in the presence of S-generators: hereditary + saturated, and a
// member of S all of whose edges now land inside H belongs to H itself.
VertexSet closure_with_s(const Graph& g, VertexSet h, VertexSet s) {
    VertexSet cur = hs_closure(g, h);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int w : s.minus(cur).to_vector()) {
            if (g.out_targets(w).minus(cur).empty()) {
                cur.add(w);
                cur = hs_closure(g, cur);
                changed = true;
            }
        }
    }
    return cur;
}

}  // namespace

CanonicalIdeal with_entries_unchecked(AdmissiblePair p, std::vector<CanonicalIdeal::Entry> c,
                                      FieldSpec f) {
    std::sort(c.begin(), c.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return CanonicalIdeal(p, std::move(c), f);
}

CanonicalIdeal normalize(const Graph& g, AdmissiblePair raw,
                         std::vector<CanonicalIdeal::Entry> entries, FieldSpec field) {
    check_admissible(g, raw);
    std::vector<CycleId> valid_orig;
    {
        auto q = quotient(g, raw.H, raw.S);
        for (const auto& c : cycles_without_exits(q.graph)) valid_orig.push_back(q.to_original(c));
    }
    std::map<CycleId, Poly> merged;
    for (auto& [c, f] : entries) {
        if (f.field() != field) throw std::invalid_argument("field mismatch in ideal entries");
        if (!cycle_listed(valid_orig, c)) {
            throw std::invalid_argument("cycle is not a cycle without exits in the quotient");
        }
        auto it = merged.find(c);
        if (it == merged.end()) {
            merged.emplace(c, f);
        } else {
            it->second = poly_gcd(it->second, f);  // ideal sum of principal ideals
        }
    }
    VertexSet h = raw.H;
    VertexSet s = raw.S;
    bool changed = true;
    while (changed) {
        changed = false;
        // unit entries put the cycle's vertices into H
        for (auto it = merged.begin(); it != merged.end();) {
            if (it->second.is_unit()) {
                h = h | it->first.support();
                it = merged.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
        VertexSet closed = closure_with_s(g, h, s);
        if (closed != h) {
            h = closed;
            changed = true;
        }
        // entries swallowed by the larger H disappear
        for (auto it = merged.begin(); it != merged.end();) {
            if (it->first.support().intersects(h)) {
                it = merged.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    s = s.minus(h);
    AdmissiblePair pair{h, s};
    check_admissible(g, pair);
    if (!merged.empty()) {
        auto q = quotient(g, h, s);
        std::vector<CycleId> still;
        for (const auto& c : cycles_without_exits(q.graph)) still.push_back(q.to_original(c));
        for (const auto& [c, f] : merged) {
            if (!cycle_listed(still, c)) {
                throw verification_error("cycle stopped being exit-free after normalization");
            }
        }
    }
    std::vector<CanonicalIdeal::Entry> out(merged.begin(), merged.end());
    return with_entries_unchecked(pair, std::move(out), field);
}

CanonicalIdeal graded_ideal(const Graph& g, VertexSet h, VertexSet s, FieldSpec field) {
    AdmissiblePair p{h, s};
    check_admissible(g, p);
    return CanonicalIdeal(p, {}, field);
}

CanonicalIdeal zero_ideal(const Graph& g, FieldSpec field) {
    return graded_ideal(g, VertexSet(), VertexSet(), field);
}

CanonicalIdeal improper_ideal(const Graph& g, FieldSpec field) {
    return graded_ideal(g, g.all_vertices(), VertexSet(), field);
}

CanonicalIdeal graded_part(const CanonicalIdeal& ideal) {
    return CanonicalIdeal(ideal.pair(), {}, ideal.field());
}

bool leq(const Graph& g, const CanonicalIdeal& i, const CanonicalIdeal& j) {
    (void)g;
    if (i.field() != j.field()) throw std::invalid_argument("field mismatch");
    if (!pair_leq(i.pair(), j.pair())) return false;
    for (const auto& [c, f] : i.cycles()) {
        if (c.support().subset_of(j.pair().H)) continue;
        bool covered = false;
        for (const auto& [d, gpoly] : j.cycles()) {
            if (d == c) {
                covered = divides(gpoly, f);
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

CanonicalIdeal meet_graded(const Graph& g, const CanonicalIdeal& a, const CanonicalIdeal& b) {
    if (!a.is_graded() || !b.is_graded()) throw std::invalid_argument("meet_graded needs graded ideals");
    if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
    VertexSet h = a.pair().H & b.pair().H;
    VertexSet s = (a.pair().S | a.pair().H) & (b.pair().S | b.pair().H) & breaking_vertices(g, h);
    return graded_ideal(g, h, s, a.field());
}

CanonicalIdeal join_graded(const Graph& g, const CanonicalIdeal& a, const CanonicalIdeal& b) {
    if (!a.is_graded() || !b.is_graded()) throw std::invalid_argument("join_graded needs graded ideals");
    if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
    std::optional<AdmissiblePair> best;
    for (const auto& p : all_admissible_pairs(g)) {
        if (!pair_leq(a.pair(), p) || !pair_leq(b.pair(), p)) continue;
        if (!best || pair_leq(p, *best)) best = p;
    }
    if (!best) throw verification_error("pair lattice has no join");  // top always qualifies
    for (const auto& p : all_admissible_pairs(g)) {
        if (pair_leq(a.pair(), p) && pair_leq(b.pair(), p) && !pair_leq(*best, p)) {
            throw verification_error("pair lattice join is not unique");
        }
    }
    return graded_ideal(g, best->H, best->S, a.field());
}

namespace {

// rule (a): one factor graded. The product and the intersection coincide and
// equal the pair meet plus the non-graded factor's entries absorbed by the
// graded side.
CanonicalIdeal meet_with_graded(const Graph& g, const CanonicalIdeal& graded,
                                const CanonicalIdeal& other) {
    CanonicalIdeal m = meet_graded(g, graded_part(graded), graded_part(other));
    std::vector<CanonicalIdeal::Entry> entries;
    for (const auto& [c, f] : other.cycles()) {
        if (c.support().subset_of(graded.pair().H)) entries.emplace_back(c, f);
    }
    return normalize(g, m.pair(), std::move(entries), other.field());
}

enum class CombineMode { product, intersection };

CanonicalIdeal combine(const Graph& g, const CanonicalIdeal& i, const CanonicalIdeal& j,
                       CombineMode mode) {
    if (i.field() != j.field()) throw std::invalid_argument("field mismatch");
    if (i.is_graded()) return meet_with_graded(g, i, j);
    if (j.is_graded()) return meet_with_graded(g, j, i);
    if (i.pair() == j.pair()) {
        // same graded part: per-cycle polynomial arithmetic; a cycle present
        // on one side only is absorbed by the shared graded part
        std::vector<CanonicalIdeal::Entry> entries;
        for (const auto& [c, f] : i.cycles()) {
            for (const auto& [d, h] : j.cycles()) {
                if (c == d) {
                    entries.emplace_back(
                        c, mode == CombineMode::product ? mul(f, h) : poly_lcm(f, h));
                }
            }
        }
        return normalize(g, i.pair(), std::move(entries), i.field());
    }
    // rule (c): both must factor into prime powers
    auto fi = factor_strongly_irreducible(g, i, FactorForm::product);
    auto fj = factor_strongly_irreducible(g, j, FactorForm::product);
    if (!fi || !fj) {
        throw rule_table_error(
            "product/intersection undefined: factors have different non-graded supports and do "
            "not decompose into prime powers");
    }
    std::vector<std::pair<CanonicalIdeal, int>> merged;
    auto push = [&](const CanonicalIdeal& q, int e) {
        for (auto& [have, exp] : merged) {
            if (have == q) {
                if (have.is_graded()) return;  // graded ideals are idempotent
                exp = mode == CombineMode::product ? exp + e : std::max(exp, e);
                return;
            }
        }
        merged.emplace_back(q, e);
    };
    for (const auto& [q, e] : fi->factors) push(q, e);
    for (const auto& [q, e] : fj->factors) push(q, e);
    // absorption: a prime containing another prime of the list is redundant
    // in both the product and the intersection
    for (size_t a = 0; a < merged.size();) {
        bool dominated = false;
        for (size_t b = 0; b < merged.size() && !dominated; ++b) {
            if (a != b && leq(g, merged[b].first, merged[a].first)) dominated = true;
        }
        if (dominated) {
            merged.erase(merged.begin() + a);
        } else {
            ++a;
        }
    }
    CanonicalIdeal result = [&] {
        try {
            return assemble(g, merged, mode == CombineMode::product
                                           ? FactorForm::product
                                           : FactorForm::intersection);
        } catch (const std::invalid_argument& e) {
            throw rule_table_error(std::string("product/intersection undefined: ") + e.what());
        }
    }();
    if (!leq(g, result, i) || !leq(g, result, j)) {
        throw verification_error("combined ideal escaped its factors");
    }
    return result;
}

}  // namespace

CanonicalIdeal product(const Graph& g, const CanonicalIdeal& i, const CanonicalIdeal& j) {
    return combine(g, i, j, CombineMode::product);
}

CanonicalIdeal intersect(const Graph& g, const CanonicalIdeal& i, const CanonicalIdeal& j) {
    return combine(g, i, j, CombineMode::intersection);
}

CanonicalIdeal prime_power(const Graph& g, const CanonicalIdeal& p, unsigned n) {
    if (n == 0) throw std::invalid_argument("prime power needs a positive exponent");
    if (!classify_prime(g, p)) throw std::invalid_argument("prime_power of a non-prime ideal");
    if (p.is_graded() || n == 1) return p;
    std::vector<CanonicalIdeal::Entry> entries;
    for (const auto& [c, f] : p.cycles()) entries.emplace_back(c, poly_pow(f, n));
    return with_entries_unchecked(p.pair(), std::move(entries), p.field());
}

}  // namespace lpa
