#include "fengrao/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace fengrao {

namespace {

// A trailing run c-k, ..., c-1, c of consecutive members means the true
// conductor is c-k; fold the run so the list ends at the minimal conductor.
void fold_trailing_run(std::vector<Int>& small) {
    while (small.size() >= 2 && small[small.size() - 2] == small.back() - 1) small.pop_back();
}

void check_conductor_limit(Int c) {
    if (c > kMaxConductor)
        throw InvalidArgument("conductor " + std::to_string(c) + " exceeds the supported limit " +
                              std::to_string(kMaxConductor));
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() : small_{0} {}

NumericalSemigroup NumericalSemigroup::from_small_elements(std::vector<Int> small) {
    if (small.empty()) throw InvalidArgument("small element list is empty");
    if (small.front() != 0) throw InvalidArgument("first small element must be 0");
    for (std::size_t i = 1; i < small.size(); ++i)
        if (small[i] <= small[i - 1]) throw InvalidArgument("small elements must be strictly increasing");
    fold_trailing_run(small);
    const Int c = small.back();
    check_conductor_limit(c);

    // Additive closure below the conductor; sums >= c are members automatically.
    for (std::size_t i = 1; i < small.size(); ++i) {
        for (std::size_t j = i; j < small.size(); ++j) {
            const Int sum = small[i] + small[j];
            if (sum >= c) break;
            if (!std::binary_search(small.begin(), small.end(), sum))
                throw InvalidArgument("not additively closed: " + std::to_string(small[i]) + " + " +
                                      std::to_string(small[j]) + " = " + std::to_string(sum) +
                                      " is missing");
        }
    }
    return NumericalSemigroup(std::move(small));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
    if (gens.empty()) throw InvalidArgument("generator list is empty");
    Int g = 0;
    for (Int x : gens) {
        if (x <= 0) throw InvalidArgument("generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw InvalidArgument("generators have gcd " + std::to_string(g) + ", complement is infinite");

    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const Int e = sorted.front();

    // Grow the membership table until e consecutive members appear; from the
    // start of that run on, every integer is reachable by adding e.
    std::vector<char> member{1};
    Int run = 1;
    Int x = 0;
    while (run < e) {
        ++x;
        check_conductor_limit(x - run);
        bool in = false;
        for (Int gen : sorted) {
            if (gen > x) break;
            if (member[static_cast<std::size_t>(x - gen)]) {
                in = true;
                break;
            }
        }
        member.push_back(in ? 1 : 0);
        run = in ? run + 1 : 0;
    }
    const Int c = x - run + 1;
    std::vector<Int> small;
    for (Int y = 0; y < c; ++y)
        if (member[static_cast<std::size_t>(y)]) small.push_back(y);
    small.push_back(c);
    return NumericalSemigroup(std::move(small));
}

NumericalSemigroup NumericalSemigroup::from_multiplicity_sequence(const MultiplicitySequence& seq) {
    if (seq.d.empty()) throw InvalidArgument("multiplicity sequence is empty");
    for (Int v : seq.d)
        if (v <= 0) throw InvalidArgument("multiplicity sequence entries must be positive");
    if (seq.d.back() != 1) throw InvalidArgument("multiplicity sequence must end with 1");

    std::vector<Int> small{0};
    for (std::size_t i = 0; i + 1 < seq.d.size(); ++i) small.push_back(checked::add(small.back(), seq.d[i]));
    const std::size_t listed = small.size();
    auto s = from_small_elements(std::move(small));
    if (s.num_small() != listed)
        throw InvalidArgument("multiplicity sequence has an interior 1 before the conductor");
    return s;
}

bool NumericalSemigroup::contains(Int x) const {
    if (x < 0) return false;
    if (x >= conductor()) return true;
    return std::binary_search(small_.begin(), small_.end(), x);
}

std::vector<Int> NumericalSemigroup::members_in(Int lo, Int hi) const {
    std::vector<Int> out;
    lo = std::max<Int>(lo, 0);
    if (hi < lo) return out;
    const Int c = conductor();
    for (auto it = std::lower_bound(small_.begin(), small_.end(), lo); it != small_.end() && *it < c && *it <= hi;
         ++it)
        out.push_back(*it);
    for (Int y = std::max(lo, c); y <= hi; ++y) out.push_back(y);
    return out;
}

AperySet apery(const NumericalSemigroup& s, Int x) {
    // m >= c + x forces m - x >= c, and for x <= 0 any m >= c has m - x >= c,
    // so members below c + max(x, 0) are the only candidates.
    AperySet out;
    out.with_respect_to = x;
    const Int hi = checked::sub(checked::add(s.conductor(), std::max<Int>(x, 0)), 1);
    for (Int m : s.members_in(0, hi))
        if (!s.contains(checked::sub(m, x))) out.elements.push_back(m);
    return out;
}

DivisorSet divisors(const NumericalSemigroup& s, std::span<const Int> targets) {
    DivisorSet out;
    out.targets.assign(targets.begin(), targets.end());
    for (Int t : targets) {
        if (!s.contains(t)) continue;
        for (Int m : s.members_in(0, t))
            if (s.contains(t - m)) out.elements.push_back(m);
    }
    std::sort(out.elements.begin(), out.elements.end());
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
    return out;
}

DivisorSet divisors(const NumericalSemigroup& s, Int target) {
    const Int targets[] = {target};
    return divisors(s, targets);
}

NumericalSemigroup translate(const NumericalSemigroup& s, Int m) {
    if (m <= 0) throw InvalidArgument("translation amount must be positive");
    if (!s.contains(m)) throw NotMember("translation amount " + std::to_string(m) + " is not a member");
    std::vector<Int> small{0};
    small.reserve(s.num_small() + 1);
    for (Int x : s.small_elements()) small.push_back(checked::add(m, x));
    // m = 1 only happens for N, where {0} ∪ (1 + N) = N.
    fold_trailing_run(small);
    check_conductor_limit(small.back());
    return NumericalSemigroup::from_small_elements(std::move(small));
}

std::vector<Int> minimal_generators(const NumericalSemigroup& s) {
    const Int c = s.conductor();
    const Int e = s.multiplicity();
    // Every member >= c + e is e plus a member, so irreducibles lie below c + e.
    // A sum a + b < c + e of nonzero members has both summands below c.
    // For N the bound is empty, yet 1 is irreducible.
    const Int limit = std::max<Int>(checked::add(c, e), 2);
    std::vector<char> reducible(static_cast<std::size_t>(limit), 0);
    const auto& small = s.small_elements();
    for (std::size_t i = 1; i < small.size() && small[i] < c; ++i) {
        for (std::size_t j = i; j < small.size() && small[j] < c; ++j) {
            const Int sum = small[i] + small[j];
            if (sum >= limit) break;
            reducible[static_cast<std::size_t>(sum)] = 1;
        }
    }
    std::vector<Int> out;
    for (Int x : s.members_in(1, limit - 1))
        if (!reducible[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

bool is_arf(const NumericalSemigroup& s) {
    // Triples rho_i >= rho_j >= rho_k. If rho_i >= c the combination is
    // >= c + (rho_j - rho_k) >= c, so only rho_i below c needs a lookup.
    const Int c = s.conductor();
    const auto& small = s.small_elements();
    const std::size_t below = small.size() - 1;
    for (std::size_t k = 0; k < below; ++k)
        for (std::size_t j = k; j < below; ++j)
            for (std::size_t i = j; i < below; ++i) {
                const Int v = small[i] + small[j] - small[k];
                if (v >= c) break;
                if (!s.contains(v)) return false;
            }
    return true;
}

MultiplicitySequence multiplicity_sequence(const NumericalSemigroup& s) {
    MultiplicitySequence seq;
    const auto& small = s.small_elements();
    for (std::size_t i = 1; i < small.size(); ++i) seq.d.push_back(small[i] - small[i - 1]);
    seq.d.push_back(1);
    return seq;
}

std::vector<NumericalSemigroup> enumerate_arf_semigroups(Int max_conductor) {
    if (max_conductor < 0) throw InvalidArgument("max_conductor must be nonnegative");
    check_conductor_limit(max_conductor);
    // Every Arf semigroup is N translated by its multiplicity sequence read
    // backwards, and conductors only grow along the way, so a depth-first
    // walk over translations with c + m <= max_conductor reaches all of them.
    std::set<NumericalSemigroup> seen{NumericalSemigroup{}};
    std::vector<NumericalSemigroup> stack{NumericalSemigroup{}};
    while (!stack.empty()) {
        NumericalSemigroup cur = std::move(stack.back());
        stack.pop_back();
        for (Int m : cur.members_in(1, max_conductor - cur.conductor())) {
            auto next = translate(cur, m);
            if (seen.insert(next).second) stack.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<MultiplicitySequence> enumerate_arf(Int max_conductor) {
    std::vector<MultiplicitySequence> out;
    for (const auto& s : enumerate_arf_semigroups(max_conductor)) out.push_back(multiplicity_sequence(s));
    return out;
}

}  // namespace fengrao
