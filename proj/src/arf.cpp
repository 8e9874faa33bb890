#include "fengrao/arf.hpp"

#include <algorithm>
#include <string>

namespace fengrao {

namespace {

void require_member(const NumericalSemigroup& s, Int m) {
    if (!s.contains(m)) throw NotMember(std::to_string(m) + " is not a member of the semigroup");
}

Int delta1_unchecked(const NumericalSemigroup& s, Int m) {
    require_member(s, m);
    if (m == 0) return 1;
    const Int c = s.conductor();
    const auto& rho = s.small_elements();
    if (m >= 2 * c - 1) return m + 1 - 2 * s.genus();
    // First k >= 2 (index j = k - 1) with m <= c + rho_k - 1; value 2k - 2 = 2j.
    auto it = std::lower_bound(rho.begin() + 1, rho.end(), m - c + 1);
    return 2 * static_cast<Int>(it - rho.begin());
}

Int first_window_unchecked(const NumericalSemigroup& s, Int m) {
    if (m == 0) return 2;
    require_member(s, m);
    const Int e = s.multiplicity();
    const Int c = s.conductor();
    if (e == 1) return m + 2;
    if (m < e || m > c + e - 1)
        throw InvalidArgument(std::to_string(m) + " lies outside [e, c + e - 1] = [" + std::to_string(e) + ", " +
                              std::to_string(c + e - 1) + "]");
    if (e == 2) return m == 2 ? 3 : 4;
    if (m <= c + e - 3) return 3;

    const auto& rho = s.small_elements();
    const auto r = rho.size();
    // For ordinary semigroups (r = 2) the element after rho_2 is c + 1.
    const Int rho3 = r >= 3 ? rho[2] : c + 1;
    const bool doubled = rho3 == 2 * e;
    if (m == c + e - 2) {
        if (rho[r - 2] < c - 2) return 3;
        if (doubled) return 4;
        return r == 3 ? 4 : 5;
    }
    if (doubled) return 4;
    return r == 2 ? 4 : 5;
}

// delta^2 of the ordinary semigroup {0, e, ->} on [e, 2e - 1].
std::vector<Int> ordinary_table(Int e) {
    std::vector<Int> table;
    for (Int m = e; m <= 2 * e - 1; ++m) table.push_back(m <= 2 * e - 2 ? 3 : m - (2 * e - 1) + 4);
    return table;
}

}  // namespace

FengRaoNumber e2_from_sequence(const MultiplicitySequence& d) {
    if (d.d.empty()) throw InvalidArgument("multiplicity sequence is empty");
    const auto r = static_cast<Int>(d.size());
    Int best = r;
    for (Int i = 0; i + 1 < r; ++i) best = std::min(best, d.d[static_cast<std::size_t>(i)] + i);
    return FengRaoNumber{best, 2};
}

FengRaoNumber e2_translate(FengRaoNumber e2_prev, Int translation) {
    if (translation <= 0) throw InvalidArgument("translation must be positive");
    return FengRaoNumber{std::min(translation, e2_prev.value + 1), 2};
}

Int delta1_arf(const NumericalSemigroup& s, Int m) {
    if (!is_arf(s)) throw NotArf("delta1_arf requires an Arf semigroup");
    return delta1_unchecked(s, m);
}

Int delta2_first_window(const NumericalSemigroup& s, Int m) {
    if (!is_arf(s)) throw NotArf("delta2_first_window requires an Arf semigroup");
    return first_window_unchecked(s, m);
}

FengRaoProfile FengRaoProfile::build(const MultiplicitySequence& d) {
    const auto target = NumericalSemigroup::from_multiplicity_sequence(d);
    if (!is_arf(target)) throw NotArf("multiplicity sequence does not define an Arf semigroup");

    FengRaoProfile cur(NumericalSemigroup{}, FengRaoNumber{1, 2}, {});
    for (std::size_t i = d.size() - 1; i-- > 0;) {
        const Int step = d.d[i];
        auto next = translate(cur.semigroup_, step);
        const Int c_new = next.conductor();
        const auto e2 = e2_translate(cur.e2_, step);

        std::vector<Int> table;
        if (cur.semigroup_.is_naturals()) {
            // The +2/+3 rule needs a predecessor multiplicity above 1.
            table = ordinary_table(step);
        } else {
            table.reserve(static_cast<std::size_t>(c_new));
            for (Int m = c_new; m < c_new + step; ++m) table.push_back(first_window_unchecked(next, m));
            const Int c_prev = cur.conductor();
            const Int e_prev = cur.semigroup_.multiplicity();
            for (Int k = 0; k < c_prev; ++k) {
                const Int prev2 = cur.delta2(c_prev + k);
                const bool plus_two = step == e_prev && cur.delta1(c_prev + e_prev + k) == prev2;
                table.push_back(prev2 + (plus_two ? 2 : 3));
            }
        }
        cur = FengRaoProfile(std::move(next), e2, std::move(table));
    }
    return cur;
}

std::vector<Int> FengRaoProfile::delta1_breakpoints() const {
    std::vector<Int> out;
    const Int c = conductor();
    const auto& rho = semigroup_.small_elements();
    for (std::size_t k = 1; k < rho.size(); ++k) out.push_back(c + rho[k] - 1);
    return out;
}

Int FengRaoProfile::delta1(Int m) const { return delta1_unchecked(semigroup_, m); }

Int FengRaoProfile::delta2(Int m) const {
    const Int c = conductor();
    if (m < c) return first_window_unchecked(semigroup_, m);
    if (m <= 2 * c - 1) return delta2_table_[static_cast<std::size_t>(m - c)];
    return checked::add(m + 1 - 2 * genus(), e2_.value);
}

Int delta2_arf(const MultiplicitySequence& d, Int m) { return FengRaoProfile::build(d).delta2(m); }

Int delta2_hyperelliptic(Int g, Int m) {
    if (g < 2) throw InvalidArgument("hyperelliptic closed form needs genus >= 2");
    const Int c = 2 * g;
    if (m < 0 || (m < c && m % 2 != 0)) throw NotMember(std::to_string(m) + " is not a member of <2, 2g+1>");
    if (m == 0) return 2;
    if (m == 2) return 3;
    if (m < c) return 4;
    if ((m - c) % 2 == 1) return m - c + 3;
    const Int k = (m - c) / 2;
    if (k <= g - 2) return 2 * k + 4;
    if (m == 4 * g - 2) return 2 * g + 1;
    return m - c + 3;
}

}  // namespace fengrao
