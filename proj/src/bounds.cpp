#include "fengrao/bounds.hpp"

#include <string>

namespace fengrao {

Int goppa_like(const FengRaoProfile& profile, Int m, BoundLevel level) {
    const Int shift = level == BoundLevel::code ? 2 : 1;
    return checked::add(checked::sub(checked::add(m, shift), 2 * profile.genus()), profile.e2().value);
}

Int griesmer_order_bound(Int delta1_value, Int field_size) {
    if (delta1_value < 1) throw InvalidArgument("Feng-Rao distance must be positive");
    if (field_size < 2) throw InvalidArgument("field size must be at least 2");
    return checked::add(delta1_value, (delta1_value + field_size - 1) / field_size);
}

Int pellikaan_bound(const FengRaoProfile& profile, Int m) { return profile.delta1(checked::add(m, 2)); }

std::vector<BoundsRow> bounds_table(const FengRaoProfile& profile, Int field_size, Int m_lo, Int m_hi) {
    const Int c = profile.conductor();
    if (m_lo > m_hi) throw InvalidArgument("empty range " + std::to_string(m_lo) + ":" + std::to_string(m_hi));
    if (m_lo < c - 1 || m_hi > checked::mul(4, c))
        throw InvalidArgument("range must lie within [c - 1, 4c] = [" + std::to_string(c - 1) + ", " +
                              std::to_string(4 * c) + "]");
    if (field_size < 2) throw InvalidArgument("field size must be at least 2");

    std::vector<BoundsRow> rows;
    rows.reserve(static_cast<std::size_t>(m_hi - m_lo + 1));
    for (Int m = m_lo; m <= m_hi; ++m) {
        BoundsRow row;
        row.m = m;
        row.delta2_m1 = profile.delta2(m + 1);
        row.delta1_m1 = profile.delta1(m + 1);
        row.gob_m1 = griesmer_order_bound(row.delta1_m1, field_size);
        row.delta1_m2 = pellikaan_bound(profile, m);
        row.glb_m = goppa_like(profile, m, BoundLevel::code);
        rows.push_back(row);
    }
    return rows;
}

std::vector<BoundsRow> bounds_table(const MultiplicitySequence& d, Int field_size, Int m_lo, Int m_hi) {
    return bounds_table(FengRaoProfile::build(d), field_size, m_lo, m_hi);
}

}  // namespace fengrao
