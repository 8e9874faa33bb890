#include "fengrao/towers.hpp"

#include <algorithm>
#include <string>

namespace fengrao {

namespace {

void check_spec(TowerSpec spec) {
    if (spec.q < 2) throw InvalidArgument("tower parameter q must be at least 2");
    if (spec.n < 1) throw InvalidArgument("tower level n must be at least 1");
}

}  // namespace

MultiplicitySequence homothecy(const MultiplicitySequence& d, HomothecyStep step) {
    if (step.a < 2) throw InvalidArgument("homothecy factor a must be at least 2");
    const auto s = NumericalSemigroup::from_multiplicity_sequence(d);
    const Int c = s.conductor();
    if (step.b < c)
        throw InvalidArgument("homothecy offset b = " + std::to_string(step.b) + " is below the conductor " +
                              std::to_string(c));
    const Int repeats = step.b - c;
    if (checked::mul(step.a, step.b) > kMaxConductor) throw InvalidArgument("homothecy conductor exceeds the supported limit");

    MultiplicitySequence out;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) out.d.push_back(checked::mul(step.a, d.d[i]));
    out.d.insert(out.d.end(), static_cast<std::size_t>(repeats), step.a);
    out.d.push_back(1);
    return out;
}

MultiplicitySequence homothecy_chain(const std::vector<HomothecyStep>& steps) {
    MultiplicitySequence d{{1}};
    for (const auto& step : steps) d = homothecy(d, step);
    return d;
}

Int gs_conductor(TowerSpec spec) {
    check_spec(spec);
    if (spec.n == 1) return 0;
    const Int half = spec.n % 2 == 1 ? (spec.n + 1) / 2 : spec.n / 2;
    return checked::sub(checked::pow(spec.q, spec.n), checked::pow(spec.q, half));
}

MultiplicitySequence gs_tower(TowerSpec spec) {
    check_spec(spec);
    // Level L is q * Gamma^{L-1} ∪ (q * b + N) with b = c_L / q; b >= c_{L-1}
    // holds for both parities of L, so each step is a valid homothecy.
    MultiplicitySequence d{{1}};
    for (Int level = 2; level <= spec.n; ++level) {
        const Int c = gs_conductor({spec.q, level});
        d = homothecy(d, {spec.q, c / spec.q});
    }
    return d;
}

std::pair<std::vector<std::vector<Int>>, Int> gs_lambda_layers(TowerSpec spec) {
    check_spec(spec);
    if (spec.n < 2) throw InvalidArgument("layer decomposition needs n >= 2");
    const Int q = spec.q;
    const Int n = spec.n;
    const Int k = n / 2;

    std::vector<std::vector<Int>> layers;
    Int offset = 0;  // (q - 1)(q^{n-1} + ... + q^{n-i})
    for (Int i = 0; i < k; ++i) {
        if (i > 0) offset = checked::add(offset, checked::mul(q - 1, checked::pow(q, n - i)));
        std::vector<Int> layer;
        if (i == 0) {
            const Int step = checked::pow(q, n - 1);
            for (Int j = 0; j < q; ++j) layer.push_back(checked::mul(j, step));
        } else {
            const Int step = checked::pow(q, n - 1 - 2 * i);
            const Int count = checked::mul(q - 1, checked::pow(q, i));
            if (count > kMaxConductor) throw InvalidArgument("tower layer too large");
            for (Int j = 1; j <= count; ++j) layer.push_back(checked::add(offset, checked::mul(j, step)));
        }
        layers.push_back(std::move(layer));
    }
    offset = checked::add(offset, checked::mul(q - 1, checked::pow(q, n - k)));
    return {std::move(layers), offset};
}

NumericalSemigroup gs_lambda_elements(TowerSpec spec) {
    auto [layers, tail] = gs_lambda_layers(spec);
    if (tail > kMaxConductor) throw InvalidArgument("tower conductor exceeds the supported limit");
    std::vector<Int> small;
    for (const auto& layer : layers) small.insert(small.end(), layer.begin(), layer.end());
    small.push_back(tail);
    std::sort(small.begin(), small.end());
    small.erase(std::unique(small.begin(), small.end()), small.end());
    return NumericalSemigroup::from_small_elements(std::move(small));
}

}  // namespace fengrao
