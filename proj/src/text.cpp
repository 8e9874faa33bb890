#include "fengrao/text.hpp"

#include <charconv>
#include <string>

#include "fengrao/towers.hpp"

namespace fengrao {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

TowerSpec parse_tower(std::string_view body) {
    TowerSpec spec{0, 0};
    bool have_q = false;
    bool have_n = false;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto item = trim(body.substr(0, comma));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("tower parameter without '=': '" + std::string(item) + "'");
        const auto key = trim(item.substr(0, eq));
        const Int value = parse_int(item.substr(eq + 1));
        if (key == "q") {
            spec.q = value;
            have_q = true;
        } else if (key == "n") {
            spec.n = value;
            have_n = true;
        } else {
            throw ParseError("unknown tower parameter '" + std::string(key) + "'");
        }
    }
    if (!have_q || !have_n) throw ParseError("tower needs both q and n");
    return spec;
}

std::vector<HomothecyStep> parse_chain(std::string_view body) {
    std::vector<HomothecyStep> steps;
    body = trim(body);
    while (!body.empty()) {
        if (body.front() != '(') throw ParseError("expected '(' in homothecy chain");
        const auto close = body.find(')');
        if (close == std::string_view::npos) throw ParseError("unterminated '(' in homothecy chain");
        const auto pair = parse_int_list(body.substr(1, close - 1));
        if (pair.size() != 2) throw ParseError("homothecy step must be (a,b)");
        steps.push_back({pair[0], pair[1]});
        body = trim(body.substr(close + 1));
    }
    return steps;
}

}  // namespace

Int parse_int(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) throw OverflowError("integer out of range: '" + std::string(text) + "'");
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ParseError("not an integer: '" + std::string(text) + "'");
    return value;
}

std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    if (trim(text).empty()) return out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_int(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("semigroup text needs a 'kind:' prefix (gens, small, mults, tower, ind)");
    const auto kind = trim(text.substr(0, colon));
    const auto body = text.substr(colon + 1);

    if (kind == "gens") {
        const auto gens = parse_int_list(body);
        if (gens.empty()) throw ParseError("gens: needs at least one generator");
        return NumericalSemigroup::from_generators(gens);
    }
    if (kind == "small") {
        auto small = parse_int_list(body);
        if (small.empty()) throw ParseError("small: needs at least one element");
        return NumericalSemigroup::from_small_elements(std::move(small));
    }
    if (kind == "mults") {
        auto d = parse_int_list(body);
        if (d.empty()) throw ParseError("mults: needs at least one entry");
        return NumericalSemigroup::from_multiplicity_sequence(MultiplicitySequence{std::move(d)});
    }
    if (kind == "tower") return NumericalSemigroup::from_multiplicity_sequence(gs_tower(parse_tower(body)));
    if (kind == "ind") return NumericalSemigroup::from_multiplicity_sequence(homothecy_chain(parse_chain(body)));
    throw ParseError("unknown semigroup kind '" + std::string(kind) + "'");
}

}  // namespace fengrao
