#include "fengrao/fengrao.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "fengrao/arf.hpp"
#include "fengrao/bounds.hpp"
#include "fengrao/generic.hpp"
#include "fengrao/semigroup.hpp"
#include "fengrao/text.hpp"
#include "fengrao/towers.hpp"
#include "fengrao/verify.hpp"

struct fr_semigroup {
    fengrao::NumericalSemigroup value;
};

struct fr_profile {
    fengrao::FengRaoProfile value;
};

namespace {

thread_local std::string last_error;

fr_status status_of(fengrao::ErrorKind kind) {
    switch (kind) {
        case fengrao::ErrorKind::invalid_argument: return FR_ERR_INVALID_ARGUMENT;
        case fengrao::ErrorKind::parse: return FR_ERR_PARSE;
        case fengrao::ErrorKind::not_member: return FR_ERR_NOT_MEMBER;
        case fengrao::ErrorKind::not_arf: return FR_ERR_NOT_ARF;
        case fengrao::ErrorKind::overflow: return FR_ERR_OVERFLOW;
    }
    return FR_ERR_INTERNAL;
}

fr_status fail(fr_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes at the C boundary.
template <typename F>
fr_status guarded(F&& body) {
    try {
        return body();
    } catch (const fengrao::Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(FR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FR_ERR_INTERNAL, "unknown error");
    }
}

fr_status copy_out(const std::vector<int64_t>& values, int64_t* buf, size_t cap, size_t* len) {
    if (!len) return fail(FR_ERR_INVALID_ARGUMENT, "len must not be NULL");
    *len = values.size();
    if (!buf) return FR_OK;
    if (cap < values.size()) return fail(FR_ERR_BUFFER_TOO_SMALL, "buffer holds fewer entries than required");
    std::copy(values.begin(), values.end(), buf);
    return FR_OK;
}

fr_status null_arg(const char* name) { return fail(FR_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL"); }

std::vector<int64_t> span_of(const int64_t* data, size_t count) {
    return data ? std::vector<int64_t>(data, data + count) : std::vector<int64_t>{};
}

fr_status emit_semigroup(fengrao::NumericalSemigroup s, fr_semigroup** out) {
    *out = new fr_semigroup{std::move(s)};
    return FR_OK;
}

}  // namespace

extern "C" {

const char* fr_version(void) { return "1.0.0"; }

const char* fr_status_message(fr_status status) {
    switch (status) {
        case FR_OK: return "ok";
        case FR_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FR_ERR_PARSE: return "parse error";
        case FR_ERR_NOT_MEMBER: return "not a member of the semigroup";
        case FR_ERR_NOT_ARF: return "semigroup is not Arf";
        case FR_ERR_OVERFLOW: return "arithmetic overflow";
        case FR_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case FR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* fr_last_error(void) { return last_error.c_str(); }

fr_status fr_semigroup_parse(const char* text, fr_semigroup** out) {
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    return guarded([&] { return emit_semigroup(fengrao::parse_semigroup(text), out); });
}

fr_status fr_semigroup_from_generators(const int64_t* gens, size_t count, fr_semigroup** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        const auto g = span_of(gens, count);
        return emit_semigroup(fengrao::NumericalSemigroup::from_generators(g), out);
    });
}

fr_status fr_semigroup_from_small_elements(const int64_t* small, size_t count, fr_semigroup** out) {
    if (!out) return null_arg("out");
    return guarded(
        [&] { return emit_semigroup(fengrao::NumericalSemigroup::from_small_elements(span_of(small, count)), out); });
}

fr_status fr_semigroup_from_multiplicities(const int64_t* d, size_t count, fr_semigroup** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        return emit_semigroup(
            fengrao::NumericalSemigroup::from_multiplicity_sequence(fengrao::MultiplicitySequence{span_of(d, count)}),
            out);
    });
}

fr_status fr_semigroup_tower(int64_t q, int64_t n, fr_semigroup** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        return emit_semigroup(fengrao::NumericalSemigroup::from_multiplicity_sequence(fengrao::gs_tower({q, n})), out);
    });
}

fr_status fr_semigroup_translate(const fr_semigroup* s, int64_t m, fr_semigroup** out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] { return emit_semigroup(fengrao::translate(s->value, m), out); });
}

void fr_semigroup_free(fr_semigroup* s) { delete s; }

fr_status fr_semigroup_get_summary(const fr_semigroup* s, fr_semigroup_summary* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] {
        out->conductor = s->value.conductor();
        out->multiplicity = s->value.multiplicity();
        out->genus = s->value.genus();
        out->num_small = s->value.num_small();
        out->is_arf = fengrao::is_arf(s->value) ? 1 : 0;
        return FR_OK;
    });
}

fr_status fr_semigroup_contains(const fr_semigroup* s, int64_t x, int* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    *out = s->value.contains(x) ? 1 : 0;
    return FR_OK;
}

fr_status fr_semigroup_small_elements(const fr_semigroup* s, int64_t* buf, size_t cap, size_t* len) {
    if (!s) return null_arg("s");
    return copy_out(s->value.small_elements(), buf, cap, len);
}

fr_status fr_semigroup_multiplicity_sequence(const fr_semigroup* s, int64_t* buf, size_t cap, size_t* len) {
    if (!s) return null_arg("s");
    return guarded([&] { return copy_out(fengrao::multiplicity_sequence(s->value).d, buf, cap, len); });
}

fr_status fr_semigroup_minimal_generators(const fr_semigroup* s, int64_t* buf, size_t cap, size_t* len) {
    if (!s) return null_arg("s");
    return guarded([&] { return copy_out(fengrao::minimal_generators(s->value), buf, cap, len); });
}

fr_status fr_semigroup_apery(const fr_semigroup* s, int64_t x, int64_t* buf, size_t cap, size_t* len) {
    if (!s) return null_arg("s");
    return guarded([&] { return copy_out(fengrao::apery(s->value, x).elements, buf, cap, len); });
}

fr_status fr_semigroup_divisors(const fr_semigroup* s, const int64_t* targets, size_t count, int64_t* buf,
                                size_t cap, size_t* len) {
    if (!s) return null_arg("s");
    if (!targets || count == 0) return fail(FR_ERR_INVALID_ARGUMENT, "targets must be a nonempty list");
    return guarded([&] {
        const auto t = span_of(targets, count);
        return copy_out(fengrao::divisors(s->value, t).elements, buf, cap, len);
    });
}

fr_status fr_feng_rao_distance(const fr_semigroup* s, int r, int64_t m, fr_method method, int64_t* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] {
        switch (method) {
            case FR_METHOD_FAST: {
                if (r != 1 && r != 2) return fail(FR_ERR_INVALID_ARGUMENT, "fast method supports r = 1 or 2");
                const auto profile = fengrao::FengRaoProfile::build(fengrao::multiplicity_sequence(s->value));
                *out = r == 1 ? profile.delta1(m) : profile.delta2(m);
                return FR_OK;
            }
            case FR_METHOD_GENERIC: *out = fengrao::feng_rao_distance(s->value, r, m); return FR_OK;
            case FR_METHOD_ORACLE: *out = fengrao::feng_rao_distance_oracle(s->value, r, m); return FR_OK;
        }
        return fail(FR_ERR_INVALID_ARGUMENT, "unknown method");
    });
}

fr_status fr_feng_rao_number(const fr_semigroup* s, int r, int64_t* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = fengrao::feng_rao_number(s->value, r).value;
        return FR_OK;
    });
}

fr_status fr_e2_apery(const fr_semigroup* s, int64_t* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = fengrao::feng_rao_number_2_apery(s->value).value;
        return FR_OK;
    });
}

fr_status fr_e2_sequence(const fr_semigroup* s, int64_t* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] {
        if (!fengrao::is_arf(s->value)) return fail(FR_ERR_NOT_ARF, "sequence formula for E_2 needs an Arf semigroup");
        *out = fengrao::e2_from_sequence(fengrao::multiplicity_sequence(s->value)).value;
        return FR_OK;
    });
}

fr_status fr_profile_build(const fr_semigroup* s, fr_profile** out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new fr_profile{fengrao::FengRaoProfile::build(fengrao::multiplicity_sequence(s->value))};
        return FR_OK;
    });
}

void fr_profile_free(fr_profile* p) { delete p; }

fr_status fr_profile_e2(const fr_profile* p, int64_t* out) {
    if (!p) return null_arg("p");
    if (!out) return null_arg("out");
    *out = p->value.e2().value;
    return FR_OK;
}

fr_status fr_profile_delta(const fr_profile* p, int r, int64_t m, int64_t* out) {
    if (!p) return null_arg("p");
    if (!out) return null_arg("out");
    if (r != 1 && r != 2) return fail(FR_ERR_INVALID_ARGUMENT, "profiles hold r = 1 and r = 2 only");
    return guarded([&] {
        *out = r == 1 ? p->value.delta1(m) : p->value.delta2(m);
        return FR_OK;
    });
}

fr_status fr_profile_goppa_like(const fr_profile* p, int64_t m, int code_level, int64_t* out) {
    if (!p) return null_arg("p");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = fengrao::goppa_like(p->value, m, code_level ? fengrao::BoundLevel::code : fengrao::BoundLevel::semigroup);
        return FR_OK;
    });
}

fr_status fr_bounds_table(const fr_profile* p, int64_t field_size, int64_t m_lo, int64_t m_hi, fr_bounds_row* rows,
                          size_t cap, size_t* len) {
    if (!p) return null_arg("p");
    if (!len) return null_arg("len");
    return guarded([&] {
        const auto table = fengrao::bounds_table(p->value, field_size, m_lo, m_hi);
        *len = table.size();
        if (!rows) return FR_OK;
        if (cap < table.size()) return fail(FR_ERR_BUFFER_TOO_SMALL, "row buffer too small");
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& t = table[i];
            rows[i] = fr_bounds_row{t.m, t.delta2_m1, t.delta1_m1, t.gob_m1, t.delta1_m2, t.glb_m};
        }
        return FR_OK;
    });
}

fr_status fr_verify(const fr_verify_options* options, fr_verify_report* out) {
    if (!options) return null_arg("options");
    if (!out) return null_arg("out");
    *out = fr_verify_report{};
    return guarded([&] {
        const auto report = fengrao::verify_corpus(
            {options->max_conductor, options->r_max, options->margin, std::max(1u, options->threads)});
        out->semigroups = report.semigroups;
        out->checks = report.checks;
        out->mismatches = report.mismatches;
        if (const auto& bad = report.first_mismatch) {
            out->counterexample =
                new fr_semigroup{fengrao::NumericalSemigroup::from_small_elements(bad->small_elements)};
            out->r = bad->r;
            out->m = bad->m;
            out->fast = bad->fast;
            out->generic = bad->generic;
            out->oracle = bad->oracle;
        }
        return FR_OK;
    });
}

void fr_verify_report_clear(fr_verify_report* report) {
    if (!report) return;
    delete report->counterexample;
    *report = fr_verify_report{};
}

}  // extern "C"
