#include "chebmat/chebmat.h"

#include <nlohmann/json.hpp>

#include <cstring>
#include <new>
#include <string>

#include "chebmat/cheb.hpp"
#include "chebmat/diagrams.hpp"
#include "chebmat/dynamics.hpp"
#include "chebmat/matrix_io.hpp"
#include "chebmat/resolutions.hpp"

using nlohmann::json;
using namespace chebmat;

struct chebmat_matrix {
    IntMatrix m;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
chebmat_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CHEBMAT_OK;
    } catch (const parse_error& e) {
        g_last_error = e.what();
        return CHEBMAT_ERR_PARSE;
    } catch (const hypothesis_error& e) {
        g_last_error = e.what();
        return CHEBMAT_ERR_HYPOTHESIS;
    } catch (const model_violation_error& e) {
        g_last_error = e.what();
        return CHEBMAT_ERR_HYPOTHESIS;
    } catch (const unsupported_error& e) {
        g_last_error = e.what();
        return CHEBMAT_ERR_UNSUPPORTED;
    } catch (const not_found_error& e) {
        g_last_error = e.what();
        return CHEBMAT_ERR_NOT_FOUND;
    } catch (const range_error& e) {
        g_last_error = e.what();
        return CHEBMAT_ERR_RANGE;
    } catch (const chebmat::error& e) {
        g_last_error = e.what();
        return CHEBMAT_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return CHEBMAT_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CHEBMAT_ERR_INTERNAL;
    }
}

chebmat_status invalid_arg(const char* message) {
    g_last_error = message;
    return CHEBMAT_ERR_INVALID;
}

json period_payload(const IntMatrix& x, long k_max) {
    const long bound = k_max > 0 ? k_max : default_scan_bound(x.dim());
    json out{{"k_max", bound}};
    auto cert = detect_period(x, bound);
    out["found"] = cert.has_value();
    if (cert) {
        out["first_zero"] = cert->first_zero;
        out["period"] = cert->period;
        out["window"] = {{"zero_at", cert->period - 1}, {"identity_at", cert->period}};
    }
    return out;
}

json growth_certificate_json(const GrowthCertificate& cert) {
    return json{{"q", cert.q},
                {"kind", growth_kind_name(cert.kind)},
                {"z", matrix_to_json(cert.z)}};
}

json growth_payload(const IntMatrix& x, long k_max) {
    const long bound = k_max > 0 ? k_max : default_scan_bound(x.dim());
    json out{{"k_max", bound}};
    auto cert = detect_growth(x, bound);
    out["found"] = cert.has_value();
    if (cert) {
        out["certificate"] = growth_certificate_json(*cert);
        if (cert->kind != GrowthKind::uniform) {
            GrowthCertificate promoted = promote_certificate(x, *cert, bound);
            if (!promoted.promotion_exhausted || promoted.kind != cert->kind ||
                promoted.q != cert->q)
                out["promoted"] = growth_certificate_json(promoted);
            out["uniform_step_found"] = !promoted.promotion_exhausted;
        } else {
            out["uniform_step_found"] = true;
        }
        out["window_all_pass"] = verify_reduction_window(x, *cert).all_pass;
    }
    return out;
}

json family_json(const FamilyMatch& match) {
    return json{{"family", family_name(match.family)},
                {"index", match.index},
                {"relabeling", match.relabeling}};
}

json classify_payload(const IntMatrix& x, long k_max) {
    Classification cls = classify(x, k_max);
    json out;
    switch (cls.verdict) {
        case Classification::Verdict::Finite: out["verdict"] = "finite"; break;
        case Classification::Verdict::Tame: out["verdict"] = "tame"; break;
        case Classification::Verdict::Wild: out["verdict"] = "wild"; break;
    }
    if (cls.period)
        out["period_certificate"] = {{"first_zero", cls.period->first_zero},
                                     {"period", cls.period->period}};
    if (cls.growth) out["growth_certificate"] = growth_certificate_json(*cls.growth);
    if (cls.wild)
        out["wild_evidence"] = {{"k", cls.wild->k},
                                {"max_entry", int_to_json(cls.wild->max_entry)},
                                {"envelope", int_to_json(cls.wild->envelope)}};
    out["family"] = cls.family ? family_json(*cls.family) : json(nullptr);
    return out;
}

json resolve_payload(const std::string& family, int index, int simple_index, long steps) {
    auto fam = family_from_name(family);
    if (!fam) throw validation_error("unknown diagram family '" + family + "'");
    if (index <= 0) index = family_fixed_index(*fam);
    DiagramSpec spec = build_diagram(*fam, index);
    IntMatrix e = ext_matrix(spec);
    ResolutionTrace trace = syzygy_trace(e, simple_index, steps);

    json steps_json = json::array();
    for (const TraceStep& s : trace.steps) {
        json alpha = json::array(), beta = json::array(), proj = json::array();
        for (const Int& v : s.d.alpha) alpha.push_back(int_to_json(v));
        for (const Int& v : s.d.beta) beta.push_back(int_to_json(v));
        for (const Int& v : s.projectives) proj.push_back(int_to_json(v));
        json sj{{"k", s.k}, {"alpha", std::move(alpha)}, {"beta", std::move(beta)},
                {"projectives", std::move(proj)}};
        sj["simple_hit"] = s.simple_hit ? json(*s.simple_hit) : json(nullptr);
        if (s.semisimple_reset) sj["semisimple_reset"] = true;
        steps_json.push_back(std::move(sj));
    }

    json summary;
    json warnings = json::array();
    for (const std::string& w : trace.warnings) warnings.push_back(w);
    if (family_is_finite(spec.family)) {
        auto period = resolution_period(e);
        summary["resolution_period"] = period ? json(*period) : json(nullptr);
    } else {
        GrowthFactorResult gf = growth_factor(spec);
        summary["growth_factor"] = gf.q;
        summary["growth_kind"] = growth_kind_name(gf.kind);
        summary["tabulated_q"] = gf.paper_q;
        summary["tabulated_step_valid"] = gf.paper_step_valid;
        for (const std::string& w : gf.warnings) warnings.push_back(w);
    }
    if (spec.convention_dependent)
        warnings.push_back("diagram shape for this index is convention-dependent");

    return json{{"family", family_name(spec.family)},
                {"index", spec.index},
                {"simple", simple_index},
                {"steps", std::move(steps_json)},
                {"summary", std::move(summary)},
                {"warnings", std::move(warnings)}};
}

}  // namespace

extern "C" {

const char* chebmat_version(void) { return "0.1.0"; }

const char* chebmat_last_error(void) { return g_last_error.c_str(); }

void chebmat_matrix_free(chebmat_matrix* m) { delete m; }

void chebmat_string_free(char* s) { delete[] s; }

chebmat_status chebmat_matrix_parse_json(const char* text, chebmat_matrix** out) {
    if (!text || !out) return invalid_arg("null argument");
    return guarded([&] { *out = new chebmat_matrix{parse_matrix_text(text)}; });
}

chebmat_status chebmat_matrix_from_rows64(int n, const int64_t* row_major, chebmat_matrix** out) {
    if (!row_major || !out) return invalid_arg("null argument");
    return guarded([&] {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.set(i, j, Int(static_cast<long>(row_major[static_cast<size_t>(i) * n + j])));
        *out = new chebmat_matrix{std::move(m)};
    });
}

chebmat_status chebmat_diagram_adjacency(const char* family, int index, chebmat_matrix** out) {
    if (!family || !out) return invalid_arg("null argument");
    return guarded([&] {
        auto fam = family_from_name(family);
        if (!fam) throw validation_error("unknown diagram family '" + std::string(family) + "'");
        if (index <= 0) index = family_fixed_index(*fam);
        *out = new chebmat_matrix{build_diagram(*fam, index).adjacency};
    });
}

chebmat_status chebmat_matrix_dim(const chebmat_matrix* m, int* out) {
    if (!m || !out) return invalid_arg("null argument");
    *out = m->m.dim();
    return CHEBMAT_OK;
}

chebmat_status chebmat_matrix_to_json(const chebmat_matrix* m, char** out) {
    if (!m || !out) return invalid_arg("null argument");
    return guarded([&] { *out = dup_string(matrix_to_json(m->m).dump()); });
}

chebmat_status chebmat_matrix_entry_decimal(const chebmat_matrix* m, int i, int j, char** out) {
    if (!m || !out) return invalid_arg("null argument");
    return guarded([&] { *out = dup_string(m->m.at(i, j).get_str()); });
}

chebmat_status chebmat_cheb_eval(const chebmat_matrix* x, long k, chebmat_matrix** out) {
    if (!x || !out) return invalid_arg("null argument");
    return guarded([&] { *out = new chebmat_matrix{cheb_eval(x->m, k)}; });
}

chebmat_status chebmat_eval_json(const chebmat_matrix* x, long k, char** out) {
    if (!x || !out) return invalid_arg("null argument");
    return guarded([&] {
        json payload{{"k", k}, {"f_k", matrix_to_json(cheb_eval(x->m, k))}};
        *out = dup_string(payload.dump());
    });
}

chebmat_status chebmat_period_json(const chebmat_matrix* x, long k_max, char** out) {
    if (!x || !out) return invalid_arg("null argument");
    return guarded([&] { *out = dup_string(period_payload(x->m, k_max).dump()); });
}

chebmat_status chebmat_growth_json(const chebmat_matrix* x, long k_max, char** out) {
    if (!x || !out) return invalid_arg("null argument");
    return guarded([&] { *out = dup_string(growth_payload(x->m, k_max).dump()); });
}

chebmat_status chebmat_classify_json(const chebmat_matrix* x, long k_max, char** out) {
    if (!x || !out) return invalid_arg("null argument");
    return guarded([&] { *out = dup_string(classify_payload(x->m, k_max).dump()); });
}

chebmat_status chebmat_identify_json(const chebmat_matrix* x, char** out) {
    if (!x || !out) return invalid_arg("null argument");
    return guarded([&] {
        auto match = identify_family(x->m);
        json payload{{"found", match.has_value()}};
        if (match) payload.update(family_json(*match));
        *out = dup_string(payload.dump());
    });
}

chebmat_status chebmat_resolve_json(const char* family, int index, int simple_index, long steps,
                                    char** out) {
    if (!family || !out) return invalid_arg("null argument");
    return guarded(
        [&] { *out = dup_string(resolve_payload(family, index, simple_index, steps).dump()); });
}

}  // extern "C"
