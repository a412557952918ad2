#include "macmahon.h"

#include "macmahon/detectors.hpp"
#include "macmahon/json_io.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace macmahon;

struct mm_series {
    QSeries s;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Vec to_vec(const int32_t* vec, size_t len) {
    if (!vec || len == 0) throw std::invalid_argument("vector must have length >= 1");
    return Vec(vec, vec + len);
}

template <typename F>
mm_status guarded(F&& fn) {
    try {
        fn();
        return MM_OK;
    } catch (const VerificationFailure& e) {
        last_error = e.what();
        return MM_ERR_VERIFY;
    } catch (const Table1Mismatch& e) {
        last_error = e.what();
        return MM_ERR_VERIFY;
    } catch (const NotInSpan& e) {
        last_error = e.what();
        return MM_ERR_VERIFY;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return MM_ERR_INVALID;
    } catch (const std::exception& e) {
        last_error = e.what();
        return MM_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return MM_ERR_INTERNAL;
    }
}

mm_status wrap_series(QSeries s, mm_series** out) {
    if (!out) {
        last_error = "null output pointer";
        return MM_ERR_INVALID;
    }
    *out = new mm_series{std::move(s)};
    return MM_OK;
}

} // namespace

extern "C" {

const char* mm_version(void) { return "1.0.0"; }

const char* mm_last_error(void) { return last_error.c_str(); }

void mm_string_free(char* s) { std::free(s); }

void mm_series_free(mm_series* s) { delete s; }

mm_status mm_series_u(const int32_t* vec, size_t len, int32_t trunc, mm_series** out) {
    return guarded([&] { wrap_series(u_series(to_vec(vec, len), trunc), out); });
}

mm_status mm_series_macmahon_u(int32_t a, int32_t trunc, mm_series** out) {
    return guarded([&] { wrap_series(macmahon_u(a, trunc), out); });
}

mm_status mm_series_g(int32_t k, int32_t trunc, mm_series** out) {
    return guarded([&] { wrap_series(g_series(k, trunc), out); });
}

mm_status mm_series_h(int32_t k, int32_t trunc, mm_series** out) {
    return guarded([&] { wrap_series(h_series(k, trunc), out); });
}

mm_status mm_series_f(int32_t k, int32_t l, int32_t trunc, mm_series** out) {
    return guarded([&] { wrap_series(f_series(k, l, trunc), out); });
}

mm_status mm_series_sym_u(const int32_t* vec, size_t len, int32_t trunc, mm_series** out) {
    return guarded([&] { wrap_series(sym_u(to_vec(vec, len), trunc), out); });
}

int32_t mm_series_truncation(const mm_series* s) { return s ? s->s.truncation() : -1; }

mm_status mm_series_coeff(const mm_series* s, int32_t n, char** out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = dup_string(s->s.coeff(n).str());
    });
}

mm_status mm_series_json(const mm_series* s, char** out) {
    return guarded([&] {
        if (!s || !out) throw std::invalid_argument("null argument");
        *out = dup_string(io::series_to_json(s->s).dump());
    });
}

mm_status mm_series_is_prime_detecting(const mm_series* s, int32_t* verdict, int32_t* witness) {
    return guarded([&] {
        if (!s || !verdict || !witness) throw std::invalid_argument("null argument");
        const auto v = is_prime_detecting(s->s);
        *verdict = v.detecting ? 1 : 0;
        *witness = v.witness;
    });
}

mm_status mm_value_m(const int32_t* vec, size_t len, int64_t n, char** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        if (n < 1) throw std::invalid_argument("requires n >= 1");
        auto coeffs = u_coeffs(to_vec(vec, len), static_cast<int>(n));
        *out = dup_string((*coeffs)[static_cast<std::size_t>(n)].get_str());
    });
}

mm_status mm_value_brute_m(const int32_t* vec, size_t len, int64_t n, char** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = dup_string(brute_m(to_vec(vec, len), n).get_str());
    });
}

mm_status mm_value_brute_n(const int32_t* vec, size_t len, int64_t n, char** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = dup_string(brute_n(to_vec(vec, len), n).get_str());
    });
}

mm_status mm_verify_ramanujan(int32_t trunc) {
    return guarded([&] {
        if (!verify_ramanujan(trunc))
            throw VerificationFailure("a DG identity failed the exact check", 0);
    });
}

mm_status mm_verify_table1(int32_t trunc, int32_t jobs, char** out) {
    return guarded([&] {
        auto certs = verify_table1(trunc, jobs);
        if (out) {
            io::json arr = io::json::array();
            for (const auto& c : certs) arr.push_back(io::certificate_to_json(c));
            *out = dup_string(arr.dump());
        }
    });
}

mm_status mm_verify_psi(int32_t which, int32_t trunc, char** out) {
    return guarded([&] {
        auto cert = verify_psi(which, trunc);
        if (out) *out = dup_string(io::certificate_to_json(cert).dump());
    });
}

mm_status mm_verify_detector(const char* detector_json, int32_t trunc, char** out) {
    return guarded([&] {
        if (!detector_json) throw std::invalid_argument("null detector");
        const auto j = io::json::parse(detector_json);
        const std::string kind = j.at("kind").get<std::string>();
        QSeries series(0);
        std::string label;
        if (kind == "poly") {
            const auto det = io::poly_detector_from_json(j);
            label = det.origin.empty() ? "poly-detector" : det.origin;
            series = eval_poly_detector(det, trunc);
        } else if (kind == "const") {
            const auto det = io::const_detector_from_json(j);
            label = det.origin.empty() ? "const-detector" : det.origin;
            series = eval_const_detector(det, trunc);
        } else {
            throw std::invalid_argument("detector kind must be 'poly' or 'const'");
        }
        auto cert = certify_series(label, series, trunc);
        if (out) *out = dup_string(io::certificate_to_json(cert).dump());
        if (!cert.verified)
            throw VerificationFailure(label + " is not prime-detecting at q^" +
                                          std::to_string(cert.witness),
                                      cert.witness);
    });
}

mm_status mm_reduce_conv(const int32_t* a, size_t alen, const int32_t* b, size_t blen,
                         int32_t verify_trunc, char** out) {
    return guarded([&] {
        const Vec va = to_vec(a, alen), vb = to_vec(b, blen);
        auto red = convolution_reduce(va, vb);
        const QSeries lhs = u_series(va, verify_trunc) * u_series(vb, verify_trunc);
        if (!agree(lhs, u_of_lincomb(red.comb, verify_trunc)))
            throw std::logic_error("convolution reduction failed verification");
        if (out) {
            io::json j{{"lincomb", io::lincomb_to_json(red.comb)},
                       {"max_word_weight", red.max_word_weight},
                       {"weight_bound_exceeded", red.weight_bound_flag}};
            *out = dup_string(j.dump());
        }
    });
}

mm_status mm_reduce_timesn(const int32_t* vec, size_t len, int32_t verify_trunc, char** out) {
    return guarded([&] {
        auto comb = times_n_reduce(to_vec(vec, len), verify_trunc);
        if (out) {
            io::json j{{"lincomb", io::lincomb_to_json(comb)}};
            *out = dup_string(j.dump());
        }
    });
}

mm_status mm_search_const(int32_t d, int32_t trunc, int32_t jobs, char** out) {
    return guarded([&] {
        auto dets = search_const_detectors(d, trunc, jobs);
        if (out) {
            io::json arr = io::json::array();
            for (const auto& det : dets) arr.push_back(io::detector_to_json(det));
            *out = dup_string(arr.dump());
        }
    });
}

mm_status mm_search_poly(int32_t max_a, int32_t max_deg, int32_t trunc, char** out) {
    return guarded([&] {
        auto dets = search_poly_detectors(max_a, max_deg, trunc);
        if (out) {
            io::json arr = io::json::array();
            for (const auto& det : dets) arr.push_back(io::detector_to_json(det));
            *out = dup_string(arr.dump());
        }
    });
}

} // extern "C"
