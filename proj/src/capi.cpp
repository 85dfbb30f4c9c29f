#include "tightcount.h"

#include <cstring>
#include <string>

#include "counting.hpp"
#include "errors.hpp"
#include "ncf.hpp"
#include "states.hpp"
#include "torus.hpp"
#include "verify.hpp"

using namespace tightcount;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
tc_status guarded(F&& f) {
  try {
    f();
    return TC_OK;
  } catch (const no_tight_structures_error& e) {
    g_last_error = e.what();
    return TC_ERROR_NO_TIGHT;
  } catch (const resource_limit_error& e) {
    g_last_error = e.what();
    return TC_ERROR_RESOURCE;
  } catch (const unsupported_error& e) {
    g_last_error = e.what();
    return TC_ERROR_UNSUPPORTED;
  } catch (const invariant_violation_error& e) {
    g_last_error = e.what();
    return TC_ERROR_INVARIANT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return TC_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TC_ERROR_INTERNAL;
  }
}

bool missing(const void* p) { return p == nullptr; }

tc_status argument_error(const char* what) {
  g_last_error = what;
  return TC_ERROR_ARGUMENT;
}

std::vector<std::int64_t> to_vector(const int64_t* entries, size_t count) {
  return std::vector<std::int64_t>(entries, entries + count);
}

}  // namespace

extern "C" {

const char* tc_status_name(tc_status status) {
  switch (status) {
    case TC_OK:
      return "ok";
    case TC_ERROR_DOMAIN:
      return "domain error";
    case TC_ERROR_UNSUPPORTED:
      return "unsupported";
    case TC_ERROR_RESOURCE:
      return "resource limit";
    case TC_ERROR_NO_TIGHT:
      return "no tight structures";
    case TC_ERROR_INVARIANT:
      return "invariant violation";
    case TC_ERROR_ARGUMENT:
      return "argument error";
    case TC_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* tc_last_error_message(void) { return g_last_error.c_str(); }

void tc_string_free(char* text) { delete[] text; }
void tc_i64_free(int64_t* values) { delete[] values; }

tc_status tc_expand(int64_t p, int64_t q, int64_t** entries,
                    size_t* entry_count, char** r, char** s) {
  if (missing(entries) || missing(entry_count) || missing(r) || missing(s)) {
    return argument_error("tc_expand: null output pointer");
  }
  return guarded([&] {
    auto expansion = ncf::expand(ncf::Slope(p, q));
    auto rs = ncf::rs_invariants(expansion);
    const auto& e = expansion.entries();
    auto* out = new int64_t[e.size()];
    std::copy(e.begin(), e.end(), out);
    *entries = out;
    *entry_count = e.size();
    *r = dup_string(rs.r.str());
    *s = dup_string(rs.s.str());
  });
}

tc_status tc_eval_expansion(const int64_t* entries, size_t entry_count,
                            char** numerator, char** denominator) {
  if (missing(entries) || missing(numerator) || missing(denominator)) {
    return argument_error("tc_eval_expansion: null pointer");
  }
  return guarded([&] {
    BigRat value = ncf::eval(to_vector(entries, entry_count));
    *numerator = dup_string(boost::multiprecision::numerator(value).str());
    *denominator = dup_string(boost::multiprecision::denominator(value).str());
  });
}

tc_status tc_extend_expansion(const int64_t* entries, size_t entry_count,
                              int64_t m, int64_t* p_out, int64_t* q_out) {
  if (missing(entries) || missing(p_out) || missing(q_out)) {
    return argument_error("tc_extend_expansion: null pointer");
  }
  return guarded([&] {
    ncf::Expansion base(to_vector(entries, entry_count));
    auto [slope, ext] = ncf::extend(base, m);
    (void)ext;
    *p_out = slope.p;
    *q_out = slope.q;
  });
}

tc_status tc_catalan(int64_t n, char** count) {
  if (missing(count)) return argument_error("tc_catalan: null pointer");
  return guarded([&] { *count = dup_string(counting::catalan(n).str()); });
}

tc_status tc_kaplansky(int64_t k, int64_t n, char** count) {
  if (missing(count)) return argument_error("tc_kaplansky: null pointer");
  return guarded([&] { *count = dup_string(counting::kaplansky(k, n).str()); });
}

tc_status tc_kaplansky_bruteforce(int64_t k, int64_t n, int64_t max_bits,
                                  char** count) {
  if (missing(count)) {
    return argument_error("tc_kaplansky_bruteforce: null pointer");
  }
  return guarded([&] {
    *count = dup_string(
        counting::kaplansky_bruteforce(k, n, max_bits > 0 ? max_bits : 30)
            .str());
  });
}

tc_status tc_count(int64_t n, int64_t p, int64_t q, int method,
                   int64_t* p_out, int64_t* q_out, char** count) {
  if (missing(count)) return argument_error("tc_count: null pointer");
  if (method != 0 && method != 1) {
    return argument_error("tc_count: method must be 0 or 1");
  }
  return guarded([&] {
    // (p, q) names the dividing set (n, -p, q).
    auto ds = torus::normalize(n, -p, q);
    if (p_out) *p_out = ds.slope.p;
    if (q_out) *q_out = ds.slope.q;
    BigInt value = method == 0 ? counting::count_closed(n, ds.slope)
                               : counting::count_recurrence(n, ds.slope);
    *count = dup_string(value.str());
  });
}

tc_status tc_alternating_convolution(int64_t n, char** numerator,
                                     char** denominator) {
  if (missing(numerator) || missing(denominator)) {
    return argument_error("tc_alternating_convolution: null pointer");
  }
  return guarded([&] {
    BigRat value = counting::alternating_convolution(n);
    *numerator = dup_string(boost::multiprecision::numerator(value).str());
    *denominator = dup_string(boost::multiprecision::denominator(value).str());
  });
}

}  // extern "C"

struct tc_state_iter {
  states::StateEnumerator impl;
};

struct tc_multicurve {
  torus::Multicurve impl;
};

extern "C" {

tc_status tc_state_iter_new(int64_t n, int64_t p, int64_t np_limit,
                            tc_state_iter** iter) {
  if (missing(iter)) return argument_error("tc_state_iter_new: null pointer");
  return guarded([&] {
    *iter = new tc_state_iter{
        states::StateEnumerator(n, p, np_limit > 0 ? np_limit : 14)};
  });
}

tc_status tc_state_iter_next(tc_state_iter* iter, char** state) {
  if (missing(iter) || missing(state)) {
    return argument_error("tc_state_iter_next: null pointer");
  }
  return guarded([&] {
    auto next = iter->impl.next();
    *state = next ? dup_string(next->to_parentheses()) : nullptr;
  });
}

void tc_state_iter_free(tc_state_iter* iter) { delete iter; }

tc_status tc_state_centers(const char* state, int64_t** centers,
                           size_t* center_count) {
  if (missing(state) || missing(centers) || missing(center_count)) {
    return argument_error("tc_state_centers: null pointer");
  }
  return guarded([&] {
    auto parsed = states::State::from_parentheses(state);
    auto found = states::boundary_parallel_centers(parsed);
    auto* out = new int64_t[found.size()];
    std::copy(found.begin(), found.end(), out);
    *centers = out;
    *center_count = found.size();
  });
}

tc_status tc_state_admits(const char* state, const uint8_t* bits,
                          size_t bit_count, int* admits) {
  if (missing(state) || missing(bits) || missing(admits)) {
    return argument_error("tc_state_admits: null pointer");
  }
  return guarded([&] {
    auto parsed = states::State::from_parentheses(state);
    std::vector<std::uint8_t> tuple(bits, bits + bit_count);
    *admits = states::admits_tuple(parsed, tuple) ? 1 : 0;
  });
}

tc_status tc_count_admitting_states(int64_t n, int64_t p, const uint8_t* bits,
                                    size_t bit_count, int64_t np_limit,
                                    char** count) {
  if (missing(bits) || missing(count)) {
    return argument_error("tc_count_admitting_states: null pointer");
  }
  return guarded([&] {
    std::vector<std::uint8_t> tuple(bits, bits + bit_count);
    *count = dup_string(states::count_admitting_states(
                            n, p, tuple, np_limit > 0 ? np_limit : 14)
                            .str());
  });
}

tc_status tc_state_rewire(const char* state, int32_t center, int direction,
                          char** rewired) {
  if (missing(state) || missing(rewired)) {
    return argument_error("tc_state_rewire: null pointer");
  }
  if (direction != 0 && direction != 1) {
    return argument_error("tc_state_rewire: direction must be 0 or 1");
  }
  return guarded([&] {
    auto parsed = states::State::from_parentheses(state);
    auto moved = states::disk_bypass_rewire(
        parsed, center,
        direction == 0 ? states::RewireDirection::forward
                       : states::RewireDirection::mirror);
    *rewired = dup_string(moved.to_parentheses());
  });
}

tc_status tc_multicurve_build(int64_t n, int64_t p, int64_t q,
                              tc_multicurve** mc) {
  if (missing(mc)) return argument_error("tc_multicurve_build: null pointer");
  return guarded([&] {
    // (p, q) names the dividing set (n, -p, q).
    *mc = new tc_multicurve{
        torus::Multicurve::build(torus::normalize(n, -p, q))};
  });
}

void tc_multicurve_free(tc_multicurve* mc) { delete mc; }

tc_status tc_multicurve_params(const tc_multicurve* mc, int64_t* n,
                               int64_t* p, int64_t* q, int64_t* twisting) {
  if (missing(mc)) return argument_error("tc_multicurve_params: null handle");
  return guarded([&] {
    const auto& base = mc->impl.base();
    if (n) *n = base.n;
    if (p) *p = base.slope.p;
    if (q) *q = base.slope.q;
    if (twisting) *twisting = torus::twisting_number(base);
  });
}

tc_status tc_multicurve_attach(const tc_multicurve* mc, int64_t center,
                               int side, int orientation,
                               tc_multicurve** result) {
  if (missing(mc) || missing(result)) {
    return argument_error("tc_multicurve_attach: null pointer");
  }
  if ((side != 0 && side != 1) || (orientation != 0 && orientation != 1)) {
    return argument_error("tc_multicurve_attach: side/orientation must be 0/1");
  }
  return guarded([&] {
    torus::BypassSite site{
        center, side == 0 ? torus::Side::exterior : torus::Side::interior,
        orientation == 0 ? torus::Orientation::a : torus::Orientation::b};
    *result = new tc_multicurve{mc->impl.attach(site)};
  });
}

tc_status tc_multicurve_size(const tc_multicurve* mc, int64_t* size) {
  if (missing(mc) || missing(size)) {
    return argument_error("tc_multicurve_size: null pointer");
  }
  *size = mc->impl.size();
  return TC_OK;
}

tc_status tc_multicurve_component_count(const tc_multicurve* mc,
                                        int64_t* count) {
  if (missing(mc) || missing(count)) {
    return argument_error("tc_multicurve_component_count: null pointer");
  }
  *count = mc->impl.component_count();
  return TC_OK;
}

tc_status tc_multicurve_component_class(const tc_multicurve* mc, int64_t id,
                                        int64_t* lambda, int64_t* mu) {
  if (missing(mc) || missing(lambda) || missing(mu)) {
    return argument_error("tc_multicurve_component_class: null pointer");
  }
  return guarded([&] {
    auto cls = mc->impl.component_class(id);
    *lambda = cls.lambda;
    *mu = cls.mu;
  });
}

tc_status tc_multicurve_trivial_components(const tc_multicurve* mc,
                                           int64_t** ids, size_t* id_count) {
  if (missing(mc) || missing(ids) || missing(id_count)) {
    return argument_error("tc_multicurve_trivial_components: null pointer");
  }
  return guarded([&] {
    auto found = mc->impl.trivial_components();
    auto* out = new int64_t[found.size()];
    std::copy(found.begin(), found.end(), out);
    *ids = out;
    *id_count = found.size();
  });
}

tc_status tc_multicurve_serialize(const tc_multicurve* mc, char** text) {
  if (missing(mc) || missing(text)) {
    return argument_error("tc_multicurve_serialize: null pointer");
  }
  return guarded([&] { *text = dup_string(mc->impl.serialize()); });
}

tc_status tc_multicurve_parse(const char* text, tc_multicurve** mc) {
  if (missing(text) || missing(mc)) {
    return argument_error("tc_multicurve_parse: null pointer");
  }
  return guarded(
      [&] { *mc = new tc_multicurve{torus::Multicurve::parse(text)}; });
}

tc_status tc_multicurve_equal(const tc_multicurve* a, const tc_multicurve* b,
                              int* equal) {
  if (missing(a) || missing(b) || missing(equal)) {
    return argument_error("tc_multicurve_equal: null pointer");
  }
  *equal = a->impl == b->impl ? 1 : 0;
  return TC_OK;
}

tc_status tc_multicurve_classify(const tc_multicurve* before,
                                 const tc_multicurve* after, int* outcome) {
  if (missing(before) || missing(after) || missing(outcome)) {
    return argument_error("tc_multicurve_classify: null pointer");
  }
  return guarded([&] {
    switch (torus::classify_outcome(before->impl, after->impl)) {
      case torus::BypassOutcome::trivial:
        *outcome = 0;
        break;
      case torus::BypassOutcome::decrease_by_two:
        *outcome = 1;
        break;
      case torus::BypassOutcome::increase_by_two:
        *outcome = 2;
        break;
      case torus::BypassOutcome::dehn_twist:
        *outcome = 3;
        break;
    }
  });
}

tc_status tc_verify(const char* name, int64_t scale, char** text_report,
                    char** json_report, int* all_pass) {
  if (missing(name) || missing(text_report) || missing(json_report) ||
      missing(all_pass)) {
    return argument_error("tc_verify: null pointer");
  }
  return guarded([&] {
    std::vector<verify::SuiteReport> reports;
    if (std::string(name) == "all") {
      for (const auto& suite : verify::suite_names()) {
        reports.push_back(verify::run_suite(suite, scale));
      }
    } else {
      reports.push_back(verify::run_suite(name, scale));
    }
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.all_pass();
    *text_report = dup_string(verify::to_text(reports));
    *json_report = dup_string(verify::to_json(reports));
    *all_pass = pass ? 1 : 0;
  });
}

}  // extern "C"
