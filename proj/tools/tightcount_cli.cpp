// Command-line front end for the tightcount shared library.  Every
// computation goes through the C API in tightcount.h; this file only
// parses arguments and formats output.
//
// Exit codes: 0 success, 1 verification failure (or a p = 0 request,
// which has no tight structures), 2 usage error, 3 resource guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tightcount.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CString {
  char* value = nullptr;
  ~CString() { tc_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

int exit_code_for(tc_status status) {
  switch (status) {
    case TC_OK:
      return kExitOk;
    case TC_ERROR_RESOURCE:
      return kExitResource;
    case TC_ERROR_NO_TIGHT:
    case TC_ERROR_INVARIANT:
    case TC_ERROR_INTERNAL:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

int report_error(tc_status status) {
  std::cerr << "error (" << tc_status_name(status)
            << "): " << tc_last_error_message() << '\n';
  if (status == TC_ERROR_NO_TIGHT) {
    std::cerr << "no tight contact structures\n";
  }
  return exit_code_for(status);
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

std::int64_t env_limit(const char* name, std::int64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stoll(raw);
  } catch (...) {
    return fallback;
  }
}

// ---------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------

int cmd_expand(std::int64_t p, std::int64_t q, const std::string& out_path) {
  int64_t* entries = nullptr;
  size_t count = 0;
  CString r, s;
  tc_status status = tc_expand(p, q, &entries, &count, &r.value, &s.value);
  if (status != TC_OK) return report_error(status);

  std::ostringstream text;
  text << '[';
  for (size_t i = 0; i < count; ++i) {
    if (i) text << ',';
    text << entries[i];
  }
  text << "], r=" << r.str() << ", s=" << s.str() << '\n';

  CString num, den;
  status = tc_eval_expansion(entries, count, &num.value, &den.value);
  tc_i64_free(entries);
  if (status != TC_OK) return report_error(status);
  bool ok = num.str() == std::to_string(-p) && den.str() == std::to_string(q);
  text << "check: evaluates to " << num.str() << '/' << den.str()
       << (ok ? " == " : " != ") << -p << '/' << q << (ok ? " OK" : " FAIL")
       << '\n';
  int code = emit(text.str(), out_path);
  return code != kExitOk ? code : (ok ? kExitOk : kExitFailure);
}

// ---------------------------------------------------------------------
// count
// ---------------------------------------------------------------------

int cmd_count(std::int64_t n, std::int64_t p, std::int64_t q,
              const std::string& method, const std::string& out_path) {
  std::ostringstream text;
  int64_t cp = 0, cq = 0;
  bool agree = true;
  if (method == "closed" || method == "recurrence") {
    CString count;
    tc_status status =
        tc_count(n, p, q, method == "closed" ? 0 : 1, &cp, &cq, &count.value);
    if (status != TC_OK) return report_error(status);
    text << "N(" << n << ",-" << cp << "," << cq << ") = " << count.str()
         << '\n';
  } else if (method == "both") {
    CString closed, recurrence;
    tc_status status = tc_count(n, p, q, 0, &cp, &cq, &closed.value);
    if (status != TC_OK) return report_error(status);
    status = tc_count(n, p, q, 1, nullptr, nullptr, &recurrence.value);
    if (status != TC_OK) return report_error(status);
    agree = closed.str() == recurrence.str();
    text << "N(" << n << ",-" << cp << "," << cq << ") = " << closed.str()
         << " (closed), " << recurrence.str() << " (recurrence), "
         << (agree ? "OK" : "FAIL") << '\n';
  } else {
    std::cerr << "error: method must be closed, recurrence, or both\n";
    return kExitUsage;
  }
  int code = emit(text.str(), out_path);
  return code != kExitOk ? code : (agree ? kExitOk : kExitFailure);
}

// ---------------------------------------------------------------------
// table
// ---------------------------------------------------------------------

struct Record {
  std::int64_t n, p, q;
  std::string r, s, count, method;
};

int cmd_table(std::int64_t nmax, std::int64_t pmax, const std::string& format,
              const std::string& out_path) {
  if (nmax < 1 || pmax < 1) {
    std::cerr << "error: --nmax and --pmax must be positive\n";
    return kExitUsage;
  }
  const std::int64_t limit = env_limit("TIGHTCOUNT_TABLE_LIMIT", 200000);
  std::vector<Record> records;
  bool all_ok = true;
  for (std::int64_t p = 1; p <= pmax; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      int64_t* entries = nullptr;
      size_t entry_count = 0;
      CString r, s;
      tc_status status =
          tc_expand(p, q, &entries, &entry_count, &r.value, &s.value);
      if (status != TC_OK) return report_error(status);
      tc_i64_free(entries);
      for (std::int64_t n = 1; n <= nmax; ++n) {
        if (static_cast<std::int64_t>(records.size()) >= limit) {
          std::cerr << "error: table exceeds TIGHTCOUNT_TABLE_LIMIT ("
                    << limit << " rows)\n";
          return kExitResource;
        }
        CString closed, recurrence;
        status = tc_count(n, p, q, 0, nullptr, nullptr, &closed.value);
        if (status != TC_OK) return report_error(status);
        status = tc_count(n, p, q, 1, nullptr, nullptr, &recurrence.value);
        if (status != TC_OK) return report_error(status);
        bool agree = closed.str() == recurrence.str();
        all_ok = all_ok && agree;
        records.push_back({n, p, q, r.str(), s.str(), closed.str(),
                           agree ? "both" : "FAIL"});
      }
    }
  }

  std::ostringstream text;
  if (format == "csv") {
    text << "n,p,q,r,s,count,method\n";
    for (const auto& rec : records) {
      text << rec.n << ',' << rec.p << ',' << rec.q << ',' << rec.r << ','
           << rec.s << ',' << rec.count << ',' << rec.method << '\n';
    }
  } else if (format == "json") {
    nlohmann::ordered_json doc;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
      nlohmann::ordered_json row;
      row["n"] = rec.n;
      row["p"] = rec.p;
      row["q"] = rec.q;
      row["r"] = rec.r;
      row["s"] = rec.s;
      row["count"] = rec.count;
      row["method"] = rec.method;
      doc["records"].push_back(row);
    }
    text << doc.dump(2) << '\n';
  } else if (format == "text") {
    for (const auto& rec : records) {
      text << "N(" << rec.n << ",-" << rec.p << "," << rec.q
           << ") = " << rec.count << "   [r=" << rec.r << " s=" << rec.s
           << "]\n";
    }
  } else {
    std::cerr << "error: --format must be text, csv, or json\n";
    return kExitUsage;
  }
  int code = emit(text.str(), out_path);
  return code != kExitOk ? code : (all_ok ? kExitOk : kExitFailure);
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

int cmd_verify(const std::string& suite, std::int64_t nmax,
               const std::string& out_path) {
  CString text, json;
  int all_pass = 0;
  tc_status status =
      tc_verify(suite.c_str(), nmax, &text.value, &json.value, &all_pass);
  if (status != TC_OK) return report_error(status);
  std::ostringstream out;
  out << text.str() << json.str() << '\n';
  int code = emit(out.str(), out_path);
  return code != kExitOk ? code : (all_pass ? kExitOk : kExitFailure);
}

// ---------------------------------------------------------------------
// trace
// ---------------------------------------------------------------------

struct Site {
  std::int64_t center;
  int side;         // 0 exterior, 1 interior
  int orientation;  // 0 'a', 1 'b'
};

bool parse_site(const std::string& token, Site& site) {
  site = {0, 0, 0};
  std::istringstream in(token);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(in, part, ':')) parts.push_back(part);
  if (parts.empty() || parts.size() > 3) return false;
  try {
    site.center = std::stoll(parts[0]);
  } catch (...) {
    return false;
  }
  if (parts.size() >= 2) {
    if (parts[1] == "E") {
      site.side = 0;
    } else if (parts[1] == "I") {
      site.side = 1;
    } else {
      return false;
    }
  }
  if (parts.size() == 3) {
    if (parts[2] == "a") {
      site.orientation = 0;
    } else if (parts[2] == "b") {
      site.orientation = 1;
    } else {
      return false;
    }
  }
  return true;
}

using McPtr = std::unique_ptr<tc_multicurve, decltype(&tc_multicurve_free)>;

void describe(std::ostringstream& out, tc_multicurve* mc) {
  CString text;
  tc_multicurve_serialize(mc, &text.value);
  out << text.str();
  int64_t comps = 0;
  tc_multicurve_component_count(mc, &comps);
  std::map<std::pair<int64_t, int64_t>, int64_t> classes;
  for (int64_t id = 0; id < comps; ++id) {
    int64_t lambda = 0, mu = 0;
    tc_multicurve_component_class(mc, id, &lambda, &mu);
    ++classes[{lambda, mu}];
  }
  out << "components:";
  for (const auto& [cls, count] : classes) {
    out << ' ' << count << "x(" << cls.first << ',' << cls.second << ')';
  }
  out << '\n';
  int64_t* trivial = nullptr;
  size_t trivial_count = 0;
  tc_multicurve_trivial_components(mc, &trivial, &trivial_count);
  if (trivial_count > 0) {
    out << "trivial components:";
    for (size_t i = 0; i < trivial_count; ++i) out << ' ' << trivial[i];
    out << '\n';
  }
  tc_i64_free(trivial);
}

int cmd_trace(std::int64_t n, std::int64_t p, std::int64_t q,
              const std::vector<std::string>& site_tokens,
              const std::string& out_path) {
  tc_multicurve* raw = nullptr;
  tc_status status = tc_multicurve_build(n, p, q, &raw);
  if (status != TC_OK) return report_error(status);
  McPtr current(raw, &tc_multicurve_free);
  tc_multicurve* initial_raw = nullptr;
  tc_multicurve_build(n, p, q, &initial_raw);
  McPtr initial(initial_raw, &tc_multicurve_free);

  std::ostringstream out;
  out << "step 0: initial\n";
  describe(out, current.get());

  bool tight_violation = false;
  for (std::size_t i = 0; i < site_tokens.size(); ++i) {
    Site site;
    if (!parse_site(site_tokens[i], site)) {
      std::cerr << "error: bad site '" << site_tokens[i]
                << "' (expected center[:E|I[:a|b]])\n";
      return kExitUsage;
    }
    tc_multicurve* next = nullptr;
    status = tc_multicurve_attach(current.get(), site.center, site.side,
                                  site.orientation, &next);
    if (status != TC_OK) return report_error(status);
    McPtr after(next, &tc_multicurve_free);

    out << "step " << (i + 1) << ": site " << site.center << ':'
        << (site.side == 0 ? 'E' : 'I') << ':'
        << (site.orientation == 0 ? 'a' : 'b') << '\n';
    describe(out, after.get());

    int outcome = -1;
    status = tc_multicurve_classify(current.get(), after.get(), &outcome);
    if (status == TC_OK) {
      static const char* names[] = {"Trivial", "DecreaseBy2", "IncreaseBy2",
                                    "DehnTwist"};
      out << "outcome: " << names[outcome] << '\n';
    } else if (status == TC_ERROR_INVARIANT) {
      out << "outcome: none of the four cases\n"
          << tc_last_error_message() << '\n';
      tight_violation = true;
    } else {
      return report_error(status);
    }
    current = std::move(after);
  }
  if (!site_tokens.empty()) {
    int same = 0;
    tc_multicurve_equal(current.get(), initial.get(), &same);
    if (same) out << "net effect: trivial (initial multicurve restored)\n";
  }
  int code = emit(out.str(), out_path);
  return code != kExitOk ? code : (tight_violation ? kExitFailure : kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tightcount: exact counts of tight contact structures on the solid "
      "torus, by dividing-set data (n,-p,q)"};
  app.require_subcommand(1);

  // expand
  std::int64_t p = 0, q = 0, n = 0;
  std::string out_path;
  auto* expand = app.add_subcommand(
      "expand", "negative continued fraction of -p/q with r and s");
  expand->add_option("p", p, "slope numerator")->required();
  expand->add_option("q", q, "slope denominator")->required();
  expand->add_option("--out", out_path, "write output to a file");

  // count
  std::string method = "closed";
  auto* count = app.add_subcommand(
      "count", "number of tight contact structures for (n,-p,q)");
  count->add_option("n", n, "number of dividing curves is 2n")->required();
  count->add_option("p", p, "slope numerator")->required();
  count->add_option("q", q, "slope denominator")->required();
  count->add_option("--method", method, "closed | recurrence | both")
      ->default_val("closed");
  count->add_option("--out", out_path, "write output to a file");

  // table
  std::int64_t nmax = 5, pmax = 5;
  std::string format = "text";
  auto* table =
      app.add_subcommand("table", "counts for 1 <= n <= nmax, all p <= pmax");
  table->add_option("--nmax", nmax, "largest n")->default_val(5);
  table->add_option("--pmax", pmax, "largest p")->default_val(5);
  table->add_option("--format", format, "text | csv | json")
      ->default_val("text");
  table->add_option("--out", out_path, "write output to a file");

  // verify
  std::string suite = "all";
  std::int64_t scale = 0;
  auto* verify = app.add_subcommand(
      "verify", "run a property suite: ncf | identities | kaplansky | states "
                "| torus | all");
  verify->add_option("--suite", suite, "suite name")->default_val("all");
  verify->add_option("--nmax", scale,
                     "sweep bound (0 = suite default)");
  verify->add_option("--out", out_path, "write output to a file");

  // trace
  std::vector<std::string> sites;
  auto* trace = app.add_subcommand(
      "trace", "build (n,-p,q), attach bypass sites in order, classify each");
  trace->add_option("n", n, "number of dividing curves is 2n")->required();
  trace->add_option("p", p, "slope numerator")->required();
  trace->add_option("q", q, "slope denominator")->required();
  trace
      ->add_option("--sites", sites,
                   "comma-separated sites center[:E|I[:a|b]]")
      ->delimiter(',');
  trace->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (expand->parsed()) return cmd_expand(p, q, out_path);
  if (count->parsed()) return cmd_count(n, p, q, method, out_path);
  if (table->parsed()) return cmd_table(nmax, pmax, format, out_path);
  if (verify->parsed()) return cmd_verify(suite, scale, out_path);
  if (trace->parsed()) return cmd_trace(n, p, q, sites, out_path);
  return kExitUsage;
}
